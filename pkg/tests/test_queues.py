from macdonald_interp.compositions import arrangements, signed_variants, sort_desc
from macdonald_interp.hecke import unpack_coeffs
from macdonald_interp.queues import (
    F_hom,
    F_star,
    Z_hom,
    Z_star,
    a_coeff,
    classic_matchings,
    classic_sits,
    enumerate_mlq,
    enumerate_smlq,
    g_coeff,
    multiset_placements,
    signed_matchings,
    smlq_count,
)
from macdonald_interp.scalars import QQ, SYMBOLIC, SpecializedScalars, random_point
from macdonald_interp.xpoly import XPoly


def sym_x(i, n=2):
    return XPoly.var(n, SYMBOLIC, i)


def golden_f_star_02():
    """Frozen expansion of the degree-2 interpolation sum at type (0,2)."""
    ctx = SYMBOLIC
    x1, x2 = sym_x(1), sym_x(2)
    qt = ctx.qt
    omt = ctx.binom(0, 1)          # 1 - t
    d = ctx.binom(1, 1)            # 1 - qt
    q_over_t = qt(1, -1)
    inv_t = qt(0, -1)
    return (
        (omt / d) * (x1 - q_over_t) * (x2 - inv_t)
        + (omt * inv_t) * (x1 - q_over_t)
        + (x2 - q_over_t) * (x2 - inv_t)
        + (omt * q_over_t) * (x2 - inv_t)
        + XPoly.const(2, ctx, qt(2, -2) * omt ** 3 / d)
        + (q_over_t * omt ** 2 / d) * (x2 - q_over_t)
    )


def golden_f_hom_02():
    ctx = SYMBOLIC
    x1, x2 = sym_x(1), sym_x(2)
    return (ctx.binom(0, 1) / ctx.binom(1, 1)) * x1 * x2 + x2 * x2


def test_multiset_placements():
    rows = list(multiset_placements((2, 2, 1), 3))
    assert len(rows) == 3  # choose the column of the 1
    assert (2, 2, 1) in rows and (1, 2, 2) in rows
    assert list(multiset_placements((), 2)) == [(0, 0)]


def test_classic_sits():
    assert classic_sits((2, 0), (0, 2))
    assert classic_sits((0, 2), (0, 2))
    assert not classic_sits((2, 0), (1, 2))
    assert classic_sits((2, 0), (-3, 1))


def test_smlq_count_02():
    assert smlq_count((0, 2)) == 15


def test_f_star_02_matches_golden():
    assert F_star((0, 2), SYMBOLIC) == golden_f_star_02()


def test_f_star_zero_type():
    one = XPoly.one(3, SYMBOLIC)
    assert F_star((0, 0, 0), SYMBOLIC) == one


def test_f_hom_02_matches_golden():
    assert F_hom((0, 2), SYMBOLIC) == golden_f_hom_02()


def test_f_hom_is_top_part_of_f_star():
    for mu in [(0, 2), (2, 0), (1, 1), (0, 1, 1), (2, 0, 1)]:
        fs = F_star(mu, SYMBOLIC)
        assert fs.top_part() == F_hom(mu, SYMBOLIC)
        assert fs.degree() == sum(mu)


def test_specialized_matches_symbolic():
    q0, t0 = random_point(17, 3)
    spec = SpecializedScalars(q0, t0)
    for mu in [(0, 2), (1, 0, 2)]:
        sym = F_star(mu, SYMBOLIC).specialize(q0, t0, spec)
        assert sym == F_star(mu, spec)


def test_leading_coefficient_is_one():
    # [x^mu] F*_mu = 1
    for mu in [(0, 2), (2, 0), (1, 1), (2, 0, 1), (0, 1, 2)]:
        assert F_star(mu, SYMBOLIC).coefficient(mu) == SYMBOLIC.one


def test_orbit_sums_are_symmetric():
    zs = Z_star((2, 1), 3, SYMBOLIC)
    assert zs.is_symmetric()
    zh = Z_hom((2, 1), 3, SYMBOLIC)
    assert zh.is_symmetric()
    assert zs.top_part() == zh


def test_order_invariance_per_queue():
    """Original and strand pairing orders weigh every queue identically."""
    for mu in [(0, 2), (2, 0, 1), (0, 1, 2), (1, 2, 0)]:
        for Q in enumerate_smlq(mu):
            assert Q.weight_parts(SYMBOLIC) == Q.weight_parts(
                SYMBOLIC, order="strand")


def test_no_pairing_under_smaller_negative():
    """No partner ball sits directly below a negative ball of smaller
    absolute label (implied by the sitting rules; checked explicitly)."""
    for mu in [(0, 2), (2, 1, 0), (0, 1, 2), (3, 0, 1)]:
        for Q in enumerate_smlq(mu):
            for layer in range(0, len(Q.rows) - 1, 2):
                upper = Q.rows[layer + 1]
                for j, k in Q.matchings[layer]:
                    a = abs(upper[j - 1])
                    above = upper[k - 1]
                    assert not (above < 0 and abs(above) < a)


def test_mlq_count_and_weights():
    queues = list(enumerate_mlq((0, 2)))
    assert len(queues) == 2
    total = sum((Q.weight(SYMBOLIC) for Q in queues), XPoly.zero(2, SYMBOLIC))
    assert total == golden_f_hom_02()


def test_a_coeff_goldens():
    ctx = SYMBOLIC
    omt, d = ctx.binom(0, 1), ctx.binom(1, 1)
    assert a_coeff((2, 0), (0, 2), ctx) == omt / d
    assert a_coeff((0, 2), (0, 2), ctx) == ctx.one
    assert a_coeff((0, 2), (2, 0), ctx) == ctx.qt(1, 0) * omt / d
    assert a_coeff((2, 0), (2, 0), ctx) == ctx.one
    # bottom 1s are skipped over but count as free
    assert a_coeff((0, 2), (1, 2), ctx) == ctx.one
    assert a_coeff((2, 0), (1, 2), ctx) == ctx.zero  # 2 cannot sit on 1
    assert a_coeff((2, 0), (2, 1), ctx) == ctx.one
    # top rows with 1s are not allowed
    assert a_coeff((1, 2), (1, 2), ctx) == ctx.zero


def test_a_coeff_free_count_includes_ones():
    ctx = SYMBOLIC
    # mu = (1, 0, 2): top (0,2,0) pairs 2 -> 3 skipping nothing, but the
    # unpaired 1 at column 1 is free: denominator sees t^2
    val = a_coeff((0, 2, 0), (1, 0, 2), ctx)
    assert val == ctx.binom(0, 1) / ctx.binom(1, 2)
    # the 2 cannot sit on the 1
    assert a_coeff((2, 0, 0), (1, 0, 2), ctx) == ctx.zero
    # top (0,0,2) is trivial
    assert a_coeff((0, 0, 2), (1, 0, 2), ctx) == ctx.one


def test_g_coeff_packed_delta():
    ctx = SYMBOLIC
    for mu in [(2, 3, 0), (2, 0, 0), (1, 1, 0)]:
        seen = set()
        for nu in arrangements(mu):
            for alpha in signed_variants(nu):
                if alpha in seen:
                    continue
                seen.add(alpha)
                want = ctx.one if tuple(abs(a) for a in alpha) == mu else ctx.zero
                assert g_coeff(alpha, mu, ctx) == want, (alpha, mu)


def test_g_coeff_matches_unpack_coeffs():
    """The signed two-row coefficients satisfy the same zero-unpacking
    recursion as the transition-matrix coefficients."""
    ctx = SYMBOLIC
    for mu in [(0, 2), (0, 1), (2, 0, 1), (0, 2, 1), (1, 0, 2), (0, 2, 0)]:
        b = unpack_coeffs(mu, ctx)
        for nu in arrangements(sort_desc(mu)):
            for alpha in signed_variants(nu):
                want = b.get(alpha, ctx.zero)
                assert g_coeff(alpha, mu, ctx) == want, (alpha, mu)


def test_signed_matchings_no_wrap():
    ms = list(signed_matchings((-2, 0), (0, 2)))
    assert ms == [{1: 2}]
    assert list(signed_matchings((0, -2), (2, 0))) == []


def test_classic_matchings_forced_trivial():
    ms = list(classic_matchings((2, 2), (2, -2)))
    assert ms == [{1: 1, 2: 2}]
