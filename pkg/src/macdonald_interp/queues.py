"""Multiline queues, their signed variants, and the generating sums.

A queue of type mu (a composition with n columns) stacks rows of balls:

* homogeneous queues: rows 1..L bottom up (L = largest part), row r holding
  one ball labeled a for every part a >= r of sort(mu), row 1 placed as mu.
* signed queues: rows 1, 1', 2, 2', ..., L, L' bottom up; row r and row r'
  hold the same multiset; primed rows carry signs on their balls.

Placement rules (upper ball over the column below it):
* classic rows: a ball labeled a sits over an empty column or a ball of
  absolute label >= a; equality forces a trivial pairing.
* primed rows: a positive ball +a sits over a ball of label >= a (equality
  forces the trivial pairing); a negative ball -a sits over an empty column
  or a ball of label <= a.

Pairings go layer by layer: each primed row r' pairs its balls bijectively
per absolute label with row r below, never wrapping (partner column >=
ball column); each classic row r pairs per label with row (r-1)' below,
wrapping allowed.

Weights: positive primed balls at column i contribute x_i, negative primed
balls in row r' contribute -q^(r-1)/t^(n-1); classic-row balls contribute
nothing (in homogeneous queues every ball contributes x_i).  Nontrivial
classic pairings from row r with label a contribute
(1-t) t^skipped / (1 - q^(a-r+1) t^free), times q^(a-r+1) when they wrap,
where free counts the not-yet-matched lower balls at placement time
(processing labels downward, trivial pairs first, then right to left) and
skipped counts the free balls strictly between ball and partner.
Nontrivial primed pairings contribute +-(1-t) t^(skipped+empty) with the
sign of the upper ball; their skipped/empty counts are position-static.

Two-row specializations give scalar transition coefficients: `a_coeff`
(classic, bottom 1s left unpaired) and `g_coeff` (signed, in Z[t]).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .compositions import absolute, arrangements, sort_desc
from .xpoly import XPoly

_memo = {}


def _clear_memo():
    _memo.clear()


# ---------------------------------------------------------------------------
# row placement
# ---------------------------------------------------------------------------


def multiset_placements(values, n):
    """All ways to place the labels `values` into n columns (0 = empty)."""
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    distinct = sorted(counts.items(), reverse=True)

    def rec(k, free_cols):
        if k == len(distinct):
            yield ()
            return
        v, m = distinct[k]
        for pos in combinations(free_cols, m):
            rest = tuple(c for c in free_cols if c not in pos)
            for tail in rec(k + 1, rest):
                yield tuple((p, v) for p in pos) + tail

    for placed in rec(0, tuple(range(n))):
        row = [0] * n
        for c, v in placed:
            row[c] = v
        yield tuple(row)


def classic_sits(arr, lower):
    """Every ball of arr sits over an empty column or abs label >= its own."""
    return all(
        v == 0 or lower[c] == 0 or abs(lower[c]) >= v
        for c, v in enumerate(arr)
    )


def signed_sign_options(col_label, lower_val):
    """Allowed signs for a primed ball of this label over lower_val."""
    opts = []
    if lower_val >= col_label:
        opts.append(1)
    if lower_val == 0 or lower_val <= col_label:
        opts.append(-1)
    return opts


def classic_row_arrangements(values, lower, n, row_filter=None):
    for arr in multiset_placements(values, n):
        if classic_sits(arr, lower) and (row_filter is None or row_filter(arr)):
            yield arr


def signed_row_arrangements(values, lower, n, row_filter=None):
    """Signed placements of `values` over a classic row, per the primed
    sitting rules."""
    for arr in multiset_placements(values, n):
        options = []
        ok = True
        for c, v in enumerate(arr):
            if v == 0:
                continue
            opts = signed_sign_options(v, lower[c])
            if not opts:
                ok = False
                break
            options.append((c, v, opts))
        if not ok:
            continue

        def rec(k, row):
            if k == len(options):
                out = tuple(row)
                if row_filter is None or row_filter(out):
                    yield out
                return
            c, v, opts = options[k]
            for s in opts:
                row[c] = s * v
                yield from rec(k + 1, row)
            row[c] = 0

        yield from rec(0, list(arr))


# ---------------------------------------------------------------------------
# matchings
# ---------------------------------------------------------------------------


def _bijections(uppers, avail):
    """All bijections uppers -> avail lists (as dicts)."""
    if len(uppers) != len(avail):
        return
    for perm in permutations(avail):
        yield dict(zip(uppers, perm))


def classic_matchings(upper, lower):
    """All pairings of a classic row over a primed (or classic) row.

    For each label a in the upper row, its balls pair bijectively with the
    lower balls of absolute label a; sitting on absolute label a forces the
    trivial pairing; wrapping is allowed.  Lower balls of labels absent
    above stay unpaired.  Yields {upper_col: lower_col} (1-based).
    """
    labels = sorted({v for v in upper if v}, reverse=True)
    per_label = []
    for a in labels:
        ups = [c + 1 for c, v in enumerate(upper) if v == a]
        lows = [c + 1 for c, v in enumerate(lower) if abs(v) == a]
        if len(ups) != len(lows):
            return
        forced = {j: j for j in ups if abs(lower[j - 1]) == a}
        free_up = [j for j in ups if j not in forced]
        avail = [w for w in lows if w not in forced]
        per_label.append((forced, free_up, avail))

    def rec(k):
        if k == len(per_label):
            yield {}
            return
        forced, free_up, avail = per_label[k]
        for rest in rec(k + 1):
            for bij in _bijections(free_up, avail):
                m = dict(forced)
                m.update(bij)
                m.update(rest)
                yield m

    yield from rec(0)


def signed_matchings(upper, lower):
    """All pairings of a primed row over the classic row below.

    Per absolute label, upper balls pair bijectively with lower balls,
    never wrapping (partner column >= ball column); a positive ball sitting
    on its own label is forced to pair trivially.
    """
    labels = sorted({abs(v) for v in upper if v}, reverse=True)
    per_label = []
    for a in labels:
        ups = [c + 1 for c, v in enumerate(upper) if abs(v) == a]
        lows = [c + 1 for c, v in enumerate(lower) if v == a]
        if len(ups) != len(lows):
            return
        forced = {
            j: j
            for j in ups
            if upper[j - 1] > 0 and lower[j - 1] == a
        }
        free_up = [j for j in ups if j not in forced]
        avail = [w for w in lows if w not in forced]
        per_label.append((forced, free_up, avail))

    def rec(k):
        if k == len(per_label):
            yield {}
            return
        forced, free_up, avail = per_label[k]
        for rest in rec(k + 1):
            for bij in _bijections(free_up, avail):
                if any(w < j for j, w in bij.items()):
                    continue
                m = dict(forced)
                m.update(bij)
                m.update(rest)
                yield m

    yield from rec(0)


# ---------------------------------------------------------------------------
# layer weights
# ---------------------------------------------------------------------------


def _cyclic_window(j, k, n):
    """Columns strictly between j and k moving rightward (wrapping)."""
    if j < k:
        return range(j + 1, k)
    return [c for c in range(j + 1, n + 1)] + [c for c in range(1, k)]


def signed_layer_weight(upper, lower, matching, ctx):
    """Product of pairing weights of one primed-over-classic layer.

    Static: a nontrivial pairing j -> k of absolute label a contributes
    +-(1-t) t^(skipped+empty), skipped counting lower balls in (j,k) of
    smaller label or of label a whose own ball sits left of j, empty
    counting empty columns in (j,k).
    """
    inv = {w: j for j, w in matching.items()}
    total = ctx.one
    one_minus_t = ctx.binom(0, 1)
    for j, k in matching.items():
        if k == j:
            continue
        a = abs(upper[j - 1])
        skipped = empty = 0
        for m in range(j + 1, k):
            c = lower[m - 1]
            if c == 0:
                empty += 1
            elif c < a or (c == a and inv[m] < j):
                skipped += 1
        w = one_minus_t * ctx.qt(0, skipped + empty)
        if upper[j - 1] < 0:
            w = -w
        total = total * w
    return total


def classic_layer_weight(upper, lower, matching, r, ctx,
                         order="original", strand_top=None, row_idx=None):
    """Product of pairing weights of one classic layer with upper row r.

    Processes labels downward; within a label, trivial pairings are marked
    first, then the nontrivial ones right to left ("original") or by their
    strand's top ball, rightmost first ("strand").  A nontrivial pairing
    j -> k of label a contributes
    (1-t) t^skipped / (1 - q^(a-r+1) t^free), and q^(a-r+1) when k < j.
    """
    n = len(upper)
    matched = set()
    total = ctx.one
    one_minus_t = ctx.binom(0, 1)
    for a in sorted({v for v in upper if v}, reverse=True):
        ups = [j for j in range(1, n + 1) if upper[j - 1] == a]
        nontrivial = []
        for j in ups:
            if matching[j] == j:
                matched.add(j)
            else:
                nontrivial.append(j)
        if order == "original":
            nontrivial.sort(reverse=True)
        elif order == "strand":
            nontrivial.sort(key=lambda j: -strand_top[(row_idx, j)])
        else:
            raise ValueError(f"unknown pairing order {order!r}")
        e = a - r + 1
        for j in nontrivial:
            k = matching[j]
            free_cols = {
                m for m in range(1, n + 1)
                if lower[m - 1] != 0 and m not in matched
            }
            skipped = sum(1 for m in _cyclic_window(j, k, n) if m in free_cols)
            w = one_minus_t * ctx.qt(0, skipped) / ctx.binom(e, len(free_cols))
            if k < j:
                w = w * ctx.qt(e, 0)
            total = total * w
            matched.add(k)
    return total


# ---------------------------------------------------------------------------
# queues
# ---------------------------------------------------------------------------


def row_multisets(lam):
    """Row contents for shape lam: row r holds every part >= r."""
    lam = [p for p in lam if p > 0]
    L = lam[0] if lam else 0
    return [tuple(p for p in lam if p >= r) for r in range(1, L + 1)]


@dataclass(frozen=True)
class SignedQueue:
    """Rows bottom-up 1, 1', 2, 2', ..., L, L' with per-layer matchings.

    rows[i] is a tuple of (signed) labels per column; matchings[i] pairs
    rows[i+1] (upper) into rows[i] (lower) as a tuple of (upper_col,
    lower_col) pairs.
    """

    n: int
    rows: tuple
    matchings: tuple

    def matching_dict(self, layer):
        return dict(self.matchings[layer])

    def ball_weight(self, ctx):
        """(exponent vector, scalar) from the primed-row balls."""
        exps = [0] * self.n
        scalar = ctx.one
        for idx in range(1, len(self.rows), 2):
            r = (idx + 1) // 2
            for c, v in enumerate(self.rows[idx]):
                if v > 0:
                    exps[c] += 1
                elif v < 0:
                    scalar = scalar * ctx.qt(r - 1, -(self.n - 1), -1)
        return tuple(exps), scalar

    def strands(self):
        """Maps ball -> strand and strand data, one strand per part.

        Returns (strand_of, tops) where strand_of[(row_idx, col)] is the
        0-based strand index (parts sorted decreasingly, equal sizes taking
        top balls right to left) and tops[(row_idx, col)] is the top-row
        column of that ball's strand.
        """
        parts = []
        seen = {}
        lam = sort_desc([abs(v) for v in self.rows[0] if v])
        strand_of = {}
        tops = {}
        # group strands by part size, largest first; within a size, top
        # balls right to left
        c = 0
        sizes = []
        for p in lam:
            if p not in seen:
                seen[p] = True
                sizes.append(p)
        for a in sizes:
            top_idx = 2 * a - 1
            top_cols = sorted(
                (j for j, v in enumerate(self.rows[top_idx], 1) if abs(v) == a),
                reverse=True,
            )
            for j in top_cols:
                col = j
                for idx in range(top_idx, -1, -1):
                    strand_of[(idx, col)] = c
                    tops[(idx, col)] = j
                    if idx > 0:
                        col = self.matching_dict(idx - 1)[col]
                c += 1
        return strand_of, tops

    def pairing_weight(self, ctx, order="original"):
        total = ctx.one
        strand_top = None
        if order == "strand":
            _, strand_top = self.strands()
        for layer in range(len(self.rows) - 1):
            upper = self.rows[layer + 1]
            lower = self.rows[layer]
            m = self.matching_dict(layer)
            if layer % 2 == 0:
                total = total * signed_layer_weight(upper, lower, m, ctx)
            else:
                r = (layer + 1) // 2 + 1
                total = total * classic_layer_weight(
                    upper, lower, m, r, ctx,
                    order=order, strand_top=strand_top, row_idx=layer + 1)
        return total

    def weight_parts(self, ctx, order="original"):
        exps, scal = self.ball_weight(ctx)
        return exps, scal * self.pairing_weight(ctx, order=order)

    def weight(self, ctx, order="original"):
        exps, scal = self.weight_parts(ctx, order=order)
        return XPoly(self.n, ctx, {exps: scal})


@dataclass(frozen=True)
class Queue:
    """Homogeneous queue: classic rows 1..L with per-layer matchings."""

    n: int
    rows: tuple
    matchings: tuple

    def matching_dict(self, layer):
        return dict(self.matchings[layer])

    def weight_parts(self, ctx):
        exps = [0] * self.n
        for row in self.rows:
            for c, v in enumerate(row):
                if v:
                    exps[c] += 1
        total = ctx.one
        for layer in range(len(self.rows) - 1):
            total = total * classic_layer_weight(
                self.rows[layer + 1], self.rows[layer],
                self.matching_dict(layer), layer + 2, ctx)
        return tuple(exps), total

    def weight(self, ctx):
        exps, scal = self.weight_parts(ctx)
        return XPoly(self.n, ctx, {exps: scal})


def enumerate_smlq(mu, row_filter=None):
    """All signed queues of type mu.

    row_filter(idx, arr), when given, prunes candidate rows (1-based row
    content as stored, idx the 0-based row index).
    """
    n = len(mu)
    contents = row_multisets(sort_desc(mu))
    depth = 2 * len(contents)

    def rec(rows, matchings):
        idx = len(rows)
        if idx == depth:
            yield SignedQueue(n, tuple(rows), tuple(matchings))
            return
        lower = rows[-1]
        values = contents[(idx - 1) // 2] if idx % 2 else contents[idx // 2]
        flt = (lambda arr: row_filter(idx, arr)) if row_filter else None
        if idx % 2:
            arrs = signed_row_arrangements(values, lower, n, row_filter=flt)
            matcher = signed_matchings
        else:
            arrs = classic_row_arrangements(values, lower, n, row_filter=flt)
            matcher = classic_matchings
        for arr in arrs:
            for m in matcher(arr, lower):
                yield from rec(rows + [arr], matchings + [tuple(sorted(m.items()))])

    if depth == 0:
        yield SignedQueue(n, (tuple(mu),), ())
        return
    yield from rec([tuple(mu)], [])


def enumerate_mlq(mu):
    """All homogeneous queues of type mu."""
    n = len(mu)
    contents = row_multisets(sort_desc(mu))

    def rec(rows, matchings):
        idx = len(rows)
        if idx == len(contents):
            yield Queue(n, tuple(rows), tuple(matchings))
            return
        lower = rows[-1]
        for arr in classic_row_arrangements(contents[idx], lower, n):
            for m in classic_matchings(arr, lower):
                yield from rec(rows + [arr], matchings + [tuple(sorted(m.items()))])

    if not contents:
        yield Queue(n, (tuple(mu),), ())
        return
    yield from rec([tuple(mu)], [])


# ---------------------------------------------------------------------------
# generating sums
# ---------------------------------------------------------------------------


def _sum_weights(n, ctx, parts_iter):
    groups = {}
    for exps, scal in parts_iter:
        groups.setdefault(exps, []).append(scal)
    return XPoly(n, ctx, {e: ctx.sum(vs) for e, vs in groups.items()})


def F_star(mu, ctx, order="original"):
    """Generating sum of the signed queues of type mu."""
    key = ("F_star", tuple(mu), order, ctx.key())
    if key not in _memo:
        _memo[key] = _sum_weights(
            len(mu), ctx,
            (Q.weight_parts(ctx, order=order) for Q in enumerate_smlq(mu)))
    return _memo[key]


def F_hom(mu, ctx):
    """Generating sum of the homogeneous queues of type mu."""
    key = ("F_hom", tuple(mu), ctx.key())
    if key not in _memo:
        _memo[key] = _sum_weights(
            len(mu), ctx, (Q.weight_parts(ctx) for Q in enumerate_mlq(mu)))
    return _memo[key]


def Z_star(lam, n, ctx):
    """Orbit sum of F_star over all arrangements of lam in n columns."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    total = XPoly(n, ctx)
    for mu in arrangements(lam):
        total = total + F_star(mu, ctx)
    return total


def Z_hom(lam, n, ctx):
    lam = tuple(lam) + (0,) * (n - len(lam))
    total = XPoly(n, ctx)
    for mu in arrangements(lam):
        total = total + F_hom(mu, ctx)
    return total


def smlq_count(mu):
    return sum(1 for _ in enumerate_smlq(mu))


# ---------------------------------------------------------------------------
# two-row transition coefficients
# ---------------------------------------------------------------------------


def a_coeff(nu, mu, ctx):
    """Classic two-row coefficient: top row nu (no 1s) over bottom mu.

    Sums the classic pairing weights over all matchings; bottom 1s stay
    unpaired but count as free balls.  Zero unless nu rearranges the parts
    of mu that are >= 2 and every ball sits legally.
    """
    if any(v == 1 for v in nu):
        return ctx.zero
    if sort_desc([v for v in nu if v]) != sort_desc([v for v in mu if v >= 2]):
        return ctx.zero
    if not classic_sits(nu, mu):
        return ctx.zero
    vals = [
        classic_layer_weight(nu, mu, m, 2, ctx)
        for m in classic_matchings(nu, mu)
    ]
    return ctx.sum(vals)


def g_coeff(alpha, mu, ctx):
    """Signed two-row coefficient: signed top row alpha over bottom mu.

    Sums the signed pairing weights (a polynomial in t).  Zero unless
    |alpha| rearranges the parts of mu and the signed sitting rules hold.
    """
    if sort_desc([abs(v) for v in alpha if v]) != sort_desc([v for v in mu if v]):
        return ctx.zero
    for c, v in enumerate(alpha):
        if v > 0 and mu[c] < v:
            return ctx.zero
        if v < 0 and not (mu[c] == 0 or mu[c] <= -v):
            return ctx.zero
    vals = [
        signed_layer_weight(alpha, mu, m, ctx)
        for m in signed_matchings(alpha, mu)
    ]
    return ctx.sum(vals)
