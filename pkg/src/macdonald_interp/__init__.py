"""Exact interpolation Macdonald / ASEP polynomial computations.

Three independent routes to the same polynomials -- linear solves from
vanishing conditions, Hecke-operator recursions, and combinatorial sums
over signed multiline queues -- plus cross-checking suites and a CLI.
"""

__version__ = "0.1.0"
