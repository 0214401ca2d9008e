"""Exact Fourier-Dedekind sums, simplex lattice-point counts and Frobenius numbers.

Every exact result is an ``int`` or a ``fractions.Fraction``.
"""

from fractions import Fraction

from . import _core

__all__ = [
    "sigma",
    "sigma_numeric",
    "dedekind_sum",
    "residue_r",
    "residue_rprime",
    "SimplexCounter",
    "count_closed",
    "count_interior",
    "count_restricted_partitions",
    "count_partitions",
    "frobenius_f",
    "frobenius_g",
    "gaps",
    "bounds",
    "verify",
]

sigma_numeric = _core.sigma_numeric
frobenius_f = _core.frobenius_f
frobenius_g = _core.frobenius_g
gaps = _core.gaps


def sigma(t, args, modulus):
    """sigma_t(args; modulus) as a Fraction."""
    return Fraction(_core.sigma(t, list(args), modulus))


def dedekind_sum(h, k):
    return Fraction(_core.dedekind_sum(h, k))


def residue_r(parts):
    """Coefficients of R_{-t}(parts) in ascending powers of t."""
    return [Fraction(c) for c in _core.residue_r(list(parts))]


def residue_rprime(parts):
    """Coefficients of R'_t(parts) in ascending powers of t."""
    return [Fraction(c) for c in _core.residue_rprime(list(parts))]


class SimplexCounter:
    """Counting formulas for one pairwise coprime tuple, reusable across t."""

    def __init__(self, parts):
        self._impl = _core.SimplexCounter(list(parts))

    def closed(self, t):
        return int(self._impl.closed(t))

    def interior(self, t):
        return int(self._impl.interior(t))

    def restricted_partitions(self, t):
        return int(self._impl.restricted_partitions(t))

    def partitions(self, t):
        return int(self._impl.partitions(t))


def count_closed(parts, t):
    return SimplexCounter(parts).closed(t)


def count_interior(parts, t):
    return SimplexCounter(parts).interior(t)


def count_restricted_partitions(parts, t):
    return SimplexCounter(parts).restricted_partitions(t)


def count_partitions(parts, t):
    return SimplexCounter(parts).partitions(t)


def bounds(parts):
    return {k: Fraction(v) for k, v in _core.bounds(list(parts)).items()}


def verify(suite, max_part=12, max_t=100):
    """Run an identity suite; returns (checked, failed, [(input, lhs, rhs), ...])."""
    checked, failed, failures = _core.verify(suite, max_part, max_t)
    return checked, failed, [(i, Fraction(l), Fraction(r)) for i, l, r in failures]
