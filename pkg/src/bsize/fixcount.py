"""Number of k-subsets of {1..n} fixed setwise by a permutation of given cycle type.

A subset is fixed by a permutation exactly when it is a union of whole
cycles.  Choosing ``b_j`` of the ``c_j`` cycles of length ``j`` for each
``j`` gives the count as a sum over partitions of ``k``; equivalently it is
the coefficient of ``x^k`` in ``prod_i (1 + x^i)^{c_i}``.
"""

from __future__ import annotations

from math import comb

from .errors import InvalidArgument
from .partitions import CycleType, partitions_of

__all__ = [
    "fixed_subsets",
    "fixed_subsets_reference",
    "fixed_subset_counts",
    "mul_binomial_power",
]


def _check(ct: CycleType, k: int) -> None:
    if k < 0 or k > ct.n:
        raise InvalidArgument(f"k must lie in [0, {ct.n}], got {k}")


def fixed_subsets_reference(ct: CycleType, k: int) -> int:
    """Sum over partitions ``(1^{b_1}, ..., k^{b_k})`` of ``k`` of ``prod_j C(c_j, b_j)``."""
    _check(ct, k)
    if k == 0:
        return 1
    total = 0
    for eta in partitions_of(k):
        term = 1
        for j, b in eta.pairs:
            term *= comb(ct.multiplicity(j), b)
            if not term:
                break
        total += term
    return total


def mul_binomial_power(poly: list[int], i: int, c: int, deg: int) -> list[int]:
    """Return ``poly * (1 + x^i)^c`` truncated to degree ``deg``.

    ``poly`` must have length ``deg + 1`` and is not modified.
    """
    if i > deg:
        return poly
    out = list(poly)
    # terms with t >= 1 copies of x^i; t = 0 is the copy above
    for t in range(1, min(c, deg // i) + 1):
        coef = comb(c, t)
        shift = i * t
        for d in range(deg - shift + 1):
            p = poly[d]
            if p:
                out[d + shift] += coef * p
    return out


def fixed_subset_counts(ct: CycleType, kmax: int) -> list[int]:
    """Fixed-subset counts for every ``k = 0..kmax`` in one truncated product."""
    _check(ct, kmax)
    poly = [1] + [0] * kmax
    for i, c in ct.pairs:
        poly = mul_binomial_power(poly, i, c, kmax)
    return poly


def fixed_subsets(ct: CycleType, k: int) -> int:
    """Coefficient of ``x^k`` in ``prod (1 + x^i)^{c_i}``.

    Agrees with :func:`fixed_subsets_reference` on every input.

    >>> fixed_subsets(CycleType.from_parts([1, 1, 2, 2]), 3)
    4
    """
    return fixed_subset_counts(ct, k)[k]
