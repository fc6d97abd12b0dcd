"""Integer partitions in exponential notation, used as cycle types of Sym(n).

A partition ``(1^{c_1}, 2^{c_2}, ..., n^{c_n})`` is stored sparsely as the
pairs ``(i, c_i)`` with ``c_i > 0``, sorted by increasing part size.  The
same object labels the conjugacy class of permutations of that cycle type.

Partitions are streamed in reverse-lexicographic order of their part
sequences::

    >>> [str(ct) for ct in partitions_of(4)]
    ['(4)', '(1,3)', '(2^2)', '(1^2,2)', '(1^4)']
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidArgument

__all__ = [
    "CycleType",
    "partitions_of",
    "partitions_with_largest_part",
    "class_size",
    "sign",
]


@dataclass(frozen=True, order=True)
class CycleType:
    """Partition of ``n`` with sparse multiplicities ``((i, c_i), ...)``."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgument(f"degree must be nonnegative, got {self.n}")
        total = 0
        last = 0
        for i, c in self.pairs:
            if i <= last or c <= 0:
                raise InvalidArgument(f"malformed multiplicity pairs {self.pairs!r}")
            last = i
            total += i * c
        if total != self.n:
            raise InvalidArgument(
                f"parts of {self.pairs!r} sum to {total}, not {self.n}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> CycleType:
        """Build from a list of part sizes in any order, e.g. ``[2, 1, 2]``."""
        counts: dict[int, int] = {}
        n = 0
        for p in parts:
            if p <= 0:
                raise InvalidArgument(f"parts must be positive, got {p}")
            counts[p] = counts.get(p, 0) + 1
            n += p
        return cls(n, tuple(sorted(counts.items())))

    @classmethod
    def from_multiplicities(cls, c: Iterable[int]) -> CycleType:
        """Build from the dense vector ``(c_1, c_2, ..., c_n)``."""
        pairs = tuple((i, ci) for i, ci in enumerate(c, start=1) if ci)
        if any(ci < 0 for _, ci in pairs):
            raise InvalidArgument("multiplicities must be nonnegative")
        return cls(sum(i * ci for i, ci in pairs), pairs)

    def multiplicity(self, i: int) -> int:
        for j, c in self.pairs:
            if j == i:
                return c
        return 0

    def dense(self) -> tuple[int, ...]:
        """Multiplicities ``(c_1, ..., c_n)``; length ``n``."""
        c = [0] * self.n
        for i, ci in self.pairs:
            c[i - 1] = ci
        return tuple(c)

    def parts(self) -> tuple[int, ...]:
        """Part sizes in non-increasing order."""
        return tuple(i for i, c in reversed(self.pairs) for _ in range(c))

    @property
    def num_cycles(self) -> int:
        return sum(c for _, c in self.pairs)

    def __str__(self):
        inner = ",".join(str(i) if c == 1 else f"{i}^{c}" for i, c in self.pairs)
        return f"({inner})"


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")


def _descend(rem: int, cap: int, stack: list[tuple[int, int]]) -> Iterator[None]:
    # Yields once per completed partition; ``stack`` holds the pairs chosen so
    # far with part sizes strictly decreasing.
    for a in range(min(rem, cap), 0, -1):
        if a == 1:
            stack.append((1, rem))
            yield
            stack.pop()
            continue
        for c in range(rem // a, 0, -1):
            stack.append((a, c))
            if rem == a * c:
                yield
            else:
                yield from _descend(rem - a * c, a - 1, stack)
            stack.pop()


def partitions_with_largest_part(n: int, largest: int) -> Iterator[CycleType]:
    """Partitions of ``n`` whose largest part equals ``largest``.

    These sub-streams are disjoint for distinct ``largest`` and their
    concatenation for ``largest = n, n-1, ..., 1`` is ``partitions_of(n)``.
    """
    _check_degree(n)
    if not 1 <= largest <= n:
        raise InvalidArgument(f"largest part must lie in [1, {n}], got {largest}")
    stack: list[tuple[int, int]] = []
    for c in range(n // largest, 0, -1):
        rem = n - largest * c
        if rem and largest == 1:
            continue
        stack.append((largest, c))
        if rem == 0:
            yield CycleType(n, tuple(reversed(stack)))
        else:
            for _ in _descend(rem, largest - 1, stack):
                yield CycleType(n, tuple(reversed(stack)))
        stack.pop()


def partitions_of(n: int) -> Iterator[CycleType]:
    """Stream every partition of ``n`` once, in reverse-lexicographic order."""
    _check_degree(n)
    for largest in range(n, 0, -1):
        yield from partitions_with_largest_part(n, largest)


def class_size(ct: CycleType) -> int:
    """Number of permutations of cycle type ``ct``: ``n! / prod(i^c_i c_i!)``."""
    denom = 1
    for i, c in ct.pairs:
        denom *= i ** c * factorial(c)
    size, r = divmod(factorial(ct.n), denom)
    assert r == 0
    return size


def sign(ct: CycleType) -> int:
    """``(-1)^(n - number of cycles)``, the parity of the class."""
    return -1 if (ct.n - ct.num_cycles) % 2 else 1
