"""Exact base size of Sym(n) acting on k-subsets.

The number ``h_l`` of l-tuples of k-subsets whose pointwise stabilizer is
trivial is::

    h_l = sum over cycle types ct of n of
          sign(ct) * class_size(ct) * fixed_subsets(ct, k) ** l

and ``b(n, k)`` is the least ``l`` with ``h_l != 0``.  Only the base of the
power depends on ``l``, so one pass over the partitions of ``n`` aggregates
the signed class sizes by fixed-subset count ``m`` into a
:class:`WeightTable`; every ``h_l`` is then ``sum(w_m * m**l)``.

Two passes build the same table:

``partitions``
    Walks every partition of ``n`` (split into chunks by largest part, which
    may be reduced in worker processes and checkpointed).
``factored``
    Parts longer than ``k`` never change the fixed-subset count, so it walks
    only the parts ``<= k`` and sums the remaining points out through the
    signed count of permutations with all cycles longer than ``k``.

``auto`` picks whichever visits fewer states.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from math import comb, factorial
from types import MappingProxyType
from typing import NamedTuple

from .errors import InvalidArgument, NoBaseError
from .fixcount import fixed_subsets, mul_binomial_power
from .partitions import class_size, partitions_of, sign

log = logging.getLogger(__name__)

METHOD_FORMULA = "partition-formula"
METHOD_CLOSED_FORM = "halasi-closed-form"
METHOD_ORACLE = "oracle"

STRATEGIES = ("partitions", "factored", "auto")


@dataclass(frozen=True)
class WeightTable:
    """Signed class weights keyed by fixed-subset count: ``{m: w_m}``."""

    n: int
    k: int
    entries: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {m: w for m, w in sorted(self.entries.items()) if w}
        object.__setattr__(self, "entries", MappingProxyType(clean))

    def merge(self, other: WeightTable) -> WeightTable:
        if (self.n, self.k) != (other.n, other.k):
            raise InvalidArgument("cannot merge weight tables of different (n, k)")
        acc = dict(self.entries)
        for m, w in other.entries.items():
            acc[m] = acc.get(m, 0) + w
        return WeightTable(self.n, self.k, acc)

    def h(self, l: int) -> int:
        return h_value(self, l)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, WeightTable):
            return NotImplemented
        return (self.n, self.k, dict(self.entries)) == (other.n, other.k, dict(other.entries))

    def __hash__(self):
        return hash((self.n, self.k, tuple(self.entries.items())))


@dataclass(frozen=True)
class BaseSizeResult:
    n: int
    k: int
    b: int
    method: str = METHOD_FORMULA
    trace: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        trace = [[l, str(h)] for l, h in self.trace] if self.trace is not None else []
        return {"n": self.n, "k": self.k, "b": self.b, "method": self.method, "trace": trace}


class ClosedForm(NamedTuple):
    value: int
    valid: bool


# -- table construction -------------------------------------------------------

def _check_table_args(n: int, k: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise InvalidArgument(f"n must be an integer >= 2, got {n!r}")
    if not isinstance(k, int) or not 1 <= k <= n - 1:
        raise InvalidArgument(f"k must lie in [1, {n - 1}], got {k!r}")


def chunk_weights(n: int, ks: tuple[int, ...], largest: int) -> tuple[dict[int, dict[int, int]], int]:
    """Raw weights of the partitions of ``n`` with the given largest part.

    Returns ``({k: {m: w}}, number of partitions visited)``.  Module level so
    worker processes can run it.
    """
    kmax = max(ks)
    nfact = factorial(n)
    tables: dict[int, dict[int, int]] = {k: {} for k in ks}
    slots = [(k, tables[k]) for k in ks]
    # binom[r][j] = C(r, j) for j <= kmax: the (1 + x)^r factor of the 1-parts
    binom = [[comb(r, j) for j in range(kmax + 1)] for r in range(n + 1)]
    visited = 0

    def leaf(poly, quot, cycles, ones):
        # quot = n! / prod(i^c_i c_i!) over the parts > 1; ``ones`` 1-parts remain
        nonlocal visited
        visited += 1
        w = quot // factorial(ones) if ones else quot
        if (n - cycles - ones) & 1:
            w = -w
        row = binom[ones]
        for k, t in slots:
            m = 0
            for j in range(k + 1):
                if poly[j]:
                    m += poly[j] * row[k - j]
            t[m] = t.get(m, 0) + w

    def walk(rem, cap, poly, quot, cycles):
        for a in range(min(rem, cap), 1, -1):
            p = poly
            q = quot
            for c in range(1, rem // a + 1):
                if a <= kmax:
                    p = p[:a] + [p[d] + p[d - a] for d in range(a, kmax + 1)]
                q //= a * c
                r = rem - a * c
                if r == 0:
                    leaf(p, q, cycles + c, 0)
                else:
                    walk(r, a - 1, p, q, cycles + c)
        leaf(poly, quot, cycles, rem)

    poly = [1] + [0] * kmax
    if largest == 1:
        leaf(poly, nfact, 0, n)
        return tables, visited
    q = nfact
    for c in range(1, n // largest + 1):
        if largest <= kmax:
            poly = poly[:largest] + [poly[d] + poly[d - largest] for d in range(largest, kmax + 1)]
        q //= largest * c
        r = n - largest * c
        if r == 0:
            leaf(poly, q, c, 0)
        else:
            walk(r, largest - 1, poly, q, c)
    return tables, visited


def signed_long_cycle_counts(r_max: int, k: int) -> list[int]:
    """``D[r]``: signed count of permutations of ``r`` points with all cycles longer than ``k``."""
    D = [0] * (r_max + 1)
    D[0] = 1
    for r in range(1, r_max + 1):
        total = 0
        # j = length of the cycle through a fixed point
        for j in range(k + 1, r + 1):
            term = comb(r - 1, j - 1) * factorial(j - 1) * D[r - j]
            total += -term if j % 2 == 0 else term
        D[r] = total
    return D


def factored_weights(n: int, k: int) -> dict[int, int]:
    """Weight table of ``(n, k)`` computed from the parts ``<= k`` only."""
    D = signed_long_cycle_counts(n, k)
    weights: dict[int, int] = {}

    def walk(a, s, poly, denom, cycles):
        if a == 0:
            tail = D[n - s]
            if not tail:
                return
            w = comb(n, s) * (factorial(s) // denom) * tail
            if (s - cycles) & 1:
                w = -w
            m = poly[k]
            weights[m] = weights.get(m, 0) + w
            return
        apow = 1
        walk(a - 1, s, poly, denom, cycles)
        for c in range(1, (n - s) // a + 1):
            apow *= a
            walk(a - 1, s + a * c, mul_binomial_power(poly, a, c, k),
                 denom * apow * factorial(c), cycles + c)

    walk(k, 0, [1] + [0] * k, 1, 0)
    return weights


def _restricted_partition_counts(n: int, largest: int) -> list[int]:
    t = [1] + [0] * n
    for a in range(1, largest + 1):
        for s in range(a, n + 1):
            t[s] += t[s - a]
    return t


def choose_strategy(n: int, ks: Iterable[int]) -> str:
    """The pass that visits fewer states: ``p(n)`` against the factored walk.

    The factored walk for one ``k`` visits every partition of every
    ``s <= n`` into parts ``<= k``, and runs once per ``k``.
    """
    full = _restricted_partition_counts(n, n)[n]
    factored = sum(sum(_restricted_partition_counts(n, k)) for k in set(ks))
    return "factored" if factored < full else "partitions"


def weight_tables(
    n: int,
    ks: Iterable[int],
    *,
    strategy: str = "partitions",
    workers: int = 1,
    checkpoint: str | os.PathLike | None = None,
    resume: str | os.PathLike | None = None,
    on_chunk: Callable[[int, int], None] | None = None,
) -> dict[int, WeightTable]:
    """Weight tables for several ``k`` at once, sharing a single partition pass.

    Each ``k`` may be any value in ``[1, n-1]``; no complement normalization
    happens here.  ``on_chunk(largest_part, partitions_visited)`` is called as
    chunks finish (``partitions`` strategy only).
    """
    ks = tuple(sorted(set(ks)))
    if not ks:
        raise InvalidArgument("no k values requested")
    for k in ks:
        _check_table_args(n, k)
    if strategy == "auto":
        strategy = "partitions" if checkpoint or resume else choose_strategy(n, ks)
    if strategy == "factored":
        if checkpoint or resume:
            raise InvalidArgument("checkpointing applies to the partitions strategy only")
        return {k: WeightTable(n, k, factored_weights(n, k)) for k in ks}
    if strategy != "partitions":
        raise InvalidArgument(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if workers < 1:
        raise InvalidArgument(f"workers must be >= 1, got {workers}")

    from . import store

    acc: dict[int, dict[int, int]] = {k: {} for k in ks}
    done: list[int] = []
    visited = 0
    if resume is not None:
        state = store.load_checkpoint(resume, n=n, ks=ks)
        acc, done, visited = state.tables, list(state.completed), state.visited

    def absorb(largest, part, count):
        nonlocal visited
        for k, t in part.items():
            a = acc[k]
            for m, w in t.items():
                a[m] = a.get(m, 0) + w
        done.append(largest)
        visited += count
        if checkpoint is not None:
            store.save_checkpoint(checkpoint, n=n, ks=ks, tables=acc,
                                  completed=done, visited=visited)
        if on_chunk is not None:
            on_chunk(largest, count)

    todo = [a for a in range(n, 0, -1) if a not in set(done)]
    if workers == 1:
        for largest in todo:
            part, count = chunk_weights(n, ks, largest)
            absorb(largest, part, count)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(chunk_weights, n, ks, a): a for a in todo}
            for fut in as_completed(futures):
                part, count = fut.result()
                absorb(futures[fut], part, count)
    log.debug("weight pass n=%d ks=%s visited %d partitions", n, ks, visited)
    return {k: WeightTable(n, k, acc[k]) for k in ks}


def weight_table(n: int, k: int, **kwargs) -> WeightTable:
    """Signed class sizes of Sym(n) bucketed by fixed k-subset count.

    Requires ``1 <= k <= n/2``.  Keyword arguments go to :func:`weight_tables`.

    >>> dict(weight_table(3, 1).entries)
    {0: 2, 1: -3, 3: 1}
    """
    if not isinstance(k, int) or not 1 <= k or 2 * k > n:
        raise InvalidArgument(f"k must lie in [1, n/2] for n={n}, got {k!r}")
    return weight_tables(n, [k], **kwargs)[k]


# -- evaluation ---------------------------------------------------------------

def h_value(table: WeightTable, l: int) -> int:
    """Exact ``sum_m w_m * m**l``: the number of l-tuples with trivial stabilizer."""
    if l < 1:
        raise InvalidArgument(f"l must be >= 1, got {l}")
    return sum(w * m ** l for m, w in table.entries.items())


def h_value_ungrouped(n: int, k: int, l: int) -> int:
    """The same sum taken term by term over every partition of ``n``, no grouping."""
    return sum(sign(ct) * class_size(ct) * fixed_subsets(ct, k) ** l
               for ct in partitions_of(n))


def information_bound(n: int, k: int) -> int:
    """Least ``l >= 1`` with ``n! <= C(n, k)**l``; never exceeds ``b(n, k)``.

    A base of size ``b`` embeds Sym(n) into the ``b``-tuples of k-subsets.
    """
    target = factorial(n)
    size = comb(n, k)
    l, power = 1, size
    while power < target:
        l += 1
        power *= size
    return l


def scan(table: WeightTable) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Smallest ``l`` with ``h_l != 0`` and the trace ``((1, h_1), ..., (b, h_b))``.

    The scan starts at :func:`information_bound`; every ``h_l`` below the
    start is still evaluated and must vanish.
    """
    n, k = table.n, table.k
    start = information_bound(n, k)
    limit = comb(n, k)
    ms = list(table.entries)
    ws = [table.entries[m] for m in ms]
    powers = [m ** start for m in ms]
    l = start
    trace = []
    while True:
        h = sum(w * p for w, p in zip(ws, powers))
        trace.append((l, h))
        if h:
            break
        if l >= limit:
            raise RuntimeError(f"no l <= {limit} with h_l != 0 for n={n}, k={k}")
        l += 1
        powers = [p * m for p, m in zip(powers, ms)]
    below = [(j, h_value(table, j)) for j in range(1, start)]
    if any(h for _, h in below):
        raise RuntimeError(
            f"h_l nonzero below the information bound {start} for n={n}, k={k}")
    return l, tuple(below + trace)


def normalize_k(n: int, k: int) -> int:
    """Validate ``(n, k)`` and return ``min(k, n-k)``; k-subsets and their complements give the same action."""
    if not isinstance(n, int) or n < 2:
        raise InvalidArgument(f"n must be an integer >= 2, got {n!r}")
    if not isinstance(k, int) or k < 0 or k > n:
        raise InvalidArgument(f"k must lie in [0, {n}], got {k!r}")
    if k in (0, n):
        raise NoBaseError(f"no base exists for k={k}, n={n}: the only {k}-subset is fixed by Sym({n})")
    return min(k, n - k)


def base_sizes(n: int, ks: Iterable[int], *, normalize: bool = True,
               **kwargs) -> dict[int, BaseSizeResult]:
    """``base_size`` for several ``k`` of the same ``n`` from one shared pass."""
    ks = list(ks)
    eff = {k: (normalize_k(n, k) if normalize else k) for k in ks}
    for k in ks:
        normalize_k(n, k)
    tables = weight_tables(n, set(eff.values()), **kwargs)
    found = {kk: scan(t) for kk, t in tables.items()}
    return {k: BaseSizeResult(n, k, found[eff[k]][0], METHOD_FORMULA, found[eff[k]][1])
            for k in ks}


def base_size(n: int, k: int, *, normalize: bool = True, **kwargs) -> BaseSizeResult:
    """Base size ``b(n, k)`` of Sym(n) on k-subsets.

    ``k`` is replaced by ``min(k, n-k)`` unless ``normalize=False``.  Keyword
    arguments (``strategy``, ``workers``, ``checkpoint``, ``resume``) go to
    :func:`weight_tables`.

    >>> base_size(6, 3).b
    3
    """
    return base_sizes(n, [k], normalize=normalize, **kwargs)[k]


def halasi_formula(n: int, k: int) -> ClosedForm:
    """``ceil(2(n-1)/(k+1))`` and whether ``n >= floor(k(k+1)/2) + 1``.

    The ceiling is the exact integer ``(2(n-1) + k) // (k+1)``.
    """
    if n < 2 or not 1 <= k or 2 * k > n:
        raise InvalidArgument(f"need n >= 2 and 1 <= k <= n/2, got n={n}, k={k}")
    return ClosedForm((2 * (n - 1) + k) // (k + 1), n >= k * (k + 1) // 2 + 1)
