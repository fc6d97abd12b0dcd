"""Brute-force group-theoretic checks, deliberately naive.

Nothing here uses the partition formula.  Subsets of {1..n} are n-bit masks
(bit ``i-1`` for point ``i``), and a permutation acts on a mask by moving
bits, so "S is fixed by g" is a single integer comparison.  Sets of group
elements are Python ints used as bitsets over an enumeration of Sym(n).

Every enumeration checks its size against an explicit budget first and
raises :class:`ResourceLimitError` rather than truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial

from .errors import InvalidArgument, NoBaseError, ResourceLimitError
from .partitions import CycleType

DEFAULT_BUDGET = 2 ** 31


# -- concrete objects ---------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of point ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvalidArgument(f"{self.images!r} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> Permutation:
        """``Permutation.from_cycles(4, (1, 2, 3))`` is the 3-cycle 1->2->3->1 on 4 points."""
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType.from_parts(len(c) for c in self.cycles())

    def act(self, mask: int) -> int:
        """Image of the subset ``mask`` under this permutation."""
        out = 0
        for i, v in enumerate(self.images):
            if mask >> i & 1:
                out |= 1 << (v - 1)
        return out

    def compose(self, other: Permutation) -> Permutation:
        """``self`` then ``other``."""
        return Permutation(tuple(other.images[v - 1] for v in self.images))


def transposition(n: int, i: int, j: int) -> Permutation:
    return Permutation.from_cycles(n, (i, j))


@dataclass(frozen=True)
class SubsetTuple:
    n: int
    k: int
    subsets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for s in self.subsets:
            if len(s) != self.k or not s <= set(range(1, self.n + 1)):
                raise InvalidArgument(f"{sorted(s)} is not a {self.k}-subset of 1..{self.n}")

    @classmethod
    def of(cls, n: int, *subsets) -> SubsetTuple:
        subs = tuple(frozenset(s) for s in subsets)
        if not subs:
            raise InvalidArgument("empty tuple")
        return cls(n, len(subs[0]), subs)

    @property
    def l(self) -> int:
        return len(self.subsets)

    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.subsets]


@dataclass(frozen=True)
class LabelledGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise InvalidArgument(f"bad edge ({i}, {j}) on {self.n} vertices")

    @classmethod
    def of(cls, n: int, edges) -> LabelledGraph:
        return cls(n, frozenset(tuple(sorted(e)) for e in edges))

    def components(self) -> list[frozenset[int]]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            parent[find(i)] = find(j)
        groups: dict[int, set[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), set()).add(v)
        return [frozenset(g) for g in groups.values()]

    def component_partition(self) -> CycleType:
        return CycleType.from_parts(len(c) for c in self.components())


def to_mask(subset) -> int:
    m = 0
    for x in subset:
        m |= 1 << (x - 1)
    return m


def _budget(work: int, budget: int, what: str) -> None:
    if work > budget:
        raise ResourceLimitError(f"{what}: {work} steps exceeds the budget of {budget}")


def _group(n: int) -> list[tuple[int, ...]]:
    # 0-based image tuples; index 0 is the identity
    return list(permutations(range(n)))


def _act0(p: tuple[int, ...], mask: int) -> int:
    out = 0
    for i, v in enumerate(p):
        if mask >> i & 1:
            out |= 1 << v
    return out


def _k_subset_masks(n: int, k: int) -> list[int]:
    """k-subsets of {1..n} as masks, in colex order."""
    return sorted((to_mask(c) for c in combinations(range(1, n + 1), k)))


def _stabilizer_bitsets(n: int, masks: list[int]) -> list[int]:
    """For each mask, the set of non-identity group elements fixing it."""
    group = _group(n)
    out = []
    for m in masks:
        bits = 0
        for idx in range(1, len(group)):
            if _act0(group[idx], m) == m:
                bits |= 1 << idx
        out.append(bits)
    return out


# -- operations ---------------------------------------------------------------

def fixed_subsets_concrete(g: Permutation, k: int) -> int:
    """|F_g|: k-subsets of {1..n} mapped to themselves by ``g``."""
    return sum(1 for m in _k_subset_masks(g.n, k) if g.act(m) == m)


def pointwise_stabilizer_is_trivial(t: SubsetTuple, *, max_n: int = 10) -> bool:
    """True iff the identity is the only element of Sym(n) fixing every subset of ``t``."""
    if t.n > max_n:
        raise ResourceLimitError(f"n={t.n} exceeds the enumeration limit {max_n}")
    masks = t.masks()
    ident = tuple(range(t.n))
    for p in permutations(range(t.n)):
        if p != ident and all(_act0(p, m) == m for m in masks):
            return False
    return True


def brute_h(n: int, k: int, l: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Number of l-tuples of k-subsets with trivial pointwise stabilizer.

    Tuples are visited by an odometer over colex subset indices; the
    stabilizer of a prefix is the intersection of per-subset stabilizer sets.
    The budget is charged ``C(n,k)**l * n!``.
    """
    if n < 1 or not 0 <= k <= n or l < 1:
        raise InvalidArgument(f"bad arguments n={n}, k={k}, l={l}")
    size = comb(n, k)
    _budget(size ** l * factorial(n), budget, f"brute_h({n},{k},{l})")
    stabs = _stabilizer_bitsets(n, _k_subset_masks(n, k))
    everything = (1 << factorial(n)) - 2  # all but the identity

    count = 0
    # prefix[d] = elements fixing the first d coordinates
    prefix = [everything] + [0] * l
    digits = [0] * l
    depth = 0
    while True:
        # fill from depth to the end with current digits
        for d in range(depth, l):
            prefix[d + 1] = prefix[d] & stabs[digits[d]]
        if prefix[l] == 0:
            count += 1
        # advance odometer
        d = l - 1
        while d >= 0 and digits[d] == size - 1:
            digits[d] = 0
            d -= 1
        if d < 0:
            return count
        digits[d] += 1
        depth = d


def brute_base_size(n: int, k: int, *, max_n: int = 8) -> int:
    """Smallest l such that some l-tuple of k-subsets has trivial stabilizer.

    Distinct subsets suffice, and since Sym(n) is transitive on k-subsets the
    first member can be taken to be {1..k}.
    """
    if n < 1 or not 0 <= k <= n:
        raise InvalidArgument(f"bad arguments n={n}, k={k}")
    if k in (0, n):
        raise NoBaseError(f"no base exists for k={k}, n={n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the enumeration limit {max_n}")
    masks = _k_subset_masks(n, k)
    stabs = _stabilizer_bitsets(n, masks)
    first = masks.index((1 << k) - 1)
    rest = [s for i, s in enumerate(stabs) if i != first]
    for l in range(1, len(masks) + 1):
        for combo in combinations(rest, l - 1):
            acc = stabs[first]
            for s in combo:
                acc &= s
                if not acc:
                    break
            if not acc:
                return l
    raise AssertionError("Sym(n) acts faithfully on k-subsets for 0 < k < n")


def transposition_reduction_witness(g: Permutation, *, max_n: int = 10) -> Permutation | None:
    """A transposition fixing every subset that ``g`` fixes, or ``None``."""
    if g.is_identity():
        raise InvalidArgument("the identity has no transposition witness")
    if g.n > max_n:
        raise ResourceLimitError(f"n={g.n} exceeds the enumeration limit {max_n}")
    fixed = [m for m in range(1 << g.n) if g.act(m) == m]
    for i, j in combinations(range(1, g.n + 1), 2):
        tau = transposition(g.n, i, j)
        if all(tau.act(m) == m for m in fixed):
            return tau
    return None


def transposition_reduction_check(g: Permutation, **kwargs) -> bool:
    return transposition_reduction_witness(g, **kwargs) is not None


def generated_group(n: int, gens) -> set[tuple[int, ...]]:
    """Closure of ``gens`` under composition, as a set of image tuples."""
    ident = tuple(range(1, n + 1))
    gens = [g.images for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[v - 1] for v in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def transposition_generation_check(graph: LabelledGraph, *, max_n: int = 7) -> bool:
    """Do the edge transpositions generate exactly the component-preserving permutations?"""
    if graph.n > max_n:
        raise ResourceLimitError(f"n={graph.n} exceeds the enumeration limit {max_n}")
    n = graph.n
    closure = generated_group(n, [transposition(n, i, j) for i, j in graph.edges])
    where = {}
    for idx, comp in enumerate(graph.components()):
        for v in comp:
            where[v] = idx
    young = {p for p in permutations(range(1, n + 1))
             if all(where[v] == where[p[v - 1]] for v in range(1, n + 1))}
    return closure == young


def signed_graph_sums(n: int, *, max_n: int = 6) -> dict[CycleType, int]:
    """``sum (-1)^|E|`` over all graphs on {1..n}, grouped by component partition."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} needs 2^{comb(n, 2)} graphs; limit is n <= {max_n}")
    pairs = list(combinations(range(n), 2))
    out: dict[CycleType, int] = {}
    for bits in range(1 << len(pairs)):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        edges = 0
        for e, (i, j) in enumerate(pairs):
            if bits >> e & 1:
                edges += 1
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
        sizes: dict[int, int] = {}
        for v in range(n):
            r = find(v)
            sizes[r] = sizes.get(r, 0) + 1
        key = CycleType.from_parts(sizes.values())
        out[key] = out.get(key, 0) + (-1 if edges % 2 else 1)
    return out


def signed_graph_sum(n: int, pi: CycleType, **kwargs) -> int:
    """``sum (-1)^|E|`` over graphs on {1..n} whose component sizes form ``pi``."""
    if pi.n != n:
        raise InvalidArgument(f"{pi} is not a partition of {n}")
    return signed_graph_sums(n, **kwargs).get(pi, 0)


def all_permutations(n: int, *, max_n: int = 8):
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the enumeration limit {max_n}")
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)
