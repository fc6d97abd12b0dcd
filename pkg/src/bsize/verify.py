"""Oracle-versus-engine equivalence suites, as run by ``bsize verify``.

Each suite walks ``n = 1..nmax``; a degree the oracle refuses for resource
reasons is counted as skipped, never as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from . import oracle
from .basesize import base_size, h_value, weight_table
from .errors import ResourceLimitError
from .fixcount import fixed_subsets, fixed_subsets_reference
from .partitions import class_size, partitions_of, sign


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{self.name:<12} {status}  {self.checked} checks"
        if self.failures:
            text += f", {len(self.failures)} mismatches (first: {self.failures[0]})"
        if self.skipped:
            text += f", skipped n={','.join(map(str, self.skipped))} (resource limit)"
        return text


def _expect(rep: SuiteReport, got, want, label: str) -> None:
    rep.checked += 1
    if got != want:
        rep.failures.append(f"{label}: got {got}, expected {want}")


def suite_classes(nmax: int) -> SuiteReport:
    rep = SuiteReport("classes")
    for n in range(1, nmax + 1):
        cts = list(partitions_of(n))
        _expect(rep, sum(class_size(ct) for ct in cts), factorial(n), f"sum of class sizes n={n}")
        if n >= 2:
            _expect(rep, sum(sign(ct) * class_size(ct) for ct in cts), 0, f"signed sum n={n}")
    return rep


def suite_fixcount(nmax: int, concrete_limit: int = 7) -> SuiteReport:
    rep = SuiteReport("fixcount")
    for n in range(1, nmax + 1):
        for ct in partitions_of(n):
            for k in range(n + 1):
                _expect(rep, fixed_subsets(ct, k), fixed_subsets_reference(ct, k), f"{ct} k={k}")
        if n > concrete_limit:
            rep.skipped.append(n)
            continue
        for g in oracle.all_permutations(n):
            ct = g.cycle_type()
            for k in range(n + 1):
                _expect(rep, oracle.fixed_subsets_concrete(g, k), fixed_subsets(ct, k),
                        f"g={g.cycles()} k={k}")
    return rep


def suite_h(nmax: int, lmax: int = 3, budget: int = oracle.DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("h")
    for n in range(2, nmax + 1):
        try:
            for k in range(1, n // 2 + 1):
                table = weight_table(n, k)
                for l in range(1, lmax + 1):
                    _expect(rep, h_value(table, l), oracle.brute_h(n, k, l, budget=budget),
                            f"n={n} k={k} l={l}")
        except ResourceLimitError:
            rep.skipped.append(n)
    return rep


def suite_base(nmax: int) -> SuiteReport:
    rep = SuiteReport("base")
    for n in range(2, nmax + 1):
        try:
            for k in range(1, n // 2 + 1):
                _expect(rep, base_size(n, k).b, oracle.brute_base_size(n, k), f"n={n} k={k}")
        except ResourceLimitError:
            rep.skipped.append(n)
    return rep


def suite_reduction(nmax: int, limit: int = 7) -> SuiteReport:
    rep = SuiteReport("reduction")
    for n in range(2, nmax + 1):
        if n > limit:
            rep.skipped.append(n)
            continue
        for g in oracle.all_permutations(n):
            if not g.is_identity():
                _expect(rep, oracle.transposition_reduction_check(g), True, f"g={g.cycles()}")
    return rep


def suite_generation(nmax: int, limit: int = 5) -> SuiteReport:
    rep = SuiteReport("generation")
    for n in range(1, nmax + 1):
        if n > limit:
            rep.skipped.append(n)
            continue
        pairs = list(combinations(range(1, n + 1), 2))
        for bits in range(1 << len(pairs)):
            graph = oracle.LabelledGraph.of(n, [p for e, p in enumerate(pairs) if bits >> e & 1])
            _expect(rep, oracle.transposition_generation_check(graph), True,
                    f"edges={sorted(graph.edges)}")
    return rep


def suite_graphs(nmax: int) -> SuiteReport:
    rep = SuiteReport("graphs")
    for n in range(1, nmax + 1):
        try:
            sums = oracle.signed_graph_sums(n)
        except ResourceLimitError:
            rep.skipped.append(n)
            continue
        for ct in partitions_of(n):
            _expect(rep, sums.get(ct, 0), sign(ct) * class_size(ct), f"n={n} pi={ct}")
    return rep


SUITES = {
    "classes": suite_classes,
    "fixcount": suite_fixcount,
    "h": suite_h,
    "base": suite_base,
    "reduction": suite_reduction,
    "generation": suite_generation,
    "graphs": suite_graphs,
}


def run(nmax: int, names=None) -> list[SuiteReport]:
    names = list(names) if names else list(SUITES)
    return [SUITES[name](nmax) for name in names]
