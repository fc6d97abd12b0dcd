from math import comb
from random import Random

import pytest
from hypothesis import given, strategies as st

from bsize import CycleType, InvalidArgument, fixed_subsets, fixed_subsets_reference, partitions_of
from bsize.fixcount import fixed_subset_counts, mul_binomial_power

from oracles import fixed_subset_count

cycle_types = st.lists(st.integers(1, 8), min_size=1, max_size=10).map(CycleType.from_parts)


def representative(ct, shuffle=None):
    """0-based permutation with cycle type ct; cycles on consecutive points,
    optionally relabelled by a random bijection."""
    perm = list(range(ct.n))
    start = 0
    for L in ct.parts():
        for j in range(L):
            perm[start + j] = start + (j + 1) % L
        start += L
    if shuffle is None:
        return tuple(perm)
    label = list(range(ct.n))
    shuffle.shuffle(label)
    out = [0] * ct.n
    for x in range(ct.n):
        out[label[x]] = label[perm[x]]
    return tuple(out)


def test_identity_fixes_everything():
    for n in range(1, 10):
        ct = CycleType.from_parts([1] * n)
        for k in range(n + 1):
            assert fixed_subsets_reference(ct, k) == fixed_subsets(ct, k) == comb(n, k)


def test_examples():
    assert fixed_subsets_reference(CycleType.from_parts([2, 2, 2]), 3) == 0
    ct = CycleType.from_parts([1, 1, 2, 2])
    assert fixed_subset_count(representative(ct), 3) == 4
    assert fixed_subsets_reference(ct, 3) == fixed_subsets(ct, 3) == 4
    five = CycleType.from_parts([5, 5])
    assert fixed_subset_count(representative(five), 5) == 2
    assert fixed_subsets(five, 5) == 2
    for n in range(2, 12):
        full = CycleType.from_parts([n])
        assert all(fixed_subsets(full, k) == 0 for k in range(1, n))


def test_equivalence_exhaustive():
    for n in range(1, 15):
        for ct in partitions_of(n):
            counts = fixed_subset_counts(ct, n)
            for k in range(n + 1):
                assert counts[k] == fixed_subsets(ct, k) == fixed_subsets_reference(ct, k)


@pytest.mark.parametrize("n", range(1, 9))
def test_matches_concrete_representatives(n):
    rng = Random(n)
    for ct in partitions_of(n):
        reps = {representative(ct), representative(ct, rng)}
        for k in range(n + 1):
            counts = {fixed_subset_count(p, k) for p in reps}
            assert counts == {fixed_subsets(ct, k)}


@given(cycle_types)
def test_complement_symmetry_and_boundary(ct):
    n = ct.n
    assert fixed_subsets(ct, 0) == fixed_subsets(ct, n) == 1
    for k in range(n + 1):
        assert fixed_subsets(ct, k) == fixed_subsets(ct, n - k)
        assert 0 <= fixed_subsets(ct, k) <= comb(n, k)


@given(st.lists(st.integers(-5, 5), min_size=6, max_size=6), st.integers(1, 6), st.integers(0, 7))
def test_binomial_power_matches_repeated_multiplication(poly, i, c):
    deg = 5
    slow = list(poly)
    for _ in range(c):
        slow = [slow[d] + (slow[d - i] if d >= i else 0) for d in range(deg + 1)]
    assert mul_binomial_power(poly, i, c, deg) == slow


def test_k_out_of_range():
    ct = CycleType.from_parts([2, 1])
    with pytest.raises(InvalidArgument):
        fixed_subsets(ct, 4)
    with pytest.raises(InvalidArgument):
        fixed_subsets_reference(ct, -1)
