"""Independent reference computations used to freeze expected values.

None of these touch the package's enumeration or counting code.
"""

from itertools import permutations


def brute_partitions(n, largest=None):
    """All partitions of n as non-increasing tuples, by plain recursion."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


def pentagonal_p(nmax):
    """p(0..nmax) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > n:
                break
            s = 1 if j % 2 else -1
            total += s * p[n - g1]
            if g2 <= n:
                total += s * p[n - g2]
            j += 1
        p[n] = total
    return p


def cycle_lengths(perm):
    """Sorted cycle lengths of a 0-based image tuple."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            L, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                L += 1
            lengths.append(L)
    return tuple(sorted(lengths, reverse=True))


def count_by_cycle_type(n):
    counts = {}
    for p in permutations(range(n)):
        key = cycle_lengths(p)
        counts[key] = counts.get(key, 0) + 1
    return counts


def fixed_subset_count(perm, k):
    """k-subsets of range(n) fixed setwise by the 0-based permutation."""
    from itertools import combinations
    return sum(1 for s in combinations(range(len(perm)), k)
               if {perm[x] for x in s} == set(s))


def weight_table_by_group(n, k):
    """{m: signed number of permutations fixing exactly m k-subsets}."""
    out = {}
    for p in permutations(range(n)):
        m = fixed_subset_count(p, k)
        parity = (n - len(cycle_lengths(p))) % 2
        out[m] = out.get(m, 0) + (-1 if parity else 1)
    return {m: w for m, w in out.items() if w}
