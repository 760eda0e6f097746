"""Independent reference computations used only by the tests."""

from itertools import combinations, product
from math import factorial


def integral_by_enumeration(k, m, n):
    """Expand e2^m e1^n by choosing one pair per e2 factor and one variable per
    e1 factor, then integrate every resulting monomial with a! per coordinate.
    Shares no code with the package."""
    pairs = list(combinations(range(k), 2))
    total = 0
    for picked_pairs in product(pairs, repeat=m):
        for picked_vars in product(range(k), repeat=n):
            exps = [0] * k
            for a, b in picked_pairs:
                exps[a] += 1
                exps[b] += 1
            for v in picked_vars:
                exps[v] += 1
            weight = 1
            for a in exps:
                weight *= factorial(a)
            total += weight
    return total


def chains_by_brute_force(k, m):
    """Count weakly decreasing chains m >= s_1 >= ... >= s_r >= 1, r = 1..k-2."""
    count = 0
    for r in range(1, k - 1):
        for chain in product(range(1, m + 1), repeat=r):
            if all(chain[i] >= chain[i + 1] for i in range(r - 1)):
                count += 1
    return count
