"""Shared test oracles, written independently of the library internals."""

from itertools import combinations
from math import comb


def brute_force_two_sided_p(a, b):
    """Two-sided rank-sum p by full enumeration of rank partitions.

    Ranks the pooled sample (midranks for ties), then counts, over every
    C(N, n1) assignment of rank positions to the first sample, how many
    rank sums deviate from the null mean at least as far as the observed
    one.  Doubled ranks keep all arithmetic in exact integers.
    """
    pooled = list(a) + list(b)
    n1, total = len(a), len(pooled)
    order = sorted(range(total), key=lambda i: pooled[i])
    doubled = [0] * total
    i = 0
    while i < total:
        j = i
        while j + 1 < total and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        mid2 = (i + 1) + (j + 1)  # doubled average of tied rank slots
        for t in range(i, j + 1):
            doubled[order[t]] = mid2
        i = j + 1

    mu2 = n1 * (total + 1)
    d_obs = abs(sum(doubled[:n1]) - mu2)
    hits = sum(
        1
        for s in combinations(range(total), n1)
        if abs(sum(doubled[i] for i in s) - mu2) >= d_obs
    )
    return hits / comb(total, n1)
