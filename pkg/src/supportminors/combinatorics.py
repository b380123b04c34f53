"""Colexicographic ranking of subsets and monomials.

Subsets of {0, ..., n-1} are strictly increasing int tuples; the colex rank
of (j_0 < ... < j_{k-1}) is sum_t C(j_t, t+1) (combinatorial number system).
Monomials in K variables are weakly increasing tuples of variable indices;
their colex order equals colex order on exponent vectors and is obtained by
the staircase bijection onto (k = degree)-subsets of {0, ..., K+d-2}.
"""

from __future__ import annotations

from math import comb
from typing import Iterator


def subset_rank(J: tuple[int, ...]) -> int:
    """Colex rank of a strictly increasing subset tuple."""
    r = 0
    prev = -1
    for t, j in enumerate(J):
        if j <= prev:
            raise ValueError(f"subset {J} is not strictly increasing")
        prev = j
        r += comb(j, t + 1)
    return r


def subset_unrank(rank: int, n: int, k: int) -> tuple[int, ...]:
    """The k-subset of {0..n-1} with the given colex rank."""
    if not 0 <= rank < comb(n, k):
        raise ValueError(f"rank {rank} out of range for C({n},{k})")
    out = [0] * k
    r = rank
    for t in range(k, 0, -1):
        # Largest j with C(j, t) <= r; elements are filled from the top down.
        j = t - 1
        while comb(j + 1, t) <= r:
            j += 1
        out[t - 1] = j
        r -= comb(j, t)
    return tuple(out)


def subsets_colex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {0..n-1} in colex order."""
    if k == 0:
        yield ()
        return
    if k > n:
        return
    for top in range(k - 1, n):
        for rest in subsets_colex(top, k - 1):
            yield rest + (top,)


def monomial_rank(mono: tuple[int, ...]) -> int:
    """Colex rank of a weakly increasing monomial tuple among its degree."""
    staircased = tuple(v + t for t, v in enumerate(mono))
    return subset_rank(staircased)


def monomial_unrank(rank: int, K: int, d: int) -> tuple[int, ...]:
    subset = subset_unrank(rank, K + d - 1, d)
    return tuple(j - t for t, j in enumerate(subset))


def monomials_colex(K: int, d: int) -> Iterator[tuple[int, ...]]:
    """All degree-d monomials in K variables, colex on exponent vectors."""
    for subset in subsets_colex(K + d - 1, d):
        yield tuple(j - t for t, j in enumerate(subset))


def monomial_count(K: int, d: int) -> int:
    return comb(K + d - 1, d)


def monomial_mul(mono: tuple[int, ...], var: int) -> tuple[int, ...]:
    """Multiply a monomial by one variable, keeping the tuple sorted."""
    out = list(mono)
    out.append(var)
    out.sort()
    return tuple(out)
