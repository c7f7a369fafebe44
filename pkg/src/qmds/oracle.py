"""Sharp dimension oracle for the power-sum vanishing conditions.

Every construction's self-orthogonality reduces to conditions of the form

    s + t1 + t2*q  is not 0 (mod M)   for all 0 <= t1, t2 <= k - 1,

one condition (M, s) per constituent subgroup.  ``first_violation`` returns
the smallest bound B at which a condition first fails, i.e. the sharp upper
limit on the number of rows:  k rows are admissible iff k <= B.
"""

from __future__ import annotations


def first_violation(M: int, s: int, q: int) -> int:
    """Smallest B = max(t1, t2) over solutions of s + t1 + t2*q = 0 (mod M).

    For each t2 the best partner is t1 = (-s - t2*q) mod M, and no t2 larger
    than the best bound found so far can improve on it.
    """
    if M < 1:
        raise ValueError("modulus must be positive")
    best = (-s) % M
    t2 = 1
    while t2 < best:
        r = (-s - t2 * q) % M
        cand = max(t2, r)
        if cand < best:
            best = cand
        t2 += 1
    return best


def brute_first_violation(M: int, s: int, q: int) -> int:
    """Reference implementation: grow B until a solution appears."""
    for B in range(M + 1):
        for t2 in range(B + 1):
            if (-s - t2 * q) % M <= B:
                return B
    raise AssertionError("unreachable")  # pragma: no cover


def max_dim(conditions: tuple[tuple[int, int], ...], q: int) -> int:
    """Sharp dimension bound: the minimum first violation over all conditions."""
    return min(first_violation(M, s, q) for M, s in conditions)
