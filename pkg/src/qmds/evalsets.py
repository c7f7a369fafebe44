"""Weighted evaluation sets: unions of multiplicative subgroups.

An evaluation set is a list of distinct nonzero points of GF(q^2) together
with a nonzero GF(q)-weight per point.  Points are carried by exponent and
kept sorted ascending, which fixes the column order of every generator
matrix built from the set.

Subgroups are indexed by divisors m of N = q^2 - 1 (the subgroup of order
N/m, i.e. exponents divisible by m).  Three kinds of unions appear:

  * parity-filtered unions in characteristic two (overlap points cancel,
    so only odd-membership points are kept, all with weight 1);
  * weighted unions in odd characteristic, where each constituent carries a
    weight of the form theta^beta * x^alpha and overlap points receive the
    sum of their constituents' weights;
  * the mixed union, whose even-part weight is shifted by a subfield
    element H picked by ``find_h_shift`` so that no shared point's combined
    weight vanishes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (HypothesisViolated, NoValidH, NotChar2, NotCoprime,
                     WeightSumVanishes)
from .field import Elt, Field


@dataclass(frozen=True, eq=False)
class EvalSet:
    """Distinct evaluation points with nonzero subfield weights.

    points and weights are exponent vectors; membership[i] lists which
    constituent subgroups (by position in the defining divisor list)
    contain points[i].
    """

    field: Field
    points: tuple[int, ...]
    weights: tuple[int, ...]
    membership: tuple[tuple[int, ...], ...]
    label: str

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise HypothesisViolated("evaluation points must be distinct")
        for w in self.weights:
            if not self.field.in_subfield(w):
                raise HypothesisViolated("weight outside the subfield")

    def __len__(self) -> int:
        return len(self.points)


def _subgroup_exponents(field: Field, m: int) -> range:
    if m < 1 or field.N % m != 0:
        raise HypothesisViolated(f"m = {m} does not divide {field.N}")
    return range(0, field.N, m)


def subgroup_set(field: Field, m: int) -> EvalSet:
    """The order-N/m subgroup with unit weights."""
    pts = tuple(_subgroup_exponents(field, m))
    return EvalSet(field, pts, (0,) * len(pts), ((0,),) * len(pts),
                   f"subgroup(m={m})")


def union_size(N: int, ms: tuple[int, ...]) -> int:
    """Size of the full union of the subgroups, by inclusion-exclusion."""
    total = 0
    k = len(ms)
    for mask in range(1, 1 << k):
        chosen = [ms[i] for i in range(k) if mask >> i & 1]
        sign = -1 if bin(mask).count("1") % 2 == 0 else 1
        total += sign * (N // math.lcm(*chosen))
    return total


def parity_union_size(N: int, ms: tuple[int, ...]) -> int:
    """Size of the parity-filtered union (odd-membership points only)."""
    total = 0
    k = len(ms)
    for mask in range(1, 1 << k):
        chosen = [ms[i] for i in range(k) if mask >> i & 1]
        total += (-2) ** (bin(mask).count("1") - 1) * (N // math.lcm(*chosen))
    return total


def parity_union_char2(field: Field, ms: tuple[int, ...]) -> EvalSet:
    """Char-2 union keeping points that lie in an odd number of subgroups."""
    if field.p != 2:
        raise NotChar2("parity-filtered union needs characteristic 2")
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            if math.gcd(ms[i], ms[j]) != 1:
                raise NotCoprime(f"gcd({ms[i]}, {ms[j]}) != 1")
    members: dict[int, list[int]] = {}
    for i, m in enumerate(ms):
        for e in _subgroup_exponents(field, m):
            members.setdefault(e, []).append(i)
    pts = tuple(sorted(e for e, hit in members.items() if len(hit) % 2 == 1))
    return EvalSet(field, pts, (0,) * len(pts),
                   tuple(tuple(members[e]) for e in pts),
                   f"parity_union(ms={','.join(map(str, ms))})")


def weighted_union(field: Field, parts: tuple[tuple[int, int, int], ...],
                   label: str,
                   vanish_error: type[HypothesisViolated] = WeightSumVanishes,
                   ) -> EvalSet:
    """Full union where part (m, alpha, beta) weights its subgroup by
    theta^beta * x^alpha; overlap points get the sum of their parts' weights.

    Raises ``vanish_error`` if any combined weight is zero.
    """
    members: dict[int, list[int]] = {}
    for i, (m, _, _) in enumerate(parts):
        for e in _subgroup_exponents(field, m):
            members.setdefault(e, []).append(i)
    pts = tuple(sorted(members))
    weights = []
    for e in pts:
        w: Elt = None
        for i in members[e]:
            _, alpha, beta = parts[i]
            w = field.add(w, (beta + alpha * e) % field.N)
        if w is None:
            raise vanish_error(
                f"combined weight vanishes at point exponent {e} ({label})")
        weights.append(w)
    return EvalSet(field, pts, tuple(weights),
                   tuple(tuple(members[e]) for e in pts), label)


# --------------------------------------------------------------------------
# the subfield shift H for the mixed union
# --------------------------------------------------------------------------

def shared_weight_obstructions(q: int, m1: int, m2: int) -> tuple[int, ...]:
    """Exponents H must avoid: on a shared point x the combined weight is
    x^(q+1) + H x^((q+1)/2) = a(a + H) with a = x^((q+1)/2), so exactly the
    values H = -a are forbidden."""
    N = q * q - 1
    L = math.lcm(m1, m2)
    bad = set()
    for e in range(0, N, L):
        bad.add((N // 2 + e * (q + 1) // 2) % N)
    return tuple(sorted(bad))


def find_h_shift_exponent(q: int, m1: int, m2: int) -> int:
    """Smallest-exponent nonzero subfield element H whose shift keeps every
    shared point's combined weight nonzero."""
    if q % 2 == 0:
        raise HypothesisViolated("mixed union needs odd q")
    if m1 % 2 != 1 or (q + 1) % m1 != 0:
        raise HypothesisViolated(f"m1 = {m1} must be an odd divisor of q + 1")
    if m2 % 2 != 0 or (q - 1) % m2 != 0:
        raise HypothesisViolated(f"m2 = {m2} must be an even divisor of q - 1")
    bad = set(shared_weight_obstructions(q, m1, m2))
    for t in range(q - 1):
        cand = t * (q + 1)
        if cand not in bad:
            return cand
    raise NoValidH(f"every subfield shift fails for (q={q}, m1={m1}, m2={m2})")


def find_H(field: Field, m1: int, m2: int) -> Elt:
    """Field-level wrapper of ``find_h_shift_exponent``."""
    return find_h_shift_exponent(field.q, m1, m2)


def mixed_union(field: Field, m1: int, m2: int) -> tuple[EvalSet, int]:
    """Union of the odd-part subgroup (weight x^(q+1)) and the even-part
    subgroup (weight H x^((q+1)/2)); returns the set and the exponent of H."""
    H = find_h_shift_exponent(field.q, m1, m2)
    q = field.q
    es = weighted_union(
        field,
        ((m1, q + 1, 0), (m2, (q + 1) // 2, H)),
        f"mixed_union(m1={m1}, m2={m2})",
        vanish_error=NoValidH,
    )
    return es, H
