"""Verification: quantum parameters, self-orthogonality, MDS certification.

The MDS property is certified by two independent routes that must agree:

  * rank route  - every k-subset of columns has a nonsingular k x k minor
                  (scalar Gaussian elimination, budgeted by C(n, k));
  * enumeration - the minimum weight over all q^(2k) codewords equals
                  n - k + 1 (budgeted by q^(2k)).

Budgets raise ``BudgetExceeded`` rather than silently skipping, so callers
always know which route actually ran.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .codes import CodeArtifact, gram_zero, is_nonsingular
from .errors import BudgetExceeded, InvalidDims
from .field import Elt, Field

MINORS_BUDGET_DEFAULT = 2_000_000
ENUM_BUDGET_DEFAULT = 20_000_000


@dataclass(frozen=True)
class QuantumParams:
    """[[n, k, d]]_q parameters derived from a k-dim self-orthogonal code."""

    n: int
    k: int
    d: int
    q: int
    singleton_ok: bool

    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)


def quantum_params(n: int, k: int, q: int) -> QuantumParams:
    """Parameters [[n, n - 2k, k + 1]]_q induced by a Hermitian
    self-orthogonal MDS [n, k] code over GF(q^2)."""
    if k < 0 or 2 * k > n:
        raise InvalidDims(f"need 0 <= 2k <= n, got n={n}, k={k}")
    kq, d = n - 2 * k, k + 1
    return QuantumParams(n, kq, d, q, singleton_ok=(kq == n - 2 * d + 2))


def check_self_orthogonal(artifact: CodeArtifact) -> bool:
    ok, _ = gram_zero(artifact)
    return ok


# --------------------------------------------------------------------------
# MDS route 1: all maximal minors are nonsingular
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class MinorsReport:
    is_mds: bool
    minors_checked: int
    witness: tuple[int, ...] | None  # column set of the first singular minor


def check_mds_rank(field: Field, matrix,
                   budget: int = MINORS_BUDGET_DEFAULT) -> MinorsReport:
    rows = [tuple(r) for r in matrix]
    k, n = len(rows), len(rows[0])
    total = math.comb(n, k)
    if total > budget:
        raise BudgetExceeded(f"C({n},{k}) = {total} exceeds budget {budget}")
    checked = 0
    for cols in itertools.combinations(range(n), k):
        minor = [[row[c] for c in cols] for row in rows]
        checked += 1
        if not is_nonsingular(field, minor):
            return MinorsReport(False, checked, cols)
    return MinorsReport(True, checked, None)


# --------------------------------------------------------------------------
# MDS route 2: exhaustive minimum weight
# --------------------------------------------------------------------------

def _scalar_min_weight(field: Field, rows) -> int:
    k, n = len(rows), len(rows[0])
    elems: list[Elt] = [None] + list(range(field.q2 - 1))
    best = n
    for msg in itertools.product(elems, repeat=k):
        if all(c is None for c in msg):
            continue
        weight = 0
        for j in range(n):
            acc: Elt = None
            for c, row in zip(msg, rows):
                acc = field.add(acc, field.mul(c, row[j]))
            if acc is not None:
                weight += 1
        best = min(best, weight)
    return best


def _np_multiples(field: Field, row) -> np.ndarray:
    """(q^2, n) packed coefficient vectors of c * row for every scalar c."""
    exp_table = np.asarray(field.backend.exp, dtype=np.int64)
    n = len(row)
    out = np.zeros((field.q2, n), dtype=np.int64)
    N = field.N
    ent = np.asarray([-1 if e is None else e for e in row], dtype=np.int64)
    live = ent >= 0
    for c in range(1, field.q2):
        ce = c - 1  # scalar theta^(c-1)
        shifted = (ent + ce) % N
        out[c, live] = exp_table[shifted[live]]
    return out


def _np_min_weight(field: Field, rows) -> int:
    p, n, k = field.p, len(rows[0]), len(rows)
    mults = [_np_multiples(field, r) for r in rows]
    if p == 2:
        def combine(a, b):
            return (a[:, None, :] ^ b[None, :, :]).reshape(-1, a.shape[1])
        def weight_rows(w):
            return (w != 0).sum(axis=1)
    else:
        digits = 2 * field.h
        def to_planes(a):
            return np.stack([(a // p**i) % p for i in range(digits)], axis=-1)
        mults = [to_planes(m) for m in mults]
        def combine(a, b):
            return ((a[:, None, :, :] + b[None, :, :, :]) % p
                    ).reshape(-1, a.shape[1], digits)
        def weight_rows(w):
            return (w != 0).any(axis=2).sum(axis=1)
    best = n
    # chunk over the first coordinate to bound the working set
    for c0 in range(field.q2):
        w = mults[0][c0:c0 + 1]
        for i in range(1, k):
            w = combine(w, mults[i])
        weights = weight_rows(w)
        if c0 == 0 and k >= 1:
            weights = weights[1:]  # drop the all-zero message
        if len(weights):
            best = min(best, int(weights.min()))
    return best


def check_mds_enumeration(field: Field, matrix,
                          budget: int = ENUM_BUDGET_DEFAULT) -> int:
    """Exhaustive minimum weight of the row space; MDS iff it is n - k + 1."""
    rows = [tuple(r) for r in matrix]
    total = field.q2 ** len(rows)
    if total > budget:
        raise BudgetExceeded(f"q^(2k) = {total} exceeds budget {budget}")
    if field.mode == "table" and total >= 4096:
        return _np_min_weight(field, rows)
    return _scalar_min_weight(field, rows)


# --------------------------------------------------------------------------
# combined report
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    self_orthogonal: bool
    gram_witness: tuple[int, int] | None
    minors: MinorsReport | None
    minors_skipped: str | None
    min_weight: int | None
    enum_skipped: str | None
    mds_expected_weight: int
    routes_agree: bool | None
    quantum: QuantumParams

    @property
    def all_passed(self) -> bool:
        if not self.self_orthogonal:
            return False
        if self.minors is not None and not self.minors.is_mds:
            return False
        if self.min_weight is not None and \
                self.min_weight != self.mds_expected_weight:
            return False
        return True


def verify_artifact(artifact: CodeArtifact,
                    budget_minors: int = MINORS_BUDGET_DEFAULT,
                    budget_enum: int = ENUM_BUDGET_DEFAULT) -> VerificationReport:
    """Run the Gram check plus both MDS routes (where budgets allow)."""
    f = artifact.field
    ok, witness = gram_zero(artifact)
    matrix = artifact.matrix()
    minors = minors_skipped = None
    try:
        minors = check_mds_rank(f, matrix, budget_minors)
    except BudgetExceeded as exc:
        minors_skipped = str(exc)
    min_weight = enum_skipped = None
    try:
        min_weight = check_mds_enumeration(f, matrix, budget_enum)
    except BudgetExceeded as exc:
        enum_skipped = str(exc)
    expected = artifact.n - artifact.k + 1
    agree = None
    if minors is not None and min_weight is not None:
        agree = minors.is_mds == (min_weight == expected)
    return VerificationReport(
        self_orthogonal=ok,
        gram_witness=witness,
        minors=minors,
        minors_skipped=minors_skipped,
        min_weight=min_weight,
        enum_skipped=enum_skipped,
        mds_expected_weight=expected,
        routes_agree=agree,
        quantum=quantum_params(artifact.n, artifact.k, f.q),
    )
