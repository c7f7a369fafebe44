"""Generator matrices over GF(q^2) and Hermitian Gram computations.

A code artifact is a k-row generalized evaluation matrix: row l evaluates
x^(shift+l) at every point of a weighted evaluation set, scaled per column by
a (q+1)-st root of the column weight so that Hermitian inner products of rows
reproduce the weighted power sums.  The extended variant prepends one border
column that is nonzero only in row 0.

Self-orthogonality checks come in two exchangeable flavours: a direct scalar
computation of every Gram entry, and a vectorized path that works purely on
exponent arrays plus the field's coefficient tables.  Both report the first
offending row pair as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (DimensionTooLarge, LengthMismatch, NotInSubfield,
                     UsageError)
from .evalsets import EvalSet, subgroup_set
from .field import Elt, Field


@dataclass(eq=False)
class CodeArtifact:
    """A k x n generator matrix in structured (evaluation) form.

    ``border_entry`` is the single nonzero entry of the optional border
    column (column 0, row 0); the matrix is materialized lazily because the
    structured form is all the verification paths need.
    """

    field: Field
    evalset: EvalSet
    k: int
    shift: int
    label: str = ""
    has_border: bool = False
    border_entry: Elt = None

    @property
    def n(self) -> int:
        return len(self.evalset) + (1 if self.has_border else 0)

    @cached_property
    def column_scales(self) -> tuple[int, ...]:
        """Exponent of the (q+1)-st root of each column weight."""
        return tuple(self.field.norm_root(w) for w in self.evalset.weights)

    def row(self, l: int) -> tuple[Elt, ...]:
        N = self.field.N
        body = tuple((t + (self.shift + l) * e) % N
                     for t, e in zip(self.column_scales, self.evalset.points))
        if self.has_border:
            return ((self.border_entry if l == 0 else None),) + body
        return body

    def matrix(self) -> tuple[tuple[Elt, ...], ...]:
        return tuple(self.row(l) for l in range(self.k))


def eval_code(field: Field, evalset: EvalSet, k: int, shift: int,
              label: str = "") -> CodeArtifact:
    """Rows x^(shift+l), l = 0..k-1, evaluated over the weighted set."""
    if k < 1:
        raise UsageError(f"k must be >= 1, got {k}")
    if k > len(evalset):
        raise DimensionTooLarge(f"k = {k} exceeds length {len(evalset)}")
    return CodeArtifact(field, evalset, k, shift, label)


def extend_c1(field: Field, m: int, k: int) -> CodeArtifact:
    """Length-(n+1) extension of the subgroup code: rows 1, x, .., x^(k-1)
    plus a border column (b, 0, .., 0)^T.

    The border weight is forced by self-orthogonality of row 0: with column
    weight v0 = m mod p the (0,0) Gram entry is v0 * c^2 + n = 0 mod p,
    where c = ((q+1)/m) mod p is the border coordinate before scaling.
    """
    if k < 2:
        raise UsageError(f"extended code needs k >= 2, got {k}")
    es = subgroup_set(field, m)
    if k > len(es) + 1:
        raise DimensionTooLarge(f"k = {k} exceeds length {len(es) + 1}")
    v0 = field.embed_int(m % field.p)
    c = field.embed_int(((field.q + 1) // m) % field.p)
    border = field.mul(field.norm_root(v0), c)
    return CodeArtifact(field, es, k, shift=0, label=f"extended(m={m})",
                        has_border=True, border_entry=border)


# --------------------------------------------------------------------------
# Hermitian inner products and Gram matrices
# --------------------------------------------------------------------------

def hermitian_ip(field: Field, u: tuple[Elt, ...], v: tuple[Elt, ...]) -> Elt:
    """<u, v> = sum_i u_i * v_i^q."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} != {len(v)}")
    acc: Elt = None
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, field.frobenius_q(b)))
    return acc


def gram_hermitian(field: Field, matrix) -> tuple[tuple[Elt, ...], ...]:
    """Full Hermitian Gram matrix of the rows."""
    rows = [tuple(r) for r in matrix]
    return tuple(tuple(hermitian_ip(field, ri, rj) for rj in rows)
                 for ri in rows)


def gram_zero_scalar(field: Field, matrix) -> tuple[bool, tuple[int, int] | None]:
    """Scalar check that the Gram matrix vanishes.

    Only the upper triangle is computed: <r_j, r_i> = <r_i, r_j>^q, so the
    Gram matrix is zero iff its upper triangle is.
    """
    rows = [tuple(r) for r in matrix]
    for i in range(len(rows)):
        for j in range(i, len(rows)):
            if hermitian_ip(field, rows[i], rows[j]) is not None:
                return False, (i, j)
    return True, None


def weighted_pair_sum(field: Field, evalset: EvalSet, shift: int,
                      l1: int, l2: int) -> Elt:
    """Gram entry (l1, l2) straight from the weighted power-sum form:
    sum_j w_j * x_j^((q+1)shift + l1 + q*l2)."""
    N = field.N
    expo = ((field.q + 1) * shift + l1 + field.q * l2) % N
    acc: Elt = None
    for e, w in zip(evalset.points, evalset.weights):
        acc = field.add(acc, (w + e * expo) % N)
    return acc


def gram_entry(artifact: CodeArtifact, l1: int, l2: int) -> Elt:
    """Gram entry (l1, l2) of an artifact, including any border column."""
    f = artifact.field
    val = weighted_pair_sum(f, artifact.evalset, artifact.shift, l1, l2)
    if artifact.has_border and l1 == 0 and l2 == 0:
        b = artifact.border_entry
        val = f.add(val, f.mul(b, f.frobenius_q(b)))
    return val


def gram_zero_structured(artifact: CodeArtifact) -> tuple[bool, tuple[int, int] | None]:
    """Scalar Gram check in structured form (no matrix materialization)."""
    for l1 in range(artifact.k):
        for l2 in range(l1, artifact.k):
            if gram_entry(artifact, l1, l2) is not None:
                return False, (l1, l2)
    return True, None


def gram_zero_vectorized(artifact: CodeArtifact) -> tuple[bool, tuple[int, int] | None]:
    """Vectorized Gram check on exponent arrays (table-mode fields).

    Entry (l1, l2) is sum_j theta^(B_j + l1*E_j + (q*l2 mod N)*E_j) with
    B_j = w_j + shift*(q+1)*e_j; the two index arrays U and V are maintained
    incrementally with one conditional subtraction per step, so each pair
    costs O(n) adds plus coefficient-table gathers.
    """
    f = artifact.field
    N, q, p, k = f.N, f.q, f.p, artifact.k
    E = np.asarray(artifact.evalset.points, dtype=np.int64)
    W = np.asarray(artifact.evalset.weights, dtype=np.int64)
    B = (W + (artifact.shift * (q + 1) % N) * E) % N
    QE = (E * q) % N
    border_packed = 0
    if artifact.has_border:
        b = artifact.border_entry
        border_packed = f.backend.exp_packed(f.mul(b, f.frobenius_q(b)))
    if p == 2:
        mask = f.np_mask_ext()
        planes = None
    else:
        planes = f.np_plane_ext()
        border_digits = []
        v = border_packed
        for _ in range(2 * f.h):
            border_digits.append(v % p)
            v //= p
    U = B.copy()
    for l1 in range(k):
        if l1:
            U += E
            np.subtract(U, N, out=U, where=U >= N)
        V = (E * (q * l1 % N)) % N
        for l2 in range(l1, k):
            if l2 > l1:
                V += QE
                np.subtract(V, N, out=V, where=V >= N)
            idx = U + V
            is_00 = artifact.has_border and l1 == 0 and l2 == 0
            if p == 2:
                acc = int(np.bitwise_xor.reduce(mask[idx]))
                if is_00:
                    acc ^= border_packed
                bad = acc != 0
            else:
                bad = False
                for d in range(2 * f.h):
                    s = int(planes[d][idx].sum())
                    if is_00:
                        s += border_digits[d]
                    if s % p != 0:
                        bad = True
                        break
            if bad:
                return False, (l1, l2)
    return True, None


def gram_zero(artifact: CodeArtifact) -> tuple[bool, tuple[int, int] | None]:
    """Dispatch: vectorized when the field has tables, structured otherwise."""
    if artifact.field.mode == "table":
        return gram_zero_vectorized(artifact)
    return gram_zero_structured(artifact)


# --------------------------------------------------------------------------
# rank / determinant utilities (scalar Gaussian elimination)
# --------------------------------------------------------------------------

def rank(field: Field, matrix) -> int:
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] is not None),
                   None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        for i in range(r + 1, len(rows)):
            if rows[i][c] is not None:
                factor = field.mul(rows[i][c], inv)
                rows[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def is_nonsingular(field: Field, square) -> bool:
    rows = [list(r) for r in square]
    k = len(rows)
    for c in range(k):
        piv = next((i for i in range(c, k) if rows[i][c] is not None), None)
        if piv is None:
            return False
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = field.inv(rows[c][c])
        for i in range(c + 1, k):
            if rows[i][c] is not None:
                factor = field.mul(rows[i][c], inv)
                rows[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[i], rows[c])]
    return True


def matrix_to_strings(matrix) -> list[str]:
    """Rows rendered as space-separated exponents, 'z' for zero."""
    return [" ".join(Field.element_str(e) for e in row) for row in matrix]
