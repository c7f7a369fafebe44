"""Exact arithmetic in GF(p^(2h)) with designated subfield GF(q), q = p^h.

Elements travel as discrete logarithms of a fixed primitive element theta:
``None`` encodes zero and an integer e in [0, q^2 - 2] encodes theta^e.
Multiplication, inversion, powers, the q-power Frobenius, norms and subfield
membership are then pure integer arithmetic modulo q^2 - 1.  Coefficient
vectors appear only inside the two backends, which supply the operations a
logarithm table makes awkward: addition and discrete logs.

The modulus is canonical: coefficients (c_0 .. c_{2h-1}) of candidate monic
polynomials are read as base-p digits of a counter J with c_0 most
significant, and the first candidate in increasing J that is irreducible
with x primitive is selected.  theta is the class of x.

Backends:
  * table  - full exponential/log tables, fields up to 2^22 elements;
  * bsgs   - polynomial arithmetic plus baby-step giant-step logs,
             fields up to 2^40 elements.
"""

from __future__ import annotations

import functools
import math
from typing import Optional

import numpy as np

from .errors import (CapacityExceeded, DivisionByZero, NotInSubfield,
                     NotPrime, UsageError, ZeroArgument)
from .numtheory import factorize, is_prime, is_prime_power

Elt = Optional[int]
ZERO: Elt = None
ONE: Elt = 0

TABLE_LIMIT = 1 << 22
SIZE_LIMIT = 1 << 40


# --------------------------------------------------------------------------
# dense polynomials over GF(p): tuples of coefficients, index i <-> x^i
# --------------------------------------------------------------------------

def _ptrim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(tuple(out))


def _pmod(a, f, p):
    """a mod f for monic f."""
    n = len(f) - 1
    buf = list(a)
    for d in range(len(buf) - 1, n - 1, -1):
        c = buf[d]
        if c:
            buf[d] = 0
            for i in range(n):
                buf[d - n + i] = (buf[d - n + i] - c * f[i]) % p
    return _ptrim(tuple(buf))


def _pmulmod(a, b, f, p):
    return _pmod(_pmul(a, b, p), f, p)


def _ppowmod(base, e, f, p):
    result = (1,)
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, acc, f, p)
        acc = _pmulmod(acc, acc, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        inv = pow(b[-1], -1, p)
        bm = tuple(c * inv % p for c in b)  # monic version of b
        a, b = b, _pmodm(a, bm, p)
    return a


def _pmodm(a, f, p):
    if not f:
        return _ptrim(a)
    if len(f) == 1:
        return ()
    return _pmod(a, f, p)


def _is_irreducible(f, p):
    """Monic f of degree n >= 1 irreducible over GF(p)."""
    n = len(f) - 1
    x = (0, 1)
    powers = []
    t = x
    for _ in range(n):
        t = _ppowmod(t, p, f, p)
        powers.append(t)  # powers[i-1] = x^(p^i) mod f
    if powers[n - 1] != _pmod(x, f, p):
        return False
    for r in set(factorize(n)):
        g = _psub(powers[n // r - 1], x, p)
        if len(_pgcd(f, g, p)) > 1:
            return False
    return True


def _psub(a, b, p):
    m = max(len(a), len(b))
    out = [0] * m
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(tuple(out))


def _x_is_primitive(f, p, n_factors):
    N = p ** (len(f) - 1) - 1
    for r in n_factors:
        if _ppowmod((0, 1), N // r, f, p) == (1,):
            return False
    return True


def canonical_modulus(p: int, n: int, n_factors: tuple[int, ...]) -> tuple[int, ...]:
    """First monic degree-n polynomial (in digit order, constant coefficient
    most significant) that is irreducible over GF(p) with x primitive.

    Whole c_0 blocks are skipped when (-1)^n c_0 — the norm of x down to
    GF(p) — fails to generate GF(p)*, a necessary condition for x to be
    primitive; this prunes only candidates the explicit order test would
    reject, so the selected polynomial is unchanged.
    """
    pm1_factors = tuple(factorize(p - 1)) if p > 2 else ()
    sign = 1 if n % 2 == 0 else -1
    for c0 in range(1, p):
        norm_x = sign * c0 % p
        if any(pow(norm_x, (p - 1) // r, p) == 1 for r in pm1_factors):
            continue
        for rest in range(p ** (n - 1)):
            coeffs = [c0] + [0] * (n - 1)
            rem = rest
            for i in range(1, n):  # c_1 is the most significant digit of rest
                coeffs[i] = (rem // p ** (n - 1 - i)) % p
            f = tuple(coeffs) + (1,)
            if _is_irreducible(f, p) and _x_is_primitive(f, p, n_factors):
                return f
    raise ArithmeticError("no primitive modulus found")  # pragma: no cover


# --------------------------------------------------------------------------
# backends
# --------------------------------------------------------------------------

def _packed_add(va: int, vb: int, p: int) -> int:
    """Carry-free base-p digit addition of packed coefficient vectors."""
    if p == 2:
        return va ^ vb
    out, scale = 0, 1
    while va or vb:
        out += ((va + vb) % p) * scale
        va //= p
        vb //= p
        scale *= p
    return out


class _TableBackend:
    mode = "table"

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        q2 = p ** n
        self.N = q2 - 1
        exp = [0] * self.N
        if p == 2:
            red = 0
            for i in range(n):
                red |= modulus[i] << i
            top = 1 << n
            v = 1
            for e in range(self.N):
                exp[e] = v
                v <<= 1
                if v & top:
                    v = (v ^ top) ^ red
        else:
            cur = [0] * n
            cur[0] = 1
            weights = [p ** i for i in range(n)]
            for e in range(self.N):
                exp[e] = sum(c * w for c, w in zip(cur, weights))
                topc = cur[n - 1]
                for i in range(n - 1, 0, -1):
                    cur[i] = (cur[i - 1] - topc * modulus[i]) % p
                cur[0] = (-topc * modulus[0]) % p
        log = [-1] * q2
        for e, v in enumerate(exp):
            log[v] = e
        if log.count(-1) != 1:  # only the zero vector must be missing
            raise ArithmeticError("log table is not a bijection")
        self.exp = exp
        self.log = log

    def exp_packed(self, e: int) -> int:
        return self.exp[e]

    def log_packed(self, v: int) -> int:
        e = self.log[v]
        if e < 0:
            raise ZeroArgument("discrete log of zero")
        return e

    def add_exponents(self, a: int, b: int) -> Elt:
        v = _packed_add(self.exp[a], self.exp[b], self.p)
        return None if v == 0 else self.log[v]


class _BsgsBackend:
    mode = "bsgs"

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.f = modulus
        self.N = p ** n - 1
        self._weights = [p ** i for i in range(n)]
        self._exp_cache: dict[int, int] = {}
        self._mstep = math.isqrt(self.N) + 1
        self._baby: dict[int, int] | None = None
        self._giant: tuple[int, ...] | None = None

    def _pack(self, poly: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(poly, self._weights))

    def _unpack(self, v: int) -> tuple[int, ...]:
        out = []
        while v:
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    def exp_packed(self, e: int) -> int:
        e %= self.N
        hit = self._exp_cache.get(e)
        if hit is None:
            hit = self._pack(_ppowmod((0, 1), e, self.f, self.p))
            self._exp_cache[e] = hit
        return hit

    def _ensure_bsgs(self) -> None:
        if self._baby is None:
            baby = {}
            v = (1,)
            for j in range(self._mstep):
                baby[self._pack(v)] = j
                v = _pmulmod(v, (0, 1), self.f, self.p)
            self._baby = baby
            self._giant = _ppowmod((0, 1), self.N - self._mstep, self.f, self.p)

    def log_packed(self, v: int) -> int:
        if v == 0:
            raise ZeroArgument("discrete log of zero")
        self._ensure_bsgs()
        w = self._unpack(v)
        for i in range(self.N // self._mstep + 2):
            j = self._baby.get(self._pack(w))
            if j is not None:
                return (i * self._mstep + j) % self.N
            w = _pmulmod(w, self._giant, self.f, self.p)
        raise ArithmeticError("BSGS failed")  # pragma: no cover

    def add_exponents(self, a: int, b: int) -> Elt:
        v = _packed_add(self.exp_packed(a), self.exp_packed(b), self.p)
        return None if v == 0 else self.log_packed(v)


# --------------------------------------------------------------------------
# the field object
# --------------------------------------------------------------------------

class Field:
    """GF(p^(2h)) in discrete-log form; see the module docstring."""

    def __init__(self, p: int, h: int, mode: str = "auto"):
        if h < 1:
            raise UsageError(f"h must be >= 1, got {h}")
        if not is_prime(p):
            raise NotPrime(f"p must be prime, got {p}")
        self.p = p
        self.h = h
        self.q = p ** h
        self.q2 = self.q * self.q
        self.N = self.q2 - 1
        if self.q2 > SIZE_LIMIT:
            raise CapacityExceeded(f"field size {self.q2} exceeds 2^40")
        if mode == "auto":
            mode = "table" if self.q2 <= TABLE_LIMIT else "bsgs"
        if mode not in ("table", "bsgs"):
            raise UsageError(f"unknown mode {mode!r}")
        if mode == "table" and self.q2 > TABLE_LIMIT:
            raise CapacityExceeded(f"field size {self.q2} exceeds 2^22 (table mode)")
        self.mode = mode
        self.n_factors = tuple(factorize(self.N))
        self.modulus = canonical_modulus(p, 2 * h, self.n_factors)
        cls = _TableBackend if mode == "table" else _BsgsBackend
        self.backend = cls(p, 2 * h, self.modulus)
        self._np_cache: dict[str, object] = {}
        self._embed_cache: dict[int, Elt] = {}

    def __repr__(self) -> str:
        return f"Field(p={self.p}, h={self.h}, mode={self.mode!r})"

    # --- arithmetic ---------------------------------------------------------

    def add(self, a: Elt, b: Elt) -> Elt:
        if a is None:
            return b
        if b is None:
            return a
        return self.backend.add_exponents(a % self.N, b % self.N)

    def neg(self, a: Elt) -> Elt:
        if a is None or self.p == 2:
            return a
        return (a + self.N // 2) % self.N

    def sub(self, a: Elt, b: Elt) -> Elt:
        return self.add(a, self.neg(b))

    def mul(self, a: Elt, b: Elt) -> Elt:
        if a is None or b is None:
            return None
        return (a + b) % self.N

    def inv(self, a: Elt) -> Elt:
        if a is None:
            raise DivisionByZero("inverse of zero")
        return (-a) % self.N

    def pow_(self, a: Elt, e: int) -> Elt:
        if a is None:
            if e > 0:
                return None
            if e == 0:
                return 0
            raise DivisionByZero("negative power of zero")
        return (a * e) % self.N

    def frobenius_q(self, a: Elt) -> Elt:
        if a is None:
            return None
        return (a * self.q) % self.N

    def norm(self, a: Elt) -> Elt:
        """Relative norm a^(q+1) into GF(q)."""
        if a is None:
            return None
        return (a * (self.q + 1)) % self.N

    def in_subfield(self, a: Elt) -> bool:
        return a is None or a % (self.q + 1) == 0

    def norm_root(self, v: Elt) -> Elt:
        """Smallest-exponent solution of u^(q+1) = v for nonzero v in GF(q)."""
        if v is None or v % (self.q + 1) != 0:
            raise NotInSubfield(f"{v!r} is not a nonzero subfield element")
        return (v % self.N) // (self.q + 1)

    def discrete_log(self, a: Elt) -> int:
        if a is None:
            raise ZeroArgument("discrete log of zero")
        return a % self.N

    def embed_int(self, c: int) -> Elt:
        """The integer c mod p as a field element (a constant polynomial)."""
        c %= self.p
        if c == 0:
            return None
        hit = self._embed_cache.get(c)
        if hit is None:
            hit = self.backend.log_packed(c)
            self._embed_cache[c] = hit
        return hit

    # --- presentation ---------------------------------------------------------

    def coeffs(self, a: Elt) -> tuple[int, ...]:
        """Coefficient vector of a on the basis 1, x, ..., x^(2h-1)."""
        v = 0 if a is None else self.backend.exp_packed(a % self.N)
        out = []
        for _ in range(2 * self.h):
            out.append(v % self.p)
            v //= self.p
        return tuple(out)

    @staticmethod
    def element_str(a: Elt) -> str:
        return "z" if a is None else str(a)

    def to_json(self) -> dict:
        return {"p": self.p, "h": self.h,
                "modulus": list(self.modulus), "theta": "x"}

    # --- bulk tables for the vectorized Gram / enumeration paths -------------

    def _np_exp(self) -> np.ndarray:
        arr = self._np_cache.get("exp")
        if arr is None:
            if self.mode != "table":
                raise CapacityExceeded("vectorized path needs table mode")
            arr = np.asarray(self.backend.exp, dtype=np.int64)
            self._np_cache["exp"] = arr
        return arr

    def np_mask_ext(self) -> np.ndarray:
        """Packed GF(2) coefficient masks of theta^e for e in [0, 2N)."""
        arr = self._np_cache.get("mask_ext")
        if arr is None:
            base = self._np_exp()
            arr = np.concatenate([base, base])
            self._np_cache["mask_ext"] = arr
        return arr

    def np_plane_ext(self) -> tuple[np.ndarray, ...]:
        """Per-digit coefficient planes of theta^e for e in [0, 2N), odd p."""
        planes = self._np_cache.get("plane_ext")
        if planes is None:
            base = self._np_exp()
            planes = []
            for i in range(2 * self.h):
                digit = (base // self.p ** i) % self.p
                digit = digit.astype(np.int64)
                planes.append(np.concatenate([digit, digit]))
            planes = tuple(planes)
            self._np_cache["plane_ext"] = planes
        return planes


@functools.lru_cache(maxsize=None)
def build_field(p: int, h: int, mode: str = "auto") -> Field:
    """Construct (and memoize) GF(p^(2h)) with subfield GF(p^h)."""
    return Field(p, h, mode)


def field_for_q(q: int, mode: str = "auto") -> Field:
    """GF(q^2) for a prime power q."""
    pp = is_prime_power(q)
    if pp is None:
        raise NotPrime(f"q must be a prime power, got {q}")
    return build_field(pp[0], pp[1], mode)
