import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive_algebra as na
from qmds.errors import (
    CapacityExceeded,
    DivisionByZero,
    NotInSubfield,
    NotPrime,
    UsageError,
    ZeroArgument,
)
from qmds.field import Field, build_field, canonical_modulus, field_for_q

# frozen canonical moduli, coefficient order 1, x, x^2, ...
FROZEN_MODULI = {
    (2, 1): (1, 1, 1),  # x^2 + x + 1
    (3, 1): (2, 1, 1),  # x^2 + x + 2
    (5, 1): (2, 1, 1),
    (7, 1): (3, 1, 1),
    (2, 3): (1, 0, 0, 0, 0, 1, 1),  # x^6 + x^5 + 1
}


def _pad(t, width):
    return tuple(t) + (0,) * (width - len(t))


@pytest.mark.parametrize("p,h", sorted(FROZEN_MODULI))
def test_canonical_modulus_frozen(p, h):
    assert build_field(p, h).modulus == FROZEN_MODULI[(p, h)]


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (5, 2), (7, 2), (11, 2), (13, 2), (2, 4), (3, 4), (2, 6)])
def test_canonical_modulus_against_naive_scan(p, n):
    naive = na.naive_canonical_modulus(p, n)
    f = build_field(p, n // 2)
    assert f.modulus == naive
    assert na.naive_is_irreducible(naive, p)
    assert na.naive_order_of_x(naive, p) == p**n - 1


def test_canonical_modulus_direct_call():
    from qmds.numtheory import factorize

    assert canonical_modulus(5, 2, tuple(factorize(24))) == (2, 1, 1)


def test_build_field_rejects():
    with pytest.raises(NotPrime):
        build_field(4, 1)
    with pytest.raises(NotPrime):
        field_for_q(6)
    with pytest.raises(UsageError):
        build_field(5, 0)
    with pytest.raises(UsageError):
        Field(5, 1, mode="weird")


def test_capacity_limits():
    with pytest.raises(CapacityExceeded):
        Field(2, 12, mode="table")  # 2^24 > 2^22
    with pytest.raises(CapacityExceeded):
        Field(3, 8, mode="table")  # 3^16 > 2^22
    with pytest.raises(CapacityExceeded):
        Field(2, 21)  # 2^42 > 2^40 in any mode
    assert Field(2, 12, mode="auto").mode == "bsgs"
    assert Field(13, 3, mode="auto").mode == "bsgs"
    assert Field(2, 11, mode="auto").mode == "table"  # 2^22 is exactly the limit


# --- arithmetic against the coefficient-tuple model ----------------------------


@pytest.mark.parametrize("p,h", [(5, 1), (3, 1), (2, 2)])
def test_exhaustive_arithmetic_matches_poly_model(p, h):
    f = build_field(p, h)
    model = na.PolyModel(p, f.modulus)
    powers = model.x_powers()
    width = 2 * h
    # the exponential table itself
    for e, vec in enumerate(powers):
        assert f.coeffs(e) == _pad(vec, width)
    assert f.coeffs(None) == (0,) * width
    elems = [None] + list(range(f.N))

    def vec(a):
        return () if a is None else powers[a]

    for a in elems:
        for b in elems:
            got = f.add(a, b)
            assert _pad(vec(got) if got is not None else (), width) == _pad(
                model.add(vec(a), vec(b)), width
            )
            got = f.mul(a, b)
            assert _pad(vec(got) if got is not None else (), width) == _pad(
                model.mul(vec(a), vec(b)), width
            )


@pytest.mark.parametrize("p,h", [(3, 1), (2, 2), (7, 1)])
def test_backends_agree_exhaustively(p, h):
    table = Field(p, h, mode="table")
    bsgs = Field(p, h, mode="bsgs")
    assert table.modulus == bsgs.modulus
    N = table.N
    for e in range(N):
        assert table.backend.exp_packed(e) == bsgs.backend.exp_packed(e)
    for v in range(1, N + 1):
        assert table.backend.log_packed(v % (N + 1)) == bsgs.backend.log_packed(v)
    for a in range(N):
        for b in range(N):
            assert table.backend.add_exponents(a, b) == bsgs.backend.add_exponents(a, b)


def test_backends_agree_sampled_gf25_squared():
    import random

    table = Field(5, 2, mode="table")
    bsgs = Field(5, 2, mode="bsgs")
    rng = random.Random(20240817)
    for _ in range(400):
        a, b = rng.randrange(table.N), rng.randrange(table.N)
        assert table.backend.add_exponents(a, b) == bsgs.backend.add_exponents(a, b)
        assert table.backend.exp_packed(a) == bsgs.backend.exp_packed(a)


def test_log_zero_raises(gf25):
    with pytest.raises(ZeroArgument):
        gf25.backend.log_packed(0)
    with pytest.raises(ZeroArgument):
        gf25.discrete_log(None)


# --- algebraic laws -------------------------------------------------------------


def elements(f):
    return st.one_of(st.none(), st.integers(min_value=0, max_value=f.N - 1))


@pytest.mark.parametrize("p,h", [(5, 1), (7, 1), (2, 3)])
def test_field_axioms_random(p, h):
    f = build_field(p, h)

    @given(elements(f), elements(f), elements(f))
    def inner(a, b, c):
        assert f.add(a, b) == f.add(b, a)
        assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
        assert f.add(a, f.neg(a)) is None
        assert f.sub(a, b) == f.add(a, f.neg(b))
        if a is not None:
            assert f.mul(a, f.inv(a)) == 0
            assert f.pow_(a, f.N) == 0
        assert f.pow_(a, 3) == f.mul(a, f.mul(a, a))

    inner()


def test_pow_edge_cases(gf25):
    assert gf25.pow_(None, 0) == 0
    assert gf25.pow_(None, 5) is None
    with pytest.raises(DivisionByZero):
        gf25.pow_(None, -1)
    with pytest.raises(DivisionByZero):
        gf25.inv(None)
    assert gf25.pow_(7, -1) == gf25.inv(7)


@pytest.mark.parametrize("p,h", [(5, 1), (7, 1), (2, 3), (3, 2)])
def test_frobenius_and_subfield(p, h):
    f = build_field(p, h)
    q = f.q
    # the subfield is exactly the fixed field of the q-power map
    count = 0
    for e in range(f.N):
        fixed = f.frobenius_q(e) == e
        assert fixed == f.in_subfield(e)
        assert fixed == (e % (q + 1) == 0)
        count += fixed
        assert f.frobenius_q(f.frobenius_q(e)) == e  # involution over GF(q^2)
    assert count == q - 1
    assert f.in_subfield(None) and f.frobenius_q(None) is None


@pytest.mark.parametrize("p,h", [(5, 1), (2, 3)])
def test_frobenius_is_additive(p, h):
    f = build_field(p, h)
    for a in range(f.N):
        for b in range(a, f.N):
            assert f.frobenius_q(f.add(a, b)) == f.add(
                f.frobenius_q(a), f.frobenius_q(b)
            )


def test_norm_properties(gf49):
    f = gf49
    q = f.q
    for e in range(f.N):
        v = f.norm(e)
        assert f.in_subfield(v)
        assert v == f.mul(e, f.frobenius_q(e))
    # multiplicative and surjective onto the subfield
    images = {f.norm(e) for e in range(f.N)}
    assert images == {e for e in range(f.N) if e % (q + 1) == 0}


def test_norm_root(gf25):
    f = gf25
    for v in range(0, f.N, f.q + 1):
        u = f.norm_root(v)
        assert f.norm(u) == v
        assert u < f.N // (f.q + 1)  # smallest of the q+1 preimages
    with pytest.raises(NotInSubfield):
        f.norm_root(1)  # theta itself is not in GF(5)
    with pytest.raises(NotInSubfield):
        f.norm_root(None)


def test_frozen_subfield_logs():
    gf25 = build_field(5, 1)
    assert gf25.embed_int(2) == 6
    assert gf25.embed_int(3) == 18
    assert gf25.norm_root(6) == 1
    gf9 = build_field(3, 1)
    assert gf9.embed_int(2) == 4


@pytest.mark.parametrize("p,h", [(2, 1), (3, 1), (5, 1), (7, 1)])
def test_embed_int_is_a_ring_map(p, h):
    f = build_field(p, h)
    for a in range(p):
        for b in range(p):
            ea, eb = f.embed_int(a), f.embed_int(b)
            assert f.add(ea, eb) == f.embed_int((a + b) % p)
            assert f.mul(ea, eb) == f.embed_int(a * b % p)
    assert f.embed_int(0) is None
    assert f.embed_int(p) is None
    assert f.embed_int(1) == 0
    embedded = {f.embed_int(c) for c in range(1, p)}
    assert len(embedded) == p - 1
    assert all(f.in_subfield(e) for e in embedded)


def test_presentation(gf25):
    assert Field.element_str(None) == "z"
    assert Field.element_str(17) == "17"
    assert gf25.to_json() == {"p": 5, "h": 1, "modulus": [2, 1, 1], "theta": "x"}
    assert repr(gf25) == "Field(p=5, h=1, mode='table')"


def test_build_field_is_memoized():
    assert build_field(5, 1) is build_field(5, 1)
    assert field_for_q(25).q == 25 and field_for_q(25).p == 5
