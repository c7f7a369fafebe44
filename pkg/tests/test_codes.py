import pytest

from qmds.codes import (
    eval_code,
    extend_c1,
    gram_entry,
    gram_hermitian,
    gram_zero,
    gram_zero_scalar,
    gram_zero_structured,
    gram_zero_vectorized,
    hermitian_ip,
    is_nonsingular,
    matrix_to_strings,
    rank,
    weighted_pair_sum,
)
from qmds.constructions import _build_evalset
from qmds.errors import DimensionTooLarge, LengthMismatch, UsageError
from qmds.evalsets import subgroup_set
from qmds.field import build_field, field_for_q

# (construction, q, params, max self-orthogonal k) for the Gram agreement pool
POOL = [
    ("c1", 5, {"m": 3}, 2),
    ("c1", 17, {"m": 9}, 8),
    ("char2_union", 32, {"m1": 3, "m2": 11}, 16),
    ("odd_union", 29, {"m1": 3, "m2": 5}, 16),
    ("half_power", 13, {"m": 6}, 8),
    ("half_power_union", 31, {"ms": (6, 10)}, 18),
    ("mixed_union", 13, {"m1": 7, "m2": 6}, 6),
]

SHIFT = {"c1": 1, "char2_union": 1, "odd_union": 1,
         "half_power": 0, "half_power_union": 0, "mixed_union": 0}


def raw_artifact(construction, q, params, k):
    """Evaluation matrix with any number of rows, bypassing the oracle cap."""
    f = field_for_q(q)
    if construction == "c1_ext":
        return extend_c1(f, params["m"], k)
    es, _ = _build_evalset(construction, f, params)
    return eval_code(f, es, k, SHIFT[construction], label=construction)


def test_eval_code_rows_explicitly(gf25):
    art = eval_code(gf25, subgroup_set(gf25, 3), 2, shift=1)
    pts = tuple(range(0, 24, 3))
    assert art.n == 8
    assert art.row(0) == pts  # unit weights: row l is x^(1+l) on the points
    assert art.row(1) == tuple(2 * e % 24 for e in pts)
    assert art.matrix() == (art.row(0), art.row(1))


def test_eval_code_guards(gf25):
    es = subgroup_set(gf25, 3)
    with pytest.raises(UsageError):
        eval_code(gf25, es, 0, 1)
    with pytest.raises(DimensionTooLarge):
        eval_code(gf25, es, 9, 1)
    with pytest.raises(DimensionTooLarge):
        extend_c1(gf25, 3, 10)
    with pytest.raises(UsageError):
        extend_c1(gf25, 3, 1)


def test_hermitian_ip_small(gf25):
    f = gf25
    # <u, v> = sum u_i v_i^5 computed by hand for a 2-vector
    u, v = (1, None), (3, 7)
    assert hermitian_ip(f, u, v) == f.mul(1, f.pow_(3, 5))
    assert hermitian_ip(f, (None, None), v) is None
    with pytest.raises(LengthMismatch):
        hermitian_ip(f, (1,), (1, 2))


def test_conjugate_symmetry(gf25):
    art = extend_c1(gf25, 3, 3)
    g = gram_hermitian(gf25, art.matrix())
    for i in range(3):
        for j in range(3):
            assert g[j][i] == gf25.frobenius_q(g[i][j])


@pytest.mark.parametrize("construction,q,params,kmax", POOL,
                         ids=[p[0] + str(p[1]) for p in POOL])
def test_gram_routes_agree(construction, q, params, kmax):
    good = raw_artifact(construction, q, params, kmax)
    assert gram_zero_structured(good) == (True, None)
    assert gram_zero_vectorized(good) == (True, None)
    assert gram_zero_scalar(good.field, good.matrix()) == (True, None)
    assert gram_zero(good) == (True, None)
    bad = raw_artifact(construction, q, params, kmax + 1)
    res_structured = gram_zero_structured(bad)
    assert res_structured == gram_zero_vectorized(bad)
    assert res_structured == gram_zero_scalar(bad.field, bad.matrix())
    ok, witness = res_structured
    assert not ok and witness is not None
    l1, l2 = witness
    assert gram_entry(bad, l1, l2) is not None


def test_gram_routes_agree_extended():
    good = raw_artifact("c1_ext", 17, {"m": 9}, 9)
    assert gram_zero_structured(good) == (True, None)
    assert gram_zero_vectorized(good) == (True, None)
    assert gram_zero_scalar(good.field, good.matrix()) == (True, None)
    bad = raw_artifact("c1_ext", 17, {"m": 9}, 10)
    assert gram_zero_structured(bad) == gram_zero_vectorized(bad)
    assert not gram_zero_structured(bad)[0]


def test_gram_entry_equals_matrix_inner_product():
    for construction, q, params, kmax in POOL:
        art = raw_artifact(construction, q, params, kmax)
        f = art.field
        mat = art.matrix()
        for l1 in range(art.k):
            for l2 in range(l1, min(art.k, l1 + 3)):
                assert gram_entry(art, l1, l2) == hermitian_ip(f, mat[l1], mat[l2])


def test_weighted_pair_sum_is_the_borderless_entry(gf169):
    art = raw_artifact("mixed_union", 13, {"m1": 7, "m2": 6}, 6)
    for l1 in range(6):
        for l2 in range(6):
            assert weighted_pair_sum(gf169, art.evalset, art.shift, l1, l2) == \
                gram_entry(art, l1, l2)


def test_extended_border_makes_row0_self_orthogonal(gf25):
    f = gf25
    art = extend_c1(f, 3, 3)
    assert art.has_border and art.border_entry is not None
    r0 = art.row(0)
    assert r0[0] == art.border_entry
    assert art.row(1)[0] is None and art.row(2)[0] is None
    assert hermitian_ip(f, r0, r0) is None
    # without the border, row 0 pairs to a nonzero sum with itself
    bare = eval_code(f, subgroup_set(f, 3), 3, shift=0)
    assert hermitian_ip(f, bare.row(0), bare.row(0)) is not None


def test_column_scales_are_norm_roots():
    art = raw_artifact("mixed_union", 13, {"m1": 7, "m2": 6}, 6)
    f = art.field
    for scale, w in zip(art.column_scales, art.evalset.weights):
        assert f.norm(scale) == w


def test_rank_full_for_pool_artifacts():
    for construction, q, params, kmax in POOL:
        art = raw_artifact(construction, q, params, kmax)
        assert rank(art.field, art.matrix()) == art.k


def test_rank_and_nonsingular_edge_cases(gf25):
    f = gf25
    assert rank(f, []) == 0
    assert rank(f, [(0, 0), (0, 0)]) == 1  # duplicate rows
    assert rank(f, [(None, None)]) == 0
    assert is_nonsingular(f, [(0, None), (None, 0)])
    assert not is_nonsingular(f, [(0, 0), (0, 0)])
    assert not is_nonsingular(f, [(None, 0), (None, 5)])


def test_matrix_to_strings(gf25):
    art = extend_c1(gf25, 3, 2)
    lines = matrix_to_strings(art.matrix())
    assert len(lines) == 2
    assert lines[0].split()[0] == str(art.border_entry)
    assert lines[1].split()[0] == "z"
    assert all(tok == "z" or tok.isdigit() for line in lines for tok in line.split())
