import json
import math

import pytest

from qmds.codes import gram_zero_structured
from qmds.constructions import (
    CONSTRUCTION_IDS,
    Certificate,
    adjacent_pair,
    build,
    code_length,
    conditions_for,
    construct_c1,
    construct_c1_extended,
    construct_char2_union,
    construct_half_power,
    construct_half_power_union,
    construct_mixed_union,
    construct_odd_union,
    doubled_pair_divisors,
    formula_d_max,
    half_split_pair,
    max_dim_oracle,
    quarter_split_pair,
    searched_pair,
    sweep,
)
from qmds.errors import (
    BadDivisor,
    CapacityExceeded,
    DimensionExceedsOracle,
    HypothesisViolated,
    NotChar2,
    NotCoprime,
    NotPrime,
    UsageError,
)


# --- hypothesis validation ------------------------------------------------------


def test_validation_c1():
    with pytest.raises(HypothesisViolated):
        construct_c1(17, 6)  # even m
    with pytest.raises(HypothesisViolated):
        construct_c1(17, 1)  # too small
    with pytest.raises(BadDivisor):
        construct_c1(17, 5)  # 5 does not divide 18
    with pytest.raises(NotPrime):
        construct_c1(6, 3)
    with pytest.raises(UsageError):
        build("mystery", 17, m=3)
    with pytest.raises(UsageError):
        build("c1", 17, m=3, want_matrix="perhaps")


def test_validation_char2_union():
    with pytest.raises(NotChar2):
        construct_char2_union(13, 3, 7)
    with pytest.raises(HypothesisViolated):
        construct_char2_union(8, 9, 1)  # m2 = 1 is not admissible
    with pytest.raises(HypothesisViolated):
        construct_char2_union(32, 11, 3)  # requires m1 < m2
    with pytest.raises(NotCoprime):
        construct_char2_union(8, 3, 9)
    with pytest.raises(BadDivisor):
        construct_char2_union(32, 3, 7)


def test_validation_odd_union():
    with pytest.raises(HypothesisViolated):
        construct_odd_union(8, 3, 7)  # q must be odd
    with pytest.raises(NotCoprime):
        construct_odd_union(89, 3, 9)
    with pytest.raises(BadDivisor):
        construct_odd_union(29, 3, 7)


def test_validation_half_power():
    with pytest.raises(HypothesisViolated):
        construct_half_power(8, 6)  # q must be odd
    with pytest.raises(HypothesisViolated):
        construct_half_power(13, 4)  # below the minimum 6
    with pytest.raises(BadDivisor):
        construct_half_power(13, 8)


def test_validation_half_power_union():
    with pytest.raises(HypothesisViolated):
        construct_half_power_union(31, (6,))  # need two divisors
    with pytest.raises(HypothesisViolated):
        construct_half_power_union(31, (6, 6))
    # lcm(8, 10) = 40 = q - 1 at q = 41, so the pair is admissible in either order
    cert = construct_half_power_union(41, (10, 8), want_matrix="never")
    assert cert.params["ms"] == (8, 10)


def test_validation_half_power_union_lcm():
    # (6, 10) at q = 31: lcm = 30 = q - 1 passes; (6, 30)... lcm 30 passes too
    construct_half_power_union(31, (6, 10), want_matrix="never")
    with pytest.raises(HypothesisViolated):
        construct_half_power_union(61, (6, 10))  # lcm 30 != 60


def test_validation_mixed_union():
    with pytest.raises(HypothesisViolated):
        construct_mixed_union(8, 3, 2)  # q must be odd
    with pytest.raises(BadDivisor):
        construct_mixed_union(13, 3, 6)  # 3 does not divide 14
    with pytest.raises(HypothesisViolated):
        construct_mixed_union(13, 7, 5)  # m2 must be even


def test_validation_half_power_union_41_8_10_is_wrong_guard():
    # guard test above asserted no raise; double-check the lcm rule text:
    assert math.lcm(8, 10) == 40 == 41 - 1


# --- certificates ----------------------------------------------------------------


def test_c1_certificate_fields():
    cert = construct_c1(17, 9)
    assert isinstance(cert, Certificate)
    assert (cert.q, cert.p, cert.h) == (17, 17, 1)
    assert cert.n == 32 and cert.k == 8 == cert.max_k_oracle
    assert cert.conditions == ((32, 18),)
    assert cert.verified_level == "FULL_MATRIX"
    assert cert.quantum.triple() == (32, 16, 9)
    assert cert.quantum.singleton_ok
    assert cert.formula_d_max == 9
    assert cert.discrepancies == ()
    assert cert.artifact is not None and cert.artifact.k == 8


def test_k_defaults_and_caps():
    assert construct_c1(17, 9).k == 8
    assert construct_c1_extended(17, 9).k == 9  # one border row on top
    assert construct_c1(17, 9, k=3).k == 3
    with pytest.raises(DimensionExceedsOracle):
        construct_c1(17, 9, k=9)
    with pytest.raises(DimensionExceedsOracle):
        construct_c1_extended(17, 9, k=11)
    with pytest.raises(UsageError):
        construct_c1(17, 9, k=0)
    with pytest.raises(UsageError):
        construct_c1_extended(17, 9, k=1)


def test_oracle_sharpness_for_single_condition_routes():
    # at the oracle bound the Gram matrix is exactly zero; one row beyond, the
    # raw evaluation matrix has a nonzero entry
    from test_codes import raw_artifact

    for construction, q, params in [
        ("c1", 17, {"m": 9}),
        ("c1", 5, {"m": 3}),
        ("half_power", 13, {"m": 6}),
    ]:
        kmax = max_dim_oracle(construction, q, params)
        good = raw_artifact(construction, q, params, kmax)
        assert gram_zero_structured(good) == (True, None)
        ok, _ = gram_zero_structured(raw_artifact(construction, q, params, kmax + 1))
        assert not ok


def test_build_rejects_unsound_dimension_request():
    with pytest.raises(DimensionExceedsOracle):
        construct_half_power(13, 6, k=9)


def test_formula_d_max_frozen():
    assert formula_d_max("c1", 17, {"m": 9}) == 9
    assert formula_d_max("c1_ext", 17, {"m": 9}) == 9
    assert formula_d_max("half_power", 13, {"m": 6}) == 9
    assert formula_d_max("mixed_union", 13, {"m1": 7, "m2": 6}) == 7
    assert formula_d_max("half_power_union", 31, {"ms": (6, 10)}) == 19
    assert formula_d_max("char2_union", 64, {"m1": 5, "m2": 13}) == 34


def test_code_length_routes():
    assert code_length("c1", 17, {"m": 9}) == 32
    assert code_length("c1_ext", 17, {"m": 9}) == 33
    assert code_length("char2_union", 32, {"m1": 3, "m2": 11}) == 372
    assert code_length("odd_union", 29, {"m1": 3, "m2": 5}) == 392
    assert code_length("half_power", 13, {"m": 6}) == 28
    assert code_length("half_power_union", 31, {"ms": (6, 10)}) == 224
    assert code_length("mixed_union", 13, {"m1": 7, "m2": 6}) == 48


def test_conditions_for_shapes():
    assert conditions_for("c1", 17, {"m": 9}) == ((32, 18),)
    assert conditions_for("char2_union", 32, {"m1": 3, "m2": 11}) == (
        (341, 33),
        (93, 33),
    )
    assert conditions_for("half_power", 13, {"m": 6}) == ((28, 7),)
    assert conditions_for("mixed_union", 13, {"m1": 7, "m2": 6}) == (
        (24, 14),
        (28, 7),
    )


def test_mixed_union_certificate_reports_H():
    cert = construct_mixed_union(13, 7, 6)
    assert cert.extras["H"] == 14
    assert cert.verified_level == "FULL_MATRIX"
    cond_only = construct_mixed_union(13, 7, 6, want_matrix="never")
    assert cond_only.extras["H"] == 14
    assert cond_only.verified_level == "CONDITION_ONLY"
    assert cond_only.artifact is None


def test_want_matrix_require_on_oversized_field():
    with pytest.raises(CapacityExceeded):
        construct_mixed_union(11969, 105, 176, want_matrix="require")
    cert = construct_mixed_union(11969, 105, 176, want_matrix="never")
    assert cert.verified_level == "CONDITION_ONLY"
    assert cert.max_k_oracle == 6040
    assert cert.extras["H"] > 0


def test_formula_bound_is_tight_against_oracle():
    # across every construction family tried, the closed-form distance bound
    # exactly matches the dimension oracle (max k = d_formula - 1), so the
    # certificate carries no discrepancy note
    for cert in [
        construct_c1(17, 3, want_matrix="never"),
        construct_c1(17, 9, want_matrix="never"),
        construct_half_power(13, 6, want_matrix="never"),
        construct_mixed_union(13, 7, 6, want_matrix="never"),
        construct_half_power_union(31, (6, 10), want_matrix="never"),
        construct_odd_union(29, 3, 5, want_matrix="never"),
        construct_char2_union(32, 3, 11, want_matrix="never"),
    ]:
        assert cert.max_k_oracle == cert.formula_d_max - 1
        assert cert.discrepancies == ()


def test_certificate_to_json_deterministic_and_shaped():
    a = construct_c1(8, 3, k=4).to_json()
    b = construct_c1(8, 3, k=4).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["construction"] == "c1"
    assert a["quantum"] == [21, 13, 5]
    assert a["conditions"] == [[21, 9]]
    assert len(a["matrix"]) == 4  # embedded for small FULL_MATRIX certificates
    assert all(isinstance(rowstr, str) for rowstr in a["matrix"])
    nomat = construct_c1(8, 3, k=4).to_json(include_matrix=False)
    assert "matrix" not in nomat
    cond = construct_c1(8, 3, k=4, want_matrix="never").to_json()
    assert "matrix" not in cond


# --- parameter mappers ------------------------------------------------------------


def test_adjacent_pair():
    assert adjacent_pair(13, 7) == {"m1": 7, "m2": 6}
    assert adjacent_pair(17, 9) == {"m1": 9, "m2": 8}
    with pytest.raises(BadDivisor):
        adjacent_pair(13, 5)  # 5 does not divide 14
    with pytest.raises(BadDivisor):
        adjacent_pair(19, 5)  # 4 does not divide 18


def test_half_split_pair():
    assert half_split_pair(13) == {"m1": 7, "m2": 6}
    assert half_split_pair(29) == {"m1": 15, "m2": 14}
    with pytest.raises(HypothesisViolated):
        half_split_pair(19)  # q = 3 mod 4


def test_quarter_split_pair():
    assert quarter_split_pair(169, 1) == {"m1": 5, "m2": 6}
    assert quarter_split_pair(6889, 3) == {"m1": 13, "m2": 14}
    with pytest.raises(HypothesisViolated):
        quarter_split_pair(169, 0)
    # the advertised length identity n = N / (2kk + 1)
    for q, kk in [(169, 1), (6889, 3)]:
        params = quarter_split_pair(q, kk)
        n = code_length("mixed_union", q, params)
        assert n == (q * q - 1) // (2 * kk + 1)


def test_searched_pair():
    assert searched_pair(11969, 176, 105) == {"m1": 105, "m2": 176}
    with pytest.raises(HypothesisViolated):
        searched_pair(11969, 176, 103)


def test_doubled_pair_divisors():
    assert doubled_pair_divisors(31, 3, 5) == (6, 10)
    assert doubled_pair_divisors(71, 5, 7) == (10, 14)
    with pytest.raises(HypothesisViolated):
        doubled_pair_divisors(31, 5, 3)
    with pytest.raises(NotCoprime):
        doubled_pair_divisors(271, 9, 15)  # 2*9*15 + 1 = 271 but gcd = 3
    with pytest.raises(HypothesisViolated):
        doubled_pair_divisors(29, 3, 5)  # q != 2ab + 1


# --- sweeps ------------------------------------------------------------------------


def test_sweep_c1():
    certs = sweep("c1", 17)
    assert [(c.params["m"], c.max_k_oracle) for c in certs] == [(3, 10), (9, 8)]
    assert all(c.verified_level == "CONDITION_ONLY" for c in certs)


def test_sweep_mixed_skips_pairs_without_a_shift():
    certs = sweep("mixed_union", 13)
    pairs = [(c.params["m1"], c.params["m2"]) for c in certs]
    assert pairs == [(7, 4), (7, 6), (7, 12)]  # (7, 2) admits no shift
    assert all(c.extras["H"] == 14 for c in certs)


def test_sweep_char2():
    certs = sweep("char2_union", 32)
    assert [(c.params["m1"], c.params["m2"]) for c in certs] == [(3, 11)]


def test_sweep_half_power_union():
    certs = sweep("half_power_union", 31)
    # every even-divisor pair of q - 1 = 30 whose lcm is exactly 30
    assert [tuple(c.params["ms"]) for c in certs] == [(6, 10), (6, 30), (10, 30)]


def test_sweep_deterministic():
    a = [c.to_json() for c in sweep("mixed_union", 29)]
    b = [c.to_json() for c in sweep("mixed_union", 29)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_sweep_rejects_unknown():
    with pytest.raises(UsageError):
        sweep("mystery", 13)


def test_construction_id_list_is_frozen():
    assert CONSTRUCTION_IDS == (
        "c1",
        "c1_ext",
        "char2_union",
        "odd_union",
        "half_power",
        "half_power_union",
        "mixed_union",
    )
