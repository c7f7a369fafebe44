"""Recompute every bundled reference table and grade each row.

Verdicts per row:

  MATCH               every printed value agrees with recomputation and the
                      printed dimension/distance sits inside the proven range
  ARITHMETIC_MISMATCH at least one printed number (length, alphabet
                      subscript, triple consistency, distance bound) differs
                      from the recomputed value
  HYPOTHESIS_FAIL     the row's parameters violate the construction's
                      arithmetic preconditions (nothing to recompute against)

Independently of the verdict, each non-failing row is rebuilt at the
recomputed parameters and its maximal admissible dimension: verification
level FULL_MATRIX means the matrix-level Gram check ran and passed within
budget, CONDITION_ONLY means the claim rests on the vanishing conditions
plus the dimension oracle.

The summary table of distance families is cross-checked symbolically on the
worked instances (exact rational arithmetic); rows citing prior literature
are recorded as EXTERNAL.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import constructions, tables
from .constructions import (adjacent_pair, build, formula_d_max,
                            max_dim_oracle, quarter_split_pair, searched_pair)
from .errors import HypothesisViolated, NotPrime, UsageError
from .evalsets import parity_union_size, union_size
from .numtheory import is_prime_power, quadratic_family_search

MATCH = "MATCH"
MISMATCH = "ARITHMETIC_MISMATCH"
HYP_FAIL = "HYPOTHESIS_FAIL"

LEVEL_FULL = "FULL_MATRIX"
LEVEL_COND = "CONDITION_ONLY"
LEVEL_NONE = "NONE"


@dataclass(frozen=True)
class AuditRow:
    table: int
    row: int
    construction: str
    printed: dict
    recomputed: dict
    verdict: str
    level: str
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "table": self.table, "row": self.row,
            "construction": self.construction,
            "printed": _jsonable(self.printed),
            "recomputed": _jsonable(self.recomputed),
            "verdict": self.verdict, "level": self.level,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FamilyCheck:
    row: int
    family: str
    status: str  # MATCH / MISMATCH / EXTERNAL
    claimed: str
    instances: tuple[dict, ...]
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {"row": self.row, "family": self.family, "status": self.status,
                "claimed": self.claimed,
                "instances": [_jsonable(i) for i in self.instances],
                "notes": list(self.notes)}


@dataclass(frozen=True)
class AuditReport:
    rows: tuple[AuditRow, ...]
    families: tuple[FamilyCheck, ...]

    def row(self, table: int, row: int) -> AuditRow:
        for r in self.rows:
            if r.table == table and r.row == row:
                return r
        raise KeyError((table, row))

    def family(self, row: int) -> FamilyCheck:
        for f in self.families:
            if f.row == row:
                return f
        raise KeyError(row)

    @property
    def has_hypothesis_fail(self) -> bool:
        return any(r.verdict == HYP_FAIL for r in self.rows)

    def summary(self) -> dict:
        out = {
            "rows_total": len(self.rows),
            "match": sum(r.verdict == MATCH for r in self.rows),
            "arithmetic_mismatch": sum(r.verdict == MISMATCH for r in self.rows),
            "hypothesis_fail": sum(r.verdict == HYP_FAIL for r in self.rows),
            "full_matrix": sum(r.level == LEVEL_FULL for r in self.rows),
            "condition_only": sum(r.level == LEVEL_COND for r in self.rows),
            "families_match": sum(f.status == MATCH for f in self.families),
            "families_mismatch": sum(f.status == MISMATCH for f in self.families),
            "families_external": sum(f.status == "EXTERNAL" for f in self.families),
        }
        return out

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows],
                "families": [f.to_json() for f in self.families],
                "summary": self.summary()}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# --------------------------------------------------------------------------
# shared helpers
# --------------------------------------------------------------------------

def _attempt_build(construction: str, q: int, params: dict, full: bool,
                   notes: list[str]) -> str:
    """Rebuild at the maximal admissible dimension; returns the level."""
    try:
        cert = build(construction, q,
                     want_matrix=("auto" if full else "never"), **params)
    except (HypothesisViolated, NotPrime) as exc:  # pragma: no cover
        notes.append(f"rebuild failed: {exc}")
        return LEVEL_NONE
    notes.append(f"verified at k = {cert.k} "
                 f"({'Gram matrix is zero' if cert.verified_level == LEVEL_FULL else 'conditions only'})")
    return cert.verified_level


def _mism(notes: list[str], what: str, printed, recomputed) -> bool:
    notes.append(f"printed {what} {printed}; recomputed {recomputed}")
    return True


# --------------------------------------------------------------------------
# per-table audits
# --------------------------------------------------------------------------

def _audit_table1(full: bool) -> list[AuditRow]:
    out = []
    for row in tables.TABLE1:
        q, m, k = row["q"], row["m"], row["k"]
        notes: list[str] = []
        base = max_dim_oracle("c1_ext", q, {"m": m})
        k_max = base + 1
        n = (q * q - 1) // m + 1
        expected_code = (n, n - 2 * k, k + 1)
        bad = False
        if row["code"] != expected_code:
            bad = _mism(notes, "triple", row["code"], expected_code)
        if row["sub"] != q:
            bad = _mism(notes, "subscript", row["sub"], q)
        if k > k_max:
            bad = _mism(notes, "dimension above oracle", k, k_max)
        level = _attempt_build("c1_ext", q, {"m": m}, full, notes)
        out.append(AuditRow(
            1, row["row"], "c1_ext", dict(row),
            {"n": n, "max_k": k_max, "code_for_printed_k": expected_code,
             "formula_d_max": formula_d_max("c1_ext", q, {"m": m})},
            MISMATCH if bad else MATCH, level, tuple(notes)))
    return out


def _audit_table2(full: bool) -> list[AuditRow]:
    out = []
    for row in tables.TABLE2:
        q = 2 ** row["h"]
        m1, m2, k = row["m1"], row["m2"], row["k"]
        params = {"m1": m1, "m2": m2}
        notes: list[str] = []
        k_max = max_dim_oracle("char2_union", q, params)
        n = parity_union_size(q * q - 1, (m1, m2))
        bad = False
        if row["sub"] != q:
            bad = _mism(notes, "subscript", row["sub"], q)
        if row["code"][0] != n:
            bad = _mism(notes, "length", row["code"][0], n)
        k_triple = (row["code"][0] - row["code"][1]) // 2
        if k_triple != k:
            bad = _mism(notes, "dimension column (triple implies"
                        f" k = {k_triple})", k, k_triple)
        if row["code"] != (n, n - 2 * k_triple, k_triple + 1):
            bad = _mism(notes, "triple", row["code"],
                        (n, n - 2 * k_triple, k_triple + 1))
        if max(k, k_triple) > k_max:
            bad = _mism(notes, "dimension above oracle", max(k, k_triple), k_max)
        if "body_text_code" in row:
            notes.append(f"body text also prints {row['body_text_code']} "
                         f"for this entry")
        notes.append(f"oracle max k = {k_max}")
        level = _attempt_build("char2_union", q, params, full, notes)
        out.append(AuditRow(
            2, row["row"], "char2_union", dict(row),
            {"q": q, "n": n, "max_k": k_max,
             "formula_d_max": formula_d_max("char2_union", q, params)},
            MISMATCH if bad else MATCH, level, tuple(notes)))
    return out


def _audit_table3(full: bool) -> list[AuditRow]:
    out = []
    for row in tables.TABLE3:
        q, m1, m2 = row["q"], row["m1"], row["m2"]
        params = {"m1": m1, "m2": m2}
        notes: list[str] = []
        k_max = max_dim_oracle("odd_union", q, params)
        n = union_size(q * q - 1, (m1, m2))
        bad = False
        if row["sub"] != q:
            bad = _mism(notes, "subscript", row["sub"], q)
        if row["n"] != n:
            bad = _mism(notes, "length", row["n"], n)
        if row["k_max"] != k_max:
            bad = _mism(notes, "dimension range", row["k_max"], k_max)
        level = _attempt_build("odd_union", q, params, full, notes)
        out.append(AuditRow(
            3, row["row"], "odd_union", dict(row),
            {"n": n, "max_k": k_max,
             "formula_d_max": formula_d_max("odd_union", q, params)},
            MISMATCH if bad else MATCH, level, tuple(notes)))
    return out


def _audit_even_union(table_id: int, rows, full: bool) -> list[AuditRow]:
    """Tables of even-subgroup unions built from odd tuples with q = 2*prod+1."""
    out = []
    for row in rows:
        parts = tuple(row[key] for key in ("a", "b", "c") if key in row)
        q = row["q"]
        ms = tuple(2 * a for a in parts)
        params = {"ms": ms}
        notes: list[str] = []
        prod = 1
        for a in parts:
            prod *= a
        if q != 2 * prod + 1:
            notes.append(f"q column {q} is not 2*{prod}+1")  # pragma: no cover
        if is_prime_power(q) is None:
            notes.append(f"q = {q} is not a prime power; hypotheses fail")
            out.append(AuditRow(table_id, row["row"], "half_power_union",
                                dict(row), {"q": q, "ms": ms}, HYP_FAIL,
                                LEVEL_NONE, tuple(notes)))
            continue
        k_max = max_dim_oracle("half_power_union", q, params)
        n = union_size(q * q - 1, ms)
        d_max = formula_d_max("half_power_union", q, params)
        bad = False
        if row["sub"] != q:
            bad = _mism(notes, "subscript", row["sub"], q)
        if row["n"] != n:
            bad = _mism(notes, "length", row["n"], n)
        if row["d_max"] != d_max:
            bad = _mism(notes, "distance bound", row["d_max"], d_max)
        notes.append(f"oracle max k = {k_max}")
        level = _attempt_build("half_power_union", q, params, full, notes)
        out.append(AuditRow(
            table_id, row["row"], "half_power_union", dict(row),
            {"n": n, "max_k": k_max, "formula_d_max": d_max, "ms": ms},
            MISMATCH if bad else MATCH, level, tuple(notes)))
    return out


def _audit_mixed(table_id: int, rows, full: bool) -> list[AuditRow]:
    out = []
    for row in rows:
        q = row["q"]
        notes: list[str] = []
        try:
            if "m" in row:
                params = adjacent_pair(q, row["m"])
            elif "kk" in row:
                params = quarter_split_pair(q, row["kk"])
            else:
                params = searched_pair(q, row["m_even"], row["m_odd"])
            if is_prime_power(q) is None:
                raise NotPrime(f"q = {q} is not a prime power")
            constructions._validate("mixed_union", q, params)
        except (HypothesisViolated, NotPrime) as exc:
            notes.append(str(exc))  # pragma: no cover
            out.append(AuditRow(table_id, row["row"], "mixed_union",
                                dict(row), {"q": q}, HYP_FAIL, LEVEL_NONE,
                                tuple(notes)))
            continue
        k_max = max_dim_oracle("mixed_union", q, params)
        n = union_size(q * q - 1, (params["m1"], params["m2"]))
        d_max = formula_d_max("mixed_union", q, params)
        bad = False
        if row["sub"] != q:
            bad = _mism(notes, "subscript", row["sub"], q)
        printed_n = row["n"] if "n" in row else \
            row["n_factors"][0] * row["n_factors"][1]
        if printed_n != n:
            bad = _mism(notes, "length", printed_n, n)
        if row["d_max"] != d_max:
            bad = _mism(notes, "distance bound", row["d_max"], d_max)
        if "kk" in row:
            kk = row["kk"]
            if n != (q * q - 1) // (2 * kk + 1):  # pragma: no cover
                bad = _mism(notes, "length identity N/(2kk+1)",
                            (q * q - 1) // (2 * kk + 1), n)
        notes.append(f"oracle max k = {k_max}")
        level = _attempt_build("mixed_union", q, params, full, notes)
        out.append(AuditRow(
            table_id, row["row"], "mixed_union", dict(row),
            {"n": n, "max_k": k_max, "formula_d_max": d_max,
             "m1": params["m1"], "m2": params["m2"]},
            MISMATCH if bad else MATCH, level, tuple(notes)))
    return out


# --------------------------------------------------------------------------
# summary-table (family) crosschecks
# --------------------------------------------------------------------------

def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _family_instances(family: str) -> tuple[dict, ...]:
    if family == "subgroup_odd":
        return tuple({"q": q, "m": m} for q, m in ((17, 9), (29, 15), (53, 27)))
    if family == "subgroup_even":
        return tuple({"q": q, "m": m} for q, m in ((17, 6), (29, 6), (29, 10)))
    if family == "half_power":
        return tuple({"q": q, "m": m} for q, m in ((13, 6), (41, 10), (49, 12)))
    if family == "subgroup_odd_extended":
        return tuple({"q": r["q"], "m": r["m"]} for r in tables.TABLE1)
    if family == "half_split":
        return tuple({"q": q} for q in (13, 17, 29))
    if family == "adjacent_pair":
        return tuple({"q": r["q"], "m": r["m"]} for r in tables.TABLE6)
    if family == "quarter_split":
        return tuple({"q": r["q"], "kk": r["kk"]} for r in tables.TABLE7)
    if family in ("even_pair_doubling", "even_pair_doubling_generic"):
        return tuple({"q": r["q"], "a": r["a"], "b": r["b"]}
                     for r in tables.TABLE4 if is_prime_power(r["q"]))
    if family == "even_triple_doubling":
        return tuple({"q": r["q"], "a": r["a"], "b": r["b"], "c": r["c"]}
                     for r in tables.TABLE5)
    if family == "searched_pair":
        return tuple({"q": r["q"], "m_even": r["m_even"], "m_odd": r["m_odd"]}
                     for r in tables.TABLE8)
    if family == "quadratic_family":
        return tuple({"q": rec.q, "k": rec.k}
                     for rec in quadratic_family_search(32))
    raise UsageError(f"unknown family {family!r}")  # pragma: no cover


def _family_claimed(family: str, inst: dict) -> int:
    q = Fraction(inst["q"])
    if family == "subgroup_odd":
        return _floor((q - 1) / 2 + (q - 1) / (2 * inst["m"]))
    if family == "subgroup_even":
        return _floor((q - 1) / 2 + (q - 1) / (2 * inst["m"]) + 1)
    if family == "half_power":
        return _floor((q + 1) / 2 + (q - 1) / inst["m"])
    if family == "subgroup_odd_extended":
        return _floor((q + 1) / 2 + (q - 1) / (2 * inst["m"]))
    if family == "half_split":
        return _floor((q + 1) / 2)
    if family == "adjacent_pair":
        return _floor((q - 1) / 2 + (q + 1) / (2 * inst["m"]))
    if family == "quarter_split":
        return _floor((q - 1) / 2 + (q + 1) / (2 * (4 * inst["kk"] + 1)))
    if family == "even_pair_doubling":
        return _floor((q + 1) / 2 + inst["a"])
    if family == "even_pair_doubling_generic":
        return _floor((q + 1) / 2 + (q - 1) / (2 * inst["b"]))
    if family == "even_triple_doubling":
        return _floor((q + 1) / 2 + inst["a"] * inst["b"])
    if family == "searched_pair":
        return _floor((q - 1) / 2
                      + min((q + 1) / (2 * inst["m_odd"]),
                            (q - 1) / inst["m_even"] + 1))
    if family == "quadratic_family":
        return _floor((q + 1) / 2 + Fraction(2 * inst["k"] - 1, 3))
    raise UsageError(f"unknown family {family!r}")  # pragma: no cover


def _family_derived(family: str, inst: dict) -> int | None:
    q = inst["q"]
    if family == "subgroup_odd":
        return formula_d_max("c1", q, {"m": inst["m"]})
    if family in ("subgroup_even",):
        return None  # no bundled route covers even divisors of q + 1
    if family == "half_power":
        return formula_d_max("half_power", q, {"m": inst["m"]})
    if family == "subgroup_odd_extended":
        return formula_d_max("c1_ext", q, {"m": inst["m"]})
    if family == "half_split":
        from .constructions import half_split_pair
        return formula_d_max("mixed_union", q, half_split_pair(q))
    if family == "adjacent_pair":
        return formula_d_max("mixed_union", q, adjacent_pair(q, inst["m"]))
    if family == "quarter_split":
        return formula_d_max("mixed_union", q, quarter_split_pair(q, inst["kk"]))
    if family in ("even_pair_doubling", "even_pair_doubling_generic"):
        ms = (2 * inst["a"], 2 * inst["b"])
        return formula_d_max("half_power_union", q, {"ms": ms})
    if family == "even_triple_doubling":
        ms = (2 * inst["a"], 2 * inst["b"], 2 * inst["c"])
        return formula_d_max("half_power_union", q, {"ms": ms})
    if family == "searched_pair":
        return formula_d_max("mixed_union", q,
                             searched_pair(q, inst["m_even"], inst["m_odd"]))
    if family == "quadratic_family":
        k = inst["k"]
        return formula_d_max("mixed_union", q,
                             searched_pair(q, 4 * k, 3 * (4 * k - 1)))
    raise UsageError(f"unknown family {family!r}")  # pragma: no cover


_FAMILY_NOTES = {
    "subgroup_odd": ("cited to prior work; the bundled subgroup route proves "
                     "a bound one larger on these instances",),
    "half_power": ("cited to prior work; identical to the bundled half-power "
                   "bound",),
    "even_pair_doubling_generic": ("coincides with the previous row: the lcm "
                                   "hypothesis forces q = 2ab + 1",),
    "searched_pair": ("claimed bound is definitionally the bundled formula",),
}


def _audit_families() -> list[FamilyCheck]:
    out = []
    for row in tables.TABLE9:
        family = row["family"]
        instances = []
        statuses = []
        for inst in _family_instances(family):
            claimed = _family_claimed(family, inst)
            derived = _family_derived(family, inst)
            rec = dict(inst)
            rec["claimed"] = claimed
            rec["derived"] = derived
            instances.append(rec)
            if derived is not None:
                statuses.append(claimed == derived)
        if row["external"]:
            status = "EXTERNAL"
        elif all(statuses):
            status = MATCH
        else:
            status = MISMATCH
        notes = list(_FAMILY_NOTES.get(family, ()))
        if status == MISMATCH:
            deltas = sorted({i["claimed"] - i["derived"] for i in instances
                             if i["derived"] is not None})
            notes.append(f"claimed minus derived bound takes values {deltas} "
                         f"on the worked instances")
        out.append(FamilyCheck(row["row"], family, status, row["claimed"],
                               tuple(instances), tuple(notes)))
    return out


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def audit_tables(table_ids: tuple[int, ...] | None = None,
                 full: bool = True) -> AuditReport:
    """Audit the requested tables (default: all nine)."""
    wanted = tuple(sorted(set(table_ids))) if table_ids else tuple(range(1, 10))
    for t in wanted:
        if t not in tables.ALL_TABLES:
            raise UsageError(f"no table {t}; valid ids are 1..9")
    rows: list[AuditRow] = []
    if 1 in wanted:
        rows += _audit_table1(full)
    if 2 in wanted:
        rows += _audit_table2(full)
    if 3 in wanted:
        rows += _audit_table3(full)
    if 4 in wanted:
        rows += _audit_even_union(4, tables.TABLE4, full)
    if 5 in wanted:
        rows += _audit_even_union(5, tables.TABLE5, full)
    if 6 in wanted:
        rows += _audit_mixed(6, tables.TABLE6, full)
    if 7 in wanted:
        rows += _audit_mixed(7, tables.TABLE7, full)
    if 8 in wanted:
        rows += _audit_mixed(8, tables.TABLE8, full)
    families = _audit_families() if 9 in wanted else []
    return AuditReport(tuple(rows), tuple(families))
