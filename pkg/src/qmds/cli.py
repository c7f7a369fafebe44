"""Command-line interface.

Subcommands: field, construct, verify, oracle, sweep, audit, search.
Exit codes: 0 success, 1 an arithmetic hypothesis failed (including audits
that uncover a HYPOTHESIS_FAIL row), 2 usage error.  JSON output is
byte-deterministic: keys are sorted and nothing time- or path-dependent is
emitted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit as audit_mod
from . import constructions, numtheory
from .errors import (HypothesisViolated, NotPrime, QmdsError, UsageError)
from .field import build_field, field_for_q
from .verify import (ENUM_BUDGET_DEFAULT, MINORS_BUDGET_DEFAULT,
                     BudgetExceeded, verify_artifact)

_CONSTRUCTION_PARAM_FLAGS = {
    "c1": ("m",),
    "c1_ext": ("m",),
    "char2_union": ("m1", "m2"),
    "odd_union": ("m1", "m2"),
    "half_power": ("m",),
    "half_power_union": ("m1", "m2"),  # --m3 optional
    "mixed_union": ("m1", "m2"),
}


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj) -> None:
    _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _collect_params(args) -> dict:
    cid = args.construction
    flags = _CONSTRUCTION_PARAM_FLAGS.get(cid)
    if flags is None:
        raise UsageError(f"unknown construction {cid!r}")
    params: dict = {}
    for f in flags:
        val = getattr(args, f)
        if val is None:
            raise UsageError(f"--{f} is required for construction {cid}")
        params[f] = val
    if cid == "half_power_union":
        ms = [params.pop("m1"), params.pop("m2")]
        if args.m3 is not None:
            ms.append(args.m3)
        params["ms"] = tuple(ms)
    elif args.m3 is not None:
        raise UsageError(f"--m3 is not accepted by construction {cid}")
    return params


def _add_construction_flags(sp) -> None:
    sp.add_argument("--construction", required=True,
                    choices=constructions.CONSTRUCTION_IDS)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.add_argument("--m1", type=int)
    sp.add_argument("--m2", type=int)
    sp.add_argument("--m3", type=int)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qmds",
        description="Hermitian self-orthogonal MDS codes over GF(q^2) and "
                    "the quantum MDS parameters they induce.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="canonical field presentation")
    sp.add_argument("--q", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--h", type=int)
    sp.add_argument("--mode", choices=("auto", "table", "bsgs"),
                    default="auto")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("construct", help="build a certificate")
    _add_construction_flags(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--matrix", choices=("auto", "always", "never"),
                    default="auto")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("verify", help="Gram check plus both MDS routes")
    _add_construction_flags(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--budget-minors", type=int, default=MINORS_BUDGET_DEFAULT)
    sp.add_argument("--budget-enum", type=int, default=ENUM_BUDGET_DEFAULT)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("oracle", help="dimension oracle and conditions")
    _add_construction_flags(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("sweep", help="all divisor choices at one q")
    sp.add_argument("--construction", required=True,
                    choices=constructions.CONSTRUCTION_IDS)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("audit", help="recompute the bundled tables")
    sp.add_argument("--tables", help="comma-separated table ids, e.g. 1,3,9")
    sp.add_argument("--condition-only", action="store_true",
                    help="skip matrix-level verification")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")

    sp = sub.add_parser("search", help="parameter searches")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--pairs", action="store_true",
                      help="compatible even/odd divisor pairs")
    mode.add_argument("--primes", action="store_true",
                      help="primes in the progression of a given pair")
    mode.add_argument("--family", action="store_true",
                      help="the quadratic family q = 16k^2 - 12k + 1")
    mode.add_argument("--lemma", choices=("5.1", "5.2"),
                      help="alias: 5.1 = --primes, 5.2 = --pairs")
    sp.add_argument("--m1", type=int)
    sp.add_argument("--m2", type=int)
    sp.add_argument("--limit", type=int, default=200)
    sp.add_argument("--witness-limit", type=int)
    sp.add_argument("--k-limit", type=int, default=32)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out")
    return p


# --------------------------------------------------------------------------
# subcommand bodies
# --------------------------------------------------------------------------

def _cmd_field(args) -> int:
    if args.q is not None:
        if args.p is not None or args.h is not None:
            raise UsageError("give either --q or --p/--h, not both")
        f = field_for_q(args.q, args.mode)
    elif args.p is not None and args.h is not None:
        f = build_field(args.p, args.h, args.mode)
    else:
        raise UsageError("need --q or both --p and --h")
    if args.format == "json":
        _emit_json(args, f.to_json())
    else:
        _emit(args, f"GF({f.p}^{2 * f.h}), subfield GF({f.q}), "
                    f"modulus coefficients {list(f.modulus)}, theta = x, "
                    f"mode {f.mode}\n")
    return 0


def _certificate(args):
    params = _collect_params(args)
    want = {"auto": "auto", "always": "require", "never": "never"}[
        getattr(args, "matrix", "auto")]
    return constructions.build(args.construction, args.q,
                               getattr(args, "k", None),
                               want_matrix=want, **params)


def _cmd_construct(args) -> int:
    cert = _certificate(args)
    if args.format == "json":
        _emit_json(args, cert.to_json())
    else:
        q = cert.quantum
        _emit(args,
              f"{cert.construction} q={cert.q} params={cert.params} "
              f"n={cert.n} k={cert.k} max_k={cert.max_k_oracle} "
              f"quantum=[[{q.n},{q.k},{q.d}]]_{q.q} {cert.verified_level}\n")
    return 0


def _cmd_verify(args) -> int:
    args.matrix = "always"
    cert = _certificate(args)
    report = verify_artifact(cert.artifact, args.budget_minors,
                             args.budget_enum)
    obj = {
        "construction": cert.construction,
        "q": cert.q,
        "params": cert.to_json()["params"],
        "n": cert.n, "k": cert.k,
        "self_orthogonal": report.self_orthogonal,
        "gram_witness": list(report.gram_witness) if report.gram_witness else None,
        "minors": ({"is_mds": report.minors.is_mds,
                    "checked": report.minors.minors_checked,
                    "witness": list(report.minors.witness)
                    if report.minors.witness else None}
                   if report.minors else f"skipped: {report.minors_skipped}"),
        "min_weight": (report.min_weight if report.min_weight is not None
                       else f"skipped: {report.enum_skipped}"),
        "expected_weight": report.mds_expected_weight,
        "routes_agree": report.routes_agree,
        "quantum": list(report.quantum.triple()),
    }
    if args.format == "json":
        _emit_json(args, obj)
    else:
        _emit(args, "".join(f"{k}: {v}\n" for k, v in obj.items()))
    return 0 if report.all_passed else 1


def _cmd_oracle(args) -> int:
    params = _collect_params(args)
    conds = constructions.conditions_for(
        args.construction, args.q,
        constructions._validate(args.construction, args.q, params))
    max_k = constructions.max_dim_oracle(args.construction, args.q, params)
    fd = constructions.formula_d_max(args.construction, args.q, params)
    obj = {
        "construction": args.construction, "q": args.q,
        "params": {k: (list(v) if isinstance(v, tuple) else v)
                   for k, v in sorted(params.items())},
        "conditions": [list(c) for c in conds],
        "max_k": max_k,
        "formula_d_max": fd,
        "formula_within_oracle": fd - 1 <= max_k,
    }
    if args.format == "json":
        _emit_json(args, obj)
    else:
        _emit(args, "".join(f"{k}: {v}\n" for k, v in obj.items()))
    return 0


def _cmd_sweep(args) -> int:
    certs = constructions.sweep(args.construction, args.q)
    if args.format == "json":
        _emit_json(args, [c.to_json(include_matrix=False) for c in certs])
    else:
        lines = [f"{c.construction} q={c.q} params={c.params} n={c.n} "
                 f"max_k={c.max_k_oracle}\n" for c in certs]
        _emit(args, "".join(lines) or "no admissible parameters\n")
    return 0


def _cmd_audit(args) -> int:
    table_ids = None
    if args.tables:
        try:
            table_ids = tuple(int(t) for t in args.tables.split(","))
        except ValueError as exc:
            raise UsageError(f"bad --tables value {args.tables!r}") from exc
    report = audit_mod.audit_tables(table_ids, full=not args.condition_only)
    if args.format == "json":
        _emit_json(args, report.to_json())
    else:
        lines = []
        for r in report.rows:
            lines.append(f"T{r.table} r{r.row} [{r.construction}] "
                         f"{r.verdict} ({r.level})\n")
            for note in r.notes:
                lines.append(f"    {note}\n")
        for f in report.families:
            lines.append(f"summary r{f.row} [{f.family}] {f.status}\n")
            for note in f.notes:
                lines.append(f"    {note}\n")
        s = report.summary()
        lines.append(", ".join(f"{k}={v}" for k, v in s.items()) + "\n")
        _emit(args, "".join(lines))
    return 1 if report.has_hypothesis_fail else 0


def _cmd_search(args) -> int:
    do_pairs = args.pairs or args.lemma == "5.2"
    do_primes = args.primes or args.lemma == "5.1"
    if sum((do_pairs, do_primes, args.family)) != 1:
        raise UsageError("pick exactly one of --pairs/--primes/--family "
                         "(or --lemma 5.1/5.2)")
    if do_pairs:
        recs = numtheory.pair_search(args.limit, args.witness_limit)
        obj = [{"m1": r.m1, "m2": r.m2, "m": r.m, "l0": r.l0, "k0": r.k0,
                "witnesses": list(r.witnesses)} for r in recs]
        text = "".join(
            f"m1={r.m1} m2={r.m2} m={r.m} l0={r.l0} k0={r.k0} "
            f"witnesses={list(r.witnesses)}\n" for r in recs)
    elif do_primes:
        if args.m1 is None or args.m2 is None:
            raise UsageError("--primes needs --m1 (even) and --m2 (odd)")
        primes = numtheory.dirichlet_search(args.m1, args.m2, args.limit)
        obj = {"m1": args.m1, "m2": args.m2, "limit": args.limit,
               "primes": list(primes)}
        text = f"primes: {list(primes)}\n"
    else:
        recs = numtheory.quadratic_family_search(args.k_limit)
        obj = [{"k": r.k, "q": r.q, "p": r.p, "e": r.e, "m_even": r.m_even,
                "m_odd": r.m_odd, "m": r.m, "n": r.n,
                "d_claimed": r.d_claimed, "d_derived": r.d_derived,
                "m_splits_q_minus_1": r.m_splits_q_minus_1,
                "m_splits_q_plus_1": r.m_splits_q_plus_1} for r in recs]
        text = "".join(
            f"k={r.k} q={r.q} n={r.n} d_claimed={r.d_claimed} "
            f"d_derived={r.d_derived}\n" for r in recs)
    if args.format == "json":
        _emit_json(args, obj)
    else:
        _emit(args, text or "no results\n")
    return 0


_COMMANDS = {
    "field": _cmd_field,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "sweep": _cmd_sweep,
    "audit": _cmd_audit,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (UsageError, NotPrime) as exc:
        sys.stderr.write(f"usage error: {type(exc).__name__}: {exc}\n")
        return 2
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget error: {exc}\n")
        return 2
    except (HypothesisViolated, QmdsError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def console_main() -> None:  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
