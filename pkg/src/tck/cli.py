"""Command line surface: single triples, sweeps, certification reports.

Sweeps run a pure worker per triple over an ordered queue; the sink
writes rows in enumeration order, so output is byte-identical for any
worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool

from .betti_monomial import check_theorem_bounds, k_ab_threshold
from .errors import NotGroebner, TckError, ValidationError
from .groebner_mini import buchberger
from .oracle import OracleConfig, _verify
from .semigroup_core import (
    CASE_TAGS,
    Binomial,
    Mono,
    Semigroup,
    compute_structure,
    validate_semigroup,
)
from .tangent_cone import GeneratorSet, mu_bound_check, tangent_cone_generators

SCHEMA_VERSION = 1

SWEEP_COLUMNS = (
    "n1", "n2", "n3", "case", "mu", "s",
    "beta0", "beta1_in", "beta2_in", "gb_ok", "oracle_ok", "bounds_ok",
)


def _mono_str(m: Mono) -> str:
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip("xyz", m) if e]
    return " ".join(parts) or "1"


def _form_str(form: Mono | Binomial) -> str:
    if isinstance(form, Binomial):
        return f"{_mono_str(form.plus)} - {_mono_str(form.minus)}"
    return _mono_str(form)


def _bool_str(v: bool | None) -> str:
    if v is None:
        return ""
    return "true" if v else "false"


def _print_generator_set(S: Semigroup, gs: GeneratorSet) -> None:
    print(f"H = <{S.n1}, {S.n2}, {S.n3}>")
    print(f"case: {gs.case_tag}")
    print(f"mu: {gs.mu}")
    print(f"width s: {S.s}")
    print("generators:")
    width = max(len(_form_str(g.form)) for g in gs.generators)
    for g in gs.generators:
        print(f"  {_form_str(g.form):<{width}}  {g.label}")
    if gs.A is not None:
        print(f"eta/epsilon: {gs.eta}/{gs.epsilon}")
        print(f"alpha_h/beta_h: {gs.alpha_h}/{gs.beta_h}")
        print("A:", " ".join(f"({a},{b})" for a, b in gs.A))
        print("B:", " ".join(f"({g},{s})" for g, s in gs.B))


def _certify(gs: GeneratorSet, degree_cap: int | None) -> tuple[bool, int]:
    polys = [g.polynomial() for g in gs.generators]
    cap = degree_cap if degree_cap is not None else 2 * max(p.degree() for p in polys)
    gb = buchberger(polys, degree_cap=cap)
    return len(gb.generators) == len(polys), cap


def cmd_compute(args) -> int:
    S = validate_semigroup(args.n1, args.n2, args.n3)
    sd = compute_structure(S)
    gs = tangent_cone_generators(S, sd)
    report = None
    if args.verify:
        cfg = OracleConfig(coeff_bound=args.oracle_bound, degree_cap=args.degree_cap)
        report = _verify(S, sd, gs, cfg)
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, **gs.to_dict()}
        if report is not None:
            payload["verification"] = report.to_dict()
        print(json.dumps(payload, indent=2))
    else:
        _print_generator_set(S, gs)
        if report is not None:
            print("verification:")
            print(f"  oracle_in_prediction: {_bool_str(report.oracle_in_prediction)}")
            print(f"  prediction_in_oracle: {_bool_str(report.prediction_in_oracle)}")
            print(f"  gb_certified: {_bool_str(report.gb_certified)}")
            print(f"  bounds_ok: {_bool_str(report.bounds_ok)}")
            for note in report.notes:
                print(f"  note: {note}")
    if report is not None and not (
        report.prediction_matches_oracle and report.gb_certified and report.bounds_ok
    ):
        return 3
    return 0


# sweep worker configuration, set once per worker process
_WORKER: dict = {}


def _init_worker(flags: dict) -> None:
    _WORKER.update(flags)


def _sweep_row(triple: tuple[int, int, int]) -> dict | None:
    verify = _WORKER["verify"]
    case_filter = _WORKER["case"]
    S = validate_semigroup(*triple)
    sd = compute_structure(S)
    gs = tangent_cone_generators(S, sd)
    if case_filter and gs.case_tag != case_filter:
        return None
    if verify:
        cfg = OracleConfig(
            coeff_bound=_WORKER["oracle_bound"], degree_cap=_WORKER["degree_cap"]
        )
        rep = _verify(S, sd, gs, cfg)
        gb_ok = rep.gb_certified
        oracle_ok = rep.prediction_matches_oracle
        bounds_ok = rep.bounds_ok
        beta0, beta1, beta2 = rep.beta0, rep.beta1_in, rep.beta2_in
    else:
        gb_ok, _ = _certify(gs, _WORKER["degree_cap"])
        oracle_ok = None
        mu_ok = mu_bound_check(S, gs, sd)["ok"]
        kab_ok = k_ab_threshold(S, gs)["ok"]
        if gb_ok:
            betti_rep = check_theorem_bounds(S, gs)
            beta0, beta1, beta2 = (
                betti_rep["beta0"], betti_rep["beta1"], betti_rep["beta2"]
            )
            bounds_ok = mu_ok and kab_ok and betti_rep["ok"]
        else:
            beta0 = beta1 = beta2 = None
            bounds_ok = False
    return {
        "n1": S.n1, "n2": S.n2, "n3": S.n3,
        "case": gs.case_tag, "mu": gs.mu, "s": S.s,
        "beta0": beta0, "beta1_in": beta1, "beta2_in": beta2,
        "gb_ok": gb_ok, "oracle_ok": oracle_ok, "bounds_ok": bounds_ok,
    }


def _enumerate_triples(n3_max: int) -> list[tuple[int, int, int]]:
    out = []
    for n1 in range(2, n3_max - 1):
        for n2 in range(n1 + 1, n3_max):
            for n3 in range(n2 + 1, n3_max + 1):
                try:
                    validate_semigroup(n1, n2, n3)
                except ValidationError:
                    continue
                out.append((n1, n2, n3))
    return out


def _read_triples(path: str) -> list[tuple[int, int, int]]:
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValidationError(f"expected three integers per line, got {line!r}")
            triple = tuple(int(p) for p in parts)
            validate_semigroup(*triple)
            out.append(triple)
    return sorted(out)


def _csv_cell(column: str, value) -> str:
    if column in ("gb_ok", "oracle_ok", "bounds_ok"):
        return _bool_str(value)
    return "" if value is None else str(value)


def cmd_sweep(args) -> int:
    if args.triples:
        triples = _read_triples(args.triples)
    elif args.n3_max:
        triples = _enumerate_triples(args.n3_max)
    else:
        raise ValidationError("sweep needs --n3-max or --triples")
    triples = [
        t
        for t in triples
        if args.width_min <= min(t[0] - 1, t[2] - t[0])
        and min(t[0] - 1, t[2] - t[0]) <= args.width_max
    ]

    flags = {
        "verify": args.verify,
        "case": args.case,
        "oracle_bound": args.oracle_bound,
        "degree_cap": args.degree_cap,
    }
    sink = open(args.out, "w", newline="") if args.out else sys.stdout
    rows_written = 0
    failures = 0
    status = "ok"
    detail = ""
    try:
        if args.format == "csv":
            sink.write(",".join(SWEEP_COLUMNS) + "\n")
        if args.jobs > 1 and len(triples) > 1:
            pool = Pool(args.jobs, initializer=_init_worker, initargs=(flags,))
            chunk = max(1, len(triples) // (args.jobs * 8))
            results = pool.imap(_sweep_row, triples, chunksize=chunk)
        else:
            pool = None
            _init_worker(flags)
            results = map(_sweep_row, triples)
        try:
            for row in results:
                if row is None:
                    continue
                if row["oracle_ok"] is False or row["bounds_ok"] is False:
                    failures += 1
                if args.format == "csv":
                    sink.write(",".join(_csv_cell(c, row[c]) for c in SWEEP_COLUMNS) + "\n")
                else:
                    sink.write(json.dumps(row, separators=(",", ":")) + "\n")
                rows_written += 1
        finally:
            if pool is not None:
                pool.close()
                pool.join()
    except Exception as exc:  # flush partial results with a status record
        status = "error"
        detail = str(exc)
        raise
    finally:
        if args.format == "jsonl":
            record = {"status": status, "rows": rows_written, "failures": failures}
            if detail:
                record["detail"] = detail
            sink.write(json.dumps(record, separators=(",", ":")) + "\n")
        elif status != "ok":
            sink.write(f"# status: {status}: {detail}\n")
        if sink is not sys.stdout:
            sink.close()
    return 3 if failures else 0


def cmd_verify_gb(args) -> int:
    S = validate_semigroup(args.n1, args.n2, args.n3)
    gs = tangent_cone_generators(S, compute_structure(S))
    ok, cap = _certify(gs, args.degree_cap)
    print(f"H = <{S.n1}, {S.n2}, {S.n3}>  case: {gs.case_tag}")
    print("lead terms:", ", ".join(_mono_str(g.polynomial().lead_monomial()) for g in gs.generators))
    print(f"groebner: {_bool_str(ok)} (degree cap {cap})")
    return 0 if ok else 3


def cmd_betti(args) -> int:
    S = validate_semigroup(args.n1, args.n2, args.n3)
    gs = tangent_cone_generators(S, compute_structure(S))
    try:
        report = check_theorem_bounds(S, gs)
    except NotGroebner as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **report}, indent=2))
    else:
        print(f"H = <{S.n1}, {S.n2}, {S.n3}>  case: {report['case']}")
        print(
            f"beta0: {report['beta0']}  beta1: {report['beta1']}  "
            f"beta2: {report['beta2']}  (initial ideal)"
        )
        for check in report["checks"]:
            print(
                f"  {check['name']}: {check['value']} <= {check['limit']} "
                f"{_bool_str(check['ok'])}"
            )
    return 0 if report["ok"] else 3


def _env_degree_cap() -> int | None:
    value = os.environ.get("TCK_DEGREE_CAP")
    return int(value) if value else None


def _add_triple(sub) -> None:
    sub.add_argument("n1", type=int)
    sub.add_argument("n2", type=int)
    sub.add_argument("n3", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tck", description="Tangent cone generators of 3-generated numerical semigroup rings"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="generator set for one triple")
    _add_triple(compute)
    compute.add_argument("--json", action="store_true")
    compute.add_argument("--verify", action="store_true")
    compute.add_argument("--oracle-bound", type=int, default=30, metavar="N")
    compute.add_argument("--degree-cap", type=int, default=_env_degree_cap(), metavar="D")
    compute.set_defaults(func=cmd_compute)

    sweep = sub.add_parser("sweep", help="all valid triples up to a bound")
    sweep.add_argument("--n3-max", type=int, metavar="M")
    sweep.add_argument("--triples", metavar="FILE", help="explicit triples, one per line")
    sweep.add_argument("--case", choices=CASE_TAGS, metavar="TAG")
    sweep.add_argument("--width-min", type=int, default=0)
    sweep.add_argument("--width-max", type=int, default=10**9)
    sweep.add_argument("--verify", action="store_true")
    sweep.add_argument("--oracle-bound", type=int, default=30, metavar="N")
    sweep.add_argument("--degree-cap", type=int, default=_env_degree_cap(), metavar="D")
    sweep.add_argument("--jobs", type=int, default=1, metavar="K")
    sweep.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sweep.add_argument("--out", metavar="PATH")
    sweep.set_defaults(func=cmd_sweep)

    verify_gb = sub.add_parser("verify-gb", help="certify the set is its own Groebner basis")
    _add_triple(verify_gb)
    verify_gb.add_argument("--degree-cap", type=int, default=_env_degree_cap(), metavar="D")
    verify_gb.set_defaults(func=cmd_verify_gb)

    betti = sub.add_parser("betti", help="Betti numbers of the initial ideal and bounds")
    _add_triple(betti)
    betti.add_argument("--json", action="store_true")
    betti.set_defaults(func=cmd_betti)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
