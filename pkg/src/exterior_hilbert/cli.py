"""Command line interface.

Every subcommand prints one JSON object on stdout (or a table with
``--pretty``).  Exit codes: 0 success, 1 FAIL verdict, 2 usage or parse
error, 3 constraint violation, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .bounds import lower_bound
from .certificates import CertificateError, CertificateName, verify_certificate
from .conjectures import refute_conjecture61
from .fields import DEFAULT_PRIME, QQ, PrimeField
from .forms import FormParseError, parse_form
from .multisection import (multisection_closed, multisection_degrees, multisection_direct,
                           parity_lemma)
from .sampler import (DEFAULT_TRIALS, Outcome, TrialConfig, append_records, outcome_record,
                      random_form, scan, verify_minimal)
from .series import even_minimal_series, hilbert_series_quotient, lex_compare

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSTRAINT, EXIT_IO = range(5)
SEED_ENV = "EXH_SEED"


class UsageError(Exception):
    pass


def resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be a decimal integer, got {env!r}") from None
    return 0


def _bound_for(n: int, d: int) -> list[int]:
    return lower_bound(n, d).a if d % 2 else even_minimal_series(n, d)


def cmd_series(args) -> tuple[dict, int]:
    start = time.perf_counter()
    n, d = args.n, args.d
    seed = None
    if args.random:
        seed = resolve_seed(args.seed)
        prime = args.prime or DEFAULT_PRIME
        f = random_form(n, d, prime, seed)
    elif args.form:
        field = PrimeField(args.prime) if args.prime else QQ
        prime = args.prime
        with open(args.form, encoding="utf-8") as fh:
            f = parse_form(fh.read(), n, d, field)
    else:
        raise UsageError("series needs --form FILE or --random")
    result = hilbert_series_quotient(f, full=args.full)
    bound = _bound_for(n, d)
    cmp = lex_compare(result.series, bound)
    out = {
        "n": n, "d": d, "prime": prime, "seed": seed,
        "series": result.series, "bound": bound,
        "ranks": {str(m): r for m, r in sorted(result.ranks.items())},
        "lex": {1: "above", 0: "equal", -1: "below"}[cmp],
        "verdict": "EQUALS_BOUND" if cmp == 0 else ("ABOVE_BOUND" if cmp > 0 else "BELOW_BOUND"),
        "runtime_ms": _ms(start),
    }
    return out, EXIT_FAIL if cmp < 0 else EXIT_OK


def cmd_bound(args) -> tuple[dict, int]:
    start = time.perf_counter()
    if args.d % 2 == 0:
        s = even_minimal_series(args.n, args.d)
        out = {"n": args.n, "d": args.d, "bound": s, "a": s, "kind": "even_minimal"}
    else:
        out = lower_bound(args.n, args.d).to_dict()
        out["bound"] = out["a"]
        out["kind"] = "odd_lower_bound"
    out["runtime_ms"] = _ms(start)
    return out, EXIT_OK


def cmd_certify(args) -> tuple[dict, int]:
    start = time.perf_counter()
    field = PrimeField(args.prime) if args.prime else None
    report = verify_certificate(args.name, args.n, field, args.d)
    out = report.to_dict()
    out["runtime_ms"] = _ms(start)
    return out, EXIT_OK if report.passed else EXIT_FAIL


def _outcome_dict(o) -> dict:
    return {"n": o.n, "d": o.d, "prime": o.prime, "seed": o.seed, "series": o.best_series,
            "bound": o.bound, "verdict": o.verdict.value, "first_gap_degree": o.first_gap_degree,
            "trials_run": o.trials_run, "ranks": {str(k): v for k, v in sorted(o.ranks.items())},
            "runtime_ms": o.runtime_ms}


def cmd_verify(args) -> tuple[dict, int]:
    cfg = TrialConfig(args.n, args.d, args.prime, args.trials, resolve_seed(args.seed))
    o = verify_minimal(cfg)
    if args.out:
        append_records(args.out, [outcome_record("verify", o)])
    return _outcome_dict(o), EXIT_OK


def cmd_scan(args) -> tuple[dict, int]:
    start = time.perf_counter()
    outcomes = scan(args.d, args.n_min, args.n_max, args.prime, args.trials,
                    resolve_seed(args.seed), args.out, args.jobs, args.long_running)
    return {"d": args.d, "results": [_outcome_dict(o) for o in outcomes],
            "certified": [o.n for o in outcomes if o.verdict is Outcome.CERTIFIED_EQUAL],
            "undetermined": [o.n for o in outcomes if o.verdict is Outcome.UNDETERMINED],
            "runtime_ms": _ms(start)}, EXIT_OK


def cmd_multisection(args) -> tuple[dict, int]:
    start = time.perf_counter()
    closed = multisection_closed(args.n)
    rows = []
    for i in multisection_degrees(args.n):
        c = closed[i] if i < len(closed) else 0
        rows.append({"i": i, "closed": c, "direct": multisection_direct(args.n, i)})
    ok = all(r["closed"] == r["direct"] for r in rows)
    out = {"n": args.n, "closed": closed, "degrees": rows, "verdict": "PASS" if ok else "FAIL"}
    if args.ell is not None:
        lemma = parity_lemma(args.ell)
        out["parity_lemma"] = {"ell": lemma.ell, "value": lemma.value, "odd": lemma.odd,
                               "unsigned": lemma.unsigned, "identity_holds": lemma.identity_holds}
        ok = ok and lemma.odd and lemma.identity_holds
        out["verdict"] = "PASS" if ok else "FAIL"
    out["runtime_ms"] = _ms(start)
    return out, EXIT_OK if ok else EXIT_FAIL


def cmd_refute(args) -> tuple[dict, int]:
    start = time.perf_counter()
    report = refute_conjecture61(args.n, args.d)
    out = report.to_dict()
    out["runtime_ms"] = _ms(start)
    return out, EXIT_OK


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _pretty(out: dict) -> str:
    lines = []
    for key, value in out.items():
        if key == "results":
            lines.append(f"{'n':>4}  {'verdict':<16} {'gap':>4}  series")
            for r in value:
                gap = "" if r["first_gap_degree"] is None else r["first_gap_degree"]
                lines.append(f"{r['n']:>4}  {r['verdict']:<16} {gap!s:>4}  {r['series']}")
        else:
            lines.append(f"{key:<18} {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exthilb", description="Hilbert series of exterior algebras modulo one form.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human readable table")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="Hilbert series of E/(f)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--form", help="form file")
    p.add_argument("--random", action="store_true", help="random form over GF(prime)")
    p.add_argument("--prime", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--full", action="store_true", help="eliminate every degree")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("bound", parents=[common], help="lower bound series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", parents=[common], help="verify a certificate form")
    p.add_argument("--name", required=True, choices=[c.value for c in CertificateName])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, help="degree for h_form")
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_certify)

    for name, func, help_ in (("verify", cmd_verify, "sample forms against the bound"),
                              ("scan", cmd_scan, "verify over a range of n")):
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "verify":
            p.add_argument("--n", type=int, required=True)
        else:
            p.add_argument("--n-min", type=int, required=True)
            p.add_argument("--n-max", type=int, required=True)
            p.add_argument("--long-running", action="store_true")
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
        p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        p.add_argument("--seed", type=int)
        p.add_argument("--out", help="append JSONL records here")
        p.set_defaults(func=func)

    p = sub.add_parser("multisection", parents=[common], help="d=3 trisection closed forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, help="also evaluate the parity lemma")
    p.set_defaults(func=cmd_multisection)

    p = sub.add_parser("refute", parents=[common], help="check the d>=5 conjecture")
    p.add_argument("--n", type=int, default=21)
    p.add_argument("--d", type=int, default=11)
    p.set_defaults(func=cmd_refute)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        out, code = args.func(args)
    except (UsageError, FormParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValueError, CertificateError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    print(_pretty(out) if args.pretty else json.dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
