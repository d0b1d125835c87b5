"""Command-line entry point.

Exit codes: 0 success / PASS / no violations, 1 FAIL or violations found,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

from .lemma import PASS, LemmaParameters, verify_lemma
from .primes import I64_MAX, cubic_part
from .scanner import CSV_HEADER, InvalidResidue, ScanConfig, ScanSummary, iter_scan, least_prime_in_ap
from .zeros import PAPER_TABLE, table_csv, to_lambda_mu, validate_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    out: Optional[str] = None
    fmt: str = "human"
    digits: int = 6
    jobs: int = 1
    scan: Optional[ScanConfig] = None

    def __post_init__(self):
        if not 1 <= self.digits <= 100:
            raise UsageError("--digits must lie in [1, 100]")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit_mapping(d: dict, fmt: str, fh):
    if fmt == "json":
        json.dump(d, fh, indent=2)
        fh.write("\n")
    else:
        for k, v in d.items():
            fh.write(f"{k}: {v}\n")


def lemma_document(report) -> dict:
    d = report.as_dict()
    doc = {
        "verdict": d["verdict"],
        "discriminant_sign": d["discriminant_sign"],
        "c1_sign": d["c1_sign"],
        "monotone_increasing": d["monotone_increasing"],
        "s_low": d["s_low"],
        "s_high": d["s_high"],
        "s_high_below_threshold": d["s_high_below_threshold"],
        "epsilon_max": d["epsilon_max"],
        "constraint_holds": d["constraint_holds"],
        "constraint_tight": d["constraint_tight"],
        "digits": d["digits"],
    }
    for key in ("c1", "c2", "c3"):
        doc[key] = d[key]["decimal"]
    return doc


def cmd_verify_lemma(cfg: RunConfig) -> int:
    report = verify_lemma(LemmaParameters.paper(), digits=cfg.digits)
    doc = lemma_document(report)
    with _output(cfg.out) as fh:
        _emit_mapping(doc, cfg.fmt, fh)
    return EXIT_OK if report.verdict == PASS else EXIT_FAIL


def cmd_scan(cfg: RunConfig) -> int:
    config = cfg.scan
    summary = ScanSummary()
    with _output(cfg.out) as fh:
        if cfg.fmt != "json":
            fh.write(",".join(CSV_HEADER) + "\n")
        for rec in iter_scan(config, cfg.jobs):
            summary.update(rec, config)
            if cfg.fmt == "json":
                fh.write(json.dumps(rec.__dict__) + "\n")
            else:
                fh.write(",".join(rec.csv_row()) + "\n")
            fh.flush()
    for line in summary.lines():
        print(line, file=sys.stderr)
    return EXIT_OK if summary.violations == 0 else EXIT_FAIL


def cmd_least_prime(cfg: RunConfig, a: int, q: int, cap: int) -> int:
    p = least_prime_in_ap(a, q, cap)
    with _output(cfg.out) as fh:
        if cfg.fmt == "json":
            _emit_mapping({"a": a, "q": q, "least_prime": p}, "json", fh)
        else:
            fh.write(("NOT_FOUND" if p is None else str(p)) + "\n")
    return EXIT_OK


def cmd_cubic_part(cfg: RunConfig, q: int) -> int:
    if q < 1:
        raise UsageError("Q must be positive")
    q3, q2 = cubic_part(q)
    with _output(cfg.out) as fh:
        if cfg.fmt == "json":
            _emit_mapping({"q": q, "q3": q3, "q2": q2}, "json", fh)
        else:
            fh.write(f"q3={q3} q2={q2}\n")
    return EXIT_OK


def cmd_coords(cfg: RunConfig, beta: float, gamma: float, q: int) -> int:
    lam, mu = to_lambda_mu(beta, gamma, q)
    with _output(cfg.out) as fh:
        _emit_mapping({"lambda": lam, "mu": mu}, cfg.fmt, fh)
    return EXIT_OK


def cmd_table(cfg: RunConfig) -> int:
    if not validate_table(PAPER_TABLE):
        return EXIT_FAIL
    with _output(cfg.out) as fh:
        if cfg.fmt == "json":
            rows = [{"lambda": str(x), "N": n} for x, n in PAPER_TABLE.entries]
            _emit_mapping({"lambda1": str(PAPER_TABLE.lambda1), "entries": rows}, "json", fh)
        else:
            fh.write(table_csv(PAPER_TABLE))
    return EXIT_OK


def _common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--digits", type=int, default=6)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linnik", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    _common(sub.add_parser("verify-lemma", help="certify the lambda_3 > 1.15 lemma exactly"))

    p = sub.add_parser("scan", help="worst least prime per modulus, as CSV")
    _common(p)
    p.add_argument("--q-min", type=int, default=3)
    p.add_argument("--q-max", type=int, default=100)
    p.add_argument("--cubic-bound", type=int, default=None)
    p.add_argument("--exponent", type=float, default=4.5)
    p.add_argument("--constant", type=float, default=1.0)
    p.add_argument("--cap", type=int, default=I64_MAX)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("least-prime", help="least prime = A (mod Q)")
    _common(p)
    p.add_argument("a", type=int, metavar="A")
    p.add_argument("q", type=int, metavar="Q")
    p.add_argument("--cap", type=int, default=I64_MAX)

    p = sub.add_parser("cubic-part", help="split Q = q3^3 q2")
    _common(p)
    p.add_argument("q", type=int, metavar="Q")

    p = sub.add_parser("coords", help="(beta, gamma) -> (lambda, mu)")
    _common(p)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--q", type=int, required=True)

    _common(sub.add_parser("table", help="N(lambda) for lambda1 = 0.85"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            out=args.out,
            fmt="json" if args.json else "human",
            digits=args.digits,
            jobs=getattr(args, "jobs", 1),
        )
        if args.subcommand == "verify-lemma":
            return cmd_verify_lemma(cfg)
        if args.subcommand == "scan":
            cfg.scan = ScanConfig(
                q_min=args.q_min,
                q_max=args.q_max,
                cubic_bound=args.cubic_bound,
                exponent_bound=args.exponent,
                constant_C=args.constant,
                absolute_cap=args.cap,
            )
            return cmd_scan(cfg)
        if args.subcommand == "least-prime":
            return cmd_least_prime(cfg, args.a, args.q, args.cap)
        if args.subcommand == "cubic-part":
            return cmd_cubic_part(cfg, args.q)
        if args.subcommand == "coords":
            return cmd_coords(cfg, args.beta, args.gamma, args.q)
        return cmd_table(cfg)
    except (UsageError, InvalidResidue, ValueError, OverflowError) as e:
        print(f"linnik: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
