"""Command-line interface.

Exit codes: 0 success, 1 internal invariant breach or failed verification,
2 unreadable or malformed input, 3 size budget exceeded.
"""

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import formats
from .bench import format_table, run_bench
from .core import is_subsequence, is_weakly_increasing, total_weight
from .formats import ParseError
from .reductions import (
    DEFAULT_BUDGET_N,
    BudgetExceeded,
    DecodeError,
    cnf_to_lcwis_instance,
    decode,
    maxsat_oracle,
    ovp_combined_instance,
    ovp_to_lcwis_instance,
    vectors_from_cnf,
)
from .solvers import lcwis, wlcwis
from .verify import SUITES, run_all

EXIT_OK, EXIT_BREACH, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    seed: int = 0
    trials: int = 200
    budget_n: int = DEFAULT_BUDGET_N
    witness: bool = False
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror}") from None


def _parse(parser, path):
    try:
        return parser(_read(path))
    except ParseError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None


def _emit(report: str, output: Optional[str]):
    if output:
        with open(output, "w") as fh:
            fh.write(report)
    else:
        sys.stdout.write(report)


def _read_pair(paths):
    seqs = []
    for p in paths:
        seqs.extend(_parse(formats.parse_sequences, p))
    if len(seqs) != 2:
        raise CliError(EXIT_PARSE, f"expected exactly two sequences, got {len(seqs)}")
    return seqs


def cmd_solve(args, cfg: RunConfig) -> int:
    if args.problem == "wlcwis":
        if not args.weights:
            raise CliError(EXIT_PARSE, "wlcwis needs --weights FILE")
        w = _parse(formats.parse_weights, args.weights)
    else:
        w = None
    a, b = _read_pair(args.files)
    try:
        res = lcwis(a, b, cfg.witness) if w is None else wlcwis(a, b, w, cfg.witness)
    except KeyError as exc:
        raise CliError(EXIT_PARSE, str(exc.args[0])) from None
    lines = [f"value={res.value}"]
    if cfg.witness:
        wit = res.witness
        measured = len(wit) if w is None else total_weight(wit, w)
        if not (is_weakly_increasing(wit) and is_subsequence(wit, a)
                and is_subsequence(wit, b) and measured == res.value):
            raise CliError(EXIT_BREACH, f"witness check failed: {list(wit)}")
        lines.append("witness=" + " ".join(map(str, wit)))
    if args.certificate:
        cert = _parse(formats.parse_certificate, args.certificate)
        try:
            mip = decode(cert, res.value)
        except DecodeError as exc:
            raise CliError(EXIT_BREACH, str(exc)) from None
        lines.append(f"min_inner_product={mip}")
        if cert.num_clauses is not None:
            lines.append(f"maxsat={cert.num_clauses - mip}")
    _emit("\n".join(lines) + "\n", cfg.output_path)
    return EXIT_OK


def _write(directory, name, text):
    path = os.path.join(directory, name)
    with open(path, "w") as fh:
        fh.write(text)
    return path


def _write_lcwis_outputs(out_dir, U, V, num_clauses):
    combined = ovp_combined_instance(U, V)
    a, b, cert = ovp_to_lcwis_instance(U, V, num_clauses=num_clauses)
    _write(out_dir, "instance.seq", formats.serialize_sequences([a, b]))
    _write(out_dir, "combined.txt", formats.serialize_instance(combined))
    _write(out_dir, "certificate.txt", formats.serialize_certificate(cert))
    limit = 60 * cert.n * cert.d
    if max(len(a), len(b)) > limit:
        raise CliError(EXIT_BREACH, f"instance length exceeds 60*n*d = {limit}")
    return f"n={cert.n} d={cert.d} ell={cert.ell} offset={cert.offset} len1={len(a)} len2={len(b)}\n"


def cmd_reduce(args, cfg: RunConfig) -> int:
    out_dir = args.output or "."
    os.makedirs(out_dir, exist_ok=True)
    need = 2 if args.kind == "ovp-to-lcwis" else 1
    if len(args.files) != need:
        raise CliError(EXIT_PARSE, f"{args.kind} takes {need} input file(s)")
    if args.kind == "ovp-to-lcwis":
        U, V = (_parse(formats.parse_vectors, p) for p in args.files)
        if U.dim != V.dim or not len(U) or not len(V):
            raise CliError(EXIT_PARSE, "vector sets must be non-empty and share a dimension")
        report = _write_lcwis_outputs(out_dir, U, V, None)
    else:
        f = _parse(formats.parse_dimacs, args.files[0])
        if f.num_vars > cfg.budget_n:
            raise CliError(EXIT_BUDGET, f"N={f.num_vars} exceeds budget {cfg.budget_n}; see --unsafe-budget")
        if f.num_vars < 1 or f.num_clauses < 1:
            raise CliError(EXIT_PARSE, "formula needs at least one variable and one clause")
        U, V = vectors_from_cnf(f)
        if args.kind == "cnf-to-ovp":
            _write(out_dir, "u.vec", formats.serialize_vectors(U))
            _write(out_dir, "v.vec", formats.serialize_vectors(V))
            report = f"d={U.dim} u={len(U)} v={len(V)}\n"
        else:
            report = _write_lcwis_outputs(out_dir, U, V, f.num_clauses)
    sys.stdout.write(report)
    return EXIT_OK


def cmd_maxsat(args, cfg: RunConfig) -> int:
    f = _parse(formats.parse_dimacs, args.file)
    if f.num_vars < 1 or f.num_clauses < 1:
        # no vectors to build; only empty clauses can exist, none satisfiable
        value = 0
    else:
        try:
            a, b, cert = cnf_to_lcwis_instance(f, cfg.budget_n)
        except BudgetExceeded as exc:
            raise CliError(EXIT_BUDGET, f"{exc}; see --unsafe-budget") from None
        try:
            value = cert.num_clauses - decode(cert, lcwis(a, b).value)
        except DecodeError as exc:
            raise CliError(EXIT_BREACH, str(exc)) from None
    if args.oracle:
        expected = maxsat_oracle(f)
        if expected != value:
            raise CliError(EXIT_BREACH, f"maxsat={value} but oracle says {expected}")
    _emit(f"maxsat={value}\n", cfg.output_path)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    results = run_all(args.suite, cfg.seed, cfg.trials)
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'PASS' if r.ok else 'FAIL'} passed={r.passed} failed={r.failed}")
        if r.counterexample:
            lines.append("counterexample:")
            lines.extend("  " + l for l in r.counterexample.splitlines())
    _emit("\n".join(lines) + "\n", cfg.output_path)
    return EXIT_OK if all(r.ok for r in results) else EXIT_BREACH


def _sizes(text):
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive")
    return sizes


def cmd_bench(args, cfg: RunConfig) -> int:
    try:
        rows = run_bench(args.sizes, args.repeats, cfg.seed)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    _emit(format_table(rows), cfg.output_path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcwis", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", default=None)
    common.add_argument("--unsafe-budget", type=int, default=None, metavar="N",
                        help=f"raise the variable budget above {DEFAULT_BUDGET_N}")

    p = sub.add_parser("solve", parents=[common], help="solve LCWIS or WLCWIS")
    p.add_argument("problem", choices=["lcwis", "wlcwis"])
    p.add_argument("files", nargs="+", help="sequence file(s) holding two sequences")
    p.add_argument("--weights", help="weighted alphabet file (wlcwis)")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--certificate", help="decode the value with this certificate")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", parents=[common], help="emit reduction instances")
    p.add_argument("kind", choices=["cnf-to-ovp", "ovp-to-lcwis", "cnf-to-lcwis"])
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("maxsat", parents=[common], help="MAX-SAT through one LCWIS solve")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check by enumeration")
    p.set_defaults(func=cmd_maxsat)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--suite", action="append", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="time the solver at growing sizes")
    p.add_argument("--sizes", type=_sizes, default=[4096, 8192, 16384])
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            seed=args.seed,
            trials=getattr(args, "trials", 1),
            budget_n=args.unsafe_budget if args.unsafe_budget is not None else DEFAULT_BUDGET_N,
            witness=getattr(args, "witness", False),
            output_path=args.output if args.command != "reduce" else None,
        )
        return args.func(args, cfg)
    except CliError as exc:
        print(f"lcwis: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"lcwis: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
