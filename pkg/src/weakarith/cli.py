"""Command-line front end.

Exit codes: 0 when every executed check passes, 1 when a check fails,
2 for usage errors and inputs that cannot be parsed or evaluated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import lab, solver
from .divisors import KmnNotFound, kappa_mu_nu, non_even_divisor, pt_check
from .errors import ArithError
from .poly import MODELS, divides, get_model, half_floor, parity, poly_cmp, poly_sub
from .terms import parse_term, render

USAGE_ERROR = 2
CHECK_FAILED = 1

EVAL_OPS = ("+", "*", "-", "<", "<=", "=", "|")


@dataclass(frozen=True)
class CliConfig:
    model: str | None = None
    seed: int = 0
    samples: int = 10_000
    bound: int = 50
    output_mode: str = "text"
    output_path: str | None = None
    unicode: bool = True


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse's default also exits 2; keep it explicit
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text", help="output mode (default text)")
    p.add_argument("--output", metavar="PATH", help="write the report to PATH instead of stdout")
    p.add_argument("--ascii", action="store_true", help="ASCII-only text output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="weakarith", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    models = sorted(MODELS)

    p = sub.add_parser("axioms", parents=[common], help="sample the axiom list in a model")
    p.add_argument("--model", choices=models, help="model id (default: all models)")
    p.add_argument("--samples", type=int, default=10_000, help="instances per check (default 10000)")
    p.add_argument("--seed", type=int, default=0, help="sampler seed (default 0)")
    p.add_argument(
        "--check", action="append", metavar="TAG",
        help="restrict to these axiom/property tags (repeatable); 'properties' selects all derived properties",
    )

    p = sub.add_parser("claims", parents=[common], help="run the pinned-witness claim suite")
    p.add_argument("--model", choices=models)

    p = sub.add_parser("solve", parents=[common], help="solve ab-c, bc-a, ca-b all powers of 2")
    p.add_argument("--bound", type=int, default=50, help="largest entry searched (default 50)")
    p.add_argument("--method", choices=("naive", "pruned", "both"), default="both")

    p = sub.add_parser("pt", parents=[common], help="decide whether an element is a power of two")
    p.add_argument("--model", choices=models, required=True)
    p.add_argument("expr")

    p = sub.add_parser("eval", parents=[common], help="evaluate EXPR OP EXPR")
    p.add_argument("--model", choices=models, required=True)
    p.add_argument("lhs")
    p.add_argument("op", choices=EVAL_OPS)
    p.add_argument("rhs")

    p = sub.add_parser("kmn", parents=[common], help="find kappa, mu, nu with m = kappa*mu, n = kappa*nu")
    p.add_argument("--model", choices=models, required=True)
    p.add_argument("m")
    p.add_argument("n")
    return parser


def _config(args) -> CliConfig:
    return CliConfig(
        model=getattr(args, "model", None),
        seed=getattr(args, "seed", 0),
        samples=getattr(args, "samples", 10_000),
        bound=getattr(args, "bound", 50),
        output_mode=args.format,
        output_path=args.output,
        unicode=not args.ascii,
    )


def _show(x, cfg: CliConfig) -> str:
    return render(x, unicode=cfg.unicode)


def _factor(x, cfg: CliConfig) -> str:
    return _show(x, cfg) if len(x.terms) <= 1 else f"({_show(x, cfg)})"


def _show_parity(par, cfg: CliConfig) -> str:
    if par.witness is None:
        return "Neither"
    return f"{par.kind.capitalize()}({_show(par.witness, cfg)})"


def _report_output(reports: list, cfg: CliConfig) -> tuple[int, str]:
    code = 0 if all(r.passed for r in reports) else CHECK_FAILED
    if cfg.output_mode == "json":
        return code, lab.reports_to_json(reports)
    lines = [r.line(cfg.unicode) for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports)} checks, {failed} not passed")
    return code, "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def _axioms(args, cfg: CliConfig) -> tuple[int, str]:
    if cfg.samples < 1:
        raise _UsageError("--samples must be positive")
    checks: list[str] = []
    for tag in args.check or list(lab.AXIOMS):
        if tag == "properties":
            checks.extend(lab.PROPERTIES)
        elif tag in lab.AXIOMS or tag in lab.PROPERTIES:
            checks.append(tag)
        else:
            raise _UsageError(f"unknown check tag {tag!r}")
    sampler = lab.SamplerConfig(seed=cfg.seed, sample_count=cfg.samples)
    model_ids = [cfg.model] if cfg.model else list(MODELS)
    reports = []
    for mid in model_ids:
        reports += lab.run_suite(MODELS[mid], checks, sampler)
    return _report_output(reports, cfg)


def _claims(args, cfg: CliConfig) -> tuple[int, str]:
    return _report_output(lab.verify_claims(cfg.model), cfg)


def _solve(args, cfg: CliConfig) -> tuple[int, str]:
    if cfg.bound < 1:
        raise _UsageError("--bound must be positive")
    results, timings = {}, {}
    methods = ("naive", "pruned") if args.method == "both" else (args.method,)
    for name in methods:
        fn = solver.solve_naive if name == "naive" else solver.solve_pruned
        start = time.perf_counter()
        results[name] = fn(cfg.bound)
        timings[name] = time.perf_counter() - start
    agree = len({frozenset(s) for s in results.values()}) == 1
    solutions = results[methods[-1]]
    code = 0 if agree else CHECK_FAILED
    if cfg.output_mode == "json":
        doc = {
            "bound": cfg.bound,
            "method": args.method,
            "agree": agree,
            "count": len(solutions),
            "solutions": solver.sorted_solutions(solutions),
        }
        if not agree:
            doc["by_method"] = {k: solver.sorted_solutions(v) for k, v in results.items()}
        return code, _json(doc)
    lines = [f"{len(solutions)} triples with entries <= {cfg.bound}:"]
    lines += [f"  ({a}, {b}, {c})" for a, b, c in sorted(solutions)]
    for name in methods:
        lines.append(f"{name}: {len(results[name])} triples in {timings[name]:.3f}s")
    if len(methods) > 1:
        lines.append("methods agree" if agree else "METHODS DISAGREE")
    return code, "\n".join(lines) + "\n"


def _pt(args, cfg: CliConfig) -> tuple[int, str]:
    x = parse_term(args.expr, get_model(args.model))
    verdict = pt_check(x)
    witness = None if verdict else non_even_divisor(x)
    if cfg.output_mode == "json":
        doc = {"model": args.model, "expr": render(x), "pt": verdict}
        if witness is not None:
            doc["non_even_divisor"] = render(witness)
        return 0, _json(doc)
    text = f"PT: {'true' if verdict else 'false'}"
    if witness is not None:
        text += f"  (divisor {_show(witness, cfg)} is not even)"
    return 0, text + "\n"


def _evaluate(op: str, x, y):
    if op == "+":
        return x + y
    if op == "*":
        return x * y
    if op == "-":
        return poly_sub(x, y)
    if op == "<":
        return poly_cmp(x, y) < 0
    if op == "<=":
        return poly_cmp(x, y) <= 0
    if op == "=":
        return x == y
    q = divides(x, y)
    return q is not None, q


def _eval(args, cfg: CliConfig) -> tuple[int, str]:
    model = get_model(args.model)
    x, y = parse_term(args.lhs, model), parse_term(args.rhs, model)
    value = _evaluate(args.op, x, y)
    cofactor = None
    if isinstance(value, tuple):
        value, cofactor = value
    if cfg.output_mode == "json":
        doc = {"model": args.model, "lhs": render(x), "op": args.op, "rhs": render(y)}
        doc["value"] = value if isinstance(value, bool) else render(value)
        if cofactor is not None:
            doc["cofactor"] = render(cofactor)
        return 0, _json(doc)
    if isinstance(value, bool):
        text = "true" if value else "false"
        if cofactor is not None:
            text += f"  ({_show(y, cfg)} = {_factor(x, cfg)} * {_factor(cofactor, cfg)})"
    else:
        text = _show(value, cfg)
        extra = [f"parity {_show_parity(parity(value), cfg)}"]
        if model.has_half:
            extra.append(f"half {_show(half_floor(value), cfg)}")
        text += "  (" + ", ".join(extra) + ")"
    return 0, text + "\n"


def _kmn(args, cfg: CliConfig) -> tuple[int, str]:
    model = get_model(args.model)
    m, n = parse_term(args.m, model), parse_term(args.n, model)
    got = kappa_mu_nu(m, n)
    found = not isinstance(got, KmnNotFound)
    if cfg.output_mode == "json":
        doc = {"model": args.model, "m": render(m), "n": render(n), "found": found}
        if found:
            doc.update(kappa=render(got.kappa), mu=render(got.mu), nu=render(got.nu))
        else:
            doc["candidates"] = [render(k) for k in got.candidates]
        return 0, _json(doc)
    if found:
        text = f"kappa = {_show(got.kappa, cfg)}, mu = {_show(got.mu, cfg)}, nu = {_show(got.nu, cfg)}"
    else:
        tried = ", ".join(_show(k, cfg) for k in got.candidates)
        text = f"not found; common divisors tried: {tried}"
    return 0, text + "\n"


_HANDLERS = {
    "axioms": _axioms,
    "claims": _claims,
    "solve": _solve,
    "pt": _pt,
    "eval": _eval,
    "kmn": _kmn,
}


@dataclass(frozen=True)
class CommandResult:
    code: int
    text: str
    output_path: str | None = None


def run_command(argv: Sequence[str] | None = None) -> CommandResult:
    """Run one subcommand. Error messages go to stderr."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config(args)
        code, text = _HANDLERS[args.command](args, cfg)
        return CommandResult(code, text, cfg.output_path)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
    except (ArithError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return CommandResult(USAGE_ERROR, "")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        result = run_command(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if result.output_path:
        with open(result.output_path, "w", encoding="utf-8") as fh:
            fh.write(result.text)
    else:
        sys.stdout.write(result.text)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
