"""Command-line front end.

Subcommands: classify, finite-width, bound, plan, slope-check, scan.
Exact rationals serialize as strings ("a/b"); CSV floats carry 12
significant digits.  Outputs are byte-identical across runs with the
same configuration.  Every domain error maps to its own exit code with
a one-line diagnostic naming the failed hypothesis.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import allocator, exponents, finwidths, verify
from .errors import WidthError
from .params import EmbeddingParams, ExtReal, parse_params, params_as_dict, validate

EXIT_SLOPE_OUT_OF_TOLERANCE = 13
EXIT_SCAN_VIOLATIONS = 14
EXIT_USAGE = 64


def _fmt(x: float) -> str:
    return "%.12g" % x


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _load_params(args) -> EmbeddingParams:
    spec = args.params
    if spec is None:
        raise WidthError("--params is required")
    if spec.startswith("@"):
        spec = Path(spec[1:]).read_text()
    params = parse_params(spec)
    problems = validate(params)
    if problems:
        raise WidthError("invalid parameters: " + "; ".join(problems))
    return params


def _decision_payload(decision: exponents.RegimeDecision) -> dict:
    return {
        "case": decision.case_id,
        "kappa": str(decision.kappa),
        "assumptions_used": list(decision.assumptions_used),
    }


def _cmd_classify(args) -> int:
    params = _load_params(args)
    payload = {"params": params_as_dict(params)}
    outcomes = {}
    first_error = None
    for kind, fn in (
        ("kolmogorov", exponents.kolmogorov_exponent),
        ("gelfand", exponents.gelfand_exponent),
    ):
        if args.kind not in ("both", kind):
            continue
        try:
            outcomes[kind] = _decision_payload(fn(params))
        except WidthError as err:
            outcomes[kind] = {"error": type(err).__name__, "message": str(err)}
            first_error = first_error or err
    payload.update(outcomes)
    verdict = exponents.compare_widths(params)
    payload["comparisons"] = {
        "a_sim_c": verdict.a_sim_c,
        "a_sim_d": verdict.a_sim_d,
        "c_sim_d": verdict.c_sim_d,
        "matched_clauses": verdict.matched_clauses,
    }
    _emit(_json(payload), args.out)
    fired = [k for k, v in outcomes.items() if "case" in v]
    if not fired and first_error is not None:
        print("%s: %s" % (type(first_error).__name__, first_error), file=sys.stderr)
        return first_error.exit_code
    return 0


def _cmd_finite_width(args) -> int:
    p1, p2 = ExtReal(args.p1), ExtReal(args.p2)
    model = finwidths.kolmogorov_model if args.kind == "kolmogorov" else finwidths.gelfand_model
    width = model(p1, p2, args.N, args.n)
    payload = {
        "kind": args.kind,
        "p1": str(p1),
        "p2": str(p2),
        "N": args.N,
        "n": args.n,
        "value": float(width.value),
        "fidelity": width.fidelity,
        "clause": width.formula_tag,
    }
    if args.oracle:
        payload["oracle"] = finwidths.coordinate_oracle(p1, p2, args.N, args.n)
    _emit(_json(payload), args.out)
    return 0


def _dyadic_grid(n_min: int, n_max: int) -> list[int]:
    for edge in (n_min, n_max):
        if edge < 1 or edge & (edge - 1):
            raise WidthError("budget bounds must be powers of two, got %d" % edge)
    if n_min > n_max:
        raise WidthError("--n-min must not exceed --n-max")
    return [2**e for e in range(n_min.bit_length() - 1, n_max.bit_length())]


def _pick_paper_strategy(params: EmbeddingParams) -> str:
    decision = exponents.kolmogorov_exponent(params)
    if decision.case_id in ("iv", "vi"):
        return allocator.PAPER_STEP4
    if decision.case_id in ("iii", "v"):
        return allocator.PAPER_STEP3
    raise WidthError(
        "no paper-route plan for case %s; use --strategy greedy" % decision.case_id
    )


def _resolve_strategy(args, params) -> str:
    return allocator.GREEDY if args.strategy == "greedy" else _pick_paper_strategy(params)


def _cmd_bound(args) -> int:
    params = _load_params(args)
    grid = _dyadic_grid(args.n_min, args.n_max)
    strategy = _resolve_strategy(args, params)
    sequences = []
    if args.side in ("upper", "both"):
        sequences.append(allocator.upper_bound_sequence(params, grid, strategy=strategy))
    if args.side in ("lower", "both"):
        sequences.append(allocator.lower_bound_sequence(params, grid))
    if args.format == "csv":
        buf = io.StringIO()
        buf.write("n,value,kind,strategy\n")
        for seq in sequences:
            for n, v in seq.points:
                buf.write("%d,%s,%s,%s\n" % (n, _fmt(v), seq.kind, seq.label))
        _emit(buf.getvalue(), args.out)
    else:
        payload = [
            {
                "kind": seq.kind,
                "strategy": seq.label,
                "points": [[n, float(_fmt(v))] for n, v in seq.points],
            }
            for seq in sequences
        ]
        _emit(_json(payload), args.out)
    return 0


def _cmd_plan(args) -> int:
    params = _load_params(args)
    strategy = _resolve_strategy(args, params)
    if strategy == allocator.GREEDY:
        decision = exponents.kolmogorov_exponent(params)
        diag = args.max_diagonal or allocator.default_max_diagonal(
            params, decision.kappa, args.n
        )
        plan = allocator.greedy_allocation(args.n, params, diag)
    elif strategy == allocator.PAPER_STEP4:
        plan = allocator.paper_allocation_step4(args.n, params)
    else:
        plan = allocator.paper_allocation_step3(args.n, params)
    bound = allocator.plan_bound(plan, params)
    payload = {
        "strategy": plan.strategy,
        "requested_n": args.n,
        "n_total": plan.n_total,
        "M1": plan.M1,
        "M2": plan.M2,
        "epsilon": None if plan.epsilon is None else str(Fraction(plan.epsilon)),
        "z1": None if plan.z1 is None else str(Fraction(plan.z1)),
        "z2": None if plan.z2 is None else str(Fraction(plan.z2)),
        "budget_spent": plan.budget_spent(),
        "bound": float(_fmt(bound.value)),
        "bound_parts": {k: float(_fmt(v)) for k, v in sorted(bound.parts.items())},
        "budgets": [[j, i, b] for (j, i), b in sorted(plan.budgets.items())],
    }
    _emit(_json(payload), args.out)
    return 0


def _cmd_slope_check(args) -> int:
    params = _load_params(args)
    strategy = _resolve_strategy(args, params)
    result = verify.slope_check(
        params,
        window=(args.n_min, args.n_max),
        strategy=strategy,
        tolerance=args.tolerance,
    )
    payload = {
        "kappa": str(result.kappa),
        "target_slope": -float(result.kappa),
        "tolerance": args.tolerance,
        "upper": {
            "fitted_slope": float(_fmt(result.upper.fitted_slope)),
            "residual_rms": float(_fmt(result.upper.residual_rms)),
            "points": result.upper.point_count,
        },
        "lower": {
            "fitted_slope": float(_fmt(result.lower.fitted_slope)),
            "residual_rms": float(_fmt(result.lower.residual_rms)),
            "points": result.lower.point_count,
        },
        "lower_le_upper_pointwise": result.pointwise_ok,
        "within_tolerance": result.within_tolerance,
    }
    _emit(_json(payload), args.out)
    if not (result.within_tolerance and result.pointwise_ok):
        print("slope check failed tolerance %.3g" % args.tolerance, file=sys.stderr)
        return EXIT_SLOPE_OUT_OF_TOLERANCE
    return 0


def _cmd_scan(args) -> int:
    payload = {}
    table = verify.table_scan()
    payload["table"] = {
        "cells_tested": table.cells_tested,
        "violations": [list(v) for v in table.violations[:50]],
        "violation_count": len(table.violations),
        "error_counts": dict(sorted(table.error_counts.items())),
    }
    violations = len(table.violations)
    if args.axioms:
        axioms = verify.axiom_suite()
        payload["axioms"] = {
            "cells_tested": axioms.cells_tested,
            "violations": [list(v) for v in axioms.violations[:50]],
            "violation_count": len(axioms.violations),
            "error_counts": dict(sorted(axioms.error_counts.items())),
        }
        violations += len(axioms.violations)
    if args.mutation:
        payload["mutation"] = {
            "axiom_suite_flags_mutant": verify.axiom_mutation_check(),
            "table_scan_flags_mutant": verify.table_mutation_check(),
        }
        if not all(payload["mutation"].values()):
            violations += 1
    _emit(_json(payload), args.out)
    return EXIT_SCAN_VIOLATIONS if violations else 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="nwidths",
        description="Width exponents and desk-scale bound certification for "
        "weighted sequence-space embeddings.",
    )
    top.add_argument("--config", help="JSON file holding a full run configuration")
    sub = top.add_subparsers(dest="command")

    def add_params(p):
        p.add_argument(
            "--params",
            help='key=value list or JSON object (fields s1,s2,p1,p2,q1,q2,d,alpha; "inf" allowed); '
            "@file reads from a file",
        )
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("classify", help="exponent table cases and comparison clauses")
    add_params(p)
    p.add_argument("--kind", choices=["kolmogorov", "gelfand", "both"], default="both")

    p = sub.add_parser("finite-width", help="model width of id: l_p1^N -> l_p2^N")
    p.add_argument("--kind", choices=["kolmogorov", "gelfand"], default="kolmogorov")
    p.add_argument("--p1", required=True)
    p.add_argument("--p2", required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="include the subset oracle value")
    p.add_argument("--out")

    p = sub.add_parser("bound", help="upper/lower width-bound sequences (CSV or JSON)")
    add_params(p)
    p.add_argument("--n-min", type=int, default=2**8)
    p.add_argument("--n-max", type=int, default=2**18)
    p.add_argument("--strategy", choices=["paper", "greedy"], default="greedy")
    p.add_argument("--side", choices=["upper", "lower", "both"], default="both")
    p.add_argument("--format", choices=["csv", "json"], default="csv")

    p = sub.add_parser("plan", help="dump one allocation plan as JSON")
    add_params(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--strategy", choices=["paper", "greedy"], default="paper")
    p.add_argument("--max-diagonal", type=int)

    p = sub.add_parser("slope-check", help="fit bound slopes against the exponent table")
    add_params(p)
    p.add_argument("--n-min", type=int, default=2**8)
    p.add_argument("--n-max", type=int, default=2**18)
    p.add_argument("--strategy", choices=["paper", "greedy"], default="greedy")
    p.add_argument("--tolerance", type=float, default=verify.SLOPE_TOLERANCE)

    p = sub.add_parser("scan", help="table scan (optionally axioms and mutation checks)")
    p.add_argument("--axioms", action="store_true")
    p.add_argument("--mutation", action="store_true")
    p.add_argument("--out")
    return top


_COMMANDS = {
    "classify": _cmd_classify,
    "finite-width": _cmd_finite_width,
    "bound": _cmd_bound,
    "plan": _cmd_plan,
    "slope-check": _cmd_slope_check,
    "scan": _cmd_scan,
}


def _argv_from_config(path: str) -> list[str]:
    raw = json.loads(Path(path).read_text())
    if "command" not in raw:
        raise WidthError("config file must name a command")
    argv = [str(raw["command"])]
    for key, value in raw.items():
        if key == "command":
            continue
        flag = "--" + key.replace("_", "-")
        if key in ("n", "N"):
            flag = "-" + key
        if isinstance(value, bool):
            if value:
                argv.append(flag)
        elif isinstance(value, dict):
            argv.extend([flag, json.dumps(value)])
        else:
            argv.extend([flag, str(value)])
    return argv


def main(argv=None) -> int:
    parser = _build_parser()
    args, _ = parser.parse_known_args(argv)
    if args.config:
        args = parser.parse_args(_argv_from_config(args.config))
    else:
        args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except WidthError as err:
        print("%s: %s" % (type(err).__name__, err), file=sys.stderr)
        return err.exit_code
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
