"""Command-line front end: solve, table, and check subcommands.

``solve`` runs the Newton iteration on one problem and prints the full
iteration trace plus a summary; ``table`` sweeps a list of (Va, rho)
instances and prints one row per instance; ``check`` audits an arbitrary
point for stationarity and non-dominance.

Exit codes: 0 success/converged, 1 usage or input errors, 2 a solve
ended in a non-convergence status, 3 a check failed.  Reports go to
stdout (or --out); all formats carry the same numeric content, with text
rounded to 6 significant digits and csv/json at full precision.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional

from .defuzzify import centroid
from .errors import FuzzyNewtonError, InsufficientDataError
from .fuzzy_core import TriangularFuzzy
from .level_calculus import ScalarizationConfig, eval_fuzzy, scalarize
from .newton_solver import (
    STATUS_CONVERGED,
    NewtonConfig,
    SolveResult,
    VerificationReport,
    check_point,
    estimate_convergence_order,
    solve,
    verify_solution,
)
from .problems import (
    BUILTIN_NAMES,
    MaxReturnParams,
    ProblemSpec,
    ResolvedProblem,
    parse_problem_config,
    resolve_problem,
)

__all__ = ["main", "entrypoint"]

TRACE_COLUMNS = ("k", "x_k", "x_next", "f_lo0", "f_lo1", "f_hi1", "f_hi0")
SUMMARY_KEYS = (
    "xstar",
    "F_xstar",
    "value",
    "fvalue_support_lo",
    "fvalue_core_mid",
    "fvalue_support_hi",
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route that into exit 1.
    def error(self, message):
        raise _UsageError(message)


def _fmt6(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _param_flag(text: str):
    """Parse a parameter flag: plain number or 'left,peak,right'."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        return float(parts[0])
    if len(parts) == 3:
        return TriangularFuzzy(*(float(p) for p in parts))
    raise _UsageError(
        f"parameter must be a number or 'left,peak,right', got {text!r}"
    )


def _param_display(v):
    if isinstance(v, TriangularFuzzy):
        return [v.left, v.peak, v.right]
    return v


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--x0", type=float, default=None)
    p.add_argument("--eps", type=float, default=None)
    p.add_argument("--max-iter", type=int, default=None)
    p.add_argument("--alpha-grid", type=int, default=None)
    p.add_argument("--quadrature", choices=("trapezoid", "simpson"),
                   default=None)
    p.add_argument("--fd-step", type=float, default=None)


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv", "json"),
                   default="text")
    p.add_argument("--out", default=None)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fuzzynewton", description=__doc__)
    sub = parser.add_subparsers(dest="command")

    p_solve = sub.add_parser("solve", help="run the Newton iteration")
    p_solve.add_argument("--problem", required=True,
                         help="builtin name or path to a JSON config file")
    p_solve.add_argument("--Va", type=_param_flag, default=None)
    p_solve.add_argument("--rho", type=_param_flag, default=None)
    _add_solver_flags(p_solve)
    _add_output_flags(p_solve)

    p_table = sub.add_parser("table", help="solve a sweep of instances")
    p_table.add_argument("--sweep", required=True,
                         help="JSON file: list of {Va, rho} rows")
    _add_solver_flags(p_table)
    _add_output_flags(p_table)

    p_check = sub.add_parser("check", help="audit a point")
    p_check.add_argument("--problem", required=True)
    p_check.add_argument("--xstar", type=float, required=True)
    p_check.add_argument("--nbhd", type=float, default=0.01)
    p_check.add_argument("--samples", type=int, default=25)
    return parser


def _load_resolved(problem_arg: str, va, rho) -> ResolvedProblem:
    if problem_arg in BUILTIN_NAMES:
        params = None
        if va is not None or rho is not None:
            if problem_arg == "example_4_1":
                raise _UsageError(
                    "--Va/--rho only apply to the max-return problems"
                )
            base = (
                MaxReturnParams(Va=0.00168, rho=1.0)
                if problem_arg == "max_return_crisp"
                else MaxReturnParams(
                    Va=TriangularFuzzy(0.00167, 0.00168, 0.00172),
                    rho=TriangularFuzzy(0.5, 1.5, 3.5),
                )
            )
            params = MaxReturnParams(
                Va=base.Va if va is None else va,
                rho=base.rho if rho is None else rho,
            )
        return resolve_problem(ProblemSpec(kind=problem_arg, params=params))
    try:
        with open(problem_arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise _UsageError(
            f"unknown problem {problem_arg!r} (not a builtin "
            f"{'/'.join(BUILTIN_NAMES)} and not a readable config file: "
            f"{err})"
        ) from err
    spec = parse_problem_config(text)
    if va is not None or rho is not None:
        if spec.kind not in ("max_return_crisp", "max_return_fuzzy"):
            raise _UsageError(
                "--Va/--rho only apply to the max-return problems"
            )
        prev = spec.params or MaxReturnParams(Va=0.00168, rho=1.0)
        spec = ProblemSpec(
            kind=spec.kind,
            coefficients=spec.coefficients,
            params=MaxReturnParams(
                Va=prev.Va if va is None else va,
                rho=prev.rho if rho is None else rho,
            ),
            domain=spec.domain,
            sense=spec.sense,
            x0=spec.x0,
            eps=spec.eps,
            alpha_points=spec.alpha_points,
        )
    return resolve_problem(spec)


def _configs_from_args(args, resolved: ResolvedProblem) -> NewtonConfig:
    scal = resolved.scal
    scal = ScalarizationConfig(
        alpha_points=(
            scal.alpha_points if args.alpha_grid is None else args.alpha_grid
        ),
        quadrature=(
            scal.quadrature if args.quadrature is None else args.quadrature
        ),
        fd_step=scal.fd_step if args.fd_step is None else args.fd_step,
    )
    return NewtonConfig(
        x0=resolved.x0 if args.x0 is None else args.x0,
        eps=resolved.eps if args.eps is None else args.eps,
        max_iter=100 if args.max_iter is None else args.max_iter,
        scal=scal,
    )


def _trace_rows(result: SolveResult) -> list[dict]:
    rows = []
    for rec in result.trace:
        fv = rec.fuzzy_value
        rows.append(
            {
                "k": rec.k,
                "x_k": float(rec.x_k),
                "x_next": float(rec.x_k + rec.step),
                "f_lo0": float(fv.lo[0]),
                "f_lo1": float(fv.lo[-1]),
                "f_hi1": float(fv.hi[-1]),
                "f_hi0": float(fv.hi[0]),
            }
        )
    return rows


def _verification_dict(rep: VerificationReport) -> dict:
    return {
        "d1": float(rep.d1),
        "d2": float(rep.d2),
        "stat_tol": float(rep.stat_tol),
        "stationary": rep.stationary,
        "level_d1_max": float(rep.level_d1_max),
        "non_dominance": rep.non_dominance.describe(),
        "comparability_plus": rep.comp_plus.describe(),
        "comparability_minus": rep.comp_minus.describe(),
    }


def _solve_report(resolved: ResolvedProblem, cfg: NewtonConfig) -> dict:
    t0 = time.perf_counter()
    result = solve(resolved.function, cfg)
    wall = time.perf_counter() - t0
    fval = eval_fuzzy(resolved.function, result.xstar, cfg.scal.alpha_points)
    value = centroid(fval)
    verification = None
    if result.status == STATUS_CONVERGED:
        verification = _verification_dict(
            verify_solution(resolved.function, result, cfg)
        )
    try:
        order = float(
            estimate_convergence_order(result.trace, result.xstar).order
        )
    except InsufficientDataError:
        order = None
    params = resolved.params
    return {
        "problem": resolved.label,
        "config": {
            "x0": float(cfg.x0),
            "eps": float(cfg.eps),
            "max_iter": cfg.max_iter,
            "d2_floor": float(cfg.d2_floor),
            "alpha_points": cfg.scal.alpha_points,
            "quadrature": cfg.scal.quadrature,
            "fd_step": float(cfg.scal.fd_step),
            "params": (
                None
                if params is None
                else {
                    "Va": _param_display(params.Va),
                    "rho": _param_display(params.rho),
                }
            ),
        },
        "status": result.status,
        "stationarity_kind": result.stationarity_kind,
        "iterations": result.iterations,
        "xstar": float(result.xstar),
        "F_xstar": float(
            scalarize(resolved.function, result.xstar, cfg.scal)
        ),
        "value": float(value),
        "fvalue_support_lo": float(fval.lo[0]),
        "fvalue_core_mid": float(0.5 * (fval.lo[-1] + fval.hi[-1])),
        "fvalue_support_hi": float(fval.hi[0]),
        "convergence_order": order,
        "trace": _trace_rows(result),
        "verification": verification,
        "wall_time_s": wall,
    }


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _render_solve_text(rep: dict) -> str:
    out = io.StringIO()
    cfg = rep["config"]
    out.write(f"problem: {rep['problem']}\n")
    out.write(
        "config: "
        + " ".join(
            f"{key}={_fmt6(cfg[key])}"
            for key in (
                "x0", "eps", "max_iter", "alpha_points", "quadrature",
                "fd_step",
            )
        )
        + "\n"
    )
    if cfg["params"] is not None:
        out.write(
            f"params: Va={cfg['params']['Va']} rho={cfg['params']['rho']}\n"
        )
    widths = 13
    out.write(
        "".join(h.rjust(widths) for h in TRACE_COLUMNS).lstrip() + "\n"
    )
    for row in rep["trace"]:
        out.write(
            "".join(
                _fmt6(row[c]).rjust(widths) for c in TRACE_COLUMNS
            ).lstrip()
            + "\n"
        )
    out.write(
        f"status: {rep['status']} ({rep['stationarity_kind']}) "
        f"in {rep['iterations']} iterations\n"
    )
    out.write(f"xstar     = {_fmt6(rep['xstar'])}\n")
    out.write(f"F(xstar)  = {_fmt6(rep['F_xstar'])}\n")
    out.write(
        f"value     = {_fmt6(rep['value'])} (defuzzified); fuzzy value "
        f"({_fmt6(rep['fvalue_support_lo'])}, "
        f"{_fmt6(rep['fvalue_core_mid'])}, "
        f"{_fmt6(rep['fvalue_support_hi'])})\n"
    )
    if rep["convergence_order"] is not None:
        out.write(
            f"estimated convergence order = {_fmt6(rep['convergence_order'])}\n"
        )
    if rep["verification"] is not None:
        ver = rep["verification"]
        out.write("verification:\n")
        out.write(
            f"  |F'(xstar)| = {_fmt6(abs(ver['d1']))} "
            f"(tol {_fmt6(ver['stat_tol'])}, "
            f"{'ok' if ver['stationary'] else 'FAILED'})\n"
        )
        out.write(f"  max level derivative = {_fmt6(ver['level_d1_max'])}\n")
        out.write(f"  non-dominance: {ver['non_dominance']}\n")
        out.write(f"  comparability (+): {ver['comparability_plus']}\n")
        out.write(f"  comparability (-): {ver['comparability_minus']}\n")
    out.write(f"wall_time_s: {rep['wall_time_s']:.6g}\n")
    return out.getvalue()


def _render_solve_csv(rep: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["key", "value"])
    cfg = rep["config"]
    scalars = [
        ("problem", rep["problem"]),
        ("x0", cfg["x0"]),
        ("eps", cfg["eps"]),
        ("max_iter", cfg["max_iter"]),
        ("alpha_points", cfg["alpha_points"]),
        ("quadrature", cfg["quadrature"]),
        ("fd_step", cfg["fd_step"]),
        ("params_Va", json.dumps(cfg["params"]["Va"]) if cfg["params"] else ""),
        ("params_rho",
         json.dumps(cfg["params"]["rho"]) if cfg["params"] else ""),
        ("status", rep["status"]),
        ("stationarity_kind", rep["stationarity_kind"]),
        ("iterations", rep["iterations"]),
        ("xstar", repr(rep["xstar"])),
        ("F_xstar", repr(rep["F_xstar"])),
        ("value", repr(rep["value"])),
        ("fvalue_support_lo", repr(rep["fvalue_support_lo"])),
        ("fvalue_core_mid", repr(rep["fvalue_core_mid"])),
        ("fvalue_support_hi", repr(rep["fvalue_support_hi"])),
        ("convergence_order",
         "" if rep["convergence_order"] is None
         else repr(rep["convergence_order"])),
        ("wall_time_s", repr(rep["wall_time_s"])),
    ]
    for key, value in scalars:
        writer.writerow([key, value])
    writer.writerow([])
    writer.writerow(TRACE_COLUMNS)
    for row in rep["trace"]:
        writer.writerow(
            [row["k"]] + [repr(row[c]) for c in TRACE_COLUMNS[1:]]
        )
    return out.getvalue()


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_solve(args) -> int:
    resolved = _load_resolved(args.problem, args.Va, args.rho)
    cfg = _configs_from_args(args, resolved)
    rep = _solve_report(resolved, cfg)
    if args.format == "json":
        text = _render_json(rep)
    elif args.format == "csv":
        text = _render_solve_csv(rep)
    else:
        text = _render_solve_text(rep)
    _emit(text, args.out)
    return 0 if rep["status"] == STATUS_CONVERGED else 2


TABLE_COLUMNS = ("Va", "rho", "xstar", "value", "status", "iterations")


def _sweep_rows(path: str) -> list[MaxReturnParams]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise _UsageError(f"cannot read sweep file: {err}") from err
    except json.JSONDecodeError as err:
        raise _UsageError(f"sweep file is not valid JSON: {err}") from err
    if not isinstance(data, list):
        raise _UsageError("sweep file must hold a JSON list of rows")
    rows = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or set(item) - {"Va", "rho"}:
            raise _UsageError(
                f"sweep row {i} must be an object with keys Va and rho"
            )
        try:
            rows.append(
                MaxReturnParams(
                    Va=_json_param(item.get("Va"), i),
                    rho=_json_param(item.get("rho"), i),
                )
            )
        except (FuzzyNewtonError, ValueError, TypeError) as err:
            raise _UsageError(f"sweep row {i} is malformed: {err}") from err
    return rows


def _json_param(v, row_index):
    if isinstance(v, (int, float)):
        return float(v)
    if isinstance(v, list) and len(v) == 3:
        return TriangularFuzzy(*(float(t) for t in v))
    raise _UsageError(
        f"sweep row {row_index}: parameter must be a number or a "
        f"[left, peak, right] triple"
    )


def _cmd_table(args) -> int:
    rows = _sweep_rows(args.sweep)
    results = []
    for params in rows:
        kind = (
            "max_return_fuzzy" if params.is_fuzzy else "max_return_crisp"
        )
        resolved = resolve_problem(ProblemSpec(kind=kind, params=params))
        cfg = _configs_from_args(args, resolved)
        rep = _solve_report(resolved, cfg)
        results.append(
            {
                "Va": _param_display(params.Va),
                "rho": _param_display(params.rho),
                "xstar": rep["xstar"],
                "value": rep["value"],
                "status": rep["status"],
                "iterations": rep["iterations"],
            }
        )
    if args.format == "json":
        text = _render_json({"rows": results})
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in results:
            writer.writerow(
                [
                    json.dumps(row["Va"]),
                    json.dumps(row["rho"]),
                    repr(row["xstar"]),
                    repr(row["value"]),
                    row["status"],
                    row["iterations"],
                ]
            )
        text = out.getvalue()
    else:
        out = io.StringIO()
        widths = 22
        out.write(
            "".join(h.rjust(widths) for h in TABLE_COLUMNS).lstrip() + "\n"
        )
        for row in results:
            cells = [
                str(row["Va"]),
                str(row["rho"]),
                _fmt6(row["xstar"]),
                _fmt6(row["value"]),
                row["status"],
                str(row["iterations"]),
            ]
            out.write("".join(c.rjust(widths) for c in cells).lstrip() + "\n")
        text = out.getvalue()
    _emit(text, args.out)
    return 0


def _cmd_check(args) -> int:
    resolved = _load_resolved(args.problem, None, None)
    cfg = NewtonConfig(x0=args.xstar, eps=resolved.eps, scal=resolved.scal)
    report = check_point(
        resolved.function,
        args.xstar,
        cfg,
        nbhd=args.nbhd,
        samples=args.samples,
    )
    for line in report.lines():
        sys.stdout.write(line + "\n")
    passed = report.stationary and not report.non_dominance.dominated
    sys.stdout.write(f"verdict: {'pass' if passed else 'fail'}\n")
    return 0 if passed else 3


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            sys.stderr.write("a subcommand is required\n")
            return 1
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "table":
            return _cmd_table(args)
        return _cmd_check(args)
    except _UsageError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except (FuzzyNewtonError, ValueError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))
