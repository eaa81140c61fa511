"""``qaskey`` command line: ``eval``, ``verify`` and ``table``.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input or a
domain/pole error, 3 a series or continued fraction did not converge.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .aqaw import QParameters, SpectralPoint, coefficients, eval_assoc_polynomial, is_real_orthogonality
from .cf import CfConfig, cf_direct_result, lentz_convergents
from .exceptions import GuardError, NonConvergence, PoleError, QSeriesError
from .hyperseries import PhiSeriesSpec, VwpW, eval_phi, eval_W
from .qcore import ToleranceConfig
from .solutions import SolutionId, eval_solution, minimal_solution_id
from .spectral import discrete_spectrum_guard, weight_density, weight_table
from .verification import SUITES, cplx, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_NONCONVERGENCE = 0, 1, 2, 3

DEFAULT_PARAMS = {"q": 0.5, "alpha": 0.4, "beta": 0.4, "gamma": 0.4, "delta": 0.4, "epsilon": 0.5}
PARAM_NAMES = ("q", "alpha", "beta", "gamma", "delta", "epsilon")
EVAL_KINDS = ("phi", "W", "solution", "polynomial", "cf", "weight")
TABLE_KINDS = ("weight", "coefficients", "convergents")


class ConfigError(ValueError):
    """The configuration document or a flag value is malformed."""


def parse_number(value, name: str):
    """Accept a real number or a ``[re, im]`` pair; return ``float`` or ``complex``."""
    if isinstance(value, bool):
        raise ConfigError(f"{name}: expected a number or [re, im], got a boolean")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
        re, im = map(float, value)
        return re if im == 0 else complex(re, im)
    raise ConfigError(f"{name}: expected a number or [re, im], got {value!r}")


@dataclass
class RunConfig:
    params: QParameters
    tolerance: ToleranceConfig = field(default_factory=ToleranceConfig)
    cf: CfConfig = field(default_factory=CfConfig)
    output_format: str = "json"
    seed: int = 0
    params_given: bool = False
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_document(cls, doc: Dict[str, Any]) -> "RunConfig":
        if not isinstance(doc, dict):
            raise ConfigError("configuration must be a JSON object")
        raw = doc.get("params")
        given = raw is not None
        raw = dict(DEFAULT_PARAMS, **(raw or {}))
        unknown = set(raw) - set(PARAM_NAMES)
        if unknown:
            raise ConfigError(f"unknown parameter(s): {', '.join(sorted(unknown))}")
        values = {k: parse_number(raw[k], k) for k in PARAM_NAMES}
        try:
            params = QParameters(**values)
            tolerance = ToleranceConfig(**doc.get("tolerance", {}))
            cf = CfConfig(**doc.get("cf", {}))
        except TypeError as exc:
            raise ConfigError(str(exc)) from exc
        fmt = doc.get("format", "json")
        if fmt not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {fmt!r}")
        seed = doc.get("seed", 0)
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise ConfigError("seed must be an integer")
        extra = {k: v for k, v in doc.items() if k not in ("params", "tolerance", "cf", "format", "seed")}
        return cls(params, tolerance, cf, fmt, seed, given, extra)


def load_config(args) -> RunConfig:
    doc: Dict[str, Any] = {}
    if args.config:
        try:
            with open(args.config) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    run = RunConfig.from_document(doc)
    if args.seed is not None:
        run.seed = args.seed
    if args.format is not None:
        run.output_format = args.format
    return run


# -- serialization ----------------------------------------------------------

def fmt_float(x: float) -> str:
    """17 significant digits, enough to round-trip any binary64 value."""
    return format(float(x), ".16e")


def emit(obj, fmt: str, rows: Optional[List[dict]] = None, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
        return
    rows = rows if rows is not None else [obj]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = list(rows[0]) if rows else []
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_float(v) if isinstance(v, float) else v for v in (row[h] for h in header)])
    out.write(buf.getvalue())


def error_document(exc: BaseException, reason: Optional[str] = None) -> dict:
    err: Dict[str, Any] = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, PoleError):
        err["factor"] = exc.factor
        err["index"] = exc.index
    if isinstance(exc, NonConvergence):
        err["terms_used"] = exc.terms_used
        err["reason"] = reason or "term budget exhausted"
    return {"error": err}


# -- eval -------------------------------------------------------------------

def _point(args) -> SpectralPoint:
    return SpectralPoint.from_z(complex(args.z_re, args.z_im) if args.z_im else float(args.z_re))


def _result(kind, value, terms_used=None, converged=True, tail_estimate=None, domain=None) -> dict:
    return {"kind": kind, "value": cplx(value), "terms_used": terms_used, "converged": converged,
            "tail_estimate": tail_estimate, "domain": domain or {}}


def eval_phi_kind(run: RunConfig, args) -> dict:
    spec_doc = run.extra.get("phi")
    if not isinstance(spec_doc, dict):
        raise ConfigError("eval phi needs a 'phi' object with numerator, denominator, argument")
    try:
        num = [parse_number(v, "phi.numerator") for v in spec_doc["numerator"]]
        den = [parse_number(v, "phi.denominator") for v in spec_doc["denominator"]]
        z = parse_number(spec_doc["argument"], "phi.argument")
    except KeyError as exc:
        raise ConfigError(f"phi: missing {exc.args[0]}") from exc
    q = parse_number(spec_doc["q"], "phi.q") if "q" in spec_doc else run.params.q
    spec = PhiSeriesSpec(tuple(num), tuple(den), q, z)
    res = eval_phi(spec, run.tolerance)
    domain = {"terminating_order": spec.terminating_order, "argument_modulus": abs(z),
              "balanced": spec.is_balanced(), "very_well_poised": spec.is_very_well_poised()}
    return _result("phi", res.value, res.terms_used, res.converged, res.tail_estimate, domain)


def eval_W_kind(run: RunConfig, args) -> dict:
    doc = run.extra.get("W")
    if not isinstance(doc, dict):
        raise ConfigError("eval W needs a 'W' object with entries a..f")
    try:
        vals = [parse_number(doc[k], f"W.{k}") for k in "abcdef"]
    except KeyError as exc:
        raise ConfigError(f"W: missing {exc.args[0]}") from exc
    q = parse_number(doc["q"], "W.q") if "q" in doc else run.params.q
    w = VwpW(*vals, q)
    res = eval_W(w, run.tolerance)
    domain = {"terminating_order": w.terminating_order, "argument": cplx(w.argument),
              "argument_modulus": abs(w.argument)}
    return _result("W", res.value, res.terms_used, res.converged, res.tail_estimate, domain)


def eval_solution_kind(run: RunConfig, args) -> dict:
    try:
        sid = SolutionId[args.solution]
    except KeyError as exc:
        raise ConfigError(f"unknown solution {args.solution!r}; expected S1..S6") from exc
    pt = _point(args)
    u = 1 / pt.u if args.reciprocal else pt.u
    value = eval_solution(sid, run.params, args.n, pt, args.reciprocal, run.tolerance)
    pv = sid.predicate_value(run.params, args.n, u)
    domain = {"solution": sid.name, "reciprocal": args.reciprocal, "u": cplx(u), "condition": sid.condition,
              "predicate_value": pv, "predicate_holds": pv < 1}
    return _result("solution", value, domain=domain)


def eval_polynomial_kind(run: RunConfig, args) -> dict:
    pt = _point(args)
    value = eval_assoc_polynomial(run.params, args.n, pt, run.tolerance)
    return _result("polynomial", value, args.n + 1, domain={"u": cplx(pt.u), "on_cut": pt.on_cut})


def eval_cf_kind(run: RunConfig, args) -> dict:
    pt = _point(args)
    try:
        res = cf_direct_result(run.params, pt, run.cf, run.tolerance)
    except NonConvergence as exc:
        if pt.on_cut:
            exc.reason = "continuous spectrum"
        raise
    try:
        sid, rec = minimal_solution_id(run.params, pt)
        minimal = {"solution": sid.name, "reciprocal": rec}
    except QSeriesError:
        minimal = None
    domain = {"u": cplx(pt.u), "on_cut": pt.on_cut, "minimal_solution": minimal}
    return _result("cf", res.value, res.depth, res.converged, res.last_delta, domain)


def eval_weight_kind(run: RunConfig, args) -> dict:
    if args.x is None:
        raise ConfigError("eval weight needs --x")
    value = weight_density(run.params, args.x, run.tolerance)
    guard = discrete_spectrum_guard(run.params)
    domain = {"x": args.x, "guard_certified": guard.certified, "guard_reason": guard.reason,
              "real_orthogonality": is_real_orthogonality(run.params)}
    return _result("weight", value, domain=domain)


EVALUATORS = {"phi": eval_phi_kind, "W": eval_W_kind, "solution": eval_solution_kind,
              "polynomial": eval_polynomial_kind, "cf": eval_cf_kind, "weight": eval_weight_kind}


def cmd_eval(run: RunConfig, args, out=None) -> int:
    doc = EVALUATORS[args.kind](run, args)
    row = {"kind": doc["kind"], "value_re": doc["value"][0], "value_im": doc["value"][1],
           "terms_used": doc["terms_used"], "converged": doc["converged"], "tail_estimate": doc["tail_estimate"]}
    emit(doc, run.output_format, [row], out)
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def precheck_params(params: QParameters, tol: ToleranceConfig, n_max: int = 50) -> None:
    """Surface a vanishing recurrence denominator before any suite runs."""
    for n in range(n_max + 1):
        coefficients(params, n, tol)


def cmd_verify(run: RunConfig, args, out=None) -> int:
    if run.params_given:
        precheck_params(run.params, run.tolerance)
    reports = run_suite(args.suite, run.seed,
                        orthogonality_params=run.params if run.params_given else None)
    passed = all(r.passed for r in reports)
    doc = {"seed": run.seed, "passed": passed, "suites": [r.to_dict() for r in reports]}
    rows = [{"suite": r.suite, "check": c.name, "residual": c.residual, "threshold": float(c.threshold),
             "passed": c.passed, "draw": json.dumps(c.draw)} for r in reports for c in r.checks]
    emit(doc, run.output_format, rows, out)
    return EXIT_OK if passed else EXIT_FAILED


# -- table ------------------------------------------------------------------

def table_rows(kind: str, run: RunConfig, args) -> List[dict]:
    p = run.params
    if kind == "weight":
        if args.grid_n is None or args.grid_n < 2:
            raise ConfigError("--grid-n must be >= 2")
        tab = weight_table(p, args.grid_n, run.tolerance)
        return [{"x": x, "density": d} for x, d in zip(tab.nodes, tab.density)]
    if kind == "coefficients":
        if args.n < 0:
            raise ConfigError("--n must be >= 0")
        rows = []
        for n in range(args.n + 1):
            c = coefficients(p, n, run.tolerance)
            row = {"n": n}
            for name in ("A", "B", "a", "b2"):
                v = complex(getattr(c, name))
                row[f"{name}_re"], row[f"{name}_im"] = v.real, v.imag
            rows.append(row)
        return rows
    if args.depth is None or args.depth < 1:
        raise ConfigError("--depth must be >= 1")
    z = _point(args).z
    rows, prev = [], None
    for k, f, _ in lentz_convergents(p, z, args.depth, run.cf, run.tolerance):
        f = complex(f)
        if k:
            rows.append({"k": k, "value_re": f.real, "value_im": f.imag, "difference": abs(f - prev)})
        prev = f
    return rows


def cmd_table(run: RunConfig, args, out=None) -> int:
    rows = table_rows(args.kind, run, args)
    emit(rows, run.output_format, rows, out)
    return EXIT_OK


# -- entry point ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration document")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--serial", action="store_true",
                        help="fixed evaluation order (computation is always serial)")
    common.add_argument("--n", type=int, default=10)
    common.add_argument("--z-re", type=float, default=2.0)
    common.add_argument("--z-im", type=float, default=0.0)
    common.add_argument("--x", type=float, default=None)
    common.add_argument("--depth", type=int, default=50)
    common.add_argument("--grid-n", type=int, default=101)

    parser = argparse.ArgumentParser(prog="qaskey", description="Associated q-Askey-Wilson toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("eval", parents=[common], help="evaluate a single quantity")
    ev.add_argument("kind", choices=EVAL_KINDS)
    ev.add_argument("--solution", default="S4", help="solution id S1..S6 for kind=solution")
    ev.add_argument("--reciprocal", action="store_true", help="evaluate the solution at 1/u")
    ve = sub.add_parser("verify", parents=[common], help="run a seeded verification suite")
    ve.add_argument("suite", choices=SUITES + ("all",))
    ta = sub.add_parser("table", parents=[common], help="emit a table")
    ta.add_argument("kind", choices=TABLE_KINDS)
    return parser


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "table": cmd_table}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        run = load_config(args)
        return COMMANDS[args.command](run, args, out)
    except NonConvergence as exc:
        emit(error_document(exc, getattr(exc, "reason", None)), "json", out=out)
        return EXIT_NONCONVERGENCE
    except (QSeriesError, GuardError, ConfigError, ValueError, ZeroDivisionError, OverflowError) as exc:
        emit(error_document(exc), "json", out=out)
        return EXIT_INVALID


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_exit()
