"""Seeded verification suites behind ``qaskey verify``."""
from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List

import numpy as np

from . import sampling
from .aqaw import QParameters, SpectralPoint, coefficients
from .cf import closed_form_3_3, closed_form_3_4, cf_direct, cf_pincherle
from .contiguous import Relation, relation_residual
from .exceptions import ImaginaryResidueWarning
from .solutions import SolutionId, eval_solution, proportionality_variation, recurrence_residual
from .spectral import (expected_norms, identity_4_10_residual, orthogonality_check, qdougall_residual,
                       stieltjes_check, weight_density, weight_density_alt, wronskian, wronskian_closed_form)

SUITES = ("contiguous", "solutions", "pincherle", "wronskian", "dougall", "orthogonality")

ORTHO_PARAMS = QParameters(0.5, 0.4, 0.4, 0.4, 0.4, 0.5)


def cplx(x) -> list:
    x = complex(x)
    return [x.real, x.imag]


def describe_params(p: QParameters) -> Dict[str, list]:
    return {"q": cplx(p.q), "alpha": cplx(p.alpha), "beta": cplx(p.beta), "gamma": cplx(p.gamma),
            "delta": cplx(p.delta), "epsilon": cplx(p.epsilon)}


@dataclass
class Check:
    name: str
    residual: float
    threshold: float
    passed: bool
    draw: dict = field(default_factory=dict)


@dataclass
class Report:
    suite: str
    seed: int
    checks: List[Check] = field(default_factory=list)

    def add(self, name, residual, threshold, draw=None):
        residual = float(residual)
        self.checks.append(Check(name, residual, threshold, residual <= threshold, draw or {}))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks]}


def _rel(a, b) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else float(abs(a - b) / scale)


def _w_draw(w) -> dict:
    return {k: cplx(getattr(w, k)) for k in "abcdefq"}


def suite_contiguous(seed: int, draws: int = 25) -> Report:
    rng = sampling.make_rng(seed)
    rep = Report("contiguous", seed)
    for rel in Relation:
        for i in range(draws):
            n = i % 6 if rel is Relation.R2_2 else 1 + i % 5
            case = sampling.contiguous_case(rng, rel, n)
            draw = {"n": n} if rel in (Relation.R2_2, Relation.R2_8) else {}
            draw.update({k: cplx(getattr(case, k)) for k in "abcdefq"})
            rep.add(f"{rel.value}[{i}]", relation_residual(rel, case), 1e-9, draw)
    return rep


def suite_solutions(seed: int, draws: int = 20) -> Report:
    rng = sampling.make_rng(seed)
    rep = Report("solutions", seed)
    for sid in SolutionId:
        for i in range(draws):
            p, u = sampling.solution_case(rng, sid)
            res = max(recurrence_residual(sid, p, n, u) for n in range(11))
            rep.add(f"{sid.name}-recurrence[{i}]", res, 1e-8, {"params": describe_params(p), "u": cplx(u)})
    for i in range(draws):
        p, u = sampling.solution_case(rng, SolutionId.S4)
        draw = {"params": describe_params(p), "u": cplx(u)}
        rep.add(f"S3/S4-ratio[{i}]", proportionality_variation(SolutionId.S3, SolutionId.S4, p, u, range(9)), 1e-8, draw)
        rep.add(f"S4/S6-ratio[{i}]", proportionality_variation(SolutionId.S4, SolutionId.S6, p, u, range(9)), 1e-8, draw)
    return rep


def suite_pincherle(seed: int, draws: int = 20) -> Report:
    rng = sampling.make_rng(seed)
    rep = Report("pincherle", seed)
    for i in range(draws):
        p, u = sampling.pincherle_case(rng)
        pt = SpectralPoint.from_u(u)
        vals = {"direct": 1 / cf_direct(p, pt), "pincherle": 1 / cf_pincherle(p, pt),
                "closed_form_3_3": closed_form_3_3(p, pt), "closed_form_3_4": closed_form_3_4(p, pt)}
        worst = max(_rel(a, b) for a in vals.values() for b in vals.values())
        rep.add(f"three-way[{i}]", worst, 1e-8, {"params": describe_params(p), "u": cplx(u)})
    return rep


def suite_wronskian(seed: int, draws: int = 10) -> Report:
    rng = sampling.make_rng(seed)
    rep = Report("wronskian", seed)
    for i in range(draws):
        p, u = sampling.pincherle_case(rng)
        X = lambda n: eval_solution(SolutionId.S4, p, n, u)
        Y = lambda n: eval_solution(SolutionId.S4, p, n, u, reciprocal=True)
        worst = 0.0
        for n in range(0, 9):
            worst = max(worst, _rel(wronskian(X, Y, n), coefficients(p, n).b2 * wronskian(X, Y, n - 1)))
        draw = {"params": describe_params(p), "u": cplx(u)}
        rep.add(f"scaling[{i}]", worst, 1e-10, draw)
        rep.add(f"closed-form[{i}]", _rel(wronskian(X, Y, -1), wronskian_closed_form(p, u)), 1e-8, draw)
    return rep


def suite_dougall(seed: int, draws: int = 20) -> Report:
    rng = sampling.make_rng(seed)
    rep = Report("dougall", seed)
    for i in range(draws):
        p, u = sampling.dougall_case(rng, epsilon_one=(i == 0))
        rep.add(f"q-dougall[{i}]", qdougall_residual(p, u), 1e-9, {"params": describe_params(p), "u": cplx(u)})
    for m in (1, 2, 3):
        p, u = sampling.identity_4_10_case(rng, m)
        rep.add(f"identity-m{m}", identity_4_10_residual(p, m, u), 1e-9,
                {"params": describe_params(p), "u": cplx(u), "m": m})
    return rep


def suite_orthogonality(seed: int, params: QParameters = None) -> Report:
    """Weight, normalization, orthogonality and Stieltjes checks.

    Deterministic; ``seed`` is recorded only.  ``params`` defaults to a
    guard-certified set.
    """
    rep = Report("orthogonality", seed)
    p = params or ORTHO_PARAMS
    draw = {"params": describe_params(p)}
    xs = np.linspace(-1, 1, 101)
    with warnings.catch_warnings():
        # the two-form residual below already reports any disagreement
        warnings.simplefilter("ignore", ImaginaryResidueWarning)
        worst = max(_rel(weight_density(p, x), weight_density_alt(p, x)) for x in xs)
    rep.add("weight-two-forms", worst, 1e-8, draw)
    M = orthogonality_check(p, 5)
    target = np.diag(expected_norms(p, 5))
    rep.add("normalization", abs(M[0, 0] - 1), 1e-6, draw)
    rep.add("orthogonality-matrix", float(np.abs(M - target).max()), 1e-6, draw)
    for z in (2.0, 5.0):
        rep.add(f"stieltjes-z{z:g}", stieltjes_check(p, z), 1e-6, draw)
    return rep


_SUITE_FUNCS: Dict[str, Callable[[int], Report]] = {
    "contiguous": suite_contiguous,
    "solutions": suite_solutions,
    "pincherle": suite_pincherle,
    "wronskian": suite_wronskian,
    "dougall": suite_dougall,
    "orthogonality": suite_orthogonality,
}


def run_suite(name: str, seed: int = 0, orthogonality_params: QParameters = None) -> List[Report]:
    names = SUITES if name == "all" else (name,)
    if any(n not in _SUITE_FUNCS for n in names):
        raise ValueError(f"unknown suite {name!r}")
    out = []
    for n in names:
        if n == "orthogonality":
            out.append(suite_orthogonality(seed, orthogonality_params))
        else:
            out.append(_SUITE_FUNCS[n](seed))
    return out
