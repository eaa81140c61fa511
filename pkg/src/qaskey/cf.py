"""The continued fraction of the associated recurrence and its closed forms.

``CF(z) = z - a'_0 + K_{n>=1}(-b'^2_n / (z - a'_n))``.  Off the cut it is
evaluated directly by the modified Lentz algorithm and, independently,
through Pincherle's theorem from a minimal solution.  The two explicit
closed forms return ``1/CF``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .aqaw import QParameters, SpectralPoint, coefficients
from .exceptions import DegenerateError, DomainError, NonConvergence, PoleError, SpectrumError
from .hyperseries import W
from .qcore import DEFAULT_TOL, Scalar, ToleranceConfig
from .solutions import CUT_BAND, eval_solution, minimal_solution_id


@dataclass(frozen=True)
class CfConfig:
    tiny_guard: float = 1e-30
    rel_tol: float = 1e-12
    max_depth: int = 5000

    def __post_init__(self):
        if not self.tiny_guard > 0:
            raise ValueError("tiny_guard must be positive")
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_CF = CfConfig()


@dataclass
class CfResult:
    value: Scalar
    depth: int
    converged: bool
    last_delta: float


def _point(pt) -> SpectralPoint:
    if isinstance(pt, SpectralPoint):
        return pt
    return SpectralPoint.from_z(pt)


def lentz_convergents(params: QParameters, z, depth: int, cfg: CfConfig = DEFAULT_CF,
                      tol: ToleranceConfig = DEFAULT_TOL):
    """Yield ``(k, f_k, |f_k/f_{k-1} - 1|)`` for the first ``depth`` convergents.

    ``f_0 = z - a'_0`` and ``f_k`` includes partial fractions ``1..k``.
    """
    tiny = cfg.tiny_guard
    f = z - coefficients(params, 0, tol).a
    if f == 0:
        f = tiny
    C, D = f, 0
    yield 0, f, float("inf")
    for k in range(1, depth + 1):
        c = coefficients(params, k, tol)
        if c.b2 == 0:
            raise PoleError("b'^2_n = 0 truncates the continued fraction", index=k)
        a_k, b_k = -c.b2, z - c.a
        D = b_k + a_k * D
        if D == 0:
            D = tiny
        C = b_k + a_k / C
        if C == 0:
            C = tiny
        D = 1 / D
        delta = C * D
        f = f * delta
        yield k, f, float(abs(delta - 1))


def cf_direct_result(params: QParameters, pt, cfg: CfConfig = DEFAULT_CF,
                     tol: ToleranceConfig = DEFAULT_TOL) -> CfResult:
    z = _point(pt).z
    last = None
    for k, f, change in lentz_convergents(params, z, cfg.max_depth, cfg, tol):
        last = (k, f, change)
        if k > 0 and change < cfg.rel_tol:
            return CfResult(f, k, True, change)
    k, f, change = last
    raise NonConvergence(
        f"continued fraction did not converge within depth {cfg.max_depth} "
        f"(last relative change {change:.3g}); z may lie on the continuous spectrum",
        terms_used=k, last_value=f)


def cf_direct(params: QParameters, pt, cfg: CfConfig = DEFAULT_CF, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``CF(z)`` by the modified Lentz algorithm."""
    return cf_direct_result(params, pt, cfg, tol).value


def cf_pincherle(params: QParameters, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``CF(z) = b'^2_0 X_{-1}/X_0`` for the selected minimal solution."""
    pt = _point(pt)
    b2_0 = coefficients(params, 0, tol).b2
    if b2_0 == 0:
        raise DegenerateError("b'^2_0 = 0: the first row decouples and CF is not given by Pincherle's ratio")
    sid, reciprocal = minimal_solution_id(params, pt)
    x0 = eval_solution(sid, params, 0, pt, reciprocal, tol)
    xm1 = eval_solution(sid, params, -1, pt, reciprocal, tol)
    if x0 == 0:
        raise PoleError("X_0 of the minimal solution", index=0)
    return b2_0 * xm1 / x0


def _outer_u(pt: SpectralPoint) -> Scalar:
    mod = abs(pt.u)
    if abs(mod - 1) <= CUT_BAND:
        raise SpectrumError("closed forms need |u| != 1")
    return pt.u if mod > 1 else 1 / pt.u


def _nz(value, name, tol):
    if abs(value) <= tol.pole_tol:
        raise PoleError(name)
    return value


def closed_form_3_3(params: QParameters, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``1/CF(z)`` from the minimal solution ``X^{(4)}``; needs ``|s eps / q^2| < 1``."""
    pt = _point(pt)
    u = _outer_u(pt)
    q, eps, s = params.q, params.epsilon, params.s
    al, be, ga, de = params.abcd
    if not abs(s * eps / q ** 2) < 1:
        raise DomainError(f"closed form needs |s eps/q^2| < 1, got {float(abs(s * eps / q ** 2)):.6g}")
    pre = (2 / u) * (1 - eps * q / u ** 2) * (1 - s * eps ** 2 / q ** 2) * (1 - s * eps ** 2 / q)
    den = 1
    for x in (al, be, ga, de):
        den = den * _nz(1 - x * eps / u, "(1 - param eps/u)", tol)
    den = den * _nz(1 - s * eps / q ** 2, "(1 - s eps/q^2)", tol)
    rest = [q / (x * u) for x in (al, be, ga, de)]
    bottom = _nz(W(eps / u ** 2, eps, *rest, q, tol), "W in the denominator", tol)
    return pre / den * W(q * eps / u ** 2, q * eps, *rest, q, tol) / bottom


def closed_form_3_4(params: QParameters, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``1/CF(z)`` from the minimal solution ``X^{(6)}``; needs ``|eps| < 1``."""
    pt = _point(pt)
    u = _outer_u(pt)
    q, eps, s = params.q, params.epsilon, params.s
    al, be, ga, de = params.abcd
    if not abs(eps) < 1:
        raise DomainError(f"closed form needs |eps| < 1, got {float(abs(eps)):.6g}")
    pre = (2 / u) * (1 - s * eps ** 2 / q ** 2) * (1 - s * eps ** 2 / q) * (1 - s * eps / (u * u * q))
    den = _nz(1 - eps, "(1 - eps)", tol)
    for x in (al, be, ga, de):
        den = den * _nz(1 - s * eps / (x * u * q), "(1 - s eps/(param u q))", tol)
    rest = [x / u for x in (al, be, ga, de)]
    bottom = _nz(W(s * eps / (u * u * q * q), eps * s / q ** 2, *rest, q, tol), "W in the denominator", tol)
    return pre / den * W(eps * s / (u * u * q), eps * s / q, *rest, q, tol) / bottom


def stieltjes_transform(params: QParameters, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``1/CF(z)`` through the minimal solution (Pincherle)."""
    return 1 / cf_pincherle(params, pt, tol)
