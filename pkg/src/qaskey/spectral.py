"""Orthogonality measure of the associated polynomials and related identities.

On the cut ``x = cos(theta)``, ``u = exp(i theta)``.  The boundary value
``x + i0`` is approached with ``|u| > 1`` and corresponds to ``u -> exp(+i theta)``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, List, Sequence, Union

import numpy as np

from .aqaw import QParameters, SpectralPoint, assoc_polynomial_values, coefficients, is_real_orthogonality
from .cf import cf_pincherle
from .exceptions import DomainError, GuardError, ImaginaryResidueWarning, PoleError
from .hyperseries import W, termination_order
from .qcore import DEFAULT_TOL, Scalar, ToleranceConfig, qpoch_infinite, to_scalar
from .solutions import SolutionId, eval_solution

DEFAULT_QUAD_N = 2048

Sequenceish = Union[Callable[[int], Scalar], Sequence[Scalar]]


def _inf(args, q, tol) -> Scalar:
    out = to_scalar(1)
    for a in args:
        out = out * qpoch_infinite(a, q, tol).value
    return out


def _inf_den(args, q, tol) -> Scalar:
    args = list(args)
    for a in args:
        if termination_order(a, q) is not None:
            raise PoleError(f"(x)_inf with x = {complex(a):.6g}")
    return _inf(args, q, tol)


def _nz(value, name, tol):
    if abs(value) <= tol.pole_tol:
        raise PoleError(name)
    return value


def _at(seq: Sequenceish, n: int) -> Scalar:
    return seq(n) if callable(seq) else seq[n]


def wronskian(seq_x: Sequenceish, seq_y: Sequenceish, n: int) -> Scalar:
    """Casoratian ``X_n Y_{n+1} - X_{n+1} Y_n``.

    Sequences are callables ``n -> value`` (so ``n = -1`` is allowed) or
    indexable containers.
    """
    return _at(seq_x, n) * _at(seq_y, n + 1) - _at(seq_x, n + 1) * _at(seq_y, n)


def wronskian_closed_form(params: QParameters, u, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Closed form of ``W(X^{(4)}_{-1}(u), X^{(4)}_{-1}(1/u))``."""
    q, eps, s = params.q, params.epsilon, params.s
    al, be, ga, de = params.abcd
    u = to_scalar(u)
    num = _inf([s * eps ** 2 / q ** 3, s * eps ** 2 / q ** 2], q, tol)
    den = _inf_den([al * be * eps / q, al * ga * eps / q, al * de * eps / q, be * ga * eps / q,
                    be * de * eps / q, ga * de * eps / q, s * eps / q ** 2, eps], q, tol)
    return 2 * (u - 1 / u) * num / den


def _theta_u(x):
    if not -1 <= x <= 1:
        raise DomainError(f"x must lie in [-1, 1], got {x}")
    theta = math.acos(x)
    return theta, complex(math.cos(theta), math.sin(theta))


def _check_weight_domain(params, tol):
    q, eps, s = params.q, params.epsilon, params.s
    if not abs(s * eps / q ** 2) < 1:
        raise DomainError(f"weight needs |s eps/q^2| < 1, got {float(abs(s * eps / q ** 2)):.6g}")


def weight_density(params: QParameters, x: float, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Absolutely continuous density ``d omega/dx`` on ``[-1, 1]``."""
    _check_weight_domain(params, tol)
    x = float(x)
    if x in (-1.0, 1.0):
        _theta_u(x)
        return 0.0
    theta, u = _theta_u(x)
    q, eps, s = params.q, params.epsilon, params.s
    al, be, ga, de = params.abcd
    pre = (2 * math.sqrt(1 - x * x) / math.pi) * (1 - s * eps ** 2 / q) * (1 - s * eps ** 2 / q ** 2) ** 2 \
        / _nz(1 - s * eps / q ** 2, "(1 - s eps/q^2)", tol)
    num = _inf([eps * q / u ** 2, eps * q * u ** 2, al * be * eps, al * ga * eps, al * de * eps,
                be * ga * eps, be * de * eps, ga * de * eps, eps * q], q, tol)
    den = _inf_den([al * eps / u, al * eps * u, be * eps / u, be * eps * u, ga * eps / u, ga * eps * u,
                    de * eps / u, de * eps * u, s * eps / q ** 2], q, tol)
    w = W(eps / u ** 2, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), eps, q, tol)
    return float((pre * num / den / _nz(abs(w) ** 2, "|W|^2", tol)).real)


def weight_density_alt(params: QParameters, x: float, tol: ToleranceConfig = DEFAULT_TOL,
                       imag_tol: float = 1e-8) -> float:
    """Density from the two-term bracket expression built on ``X^{(6)}_0 / X^{(4)}_{-1}``.

    Warns with :class:`ImaginaryResidueWarning` when the imaginary part is
    not negligible; returns the real part.
    """
    _check_weight_domain(params, tol)
    value = _weight_alt_complex(params, float(x), tol)
    if abs(value.imag) > imag_tol * max(abs(value.real), 1e-300):
        warnings.warn(f"imaginary residue {value.imag:.3g} in density at x={x}", ImaginaryResidueWarning)
    return float(value.real)


def _weight_alt_complex(params, x, tol) -> complex:
    if x in (-1.0, 1.0):
        _theta_u(x)
        return 0j
    theta, u = _theta_u(x)
    q, eps, s = params.q, params.epsilon, params.s
    abcd = params.abcd
    pre = (1 - s * eps ** 2 / q ** 2) * (1 - s * eps ** 2 / q) * qpoch_infinite(eps * q, q, tol).value \
        / (2j * math.pi * _inf_den([s * eps / q ** 2], q, tol))
    t1 = 2 * u * _inf([eps * q * u * u] + [s * eps * u / x_ for x_ in abcd], q, tol) \
        * W(s * u * u * eps / q, s * eps / q, *[x_ * u for x_ in abcd], q, tol) \
        / (_inf_den([s * u * u * eps] + [x_ * u * eps for x_ in abcd], q, tol)
           * _nz(W(eps * u * u, eps, *[q * u / x_ for x_ in abcd], q, tol), "W in the denominator", tol))
    t2 = 2 / u * _inf([eps * q / u ** 2] + [s * eps / (x_ * u) for x_ in abcd], q, tol) \
        * W(s * eps / (u * u * q), s * eps / q, *[x_ / u for x_ in abcd], q, tol) \
        / (_inf_den([s * eps / u ** 2] + [x_ * eps / u for x_ in abcd], q, tol)
           * _nz(W(eps / u ** 2, eps, *[q / (x_ * u) for x_ in abcd], q, tol), "W in the denominator", tol))
    return complex(pre * (t1 - t2))


def weight_density_wronskian(params: QParameters, x: float, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Density from the Casoratian of the boundary values of ``X^{(4)}_{-1}``.

    ``W(X(x+i0), X(x-i0)) / (2 pi i b'^2_0 |X(x-i0)|^2)`` with
    ``X(x +- i0) = X^{(4)}_{-1}(exp(+-i theta))``.
    """
    x = float(x)
    if x in (-1.0, 1.0):
        _theta_u(x)
        return 0.0
    theta, u = _theta_u(x)
    b2_0 = coefficients(params, 0, tol).b2
    if b2_0 == 0:
        raise PoleError("b'^2_0", index=0)
    lower = eval_solution(SolutionId.S4, params, -1, 1 / u, tol=tol)
    value = wronskian_closed_form(params, u, tol) / (2j * math.pi * b2_0 * abs(lower) ** 2)
    return float(value.real)


def classical_aw_weight(params: QParameters, x: float, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Normalized Askey-Wilson weight (``epsilon`` is ignored)."""
    x = float(x)
    if x in (-1.0, 1.0):
        _theta_u(x)
        return 0.0
    theta, u = _theta_u(x)
    q, s = params.q, params.s
    al, be, ga, de = params.abcd
    num = _inf([u * u, 1 / (u * u), q, al * be, al * ga, al * de, be * ga, be * de, ga * de], q, tol)
    den = _inf_den([al * u, al / u, be * u, be / u, ga * u, ga / u, de * u, de / u, s], q, tol)
    return float((num / (den * 2 * math.pi * math.sqrt(1 - x * x))).real)


def boundary_density(params: QParameters, x: float, eta: float = 1e-6,
                     tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """``-Im(1/CF(x + i eta)) / pi``, the Stieltjes-inversion estimate of the density."""
    pt = SpectralPoint.from_z(complex(x, eta))
    return float(-(1 / cf_pincherle(params, pt, tol)).imag / math.pi)


def boundary_density_extrapolated(params: QParameters, x: float, eta: float = 1e-6,
                                  tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Boundary density with the first-order bias in ``eta`` removed.

    The finite-``eta`` estimate is the density smoothed by a Poisson kernel
    of width ``eta``, so its error is linear in ``eta``; one Richardson step
    ``2 f(eta) - f(2 eta)`` cancels that term.
    """
    return 2 * boundary_density(params, x, eta, tol) - boundary_density(params, x, 2 * eta, tol)


def g_function(params: QParameters, u, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """The product ``G(alpha, beta, gamma, delta, eps, u)`` of two ``W`` series."""
    q, eps, s = params.q, params.epsilon, params.s
    abcd = params.abcd
    u = to_scalar(u)
    pre = (1 / u) * _inf([eps * q / u ** 2] + [s * eps / (x_ * u) for x_ in abcd], q, tol) \
        / _inf_den([s * eps / u ** 2] + [x_ * eps / u for x_ in abcd], q, tol)
    w1 = W(s * eps / (u * u * q), s * eps / q, *[x_ / u for x_ in abcd], q, tol)
    w2 = W(eps * u * u, eps, *[q * u / x_ for x_ in abcd], q, tol)
    return pre * w1 * w2


def qdougall_sides(params: QParameters, u, tol: ToleranceConfig = DEFAULT_TOL):
    """``(G(u), G(1/u), right-hand side)`` of the q-Dougall identity."""
    q, eps, s = params.q, params.epsilon, params.s
    al, be, ga, de = params.abcd
    u = to_scalar(u)
    g_u = g_function(params, u, tol)
    g_inv = g_function(params, 1 / u, tol)
    rhs = (1 / u - u) * (1 - s * eps ** 2 / q ** 2) / _nz(1 - s * eps / q ** 2, "(1 - s eps/q^2)", tol) \
        * _inf([al * be * eps, al * ga * eps, al * de * eps, be * ga * eps, be * de * eps, ga * de * eps,
                eps * q / u ** 2, eps * q * u ** 2], q, tol) \
        / _inf_den([al * eps / u, al * eps * u, be * eps / u, be * eps * u, ga * eps / u, ga * eps * u,
                    de * eps / u, de * eps * u], q, tol)
    return g_u, g_inv, rhs


def qdougall_residual(params: QParameters, u, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    g_u, g_inv, rhs = qdougall_sides(params, u, tol)
    scale = max(abs(g_u), abs(g_inv), abs(rhs))
    if scale == 0:
        return 0.0
    return float(abs(g_u - g_inv - rhs) / scale)


def pi_products(params: QParameters, u, tol: ToleranceConfig = DEFAULT_TOL):
    """``(Pi_1(u), Pi_2(u))``."""
    q = params.q
    u = to_scalar(u)
    pi1 = _inf([q / (x_ * u) for x_ in params.abcd], q, tol)
    pi2 = _inf([x_ / u for x_ in params.abcd], q, tol)
    return pi1, pi2


def identity_4_10_residual(params: QParameters, m: int, u, tol: ToleranceConfig = DEFAULT_TOL,
                           balance_rtol: float = 1e-10) -> float:
    """Relative residual of the ``eps = 1``, ``s = q^m`` product identity."""
    q, al, be, ga, de = params.q, *params.abcd
    if abs(params.epsilon - 1) > 1e-14:
        raise DomainError("identity needs epsilon = 1")
    if m < 1 or abs(params.s - q ** m) > balance_rtol * abs(q ** m):
        raise DomainError(f"identity needs alpha beta gamma delta = q^m with m >= 1 (m={m})")
    u = to_scalar(u)
    p1u, p2u = pi_products(params, u, tol)
    p1v, p2v = pi_products(params, 1 / u, tol)
    pre = (q / al) ** (m - 3) * (1 / u - u)
    left_a = pre * u ** (m - 2) * p1u * p2v
    left_b = pre * u ** (2 - m) * p1v * p2u
    rhs = _inf([al * be / q, al * ga / q, al * de / q, q * q / (al * be), q * q / (al * ga), q * q / (al * de),
                u * u, 1 / (u * u)], q, tol)
    scale = max(abs(left_a), abs(left_b), abs(rhs))
    if scale == 0:
        return 0.0
    return float(abs(left_a - left_b - rhs) / scale)


@dataclass(frozen=True)
class GuardResult:
    certified: bool
    reason: str

    def __bool__(self):
        return self.certified


def discrete_spectrum_guard(params: QParameters) -> GuardResult:
    """Certify absence of discrete spectrum from the two sufficient conditions.

    A negative result only means the conditions cannot certify absence.
    """
    q, eps, s = params.q, params.epsilon, params.s
    root_q = math.sqrt(abs(q))
    mods = [abs(x) for x in params.abcd]
    eps_real = abs(complex(eps).imag) <= 1e-14 * max(1.0, abs(eps))
    e = complex(eps).real
    if eps_real and -1 < e < 1 and all(m < root_q for m in mods):
        return GuardResult(True, "-1 < eps < 1 and all |alpha|, |beta|, |gamma|, |delta| < |q|^(1/2)")
    bound = abs(q * q / s) if s != 0 else math.inf
    if eps_real and -bound < e < bound and all(m > root_q for m in mods):
        return GuardResult(True, f"|eps| < |q^2/s| = {bound:.6g} and all parameter moduli > |q|^(1/2)")
    reasons = []
    if not eps_real:
        reasons.append("eps is not real")
    if not all(m < root_q for m in mods) and not all(m > root_q for m in mods):
        reasons.append(f"parameter moduli straddle |q|^(1/2) = {root_q:.6g}")
    elif all(m < root_q for m in mods):
        reasons.append("eps outside (-1, 1)")
    else:
        reasons.append(f"eps outside (-|q^2/s|, |q^2/s|) = (-{bound:.6g}, {bound:.6g})")
    return GuardResult(False, "; ".join(reasons))


def theta_nodes(quad_n: int) -> np.ndarray:
    """Interior trapezoid nodes on ``[0, pi]`` (the endpoint values vanish)."""
    if quad_n < 2:
        raise DomainError("quad_n must be >= 2")
    return np.arange(1, quad_n) * (math.pi / quad_n)


def _certify(params: QParameters, tol):
    guard = discrete_spectrum_guard(params)
    if not guard:
        raise GuardError(f"cannot certify absence of discrete spectrum: {guard.reason}")
    if not is_real_orthogonality(params, 50, tol):
        raise GuardError("parameters are not in the real-orthogonality regime")


def _weighted_nodes(params, quad_n, tol):
    thetas = theta_nodes(quad_n)
    h = math.pi / quad_n
    xs = np.cos(thetas)
    ws = np.array([weight_density(params, x, tol) for x in xs]) * np.sin(thetas) * h
    return xs, ws


def orthogonality_check(params: QParameters, N: int, quad_n: int = DEFAULT_QUAD_N,
                        tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Matrix ``M[n, m] = int P_n P_m d omega`` for ``n, m <= N``."""
    _certify(params, tol)
    xs, ws = _weighted_nodes(params, quad_n, tol)
    P = np.array([[complex(v).real for v in assoc_polynomial_values(params, N, x, tol)] for x in xs])
    return (P * ws[:, None]).T @ P


def expected_norms(params: QParameters, N: int, tol: ToleranceConfig = DEFAULT_TOL) -> List[float]:
    """``prod_{k=1}^n b'^2_k`` for ``n = 0..N``."""
    out, acc = [1.0], 1.0
    for k in range(1, N + 1):
        acc *= complex(coefficients(params, k, tol).b2).real
        out.append(acc)
    return out


def stieltjes_quadrature(params: QParameters, z, quad_n: int = DEFAULT_QUAD_N,
                         tol: ToleranceConfig = DEFAULT_TOL) -> complex:
    """``int d omega(x) / (z - x)`` by the theta-trapezoid rule."""
    _certify(params, tol)
    xs, ws = _weighted_nodes(params, quad_n, tol)
    return complex(np.sum(ws / (complex(z) - xs)))


def stieltjes_check(params: QParameters, z, quad_n: int = DEFAULT_QUAD_N,
                    tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Relative gap between the quadrature Stieltjes transform and ``1/CF(z)``."""
    pt = SpectralPoint.from_z(z)
    if not abs(pt.u) > 1:
        raise DomainError("stieltjes_check needs z off [-1, 1]")
    inv_cf = 1 / cf_pincherle(params, pt, tol)
    quad = stieltjes_quadrature(params, pt.z, quad_n, tol)
    return float(abs(quad - inv_cf) / abs(inv_cf))


@dataclass
class WeightTable:
    nodes: List[float]
    density: List[float]
    params: QParameters
    quadrature_n: int


def weight_table(params: QParameters, grid_n: int = 101, tol: ToleranceConfig = DEFAULT_TOL) -> WeightTable:
    """Density on ``grid_n`` equispaced nodes of ``[-1, 1]``."""
    if grid_n < 2:
        raise DomainError("grid_n must be >= 2")
    nodes = np.linspace(-1.0, 1.0, grid_n).tolist()
    return WeightTable(nodes, [weight_density(params, x, tol) for x in nodes], params, grid_n)
