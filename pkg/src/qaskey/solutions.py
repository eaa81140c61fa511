"""The six explicit solutions of the associated Askey-Wilson recurrence.

Each ``X_n^{(i)}(u)`` is a ratio of infinite q-Pochhammer products times a
power of ``u/2`` or ``1/(2u)`` times one ``W`` series; ``reciprocal=True``
evaluates the same expression at ``1/u``.  Solutions are implemented with
their full prefactors (no constants dropped), so comparisons between
different solutions are made through ratios only.
"""
from __future__ import annotations

import enum
from typing import Iterable, Tuple

from .aqaw import QParameters, SpectralPoint, coefficients
from .exceptions import DomainError, PoleError, SpectrumError
from .hyperseries import W, find_termination, termination_order
from .qcore import DEFAULT_TOL, Scalar, ToleranceConfig, qpoch_infinite, to_scalar

CUT_BAND = 1e-8


class SolutionId(enum.Enum):
    S1 = 1
    S2 = 2
    S3 = 3
    S4 = 4
    S5 = 5
    S6 = 6

    def predicate_value(self, params: QParameters, n: int, u) -> float:
        """Modulus that must stay below one for the ``W`` series to converge."""
        q, eps, s = params.q, params.epsilon, params.s
        al, de = params.alpha, params.delta
        value = {
            SolutionId.S1: lambda: q / (de * u),
            SolutionId.S2: lambda: de / u,
            SolutionId.S3: lambda: al / u,
            SolutionId.S4: lambda: s * q ** (n - 1) * eps,
            SolutionId.S5: lambda: q ** (2 - n) / (s * eps),
            SolutionId.S6: lambda: q ** (n + 1) * eps,
        }[self]()
        return float(abs(value))

    def predicate(self, params: QParameters, n: int, u) -> bool:
        return self.predicate_value(params, n, u) < 1

    @property
    def condition(self) -> str:
        return {
            SolutionId.S1: "|q/(delta u)| < 1",
            SolutionId.S2: "|delta/u| < 1",
            SolutionId.S3: "|alpha/u| < 1",
            SolutionId.S4: "|s q^(n-1) eps| < 1",
            SolutionId.S5: "|q^(2-n)/(s eps)| < 1",
            SolutionId.S6: "|q^(n+1) eps| < 1",
        }[self]


def _inf(args: Iterable[Scalar], q, tol) -> Scalar:
    out = to_scalar(1)
    for a in args:
        out = out * qpoch_infinite(a, q, tol).value
    return out


def _inf_den(args: Iterable[Scalar], q, tol, n) -> Scalar:
    args = list(args)
    for a in args:
        if termination_order(a, q) is not None:
            raise PoleError(f"(x)_inf with x = {complex(a):.6g} (x = q^-k)", index=n)
    return _inf(args, q, tol)


def _pairs(p: QParameters, t) -> list:
    al, be, ga, de = p.abcd
    return [al * be * t, al * ga * t, al * de * t, be * ga * t, be * de * t, ga * de * t]


def _point_u(pt) -> Scalar:
    return pt.u if isinstance(pt, SpectralPoint) else to_scalar(pt)


def _x1(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    al, be, ga, de = p.abcd
    t = eps * q ** n
    pre = (u / 2) ** n * _inf([s * u * t / de, s * eps * t * q ** (n - 1)], q, tol) / _inf_den(
        [s * t / q, de * t / u, al * be * t, al * ga * t, be * ga * t], q, tol, n)
    return pre * W(al * be * ga * u / q, q ** (-n) / eps, eps * s * q ** (n - 1),
                   al * u, be * u, ga * u, q, tol)


def _x2(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    al, be, ga, de = p.abcd
    t = eps * q ** n
    pre = (u / 2) ** n * _inf([s * eps * t * q ** (n - 1), de * u * t * q], q, tol) / _inf_den(
        [t * q, be * de * t, ga * de * t, al * de * t, s * t / (de * u * q)], q, tol, n)
    return pre * W(q * q * u / (al * be * ga), t * q, q ** (2 - n) / (eps * s),
                   q * u / al, q * u / be, q * u / ga, q, tol)


def _x3(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    al, be, ga, de = p.abcd
    t = eps * q ** n
    lead = be * ga * de * eps * t * q ** n / u
    pre = (2 * u) ** (-n) * _inf(
        [s * eps * t * q ** n, s * eps * t * q ** (n - 1), be * ga * de * t / u,
         be * t * q / u, ga * t * q / u, de * t * q / u], q, tol) / _inf_den(
        [t * q, s * t / q] + _pairs(p, t) + [lead * q], q, tol, n)
    return pre * W(lead, q / (al * u), t * q, be * de * t, ga * de * t, be * ga * t, q, tol)


def _x4(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    al, be, ga, de = p.abcd
    t = eps * q ** n
    pre = (2 * u) ** (-n) * _inf(
        [s * eps * t * q ** (n - 1)] + [x * t * q / u for x in (al, be, ga, de)], q, tol) / _inf_den(
        [t * q, t * q * q / (u * u)] + _pairs(p, t), q, tol, n)
    return pre * W(t * q / (u * u), t * q, q / (al * u), q / (be * u), q / (ga * u), q / (de * u), q, tol)


def _x5(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    t = eps * q ** n
    pre = (2 * u) ** (-n) * _inf([s * eps * t * q ** (n - 1), u * u * t], q, tol) / _inf_den(
        [s * t / q] + [x * u * t for x in p.abcd], q, tol, n)
    return pre * W(1 / (t * u * u), 1 / t, *[x / u for x in p.abcd], q, tol)


def _x6(p, n, u, tol):
    q, eps, s = p.q, p.epsilon, p.s
    t = eps * q ** n
    pre = (2 * u) ** (-n) * _inf(
        [s * eps * t * q ** (n - 1)] + [s * t / (x * u) for x in p.abcd], q, tol) / _inf_den(
        [s * t / q, s * t / (u * u)] + _pairs(p, t), q, tol, n)
    return pre * W(s * t / (q * u * u), s * t / q, *[x / u for x in p.abcd], q, tol)


_FORMULAS = {
    SolutionId.S1: _x1, SolutionId.S2: _x2, SolutionId.S3: _x3,
    SolutionId.S4: _x4, SolutionId.S5: _x5, SolutionId.S6: _x6,
}

# Parameters whose value q^-m makes the solution's W terminate.
_TERMINATORS = {
    SolutionId.S1: lambda p, n, u: [q_neg(p, n) / p.epsilon, p.alpha * p.beta * p.gamma * u / p.q],
    SolutionId.S2: lambda p, n, u: [p.epsilon * p.q ** (n + 1), p.q ** (2 - n) / (p.epsilon * p.s)],
    SolutionId.S3: lambda p, n, u: [p.q / (p.alpha * u), p.epsilon * p.q ** (n + 1)],
    SolutionId.S4: lambda p, n, u: [p.epsilon * p.q ** (n + 1)] + [p.q / (x * u) for x in p.abcd],
    SolutionId.S5: lambda p, n, u: [q_neg(p, n) / p.epsilon] + [x / u for x in p.abcd],
    SolutionId.S6: lambda p, n, u: [p.epsilon * p.s * p.q ** (n - 1)] + [x / u for x in p.abcd],
}


def q_neg(p, n):
    return p.q ** (-n)


def eval_solution(sid: SolutionId, params: QParameters, n: int, pt, reciprocal: bool = False,
                  tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Evaluate ``X_n^{(i)}(u)`` (or at ``1/u`` when ``reciprocal``)."""
    u = _point_u(pt)
    if reciprocal:
        u = 1 / u
    if not sid.predicate(params, n, u):
        if find_termination(_TERMINATORS[sid](params, n, u), params.q) is None:
            raise DomainError(
                f"{sid.name} needs {sid.condition} at n={n}; got {sid.predicate_value(params, n, u):.6g}")
    return _FORMULAS[sid](params, n, u, tol)


def recurrence_residual(sid: SolutionId, params: QParameters, n: int, pt, reciprocal: bool = False,
                        tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Relative residual of ``X_{n+1} - (z - a'_n) X_n + b'^2_n X_{n-1}``."""
    u = _point_u(pt)
    z = (u + 1 / u) / 2
    c = coefficients(params, n, tol)
    x_next = eval_solution(sid, params, n + 1, u, reciprocal, tol)
    x_cur = eval_solution(sid, params, n, u, reciprocal, tol)
    # b'^2_n = 0 (eps = 1, n = 0) decouples X_{n-1}, which may sit on a pole.
    x_prev = 0 if c.b2 == 0 else eval_solution(sid, params, n - 1, u, reciprocal, tol)
    terms = (x_next, -(z - c.a) * x_cur, c.b2 * x_prev)
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return float(abs(sum(terms)) / scale)


def proportionality_variation(sid1: SolutionId, sid2: SolutionId, params: QParameters, pt,
                              n_range: Iterable[int], reciprocal: bool = False,
                              tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """``max_n |r_n / r_{n0} - 1|`` with ``r_n = X^{(sid1)}_n / X^{(sid2)}_n``."""
    ns = sorted(n_range)
    if sid1 is sid2:
        return 0.0
    ratios = []
    for n in ns:
        den = eval_solution(sid2, params, n, pt, reciprocal, tol)
        if den == 0:
            raise PoleError(f"{sid2.name} vanishes", index=n, detail="degenerate spectral point")
        ratios.append(eval_solution(sid1, params, n, pt, reciprocal, tol) / den)
    r0 = ratios[0]
    if r0 == 0:
        raise PoleError(f"{sid1.name}/{sid2.name} ratio vanishes", index=ns[0])
    return max(float(abs(r / r0 - 1)) for r in ratios)


def reflected_s1(params: QParameters, n: int, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``X^{(1)}`` pushed through the reflection ``v -> -v - 1``, ``alpha -> q/alpha``.

    The reflected parameters carry ``eps' = 1/(eps q)`` so that index ``-n``
    there sits at ``q^(-v-1)``; the gauge ``prod_{k=1}^n b'^2_k`` turns the
    reflected sequence back into a solution of the original recurrence.
    """
    refl = params.reflected().with_epsilon(1 / (params.epsilon * params.q))
    gauge = to_scalar(1)
    for k in range(1, n + 1):
        gauge *= coefficients(params, k, tol).b2
    return eval_solution(SolutionId.S1, refl, -n, pt, False, tol) * gauge


def reflection_variation(params: QParameters, pt, n_range: Iterable[int],
                         tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """``max_n |r_n / r_{n0} - 1|`` with ``r_n = X^{(2)}_n / reflected_s1(n)``."""
    ratios = [eval_solution(SolutionId.S2, params, n, pt, False, tol) / reflected_s1(params, n, pt, tol)
              for n in sorted(n_range)]
    return max(float(abs(r / ratios[0] - 1)) for r in ratios)


MINIMAL_PREFERENCE = (SolutionId.S6, SolutionId.S4, SolutionId.S3)


def minimal_solution_id(params: QParameters, pt) -> Tuple[SolutionId, bool]:
    """Pick the minimal solution for ``pt`` and whether it is taken at ``1/u``.

    Both ``n``-dependent predicates decrease with ``n``, so holding at
    ``n = -1`` (the lowest index used) certifies every larger index.
    """
    u = _point_u(pt)
    mod = abs(u)
    if abs(mod - 1) <= CUT_BAND:
        raise SpectrumError("no minimal solution on the cut z in [-1, 1] (|u| = 1)")
    reciprocal = mod < 1
    v = 1 / u if reciprocal else u
    failed = []
    for sid in MINIMAL_PREFERENCE:
        if sid.predicate(params, -1, v):
            return sid, reciprocal
        failed.append(f"{sid.name}: {sid.condition} (value {sid.predicate_value(params, -1, v):.6g})")
    raise DomainError("no minimal-solution representation applies; failed " + "; ".join(failed))


def minimal_solution(params: QParameters, pt, n: int,
                     tol: ToleranceConfig = DEFAULT_TOL) -> Tuple[SolutionId, Scalar]:
    """Selected minimal solution id and its value ``X_n^{(s)}``."""
    sid, reciprocal = minimal_solution_id(params, pt)
    return sid, eval_solution(sid, params, n, pt, reciprocal, tol)
