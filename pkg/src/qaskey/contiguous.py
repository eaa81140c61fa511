"""Numerical residuals of the 10phi9 and 8phi7 contiguous relations.

Each relation is a linear combination of three summands that must vanish.
The residual is ``|sum| / max |summand|`` (zero when every summand is zero).

Shift notation follows the definitions that accompany the relations:
``phi(b-, c+)`` replaces ``b -> b/q`` and ``c -> cq``.  The reversed
relation's ``phi_+(b-)`` and ``phi_-(b+)`` (and ``W_+(b-)``, ``W_-(b+)``)
replace ``(a, c, d, e, f, g, h)`` by ``(aq^2, cq, ..., hq)`` and
``(a/q^2, c/q, ..., h/q)`` respectively and leave ``b`` unchanged.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .aqaw import QParameters
from .exceptions import DomainError, PoleError
from .hyperseries import VwpW, eval_vwp, eval_W
from .qcore import DEFAULT_TOL, Scalar, ToleranceConfig, check_base, qpoch_finite, qpoch_multi, to_scalar


class Relation(enum.Enum):
    R2_2 = "R2_2"
    R2_3 = "R2_3"
    R2_8 = "R2_8"
    R2_9 = "R2_9"


@dataclass(frozen=True)
class TenPhiNineSpec:
    """Balanced very-well-poised 10phi9 terminating through ``h = q^-n``."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    f: Scalar
    g: Scalar
    h: Scalar
    q: Scalar
    n: int

    def __post_init__(self):
        check_base(self.q)
        if self.n < 0:
            raise DomainError("termination order n must be >= 0")
        if abs(self.h * self.q ** self.n - 1) > 1e-10:
            raise DomainError("h must equal q^-n")
        lhs = self.b * self.c * self.d * self.e * self.f * self.g * self.h
        rhs = self.a ** 3 * self.q ** 2
        if abs(lhs - rhs) > 1e-10 * abs(rhs):
            raise DomainError("balance condition bcdefgh = a^3 q^2 fails")

    @classmethod
    def balanced(cls, a, b, c, d, e, f, q, n) -> "TenPhiNineSpec":
        """Fix ``h = q^-n`` and solve the balance condition for ``g``."""
        h = q ** (-n)
        g = a ** 3 * q ** 2 / (b * c * d * e * f * h)
        return cls(*(to_scalar(x) for x in (a, b, c, d, e, f, g, h)), q, n)

    @property
    def params(self) -> tuple:
        return (self.b, self.c, self.d, self.e, self.f, self.g, self.h)


def phi10(a, params, q, n, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Terminating very-well-poised 10phi9 with argument ``q`` (``n + 1`` terms)."""
    value = eval_vwp(a, params, q, q, tol)
    return value.value


def _nz(value, name, tol):
    if abs(value) <= tol.pole_tol:
        raise PoleError(name)
    return value


def _residual(*terms) -> float:
    scale = max(abs(t) for t in terms)
    if scale == 0:
        return 0.0
    return float(abs(sum(terms)) / scale)


def residual_2_2(spec: TenPhiNineSpec, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    a, b, c, d, e, f, g, h, q = spec.a, spec.b, spec.c, spec.d, spec.e, spec.f, spec.g, spec.h, spec.q
    rest = (d, e, f, g, h)
    phi = phi10(a, (b, c) + rest, q, spec.n, tol)
    phi_bm_cp = phi10(a, (b / q, c * q) + rest, q, spec.n, tol)
    phi_cm_bp = phi10(a, (b * q, c / q) + rest, q, spec.n, tol)
    t1 = b * (1 - c) * (1 - a / c) * (1 - a * q / c)
    for x in rest:
        t1 = t1 * (1 - a * q / (b * x))
    t1 = t1 / _nz(1 - c * q / b, "(1 - cq/b)", tol) * (phi_bm_cp - phi)
    t2 = c * (1 - b) * (1 - a / b) * (1 - a * q / b)
    for x in rest:
        t2 = t2 * (1 - a * q / (c * x))
    t2 = -t2 / _nz(1 - b * q / c, "(1 - bq/c)", tol) * (phi_cm_bp - phi)
    t3 = -(a * q / c) * (1 - c / b) * (1 - b * c / (a * q)) * phi
    for x in rest:
        t3 = t3 * (1 - x)
    return _residual(t1, t2, t3)


def residual_2_3(w: VwpW, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    a, b, c, d, e, f, q = w.a, w.b, w.c, w.d, w.e, w.f, w.q
    rest = (d, e, f)
    base = eval_W(w, tol).value
    w_bm_cp = eval_W(VwpW(a, b / q, c * q, d, e, f, q), tol).value
    w_cm_bp = eval_W(VwpW(a, b * q, c / q, d, e, f, q), tol).value
    k = b * c * d * e * f / (a * a * q)
    t1 = k * (1 - c) * (1 - a / c) * (1 - a * q / c)
    for x in rest:
        t1 = t1 * (1 - a * q / (b * x))
    t1 = t1 / _nz(1 - c * q / b, "(1 - cq/b)", tol) * (w_bm_cp - base)
    t2 = k * (1 - b) * (1 - a / b) * (1 - a * q / b)
    for x in rest:
        t2 = t2 * (1 - a * q / (c * x))
    t2 = -t2 / _nz(1 - b * q / c, "(1 - bq/c)", tol) * (w_cm_bp - base)
    t3 = -(a * q / c) * (1 - c / b) * (1 - b * c / (a * q)) * (1 - d) * (1 - e) * (1 - f) * base
    return _residual(t1, t2, t3)


def reversal_coefficients(spec: TenPhiNineSpec):
    """``(c1, c2, c3)`` of the reversed relation.

    Products ``(sqrt(a))_k (-sqrt(a))_k`` are evaluated as ``(a; q^2)_k``.
    """
    a, b, q, n = spec.a, spec.b, spec.q, spec.n
    cg = (spec.c, spec.d, spec.e, spec.f, spec.g)
    q2 = q * q
    if n < 1:
        raise DomainError("reversed relation needs n >= 1")

    def ratio(num, den):
        return num / _nz(den, "reversal coefficient denominator", DEFAULT_TOL)

    c1 = ratio(qpoch_finite(a, q2, n) * qpoch_multi([a * q / x for x in (b,) + cg], q, n) * qpoch_finite(a * q ** (n + 1), q, n),
               qpoch_finite(a, q, n) * qpoch_finite(a * q2, q2, n) * qpoch_multi((b,) + cg, q, n)) \
        * (-1) ** n * q ** (n * (n - 1) // 2)
    m = n - 1
    c2 = ratio(qpoch_finite(a * q2, q2, m) * qpoch_finite(a * q ** 3 / b, q, m)
               * qpoch_multi([a * q2 / x for x in cg], q, m) * qpoch_finite(a * q ** (n + 2), q, m),
               qpoch_finite(a * q2, q, m) * qpoch_finite(a * q ** 4, q2, m) * qpoch_finite(b, q, m)
               * qpoch_multi([x * q for x in cg], q, m)) \
        * (-1) ** m * q ** (m * (m - 1) // 2)
    m = n + 1
    c3 = ratio(qpoch_finite(a / q2, q2, m) * qpoch_finite(a / (b * q), q, m)
               * qpoch_multi([a / x for x in cg], q, m) * qpoch_finite(a * q ** n, q, m),
               qpoch_finite(a / q2, q, m) * qpoch_finite(a, q2, m) * qpoch_finite(b, q, m)
               * qpoch_multi([x / q for x in cg], q, m)) \
        * (-1) ** m * q ** (n * (n + 1) // 2)
    return c1, c2, c3


def residual_2_8(spec: TenPhiNineSpec, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    a, b, c, d, e, f, g, h, q, n = (spec.a, spec.b, spec.c, spec.d, spec.e, spec.f, spec.g, spec.h,
                                    spec.q, spec.n)
    if n < 1:
        raise DomainError("reversed relation needs a positive termination order n")
    cg = (c, d, e, f, g)
    c1, c2, c3 = reversal_coefficients(spec)
    phi = phi10(a, spec.params, q, n, tol)
    phi_plus = phi10(a * q * q, (b,) + tuple(x * q for x in cg) + (h * q,), q, n - 1, tol)
    phi_minus = phi10(a / (q * q), (b,) + tuple(x / q for x in cg) + (h / q,), q, n + 1, tol)
    t1 = (b / a) * (1 - h) * (1 - h / a) * (1 - h * q / a)
    for x in (d, e, f, g, c):
        t1 = t1 * (1 - a * q / (b * x))
    t1 = t1 / _nz(1 - a * q / b, "(1 - aq/b)", tol) * (c2 * phi_plus - c1 * phi)
    t2 = (1 - b * h / a) * (1 - h / b) * (1 - h * q / b)
    for x in (d, e, f, g, c):
        t2 = t2 * (1 - q / x)
    t2 = -t2 / _nz(1 - b * q / a, "(1 - bq/a)", tol) * (c3 * phi_minus - c1 * phi)
    t3 = -(q / a) * (1 - a / b) * (1 - b / q) * c1 * phi
    for x in (d, e, f, g, c):
        t3 = t3 * (1 - h * x / a)
    return _residual(t1, t2, t3)


def residual_2_9(w: VwpW, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    a, b, c, d, e, f, q = w.a, w.b, w.c, w.d, w.e, w.f, w.q
    cf = (c, d, e, f)
    base = eval_W(w, tol).value
    w_plus = eval_W(VwpW(a * q * q, b, c * q, d * q, e * q, f * q, q), tol).value
    w_minus = eval_W(VwpW(a / (q * q), b, c / q, d / q, e / q, f / q, q), tol).value
    arg = a * a * q * q / (b * c * d * e * f)

    plus = arg * (1 - a * q) * (1 - a * q * q)
    plus_den = (1 - a * q / b) * (1 - a * q * q / b)
    for x in cf:
        plus = plus * (1 - x)
        plus_den = plus_den * (1 - a * q / x)
    outer1 = b
    for x in (d, e, f, c):
        outer1 = outer1 * (1 - a * q / (b * x))
    outer1 = outer1 / _nz(a * (1 - a * q / b), "a (1 - aq/b)", tol)
    t1 = outer1 * (plus / _nz(plus_den, "W_+ coefficient denominator", tol) * w_plus - base)

    minus = (1 / arg) * (1 - a / (b * q)) * (1 - a / b)
    minus_den = (1 - a / q) * (1 - a)
    for x in cf:
        minus = minus * (1 - a / x)
        minus_den = minus_den * (1 - x / q)
    outer2 = 1
    for x in (d, e, f, c):
        outer2 = outer2 * (1 - q / x)
    outer2 = outer2 / _nz(1 - b * q / a, "(1 - bq/a)", tol)
    t2 = -outer2 * (minus / _nz(minus_den, "W_- coefficient denominator", tol) * w_minus - base)

    t3 = -(q / a) * (1 - a / b) * (1 - b / q) * (1 - arg) * base
    return _residual(t1, t2, t3)


_DISPATCH = {
    Relation.R2_2: (TenPhiNineSpec, residual_2_2),
    Relation.R2_3: (VwpW, residual_2_3),
    Relation.R2_8: (TenPhiNineSpec, residual_2_8),
    Relation.R2_9: (VwpW, residual_2_9),
}


def relation_residual(relation: Union[Relation, str], params, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Relative residual of one contiguous relation at ``params``."""
    relation = Relation(relation)
    kind, fn = _DISPATCH[relation]
    if not isinstance(params, kind):
        raise DomainError(f"{relation.value} takes {kind.__name__} inputs, got {type(params).__name__}")
    return fn(params, tol)


def recurrence_substitution(params: QParameters, n: int, u) -> VwpW:
    """``W`` arguments that turn the 8phi7 limit relation into the recurrence at index ``n``.

    These are the parameters of the ``W`` in ``X^{(3)}_n(u)``.
    """
    q, eps = params.q, params.epsilon
    al, be, ga, de = params.abcd
    t = eps * q ** n
    return VwpW(be * ga * de * eps * t * q ** n / u, q / (al * u), t * q,
                be * de * t, ga * de * t, be * ga * t, q)
