"""Associated q-Askey-Wilson recurrence coefficients and polynomials.

The associated family replaces ``q^n`` by ``eps * q^n`` in the classical
monic Askey-Wilson coefficients.  Every coefficient is therefore a function
of the single shifted power ``t = eps * q^n``; the helpers below take ``t``
directly, which also covers the index reflection ``v -> -v - 1`` without
complex logarithms.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from typing import Optional

import mpmath

from .exceptions import DomainError, PoleError
from .hyperseries import W
from .qcore import DEFAULT_TOL, Scalar, ToleranceConfig, check_base, is_extended, qpoch_finite, qpoch_multi, to_scalar


@dataclass(frozen=True)
class QParameters:
    """Base ``q`` and parameters ``alpha, beta, gamma, delta, epsilon``."""

    q: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    epsilon: Scalar = 1.0

    def __post_init__(self):
        check_base(self.q)
        if self.epsilon == 0:
            raise DomainError("epsilon must be nonzero")
        if self.alpha == 0:
            raise DomainError("alpha must be nonzero (it divides the recurrence coefficients)")

    @property
    def s(self) -> Scalar:
        return self.alpha * self.beta * self.gamma * self.delta

    @property
    def abcd(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def shift_power(self, n: int) -> Scalar:
        """``q^v = eps * q^n``."""
        return self.epsilon * self.q ** n

    def shift_index(self, n: int) -> Scalar:
        """The shifted index ``v = n + log(eps)/log(q)`` (principal logarithms)."""
        return n + cmath.log(complex(self.epsilon)) / cmath.log(complex(self.q))

    def with_epsilon(self, epsilon) -> "QParameters":
        return replace(self, epsilon=epsilon)

    def reflected(self) -> "QParameters":
        """Parameters ``(q/alpha, q/beta, q/gamma, q/delta)`` with the same ``eps``."""
        q = self.q
        return replace(self, alpha=q / self.alpha, beta=q / self.beta,
                       gamma=q / self.gamma, delta=q / self.delta)

    def permuted(self, order) -> "QParameters":
        vals = self.abcd
        a, b, c, d = (vals[i] for i in order)
        return replace(self, alpha=a, beta=b, gamma=c, delta=d)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    n: int
    A: Scalar
    B: Scalar
    a: Scalar
    b2: Scalar


@dataclass(frozen=True)
class SpectralPoint:
    """A point ``z = (u + 1/u)/2`` together with its ``u``.

    Built with :meth:`from_z` the branch ``|u| >= 1`` is used; for real
    ``z`` inside ``(-1, 1)`` that is the limit from the upper half plane,
    ``u = exp(i theta)`` with ``z = cos(theta)``.  :meth:`from_u` keeps any
    nonzero ``u`` as given (needed for the ``1/u`` solutions).
    """

    z: Scalar
    u: Scalar

    @classmethod
    def from_u(cls, u) -> "SpectralPoint":
        u = to_scalar(u)
        if u == 0:
            raise DomainError("u must be nonzero")
        return cls((u + 1 / u) / 2, u)

    @classmethod
    def from_z(cls, z) -> "SpectralPoint":
        z = to_scalar(z)
        sqrt = mpmath.sqrt if is_extended(z) else cmath.sqrt
        if z.imag == 0 and -1 <= z.real <= 1:
            x = z.real
            u = x + 1j * sqrt(1 - x * x).real
            return cls(z, to_scalar(u))
        u = z + sqrt(z - 1) * sqrt(z + 1)
        if abs(u) < 1:
            u = 1 / u
        return cls(z, u)

    @classmethod
    def from_theta(cls, theta) -> "SpectralPoint":
        if is_extended(theta):
            return cls.from_u(mpmath.expj(theta))
        return cls.from_u(cmath.exp(1j * theta))

    @property
    def theta(self) -> Optional[float]:
        if abs(abs(self.u) - 1) > 1e-12:
            return None
        return cmath.phase(complex(self.u))

    @property
    def reciprocal(self) -> "SpectralPoint":
        return SpectralPoint(self.z, 1 / self.u)

    @property
    def on_cut(self) -> bool:
        return abs(abs(self.u) - 1) <= 1e-12


def _nonzero(value, name, n, tol):
    if abs(value) <= tol.pole_tol:
        raise PoleError(name, index=n)
    return value


def coefficients_at_power(alpha, beta, gamma, delta, t, q, n=None, tol: ToleranceConfig = DEFAULT_TOL):
    """``A, B, a`` of the monic recurrence evaluated at ``q^n -> t``."""
    s = alpha * beta * gamma * delta
    A = ((1 - s * t / q) * (1 - alpha * beta * t) * (1 - alpha * gamma * t) * (1 - alpha * delta * t)
         / (2 * alpha
            * _nonzero(1 - s * t * t / q, "(1 - s eps^2 q^(2n-1))", n, tol)
            * _nonzero(1 - s * t * t, "(1 - s eps^2 q^(2n))", n, tol)))
    B = (alpha * (1 - t) * (1 - beta * gamma * t / q) * (1 - beta * delta * t / q) * (1 - gamma * delta * t / q)
         / (2
            * _nonzero(1 - s * t * t / (q * q), "(1 - s eps^2 q^(2n-2))", n, tol)
            * _nonzero(1 - s * t * t / q, "(1 - s eps^2 q^(2n-1))", n, tol)))
    a = -A - B + alpha / 2 + 1 / (2 * alpha)
    return A, B, a


def coefficients(params: QParameters, n: int, tol: ToleranceConfig = DEFAULT_TOL) -> RecurrenceCoefficients:
    """Recurrence coefficients ``A'_n, B'_n, a'_n, b'^2_n``.

    ``b'^2_n = A'_{n-1} B'_n`` so index ``n - 1`` must be admissible too.
    """
    p = params
    t = p.shift_power(n)
    A, B, a = coefficients_at_power(p.alpha, p.beta, p.gamma, p.delta, t, p.q, n, tol)
    A_prev, _, _ = coefficients_at_power(p.alpha, p.beta, p.gamma, p.delta, t / p.q, p.q, n - 1, tol)
    return RecurrenceCoefficients(n, A, B, a, A_prev * B)


def diagonal(params: QParameters, n: int, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    return coefficients(params, n, tol).a


def offdiagonal_sq(params: QParameters, n: int, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    return coefficients(params, n, tol).b2


def eval_assoc_polynomial(params: QParameters, n: int, pt, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``P_n(z; eps)`` by forward recurrence from ``P_{-1} = 0, P_0 = 1``."""
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    z = pt.z if isinstance(pt, SpectralPoint) else to_scalar(pt)
    prev, cur = to_scalar(0), to_scalar(1)
    for k in range(n):
        c = coefficients(params, k, tol)
        prev, cur = cur, (z - c.a) * cur - c.b2 * prev
    return cur


def assoc_polynomial_values(params: QParameters, n_max: int, z, tol: ToleranceConfig = DEFAULT_TOL) -> list:
    """``[P_0(z), ..., P_{n_max}(z)]`` from a single forward sweep."""
    coeffs = [coefficients(params, k, tol) for k in range(n_max)]
    out = [to_scalar(1)]
    prev, cur = to_scalar(0), to_scalar(1)
    for c in coeffs:
        prev, cur = cur, (z - c.a) * cur - c.b2 * prev
        out.append(cur)
    return out


def _require_classical(params: QParameters):
    if abs(params.epsilon - 1) > 1e-14:
        raise DomainError("explicit Askey-Wilson formulas need epsilon = 1")


def eval_aw_4phi3(params: QParameters, n: int, pt: SpectralPoint, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Monic Askey-Wilson ``P_n`` from its terminating balanced 4phi3.

    The 4phi3 terms grow like ``|q|^(-n k)`` and cancel, so binary64 inputs
    are summed in mpmath with enough guard digits and rounded back.
    """
    _require_classical(params)
    if is_extended(params.q, pt.u, *params.abcd):
        return _aw_4phi3(params, n, pt, tol)
    lost = n * (n + 1) / 2 * -math.log10(abs(params.q)) if n else 0.0
    with mpmath.workdps(30 + int(lost)):
        mp = lambda x: mpmath.mpc(complex(x))
        ext = QParameters(mp(params.q), mp(params.alpha), mp(params.beta), mp(params.gamma),
                          mp(params.delta), mpmath.mpc(1))
        value = _aw_4phi3(ext, n, SpectralPoint(mp(pt.z), mp(pt.u)), tol)
        return complex(value)


def _aw_4phi3(params, n, pt, tol):
    q, al, be, ga, de = params.q, params.alpha, params.beta, params.gamma, params.delta
    s, u = params.s, pt.u
    denom = qpoch_finite(s / q, q, 2 * n)
    if abs(denom) <= tol.pole_tol:
        raise PoleError("(s/q)_{2n}", index=n)
    num = (q ** -n, s * q ** (n - 1), al * u, al / u)
    den = (al * be, al * ga, al * de)
    total = to_scalar(0)
    term = to_scalar(1)
    for k in range(n + 1):
        total = total + term
        if k == n:
            break
        qk = q ** k
        r = q
        for a in num:
            r = r * (1 - a * qk)
        d = 1 - q * qk
        for b in den:
            d = d * _nonzero(1 - b * qk, "(alpha beta, alpha gamma, alpha delta)_k", k, tol)
        term = term * r / d
    pre = qpoch_multi([al * be, al * ga, al * de], q, n) * qpoch_finite(s / q, q, n) / ((2 * al) ** n * denom)
    return pre * total


def eval_aw_symmetric(params: QParameters, n: int, pt: SpectralPoint, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Monic Askey-Wilson ``P_n`` from the form symmetric in ``alpha..delta``."""
    _require_classical(params)
    q, s, u = params.q, params.s, pt.u
    d1 = qpoch_finite(s / q, q, 2 * n)
    d2 = qpoch_finite(u * u, q, n)
    if abs(d1) <= tol.pole_tol:
        raise PoleError("(s/q)_{2n}", index=n)
    if abs(d2) <= tol.pole_tol:
        raise PoleError("(u^2)_n", index=n)
    if n == 0:
        return to_scalar(1)
    pre = (2 * u) ** (-n) * qpoch_multi([x * u for x in params.abcd] + [s / q], q, n) / (d1 * d2)
    return pre * W(q ** (-n) / (u * u), q ** (-n), *[x / u for x in params.abcd], q, tol=tol)


def reflection_residual(params: QParameters, n: int, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Residual of the index reflection ``v -> -v - 1`` with ``alpha -> q/alpha`` etc.

    Checks ``b^2_{-v-1}(q/alpha, ...) = b^2_{v+1}(alpha, ...)`` and
    ``a_{-v-1}(q/alpha, ...) = a_v(alpha, ...)`` where ``q^v = eps q^n``; the
    reflected side is evaluated with the effective shift
    ``eps' = 1 / (eps q^(2n+1))``.
    """
    p = params
    eps_reflected = 1 / (p.epsilon * p.q ** (2 * n + 1))
    refl = p.reflected().with_epsilon(eps_reflected)
    lhs_b2 = coefficients(refl, n, tol).b2
    rhs_b2 = coefficients(p, n + 1, tol).b2
    lhs_a = coefficients(refl, n, tol).a
    rhs_a = coefficients(p, n, tol).a
    return max(_rel(lhs_b2, rhs_b2), _rel(lhs_a, rhs_a))


def _rel(x, y) -> float:
    scale = max(abs(x), abs(y))
    if scale == 0:
        return 0.0
    return float(abs(x - y) / scale)


def is_real_orthogonality(params: QParameters, n_max: int = 50, tol: ToleranceConfig = DEFAULT_TOL,
                          imag_tol: float = 1e-12) -> bool:
    """Numerical check of ``b'^2_{n+1} > 0`` and ``a'_n`` real for ``n = 0..n_max``."""
    for n in range(n_max + 1):
        a = coefficients(params, n, tol).a
        b2 = coefficients(params, n + 1, tol).b2
        if abs(a.imag) > imag_tol * max(1.0, abs(a)) or abs(b2.imag) > imag_tol * max(1.0, abs(b2)):
            return False
        if not b2.real > 0:
            return False
    return True
