"""Basic hypergeometric series and the very-well-poised 8phi7 ``W``.

Both evaluators sum by term ratios.  A series terminates when one of its
numerator parameters is ``q^-m`` for an integer ``m >= 0`` (detected to a
relative distance of ``1e-10``); otherwise summation stops once
``tail_window`` consecutive terms are below ``rel_tol`` relative to the
partial sum and a geometric bound on the remainder is as well.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exceptions import DomainError, NonConvergence, PoleError
from .qcore import DEFAULT_TOL, Scalar, SeriesValue, ToleranceConfig, check_base, to_scalar

TERMINATION_RTOL = 1e-10


def termination_order(param: Scalar, q: Scalar, max_order: int = 100000) -> Optional[int]:
    """Return ``m`` when ``param == q^-m`` (``m >= 0``) to 1e-10 relative, else None."""
    if param == 0:
        return None
    aq = abs(q)
    if aq == 0:
        return 0 if abs(param - 1) < TERMINATION_RTOL else None
    m = round(float(math.log(float(abs(param))) / -math.log(float(aq))))
    if m < 0 or m > max_order:
        return None
    if abs(param * q ** m - 1) < TERMINATION_RTOL:
        return m
    return None


def find_termination(params: Sequence[Scalar], q: Scalar, max_order: int = 100000) -> Optional[int]:
    """Smallest termination order among ``params`` (first index wins ties)."""
    best = None
    for p in params:
        m = termination_order(p, q, max_order)
        if m is not None and (best is None or m < best):
            best = m
    return best


@dataclass(frozen=True)
class PhiSeriesSpec:
    """Parameters of ``_{r+1}phi_r(numerators; denominators; q, z)``."""

    numerator_params: tuple
    denominator_params: tuple
    q: Scalar
    argument: Scalar

    def __post_init__(self):
        object.__setattr__(self, "numerator_params", tuple(self.numerator_params))
        object.__setattr__(self, "denominator_params", tuple(self.denominator_params))
        if len(self.numerator_params) != len(self.denominator_params) + 1:
            raise DomainError("phi series needs exactly one more numerator than denominator parameter")
        check_base(self.q)

    @property
    def terminating_order(self) -> Optional[int]:
        return find_termination(self.numerator_params, self.q)

    @property
    def is_terminating(self) -> bool:
        return self.terminating_order is not None

    def is_balanced(self, rtol: float = 1e-10) -> bool:
        """Saalschützian check: ``q * prod(numerators) == prod(denominators)`` with ``z = q``."""
        num = self.q
        for a in self.numerator_params:
            num = num * a
        den = 1
        for b in self.denominator_params:
            den = den * b
        return abs(self.argument - self.q) <= rtol * abs(self.q) and abs(num - den) <= rtol * abs(den)

    def is_very_well_poised(self, rtol: float = 1e-10) -> bool:
        a = self.numerator_params[0]
        if len(self.numerator_params) < 3:
            return False
        pairs = zip(self.numerator_params[1:], self.denominator_params)
        return all(abs(x * y - a * self.q) <= rtol * abs(a * self.q) for x, y in pairs)


def _denominator_factor(b, qn, n, tol):
    factor = 1 - b * qn
    if abs(factor) <= tol.pole_tol:
        raise PoleError(f"(1 - b q^n) with b = {complex(b):.6g}", index=n)
    return factor


def _sum_by_ratio(ratio, kernel, q, z, terminate_at, tol: ToleranceConfig, label: str) -> SeriesValue:
    """Sum ``sum_n kernel(n) * t_n`` where ``t_{n+1} = t_n * ratio(n)``.

    ``ratio(n)`` returns ``(numerator, denominator)``; it is responsible for
    rejecting vanishing denominator factors.
    """
    term = to_scalar(1)
    total = term * kernel(0)
    if terminate_at == 0:
        return SeriesValue(total, 1, True, 0.0)
    small = 0
    limit = terminate_at if terminate_at is not None else tol.max_terms
    max_abs = abs(total)
    prev_mag = abs(total)
    az = abs(z)
    for n in range(limit):
        num, den = ratio(n)
        term = term * num / den
        contrib = term * kernel(n + 1)
        total = total + contrib
        mag = abs(contrib)
        max_abs = max(max_abs, mag)
        if terminate_at is not None:
            continue
        if term == 0:
            return SeriesValue(total, n + 2, True, 0.0)
        scale = abs(total) if total != 0 else max_abs
        if mag <= tol.rel_tol * scale:
            small += 1
        else:
            small = 0
        if small >= tol.tail_window:
            rho = max(float(az), float(mag / prev_mag) if prev_mag else 0.0)
            tail = float(mag * rho / (1 - rho)) if rho < 1 else float("inf")
            if tail <= tol.rel_tol * float(scale):
                return SeriesValue(total, n + 2, True, tail)
        prev_mag = mag
    if terminate_at is not None:
        return SeriesValue(total, terminate_at + 1, True, 0.0)
    raise NonConvergence(f"{label} did not converge within {tol.max_terms} terms (|z| = {float(az):.6g})",
                         terms_used=tol.max_terms, last_value=total)


def eval_phi(spec: PhiSeriesSpec, tol: ToleranceConfig = DEFAULT_TOL) -> SeriesValue:
    """Evaluate ``_{r+1}phi_r`` by its term-ratio recurrence."""
    q, z = spec.q, spec.argument
    nums, dens = spec.numerator_params, spec.denominator_params
    m = find_termination(nums, q, tol.max_terms)
    if m is None and not abs(z) < 1:
        raise DomainError(f"nonterminating phi series needs |z| < 1, got |z| = {float(abs(z)):.6g}")
    if z == 0:
        return SeriesValue(to_scalar(1), 1, True, 0.0)

    def ratio(n):
        qn = q ** n
        num = z
        for a in nums:
            num = num * (1 - a * qn)
        den = 1 - q * qn
        for b in dens:
            den = den * _denominator_factor(b, qn, n, tol)
        return num, den

    return _sum_by_ratio(ratio, lambda n: 1, q, z, m, tol, "phi series")


@dataclass(frozen=True)
class VwpW:
    """Arguments of ``W(a; b, c, d, e, f)``, the very-well-poised 8phi7."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    e: Scalar
    f: Scalar
    q: Scalar

    def __post_init__(self):
        check_base(self.q)
        if self.b * self.c * self.d * self.e * self.f == 0:
            raise DomainError("W(a; b, c, d, e, f) needs bcdef != 0")

    @property
    def params(self) -> tuple:
        return (self.b, self.c, self.d, self.e, self.f)

    @property
    def argument(self) -> Scalar:
        return self.a ** 2 * self.q ** 2 / (self.b * self.c * self.d * self.e * self.f)

    @property
    def terminating_order(self) -> Optional[int]:
        return find_termination((self.a,) + self.params, self.q)

    def to_phi(self) -> PhiSeriesSpec:
        """Explicit 8phi7 with the ``+-q sqrt(a)`` pair (principal square root)."""
        import cmath

        import mpmath

        a, q = self.a, self.q
        root = mpmath.sqrt(a) if isinstance(a, (mpmath.mpf, mpmath.mpc)) else cmath.sqrt(a)
        nums = (a, q * root, -q * root) + self.params
        dens = (root, -root) + tuple(a * q / p for p in self.params)
        return PhiSeriesSpec(nums, dens, q, self.argument)


def eval_vwp(a: Scalar, params: Sequence[Scalar], q: Scalar, argument: Scalar,
             tol: ToleranceConfig = DEFAULT_TOL) -> SeriesValue:
    """Very-well-poised series with numerators ``a, +-q sqrt(a), params`` and
    denominators ``+-sqrt(a), aq/params``.

    The ``+-q sqrt(a)`` pair is folded into the kernel
    ``(1 - a q^{2n}) / (1 - a)``, so no square root is taken.
    """
    params = tuple(params)
    if abs(1 - a) <= tol.pole_tol:
        raise PoleError("(1 - a) in the very-well-poised kernel")
    z = argument
    m = find_termination((a,) + params, q, tol.max_terms)
    if m is None and not abs(z) < 1:
        raise DomainError(f"nonterminating very-well-poised series needs |z| < 1, got {float(abs(z)):.6g}")
    nums = (a,) + params
    dens = tuple(a * q / p for p in params)
    one_minus_a = 1 - a

    def ratio(n):
        qn = q ** n
        num = z
        for p in nums:
            num = num * (1 - p * qn)
        den = 1 - q * qn
        for p in dens:
            den = den * _denominator_factor(p, qn, n, tol)
        return num, den

    def kernel(n):
        return (1 - a * q ** (2 * n)) / one_minus_a

    return _sum_by_ratio(ratio, kernel, q, z, m, tol, "very-well-poised series")


def eval_W(w: VwpW, tol: ToleranceConfig = DEFAULT_TOL) -> SeriesValue:
    """Sum ``W(a; b, c, d, e, f)`` (argument ``a^2 q^2 / (bcdef)``)."""
    return eval_vwp(w.a, w.params, w.q, w.argument, tol)


def W(a, b, c, d, e, f, q, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Value of ``W(a; b, c, d, e, f)`` as a bare scalar."""
    return eval_W(VwpW(a, b, c, d, e, f, q), tol).value
