"""q-shifted factorials and the scalar conventions used throughout the package.

All routines operate on Python ``complex`` numbers by default.  They are
written against plain arithmetic operators, so passing :mod:`mpmath`
scalars (together with a tighter :class:`ToleranceConfig`) evaluates the
same code path in extended precision; see :func:`extended_precision`.
"""
from __future__ import annotations

import contextlib
import math
import numbers
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

import mpmath

from .exceptions import DomainError, NonConvergence

Scalar = Union[complex, float, "mpmath.mpc", "mpmath.mpf"]

#: Marker accepted wherever an order ``n`` may also be infinite.
INF = math.inf


@dataclass(frozen=True)
class ToleranceConfig:
    """Truncation controls for series and infinite products.

    ``pole_tol`` is the absolute size below which a denominator factor is
    treated as an exact zero.
    """

    rel_tol: float = 1e-12
    max_terms: int = 10000
    tail_window: int = 3
    pole_tol: float = 1e-14

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.tail_window < 1:
            raise ValueError("tail_window must be >= 1")
        if not self.pole_tol >= 0:
            raise ValueError("pole_tol must be nonnegative")

    @classmethod
    def extended(cls, dps: int = 40) -> "ToleranceConfig":
        """Tolerances suited to ``dps`` decimal digits of working precision."""
        return cls(rel_tol=10.0 ** (-(dps - 6)), max_terms=100000, tail_window=3,
                   pole_tol=10.0 ** (-(dps - 2)))


DEFAULT_TOL = ToleranceConfig()


@dataclass
class SeriesValue:
    """Result of a truncated series or product."""

    value: Scalar
    terms_used: int
    converged: bool
    tail_estimate: float = 0.0

    def __complex__(self):
        return complex(self.value)


@dataclass(frozen=True)
class QBase:
    q: Scalar = field()

    def __post_init__(self):
        check_base(self.q)


def check_base(q) -> None:
    if isinstance(q, QBase):
        return
    if not isinstance(q, numbers.Number) and not isinstance(q, (mpmath.mpf, mpmath.mpc)):
        raise DomainError(f"q must be a scalar, got {type(q).__name__}")
    if not abs(q) < 1:
        raise DomainError(f"|q| < 1 is required, got |q| = {float(abs(q)):.6g}")


def _q(q):
    return q.q if isinstance(q, QBase) else q


def is_extended(*values) -> bool:
    """True when any of ``values`` is an mpmath scalar."""
    return any(isinstance(v, (mpmath.mpf, mpmath.mpc)) for v in values)


def to_scalar(x) -> Scalar:
    """Coerce ``x`` to ``complex``, leaving mpmath scalars untouched."""
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return mpmath.mpc(x)
    return complex(x)


@contextlib.contextmanager
def extended_precision(dps: int = 40) -> Iterator[ToleranceConfig]:
    """Raise mpmath's working precision and yield matching tolerances.

    >>> with extended_precision(40) as tol:
    ...     v = qpoch_infinite(mpmath.mpf('0.3'), mpmath.mpf('0.5'), tol).value
    """
    with mpmath.workdps(dps):
        yield ToleranceConfig.extended(dps)


def qpoch_finite(a: Scalar, q: Scalar, n: int) -> Scalar:
    """``(a; q)_n = prod_{j=0}^{n-1} (1 - a q^j)``; exactly 1 for ``n = 0``."""
    q = _q(q)
    if n < 0:
        raise DomainError(f"finite q-Pochhammer order must be >= 0, got {n}")
    result = 1
    term = a
    for _ in range(n):
        result = result * (1 - term)
        term = term * q
    return to_scalar(result)


def qpoch_infinite(a: Scalar, q: Scalar, tol: ToleranceConfig = DEFAULT_TOL) -> SeriesValue:
    """``(a; q)_inf`` truncated once the factors are within ``rel_tol`` of one.

    Stops after ``tail_window`` consecutive factors with
    ``|a q^k| < rel_tol * (1 - |q|)``.  The remainder of the log-product is
    bounded by ``2 |a q^k| / (1 - |q|)``, which is recorded as the tail
    estimate (relative to the product).
    """
    q = _q(q)
    check_base(q)
    aq = abs(q)
    threshold = tol.rel_tol * (1 - aq)
    result = to_scalar(1)
    term = a
    small = 0
    for k in range(tol.max_terms):
        mag = abs(term)
        if mag < threshold:
            small += 1
            if small >= tol.tail_window:
                tail = float(2 * mag / (1 - aq)) if mag else 0.0
                return SeriesValue(result, k, True, tail)
        else:
            small = 0
        result = result * (1 - term)
        if result == 0:
            return SeriesValue(result, k + 1, True, 0.0)
        term = term * q
    raise NonConvergence(
        f"(a;q)_inf did not converge within {tol.max_terms} factors (|q| = {float(aq):.6g})",
        terms_used=tol.max_terms, last_value=result)


def qpoch(a: Scalar, q: Scalar, n, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """Finite or infinite q-Pochhammer symbol as a bare scalar."""
    if n == INF:
        return qpoch_infinite(a, q, tol).value
    return qpoch_finite(a, q, n)


def qpoch_multi(params: Sequence[Scalar], q: Scalar, n, tol: ToleranceConfig = DEFAULT_TOL) -> Scalar:
    """``(a_1, ..., a_k; q)_n``, multiplied in ascending parameter order."""
    if len(params) == 0:
        raise DomainError("qpoch_multi needs at least one parameter")
    result = to_scalar(1)
    for a in params:
        result = result * qpoch(a, q, n, tol)
    return result
