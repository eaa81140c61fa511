"""Seeded parameter draws inside the domains where each check is meaningful."""
from __future__ import annotations

import cmath
import math
from typing import Tuple

import numpy as np

from .aqaw import QParameters, is_real_orthogonality
from .contiguous import Relation, TenPhiNineSpec
from .hyperseries import VwpW
from .solutions import SolutionId

SOLUTION_N_RANGE = range(-1, 12)
MAX_TRIES = 10000


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_complex(rng: np.random.Generator, lo: float, hi: float) -> complex:
    return complex(rng.uniform(lo, hi) * cmath.exp(1j * rng.uniform(-math.pi, math.pi)))


def random_real(rng: np.random.Generator, lo: float, hi: float) -> float:
    return float(rng.choice([-1.0, 1.0]) * rng.uniform(lo, hi))


def random_q(rng, lo=0.3, hi=0.7) -> float:
    return float(rng.uniform(lo, hi))


def random_u(rng, lo=1.3, hi=3.0) -> complex:
    return random_complex(rng, lo, hi)


def generic_params(rng, mod=(0.05, 0.8), eps_mod=(0.05, 0.8), q_range=(0.3, 0.7)) -> QParameters:
    q = random_q(rng, *q_range)
    vals = [random_complex(rng, *mod) for _ in range(4)]
    return QParameters(q, *vals, random_complex(rng, *eps_mod))


def _retry(make, ok, what):
    for _ in range(MAX_TRIES):
        case = make()
        if ok(*case) if isinstance(case, tuple) else ok(case):
            return case
    raise RuntimeError(f"could not draw an admissible {what}")


def solution_case(rng, sid: SolutionId) -> Tuple[QParameters, complex]:
    """Parameters and ``u`` with the solution's predicate valid for ``n = -1..11``."""

    def make():
        if sid is SolutionId.S5:
            q = random_q(rng, 0.6, 0.7)
            vals = [random_complex(rng, 3.0, 5.0) for _ in range(5)]
            return QParameters(q, *vals), random_u(rng)
        p = generic_params(rng)
        if sid is SolutionId.S1:
            p = QParameters(p.q, p.alpha, p.beta, p.gamma, random_complex(rng, 0.6, 0.8), p.epsilon)
        return p, random_u(rng)

    def ok(p, u):
        return all(sid.predicate_value(p, n, u) < 0.95 for n in SOLUTION_N_RANGE)

    return _retry(make, ok, f"{sid.name} case")


def pincherle_case(rng) -> Tuple[QParameters, complex]:
    """Point with ``|u|`` in ``[1.3, 3]`` where both closed forms apply."""

    def make():
        return generic_params(rng), random_u(rng)

    def ok(p, u):
        return abs(p.s * p.epsilon / p.q ** 2) < 0.9 and abs(p.epsilon) < 0.9

    return _retry(make, ok, "Pincherle case")


def certified_params(rng) -> QParameters:
    """Real parameters certified free of discrete spectrum, in real orthogonality."""

    def make():
        q = random_q(rng)
        root = math.sqrt(q)
        vals = [random_real(rng, 0.05, 0.9 * root) for _ in range(4)]
        return QParameters(q, *vals, random_real(rng, 0.05, 0.9))

    def ok(p):
        return abs(p.s * p.epsilon / p.q ** 2) < 1 and is_real_orthogonality(p, 50)

    return _retry(make, ok, "certified parameter set")


def dougall_case(rng, epsilon_one: bool = False) -> Tuple[QParameters, complex]:
    """Parameters and a point on the unit circle for the q-Dougall identity."""

    def make():
        p = generic_params(rng, eps_mod=(0.05, 0.95))
        if epsilon_one:
            p = p.with_epsilon(1.0)
        theta = rng.uniform(0.1, math.pi - 0.1)
        return p, complex(cmath.exp(1j * theta))

    def ok(p, u):
        return abs(p.epsilon * p.s / p.q ** 2) < 0.9 and abs(p.epsilon * p.q) < 0.9

    return _retry(make, ok, "q-Dougall case")


def identity_4_10_case(rng, m: int) -> Tuple[QParameters, complex]:
    def make():
        q = random_q(rng)
        al, be, ga = (random_complex(rng, 0.4, 0.9) for _ in range(3))
        de = q ** m / (al * be * ga)
        theta = rng.uniform(0.1, math.pi - 0.1)
        return QParameters(q, al, be, ga, de, 1.0), complex(cmath.exp(1j * theta))

    return _retry(make, lambda p, u: True, "terminating Dougall case")


def _far(x, tol=0.05):
    return abs(x) > tol


def contiguous_case(rng, relation: Relation, n: int = 0):
    """Inputs for one contiguous relation with moduli in ``[0.05, 0.8]``."""
    relation = Relation(relation)

    def draw():
        q = random_q(rng)
        vals = [random_complex(rng, 0.05, 0.8) for _ in range(6)]
        return q, vals

    if relation in (Relation.R2_2, Relation.R2_8):
        def make():
            q, (a, b, c, d, e, f) = draw()
            return TenPhiNineSpec.balanced(a, b, c, d, e, f, q, n)

        def ok(spec):
            a, b, c, q = spec.a, spec.b, spec.c, spec.q
            return all(_far(x) for x in (1 - c * q / b, 1 - b * q / c, 1 - a * q / b, 1 - b * q / a))

        return _retry(make, ok, f"{relation.value} case")

    def make_w():
        q, (a, b, c, d, e, f) = draw()
        return VwpW(a, b, c, d, e, f, q)

    def ok_w(w):
        a, b, c, q = w.a, w.b, w.c, w.q
        if not abs(w.argument) < 0.9:
            return False
        near = [1 - c * q / b, 1 - b * q / c, 1 - a * q / b, 1 - b * q / a, 1 - a / q, 1 - a]
        near += [1 - x / q for x in (w.c, w.d, w.e, w.f)]
        return all(_far(x) for x in near)

    return _retry(make_w, ok_w, f"{relation.value} case")
