import cmath
import json
import math

import pytest

from qaskey.contiguous import Relation
from qaskey.solutions import SolutionId
from qaskey import sampling
from qaskey.spectral import discrete_spectrum_guard
from qaskey.verification import SUITES, Report, run_suite


def test_same_seed_same_draws():
    a, b = sampling.make_rng(3), sampling.make_rng(3)
    assert sampling.generic_params(a) == sampling.generic_params(b)


def test_random_complex_modulus():
    rng = sampling.make_rng(1)
    mods = [abs(sampling.random_complex(rng, 0.2, 0.5)) for _ in range(200)]
    assert 0.2 <= min(mods) and max(mods) <= 0.5


@pytest.mark.parametrize("sid", list(SolutionId))
def test_solution_case_respects_predicate(sid):
    p, u = sampling.solution_case(sampling.make_rng(2), sid)
    assert all(sid.predicate_value(p, n, u) < 0.95 for n in sampling.SOLUTION_N_RANGE)


def test_pincherle_case_domain():
    rng = sampling.make_rng(4)
    for _ in range(10):
        p, u = sampling.pincherle_case(rng)
        assert abs(p.s * p.epsilon / p.q ** 2) < 0.9 and 1.3 <= abs(u) <= 3.0


def test_certified_params():
    rng = sampling.make_rng(5)
    for _ in range(10):
        p = sampling.certified_params(rng)
        assert discrete_spectrum_guard(p).certified


def test_dougall_case_on_circle():
    rng = sampling.make_rng(6)
    p, u = sampling.dougall_case(rng, epsilon_one=True)
    assert p.epsilon == 1 and abs(abs(u) - 1) < 1e-15
    assert 0.1 <= cmath.phase(u) <= math.pi - 0.1


def test_identity_case_balance():
    p, u = sampling.identity_4_10_case(sampling.make_rng(7), 2)
    assert abs(p.s - p.q ** 2) < 1e-14 and p.epsilon == 1


@pytest.mark.parametrize("relation", list(Relation))
def test_contiguous_case_kinds(relation):
    case = sampling.contiguous_case(sampling.make_rng(8), relation, 2)
    if relation in (Relation.R2_3, Relation.R2_9):
        assert abs(case.argument) < 0.9
    else:
        assert case.n == 2


def test_retry_gives_up():
    with pytest.raises(RuntimeError):
        sampling._retry(lambda: 1, lambda x: False, "thing")


def test_report_bookkeeping():
    rep = Report("demo", 0)
    rep.add("ok", 1e-12, 1e-9)
    assert rep.passed
    rep.add("bad", 1e-3, 1e-9)
    assert not rep.passed
    doc = rep.to_dict()
    assert doc["passed"] is False and len(doc["checks"]) == 2
    json.dumps(doc)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


@pytest.mark.parametrize("name", SUITES)
def test_suites_pass_and_are_deterministic(name):
    first = [r.to_dict() for r in run_suite(name, seed=11)]
    assert all(r["passed"] for r in first), [c for r in first for c in r["checks"] if not c["passed"]]
    if name in ("contiguous", "dougall", "pincherle"):
        assert first == [r.to_dict() for r in run_suite(name, seed=11)]
