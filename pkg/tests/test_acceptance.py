"""The ten acceptance criteria, one test (and one pass/fail line) each.

The whole suite runs once through `extremal_lie.acceptance.run_all`
with a fixed seed; each test then reports and asserts its criterion.
Run `pytest -v tests/test_acceptance.py` for the per-criterion lines.
"""

import pytest

from extremal_lie.acceptance import CRITERIA, run_all


@pytest.fixture(scope="module")
def results():
    out = {r["criterion"]: r for r in run_all(seed=0)}
    assert len(out) == len(CRITERIA)
    return out


def _check(results, number):
    r = results[number]
    status = "pass" if r["passed"] else "FAIL"
    print(f"criterion {number} ({r['name']}): {status} -- {r['detail']} "
          f"[{r['seconds']}s]")
    assert r["passed"], f"criterion {number}: {r['detail']}"


def test_criterion_01_presentation_dimensions(results):
    _check(results, 1)


def test_criterion_02_realization_dimensions(results):
    _check(results, 2)


def test_criterion_03_graph_realization(results):
    _check(results, 3)


def test_criterion_04_catalog_basis(results):
    _check(results, 4)


def test_criterion_05_form_identities(results):
    _check(results, 5)


def test_criterion_06_pair_classification(results):
    _check(results, 6)


def test_criterion_07_exponential_action_law(results):
    _check(results, 7)


def test_criterion_08_triangle_normalisation(results):
    _check(results, 8)


def test_criterion_09_isomorphism_matching(results):
    _check(results, 9)


def test_criterion_10_parameter_solvers(results):
    _check(results, 10)
