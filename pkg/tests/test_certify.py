import json

import pytest

from extremal_lie import certify
from extremal_lie.certify import (ConditionViolated, FormMismatch,
                                  NoRootInField, PsiVector,
                                  certify_family, check_genericity,
                                  graph_realization_check,
                                  long_monomial_indices, match_algebras,
                                  normalize_generators, psi, solve_param_B,
                                  solve_params_D)
from extremal_lie.extremal import extremal_form_value
from extremal_lie.fields import DEFAULT_PRIME, PrimeField
from extremal_lie.graphs import build_family_graph
from extremal_lie.realizations import build_generators, lie_closure

F = PrimeField(DEFAULT_PRIME)


def closure_of(family, n, params=()):
    mats, _ = build_generators(family, n, F,
                               tuple(F(p) for p in params))
    return lie_closure(mats, F), mats


@pytest.fixture(scope="module")
def b5():
    return closure_of("B", 5, (1,))


@pytest.fixture(scope="module")
def d5():
    return closure_of("D", 5, (2, 3))


def test_psi_vector_length_validation():
    with pytest.raises(ValueError):
        PsiVector("D", 5, (F(1),) * 8)  # needs n + 4 = 9
    PsiVector("B", 5, (F(1),) * 7)
    PsiVector("A", 5, (F(1),) * 6)
    PsiVector("C", 6, (F(1),) * 5)


def test_long_monomial_indices():
    assert long_monomial_indices(5) == (3, 5, 4, 3, 2)
    assert long_monomial_indices(6) == (3, 4, 6, 5, 4, 3, 2)


def test_psi_deterministic(d5):
    alg, mats = d5
    v1 = psi("D", alg, mats)
    v2 = psi("D", alg, mats)
    assert v1 == v2 and len(v1.values) == 9


def test_psi_family_c():
    alg, mats = closure_of("C", 6)
    vec = psi("C", alg, mats)
    assert len(vec.values) == 5
    for i, v in enumerate(vec.values):
        assert v == extremal_form_value(alg, mats[i], mats[i + 1])


def test_graph_realization_check_reports_witnesses(b5):
    alg, mats = b5
    ok, witnesses = graph_realization_check(
        alg, mats, build_family_graph("B", 5))
    assert ok and witnesses == []
    bad_ok, bad_witnesses = graph_realization_check(
        alg, mats, build_family_graph("D", 5))
    assert not bad_ok and bad_witnesses


def test_check_genericity_flags(d5):
    alg, mats = d5
    flags = check_genericity("D", alg, mats, params=(F(2), F(3)))
    assert flags["triangle123"] and flags["triangle_end"]
    assert flags["chain_nonzero"]
    assert flags["param_open"] and flags["lambda_open"]


def test_normalize_generators_reaches_canonical_gauge(b5):
    alg, mats = b5
    ctx, g = normalize_generators("B", alg, mats)
    K = ctx.field
    f = lambda i, j: extremal_form_value(ctx, g[i - 1], g[j - 1])
    assert f(1, 2) == K(-8)
    assert f(1, 3) == K(1)
    assert f(2, 3) == K(2)
    assert f(3, 4) == K(2)
    assert f(3, 5) == K(2)
    assert extremal_form_value(
        ctx, g[0], ctx.bracket(g[1], g[2])).is_zero()


def test_solve_param_b_round_trip(b5):
    alg, mats = b5
    ctx, g = normalize_generators("B", alg, mats)
    f_long = psi("B", ctx, g).values[-1]
    assert solve_param_B(f_long, 5) == ctx.field(1)


def test_solve_param_b_excluded_values():
    with pytest.raises(ConditionViolated):
        solve_param_B(F(0), 5)
    with pytest.raises(ConditionViolated):
        solve_param_B(F(8), 5)
    with pytest.raises(ConditionViolated):
        solve_param_B(F(-8), 6)
    with pytest.raises(ConditionViolated):
        solve_param_B(F(-4), 6)  # pole of the even-rank relation


def test_solve_params_d_odd_round_trip(d5):
    alg, mats = d5
    ctx, g = normalize_generators("D", alg, mats)
    vec = psi("D", ctx, g)
    cands = solve_params_D(vec.values[-1], vec.values[1], 5)
    for alpha, beta in cands:
        # forward relations of the canonical gauge
        assert vec.values[-1] == 4 * alpha * (1 + beta) + 8
        s = vec.values[1] * vec.values[1]
        assert s == -(2 * alpha + 4) ** 2 * (1 + beta)


def test_solve_params_d_special_branch():
    f_short = F(4)
    got = solve_params_D(F(8), f_short, 5)
    assert got == [(F(0), -1 - f_short * f_short / 16)]


def test_certify_family_report_schema():
    report = certify_family("A", 5, (), field=F, seed=0,
                            identity_samples=5, spanning_samples=10)
    d = report.to_dict()
    assert list(d) == ["family", "n", "field", "params", "extremal",
                      "graph_match", "dim", "dim_expected", "catalog_rank",
                      "spanning_samples", "psi", "genericity",
                      "identities", "verdict"]
    assert d["verdict"] == "pass"
    assert json.loads(report.to_json()) == d


def test_certify_family_deterministic():
    r1 = certify_family("C", 6, (), field=F, seed=3,
                        identity_samples=5, spanning_samples=10)
    r2 = certify_family("C", 6, (), field=F, seed=3,
                        identity_samples=5, spanning_samples=10)
    assert r1.to_json() == r2.to_json()


def test_match_identity_certificate(b5):
    alg, mats = b5
    cert = match_algebras(alg, mats, alg, mats, "B")
    assert cert.verdict == "pass"
    assert cert.params1 == cert.params2
    assert cert.pairs_checked == alg.dim * (alg.dim - 1) // 2


def test_match_rejects_dimension_mismatch(b5):
    alg, mats = b5
    other, others = closure_of("D", 5, (2, 3))
    with pytest.raises(FormMismatch):
        match_algebras(alg, mats, other, others, "B")
