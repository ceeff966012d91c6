import random

import pytest

from extremal_lie.extremal import (HypothesisFailed, NotProportional,
                                   check_premet, classify_pair, exp_ad,
                                   extremal_form_value, fixtriangle,
                                   is_extremal, proportionality,
                                   subalgebra_closure_dim)
from extremal_lie.fields import DEFAULT_PRIME, PrimeField
from extremal_lie.realizations import (build_generators, lie_closure,
                                       transvection)

F = PrimeField(DEFAULT_PRIME)


@pytest.fixture(scope="module")
def sl5():
    mats, _ = build_generators("A", 5, F)
    return lie_closure(mats, F), mats


def test_generators_are_extremal(sl5):
    alg, mats = sl5
    for g in mats:
        ok, cert = is_extremal(alg, g)
        assert ok and len(cert.values) == alg.dim


def test_generic_element_is_not_extremal(sl5):
    alg, mats = sl5
    h = alg.add(mats[0], mats[2])  # non-commuting sum is not extremal
    ok, cert = is_extremal(alg, h)
    assert not ok and cert is None


def test_proportionality(sl5):
    alg, mats = sl5
    assert proportionality(alg, mats[0], alg.scale(mats[0], F(7))) == F(7)
    assert proportionality(alg, mats[0], alg.zero()) == F(0)
    with pytest.raises(NotProportional):
        proportionality(alg, mats[0], mats[1])


def test_extremal_form_against_calibrated_trace(sl5):
    alg, mats = sl5
    for g in mats:
        for b in alg.basis():
            assert extremal_form_value(alg, g, b) == alg.form(g, b)


def test_exp_ad_is_an_automorphism(sl5):
    alg, mats = sl5
    rng = random.Random(0)
    a = mats[1]
    t = F(5)
    for _ in range(10):
        u = alg.from_coords([F(rng.randint(-3, 3))
                             for _ in range(alg.dim)])
        v = alg.from_coords([F(rng.randint(-3, 3))
                             for _ in range(alg.dim)])
        lhs = exp_ad(alg, t, a, alg.bracket(u, v))
        rhs = alg.bracket(exp_ad(alg, t, a, u), exp_ad(alg, t, a, v))
        assert alg.eq(lhs, rhs)


def test_exp_ad_requires_nilpotency(sl5):
    alg, mats = sl5
    h = alg.bracket(mats[0], mats[1])  # acts semisimply on the pair
    with pytest.raises(HypothesisFailed):
        exp_ad(alg, F(1), h, mats[0])


def test_classify_pair_kinds(sl5):
    alg, mats = sl5
    e = lambda i: [F(1) if k == i else F(0) for k in range(5)]
    x = transvection(e(0), e(1))
    assert classify_pair(alg, x, alg.scale(x, F(3))) == "Proportional"
    assert classify_pair(alg, x, transvection(e(2), e(3))) == "Abelian2"
    assert classify_pair(alg, x, transvection(e(1), e(2))) == "Heisenberg"
    assert classify_pair(alg, x, transvection(e(1), e(0))) == "Sl2"


def test_subalgebra_closure_dims(sl5):
    alg, mats = sl5
    e = lambda i: [F(1) if k == i else F(0) for k in range(5)]
    x = transvection(e(0), e(1))
    y = transvection(e(1), e(0))
    assert subalgebra_closure_dim(alg, [x]) == 1
    assert subalgebra_closure_dim(alg, [x, y]) == 3


def test_check_premet_all_identities(sl5):
    alg, mats = sl5
    rng = random.Random(1)
    for _ in range(20):
        x = mats[rng.randrange(5)]
        y = alg.from_coords([F(rng.randint(-3, 3))
                             for _ in range(alg.dim)])
        z = alg.from_coords([F(rng.randint(-3, 3))
                             for _ in range(alg.dim)])
        assert all(check_premet(alg, x, y, z).values())


def test_fixtriangle_contract(sl5):
    alg, mats = sl5
    x, y, z = mats[0], mats[1], mats[2]
    fxy = extremal_form_value(alg, x, y)
    fyz = extremal_form_value(alg, y, z)
    fxz = extremal_form_value(alg, x, z)
    fxyz = extremal_form_value(alg, x, alg.bracket(y, z))
    fxzh = fxz - fxyz * fxyz / (2 * fxy * fyz)
    targets = (fxy * fxzh * fyz, F(1), F(1))
    xt, yt, zt, tr = fixtriangle(alg, x, y, z, targets)
    assert extremal_form_value(alg, xt, yt) == targets[0]
    assert extremal_form_value(alg, xt, zt) == targets[1]
    assert extremal_form_value(alg, yt, zt) == targets[2]
    assert extremal_form_value(alg, xt, alg.bracket(yt, zt)).is_zero()
    assert tr.s == fxyz / (fxy * fyz)


def test_fixtriangle_rejects_degenerate_triples(sl5):
    alg, mats = sl5
    # x1 and x4 commute: f(x1, x4) = 0 violates the hypotheses
    with pytest.raises(HypothesisFailed):
        fixtriangle(alg, mats[3], mats[0], mats[1],
                    (F(1), F(1), F(1)))
