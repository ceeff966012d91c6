import pytest

from extremal_lie.fields import (DEFAULT_PRIME, DescriptorMismatch,
                                 NoSquareRoot, NotInvertible, PrimeField,
                                 QuadraticExtension, QQ, lift_element)


@pytest.fixture
def F():
    return PrimeField(DEFAULT_PRIME)


def test_prime_field_arithmetic(F):
    a, b = F(7), F(-3)
    assert a + b == F(4)
    assert a * b == F(-21)
    assert (a / b) * b == a
    assert -a + a == F(0)
    assert a ** 3 == F(343)
    assert F(DEFAULT_PRIME) == F(0)


def test_prime_field_division_by_zero(F):
    with pytest.raises(NotInvertible):
        F(1) / F(0)


def test_prime_field_requires_prime_modulus():
    with pytest.raises(ValueError):
        PrimeField(91)


def test_prime_field_sqrt_roundtrip(F):
    for k in range(2, 40):
        sq = F(k) * F(k)
        r = sq.sqrt()
        assert r * r == sq


def test_prime_field_sqrt_canonical_branch(F):
    # the returned root is a deterministic representative
    r1 = (F(5) * F(5)).sqrt()
    r2 = (F(5) * F(5)).sqrt()
    assert r1 == r2 and r1 in (F(5), F(-5))


def test_no_square_root_carries_element(F):
    bad = next(F(k) for k in range(2, 50) if not F(k).has_sqrt())
    with pytest.raises(NoSquareRoot) as info:
        bad.sqrt()
    assert info.value.element == bad


def test_rational_field():
    assert QQ(3) / QQ(4) == QQ("3/4")
    assert QQ("9/4").sqrt() == QQ("3/2")
    with pytest.raises(NoSquareRoot):
        QQ(2).sqrt()
    with pytest.raises(NoSquareRoot):
        QQ(-1).sqrt()
    assert QQ.characteristic() == 0


def test_quadratic_extension_adjoins_root(F):
    d = next(F(k) for k in range(2, 50) if not F(k).has_sqrt())
    E = QuadraticExtension(F, d)
    r = E.root
    assert r * r == lift_element(d, E)


def test_quadratic_extension_sqrt_of_base_values(F):
    d = next(F(k) for k in range(2, 50) if not F(k).has_sqrt())
    E = QuadraticExtension(F, d)
    # GF(p^2) contains a square root of every element of GF(p)
    for k in range(1, 20):
        v = lift_element(F(k), E)
        s = v.sqrt()
        assert s * s == v


def test_lift_element_walks_extension_towers(F):
    d = next(F(k) for k in range(2, 50) if not F(k).has_sqrt())
    E1 = QuadraticExtension(F, d)
    # base-field elements are all squares in GF(p^2); a non-square must
    # involve the adjoined root
    d2 = next(v for v in (E1.root * k + 1 for k in range(1, 80))
              if not v.has_sqrt())
    E2 = QuadraticExtension(E1, d2)
    v = lift_element(F(7), E2)
    assert v == lift_element(lift_element(F(7), E1), E2)


def test_descriptor_mismatch(F):
    G = PrimeField(101)
    with pytest.raises(DescriptorMismatch):
        F(G(1))


def test_field_equality_and_zero(F):
    assert F.zero.is_zero()
    assert not F.one.is_zero()
    assert bool(F.one) and not bool(F.zero)
