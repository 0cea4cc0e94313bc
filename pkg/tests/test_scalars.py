from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewfano.errors import BadReduction, FieldMismatchError
from skewfano.scalars import (
    GF,
    QQ,
    QZETA12,
    Cyclotomic12,
    PrimeFieldElement,
    Rational,
    cyclotomic_units,
    promote,
    rational,
    reduce_scalar_mod_p,
    zeta12_mod_p,
)


def test_promote_examples():
    # 1/2 -> 4 mod 7, since 2*4 = 1 mod 7
    assert promote(rational(1, 2), GF(7)) == PrimeFieldElement(4, 7)
    assert promote(rational(3), QZETA12) == Cyclotomic12((3, 0, 0, 0))
    with pytest.raises(BadReduction):
        promote(rational(1, 7), GF(7))


def test_cyclotomic_units():
    i, j = cyclotomic_units()
    assert i * i == -1
    assert j * j * j == 1
    assert j != 1
    assert j * j + j + 1 == Cyclotomic12((0, 0, 0, 0))
    z = i * j
    acc = QZETA12.one()
    orders = []
    for k in range(1, 13):
        acc = acc * z
        if acc == 1:
            orders.append(k)
    assert orders == [12]  # i*j = zeta^7 has exact order 12


def test_field_mismatch_is_hard_error():
    with pytest.raises(FieldMismatchError):
        rational(1) + PrimeFieldElement(1, 7)
    with pytest.raises(FieldMismatchError):
        Cyclotomic12((1, 0, 0, 0)) * PrimeFieldElement(1, 7)
    with pytest.raises(FieldMismatchError):
        PrimeFieldElement(1, 7) + PrimeFieldElement(1, 11)


def test_no_float_contamination():
    with pytest.raises(TypeError):
        Rational(0.5)


small_rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
).map(Rational)
cyclos = st.tuples(*([st.integers(-9, 9)] * 4)).map(lambda t: Cyclotomic12(t))
fp_elems = st.integers(0, 100).map(lambda n: PrimeFieldElement(n, 101))


@pytest.mark.parametrize("strategy", [small_rationals, cyclos, fp_elems])
def test_field_axioms(strategy):
    @given(strategy, strategy, strategy)
    def axioms(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == 1

    axioms()


def test_zeta12_mod_p():
    z = zeta12_mod_p(13)
    assert pow(z, 12, 13) == 1
    assert pow(z, 6, 13) != 1 and pow(z, 4, 13) != 1
    with pytest.raises(BadReduction):
        zeta12_mod_p(11)


def test_reduce_cyclotomic_respects_relations():
    i, j = cyclotomic_units()
    for p in (13, 37):
        ri = reduce_scalar_mod_p(i, p)
        rj = reduce_scalar_mod_p(j, p)
        assert (ri * ri + 1) % p == 0
        assert (rj * rj + rj + 1) % p == 0


def test_reduce_rational_denominator():
    assert reduce_scalar_mod_p(rational(1, 2), 7) == 4
    with pytest.raises(BadReduction):
        reduce_scalar_mod_p(rational(1, 13), 13)
