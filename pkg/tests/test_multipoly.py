import random

from hypothesis import given, strategies as st

from skewfano.multipoly import MultiPoly, monomials_of_degree
from skewfano.scalars import GF, QQ, promote, rational


def poly_from_dict(d, nvars=3):
    return MultiPoly(nvars, QQ, {e: rational(c) for e, c in d.items()})


def test_canonical_form_drops_zeros():
    p = poly_from_dict({(1, 0, 0): 1, (0, 1, 0): 0})
    assert list(p.terms) == [(1, 0, 0)]
    q = poly_from_dict({(1, 0, 0): -1})
    assert (p + q).is_zero()


def test_degree_and_homogeneity():
    p = poly_from_dict({(2, 1, 0): 3, (0, 0, 3): -1})
    assert p.degree() == 3
    assert p.is_homogeneous()
    assert not (p + poly_from_dict({(1, 0, 0): 1})).is_homogeneous()


def test_evaluation_exact():
    p = poly_from_dict({(2, 0, 0): 1, (0, 1, 1): -2})
    v = p.evaluate([rational(1, 2), rational(3), rational(-1)])
    assert v == rational(1, 4) + rational(6)


def test_substitute_matches_evaluate():
    rng = random.Random(3)
    p = poly_from_dict({(2, 1, 0): 2, (0, 0, 2): 5, (1, 1, 1): -1})
    subs = [
        MultiPoly(2, QQ, {(1, 0): rational(rng.randrange(-3, 4)), (0, 2): rational(1)})
        for _ in range(3)
    ]
    comp = p.substitute(subs)
    for _ in range(10):
        pt = [rational(rng.randrange(-4, 5)), rational(rng.randrange(-4, 5))]
        inner = [s.evaluate(pt) for s in subs]
        assert comp.evaluate(pt) == p.evaluate(inner)


def test_gradient():
    p = poly_from_dict({(3, 0, 0): 1, (1, 2, 0): 1})
    g = p.gradient()
    assert g[0] == poly_from_dict({(2, 0, 0): 3, (0, 2, 0): 1})
    assert g[2].is_zero()


def test_monomials_of_degree_counts():
    assert len(monomials_of_degree(5, 3)) == 35
    assert len(monomials_of_degree(5, 4)) == 70
    assert len(monomials_of_degree(5, 2)) == 15


@given(
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        st.integers(-20, 20),
        max_size=6,
    ),
    st.integers(-10, 10),
    st.integers(-10, 10),
)
def test_evaluation_commutes_with_promotion(coeffs, x0, x1):
    p = MultiPoly(2, QQ, {e: rational(c) for e, c in coeffs.items()})
    fp = GF(13)
    pp = p.map_coefficients(lambda c: promote(c, fp), fp)
    pt_q = [rational(x0), rational(x1)]
    pt_p = [promote(v, fp) for v in pt_q]
    assert promote(p.evaluate(pt_q), fp) == pp.evaluate(pt_p)
