import random

import pytest

from skewfano.errors import AmbiguousFiber
from skewfano.matrices import ExactMatrix
from skewfano.scalars import GF, QQ, rational
from skewfano.skew import (
    ModelId,
    PencilClass,
    SkewForm,
    ThetaTensor,
    classify_pencil,
    contract,
    isotropic_3space,
    model_member,
    pfaffian_rank,
    wedge_square,
)


def covec(field, *vals):
    return [field.scalar(v) for v in vals]


def test_wedge_square_rank2_is_zero():
    f = QQ
    w = SkewForm.wedge_covectors(covec(f, 1, 0, 0, 0, 0), covec(f, 0, 1, 0, 0, 0))
    assert pfaffian_rank(w) == 2
    assert all(x.is_zero() for x in wedge_square(w))


def test_wedge_square_explicit_kernel():
    f = QQ
    w = SkewForm.from_upper({(0, 1): f.one(), (2, 3): f.one()}, f)
    ws = wedge_square(w)
    assert all(ws[i].is_zero() for i in range(4))
    assert not ws[4].is_zero()
    e4 = covec(f, 0, 0, 0, 0, 1)
    assert all(w(e4, covec(f, *[1 if i == k else 0 for i in range(5)])).is_zero() for k in range(5))


def random_skew(rng, field, p=101):
    entries = {}
    for i in range(5):
        for j in range(i + 1, 5):
            entries[(i, j)] = field.scalar(rng.randrange(p))
    return SkewForm.from_upper(entries, field)


def test_wedge_square_spans_kernel_of_rank4_forms():
    rng = random.Random(5)
    f = GF(101)
    checked = 0
    while checked < 50:
        w = random_skew(rng, f)
        if pfaffian_rank(w) != 4:
            continue
        ws = wedge_square(w)
        assert any(not x.is_zero() for x in ws)
        # ws is in the kernel
        for k in range(5):
            basis = covec(f, *[1 if i == k else 0 for i in range(5)])
            assert w(ws, basis).is_zero()
        checked += 1


def test_rank2_iff_wedge_square_zero():
    rng = random.Random(9)
    for field in (GF(101), GF(7)):
        for _ in range(200):
            w = random_skew(rng, field, field.p)
            ws_zero = all(x.is_zero() for x in wedge_square(w))
            assert ws_zero == (pfaffian_rank(w) <= 2)


def degenerate_theta(field):
    # theta = e1^dual ⊗ f12, all other components zero
    comps = [SkewForm.zero(field) for _ in range(4)]
    comps[0] = SkewForm.from_upper({(0, 1): field.one()}, field)
    return ThetaTensor(comps)


def test_contract_linearity():
    f = GF(13)
    rng = random.Random(1)
    comps = [random_skew(rng, f, 13) for _ in range(4)]
    th = ThetaTensor(comps)
    v = covec(f, 3, 1, 4, 1)
    two_v = covec(f, 6, 2, 8, 2)
    assert contract(th, two_v) == contract(th, v).scale(f.scalar(2))


def test_classify_pencil_deeper_for_degenerate():
    f = QQ
    th = degenerate_theta(f)
    u = [covec(f, 1, 0, 0, 0), covec(f, 0, 1, 0, 0)]
    assert classify_pencil(th, u) == PencilClass.DEEPER
    with pytest.raises(AmbiguousFiber):
        isotropic_3space(th, u)


def test_classify_pencil_o6_example():
    # pencil <f01 + f23, f02>: exactly one rank-two member (at s=0)
    f = QQ
    comps = [
        SkewForm.from_upper({(0, 1): f.one(), (2, 3): f.one()}, f),
        SkewForm.from_upper({(0, 2): f.one()}, f),
        SkewForm.zero(f),
        SkewForm.zero(f),
    ]
    th = ThetaTensor(comps)
    u = [covec(f, 1, 0, 0, 0), covec(f, 0, 1, 0, 0)]
    assert classify_pencil(th, u) == PencilClass.O6_ONE_RANK2


def test_classify_pencil_o5_example():
    # pencil <f01, f23>: two rank-two members
    f = QQ
    comps = [
        SkewForm.from_upper({(0, 1): f.one()}, f),
        SkewForm.from_upper({(2, 3): f.one()}, f),
        SkewForm.zero(f),
        SkewForm.zero(f),
    ]
    th = ThetaTensor(comps)
    u = [covec(f, 1, 0, 0, 0), covec(f, 0, 1, 0, 0)]
    assert classify_pencil(th, u) == PencilClass.O5_TWO_RANK2


def test_classify_pencil_o7_paper_normal_form():
    # omega1 = f02 + f13, omega2 = f03 + f14: the constant-rank-four pencil
    f = QQ
    comps = [
        SkewForm.from_upper({(0, 2): f.one(), (1, 3): f.one()}, f),
        SkewForm.from_upper({(0, 3): f.one(), (1, 4): f.one()}, f),
        SkewForm.zero(f),
        SkewForm.zero(f),
    ]
    th = ThetaTensor(comps)
    u = [covec(f, 1, 0, 0, 0), covec(f, 0, 1, 0, 0)]
    assert classify_pencil(th, u) == PencilClass.O7_CONSTANT_RANK
    v3 = isotropic_3space(th, u)
    # the isotropic space is the orthogonal <f2, f3, f4> of the pivot
    m = ExactMatrix(v3, f)
    assert m.rank() == 3
    for row in m.rows:
        assert row[0].is_zero() and row[1].is_zero()
    # basis invariance of the classification
    u2 = [covec(f, 1, 2, 0, 0), covec(f, 1, 3, 0, 0)]
    assert classify_pencil(th, u2) == PencilClass.O7_CONSTANT_RANK


def test_model_member_x3_kernel_points():
    rng = random.Random(4)
    f = GF(13)
    comps = [random_skew(rng, f, 13) for _ in range(4)]
    th = ThetaTensor(comps)
    for _ in range(20):
        v = covec(f, *[rng.randrange(13) for _ in range(4)])
        w = wedge_square(th.contract(v))
        if all(x.is_zero() for x in w):
            continue
        assert model_member(ModelId.X3, th, ([v], [w]))


def test_model_member_x4_via_isotropic_3space():
    rng = random.Random(6)
    f = GF(11)
    comps = [random_skew(rng, f, 11) for _ in range(4)]
    th = ThetaTensor(comps)
    found = 0
    while found < 10:
        u = [covec(f, *[rng.randrange(11) for _ in range(4)]) for _ in range(2)]
        if ExactMatrix(u, f).rank() != 2:
            continue
        if classify_pencil(th, u) != PencilClass.O7_CONSTANT_RANK:
            continue
        v3 = isotropic_3space(th, u)
        assert model_member(ModelId.X4, th, (u, v3))
        found += 1


def test_pencil_classification_gl_invariant():
    rng = random.Random(8)
    f = GF(11)
    comps = [random_skew(rng, f, 11) for _ in range(4)]
    th = ThetaTensor(comps)
    for _ in range(25):
        u = [covec(f, *[rng.randrange(11) for _ in range(4)]) for _ in range(2)]
        if ExactMatrix(u, f).rank() != 2:
            continue
        cls = classify_pencil(th, u)
        a, b, c, d = (rng.randrange(11) for _ in range(4))
        if (a * d - b * c) % 11 == 0:
            continue
        u2 = [
            [x * f.scalar(a) + y * f.scalar(b) for x, y in zip(u[0], u[1])],
            [x * f.scalar(c) + y * f.scalar(d) for x, y in zip(u[0], u[1])],
        ]
        assert classify_pencil(th, u2) == cls
