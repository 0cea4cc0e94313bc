import itertools
import random

import pytest

from skewfano.errors import FieldMismatchError
from skewfano.matrices import ExactMatrix, subspace_intersection
from skewfano.scalars import GF, QQ, QZETA12, PrimeFieldElement, promote, rational


def test_identity_has_empty_kernel():
    m = ExactMatrix.identity(3, QQ)
    assert m.kernel_basis() == []
    assert m.rank() == 3


def test_apolar_quadric_system_kernel_dimension():
    # 10 unknowns a_ij (i<j), 5 relations sum_{i != k} a_ik = 0.
    pairs = list(itertools.combinations(range(5), 2))
    rows = []
    for k in range(5):
        row = [1 if k in pr else 0 for pr in pairs]
        rows.append(row)
    m = ExactMatrix.from_ints(rows, QQ)
    assert len(m.kernel_basis()) == 5


def brute_force_rank(rows, p):
    # largest size of a nonvanishing minor, by enumeration
    n, c = len(rows), len(rows[0])

    def det(sub):
        k = len(sub)
        total = 0
        for perm in itertools.permutations(range(k)):
            sgn = 1
            for i in range(k):
                for j in range(i + 1, k):
                    if perm[i] > perm[j]:
                        sgn = -sgn
            prod = 1
            for i in range(k):
                prod = prod * sub[i][perm[i]] % p
            total = (total + sgn * prod) % p
        return total

    for size in range(min(n, c), 0, -1):
        for ri in itertools.combinations(range(n), size):
            for ci in itertools.combinations(range(c), size):
                if det([[rows[i][j] for j in ci] for i in ri]) != 0:
                    return size
    return 0


def test_kernel_dimension_vs_minor_rank_over_fp():
    rng = random.Random(7)
    for _ in range(10):
        rows = [[rng.randrange(101) for _ in range(6)] for _ in range(4)]
        m = ExactMatrix.from_ints(rows, GF(101))
        r = brute_force_rank(rows, 101)
        assert m.rank() == r
        assert len(m.kernel_basis()) == 6 - r


def test_kernel_vectors_normalized_and_in_kernel():
    m = ExactMatrix.from_ints([[1, 2, 3], [2, 4, 6]], QQ)
    basis = m.kernel_basis()
    assert len(basis) == 2
    for v in basis:
        lead = next(x for x in v if not x.is_zero())
        assert lead == 1
        col = ExactMatrix([[x] for x in v], QQ)
        assert all(x.is_zero() for row in (m * col).rows for x in row)


def test_mixed_field_matrix_rejected():
    with pytest.raises(FieldMismatchError):
        ExactMatrix([[rational(1), PrimeFieldElement(1, 7)]])


def test_rank_drop_mod_p_only_finitely_often():
    rng = random.Random(11)
    for _ in range(5):
        rows = [[rng.randrange(-9, 10) for _ in range(5)] for _ in range(4)]
        m = ExactMatrix.from_ints(rows, QQ)
        r = m.rank()
        for p in (7, 11, 13):
            mp = ExactMatrix.from_ints([[x % p for x in row] for row in rows], GF(p))
            assert mp.rank() <= r


def test_bareiss_rref_matches_generic_elimination():
    rng = random.Random(17)
    for _ in range(8):
        nr, nc = rng.randrange(3, 9), rng.randrange(3, 13)
        rows = [[rng.randrange(-50, 51) for _ in range(nc)] for _ in range(nr)]
        m = ExactMatrix.from_ints(rows, QQ)
        got, piv = m.rref()
        want, piv2 = m._rref_generic()
        assert piv == piv2
        assert got == want
        for v in m.kernel_basis():
            col = ExactMatrix([[x] for x in v], QQ)
            assert all(x.is_zero() for row in (m * col).rows for x in row)


def test_solve_and_det_and_inverse():
    m = ExactMatrix.from_ints([[2, 1], [1, 1]], QQ)
    assert m.det() == 1
    x = m.solve([rational(3), rational(2)])
    assert x == [rational(1), rational(1)]
    inv = m.inverse()
    assert (m * inv) == ExactMatrix.identity(2, QQ)


def test_det_over_cyclotomic():
    from skewfano.scalars import cyclotomic_units

    i, j = cyclotomic_units()
    one = QZETA12.one()
    m = ExactMatrix([[i, one], [one, j]])
    assert m.det() == i * j - 1


def test_subspace_intersection():
    e = lambda *v: [rational(x) for x in v]
    a = [e(1, 0, 0, 0), e(0, 1, 0, 0)]
    b = [e(0, 1, 0, 0), e(0, 0, 1, 0)]
    inter = subspace_intersection(a, b, QQ)
    assert len(inter) == 1
    v = inter[0]
    assert v[0].is_zero() and v[2].is_zero() and v[3].is_zero() and not v[1].is_zero()
