"""Skew-symmetric bilinear forms on V₅, the tensor θ, and pencils.

The identification Λ⁴V₅^∨ ≅ V₅ is fixed once for the whole package by the
volume normalization f₁∧…∧f₅ ↦ 1 in the working basis of V₅; every kernel
vector and every Q_h value below is exact on the nose under this single
convention.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence

from .errors import AmbiguousFiber, FieldMismatchError
from .matrices import ExactMatrix
from .scalars import Field, Scalar

# sign of the permutation sending (0,1,2,3,4) to the given tuple
def perm_sign(seq: Sequence[int]) -> int:
    s = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


PAIRS5 = list(itertools.combinations(range(5), 2))  # index order for Λ² coordinates


class SkewForm:
    """A 5×5 alternating matrix over one field; rank is 0, 2 or 4."""

    __slots__ = ("m", "field")

    def __init__(self, m: ExactMatrix):
        if m.nrows != 5 or m.ncols != 5:
            raise ValueError("skew forms live on V5")
        for i in range(5):
            if not m.rows[i][i].is_zero():
                raise ValueError("nonzero diagonal in an alternating matrix")
            for j in range(i + 1, 5):
                if m.rows[i][j] != -m.rows[j][i]:
                    raise ValueError("matrix is not alternating")
        self.m = m
        self.field = m.field

    @classmethod
    def from_upper(cls, entries: dict, field: Field) -> "SkewForm":
        """Build from {(i, j): scalar} with i < j, zero elsewhere."""
        m = ExactMatrix.zero(5, 5, field)
        for (i, j), c in entries.items():
            m.rows[i][j] = c
            m.rows[j][i] = -c
        return cls(m)

    @classmethod
    def wedge_covectors(cls, a: Sequence[Scalar], b: Sequence[Scalar]) -> "SkewForm":
        """The decomposable form a∧b for covectors a, b (length 5)."""
        field = a[0].field()
        m = ExactMatrix.zero(5, 5, field)
        for i in range(5):
            for j in range(5):
                m.rows[i][j] = a[i] * b[j] - a[j] * b[i]
        return cls(m)

    @classmethod
    def zero(cls, field: Field) -> "SkewForm":
        return cls(ExactMatrix.zero(5, 5, field))

    def __call__(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        acc = self.field.zero()
        for i in range(5):
            if x[i].is_zero():
                continue
            for j in range(5):
                acc = acc + x[i] * self.m.rows[i][j] * y[j]
        return acc

    def __add__(self, other: "SkewForm") -> "SkewForm":
        return SkewForm(self.m + other.m)

    def __sub__(self, other: "SkewForm") -> "SkewForm":
        return SkewForm(self.m + (-other.m))

    def scale(self, c: Scalar) -> "SkewForm":
        return SkewForm(self.m.scale(c))

    def __neg__(self):
        return SkewForm(-self.m)

    def __eq__(self, other):
        return isinstance(other, SkewForm) and self.m == other.m

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.m.rows for x in r)

    def plucker(self) -> List[Scalar]:
        """The ten coordinates ω_ij (i < j) in PAIRS5 order."""
        return [self.m.rows[i][j] for i, j in PAIRS5]

    def support(self) -> List[List[Scalar]]:
        """Basis of the image of v ↦ ω(v,·): the span of the two covector
        factors for a rank-2 form."""
        return self.m.column_space_basis()

    def kernel(self) -> List[List[Scalar]]:
        return self.m.kernel_basis()

    def is_proportional_to(self, other: "SkewForm") -> bool:
        a, b = self.plucker(), other.plucker()
        lead = next((k for k, x in enumerate(b) if not x.is_zero()), None)
        if lead is None:
            return self.is_zero()
        if a[lead].is_zero():
            return False
        c = a[lead] * b[lead].inverse()
        return all(x == c * y for x, y in zip(a, b))


def pfaffian_rank(omega: SkewForm) -> int:
    """Rank of an alternating form: 0, 2 or 4 (odd ranks impossible)."""
    r = omega.m.rank()
    assert r in (0, 2, 4), f"alternating 5x5 matrix of odd rank {r}"
    return r


def wedge_pair(a: SkewForm, b: SkewForm) -> List[Scalar]:
    """a∧b ∈ Λ⁴V₅^∨ contracted against the volume form, as a V₅ vector.

    Coordinate m of the result is (−1)^m times the coefficient of
    f_{complement of m} in a∧b (0-indexed m, so the sign is +,−,+,−,+).
    """
    field = a.field
    if field != b.field:
        raise FieldMismatchError("wedge of forms over different fields")
    out = []
    for m in range(5):
        rest = [k for k in range(5) if k != m]
        coeff = field.zero()
        # coefficient of f_rest[0]∧f_rest[1]∧f_rest[2]∧f_rest[3] in a∧b:
        # sum over the 3 splittings of the 4 indices into two ordered pairs
        r0, r1, r2, r3 = rest
        for (i1, j1), (i2, j2) in (
            ((r0, r1), (r2, r3)),
            ((r0, r2), (r1, r3)),
            ((r0, r3), (r1, r2)),
        ):
            s = perm_sign((i1, j1, i2, j2))
            term = a.m.rows[i1][j1] * b.m.rows[i2][j2] + a.m.rows[i2][j2] * b.m.rows[i1][j1]
            coeff = coeff + (term if s > 0 else -term)
        # f_rest ∧ f_m = (−1)^(4−m) f_0∧…∧f_4   (0-indexed)
        out.append(coeff if (4 - m) % 2 == 0 else -coeff)
    return out


def wedge_square(omega: SkewForm) -> List[Scalar]:
    """ω∧ω as a V₅ vector; zero iff rank ≤ 2, else spans ker ω."""
    return wedge_pair(omega, omega)


class ModelId(Enum):
    X0 = "X0"
    X1 = "X1"
    X2 = "X2"
    X3 = "X3"
    X4 = "X4"
    X6 = "X6"
    X8 = "X8"
    X8P = "X8'"


# (dim A ⊂ V4, dim B ⊂ V5, family): family (i) is θ(A)(B,B) = 0,
# family (ii) is θ(A)(B,V5) = 0.
MODEL_SHAPES = {
    ModelId.X0: (2, 1, "ii"),
    ModelId.X1: (1, 4, "i"),
    ModelId.X2: (4, 2, "i"),
    ModelId.X3: (1, 1, "ii"),
    ModelId.X4: (2, 3, "i"),
    ModelId.X6: (1, 3, "i"),
    ModelId.X8: (1, 2, "i"),
    ModelId.X8P: (2, 2, "i"),
}


class PencilClass(Enum):
    O7_CONSTANT_RANK = "O7"
    O6_ONE_RANK2 = "O6"
    O5_TWO_RANK2 = "O5"
    DEEPER = "deeper"


class ThetaTensor:
    """θ ∈ V₄^∨⊗Λ²V₅^∨ as four alternating components θ₁..θ₄, with an
    optional normalized five-term presentation (ω₁..ω₅, u₁^∨..u₅^∨)."""

    def __init__(self, components: Sequence[SkewForm]):
        if len(components) != 4:
            raise ValueError("theta has four components")
        field = components[0].field
        if any(c.field != field for c in components):
            raise FieldMismatchError("theta components over different fields")
        self.components = list(components)
        self.field = field
        self.five_term: Optional[FiveTermPresentation] = None

    def contract(self, v: Sequence[Scalar]) -> SkewForm:
        """θ(v) = Σ v_i θ_i."""
        if len(v) != 4:
            raise ValueError("contraction vector lives in V4")
        m = ExactMatrix.zero(5, 5, self.field)
        for vi, comp in zip(v, self.components):
            if vi.is_zero():
                continue
            m = m + comp.m.scale(vi)
        return SkewForm(m)

    def attach_five_term(self, pres: "FiveTermPresentation"):
        pres.verify_against(self)
        self.five_term = pres


@dataclass
class FiveTermPresentation:
    """θ = Σ u_k^∨ ⊗ ω_k with Σω_k = 0 and Σu_k^∨ = 0."""

    omegas: List[SkewForm]
    u_duals: List[List[Scalar]]  # five covectors on V4

    def verify_against(self, theta: ThetaTensor):
        field = theta.field
        total = SkewForm.zero(field)
        for w in self.omegas:
            total = total + w
        assert total.is_zero(), "omegas do not sum to zero"
        for i in range(4):
            s = field.zero()
            for u in self.u_duals:
                s = s + u[i]
            assert s.is_zero(), "u duals do not sum to zero"
        # Σ u_k^∨ ⊗ ω_k must reproduce the four components
        for i in range(4):
            acc = ExactMatrix.zero(5, 5, field)
            for u, w in zip(self.u_duals, self.omegas):
                acc = acc + w.m.scale(u[i])
            assert acc == theta.components[i].m, "five-term presentation mismatch"


def contract(theta: ThetaTensor, v: Sequence[Scalar]) -> SkewForm:
    return theta.contract(v)


def model_member(model: ModelId, theta: ThetaTensor, point) -> bool:
    """Membership of a pair of subspaces (bases of A ⊂ V₄ and B ⊂ V₅) in
    the model's zero locus."""
    a_basis, b_basis = point
    da, db, family = MODEL_SHAPES[model]
    if len(a_basis) != da or len(b_basis) != db:
        raise ValueError(f"{model.value} wants subspaces of dims ({da},{db})")
    forms = [theta.contract(a) for a in a_basis]
    if family == "i":
        for f in forms:
            for x, y in itertools.combinations(b_basis, 2):
                if not f(x, y).is_zero():
                    return False
        return True
    field = theta.field
    full = [[field.one() if i == k else field.zero() for i in range(5)] for k in range(5)]
    for f in forms:
        for x in b_basis:
            for y in full:
                if not f(x, y).is_zero():
                    return False
    return True


# -- pencils -----------------------------------------------------------------


def _binary_quadric_gcd_roots(quads: List[tuple]) -> Optional[int]:
    """Number of distinct projective roots (over the algebraic closure) of
    the GCD of binary quadrics a·s² + b·st + c·t²; None for the identically
    zero system."""
    nonzero = [q for q in quads if any(not x.is_zero() for x in q)]
    if not nonzero:
        return None
    field = quads[0][0].field()

    # univariate gcd at t = 1, tracking the power of t split off each form
    def split(q):
        a, b, c = q
        coeffs = [c, b, a]  # ascending in s
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        tmult = 2 - (len(coeffs) - 1)
        return tmult, coeffs

    def poly_mod(f, g):
        f = f[:]
        while len(f) >= len(g) and len(f) > 0:
            if f[-1].is_zero():
                f.pop()
                continue
            q = f[-1] * g[-1].inverse()
            shift = len(f) - len(g)
            for k in range(len(g)):
                f[shift + k] = f[shift + k] - q * g[k]
            f.pop()
        while f and f[-1].is_zero():
            f.pop()
        return f

    def poly_gcd(f, g):
        while g:
            f, g = g, poly_mod(f, g)
        return f

    tmult = min(split(q)[0] for q in nonzero)
    g = split(nonzero[0])[1]
    for q in nonzero[1:]:
        g = poly_gcd(g, split(q)[1])
        if len(g) == 1 and tmult == 0:
            return 0
    roots = 1 if tmult > 0 else 0
    if len(g) == 2:
        roots += 1
    elif len(g) == 3:
        a, b, c = g[2], g[1], g[0]
        disc = b * b - a * c * 4
        roots += 1 if disc.is_zero() else 2
    return roots


def classify_pencil(theta: ThetaTensor, u_basis: Sequence[Sequence[Scalar]]) -> PencilClass:
    """Orbit class of the pencil θ(U) for a 2-plane U ⊂ V₄, by counting the
    rank-≤2 members via the GCD of the five binary quadrics
    wedge_square(s·θ(u₁)+t·θ(u₂))."""
    if len(u_basis) != 2:
        raise ValueError("U must be 2-dimensional")
    if ExactMatrix(list(u_basis), theta.field).rank() != 2:
        raise ValueError("U basis is degenerate")
    a = theta.contract(u_basis[0])
    b = theta.contract(u_basis[1])
    waa = wedge_square(a)
    wab = wedge_pair(a, b)
    wbb = wedge_square(b)
    # coordinate m of wedge_square(s·a + t·b) is waa_m s² + 2·wab_m st + wbb_m t²
    quads = [(waa[m], wab[m] + wab[m], wbb[m]) for m in range(5)]
    roots = _binary_quadric_gcd_roots(quads)
    if roots is None:
        return PencilClass.DEEPER
    if roots == 0:
        return PencilClass.O7_CONSTANT_RANK
    if roots == 1:
        return PencilClass.O6_ONE_RANK2
    if roots == 2:
        return PencilClass.O5_TWO_RANK2
    return PencilClass.DEEPER


def isotropic_3space(theta: ThetaTensor, u_basis: Sequence[Sequence[Scalar]]) -> List[List[Scalar]]:
    """The unique 3-space of V₅ isotropic for every member of a constant
    rank-four pencil: the image of S²U under u·u′ ↦ θ(u)∧θ(u′)."""
    cls = classify_pencil(theta, u_basis)
    if cls != PencilClass.O7_CONSTANT_RANK:
        raise AmbiguousFiber(f"pencil in class {cls.value}: fiber is positive-dimensional")
    a = theta.contract(u_basis[0])
    b = theta.contract(u_basis[1])
    vecs = [wedge_square(a), wedge_pair(a, b), wedge_square(b)]
    m = ExactMatrix(vecs, theta.field)
    if m.rank() != 3:
        raise AmbiguousFiber("image of S²U is not 3-dimensional")
    return vecs
