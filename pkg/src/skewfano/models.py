"""The two normal forms of the generic tensor, the explicit coordinate data
attached to them, and the derived hypersurfaces (Segre cubic, Igusa quartic,
the determinantal-fourfold quadrics).

Coordinates are 0-indexed internally; the classical tables are 1-indexed in
comments where they are transcribed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import Degenerate, DegenerateSample, Inconsistent, NotGeneric
from .fpenum import p_v4_pfaffian_profile, p_v5_rank_profile
from .matrices import ExactMatrix, subspace_intersection
from .multipoly import MultiPoly, monomials_of_degree
from .scalars import (
    GF,
    QQ,
    QZETA12,
    Cyclotomic12,
    Field,
    Rational,
    Scalar,
    cyclotomic_units,
    promote,
    rational,
    reduce_scalar_mod_p,
)
from .skew import (
    PAIRS5,
    FiveTermPresentation,
    SkewForm,
    ThetaTensor,
    perm_sign,
    pfaffian_rank,
    wedge_square,
)

TRIPLES5 = list(itertools.combinations(range(5), 3))


# -- the Ozeki representative -------------------------------------------------


def ozeki_theta() -> ThetaTensor:
    """The open-orbit representative
    θ = e₁^∨⊗(f₂₅−f₃₄) + e₂^∨⊗(f₁₅−f₂₄) + e₃^∨⊗(f₂₃−f₁₄) + e₄^∨⊗(f₄₅−f₁₂),
    with rational entries inside ℚ(ζ₁₂)."""
    f = QZETA12
    one = f.one()
    comps = [
        SkewForm.from_upper({(1, 4): one, (2, 3): -one}, f),
        SkewForm.from_upper({(0, 4): one, (1, 3): -one}, f),
        SkewForm.from_upper({(1, 2): one, (0, 3): -one}, f),
        SkewForm.from_upper({(3, 4): one, (0, 1): -one}, f),
    ]
    return ThetaTensor(comps)


def _cyc(*coeffs) -> List[Scalar]:
    """Helper turning symbolic (a, b, c, ...) entries written as small
    polynomials in i and j into ℚ(ζ₁₂) scalars; each argument is either an
    int or a pair-list [(coef, 'i'/'j'/'ij'/...)]."""
    i, j = cyclotomic_units()
    units = {
        "1": QZETA12.one(),
        "i": i,
        "j": j,
        "j2": j * j,
        "ij": i * j,
        "ij2": i * j * j,
    }
    out = []
    for c in coeffs:
        if isinstance(c, int):
            out.append(QZETA12.scalar(c))
        else:
            acc = QZETA12.zero()
            for coef, u in c:
                acc = acc + units[u] * QZETA12.scalar(coef)
            out.append(acc)
    return out


def ozeki_tables():
    """The classical coordinate tables for the Ozeki representative:
    points p₁..p₅ of P(V₄), covector factors of ω₁..ω₅, and the ten
    intersection points e_pq of P(V₅)."""
    i, j = cyclotomic_units()
    j2 = j * j
    one, zero = QZETA12.one(), QZETA12.zero()

    # p1 = e2 + i e4, p2 = e2 − i e4, p3 = e1+e3+e4, p4 = e1+j e3+j² e4,
    # p5 = e1+j² e3+j e4      (1-indexed basis of V4)
    points = [
        [zero, one, zero, i],
        [zero, one, zero, -i],
        [one, zero, one, one],
        [one, zero, j, j2],
        [one, zero, j2, j],
    ]
    # ω factors: ω₁ = (f1+i f4)∧(f2+i f5) etc. (covectors on V5)
    omega_factors = [
        ([one, zero, zero, i, zero], [zero, one, zero, zero, i]),
        ([one, zero, zero, -i, zero], [zero, one, zero, zero, -i]),
        ([zero, one, zero, one, zero], [one, zero, one, zero, one]),
        ([zero, one, zero, j2, zero], [one, zero, j2, zero, j]),
        ([zero, one, zero, j, zero], [one, zero, j, zero, j2]),
    ]
    e_table = {
        (0, 1): _cyc(0, 0, 1, 0, 0),
        (0, 2): _cyc(1, [(-1, "i")], -2, [(1, "i")], 1),
        (0, 3): _cyc([(-1, "i")], [(-1, "j2")], [(2, "ij")], 1, [(-1, "ij2")]),
        (0, 4): _cyc([(-1, "i")], [(-1, "j")], [(2, "ij2")], 1, [(-1, "ij")]),
        (1, 2): _cyc(1, [(1, "i")], -2, [(-1, "i")], 1),
        (1, 3): _cyc([(1, "i")], [(-1, "j2")], [(-2, "ij")], 1, [(1, "ij2")]),
        (1, 4): _cyc([(1, "i")], [(-1, "j")], [(-2, "ij2")], 1, [(1, "ij")]),
        (2, 3): _cyc(1, 0, [(1, "j2")], 0, [(1, "j")]),
        (2, 4): _cyc(1, 0, [(1, "j")], 0, [(1, "j2")]),
        (3, 4): _cyc(1, 0, 1, 0, 1),
    }
    return points, omega_factors, e_table


# -- the S5-symmetric normal form ---------------------------------------------


QUADRIC_PAIRS = PAIRS5  # coefficient order for the 10-dim space of quadrics


def quadric_q(i: int, j: int, k: int, l: int) -> List[Fraction]:
    """(x_i − x_j)(x_k − x_l) as a coefficient vector over the pairs x_a x_b."""
    v = [Fraction(0)] * 10
    for a, b, s in ((i, k, 1), (i, l, -1), (j, k, -1), (j, l, 1)):
        idx = QUADRIC_PAIRS.index((min(a, b), max(a, b)))
        v[idx] += s
    return v


def apolar_basis() -> List[List[Fraction]]:
    """The chosen basis of the 5-space of quadrics Σ a_ij x_i x_j with
    a_ij = a_ji and row sums zero (those apolar to x₁³+…+x₅³)."""
    rows = []
    for k in range(5):
        rows.append([1 if k in pr else 0 for pr in QUADRIC_PAIRS])
    m = ExactMatrix.from_ints(rows, QQ)
    basis = m.kernel_basis()
    assert len(basis) == 5
    return [[x.value for x in b] for b in basis]


@dataclass
class QuadricBattery:
    """The apolar quadrics q_{ij,kl}, the chosen basis of their 5-space U₅,
    the wedges Q₁..Q₅ and Q_{i,j} ∈ Λ²U₅, and the five quadratic forms CQ_i
    on Λ³V₅."""

    basis: List[List[Fraction]]  # 5 coefficient vectors spanning U5
    gram: List[List[Fraction]]  # invariant pairing of the basis vectors
    q_signs: Dict[Tuple[int, ...], List[int]]  # permutation -> signs on Q_i
    Q: List[List[Fraction]]  # Q_1..Q_5 as Λ²U5 coordinate vectors (pairs)
    Qij: Dict[Tuple[int, int], List[Fraction]]
    CQ: List[List[List[Fraction]]]  # five 10×10 Grams on Λ³V5 coordinates


def _u5_coordinates(basis: List[List[Fraction]], quad: List[Fraction]) -> List[Fraction]:
    m = ExactMatrix([[Rational(b[r]) for b in basis] for r in range(10)], QQ)
    sol = m.solve([Rational(c) for c in quad])
    if sol is None:
        raise Inconsistent("quadric not in the apolar 5-space")
    return [s.value for s in sol]


def _wedge2(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    return [a[d] * b[e] - a[e] * b[d] for d, e in PAIRS5]


def _q_wedge(basis, ij1, ij2) -> List[Fraction]:
    qa = _u5_coordinates(basis, quadric_q(*ij1))
    qb = _u5_coordinates(basis, quadric_q(*ij2))
    return _wedge2(qa, qb)


def build_battery() -> QuadricBattery:
    basis = apolar_basis()
    gram = [
        [sum(a * b for a, b in zip(basis[m], basis[n])) for n in range(5)] for m in range(5)
    ]
    # Q_1 = q_{23,45}∧q_{24,35}, …, Q_5 = q_{12,34}∧q_{13,24}  (1-indexed)
    specs = [
        ((1, 2, 3, 4), (1, 3, 2, 4)),
        ((0, 2, 3, 4), (0, 3, 4, 2)),
        ((0, 1, 3, 4), (0, 3, 1, 4)),
        ((0, 1, 2, 4), (0, 2, 4, 1)),
        ((0, 1, 2, 3), (0, 2, 1, 3)),
    ]
    Q = [_q_wedge(basis, a, b) for a, b in specs]
    Qij = {}
    for i, j in itertools.combinations(range(5), 2):
        rest = [r for r in range(5) if r not in (i, j)]
        p_, q_, r_ = rest
        acc = [Fraction(0)] * 10
        for first, pair in ((p_, (q_, r_)), (q_, (r_, p_)), (r_, (p_, q_))):
            w = _q_wedge(basis, (i, first, pair[0], pair[1]), (j, first, pair[0], pair[1]))
            acc = [x + y for x, y in zip(acc, w)]
        Qij[(i, j)] = acc
    cq = _build_cq(gram, Q, Qij)
    return QuadricBattery(basis=basis, gram=gram, q_signs={}, Q=Q, Qij=Qij, CQ=cq)


def _lambda2_pairing(gram):
    """Λ² of the invariant pairing: a 10×10 Gram on Λ²U₅ coordinates."""
    out = [[Fraction(0)] * 10 for _ in range(10)]
    for a, (d, e) in enumerate(PAIRS5):
        for b, (d2, e2) in enumerate(PAIRS5):
            out[a][b] = gram[d][d2] * gram[e][e2] - gram[d][e2] * gram[e][d2]
    return out


def _triple_complement_signs():
    """For each Λ³ coordinate triple (a<b<c), the complementary pair (d<e)
    and the sign of the permutation (d,e,a,b,c)."""
    table = []
    for abc in TRIPLES5:
        de = tuple(x for x in range(5) if x not in abc)
        table.append((de, perm_sign(de + abc)))
    return table


def _build_cq(gram, Q, Qij):
    """CQ_i = Σ_{j≠i} Q_{i,j}·Q_j as quadratic forms on Λ³V₅ (10×10 Grams).

    A point T ∈ Λ³V₅ is first carried into Λ²U₅ by the volume map, then each
    wedge factor pairs with it through Λ² of the invariant form on U₅."""
    lam2 = _lambda2_pairing(gram)
    comp = _triple_complement_signs()

    def functional(w: List[Fraction]) -> List[Fraction]:
        # linear form on Λ³V5 coordinates attached to w ∈ Λ²U5
        pair_form = [sum(lam2[a][b] * w[b] for b in range(10)) for a in range(10)]
        out = []
        for t, ((d, e), s) in enumerate(comp):
            a = PAIRS5.index((d, e))
            out.append(s * pair_form[a])
        return out

    cqs = []
    for i in range(5):
        g = [[Fraction(0)] * 10 for _ in range(10)]
        for j in range(5):
            if j == i:
                continue
            key = (i, j) if i < j else (j, i)
            qij = Qij[key] if i < j else [-x for x in Qij[key]]
            fa = functional(qij)
            fb = functional(Q[j])
            for a in range(10):
                for b in range(10):
                    g[a][b] += (fa[a] * fb[b] + fa[b] * fb[a]) / 2
        cqs.append(g)
    return cqs


def evaluate_cq(battery: QuadricBattery, i: int, t_coords: Sequence[Fraction]) -> Fraction:
    g = battery.CQ[i]
    return sum(
        t_coords[a] * g[a][b] * t_coords[b] for a in range(10) for b in range(10)
    )


SYM2_MONOMIALS = [(a, b) for a in range(10) for b in range(a, 10)]


def c4_minor_quadrics(theta: ThetaTensor, seed: int = 4150) -> List[List[Fraction]]:
    """The four quadrics cutting the rank ≤ 2 locus on G(3, V₅): the 3×3
    minors of the matrix (⟨θ_i, ξ_a⟩) over a basis ξ of Λ²V, written as
    quadratic forms in the Plücker coordinates of Λ³V.

    Each minor is a well-defined quadratic function of the Plücker point
    (rebasing V scales it by det²); the coefficient vectors are solved
    exactly from generic decomposable samples, where the value of the minor
    is computed directly from a spanning basis."""
    field = theta.field
    rng = random.Random(seed)
    rows = []
    rhs = [[] for _ in range(4)]
    quadruples = list(itertools.combinations(range(4), 3))
    while len(rows) < 70:
        vs = [[field.scalar(rng.randrange(-5, 6)) for _ in range(5)] for _ in range(3)]
        if ExactMatrix(vs, field).rank() != 3:
            continue
        T = lambda3_coords(vs)
        rows.append([T[a] * T[b] for a, b in SYM2_MONOMIALS])
        pairs = [(0, 1), (0, 2), (1, 2)]
        m = [
            [theta.components[i](vs[s], vs[t]) for i in range(4)] for (s, t) in pairs
        ]
        for qi, cols in enumerate(quadruples):
            det = (
                m[0][cols[0]] * (m[1][cols[1]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[1]])
                - m[0][cols[1]] * (m[1][cols[0]] * m[2][cols[2]] - m[1][cols[2]] * m[2][cols[0]])
                + m[0][cols[2]] * (m[1][cols[0]] * m[2][cols[1]] - m[1][cols[1]] * m[2][cols[0]])
            )
            rhs[qi].append(det)
    mat = ExactMatrix(rows, field)
    out = []
    for qi in range(4):
        sol = mat.solve(rhs[qi])
        if sol is None:
            raise Inconsistent("minor values are not a quadratic function of the Plücker point")
        out.append(sol)
    return out


def evaluate_sym2(coeffs: Sequence[Scalar], t_coords: Sequence[Scalar]) -> Scalar:
    field = t_coords[0].field()
    acc = field.zero()
    for c, (a, b) in zip(coeffs, SYM2_MONOMIALS):
        acc = acc + c * t_coords[a] * t_coords[b]
    return acc


@dataclass
class C4QuadricsReport:
    """Evidence for the determinantal-fourfold equations.

    The printed battery CQ_i = Σ Q_{i,j}Q_j spans the unique sign-twisted
    4-dimensional isotype inside the 55-dimensional space of quadrics, but
    that copy does not vanish on the fourfold; the actual equations (the
    minors of the rank map, recomputed here) span the plain 4-dimensional
    isotype.  Both batteries and the comparison are recorded."""

    battery_span_dim: int
    battery_sign_pattern_ok: bool
    battery_vanishing_failures: int
    battery_samples: int
    minors_span_dim: int
    minors_vanishing_failures: int
    minors_samples: int
    minors_in_interpolated_ideal: bool
    ideal_dim: int


def _battery_sign_pattern(battery: QuadricBattery) -> bool:
    """σ(Q_i) = ±Q_{σ(i)} with the sign of σ, for transpositions and a
    5-cycle (the U₄⁻ pattern on the five wedges)."""
    perms = [(1, 0, 2, 3, 4), (0, 2, 1, 3, 4), (1, 2, 3, 4, 0)]
    basis_mat = ExactMatrix(
        [[Rational(battery.basis[m][r]) for m in range(5)] for r in range(10)], QQ
    )
    for sigma in perms:
        sgn = perm_sign(sigma)
        # action of sigma on U5 coordinates
        cols = []
        for g in battery.basis:
            pg = [Fraction(0)] * 10
            for idx, (a, b) in enumerate(QUADRIC_PAIRS):
                na, nb = sigma[a], sigma[b]
                j = QUADRIC_PAIRS.index((min(na, nb), max(na, nb)))
                pg[j] += g[idx]
            sol = basis_mat.solve([Rational(x) for x in pg])
            cols.append([s.value for s in sol])
        amat = [[cols[k][m] for k in range(5)] for m in range(5)]
        for i in range(5):
            # Λ²A applied to Q_i
            img = [Fraction(0)] * 10
            for t, (d, e) in enumerate(PAIRS5):
                for s, (d2, e2) in enumerate(PAIRS5):
                    img[t] += (
                        amat[d][d2] * amat[e][e2] - amat[d][e2] * amat[e][d2]
                    ) * battery.Q[i][s]
            want = [sgn * x for x in battery.Q[sigma[i]]]
            if img != want:
                return False
    return True


def c4_quadrics_report(
    theta: ThetaTensor,
    battery: QuadricBattery,
    seed: int = 515,
    fp_samples: int = 100,
    rational_samples: int = 12,
) -> C4QuadricsReport:
    """Run the battery and the recomputed minor quadrics against sampled
    points of the determinantal fourfold, over ℚ and over F₁₃."""
    from .skew import PencilClass, classify_pencil, isotropic_3space

    field = theta.field
    rng = random.Random(seed)

    def sample_points(n):
        pts = []
        while len(pts) < n:
            u = [[field.scalar(rng.randrange(-6, 7)) for _ in range(4)] for _ in range(2)]
            try:
                if ExactMatrix(u, field).rank() != 2:
                    continue
                if classify_pencil(theta, u) != PencilClass.O7_CONSTANT_RANK:
                    continue
                v3 = isotropic_3space(theta, u)
            except Exception:
                continue
            pts.append(lambda3_coords(v3))
        return pts

    rational_pts = sample_points(rational_samples)
    minors = c4_minor_quadrics(theta)

    battery_fail = 0
    minors_fail = 0
    for T in rational_pts:
        tc = [x.value for x in T]
        if any(evaluate_cq(battery, i, tc) != 0 for i in range(5)):
            battery_fail += 1
        if any(not evaluate_sym2(q, T).is_zero() for q in minors):
            minors_fail += 1

    # F13 sampling: reduce the quadrics and sample fourfold points mod 13
    p = 13
    fp = GF(p)
    thetas = theta_mod_p(theta, p)
    batt_vec = []
    for g in battery.CQ:
        batt_vec.append(
            [
                promote(Rational(g[a][b] * (1 if a == b else 2)), fp)
                for (a, b) in SYM2_MONOMIALS
            ]
        )
    min_vec = [[promote(Rational(c.value), fp) for c in q] for q in minors]
    fp_theta = ThetaTensor(
        [
            SkewForm(ExactMatrix.from_ints(thetas[i].tolist(), fp))
            for i in range(4)
        ]
    )
    done = 0
    while done < fp_samples:
        u = [[fp.scalar(rng.randrange(p)) for _ in range(4)] for _ in range(2)]
        try:
            if ExactMatrix(u, fp).rank() != 2:
                continue
            if classify_pencil(fp_theta, u) != PencilClass.O7_CONSTANT_RANK:
                continue
            v3 = isotropic_3space(fp_theta, u)
        except Exception:
            continue
        T = lambda3_coords(v3)
        if any(not evaluate_sym2(q, T).is_zero() for q in batt_vec):
            battery_fail += 1
        if any(not evaluate_sym2(q, T).is_zero() for q in min_vec):
            minors_fail += 1
        done += 1

    # span dimensions and ideal cross-check over Q
    rows = []
    for g in battery.CQ:
        rows.append([Rational(g[a][b]) for a in range(10) for b in range(a, 10)])
    batt_dim = ExactMatrix(rows, QQ).rank()
    minor_rows = [[c for c in q] for q in minors]
    minors_dim = ExactMatrix(minor_rows, field).rank()

    ideal_rows = []
    for T in sample_points(40) + rational_pts:
        ideal_rows.append([T[a] * T[b] for a, b in SYM2_MONOMIALS])
    ideal = ExactMatrix(ideal_rows, field).kernel_basis()
    ideal_mat = ExactMatrix(ideal, field).transpose() if ideal else None
    minors_inside = ideal_mat is not None and all(
        ideal_mat.solve(q) is not None for q in minors
    )
    return C4QuadricsReport(
        battery_span_dim=batt_dim,
        battery_sign_pattern_ok=_battery_sign_pattern(battery),
        battery_vanishing_failures=battery_fail,
        battery_samples=rational_samples + fp_samples,
        minors_span_dim=minors_dim,
        minors_vanishing_failures=minors_fail,
        minors_samples=rational_samples + fp_samples,
        minors_in_interpolated_ideal=minors_inside,
        ideal_dim=len(ideal),
    )


def lambda3_coords(vectors: Sequence[Sequence[Scalar]]) -> List[Scalar]:
    """Plücker coordinates of v₁∧v₂∧v₃ over the triples (a<b<c)."""
    v1, v2, v3 = vectors
    field = v1[0].field()
    out = []
    for a, b, c in TRIPLES5:
        det = (
            v1[a] * (v2[b] * v3[c] - v2[c] * v3[b])
            - v1[b] * (v2[a] * v3[c] - v2[c] * v3[a])
            + v1[c] * (v2[a] * v3[b] - v2[b] * v3[a])
        )
        out.append(det)
    return out


def s5_theta(check_genericity: bool = True) -> Tuple[ThetaTensor, QuadricBattery]:
    """The S₅-symmetric normal form θ = Σ_k e_k ⊗ Q_k over ℚ, with
    Σe_k = 0 in the sum-zero model of the 4-space and ΣQ_k = 0 in Λ²U₅.

    The display ends with e₅⊗Q₅ (restoring σ(Q_i) = ±Q_{σ(i)} equivariance;
    the flag for the printed final term lives in the verification report)."""
    battery = build_battery()
    total = [sum(q[a] for q in battery.Q) for a in range(10)]
    if any(t != 0 for t in total):
        raise Inconsistent("the five wedges Q_k do not sum to zero")
    comps = []
    for i in range(4):
        m = ExactMatrix.zero(5, 5, QQ)
        for a, (d, e) in enumerate(PAIRS5):
            m.rows[d][e] = Rational(battery.Q[i][a])
            m.rows[e][d] = Rational(-battery.Q[i][a])
        comps.append(SkewForm(m))
    theta = ThetaTensor(comps)
    # five-term presentation: u_k = e_k has coordinates (δ_ki − 1/5) against
    # the basis b_i = ε_i − ε_5 of the sum-zero space
    u_duals = []
    for k in range(5):
        u_duals.append(
            [rational(Fraction(1 if k == i else 0) - Fraction(1, 5)) for i in range(4)]
        )
    omegas = []
    for k in range(5):
        m = ExactMatrix.zero(5, 5, QQ)
        for a, (d, e) in enumerate(PAIRS5):
            m.rows[d][e] = Rational(battery.Q[k][a])
            m.rows[e][d] = Rational(-battery.Q[k][a])
        omegas.append(SkewForm(m))
    theta.attach_five_term(FiveTermPresentation(omegas=omegas, u_duals=u_duals))
    if check_genericity:
        for p in (7, 11):
            counts, _ = p_v4_pfaffian_profile(theta_mod_p(theta, p), p)
            if counts[2] != 5 or counts[0] != 0:
                raise NotGeneric(f"rank-2 locus mod {p} has {counts[2]} points")
    return theta, battery


# -- reduction mod p -----------------------------------------------------------


def theta_mod_p(theta: ThetaTensor, p: int) -> np.ndarray:
    """The four components as an int64 (4,5,5) array mod p."""
    out = np.zeros((4, 5, 5), dtype=np.int64)
    for i, comp in enumerate(theta.components):
        for a in range(5):
            for b in range(5):
                out[i, a, b] = reduce_scalar_mod_p(comp.m.rows[a][b], p)
    return out


# -- the rank-two locus ---------------------------------------------------------


@dataclass
class RankTwoLocus:
    """Five points p_k with θ(p_k) of rank two, the five forms ω_k, the five
    kernel planes P_k ⊂ P(V₅), and the ten pairwise intersection points e_pq."""

    theta: ThetaTensor
    points: List[List[Scalar]]
    omegas: List[SkewForm]
    planes: List[List[List[Scalar]]]
    e_points: Dict[Tuple[int, int], List[Scalar]]
    pairs: List[Tuple[int, int]] = dc_field(default_factory=lambda: list(PAIRS5))


def _normalize_projective(v: List[Scalar]) -> List[Scalar]:
    lead = next(x for x in v if not x.is_zero())
    inv = lead.inverse()
    return [x * inv for x in v]


def _normalize_omega(w: SkewForm) -> SkewForm:
    lead = next(x for x in w.plucker() if not x.is_zero())
    return w.scale(lead.inverse())


def rank2_locus(
    theta: ThetaTensor,
    candidates: Optional[List[List[Scalar]]] = None,
    probe_primes: Sequence[int] = (),
) -> RankTwoLocus:
    """The locus {[v] : θ(v) has rank 2}, verified to consist of exactly
    five reduced points in general position.

    Over ℚ / ℚ(ζ₁₂) the five candidate points must be supplied or derivable
    from the five-term presentation; completeness is certified by exhaustive
    sweeps after reduction mod the probe primes, and every other invariant is
    verified exactly over the number field."""
    field = theta.field
    if candidates is None:
        if theta.five_term is None:
            raise NotGeneric("no candidate points and no five-term presentation")
        # θ(p) = Σ u_j(p)·ω_j is proportional to ω_k exactly when the other
        # four coefficients agree (the ω_j only satisfy Σω_j = 0), so p_k is
        # the common kernel of the differences u_j − u_l over j, l ≠ k.
        candidates = []
        for k in range(5):
            others = [theta.five_term.u_duals[j] for j in range(5) if j != k]
            rows = [
                [a - b for a, b in zip(others[t], others[t + 1])] for t in range(3)
            ]
            kern = ExactMatrix(rows, field).kernel_basis()
            if len(kern) != 1:
                raise NotGeneric("u-covectors not in general position")
            candidates.append(kern[0])
    if len(candidates) != 5:
        raise NotGeneric(f"expected 5 candidate points, got {len(candidates)}")

    points = [_normalize_projective(p) for p in candidates]
    omegas = []
    for pt in points:
        w = theta.contract(pt)
        if pfaffian_rank(w) != 2:
            raise NotGeneric("candidate point does not drop the rank to two")
        if any(not x.is_zero() for x in wedge_square(w)):
            raise Inconsistent("rank-2 form with nonzero wedge square")
        omegas.append(_normalize_omega(w))
    # distinctness and general position: any 4 of the points span V4
    for quad in itertools.combinations(range(5), 4):
        m = ExactMatrix([points[i] for i in quad], field)
        if m.rank() != 4:
            raise NotGeneric("rank-2 points not in general position")
    planes = [w.kernel() for w in omegas]
    for pl in planes:
        if len(pl) != 3:
            raise NotGeneric("kernel plane of unexpected dimension")
    e_points = {}
    for a, b in PAIRS5:
        inter = subspace_intersection(planes[a], planes[b], field)
        if len(inter) != 1:
            raise Degenerate(f"P_{a} ∩ P_{b} is not a single point")
        e_points[(a, b)] = _normalize_projective(inter[0])
    # mod-p completeness sweeps
    for p in probe_primes:
        counts, _ = p_v4_pfaffian_profile(theta_mod_p(theta, p), p)
        if counts[2] != 5 or counts[0] != 0:
            raise NotGeneric(f"rank-2 locus mod {p} has size {counts[2]} ≠ 5")
    return RankTwoLocus(theta=theta, points=points, omegas=omegas, planes=planes, e_points=e_points)


def ozeki_locus(verify_table: bool = True) -> Tuple[ThetaTensor, RankTwoLocus]:
    theta = ozeki_theta()
    points, omega_factors, e_table = ozeki_tables()
    locus = rank2_locus(theta, candidates=points, probe_primes=(13,))
    if verify_table:
        for k, (alpha, beta) in enumerate(omega_factors):
            table_w = SkewForm.wedge_covectors(alpha, beta)
            if not locus.omegas[k].is_proportional_to(table_w):
                raise Inconsistent(f"θ(p_{k+1}) not proportional to the printed ω_{k+1}")
        for key, vec in e_table.items():
            ours = locus.e_points[key]
            if _normalize_projective(list(vec)) != ours:
                raise Inconsistent(f"table point e_{key} does not span P∩P")
        locus.e_points = {k: _normalize_projective(list(v)) for k, v in e_table.items()}
    return theta, locus


def five_term_from_locus(theta: ThetaTensor, locus: RankTwoLocus) -> FiveTermPresentation:
    """Solve the five rescaling constants making Σ λ_k ω_k = 0, then the
    unique covectors u_k^∨ with θ = Σ u_k^∨ ⊗ (λ_k ω_k) and Σ u_k^∨ = 0."""
    field = theta.field
    rows = [w.plucker() for w in locus.omegas]
    kern = ExactMatrix(rows, field).transpose().kernel_basis()
    if len(kern) != 1:
        raise NotGeneric("relation space of the five forms is not a line")
    lam = kern[0]
    if any(x.is_zero() for x in lam):
        raise NotGeneric("degenerate rescaling solution")
    omegas = [w.scale(c) for w, c in zip(locus.omegas, lam)]
    # components in the span of omega_1..omega_4 (omega_5 = −sum of others):
    span_rows = [omegas[k].plucker() for k in range(4)]
    m = ExactMatrix(span_rows, field).transpose()
    u_cols = []
    for i in range(4):
        sol = m.solve(theta.components[i].plucker())
        if sol is None:
            raise Inconsistent("theta components outside span of the ω_k")
        u_cols.append(sol)
    # û_k^∨(e_i) = u_cols[i][k] for k<4, û_5 = 0; recenter so Σ u_k = 0
    u_duals = [[u_cols[i][k] for i in range(4)] for k in range(4)]
    u_duals.append([field.zero()] * 4)
    fifth = field.scalar(5).inverse()
    for i in range(4):
        tot = field.zero()
        for k in range(5):
            tot = tot + u_duals[k][i]
        shift = tot * fifth
        for k in range(5):
            u_duals[k][i] = u_duals[k][i] - shift
    pres = FiveTermPresentation(omegas=omegas, u_duals=u_duals)
    pres.verify_against(theta)
    return pres


# -- Segre cubic ----------------------------------------------------------------


def _ws_quadratics(theta: ThetaTensor) -> List[MultiPoly]:
    """The five coordinates of wedge_square(θ(v)) as quadratics in v."""
    field = theta.field
    basis = [[field.one() if i == k else field.zero() for i in range(4)] for k in range(4)]
    ws_at = {}
    for k in range(4):
        ws_at[(k, k)] = wedge_square(theta.contract(basis[k]))
    for a in range(4):
        for b in range(a + 1, 4):
            vab = [x + y for x, y in zip(basis[a], basis[b])]
            ws_at[(a, b)] = wedge_square(theta.contract(vab))
    polys = []
    for m in range(5):
        terms = {}
        for k in range(4):
            e = [0, 0, 0, 0]
            e[k] = 2
            terms[tuple(e)] = ws_at[(k, k)][m]
        for a in range(4):
            for b in range(a + 1, 4):
                e = [0, 0, 0, 0]
                e[a] = e[b] = 1
                terms[tuple(e)] = ws_at[(a, b)][m] - ws_at[(a, a)][m] - ws_at[(b, b)][m]
        polys.append(MultiPoly(4, field, {k: v for k, v in terms.items() if not v.is_zero()}))
    return polys


def segre_cubic(
    theta: ThetaTensor,
    locus: RankTwoLocus,
    seed: int = 20240,
    samples: int = 60,
    max_attempts: int = 4,
) -> MultiPoly:
    """The unique cubic through the kernel image points wedge_square(θ(v)),
    found by corank-one interpolation over the 35 cubic monomials.

    Verifies that the cubic vanishes identically on the whole image (a
    symbolic polynomial identity, stronger than spot checks) and is singular
    at the ten points e_pq."""
    field = theta.field
    monos = monomials_of_degree(5, 3)
    rng = random.Random(seed)
    for attempt in range(max_attempts):
        rows = []
        while len(rows) < samples:
            v = [field.scalar(rng.randrange(-9, 10)) for _ in range(4)]
            w = wedge_square(theta.contract(v))
            if all(x.is_zero() for x in w):
                continue
            row = []
            for e in monos:
                term = field.one()
                for x, k in zip(w, e):
                    for _ in range(k):
                        term = term * x
                row.append(term)
            rows.append(row)
        kern = ExactMatrix(rows, field).kernel_basis()
        if len(kern) == 1:
            coeffs = kern[0]
            break
        if len(kern) == 0:
            raise Inconsistent("no cubic vanishes on the kernel image")
    else:
        raise DegenerateSample(f"interpolation corank ≠ 1 after {max_attempts} attempts")
    cubic = MultiPoly(5, field, {e: c for e, c in zip(monos, coeffs) if not c.is_zero()})
    # identity check: cubic(wedge_square(θ(v))) = 0 as a polynomial in v
    composed = cubic.substitute(_ws_quadratics(theta))
    if not composed.is_zero():
        raise Inconsistent("interpolated cubic does not vanish on the whole image")
    grad = cubic.gradient()
    for key, pt in locus.e_points.items():
        if not cubic.evaluate(pt).is_zero():
            raise Inconsistent(f"cubic does not vanish at e_{key}")
        for g in grad:
            if not g.evaluate(pt).is_zero():
                raise Inconsistent(f"cubic not singular at e_{key}")
    return cubic


def plane_on_cubic(cubic: MultiPoly, spanning: List[List[Scalar]]) -> bool:
    """Whether the cubic vanishes identically on the projective plane spanned
    by three (or more) vectors: checked symbolically in plane parameters."""
    field = cubic.field
    k = len(spanning)
    params = [
        MultiPoly(k, field, {tuple(1 if i == a else 0 for i in range(k)): field.one()})
        for a in range(k)
    ]
    coords = []
    for m in range(5):
        acc = MultiPoly.zero(k, field)
        for a in range(k):
            acc = acc + params[a].scale(spanning[a][m])
        coords.append(acc)
    return cubic.substitute(coords).is_zero()


# -- Igusa quartic ---------------------------------------------------------------


@dataclass
class IgusaForm:
    gram: List[List[MultiPoly]]  # 4×4 symmetric, linear in h₁..h₅
    quartic: MultiPoly  # det of the Gram matrix, degree 4 in 5 variables


def igusa_quartic(theta: ThetaTensor) -> IgusaForm:
    """Q_h(v) = h∧θ(v)∧θ(v) as a symmetric Gram matrix of linear forms in h,
    and its determinant."""
    field = theta.field
    ws = _ws_quadratics(theta)  # coordinate m: quadratic in v

    def h_form(coeff_of_h: List[Scalar]) -> MultiPoly:
        terms = {}
        for m in range(5):
            e = [0] * 5
            e[m] = 1
            if not coeff_of_h[m].is_zero():
                terms[tuple(e)] = coeff_of_h[m]
        return MultiPoly(5, field, terms)

    # Gram entries: B_ab = 1/2 (Q(e_a+e_b) − Q(e_a) − Q(e_b)), B_aa = Q(e_a),
    # where Q(v)_m-coefficient of h_m is ws_m(v).
    def ws_vec(v_exp: Tuple[int, ...]) -> List[Scalar]:
        vec = [field.scalar(x) for x in v_exp]
        return wedge_square(theta.contract(vec))

    half = field.scalar(2).inverse()
    gram: List[List[MultiPoly]] = [[None] * 4 for _ in range(4)]
    singles = [ws_vec(tuple(1 if i == a else 0 for i in range(4))) for a in range(4)]
    for a in range(4):
        gram[a][a] = h_form(singles[a])
    for a in range(4):
        for b in range(a + 1, 4):
            both = ws_vec(tuple(1 if i in (a, b) else 0 for i in range(4)))
            coeffs = [(x - y - z) * half for x, y, z in zip(both, singles[a], singles[b])]
            gram[a][b] = gram[b][a] = h_form(coeffs)
    quartic = _poly_det4(gram)
    return IgusaForm(gram=gram, quartic=quartic)


def _poly_det4(m: List[List[MultiPoly]]) -> MultiPoly:
    field = m[0][0].field

    def det(rows, cols):
        if len(rows) == 1:
            return m[rows[0]][cols[0]]
        acc = MultiPoly.zero(5, field)
        r0 = rows[0]
        for idx, c in enumerate(cols):
            rest = [x for x in cols if x != c]
            sub = det(rows[1:], rest)
            term = m[r0][c] * sub
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    return det(list(range(4)), list(range(4)))


def printed_igusa_gram(field: Field) -> List[List[MultiPoly]]:
    """The printed determinantal representation of the Igusa quartic."""

    def lin(*pairs) -> MultiPoly:
        terms = {}
        for coef, idx in pairs:
            e = [0] * 5
            e[idx] = 1
            terms[tuple(e)] = field.scalar(coef)
        return MultiPoly(5, field, terms)

    z = MultiPoly.zero(5, field)
    return [
        [lin((2, 0)), lin((-1, 1)), lin((-1, 2)), lin((-1, 4))],
        [lin((-1, 1)), lin((2, 2)), lin((-1, 3)), z],
        [lin((-1, 2)), lin((-1, 3)), lin((2, 4)), lin((-1, 0))],
        [lin((-1, 4)), z, lin((-1, 0)), lin((2, 2))],
    ]


def printed_igusa_quartic(field: Field) -> MultiPoly:
    """−det(Q_h) = 4h₃⁴+4h₃²(3h₁h₅−h₂h₄)−4h₃(h₁³+h₅³+h₁h₄²+h₂²h₅)+(h₁h₂−h₄h₅)²."""
    h = [MultiPoly.variable(5, i, field) for i in range(5)]
    four = MultiPoly.constant(5, field.scalar(4))
    three = MultiPoly.constant(5, field.scalar(3))
    h3sq = h[2] * h[2]
    term1 = four * h3sq * h3sq
    term2 = four * h3sq * (three * h[0] * h[4] - h[1] * h[3])
    term3 = four * h[2] * (
        h[0] * h[0] * h[0] + h[4] * h[4] * h[4] + h[0] * h[3] * h[3] + h[1] * h[1] * h[4]
    )
    inner = h[0] * h[1] - h[3] * h[4]
    term4 = inner * inner
    return term1 + term2 - term3 + term4


def gram_global_scalar(
    ours: List[List[MultiPoly]], printed: List[List[MultiPoly]]
) -> Optional[Scalar]:
    """The single scalar c with ours = c · printed, or None."""
    c = None
    for a in range(4):
        for b in range(4):
            for e, coef in printed[a][b].terms.items():
                mine = ours[a][b].coefficient(e)
                ratio = mine * coef.inverse()
                if c is None:
                    c = ratio
                elif c != ratio:
                    return None
    if c is None or c.is_zero():
        return None
    for a in range(4):
        for b in range(4):
            if ours[a][b] != printed[a][b].scale(c):
                return None
    return c
