"""Verification of the explicit symmetry and incidence data: the two lift
matrices, the p_ijk coincidence and its (15₄,10₆) configuration, the fifteen
planes on the Segre cubic, and the ten flags of the degree-five del Pezzo
surface over F_p."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadReduction, Degenerate, Inconsistent
from .fpenum import p_v5_rank_profile
from .matrices import ExactMatrix, subspace_intersection
from .models import RankTwoLocus, theta_mod_p
from .multipoly import MultiPoly
from .scalars import GF, QZETA12, Scalar, cyclotomic_units
from .skew import PAIRS5, SkewForm, ThetaTensor


def _pt_key(v: List[Scalar]) -> tuple:
    lead = next(x for x in v if not x.is_zero())
    inv = lead.inverse()
    return tuple(x * inv for x in v)


# -- lift matrices -------------------------------------------------------------


def sign_lift_matrix() -> ExactMatrix:
    """f_i ↦ ε_i f_i with ε = (1,−1,1,−1,1)."""
    f = QZETA12
    m = ExactMatrix.zero(5, 5, f)
    for i, s in enumerate((1, -1, 1, -1, 1)):
        m.rows[i][i] = f.scalar(s)
    return m


def five_cycle_lift_matrix() -> ExactMatrix:
    """The printed lift of the cycle (12345); the display transforms the
    five covectors (the same f-for-f^∨ shorthand the ω table uses), so row
    k of the returned matrix is the image of the k-th covector.

    The display is written in the conjugate roots of unity relative to the
    coordinate tables (i ↦ −i, j ↦ j²); with that reading, and only with
    it, the matrix realizes the literal cycle ω_k ↦ ω_{k+1}."""
    i0, j0 = cyclotomic_units()
    i, j = -i0, j0 * j0
    f = QZETA12
    third = f.scalar(3).inverse()
    j2 = j * j
    rows = [
        [j * third, -(i * j) - (i * j), j * third, -(i * j), j * third * 4],
        [-(i + i) * third, -f.one(), i * third, f.zero(), i * third],
        [j2 * third * 4, (i * j2) * 4, -(j2 + j2) * third, -(i * j2) * 4, j2 * third * 4],
        [-(i * j) * third, f.zero(), -(i * j) * third, -j, (i * j) * third * 2],
        [third * 4, i, third, i + i, third],
    ]
    return ExactMatrix(rows, f)


def _transform_form(w: SkewForm, g: ExactMatrix) -> SkewForm:
    """ω ↦ ω(g·, g·), i.e. gᵀ M g."""
    return SkewForm(g.transpose() * w.m * g)


def _omega_permutation(omegas: Sequence[SkewForm], g: ExactMatrix) -> Optional[List[int]]:
    """The permutation k ↦ σ(k) with transform(ω_k) ∝ ω_{σ(k)}, if any."""
    out = []
    for w in omegas:
        tw = _transform_form(w, g)
        match = [k for k, target in enumerate(omegas) if tw.is_proportional_to(target)]
        if len(match) != 1:
            return None
        out.append(match[0])
    return out if sorted(out) == list(range(5)) else None


def _gl4_factor(theta: ThetaTensor, g: ExactMatrix) -> Optional[ExactMatrix]:
    """The 4×4 matrix A with transform(θ_i) = Σ_j A_ij θ_j, when the span of
    the components is g-invariant (this recovers the GL(V₄) correction)."""
    field = theta.field
    span = ExactMatrix([c.plucker() for c in theta.components], field).transpose()
    rows = []
    for comp in theta.components:
        sol = span.solve(_transform_form(comp, g).plucker())
        if sol is None:
            return None
        rows.append(sol)
    return ExactMatrix(rows, field)


@dataclass
class LiftReport:
    sign_permutation: List[int]
    cycle_permutation: List[int]
    sign_gl4: ExactMatrix
    cycle_gl4: ExactMatrix
    cycle_order5: bool
    action_convention: str


def verify_lifts(theta: ThetaTensor, locus: RankTwoLocus) -> LiftReport:
    """Check that the printed sign map and 5-cycle matrix permute the five
    rank-two directions by (12) and (12345), preserve ⟨θ⟩ up to a GL(V₄)
    factor (solved explicitly), and that the 5-cycle has order 5 in PGL."""
    sign = sign_lift_matrix()
    cycle = five_cycle_lift_matrix()
    perm_s = _omega_permutation(locus.omegas, sign)
    convention = "omega(gx, gy)"
    perm_c = _omega_permutation(locus.omegas, cycle)
    if perm_c is None or perm_c != [1, 2, 3, 4, 0]:
        # try the inverse action convention
        alt = _omega_permutation(locus.omegas, cycle.inverse())
        if alt == [1, 2, 3, 4, 0]:
            cycle = cycle.inverse()
            perm_c = alt
            convention = "omega(g^-1 x, g^-1 y)"
    if perm_s != [1, 0, 2, 3, 4]:
        raise Inconsistent(f"sign lift permutes the ω_k by {perm_s}, not (12)")
    if perm_c != [1, 2, 3, 4, 0]:
        raise Inconsistent(f"5-cycle lift permutes the ω_k by {perm_c}, not (12345)")
    a_s = _gl4_factor(theta, sign)
    a_c = _gl4_factor(theta, cycle)
    if a_s is None or a_c is None:
        raise Inconsistent("printed lift does not preserve the span of the components")
    # order 5 in PGL: fifth power is a nonzero scalar matrix, the matrix
    # itself is not one
    power = cycle
    for _ in range(4):
        power = power * cycle
    diag = power.rows[0][0]
    order5 = not diag.is_zero() and all(
        power.rows[r][c] == (diag if r == c else theta.field.zero())
        for r in range(5)
        for c in range(5)
    )
    is_scalar_matrix = all(
        cycle.rows[r][c].is_zero() for r in range(5) for c in range(5) if r != c
    )
    if not order5 or is_scalar_matrix:
        raise Inconsistent("5-cycle lift does not have order 5 in PGL(V5)")
    return LiftReport(
        sign_permutation=perm_s,
        cycle_permutation=perm_c,
        sign_gl4=a_s,
        cycle_gl4=a_c,
        cycle_order5=order5,
        action_convention=convention,
    )


# -- the p_ijk coincidence and (15₄,10₆) --------------------------------------


@dataclass
class PijkReport:
    n_points: int
    row_sums: List[int]  # ownership incidence: p_iab on the four π_il
    col_sums: List[int]  # ownership incidence: π_ij holds 3+3 owner points
    containment_row_sums: List[int]  # plain geometric containment
    containment_col_sums: List[int]
    coincidences_verified: bool
    pattern_verified: bool


def pijk_configuration(locus: RankTwoLocus) -> PijkReport:
    """π_i = support plane of ω_i in V₅^∨; p_ijk = π_i ∩ (π_j + π_k) must be
    a point, equal to p_ilm for the complementary splitting; the fifteen
    distinct points and ten hyperplanes π_ij form a (15₄,10₆) configuration."""
    field = locus.theta.field
    pi = [w.support() for w in locus.omegas]
    for s in pi:
        if len(s) != 2:
            raise Degenerate("support of a rank-two form is not a 2-space")
    pi_sum: Dict[Tuple[int, int], List[List[Scalar]]] = {}
    for a, b in PAIRS5:
        stacked = ExactMatrix(pi[a] + pi[b], field)
        if stacked.rank() != 4:
            raise Degenerate(f"π_{a} + π_{b} is not a hyperplane")
        pi_sum[(a, b)] = pi[a] + pi[b]

    def intersect_point(i: int, j: int, k: int) -> tuple:
        inter = subspace_intersection(pi[i], pi_sum[(min(j, k), max(j, k))], field)
        if len(inter) != 1:
            raise Degenerate(f"π_{i} ∩ (π_{j}+π_{k}) is not a point")
        return _pt_key(inter[0])

    points: Dict[tuple, set] = {}
    coincidence = True
    for i in range(5):
        rest = [x for x in range(5) if x != i]
        splittings = []
        for j_idx in range(1, 4):
            j = rest[j_idx]
            pair = (rest[0], j)
            other = tuple(x for x in rest if x not in pair)
            splittings.append((pair, other))
        for (j, k), (l, m) in splittings:
            a = intersect_point(i, j, k)
            b = intersect_point(i, l, m)
            if a != b:
                coincidence = False
            points.setdefault(a, set()).add((i, frozenset((j, k))))
    n_points = len(points)

    # geometric containment in the ten hyperplanes π_ab
    keys = list(points)
    incidence = []
    for pt in keys:
        row = []
        for a, b in PAIRS5:
            stacked = ExactMatrix(pi_sum[(a, b)] + [list(pt)], field)
            row.append(1 if stacked.rank() == 4 else 0)
        incidence.append(row)
    cont_rows = [sum(r) for r in incidence]
    cont_cols = [sum(incidence[r][c] for r in range(len(keys))) for c in range(10)]

    # each point p_ijk = p_ilm carries a single first index i (its owner);
    # the configuration of the proposition counts the incidences through the
    # owner: p_iab on the four π_il, and π_ij holding 3 + 3 owner points.
    # Every point also sits inside its two defining hyperplanes π_ab, π_cd,
    # so plain containment counts are larger (6 and 9); both are reported.
    pattern = True
    owners = {}
    for pt, labels in points.items():
        first = {i for i, _ in labels}
        if len(first) != 1:
            pattern = False
        owners[pt] = min(first)
    owner_rows = []
    owner_incidence = []
    for r, pt in enumerate(keys):
        row = []
        for c, (a, b) in enumerate(PAIRS5):
            through_owner = owners[pt] in (a, b)
            if through_owner and not incidence[r][c]:
                raise Degenerate("owner incidence without geometric containment")
            row.append(1 if through_owner else 0)
        owner_incidence.append(row)
        owner_rows.append(sum(row))
    owner_cols = [sum(owner_incidence[r][c] for r in range(len(keys))) for c in range(10)]
    for c, (a, b) in enumerate(PAIRS5):
        incident_owners = [owners[keys[r]] for r in range(len(keys)) if owner_incidence[r][c]]
        if incident_owners.count(a) != 3 or incident_owners.count(b) != 3:
            pattern = False
    return PijkReport(
        n_points=n_points,
        row_sums=owner_rows,
        col_sums=owner_cols,
        containment_row_sums=cont_rows,
        containment_col_sums=cont_cols,
        coincidences_verified=coincidence,
        pattern_verified=pattern,
    )


# -- the fifteen planes on the Segre cubic -------------------------------------


@dataclass
class CremonaPlanesReport:
    planes_on_cubic: int
    kernel_planes_rank3: bool
    kernel_planes_match: bool
    pairwise_points: bool


def cremona_planes_check(cubic: MultiPoly, locus: RankTwoLocus) -> CremonaPlanesReport:
    """The ten planes P_pq = ⟨e_ij, e_jk, e_ik⟩ (complementary indices) and
    the five kernel planes P_p = ⟨e_ip : i ≠ p⟩ all lie on the cubic; the
    P_p have projective dimension two and meet pairwise in single points."""
    from .models import plane_on_cubic

    field = locus.theta.field
    e = locus.e_points

    def epoint(a, b):
        return e[(min(a, b), max(a, b))]

    on_cubic = 0
    for pq in PAIRS5:
        ijk = [x for x in range(5) if x not in pq]
        span = [epoint(ijk[0], ijk[1]), epoint(ijk[1], ijk[2]), epoint(ijk[0], ijk[2])]
        if ExactMatrix(span, field).rank() != 3:
            raise Degenerate(f"P_{pq} is not a plane")
        if plane_on_cubic(cubic, span):
            on_cubic += 1
    rank3 = True
    match = True
    for p in range(5):
        span = [epoint(i, p) for i in range(5) if i != p]
        if ExactMatrix(span, field).rank() != 3:
            rank3 = False
            continue
        if plane_on_cubic(cubic, span):
            on_cubic += 1
        # the span of the four e_ip must be the kernel plane of ω_p
        stacked = ExactMatrix(span + locus.planes[p], field)
        if stacked.rank() != 3:
            match = False
    pairwise = True
    for a, b in PAIRS5:
        stacked = ExactMatrix(locus.planes[a] + locus.planes[b], field)
        if stacked.rank() != 5:  # 3 + 3 − 5 = 1: intersection is a point
            pairwise = False
    return CremonaPlanesReport(
        planes_on_cubic=on_cubic,
        kernel_planes_rank3=rank3,
        kernel_planes_match=match,
        pairwise_points=pairwise,
    )


# -- the ten flags over F_p ------------------------------------------------------


@dataclass
class FlagReport:
    prime: int
    n_flags: int
    a1_matches_e_points: bool
    flags: List[Tuple[Tuple[int, ...], List[Tuple[int, ...]]]]


def dp5_flags(theta: ThetaTensor, p: int, locus: Optional[RankTwoLocus] = None) -> FlagReport:
    """Exhaustive search over F_p for the flags A₁ ⊂ A₃ ⊂ V₅ with
    θ(A₁, A₃) = 0; for a good prime there are exactly ten, with the A₁
    reducing to the ten points e_pq."""
    thetas = theta_mod_p(theta, p)
    counts, pts = p_v5_rank_profile(thetas, p)
    if counts[1] > 0 or counts[0] > 0:
        raise BadReduction(f"rank < 2 point in the V5 sweep mod {p}")
    n = counts[2]
    field = GF(p)
    flags = []
    for row in pts:
        w = [field.scalar(int(x)) for x in row]
        m = ExactMatrix(
            [[_apply_form(thetas[i], row, b, p) for b in range(5)] for i in range(4)],
            field,
        )
        kern = m.kernel_basis()
        if len(kern) != 3:
            raise BadReduction("kernel of a flag point is not 3-dimensional")
        flags.append(
            (
                tuple(int(x) for x in row),
                [tuple(x.residue for x in v) for v in kern],
            )
        )
    matches = True
    if locus is not None:
        expected = set()
        for vec in locus.e_points.values():
            red = [reduce_mod(x, p) for x in vec]
            expected.add(_int_pt_key(red, p))
        got = {_int_pt_key([int(x) for x in row], p) for row, _ in flags}
        matches = expected == got
    return FlagReport(prime=p, n_flags=n, a1_matches_e_points=matches, flags=flags)


def _apply_form(tmat, w, b, p) -> "Scalar":
    from .scalars import PrimeFieldElement

    acc = 0
    for a in range(5):
        acc += int(tmat[a][b]) * int(w[a])
    return PrimeFieldElement(acc % p, p)


def _int_pt_key(coords: List[int], p: int) -> Tuple[int, ...]:
    lead_idx = next(i for i, x in enumerate(coords) if x % p)
    inv = pow(coords[lead_idx], p - 2, p)
    return tuple((x * inv) % p for x in coords)


def reduce_mod(x: Scalar, p: int) -> int:
    from .scalars import reduce_scalar_mod_p

    return reduce_scalar_mod_p(x, p)
