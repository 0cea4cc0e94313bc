"""Data-parallel exhaustive enumeration over F_p.

All arithmetic is int64 modular arithmetic on numpy arrays; no floats.
Enumeration is chunked over a fixed order of row-echelon cells, and
per-chunk results are exact integers merged in chunk order, so the counts
cannot depend on the chunk size or the number of worker threads.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple

import numpy as np

DEFAULT_CHUNK = 1 << 18


def _base_p_block(start: int, count: int, nslots: int, p: int) -> np.ndarray:
    """Rows start..start+count−1 written base p over nslots digits."""
    idx = np.arange(start, start + count, dtype=np.int64)
    out = np.empty((count, nslots), dtype=np.int64)
    for s in range(nslots):
        out[:, s] = idx % p
        idx = idx // p
    return out


def projective_rep_chunks(n: int, p: int, chunk: int = DEFAULT_CHUNK) -> Iterator[np.ndarray]:
    """Representatives of P^{n−1}(F_p): last nonzero coordinate equals 1."""
    for k in range(n):
        total = p**k
        pos = 0
        while pos < total:
            m = min(chunk, total - pos)
            block = np.zeros((m, n), dtype=np.int64)
            if k:
                block[:, :k] = _base_p_block(pos, m, k, p)
            block[:, k] = 1
            yield block
            pos += m


def projective_count(n: int, p: int) -> int:
    return (p**n - 1) // (p - 1)


def grassmann_cells(k: int, n: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations(range(n), k))


def _cell_free_slots(pivots: Tuple[int, ...], n: int) -> List[Tuple[int, int]]:
    free = []
    for i, piv in enumerate(pivots):
        for c in range(piv + 1, n):
            if c not in pivots:
                free.append((i, c))
    return free


def grassmann_rep_chunks(
    k: int, n: int, p: int, chunk: int = DEFAULT_CHUNK
) -> Iterator[np.ndarray]:
    """Reduced row-echelon representatives of G(k, n)(F_p), cell by cell."""
    for pivots in grassmann_cells(k, n):
        free = _cell_free_slots(pivots, n)
        total = p ** len(free)
        pos = 0
        while pos < total:
            m = min(chunk, total - pos)
            vals = _base_p_block(pos, m, len(free), p) if free else np.zeros((m, 0), np.int64)
            block = np.zeros((m, k, n), dtype=np.int64)
            for i, piv in enumerate(pivots):
                block[:, i, piv] = 1
            for s, (i, c) in enumerate(free):
                block[:, i, c] = vals[:, s]
            yield block
            pos += m


def grassmann_count_by_cells(k: int, n: int, p: int) -> int:
    """Point count by summing cell sizes (the echelon-cell oracle)."""
    return sum(p ** len(_cell_free_slots(piv, n)) for piv in grassmann_cells(k, n))


def gaussian_binomial(k: int, n: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    q, r = divmod(num, den)
    assert r == 0
    return q


def gauss_subspace_count(k: int, n: int, p: int) -> int:
    """Number of k-subspaces of an n-space; 0 when k > n."""
    if k < 0 or k > n:
        return 0
    return gaussian_binomial(k, n, p)


# -- batched small determinants ----------------------------------------------


def _det2(m, p, r0, r1, c0, c1):
    return (m[:, r0, c0] * m[:, r1, c1] - m[:, r0, c1] * m[:, r1, c0]) % p


def _det3(m, p, rows, cols):
    r0, r1, r2 = rows
    c0, c1, c2 = cols
    t = (
        m[:, r0, c0] * _det2(m, p, r1, r2, c1, c2)
        - m[:, r0, c1] * _det2(m, p, r1, r2, c0, c2)
        + m[:, r0, c2] * _det2(m, p, r1, r2, c0, c1)
    )
    return t % p


def _det4(m, p, rows, cols):
    r0 = rows[0]
    t = np.zeros(m.shape[0], dtype=np.int64)
    for j, c in enumerate(cols):
        rest = [x for x in cols if x != c]
        minor = _det3(m, p, rows[1:], rest)
        term = m[:, r0, c] * minor
        t = t + (term if j % 2 == 0 else -term)
    return t % p


def batched_rank_profile(m: np.ndarray, p: int, max_rank: int) -> np.ndarray:
    """Rank of each matrix in a (N, r, c) batch, r ≤ 4, c ≤ 5, mod p."""
    n, r, c = m.shape
    m = m % p
    ranks = np.zeros(n, dtype=np.int64)
    nz = m.any(axis=(1, 2))
    ranks[nz] = 1
    if max_rank >= 2:
        le1 = np.ones(n, dtype=bool)
        for rows in itertools.combinations(range(r), 2):
            for cols in itertools.combinations(range(c), 2):
                le1 &= _det2(m, p, rows[0], rows[1], cols[0], cols[1]) == 0
        ranks[~le1] = 2
    if max_rank >= 3:
        le2 = np.ones(n, dtype=bool)
        for rows in itertools.combinations(range(r), 3):
            for cols in itertools.combinations(range(c), 3):
                le2 &= _det3(m, p, rows, cols) == 0
        ranks[~le2] = 3
    if max_rank >= 4:
        le3 = np.ones(n, dtype=bool)
        for rows in itertools.combinations(range(r), 4):
            for cols in itertools.combinations(range(c), 4):
                le3 &= _det4(m, p, rows, cols) == 0
        ranks[~le3] = 4
    return ranks


# -- profiles of the eight models --------------------------------------------


def _map_chunks(fn: Callable, chunks: Iterable, threads: int):
    if threads <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def p_v5_rank_profile(thetas: np.ndarray, p: int, threads: int = 1):
    """Sweep [w] ∈ P(V₅): rank of the 4×5 matrix with rows θ_i(w,·).

    Returns (counts by rank {1,…,4}, list of rank ≤ 2 representative rows).
    """
    thetas = thetas % p

    def work(block):
        rows = np.stack([(block @ thetas[i]) % p for i in range(4)], axis=1)  # (m,4,5)
        ranks = batched_rank_profile(rows, p, 4)
        cnt = np.bincount(ranks, minlength=5)
        pts = block[ranks <= 2]
        return cnt, pts

    results = _map_chunks(work, projective_rep_chunks(5, p), threads)
    counts = np.zeros(5, dtype=object)
    points = []
    for cnt, pts in results:
        counts = counts + cnt
        if len(pts):
            points.append(pts)
    pts = np.concatenate(points) if points else np.zeros((0, 5), dtype=np.int64)
    return {r: int(counts[r]) for r in range(5)}, pts


def p_v4_pfaffian_profile(thetas: np.ndarray, p: int, threads: int = 1):
    """Sweep [v] ∈ P(V₄): Pfaffian rank of θ(v) ∈ {0, 2, 4}.

    Returns (counts, rank-two representative rows)."""
    thetas = thetas % p

    def work(block):
        forms = np.einsum("mi,iab->mab", block, thetas) % p  # (m,5,5)
        ranks = batched_rank_profile(forms, p, 4)
        cnt = np.bincount(ranks, minlength=5)
        pts = block[(ranks > 0) & (ranks <= 2)]
        return cnt, pts

    results = _map_chunks(work, projective_rep_chunks(4, p), threads)
    counts = np.zeros(5, dtype=object)
    points = []
    for cnt, pts in results:
        counts = counts + cnt
        if len(pts):
            points.append(pts)
    pts = np.concatenate(points) if points else np.zeros((0, 4), dtype=np.int64)
    assert counts[1] == 0 and counts[3] == 0, "odd skew rank"
    return {0: int(counts[0]), 2: int(counts[2]), 4: int(counts[4])}, pts


PAIRS5 = list(itertools.combinations(range(5), 2))


def _theta_plucker_vectors(thetas: np.ndarray, p: int) -> np.ndarray:
    """(4, 10) array of θ_i coefficients against Λ² coordinates, ω_ij i<j."""
    return np.stack([[int(thetas[i][a][b]) % p for a, b in PAIRS5] for i in range(4)]).astype(
        np.int64
    )


def g25_profile(thetas: np.ndarray, p: int, threads: int = 1):
    """Sweep W ∈ G(2, V₅): the linear form ℓ_W = (θ_i(w₁,w₂))_i on V₄.

    Returns (number of points, number with ℓ_W = 0, |X₈| sum, |X₈′| sum),
    accumulating the fiber counts P(ker ℓ_W) and G(2, ker ℓ_W)."""
    tpl = _theta_plucker_vectors(thetas, p)
    fib_p_nz = gauss_subspace_count(1, 3, p)  # P(ker), ℓ ≠ 0
    fib_p_z = gauss_subspace_count(1, 4, p)
    fib_g_nz = gauss_subspace_count(2, 3, p)
    fib_g_z = gauss_subspace_count(2, 4, p)

    def work(block):
        r0, r1 = block[:, 0, :], block[:, 1, :]
        pl = np.stack(
            [(r0[:, a] * r1[:, b] - r0[:, b] * r1[:, a]) % p for a, b in PAIRS5], axis=1
        )
        zero = np.ones(block.shape[0], dtype=bool)
        for i in range(4):
            zero &= (pl @ tpl[i]) % p == 0
        nz = int(zero.sum())
        return block.shape[0], nz

    results = _map_chunks(work, grassmann_rep_chunks(2, 5, p), threads)
    total = sum(r[0] for r in results)
    nzero = sum(r[1] for r in results)
    x8 = (total - nzero) * fib_p_nz + nzero * fib_p_z
    x8p = (total - nzero) * fib_g_nz + nzero * fib_g_z
    return total, nzero, x8, x8p


def g35_profile(thetas: np.ndarray, p: int, threads: int = 1):
    """Sweep V ∈ G(3, V₅): rank of θ_V : Λ²V → V₄^∨.

    Returns dict of counts {r: #V with rank exactly r} for r = 0..3."""
    thetas = thetas % p
    pairs = [(0, 1), (0, 2), (1, 2)]

    def work(block):
        tmp = [(block @ thetas[i]) % p for i in range(4)]  # each (m,3,5)
        m = np.empty((block.shape[0], 3, 4), dtype=np.int64)
        for a, (s, t) in enumerate(pairs):
            for i in range(4):
                m[:, a, i] = (tmp[i][:, s, :] * block[:, t, :]).sum(axis=1) % p
        ranks = batched_rank_profile(m, p, 3)
        return np.bincount(ranks, minlength=4)

    results = _map_chunks(work, grassmann_rep_chunks(3, 5, p), threads)
    counts = np.zeros(4, dtype=object)
    for cnt in results:
        counts = counts + cnt
    return {r: int(counts[r]) for r in range(4)}
