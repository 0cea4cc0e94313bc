"""Combinatorics of the fifteen perfect matchings of {1..6}: the self-dual
(15₃,15₃) incidence structure, the six pentads, the (10₃,5₆) configuration
and its Petersen graph, and the induced action of S₆ on the pentads."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

Pair = Tuple[int, int]
Matching = Tuple[Pair, Pair, Pair]


def all_matchings(symbols: Sequence[int] = (1, 2, 3, 4, 5, 6)) -> List[Matching]:
    """The 15 perfect matchings, each in canonical sorted form."""
    out = []
    syms = sorted(symbols)

    def rec(rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        a = rest[0]
        for b in rest[1:]:
            rec([x for x in rest[1:] if x != b], acc + [(a, b)])

    rec(syms, [])
    return sorted(out)


def canonical(matching) -> Matching:
    pairs = sorted(tuple(sorted(p)) for p in matching)
    return tuple(pairs)  # type: ignore[return-value]


def all_pairs(symbols: Sequence[int] = (1, 2, 3, 4, 5, 6)) -> List[Pair]:
    return [tuple(p) for p in itertools.combinations(sorted(symbols), 2)]


@dataclass
class IncidenceStructure:
    points: list
    blocks: list
    matrix: List[List[int]]

    def row_sums(self):
        return [sum(r) for r in self.matrix]

    def col_sums(self):
        return [sum(self.matrix[r][c] for r in range(len(self.points))) for c in range(len(self.blocks))]


def cremona_richmond() -> IncidenceStructure:
    """Points = the 15 pairs, blocks = the 15 matchings, incidence = the
    pair occurs in the matching; a (15₃,15₃) configuration in which two
    blocks share at most one point."""
    points = all_pairs()
    blocks = all_matchings()
    matrix = [[1 if p in m else 0 for m in blocks] for p in points]
    inc = IncidenceStructure(points, blocks, matrix)
    assert set(inc.row_sums()) == {3} and set(inc.col_sums()) == {3}
    for m1, m2 in itertools.combinations(blocks, 2):
        assert len(set(m1) & set(m2)) <= 1
    return inc


def matchings_share_pair(m1: Matching, m2: Matching) -> int:
    return len(set(m1) & set(m2))


def self_duality_isomorphism() -> Dict[Pair, Matching]:
    """An explicit isomorphism from the structure to its dual: a bijection
    pairs → matchings carrying point-block incidence to block-point
    incidence.  Built by backtracking; existence is the self-duality."""
    inc = cremona_richmond()
    points, blocks = inc.points, inc.blocks
    point_blocks = {p: frozenset(j for j, m in enumerate(blocks) if p in m) for p in points}
    block_points = {j: frozenset(i for i, p in enumerate(points) if p in blocks[j]) for j in range(15)}

    res = _dual_search(points, blocks, point_blocks, block_points)
    assert res is not None, "Cremona-Richmond failed to be self-dual"
    return res


def _dual_search(points, blocks, point_blocks, block_points):
    n = 15
    adj_p = [frozenset(point_blocks[p]) for p in points]  # point -> block ids
    adj_b = [frozenset(block_points[j]) for j in range(n)]  # block -> point ids
    sigma = [-1] * n  # point i -> block sigma[i]
    tau = [-1] * n  # block j -> point tau[j]

    def consistent(i, j):
        # incidences decided so far must match: for blocks already mapped,
        # i ∈ adj_b[b]  ⟺  tau[b] ∈ adj_b[j]... point/block duality:
        for b in range(n):
            if tau[b] != -1 and ((b in adj_p[i]) != (tau[b] in adj_b[j])):
                return False
        return True

    def rec(i):
        if i == n:
            return True
        for j in range(n):
            if j in sigma[:i]:
                continue
            if not consistent(i, j):
                continue
            sigma[i] = j
            # propagate tau: if block b now has all three σ-images of its
            # points defined, these must be the points of some block — we
            # instead define tau lazily by matching triples
            newtau = []
            ok = True
            for b in range(n):
                if tau[b] != -1:
                    continue
                imgs = [sigma[x] for x in adj_b[b] if sigma[x] != -1]
                if len(imgs) == 3:
                    cands = [q for q in range(n) if adj_p[q] == frozenset(imgs) and q not in tau]
                    if not cands:
                        ok = False
                        break
                    tau[b] = cands[0]
                    newtau.append(b)
            if ok and rec(i + 1):
                return True
            for b in newtau:
                tau[b] = -1
            sigma[i] = -1
        return False

    if rec(0):
        return {points[i]: blocks[sigma[i]] for i in range(n)}
    return None


# -- pentads -------------------------------------------------------------------


Pentad = Tuple[Matching, ...]


def enumerate_pentads() -> List[Pentad]:
    """The collections of five matchings using all fifteen pairs exactly
    once (equivalently: five planes of the cubic meeting pairwise in
    points); there are exactly six."""
    matchings = all_matchings()
    out: List[Pentad] = []
    for combo in itertools.combinations(matchings, 5):
        used = set()
        ok = True
        for m in combo:
            for p in m:
                if p in used:
                    ok = False
                    break
                used.add(p)
            if not ok:
                break
        if ok:
            out.append(tuple(combo))
    return out


PRINTED_PENTAD_TABLE = [
    ["(12|34|56)", "(13|25|46)", "(14|26|35)", "(15|24|36)", "(16|23|45)"],
    ["(12|34|56)", "(13|26|45)", "(14|25|36)", "(15|23|46)", "(16|24|35)"],
    ["(12|35|46)", "(13|24|56)", "(14|25|36)", "(15|26|34)", "(16|23|45)"],
    ["(12|35|46)", "(13|26|45)", "(14|23|56)", "(15|24|36)", "(16|25|34)"],
    ["(12|36|45)", "(13|25|46)", "(14|23|56)", "(15|26|34)", "(16|24|35)"],
    ["(12|36|45)", "(13|24|56)", "(14|26|35)", "(15|23|46)", "(16|25|34)"],
]


def parse_matching(s: str) -> Matching:
    body = s.strip("()")
    pairs = tuple(tuple(int(c) for c in chunk) for chunk in body.split("|"))
    return canonical(pairs)


def printed_pentads() -> List[Pentad]:
    return [tuple(sorted(parse_matching(s) for s in col)) for col in PRINTED_PENTAD_TABLE]


def pentads_match_printed_table(pentads: List[Pentad]) -> bool:
    ours = {tuple(sorted(p)) for p in pentads}
    printed = {tuple(sorted(p)) for p in printed_pentads()}
    return ours == printed


def apply_permutation(g: Sequence[int], m: Matching) -> Matching:
    """g maps symbol k to g[k-1]."""
    return canonical(tuple((g[a - 1], g[b - 1]) for a, b in m))


def pentad_action(g: Sequence[int], pentads: List[Pentad] | None = None) -> List[int]:
    """The induced permutation of the six pentads: position i holds the
    index of the image of pentad i."""
    if pentads is None:
        pentads = enumerate_pentads()
    keyed = [frozenset(p) for p in pentads]
    out = []
    for p in pentads:
        img = frozenset(canonical(apply_permutation(g, m)) for m in p)
        out.append(keyed.index(img))
    return out


def petersen_and_1036() -> dict:
    """The abstract (10₃,5₆) of hyperplane symbols H_jk and plane symbols
    p_i with incidence i ∉ {j,k}, and the Petersen graph on the H_jk with
    edges at disjoint index pairs."""
    pairs = [tuple(p) for p in itertools.combinations(range(1, 6), 2)]
    inc = [[1 if i not in jk else 0 for i in range(1, 6)] for jk in pairs]
    row_sums = [sum(r) for r in inc]
    col_sums = [sum(inc[r][c] for r in range(10)) for c in range(5)]
    edges = [
        (a, b)
        for a, b in itertools.combinations(range(10), 2)
        if not set(pairs[a]) & set(pairs[b])
    ]
    degree = [sum(1 for e in edges if v in e) for v in range(10)]
    girth = _girth(10, edges)
    return {
        "row_sums": row_sums,
        "col_sums": col_sums,
        "n_edges": len(edges),
        "degrees": degree,
        "girth": girth,
    }


def _girth(n: int, edges: List[Tuple[int, int]]) -> int:
    adj = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    best = None
    for start in range(n):
        dist = {start: 0}
        parent = {start: None}
        queue = [start]
        while queue:
            v = queue.pop(0)
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    cycle = dist[v] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best or 0


S6 = list(itertools.permutations(range(1, 7)))


def pentads_partition_check(pentads: List[Pentad]) -> bool:
    """Each pentad uses all 15 pairs once; each matching is in exactly 2."""
    count: Dict[Matching, int] = {}
    for p in pentads:
        used = set()
        for m in p:
            count[m] = count.get(m, 0) + 1
            used |= set(m)
        if len(used) != 15:
            return False
    return all(v == 2 for v in count.values()) and len(count) == 15
