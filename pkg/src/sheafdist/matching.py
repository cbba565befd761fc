"""Exact bottleneck distance between graded barcodes.

The distance decomposes over the CLR split: each central index m is a
perfect-matching problem between the two multisets filed there (no
deletions allowed), and each half-open (side, degree) slot is a partial
matching problem where unmatched bars pay their deletion cost.  The
whole-barcode distance is the max over slots, attained by a concrete
matching that ``distance_with_matching`` returns.

Each slot is solved exactly: the optimum is always one of the finitely
many pairwise or deletion costs, so we binary-search that candidate set,
testing feasibility with a maximum bipartite matching on the
edges-at-most-eps graph (half-open slots get one virtual diagonal
partner per bar, the classic square reduction).  No floating-point
threshold is ever approximated.

``bruteforce_distance`` re-solves everything by exhaustive enumeration
and exists purely as an oracle for the fast path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .barcode import Barcode, split_clr
from .costs import deletion_cost, pair_cost
from .intervals import INF, GradedInterval


@dataclass(frozen=True)
class Matching:
    """Witness of an achieved bottleneck value.

    ``central_pairs``: (index m, left bar, right bar, cost)
    ``halfopen_pairs``: (side "R"|"L", degree, left bar, right bar, cost)
    ``deletions``: (side, degree, origin "left"|"right", bar, cost)
    ``achieved``: max over all listed costs (inf when no matching exists).
    """

    central_pairs: tuple[tuple[int, GradedInterval, GradedInterval, float], ...]
    halfopen_pairs: tuple[tuple[str, int, GradedInterval, GradedInterval, float], ...]
    deletions: tuple[tuple[str, int, str, GradedInterval, float], ...]
    achieved: float

    @staticmethod
    def infeasible() -> "Matching":
        return Matching((), (), (), INF)


def _max_bipartite(n_left: int, n_right: int, adj: list[list[int]]) -> list[int]:
    """Deterministic augmenting-path matching; returns match_of_right."""
    match_right = [-1] * n_right
    match_left = [-1] * n_left

    def try_augment(i: int, seen: list[bool]) -> bool:
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] == -1 or try_augment(match_right[j], seen):
                    match_right[j] = i
                    match_left[i] = j
                    return True
        return False

    for i in range(n_left):
        try_augment(i, [False] * n_right)
    return match_right


def _least_feasible(cands: list[float], feasible) -> float | None:
    """Smallest candidate passing the monotone feasibility test."""
    lo, hi = 0, len(cands) - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        if feasible(cands[mid]):
            best = cands[mid]
            hi = mid - 1
        else:
            lo = mid + 1
    return best


Pairing = tuple[tuple[GradedInterval | None, GradedInterval | None, float], ...]


def _central_solve(left: list[GradedInterval], right: list[GradedInterval]) -> tuple[float, Pairing]:
    if len(left) != len(right):
        return INF, ()
    n = len(left)
    if n == 0:
        return 0.0, ()
    cost = [[pair_cost(l, r) for r in right] for l in left]
    cands = sorted({c for row in cost for c in row if c < INF})
    if not cands:
        return INF, ()

    def adj_at(eps: float) -> list[list[int]]:
        return [[j for j in range(n) if cost[i][j] <= eps] for i in range(n)]

    def feasible(eps: float) -> bool:
        mr = _max_bipartite(n, n, adj_at(eps))
        return all(j != -1 for j in mr)

    best = _least_feasible(cands, feasible)
    if best is None:
        return INF, ()
    mr = _max_bipartite(n, n, adj_at(best))
    pairs = tuple((left[mr[j]], right[j], cost[mr[j]][j]) for j in range(n))
    return best, pairs


def _halfopen_solve(left: list[GradedInterval], right: list[GradedInterval]) -> tuple[float, Pairing]:
    p, q = len(left), len(right)
    if p == 0 and q == 0:
        return 0.0, ()
    cost = [[pair_cost(l, r) for r in right] for l in left]
    del_l = [deletion_cost(l) for l in left]
    del_r = [deletion_cost(r) for r in right]
    cands = sorted(
        {0.0}
        | {c for row in cost for c in row if c < INF}
        | {c for c in del_l + del_r if c < INF}
    )
    size = p + q  # lefts: bars + diagonal-of-right, rights: bars + diagonal-of-left

    def adj_at(eps: float) -> list[list[int]]:
        adj = []
        for i in range(p):
            row = [j for j in range(q) if cost[i][j] <= eps]
            if del_l[i] <= eps:
                row.append(q + i)
            adj.append(row)
        for j in range(q):
            row = [j] if del_r[j] <= eps else []
            row.extend(range(q, q + p))  # diagonal meets diagonal for free
            adj.append(row)
        return adj

    def feasible(eps: float) -> bool:
        mr = _max_bipartite(size, size, adj_at(eps))
        return all(j != -1 for j in mr)

    best = _least_feasible(cands, feasible)
    if best is None:
        return INF, ()
    mr = _max_bipartite(size, size, adj_at(best))
    out: list[tuple[GradedInterval | None, GradedInterval | None, float]] = []
    for j in range(size):
        i = mr[j]
        if i < p and j < q:
            out.append((left[i], right[j], cost[i][j]))
        elif i < p:  # left bar matched to its diagonal copy
            out.append((left[i], None, del_l[i]))
        elif j < q:  # right bar matched to a diagonal copy
            out.append((None, right[j], del_r[j]))
    return best, tuple(out)


def part_bottleneck(
    left: list[GradedInterval] | tuple[GradedInterval, ...],
    right: list[GradedInterval] | tuple[GradedInterval, ...],
    kind: tuple,
) -> tuple[float, Pairing]:
    """Bottleneck value and witness for one slot.

    ``kind`` is ``("central", m)``, ``("R", j)`` or ``("L", j)``; it
    selects the matching regime (bijection for central, partial matching
    with deletions for half-open slots).
    """
    lt = sorted(left, key=lambda g: g.key)
    rt = sorted(right, key=lambda g: g.key)
    if kind[0] == "central":
        return _central_solve(lt, rt)
    if kind[0] in ("R", "L"):
        return _halfopen_solve(lt, rt)
    raise ValueError(f"unknown slot kind {kind!r}")


def distance_with_matching(F: Barcode, G: Barcode) -> tuple[float, Matching]:
    """Bottleneck distance together with an optimal matching.

    Returns ``(inf, Matching.infeasible())`` when no finite matching
    exists (for instance when a central slot has mismatched sizes).
    The result is deterministic: equal inputs give identical matchings.
    """
    sf, sg = split_clr(F), split_clr(G)
    central_pairs = []
    halfopen_pairs = []
    deletions = []
    achieved = 0.0

    for m in sorted(set(sf.central) | set(sg.central)):
        value, pairs = part_bottleneck(
            sf.central.get(m, ()), sg.central.get(m, ()), ("central", m)
        )
        if value == INF:
            return INF, Matching.infeasible()
        achieved = max(achieved, value)
        central_pairs.extend((m, l, r, c) for l, r, c in pairs)

    for side, fp, gp in (("R", sf.right, sg.right), ("L", sf.left, sg.left)):
        for j in sorted(set(fp) | set(gp)):
            value, pairs = part_bottleneck(fp.get(j, ()), gp.get(j, ()), (side, j))
            if value == INF:
                return INF, Matching.infeasible()
            achieved = max(achieved, value)
            for l, r, c in pairs:
                if l is not None and r is not None:
                    halfopen_pairs.append((side, j, l, r, c))
                elif l is not None:
                    deletions.append((side, j, "left", l, c))
                else:
                    deletions.append((side, j, "right", r, c))

    return achieved, Matching(
        tuple(central_pairs), tuple(halfopen_pairs), tuple(deletions), achieved
    )


# ---------------------------------------------------------------------
# exhaustive oracle
# ---------------------------------------------------------------------


def _brute_central(left, right) -> float:
    if len(left) != len(right):
        return INF
    if not left:
        return 0.0
    best = INF
    for perm in itertools.permutations(range(len(right))):
        worst = max(pair_cost(l, right[j]) for l, j in zip(left, perm))
        best = min(best, worst)
    return best


def _brute_halfopen(left, right) -> float:
    del_r = [deletion_cost(r) for r in right]

    def go(i: int, used: frozenset, cur: float) -> float:
        if i == len(left):
            tail = max((del_r[j] for j in range(len(right)) if j not in used), default=0.0)
            return max(cur, tail)
        best = go(i + 1, used, max(cur, deletion_cost(left[i])))
        for j in range(len(right)):
            if j not in used:
                c = pair_cost(left[i], right[j])
                if c < INF:
                    best = min(best, go(i + 1, used | {j}, max(cur, c)))
        return best

    return go(0, frozenset(), 0.0)


def bruteforce_distance(F: Barcode, G: Barcode, limit: int = 6) -> float:
    """Distance by exhaustive enumeration of matchings, slot by slot.

    Refuses slots larger than ``limit`` bars per side.  Semantically
    identical to ``distance_with_matching`` and kept that way: the fast
    path is tested against this function.
    """
    sf, sg = split_clr(F), split_clr(G)
    total = 0.0
    slots = [
        (sf.central.get(m, ()), sg.central.get(m, ()), True)
        for m in set(sf.central) | set(sg.central)
    ]
    for side_f, side_g in ((sf.right, sg.right), (sf.left, sg.left)):
        slots.extend(
            (side_f.get(j, ()), side_g.get(j, ()), False)
            for j in set(side_f) | set(side_g)
        )
    for left, right, is_central in slots:
        if max(len(left), len(right)) > limit:
            raise ValueError(f"slot larger than limit={limit}")
        lt = sorted(left, key=lambda g: g.key)
        rt = sorted(right, key=lambda g: g.key)
        value = _brute_central(lt, rt) if is_central else _brute_halfopen(lt, rt)
        total = max(total, value)
    return total
