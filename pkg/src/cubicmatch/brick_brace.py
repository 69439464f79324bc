"""Tight cuts, brick-and-brace decomposition, and the matching polytope.

The decomposition of a cubic bridgeless graph only needs size-3 odd cuts:
every tight cut of a cubic bridgeless graph has size three, and the pieces
stay cubic and bridgeless. Polytope quantities use exact rational
arithmetic throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .connectivity import bridges, enumerate_cuts, vertex_connectivity_at_most
from .matching import (
    boundary_profile,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    is_matching_covered,
    _has_pm,
)
from .multigraph import Cut, MultiGraph, contract, delete_vertices

BRICK = "brick"
BRACE = "brace"

ODD_SET_LIMIT = 16  # exhaustive odd-set checks are capped at this order


@dataclass(frozen=True)
class Decomposition:
    """Final pieces of the tight-cut decomposition with their kinds.

    cut_trace records every tight cut split, each in the coordinates of
    the intermediate piece it was found in (original coordinates for the
    first split).
    """

    pieces: tuple[tuple[MultiGraph, str], ...]
    cut_trace: tuple[Cut, ...]

    @property
    def brick_count(self) -> int:
        return sum(1 for _, kind in self.pieces if kind == BRICK)

    @property
    def brace_count(self) -> int:
        return sum(1 for _, kind in self.pieces if kind == BRACE)


def _is_tight_unchecked(g: MultiGraph, cut: Cut) -> bool:
    profile = boundary_profile(g, cut)
    return all(
        profile.m_a[x] * profile.m_b[x] == 0
        for x in profile.m_a
        if len(x) != 1
    )


def is_tight(g: MultiGraph, cut: Cut) -> bool:
    """True when every perfect matching uses exactly one cut edge."""
    if not is_matching_covered(g):
        raise ValueError("is_tight requires a matching covered graph")
    return _is_tight_unchecked(g, cut)


def _require_cubic_bridgeless_covered(g: MultiGraph, who: str) -> None:
    if not g.is_cubic():
        raise ValueError(f"{who} requires a cubic graph")
    if bridges(g):
        raise ValueError(f"{who} requires a bridgeless graph")
    if not is_matching_covered(g):
        raise ValueError(f"{who} requires a matching covered graph")


def find_nontrivial_tight_cut(g: MultiGraph) -> Cut | None:
    """First tight cut with both sides of at least 3 vertices, or None.

    Only size-3 odd cuts are searched: tight cuts of cubic bridgeless
    graphs cannot be larger.
    """
    _require_cubic_bridgeless_covered(g, "find_nontrivial_tight_cut")
    return _find_nontrivial_tight_cut_unchecked(g)


def _find_nontrivial_tight_cut_unchecked(
    g: MultiGraph, strategy: str = "first"
) -> Cut | None:
    found = None
    for cut in enumerate_cuts(g, 3, nontrivial_only=True):
        if cut.size == 3 and _is_tight_unchecked(g, cut):
            if strategy == "first":
                return cut
            found = cut
    return found


def decompose(g: MultiGraph, tight_cut_strategy: str = "first") -> Decomposition:
    """Brick and brace decomposition by repeated tight-cut splits.

    Each split contracts one side of a nontrivial tight cut; recursion
    stops at pieces without nontrivial tight cuts, classified as braces
    when bipartite and bricks otherwise. The strategy ("first" or "last"
    in cut enumeration order) only affects intermediate splits: the final
    multiset of pieces is unique up to edge multiplicities.
    """
    if tight_cut_strategy not in ("first", "last"):
        raise ValueError("tight_cut_strategy must be 'first' or 'last'")
    _require_cubic_bridgeless_covered(g, "decompose")
    pieces: list[tuple[MultiGraph, str]] = []
    trace: list[Cut] = []
    stack = [g]
    while stack:
        h = stack.pop()
        cut = _find_nontrivial_tight_cut_unchecked(h, tight_cut_strategy)
        if cut is None:
            pieces.append((h, BRACE if h.is_bipartite() else BRICK))
            continue
        trace.append(cut)
        g_over_a, _ = contract(h, [cut.side_a])
        g_over_b, _ = contract(h, [cut.side_b])
        stack.append(g_over_a)
        stack.append(g_over_b)
    return Decomposition(tuple(pieces), tuple(trace))


def is_bicritical(g: MultiGraph) -> bool:
    """True when removing any two vertices leaves a perfectly matchable graph."""
    if g.vertex_count % 2:
        raise ValueError("is_bicritical requires an even number of vertices")
    for u, v in combinations(range(g.vertex_count), 2):
        sub, _, _ = delete_vertices(g, (u, v))
        if not _has_pm(sub):
            return False
    return True


def is_brick(g: MultiGraph) -> bool:
    """Edmonds et al.: a brick is exactly a 3-vertex-connected bicritical graph."""
    if g.vertex_count < 4 or g.vertex_count % 2:
        return False
    if vertex_connectivity_at_most(g, 2):
        return False
    return is_bicritical(g)


def polytope_dimension(g: MultiGraph) -> int:
    """Dimension |E| - |V| + 1 - b(G) of the perfect matching polytope."""
    b = decompose(g).brick_count
    return len(g.edges) - g.vertex_count + 1 - b


def _exact_rank(rows: list[list[Fraction]]) -> int:
    if not rows:
        return 0
    cols = len(rows[0])
    mat = [row[:] for row in rows]
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                factor = mat[r][col] / inv
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def pm_affine_dimension(g: MultiGraph) -> int:
    """Affine dimension of the perfect matching characteristic vectors,
    by exact rational rank of difference vectors. Independent of the
    decomposition-based dimension formula."""
    pms = list(enumerate_perfect_matchings(g))
    if not pms:
        raise ValueError("pm_affine_dimension requires at least one perfect matching")
    m = len(g.edges)
    base = [Fraction(1 if e in set(pms[0]) else 0) for e in range(m)]
    rows = []
    for pm in pms[1:]:
        s = set(pm)
        rows.append([Fraction(1 if e in s else 0) - base[e] for e in range(m)])
    return _exact_rank(rows)


def polytope_membership(
    g: MultiGraph, w: Sequence[Fraction | int]
) -> tuple[bool, tuple | None]:
    """Edmonds' conditions for membership in the perfect matching polytope.

    Checks non-negativity, unit vertex sums, and (for non-bipartite graphs)
    every odd-set cut sum at least one, by exhaustive odd-set enumeration.
    Returns (ok, witness); witnesses are ("negative_entry", e),
    ("vertex_sum", v, sum) or ("odd_set", S, sum).
    """
    m = len(g.edges)
    if len(w) != m:
        raise ValueError(f"vector length {len(w)} != edge count {m}")
    vec = [Fraction(x) for x in w]
    for e, x in enumerate(vec):
        if x < 0:
            return False, ("negative_entry", e)
    for v in range(g.vertex_count):
        s = sum(vec[i] for i, _ in g.incidence[v])
        if s != 1:
            return False, ("vertex_sum", v, s)
    if g.is_bipartite():
        # conditions (i) and (ii) suffice on bipartite graphs
        return True, None
    n = g.vertex_count
    if n > ODD_SET_LIMIT:
        raise ValueError(f"odd-set enumeration capped at {ODD_SET_LIMIT} vertices")
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    # every odd set and its complement cut the same edges; fixing vertex 0
    # in S covers each bipartition once, and n even keeps both sides odd
    for bits in range(1 << (n - 1)):
        mask = (bits << 1) | 1
        size = mask.bit_count()
        if size % 2 == 0 or size == n:
            continue
        s = Fraction(0)
        for i, em in enumerate(edge_masks):
            hit = em & mask
            if hit and hit != em:
                s += vec[i]
        if s < 1:
            return False, ("odd_set", frozenset(_bits(mask)), s)
    return True, None


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1
