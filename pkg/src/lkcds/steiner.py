"""Exact group Steiner trees by dynamic programming over group subsets.

Costs count tree vertices, not edges: a tree on one shared vertex scores 1.
The classic subset DP runs over masks of groups with unit edge weights, so
the vertex count is the edge optimum plus one.  Group count is capped
because the table grows as 2^groups.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .graphs import Graph, mask_of

FOUND = "found"
EXCEEDS_CAP = "exceeds-cap"
INFEASIBLE = "infeasible"

_INF = float("inf")


class SteinerQuery:
    """Validated group system plus an optional vertex-count cap."""

    __slots__ = ("groups", "size_cap", "group_limit")

    def __init__(
        self,
        groups: Sequence[Iterable[int]],
        size_cap: Optional[int] = None,
        group_limit: int = 8,
    ):
        norm = tuple(tuple(sorted(set(grp))) for grp in groups)
        if not norm:
            raise ValueError("at least one group is required")
        if len(norm) > group_limit:
            raise ValueError(f"{len(norm)} groups exceed the limit {group_limit}")
        seen: set = set()
        for grp in norm:
            if not grp:
                raise ValueError("groups must be nonempty")
            for v in grp:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two groups")
                seen.add(v)
        if size_cap is not None and size_cap < 1:
            raise ValueError("size cap must be at least 1")
        self.groups = norm
        self.size_cap = size_cap
        self.group_limit = group_limit


@dataclass(frozen=True)
class SteinerTree:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SteinerResult:
    status: str
    tree: Optional[SteinerTree] = None

    @property
    def value(self) -> Optional[int]:
        return None if self.tree is None else self.tree.size


def _check_tree(g: Graph, tree: SteinerTree, query: SteinerQuery) -> None:
    vs = set(tree.vertices)
    assert len(tree.edges) == len(vs) - 1, "reconstructed subgraph is not a tree"
    edge_set = set(g.edges())
    adj: Dict[int, List[int]] = {v: [] for v in vs}
    for u, v in tree.edges:
        assert (u, v) in edge_set, f"edge {(u, v)} not in host graph"
        adj[u].append(v)
        adj[v].append(u)
    seen = {tree.vertices[0]}
    stack = [tree.vertices[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    assert seen == vs, "reconstructed tree is disconnected"
    for grp in query.groups:
        assert vs.intersection(grp), f"tree misses group {grp}"


def steiner_exact(g: Graph, query: SteinerQuery) -> SteinerResult:
    """Minimum-vertex tree meeting every group, with full reconstruction.

    Runs the subset DP: dp[mask][v] is the fewest edges of a tree that
    contains v and meets all groups in mask, built by pairwise merges at v
    and unit-weight Dijkstra growth.  All tie-breaking is deterministic.
    """
    for grp in query.groups:
        for v in grp:
            if not 0 <= v < g.n:
                raise ValueError(f"group vertex {v} out of range")
    gc = len(query.groups)
    full = (1 << gc) - 1
    cap_edges = None if query.size_cap is None else query.size_cap - 1
    dp: List[List[float]] = [[_INF] * g.n for _ in range(full + 1)]
    back: Dict[Tuple[int, int], Tuple] = {}
    for i, grp in enumerate(query.groups):
        for x in grp:
            dp[1 << i][x] = 0
            back[(1 << i, x)] = ("seed",)
    for mask in range(1, full + 1):
        row = dp[mask]
        if mask & (mask - 1):
            sub = (mask - 1) & mask
            while sub:
                other = mask ^ sub
                a, b = dp[sub], dp[other]
                for v in range(g.n):
                    cand = a[v] + b[v]
                    if cand < row[v] and (cap_edges is None or cand <= cap_edges):
                        row[v] = cand
                        back[(mask, v)] = ("merge", sub)
                sub = (sub - 1) & mask
        heap = [(d, v) for v, d in enumerate(row) if d < _INF]
        heapq.heapify(heap)
        while heap:
            d, v = heapq.heappop(heap)
            if d > row[v]:
                continue
            nd = d + 1
            if cap_edges is not None and nd > cap_edges:
                continue
            for w in g.adj[v]:
                if nd < row[w]:
                    row[w] = nd
                    back[(mask, w)] = ("grow", v)
                    heapq.heappush(heap, (nd, w))
    best_v = None
    for v in range(g.n):
        if dp[full][v] < _INF and (best_v is None or dp[full][v] < dp[full][best_v]):
            best_v = v
    if best_v is None:
        group_masks = [mask_of(grp) for grp in query.groups]
        feasible = any(
            all(c & gm for gm in group_masks) for c in g.component_masks()
        )
        return SteinerResult(EXCEEDS_CAP if feasible else INFEASIBLE)

    vertices: set = set()
    edges: set = set()

    def collect(mask: int, v: int) -> None:
        vertices.add(v)
        op = back[(mask, v)]
        if op[0] == "seed":
            return
        if op[0] == "grow":
            u = op[1]
            edges.add((min(u, v), max(u, v)))
            collect(mask, u)
            return
        collect(op[1], v)
        collect(mask ^ op[1], v)

    collect(full, best_v)
    tree = SteinerTree(tuple(sorted(vertices)), tuple(sorted(edges)))
    assert tree.size == dp[full][best_v] + 1, "value and reconstruction disagree"
    _check_tree(g, tree, query)
    return SteinerResult(FOUND, tree)


def steiner_size(g: Graph, groups: Sequence[Iterable[int]]) -> float:
    """Vertex count of an optimum tree, or inf when no tree exists."""
    res = steiner_exact(g, SteinerQuery(groups))
    return _INF if res.tree is None else res.tree.size
