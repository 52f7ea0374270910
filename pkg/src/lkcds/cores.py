"""Domination cores: target sets that stand in for the whole graph.

A core Z for budget k and radius r has the property that any set of at
most k vertices r-dominating Z automatically r-dominates the graph.  The
trivial core is the vertex set itself; the heuristic mode shrinks it by a
containment rule that is sound for every budget; the exhaustive mode also
runs a per-vertex cover search and certifies the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple, Union

from .domination import ContractViolation, connect
from .graphs import Graph, bfs_layers, mask_of
from .oracles import FOUND, cover_exists, exact_ds


@dataclass(frozen=True)
class Rejection:
    """Certified negative answer for the whole instance."""

    reason: str


@dataclass(frozen=True)
class DominationCore:
    vertices: Tuple[int, ...]
    k: int
    r: int
    certified: str  # exhaustive | heuristic-sound | trivial
    connected: bool = False


CoreOutcome = Union[DominationCore, Rejection]


def _containment_prune(g: Graph, r: int, zset: Set[int]) -> Set[int]:
    # drop z when some remaining z' has ball(z') inside ball(z): covering z'
    # then forces covering z, for any budget
    balls = g.balls(r)
    z = set(zset)
    changed = True
    while changed:
        changed = False
        for v in sorted(z, reverse=True):
            bv = balls[v]
            if any(balls[w] & ~bv == 0 for w in z if w != v):
                z.remove(v)
                changed = True
    return z


def find_core(g: Graph, k: int, r: int, mode: str = "exact") -> CoreOutcome:
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    everything = set(range(g.n))
    if mode == "trivial":
        return DominationCore(tuple(range(g.n)), k, r, "trivial")
    if mode == "heuristic":
        z = _containment_prune(g, r, everything)
        return DominationCore(tuple(sorted(z)), k, r, "heuristic-sound")
    if mode != "exact":
        raise ValueError(f"unknown core mode {mode!r}")

    base = exact_ds(g, r, k)
    if base.status != FOUND:
        return Rejection(f"graph cannot be {r}-dominated by at most {k} vertices")
    balls = g.balls(r)
    z = _containment_prune(g, r, everything)
    changed = True
    while changed:
        changed = False
        for v in sorted(z, reverse=True):
            rest = mask_of(z - {v})
            outside = [u for u in range(g.n) if not (balls[v] >> u) & 1]
            if not cover_exists(balls, rest, k, outside):
                # every budget-k cover of the rest must enter v's ball
                z.remove(v)
                changed = True
    core = DominationCore(tuple(sorted(z)), k, r, "exhaustive")
    if not core_verify(g, core.vertices, k, r):
        raise ContractViolation("core extraction produced a non-core")
    return core


def core_verify(g: Graph, z: Iterable[int], k: int, r: int) -> bool:
    """Exhaustively confirm the core property.

    Fails exactly when some budget-k set covers Z while leaving a vertex u
    uncovered, which a cover search restricted outside u's ball detects.
    """
    zmask = mask_of(z)
    if zmask >> g.n:
        raise ValueError("core vertex out of range")
    balls = g.balls(r)
    for u in range(g.n):
        outside = [v for v in range(g.n) if not (balls[u] >> v) & 1]
        if cover_exists(balls, zmask, k, outside):
            return False
    return True


def connected_core(g: Graph, core: DominationCore) -> CoreOutcome:
    """Stitch a core into one piece, or certify a rejection.

    A vertex farther than 2r from the core contradicts the core property
    for any budget-k dominating set, so the instance is rejected outright.
    Otherwise shortest-path merges need at most 2r interior vertices each.
    """
    if not core.vertices:
        return Rejection(
            f"graph cannot be {core.r}-dominated by at most {core.k} vertices"
        )
    res = bfs_layers(g, core.vertices)
    for v in range(g.n):
        if v not in res.dist or res.dist[v] > 2 * core.r:
            return Rejection(
                f"graph cannot be {core.r}-dominated by at most {core.k} "
                f"vertices: vertex {v} is farther than {2 * core.r} from the core"
            )
    stitched = connect(g, core.vertices, 2 * core.r)
    return DominationCore(
        stitched.connected, core.k, core.r, core.certified, connected=True
    )
