"""Domination checks, component stitching, and subtree covering families.

The two constructive routines here carry proof obligations: `connect` may
add at most a fixed number of interior vertices per merge, and
`covering_family` must hit all four of its advertised bounds.  Both raise
ContractViolation instead of returning a structure that breaks its
guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .graphs import Graph, bfs_layers, iter_bits, mask_of

Rational = Union[int, Fraction]


class ContractViolation(RuntimeError):
    """A structural guarantee failed at runtime."""


def dominates(
    g: Graph, dset: Iterable[int], r: int, targets: Optional[Iterable[int]] = None
) -> bool:
    """Whether every target lies within distance r of the set."""
    want = (1 << g.n) - 1 if targets is None else mask_of(targets)
    if want >> g.n:
        raise ValueError("target vertex out of range")
    balls = g.balls(r)
    got = 0
    for v in dset:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        got |= balls[v]
    return want & ~got == 0


def greedy_rdom(
    g: Graph, r: int, targets: Optional[Iterable[int]] = None
) -> Tuple[int, ...]:
    """Max-coverage greedy r-dominating set; ties go to the smallest id."""
    want = (1 << g.n) - 1 if targets is None else mask_of(targets)
    balls = g.balls(r)
    chosen: List[int] = []
    while want:
        best_v, best_gain = -1, 0
        for v in range(g.n):
            gain = (balls[v] & want).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        want &= ~balls[best_v]
    return tuple(chosen)


@dataclass(frozen=True)
class ConnectResult:
    connected: Tuple[int, ...]
    added: Tuple[int, ...]
    merge_paths: Tuple[Tuple[int, ...], ...]


def _induced_components(g: Graph, m: int) -> List[int]:
    masks = g.neighbor_masks()
    comps = []
    remaining = m
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= masks[u] & m
            grown &= ~comp
            comp |= grown
            frontier = grown
        comps.append(comp)
        remaining &= ~comp
    return comps


def connect(g: Graph, seeds: Iterable[int], stretch: int) -> ConnectResult:
    """Stitch the components induced by `seeds` into one, greedily.

    Each round merges a globally closest pair of components along a
    shortest path of the host graph; ties prefer smaller endpoint ids.  A
    merge needing more than `stretch` interior vertices, or a total beyond
    stretch * (components - 1), violates the contract this routine is used
    under and raises.
    """
    seed_tuple = tuple(sorted(set(seeds)))
    if not seed_tuple:
        raise ValueError("cannot connect an empty set")
    for v in seed_tuple:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    current = mask_of(seed_tuple)
    p0 = len(_induced_components(g, current))
    added: List[int] = []
    paths: List[Tuple[int, ...]] = []
    while True:
        comps = _induced_components(g, current)
        if len(comps) <= 1:
            break
        comp_of = {}
        for i, c in enumerate(comps):
            for v in iter_bits(c):
                comp_of[v] = i
        best: Optional[Tuple[int, int, int]] = None
        for u in iter_bits(current):
            row = g.dist_row(u)
            for v in iter_bits(current):
                if comp_of[u] >= comp_of[v]:
                    continue
                d = row[v]
                if d < 0:
                    continue
                key = (d, u, v)
                if best is None or key < best:
                    best = key
        if best is None:
            raise ContractViolation("seed components lie in different graph parts")
        d, u, v = best
        if d - 1 > stretch:
            raise ContractViolation(
                f"merge from {u} to {v} needs {d - 1} interior vertices, "
                f"allowed {stretch}"
            )
        path = bfs_layers(g, [u]).path_to(v)
        interior = path[1:-1]
        for w in interior:
            if not (current >> w) & 1:
                added.append(w)
        current |= mask_of(interior)
        paths.append(tuple(path))
    if len(added) > stretch * (p0 - 1):
        raise ContractViolation(
            f"added {len(added)} vertices, allowed {stretch * (p0 - 1)}"
        )
    return ConnectResult(tuple(iter_bits(current)), tuple(added), tuple(paths))


# ---------------------------------------------------------------------------
# covering families


@dataclass(frozen=True)
class SubtreePiece:
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CoveringFamily:
    t: Fraction
    pieces: Tuple[SubtreePiece, ...]

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.pieces)


class _Residue:
    __slots__ = ("root", "vertices", "edges")

    def __init__(self, root: int):
        self.root = root
        self.vertices: List[int] = [root]
        self.edges: List[Tuple[int, int]] = []

    def absorb(self, parent: int, items: Sequence["_Residue"]) -> None:
        for it in items:
            self.vertices.extend(it.vertices)
            self.edges.extend(it.edges)
            self.edges.append((min(parent, it.root), max(parent, it.root)))


def _coerce_t(t: Rational) -> Fraction:
    if isinstance(t, float):
        raise TypeError("t must be an int or Fraction, not float")
    return Fraction(t)


def _piece_from(parent: int, items: Sequence[_Residue]) -> SubtreePiece:
    vs: List[int] = [parent]
    es: List[Tuple[int, int]] = []
    for it in items:
        vs.extend(it.vertices)
        es.extend(it.edges)
        es.append((min(parent, it.root), max(parent, it.root)))
    return SubtreePiece(tuple(sorted(vs)), tuple(sorted(es)))


def covering_family(g: Graph, t: Rational) -> CoveringFamily:
    """Cover a connected graph by subtrees of a spanning tree.

    Guarantees, checked on every call: each piece has at most floor(2t)
    vertices, the pieces jointly cover the graph, there are at most
    n/t + 1 of them, and their sizes sum to at most (1 + 1/t) n + 1.
    Fails cleanly when t makes those bounds unattainable; values of t
    that are at most 1, integral, or have fractional part at least one
    half are always fine.
    """
    tf = _coerce_t(t)
    if tf < Fraction(1, 2):
        raise ValueError("t must be at least 1/2")
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    if not g.is_connected():
        raise ValueError("covering families need a connected graph")
    cap = (2 * tf).numerator // (2 * tf).denominator
    pieces: List[SubtreePiece] = []

    if tf <= 1:
        pieces = [SubtreePiece((v,), ()) for v in range(g.n)]
        return _checked_family(g, tf, cap, pieces)

    need = math.ceil(tf)  # minimum consumption per non-final piece
    k_res = cap - 1

    res = bfs_layers(g, [0])
    children: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for v, p in res.parent.items():
        if p is not None:
            children[p].append(v)
    order = sorted(range(g.n), key=lambda v: (-res.dist[v], v))

    residue: Dict[int, _Residue] = {}
    for v in order:
        items = sorted(
            (residue.pop(c) for c in children[v]),
            key=lambda it: (-len(it.vertices), it.root),
        )
        mine = _Residue(v)
        load = 1 + sum(len(it.vertices) for it in items)
        if load <= k_res:
            mine.absorb(v, items)
            residue[v] = mine
            continue
        bundle: List[_Residue] = []
        bl = 0
        for it in items:
            size = len(it.vertices)
            if bundle and 1 + bl + size > cap:
                pieces.append(_piece_from(v, bundle))
                bundle, bl = [], 0
            bundle.append(it)
            bl += size
            if bl >= need:
                pieces.append(_piece_from(v, bundle))
                bundle, bl = [], 0
        if bundle:
            if 1 + bl <= k_res:
                mine.absorb(v, bundle)
            else:
                pieces.append(_piece_from(v, bundle))
        residue[v] = mine
    final = residue.pop(0)
    pieces.append(
        SubtreePiece(tuple(sorted(final.vertices)), tuple(sorted(final.edges)))
    )
    return _checked_family(g, tf, cap, pieces)


def _checked_family(
    g: Graph, tf: Fraction, cap: int, pieces: List[SubtreePiece]
) -> CoveringFamily:
    fam = CoveringFamily(tf, tuple(pieces))
    problem = check_covering_family(g, fam)
    if problem is not None:
        raise ContractViolation(problem)
    return fam


def check_covering_family(g: Graph, fam: CoveringFamily) -> Optional[str]:
    """None when the family meets its contract, else a description."""
    cap = (2 * fam.t).numerator // (2 * fam.t).denominator
    covered = 0
    edge_set = set(g.edges())
    for i, piece in enumerate(fam.pieces):
        vs = set(piece.vertices)
        if not vs:
            return f"piece {i} is empty"
        if len(piece.vertices) > cap:
            return f"piece {i} has {len(piece.vertices)} vertices, cap {cap}"
        if len(piece.edges) != len(vs) - 1:
            return f"piece {i} is not a tree"
        adj: Dict[int, List[int]] = {v: [] for v in vs}
        for u, v in piece.edges:
            if (min(u, v), max(u, v)) not in edge_set:
                return f"piece {i} uses a non-edge {(u, v)}"
            if u not in vs or v not in vs:
                return f"piece {i} has a dangling edge {(u, v)}"
            adj[u].append(v)
            adj[v].append(u)
        seen = {piece.vertices[0]}
        stack = [piece.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != vs:
            return f"piece {i} is disconnected"
        covered |= mask_of(vs)
    if covered != (1 << g.n) - 1:
        return "pieces do not cover the graph"
    if Fraction(len(fam.pieces)) > Fraction(g.n) / fam.t + 1:
        return (
            f"{len(fam.pieces)} pieces exceed the count bound "
            f"{float(Fraction(g.n) / fam.t + 1):.3f}"
        )
    if Fraction(fam.total_size) > (1 + 1 / fam.t) * g.n + 1:
        return (
            f"total size {fam.total_size} exceeds the bound "
            f"{float((1 + 1 / fam.t) * g.n + 1):.3f}"
        )
    return None
