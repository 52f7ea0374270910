"""Vertex orders, weak reachability sets, and weak coloring numbers.

A vertex u weakly s-reaches v when some path of length at most s joins
them and u is the leftmost path vertex in the order.  The flood below runs
from each u through strictly later vertices, which enumerates exactly those
paths.  Orders are kept as explicit sequences so reports stay reproducible.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .domination import ContractViolation
from .graphs import Graph, lex_product


class OrderedGraph:
    """A graph together with a left-to-right vertex order."""

    __slots__ = ("graph", "seq", "pos", "_wreach")

    def __init__(self, graph: Graph, seq: Sequence[int]):
        order = tuple(seq)
        if sorted(order) != list(range(graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        self.graph = graph
        self.seq = order
        pos = [0] * graph.n
        for i, v in enumerate(order):
            pos[v] = i
        self.pos = tuple(pos)
        self._wreach: Dict[int, Tuple[Tuple[int, ...], ...]] = {}

    def wreach(self, s: int) -> Tuple[Tuple[int, ...], ...]:
        """Weak s-reachability set of every vertex, ascending ids."""
        if s < 0:
            raise ValueError("radius must be nonnegative")
        got = self._wreach.get(s)
        if got is None:
            got = _wreach_sets(self.graph, self.pos, s)
            self._wreach[s] = got
        return got

    def wcol(self, s: int) -> int:
        return max((len(w) for w in self.wreach(s)), default=0)


def _wreach_sets(
    g: Graph, pos: Sequence[int], s: int
) -> Tuple[Tuple[int, ...], ...]:
    sets: List[List[int]] = [[] for _ in range(g.n)]
    for u in range(g.n):
        dist = {u: 0}
        queue: deque = deque([u])
        while queue:
            w = queue.popleft()
            d = dist[w]
            if d == s:
                continue
            for x in g.adj[w]:
                if x not in dist and pos[x] > pos[u]:
                    dist[x] = d + 1
                    queue.append(x)
        for v in dist:
            sets[v].append(u)
    return tuple(tuple(sorted(se)) for se in sets)


@dataclass(frozen=True)
class WReachReport:
    s: int
    value: int
    witness: int
    sizes: Tuple[int, ...]


def wreach_report(og: OrderedGraph, s: int) -> WReachReport:
    sets = og.wreach(s)
    sizes = tuple(len(w) for w in sets)
    if not sizes:
        return WReachReport(s, 0, -1, ())
    value = max(sizes)
    witness = sizes.index(value)
    return WReachReport(s, value, witness, sizes)


def heuristic_order(
    g: Graph, kind: str = "degeneracy", seed: Optional[int] = None
) -> OrderedGraph:
    """Cheap wcol-friendly orders.

    degeneracy: reverse of min-degree removal, so core vertices come first.
    bfs: breadth-first discovery from vertex 0.
    random: seeded shuffle, for baselines.
    """
    if kind == "degeneracy":
        deg = [g.degree(v) for v in range(g.n)]
        alive = set(range(g.n))
        removal: List[int] = []
        for _ in range(g.n):
            v = min(alive, key=lambda w: (deg[w], w))
            removal.append(v)
            alive.remove(v)
            for w in g.adj[v]:
                if w in alive:
                    deg[w] -= 1
        return OrderedGraph(g, tuple(reversed(removal)))
    if kind == "bfs":
        seen: set = set()
        seq: List[int] = []
        for start in range(g.n):
            if start in seen:
                continue
            seen.add(start)
            queue: deque = deque([start])
            while queue:
                v = queue.popleft()
                seq.append(v)
                for w in g.adj[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return OrderedGraph(g, seq)
    if kind == "random":
        rng = random.Random(seed)
        seq = list(range(g.n))
        rng.shuffle(seq)
        return OrderedGraph(g, seq)
    raise ValueError(f"unknown order heuristic {kind!r}")


_EXACT_LIMIT = 8


def exact_wcol(g: Graph, s: int) -> Tuple[int, Tuple[int, ...]]:
    """Optimum weak s-coloring number by scanning all orders; tiny graphs only."""
    if g.n > _EXACT_LIMIT:
        raise ValueError(f"exact search is limited to {_EXACT_LIMIT} vertices")
    best_value: Optional[int] = None
    best_order: Tuple[int, ...] = tuple(range(g.n))
    for perm in itertools.permutations(range(g.n)):
        pos = [0] * g.n
        for i, v in enumerate(perm):
            pos[v] = i
        value = max((len(w) for w in _wreach_sets(g, pos, s)), default=0)
        if best_value is None or value < best_value:
            best_value = value
            best_order = perm
    return (best_value if best_value is not None else 0, best_order)


def check_separation(
    og: OrderedGraph,
    blockers: Iterable[int],
    y: int,
    path: Sequence[int],
    r: int,
) -> int:
    """Certify that a short path from a blocker set to y is separated.

    Validates the path, locates its leftmost vertex z, and confirms z is
    weakly r-reachable from both endpoints, which is forced because z stays
    leftmost on each subpath.  Returns z.
    """
    p = list(path)
    xs = set(blockers)
    if len(p) < 2:
        raise ValueError("path needs at least two vertices")
    if len(set(p)) != len(p):
        raise ValueError("path repeats a vertex")
    if len(p) - 1 > r:
        raise ValueError(f"path has {len(p) - 1} edges, allowed {r}")
    if p[0] not in xs:
        raise ValueError("path must start inside the blocker set")
    if p[-1] != y:
        raise ValueError("path must end at y")
    for a, b in zip(p, p[1:]):
        if b not in og.graph.adj[a]:
            raise ValueError(f"{a} and {b} are not adjacent")
    z = min(p, key=lambda v: og.pos[v])
    sets = og.wreach(r)
    if z not in sets[p[0]]:
        raise ContractViolation(f"separator {z} not weakly reachable from {p[0]}")
    if z not in sets[y]:
        raise ContractViolation(f"separator {z} not weakly reachable from {y}")
    return z


def product_order(og: OrderedGraph, h: Graph) -> OrderedGraph:
    """Order the lexicographic product by base position, then fiber id.

    Under this order the product's weak s-coloring number is at most
    |V(h)| times the base value, whatever the base order was.
    """
    prod = lex_product(og.graph, h)
    seq: List[int] = []
    for x in og.seq:
        for y in range(h.n):
            seq.append(x * h.n + y)
    return OrderedGraph(prod, seq)
