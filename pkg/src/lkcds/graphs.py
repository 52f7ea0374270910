"""Graph primitives shared by the kernelization pipeline.

Vertices are always 0..n-1.  Adjacency is stored as sorted tuples, and each
graph keeps lazy bitmask caches (neighborhoods, closed balls, distance rows)
because nearly everything downstream manipulates vertex subsets as integers.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple


class GraphFormatError(ValueError):
    """Raised when a graph text payload cannot be parsed."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("adj", "n", "m", "_masks", "_balls", "_dist")

    def __init__(self, adj: Sequence[Iterable[int]]):
        rows = []
        for v, ns in enumerate(adj):
            row = tuple(sorted(set(ns)))
            for u in row:
                if not 0 <= u < len(adj):
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
            rows.append(row)
        self.adj = tuple(rows)
        self.n = len(rows)
        self.m = sum(len(r) for r in rows) // 2
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency {v}->{u}")
        self._masks: Optional[Tuple[int, ...]] = None
        self._balls: Dict[int, Tuple[int, ...]] = {}
        self._dist: Dict[int, Tuple[int, ...]] = {}

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically ascending."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def neighbor_masks(self) -> Tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(mask_of(row) for row in self.adj)
        return self._masks

    def balls(self, r: int) -> Tuple[int, ...]:
        """Closed r-ball of every vertex, as bitmasks."""
        if r < 0:
            raise ValueError("radius must be nonnegative")
        out = self._balls.get(r)
        if out is None:
            if r == 0:
                out = tuple(1 << v for v in range(self.n))
            else:
                prev = self.balls(r - 1)
                masks = self.neighbor_masks()
                grown = []
                for v in range(self.n):
                    b = prev[v]
                    for u in iter_bits(prev[v]):
                        b |= masks[u]
                    grown.append(b)
                out = tuple(grown)
            self._balls[r] = out
        return out

    def dist_row(self, v: int) -> Tuple[int, ...]:
        """BFS distances from v; unreachable vertices get -1."""
        row = self._dist.get(v)
        if row is None:
            masks = self.neighbor_masks()
            dist = [-1] * self.n
            dist[v] = 0
            seen = 1 << v
            frontier = 1 << v
            d = 0
            while frontier:
                grown = 0
                for u in iter_bits(frontier):
                    grown |= masks[u]
                grown &= ~seen
                d += 1
                for u in iter_bits(grown):
                    dist[u] = d
                seen |= grown
                frontier = grown
            row = tuple(dist)
            self._dist[v] = row
        return row

    def dist(self, u: int, v: int) -> Optional[int]:
        d = self.dist_row(u)[v]
        return None if d < 0 else d

    def component_masks(self) -> Tuple[int, ...]:
        """Connected components as bitmasks, ordered by smallest member."""
        masks = self.neighbor_masks()
        remaining = (1 << self.n) - 1
        comps = []
        while remaining:
            start = remaining & -remaining
            comp = start
            frontier = start
            while frontier:
                grown = 0
                for u in iter_bits(frontier):
                    grown |= masks[u]
                grown &= ~comp
                comp |= grown
                frontier = grown
            comps.append(comp)
            remaining &= ~comp
        return tuple(comps)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class BFSResult:
    """Layered BFS record: sparse distance and parent maps."""

    __slots__ = ("dist", "parent")

    def __init__(self, dist: Dict[int, int], parent: Dict[int, Optional[int]]):
        self.dist = dist
        self.parent = parent

    def path_to(self, v: int) -> List[int]:
        """Vertex sequence from a source to v, inclusive."""
        if v not in self.dist:
            raise KeyError(f"vertex {v} was not reached")
        path = [v]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        path.reverse()
        return path


def bfs_layers(
    g: Graph,
    sources: Iterable[int],
    depth_cap: Optional[int] = None,
    forbidden: Iterable[int] = (),
) -> BFSResult:
    """Multi-source BFS that refuses to expand through forbidden vertices.

    Forbidden vertices may still be reached (they get a distance and parent)
    and a forbidden source still expands at depth 0.  This is exactly the
    reachability notion for paths whose interior avoids a blocker set while
    either endpoint may belong to it.
    """
    srcs = sorted(set(sources))
    if not srcs:
        raise ValueError("bfs_layers needs at least one source")
    for s in srcs:
        if not 0 <= s < g.n:
            raise ValueError(f"source {s} out of range")
    blocked = set(forbidden)
    dist: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    queue: deque = deque()
    for s in srcs:
        dist[s] = 0
        parent[s] = None
        queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if depth_cap is not None and d >= depth_cap:
            continue
        if u in blocked and d > 0:
            continue
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = d + 1
                parent[w] = u
                queue.append(w)
    return BFSResult(dist, parent)


def mask_connected(g: Graph, m: int) -> bool:
    """Whether the vertices of a bitmask induce a connected subgraph."""
    if m == 0:
        return False
    masks = g.neighbor_masks()
    comp = m & -m
    frontier = comp
    while frontier:
        grown = 0
        for u in iter_bits(frontier):
            grown |= masks[u] & m
        grown &= ~comp
        comp |= grown
        frontier = grown
    return comp == m


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """Induced subgraph plus the parent id of each new vertex."""
    parents = tuple(sorted(set(vertices)))
    for v in parents:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(parents)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph.from_edges(len(parents), edges), parents


def graph_on_vertices(
    vertices: Iterable[int], edges: Iterable[Tuple[int, int]]
) -> Tuple[Graph, Tuple[int, ...]]:
    """Relabel an explicit vertex and edge set to a compact graph.

    Edge endpoints must appear in the vertex set; new ids follow the sorted
    order of the old ones.
    """
    parents = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(parents)}
    relabeled = []
    for u, v in set((min(e), max(e)) for e in edges):
        if u not in index or v not in index:
            raise ValueError(f"edge ({u},{v}) leaves the vertex set")
        relabeled.append((index[u], index[v]))
    relabeled.sort()
    return Graph.from_edges(len(parents), relabeled), parents


def r_subdivision(
    g: Graph, r: int
) -> Tuple[Graph, Dict[Tuple[int, int], Tuple[int, ...]]]:
    """Replace every edge by a path with r-1 fresh interior vertices.

    Original ids are preserved; interior ids are allocated edge by edge in
    lexicographic edge order, running from the smaller endpoint towards the
    larger.  Returns the new graph and the interior vertices of each edge.
    """
    if r < 1:
        raise ValueError("subdivision order must be at least 1")
    edges = list(g.edges())
    internals: Dict[Tuple[int, int], Tuple[int, ...]] = {}
    new_edges: List[Tuple[int, int]] = []
    nxt = g.n
    for u, v in edges:
        chain = tuple(range(nxt, nxt + r - 1))
        nxt += r - 1
        internals[(u, v)] = chain
        walk = [u, *chain, v]
        for a, b in zip(walk, walk[1:]):
            new_edges.append((a, b))
    return Graph.from_edges(nxt, new_edges), internals


def lex_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product; vertex (x, y) becomes x * h.n + y."""
    if h.n == 0:
        raise ValueError("second factor must be nonempty")
    edges: List[Tuple[int, int]] = []
    for x, xp in g.edges():
        for y in range(h.n):
            for yp in range(h.n):
                edges.append((x * h.n + y, xp * h.n + yp))
    for x in range(g.n):
        for y, yp in h.edges():
            edges.append((x * h.n + y, x * h.n + yp))
    return Graph.from_edges(g.n * h.n, edges)


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: bad {what} {token!r}") from None


def sniff_format(text: str) -> str:
    """Guess the serialization from the first meaningful line.

    DIMACS files mark comments with 'c' and carry a descriptor token in
    the problem line, so their headers have four tokens; edgelist headers
    have three and comments start with '#'.
    """
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            return "edgelist"
        tokens = line.split()
        if tokens[0] == "c":
            return "dimacs"
        if tokens[0] == "p":
            return "dimacs" if len(tokens) == 4 else "edgelist"
        return "edgelist"
    return "edgelist"


def parse_graph(text: str, fmt: Optional[str] = "edgelist") -> Graph:
    if fmt is None:
        fmt = sniff_format(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    saw_line = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not saw_line and tokens[0] == "p":
            if len(tokens) != 3:
                raise GraphFormatError(f"line {lineno}: header needs 'p <n> <m>'")
            header = (
                _parse_int(tokens[1], "vertex count", lineno),
                _parse_int(tokens[2], "edge count", lineno),
            )
            saw_line = True
            continue
        saw_line = True
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        u = _parse_int(tokens[0], "endpoint", lineno)
        v = _parse_int(tokens[1], "endpoint", lineno)
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    if header is None:
        n = 1 + max((max(u, v) for u, v in edges), default=-1)
    else:
        n, m = header
        if len(edges) != m:
            raise GraphFormatError(
                f"header announces {m} edges but {len(edges)} were given"
            )
        for u, v in edges:
            if u >= n or v >= n:
                raise GraphFormatError(f"edge ({u},{v}) exceeds n={n}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _parse_dimacs(text: str) -> Graph:
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: duplicate header")
            if len(tokens) != 4:
                raise GraphFormatError(
                    f"line {lineno}: header needs 'p <desc> <n> <m>'"
                )
            header = (
                _parse_int(tokens[2], "vertex count", lineno),
                _parse_int(tokens[3], "edge count", lineno),
            )
            continue
        if header is None:
            raise GraphFormatError(f"line {lineno}: edge before header")
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two endpoints")
        u = _parse_int(tokens[0], "endpoint", lineno)
        v = _parse_int(tokens[1], "endpoint", lineno)
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex outside 1..{n}")
        edges.append((u - 1, v - 1))
    if header is None:
        raise GraphFormatError("missing 'p' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header announces {header[1]} edges but {len(edges)} were given"
        )
    try:
        return Graph.from_edges(header[0], edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        lines = [f"p {g.n} {g.m}"]
        lines.extend(f"{u} {v}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    if fmt == "dimacs":
        lines = [f"p gr {g.n} {g.m}"]
        lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
        return "\n".join(lines) + "\n"
    raise GraphFormatError(f"unknown graph format {fmt!r}")
