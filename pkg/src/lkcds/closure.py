"""Profile-preserving closure of a graph around a blocker set.

The closure keeps the blocker set X, one exact Steiner tree for every
small bundle of profile classes that admits one, and the avoidance-BFS
paths that realize each kept tree vertex's projection distances.  Because
the result is a subgraph of the host, distances can only grow, and the
retained paths pin them back down to their original values; that is what
the verifier checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .graphs import Graph, bfs_layers, graph_on_vertices, iter_bits
from .projections import ProfileClassification, classify, profile
from .steiner import (
    FOUND,
    SteinerQuery,
    SteinerResult,
    SteinerTree,
    steiner_exact,
    steiner_size,
)

Rational = Union[int, Fraction]


def _coerce_t(t: Rational) -> Fraction:
    if isinstance(t, float):
        raise TypeError("t must be an int or Fraction, not float")
    return Fraction(t)


def avoiding_path_tree(
    g: Graph, u: int, blockers: Iterable[int], r: int
) -> Tuple[Set[int], Set[Tuple[int, int]]]:
    """Vertices and edges of BFS paths from u to its projection targets.

    Runs the depth-r avoidance flood from u and walks parents back from
    every reached blocker.  The union realizes all of u's profile
    distances; vertices off those paths are dropped.
    """
    xs = set(blockers)
    res = bfs_layers(g, [u], depth_cap=r, forbidden=xs)
    vs: Set[int] = {u}
    es: Set[Tuple[int, int]] = set()
    for x in xs:
        if x not in res.dist:
            continue
        path = res.path_to(x)
        vs.update(path)
        for a, b in zip(path, path[1:]):
            es.add((min(a, b), max(a, b)))
    return vs, es


@dataclass(eq=False)
class ClosureResult:
    graph: Graph
    vertex_map: Tuple[int, ...]  # closure id -> host id
    blockers_old: Tuple[int, ...]
    blockers_new: Tuple[int, ...]
    r: int
    t: Fraction
    cap: int
    groups: Tuple[Tuple[int, ...], ...]  # host ids; classes first, then blockers
    class_count: int
    kept: Dict[Tuple[int, ...], SteinerTree]
    terminals: Tuple[int, ...]  # host ids of protected free vertices
    stats: Dict[str, int] = field(default_factory=dict)

    def to_host(self, vertices: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_map[v] for v in vertices))


def _group_distances(g: Graph, groups: Sequence[Tuple[int, ...]]) -> List[List[Optional[int]]]:
    gn = len(groups)
    out: List[List[Optional[int]]] = [[None] * gn for _ in range(gn)]
    for i, grp in enumerate(groups):
        res = bfs_layers(g, grp)
        for j in range(gn):
            best: Optional[int] = None
            for v in groups[j]:
                d = res.dist.get(v)
                if d is not None and (best is None or d < best):
                    best = d
            out[i][j] = best
    return out


def _bounded_cliques(compat: List[int], cap: int) -> List[Tuple[int, ...]]:
    # all index sets of size <= cap whose pairs are compatible, ascending
    out: List[Tuple[int, ...]] = []

    def extend(chosen: List[int], cand: int) -> None:
        out.append(tuple(chosen))
        if len(chosen) == cap:
            return
        for j in iter_bits(cand):
            extend(chosen + [j], cand & compat[j] & ~((2 << j) - 1))

    for i in range(len(compat)):
        extend([i], compat[i] & ~((2 << i) - 1))
    return out


def build_closure(
    g: Graph, blockers: Iterable[int], r: int, t: Rational
) -> ClosureResult:
    tf = _coerce_t(t)
    cap = (2 * tf).numerator // (2 * tf).denominator
    if cap < 1:
        raise ValueError("t is too small for any tree to fit")
    xs = tuple(sorted(set(blockers)))
    xset = set(xs)
    for x in xs:
        if not 0 <= x < g.n:
            raise ValueError(f"blocker {x} out of range")
    cls = classify(g, xs, r)
    groups: List[Tuple[int, ...]] = [c.members for c in cls.classes]
    class_count = len(groups)
    groups.extend((x,) for x in xs)

    gdist = _group_distances(g, groups)
    compat = [0] * len(groups)
    pruned_pairs = 0
    for i in range(len(groups)):
        for j in range(i + 1, len(groups)):
            d = gdist[i][j]
            if d is not None and d <= cap - 1:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
            else:
                pruned_pairs += 1

    kept: Dict[Tuple[int, ...], SteinerTree] = {}
    dropped = 0
    cliques = _bounded_cliques(compat, cap)
    for key in cliques:
        res = steiner_exact(
            g, SteinerQuery([groups[i] for i in key], size_cap=cap)
        )
        if res.status == FOUND:
            assert res.tree is not None
            kept[key] = res.tree
        else:
            dropped += 1

    terminals = tuple(
        sorted(
            {v for tree in kept.values() for v in tree.vertices if v not in xset}
        )
    )

    vertices: Set[int] = set(xs)
    edges: Set[Tuple[int, int]] = set()
    for tree in kept.values():
        vertices.update(tree.vertices)
        edges.update(tree.edges)
    for u in terminals:
        vs, es = avoiding_path_tree(g, u, xset, r)
        vertices.update(vs)
        edges.update(es)
    for u, v in g.edges():
        if u in xset and v in xset:
            edges.add((u, v))
    gprime, vmap = graph_on_vertices(vertices, edges)
    old2new = {old: new for new, old in enumerate(vmap)}
    stats = {
        "host_vertices": g.n,
        "closure_vertices": gprime.n,
        "closure_edges": gprime.m,
        "blockers": len(xs),
        "classes": class_count,
        "groups": len(groups),
        "pruned_pairs": pruned_pairs,
        "candidate_subsets": len(cliques),
        "kept_trees": len(kept),
        "dropped_subsets": dropped,
        "terminals": len(terminals),
    }
    return ClosureResult(
        graph=gprime,
        vertex_map=vmap,
        blockers_old=xs,
        blockers_new=tuple(old2new[x] for x in xs),
        r=r,
        t=tf,
        cap=cap,
        groups=tuple(groups),
        class_count=class_count,
        kept=kept,
        terminals=terminals,
        stats=stats,
    )


@dataclass(frozen=True)
class ClosureReport:
    ok: bool
    problems: Tuple[str, ...]
    sizes: Dict[str, int]


def verify_closure(g: Graph, closure: ClosureResult) -> ClosureReport:
    """Recheck the three closure guarantees from scratch.

    1. Every blocker survives into the closure graph.
    2. Profiles of protected vertices are preserved exactly, and every
       host profile class is still represented.
    3. For each kept all-class bundle, the group Steiner value in the
       closure matches the host value, and every stored tree is a real
       tree of the host meeting its groups within the size cap.
    Sizes are reported, not judged.
    """
    problems: List[str] = []
    xs = closure.blockers_old
    xset = set(xs)
    old2new = {old: new for new, old in enumerate(closure.vertex_map)}

    for x in xs:
        if x not in old2new:
            problems.append(f"blocker {x} missing from the closure")
    if tuple(old2new.get(x, -1) for x in xs) != closure.blockers_new:
        problems.append("blocker relabeling is inconsistent")

    if not problems:
        new2old = dict(enumerate(closure.vertex_map))
        cls_host = classify(g, xs, closure.r)
        for u in closure.terminals:
            want = profile(g, u, xs, closure.r)
            got = profile(
                closure.graph, old2new[u], closure.blockers_new, closure.r
            ).relabel(new2old)
            if want != got:
                problems.append(
                    f"profile of vertex {u} changed: {want.entries} "
                    f"-> {got.entries}"
                )
        reps = set(cls_host.representatives)
        missing = reps.difference(closure.terminals)
        if missing:
            problems.append(
                f"class representatives {sorted(missing)} were not protected"
            )

    edge_set = set(g.edges())
    for key, tree in closure.kept.items():
        if len(tree.vertices) > closure.cap:
            problems.append(f"kept tree {key} exceeds the size cap")
        if len(tree.edges) != len(tree.vertices) - 1:
            problems.append(f"kept tree {key} is not a tree")
        for e in tree.edges:
            if e not in edge_set:
                problems.append(f"kept tree {key} uses non-edge {e}")
                break
        for i in key:
            if not set(tree.vertices).intersection(closure.groups[i]):
                problems.append(f"kept tree {key} misses group {i}")
    if not problems:
        for key, tree in closure.kept.items():
            if any(i >= closure.class_count for i in key):
                continue
            prime_groups = []
            for i in key:
                members = [old2new[v] for v in closure.groups[i] if v in old2new]
                if not members:
                    problems.append(f"group {i} vanished from the closure")
                    break
                prime_groups.append(members)
            else:
                prime_value = steiner_size(closure.graph, prime_groups)
                if prime_value != len(tree.vertices):
                    problems.append(
                        f"bundle {key}: host tree has {len(tree.vertices)} "
                        f"vertices but the closure needs {prime_value}"
                    )

    sizes = dict(closure.stats)
    return ClosureReport(not problems, tuple(problems), sizes)


# ---------------------------------------------------------------------------
# translation to an analysis graph with one root per class


@dataclass(frozen=True)
class TranslationGraph:
    graph: Graph
    roots: Tuple[int, ...]
    added_cost: int
    class_costs: Tuple[int, ...]


def build_translation(
    g: Graph,
    blockers: Iterable[int],
    r: int,
    class_subset: Sequence[int],
    classification: Optional[ProfileClassification] = None,
) -> TranslationGraph:
    """Attach a subdivided access tree per class and expose one root each.

    For a class with common nearest projection distance ell, the root
    hangs (2r+1) * ell vertices away from the class members, so an exact
    tree through the roots decomposes into a host tree plus fixed access
    costs.  Classes with empty projections have no access point and are
    rejected.
    """
    xs = tuple(sorted(set(blockers)))
    cls = classification if classification is not None else classify(g, xs, r)
    edges: List[Tuple[int, int]] = list(g.edges())
    nxt = g.n
    roots: List[int] = []
    costs: List[int] = []
    for idx in class_subset:
        pc = cls.classes[idx]
        if not pc.profile.entries:
            raise ValueError(f"class {idx} has an empty projection")
        ell = min(d for _, d in pc.profile.entries)
        anchor = min(x for x, d in pc.profile.entries if d == ell)
        flood = bfs_layers(g, [anchor], depth_cap=r, forbidden=set(xs))
        tree_edges: Set[Tuple[int, int]] = set()
        tree_vertices: Set[int] = {anchor}
        for m in pc.members:
            assert flood.dist.get(m) == ell, "members disagree on access distance"
            path = flood.path_to(m)
            tree_vertices.update(path)
            for a, b in zip(path, path[1:]):
                tree_edges.add((min(a, b), max(a, b)))
        copy: Dict[int, int] = {}
        members = set(pc.members)
        for v in sorted(tree_vertices):
            if v in members:
                copy[v] = v  # glue leaves onto the host
            else:
                copy[v] = nxt
                nxt += 1
        roots.append(copy[anchor])
        costs.append((2 * r + 1) * ell)
        for a, b in sorted(tree_edges):
            walk = [copy[a]]
            for _ in range(2 * r):
                walk.append(nxt)
                nxt += 1
            walk.append(copy[b])
            for p, q in zip(walk, walk[1:]):
                edges.append((min(p, q), max(p, q)))
    return TranslationGraph(
        Graph.from_edges(nxt, edges), tuple(roots), sum(costs), tuple(costs)
    )


@dataclass(frozen=True)
class TranslationCheck:
    host_value: float
    analysis_value: float
    added_cost: int
    ok: bool


def check_translation(
    g: Graph,
    blockers: Iterable[int],
    r: int,
    class_subset: Sequence[int],
    classification: Optional[ProfileClassification] = None,
) -> TranslationCheck:
    """Confirm that root Steiner values shift host values by the access cost.

    The identity speaks about trees that connect several classes; a lone
    root is its own optimal tree and never enters its access path, so
    subsets of fewer than two classes are refused.
    """
    if len(class_subset) < 2:
        raise ValueError("the shift identity needs at least two classes")
    xs = tuple(sorted(set(blockers)))
    cls = classification if classification is not None else classify(g, xs, r)
    tg = build_translation(g, xs, r, class_subset, cls)
    host = steiner_size(g, [cls.classes[i].members for i in class_subset])
    analysis = steiner_size(tg.graph, [[v] for v in tg.roots])
    if host == float("inf") or analysis == float("inf"):
        ok = host == analysis
    else:
        ok = analysis == host + tg.added_cost
    return TranslationCheck(host, analysis, tg.added_cost, ok)
