"""Exact reference solvers for desk-scale instances.

Everything here favors transparent exhaustive search over speed.  These
routines back the test suite: constructive algorithms elsewhere in the
package are checked against them on small graphs, so they must stay simple
enough to be obviously correct.  Two deliberately independent routes exist
for several quantities (smart enumerator vs. raw subset scan, BFS flood vs.
split-vertex rebuild); keep both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .graphs import Graph, iter_bits, mask_of

FOUND = "found"
NONE_WITHIN_BUDGET = "none-within-budget"
INFEASIBLE = "infeasible"
BUDGET_EXHAUSTED = "budget-exhausted"


class BudgetExceededError(RuntimeError):
    """Raised internally when a node budget runs out."""


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, nodes: Optional[int]):
        self.remaining = nodes

    def spend(self, amount: int = 1) -> None:
        if self.remaining is not None:
            self.remaining -= amount
            if self.remaining < 0:
                raise BudgetExceededError("search node budget exhausted")


@dataclass(frozen=True)
class SolveResult:
    status: str
    solution: Optional[Tuple[int, ...]] = None
    value: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.status == FOUND


# ---------------------------------------------------------------------------
# set cover core


def _cover_engine(
    sets: Sequence[int], universe: int, k: int, budget: _Budget
) -> Optional[List[int]]:
    budget.spend()
    if universe == 0:
        return []
    if k <= 0:
        return None
    # branch on the uncovered element with the fewest candidate sets
    pick: Optional[Tuple[int, List[int]]] = None
    for e in iter_bits(universe):
        cands = [i for i, s in enumerate(sets) if (s >> e) & 1]
        if not cands:
            return None
        if pick is None or len(cands) < len(pick[1]):
            pick = (e, cands)
            if len(cands) == 1:
                break
    assert pick is not None
    for i in pick[1]:
        sub = _cover_engine(sets, universe & ~sets[i], k - 1, budget)
        if sub is not None:
            return [i, *sub]
    return None


def min_cover(
    sets: Sequence[int], universe: int, k: int, budget_nodes: Optional[int] = None
) -> Optional[Tuple[int, List[int]]]:
    """Minimum cover of `universe` using at most k of the given bitmask sets.

    Returns (size, indices) or None when no cover of size <= k exists.  The
    returned indices are some optimum, not a canonical one.
    """
    budget = _Budget(budget_nodes)
    for s in range(k + 1):
        got = _cover_engine(sets, universe, s, budget)
        if got is not None:
            return (len(got), got)
    return None


def cover_exists(
    ball_masks: Sequence[int],
    universe: int,
    k: int,
    allowed: Optional[Iterable[int]] = None,
    budget_nodes: Optional[int] = None,
) -> bool:
    """Whether <= k of the allowed balls cover the universe mask."""
    ids = sorted(set(allowed)) if allowed is not None else list(range(len(ball_masks)))
    sets = [ball_masks[i] for i in ids]
    budget = _Budget(budget_nodes)
    return _cover_engine(sets, universe, k, budget) is not None


def _lex_min_cover(
    cand_ids: Sequence[int],
    masks: Sequence[int],
    universe: int,
    size: int,
    budget: _Budget,
) -> Tuple[int, ...]:
    # smallest sorted id tuple of exactly `size` candidates covering universe;
    # a cover of that size must exist
    by_id = dict(zip(cand_ids, masks))
    chosen: List[int] = []
    rest = universe
    start = 0
    while len(chosen) < size:
        for idx in range(start, len(cand_ids)):
            v = cand_ids[idx]
            left = rest & ~by_id[v]
            need = size - len(chosen) - 1
            if need == 0:
                ok = left == 0
            else:
                tail = [by_id[u] for u in cand_ids[idx + 1 :]]
                ok = _cover_engine(tail, left, need, budget) is not None
            if ok:
                chosen.append(v)
                rest = left
                start = idx + 1
                break
        else:
            raise AssertionError("lex refinement lost a known-feasible cover")
    return tuple(chosen)


# ---------------------------------------------------------------------------
# domination


def _resolve_targets(g: Graph, targets: Optional[Iterable[int]]) -> int:
    if targets is None:
        return (1 << g.n) - 1
    m = mask_of(targets)
    if m >> g.n:
        raise ValueError("target vertex out of range")
    return m


def exact_ds(
    g: Graph,
    r: int,
    k: int,
    targets: Optional[Iterable[int]] = None,
    allowed: Optional[Iterable[int]] = None,
    budget_nodes: Optional[int] = None,
) -> SolveResult:
    """Lexicographically smallest minimum set r-dominating the targets.

    `allowed` restricts which vertices may be used.  The whole vertex set is
    both the default target and the default candidate pool.
    """
    universe = _resolve_targets(g, targets)
    ids = sorted(set(allowed)) if allowed is not None else list(range(g.n))
    for v in ids:
        if not 0 <= v < g.n:
            raise ValueError(f"candidate {v} out of range")
    if universe == 0:
        return SolveResult(FOUND, (), 0)
    balls = g.balls(r)
    reach = 0
    for v in ids:
        reach |= balls[v]
    if universe & ~reach:
        return SolveResult(INFEASIBLE)
    masks = [balls[v] for v in ids]
    budget = _Budget(budget_nodes)
    try:
        for s in range(1, k + 1):
            if _cover_engine(masks, universe, s, budget) is not None:
                sol = _lex_min_cover(ids, masks, universe, s, budget)
                return SolveResult(FOUND, sol, s)
    except BudgetExceededError:
        return SolveResult(BUDGET_EXHAUSTED)
    return SolveResult(NONE_WITHIN_BUDGET)


def connected_vertex_sets(
    g: Graph, max_size: int, within: Optional[int] = None
) -> Iterator[int]:
    """All nonempty connected vertex sets of size <= max_size, as bitmasks.

    Enumeration is exhaustive and duplicate free; order is deterministic but
    not size sorted.  `within` restricts the universe to a mask.
    """
    masks = g.neighbor_masks()
    pool = (1 << g.n) - 1 if within is None else within

    def grow(cur: int, size: int, cand: int, banned: int) -> Iterator[int]:
        yield cur
        if size == max_size:
            return
        tried = 0
        for u in list(iter_bits(cand)):
            u_bit = 1 << u
            child_cand = (cand & ~u_bit & ~tried) | (
                masks[u] & pool & ~cur & ~u_bit & ~banned & ~tried
            )
            yield from grow(cur | u_bit, size + 1, child_cand, banned | tried)
            tried |= u_bit

    if max_size < 1:
        return
    for v in iter_bits(pool):
        above = pool & ~((2 << v) - 1)
        yield from grow(1 << v, 1, masks[v] & above, 0)


def _first_lex_valid(
    g: Graph, size: int, valid, within: Optional[int] = None
) -> Optional[Tuple[int, ...]]:
    # lex-min sorted vertex tuple among connected sets of exactly `size`
    best: Optional[Tuple[int, ...]] = None
    for m in connected_vertex_sets(g, size, within):
        if m.bit_count() != size or not valid(m):
            continue
        tup = tuple(iter_bits(m))
        if best is None or tup < best:
            best = tup
    return best


def exact_cds(
    g: Graph, r: int, k: int, budget_nodes: Optional[int] = None
) -> SolveResult:
    """Minimum connected r-dominating set of the whole graph, capped at k."""
    if g.n == 0:
        return SolveResult(FOUND, (), 0)
    if not g.is_connected():
        return SolveResult(INFEASIBLE)
    balls = g.balls(r)
    full = (1 << g.n) - 1
    budget = _Budget(budget_nodes)

    def dominates_all(m: int) -> bool:
        got = 0
        for v in iter_bits(m):
            got |= balls[v]
        return got == full

    try:
        for s in range(1, k + 1):
            budget.spend(g.n)
            sol = _first_lex_valid(g, s, dominates_all)
            if sol is not None:
                return SolveResult(FOUND, sol, s)
    except BudgetExceededError:
        return SolveResult(BUDGET_EXHAUSTED)
    return SolveResult(NONE_WITHIN_BUDGET)


def exact_acds(
    g: Graph,
    annotated: Iterable[int],
    r: int,
    k: int,
    budget_nodes: Optional[int] = None,
) -> SolveResult:
    """Minimum connected set r-dominating an annotated subset, capped at k."""
    targets = _resolve_targets(g, annotated)
    if targets == 0:
        return SolveResult(FOUND, (), 0)
    comps = g.component_masks()
    home = [c for c in comps if c & targets]
    if len(home) != 1:
        return SolveResult(INFEASIBLE)
    balls = g.balls(r)
    budget = _Budget(budget_nodes)

    def covers(m: int) -> bool:
        got = 0
        for v in iter_bits(m):
            got |= balls[v]
        return targets & ~got == 0

    try:
        for s in range(1, k + 1):
            budget.spend(g.n)
            sol = _first_lex_valid(g, s, covers, within=home[0])
            if sol is not None:
                return SolveResult(FOUND, sol, s)
    except BudgetExceededError:
        return SolveResult(BUDGET_EXHAUSTED)
    return SolveResult(NONE_WITHIN_BUDGET)


# ---------------------------------------------------------------------------
# raw subset-scan routes, kept maximally dumb on purpose


def _combo_covers(balls: Sequence[int], combo: Tuple[int, ...], universe: int) -> bool:
    got = 0
    for v in combo:
        got |= balls[v]
    return universe & ~got == 0


def brute_ds(
    g: Graph, r: int, k: int, targets: Optional[Iterable[int]] = None
) -> SolveResult:
    universe = _resolve_targets(g, targets)
    if universe == 0:
        return SolveResult(FOUND, (), 0)
    balls = g.balls(r)
    for s in range(1, k + 1):
        for combo in itertools.combinations(range(g.n), s):
            if _combo_covers(balls, combo, universe):
                return SolveResult(FOUND, combo, s)
    if not _combo_covers(balls, tuple(range(g.n)), universe):
        return SolveResult(INFEASIBLE)
    return SolveResult(NONE_WITHIN_BUDGET)


def _mask_connected(g: Graph, m: int) -> bool:
    if m == 0:
        return False
    masks = g.neighbor_masks()
    start = m & -m
    comp = start
    frontier = start
    while frontier:
        grown = 0
        for u in iter_bits(frontier):
            grown |= masks[u] & m
        grown &= ~comp
        comp |= grown
        frontier = grown
    return comp == m


def brute_cds(g: Graph, r: int, k: int) -> SolveResult:
    if g.n == 0:
        return SolveResult(FOUND, (), 0)
    if not g.is_connected():
        return SolveResult(INFEASIBLE)
    balls = g.balls(r)
    full = (1 << g.n) - 1
    for s in range(1, k + 1):
        for combo in itertools.combinations(range(g.n), s):
            m = mask_of(combo)
            if _combo_covers(balls, combo, full) and _mask_connected(g, m):
                return SolveResult(FOUND, combo, s)
    return SolveResult(NONE_WITHIN_BUDGET)


def brute_steiner(
    g: Graph, groups: Sequence[Iterable[int]], cap: Optional[int] = None
) -> SolveResult:
    """Minimum vertex count of a connected subgraph meeting every group.

    The value counts vertices, so a single shared vertex scores 1.  Scans all
    vertex subsets in ascending size; intended only for cross-validation.
    """
    gs = [mask_of(grp) for grp in groups]
    if not gs or any(m == 0 for m in gs):
        raise ValueError("groups must be nonempty")
    limit = cap if cap is not None else g.n
    for s in range(1, limit + 1):
        for combo in itertools.combinations(range(g.n), s):
            m = mask_of(combo)
            if all(m & grp for grp in gs) and _mask_connected(g, m):
                return SolveResult(FOUND, combo, s)
    # either genuinely infeasible or only feasible above the cap
    feasible = any(all(c & grp for grp in gs) for c in g.component_masks())
    return SolveResult(NONE_WITHIN_BUDGET if feasible else INFEASIBLE)


def split_avoiding_distances(g: Graph, blockers: Iterable[int], source: int) -> Dict[int, int]:
    """Distances from `source` over paths whose interior avoids `blockers`.

    Independent route: rebuild the graph with every blocker split into one
    leaf copy per outside neighbor, then run a plain BFS.  Targets inside the
    blocker set get the minimum over their copies.  The source must lie
    outside the blocker set.
    """
    blocked = set(blockers)
    if source in blocked:
        raise ValueError("source must avoid the blocker set")
    if not 0 <= source < g.n:
        raise ValueError("source out of range")
    free = [v for v in range(g.n) if v not in blocked]
    index = {v: i for i, v in enumerate(free)}
    nxt = len(free)
    copy_owner: List[int] = []
    edges: List[Tuple[int, int]] = []
    for u, v in g.edges():
        if u in blocked and v in blocked:
            continue
        if u in blocked or v in blocked:
            a, w = (u, v) if u in blocked else (v, u)
            edges.append((index[w], nxt))
            copy_owner.append(a)
            nxt += 1
        else:
            edges.append((index[u], index[v]))
    h = Graph.from_edges(nxt, edges)
    row = h.dist_row(index[source])
    out: Dict[int, int] = {}
    for v in free:
        d = row[index[v]]
        if d >= 0:
            out[v] = d
    for i, owner in enumerate(copy_owner):
        d = row[len(free) + i]
        if d >= 0 and (owner not in out or d < out[owner]):
            out[owner] = d
    return out


# ---------------------------------------------------------------------------
# set cover instances


@dataclass(frozen=True)
class SetCoverInstance:
    universe_size: int
    sets: Tuple[Tuple[int, ...], ...]
    k: int

    def __post_init__(self):
        if self.universe_size < 0 or self.k < 0:
            raise ValueError("universe size and k must be nonnegative")
        for i, s in enumerate(self.sets):
            for e in s:
                if not 0 <= e < self.universe_size:
                    raise ValueError(f"set {i} holds out-of-range element {e}")
            if len(set(s)) != len(s):
                raise ValueError(f"set {i} repeats an element")

    def set_masks(self) -> List[int]:
        return [mask_of(s) for s in self.sets]


def parse_setcover(text: str) -> SetCoverInstance:
    lines = [ln.strip() for ln in text.splitlines()]
    body = [ln for ln in lines if ln and not ln.startswith("#")]
    # a set may be empty, so blank lines after the header count as sets
    header_at = None
    for i, ln in enumerate(lines):
        if ln and not ln.startswith("#"):
            header_at = i
            break
    if header_at is None:
        raise ValueError("missing 'u <universe> <num_sets> <k>' header")
    tokens = lines[header_at].split()
    if len(tokens) != 4 or tokens[0] != "u":
        raise ValueError("header must read 'u <universe> <num_sets> <k>'")
    try:
        universe, num_sets, k = (int(t) for t in tokens[1:])
    except ValueError:
        raise ValueError("non-integer field in header") from None
    rows = []
    for ln in lines[header_at + 1 :]:
        if ln.startswith("#"):
            continue
        rows.append(ln)
    # only surplus blank lines are padding; within the declared count they
    # denote empty sets
    while len(rows) > num_sets and not rows[-1]:
        rows.pop()
    if len(rows) != num_sets:
        raise ValueError(f"expected {num_sets} set lines, found {len(rows)}")
    sets = []
    for ln in rows:
        try:
            sets.append(tuple(sorted(int(t) for t in ln.split())))
        except ValueError:
            raise ValueError(f"non-integer element in set line {ln!r}") from None
    return SetCoverInstance(universe, tuple(sets), k)


def serialize_setcover(inst: SetCoverInstance) -> str:
    lines = [f"u {inst.universe_size} {len(inst.sets)} {inst.k}"]
    lines.extend(" ".join(str(e) for e in s) for s in inst.sets)
    return "\n".join(lines) + "\n"


def exact_setcover(
    inst: SetCoverInstance, budget_nodes: Optional[int] = None
) -> SolveResult:
    """Lexicographically smallest minimum cover by set indices, capped at k."""
    universe = (1 << inst.universe_size) - 1
    masks = inst.set_masks()
    reach = 0
    for m in masks:
        reach |= m
    if universe & ~reach:
        return SolveResult(INFEASIBLE)
    if universe == 0:
        return SolveResult(FOUND, (), 0)
    ids = list(range(len(masks)))
    budget = _Budget(budget_nodes)
    try:
        for s in range(1, inst.k + 1):
            if _cover_engine(masks, universe, s, budget) is not None:
                sol = _lex_min_cover(ids, masks, universe, s, budget)
                return SolveResult(FOUND, sol, s)
    except BudgetExceededError:
        return SolveResult(BUDGET_EXHAUSTED)
    return SolveResult(NONE_WITHIN_BUDGET)
