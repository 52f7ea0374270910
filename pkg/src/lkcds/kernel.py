"""End-to-end kernelization for connected distance-r domination.

The pipeline shrinks an instance to an annotated one: find a domination
core, stitch it connected, then take the profile-preserving closure.  A
solution of the small instance translates back verbatim because the
closure is a subgraph of the host; the core property upgrades coverage of
the annotated set to coverage of everything whenever the budget holds.
Objectives are capped at k+1 throughout, so oversized solutions stay
comparable instead of becoming infinities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .closure import ClosureResult, avoiding_path_tree, build_closure
from .cores import DominationCore, Rejection, connected_core, find_core
from .domination import (
    ContractViolation,
    CoveringFamily,
    connect,
    covering_family,
    dominates,
    greedy_rdom,
)
from .graphs import (
    Graph,
    GraphFormatError,
    graph_on_vertices,
    induced_subgraph,
    mask_connected,
    mask_of,
    parse_graph,
    serialize_graph,
)
from .oracles import (
    FOUND,
    INFEASIBLE,
    NONE_WITHIN_BUDGET,
    exact_acds,
    exact_cds,
    exact_ds,
)
from .projections import classify

FORMAT_TAG = "lkcds/1"


@dataclass(frozen=True)
class KernelParams:
    k: int
    r: int
    alpha: Fraction

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget k must be nonnegative")
        if self.r < 1:
            raise ValueError("radius r must be at least 1")
        if not isinstance(self.alpha, Fraction):
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 1:
            raise ValueError("approximation factor must exceed 1")

    @property
    def t(self) -> Fraction:
        return (self.alpha - 1) / (4 * self.r + 2)

    @property
    def t_eff(self) -> Fraction:
        return max(Fraction(1), self.t)


def params_from(
    k: int,
    r: int,
    alpha: Optional[Union[int, str, Fraction]] = None,
    epsilon: Optional[Union[int, str, Fraction]] = None,
) -> KernelParams:
    """Build parameters from either the factor alpha or its excess epsilon."""
    if (alpha is None) == (epsilon is None):
        raise ValueError("give exactly one of alpha and epsilon")
    a = Fraction(alpha) if alpha is not None else 1 + Fraction(epsilon)
    return KernelParams(k, r, a)


@dataclass(eq=False)
class KernelInstance:
    graph: Graph
    annotated: Tuple[int, ...]
    params: KernelParams
    vertex_map: Tuple[int, ...]  # kernel id -> host id
    mode: str  # closure | trivial
    provenance: Dict[str, str] = field(default_factory=dict)
    closure: Optional[ClosureResult] = None


KernelOutcome = Union[KernelInstance, Rejection]


def kernelize(
    g: Graph, params: KernelParams, core_mode: str = "exact"
) -> KernelOutcome:
    """Shrink an instance, or reject it with a certified reason.

    Tiny optima are intercepted first: when an exact search below the
    piece size already finds a connected dominating set, the kernel is
    just that solution's induced graph and lifting replays it.
    """
    if g.n == 0:
        raise ValueError("cannot kernelize the empty graph")
    if not g.is_connected():
        return Rejection("graph is disconnected; no connected dominating set exists")
    shortcut_cap = min(params.k, math.ceil(params.t_eff) - 1)
    if shortcut_cap >= 1:
        hit = exact_cds(g, params.r, shortcut_cap)
        if hit.found:
            assert hit.solution is not None
            sub, vmap = induced_subgraph(g, hit.solution)
            return KernelInstance(
                graph=sub,
                annotated=tuple(range(sub.n)),
                params=params,
                vertex_map=vmap,
                mode="trivial",
                provenance={
                    "core": "shortcut",
                    "solution": " ".join(str(v) for v in hit.solution),
                },
            )
    core = find_core(g, params.k, params.r, core_mode)
    if isinstance(core, Rejection):
        return core
    stitched = connected_core(g, core)
    if isinstance(stitched, Rejection):
        return stitched
    closure = build_closure(g, stitched.vertices, params.r, params.t_eff)
    return KernelInstance(
        graph=closure.graph,
        annotated=closure.blockers_new,
        params=params,
        vertex_map=closure.vertex_map,
        mode="closure",
        provenance={"core": core.certified},
        closure=closure,
    )


def kernel_solution_valid(inst: KernelInstance, solution: Iterable[int]) -> bool:
    sol = sorted(set(solution))
    if not sol:
        return not inst.annotated
    for v in sol:
        if not 0 <= v < inst.graph.n:
            return False
    if not mask_connected(inst.graph, mask_of(sol)):
        return False
    return dominates(inst.graph, sol, inst.params.r, inst.annotated)


@dataclass(frozen=True)
class LiftResult:
    solution: Tuple[int, ...]
    value: int
    dominates_host: bool
    connected: bool


def lift(g: Graph, inst: KernelInstance, solution: Iterable[int]) -> LiftResult:
    """Translate a kernel solution back to the host graph.

    Invalid kernel solutions are refused.  Valid ones map through the
    vertex relabeling; within budget the result provably dominates the
    host, and beyond budget it is repaired to stay a valid solution,
    which cannot change its capped value.
    """
    sol = tuple(sorted(set(solution)))
    if not kernel_solution_valid(inst, sol):
        raise ValueError("kernel solution is not connected or misses the annotated set")
    k, r = inst.params.k, inst.params.r
    if inst.mode == "trivial":
        stored = tuple(int(x) for x in inst.provenance["solution"].split())
        lifted = tuple(sorted(stored))
    else:
        lifted = tuple(sorted(inst.vertex_map[v] for v in sol))
        if len(lifted) <= k:
            if not dominates(g, lifted, r):
                raise ContractViolation(
                    "a budget solution of the kernel fails to dominate the host"
                )
        elif not dominates(g, lifted, r):
            fixed = set(lifted).union(greedy_rdom(g, r))
            lifted = connect(g, fixed, g.n).connected
    value = min(len(lifted), k + 1)
    return LiftResult(
        solution=lifted,
        value=value,
        dominates_host=dominates(g, lifted, r),
        connected=mask_connected(g, mask_of(lifted)),
    )


def capped_host_opt(g: Graph, k: int, r: int) -> Optional[int]:
    """Optimum connected r-domination value, capped at k+1; None if none exists."""
    res = exact_cds(g, r, k)
    if res.status == FOUND:
        return res.value
    if res.status == NONE_WITHIN_BUDGET:
        return k + 1
    return None


def capped_kernel_opt(inst: KernelInstance) -> Optional[int]:
    res = exact_acds(inst.graph, inst.annotated, inst.params.r, inst.params.k)
    if res.status == FOUND:
        return res.value
    if res.status == NONE_WITHIN_BUDGET:
        return inst.params.k + 1
    return None


@dataclass(frozen=True)
class ReplaySplit:
    """A host solution cut into replayable connected pieces.

    The family lives on the induced subgraph of the solution; pieces maps
    it back to host vertex ids.  Piece sizes and counts obey the subtree
    cover bounds, which is what the size analysis replays piece by piece.
    """

    family: CoveringFamily
    pieces: Tuple[Tuple[int, ...], ...]


def replay_split(g: Graph, params: KernelParams, solution: Iterable[int]) -> ReplaySplit:
    """Split a connected host solution along a subtree cover at width t.

    The construction validates its own bounds and raises on violation, so
    a returned split is always a usable replay witness.
    """
    sol = sorted(set(solution))
    if not sol:
        raise ValueError("cannot split an empty solution")
    sub, parents = induced_subgraph(g, sol)
    fam = covering_family(sub, params.t_eff)
    pieces = tuple(
        tuple(sorted(parents[v] for v in p.vertices)) for p in fam.pieces
    )
    return ReplaySplit(family=fam, pieces=pieces)


@dataclass(frozen=True)
class RatioCertificate:
    host_value: int
    host_opt: int
    kernel_value: int
    kernel_opt: int
    alpha: Fraction
    lhs: Fraction
    rhs: Fraction
    ok: bool
    replay: Optional[ReplaySplit] = None


def certify_ratio(
    g: Graph, inst: KernelInstance, kernel_solution: Iterable[int]
) -> RatioCertificate:
    """Check the lifting inequality on one solved instance, exactly.

    The quality ratio of the lifted solution must stay within alpha times
    the quality ratio of the submitted kernel solution, with all four
    quantities capped at k+1 and compared as exact rationals.  When the
    host optimum fits the budget its replay split is attached as the
    witness for the size analysis.
    """
    sol = tuple(sorted(set(kernel_solution)))
    lifted = lift(g, inst, sol)
    if not (lifted.dominates_host and lifted.connected):
        raise ContractViolation("lifted solution is not valid for the host")
    k = inst.params.k
    host_res = exact_cds(g, inst.params.r, k)
    if host_res.status == FOUND:
        host_opt: Optional[int] = host_res.value
    elif host_res.status == NONE_WITHIN_BUDGET:
        host_opt = k + 1
    else:
        host_opt = None
    kern_opt = capped_kernel_opt(inst)
    if host_opt is None or kern_opt is None:
        raise ContractViolation("a capped optimum is undefined on a connected instance")
    replay = (
        replay_split(g, inst.params, host_res.solution)
        if host_res.status == FOUND and host_res.solution
        else None
    )
    kern_value = min(len(sol), k + 1)
    lhs = Fraction(lifted.value, host_opt)
    rhs = inst.params.alpha * Fraction(kern_value, kern_opt)
    return RatioCertificate(
        host_value=lifted.value,
        host_opt=host_opt,
        kernel_value=kern_value,
        kernel_opt=kern_opt,
        alpha=inst.params.alpha,
        lhs=lhs,
        rhs=rhs,
        ok=lhs <= rhs,
        replay=replay,
    )


# ---------------------------------------------------------------------------
# plain (non-connected) domination kernel


@dataclass(eq=False)
class DSKernel:
    graph: Graph
    annotated: Tuple[int, ...]
    k: int
    r: int
    vertex_map: Tuple[int, ...]
    core_certified: str


def ds_kernelize(
    g: Graph, k: int, r: int, core_mode: str = "exact"
) -> Union[DSKernel, Rejection]:
    """Kernel for domination without the connectivity requirement.

    Keeps the core, one representative per profile class with its
    projection paths, and the core-internal edges.  Equal profiles cover
    equal core vertices, so restricting candidates to representatives
    preserves the optimum.
    """
    core = find_core(g, k, r, core_mode)
    if isinstance(core, Rejection):
        return core
    xs = core.vertices
    xset = set(xs)
    cls = classify(g, xs, r)
    vertices = set(xs)
    edges = set()
    for pc in cls.classes:
        rep = pc.representative
        vs, es = avoiding_path_tree(g, rep, xset, r)
        vertices.update(vs)
        edges.update(es)
    for u, v in g.edges():
        if u in xset and v in xset:
            edges.add((u, v))
    sub, vmap = graph_on_vertices(vertices, edges)
    old2new = {old: new for new, old in enumerate(vmap)}
    return DSKernel(
        graph=sub,
        annotated=tuple(old2new[x] for x in xs),
        k=k,
        r=r,
        vertex_map=vmap,
        core_certified=core.certified,
    )


# ---------------------------------------------------------------------------
# serialization


def serialize_kernel(inst: KernelInstance) -> str:
    lines = [FORMAT_TAG, "[graph]"]
    lines.append(serialize_graph(inst.graph).rstrip("\n"))
    lines.append("[Z]")
    lines.append(" ".join(str(v) for v in inst.annotated))
    lines.append("[map]")
    for new, old in enumerate(inst.vertex_map):
        lines.append(f"{new} {old}")
    lines.append("[params]")
    lines.append(f"k {inst.params.k}")
    lines.append(f"r {inst.params.r}")
    lines.append(f"alpha {inst.params.alpha}")
    lines.append(f"mode {inst.mode}")
    lines.append("[provenance]")
    lines.append(f"core {inst.provenance.get('core', 'unknown')}")
    if inst.mode == "trivial":
        lines.append(f"solution {inst.provenance.get('solution', '')}".rstrip())
    return "\n".join(lines) + "\n"


def parse_kernel(text: str) -> KernelInstance:
    lines = text.splitlines()
    if not lines or lines[0] != FORMAT_TAG:
        raise GraphFormatError(f"missing format tag {FORMAT_TAG!r}")
    sections: Dict[str, List[str]] = {}
    current: Optional[str] = None
    for ln in lines[1:]:
        if ln.startswith("[") and ln.endswith("]"):
            current = ln[1:-1]
            if current in sections:
                raise GraphFormatError(f"duplicate section {ln}")
            sections[current] = []
            continue
        if current is None:
            raise GraphFormatError(f"content before first section: {ln!r}")
        sections[current].append(ln)
    for required in ("graph", "Z", "map", "params", "provenance"):
        if required not in sections:
            raise GraphFormatError(f"missing section [{required}]")
    graph = parse_graph("\n".join(sections["graph"]))
    zline = sections["Z"][0] if sections["Z"] else ""
    annotated = tuple(int(v) for v in zline.split())
    vm: Dict[int, int] = {}
    for ln in sections["map"]:
        if not ln.strip():
            continue
        a, b = ln.split()
        vm[int(a)] = int(b)
    if sorted(vm) != list(range(graph.n)):
        raise GraphFormatError("vertex map does not label every kernel vertex")
    fields: Dict[str, str] = {}
    for ln in sections["params"] + sections["provenance"]:
        if not ln.strip():
            continue
        key, _, value = ln.partition(" ")
        fields[key] = value
    try:
        params = KernelParams(
            int(fields["k"]), int(fields["r"]), Fraction(fields["alpha"])
        )
    except (KeyError, ValueError) as exc:
        raise GraphFormatError(f"bad parameter block: {exc}") from None
    mode = fields.get("mode", "closure")
    if mode not in ("closure", "trivial"):
        raise GraphFormatError(f"unknown kernel mode {mode!r}")
    provenance = {"core": fields.get("core", "unknown")}
    if mode == "trivial":
        provenance["solution"] = fields.get("solution", "")
    return KernelInstance(
        graph=graph,
        annotated=annotated,
        params=params,
        vertex_map=tuple(vm[i] for i in range(graph.n)),
        mode=mode,
        provenance=provenance,
    )
