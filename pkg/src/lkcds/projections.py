"""Distance profiles of vertices relative to a blocker set.

For a vertex u outside a set X, the r-projection of u onto X collects the
X-vertices reachable within r steps along paths whose interior avoids X,
and the profile records those avoidance distances.  Vertices with equal
profiles are interchangeable for r-domination of X, which is what the
closure construction exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from .graphs import Graph, bfs_layers


@dataclass(frozen=True)
class ProjectionProfile:
    """Sorted (x, distance) pairs with distance <= r, interior avoiding X."""

    r: int
    entries: Tuple[Tuple[int, int], ...]

    @property
    def projection(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self.entries)

    def distance_to(self, x: int) -> Optional[int]:
        for y, d in self.entries:
            if y == x:
                return d
        return None

    def relabel(self, mapping: Dict[int, int]) -> "ProjectionProfile":
        return ProjectionProfile(
            self.r, tuple(sorted((mapping[x], d) for x, d in self.entries))
        )


def profile(g: Graph, u: int, blockers: Iterable[int], r: int) -> ProjectionProfile:
    """Profile of a single vertex, computed by flooding outward from u."""
    xs = set(blockers)
    if u in xs:
        raise ValueError("profiled vertex must lie outside the blocker set")
    res = bfs_layers(g, [u], depth_cap=r, forbidden=xs)
    entries = sorted((v, d) for v, d in res.dist.items() if v in xs and d <= r)
    return ProjectionProfile(r, tuple(entries))


def projection(g: Graph, u: int, blockers: Iterable[int], r: int) -> Tuple[int, ...]:
    return profile(g, u, blockers, r).projection


@dataclass(frozen=True)
class ProfileClass:
    profile: ProjectionProfile
    members: Tuple[int, ...]

    @property
    def representative(self) -> int:
        return self.members[0]


class ProfileClassification:
    """Partition of the free vertices by projection profile.

    Classes are ordered by their profile entry tuples, members ascending,
    and the representative of a class is its smallest member.
    """

    __slots__ = ("blockers", "r", "classes", "class_of")

    def __init__(self, blockers: Tuple[int, ...], r: int, classes: Tuple[ProfileClass, ...]):
        self.blockers = blockers
        self.r = r
        self.classes = classes
        self.class_of: Dict[int, int] = {}
        for i, cls in enumerate(classes):
            for v in cls.members:
                self.class_of[v] = i

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(cls.representative for cls in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def classify(
    g: Graph,
    blockers: Iterable[int],
    r: int,
    free: Optional[Iterable[int]] = None,
) -> ProfileClassification:
    """Group free vertices by profile, flooding once from each blocker.

    The flood direction is opposite to the one `profile` uses; paths with
    X-free interiors reverse cleanly, so both give the same distances.
    """
    xs = tuple(sorted(set(blockers)))
    xset = set(xs)
    if free is None:
        free_ids = [v for v in range(g.n) if v not in xset]
    else:
        free_ids = sorted(set(free))
        for v in free_ids:
            if v in xset:
                raise ValueError(f"free vertex {v} lies in the blocker set")
            if not 0 <= v < g.n:
                raise ValueError(f"free vertex {v} out of range")
    pairs: Dict[int, List[Tuple[int, int]]] = {u: [] for u in free_ids}
    for x in xs:
        res = bfs_layers(g, [x], depth_cap=r, forbidden=xset)
        for v, d in res.dist.items():
            if v in pairs and 0 < d <= r:
                pairs[v].append((x, d))
    by_profile: Dict[ProjectionProfile, List[int]] = {}
    for u in free_ids:
        prof = ProjectionProfile(r, tuple(sorted(pairs[u])))
        by_profile.setdefault(prof, []).append(u)
    classes = tuple(
        ProfileClass(prof, tuple(sorted(members)))
        for prof, members in sorted(by_profile.items(), key=lambda kv: kv[0].entries)
    )
    return ProfileClassification(xs, r, classes)


def profile_coverage(
    g: Graph, prof: ProjectionProfile, blockers: Iterable[int]
) -> Tuple[int, ...]:
    """Blocker vertices within distance r of the profiled vertex.

    Uses only the profile: for each target z the true distance equals
    min over projection entries (x, d) of d + dist(x, z), by splitting any
    shortest path at its first blocker hit.  Hence equal profiles cover
    equal target sets.
    """
    targets = sorted(set(blockers))
    covered = []
    rows = {x: g.dist_row(x) for x, _ in prof.entries}
    for z in targets:
        best = None
        for x, d in prof.entries:
            dz = rows[x][z]
            if dz >= 0 and (best is None or d + dz < best):
                best = d + dz
        if best is not None and best <= prof.r:
            covered.append(z)
    return tuple(covered)


def distinct_profile_count(g: Graph, blockers: Iterable[int], r: int) -> int:
    return len(classify(g, blockers, r))
