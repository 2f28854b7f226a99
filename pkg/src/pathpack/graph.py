"""Host graph representation and metric primitives.

Vertices are the integers 0..n-1.  All distance queries are breadth-first
searches; ties anywhere in the package are broken by ascending vertex id, so
every operation here is deterministic.
"""

from __future__ import annotations

import heapq
from collections import deque
from math import inf
from typing import Iterable, Optional

from .errors import InputError, PreconditionError

# Distance value used for "no path": compares greater than every int.
UNREACHABLE = inf


class Graph:
    """Finite undirected simple graph with sorted adjacency lists."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"loop at vertex {u} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.adj = adj

    @property
    def edge_count(self) -> int:
        return sum(len(lst) for lst in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        out = []
        for u, lst in enumerate(self.adj):
            for v in lst:
                if u < v:
                    out.append((u, v))
        return out

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} out of range for n={self.n}")

    def check_vertex_set(self, vs: Iterable[int]) -> frozenset[int]:
        out = frozenset(vs)
        for v in out:
            self.check_vertex(v)
        return out


def dist(g: Graph, s: Iterable[int], t: Iterable[int], *,
         cutoff: Optional[int] = None,
         within: Optional[frozenset[int]] = None) -> int | float:
    """Shortest-path distance between vertex sets s and t.

    Returns UNREACHABLE when no path exists, when either set is empty, or
    when the distance exceeds `cutoff`.  `within` restricts the whole search,
    endpoints included, to the induced subgraph on that vertex set.

    Args:
        g: host graph.
        s, t: vertex sets (any iterables of ids).
        cutoff: if given, give up beyond this many steps.
        within: optional traversal restriction.

    Returns:
        An int distance, or UNREACHABLE.
    """
    ss = set(s)
    tt = set(t)
    if within is not None:
        ss &= within
        tt &= within
    if not ss or not tt:
        return UNREACHABLE
    if ss & tt:
        return 0
    if len(tt) < len(ss):
        ss, tt = tt, ss
    adj = g.adj
    seen = set(ss)
    frontier = sorted(ss)
    depth = 0
    while frontier:
        depth += 1
        if cutoff is not None and depth > cutoff:
            return UNREACHABLE
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v in seen:
                    continue
                if within is not None and v not in within:
                    continue
                if v in tt:
                    return depth
                seen.add(v)
                nxt.append(v)
        frontier = nxt
    return UNREACHABLE


def ball(g: Graph, x: Iterable[int], r: int | float, *,
         within: Optional[frozenset[int]] = None) -> frozenset[int]:
    """All vertices at distance at most r from the set x.

    A negative radius gives the empty set; radius 0 gives x itself.
    """
    xs = set(x)
    if within is not None:
        xs &= within
    if r < 0 or not xs:
        return frozenset()
    adj = g.adj
    seen = set(xs)
    frontier = list(xs)
    depth = 0
    while frontier and depth < r:
        depth += 1
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v in seen:
                    continue
                if within is not None and v not in within:
                    continue
                seen.add(v)
                nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def st_path(g: Graph, s: Iterable[int], t: Iterable[int], *,
            within: Optional[frozenset[int]] = None) -> Optional[tuple[int, ...]]:
    """A shortest s-t path: first vertex in s, last in t, no internal vertex
    in s or t.

    Deterministic: sources are seeded in ascending id and neighbors explored
    in ascending id.  When s and t intersect the path is the single lowest
    common vertex.  Returns None when no such path exists.
    """
    ss = set(s)
    tt = set(t)
    if within is not None:
        ss = ss & within
        tt = tt & within
    if not ss or not tt:
        return None
    common = ss & tt
    if common:
        return (min(common),)
    adj = g.adj
    blocked = ss | tt
    parent: dict[int, int] = {}
    seen = set(ss)
    queue = deque(sorted(ss))
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in seen:
                continue
            if within is not None and v not in within:
                continue
            seen.add(v)
            parent[v] = u
            if v in tt:
                path = [v]
                while path[-1] not in ss:
                    path.append(parent[path[-1]])
                path.reverse()
                return tuple(path)
            if v not in blocked:
                queue.append(v)
    return None


def distance_map(g: Graph, src: Iterable[int], *,
                 cutoff: Optional[int | float] = None) -> dict[int, int]:
    """BFS distance from a vertex set to every vertex within cutoff."""
    dmap = {v: 0 for v in src}
    frontier = sorted(dmap)
    depth = 0
    while frontier:
        depth += 1
        if cutoff is not None and depth > cutoff:
            break
        nxt = []
        for u in frontier:
            for v in g.adj[u]:
                if v not in dmap:
                    dmap[v] = depth
                    nxt.append(v)
        frontier = nxt
    return dmap


def is_path(g: Graph, seq: tuple[int, ...]) -> bool:
    """True iff seq is a path in g: distinct vertices, consecutive adjacent."""
    if len(seq) == 0:
        return False
    if len(set(seq)) != len(seq):
        return False
    for u, v in zip(seq, seq[1:]):
        if not g.has_edge(u, v):
            return False
    return True


def components(g: Graph, sub: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the induced subgraph g[sub].

    Returned in ascending order of least vertex id.
    """
    remaining = set(sub)
    adj = g.adj
    out: list[frozenset[int]] = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        comp = {start}
        remaining.discard(start)
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v in remaining:
                        remaining.discard(v)
                        comp.add(v)
                        nxt.append(v)
            frontier = nxt
        out.append(frozenset(comp))
    return out


def _induced_adj(g: Graph, sub: frozenset[int]) -> dict[int, list[int]]:
    return {u: [v for v in g.adj[u] if v in sub] for u in sub}


def _ecc_induced(adj: dict[int, list[int]], sub_size: int, v: int) -> int | float:
    """Eccentricity of v inside an induced subgraph given by adjacency dict."""
    seen = {v}
    frontier = [v]
    depth = 0
    count = 1
    while frontier:
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if nxt:
            depth += 1
            count += len(nxt)
        frontier = nxt
    if count != sub_size:
        return UNREACHABLE
    return depth


def _dists_induced(adj: dict[int, list[int]], v: int) -> dict[int, int]:
    d = {v: 0}
    frontier = [v]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in d:
                    d[w] = depth
                    nxt.append(w)
        frontier = nxt
    return d


def _path_structure(adj: dict[int, list[int]]) -> Optional[list[int]]:
    """If the induced subgraph is a simple path, the vertex walk, else None."""
    degs = {u: len(vs) for u, vs in adj.items()}
    n = len(adj)
    if n == 1:
        return list(adj)
    ends = [u for u, dg in degs.items() if dg == 1]
    edge_count = sum(degs.values()) // 2
    if len(ends) != 2 or edge_count != n - 1 or any(dg > 2 for dg in degs.values()):
        return None
    walk = [min(ends)]
    prev = None
    while len(walk) < n:
        nxts = [w for w in adj[walk[-1]] if w != prev]
        if len(nxts) != 1:
            return None
        prev = walk[-1]
        walk.append(nxts[0])
    return walk


def radius_center(g: Graph, sub: Iterable[int]) -> tuple[int, int]:
    """Center and radius of the induced subgraph g[sub].

    The center is the vertex of minimum eccentricity within g[sub], ties
    broken by lowest id.  A singleton has radius 0.  Raises on an empty or
    disconnected sub.
    """
    subset = frozenset(sub)
    if not subset:
        raise PreconditionError("radius_center of empty set")
    for v in subset:
        g.check_vertex(v)
    if len(subset) == 1:
        (v,) = subset
        return v, 0
    adj = _induced_adj(g, subset)
    n = len(subset)

    walk = _path_structure(adj)
    if walk is not None:
        length = n - 1
        radius = (length + 1) // 2
        cands = {walk[length // 2], walk[(length + 1) // 2]}
        return min(cands), radius

    degs = [len(vs) for vs in adj.values()]
    edge_count = sum(degs) // 2
    if edge_count == n and all(dg == 2 for dg in degs):
        # a single cycle, if connected; verify via one eccentricity check
        v0 = min(subset)
        e0 = _ecc_induced(adj, n, v0)
        if e0 == n // 2:
            return v0, n // 2

    # General case: exact scan with eccentricity lower bounds for pruning.
    lb = {v: 0 for v in subset}
    heap: list[tuple[int, int]] = [(0, v) for v in sorted(subset)]
    heapq.heapify(heap)
    best_ecc: int | float = UNREACHABLE
    best_v = -1
    first = True
    while heap:
        bound, v = heapq.heappop(heap)
        if bound != lb[v]:
            continue
        if bound > best_ecc or (bound == best_ecc and v > best_v):
            continue
        dv = _dists_induced(adj, v)
        if len(dv) != n:
            raise PreconditionError("radius_center of disconnected set")
        first = False
        ecc = max(dv.values())
        if ecc < best_ecc or (ecc == best_ecc and v < best_v):
            best_ecc, best_v = ecc, v
        for u in subset:
            new = max(dv[u], ecc - dv[u])
            if new > lb[u]:
                lb[u] = new
                if new <= best_ecc:
                    heapq.heappush(heap, (new, u))
    if first:
        raise PreconditionError("radius_center of disconnected set")
    return best_v, int(best_ecc)


def has_radius_at_most(g: Graph, sub: Iterable[int], r: int) -> bool:
    """Decide radius(g[sub]) <= r without always computing an exact center.

    Same pruning scheme as radius_center but exits as soon as any vertex is
    seen to have eccentricity at most r.  Raises on empty or disconnected sub.
    """
    subset = frozenset(sub)
    if not subset:
        raise PreconditionError("radius check of empty set")
    if len(subset) == 1:
        return r >= 0
    adj = _induced_adj(g, subset)
    n = len(subset)
    lb = {v: 0 for v in subset}
    heap: list[tuple[int, int]] = [(0, v) for v in sorted(subset)]
    heapq.heapify(heap)
    checked_any = False
    while heap:
        bound, v = heapq.heappop(heap)
        if bound != lb[v] or bound > r:
            continue
        dv = _dists_induced(adj, v)
        if len(dv) != n:
            raise PreconditionError("radius check of disconnected set")
        checked_any = True
        ecc = max(dv.values())
        if ecc <= r:
            return True
        for u in subset:
            new = max(dv[u], ecc - dv[u])
            if new > lb[u]:
                lb[u] = new
                if new <= r:
                    heapq.heappush(heap, (new, u))
    if not checked_any:
        # every vertex was pruned immediately, only possible when r < 0
        return False
    return False
