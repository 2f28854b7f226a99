"""Junction construction: three far-apart tips joined to a small hub.

Given a connected region q and three tips v_1, v_2, v_3 that are close to q
but pairwise far from each other, this module builds a hub z of small radius
together with three connector regions p_i, one per tip, that touch z and stay
pairwise far apart.  The construction keeps a shrinking working state (a
"tripoid") and terminates because the working region loses at least one
vertex per round.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import InternalInvariantError, PreconditionError
from .graph import (Graph, UNREACHABLE, ball, components, dist,
                    has_radius_at_most, is_path, st_path)


class Leg(NamedTuple):
    """State for one tip: a tail path r from the tip to an anchor w, and a
    geodesic b of fixed length from w into the working region."""
    r: tuple[int, ...]
    w: int
    b: tuple[int, ...]


@dataclass(frozen=True)
class Tripoid:
    """Working state of the junction construction.

    c is the current working region, a connected subset of q.  xi marks the
    leg whose geodesic is allowed to be close to the others.  The remaining
    fields record the call context so the state is self-checking.
    """
    c: frozenset[int]
    xi: int
    legs: tuple[Leg, Leg, Leg]
    q: frozenset[int]
    vs: tuple[int, int, int]
    ell: int
    d: int


@dataclass(frozen=True)
class TripodResult:
    z: frozenset[int]
    p: tuple[frozenset[int], frozenset[int], frozenset[int]]
    iterations: int = 0


def check_tripoid(g: Graph, t: Tripoid) -> list[str]:
    """Violations of the tripoid invariants, empty when all hold."""
    out: list[str] = []
    ell, d = t.ell, t.d
    if not t.c:
        out.append("working region is empty")
        return out
    if not t.c <= t.q:
        out.append("working region leaves q")
    if len(components(g, t.c)) != 1:
        out.append("working region is not connected")
    ball_q = ball(g, t.q, ell)
    for i, leg in enumerate(t.legs):
        v = t.vs[i]
        if not is_path(g, leg.r):
            out.append(f"leg {i}: tail is not a path")
            continue
        if leg.r[0] != v or leg.r[-1] != leg.w:
            out.append(f"leg {i}: tail does not run from tip {v} to anchor {leg.w}")
        if dist(g, leg.r, t.c, cutoff=ell - 1) is not UNREACHABLE:
            out.append(f"leg {i}: tail comes closer than {ell} to the working region")
        if not is_path(g, leg.b):
            out.append(f"leg {i}: geodesic is not a path")
            continue
        if leg.b[0] != leg.w:
            out.append(f"leg {i}: geodesic does not start at the anchor")
        if leg.b[-1] not in t.c:
            out.append(f"leg {i}: geodesic does not end in the working region")
        if len(leg.b) - 1 != ell:
            out.append(f"leg {i}: geodesic has length {len(leg.b) - 1}, expected {ell}")
        if any(x in t.c for x in leg.b[:-1]):
            out.append(f"leg {i}: geodesic re-enters the working region")
        if dist(g, {leg.w}, t.c) != ell:
            out.append(f"leg {i}: anchor is not at distance exactly {ell} "
                       "from the working region")
        allowed = ball(g, {v}, d - ell - 1) | ball_q
        stray = set(leg.r) - allowed
        if stray:
            out.append(f"leg {i}: tail vertex {min(stray)} is neither near its "
                       "tip nor near q")
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            if j > i and dist(g, t.legs[i].r, t.legs[j].r, cutoff=ell - 1) is not UNREACHABLE:
                out.append(f"tails {i} and {j} come closer than {ell}")
            if j not in (i, t.xi):
                if dist(g, t.legs[i].r, t.legs[j].b, cutoff=ell - 1) is not UNREACHABLE:
                    out.append(f"tail {i} comes closer than {ell} to geodesic {j}")
    return out


def init_tripoid(g: Graph, vs: tuple[int, int, int], q: frozenset[int],
                 ell: int, d: int) -> Tripoid:
    """Initial tripoid from shortest tip-to-q paths.

    Preconditions checked here: ell >= 1, d >= 1, q nonempty and connected,
    and for each tip ell <= dist(tip, q) <= d with tips pairwise at distance
    at least 2*d.
    """
    if ell < 1 or d < 1:
        raise PreconditionError(f"need ell >= 1 and d >= 1, got ell={ell}, d={d}")
    if len(set(vs)) != 3:
        raise PreconditionError(f"tips must be three distinct vertices, got {vs}")
    q = g.check_vertex_set(q)
    for v in vs:
        g.check_vertex(v)
    if not q:
        raise PreconditionError("q must be nonempty")
    if len(components(g, q)) != 1:
        raise PreconditionError("q must be connected")
    for i, v in enumerate(vs):
        dv = dist(g, {v}, q)
        if dv < ell:
            raise PreconditionError(
                f"tip {v} is at distance {dv} < ell={ell} from q")
        if dv > d:
            raise PreconditionError(
                f"tip {v} is at distance {dv} > d={d} from q")
    for i in range(3):
        for j in range(i + 1, 3):
            dij = dist(g, {vs[i]}, {vs[j]}, cutoff=2 * d - 1)
            if dij is not UNREACHABLE:
                raise PreconditionError(
                    f"tips {vs[i]} and {vs[j]} are at distance {dij} < 2*d={2 * d}")
    legs = []
    for v in vs:
        s = st_path(g, {v}, q)
        assert s is not None
        cut = len(s) - 1 - ell
        legs.append(Leg(r=s[:cut + 1], w=s[cut], b=s[cut:]))
    t = Tripoid(c=q, xi=0, legs=(legs[0], legs[1], legs[2]),
                q=q, vs=tuple(vs), ell=ell, d=d)
    if __debug__:
        bad = check_tripoid(g, t)
        if bad:
            raise InternalInvariantError(f"initial tripoid invalid: {bad[0]}")
    return t


def _component_of(g: Graph, sub: frozenset[int], start: int) -> frozenset[int]:
    """Component of the induced subgraph containing start."""
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in sub and w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def _close(g: Graph, a, b, ell: int) -> bool:
    return dist(g, a, b, cutoff=ell - 1) is not UNREACHABLE


def tripod_step(g: Graph, t: Tripoid) -> Union[TripodResult, Tripoid]:
    """One round: either finish with a result or shrink the working region.

    Finishing happens when some tail or some pair of geodesics comes within
    ell of geodesic xi or of each other; otherwise the leg whose region
    endpoint separates the other two hands over a smaller region.
    """
    ell = t.ell
    legs = t.legs
    xi = t.xi

    # a tail near geodesic xi finishes with hub = that geodesic plus a link
    for alpha in range(3):
        if alpha == xi:
            continue
        if _close(g, legs[alpha].r, legs[xi].b, ell):
            link = st_path(g, set(legs[alpha].r), set(legs[xi].b))
            assert link is not None and len(link) - 1 < ell
            beta = 3 - alpha - xi
            z = frozenset(legs[xi].b) | frozenset(link)
            p: list[frozenset[int]] = [frozenset()] * 3
            p[alpha] = frozenset(legs[alpha].r)
            p[xi] = frozenset(legs[xi].r)
            p[beta] = frozenset(legs[beta].r) | frozenset(legs[beta].b) | t.c
            return TripodResult(z=z, p=(p[0], p[1], p[2]))

    if __debug__:
        # with the previous case exhausted, no tail is near any geodesic
        for i in range(3):
            for j in range(3):
                if i != j and _close(g, legs[i].r, legs[j].b, ell):
                    raise InternalInvariantError(
                        f"tail {i} near geodesic {j} after the near-xi scan")

    # two close geodesics finish with hub = both geodesics plus a link
    for alpha in range(3):
        for beta in range(alpha + 1, 3):
            if _close(g, legs[alpha].b, legs[beta].b, ell):
                link = st_path(g, set(legs[alpha].b), set(legs[beta].b))
                assert link is not None and len(link) - 1 < ell
                gamma = 3 - alpha - beta
                z = (frozenset(legs[alpha].b) | frozenset(legs[beta].b)
                     | frozenset(link))
                p = [frozenset()] * 3
                p[alpha] = frozenset(legs[alpha].r)
                p[beta] = frozenset(legs[beta].r)
                p[gamma] = frozenset(legs[gamma].r) | frozenset(legs[gamma].b) | t.c
                return TripodResult(z=z, p=(p[0], p[1], p[2]))

    # shrink: some region endpoint c_alpha separates the other two
    cs = [leg.b[-1] for leg in legs]
    if len(set(cs)) != 3:
        raise InternalInvariantError(
            "region endpoints coincide although no geodesic pair is close")
    if len(t.c) < 3:
        raise InternalInvariantError(
            "working region too small for three distinct endpoints")
    chosen = None
    for alpha in range(3):
        beta, gamma = sorted(set(range(3)) - {alpha})
        rest = t.c - {cs[alpha]}
        if sum(1 for u in g.adj[cs[alpha]] if u in t.c) <= 1:
            # removing an induced leaf keeps the region connected
            chosen = (alpha, rest)
            break
        comp = _component_of(g, rest, cs[beta])
        if cs[gamma] in comp:
            chosen = (alpha, comp)
            break
    if chosen is None:
        raise InternalInvariantError(
            "no region endpoint leaves the other two connected")
    alpha, dnew = chosen
    leg = legs[alpha]
    dwd = dist(g, {leg.w}, dnew, cutoff=ell)
    if dwd < ell:
        raise InternalInvariantError(
            f"anchor {leg.w} is at distance {dwd} < {ell} from the new region")
    if dwd == ell:
        b_new = st_path(g, {leg.w}, dnew)
        assert b_new is not None and len(b_new) - 1 == ell
        new_leg = Leg(r=leg.r, w=leg.w, b=b_new)
    else:
        w2 = leg.b[1]
        cand = [x for x in g.adj[cs[alpha]] if x in dnew]
        if not cand:
            raise InternalInvariantError(
                "new region has no neighbor of the removed endpoint")
        c2 = min(cand)
        new_leg = Leg(r=leg.r + (w2,), w=w2, b=leg.b[1:] + (c2,))
    new_legs = list(legs)
    new_legs[alpha] = new_leg
    out = Tripoid(c=dnew, xi=alpha, legs=(new_legs[0], new_legs[1], new_legs[2]),
                  q=t.q, vs=t.vs, ell=t.ell, d=t.d)
    if len(out.c) >= len(t.c):
        raise InternalInvariantError("working region did not shrink")
    return out


def check_tripod_result(g: Graph, vs: tuple[int, int, int], q: frozenset[int],
                        ell: int, d: int, res: TripodResult) -> list[str]:
    """Violations of the five output guarantees, empty when all hold."""
    out: list[str] = []
    if len(components(g, res.z)) != 1:
        out.append("hub is not connected")
    if not has_radius_at_most(g, res.z, (3 * ell) // 2):
        out.append(f"hub radius exceeds {(3 * ell) // 2}")
    if not res.z <= ball(g, q, 2 * ell - 1):
        out.append(f"hub leaves the ({2 * ell - 1})-ball around q")
    ball_q = ball(g, q, ell)
    for i in range(3):
        pi = res.p[i]
        if vs[i] not in pi:
            out.append(f"connector {i} misses its tip {vs[i]}")
        if not (res.z & pi):
            out.append(f"connector {i} does not touch the hub")
        if len(components(g, pi)) != 1:
            out.append(f"connector {i} is not connected")
        allowed = ball(g, {vs[i]}, d - ell - 1) | ball_q
        stray = pi - allowed
        if stray:
            out.append(f"connector {i} contains stray vertex {min(stray)}")
        for j in range(i + 1, 3):
            if dist(g, pi, res.p[j], cutoff=ell - 1) is not UNREACHABLE:
                out.append(f"connectors {i} and {j} come closer than {ell}")
    return out


def tripod(g: Graph, vs: tuple[int, int, int], q: frozenset[int],
           ell: int, d: int) -> TripodResult:
    """Run the junction construction to completion.

    Returns a hub z of radius at most floor(1.5*ell) inside the
    (2*ell-1)-ball around q, and three connectors p_i with v_i in p_i,
    each touching z, pairwise at distance at least ell.  Raises
    PreconditionError if the tip hypotheses fail.
    """
    state = init_tripoid(g, vs, q, ell, d)
    iterations = 0
    limit = len(state.q) + 1
    while True:
        nxt = tripod_step(g, state)
        iterations += 1
        if isinstance(nxt, TripodResult):
            res = TripodResult(z=nxt.z, p=nxt.p, iterations=iterations)
            break
        state = nxt
        if iterations > limit:
            raise InternalInvariantError("junction construction failed to terminate")
    bad = check_tripod_result(g, tuple(vs), frozenset(q), ell, d, res)
    if bad:
        raise InternalInvariantError(f"junction output check failed: {bad[0]}")
    return res
