"""Induction frames and the top-level solver.

A frame is a fat model whose pieces each carry a terminal vertex, plus the
counter i that measures how much structure has been accumulated.  One round
of extend_or_hit either absorbs a terminal path that avoids the current
guarded region, raising i by one at the cost of dividing the fatness scale
by 16, or returns the branch-set centers as a hitting set.  After 2k-1
successful rounds the frame is unwound into k far-apart terminal paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .augment import augment
from .errors import (InputError, InternalInvariantError, ParameterRangeError,
                     PreconditionError)
from .forest import check_branch_bound, degree_classes, extract_z_paths
from .graph import (Graph, UNREACHABLE, ball, components, dist, distance_map,
                    has_radius_at_most, radius_center, st_path)
from .model import FatModel, PatternGraph, fat_to_clean, fatness, part_vertices, validate_model
from .oracle import far_pair, hitting_violations, packing_violations

MAX_RADIUS = 2 ** 62


@dataclass(frozen=True)
class SolveParams:
    """Validated solver parameters with the derived bounds."""
    k: int
    d: int
    coarse: bool = False

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and self.k >= 1):
            raise InputError(f"k must be a positive integer, got {self.k!r}")
        if not (isinstance(self.d, int) and self.d >= 1):
            raise InputError(f"d must be a positive integer, got {self.d!r}")
        if 256 ** self.k * self.d >= MAX_RADIUS:
            raise ParameterRangeError(
                f"hitting radius 256^{self.k} * {self.d} exceeds the "
                f"supported range (< 2^62)")

    @property
    def bound_f(self) -> int:
        """Maximum hitting-set size, 4k - 4."""
        return 4 * self.k - 4

    @property
    def bound_g(self) -> int:
        """Hitting-ball radius, 256^k * d."""
        return 256 ** self.k * self.d

    @property
    def frame_r(self) -> int:
        """Branch-set radius budget kept by every frame."""
        return 4 * 16 ** (2 * self.k - 2) * self.d

    def frame_ell(self, i: int) -> int:
        """Fatness scale of the frame at induction step i."""
        return 16 ** (2 * self.k - 1 - i) * self.d


@dataclass(frozen=True)
class PackingCertificate:
    paths: tuple[tuple[int, ...], ...]
    d: int
    coarse: bool


@dataclass(frozen=True)
class HittingCertificate:
    x: frozenset[int]
    radius: int
    coarse_threshold: Optional[int] = None


Certificate = Union[PackingCertificate, HittingCertificate]


@dataclass(frozen=True)
class HitSet:
    """Intermediate hitting outcome of one extension round."""
    x: frozenset[int]


@dataclass(frozen=True)
class Frame:
    model: FatModel
    i: int
    ell: int
    r: int
    coarse: bool
    a_set: frozenset[int]

    @property
    def pattern(self) -> PatternGraph:
        return self.model.pattern


def empty_frame(a: frozenset[int], ell: int, r: int, coarse: bool) -> Frame:
    pattern = PatternGraph()
    return Frame(model=FatModel(pattern), i=0, ell=ell, r=r, coarse=coarse,
                 a_set=frozenset(a))


def validate_frame(g: Graph, fr: Frame) -> list[str]:
    """All violations of the frame conditions, empty when the frame is valid."""
    out: list[str] = []
    if fr.ell < 1:
        out.append(f"fatness scale must be positive, got {fr.ell}")
    if fr.r < 0:
        out.append(f"radius budget must be nonnegative, got {fr.r}")
    bad_model = validate_model(g, fr.model)
    if bad_model:
        return out + [f"model: {msg}" for msg in bad_model]
    dc = degree_classes(fr.pattern)
    expected = len(dc.v0) + len(dc.v1) + len(dc.v2) - dc.m
    if fr.i != expected:
        out.append(f"counter i={fr.i} does not match structure value {expected}")
    if not check_branch_bound(fr.pattern):
        out.append("pattern violates the leaf/branching bound")
    fat = fatness(g, fr.model)
    if fat < fr.ell:
        out.append(f"model fatness {fat} below the frame scale {fr.ell}")
    for x in fr.pattern.vertex_ids():
        vs = part_vertices(fr.model.branch_sets[x])
        if not has_radius_at_most(g, vs, fr.r):
            out.append(f"branch set of vertex {x} has radius above {fr.r}")
    for x in sorted(dc.v1 | dc.v2):
        vs = part_vertices(fr.model.branch_sets[x])
        if not (vs & fr.a_set):
            out.append(f"branch set of vertex {x} carries no terminal")
    for x in sorted(dc.v0):
        raw = fr.model.branch_sets[x]
        if not isinstance(raw, tuple):
            out.append(f"isolated vertex {x} must carry an ordered terminal path")
            continue
        if len(raw) < 2:
            out.append(f"terminal path of isolated vertex {x} is too short")
        elif not (raw[0] in fr.a_set and raw[-1] in fr.a_set):
            out.append(f"path of isolated vertex {x} does not end in terminals")
    if fr.coarse and dc.v0:
        out.append("coarse frames must not contain isolated vertices")
    return out


def _assert_valid(g: Graph, fr: Frame, where: str) -> None:
    bad = validate_frame(g, fr)
    if bad:
        raise InternalInvariantError(f"{where}: {bad[0]}")


def extend_or_hit(g: Graph, fr: Frame) -> Union[Frame, HitSet]:
    """One induction round.

    The frame must sit at fatness scale 16*ell with r >= 4*ell.  Either a
    new frame at scale ell with counter i+1 comes back, or the branch-set
    centers form a hitting set: no terminal path (in coarse mode, no
    ell-coarse terminal path) avoids their (r + 8*ell)-balls.
    """
    if fr.ell % 16 != 0:
        raise PreconditionError(f"frame scale {fr.ell} is not divisible by 16")
    ell = fr.ell // 16
    if ell < 1:
        raise PreconditionError(f"frame scale {fr.ell} too small to step down")
    if fr.r < 4 * ell:
        raise PreconditionError(f"radius budget {fr.r} below 4*ell={4 * ell}")

    clean = fat_to_clean(g, fr.model, 8 * ell, 4 * ell)

    centers: dict[int, int] = {}
    for x in clean.pattern.vertex_ids():
        c, rad = radius_center(g, part_vertices(clean.branch_sets[x]))
        if rad > fr.r:
            raise InternalInvariantError(
                f"branch set of vertex {x} has radius {rad} above budget {fr.r}")
        centers[x] = c
    hit = frozenset(centers.values())
    if len(hit) != len(centers):
        raise InternalInvariantError("branch-set centers collide")

    guard = ball(g, hit, fr.r + 8 * ell)
    avoid = frozenset(range(g.n)) - guard
    comps = components(g, avoid)
    cands = []
    for comp in comps:
        averts = sorted(fr.a_set & comp)
        if len(averts) >= 2:
            cands.append((comp, averts))
    cands.sort(key=lambda item: item[1][0])

    pair = None
    comp_of_pair = None
    for comp, averts in cands:
        found = far_pair(g, averts, ell)
        if found is not None:
            pair, comp_of_pair = found, comp
            break
    if pair is None and cands:
        comp_of_pair, averts = cands[0]
        pair = (averts[0], averts[1])
    if pair is None:
        return HitSet(x=hit)

    path = st_path(g, {pair[0]}, {pair[1]}, within=avoid)
    if path is None:
        raise InternalInvariantError("chosen terminal pair is not connected "
                                     "off the guarded region")
    a1, a2 = path[0], path[-1]

    parts_union: set[int] = set()
    for e in clean.pattern.edge_ids():
        parts_union |= part_vertices(clean.branch_parts[e])

    near_map = distance_map(g, parts_union, cutoff=4 * ell) if parts_union else {}
    touch_idx = next((idx for idx, v in enumerate(path) if v in near_map), None)

    if touch_idx is not None:
        # the path approaches a branch path: absorb it into the model
        w = path[touch_idx]
        trimmed = path[:touch_idx + 1]
        target = None
        for e in clean.pattern.edge_ids():
            de = dist(g, {w}, part_vertices(clean.branch_parts[e]), cutoff=4 * ell)
            if de is not UNREACHABLE:
                target = e
                break
        assert target is not None
        grown = augment(g, clean, a1, target, trimmed, ell)
        new_frame = Frame(model=grown.model, i=fr.i + 1, ell=ell, r=fr.r,
                          coarse=fr.coarse, a_set=fr.a_set)
    else:
        close_pair = dist(g, {a1}, {a2}, cutoff=ell - 1) is not UNREACHABLE
        if not close_pair:
            # far pair, far from the model: open a new two-vertex component
            pattern2 = clean.pattern.copy()
            h1, h2, e = pattern2.add_k2()
            sets2 = dict(clean.branch_sets)
            parts2 = dict(clean.branch_parts)
            sets2[h1] = frozenset({a1})
            sets2[h2] = frozenset({a2})
            parts2[e] = path
            new_frame = Frame(model=FatModel(pattern2, sets2, parts2),
                              i=fr.i + 1, ell=ell, r=fr.r, coarse=fr.coarse,
                              a_set=fr.a_set)
        elif fr.coarse:
            # every avoiding terminal pair is close, so no ell-coarse
            # terminal path avoids the guarded region
            return HitSet(x=hit)
        else:
            # close pair: store its connecting geodesic as a finished path
            link = st_path(g, {a1}, {a2})
            assert link is not None and len(link) - 1 < ell
            pattern2 = clean.pattern.copy()
            h = pattern2.add_isolated()
            sets2 = dict(clean.branch_sets)
            sets2[h] = link
            new_frame = Frame(model=FatModel(pattern2, sets2, dict(clean.branch_parts)),
                              i=fr.i + 1, ell=ell, r=fr.r, coarse=fr.coarse,
                              a_set=fr.a_set)

    _assert_valid(g, new_frame, "extension produced an invalid frame")
    return new_frame


def frame_to_packing(g: Graph, fr: Frame) -> list[tuple[int, ...]]:
    """Unwind a frame with odd counter i = 2t-1 into at least t terminal
    paths, pairwise at distance at least fr.ell."""
    if fr.i % 2 != 1:
        raise PreconditionError(f"counter must be odd to unwind, got {fr.i}")
    t = (fr.i + 1) // 2
    dc = degree_classes(fr.pattern)
    finished: list[tuple[int, ...]] = []
    for x in sorted(dc.v0):
        raw = fr.model.branch_sets[x]
        if not isinstance(raw, tuple):
            raise PreconditionError(
                f"isolated vertex {x} does not carry an ordered terminal path")
        finished.append(raw)

    trimmed = fr.pattern.copy()
    for x in sorted(dc.v0):
        trimmed.remove_vertex(x)
    marked = dc.v1 | dc.v2
    routes = extract_z_paths(trimmed, marked)

    for route in routes:
        first, last = route[0], route[-1]
        wit_first = min(fr.a_set & part_vertices(fr.model.branch_sets[first]))
        wit_last = min(fr.a_set & part_vertices(fr.model.branch_sets[last]))
        region: set[int] = set()
        for v in route:
            region |= part_vertices(fr.model.branch_sets[v])
        for u, v in zip(route, route[1:]):
            e = fr.pattern.edge_between(u, v)
            assert e is not None
            region |= part_vertices(fr.model.branch_parts[e])
        path = st_path(g, {wit_first}, {wit_last}, within=frozenset(region))
        if path is None or len(path) < 2:
            raise InternalInvariantError(
                "terminal witnesses are not linked inside their model region")
        finished.append(path)

    if len(finished) < t:
        raise InternalInvariantError(
            f"unwound only {len(finished)} paths, needed {t}")
    if __debug__:
        for idx, p1 in enumerate(finished):
            for p2 in finished[idx + 1:]:
                dd = dist(g, p1, p2, cutoff=fr.ell - 1)
                if dd is not UNREACHABLE:
                    raise InternalInvariantError(
                        f"unwound paths come within {dd} < {fr.ell}")
    return finished


def solve(g: Graph, a: frozenset[int], params: SolveParams,
          validate: bool = False) -> Certificate:
    """Full run: either k terminal paths pairwise at distance >= d (in
    coarse mode also with far endpoints), or a hitting set of at most
    4k-4 vertices whose balls of radius 256^k * d meet every (coarse)
    terminal path.

    With validate=True every intermediate frame is checked against its
    scheduled scale and the final certificate is re-verified.
    """
    a = g.check_vertex_set(a)
    k = params.k
    fr = empty_frame(a, params.frame_ell(0), params.frame_r, params.coarse)
    for i in range(2 * k - 1):
        if validate:
            if fr.i != i or fr.ell != params.frame_ell(i):
                raise InternalInvariantError(
                    f"frame schedule mismatch at step {i}")
            _assert_valid(g, fr, f"frame invalid before step {i}")
        step_ell = fr.ell // 16
        out = extend_or_hit(g, fr)
        if isinstance(out, HitSet):
            if len(out.x) > 2 * fr.i or len(out.x) > params.bound_f:
                raise InternalInvariantError(
                    f"hitting set size {len(out.x)} exceeds its bound")
            if fr.r + 8 * step_ell > params.bound_g:
                raise InternalInvariantError("guard radius exceeds the bound")
            cert: Certificate = HittingCertificate(
                x=out.x, radius=params.bound_g,
                coarse_threshold=params.bound_g if params.coarse else None)
            if validate:
                _verify_certificate(g, a, params, cert)
            return cert
        fr = out
    if validate:
        _assert_valid(g, fr, "final frame invalid")
    paths = frame_to_packing(g, fr)
    paths.sort(key=lambda p: (min(p), p))
    cert = PackingCertificate(paths=tuple(paths[:k]), d=params.d,
                              coarse=params.coarse)
    if validate:
        _verify_certificate(g, a, params, cert)
    return cert


def _verify_certificate(g: Graph, a: frozenset[int], params: SolveParams,
                        cert: Certificate) -> None:
    if isinstance(cert, PackingCertificate):
        bad = packing_violations(g, a, cert.paths, params.k, params.d,
                                 params.coarse)
    else:
        bad = hitting_violations(g, a, cert.x, cert.radius, params.bound_f,
                                 cert.coarse_threshold)
    if bad:
        raise InternalInvariantError(f"certificate failed verification: {bad[0]}")
