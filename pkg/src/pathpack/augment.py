"""Growing a clean model along an approaching path.

Input: a clean fat model, one of its branch paths M_yz, and a path p from a
vertex a into the 4*ell-ball around M_yz that stays far from the rest of the
model.  Output: a model of a larger pattern, either with the edge yz
subdivided (mid vertex absorbs the approach) or additionally with a pendant
vertex whose branch set is {a}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalInvariantError, PreconditionError
from .graph import (Graph, UNREACHABLE, ball, dist, distance_map,
                    has_radius_at_most, is_path, st_path)
from .model import FatModel, PatternGraph, fatness, is_clean, part_vertices, validate_model
from .tripod import tripod


@dataclass(frozen=True)
class AugmentResult:
    """New pattern and model; attached tells whether a pendant vertex was
    added on top of the subdivision."""
    attached: bool
    pattern: PatternGraph
    model: FatModel
    sub_vertex: int
    pendant_vertex: Optional[int] = None


def _first_at_exact(g: Graph, walk: tuple[int, ...], dmap: dict[int, int],
                    target: int) -> int:
    """Index of the first walk vertex at mapped distance exactly target,
    checking that all earlier vertices are farther."""
    for idx, v in enumerate(walk):
        dv = dmap.get(v, UNREACHABLE)
        if dv == target:
            return idx
        if dv < target:
            raise InternalInvariantError(
                f"walk drops below distance {target} at index {idx} without "
                "passing through it")
    raise InternalInvariantError(f"walk never reaches distance {target}")


def augment(g: Graph, m: FatModel, a: int, yz: int, p: tuple[int, ...],
            ell: int) -> AugmentResult:
    """Extend a clean model by absorbing the approach path p.

    Preconditions: m is 8*ell-fat and 4*ell-clean, p runs from a to the
    4*ell-ball around the branch path of yz with no earlier vertex inside
    that ball, p keeps distance at least 8*ell from every branch set and at
    least 4*ell from every other branch path.

    The output model is ell-fat, its new mid branch set has radius at most
    4*ell, and every element other than yz keeps its old branch part.
    """
    if ell < 1:
        raise PreconditionError(f"ell must be at least 1, got {ell}")
    if yz not in m.branch_parts:
        raise PreconditionError(f"no pattern edge {yz}")
    if not isinstance(m.branch_parts[yz], tuple):
        raise PreconditionError("augment needs a path-valued branch part; "
                                "normalize the model first")
    if not (isinstance(p, tuple) and is_path(g, p)):
        raise PreconditionError("p must be a path in the host graph")
    if p[0] != a:
        raise PreconditionError(f"p must start at {a}, starts at {p[0]}")

    measured = fatness(g, m)
    if measured < 8 * ell:
        raise PreconditionError(
            f"augment needs an {8 * ell}-fat model, measured fatness {measured}")
    if not is_clean(g, m, 4 * ell):
        raise PreconditionError(f"augment needs a {4 * ell}-clean model")

    myz: tuple[int, ...] = m.branch_parts[yz]
    yz_set = frozenset(myz)
    approach_ball = ball(g, yz_set, 4 * ell)
    w = p[-1]
    if w not in approach_ball:
        raise PreconditionError("p does not end inside the approach ball")
    early = [v for v in p[:-1] if v in approach_ball]
    if early:
        raise PreconditionError(
            f"p enters the approach ball early at vertex {early[0]}")

    all_sets = m.vertex_union()
    if dist(g, p, all_sets, cutoff=8 * ell - 1) is not UNREACHABLE:
        raise PreconditionError(
            f"p comes closer than {8 * ell} to a branch set")
    other_parts: set[int] = set()
    for e in m.pattern.edge_ids():
        if e != yz:
            other_parts |= part_vertices(m.branch_parts[e])
    if dist(g, p, other_parts, cutoff=4 * ell - 1) is not UNREACHABLE:
        raise PreconditionError(
            f"p comes closer than {4 * ell} to another branch path")

    y, z = m.pattern.endpoints(yz)
    set_y = part_vertices(m.branch_sets[y])
    set_z = part_vertices(m.branch_sets[z])
    if myz[0] in set_y:
        walk_y = myz
    else:
        walk_y = tuple(reversed(myz))
    walk_z = tuple(reversed(walk_y))
    v_y, v_z = walk_y[0], walk_z[0]
    assert v_y in set_y and v_z in set_z

    dmap_w = distance_map(g, {w})
    assert dmap_w.get(v_y, UNREACHABLE) >= 8 * ell
    assert dmap_w.get(v_z, UNREACHABLE) >= 8 * ell

    i_y = _first_at_exact(g, walk_y, dmap_w, 4 * ell)
    i_z = _first_at_exact(g, walk_z, dmap_w, 4 * ell)
    q_y, q_z = walk_y[i_y], walk_z[i_z]
    path_q_y = walk_y[:i_y + 1]
    path_q_z = walk_z[:i_z + 1]
    set_q_y = frozenset(path_q_y)
    set_q_z = frozenset(path_q_z)

    # the trimmed stubs stay far from both branch sets
    assert dist(g, {q_y, q_z}, set_y | set_z, cutoff=4 * ell - 1) is UNREACHABLE
    assert dist(g, set_q_y, set_z, cutoff=4 * ell - 1) is UNREACHABLE
    assert dist(g, set_q_z, set_y, cutoff=4 * ell - 1) is UNREACHABLE
    assert dist(g, p, set_q_y | set_q_z, cutoff=4 * ell - 1) is UNREACHABLE

    w_y = st_path(g, {w}, {q_y})
    w_z = st_path(g, {w}, {q_z})
    assert w_y is not None and len(w_y) - 1 == 4 * ell
    assert w_z is not None and len(w_z) - 1 == 4 * ell

    stubs_close = dist(g, set_q_y, set_q_z, cutoff=ell - 1) is not UNREACHABLE

    pattern2 = m.pattern.copy()
    h, e_y, e_z = pattern2.subdivide(yz)
    sets2 = dict(m.branch_sets)
    parts2 = dict(m.branch_parts)
    del parts2[yz]

    if not stubs_close:
        near = dist(g, {a}, {w}, cutoff=2 * ell - 1) is not UNREACHABLE
        if near:
            # fold the approach into the subdivision vertex
            link = st_path(g, {a}, {w})
            assert link is not None
            mid = frozenset(w_y) | frozenset(w_z) | frozenset(link)
            sets2[h] = mid
            parts2[e_y] = path_q_y
            parts2[e_z] = path_q_z
            result = AugmentResult(attached=False, pattern=pattern2,
                                   model=FatModel(pattern2, sets2, parts2),
                                   sub_vertex=h)
        else:
            # hang a on a pendant vertex, linked by p itself
            h2, e_p = pattern2.add_leaf(h)
            mid = frozenset(w_y) | frozenset(w_z)
            sets2[h] = mid
            sets2[h2] = frozenset({a})
            parts2[e_y] = path_q_y
            parts2[e_z] = path_q_z
            parts2[e_p] = p
            result = AugmentResult(attached=True, pattern=pattern2,
                                   model=FatModel(pattern2, sets2, parts2),
                                   sub_vertex=h, pendant_vertex=h2)
    else:
        # the two stubs nearly meet: rebuild the junction around them
        link = st_path(g, set_q_y, set_q_z)
        assert link is not None and len(link) - 1 < ell
        dmap_y = distance_map(g, set_y, cutoff=4 * ell)
        dmap_z = distance_map(g, set_z, cutoff=4 * ell)
        for walk, dmap in ((walk_y, dmap_y), (walk_z, dmap_z)):
            hits = [v for v in myz if dmap.get(v, UNREACHABLE) == 3 * ell]
            if len(hits) != 1 or dmap.get(walk[3 * ell]) != 3 * ell:
                raise InternalInvariantError(
                    "cleanness violation: trim vertex not unique at layer "
                    f"{3 * ell}")
        trim_y = walk_y[3 * ell: i_y + 1]
        trim_z = walk_z[3 * ell: i_z + 1]
        region = frozenset(trim_y) | frozenset(trim_z) | frozenset(link)
        assert dist(g, link, set_y | set_z, cutoff=3 * ell) is UNREACHABLE
        assert dist(g, region, set_y | set_z, cutoff=3 * ell - 1) is UNREACHABLE
        assert dist(g, p, region, cutoff=3 * ell) is UNREACHABLE
        try:
            junction = tripod(g, (v_y, v_z, w), region, ell, 4 * ell)
        except PreconditionError as exc:
            raise InternalInvariantError(
                f"junction hypotheses failed inside augment: {exc}") from exc
        h2, e_p = pattern2.add_leaf(h)
        sets2[h] = junction.z
        sets2[h2] = frozenset({a})
        parts2[e_y] = junction.p[0]
        parts2[e_z] = junction.p[1]
        parts2[e_p] = junction.p[2] | frozenset(p)
        result = AugmentResult(attached=True, pattern=pattern2,
                               model=FatModel(pattern2, sets2, parts2),
                               sub_vertex=h, pendant_vertex=h2)

    if __debug__:
        _check_output(g, m, result, yz, ell)
    return result


def _check_output(g: Graph, m: FatModel, result: AugmentResult, yz: int,
                  ell: int) -> None:
    out = result.model
    bad = validate_model(g, out)
    if bad:
        raise InternalInvariantError(f"augment output invalid: {bad[0]}")
    post = fatness(g, out)
    if post < ell:
        raise InternalInvariantError(
            f"augment output fatness {post} below {ell}")
    mid = part_vertices(out.branch_sets[result.sub_vertex])
    if not has_radius_at_most(g, mid, 4 * ell):
        raise InternalInvariantError(
            f"mid branch set radius exceeds {4 * ell}")
    for x, part in m.branch_sets.items():
        if out.branch_sets.get(x) != part:
            raise InternalInvariantError(f"branch set of vertex {x} changed")
    for e, part in m.branch_parts.items():
        if e != yz and out.branch_parts.get(e) != part:
            raise InternalInvariantError(f"branch part of edge {e} changed")
