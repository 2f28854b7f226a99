import random

import pytest

from helpers import check_forest_paths, random_subcubic_forest
from pathpack import PatternGraph, PreconditionError
from pathpack.forest import check_branch_bound, degree_classes, extract_z_paths


def path_pattern(n: int) -> PatternGraph:
    return PatternGraph.from_parts(range(n), {i: (i, i + 1) for i in range(n - 1)})


def star_pattern() -> PatternGraph:
    """Center 0 with three legs of length two: 0-1-2, 0-3-4, 0-5-6."""
    return PatternGraph.from_parts(
        range(7),
        {0: (0, 1), 1: (1, 2), 2: (0, 3), 3: (3, 4), 4: (0, 5), 5: (5, 6)})


class TestDegreeClasses:
    def test_path(self):
        dc = degree_classes(path_pattern(3))
        assert dc.v0 == frozenset()
        assert dc.v1 == frozenset({0, 2})
        assert dc.v2 == frozenset({1})
        assert dc.v3 == frozenset()
        assert dc.m == 1
        assert dc.m_total == 1

    def test_isolated_vertices_counted_separately(self):
        f = path_pattern(3)
        f.add_vertex()
        dc = degree_classes(f)
        assert dc.v0 == frozenset({3})
        assert dc.m == 1
        assert dc.m_total == 2

    def test_branching(self):
        dc = degree_classes(star_pattern())
        assert dc.v3 == frozenset({0})
        assert dc.v1 == frozenset({2, 4, 6})
        assert dc.v2 == frozenset({1, 3, 5})

    def test_cycle_raises(self):
        f = PatternGraph.from_parts(range(3), {0: (0, 1), 1: (1, 2), 2: (2, 0)})
        with pytest.raises(PreconditionError):
            degree_classes(f)


class TestBranchBound:
    def test_holds_on_samples(self):
        assert check_branch_bound(path_pattern(5))
        assert check_branch_bound(star_pattern())
        two_k2 = PatternGraph.from_parts(range(4), {0: (0, 1), 1: (2, 3)})
        assert check_branch_bound(two_k2)

    def test_subcubic_forests_always_satisfy_it(self):
        # in a subcubic tree with >= 2 vertices, |V1| = |V3| + 2 exactly
        rng = random.Random(7)
        for _ in range(50):
            f = random_subcubic_forest(rng.randint(1, 40), rng)
            assert check_branch_bound(f)


class TestExtractZPaths:
    def test_endpoint_pair_on_path(self):
        f = path_pattern(5)
        assert extract_z_paths(f, frozenset({0, 4})) == [(0, 1, 2, 3, 4)]

    def test_interior_pair_on_path(self):
        f = path_pattern(5)
        assert extract_z_paths(f, frozenset({1, 3})) == [(1, 2, 3)]

    def test_branching_split(self):
        # all marks sit behind the branching center
        f = star_pattern()
        assert extract_z_paths(f, frozenset({2, 4, 6})) == [(2, 1, 0, 3, 4)]

    def test_two_trees_and_isolated_mark(self):
        f = path_pattern(3)
        v = f.add_vertex()
        assert extract_z_paths(f, frozenset({0, 2, v})) == [(0, 1, 2)]

    def test_no_marks(self):
        assert extract_z_paths(path_pattern(4), frozenset()) == []

    def test_input_not_mutated(self):
        f = star_pattern()
        before = (f.n_vertices, f.n_edges)
        extract_z_paths(f, frozenset({2, 4, 6}))
        assert (f.n_vertices, f.n_edges) == before

    def test_cycle_raises(self):
        f = PatternGraph.from_parts(range(3), {0: (0, 1), 1: (1, 2), 2: (2, 0)})
        with pytest.raises(PreconditionError):
            extract_z_paths(f, frozenset({0}))

    def test_marked_branch_vertex_raises(self):
        f = star_pattern()
        with pytest.raises(PreconditionError):
            extract_z_paths(f, frozenset({0}))

    def test_unknown_mark_raises(self):
        f = path_pattern(3)
        with pytest.raises(PreconditionError):
            extract_z_paths(f, frozenset({99}))


def test_random_forest_sweep():
    rng = random.Random(2024)
    for _ in range(200):
        f = random_subcubic_forest(rng.randint(1, 60), rng)
        eligible = [v for v in f.vertex_ids() if f.degree(v) <= 2]
        z = frozenset(v for v in eligible if rng.random() < 0.4)
        paths = extract_z_paths(f, z)
        check_forest_paths(f, z, paths)
        marked_trees = sum(1 for comp in f.components() if z & comp)
        need = (len(z) - marked_trees + 1) // 2
        assert len(paths) >= need
