"""Named extremal families: construction, recognition, feasibility."""

import pytest

import oracles
import samples
from szegedtools import (
    BundleSpec,
    InfeasibleError,
    QuarterInt,
    are_isomorphic,
    as_bundle,
    bundle,
    cactus_profile,
    cycle,
    edge_revised_szeged,
    graph_from_edges,
    is_cactus,
    is_quadrangle_bundle,
    is_tailed_quadrangle_bundle,
    path,
    quadrangle_bundle,
    star,
    tailed_quadrangle_bundle,
    triangle_bundle,
)


class TestBasicShapes:
    def test_cycle(self):
        g = cycle(5)
        assert (g.n, g.m) == (5, 5)
        assert all(g.degree(v) == 2 for v in range(5))
        with pytest.raises(InfeasibleError):
            cycle(2)

    def test_path(self):
        g = path(4)
        assert (g.n, g.m) == (4, 3)
        assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]
        assert path(1).m == 0

    def test_star(self):
        g = star(5)
        assert (g.n, g.m) == (5, 4)
        assert sorted(g.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]
        assert star(1).m == 0


class TestBundle:
    def test_two_triangles_is_butterfly(self):
        assert are_isomorphic(bundle(BundleSpec((3, 3), 0)), samples.butterfly())

    def test_vertex_and_edge_counts(self):
        spec = BundleSpec((3, 4, 5), 2)
        g = bundle(spec)
        # each length-L cycle adds L-1 vertices beyond the shared hub
        assert g.n == 1 + (2 + 3 + 4) + 2
        assert g.m == (3 + 4 + 5) + 2

    def test_is_cactus_with_end_block_cycles(self):
        prof = cactus_profile(bundle(BundleSpec((3, 4, 4), 3)))
        assert prof.is_cactus
        assert all(prof.end_block_flags)

    def test_no_cycles_is_star(self):
        assert are_isomorphic(bundle(BundleSpec((), 3)), star(4))

    def test_rejects_bad_specs(self):
        with pytest.raises(InfeasibleError):
            bundle(BundleSpec((2,), 0))
        with pytest.raises(InfeasibleError):
            bundle(BundleSpec((3,), -1))


class TestAsBundle:
    def test_roundtrip_sorts_lengths(self):
        spec = as_bundle(bundle(BundleSpec((4, 3), 2)))
        assert spec == BundleSpec((3, 4), 2)

    def test_star_and_short_paths(self):
        assert as_bundle(star(5)) == BundleSpec((), 4)
        assert as_bundle(path(3)) == BundleSpec((), 2)
        assert as_bundle(path(2)) == BundleSpec((), 1)
        assert as_bundle(graph_from_edges(1, [])) == BundleSpec((), 0)

    def test_lone_cycle(self):
        assert as_bundle(cycle(4)) == BundleSpec((4,), 0)

    def test_non_bundles(self):
        assert as_bundle(path(4)) is None
        assert as_bundle(samples.two_triangles_bridge()) is None
        assert as_bundle(samples.c4_opposite()) is None
        assert as_bundle(samples.triangle_spread()) is None

    def test_single_cycle_hub_is_any_attachment_vertex(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 4)])
        assert as_bundle(g) == BundleSpec((4,), 1)

    def test_two_edge_tail_is_not_a_bundle(self):
        # all pendant edges must attach directly to the hub
        assert as_bundle(tailed_quadrangle_bundle(6, 1)) is None


class TestTriangleBundle:
    def test_smallest(self):
        assert are_isomorphic(triangle_bundle(3, 1), cycle(3))
        assert are_isomorphic(triangle_bundle(4, 1), samples.paw())
        assert are_isomorphic(triangle_bundle(5, 2), samples.butterfly())

    def test_spec(self):
        assert as_bundle(triangle_bundle(8, 2)) == BundleSpec((3, 3), 3)

    def test_golden_value(self):
        assert edge_revised_szeged(triangle_bundle(5, 1)) == QuarterInt(85)

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            triangle_bundle(4, 2)
        with pytest.raises(InfeasibleError):
            triangle_bundle(2, 1)


class TestQuadrangleBundle:
    def test_smallest(self):
        assert are_isomorphic(quadrangle_bundle(4, 1), cycle(4))

    def test_spec(self):
        assert as_bundle(quadrangle_bundle(7, 2)) == BundleSpec((4, 4), 0)
        assert as_bundle(quadrangle_bundle(9, 2)) == BundleSpec((4, 4), 2)

    def test_golden_value(self):
        assert edge_revised_szeged(quadrangle_bundle(5, 1)) == QuarterInt(105)

    def test_infeasible(self):
        with pytest.raises(InfeasibleError):
            quadrangle_bundle(6, 2)

    def test_recognizer(self):
        g = quadrangle_bundle(9, 2)
        assert is_quadrangle_bundle(g)
        assert is_quadrangle_bundle(g, 2)
        assert not is_quadrangle_bundle(g, 1)
        assert not is_quadrangle_bundle(triangle_bundle(5, 1))
        assert not is_quadrangle_bundle(samples.c4_opposite())
        assert is_quadrangle_bundle(cycle(4), 1)

    def test_recognizer_matches_construction_at_larger_sizes(self):
        # beyond the canonical-form cap, recognition is structural
        g = quadrangle_bundle(25, 3)
        assert g.n == 25
        assert is_quadrangle_bundle(g, 3)
        assert not is_quadrangle_bundle(g, 2)


class TestTailedQuadrangleBundle:
    def test_shape(self):
        g = tailed_quadrangle_bundle(6, 1)
        assert (g.n, g.m) == (6, 6)
        # exactly one vertex of degree 1 at the end of a length-2 tail
        degs = sorted(g.degree(v) for v in range(g.n))
        assert degs == [1, 2, 2, 2, 2, 3]
        assert is_cactus(g)

    def test_value(self):
        assert edge_revised_szeged(tailed_quadrangle_bundle(6, 1)) == QuarterInt(166)

    def test_infeasible_without_a_pendant_to_extend(self):
        # the base with n-1 vertices must keep at least one hub pendant
        with pytest.raises(InfeasibleError):
            tailed_quadrangle_bundle(5, 1)
        with pytest.raises(InfeasibleError):
            tailed_quadrangle_bundle(8, 2)
        assert tailed_quadrangle_bundle(9, 2).n == 9

    def test_recognizer(self):
        g = tailed_quadrangle_bundle(9, 2)
        assert is_tailed_quadrangle_bundle(g)
        assert is_tailed_quadrangle_bundle(g, 2)
        assert not is_tailed_quadrangle_bundle(g, 1)
        assert not is_tailed_quadrangle_bundle(quadrangle_bundle(7, 2))
        assert not is_tailed_quadrangle_bundle(samples.butterfly())

    def test_recognizer_at_larger_sizes(self):
        g = tailed_quadrangle_bundle(20, 4)
        assert is_tailed_quadrangle_bundle(g, 4)
        assert not is_tailed_quadrangle_bundle(quadrangle_bundle(20, 4), 4)


class TestFamilyValuesAgainstOracle:
    @pytest.mark.parametrize(
        "factory",
        [
            lambda: triangle_bundle(7, 2),
            lambda: quadrangle_bundle(8, 2),
            lambda: tailed_quadrangle_bundle(7, 1),
            lambda: bundle(BundleSpec((3, 5), 2)),
        ],
    )
    def test_direct_value(self, factory):
        g = factory()
        assert edge_revised_szeged(g).as_fraction() == oracles.edge_revised_szeged(
            g.n, g.edges
        )
