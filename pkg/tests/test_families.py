import itertools
from math import comb

import pytest

from soltes.families import (
    FamilySpec,
    build,
    dual_k5_3,
    duplicated_dual_k4,
    family_names,
    hemi_dodecahedron,
    interval_family,
    multipartite_hk,
    small_example,
    star_dual_of_graph,
    steiner_2_4_13,
    theorem_order_n,
    triangle_dual_of_cubic,
    twelve_vertex_6uniform,
)
from soltes.formats import parse_graph6
from soltes.hypergraph import (
    clique,
    degrees,
    delete_vertex,
    is_isomorphic,
    uniformity,
    validate,
)
from soltes.metrics import delta_report, diameter, is_soltes, wiener
from soltes.screen import appendix_fixtures
from tests.conftest import petersen


class TestSmallExamples:
    @pytest.mark.parametrize("n", [5, 6, 7, 8])
    def test_deletion_invariant(self, n):
        h = small_example(n)
        assert validate(h) == []
        rep = delta_report(h)
        assert rep.verdict
        assert rep.w == comb(n, 2)

    def test_every_deletion_connected_with_same_total(self):
        for n in (5, 6, 7, 8):
            h = small_example(n)
            assert all(
                wiener(delete_vertex(h, v)) == comb(n, 2) for v in range(n))

    def test_order_7_degree_range(self):
        d = degrees(small_example(7))
        assert d.delta_min == 4 and d.delta_max == 6

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            small_example(9)


class TestOrderN:
    @pytest.mark.parametrize("n", list(range(9, 21)))
    def test_all_orders(self, n):
        h = theorem_order_n(n)
        assert validate(h) == []
        rep = delta_report(h)
        assert rep.verdict
        assert rep.w == comb(n, 2)
        assert all(diameter(delete_vertex(h, v)) == 2 for v in range(n))

    def test_seed_reproducible(self):
        assert theorem_order_n(13, seed=7) == theorem_order_n(13, seed=7)

    def test_too_small(self):
        with pytest.raises(ValueError):
            theorem_order_n(8)


class TestIntervalFamily:
    @pytest.mark.parametrize("m", [4, 5, 6])
    def test_deletion_invariant(self, m):
        h = interval_family(m)
        assert h.n == comb(m + 1, 2) + 1
        assert is_soltes(h)

    def test_too_small(self):
        with pytest.raises(ValueError):
            interval_family(3)

    def test_m4_shape(self):
        # [DERIVED] m=4: n=11, uniform of rank k=C(4,2)=6
        h = interval_family(4)
        assert h.n == 11
        assert uniformity(h) == 6
        assert wiener(h) == comb(11, 2)


class TestSteiner:
    def test_design_parameters(self):
        h = steiner_2_4_13()
        assert h.n == 13 and h.m == 13
        assert uniformity(h) == 4
        d = degrees(h)
        assert d.delta_min == d.delta_max == 4
        # every pair of points in exactly one block
        count = {p: 0 for p in itertools.combinations(range(13), 2)}
        for e in h.edges:
            for p in itertools.combinations(e, 2):
                count[p] += 1
        assert set(count.values()) == {1}

    def test_deletion_invariant(self):
        assert is_soltes(steiner_2_4_13())


class TestNamedUniformExamples:
    def test_hemi_dodecahedron(self):
        h = hemi_dodecahedron()
        assert h.n == 10 and h.m == 6
        assert uniformity(h) == 5
        assert degrees(h).delta_min == degrees(h).delta_max == 3
        assert diameter(h) == 1
        assert is_soltes(h)

    def test_dual_k5_3(self):
        h = dual_k5_3()
        assert h.n == 10 and h.m == 5 and uniformity(h) == 6
        assert is_soltes(h)

    def test_duplicated_dual_k4(self):
        h = duplicated_dual_k4()
        assert h.n == 12 and uniformity(h) == 6
        assert is_soltes(h)

    def test_twelve_vertex_isomorphic_to_duplicated_dual(self):
        # the two 12-vertex 6-uniform constructions coincide
        assert is_isomorphic(twelve_vertex_6uniform(), duplicated_dual_k4())


class TestMultipartite:
    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_deletion_invariant(self, k):
        h = multipartite_hk(k)
        assert validate(h) == []
        assert h.n == k * (2 * k + 3)
        assert is_soltes(h)

    def test_k3_shape(self):
        h = multipartite_hk(3)
        pairs = [e for e in h.edges if len(e) == 2]
        hyper = [e for e in h.edges if len(e) > 2]
        # pair edges cross classes; the 3 hyperedges are the classes
        assert all(u % 3 != v % 3 for u, v in pairs)
        assert sorted(len(e) for e in hyper) == [9, 9, 9]
        # the removed 2-factor: no consecutive pair survives
        assert all(v != u + 1 for u, v in pairs)


class TestDualTransforms:
    def test_star_dual_of_census_records(self):
        # [PAPER] all four census graphs yield 2-regular 4-uniform
        # deletion-invariant duals with diameters 2, 7, 6, 8
        diams = []
        for rec in appendix_fixtures():
            g = parse_graph6(rec)
            d = star_dual_of_graph(g)
            assert uniformity(d) == 4
            deg = degrees(d)
            assert deg.delta_min == deg.delta_max == 2
            assert is_soltes(d)
            diams.append(diameter(d))
        assert diams == [2, 7, 6, 8]

    def test_star_dual_of_petersen_not_invariant(self):
        d = star_dual_of_graph(petersen())
        assert uniformity(d) == 3
        assert not is_soltes(d)

    def test_triangle_dual_stars_only_matches_star_dual(self):
        g = petersen()
        assert triangle_dual_of_cubic(g, stars_only=True) == \
            star_dual_of_graph(g)

    def test_triangle_dual_of_k4(self):
        k4 = clique(4, 2)
        stars = triangle_dual_of_cubic(k4, stars_only=True)
        full = triangle_dual_of_cubic(k4)
        # 4 vertex stars plus 4 triangle triples
        assert stars.m == 4 and full.m == 8
        assert uniformity(full) == 3

    def test_triangle_dual_rejects_non_cubic(self):
        with pytest.raises(ValueError):
            triangle_dual_of_cubic(parse_graph6(appendix_fixtures()[0]))


class TestBuildDispatcher:
    def test_names_cover_constructors(self):
        names = family_names()
        for required in ("small_example", "steiner_2_4_13",
                         "hemi_dodecahedron", "multipartite_hk"):
            assert required in names

    def test_build_small_example(self):
        assert build(FamilySpec("small_example", (6,))) == small_example(6)

    def test_build_normalizes_dashes(self):
        assert build(FamilySpec("hemi-dodecahedron")) == hemi_dodecahedron()

    def test_build_unknown(self):
        with pytest.raises(ValueError):
            build(FamilySpec("no_such_family"))

    def test_build_wrong_arity(self):
        with pytest.raises(ValueError):
            build(FamilySpec("steiner_2_4_13", (3,)))
