import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycomb.combinatorics import clique_number
from polycomb.exact_arith import ResourceError, affine_rank
from polycomb.hull import (
    NotExtremeError,
    NotFullDimensionalError,
    extreme_points,
    face_lattice,
    facets,
    facets_bruteforce,
    is_simplicial,
    neighborliness,
    nonincidence_matrix,
    skeleton_graph,
)
from polycomb.oracles import gale_facet_count, in_hull_caratheodory
from polycomb.pointset import PerturbParams, PointSet, cyclic_perturb, gen_cyclic, gen_simplex_extension
from polycomb.structures import Graph

from conftest import cube


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


class TestExtremePoints:
    def test_segment_midpoint(self):
        assert extreme_points(PointSet(1, ((0,), (1,), (2,)))).points == ((0,), (2,))

    def test_square_kept(self, square):
        assert extreme_points(square) == square

    def test_square_centre_removed(self):
        x = PointSet(2, ((0, 0), (0, 2), (2, 0), (2, 2), (1, 1)))
        assert in_hull_caratheodory((1, 1), [p for p in x if p != (1, 1)])
        assert (1, 1) not in extreme_points(x).points
        assert len(extreme_points(x)) == 4

    def test_single_point(self):
        assert len(extreme_points(PointSet(2, ((3, 4),)))) == 1

    @settings(max_examples=40)
    @given(st.sets(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                   min_size=1, max_size=9))
    def test_matches_caratheodory_oracle(self, pts):
        pts = sorted(pts)
        x = PointSet(3, tuple(pts))
        expected = [p for p in pts if not in_hull_caratheodory(p, [q for q in pts if q != p])]
        assert list(extreme_points(x).points) == expected


class TestFacets:
    def test_square(self, square):
        inc = facets(square)
        assert len(inc.facets) == 4
        assert all(len(f.vertex_set) == 2 for f in inc.facets)

    def test_simplex(self, simplex3):
        inc = facets(simplex3)
        assert len(inc.facets) == 4
        assert all(len(f.vertex_set) == 3 for f in inc.facets)

    def test_cube(self, cube3):
        inc = facets(cube3)
        assert len(inc.facets) == 6
        assert all(len(f.vertex_set) == 4 for f in inc.facets)

    def test_facet_inequalities(self, cube3):
        for x in (cube3, gen_cyclic(4, 7), gen_simplex_extension(4)):
            inc = facets(x)
            d = x.dim
            for f in inc.facets:
                on = set(f.vertex_set)
                for i, p in enumerate(x):
                    v = _dot(f.normal, p)
                    assert v == f.offset if i in on else v < f.offset
                assert affine_rank([x[i] for i in f.vertex_set]) == d - 1

    def test_not_full_dimensional(self):
        flat = PointSet(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)))
        with pytest.raises(NotFullDimensionalError) as exc:
            facets(flat)
        assert exc.value.affine_rank == 2

    def test_non_extreme_named(self):
        x = PointSet(2, ((0, 0), (0, 2), (2, 0), (2, 2), (1, 1)))
        with pytest.raises(NotExtremeError) as exc:
            facets(x)
        assert exc.value.witness == (1, 1)
        on_edge = PointSet(2, ((0, 0), (0, 2), (2, 0), (2, 2), (1, 0)))
        with pytest.raises(NotExtremeError) as exc:
            facets(on_edge)
        assert exc.value.witness == (1, 0)

    def test_dimension_cap(self):
        with pytest.raises(ResourceError):
            facets(cube(3), cap=2)

    @pytest.mark.parametrize("n", range(5, 11))
    def test_cyclic_facets_match_gale(self, n):
        assert len(facets(gen_cyclic(4, n)).facets) == gale_facet_count(4, n)

    @pytest.mark.parametrize("d,n", [(2, 6), (3, 5), (3, 8), (5, 8), (6, 9)])
    def test_cyclic_facets_match_gale_other_dims(self, d, n):
        assert len(facets(gen_cyclic(d, n)).facets) == gale_facet_count(d, n)

    def test_double_description_matches_brute_force(self):
        rng = random.Random(11)
        for trial in range(30):
            d = rng.randint(2, 4)
            pts = {tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(d + 1, 10))}
            x = extreme_points(PointSet(d, tuple(pts)))
            if affine_rank(x.points) < d:
                continue
            assert facets(x) == facets_bruteforce(x)

    def test_deterministic_order(self, cube3):
        assert facets(cube3) == facets(PointSet(3, tuple(reversed(cube3.points))))


class TestNonincidence:
    def test_simplex_is_identity_up_to_order(self, simplex3):
        m = nonincidence_matrix(facets(simplex3))
        assert m.rows == m.cols == 4
        assert all(sum(r) == 1 for r in m.bits)
        assert all(sum(col) == 1 for col in zip(*m.bits))

    def test_square(self, square):
        m = nonincidence_matrix(facets(square))
        assert (m.rows, m.cols) == (4, 4)
        assert all(sum(r) == 2 for r in m.bits)

    def test_cube(self, cube3):
        m = nonincidence_matrix(facets(cube3))
        assert (m.rows, m.cols) == (8, 6)
        assert all(sum(r) == 3 for r in m.bits)


class TestSimplicial:
    def test_cube_not_simplicial(self, cube3):
        assert not is_simplicial(facets(cube3))

    def test_perturbed_cube(self, cube3):
        assert is_simplicial(facets(cyclic_perturb(cube3)))

    def test_cyclic(self):
        assert is_simplicial(facets(gen_cyclic(4, 7)))

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_perturbed_subsets(self, d):
        rng = random.Random(100 + d)
        params = PerturbParams.minimal(d)
        allpts = list(product((0, 1), repeat=d))
        assert is_simplicial(facets(cyclic_perturb(cube(d), params)))
        for _ in range(20):
            sub = rng.sample(allpts, rng.randint(d + 1, len(allpts)))
            y = cyclic_perturb(PointSet(d, tuple(sub)), params)
            assert is_simplicial(facets(y))


class TestFaceLattice:
    def test_triangle(self):
        lat = face_lattice(facets(PointSet(2, ((0, 0), (1, 0), (0, 1)))))
        assert len(lat.faces) == 6
        assert lat.f_vector() == [3, 3]

    def test_square(self, square):
        assert face_lattice(facets(square)).f_vector() == [4, 4]

    def test_cube(self, cube3):
        lat = face_lattice(facets(cube3))
        assert lat.f_vector() == [8, 12, 6]
        assert len(lat.faces) == 26

    def test_intersection_closed(self):
        for x in (cube(3), gen_cyclic(4, 7), gen_cyclic(5, 8)):
            sets = face_lattice(facets(x)).vertex_sets()
            for a, b in combinations(sets, 2):
                m = a & b
                assert not m or m in sets

    def test_cap(self):
        with pytest.raises(ResourceError):
            face_lattice(facets(gen_cyclic(4, 10)), cap=9)

    def test_euler(self):
        # f0 - f1 + f2 - f3 = 0 for 4-polytopes (facets counted, polytope itself excluded)
        f = face_lattice(facets(gen_cyclic(4, 8))).f_vector()
        assert f[0] - f[1] + f[2] - f[3] == 0


class TestSkeleton:
    def test_square_is_four_cycle(self, square):
        g = skeleton_graph(facets(square))
        assert len(g.edges) == 4
        assert all(sum(g.has_edge(v, u) for u in range(4) if u != v) == 2 for v in range(4))

    def test_cyclic_complete(self):
        g = skeleton_graph(facets(gen_cyclic(4, 6)))
        assert g == Graph.complete(6)

    def test_simplex_extension_triangle_free(self):
        g = skeleton_graph(facets(gen_simplex_extension(3)))
        assert clique_number(g) == 2

    def test_matches_lattice_edges(self):
        for x in (cube(3), gen_cyclic(3, 7), gen_simplex_extension(3), cyclic_perturb(cube(3))):
            inc = facets(x)
            lattice_edges = {v for v, k in face_lattice(inc).faces if k == 1}
            assert set(skeleton_graph(inc).edges) == lattice_edges

    def test_connected(self):
        for x in (cube(3), gen_cyclic(5, 9), gen_simplex_extension(4)):
            assert skeleton_graph(facets(x)).is_connected()


class TestNeighborliness:
    def test_cyclic(self):
        assert neighborliness(facets(gen_cyclic(4, 6))) == 2

    def test_simplex(self, simplex3):
        assert neighborliness(facets(simplex3)) == 3

    def test_cube(self, cube3):
        assert neighborliness(facets(cube3)) == 1

    def test_cyclic_six_dims(self):
        assert neighborliness(facets(gen_cyclic(6, 9))) == 3


@pytest.mark.parametrize("d,n", [(2, 5), (2, 6), (2, 7), (2, 8), (3, 7), (3, 8)])
def test_simplicial_lattice_embeds_in_cyclic(d, n):
    """Every face of a simplicial d-polytope with n vertices has a twin in C(2d, n)."""
    rng = random.Random(d * 100 + n)
    if d == 2:
        # convex n-gon on a parabola
        p = PointSet(2, tuple((t, t * t) for t in range(n)))
    else:
        sub = rng.sample(list(product((0, 1), repeat=3)), n)
        p = cyclic_perturb(PointSet(3, tuple(sub)), PerturbParams.minimal(3))
    inc_p = facets(p)
    assert is_simplicial(inc_p)
    inc_q = facets(gen_cyclic(2 * d, n))
    assert neighborliness(inc_q) >= d
    q_faces = face_lattice(inc_q).vertex_sets()
    for face in face_lattice(inc_p).vertex_sets():
        assert face in q_faces
