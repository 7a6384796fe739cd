from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hirschkit import exact
from hirschkit.complexes import boundary_complex, is_isomorphic, ops
from hirschkit.constructions import klee_walkup_q4
from hirschkit.errors import (
    BadFacet,
    BadVertex,
    DegenerateInput,
    Infeasible,
    NotPointed,
    OriginNotInterior,
    PointAtInfinity,
    PolytopeMeetsInfinity,
    SingularMatrix,
)
from hirschkit.geometry import (
    Graph,
    HPolyhedron,
    VPolytope,
    canonical_hyperplane,
    canonical_inequality,
    cube,
    dual_graph_of,
    facets_from_vertices,
    graph_of,
    is_simple,
    is_simplicial,
    ops_geometric,
    polar,
    projective_transform,
    remove_facet,
    vertices_from_halfspaces,
    wedge,
)
from hirschkit.paths import diameter, distance


def square():
    return VPolytope([(1, 1), (1, -1), (-1, 1), (-1, -1)])


def pentagon():
    return VPolytope([(0, 2), (2, 1), (1, -1), (-1, -1), (-2, 1)])


def brute_vertices(h: HPolyhedron):
    """Independent oracle: solve every d-subset of rows directly."""
    from itertools import combinations

    d = h.dim
    out = set()
    for rows in combinations(h.inequalities, d):
        x = exact.solve_linear([a for a, _ in rows], [b for _, b in rows])
        if x is not None and h.contains(x):
            out.add(x)
    return out


def test_canonical_forms():
    assert canonical_inequality((Fraction(2, 3), Fraction(-4, 3)), 2) == ((1, -2), 3)
    assert canonical_hyperplane((-2, 4), -6) == ((1, -2), 3)


def test_square_facets():
    inc = facets_from_vertices(square())
    assert inc.n_facets == 4
    assert all(len(f) == 2 for f in inc.facets)
    g = graph_of(inc)
    assert all(g.degree(v) == 2 for v in range(4))


def test_simplex_facets_and_complete_graph():
    inc = facets_from_vertices(VPolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert inc.n_facets == 4
    assert len(graph_of(inc).edges()) == 6
    assert len(dual_graph_of(inc).edges()) == 6


def test_q4_facet_golden():
    from hirschkit.formats import golden_text, parse_document

    doc = parse_document(golden_text("q4.poly"))
    printed = sorted(doc.vertex_sets("VERTICES_IN_FACETS"))
    inc = facets_from_vertices(klee_walkup_q4())
    assert sorted(tuple(sorted(f)) for f in inc.facets) == printed
    assert is_simplicial(inc)


def test_point_and_non_vertex():
    with pytest.raises(DegenerateInput):
        facets_from_vertices(VPolytope([(1, 2)]))
    inc = facets_from_vertices(VPolytope([(0, 0), (2, 0), (0, 2), (1, 1), (Fraction(1, 2), Fraction(1, 2))]))
    assert set(inc.non_vertices) == {3, 4}
    assert inc.n_facets == 3


def test_lower_dimensional_hull():
    # a triangle sitting in 3-space
    inc = facets_from_vertices(VPolytope([(0, 0, 1), (1, 0, 1), (0, 1, 1)]))
    assert inc.dim == 2
    assert inc.n_facets == 3
    assert len(inc.equations) == 1


def test_cube_vertices():
    inc = vertices_from_halfspaces(cube(3, 0, 1))
    assert len(inc.vertices) == 8 and inc.n_facets == 6
    assert is_simple(inc) and not is_simplicial(inc)
    assert diameter(graph_of(inc)) == 3


def test_orthant():
    rows = [((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0)]
    inc = vertices_from_halfspaces(HPolyhedron(rows))
    assert len(inc.vertices) == 1
    assert len(inc.extreme_rays) == 3
    assert not inc.bounded


def test_infeasible_and_not_pointed():
    with pytest.raises(Infeasible):
        vertices_from_halfspaces(HPolyhedron([((1,), 0), ((-1,), -1)]))
    with pytest.raises(NotPointed):
        vertices_from_halfspaces(HPolyhedron([((1, 0), 1), ((-1, 0), 1)]))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))


def test_polar_cube_is_crosspolytope():
    pts = list(product((-1, 1), repeat=3))
    cross = polar(VPolytope(pts))
    assert sorted(cross.points) == sorted(
        tuple(Fraction(s if i == j else 0) for i in range(3)) for j in range(3) for s in (-1, 1)
    )


def test_polar_q4_is_simple_with_27_vertices():
    p = polar(klee_walkup_q4())
    inc = facets_from_vertices(p)
    assert len(p.points) == 27 and inc.n_facets == 9
    assert is_simple(inc)


def test_polar_requires_interior_origin():
    with pytest.raises(OriginNotInterior):
        polar(VPolytope([(0, 0), (1, 0), (0, 1)]))


def test_wedge_square():
    h = halfspaces_square()
    w = wedge(h, 0)
    inc = vertices_from_halfspaces(w)
    assert inc.n_facets == 5 and inc.dim == 3
    assert len(inc.vertices) == 6


def halfspaces_square():
    return HPolyhedron([((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1)])


def test_wedge_of_triangle_is_a_tetrahedron():
    tri = HPolyhedron([((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])
    inc = vertices_from_halfspaces(wedge(tri, 2))
    assert inc.n_facets == 4 and len(inc.vertices) == 4
    assert inc.vertices == tuple(sorted(brute_vertices(wedge(tri, 2))))


def test_wedge_pentagon_diameter_grows():
    base = facets_from_vertices(pentagon())
    h = HPolyhedron(base.facet_hyperplanes)
    for f in range(5):
        inc = vertices_from_halfspaces(wedge(h, f))
        assert inc.n_facets == 6
        assert diameter(graph_of(inc)) >= diameter(graph_of(base))
    with pytest.raises(BadFacet):
        wedge(h, 7)


def test_ops_geometric_pentagon():
    p = pentagon()
    s = ops_geometric(p, 0)
    inc = facets_from_vertices(s)
    assert len(s.points) == 6 and inc.n_facets == 8 and is_simplicial(inc)
    base = facets_from_vertices(p)
    comb = ops(boundary_complex(base), "0", ["0a", "0b"])
    assert is_isomorphic(boundary_complex(inc), comb)


def test_ops_geometric_segment_and_errors():
    s = ops_geometric(VPolytope([(0,), (1,)]), 1)
    assert facets_from_vertices(s).n_facets == 3
    with pytest.raises(BadVertex):
        ops_geometric(VPolytope([(0,), (1,), (Fraction(1, 2),)]), 2)


def test_projective_identity_and_translation():
    p = square()
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert projective_transform(p, ident).points == p.points
    shifted = projective_transform(p, [[1, 0, 3], [0, 1, -1], [0, 0, 1]])
    assert shifted.points[0] == (4, 0)


def test_projective_errors():
    p = square()
    with pytest.raises(SingularMatrix):
        projective_transform(p, [[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    with pytest.raises(PointAtInfinity):
        projective_transform(p, [[1, 0, 0], [0, 1, 0], [1, 0, -1]])
    with pytest.raises(PolytopeMeetsInfinity):
        projective_transform(p, [[1, 0, 0], [0, 1, 0], [1, 0, Fraction(1, 2)]])


def test_projective_keeps_cube_incidence():
    pts = list(product((-1, 1), repeat=3))
    p = VPolytope(pts)
    m = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [Fraction(1, 5), Fraction(1, 7), 0, 1]]
    q = projective_transform(p, m)
    assert facets_from_vertices(q).facets == facets_from_vertices(p).facets


def test_remove_facet():
    inc = vertices_from_halfspaces(remove_facet(cube(3), 0))
    assert len(inc.vertices) == 4 and len(inc.rays) == 4
    redundant = HPolyhedron(cube(2).inequalities + (((1, 1), 5),))
    assert vertices_from_halfspaces(remove_facet(redundant, 4)).vertices == vertices_from_halfspaces(redundant).vertices
    with pytest.raises(BadFacet):
        remove_facet(cube(2), 9)


# -- properties -------------------------------------------------------------

coords = st.integers(min_value=-4, max_value=4)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(coords, coords, coords), min_size=4, max_size=8, unique=True))
def test_v_to_h_to_v_roundtrip(points):
    assume(exact.affine_dim(points) == 3)
    inc = facets_from_vertices(VPolytope(points))
    h = HPolyhedron(inc.facet_hyperplanes)
    back = vertices_from_halfspaces(h)
    true_vertices = {exact.vec(points[i]) for i in range(len(points)) if i not in inc.non_vertices}
    assert set(back.vertices) == true_vertices
    assert set(back.vertices) == brute_vertices(h)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(coords, coords, coords), min_size=4, max_size=8, unique=True))
def test_polar_swaps_graphs(points):
    assume(exact.affine_dim(points) == 3)
    inc = facets_from_vertices(VPolytope(points))
    assume(all(b > 0 for _, b in inc.facet_hyperplanes))
    p = VPolytope([points[i] for i in range(len(points)) if i not in inc.non_vertices])
    inc = facets_from_vertices(p)
    dual = facets_from_vertices(polar(p))
    # polar vertex j is facet j of p; polar facets correspond to vertices of p
    g, h = dual_graph_of(inc), graph_of(dual)
    assert sorted(g.edges()) == sorted(h.edges())


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=4))
def test_simple_polytope_vertex_degree(d):
    inc = vertices_from_halfspaces(cube(d))
    g = graph_of(inc)
    assert all(g.degree(v) == d for v in range(g.n_nodes))
    assert diameter(g) == d
    assert distance(g, 0, g.n_nodes - 1) == d
