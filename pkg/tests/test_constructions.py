from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hirschkit import constructions as C
from hirschkit.complexes import (
    antistar,
    connected_components,
    dual_graph,
    is_closed_pseudomanifold,
    is_two_sphere,
)
from hirschkit.errors import BadInput, InfeasibleMargins
from hirschkit.geometry import facets_from_vertices, graph_of, is_simple, vertices_from_halfspaces
from hirschkit.paths import (
    diameter,
    distance,
    dual_diameter,
    dual_distance,
    hirsch_sharpness,
    monotone_distance,
    unique_max,
)

# triangles of K exactly as printed, row by row
PRINTED_K = """
amr mbr bnr ncr cor odr dpr par
amt mbt bnt nct cot odt dpt pat
aoq obq bpq pcq cmq mdq dnq naq
aos obs bps pcs cms mds dns nas
""".split()


def test_q4_points_and_labels():
    p = C.klee_walkup_q4()
    assert p.labels == tuple("wabcdefgh")
    assert p.points[0] == (0, 0, 0, -2)
    assert p.points[8] == (1, 2, -1, 3)


def test_q4_antistar_and_distance():
    q = C.q4_boundary()
    assert antistar(q, "w").n_facets == 15
    assert dual_distance(q, "abcd", "efgh") == 5


@pytest.mark.parametrize("k", range(1, 7))
def test_klee_family_diameter(k):
    l = C.klee_3sphere_family(k)
    assert l.n_vertices == 3 + 3 * k
    assert dual_diameter(l) == 2 * k + 1 == 2 * l.n_vertices // 3 - 1
    assert dual_diameter(C.klee_3sphere_family(k, 1)) == 2 * k + 1
    assert dual_diameter(C.klee_3sphere_family(k, 2)) == 2 * k + 2
    for extra in range(3):
        assert is_two_sphere(C.klee_3sphere_family(k, extra))


def test_klee_family_rejects_bad_parameters():
    with pytest.raises(BadInput):
        C.klee_3sphere_family(0)
    with pytest.raises(BadInput):
        C.klee_3sphere_family(2, 3)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("copies", [1, 2, 3, 4])
def test_crosspolytope_chain(d, copies):
    l = C.crosspolytope_chain(d, copies)
    assert l.n_vertices == (copies + 1) * d
    assert dual_diameter(l) == 1 + copies * (d - 1)
    assert is_closed_pseudomanifold(l)


def test_crosspolytope_chain_d3_three_copies():
    assert dual_diameter(C.crosspolytope_chain(3, 3)) == 7


@pytest.mark.parametrize("d,n", [(2, 2), (2, 4), (2, 6), (3, 3), (3, 5), (3, 6), (4, 6)])
def test_unbounded_family(d, n):
    inc = vertices_from_halfspaces(C.unbounded_hirsch_sharp(d, n))
    assert inc.n_facets == n
    assert is_simple(inc)
    assert not inc.bounded
    assert diameter(graph_of(inc)) == n - d


def test_mani_walkup():
    k = C.mani_walkup_K()
    assert sorted("".join(sorted(f)) for f in k.label_sets()) == sorted("".join(sorted(t)) for t in PRINTED_K)
    b1 = C.octagon_bipyramid("ambncodp", "r", "t")
    b2 = C.octagon_bipyramid("aobpcmdn", "q", "s")
    assert set(k.label_sets()) == set(b1.label_sets()) | set(b2.label_sets())
    assert not C.octagon_edges("ambncodp") & C.octagon_edges("aobpcmdn")
    assert len(connected_components(dual_graph(k))) == 2
    with pytest.raises(BadInput):
        C.octagon_bipyramid("abc", "x", "y")


def test_fhk_block():
    block = C.fhk_block()
    assert block.n_vertices == 13 and block.n_facets == 87
    assert dual_diameter(block) == 5
    a_tuple, b_tuple = C.fhk_tuples()
    assert {dual_distance(block, a, b) for a in a_tuple for b in b_tuple} == {5}


def test_fhk_matching_pairs_fast_with_slow():
    m = C.fhk_matching(".1", ".2")
    assert len(m) == 8 and len(set(m.values())) == 8


@pytest.mark.parametrize("copies,stellars", [(1, 0), (2, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0)])
def test_fhk_chain_sharp(copies, stellars):
    l = C.fhk_chain(copies, stellars)
    assert l.n_vertices == 8 + 5 * copies + stellars
    assert hirsch_sharpness(l).sharp
    assert is_closed_pseudomanifold(l)


def test_fhk_chain_two_copies():
    l = C.fhk_chain(2)
    assert l.n_vertices == 18 and dual_diameter(l) == 10


def test_todd_instance():
    t = C.todd_monotone_instance()
    inc = vertices_from_halfspaces(t.polyhedron)
    assert inc.n_facets == 8 and inc.bounded
    assert inc.vertices[unique_max(inc, t.objective)] == t.v
    md = monotone_distance(inc, t.objective, t.u, t.v)
    assert md >= 5
    assert distance(graph_of(inc), inc.vertex_index(t.u), inc.vertex_index(t.v)) < md
    assert t.epsilon > 0
    h, c, u, v = t
    assert (h, c, u, v) == (t.polyhedron, t.objective, t.u, t.v)


def test_transportation():
    ax = vertices_from_halfspaces(C.axial_transportation([1, 1], [1, 1], [1, 1]))
    assert ax.dim == 4 and ax.n_facets <= 8
    ones = [[1, 1], [1, 1]]
    pl = vertices_from_halfspaces(C.planar_transportation(ones, ones, ones))
    assert pl.dim == 1 and pl.n_facets <= 8
    with pytest.raises(InfeasibleMargins):
        C.axial_transportation([1, 1], [1, 2], [1, 1])
    with pytest.raises(InfeasibleMargins):
        C.planar_transportation(ones, [[2, 0], [1, 1]], ones)


def test_axial_3x2x2():
    inc = vertices_from_halfspaces(C.axial_transportation([1, 1, 2], [2, 2], [2, 2]))
    p, q, r = 3, 2, 2
    assert inc.dim == p * q * r - (p + q + r - 2)
    assert inc.n_facets <= p * q * r


def test_zero_one_sample():
    cube = C.zero_one_sample(3, 8, 7)
    assert len(cube.points) == 8
    assert C.zero_one_sample(4, 6, 11) == C.zero_one_sample(4, 6, 11)
    assert C.zero_one_sample(4, 6, 11) != C.zero_one_sample(4, 6, 12)
    with pytest.raises(BadInput):
        C.zero_one_sample(3, 9, 0)


def test_splitmix_reference_values():
    # first outputs for seed 0 of the reference SplitMix64
    gen = C.splitmix64(0)
    assert next(gen) == 0xE220A8397B1DCDAF
    assert next(gen) == 0x6E789E6AA1B965F4


def test_named_instances():
    inst = C.named_instance("klee3", "2")
    assert inst.payload.n_vertices == 9
    with pytest.raises(BadInput):
        C.named_instance("nothing")


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.data(), st.integers(min_value=0, max_value=2**32))
def test_zero_one_diameter_bound(d, data, seed):
    m = data.draw(st.integers(min_value=2, max_value=2**d))
    inc = facets_from_vertices(C.zero_one_sample(d, m, seed))
    assert diameter(graph_of(inc)) <= inc.n_facets - inc.dim


def test_q4_simple_vertices_dual_to_facets():
    from hirschkit.constructions import _q4_simple

    h, inc, u, v = _q4_simple()
    assert len(inc.vertices) == 27
    assert u != v and u in inc.vertices and v in inc.vertices
    assert all(isinstance(x, Fraction) for x in u)
