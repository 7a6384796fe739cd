"""Named polytopes and complexes from the Hirsch-conjecture literature.

Geometric objects (the Klee-Walkup polytope Q4, the unbounded
Hirsch-sharp family, Todd's monotone counterexample, transportation
polytopes, random 0/1 polytopes) come back as V- or H-representations;
the purely combinatorial ones (Klee's 3-sphere family, cross-polytope
chains, the Mani-Walkup complex, Fritzsche-Holt-Klee blocks and chains)
as :class:`PureComplex`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Union

from . import exact
from .complexes import (
    PureComplex,
    boundary_complex,
    connected_sum,
    crosspolytope_boundary,
    dual_graph,
    iterated_ops,
    stellar_subdivide,
)
from .errors import BadInput, ConstructionFailed, InfeasibleMargins, MatchingFailed
from .geometry import (
    HPolyhedron,
    VPolytope,
    facets_from_vertices,
    graph_of,
    is_simple,
    projective_transform,
    remove_facet,
    vertices_from_halfspaces,
)
from .paths import INF, bfs, diameter, hirsch_sharpness, unique_max


@dataclass(frozen=True)
class NamedInstance:
    name: str
    payload: Union[VPolytope, HPolyhedron, PureComplex]
    notes: str = ""


# --------------------------------------------------------------------------
# Klee-Walkup Q4

Q4_LABELS = ("w", "a", "b", "c", "d", "e", "f", "g", "h")
Q4_POINTS = (
    (0, 0, 0, -2),
    (-3, 3, 1, 2),
    (3, -3, 1, 2),
    (2, -1, 1, 3),
    (-2, 1, 1, 3),
    (3, 3, -1, 2),
    (-3, -3, -1, 2),
    (-1, -2, -1, 3),
    (1, 2, -1, 3),
)


def klee_walkup_q4() -> VPolytope:
    """The nine vertices w, a..h of the simplicial Klee-Walkup 4-polytope."""
    return VPolytope(Q4_POINTS, Q4_LABELS)


@lru_cache(maxsize=None)
def q4_boundary() -> PureComplex:
    return boundary_complex(facets_from_vertices(klee_walkup_q4()))


# --------------------------------------------------------------------------
# Klee's 3-dimensional family

def klee_3sphere_family(k: int, extra: int = 0) -> PureComplex:
    """Simplicial 2-sphere with ``3 + 3k + extra`` vertices.

    A central triangle surrounded by ``k`` bands of six skinny triangles,
    each band joining a triangle to the next (rotated) one; the outermost
    triangle is itself a facet.  ``extra`` vertices (1 or 2) subdivide the
    central triangle into 3 or 5 triangles.
    """
    if k < 1:
        raise BadInput("k must be at least 1")
    if extra not in (0, 1, 2):
        raise BadInput("extra must be 0, 1 or 2")
    layer = [[f"t{i}_{j}" for j in range(3)] for i in range(k + 1)]
    facets = []
    for i in range(1, k + 1):
        p, q = layer[i - 1], layer[i]
        for j in range(3):
            facets.append((p[j], p[(j + 1) % 3], q[j]))
            facets.append((q[j], q[(j + 1) % 3], p[(j + 1) % 3]))
    facets.append(tuple(layer[k]))
    x, y, z = layer[0]
    centre = []
    if extra == 0:
        facets.append((x, y, z))
    elif extra == 1:
        facets += [("c1", x, y), ("c1", y, z), ("c1", z, x)]
        centre = ["c1"]
    else:
        facets += [("c2", "c1", x), ("c2", x, y), ("c2", y, "c1"), ("c1", y, z), ("c1", z, x)]
        centre = ["c1", "c2"]
    labels = centre + [v for row in layer for v in row]
    return PureComplex.from_facets(facets, labels)


# --------------------------------------------------------------------------
# cross-polytope chains

def crosspolytope_chain(d: int, copies: int) -> PureComplex:
    """``copies`` cross-polytope boundaries glued in a row.

    Each new copy is glued along its all-plus facet to the all-minus facet
    of the previous copy, ``+i`` of the new copy onto ``-i`` of the old.
    """
    if d < 2 or copies < 1:
        raise BadInput("need d >= 2 and copies >= 1")
    chain = crosspolytope_boundary(d, suffix=".1")
    for c in range(2, copies + 1):
        nxt = crosspolytope_boundary(d, suffix=f".{c}")
        fa = [f"-{i}.{c - 1}" for i in range(1, d + 1)]
        fb = [f"+{i}.{c}" for i in range(1, d + 1)]
        match = {f"+{i}.{c}": f"-{i}.{c - 1}" for i in range(1, d + 1)}
        chain = connected_sum(chain, fa, nxt, fb, match)
    return chain


# --------------------------------------------------------------------------
# unbounded Hirsch-sharp polyhedra

def _orthant(d: int) -> list:
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = -1
        rows.append((tuple(e), 0))
    return rows


def unbounded_hirsch_sharp(d: int, n: int, max_halvings: int = 32) -> HPolyhedron:
    """Simple unbounded d-polyhedron with n facets and diameter n - d.

    Start from the nonnegative orthant.  Each step takes the current far
    vertex v and an unbounded edge ``v + t r`` at it, and cuts with the
    supporting hyperplane of that edge tilted about a point of the ray, so
    that the ray is cut off at a new vertex adjacent only to v.
    """
    if not n >= d >= 2:
        raise BadInput("need n >= d >= 2")
    rows = _orthant(d)
    far = tuple(Fraction(0) for _ in range(d))
    for step in range(n - d):
        h = HPolyhedron(tuple(rows), (), d)
        inc = vertices_from_halfspaces(h)
        vi = inc.vertices.index(far)
        candidates = [r for (b, r) in inc.rays if b == vi]
        result = None
        for r in candidates:
            tight = [a for a, rhs in h.inequalities if exact.dot(a, far) == rhs and exact.dot(a, r) == 0]
            a = tuple(sum(col, Fraction(0)) for col in zip(*tight))
            delta = Fraction(1, 2)
            for _ in range(max_halvings):
                normal = exact.add(a, exact.scale(delta, r))
                cut_point = exact.add(far, r)
                rhs = exact.dot(normal, cut_point)
                if all(exact.dot(normal, x) < rhs for x in inc.vertices):
                    trial = HPolyhedron(tuple(rows) + ((normal, rhs),), (), d)
                    tinc = vertices_from_halfspaces(trial)
                    if (
                        tinc.n_facets == d + step + 1
                        and is_simple(tinc)
                        and cut_point in tinc.vertices
                        and any(b == tinc.vertices.index(cut_point) for b, _ in tinc.rays)
                        and diameter(graph_of(tinc)) == step + 1
                    ):
                        result = (normal, rhs, cut_point)
                        break
                delta /= 2
            if result:
                break
        if result is None:
            raise ConstructionFailed(f"no admissible tilt at step {step + 1}")
        rows.append((result[0], result[1]))
        far = result[2]
    return HPolyhedron(tuple(rows), (), d)


# --------------------------------------------------------------------------
# Mani-Walkup

MANI_WALKUP_TRIANGLES = (
    "amr mbr bnr ncr cor odr dpr par "
    "amt mbt bnt nct cot odt dpt pat "
    "aoq obq bpq pcq cmq mdq dnq naq "
    "aos obs bps pcs cms mds dns nas"
).split()

OCTAGON_1 = tuple("ambncodp")
OCTAGON_2 = tuple("aobpcmdn")


def octagon_bipyramid(cycle, apex1, apex2) -> PureComplex:
    """Double pyramid over an 8-cycle: 16 triangles."""
    cycle = [str(x) for x in cycle]
    if len(cycle) != 8 or len(set(cycle)) != 8:
        raise BadInput("need 8 distinct cycle labels")
    facets = []
    for apex in (apex1, apex2):
        for i in range(8):
            facets.append((cycle[i], cycle[(i + 1) % 8], str(apex)))
    return PureComplex.from_facets(facets, cycle + [str(apex1), str(apex2)])


def mani_walkup_K() -> PureComplex:
    """The 32-triangle complex K on a..d, m..p, q..t."""
    return PureComplex.from_facets([tuple(t) for t in MANI_WALKUP_TRIANGLES], "abcdmnopqrst")


def octagon_edges(cycle) -> set:
    cycle = list(cycle)
    return {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}


# --------------------------------------------------------------------------
# Fritzsche-Holt-Klee

FHK_A = ("a", "b", "c", "d")
FHK_B = ("e", "f", "g", "h")


def fhk_block(suffix: str = "") -> PureComplex:
    """Four-fold one-point suspension of the boundary of Q4 at w:
    a simplicial 8-sphere on 13 vertices."""
    block = iterated_ops(q4_boundary(), "w", 4, [f"w{i}" for i in range(1, 6)])
    if suffix:
        block = block.relabel({x: x + suffix for x in block.vertex_labels})
    return block


def fhk_tuples(suffix: str = "") -> tuple:
    """The facet tuples ``A_i = A + W - w_i`` and ``B_i = B + W - w_i``."""
    ws = [f"w{i}{suffix}" for i in range(1, 6)]
    A = [x + suffix for x in FHK_A]
    B = [x + suffix for x in FHK_B]
    a_tuple = [frozenset(A + [w for w in ws if w != wi]) for wi in ws]
    b_tuple = [frozenset(B + [w for w in ws if w != wi]) for wi in ws]
    return a_tuple, b_tuple


def _multi_source_dist(l: PureComplex, sources) -> list:
    g = dual_graph(l)
    best = [INF] * l.n_facets
    for s in sources:
        d = bfs(g, l.facet_index(s))
        best = [min(x, y) for x, y in zip(best, d)]
    return best


def _neighbor_speeds(l: PureComplex, facet, far_set) -> dict:
    """For each vertex x of ``facet``: distance from the facet across the
    ridge ``facet - x`` to the nearest facet of ``far_set``."""
    dist = _multi_source_dist(l, far_set)
    labels = l.label_sets()
    out = {}
    for x in facet:
        ridge = facet - {x}
        nb = [j for j, f in enumerate(labels) if f != facet and f >= ridge]
        out[x] = dist[nb[0]]
    return out


def fhk_matching(suffix_old: str, suffix_new: str) -> dict:
    """Vertex matching from ``A_1`` of a new copy onto ``B_1`` of the
    previous one so that fast neighbours meet slow ones.

    Fast neighbours are one step closer to the opposite end of their
    copy than the glued facet itself.
    """
    old, new = fhk_block(suffix_old), fhk_block(suffix_new)
    a_old, b_old = fhk_tuples(suffix_old)
    a_new, b_new = fhk_tuples(suffix_new)
    target = b_old[0]
    source = a_new[0]
    speed_old = _neighbor_speeds(old, target, a_old)
    speed_new = _neighbor_speeds(new, source, b_new)
    fast_old = sorted(x for x, s in speed_old.items() if s < 5)
    slow_old = sorted(x for x, s in speed_old.items() if s >= 5)
    fast_new = sorted(x for x, s in speed_new.items() if s < 5)
    slow_new = sorted(x for x, s in speed_new.items() if s >= 5)
    if len(fast_old) > len(slow_new) or len(fast_new) > len(slow_old):
        raise MatchingFailed("not enough slow neighbours to absorb the fast ones")
    match = {}
    free_old = list(slow_old)
    for x in fast_new:
        match[x] = free_old.pop(0)
    rest_old = fast_old + free_old
    for x, y in zip(slow_new, rest_old):
        match[x] = y
    if len(match) != len(source):
        raise MatchingFailed("matching is not a bijection")
    return match


def fhk_chain(copies: int, stellars: int = 0) -> PureComplex:
    """Glue ``copies`` FHK blocks end to end, ``B_1`` of each copy onto
    ``A_1`` of the next, then apply up to eight stellar subdivisions at the
    two free ends, alternating between them.

    The result is checked to be Hirsch-sharp after every step.
    """
    if copies < 1:
        raise BadInput("copies must be at least 1")
    if not 0 <= stellars <= 8:
        raise BadInput("stellars must be between 0 and 8")
    chain = fhk_block(".1")
    # labels of the previous copy as they appear in the chain so far
    alias: dict = {}
    for c in range(2, copies + 1):
        nxt = fhk_block(f".{c}")
        match = fhk_matching(f".{c - 1}", f".{c}")
        _, b_old = fhk_tuples(f".{c - 1}")
        a_new, _ = fhk_tuples(f".{c}")
        seam = [alias.get(x, x) for x in b_old[0]]
        match = {x: alias.get(y, y) for x, y in match.items()}
        chain = connected_sum(chain, seam, nxt, a_new[0], match)
        alias = match
    if not hirsch_sharpness(chain).sharp:
        raise MatchingFailed("glued chain is not Hirsch-sharp")
    b_end = fhk_tuples(f".{copies}")[1]
    ends = [list(fhk_tuples(".1")[0]), [frozenset(alias.get(x, x) for x in f) for f in b_end]]
    for s in range(stellars):
        side = s % 2
        dist = _multi_source_dist(chain, ends[1 - side])
        labels = chain.label_sets()
        order = sorted(range(chain.n_facets), key=lambda j: (-dist[j], sorted(labels[j])))
        z = f"z{s + 1}"
        for j in order:
            trial = stellar_subdivide(chain, j, z)
            if hirsch_sharpness(trial).sharp:
                chain = trial
                ends[side] = [f for f in trial.label_sets() if z in f]
                break
        else:
            raise ConstructionFailed(f"no stellar subdivision keeps sharpness at step {s + 1}")
    return chain


# --------------------------------------------------------------------------
# Todd's monotone counterexample

@dataclass(frozen=True)
class ToddInstance:
    polyhedron: HPolyhedron
    objective: tuple
    u: tuple
    v: tuple
    epsilon: Fraction
    matrix: tuple

    def __iter__(self):
        # unpacks as (polyhedron, objective, u, v)
        return iter((self.polyhedron, self.objective, self.u, self.v))


def _q4_simple() -> tuple:
    """The simple Q4 (polar of the nine-vertex polytope) as an H-polytope,
    its vertex enumeration, and the vertices u, v dual to abcd and efgh."""
    q4 = klee_walkup_q4()
    h = HPolyhedron(tuple((p, 1) for p in q4.points), (), 4)
    inc = vertices_from_halfspaces(h)
    # vertex of the simple polytope dual to a facet of Q4: the point where
    # the four corresponding inequalities are tight
    def dual_vertex(labels):
        rows = [q4.points[Q4_LABELS.index(x)] for x in labels]
        return exact.solve_linear(rows, [1, 1, 1, 1])
    return h, inc, dual_vertex("abcd"), dual_vertex("efgh")


def todd_monotone_instance(max_halvings: int = 64) -> ToddInstance:
    """Bounded 4-polytope with 8 facets, a functional with unique maximum
    v', and a vertex u' from which every monotone path to v' has at least
    five edges.

    Built from the simple Q4: send a hyperplane H0 through the ridge of
    H1 (supporting at v) and H2 (the facet F missing u and v), slightly
    beyond H1, to infinity; then drop the image of F.
    """
    h, inc, u, v = _q4_simple()
    q4 = klee_walkup_q4()
    f_row = next(i for i, (a, b) in enumerate(h.inequalities)
                 if a == exact.vec(q4.points[0]) and b == 1)
    n2, r2 = h.inequalities[f_row]
    v_rows = [(a, b) for a, b in h.inequalities if exact.dot(a, v) == b]
    n1 = tuple(sum(col, Fraction(0)) for col in zip(*[a for a, _ in v_rows]))
    r1 = sum((b for _, b in v_rows), Fraction(0))

    # vertices of the arrangement of the nine facet hyperplanes
    arrangement = []
    for quad in combinations(h.inequalities, 4):
        x = exact.solve_linear([a for a, _ in quad], [b for _, b in quad])
        if x is not None:
            arrangement.append(x)

    eps = Fraction(1, 2)
    for _ in range(max_halvings):
        n0 = tuple((1 - eps) * x + eps * y for x, y in zip(n1, n2))
        r0 = (1 - eps) * r1 + eps * r2
        misses = all(exact.dot(n0, x) < r0 for x in inc.vertices)
        clean = not any(_in_wedge(exact.dot(n1, x) - r1, exact.dot(n0, x) - r0) for x in arrangement)
        if misses and clean:
            result = _todd_from_epsilon(h, inc, u, v, f_row, n0, r0, n1, r1)
            if result is not None:
                return ToddInstance(*result[:4], eps, result[4])
        eps /= 2
    raise ConstructionFailed("no admissible epsilon found")


def _in_wedge(g1, g0) -> bool:
    """Whether a point with H1-value g1 and H0-value g0 lies in the closed
    wedge between H1 and H0 on the far side of H1."""
    return (g1 > 0 and g0 <= 0) or (g1 < 0 and g0 >= 0) or (g1 == 0 and g0 == 0)


def _todd_from_epsilon(h, inc, u, v, f_row, n0, r0, n1, r1):
    d = 4
    # last homogeneous coordinate r0 - n0.x: positive on the polytope and
    # zero on H0.  The origin is interior and H0 misses the polytope, so
    # r0 > 0 and the map is nonsingular.
    rows = [[Fraction(int(i == j)) for j in range(d + 1)] for i in range(d)]
    rows.append([-x for x in n0] + [r0])
    m = exact.mat(rows)
    images = projective_transform(VPolytope(inc.vertices), m)
    pinc = facets_from_vertices(images)
    u2 = images.points[inc.vertices.index(u)]
    v2 = images.points[inc.vertices.index(v)]
    f_vertices = frozenset(i for i, x in enumerate(inc.vertices)
                           if exact.dot(h.inequalities[f_row][0], x) == h.inequalities[f_row][1])
    f_index = next(j for j, f in enumerate(pinc.facets) if f == f_vertices)
    hq = HPolyhedron(pinc.facet_hyperplanes, (), d)
    row = hq.inequalities.index(pinc.facet_hyperplanes[f_index])
    q2 = remove_facet(hq, row)
    q2inc = vertices_from_halfspaces(q2)
    if q2inc.extreme_rays or q2inc.n_facets != 8:
        return None
    # image of H1: covector (n1, -r1) pulled through m^-1
    inv = exact.inverse(m)
    cov = tuple(n1) + (-r1,)
    img = tuple(exact.dot(cov, col) for col in zip(*inv))
    phi = tuple(img[:d])
    top = unique_max(q2inc, phi)
    if top is None or q2inc.vertices[top] != v2:
        return None
    return q2, phi, u2, v2, m


# --------------------------------------------------------------------------
# transportation polytopes

def _cell(p, q, r):
    return lambda i, j, k: (i * q + j) * r + k


def axial_transportation(a, b, c) -> HPolyhedron:
    """3-way axial p x q x r transportation polytope in R^{pqr}."""
    a, b, c = exact.vec(a), exact.vec(b), exact.vec(c)
    if not (sum(a) == sum(b) == sum(c)):
        raise InfeasibleMargins("axial margins must have equal totals")
    if any(x < 0 for x in a + b + c):
        raise InfeasibleMargins("margins must be nonnegative")
    p, q, r = len(a), len(b), len(c)
    idx = _cell(p, q, r)
    N = p * q * r
    eqs = []
    for i in range(p):
        row = [0] * N
        for j in range(q):
            for k in range(r):
                row[idx(i, j, k)] = 1
        eqs.append((tuple(row), a[i]))
    for j in range(q):
        row = [0] * N
        for i in range(p):
            for k in range(r):
                row[idx(i, j, k)] = 1
        eqs.append((tuple(row), b[j]))
    for k in range(r):
        row = [0] * N
        for i in range(p):
            for j in range(q):
                row[idx(i, j, k)] = 1
        eqs.append((tuple(row), c[k]))
    return HPolyhedron(_nonneg(N), tuple(eqs), N)


def _nonneg(N: int) -> tuple:
    rows = []
    for t in range(N):
        e = [0] * N
        e[t] = -1
        rows.append((tuple(e), 0))
    return tuple(rows)


def planar_transportation(A, B, C) -> HPolyhedron:
    """3-way planar transportation polytope: line sums along each axis
    prescribed by A (p x q), B (p x r), C (q x r)."""
    A, B, C = exact.mat(A), exact.mat(B), exact.mat(C)
    p, q = len(A), len(A[0])
    r = len(B[0])
    if len(B) != p or len(C) != q or len(C[0]) != r:
        raise InfeasibleMargins("margin shapes are inconsistent")
    # the three margins must agree on the shared two-way sums
    for i in range(p):
        if sum(A[i]) != sum(B[i]):
            raise InfeasibleMargins("row sums of A and B differ")
    for j in range(q):
        if sum(A[i][j] for i in range(p)) != sum(C[j]):
            raise InfeasibleMargins("column sums of A and row sums of C differ")
    for k in range(r):
        if sum(B[i][k] for i in range(p)) != sum(C[j][k] for j in range(q)):
            raise InfeasibleMargins("column sums of B and C differ")
    idx = _cell(p, q, r)
    N = p * q * r
    eqs = []
    for i in range(p):
        for j in range(q):
            row = [0] * N
            for k in range(r):
                row[idx(i, j, k)] = 1
            eqs.append((tuple(row), A[i][j]))
    for i in range(p):
        for k in range(r):
            row = [0] * N
            for j in range(q):
                row[idx(i, j, k)] = 1
            eqs.append((tuple(row), B[i][k]))
    for j in range(q):
        for k in range(r):
            row = [0] * N
            for i in range(p):
                row[idx(i, j, k)] = 1
            eqs.append((tuple(row), C[j][k]))
    return HPolyhedron(_nonneg(N), tuple(eqs), N)


# --------------------------------------------------------------------------
# random 0/1 polytopes

MASK64 = (1 << 64) - 1


def splitmix64(seed: int):
    """SplitMix64 stream (Steele, Lea, Flood 2014): reproducible in any
    language with 64-bit unsigned arithmetic."""
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def zero_one_sample(d: int, m: int, seed: int) -> VPolytope:
    """``m`` distinct points of {0,1}^d chosen by a partial Fisher-Yates
    shuffle driven by SplitMix64."""
    if not 1 <= d <= 5:
        raise BadInput("d must be between 1 and 5")
    if not 2 <= m <= 2 ** d:
        raise BadInput("m must be between 2 and 2^d")
    cells = list(range(2 ** d))
    rng = splitmix64(seed)
    for i in range(m):
        j = i + next(rng) % (len(cells) - i)
        cells[i], cells[j] = cells[j], cells[i]
    chosen = sorted(cells[:m])
    pts = [tuple((x >> (d - 1 - t)) & 1 for t in range(d)) for x in chosen]
    return VPolytope(tuple(pts))


# --------------------------------------------------------------------------
# registry

def _todd_payload() -> HPolyhedron:
    return todd_monotone_instance().polyhedron


GENERATORS = {
    "q4": (klee_walkup_q4, (), "Klee-Walkup simplicial 4-polytope, 9 vertices"),
    "klee3": (klee_3sphere_family, (int, int), "Klee 2-sphere family: K [EXTRA]"),
    "crosschain": (crosspolytope_chain, (int, int), "cross-polytope chain: D COPIES"),
    "unbounded": (unbounded_hirsch_sharp, (int, int), "unbounded Hirsch-sharp polyhedron: D N"),
    "maniwalkup": (mani_walkup_K, (), "Mani-Walkup complex K, 32 triangles"),
    "fhk": (fhk_chain, (int, int), "Fritzsche-Holt-Klee chain: COPIES [STELLARS]"),
    "todd": (_todd_payload, (), "Todd's monotone instance (8 facets)"),
    "zeroone": (zero_one_sample, (int, int, int), "random 0/1 polytope: D M SEED"),
    "crosspolytope": (crosspolytope_boundary, (int,), "cross-polytope boundary: D"),
}


def named_instance(name: str, *params) -> NamedInstance:
    """Build a registered generator from string or integer parameters."""
    if name not in GENERATORS:
        raise BadInput(f"unknown generator {name!r}; choose from {', '.join(sorted(GENERATORS))}")
    fn, kinds, notes = GENERATORS[name]
    if len(params) > len(kinds):
        raise BadInput(f"{name} takes at most {len(kinds)} parameters")
    try:
        args = [kind(x) for kind, x in zip(kinds, params)]
    except ValueError as exc:
        raise BadInput(str(exc)) from None
    return NamedInstance(name, fn(*args), notes)
