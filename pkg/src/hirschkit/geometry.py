"""V- and H-representations, vertex/facet enumeration and polytope surgery.

Everything is exhaustive and exact.  Facets of a V-polytope are found by
trying every affinely independent subset of ``dim`` points; vertices of an
H-polyhedron by solving every square subsystem of tight constraints.  That
is plenty at the sizes handled here (tens of constraints, dimension <= 8).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from . import exact
from .errors import (
    BadFacet,
    BadVertex,
    DegenerateInput,
    EmptyInput,
    Infeasible,
    NotPointed,
    OriginNotInterior,
    PointAtInfinity,
    PolytopeMeetsInfinity,
    SingularMatrix,
)
from .exact import dot, rational, vec

Halfspace = tuple  # (normal: RVector, rhs: Fraction)


def canonical_inequality(normal, rhs) -> Halfspace:
    """Scale ``normal . x <= rhs`` to a primitive integer row.

    Only positive scalings are allowed, so the direction is preserved.
    """
    row = exact.primitive(tuple(vec(normal)) + (rational(rhs),))
    return tuple(Fraction(x) for x in row[:-1]), Fraction(row[-1])


def canonical_hyperplane(normal, rhs) -> Halfspace:
    """Like :func:`canonical_inequality` but the first nonzero coefficient
    is forced positive (orientation is irrelevant for an equation)."""
    a, b = canonical_inequality(normal, rhs)
    first = next((x for x in a if x != 0), Fraction(0))
    if first < 0:
        a, b = tuple(-x for x in a), -b
    return a, b


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of finitely many rational points."""

    points: tuple
    labels: Optional[tuple] = None

    def __post_init__(self):
        pts = tuple(vec(p) for p in self.points)
        if not pts:
            raise EmptyInput("a V-polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("all points must have the same dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != len(pts):
                raise ValueError("need one label per point")
            object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : a.x <= b for (a, b) in inequalities, a.x = b for equalities}``."""

    inequalities: tuple
    equalities: tuple = ()
    dim: Optional[int] = None

    def __post_init__(self):
        ineqs = []
        seen = set()
        for a, b in self.inequalities:
            a = vec(a)
            if all(x == 0 for x in a):
                raise ValueError("inequality with zero normal")
            row = canonical_inequality(a, b)
            if row not in seen:
                seen.add(row)
                ineqs.append(row)
        eqs = []
        for a, b in self.equalities:
            a = vec(a)
            if all(x == 0 for x in a):
                if rational(b) != 0:
                    raise Infeasible("equation 0 = nonzero")
                continue
            row = canonical_hyperplane(a, b)
            if row not in eqs:
                eqs.append(row)
        dims = {len(a) for a, _ in ineqs} | {len(a) for a, _ in eqs}
        if self.dim is not None:
            dims.add(self.dim)
        if len(dims) != 1:
            raise ValueError("inconsistent ambient dimensions")
        object.__setattr__(self, "inequalities", tuple(ineqs))
        object.__setattr__(self, "equalities", tuple(eqs))
        object.__setattr__(self, "dim", dims.pop())

    def contains(self, x) -> bool:
        x = vec(x)
        return all(dot(a, x) <= b for a, b in self.inequalities) and all(
            dot(a, x) == b for a, b in self.equalities
        )


@dataclass(frozen=True)
class Graph:
    n_nodes: int
    adjacency: tuple  # tuple[frozenset[int], ...]

    def __post_init__(self):
        adj = tuple(frozenset(a) for a in self.adjacency)
        if len(adj) != self.n_nodes:
            raise ValueError("one adjacency set per node")
        for i, nb in enumerate(adj):
            if i in nb:
                raise ValueError("graph must be irreflexive")
            for j in nb:
                if i not in adj[j]:
                    raise ValueError("graph must be symmetric")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [set() for _ in range(n)]
        for i, j in edges:
            adj[i].add(j)
            adj[j].add(i)
        return cls(n, tuple(adj))

    def edges(self) -> list:
        return [(i, j) for i in range(self.n_nodes) for j in sorted(self.adjacency[i]) if i < j]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])


@dataclass(frozen=True)
class IncidenceStructure:
    """Vertex-facet incidences of a pointed polyhedron.

    ``facets[j]`` is the set of vertex indices on facet ``j``.  For
    unbounded input, ``extreme_rays`` are the recession directions,
    ``facet_rays[j]`` those parallel to facet ``j``, and ``rays`` the
    unbounded edges as ``(vertex index, direction)`` pairs.
    """

    n_vertices: int
    facets: tuple
    dim: int
    vertices: Optional[tuple] = None
    labels: Optional[tuple] = None
    facet_hyperplanes: Optional[tuple] = None
    equations: tuple = ()
    rays: tuple = ()
    extreme_rays: tuple = ()
    facet_rays: Optional[tuple] = None
    facet_rows: Optional[tuple] = None
    non_vertices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(frozenset(f) for f in self.facets))

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def ambient_dim(self) -> int:
        if self.vertices:
            return len(self.vertices[0])
        return self.dim

    @property
    def bounded(self) -> bool:
        return not self.extreme_rays

    @property
    def incidence(self) -> tuple:
        """Boolean matrix, vertices x facets."""
        return tuple(
            tuple(v in f for f in self.facets) for v in range(self.n_vertices)
        )

    def vertex_facets(self, v: int) -> frozenset:
        return frozenset(j for j, f in enumerate(self.facets) if v in f)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_index(self, key) -> int:
        """Resolve a label, an index, or a coordinate tuple to a vertex index."""
        if isinstance(key, int):
            if not 0 <= key < self.n_vertices:
                raise BadVertex(f"no vertex {key}")
            return key
        if isinstance(key, str):
            if self.labels is not None and key in self.labels:
                return self.labels.index(key)
            if key.isdigit() and int(key) < self.n_vertices:
                return int(key)
            raise BadVertex(f"no vertex labelled {key!r}")
        if self.vertices is not None:
            key = vec(key)
            if key in self.vertices:
                return self.vertices.index(key)
        raise BadVertex(f"no vertex {key!r}")

    def facet_index(self, vertex_set) -> int:
        target = frozenset(self.vertex_index(v) for v in vertex_set)
        for j, f in enumerate(self.facets):
            if f == target:
                return j
        raise BadFacet(f"no facet with vertices {sorted(target)}")


# --------------------------------------------------------------------------
# V -> H

def _projection_columns(points) -> list:
    """Coordinates onto which projecting is injective on the affine hull."""
    p0 = points[0]
    diffs = [exact.sub(p, p0) for p in points[1:]]
    cols: list = []
    r = 0
    for c in range(len(p0)):
        trial = cols + [c]
        rr = exact.rank([[d[j] for j in trial] for d in diffs]) if diffs else 0
        if rr > r:
            cols, r = trial, rr
    return cols


def _int_det(m: list) -> int:
    m = [r[:] for r in m]
    n = len(m)
    sign, prev = 1, 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            mic = m[i][c]
            m[i] = [(piv * a - mic * b) // prev for a, b in zip(m[i], m[c])]
        prev = piv
    return sign * m[n - 1][n - 1]


def _hyperplane_through(points) -> Optional[tuple]:
    """Integer ``(a, b)`` with ``a.x = b`` through ``k`` integer points in
    R^k, or None when they are affinely dependent."""
    rows = [list(p) + [1] for p in points]
    k = len(rows)
    cof = []
    for j in range(k + 1):
        minor = [r[:j] + r[j + 1:] for r in rows]
        cof.append((-1) ** j * _int_det(minor))
    if all(c == 0 for c in cof[:-1]):
        return None
    return tuple(cof[:-1]), -cof[-1]


def facets_from_vertices(p: VPolytope) -> IncidenceStructure:
    """Facet enumeration by exhaustive search over affinely independent
    point subsets.

    Works in the affine hull of the points.  Vertex indices follow the
    input order; points that are not vertices are listed in
    ``non_vertices``.  Facets are sorted by their sorted vertex-index tuples.
    """
    points = p.points
    k = exact.affine_dim(points)
    if k == 0:
        raise DegenerateInput("all points coincide")
    ambient = p.dim
    cols = _projection_columns(points)
    proj = [tuple(x[c] for c in cols) for x in points]
    npts = len(points)

    # integer copy of the projected points; scaling leaves facets unchanged
    den = 1
    for x in proj:
        for c in x:
            den = den * c.denominator // gcd(den, c.denominator)
    iproj = [tuple(int(c * den) for c in x) for x in proj]

    found: dict = {}
    covered: list = []
    for subset in combinations(range(npts), k):
        mask = 0
        for i in subset:
            mask |= 1 << i
        if any(mask & c == mask for c in covered):
            continue
        hp = _hyperplane_through([iproj[i] for i in subset])
        if hp is None:
            continue
        a, b = hp
        vals = [sum(ai * xi for ai, xi in zip(a, x)) - b for x in iproj]
        tight = 0
        for i, s in enumerate(vals):
            if s == 0:
                tight |= 1 << i
        if bin(tight).count("1") > k:
            covered.append(tight)
        if all(s <= 0 for s in vals):
            pass
        elif all(s >= 0 for s in vals):
            a, b = tuple(-x for x in a), -b
        else:
            continue
        key = canonical_inequality(a, Fraction(b, den))
        if key not in found:
            found[key] = frozenset(i for i in range(npts) if tight >> i & 1)

    # equations of the affine hull, in ambient coordinates
    p0 = points[0]
    equations = []
    if k < ambient:
        diffs = [exact.sub(x, p0) for x in points[1:]]
        for n in exact.nullspace(diffs):
            equations.append(canonical_hyperplane(n, dot(n, p0)))

    keys = list(found)
    tight_sets = [found[key] for key in keys]
    # a point is a vertex iff the normals of its tight facets have full rank
    is_vertex = []
    for i in range(npts):
        normals = [keys[j][0] for j, t in enumerate(tight_sets) if i in t]
        is_vertex.append(bool(normals) and exact.rank(normals) == k)
    vertex_ids = [i for i in range(npts) if is_vertex[i]]
    renum = {old: new for new, old in enumerate(vertex_ids)}

    rows = []
    for key, t in zip(keys, tight_sets):
        vs = frozenset(renum[i] for i in t if i in renum)
        a_full = [Fraction(0)] * ambient
        for c, x in zip(cols, key[0]):
            a_full[c] = x
        rows.append((tuple(sorted(vs)), vs, (tuple(a_full), key[1])))
    rows.sort(key=lambda r: r[0])

    labels = None
    if p.labels is not None:
        labels = tuple(p.labels[i] for i in vertex_ids)
    return IncidenceStructure(
        n_vertices=len(vertex_ids),
        facets=tuple(r[1] for r in rows),
        dim=k,
        vertices=tuple(points[i] for i in vertex_ids),
        labels=labels,
        facet_hyperplanes=tuple(r[2] for r in rows),
        equations=tuple(equations),
        non_vertices=tuple(i for i in range(npts) if not is_vertex[i]),
    )


# --------------------------------------------------------------------------
# H -> V

def _homog_rank(vertices, rays) -> int:
    rows = [tuple(v) + (Fraction(1),) for v in vertices]
    rows += [tuple(r) + (Fraction(0),) for r in rays]
    return exact.rank(rows) if rows else 0


def vertices_from_halfspaces(h: HPolyhedron) -> IncidenceStructure:
    """Vertex and extreme-ray enumeration by exhaustive basic solutions.

    Raises :class:`NotPointed` if the constraint normals do not span the
    ambient space and :class:`Infeasible` if no basic solution is feasible.
    """
    D = h.dim
    A = [a for a, _ in h.inequalities]
    b = [r for _, r in h.inequalities]
    E = [a for a, _ in h.equalities]
    e = [r for _, r in h.equalities]
    m = len(A)

    if exact.rank(A + E) < D:
        raise NotPointed("lineality space is nontrivial")
    if E and exact.system_status(E, e) == "inconsistent":
        raise Infeasible("equations are inconsistent")
    rE = exact.rank(E) if E else 0
    need = D - rE

    def feasible(x) -> bool:
        return all(dot(a, x) <= r for a, r in zip(A, b)) and all(
            dot(a, x) == r for a, r in zip(E, e)
        )

    points = set()
    for subset in combinations(range(m), need):
        rows = E + [A[i] for i in subset]
        rhs = e + [b[i] for i in subset]
        x = exact.solve_linear(rows, rhs)
        if x is not None and x not in points and feasible(x):
            points.add(x)
    if not points:
        raise Infeasible("no feasible basic solution")
    vertices = sorted(points)

    ray_set = set()
    if need >= 1:
        for subset in combinations(range(m), need - 1):
            rows = E + [A[i] for i in subset]
            ns = exact.nullspace(rows) if rows else [
                tuple(Fraction(int(i == j)) for j in range(D)) for i in range(D)
            ]
            if len(ns) != 1:
                continue
            r = ns[0]
            for sgn in (1, -1):
                rr = tuple(sgn * x for x in r)
                if all(dot(a, rr) <= 0 for a in A):
                    ray_set.add(tuple(Fraction(x) for x in exact.primitive(rr)))
                    break
    extreme_rays = sorted(ray_set)

    edges = []
    for vi, v in enumerate(vertices):
        tight = [i for i in range(m) if dot(A[i], v) == b[i]]
        for r in extreme_rays:
            along = [A[i] for i in tight if dot(A[i], r) == 0]
            if exact.rank(E + along) == D - 1:
                edges.append((vi, r))

    pdim = _homog_rank(vertices, extreme_rays) - 1
    seen = set()
    rows = []
    for i in range(m):
        tv = frozenset(j for j, v in enumerate(vertices) if dot(A[i], v) == b[i])
        if not tv:
            continue
        tr = frozenset(j for j, r in enumerate(extreme_rays) if dot(A[i], r) == 0)
        if (tv, tr) in seen:
            continue
        fdim = _homog_rank([vertices[j] for j in tv], [extreme_rays[j] for j in tr]) - 1
        if fdim != pdim - 1:
            continue
        seen.add((tv, tr))
        rows.append(((tuple(sorted(tv)), tuple(sorted(tr))), tv, tr, h.inequalities[i], i))
    rows.sort(key=lambda r: r[0])

    return IncidenceStructure(
        n_vertices=len(vertices),
        facets=tuple(r[1] for r in rows),
        dim=pdim,
        vertices=tuple(vertices),
        facet_hyperplanes=tuple(r[3] for r in rows),
        equations=tuple(h.equalities),
        rays=tuple(edges),
        extreme_rays=tuple(extreme_rays),
        facet_rays=tuple(r[2] for r in rows),
        facet_rows=tuple(r[4] for r in rows),
    )


def halfspaces_of(inc: IncidenceStructure) -> HPolyhedron:
    """Irredundant H-representation built from the facet hyperplanes."""
    if inc.facet_hyperplanes is None:
        raise ValueError("incidence carries no hyperplanes")
    return HPolyhedron(inc.facet_hyperplanes, inc.equations, inc.ambient_dim)


# --------------------------------------------------------------------------
# graphs

def graph_of(inc: IncidenceStructure) -> Graph:
    """Vertex-edge graph.  Rays are not nodes.

    With hyperplanes available, u~v iff their common tight facets (plus
    the equations) have rank ambient-1 and no third vertex lies on all of
    them.  Otherwise the purely combinatorial test is used: the smallest
    face containing u and v has no other vertex.
    """
    vf = [inc.vertex_facets(v) for v in range(inc.n_vertices)]
    edges = []
    for u, v in combinations(range(inc.n_vertices), 2):
        common = vf[u] & vf[v]
        # no common facet: the smallest face is the polytope itself
        if not common and inc.dim != 1:
            continue
        if any(vf[w] >= common for w in range(inc.n_vertices) if w not in (u, v)):
            continue
        if inc.facet_hyperplanes is not None:
            normals = [inc.facet_hyperplanes[j][0] for j in common]
            normals += [a for a, _ in inc.equations]
            if exact.rank(normals) != inc.ambient_dim - 1:
                continue
        elif inc.extreme_rays and inc.facet_rays is not None:
            if any(all(r in inc.facet_rays[j] for j in common) for r in range(len(inc.extreme_rays))):
                continue
        edges.append((u, v))
    return Graph.from_edges(inc.n_vertices, edges)


def dual_graph_of(inc: IncidenceStructure) -> Graph:
    """Facet-ridge graph: F~G iff exactly two facets contain F & G."""
    sets = list(inc.facets)
    if inc.facet_rays is not None:
        sets = [
            frozenset(f) | frozenset(("ray", r) for r in rr)
            for f, rr in zip(inc.facets, inc.facet_rays)
        ]
    edges = []
    for i, j in combinations(range(len(sets)), 2):
        common = sets[i] & sets[j]
        containing = sum(1 for s in sets if s >= common)
        if containing == 2:
            edges.append((i, j))
    return Graph.from_edges(len(sets), edges)


def is_simplicial(inc: IncidenceStructure) -> bool:
    return all(len(f) == inc.dim for f in inc.facets)


def is_simple(inc: IncidenceStructure) -> bool:
    return all(len(inc.vertex_facets(v)) == inc.dim for v in range(inc.n_vertices))


# --------------------------------------------------------------------------
# operations

def polar(p: VPolytope) -> VPolytope:
    """Polar dual; vertex ``j`` of the result is facet ``j`` of ``p``.

    Requires the origin in the interior, which is verified.
    """
    inc = facets_from_vertices(p)
    if inc.dim != p.dim:
        raise OriginNotInterior("polytope is not full-dimensional")
    pts = []
    for a, b in inc.facet_hyperplanes:
        if b <= 0:
            raise OriginNotInterior("origin is not strictly inside every facet")
        pts.append(tuple(x / b for x in a))
    return VPolytope(tuple(pts))


def wedge(h: HPolyhedron, facet_index: int) -> HPolyhedron:
    """Wedge over inequality ``facet_index``: a polytope in one more
    dimension with one more facet.

    The inequality of the chosen facet is replaced by ``a_f.x + y <= b_f``
    together with ``y >= 0``; the dropped row is implied by those two.
    """
    if not 0 <= facet_index < len(h.inequalities):
        raise BadFacet(f"no inequality {facet_index}")
    if h.equalities:
        raise ValueError("wedge expects a full-dimensional polytope")
    zero, one = Fraction(0), Fraction(1)
    rows = []
    for i, (a, b) in enumerate(h.inequalities):
        if i == facet_index:
            rows.append((tuple(a) + (one,), b))
        else:
            rows.append((tuple(a) + (zero,), b))
    rows.append((tuple(zero for _ in range(h.dim)) + (-one,), zero))
    return HPolyhedron(tuple(rows), (), h.dim + 1)


def ops_geometric(p: VPolytope, w_index: int) -> VPolytope:
    """One-point suspension at a vertex: ``P x {0}`` plus ``w x {-1, +1}``.

    The lowered copy takes w's place in the point order, the raised copy
    is appended at the end.
    """
    if not 0 <= w_index < len(p.points):
        raise BadVertex(f"no point {w_index}")
    if len(p.points) > 1:
        inc = facets_from_vertices(p)
        if w_index in inc.non_vertices:
            raise BadVertex(f"point {w_index} is not a vertex")
    zero, one = Fraction(0), Fraction(1)
    pts = []
    for i, x in enumerate(p.points):
        pts.append(tuple(x) + ((-one,) if i == w_index else (zero,)))
    pts.append(tuple(p.points[w_index]) + (one,))
    labels = None
    if p.labels is not None:
        w = p.labels[w_index]
        labels = list(p.labels)
        labels[w_index] = w + "1"
        labels.append(w + "2")
    return VPolytope(tuple(pts), tuple(labels) if labels else None)


def projective_transform(p: VPolytope, m) -> VPolytope:
    """Apply ``x -> (M (x, 1))[:d] / (M (x, 1))[d]``.

    The last homogeneous coordinate must be nonzero with one sign over all
    points, otherwise the polytope would meet the hyperplane sent to
    infinity.
    """
    m = exact.mat(m)
    d = p.dim
    if len(m) != d + 1 or any(len(r) != d + 1 for r in m):
        raise ValueError(f"need a {d + 1}x{d + 1} matrix")
    if exact.determinant(m) == 0:
        raise SingularMatrix("projective matrix is singular")
    images = []
    signs = set()
    for x in p.points:
        y = exact.matvec(m, tuple(x) + (Fraction(1),))
        if y[-1] == 0:
            raise PointAtInfinity(f"point {x} is sent to infinity")
        signs.add(y[-1] > 0)
        images.append(tuple(c / y[-1] for c in y[:-1]))
    if len(signs) > 1:
        raise PolytopeMeetsInfinity("points on both sides of the hyperplane sent to infinity")
    return VPolytope(tuple(images), p.labels)


def transform_inequality(halfspace, m) -> Halfspace:
    """Image of ``a.x <= b`` under the projective map of ``m`` (valid on
    the side where the last homogeneous coordinate is positive)."""
    a, b = halfspace
    cov = tuple(a) + (-b,)
    inv = exact.inverse(m)
    img = tuple(dot(cov, col) for col in zip(*inv))
    return canonical_inequality(img[:-1], -img[-1])


def remove_facet(h: HPolyhedron, facet_index: int) -> HPolyhedron:
    if not 0 <= facet_index < len(h.inequalities):
        raise BadFacet(f"no inequality {facet_index}")
    rows = h.inequalities[:facet_index] + h.inequalities[facet_index + 1:]
    return HPolyhedron(rows, h.equalities, h.dim)


def cube(d: int, lo=-1, hi=1) -> HPolyhedron:
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append((tuple(e), hi))
        e = [0] * d
        e[i] = -1
        rows.append((tuple(e), -lo))
    return HPolyhedron(tuple(rows), (), d)
