"""Pure simplicial complexes stored by their facets, and the surgeries
used to build Hirsch-sharp and non-Hirsch examples: link, anti-star,
join, one-point suspension (single and iterated), stellar subdivision of
a facet, and connected sum along a facet.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import (
    BadFacet,
    BadMatching,
    BadVertex,
    LabelClash,
    NotSimplicial,
)
from .geometry import Graph, IncidenceStructure


@dataclass(frozen=True)
class PureComplex:
    """A pure complex: every facet has ``facet_size`` vertices.

    ``facets`` hold indices into ``vertex_labels`` and are kept sorted, so
    two complexes with the same labels and facets compare equal.
    """

    vertex_labels: tuple
    facets: tuple
    facet_size: int

    def __post_init__(self):
        labels = tuple(str(x) for x in self.vertex_labels)
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate vertex labels")
        facets = sorted({tuple(sorted(f)) for f in self.facets})
        if not facets:
            raise ValueError("a complex needs at least one facet")
        for f in facets:
            if len(f) != self.facet_size:
                raise ValueError(f"facet {f} does not have {self.facet_size} vertices")
            if len(set(f)) != len(f):
                raise ValueError(f"facet {f} repeats a vertex")
        used = {v for f in facets for v in f}
        if used != set(range(len(labels))):
            raise ValueError("every vertex must lie in some facet")
        object.__setattr__(self, "vertex_labels", labels)
        object.__setattr__(self, "facets", tuple(facets))

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable], labels: Optional[Iterable] = None) -> "PureComplex":
        """Build from facets given as label collections.

        Vertex order follows ``labels`` if given, else first appearance.
        """
        facets = [tuple(str(v) for v in f) for f in facets]
        if labels is None:
            order: dict = {}
            for f in facets:
                for v in f:
                    order.setdefault(v, len(order))
            labels = list(order)
        else:
            labels = [str(x) for x in labels]
            used = {v for f in facets for v in f}
            labels = [x for x in labels if x in used]
        index = {x: i for i, x in enumerate(labels)}
        sizes = {len(f) for f in facets}
        if len(sizes) != 1:
            raise ValueError("facets of different sizes")
        return cls(tuple(labels), tuple(tuple(index[v] for v in f) for f in facets), sizes.pop())

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_labels)

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def dim(self) -> int:
        """Dimension of the complex (facet_size - 1)."""
        return self.facet_size - 1

    def index(self, v) -> int:
        if isinstance(v, int) and not isinstance(v, bool):
            if 0 <= v < self.n_vertices:
                return v
            raise BadVertex(f"no vertex {v}")
        try:
            return self.vertex_labels.index(str(v))
        except ValueError:
            raise BadVertex(f"no vertex {v!r}") from None

    def label_sets(self) -> list:
        return [frozenset(self.vertex_labels[i] for i in f) for f in self.facets]

    def facet_labels(self, j: int) -> tuple:
        return tuple(self.vertex_labels[i] for i in self.facets[j])

    def facet_index(self, facet) -> int:
        """Index of a facet given as labels (or vertex indices)."""
        target = tuple(sorted(self.index(v) for v in facet))
        try:
            return self.facets.index(target)
        except ValueError:
            raise BadFacet(f"{sorted(map(str, facet))} is not a facet") from None

    def relabel(self, mapping: Mapping) -> "PureComplex":
        new = tuple(str(mapping.get(x, x)) for x in self.vertex_labels)
        return PureComplex(new, self.facets, self.facet_size)


def _resolve_facet(l: PureComplex, facet) -> frozenset:
    if isinstance(facet, int) and not isinstance(facet, bool):
        if not 0 <= facet < l.n_facets:
            raise BadFacet(f"no facet {facet}")
        return frozenset(l.facet_labels(facet))
    labels = frozenset(str(v) for v in facet)
    if labels not in set(l.label_sets()):
        raise BadFacet(f"{sorted(labels)} is not a facet")
    return labels


def _from_label_sets(sets, order) -> PureComplex:
    return PureComplex.from_facets([sorted(s, key=order.index) for s in sets], order)


def link(l: PureComplex, v) -> PureComplex:
    i = l.index(v)
    label = l.vertex_labels[i]
    sets = [f - {label} for f in l.label_sets() if label in f]
    if l.facet_size == 1:
        raise ValueError("the link of a vertex in a 0-dimensional complex is empty")
    return _from_label_sets(sets, list(l.vertex_labels))


def antistar(l: PureComplex, v) -> PureComplex:
    i = l.index(v)
    label = l.vertex_labels[i]
    sets = [f for f in l.label_sets() if label not in f]
    if not sets:
        raise ValueError(f"every facet contains {label}; the anti-star is empty")
    return _from_label_sets(sets, list(l.vertex_labels))


def join(a: PureComplex, b: PureComplex) -> PureComplex:
    clash = set(a.vertex_labels) & set(b.vertex_labels)
    if clash:
        raise LabelClash(f"shared labels {sorted(clash)}")
    sets = [f | g for f in a.label_sets() for g in b.label_sets()]
    return _from_label_sets(sets, list(a.vertex_labels) + list(b.vertex_labels))


def simplex(labels: Iterable) -> PureComplex:
    labels = [str(x) for x in labels]
    return PureComplex.from_facets([labels], labels)


def simplex_boundary(labels: Iterable) -> PureComplex:
    labels = [str(x) for x in labels]
    if len(labels) < 2:
        raise ValueError("boundary of a 0-simplex is empty")
    return PureComplex.from_facets([c for c in combinations(labels, len(labels) - 1)], labels)


def fresh_labels(base: str, count: int, taken: Iterable) -> list:
    """``base1, base2, ...`` skipping names already in use."""
    taken = set(taken)
    out = []
    i = 1
    while len(out) < count:
        name = f"{base}{i}"
        if name not in taken:
            out.append(name)
            taken.add(name)
        i += 1
    return out


def iterated_ops(l: PureComplex, w, k: int, new_labels: Optional[list] = None) -> PureComplex:
    """k-fold one-point suspension at ``w``.

    ``(ast(w) * boundary(D)) u (lk(w) * D)`` with ``D`` a k-simplex on
    fresh vertices ``w1 .. w(k+1)`` that replace ``w``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    i = l.index(w)
    wl = l.vertex_labels[i]
    others = [x for x in l.vertex_labels if x != wl]
    if new_labels is None:
        new_labels = fresh_labels(wl, k + 1, others)
    new_labels = [str(x) for x in new_labels]
    if len(new_labels) != k + 1 or set(new_labels) & set(others):
        raise LabelClash("need k+1 fresh labels")
    sets = []
    full = frozenset(new_labels)
    for f in l.label_sets():
        if wl in f:
            sets.append((f - {wl}) | full)
        else:
            for x in new_labels:
                sets.append(f | (full - {x}))
    order = []
    for x in l.vertex_labels:
        order.extend(new_labels if x == wl else [x])
    return _from_label_sets(sets, order)


def ops(l: PureComplex, w, new_labels: Optional[list] = None) -> PureComplex:
    """One-point suspension ``(ast*w1) u (ast*w2) u (lk*w1w2)``."""
    i = l.index(w)
    wl = l.vertex_labels[i]
    if new_labels is None:
        new_labels = fresh_labels(wl, 2, [x for x in l.vertex_labels if x != wl])
    w1, w2 = (str(x) for x in new_labels)
    sets = []
    for f in l.label_sets():
        if wl in f:
            sets.append((f - {wl}) | {w1, w2})
        else:
            sets.append(f | {w1})
            sets.append(f | {w2})
    order = []
    for x in l.vertex_labels:
        order.extend([w1, w2] if x == wl else [x])
    return _from_label_sets(sets, order)


def stellar_subdivide(l: PureComplex, facet, new_label: Optional[str] = None) -> PureComplex:
    """Replace a facet F by the cone from a new vertex over its boundary."""
    f = _resolve_facet(l, facet)
    if new_label is None:
        new_label = fresh_labels("z", 1, l.vertex_labels)[0]
    if new_label in l.vertex_labels:
        raise LabelClash(f"label {new_label!r} already in use")
    sets = [g for g in l.label_sets() if g != f]
    sets += [(f - {v}) | {new_label} for v in f]
    return _from_label_sets(sets, list(l.vertex_labels) + [new_label])


def connected_sum(a: PureComplex, fa, b: PureComplex, fb, matching: Mapping) -> PureComplex:
    """Remove facet ``fa`` of ``a`` and ``fb`` of ``b`` and glue along their
    boundaries, identifying each vertex of ``fb`` with ``matching[vertex]``
    in ``fa``."""
    fa = _resolve_facet(a, fa)
    fb = _resolve_facet(b, fb)
    if a.facet_size != b.facet_size:
        raise BadMatching("complexes have different facet sizes")
    m = {str(k): str(v) for k, v in matching.items()}
    if set(m) != set(fb) or set(m.values()) != set(fa) or len(set(m.values())) != len(m):
        raise BadMatching("matching must be a bijection from fb onto fa")
    clash = (set(b.vertex_labels) - set(fb)) & set(a.vertex_labels)
    if clash:
        raise LabelClash(f"labels outside the glued facets overlap: {sorted(clash)}")
    sets = [g for g in a.label_sets() if g != fa]
    for g in b.label_sets():
        if g != fb:
            sets.append(frozenset(m.get(x, x) for x in g))
    order = list(a.vertex_labels) + [x for x in b.vertex_labels if x not in m]
    return _from_label_sets(sets, order)


def crosspolytope_boundary(d: int, suffix: str = "") -> PureComplex:
    """Boundary of the d-dimensional cross-polytope on ``+i``/``-i``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    labels = [f"+{i}{suffix}" for i in range(1, d + 1)] + [f"-{i}{suffix}" for i in range(1, d + 1)]
    facets = []
    for signs in range(2 ** d):
        facets.append([f"{'-' if signs >> (i - 1) & 1 else '+'}{i}{suffix}" for i in range(1, d + 1)])
    return PureComplex.from_facets(facets, labels)


def boundary_complex(inc: IncidenceStructure) -> PureComplex:
    """The simplicial boundary of a bounded simplicial polytope."""
    if inc.extreme_rays:
        raise NotSimplicial("polyhedron is unbounded")
    if any(len(f) != inc.dim for f in inc.facets):
        raise NotSimplicial("some facet is not a simplex")
    labels = [inc.label(v) for v in range(inc.n_vertices)]
    return PureComplex(tuple(labels), tuple(tuple(sorted(f)) for f in inc.facets), inc.dim)


# --------------------------------------------------------------------------
# topology

def ridge_map(l: PureComplex) -> dict:
    ridges = defaultdict(list)
    for j, f in enumerate(l.facets):
        for i in range(len(f)):
            ridges[f[:i] + f[i + 1:]].append(j)
    return ridges


def dual_graph(l: PureComplex) -> Graph:
    """Facets adjacent iff they share ``facet_size - 1`` vertices."""
    edges = set()
    for fs in ridge_map(l).values():
        for i, j in combinations(fs, 2):
            edges.add((i, j))
    return Graph.from_edges(l.n_facets, sorted(edges))


def skeleton_graph(l: PureComplex) -> Graph:
    """The 1-skeleton (vertex-edge graph)."""
    edges = set()
    for f in l.facets:
        for i, j in combinations(f, 2):
            edges.add((i, j))
    return Graph.from_edges(l.n_vertices, sorted(edges))


def f_vector(l: PureComplex) -> list:
    """Face counts by size 1..facet_size (vertices, edges, ...)."""
    faces = [set() for _ in range(l.facet_size)]
    for f in l.facets:
        for size in range(1, l.facet_size + 1):
            faces[size - 1].update(combinations(f, size))
    return [len(s) for s in faces]


def euler_characteristic(l: PureComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(f_vector(l)))


def _connected(g: Graph) -> bool:
    if g.n_nodes == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n_nodes


def connected_components(g: Graph) -> list:
    seen: set = set()
    comps = []
    for s in range(g.n_nodes):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.adjacency[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def is_closed_pseudomanifold(l: PureComplex) -> bool:
    """Every ridge in exactly two facets and the dual graph connected."""
    if l.facet_size < 2:
        return False
    if any(len(fs) != 2 for fs in ridge_map(l).values()):
        return False
    return _connected(dual_graph(l))


def _is_single_cycle(c: PureComplex) -> bool:
    if c.facet_size != 2 or c.n_vertices < 3:
        return False
    deg = defaultdict(int)
    for f in c.facets:
        for v in f:
            deg[v] += 1
    return all(x == 2 for x in deg.values()) and _connected(skeleton_graph(c))


def is_two_sphere(l: PureComplex) -> bool:
    if l.facet_size != 3:
        return False
    if not is_closed_pseudomanifold(l) or euler_characteristic(l) != 2:
        return False
    return all(_is_single_cycle(link(l, v)) for v in l.vertex_labels)


# --------------------------------------------------------------------------
# isomorphism

def _refined_colors(complexes, rounds: int = 4) -> list:
    """Colour refinement run jointly so colours are comparable across
    the given complexes.  Colours are small integers."""
    colors = []
    for l in complexes:
        deg = [0] * l.n_vertices
        for f in l.facets:
            for v in f:
                deg[v] += 1
        colors.append(deg)
    for _ in range(rounds):
        palette: dict = {}
        new = []
        for l, col in zip(complexes, colors):
            sig = [[] for _ in range(l.n_vertices)]
            for f in l.facets:
                fc = tuple(sorted(col[v] for v in f))
                for v in f:
                    sig[v].append(fc)
            keys = [(col[v], tuple(sorted(sig[v]))) for v in range(l.n_vertices)]
            new.append(keys)
        for key in sorted({k for keys in new for k in keys}):
            palette[key] = len(palette)
        colors = [[palette[k] for k in keys] for keys in new]
    return colors


def isomorphism(a: PureComplex, b: PureComplex) -> Optional[dict]:
    """A vertex bijection a -> b carrying facets onto facets, or None.

    Backtracking over colour classes of an iterated facet-degree
    refinement; fine up to a few dozen vertices.
    """
    if (a.n_vertices, a.n_facets, a.facet_size) != (b.n_vertices, b.n_facets, b.facet_size):
        return None
    ca, cb = _refined_colors([a, b])
    if sorted(ca) != sorted(cb):
        return None
    bfacets = set(b.facets)
    by_vertex = defaultdict(list)
    for f in a.facets:
        for v in f:
            by_vertex[v].append(f)
    classes = defaultdict(list)
    for v, c in enumerate(cb):
        classes[c].append(v)
    order = sorted(range(a.n_vertices), key=lambda v: (len(classes[ca[v]]), v))
    mapping: dict = {}
    used: set = set()

    def consistent(v) -> bool:
        for f in by_vertex[v]:
            if all(x in mapping for x in f):
                if tuple(sorted(mapping[x] for x in f)) not in bfacets:
                    return False
        return True

    def search(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for t in classes[ca[v]]:
            if t in used:
                continue
            mapping[v] = t
            used.add(t)
            if consistent(v) and search(pos + 1):
                return True
            del mapping[v]
            used.discard(t)
        return False

    if not search(0):
        return None
    return {a.vertex_labels[v]: b.vertex_labels[t] for v, t in mapping.items()}


def is_isomorphic(a: PureComplex, b: PureComplex) -> bool:
    return isomorphism(a, b) is not None
