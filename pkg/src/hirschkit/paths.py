"""Distances, diameters, non-revisiting and monotone paths, and
Hirsch-sharpness verdicts."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import exact
from .complexes import PureComplex, _resolve_facet, connected_components, dual_graph
from .errors import BadVertex, Disconnected, TieError
from .geometry import Graph, IncidenceStructure, graph_of

INF = math.inf


def bfs(g: Graph, source: int) -> list:
    """Distances from ``source``; unreachable nodes get ``INF``."""
    dist = [INF] * g.n_nodes
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def distance(g: Graph, u: int, v: int):
    for x in (u, v):
        if not 0 <= x < g.n_nodes:
            raise BadVertex(f"no node {x}")
    return bfs(g, u)[v]


def diameter_with_witness(g: Graph) -> tuple:
    """``(diameter, (u, v))`` with the lexicographically least pair
    attaining it; ``(INF, pair)`` for a disconnected graph."""
    best, pair = 0, (0, 0)
    for u in range(g.n_nodes):
        dist = bfs(g, u)
        for v in range(u + 1, g.n_nodes):
            if dist[v] > best:
                best, pair = dist[v], (u, v)
                if best == INF:
                    return best, pair
    return best, pair


def diameter(g: Graph):
    return diameter_with_witness(g)[0]


def dual_distance(l: PureComplex, f, g) -> int:
    a = l.facet_index(_resolve_facet(l, f))
    b = l.facet_index(_resolve_facet(l, g))
    return bfs(dual_graph(l), a)[b]


def dual_diameter(l: PureComplex):
    return diameter(dual_graph(l))


# --------------------------------------------------------------------------
# non-revisiting paths

@dataclass(frozen=True)
class DualPath:
    """A walk through adjacent facets, stored as facet label sets."""

    facets: tuple

    def __post_init__(self):
        fs = tuple(frozenset(f) for f in self.facets)
        for a, b in zip(fs, fs[1:]):
            if len(a - b) != 1 or len(b - a) != 1:
                raise ValueError("consecutive facets must share a ridge")
        object.__setattr__(self, "facets", fs)

    def __len__(self) -> int:
        return len(self.facets) - 1

    def is_nonrevisiting(self) -> bool:
        abandoned: set = set()
        for a, b in zip(self.facets, self.facets[1:]):
            if (b - a) & abandoned:
                return False
            abandoned |= a - b
        return True


def _masks(l: PureComplex) -> list:
    return [sum(1 << v for v in f) for f in l.facets]


def _nr_search(l: PureComplex, start: int, adj, masks, target: Optional[int] = None):
    """BFS over (facet, abandoned-vertex mask) states, pruning states
    dominated by an earlier one at the same facet with a subset of
    abandoned vertices.  Returns ``(parents, reached)``."""
    visited = {start: [0]}
    parent = {(start, 0): None}
    q = deque([(start, 0)])
    while q:
        f, ab = q.popleft()
        if f == target:
            return parent, (f, ab)
        for g in adj[f]:
            added = masks[g] & ~masks[f]
            if added & ab:
                continue
            nab = ab | (masks[f] & ~masks[g])
            seen = visited.setdefault(g, [])
            if any(m & nab == m for m in seen):
                continue
            seen[:] = [m for m in seen if m & nab != nab]
            seen.append(nab)
            parent[(g, nab)] = (f, ab)
            q.append((g, nab))
    return parent, None


def nonrevisiting_path(l: PureComplex, f, g) -> Optional[DualPath]:
    """Shortest dual path from facet f to facet g that never re-enters an
    abandoned vertex, or None if there is none."""
    a = l.facet_index(_resolve_facet(l, f))
    b = l.facet_index(_resolve_facet(l, g))
    adj = dual_graph(l).adjacency
    parent, end = _nr_search(l, a, adj, _masks(l), target=b)
    if end is None:
        return None
    states = []
    s = end
    while s is not None:
        states.append(s[0])
        s = parent[s]
    states.reverse()
    path = DualPath(tuple(frozenset(l.facet_labels(j)) for j in states))
    assert len(path) <= l.n_vertices - l.facet_size
    return path


def nonrevisiting_property(l: PureComplex) -> tuple:
    """``(True, None)`` if every ordered facet pair is joined by a
    non-revisiting path, else ``(False, (F, G))`` for the first failing
    pair in facet order."""
    g = dual_graph(l)
    if len(connected_components(g)) > 1:
        raise Disconnected("dual graph is disconnected")
    masks = _masks(l)
    for a in range(l.n_facets):
        parent, _ = _nr_search(l, a, g.adjacency, masks)
        reached = {f for f, _ in parent}
        for b in range(l.n_facets):
            if b not in reached:
                return False, (l.facet_labels(a), l.facet_labels(b))
    return True, None


# --------------------------------------------------------------------------
# monotone paths

def monotone_distance(inc: IncidenceStructure, c, u, v):
    """Length of the shortest edge path from u to v along which ``c.x``
    strictly increases; ``INF`` if there is none.

    An edge met during the search on which ``c`` is constant raises
    :class:`TieError`.
    """
    if inc.vertices is None:
        raise ValueError("monotone paths need vertex coordinates")
    c = exact.vec(c)
    u, v = inc.vertex_index(u), inc.vertex_index(v)
    g = graph_of(inc)
    val = [exact.dot(c, x) for x in inc.vertices]
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        if x == v:
            return dist[x]
        for y in sorted(g.adjacency[x]):
            if val[y] == val[x]:
                raise TieError(f"functional is constant on edge {x}-{y}")
            if val[y] > val[x] and y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return INF


def unique_max(inc: IncidenceStructure, c) -> Optional[int]:
    """Index of the unique vertex maximising ``c``, or None on ties."""
    if inc.vertices is None:
        raise ValueError("needs vertex coordinates")
    c = exact.vec(c)
    vals = [exact.dot(c, x) for x in inc.vertices]
    top = max(vals)
    winners = [i for i, x in enumerate(vals) if x == top]
    return winners[0] if len(winners) == 1 else None


# --------------------------------------------------------------------------
# Hirsch sharpness

@dataclass(frozen=True)
class SharpnessVerdict:
    n: int
    d: int
    diameter: int
    witness: tuple

    @property
    def hirsch_bound(self) -> int:
        return self.n - self.d

    @property
    def sharp(self) -> bool:
        return self.diameter == self.n - self.d

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "diameter": self.diameter,
            "hirsch_bound": self.hirsch_bound,
            "sharp": self.sharp,
            "witness": [sorted(w) if isinstance(w, (set, frozenset, tuple, list)) else w for w in self.witness],
        }


def hirsch_sharpness(l: PureComplex) -> SharpnessVerdict:
    """Simplicial convention: n vertices, dimension ``facet_size``,
    diameter of the dual graph."""
    diam, (a, b) = diameter_with_witness(dual_graph(l))
    if diam == INF:
        raise Disconnected("dual graph is disconnected")
    return SharpnessVerdict(l.n_vertices, l.facet_size, diam, (l.facet_labels(a), l.facet_labels(b)))


def hirsch_sharpness_polytope(inc: IncidenceStructure) -> SharpnessVerdict:
    """Simple/primal convention: n facets, polytope dimension, diameter of
    the vertex graph."""
    diam, (a, b) = diameter_with_witness(graph_of(inc))
    if diam == INF:
        raise Disconnected("graph is disconnected")
    return SharpnessVerdict(inc.n_facets, inc.dim, diam, (inc.label(a), inc.label(b)))
