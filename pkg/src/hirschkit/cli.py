"""Command-line interface: ``hirschkit <command> ...``.

Exit status is 0 on success, 1 when a ``verify`` check fails and 2 on
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bounds, constructions, exact
from .complexes import (
    PureComplex,
    boundary_complex,
    connected_components,
    connected_sum,
    dual_graph,
    is_two_sphere,
    iterated_ops,
    ops,
    skeleton_graph,
    stellar_subdivide,
)
from .errors import HirschError
from .formats import document_of, payload_of, read_file
from .geometry import (
    HPolyhedron,
    VPolytope,
    dual_graph_of,
    facets_from_vertices,
    graph_of,
    is_simplicial,
    ops_geometric,
    polar,
    vertices_from_halfspaces,
    wedge,
)
from .paths import (
    INF,
    diameter_with_witness,
    distance,
    dual_distance,
    hirsch_sharpness,
    monotone_distance,
    nonrevisiting_path,
    unique_max,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --------------------------------------------------------------------------
# helpers

def _load(path: str):
    doc = read_file(path)
    return doc, payload_of(doc)


def _incidence(payload):
    if isinstance(payload, VPolytope):
        return facets_from_vertices(payload)
    if isinstance(payload, HPolyhedron):
        return vertices_from_halfspaces(payload)
    raise UsageError("expected a polytope (POINTS or INEQUALITIES)")


def _complex(payload) -> PureComplex:
    if isinstance(payload, PureComplex):
        return payload
    if isinstance(payload, VPolytope):
        inc = facets_from_vertices(payload)
        if is_simplicial(inc):
            return boundary_complex(inc)
    raise UsageError("expected a simplicial complex or simplicial V-polytope")


def _split(spec: str, known) -> list:
    """A facet or vertex spec: comma-separated labels, or a run of
    single-character labels such as ``abcd``."""
    if "," in spec:
        return [x.strip() for x in spec.split(",") if x.strip()]
    if spec in known:
        return [spec]
    if all(ch in known for ch in spec):
        return list(spec)
    return [spec]


def _fmt(x) -> str:
    if x == INF:
        return "inf"
    return str(x)


def _emit(args, payload, **extra) -> None:
    text = document_of(payload, **extra).to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(args, result: dict, text: str) -> None:
    if args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands

def cmd_gen(args) -> int:
    inst = constructions.named_instance(args.name, *args.params)
    extra = {}
    if args.name == "todd":
        extra["objective"] = constructions.todd_monotone_instance().objective
    _emit(args, inst.payload, **extra)
    return OK


def cmd_facets(args) -> int:
    doc, payload = _load(args.file)
    if not isinstance(payload, VPolytope):
        raise UsageError("facets expects a POINTS file")
    inc = facets_from_vertices(payload)
    out = document_of(payload, facets=inc.facets)
    halfspaces = document_of(HPolyhedron(inc.facet_hyperplanes, inc.equations))
    for name, body in halfspaces.sections.items():
        out.add(name, body)
    sys.stdout.write(out.to_text())
    return OK


def cmd_vertices(args) -> int:
    doc, payload = _load(args.file)
    if not isinstance(payload, HPolyhedron):
        raise UsageError("vertices expects an INEQUALITIES file")
    inc = vertices_from_halfspaces(payload)
    out = document_of(VPolytope(inc.vertices), facets=inc.facets)
    sys.stdout.write(out.to_text())
    for base, r in inc.rays:
        print(f"# ray from {base}: " + " ".join(exact.format_rational(x) for x in r))
    return OK


def cmd_diameter(args) -> int:
    doc, payload = _load(args.file)
    if isinstance(payload, PureComplex):
        g = dual_graph(payload) if args.dual else skeleton_graph(payload)
        names = [",".join(payload.facet_labels(j)) for j in range(payload.n_facets)] if args.dual else list(payload.vertex_labels)
    else:
        inc = _incidence(payload)
        if args.dual:
            g = dual_graph_of(inc)
            names = [str(j) for j in range(inc.n_facets)]
        else:
            g = graph_of(inc)
            names = [inc.label(v) for v in range(inc.n_vertices)]
    diam, (u, v) = diameter_with_witness(g)
    _report(args, {"diameter": _fmt(diam), "witness": [names[u], names[v]]}, _fmt(diam))
    return OK


def cmd_distance(args) -> int:
    doc, payload = _load(args.file)
    if isinstance(payload, PureComplex):
        known = set(payload.vertex_labels)
        if args.dual:
            d = dual_distance(payload, _split(args.source, known), _split(args.target, known))
        else:
            d = distance(skeleton_graph(payload), payload.index(args.source), payload.index(args.target))
    else:
        inc = _incidence(payload)
        if args.dual:
            known = set(inc.labels or ())
            f = inc.facet_index(_split(args.source, known))
            g = inc.facet_index(_split(args.target, known))
            d = distance(dual_graph_of(inc), f, g)
        else:
            d = distance(graph_of(inc), inc.vertex_index(args.source), inc.vertex_index(args.target))
    _report(args, {"distance": _fmt(d)}, _fmt(d))
    return OK


def cmd_nonrevisit(args) -> int:
    doc, payload = _load(args.file)
    l = _complex(payload)
    known = set(l.vertex_labels)
    path = nonrevisiting_path(l, _split(args.source, known), _split(args.target, known))
    if path is None:
        _report(args, {"path": None}, "none")
        return OK
    order = {x: i for i, x in enumerate(l.vertex_labels)}
    steps = ["".join(sorted(f, key=order.get)) if all(len(x) == 1 for x in f) else ",".join(sorted(f, key=order.get)) for f in path.facets]
    _report(args, {"length": len(path), "path": steps}, f"{len(path)}: " + " ".join(steps))
    return OK


def cmd_monotone(args) -> int:
    doc, payload = _load(args.file)
    inc = _incidence(payload)
    if args.c:
        c = tuple(exact.rational(x.strip()) for x in args.c.split(","))
    else:
        c = doc.objective()
        if c is None:
            raise UsageError("give --c or an OBJECTIVE section")
    d = monotone_distance(inc, c, _vertex_key(args.source), _vertex_key(args.target))
    _report(args, {"monotone_distance": _fmt(d)}, _fmt(d))
    return OK


def _vertex_key(s: str):
    if "," in s:
        return tuple(exact.rational(x.strip()) for x in s.split(","))
    return s


def cmd_bounds(args) -> int:
    report = bounds.bound_report(args.n, args.d)
    if args.json:
        data = report.as_dict()
        data["kk_power"] = list(report.kk_power)
        print(json.dumps(data, sort_keys=True))
        return OK
    rows = report.rows()
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name.ljust(width)}  {value}")
    return OK


# --------------------------------------------------------------------------
# verify

def _check(checks: list, label: str, ok: bool) -> None:
    checks.append((label, bool(ok)))


def verify_q4() -> list:
    checks = []
    inc = facets_from_vertices(constructions.klee_walkup_q4())
    l = boundary_complex(inc)
    _check(checks, f"facets: {inc.n_facets}", inc.n_facets == 27)
    d = dual_distance(l, "abcd", "efgh")
    _check(checks, f"distance(abcd,efgh)={d}", d == 5)
    v = hirsch_sharpness(l)
    _check(checks, f"sharp: {v.diameter}={v.n}−{v.d}", v.sharp)
    return checks


def verify_maniwalkup() -> list:
    checks = []
    k = constructions.mani_walkup_K()
    _check(checks, f"triangles: {k.n_facets}", k.n_facets == 32)
    comps = connected_components(dual_graph(k))
    _check(checks, f"components: {len(comps)}", len(comps) == 2)
    b1 = constructions.octagon_bipyramid(constructions.OCTAGON_1, "r", "t")
    b2 = constructions.octagon_bipyramid(constructions.OCTAGON_2, "q", "s")
    split = set(k.label_sets()) == set(b1.label_sets()) | set(b2.label_sets())
    _check(checks, "bipyramids", split and is_two_sphere(b1) and is_two_sphere(b2))
    e1 = constructions.octagon_edges(constructions.OCTAGON_1)
    e2 = constructions.octagon_edges(constructions.OCTAGON_2)
    _check(checks, f"octagon edges: {len(e1)}/{len(e2)} shared {len(e1 & e2)}", not e1 & e2)
    return checks


def verify_klee(k: int) -> list:
    checks = []
    l = constructions.klee_3sphere_family(k)
    diam = hirsch_sharpness(l).diameter
    _check(checks, f"vertices: {l.n_vertices}", l.n_vertices == 3 + 3 * k)
    _check(checks, f"diameter: {diam}={2 * k + 1}", diam == 2 * k + 1)
    if l.n_vertices >= 4:
        kf = bounds.klee_formula(l.n_vertices)
        _check(checks, f"klee formula: {kf}", diam == kf)
    return checks


def verify_crosschain(d: int, copies: int) -> list:
    checks = []
    l = constructions.crosspolytope_chain(d, copies)
    diam = hirsch_sharpness(l).diameter
    n = (copies + 1) * d
    _check(checks, f"vertices: {l.n_vertices}", l.n_vertices == n)
    _check(checks, f"diameter: {diam}={1 + copies * (d - 1)}", diam == 1 + copies * (d - 1))
    lb = bounds.lower_bound_formula(n, d)
    _check(checks, f"lower bound formula: {lb}", diam == lb)
    return checks


def verify_fhk(copies: int) -> list:
    checks = []
    l = constructions.fhk_chain(copies)
    v = hirsch_sharpness(l)
    _check(checks, f"vertices: {l.n_vertices}", l.n_vertices == 8 + 5 * copies)
    _check(checks, f"sharp: {v.diameter}={v.n}−{v.d}", v.sharp)
    return checks


def verify_todd() -> list:
    checks = []
    t = constructions.todd_monotone_instance()
    inc = vertices_from_halfspaces(t.polyhedron)
    _check(checks, f"facets: {inc.n_facets}", inc.n_facets == 8)
    _check(checks, "bounded", inc.bounded)
    top = unique_max(inc, t.objective)
    _check(checks, "unique max v'", top is not None and inc.vertices[top] == t.v)
    md = monotone_distance(inc, t.objective, t.u, t.v)
    _check(checks, f"monotone distance: {_fmt(md)}>=5", md >= 5)
    gd = distance(graph_of(inc), inc.vertex_index(t.u), inc.vertex_index(t.v))
    _check(checks, f"graph distance: {_fmt(gd)}", gd <= md)
    return checks


def verify_transport() -> list:
    checks = []
    ax = vertices_from_halfspaces(constructions.axial_transportation([1, 1], [1, 1], [1, 1]))
    _check(checks, f"axial dim: {ax.dim}", ax.dim == 4)
    _check(checks, f"axial facets: {ax.n_facets}<=8", ax.n_facets <= 8)
    ones = [[1, 1], [1, 1]]
    pl = vertices_from_halfspaces(constructions.planar_transportation(ones, ones, ones))
    _check(checks, f"planar dim: {pl.dim}", pl.dim == 1)
    _check(checks, f"planar facets: {pl.n_facets}<=8", pl.n_facets <= 8)
    return checks


VERIFIERS = {
    "q4": (verify_q4, 0),
    "maniwalkup": (verify_maniwalkup, 0),
    "klee": (verify_klee, 1),
    "crosschain": (verify_crosschain, 2),
    "fhk": (verify_fhk, 1),
    "todd": (verify_todd, 0),
    "transport": (verify_transport, 0),
}


def cmd_verify(args) -> int:
    if args.name not in VERIFIERS:
        raise UsageError(f"unknown instance {args.name!r}; choose from {', '.join(VERIFIERS)}")
    fn, arity = VERIFIERS[args.name]
    if len(args.params) != arity:
        raise UsageError(f"verify {args.name} takes {arity} integer parameter(s)")
    try:
        params = [int(x) for x in args.params]
    except ValueError:
        raise UsageError("parameters must be integers") from None
    checks = fn(*params)
    ok = all(c for _, c in checks)
    text = ", ".join(f"{label} {'OK' if c else 'FAIL'}" for label, c in checks)
    _report(args, {"instance": args.name, "ok": ok, "checks": [{"check": l, "ok": c} for l, c in checks]}, text)
    return OK if ok else FAILED


# --------------------------------------------------------------------------
# transformations

def cmd_polar(args) -> int:
    doc, payload = _load(args.file)
    if not isinstance(payload, VPolytope):
        raise UsageError("polar expects a POINTS file")
    _emit(args, polar(payload))
    return OK


def cmd_wedge(args) -> int:
    doc, payload = _load(args.file)
    if not isinstance(payload, HPolyhedron):
        raise UsageError("wedge expects an INEQUALITIES file")
    _emit(args, wedge(payload, args.facet))
    return OK


def cmd_ops(args) -> int:
    doc, payload = _load(args.file)
    if isinstance(payload, VPolytope) and args.k == 1:
        # a single suspension can be realized geometrically
        inc = facets_from_vertices(payload)
        _emit(args, ops_geometric(payload, inc.vertex_index(args.vertex)))
        return OK
    l = _complex(payload)
    if args.k == 1:
        _emit(args, ops(l, args.vertex))
    else:
        _emit(args, iterated_ops(l, args.vertex, args.k))
    return OK


def cmd_stellar(args) -> int:
    doc, payload = _load(args.file)
    l = _complex(payload)
    _emit(args, stellar_subdivide(l, _split(args.facet, set(l.vertex_labels)), args.label))
    return OK


def cmd_glue(args) -> int:
    _, pa = _load(args.file_a)
    _, pb = _load(args.file_b)
    a, b = _complex(pa), _complex(pb)
    fa = _split(args.facet_a, set(a.vertex_labels))
    fb = _split(args.facet_b, set(b.vertex_labels))
    if args.match:
        pairs = [p.split("=") for p in args.match.split(",")]
        if any(len(p) != 2 for p in pairs):
            raise UsageError("--match takes b1=a1,b2=a2,...")
        matching = {x.strip(): y.strip() for x, y in pairs}
    else:
        matching = dict(zip(fb, fa))
    _emit(args, connected_sum(a, fa, b, fb, matching))
    return OK


# --------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hirschkit", description="Exact polytope and complex tools for diameter questions.")
    p.add_argument("--json", action="store_true", help="machine-readable output and errors")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return sp

    def output(sp):
        sp.add_argument("-o", "--output", help="write to FILE instead of stdout")

    sp = add("gen", cmd_gen, "generate a named instance")
    sp.add_argument("name", choices=sorted(constructions.GENERATORS))
    sp.add_argument("params", nargs="*")
    output(sp)

    sp = add("facets", cmd_facets, "facet enumeration of a POINTS file")
    sp.add_argument("file")

    sp = add("vertices", cmd_vertices, "vertex enumeration of an INEQUALITIES file")
    sp.add_argument("file")

    sp = add("diameter", cmd_diameter, "graph diameter")
    sp.add_argument("file")
    sp.add_argument("--dual", action="store_true", help="use the dual (facet-ridge) graph")

    sp = add("distance", cmd_distance, "distance between two vertices or facets")
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("--dual", action="store_true")

    sp = add("nonrevisit", cmd_nonrevisit, "shortest non-revisiting dual path")
    sp.add_argument("file")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)

    sp = add("monotone", cmd_monotone, "shortest monotone path")
    sp.add_argument("file")
    sp.add_argument("--c", help="objective as comma-separated rationals")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)

    sp = add("bounds", cmd_bounds, "diameter bounds for n facets in dimension d")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--table", action="store_true", help="aligned table (default)")

    sp = add("verify", cmd_verify, "check a named construction")
    sp.add_argument("name")
    sp.add_argument("params", nargs="*")

    sp = add("polar", cmd_polar, "polar of a POINTS file")
    sp.add_argument("file")
    output(sp)

    sp = add("wedge", cmd_wedge, "wedge over an inequality")
    sp.add_argument("file")
    sp.add_argument("--facet", type=int, required=True, help="inequality index")
    output(sp)

    sp = add("ops", cmd_ops, "one-point suspension at a vertex")
    sp.add_argument("file")
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--k", type=int, default=1, help="number of suspensions")
    output(sp)

    sp = add("stellar", cmd_stellar, "stellar subdivision of a facet")
    sp.add_argument("file")
    sp.add_argument("--facet", required=True)
    sp.add_argument("--label", default=None)
    output(sp)

    sp = add("glue", cmd_glue, "connected sum of two complexes along facets")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--facet-a", required=True)
    sp.add_argument("--facet-b", required=True)
    sp.add_argument("--match", help="vertex matching b1=a1,b2=a2,... (default: in order)")
    output(sp)
    return p


def cli_main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    as_json = "--json" in (argv if argv is not None else sys.argv[1:])
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing command")
        return args.func(args)
    except UsageError as exc:
        return _fail(as_json, "usage", str(exc), parser)
    except (HirschError, OSError, ValueError) as exc:
        return _fail(as_json, type(exc).__name__, str(exc))


def _fail(as_json: bool, kind: str, message: str, parser=None) -> int:
    if as_json:
        print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    else:
        if parser is not None:
            parser.print_usage(sys.stderr)
        print(f"hirschkit: error: {message}", file=sys.stderr)
    return USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
