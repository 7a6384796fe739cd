"""Text and JSON file formats.

The text format is a polymake-style fragment: a section name on its own
line at column 0, followed by body lines up to the next blank line::

    LABELS
     w a b c

    POINTS
     1  0  0
     1  1  0

    VERTICES_IN_FACETS
     {0 1}

POINTS rows are homogenized (leading 1).  INEQUALITIES and EQUATIONS rows
are ``b -a1 ... -ad``, meaning ``b - a.x >= 0`` (or ``= 0``).  FACETS and
VERTICES_IN_FACETS list 0-indexed vertex sets; LABELS names the vertices.
OBJECTIVE is a single row of coefficients.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional, Union

from . import exact
from .complexes import PureComplex
from .errors import ParseError
from .geometry import HPolyhedron, VPolytope

SECTIONS = (
    "LABELS",
    "POINTS",
    "INEQUALITIES",
    "EQUATIONS",
    "OBJECTIVE",
    "VERTICES_IN_FACETS",
    "FACETS",
)
FORMAT_VERSION = 1

_HEADER = re.compile(r"^[A-Z][A-Z_]*$")
_SET = re.compile(r"^\{([0-9 ]*)\}$")

Payload = Union[VPolytope, HPolyhedron, PureComplex]


@dataclass
class Document:
    """Ordered section name -> body lines (trailing whitespace removed).

    ``line_numbers`` remembers where each body line came from so typed
    accessors can point at the offending line.
    """

    sections: dict = field(default_factory=dict)
    line_numbers: dict = field(default_factory=dict)

    def add(self, name: str, lines) -> None:
        if name not in SECTIONS:
            raise ValueError(f"unknown section {name}")
        if name in self.sections:
            raise ValueError(f"duplicate section {name}")
        lines = [str(x).rstrip() for x in lines]
        if not lines:
            raise ValueError(f"section {name} is empty")
        self.sections[name] = lines

    def __contains__(self, name) -> bool:
        return name in self.sections

    def to_text(self) -> str:
        blocks = [name + "\n" + "".join(line + "\n" for line in body) for name, body in self.sections.items()]
        return "\n".join(blocks)

    def _rows(self, name):
        numbers = self.line_numbers.get(name, [None] * len(self.sections[name]))
        return zip(numbers, self.sections[name])

    # typed accessors ---------------------------------------------------

    def labels(self) -> Optional[tuple]:
        if "LABELS" not in self:
            return None
        return tuple(tok for _, line in self._rows("LABELS") for tok in line.split())

    def rational_rows(self, name: str) -> list:
        rows = []
        width = None
        for number, line in self._rows(name):
            try:
                row = tuple(exact.rational(tok) for tok in line.split())
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad number in {name}: {exc}", number) from None
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ParseError(f"{name} row has {len(row)} entries, expected {width}", number)
            rows.append((number, row))
        return rows

    def points(self) -> tuple:
        pts = []
        for number, row in self.rational_rows("POINTS"):
            if len(row) < 2:
                raise ParseError("POINTS row needs a coordinate after the leading 1", number)
            if row[0] != 1:
                raise ParseError("POINTS row is not homogenized (leading entry must be 1)", number)
            pts.append(row[1:])
        return tuple(pts)

    def halfspaces(self, name: str) -> tuple:
        out = []
        for number, row in self.rational_rows(name):
            if len(row) < 2:
                raise ParseError(f"{name} row needs a normal", number)
            out.append((tuple(-x for x in row[1:]), row[0]))
        return tuple(out)

    def vertex_sets(self, name: str) -> list:
        sets = []
        for number, line in self._rows(name):
            m = _SET.match(line.strip())
            if not m:
                raise ParseError(f"{name} row must look like {{i j k}}", number)
            sets.append(tuple(int(x) for x in m.group(1).split()))
        return sets

    def objective(self) -> Optional[tuple]:
        if "OBJECTIVE" not in self:
            return None
        rows = self.rational_rows("OBJECTIVE")
        if len(rows) != 1:
            raise ParseError("OBJECTIVE must be a single row", rows[1][0])
        return rows[0][1]


def parse_document(text: str) -> Document:
    """Split text into sections, checking names and structure."""
    doc = Document()
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line or line.lstrip().startswith("#"):
            current = None
            continue
        if current is None:
            name = line
            if not _HEADER.match(name):
                raise ParseError(f"expected a section name, got {line.strip()!r}", number)
            if name not in SECTIONS:
                raise ParseError(f"unknown section {name}", number)
            if name in doc.sections:
                raise ParseError(f"duplicate section {name}", number)
            doc.sections[name] = []
            doc.line_numbers[name] = []
            current = name
            continue
        doc.sections[current].append(line)
        doc.line_numbers[current].append(number)
    for name, body in doc.sections.items():
        if not body:
            raise ParseError(f"section {name} is empty")
    return doc


# --------------------------------------------------------------------------
# emitting

def _aligned(rows) -> list:
    """Right-justify every entry to the widest entry of the whole block."""
    cells = [[exact.format_rational(exact.rational(x)) for x in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=0)
    return [" ".join(c.rjust(width) for c in row) for row in cells]


def _sets(sets) -> list:
    return [" {" + " ".join(str(i) for i in s) + "}" for s in sets]


def document_of(payload: Payload, facets=None, objective=None) -> Document:
    """Document for a payload.  ``facets`` (0-indexed vertex sets, kept in
    the given order) become VERTICES_IN_FACETS next to POINTS or
    INEQUALITIES."""
    doc = Document()
    if isinstance(payload, VPolytope):
        if payload.labels is not None:
            doc.add("LABELS", [" " + " ".join(payload.labels)])
        doc.add("POINTS", _aligned([(1,) + tuple(p) for p in payload.points]))
    elif isinstance(payload, HPolyhedron):
        doc.add("INEQUALITIES", _aligned([(b,) + tuple(-x for x in a) for a, b in payload.inequalities]))
        if payload.equalities:
            doc.add("EQUATIONS", _aligned([(b,) + tuple(-x for x in a) for a, b in payload.equalities]))
    elif isinstance(payload, PureComplex):
        doc.add("LABELS", [" " + " ".join(payload.vertex_labels)])
        doc.add("FACETS", _sets(payload.facets))
    else:
        raise TypeError(f"cannot write {type(payload).__name__}")
    if objective is not None:
        doc.add("OBJECTIVE", _aligned([objective]))
    if facets is not None:
        doc.add("VERTICES_IN_FACETS", _sets(sorted(f) for f in facets))
    return doc


def payload_of(doc: Document) -> Payload:
    """The main object a document describes."""
    labels = doc.labels()
    if "POINTS" in doc:
        pts = doc.points()
        if labels is not None and len(labels) != len(pts):
            raise ParseError(f"LABELS has {len(labels)} names for {len(pts)} points")
        try:
            return VPolytope(pts, labels)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if "INEQUALITIES" in doc:
        ineqs = doc.halfspaces("INEQUALITIES")
        eqs = doc.halfspaces("EQUATIONS") if "EQUATIONS" in doc else ()
        try:
            return HPolyhedron(ineqs, eqs)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if "FACETS" in doc:
        sets = doc.vertex_sets("FACETS")
        n = 1 + max((i for s in sets for i in s), default=-1)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        if n > len(labels):
            raise ParseError(f"FACETS uses vertex {n - 1} but only {len(labels)} labels are given")
        try:
            return PureComplex.from_facets([[labels[i] for i in s] for s in sets], labels)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError("document has no POINTS, INEQUALITIES or FACETS section")


def loads(text: str) -> Payload:
    return payload_of(parse_document(text))


def dumps(payload: Payload, facets=None, objective=None) -> str:
    return document_of(payload, facets, objective).to_text()


def read_file(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())


def write_file(path, payload: Payload, facets=None, objective=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(payload, facets, objective))


def golden_text(name: str) -> str:
    """Contents of a bundled data file, e.g. ``golden_text("q4.poly")``."""
    return resources.files("hirschkit").joinpath("data", name).read_text(encoding="utf-8")


def canonical(text: str) -> str:
    """Text with trailing whitespace stripped from every line and exactly
    one blank line between sections."""
    return parse_document(text).to_text()


# --------------------------------------------------------------------------
# JSON mirror

def to_json(doc: Document) -> dict:
    """Typed JSON mirror of a document; numbers are ``"p/q"`` strings."""
    out: dict = {"format_version": FORMAT_VERSION}
    fmt = exact.format_rational
    for name in doc.sections:
        key = name.lower()
        if name == "LABELS":
            out[key] = list(doc.labels())
        elif name == "POINTS":
            out[key] = [[fmt(x) for x in p] for p in doc.points()]
        elif name in ("INEQUALITIES", "EQUATIONS"):
            out[key] = [{"normal": [fmt(x) for x in a], "rhs": fmt(b)} for a, b in doc.halfspaces(name)]
        elif name == "OBJECTIVE":
            out[key] = [fmt(x) for x in doc.objective()]
        else:
            out[key] = [list(s) for s in doc.vertex_sets(name)]
    return out


def from_json(data: dict) -> Document:
    version = data.get("format_version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}")
    doc = Document()
    for key, body in data.items():
        if key == "format_version":
            continue
        name = key.upper()
        if name not in SECTIONS:
            raise ParseError(f"unknown section {key!r}")
        if name == "LABELS":
            doc.add(name, [" " + " ".join(str(x) for x in body)])
        elif name == "POINTS":
            doc.add(name, _aligned([(1,) + tuple(Fraction(x) for x in p) for p in body]))
        elif name in ("INEQUALITIES", "EQUATIONS"):
            rows = [(Fraction(h["rhs"]),) + tuple(-Fraction(x) for x in h["normal"]) for h in body]
            doc.add(name, _aligned(rows))
        elif name == "OBJECTIVE":
            doc.add(name, _aligned([[Fraction(x) for x in body]]))
        else:
            doc.add(name, _sets(body))
    return doc
