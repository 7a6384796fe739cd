"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator), vectors are tuples of Fractions and matrices are
tuples of row tuples.  Nothing in this package ever touches a float.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import EmptyInput, ParseError

Rational = Fraction
RVector = tuple  # tuple[Fraction, ...]
RMatrix = tuple  # tuple[RVector, ...]


def rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                return Fraction(int(p), int(q))
            return Fraction(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {x!r}") from exc
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def vec(xs: Iterable) -> RVector:
    return tuple(rational(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> RMatrix:
    m = tuple(vec(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows must all have the same length")
    return m


def format_rational(x: Fraction) -> str:
    """``p/q``, or ``p`` when the denominator is 1."""
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u, v) -> RVector:
    return tuple(a - b for a, b in zip(u, v))


def add(u, v) -> RVector:
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v) -> RVector:
    return tuple(c * a for a in v)


def transpose(m: RMatrix) -> RMatrix:
    return tuple(zip(*m)) if m else ()


def matvec(m: RMatrix, v: Sequence[Fraction]) -> RVector:
    return tuple(dot(row, v) for row in m)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; pivot is the first row (top-down) with a
    nonzero entry in the current column."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _int_rows(m) -> list[list[int]]:
    """Scale each row to integers (row scaling keeps rank and kernel)."""
    out = []
    for row in m:
        row = [rational(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _int_rank(rows: list[list[int]]) -> int:
    # fraction-free (Bareiss) elimination
    rows = [r[:] for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, len(rows)):
            ric = rows[i][c]
            rows[i] = [(piv * a - ric * b) // prev for a, b in zip(rows[i], rows[r])]
        prev = piv
        r += 1
        if r == len(rows):
            break
    return r


def rank(m) -> int:
    """Rank over the rationals."""
    m = list(m)
    if not m or not len(m[0]):
        return 0
    return _int_rank(_int_rows(m))


def nullspace(m) -> list[RVector]:
    """A basis of ``{x : m x = 0}``, one vector per free column."""
    m = [list(vec(r)) for r in m]
    if not m:
        raise ValueError("nullspace of an empty matrix needs a column count")
    ncols = len(m[0])
    red, pivots = _rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -red[i][f]
        basis.append(tuple(x))
    return basis


def system_status(m, b) -> str:
    """``"unique"``, ``"inconsistent"`` or ``"underdetermined"``."""
    m = [list(vec(r)) for r in m]
    b = vec(b)
    if len(m) != len(b):
        raise ValueError("row count of m must match length of b")
    ncols = len(m[0]) if m else 0
    aug = [r + [bi] for r, bi in zip(m, b)]
    red, pivots = _rref(aug)
    if ncols in pivots:
        return "inconsistent"
    if len(pivots) < ncols:
        return "underdetermined"
    return "unique"


def solve_linear(m, b) -> Optional[RVector]:
    """The unique exact solution of ``m x = b``, or None.

    None covers both the inconsistent and the non-unique case; use
    :func:`system_status` to tell them apart.
    """
    m = [list(vec(r)) for r in m]
    b = vec(b)
    if len(m) != len(b):
        raise ValueError("row count of m must match length of b")
    if not m:
        return None
    ncols = len(m[0])
    aug = [r + [bi] for r, bi in zip(m, b)]
    red, pivots = _rref(aug)
    if ncols in pivots or len(pivots) < ncols:
        return None
    return tuple(red[i][ncols] for i in range(ncols))


def determinant(m) -> Fraction:
    m = [list(vec(r)) for r in m]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * bb for a, bb in zip(m[i], m[c])]
    return det


def inverse(m) -> RMatrix:
    m = [list(vec(r)) for r in m]
    n = len(m)
    eye = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = _rref([r + e for r, e in zip(m, eye)])
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(tuple(r[n:]) for r in red)


def affine_dim(points) -> int:
    """Dimension of the affine hull; a single point gives 0."""
    points = [vec(p) for p in points]
    if not points:
        raise EmptyInput("affine_dim of an empty point list")
    p0 = points[0]
    if len(points) == 1:
        return 0
    return rank([sub(p, p0) for p in points[1:]])


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd; direction is kept."""
    ints = _int_rows([v])[0]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
