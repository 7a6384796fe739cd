"""Classical upper and lower bounds on polytope diameters.

All values are exact; the quasi-polynomial bound ``n^(log2 d + 1)`` is
compared through integer powers and never evaluated in floating point.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import BadInput


def _natural(name, x, low):
    if isinstance(x, bool) or not isinstance(x, int):
        raise BadInput(f"{name} must be an integer")
    if x < low:
        raise BadInput(f"{name} must be at least {low}")


def klee_formula(n: int) -> int:
    """Exact maximum diameter of a 3-polytope with n facets."""
    _natural("n", n, 4)
    return 2 * n // 3 - 1


def lower_bound_formula(n: int, d: int) -> int:
    """Diameter reached by gluing cross-polytopes: floor((d-1)n/d) - (d-2)."""
    _natural("d", d, 2)
    _natural("n", n, d)
    return (d - 1) * n // d - (d - 2)


def larman_bound(n: int, d: int) -> int:
    """n 2^(d-3)."""
    _natural("d", d, 3)
    _natural("n", n, d + 1)
    return n * 2 ** (d - 3)


def _ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def kalai_kleitman_binomial(n: int, d: int) -> int:
    """2^k C(k+d, d) with k = ceil(log2 n)."""
    _natural("n", n, 2)
    _natural("d", d, 2)
    k = _ceil_log2(n)
    return 2 ** k * comb(k + d, d)


def kk_recursion_table(max_k: int, max_d: int) -> dict:
    """Table of ``h(k, d) = (H(2^k, d) - 1) / 2^k`` generated by
    ``h(k,d) = h(k-1,d) + h(k,d-1)`` for ``0 <= k <= max_k``,
    ``2 <= d <= max_d``.

    Base rows: ``h(0, d) = 0`` and, from the exact polygon diameter
    ``H(2^k, 2) = 2^(k-1)``, ``h(k, 2) = (2^(k-1) - 1) / 2^k`` for k >= 1.
    Keys are ``(k, d)``; values are Fractions.
    """
    _natural("max_k", max_k, 1)
    _natural("max_d", max_d, 2)
    h = {}
    for d in range(2, max_d + 1):
        h[(0, d)] = Fraction(0)
    for k in range(1, max_k + 1):
        h[(k, 2)] = Fraction(2 ** (k - 1) - 1, 2 ** k)
        for d in range(3, max_d + 1):
            h[(k, d)] = h[(k - 1, d)] + h[(k, d - 1)]
    for (k, d), value in h.items():
        assert value <= comb(k + d, d), (k, d)
    return h


def kk_power_check(diameter: int, n: int, d: int, max_rounds: int = 40) -> bool:
    """Exact test of ``diameter <= n^(log2(d) + 1)``.

    With ``p = floor(q log2 d)`` the exponent lies in ``[p/q, (p+1)/q]``,
    so ``diameter^q <= n^(q+p)`` proves the bound and
    ``diameter^q > n^(q+p+1)`` refutes it.  q doubles until one of the two
    holds.
    """
    _natural("diameter", diameter, 0)
    _natural("n", n, 1)
    _natural("d", d, 1)
    if diameter <= 1 or n == 1:
        return diameter <= 1
    # n^(log2 d) = d^(log2 n) is an integer when either is a power of two
    if d & (d - 1) == 0:
        log_d = d.bit_length() - 1
        return diameter <= n ** (log_d + 1)
    if n & (n - 1) == 0:
        return diameter <= d ** (n.bit_length() - 1) * n
    q = 1
    for _ in range(max_rounds):
        p = (d ** q).bit_length() - 1
        lhs = diameter ** q
        if lhs <= n ** (q + p):
            return True
        if lhs > n ** (q + p + 1):
            return False
        q *= 2
    raise AssertionError("power comparison did not resolve")


def _iroot(x: int, q: int, up: bool) -> int:
    """Integer q-th root of x, rounded down or up."""
    lo, hi = 0, 1 << (x.bit_length() // q + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** q <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo + 1 if up and lo ** q != x else lo


def kk_power_bracket(n: int, d: int, q: int = 64) -> tuple:
    """Integers ``(lo, hi)`` with ``lo <= n^(log2 d + 1) <= hi``."""
    _natural("n", n, 1)
    _natural("d", d, 1)
    p = (d ** q).bit_length() - 1
    if d ** q == 2 ** p:
        exact_value = _iroot(n ** (q + p), q, up=False)
        return exact_value, exact_value
    return _iroot(n ** (q + p), q, up=False), _iroot(n ** (q + p + 1), q, up=True)


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    hirsch: int
    klee_d3: Optional[int]
    lower_bound: int
    larman: Optional[int]
    kk_power: tuple
    kk_binomial: int
    kk_regime: str

    def as_dict(self) -> dict:
        return asdict(self)

    def rows(self) -> list:
        """``(name, value)`` pairs in display order, skipping absent
        entries."""
        out = [("n", self.n), ("d", self.d), ("hirsch", self.hirsch)]
        if self.klee_d3 is not None:
            out.append(("klee_d3", self.klee_d3))
        out.append(("lower_bound", self.lower_bound))
        if self.larman is not None:
            out.append(("larman", self.larman))
        out += [
            ("kk_power", f"[{self.kk_power[0]}, {self.kk_power[1]}]"),
            ("kk_binomial", self.kk_binomial),
            ("kk_regime", self.kk_regime),
        ]
        return out


def bound_report(n: int, d: int) -> BoundReport:
    """Every applicable bound for d-polytopes with n facets.

    ``kk_regime`` records which half of the quasi-polynomial argument
    covers (n, d): the binomial recursion for n <= 2^d, Larman's bound
    beyond.
    """
    _natural("d", d, 2)
    _natural("n", n, d)
    return BoundReport(
        n=n,
        d=d,
        hirsch=n - d,
        klee_d3=klee_formula(n) if d == 3 and n >= 4 else None,
        lower_bound=lower_bound_formula(n, d),
        larman=larman_bound(n, d) if d >= 3 and n > d else None,
        kk_power=kk_power_bracket(n, d),
        kk_binomial=kalai_kleitman_binomial(n, d),
        kk_regime="binomial" if n <= 2 ** d else "larman",
    )
