"""Projection and single-branch lifting for the monotone-tail test.

The variables are ordered ``p < x1 < ... < xm`` where ``p`` stands for the
limit of an increasing sequence.  The polynomial set consists of the sign
conditions of a symmetric system together with the markers ``xj - p``.  Its
projection closure gives, for every level, the polynomials whose real roots
cut each fiber into sign-invariant cells.  Because the markers are in the
set, the point ``xj = p`` is a section of every fiber over ``p``, so the
cell "immediately below ``p``" is a well-defined sector.

Symbolic resultants, discriminants and factorization come from sympy;
real roots, comparisons and samples stay in :mod:`orbitalg.realalg`.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cmp_to_key, lru_cache

import sympy

from .poly import Poly
from .realalg import (
    RealAlgebraicNumber, compare, isolate_roots, simplest_between, sturm_count,
)

__all__ = ["Projection", "rational_between", "to_fraction_coeffs"]


def _to_sympy(f: Poly, gens, m: int):
    """Translate a single-column polynomial in ``x[1..m][1]`` to sympy."""
    expr = sympy.Integer(0)
    for mono, c in f.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for v, e in mono:
            t *= gens[v.row] ** e
        expr += t
    return sympy.Poly(expr, *gens, domain="QQ")


def _normalize(fac: sympy.Poly) -> sympy.Poly:
    _, prim = fac.primitive()
    if prim.LC() < 0:
        prim = -prim
    return prim


def _level(f: sympy.Poly) -> int:
    degs = f.degree_list()
    for i in range(len(degs) - 1, -1, -1):
        if degs[i] > 0:
            return i
    return -1


def to_fraction_coeffs(f: sympy.Poly) -> list:
    """Ascending coefficient list of a univariate sympy polynomial."""
    return [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]


def rational_between(lo, hi, simplest: bool = True) -> Fraction:
    """A rational strictly between ``lo`` and ``hi`` (``lo`` may be ``None`` for ``-∞``).

    Algebraic endpoints are replaced by rational bounds from their isolating
    intervals, refined until the bounds separate.
    """
    def upper(h):
        if isinstance(h, RealAlgebraicNumber):
            return h.value if h.is_rational else h.lo
        return Fraction(h)

    def lower(l):
        if isinstance(l, RealAlgebraicNumber):
            return l.value if l.is_rational else l.hi
        return Fraction(l)

    if lo is None:
        U = upper(hi)
        return simplest_between(U - 1, U) if simplest else U - 1
    while lower(lo) >= upper(hi):
        if isinstance(lo, RealAlgebraicNumber) and not lo.is_rational:
            lo = lo.refine()
        if isinstance(hi, RealAlgebraicNumber) and not hi.is_rational:
            hi = hi.refine()
    L, U = lower(lo), upper(hi)
    return simplest_between(L, U) if simplest else (L + U) / 2


class Projection:
    """Projection closure of the sign-condition polynomials plus limit markers.

    ``levels[j]`` holds the irreducible factors whose highest variable is
    ``xj`` (``levels[0]`` is univariate in ``p``).  The projection of a level
    adds every coefficient with respect to the main variable, every
    discriminant and every pairwise resultant.  Taking all coefficients
    rather than only the leading and trailing ones keeps the operator valid
    when a leading coefficient vanishes on a cell.
    """

    def __init__(self, polys, m: int):
        self.m = m
        self.p = sympy.Symbol("p")
        self.xs = [sympy.Symbol(f"x{j}") for j in range(1, m + 1)]
        self.gens = [self.p] + self.xs
        levels = [set() for _ in range(m + 1)]
        start = [_to_sympy(f, self.gens, m) for f in polys]
        start += [sympy.Poly(self.xs[j] - self.p, *self.gens, domain="QQ") for j in range(m)]
        for f in start:
            self._add_factors(f, levels)
        for j in range(m, 0, -1):
            v = self.gens[j]
            cur = sorted(levels[j], key=sympy.default_sort_key)
            derived = []
            for f in cur:
                fu = sympy.Poly(f.as_expr(), v)
                derived.extend(fu.all_coeffs())
                if fu.degree() >= 2:
                    derived.append(sympy.discriminant(f.as_expr(), v))
            for f, g in itertools.combinations(cur, 2):
                derived.append(sympy.resultant(f.as_expr(), g.as_expr(), v))
            for expr in derived:
                self._add_factors(sympy.Poly(expr, *self.gens, domain="QQ"), levels)
        self.levels = [sorted(l, key=sympy.default_sort_key) for l in levels]
        self._free = [[f for f in l if f.degree(self.p) == 0] for l in self.levels]
        self._term_cache: dict = {}

    def _add_factors(self, f: sympy.Poly, levels):
        if f.is_zero:
            return
        _, facs = sympy.factor_list(f.as_expr(), *self.gens)
        for fac, _ in facs:
            fp = sympy.Poly(fac, *self.gens, domain="QQ")
            lvl = _level(fp)
            if lvl >= 0:
                levels[lvl].add(_normalize(fp))

    # -- level 0 --------------------------------------------------------------

    def limit_roots(self) -> list:
        """Real roots of the level-0 polynomials, ascending and distinct.

        The factors are distinct irreducibles, so their root sets are
        disjoint and can be isolated one factor at a time.
        """
        roots = []
        for f in self.levels[0]:
            roots.extend(isolate_roots(to_fraction_coeffs(sympy.Poly(f.as_expr(), self.p))))
        return sorted(roots, key=cmp_to_key(compare))

    # -- fibers ---------------------------------------------------------------

    def _terms(self, f):
        """``f`` as Fraction terms ``(xj-degree, p-degree, prefix exponents, coeff)``."""
        key = f.as_expr()
        cached = self._term_cache.get(key)
        if cached is None:
            j = _level(f)
            cached = [(mono[j], mono[0], mono[1:j], Fraction(int(c.p), int(c.q)))
                      for mono, c in f.terms()]
            self._term_cache[key] = cached
        return cached

    def _fiber_coeffs(self, f, alpha, prefix):
        """Univariate coefficients in ``x_{j}`` after fixing ``p = alpha`` and the prefix.

        For irrational ``alpha`` the result is the resultant with the minimal
        polynomial of ``alpha``: its roots include every root of the true
        fiber polynomial.  ``None`` signals identical vanishing.
        """
        terms = self._terms(f)
        rational = alpha is None or alpha.is_rational or f.degree(self.p) == 0
        a = alpha.value if rational and alpha is not None and alpha.is_rational else None
        # coefficient of xj^k as a polynomial in p (ascending list)
        table: dict = {}
        for k, e, ex, c in terms:
            v = c
            for q, n in zip(prefix, ex):
                if n:
                    v *= q ** n
            if rational:
                if e:
                    v *= a ** e
                e = 0
            row = table.setdefault(k, {})
            row[e] = row.get(e, 0) + v
        if rational:
            coeffs = [table.get(k, {}).get(0, Fraction(0)) for k in range(max(table) + 1)]
            coeffs = _trim_fractions(coeffs)
            return coeffs or None
        mp = _minimal_polynomial(alpha.defining, alpha.lo, alpha.hi)
        expr = sum(sympy.Rational(c.numerator, c.denominator) * self.p ** e * self.gens[len(prefix) + 1] ** k
                   for k, row in table.items() for e, c in row.items() if c)
        if expr == 0:
            return None
        return _norm_coeffs(expr, mp, self.p, self.gens[len(prefix) + 1])

    def fiber_roots(self, alpha, prefix) -> list:
        """Roots in ``x_{len(prefix)+1}`` over ``(alpha, prefix)``; ``alpha=None`` means ``+∞``."""
        j = len(prefix) + 1
        pool = self._free[j] if alpha is None else self.levels[j]
        roots = []
        for f in pool:
            c = self._fiber_coeffs(f, alpha, prefix)
            if c is not None and len(c) > 1:
                roots.extend(isolate_roots(c))
        return roots

    def boundary_below(self, alpha, prefix):
        """Largest fiber root strictly below ``alpha`` (``None`` if there is none).

        For ``alpha=None`` (the limit ``+∞``) this is simply the largest root.
        """
        best = None
        for r in self.fiber_roots(alpha, prefix):
            if alpha is not None and compare(r, alpha) >= 0:
                continue
            if best is None or compare(r, best) > 0:
                best = r
        return best


@lru_cache(maxsize=256)
def _minimal_polynomial(defining: tuple, lo: Fraction, hi: Fraction) -> tuple:
    """The irreducible factor of ``defining`` that vanishes inside ``(lo, hi)``."""
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i for i, c in enumerate(defining))
    _, facs = sympy.factor_list(expr, t)
    for fac, _ in facs:
        coeffs = to_fraction_coeffs(sympy.Poly(fac, t, domain="QQ"))
        if len(coeffs) > 1 and sturm_count(coeffs, lo, hi) > 0:
            return tuple(coeffs)
    raise ValueError("no factor of the defining polynomial has a root in the interval")


@lru_cache(maxsize=4096)
def _norm_coeffs(expr, mp: tuple, p, xj):
    """Coefficients in ``xj`` of ``res_p(expr, mp)``; ``None`` if it vanishes."""
    mexpr = sum(sympy.Rational(c.numerator, c.denominator) * p ** i for i, c in enumerate(mp))
    if sympy.Poly(expr, p).degree() <= 0:
        g = sympy.Poly(expr, xj, domain="QQ")
    else:
        g = sympy.Poly(sympy.resultant(expr, mexpr, p), xj, domain="QQ")
    return None if g.is_zero else tuple(to_fraction_coeffs(g))


def _trim_fractions(a):
    while a and not a[-1]:
        a.pop()
    return a


def floor_above(r) -> Fraction:
    """The integer ``floor(r) + 1``, strictly above ``r``."""
    if r is None:
        return Fraction(1)
    if isinstance(r, RealAlgebraicNumber):
        if r.is_rational:
            return Fraction(math.floor(r.value) + 1)
        return Fraction(math.floor(r.hi) + 1)
    return Fraction(math.floor(r) + 1)
