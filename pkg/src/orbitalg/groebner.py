"""Buchberger's algorithm over the rationals.

Polynomials are converted to a dense exponent representation over the
variables that actually occur, reduced there, and converted back.  Pair
selection follows the normal strategy and useless pairs are discarded with
the Gebauer-Moeller installation of Buchberger's two criteria.
"""

from __future__ import annotations

from typing import Iterable

from .poly import (
    GREVLEX, MonomialOrder, Poly, VarIndex, as_poly, block_order, var_key,
)

__all__ = [
    "DegreeCapExceeded", "IdealHandle", "groebner_basis", "normal_form",
    "elimination_ideal", "radical_member", "ideal_intersection",
    "ideals_equal", "DEFAULT_DEGREE_CAP",
]

DEFAULT_DEGREE_CAP = 40


class DegreeCapExceeded(ArithmeticError):
    """A reduction step produced a term above the configured degree cap."""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"term of total degree {degree} exceeds degree cap {cap}")


class _Ring:
    """Dense exponent vectors over a fixed variable list and term order."""

    def __init__(self, variables: Iterable[VarIndex], order: MonomialOrder):
        variables = set(variables)
        if order.name == "block":
            first = sorted((v for v in variables if v in order.block), key=var_key)
            rest = sorted((v for v in variables if v not in order.block), key=var_key)
            self.vars = first + rest
            split = len(first)
        else:
            self.vars = sorted(variables, key=var_key)
            split = 0
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.n = len(self.vars)
        self.order = order
        self._cache: dict = {}

        if order.name == "lex":
            self._key = lambda e: e
        elif order.name == "grevlex":
            self._key = _grevlex
        elif order.name == "block":
            self._key = lambda e: (_grevlex(e[:split]), _grevlex(e[split:]))
        else:
            raise ValueError(f"unknown monomial order {order.name!r}")

    def key(self, e):
        k = self._cache.get(e)
        if k is None:
            k = self._key(e)
            self._cache[e] = k
        return k

    def from_poly(self, f: Poly):
        terms = []
        for m, c in f.terms.items():
            e = [0] * self.n
            for v, p in m:
                e[self.index[v]] = p
            e = tuple(e)
            terms.append((self.key(e), e, c))
        terms.sort(key=lambda t: t[0], reverse=True)
        return terms

    def to_poly(self, terms, ncols=0) -> Poly:
        out = {}
        for _, e, c in terms:
            m = tuple(sorted(((self.vars[i], p) for i, p in enumerate(e) if p),
                             key=lambda t: var_key(t[0])))
            out[m] = c
        return Poly(out, ncols)


def _grevlex(e):
    return (sum(e), tuple(-p for p in reversed(e)))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _sub_scaled(ring, f, g, shift, coef, cap):
    """Return ``f - coef * x^shift * g`` for sorted term lists."""
    scaled = []
    for _, e, c in g:
        ne = tuple(a + b for a, b in zip(e, shift))
        d = sum(ne)
        if d > cap:
            raise DegreeCapExceeded(d, cap)
        scaled.append((ring.key(ne), ne, -coef * c))
    out = []
    i = j = 0
    while i < len(f) and j < len(scaled):
        kf, ks = f[i][0], scaled[j][0]
        if kf > ks:
            out.append(f[i])
            i += 1
        elif ks > kf:
            out.append(scaled[j])
            j += 1
        else:
            c = f[i][2] + scaled[j][2]
            if c:
                out.append((kf, f[i][1], c))
            i += 1
            j += 1
    out.extend(f[i:])
    out.extend(scaled[j:])
    return out


def _reduce(ring, f, basis, cap, full=True):
    """Remainder of ``f`` on division by monic sorted term lists ``basis``."""
    rem = []
    while f:
        _, e, c = f[0]
        for g in basis:
            ge = g[0][1]
            if _divides(ge, e):
                shift = tuple(a - b for a, b in zip(e, ge))
                f = _sub_scaled(ring, f, g, shift, c, cap)
                break
        else:
            if not full:
                return f
            rem.append(f[0])
            f = f[1:]
    return rem


def _monic(f):
    lc = f[0][2]
    if lc == 1:
        return f
    return [(k, e, c / lc) for k, e, c in f]


def _buchberger(ring, polys, cap):
    basis: list = []      # every polynomial ever added
    alive: list = []      # indices currently in G
    pairs: set = set()

    def lm(i):
        return basis[i][0][1]

    def install(h):
        nonlocal alive, pairs
        basis.append(h)
        hi = len(basis) - 1
        lh = lm(hi)
        cands = list(alive)
        kept = []
        while cands:
            g1 = cands.pop(0)
            l1 = _lcm(lh, lm(g1))
            if _coprime(lh, lm(g1)) or not any(
                    _divides(_lcm(lh, lm(g2)), l1) for g2 in cands + kept):
                kept.append(g1)
        new_pairs = {(g, hi) for g in kept if not _coprime(lh, lm(g))}
        survivors = set()
        for (g1, g2) in pairs:
            l12 = _lcm(lm(g1), lm(g2))
            if (not _divides(lh, l12) or _lcm(lm(g1), lh) == l12
                    or _lcm(lh, lm(g2)) == l12):
                survivors.add((g1, g2))
        pairs = survivors | new_pairs
        alive = [g for g in alive if not _divides(lh, lm(g))] + [hi]

    for f in polys:
        if f:
            h = _reduce(ring, f, [basis[i] for i in alive], cap)
            if h:
                install(_monic(h))

    def pair_key(p):
        l = _lcm(lm(p[0]), lm(p[1]))
        return (sum(l), ring.key(l), p)

    while pairs:
        p = min(pairs, key=pair_key)
        pairs.discard(p)
        i, j = p
        fi, fj = basis[i], basis[j]
        l = _lcm(lm(i), lm(j))
        si = tuple(a - b for a, b in zip(l, lm(i)))
        sj = tuple(a - b for a, b in zip(l, lm(j)))
        s = _sub_scaled(ring, _sub_scaled(ring, [], fi, si, -1, cap), fj, sj, 1, cap)
        h = _reduce(ring, s, [basis[k] for k in alive], cap)
        if h:
            install(_monic(h))

    return _reduced([basis[i] for i in alive], ring, cap)


def _reduced(G, ring, cap):
    G = sorted(G, key=lambda g: g[0][0])
    minimal = []
    for g in G:
        if not any(_divides(h[0][1], g[0][1]) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = _reduce(ring, g[1:], others, cap)
        out.append(_monic([g[0]] + tail))
    out.sort(key=lambda g: g[0][0], reverse=True)
    return out


class IdealHandle:
    """An ideal given by generators, with a lazily cached reduced Groebner basis."""

    def __init__(self, generators: Iterable = (), order: MonomialOrder = GREVLEX,
                 degree_cap: int = DEFAULT_DEGREE_CAP, ncols: int | None = None):
        gens = [as_poly(g, ncols) for g in generators]
        self.generators = tuple(g for g in gens if not g.is_zero())
        self.order = order
        if degree_cap < 1:
            raise ValueError("degree_cap must be positive")
        self.degree_cap = degree_cap
        cols = [g.ncols for g in self.generators]
        self.ncols = max([ncols or 0, *cols]) if cols else (ncols or 0)
        self._gb: tuple | None = None

    def variables(self) -> set:
        out = set()
        for g in self.generators:
            out |= g.variables()
        return out

    @property
    def gb(self) -> tuple:
        return tuple(groebner_basis(self))

    def contains(self, f) -> bool:
        return normal_form(as_poly(f), self).is_zero()

    def with_order(self, order: MonomialOrder) -> "IdealHandle":
        return IdealHandle(self.generators, order, self.degree_cap, self.ncols)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"IdealHandle([{gens}], order={self.order.name})"


def groebner_basis(I: IdealHandle) -> list:
    """Reduced Groebner basis of ``I`` w.r.t. ``I.order`` (monic, sorted by leading term)."""
    if I._gb is None:
        ring = _Ring(I.variables(), I.order)
        polys = sorted((ring.from_poly(g) for g in I.generators),
                       key=lambda f: f[0][0])
        for f in polys:
            d = max(sum(t[1]) for t in f)
            if d > I.degree_cap:
                raise DegreeCapExceeded(d, I.degree_cap)
        gb = _buchberger(ring, polys, I.degree_cap)
        I._gb = tuple(ring.to_poly(g, I.ncols) for g in gb)
    return list(I._gb)


def normal_form(f, I: IdealHandle) -> Poly:
    """Fully reduced remainder of ``f`` modulo the Groebner basis of ``I``."""
    f = as_poly(f)
    gb = groebner_basis(I)
    if not gb:
        return f
    variables = set(f.variables())
    for g in gb:
        variables |= g.variables()
    ring = _Ring(variables, I.order)
    basis = [ring.from_poly(g) for g in gb]
    rem = _reduce(ring, ring.from_poly(f), basis, I.degree_cap)
    return ring.to_poly(rem, f.ncols)


def elimination_ideal(I: IdealHandle, keep: Iterable[VarIndex]) -> IdealHandle:
    """The contraction of ``I`` to the polynomial ring in ``keep``.

    Uses a block order with the eliminated variables above the kept ones;
    the Groebner basis elements free of eliminated variables generate the
    contraction and already form its reduced Groebner basis for grevlex.
    """
    keep = set(keep)
    eliminate = I.variables() - keep
    if not eliminate:
        return IdealHandle(I.generators, GREVLEX, I.degree_cap, I.ncols)
    J = I.with_order(block_order(eliminate))
    gb = groebner_basis(J)
    kept = [g for g in gb if not (g.variables() & eliminate)]
    out = IdealHandle(kept, GREVLEX, I.degree_cap, I.ncols)
    out._gb = tuple(kept)
    return out


def _fresh_param(polys) -> VarIndex:
    used = [v.col for f in polys for v in f.variables() if v.kind == "param"]
    return VarIndex("param", 0, max(used, default=0) + 1)


def radical_member(f, I: IdealHandle) -> bool:
    """Whether some power of ``f`` lies in ``I`` (Rabinowitsch trick)."""
    f = as_poly(f)
    t = _fresh_param([f, *I.generators])
    J = IdealHandle([*I.generators, 1 - Poly.variable(t) * f], GREVLEX, I.degree_cap)
    gb = groebner_basis(J)
    return len(gb) == 1 and gb[0] == 1


def ideal_intersection(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """Generators of ``I ∩ J`` via elimination of an auxiliary variable."""
    t = _fresh_param([*I.generators, *J.generators])
    tv = Poly.variable(t)
    gens = [tv * g for g in I.generators] + [(1 - tv) * g for g in J.generators]
    keep = I.variables() | J.variables()
    cap = max(I.degree_cap, J.degree_cap)
    return elimination_ideal(IdealHandle(gens, GREVLEX, cap, max(I.ncols, J.ncols)), keep)


def ideals_equal(I: IdealHandle, J: IdealHandle) -> bool:
    """Equality of ideals by comparing reduced grevlex bases."""
    a = groebner_basis(I.with_order(GREVLEX) if I.order != GREVLEX else I)
    b = groebner_basis(J.with_order(GREVLEX) if J.order != GREVLEX else J)
    return a == b
