"""Sparse polynomials over the rationals in doubly indexed variables.

Main variables are written ``x[i][j]`` (row ``i >= 1``, column ``j >= 1``);
parameter variables are written ``s[k]``.  The infinite symmetric group acts
on main variables by permuting the row index; parameters are fixed.

>>> f = parse("x[1][1]*x[2][2] - 1")
>>> str(apply_perm(FinitePermutation.cycle(1, 2, 3), f))
'x[2][1]*x[3][2] - 1'
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

__all__ = [
    "VarIndex", "Poly", "FinitePermutation", "MonomialOrder",
    "LEX", "GREVLEX", "block_order", "x", "s", "var", "const", "parse",
    "apply_perm", "row_embed", "evaluate", "substitute", "transposition",
    "PolySyntaxError", "MissingVariableError",
]

Number = Union[int, Fraction]


class PolySyntaxError(ValueError):
    """Raised by :func:`parse` on malformed polynomial text."""


class MissingVariableError(KeyError):
    """Raised by :func:`evaluate` when the assignment misses variables."""

    def __init__(self, missing):
        self.missing = sorted(missing, key=var_key)
        names = ", ".join(str(v) for v in self.missing)
        super().__init__(f"no value assigned to {names}")

    def __str__(self):
        return self.args[0]


class VarIndex(NamedTuple):
    kind: str   # "main" or "param"
    row: int    # 0 for parameters
    col: int    # column for main variables, index for parameters

    def __str__(self):
        if self.kind == "param":
            return f"s[{self.col}]"
        return f"x[{self.row}][{self.col}]"


def var_key(v: VarIndex):
    """Sort key; variables earlier in this order are larger in every term order."""
    if v.kind == "param":
        return (0, v.col, 0)
    return (1, v.row, v.col)


# A monomial is a tuple of (VarIndex, exponent) pairs sorted by var_key.
Monomial = tuple

ONE: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda t: var_key(t[0])))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


class Poly:
    """Immutable sparse polynomial with rational coefficients.

    ``terms`` maps monomials to nonzero :class:`~fractions.Fraction`
    coefficients.  Two polynomials are equal iff their term maps are equal.
    """

    __slots__ = ("terms", "ncols", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None, ncols: int = 0):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        cols = [v.col for m in clean for v, _ in m if v.kind == "main"]
        self.terms = clean
        self.ncols = max([ncols, *cols]) if cols else ncols
        self._hash = None

    # construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, terms, ncols):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.ncols = ncols
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Number, ncols: int = 0) -> "Poly":
        return cls({ONE: c} if c else {}, ncols)

    @classmethod
    def variable(cls, v: VarIndex) -> "Poly":
        if v.kind == "main" and (v.row < 1 or v.col < 1):
            raise ValueError(f"invalid main variable {v!r}")
        if v.kind == "param" and (v.row != 0 or v.col < 1):
            raise ValueError(f"invalid parameter variable {v!r}")
        return cls({((v, 1),): 1})

    # basic queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(ONE, Fraction(0))

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def rows(self) -> set:
        return {v.row for v in self.variables() if v.kind == "main"}

    def params(self) -> set:
        return {v for v in self.variables() if v.kind == "param"}

    def total_degree(self) -> int:
        return max((_mono_deg(m) for m in self.terms), default=-1)

    def degree_in(self, v: VarIndex) -> int:
        return max((dict(m).get(v, 0) for m in self.terms), default=-1)

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out, max(self.ncols, other.ncols))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.ncols)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly._raw(out, max(self.ncols, other.ncols))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            other = other.constant_value()
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        inv = 1 / Fraction(other)
        return Poly._raw({m: c * inv for m, c in self.terms.items()}, self.ncols)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.constant(1, self.ncols)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # printing -------------------------------------------------------------

    def sorted_terms(self, order: "MonomialOrder | None" = None):
        order = order or GREVLEX
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [str(v) if e == 1 else f"{v}^{e}" for v, e in m]
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(a), *factors])
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


# -- constructors -------------------------------------------------------------

def x(i: int, j: int = 1) -> Poly:
    """The main variable ``x[i][j]``."""
    return Poly.variable(VarIndex("main", i, j))


def s(k: int) -> Poly:
    """The parameter variable ``s[k]``."""
    return Poly.variable(VarIndex("param", 0, k))


def var(v: VarIndex) -> Poly:
    return Poly.variable(v)


def const(c: Number) -> Poly:
    return Poly.constant(c)


# -- monomial orders ------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """A term order on monomials.

    ``name`` is ``"lex"``, ``"grevlex"`` or ``"block"``.  A block order
    compares the exponents of the variables in ``block`` first (grevlex),
    breaking ties by grevlex on the remaining variables, so every monomial
    involving ``block`` beats every monomial free of it.
    """

    name: str
    block: frozenset = frozenset()

    def key(self, m: Monomial):
        if self.name == "lex":
            return tuple((_neg_key(v), e) for v, e in m)
        if self.name == "grevlex":
            return _grevlex_key(m)
        first = tuple(t for t in m if t[0] in self.block)
        rest = tuple(t for t in m if t[0] not in self.block)
        return (_grevlex_key(first), _grevlex_key(rest))


def _neg_key(v):
    k = var_key(v)
    return tuple(-t for t in k)


def _grevlex_key(m: Monomial):
    # higher degree wins; ties broken by the smallest variable having the
    # smaller exponent
    rev = tuple((var_key(v), -e) for v, e in reversed(m))
    return (_mono_deg(m), _RevKey(rev))


class _RevKey:
    """Tie-breaker for grevlex on sparse monomials.

    Compares two reversed sparse exponent lists.  At the smallest variable
    where the exponents differ, the monomial with the smaller exponent is
    larger.
    """

    __slots__ = ("items",)

    def __init__(self, items):
        self.items = items

    def _cmp(self, other):
        a, b = self.items, other.items
        i = j = 0
        while i < len(a) or j < len(b):
            if i < len(a) and j < len(b):
                (va, ea), (vb, eb) = a[i], b[j]
                if va == vb:
                    if ea != eb:
                        return (ea > eb) - (ea < eb)
                    i += 1
                    j += 1
                elif va > vb:
                    # a has the smaller variable with positive exponent
                    return -1
                else:
                    return 1
            elif i < len(a):
                return -1
            else:
                return 1
        return 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __eq__(self, other):
        return self._cmp(other) == 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.items)


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def block_order(eliminate: Iterable[VarIndex]) -> MonomialOrder:
    """Block order with the variables in ``eliminate`` above all others."""
    return MonomialOrder("block", frozenset(eliminate))


# -- the group action ---------------------------------------------------------

class FinitePermutation:
    """A finitely supported bijection of the positive integers."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[int, int] | None = None):
        m = {int(k): int(v) for k, v in (mapping or {}).items() if k != v}
        if sorted(m) != sorted(m.values()):
            raise ValueError("mapping is not a bijection on its support")
        self.mapping = m

    @classmethod
    def cycle(cls, *points: int) -> "FinitePermutation":
        """The cycle ``(a b c ...)`` sending a to b, b to c, ..., last to a."""
        if len(set(points)) != len(points):
            raise ValueError("cycle entries must be distinct")
        return cls({a: b for a, b in zip(points, points[1:] + points[:1])})

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "FinitePermutation":
        """Permutation sending ``i`` to ``images[i-1]``."""
        return cls({i: v for i, v in enumerate(images, start=1)})

    def __call__(self, i: int) -> int:
        return self.mapping.get(i, i)

    def support(self) -> set:
        return set(self.mapping)

    def __mul__(self, other: "FinitePermutation") -> "FinitePermutation":
        """Composition ``(self * other)(i) == self(other(i))``."""
        pts = self.support() | other.support()
        return FinitePermutation({i: self(other(i)) for i in pts})

    def inverse(self) -> "FinitePermutation":
        return FinitePermutation({v: k for k, v in self.mapping.items()})

    def __eq__(self, other):
        return isinstance(other, FinitePermutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(frozenset(self.mapping.items()))

    def __repr__(self):
        return f"FinitePermutation({self.mapping})"


IDENTITY = FinitePermutation()


def transposition(i: int, j: int) -> FinitePermutation:
    return FinitePermutation({i: j, j: i}) if i != j else IDENTITY


def rename_rows(f: Poly, rowmap) -> Poly:
    """Replace the row ``i`` of every main variable by ``rowmap(i)``.

    ``rowmap`` must be injective on the rows of ``f``.
    """
    out = {}
    for m, c in f.terms.items():
        nm = tuple(sorted(
            (((VarIndex("main", rowmap(v.row), v.col) if v.kind == "main" else v), e)
             for v, e in m),
            key=lambda t: var_key(t[0]),
        ))
        out[nm] = c
    return Poly._raw(out, f.ncols)


def apply_perm(sigma: FinitePermutation, f: Poly) -> Poly:
    """Act by ``sigma`` on ``f``: ``x[i][j] -> x[sigma(i)][j]``."""
    if not sigma.mapping:
        return f
    return rename_rows(f, sigma)


def row_embed(h: Poly, i: int) -> Poly:
    """Copy a polynomial in row-1 variables to row ``i``."""
    bad = h.rows() - {1}
    if bad:
        raise ValueError(f"row_embed expects row-1 variables only, got rows {sorted(bad)}")
    if i < 1:
        raise ValueError("row index must be positive")
    return rename_rows(h, lambda r: i)


# -- evaluation and substitution ---------------------------------------------

def evaluate(f: Poly, assignment: Mapping[VarIndex, Number]) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    missing = f.variables() - set(assignment)
    if missing:
        raise MissingVariableError(missing)
    total = Fraction(0)
    for m, c in f.terms.items():
        t = c
        for v, e in m:
            t *= Fraction(assignment[v]) ** e
        total += t
    return total


def substitute(f: Poly, mapping: Mapping[VarIndex, Union[Poly, Number]]) -> Poly:
    """Replace variables by polynomials or numbers; others are kept."""
    images = {v: (p if isinstance(p, Poly) else Poly.constant(p)) for v, p in mapping.items()}
    cache: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in cache:
            cache[key] = images[v] ** e
        return cache[key]

    result = Poly.constant(0, f.ncols)
    for m, c in f.terms.items():
        kept = tuple((v, e) for v, e in m if v not in images)
        term = Poly._raw({kept: c}, f.ncols)
        for v, e in m:
            if v in images:
                term = term * power(v, e)
        result = result + term
    return result


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<float>\d+\.\d*|\.\d+|\d+[eE][+-]?\d+)
    | (?P<int>\d+)
    | (?P<xvar>x\[\s*(?P<xi>\d+)\s*\](?:\[\s*(?P<xj>\d+)\s*\])?)
    | (?P<svar>s\[\s*(?P<sk>\d+)\s*\])
    | (?P<op>\*\*|[-+*/^()])
    )""", re.VERBOSE)


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character at column {pos + 1}: {text[pos:pos + 10]!r}")
        if m.group("float"):
            raise PolySyntaxError(f"floating literal {m.group('float')!r} at column {m.start('float') + 1}; use a/b")
        out.append((m, m.start() + len(m.group(0)) - len(m.group(0).lstrip())))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, ncols):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.ncols = ncols

    def peek(self):
        if self.i < len(self.tokens):
            m, _ = self.tokens[self.i]
            return m.group("op") or ("num" if m.group("int") else "var")
        return None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg):
        if self.i < len(self.tokens):
            col = self.tokens[self.i][1] + 1
        else:
            col = len(self.text) + 1
        raise PolySyntaxError(f"{msg} at column {col}")

    def parse(self):
        if not self.tokens:
            raise PolySyntaxError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            self.error("unexpected token")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0].group("op")
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0].group("op")
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant():
                    self.error("division by a non-constant")
                if q.is_zero():
                    self.error("division by zero")
                p = p / q.constant_value()
        return p

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            if self.peek() == "-":
                self.error("negative exponent")
            if self.peek() != "num":
                self.error("exponent must be a non-negative integer literal")
            e = int(self.take()[0].group("int"))
            return base ** e
        return base

    def atom(self):
        kind = self.peek()
        if kind is None:
            self.error("unexpected end of input")
        if kind == "(":
            self.take()
            p = self.expr()
            if self.peek() != ")":
                self.error("missing ')'")
            self.take()
            return p
        if kind == "num":
            return Poly.constant(int(self.take()[0].group("int")))
        if kind == "var":
            m, _ = self.take()
            if m.group("svar"):
                k = int(m.group("sk"))
                if k < 1:
                    self.error("parameter index must be positive")
                return s(k)
            i = int(m.group("xi"))
            if m.group("xj") is None:
                if self.ncols not in (None, 1):
                    self.error("x[i] shorthand needs a single-column ring")
                j = 1
            else:
                j = int(m.group("xj"))
            if i < 1 or j < 1:
                self.error("variable indices must be positive")
            if self.ncols is not None and j > self.ncols:
                self.error(f"column {j} exceeds ring width {self.ncols}")
            return x(i, j)
        self.error(f"unexpected {kind!r}")


def parse(text: str, ncols: int | None = None) -> Poly:
    """Parse polynomial text such as ``"x[1][2]*(x[1][2] - 1) + 3/2*s[1]"``.

    Rational literals are written ``a/b``; floating literals are rejected.
    When ``ncols`` is given, column indices beyond it are rejected.
    """
    p = _Parser(text, ncols).parse()
    if ncols is not None:
        return Poly._raw(p.terms, max(p.ncols, ncols))
    return p


def as_poly(obj, ncols: int | None = None) -> Poly:
    """Coerce strings and numbers to :class:`Poly`."""
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, str):
        return parse(obj, ncols)
    if isinstance(obj, (int, Fraction)):
        return Poly.constant(obj)
    raise TypeError(f"cannot interpret {obj!r} as a polynomial")


def injections(k: int, w: int):
    """All injective maps ``[w] -> [k]`` as tuples of images."""
    return itertools.permutations(range(1, k + 1), w)
