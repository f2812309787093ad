"""Exact univariate real algebra: Sturm sequences, root isolation,
real algebraic numbers and sign conditions.

Univariate polynomials are handled internally as coefficient lists
``[a0, a1, ..., an]`` of :class:`~fractions.Fraction`, lowest degree first.
Public functions also accept a univariate :class:`~orbitalg.poly.Poly`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .poly import Poly

__all__ = [
    "RealAlgebraicNumber", "ExtendedLimit", "UnivariateSignSystem", "SatResult",
    "sturm_sequence", "sturm_count", "isolate_roots", "sign_at",
    "univariate_sat", "compare", "simplest_between", "to_coeffs", "root_bound",
    "EndpointIsRoot", "sector_samples", "format_coeffs",
]


class EndpointIsRoot(ValueError):
    pass


# -- dense univariate arithmetic ----------------------------------------------

def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def to_coeffs(p) -> list:
    """Coefficient list of a univariate polynomial (``Poly`` or sequence)."""
    if isinstance(p, Poly):
        vs = p.variables()
        if len(vs) > 1:
            raise ValueError(f"expected a univariate polynomial, got variables {sorted(map(str, vs))}")
        deg = max(p.total_degree(), 0)
        out = [Fraction(0)] * (deg + 1)
        for m, c in p.terms.items():
            out[sum(e for _, e in m)] = c
        return _trim(out)
    if isinstance(p, (int, Fraction)):
        return _trim([Fraction(p)])
    return _trim(Fraction(c) for c in p)


def _add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _neg(a):
    return [-c for c in a]


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lb
        k = len(a) - len(b)
        q[k] = c
        for i, v in enumerate(b):
            a[i + k] -= c * v
        a = _trim(a)
    return _trim(q), a


def _monic(a):
    return [c / a[-1] for c in a] if a else a


def _gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def _deriv(a):
    return _trim(i * c for i, c in enumerate(a) if i)


def _eval(a, x):
    v = Fraction(0)
    for c in reversed(a):
        v = v * x + c
    return v


def _sign(v):
    return (v > 0) - (v < 0)


def _sqf(a):
    """Squarefree part, monic."""
    a = _trim(a)
    if len(a) <= 1:
        return _monic(a)
    g = _gcd(a, _deriv(a))
    return _monic(_divmod(a, g)[0])


def root_bound(p) -> Fraction:
    """Cauchy bound ``1 + max|a_i| / |a_n|``: all real roots lie strictly inside."""
    a = to_coeffs(p)
    if len(a) <= 1:
        return Fraction(1)
    return 1 + max(abs(c) for c in a[:-1]) / abs(a[-1])


# -- Sturm sequences ------------------------------------------------------------

def sturm_sequence(p) -> list:
    """Sturm sequence ``p, p', -rem(...)`` of the squarefree part of ``p``."""
    a = _sqf(to_coeffs(p))
    if not a:
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [a, _deriv(a)]
    while seq[-1]:
        seq.append(_neg(_divmod(seq[-2], seq[-1])[1]))
    return [f for f in seq if f]


def _variations(seq, x):
    if x == math.inf:
        signs = [_sign(f[-1]) for f in seq]
    elif x == -math.inf:
        signs = [_sign(f[-1]) * (-1 if (len(f) - 1) % 2 else 1) for f in seq]
    else:
        signs = [_sign(_eval(f, x)) for f in seq]
    signs = [s for s in signs if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _count(seq, lo, hi):
    return _variations(seq, lo) - _variations(seq, hi)


def sturm_count(p, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(lo, hi)``.

    Endpoints may be ``±math.inf``; finite endpoints must not be roots.
    """
    a = to_coeffs(p)
    for e in (lo, hi):
        if e not in (math.inf, -math.inf) and _eval(a, Fraction(e)) == 0:
            raise EndpointIsRoot(f"endpoint {e} is a root")
    if lo >= hi:
        return 0
    if len(a) <= 1:
        return 0
    lo = lo if lo in (math.inf, -math.inf) else Fraction(lo)
    hi = hi if hi in (math.inf, -math.inf) else Fraction(hi)
    return _count(sturm_sequence(a), lo, hi)


# -- real algebraic numbers -----------------------------------------------------

@dataclass(frozen=True)
class RealAlgebraicNumber:
    """The unique root of the squarefree ``defining`` polynomial in ``(lo, hi)``.

    Rational numbers are represented with a linear defining polynomial.
    """

    defining: tuple
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, q) -> "RealAlgebraicNumber":
        q = Fraction(q)
        return cls((-q, Fraction(1)), q - 1, q + 1)

    @property
    def is_rational(self) -> bool:
        return len(self.defining) == 2

    @property
    def value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("irrational algebraic number has no exact rational value")
        a0, a1 = self.defining
        return -a0 / a1

    @property
    def degree(self) -> int:
        return len(self.defining) - 1

    def refine(self) -> "RealAlgebraicNumber":
        """Halve the isolating interval (or collapse to an exact rational)."""
        if self.is_rational:
            v = self.value
            w = (self.hi - self.lo) / 4
            return RealAlgebraicNumber(self.defining, v - w, v + w)
        d = list(self.defining)
        mid = (self.lo + self.hi) / 2
        fm = _eval(d, mid)
        if fm == 0:
            w = (self.hi - self.lo) / 4
            return RealAlgebraicNumber((-mid, Fraction(1)), mid - w, mid + w)
        if _sign(_eval(d, self.lo)) * _sign(fm) < 0:
            return RealAlgebraicNumber(self.defining, self.lo, mid)
        return RealAlgebraicNumber(self.defining, mid, self.hi)

    def refine_to(self, width) -> "RealAlgebraicNumber":
        r = self
        while r.hi - r.lo > width:
            r = r.refine()
        return r

    def __neg__(self) -> "RealAlgebraicNumber":
        d = [c if i % 2 == 0 else -c for i, c in enumerate(self.defining)]
        if d[-1] < 0:
            d = [-c for c in d]
        return RealAlgebraicNumber(tuple(d), -self.hi, -self.lo)

    def __float__(self):
        if self.is_rational:
            return float(self.value)
        r = self.refine_to(Fraction(1, 2 ** 60))
        return float((r.lo + r.hi) / 2)

    def __str__(self):
        if self.is_rational:
            return str(self.value)
        return f"root of {format_coeffs(self.defining)} in ({self.lo}, {self.hi}) ~ {float(self):.12g}"


def format_coeffs(coeffs, var: str = "t") -> str:
    """Render an ascending coefficient list as ``t^3 - 2*t``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return text + "".join(f" {s} {b}" for s, b in parts[1:])


Real = Union[Fraction, int, RealAlgebraicNumber]


def _as_ran(a) -> RealAlgebraicNumber:
    return a if isinstance(a, RealAlgebraicNumber) else RealAlgebraicNumber.rational(a)


def compare(a: Real, b: Real) -> int:
    """Exact comparison of two real algebraic numbers: -1, 0 or 1."""
    if not isinstance(a, RealAlgebraicNumber) or a.is_rational:
        if not isinstance(b, RealAlgebraicNumber) or b.is_rational:
            qa = a.value if isinstance(a, RealAlgebraicNumber) else Fraction(a)
            qb = b.value if isinstance(b, RealAlgebraicNumber) else Fraction(b)
            return _sign(qa - qb)
        return -_compare_rational(b, a.value if isinstance(a, RealAlgebraicNumber) else Fraction(a))
    if not isinstance(b, RealAlgebraicNumber) or b.is_rational:
        return _compare_rational(a, b.value if isinstance(b, RealAlgebraicNumber) else Fraction(b))
    if a.hi <= b.lo:
        return -1
    if b.hi <= a.lo:
        return 1
    g = _gcd(list(a.defining), list(b.defining))
    while True:
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        if len(g) > 1:
            lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
            # any root of g inside both isolating intervals is both numbers
            if _count(sturm_sequence(g), lo, hi) > 0:
                return 0
        a, b = a.refine(), b.refine()
        if a.is_rational or b.is_rational:
            return compare(a, b)


def _compare_rational(a: RealAlgebraicNumber, q: Fraction) -> int:
    """Sign of ``a - q`` for irrational ``a``."""
    while a.lo < q < a.hi:
        if _eval(list(a.defining), q) == 0:
            return 0
        a = a.refine()
        if a.is_rational:
            return _sign(a.value - q)
    return 1 if a.lo >= q else -1


def sign_at(f, a: Real) -> int:
    """Exact sign of ``f(a)`` for a rational or real algebraic ``a``."""
    fc = to_coeffs(f)
    if not fc:
        return 0
    if not isinstance(a, RealAlgebraicNumber):
        return _sign(_eval(fc, Fraction(a)))
    if a.is_rational:
        return _sign(_eval(fc, a.value))
    d = list(a.defining)
    g = _gcd(fc, d)
    if len(g) > 1 and _count(sturm_sequence(g), a.lo, a.hi) > 0:
        return 0
    fs = sturm_sequence(fc) if len(fc) > 1 else None
    while True:
        flo, fhi = _eval(fc, a.lo), _eval(fc, a.hi)
        if flo and fhi and (fs is None or _count(fs, a.lo, a.hi) == 0):
            return _sign(flo)
        a = a.refine()
        if a.is_rational:
            return _sign(_eval(fc, a.value))


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then smallest magnitude) in ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_between(-hi, -lo)
    n = math.floor(lo) + 1
    if n < hi:
        return Fraction(n)
    fl = math.floor(lo)
    if lo == fl:
        return fl + Fraction(1, math.floor(1 / (hi - fl)) + 1)
    return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl))


def _isolate_sqf(a):
    """Disjoint isolating intervals of a squarefree polynomial, ascending."""
    if len(a) <= 1:
        return []
    seq = sturm_sequence(a)
    B = root_bound(a)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = _count(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        for t in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4)):
            mid = lo + (hi - lo) * t
            if _eval(a, mid) != 0:
                break
        else:
            mid = lo + (hi - lo) * Fraction(2, 5)
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def _exactify(r: RealAlgebraicNumber) -> RealAlgebraicNumber:
    """Replace ``r`` by an exact rational when it is one.

    After scaling the defining polynomial to integer coefficients with
    leading coefficient ``a``, every rational root has the form ``k / a``.
    Once the interval is narrower than ``1 / a`` it holds at most one such
    fraction, and a single evaluation settles the question.
    """
    if r.is_rational:
        return r
    d = r.defining
    lead = abs(d[-1] * math.lcm(*(c.denominator for c in d)))
    while r.hi - r.lo >= Fraction(1, lead):
        r = r.refine()
        if r.is_rational:
            return r
    q = Fraction(math.floor(r.lo * lead) + 1, lead)
    if q < r.hi and _eval(list(d), q) == 0:
        return RealAlgebraicNumber((-q, Fraction(1)), r.lo, r.hi)
    return r


@lru_cache(maxsize=4096)
def _isolate_cached(a: tuple) -> tuple:
    q = tuple(_sqf(list(a)))
    return tuple(_exactify(RealAlgebraicNumber(q, lo, hi)) for lo, hi in _isolate_sqf(list(q)))


def isolate_roots(p) -> list:
    """Distinct real roots of ``p`` as :class:`RealAlgebraicNumber`, ascending."""
    a = to_coeffs(p)
    if not a:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    return list(_isolate_cached(tuple(a)))


# -- extended limits -------------------------------------------------------------

@dataclass(frozen=True)
class ExtendedLimit:
    """A point of the extended real line: finite value or ``±∞``."""

    value: Real | None = None
    infinity: int = 0

    @classmethod
    def plus_infinity(cls):
        return cls(None, 1)

    @classmethod
    def minus_infinity(cls):
        return cls(None, -1)

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def __neg__(self):
        if not self.is_finite:
            return ExtendedLimit(None, -self.infinity)
        v = self.value
        return ExtendedLimit(-v, 0)

    def __float__(self):
        if not self.is_finite:
            return math.inf * self.infinity
        return float(self.value)

    def __str__(self):
        if self.infinity:
            return "+inf" if self.infinity > 0 else "-inf"
        return str(self.value)


# -- univariate sign systems -------------------------------------------------------

@dataclass
class UnivariateSignSystem:
    weak: list
    strict: list


@dataclass
class SatResult:
    nonempty: bool
    witness: Real | None = None

    def __bool__(self):
        return self.nonempty


def sector_samples(roots):
    """Rational sample points of the open intervals cut out by sorted roots."""
    if not roots:
        return [Fraction(0)]
    samples = []
    first = roots[0]
    samples.append(Fraction(math.ceil(first.value if first.is_rational else first.lo) - 1))
    for r1, r2 in zip(roots, roots[1:]):
        while not r1.is_rational and not r2.is_rational and r1.hi > r2.lo:
            r1, r2 = r1.refine(), r2.refine()
        lo = r1.value if r1.is_rational else r1.hi
        hi = r2.value if r2.is_rational else r2.lo
        while lo >= hi:
            if not r1.is_rational:
                r1 = r1.refine()
            if not r2.is_rational:
                r2 = r2.refine()
            lo = r1.value if r1.is_rational else r1.hi
            hi = r2.value if r2.is_rational else r2.lo
        samples.append(simplest_between(lo, hi))
    last = roots[-1]
    samples.append(Fraction(math.floor(last.value if last.is_rational else last.hi) + 1))
    return samples


def univariate_sat(sys_or_weak, strict=None) -> SatResult:
    """Decide whether ``{t : w(t) >= 0 for w in weak, g(t) > 0 for g in strict}`` is nonempty.

    The line is cut at all real roots of all polynomials; each open sector is
    probed at a rational sample, then each root.  Rational witnesses are
    preferred and the first one in ascending order is reported.
    """
    if strict is None:
        weak, strict = sys_or_weak.weak, sys_or_weak.strict
    else:
        weak = sys_or_weak
    weak = [to_coeffs(f) for f in weak]
    strict = [to_coeffs(g) for g in strict]
    prod = [Fraction(1)]
    for f in weak + strict:
        if len(f) > 1:
            prod = _mul(prod, _sqf(f))
    roots = isolate_roots(prod) if len(prod) > 1 else []

    def ok(t):
        return (all(sign_at(f, t) >= 0 for f in weak)
                and all(sign_at(g, t) > 0 for g in strict))

    for t in sector_samples(roots):
        if ok(t):
            return SatResult(True, t)
    for r in roots:
        if ok(r):
            return SatResult(True, r.value if r.is_rational else r)
    return SatResult(False)
