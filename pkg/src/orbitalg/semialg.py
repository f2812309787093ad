"""Emptiness of basic equivariant semi-algebraic sets in one column.

A system of weak (``>= 0``) and strict (``> 0``) conditions in
``x[1..m][1]`` defines the set ``T`` of real sequences all of whose
injective row substitutions satisfy the conditions.  Equivalently, every
ordered tuple of ``m`` distinct entries lies in the symmetrized set ``S``.
``T`` is closed under taking subsequences, and every real sequence has a
constant or strictly monotone subsequence, so ``T`` is nonempty exactly
when it contains a constant, an increasing, or a decreasing sequence.

The constant case is univariate.  The monotone cases use the nested
"for all entries close enough to the limit" characterization, evaluated on
a cylindrical decomposition whose lowest coordinate is the limit itself.

Correctness of the candidate limits: the nested predicate is a first-order
formula in ``p`` over a decomposition that is sign-invariant for every
projection factor, so its truth is constant on each level-0 cell.  Testing
every root of the level-0 factors, one rational point in every gap between
them, and ``+∞`` therefore covers all limits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .cad import Projection, floor_above, rational_between
from .poly import GREVLEX, Poly, VarIndex, as_poly, evaluate, rename_rows, substitute
from .realalg import (
    ExtendedLimit, RealAlgebraicNumber, compare, sector_samples, sign_at, univariate_sat,
)

__all__ = [
    "EquivariantSignSystem", "SymmetrizedSystem", "Decision", "UnresolvedParameters",
    "symmetrize", "decide_constant", "decide_monotone", "decide_nonempty",
    "decide_fiber", "verify_witness", "MAX_EXACT_ROWS",
]

MAX_EXACT_ROWS = 3


class UnresolvedParameters(ValueError):
    pass


@dataclass
class EquivariantSignSystem:
    """Weak and strict polynomial conditions, optionally with parameters ``s[k]``."""

    weak: list = field(default_factory=list)
    strict: list = field(default_factory=list)

    def __post_init__(self):
        self.weak = [as_poly(f) for f in self.weak]
        self.strict = [as_poly(g) for g in self.strict]

    @property
    def polys(self) -> list:
        return self.weak + self.strict

    @property
    def m(self) -> int:
        return max((v.row for f in self.polys for v in f.variables() if v.kind == "main"),
                   default=1)

    @property
    def columns(self) -> set:
        return {v.col for f in self.polys for v in f.variables() if v.kind == "main"}

    @property
    def params(self) -> set:
        return {v for f in self.polys for v in f.params()}

    def is_single_column(self) -> bool:
        return self.columns <= {1}

    def map_polys(self, fn) -> "EquivariantSignSystem":
        return EquivariantSignSystem([fn(f) for f in self.weak], [fn(g) for g in self.strict])


@dataclass(frozen=True)
class SymmetrizedSystem:
    """Sign conditions closed under permuting the rows ``1..m``.

    Each conjunct is ``(poly, strict)``; polynomials are scaled so that the
    leading coefficient has absolute value one, which identifies positive
    multiples of the same condition.
    """

    m: int
    conjuncts: tuple

    def holds_at(self, point: Mapping) -> bool:
        for f, strict in self.conjuncts:
            v = evaluate(f, point)
            if v < 0 or (strict and v == 0):
                return False
        return True

    def holds_at_tuple(self, values) -> bool:
        return self.holds_at({VarIndex("main", i, 1): c for i, c in enumerate(values, start=1)})


@dataclass(frozen=True)
class Decision:
    """Outcome of an emptiness test.

    ``outcome`` is ``"empty"``, ``"nonempty"`` or ``"unsupported"``.  A
    nonempty decision names its ``kind`` (``"constant"``, ``"increasing"``,
    ``"decreasing"``), the constant value or the limit, and a witness prefix.
    """

    outcome: str
    kind: str | None = None
    constant: object = None
    limit: ExtendedLimit | None = None
    witness: tuple = ()
    reason: str = ""

    @property
    def nonempty(self) -> bool:
        return self.outcome == "nonempty"

    @property
    def empty(self) -> bool:
        return self.outcome == "empty"

    @classmethod
    def Empty(cls, reason: str = "") -> "Decision":
        return cls("empty", reason=reason)

    @classmethod
    def Unsupported(cls, reason: str) -> "Decision":
        return cls("unsupported", reason=reason)

    def __str__(self):
        if self.outcome == "empty":
            return "Empty"
        if self.outcome == "unsupported":
            return f"Unsupported({self.reason})"
        if self.kind == "constant":
            return f"NonEmpty(constant {self.constant}; witness of {len(self.witness)} equal entries)"
        wit = ", ".join(str(w) for w in self.witness)
        return f"NonEmpty({self.kind}, limit {self.limit}; witness {wit})"


def _check_ready(sys: EquivariantSignSystem):
    if not sys.is_single_column():
        raise ValueError(f"only single-column systems are supported, got columns {sorted(sys.columns)}")
    if sys.params:
        raise UnresolvedParameters(
            "unresolved parameters: " + ", ".join(sorted(str(v) for v in sys.params)))


def _canonical(f: Poly) -> Poly:
    lead = f.sorted_terms(GREVLEX)[0][1]
    return f / abs(lead)


def symmetrize(sys: EquivariantSignSystem) -> SymmetrizedSystem:
    """All images of the conditions under permutations of the rows ``1..m``."""
    _check_ready(sys)
    m = sys.m
    seen: dict = {}
    for polys, strict in ((sys.weak, False), (sys.strict, True)):
        for f in polys:
            for perm in itertools.permutations(range(1, m + 1)):
                g = rename_rows(f, lambda i, perm=perm: perm[i - 1])
                if g.is_zero():
                    seen.setdefault((g, strict), None)
                    continue
                seen.setdefault((_canonical(g), strict), None)
    return SymmetrizedSystem(m, tuple(seen))


# -- witness checks --------------------------------------------------------------

def _diagonal(f: Poly) -> Poly:
    t = VarIndex("main", 1, 1)
    return substitute(f, {v: Poly.variable(t) for v in f.variables() if v.kind == "main"})


def verify_witness(sys: EquivariantSignSystem, witness: Iterable) -> bool:
    """Check every injective substitution of witness entries into every condition.

    Entries may be irrational only for constant witnesses; those are checked
    on the diagonal by exact sign evaluation.
    """
    witness = list(witness)
    if not witness:
        return False
    m = sys.m
    if any(isinstance(w, RealAlgebraicNumber) and not w.is_rational for w in witness):
        if any(compare(w, witness[0]) != 0 for w in witness):
            return False
        a = witness[0]
        return (all(sign_at(_diagonal(f), a) >= 0 for f in sys.weak)
                and all(sign_at(_diagonal(g), a) > 0 for g in sys.strict))
    values = [w.value if isinstance(w, RealAlgebraicNumber) else Fraction(w) for w in witness]
    if len(values) < m:
        return False
    for idx in itertools.permutations(range(len(values)), m):
        point = {VarIndex("main", i, 1): values[k] for i, k in enumerate(idx, start=1)}
        for f in sys.weak:
            if evaluate(f, point) < 0:
                return False
        for g in sys.strict:
            if evaluate(g, point) <= 0:
                return False
    return True


def _witness_length(m: int) -> int:
    return max(6, 3 * m)


# -- constant sequences ----------------------------------------------------------

def decide_constant(sys: EquivariantSignSystem) -> Decision:
    """Is there a constant sequence in ``T``?  Substitutes one value for all rows."""
    _check_ready(sys)
    weak = [_diagonal(f) for f in sys.weak]
    strict = [_diagonal(g) for g in sys.strict]
    res = univariate_sat(weak, strict)
    if not res:
        return Decision.Empty("no constant sequence")
    c = res.witness
    if isinstance(c, RealAlgebraicNumber) and c.is_rational:
        c = c.value
    witness = tuple([c] * _witness_length(sys.m))
    return Decision("nonempty", "constant", constant=c, witness=witness)


# -- monotone sequences ----------------------------------------------------------

def _negate(sys: EquivariantSignSystem) -> EquivariantSignSystem:
    def neg(f: Poly) -> Poly:
        return substitute(f, {v: -Poly.variable(v) for v in f.variables() if v.kind == "main"})
    return sys.map_polys(neg)


class _MonotoneKernel:
    """Nested cell test for strictly increasing sequences."""

    def __init__(self, S: SymmetrizedSystem):
        self.S = S
        self.m = S.m
        polys = [f for f, _ in S.conjuncts if not f.is_constant()]
        self.proj = Projection(polys, self.m)
        # a sequence converging to a finite limit keeps every condition, weakened, on the diagonal
        self.closure = [_diagonal(f) for f in polys]

    def _sample(self, alpha, prefix) -> Fraction:
        r = self.proj.boundary_below(alpha, prefix)
        if alpha is None:
            return floor_above(r)
        return rational_between(r, alpha)

    def holds(self, alpha) -> bool:
        """Evaluate the nested predicate at limit ``alpha`` (``None`` is ``+∞``)."""
        if alpha is not None and any(sign_at(d, alpha) < 0 for d in self.closure):
            return False
        prefix: list = []
        while len(prefix) < self.m:
            prefix.append(self._sample(alpha, prefix))
        return self.S.holds_at_tuple(prefix)

    def candidates(self):
        yield None
        roots = self.proj.limit_roots()
        samples = sector_samples(roots)
        # interleave from the top: sector above the largest root, that root, ...
        merged = [samples[-1]]
        for r, smp in zip(reversed(roots), reversed(samples[:-1])):
            merged.extend([r, smp])
        for c in merged:
            if isinstance(c, RealAlgebraicNumber) and c.is_rational:
                c = c.value
            yield c if isinstance(c, RealAlgebraicNumber) else RealAlgebraicNumber.rational(c)

    def witness(self, alpha, length: int) -> list:
        """Greedy increasing prefix: each entry clears every threshold of earlier entries."""
        out: list = []
        for i in range(length):
            lower = None
            for size in range(0, min(self.m - 1, len(out)) + 1):
                for A in itertools.combinations(out, size):
                    r = self.proj.boundary_below(alpha, list(A))
                    if r is not None and (lower is None or compare(r, lower) > 0):
                        lower = r
            if out and (lower is None or compare(out[-1], lower) > 0):
                lower = out[-1]
            if alpha is None:
                nxt = floor_above(lower if lower is not None else Fraction(0))
            else:
                nxt = rational_between(lower, alpha, simplest=(i == 0))
            out.append(nxt)
        return out


def _increasing(sys: EquivariantSignSystem) -> tuple | None:
    S = symmetrize(sys)
    if any(f.is_constant() and (f.constant_value() < 0 or (strict and f.constant_value() == 0))
           for f, strict in S.conjuncts):
        return None
    kernel = _MonotoneKernel(S)
    for alpha in kernel.candidates():
        if kernel.holds(alpha):
            w = kernel.witness(alpha, _witness_length(S.m))
            if not verify_witness(sys, w):
                raise RuntimeError(f"witness {w} for limit {alpha} failed exact verification")
            limit = ExtendedLimit.plus_infinity() if alpha is None else ExtendedLimit(
                alpha.value if alpha.is_rational else alpha)
            return limit, w
    return None


def decide_monotone(sys: EquivariantSignSystem, direction: str = "increasing") -> Decision:
    """Is there a strictly monotone sequence in ``T``?

    Decreasing sequences are found as increasing sequences of the system with
    every variable negated.
    """
    _check_ready(sys)
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be 'increasing' or 'decreasing', not {direction!r}")
    if sys.m > MAX_EXACT_ROWS:
        return Decision.Unsupported(
            f"monotone test is exact only up to {MAX_EXACT_ROWS} rows; system uses {sys.m}")
    if direction == "increasing":
        found = _increasing(sys)
        if found is None:
            return Decision.Empty("no increasing sequence")
        limit, w = found
        return Decision("nonempty", "increasing", limit=limit, witness=tuple(w))
    found = _increasing(_negate(sys))
    if found is None:
        return Decision.Empty("no decreasing sequence")
    limit, w = found
    return Decision("nonempty", "decreasing", limit=-limit, witness=tuple(-c for c in w))


def decide_nonempty(sys: EquivariantSignSystem) -> Decision:
    """Constant, then increasing, then decreasing; the first success wins."""
    if not sys.is_single_column():
        return Decision.Unsupported("multi-column systems are outside the decidable fragment")
    _check_ready(sys)
    d = decide_constant(sys)
    if d.nonempty:
        return d
    if sys.m > MAX_EXACT_ROWS:
        return Decision.Unsupported(
            f"no constant sequence; monotone test is exact only up to {MAX_EXACT_ROWS} rows")
    for direction in ("increasing", "decreasing"):
        d = decide_monotone(sys, direction)
        if d.nonempty:
            return d
    return Decision.Empty("no constant or monotone sequence")


def decide_fiber(sys: EquivariantSignSystem, values: Mapping) -> Decision:
    """Decide the fiber over a parameter point ``{s[k]: rational}``.

    Keys may be ``VarIndex`` values, ``Poly`` variables, strings such as
    ``"s[2]"`` or bare parameter indices.
    """
    assignment = {}
    for key, val in values.items():
        if isinstance(key, int):
            key = VarIndex("param", 0, key)
        elif isinstance(key, (str, Poly)):
            (key,) = as_poly(key).variables()
        assignment[key] = Fraction(val)
    missing = sys.params - set(assignment)
    if missing:
        raise UnresolvedParameters(
            "no value for " + ", ".join(sorted(str(v) for v in missing)))
    return decide_nonempty(sys.map_polys(lambda f: substitute(f, assignment)))
