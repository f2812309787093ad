"""Symmetric ideals at a finite truncation level.

Everything here works in the ring with rows ``1..k``.  An ideal stable
under the infinite symmetric group is represented by finitely many
generators whose row-orbits generate it; at level ``k`` only the images
under injective row maps into ``[k]`` are kept.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .groebner import (
    DEFAULT_DEGREE_CAP, IdealHandle, elimination_ideal, groebner_basis,
    ideal_intersection, ideals_equal,
)
from .poly import (
    GREVLEX, Poly, VarIndex, as_poly, evaluate, rename_rows, row_embed, s, var_key, x,
)

__all__ = [
    "INFINITE", "WidthExceedsLevel", "LevelTooSmall",
    "SymmetricIdealSpec", "Component", "OrbitClosureSpec", "FamilySpec",
    "SequencePrefixDescriptor",
    "orbit_truncate", "orbit_closure_generators", "orbit_closure_member",
    "fixed_point_generators", "seq_ideal_level", "vandermonde_seq_ideal",
    "grassmannian_seq_ideal", "check_truncation_stable", "row_orbit",
    "grassmannian_family", "hypersurface_family", "point_ideal",
    "orbit_closure_spec_from_points", "main_vars", "determinant",
]

INFINITE = math.inf


class WidthExceedsLevel(ValueError):
    pass


class LevelTooSmall(ValueError):
    pass


def main_vars(ncols: int, k: int) -> set:
    """All main variables of rows ``1..k``."""
    return {VarIndex("main", i, j) for i in range(1, k + 1) for j in range(1, ncols + 1)}


def row_orbit(f: Poly, k: int) -> list:
    """Distinct images of ``f`` under injective maps of its rows into ``[k]``."""
    support = sorted(f.rows())
    if len(support) > k:
        raise WidthExceedsLevel(
            f"{f} uses {len(support)} rows but the level is {k}")
    seen = {}
    for images in itertools.permutations(range(1, k + 1), len(support)):
        table = dict(zip(support, images))
        g = rename_rows(f, table.__getitem__)
        seen.setdefault(g, None)
    return list(seen)


# -- specs ---------------------------------------------------------------------

@dataclass
class SymmetricIdealSpec:
    """The ideal generated by the row-orbits of ``generators``."""

    ncols: int
    generators: list

    def __post_init__(self):
        self.generators = [as_poly(g, self.ncols) for g in self.generators]

    def widths(self) -> list:
        return [len(g.rows()) for g in self.generators]


@dataclass
class Component:
    """One irreducible component ``V_k`` of the entry closure.

    ``complement_generators`` generate the vanishing ideal of the union of
    the other components; ``multiplicity`` counts the sequence entries on the
    component (``INFINITE`` unless the component is a single point).
    """

    complement_generators: list
    multiplicity: float | int = INFINITE
    point: tuple | None = None

    def __post_init__(self):
        self.complement_generators = [as_poly(g) for g in self.complement_generators]
        if self.point is not None:
            self.point = tuple(Fraction(c) for c in self.point)
        if self.multiplicity != INFINITE:
            if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
                raise ValueError("multiplicity must be a positive integer or INFINITE")
            if self.point is None:
                raise ValueError("finite multiplicity requires a single-point component "
                                 "with explicit coordinates")


@dataclass
class OrbitClosureSpec:
    """Data describing the orbit closure of a sequence of rational points."""

    ncols: int
    vp_generators: list
    components: list

    def __post_init__(self):
        self.vp_generators = [as_poly(g, self.ncols) for g in self.vp_generators]
        for f in self.vp_generators + [g for c in self.components for g in c.complement_generators]:
            if f.rows() - {1}:
                raise ValueError(f"{f} must only use row-1 variables")
        for c in self.components:
            if c.point is not None and len(c.point) != self.ncols:
                raise ValueError(f"point {c.point} does not have {self.ncols} coordinates")


@dataclass
class FamilySpec:
    """A family ``Σ ⊆ X × A^n`` cut out by ``sigma_generators``.

    Generators are polynomials in ``s[1..param_count]`` and ``x[1][1..n]``.
    Parameters listed in ``local_params`` get a fresh copy for every row
    when the fiber product is formed; they parametrize points inside a
    fiber.  The remaining parameters are shared and pick the fiber.
    """

    ncols: int
    param_count: int
    sigma_generators: list
    local_params: tuple = ()

    def __post_init__(self):
        self.sigma_generators = [as_poly(g, self.ncols) for g in self.sigma_generators]
        for g in self.sigma_generators:
            if g.rows() - {1}:
                raise ValueError(f"{g} must only use row-1 variables")
            if any(v.col > self.param_count for v in g.params()):
                raise ValueError(f"{g} uses parameters beyond s[{self.param_count}]")
        self.local_params = tuple(sorted(set(self.local_params)))

    def instantiate(self, i: int) -> list:
        """Generators of the ``i``-th factor of the fiber product."""
        local = {VarIndex("param", 0, l): VarIndex(
            "param", 0, self.param_count + (i - 1) * len(self.local_params) + t + 1)
            for t, l in enumerate(self.local_params)}
        out = []
        for g in self.sigma_generators:
            terms = {}
            for m, c in row_embed(g, i).terms.items():
                nm = tuple(sorted(((local.get(v, v), e) for v, e in m),
                                  key=lambda t: var_key(t[0])))
                terms[nm] = c
            out.append(Poly(terms, g.ncols))
        return out


@dataclass
class SequencePrefixDescriptor:
    """An eventually constant sequence: explicit points, then ``tail`` forever."""

    ncols: int
    explicit_points: list = field(default_factory=list)
    tail: tuple | None = None

    def __post_init__(self):
        self.explicit_points = [tuple(Fraction(c) for c in p) for p in self.explicit_points]
        if self.tail is not None:
            self.tail = tuple(Fraction(c) for c in self.tail)
        for p in self.explicit_points + ([self.tail] if self.tail else []):
            if len(p) != self.ncols:
                raise ValueError(f"point {p} does not have {self.ncols} coordinates")


# -- operations ----------------------------------------------------------------

def orbit_truncate(I: SymmetricIdealSpec, k: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """The level-``k`` part generated by all row-images of the generators."""
    gens: dict = {}
    for g in I.generators:
        for h in row_orbit(g, k):
            gens.setdefault(h, None)
    return IdealHandle(list(gens), GREVLEX, degree_cap, I.ncols)


def _row1_point_assignment(point):
    return {VarIndex("main", 1, j): c for j, c in enumerate(point, start=1)}


def orbit_closure_generators(spec: OrbitClosureSpec, k: int,
                             degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """Level-``k`` generators of the ideal of an orbit closure.

    These are the row copies of the ``V_p`` generators together with the
    row-orbits of the products ``g^1 ... g^(ν+1)`` for every complement
    generator ``g`` of a component of finite multiplicity ``ν``.
    """
    gens: dict = {}
    for f in spec.vp_generators:
        for i in range(1, k + 1):
            gens.setdefault(row_embed(f, i), None)
    for comp in spec.components:
        nu = comp.multiplicity
        if nu == INFINITE:
            continue
        if nu + 1 > k:
            raise LevelTooSmall(f"multiplicity {nu} needs level at least {nu + 1}, got {k}")
        for g in comp.complement_generators:
            P = Poly.constant(1, spec.ncols)
            for i in range(1, nu + 2):
                P = P * row_embed(g, i)
            for h in row_orbit(P, k):
                gens.setdefault(h, None)
    return IdealHandle(list(gens), GREVLEX, degree_cap, spec.ncols)


def orbit_closure_member(spec: OrbitClosureSpec, p: SequencePrefixDescriptor) -> bool:
    """Whether the eventually constant sequence ``p`` lies in the orbit closure.

    Every entry has to lie on ``V_p`` and each isolated point of finite
    multiplicity ``ν`` may occur at most ``ν`` times (a tail equal to it
    counts as infinitely many occurrences).
    """
    if p.ncols != spec.ncols:
        raise ValueError("descriptor and spec have different column counts")
    entries = list(p.explicit_points) + ([p.tail] if p.tail is not None else [])
    for q in entries:
        a = _row1_point_assignment(q)
        if any(evaluate(f, a) != 0 for f in spec.vp_generators):
            return False
    for comp in spec.components:
        if comp.multiplicity == INFINITE:
            continue
        if comp.point is None:
            raise ValueError("finite-multiplicity component lacks point coordinates")
        count = sum(1 for q in p.explicit_points if q == comp.point)
        if p.tail is not None and p.tail == comp.point:
            count = INFINITE
        if count > comp.multiplicity:
            return False
    return True


def fixed_point_generators(prime_generators: Iterable, k: int, ncols: int | None = None,
                           degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """Row copies ``f(x[i][1..n])``, ``i <= k``, of generators of a prime of ``K[x_1..x_n]``."""
    prime_generators = [as_poly(f, ncols) for f in prime_generators]
    gens = [row_embed(f, i) for f in prime_generators for i in range(1, k + 1)]
    return IdealHandle(gens, GREVLEX, degree_cap, ncols)


def seq_ideal_level(family: FamilySpec, k: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """Level-``k`` ideal of ``Seq(Σ)``: eliminate the parameters from ``Σ_k``."""
    if k < 1:
        raise ValueError("level must be positive")
    gens = [g for i in range(1, k + 1) for g in family.instantiate(i)]
    I = IdealHandle(gens, GREVLEX, degree_cap, family.ncols)
    return elimination_ideal(I, main_vars(family.ncols, k))


def determinant(M: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant by cofactor expansion along the first row."""
    n = len(M)
    if n == 0:
        return Poly.constant(1)
    if n == 1:
        return M[0][0]
    total = Poly.constant(0)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _monomials_upto(n: int, d: int):
    out = []
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), deg):
            out.append(combo)
    return out


def vandermonde_seq_ideal(d: int, n: int, k: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """Maximal minors of the evaluation matrix of all monomials of degree ``<= d``.

    Row ``i`` of the ``k × M`` matrix lists the monomials in ``x[i][1..n]``;
    the minors vanish exactly when ``k`` points lie on a common hypersurface
    of degree at most ``d``.
    """
    monos = _monomials_upto(n, d)
    M = len(monos)
    gens: dict = {}
    if k >= M:
        rows = []
        for i in range(1, k + 1):
            row = []
            for combo in monos:
                p = Poly.constant(1, n)
                for j in combo:
                    p = p * x(i, j)
                row.append(p)
            rows.append(row)
        for chosen in itertools.combinations(range(k), M):
            det = determinant([rows[i] for i in chosen])
            if not det.is_zero():
                gens.setdefault(det, None)
    return IdealHandle(list(gens), GREVLEX, degree_cap, n)


def grassmannian_seq_ideal(r: int, n: int, k: int, degree_cap: int = DEFAULT_DEGREE_CAP) -> IdealHandle:
    """All ``(r+1)``-minors of the ``n × k`` matrix with entries ``x[i][j]`` at ``(j, i)``."""
    gens: dict = {}
    size = r + 1
    if size <= n and size <= k:
        for cols in itertools.combinations(range(1, n + 1), size):
            for rows in itertools.combinations(range(1, k + 1), size):
                det = determinant([[x(i, j) for i in rows] for j in cols])
                if not det.is_zero():
                    gens.setdefault(det, None)
    return IdealHandle(list(gens), GREVLEX, degree_cap, n)


def check_truncation_stable(I: SymmetricIdealSpec, k: int,
                            degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Whether truncating at ``k`` agrees with contracting level ``k+1`` to rows ``<= k``."""
    low = orbit_truncate(I, k, degree_cap)
    high = orbit_truncate(I, k + 1, degree_cap)
    contracted = elimination_ideal(high, main_vars(I.ncols, k))
    return ideals_equal(low, contracted)


# -- family builders -----------------------------------------------------------

def grassmannian_family(r: int, n: int) -> FamilySpec:
    """Points of an ``r``-dimensional linear subspace, ``x = Σ_t s_t-column · coefficient``.

    The ``n × r`` matrix ``s[1..r*n]`` spans the subspace (shared); the ``r``
    coordinates ``s[r*n+1..r*n+r]`` are local to each point.
    """
    gens = []
    for j in range(1, n + 1):
        p = x(1, j)
        for t in range(1, r + 1):
            p = p - s((t - 1) * n + j) * s(r * n + t)
        gens.append(p)
    return FamilySpec(n, r * n + r, gens, tuple(range(r * n + 1, r * n + r + 1)))


def hypersurface_family(d: int, n: int) -> FamilySpec:
    """The affine chart of the generic hypersurface of degree ``<= d``.

    Fibers are zero sets of ``x_n^d + Σ s_α x^α`` over the remaining
    monomials of degree ``<= d``; this chart is dense in the family.
    """
    monos = _monomials_upto(n, d)
    lead = tuple([n] * d)
    f = Poly.constant(0, n)
    idx = 0
    for combo in monos:
        m = Poly.constant(1, n)
        for j in combo:
            m = m * x(1, j)
        if combo == lead:
            f = f + m
        else:
            idx += 1
            f = f + s(idx) * m
    return FamilySpec(n, idx, [f])


# -- finite point sets -----------------------------------------------------------

def point_ideal(points: Iterable[Sequence], ncols: int,
                degree_cap: int = DEFAULT_DEGREE_CAP) -> list:
    """Reduced generators of the vanishing ideal of finitely many rational points (row 1)."""
    points = [tuple(Fraction(c) for c in p) for p in points]
    if not points:
        return [Poly.constant(1, ncols)]
    ideals = [IdealHandle([x(1, j) - c for j, c in enumerate(p, start=1)], GREVLEX, degree_cap, ncols)
              for p in points]
    acc = ideals[0]
    for J in ideals[1:]:
        acc = ideal_intersection(acc, J)
    return groebner_basis(acc)


def orbit_closure_spec_from_points(multiplicities: dict, ncols: int) -> OrbitClosureSpec:
    """Orbit-closure data for a sequence taking finitely many rational values.

    ``multiplicities`` maps each value to the number of times it occurs
    (``INFINITE`` for values repeated forever).  Every component is a point.
    """
    pts = [tuple(Fraction(c) for c in p) for p in multiplicities]
    if not any(multiplicities[p] == INFINITE for p in multiplicities):
        raise ValueError("an infinite sequence repeats at least one value infinitely often")
    vp = point_ideal(pts, ncols)
    comps = []
    for p, orig in zip(pts, multiplicities):
        others = [q for q in pts if q != p]
        comps.append(Component(point_ideal(others, ncols), multiplicities[orig], p))
    return OrbitClosureSpec(ncols, vp, comps)
