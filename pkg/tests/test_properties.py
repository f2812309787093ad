"""Randomized property suites, 100 or more cases each.

Each suite checks a law of the library against either an algebraic
identity or one of the independent oracles in ``oracles.py``.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from hypothesis import HealthCheck, assume, event, given, settings
from hypothesis import strategies as st

from orbitalg.equivariant import (
    SequencePrefixDescriptor, SymmetricIdealSpec, fixed_point_generators, grassmannian_family,
    grassmannian_seq_ideal, hypersurface_family, orbit_closure_generators, orbit_closure_member,
    orbit_truncate, seq_ideal_level, vandermonde_seq_ideal,
)
from orbitalg.groebner import IdealHandle, elimination_ideal, groebner_basis, normal_form
from orbitalg.poly import (
    IDENTITY, Poly, VarIndex, apply_perm, evaluate, parse, rename_rows, row_embed, substitute,
    transposition,
)
from orbitalg.realalg import (
    RealAlgebraicNumber, isolate_roots, root_bound, sign_at, sturm_count, univariate_sat,
)
from orbitalg.semialg import EquivariantSignSystem, decide_nonempty, symmetrize, verify_witness

import strategies as S
from oracles import brute_force_witness, grid_witness, linear_algebra_member, sequence_ok

CASES = settings(max_examples=100, deadline=None, derandomize=True,
                 suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
CASES_200 = settings(CASES, max_examples=200)


# -- poly-core ------------------------------------------------------------------------

@CASES
@given(S.polys(), S.permutations(), S.permutations())
def test_action_composes(f, sigma, tau):
    assert apply_perm(sigma * tau, f) == apply_perm(sigma, apply_perm(tau, f))


@CASES
@given(S.polys())
def test_action_identity(f):
    assert apply_perm(IDENTITY, f) == f


@CASES
@given(S.polys(), S.polys(), S.polys(), S.permutations())
def test_action_is_ring_automorphism(f, g, h, sigma):
    lhs = apply_perm(sigma, f * g + h)
    assert lhs == apply_perm(sigma, f) * apply_perm(sigma, g) + apply_perm(sigma, h)


@CASES
@given(S.polys(), S.polys())
def test_canonical_form(f, g):
    assert (f - g).is_zero() == (f == g)
    assert parse(str(f)) == f


@CASES
@given(S.polys(rows=1), st.integers(2, 9))
def test_row_embed_is_transposition(h, i):
    assert row_embed(h, i) == apply_perm(transposition(1, i), h)


# -- groebner -------------------------------------------------------------------------

def _member_combination(draw, nvars, gens, degree):
    """A random ``Σ c·m·g`` with ``deg(m·g) == degree`` (zero when no generator fits)."""
    out = Poly.constant(0)
    for g in gens:
        d = degree - g.total_degree()
        if d > 0:
            out = out + g * draw(S.homogeneous(nvars, d))
        elif d == 0:
            out = out + draw(S.small_ints) * g
    return out


@CASES
@given(S.homogeneous_ideals(), st.integers(0, 4), st.booleans(), st.data())
def test_membership_matches_linear_algebra(ideal, degree, member, data):
    """Homogeneous ideals make the degree-bounded oracle exact."""
    nvars, gens = ideal
    assume(gens)
    if member:
        f = _member_combination(data.draw, nvars, gens, degree)
    else:
        f = data.draw(S.homogeneous(nvars, degree)) if degree else Poly.constant(1)
    I = IdealHandle(gens)
    assert (normal_form(f, I).is_zero()) == linear_algebra_member(f, gens, max(degree, 0))


@CASES
@given(st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(S.inhomogeneous(n, 2), min_size=1, max_size=3),
                        S.inhomogeneous(n, 4))))
def test_membership_sound_for_inhomogeneous(case):
    """A certificate of degree at most four always implies membership."""
    _, gens, f = case
    gens = [g for g in gens if g]
    assume(gens)
    if linear_algebra_member(f, gens, 4):
        assert IdealHandle(gens).contains(f)


@CASES
@given(S.homogeneous_ideals())
def test_groebner_idempotent(ideal):
    _, gens = ideal
    assume(gens)
    G = groebner_basis(IdealHandle(gens))
    assert groebner_basis(IdealHandle(G)) == G
    assert groebner_basis(IdealHandle(list(reversed(gens)))) == G


@CASES
@given(st.lists(S.inhomogeneous(3, 2), min_size=1, max_size=3),
       st.lists(st.tuples(S.small_fractions, S.small_fractions, S.small_fractions),
                min_size=1, max_size=2),
       st.lists(st.tuples(S.small_ints, S.small_ints, S.small_ints), min_size=100, max_size=100))
def test_elimination_sound(shapes, zeros, samples):
    """Common zeros of ``I`` project to zeros of the elimination ideal.

    Generators are shifted so the drawn points are common zeros; then 100
    random grid points are tried as well.
    """
    v1, v2, v3 = S.VARS3
    pts = [dict(zip(S.VARS3, z)) for z in zeros]
    gens = []
    for g in shapes:
        # make every drawn point a zero: multiply shifted copies together
        h = Poly.constant(1)
        for p in pts:
            h = h * (g - evaluate(g, {v: p[v] for v in S.VARS3}))
        if h:
            gens.append(h)
    assume(gens)
    I = IdealHandle(gens, degree_cap=12)
    E = elimination_ideal(I, {v2, v3})
    candidates = pts + [dict(zip(S.VARS3, map(Fraction, s))) for s in samples]
    for p in candidates:
        if all(evaluate(g, p) == 0 for g in gens):
            assert all(evaluate(e, {v2: p[v2], v3: p[v3]}) == 0 for e in E.generators)


# -- equivariant ideals ---------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _fixed_output(name, k):
    builders = {
        "seq-hypersurface": lambda: seq_ideal_level(hypersurface_family(1, 1), k),
        "seq-rank1": lambda: seq_ideal_level(grassmannian_family(1, 2), k),
        "vandermonde-1-1": lambda: vandermonde_seq_ideal(1, 1, k),
        "vandermonde-2-1": lambda: vandermonde_seq_ideal(2, 1, k),
        "vandermonde-1-2": lambda: vandermonde_seq_ideal(1, 2, k),
        "grassmannian-1-2": lambda: grassmannian_seq_ideal(1, 2, k),
        "grassmannian-1-3": lambda: grassmannian_seq_ideal(1, 3, k),
    }
    return builders[name]()


@st.composite
def equivariant_outputs(draw):
    kind = draw(st.sampled_from(["orbit", "fixed", "truncate", "library"]))
    if kind == "orbit":
        data = draw(S.point_specs())
        nu = max((m for m in data[1].values() if m != math.inf), default=1)
        k = draw(st.integers(nu + 1, 4))
        return orbit_closure_generators(S.spec_from(data), k), k
    if kind == "fixed":
        k = draw(st.integers(2, 4))
        a, b, c = draw(st.tuples(S.small_ints, S.small_ints, S.small_ints))
        prime = [Poly.variable(VarIndex("main", 1, 1)) * a + Poly.variable(VarIndex("main", 1, 2)) * b + c]
        assume(prime[0])
        return fixed_point_generators(prime, k, 2), k
    if kind == "truncate":
        k = draw(st.integers(2, 4))
        g = draw(S.polys(rows=2, cols=1, max_deg=2))
        assume(g)
        return orbit_truncate(SymmetricIdealSpec(1, [g]), k), k
    name = draw(st.sampled_from(["seq-hypersurface", "seq-rank1", "vandermonde-1-1",
                                 "vandermonde-2-1", "vandermonde-1-2", "grassmannian-1-2",
                                 "grassmannian-1-3"]))
    k = draw(st.integers(2, 3))
    return _fixed_output(name, k), k


@CASES
@given(equivariant_outputs(), st.data())
def test_sym_k_stability(output, data):
    I, k = output
    event(f"{len(I.generators)} generators" if len(I.generators) < 4 else "4+ generators")
    i, j = data.draw(st.lists(st.integers(1, k), min_size=2, max_size=2, unique=True))
    sigma = transposition(i, j)
    for g in I.generators:
        assert normal_form(apply_perm(sigma, g), I).is_zero()


@CASES
@given(S.point_specs(), st.data())
def test_orbit_member_monotone(data, draw):
    """Dropping an explicit entry from a member never destroys membership."""
    spec = S.spec_from(data)
    pts = list(data[1])
    seq = draw.draw(st.lists(st.sampled_from(pts), max_size=5))
    tail = draw.draw(st.sampled_from(pts))
    d = SequencePrefixDescriptor(data[0], seq, tail)
    if orbit_closure_member(spec, d):
        for drop in range(len(seq)):
            shorter = SequencePrefixDescriptor(data[0], seq[:drop] + seq[drop + 1:], tail)
            assert orbit_closure_member(spec, shorter)


# -- realalg --------------------------------------------------------------------------

univariate = st.lists(st.integers(-5, 5), min_size=1, max_size=9).filter(lambda c: any(c))


@CASES_200
@given(univariate)
def test_isolation_count_matches_sturm(coeffs):
    assume(len([c for c in coeffs if c]) and coeffs[-1])
    B = root_bound(coeffs)
    assert len(isolate_roots(coeffs)) == sturm_count(coeffs, -B, B)


@CASES
@given(st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=5), max_size=2),
       st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=5), max_size=2))
def test_univariate_sat_matches_grid(weak, strict):
    weak = [list(map(Fraction, c)) for c in weak]
    strict = [list(map(Fraction, c)) for c in strict]
    res = univariate_sat(weak, strict)
    if res:
        assert all(sign_at(f, res.witness) >= 0 for f in weak)
        assert all(sign_at(g, res.witness) > 0 for g in strict)
    else:
        bound = max([root_bound(c) for c in weak + strict if any(c)] + [Fraction(1)])
        assert grid_witness(weak, strict, bound) is None


@CASES
@given(univariate, univariate, st.integers(1, 6))
def test_sign_at_stable_under_refinement(f, g, steps):
    assume(g[-1] and len(g) > 1)
    for r in isolate_roots(g):
        refined = r
        for _ in range(steps):
            refined = refined.refine()
        assert sign_at(f, refined) == sign_at(f, r)


# -- semialgebraic decisions -----------------------------------------------------------

def _rational_entries(witness):
    return all(not isinstance(w, RealAlgebraicNumber) for w in witness)


def _check_witness(sys, decision):
    w = decision.witness
    assert len(w) >= 6
    assert verify_witness(sys, w)
    if _rational_entries(w):
        assert sequence_ok(sys.weak, sys.strict, sys.m, list(w))
    else:
        # irrational constant: the diagonal substitution is the only instance
        c = decision.constant
        for f, strict in symmetrize(sys).conjuncts:
            sign = sign_at(_diagonal(f), c)
            assert sign > 0 if strict else sign >= 0


def _diagonal(f):
    t = VarIndex("main", 1, 1)
    return substitute(f, {v: Poly.variable(t) for v in f.variables()})


def _transform(sys, sigma, scales):
    def rows(f):
        return rename_rows(f, sigma)
    weak = [rows(f) * c for f, c in zip(sys.weak, scales)]
    strict = [rows(g) * c for g, c in zip(sys.strict, scales[len(sys.weak):])]
    return EquivariantSignSystem(weak, strict)


@CASES
@given(S.sign_systems(), st.permutations([1, 2]),
       st.lists(S.positive_fractions, min_size=4, max_size=4))
def test_decision_witness_and_invariance(sys, images, scales):
    """Witness soundness, subsequence closure, and invariance under relabeling and scaling."""
    d = decide_nonempty(sys)
    event(d.kind or d.outcome)
    assert d.outcome in ("empty", "nonempty")
    if d.nonempty:
        _check_witness(sys, d)
        w = list(d.witness)
        if _rational_entries(w):
            for drop in range(len(w)):
                assert sequence_ok(sys.weak, sys.strict, sys.m, w[:drop] + w[drop + 1:])
    sigma = dict(enumerate(images, start=1)).__getitem__
    other = decide_nonempty(_transform(sys, sigma, scales))
    assert (other.outcome, other.kind) == (d.outcome, d.kind)


@CASES
@given(S.sign_systems())
def test_sampler_cross_check(sys):
    """Whenever the brute-force sampler finds a sequence, the decision is NonEmpty."""
    found = brute_force_witness(sys.weak, sys.strict, sys.m)
    d = decide_nonempty(sys)
    event(f"{d.kind or d.outcome}, sampler {'found' if found else 'silent'}")
    if found is not None:
        assert d.nonempty, f"sampler found {found}"
