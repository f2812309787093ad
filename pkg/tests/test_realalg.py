import math
from fractions import Fraction

import pytest

from orbitalg.poly import parse
from orbitalg.realalg import (
    EndpointIsRoot, ExtendedLimit, RealAlgebraicNumber, compare, isolate_roots, root_bound,
    sign_at, simplest_between, sturm_count, univariate_sat,
)


def test_sturm_count_examples():
    assert sturm_count(parse("(x[1]-1)*(x[1]-2)*(x[1]-3)"), 0, 4) == 3
    assert sturm_count(parse("x[1]^2 + 1"), -10, 10) == 0
    assert sturm_count(parse("x[1]"), -1, 1) == 1


def test_sturm_count_endpoint_root():
    with pytest.raises(EndpointIsRoot):
        sturm_count(parse("x[1] - 1"), 1, 2)


def test_isolate_sqrt2():
    lo, hi = isolate_roots(parse("x[1]^2 - 2"))
    assert lo.lo < -math.sqrt(2) < lo.hi and hi.lo < math.sqrt(2) < hi.hi
    assert lo.hi <= hi.lo and not lo.is_rational


def test_isolate_collapses_multiplicity_and_constants():
    (r,) = isolate_roots(parse("(x[1] - 1)^2"))
    assert r.is_rational and r.value == 1
    assert isolate_roots(parse("7")) == []
    with pytest.raises(ValueError):
        isolate_roots(parse("0"))


def test_sign_at_examples():
    sqrt2 = isolate_roots(parse("x[1]^2 - 2"))[1]
    assert sign_at(parse("x[1]^2 - 2"), sqrt2) == 0
    assert sign_at(parse("x[1]"), Fraction(3, 2)) == 1
    assert sign_at(parse("x[1]^3 - 2"), sqrt2) == 1


def test_sign_at_close_root():
    sqrt2 = isolate_roots(parse("x[1]^2 - 2"))[1]
    assert sign_at(parse("x[1] - 141421/100000"), sqrt2) == 1
    assert sign_at(parse("x[1] - 141422/100000"), sqrt2) == -1


def test_univariate_sat_examples():
    r = univariate_sat([parse("x[1]")], [parse("x[1]^2 - 1")])
    assert r.nonempty and r.witness == 2
    assert not univariate_sat([parse("-x[1]^2")], [parse("x[1]")])
    r = univariate_sat([], [parse("1")])
    assert r.nonempty and r.witness == 0


def test_univariate_sat_root_only():
    r = univariate_sat([parse("-(x[1]^2 - 2)^2")], [parse("x[1]")])
    assert r.nonempty and not r.witness.is_rational
    assert compare(r.witness, isolate_roots(parse("x[1]^2 - 2"))[1]) == 0


def test_compare_and_negation():
    a, b = isolate_roots(parse("x[1]^2 - 2"))
    c = isolate_roots(parse("x[1]^3 - 2*x[1]"))[2]
    assert compare(a, b) == -1 and compare(b, c) == 0 and compare(-b, a) == 0
    assert compare(b, Fraction(3, 2)) == -1 and compare(Fraction(7, 5), b) == -1


def test_simplest_between():
    assert simplest_between(Fraction(1, 4), Fraction(3, 4)) == Fraction(1, 2)
    assert simplest_between(Fraction(-5, 2), Fraction(-1, 3)) == -1
    assert simplest_between(Fraction(2), Fraction(3)) == Fraction(5, 2)


def test_root_bound_is_cauchy():
    assert root_bound(parse("2*x[1]^2 - 6")) == 4


def test_extended_limit():
    assert str(ExtendedLimit.plus_infinity()) == "+inf"
    assert str(-ExtendedLimit(Fraction(1, 2))) == "-1/2"
    assert float(ExtendedLimit.minus_infinity()) == float("-inf")
    assert RealAlgebraicNumber.rational(3).value == 3
