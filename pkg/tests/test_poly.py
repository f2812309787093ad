from fractions import Fraction

import pytest

from orbitalg.poly import (
    GREVLEX, LEX, FinitePermutation, MissingVariableError, Poly, PolySyntaxError,
    VarIndex, apply_perm, evaluate, parse, row_embed, s, substitute, transposition, x,
)


def test_apply_perm_examples():
    assert apply_perm(transposition(1, 2), x(1)) == x(2)
    f = parse("x[1][1]^2*x[3][2] - 3/2*s[1] + 7")
    assert apply_perm(FinitePermutation(), f) == f
    assert apply_perm(FinitePermutation.cycle(1, 2, 3), x(1, 1) * x(2, 2)) == x(2, 1) * x(3, 2)


def test_apply_perm_leaves_parameters():
    assert apply_perm(transposition(1, 5), s(1) * x(1)) == s(1) * x(5)


def test_row_embed_examples():
    assert row_embed(parse("x[1][1]*x[1][2] - 1"), 3) == parse("x[3][1]*x[3][2] - 1")
    assert row_embed(Poly.constant(5), 7) == 5
    assert row_embed(parse("x[1][1]^2 + x[1][1]"), 2) == parse("x[2][1]^2 + x[2][1]")
    with pytest.raises(ValueError):
        row_embed(x(2), 3)


def test_evaluate_examples():
    zero = {VarIndex("main", 1, 1): 0, VarIndex("main", 2, 1): 0}
    assert evaluate(parse("x[1][1] - x[2][1]"), zero) == 0
    assert evaluate(x(1, 1) * x(1, 2), {VarIndex("main", 1, 1): Fraction(2, 3),
                                        VarIndex("main", 1, 2): 3}) == 2
    assert evaluate(parse("x[1][2]*(x[1][2] - 1)"), {VarIndex("main", 1, 2): 1}) == 0


def test_evaluate_reports_missing_variables():
    with pytest.raises(MissingVariableError) as info:
        evaluate(parse("x[1][1] + x[2][3] + s[4]"), {VarIndex("main", 1, 1): 1})
    msg = str(info.value)
    assert "x[2][3]" in msg and "s[4]" in msg


def test_parser_and_printer_round_trip():
    f = parse("(x[1][1] - 2/3*x[2][1])^3 + s[2]*x[1][2] - 1")
    assert parse(str(f)) == f
    assert parse("x[2]") == x(2, 1)
    assert parse("x[1] ** 2 / 4") == x(1) ** 2 / 4


@pytest.mark.parametrize("bad", ["1.5*x[1][1]", "x[1][1] +", "x[1][1]/x[2][1]", "y", "x[0][1]", "2e3"])
def test_parser_rejects(bad):
    with pytest.raises(PolySyntaxError):
        parse(bad)


def test_parser_checks_column_count():
    with pytest.raises(PolySyntaxError):
        parse("x[1][3]", 2)


def test_canonical_form():
    f = parse("x[1][1]*x[2][1] - x[2][1]*x[1][1] + 0*s[1]")
    assert f.is_zero() and f == 0
    assert parse("x[2][1] + x[1][1]") == parse("x[1][1] + x[2][1]")


def test_substitute():
    f = parse("x[1][1]^2 + s[1]")
    assert substitute(f, {VarIndex("main", 1, 1): x(2) + 1}) == parse("x[2][1]^2 + 2*x[2][1] + 1 + s[1]")


def test_orders():
    # parameters are the most significant variables, then rows ascending
    def mono(f):
        (m,) = f.terms
        return m

    a, b = mono(x(1) ** 2), mono(x(1) * x(2) ** 2)
    assert GREVLEX.key(b) > GREVLEX.key(a)      # higher total degree wins
    assert LEX.key(a) > LEX.key(b)              # x[1][1] beats x[2][1]
    assert LEX.key(mono(s(2))) > LEX.key(mono(x(1)))


def test_permutation_algebra():
    c = FinitePermutation.cycle(1, 2, 3)
    assert (c * c * c) == FinitePermutation()
    assert c * c.inverse() == FinitePermutation()
    assert (c * transposition(1, 2))(1) == c(2)
    with pytest.raises(ValueError):
        FinitePermutation({1: 2, 2: 2})
