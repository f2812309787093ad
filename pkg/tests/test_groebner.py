import pytest
import sympy

from orbitalg.groebner import (
    DegreeCapExceeded, IdealHandle, elimination_ideal, groebner_basis, ideal_intersection,
    ideals_equal, normal_form, radical_member,
)
from orbitalg.poly import GREVLEX, LEX, VarIndex, parse, x

from oracles import linear_algebra_member


def ideal(*gens, order=GREVLEX, cap=40):
    return IdealHandle([parse(g) for g in gens], order, cap)


def test_single_monomial():
    assert groebner_basis(ideal("x[1][1]")) == [x(1)]


def test_chain_lex():
    gb = groebner_basis(ideal("x[1][1] - x[2][1]", "x[2][1] - x[3][1]", order=LEX))
    assert parse("x[1][1] - x[3][1]") in gb
    assert gb == [parse("x[1][1] - x[3][1]"), parse("x[2][1] - x[3][1]")]


def test_grevlex_against_linear_algebra():
    I = ideal("x[1][1]^2", "x[1][1]*x[2][1] + x[2][1]^2")
    gens = list(I.generators)
    for d in range(0, 5):
        for a in range(d + 1):
            f = x(1) ** a * x(2) ** (d - a)
            assert normal_form(f, I).is_zero() == linear_algebra_member(f, gens, d)


def test_normal_form_examples():
    I = ideal("x[1][1]^2 - x[2][1]", order=LEX)
    assert normal_form(parse("x[1][1]^2 - x[2][1]"), I) == 0
    assert normal_form(parse("1"), I) == 1
    assert normal_form(x(1) ** 3, I) == x(1) * x(2)


def test_elimination_examples():
    s1 = VarIndex("param", 0, 1)
    I = ideal("s[1] - x[1][1]^2", "s[1] - x[2][1]")
    E = elimination_ideal(I, I.variables() - {s1})
    assert groebner_basis(E) == [parse("x[1][1]^2 - x[2][1]")]
    assert groebner_basis(elimination_ideal(ideal("x[1][1]"), {VarIndex("main", 1, 1)})) == [x(1)]
    gens = [f"x[{i}][{j}] - s[{j}]*s[{2 + i}]" for i in (1, 2) for j in (1, 2)]
    I = ideal(*gens)
    keep = {v for v in I.variables() if v.kind == "main"}
    E = elimination_ideal(I, keep)
    assert groebner_basis(E) == [parse("x[1][2]*x[2][1] - x[1][1]*x[2][2]")]


def test_radical_member_examples():
    assert radical_member(parse("x[1][1]"), ideal("x[1][1]^2"))
    assert not radical_member(parse("x[1][1] + 1"), ideal("x[1][1]^2"))
    assert radical_member(parse("x[1][1]*x[2][1]"), ideal("x[1][1]^2*x[2][1]^3"))


def test_degree_cap():
    with pytest.raises(DegreeCapExceeded) as info:
        groebner_basis(ideal("x[1][1]^3*x[2][1] - x[3][1]^4", "x[1][1]*x[2][1]^3 - x[3][1]^2", cap=4))
    assert info.value.degree > 4 and info.value.cap == 4


def test_idempotent_and_deterministic():
    I = ideal("x[1][1]^2 - x[2][1]*x[3][1]", "x[2][1]^2 - x[1][1]", "x[1][1]*x[3][1] - 1")
    gb = groebner_basis(I)
    assert groebner_basis(IdealHandle(gb)) == gb
    assert groebner_basis(ideal("x[1][1]^2 - x[2][1]*x[3][1]", "x[2][1]^2 - x[1][1]",
                                "x[1][1]*x[3][1] - 1")) == gb


def _to_sympy_text(g):
    return (str(g).replace("x[1][1]", "a").replace("x[2][1]", "b")
            .replace("x[3][1]", "c").replace("^", "**"))


def test_matches_sympy():
    gens = ["x[1][1]^2 - x[2][1]*x[3][1]", "x[2][1]^2 - x[1][1] + 2", "x[1][1]*x[3][1] - x[2][1]"]
    a, b, c = sympy.symbols("a b c")
    for order, name in ((GREVLEX, "grevlex"), (LEX, "lex")):
        ours = groebner_basis(ideal(*gens, order=order))
        theirs = sympy.groebner([sympy.sympify(_to_sympy_text(g)) for g in gens], a, b, c, order=name)
        assert {sympy.expand(sympy.sympify(_to_sympy_text(g))) for g in ours} == set(theirs.exprs)


def test_intersection_and_equality():
    I = ideal("x[1][1]")
    J = ideal("x[2][1]")
    K = ideal_intersection(I, J)
    assert ideals_equal(K, ideal("x[1][1]*x[2][1]"))
    assert not ideals_equal(I, J)
