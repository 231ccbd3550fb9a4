"""Expression grammar: parsing, diagnostics, rendering, evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torcob import exprs
from torcob.fgl import build
from torcob.torus import TorusContext


def test_parse_sum_of_terms():
    ast = exprs.parse("t1 + 2/3*m1*t1*t2")
    assert ast[0] == "add"
    assert ast[1] == ("var", "t", 1)
    assert ast[2][0] == "mul"


def test_parse_nested_calls():
    ast = exprs.parse("F(t1, rho(t2))")
    assert ast == ("call", "F", [("var", "t", 1), ("call", "rho", [("var", "t", 2)])])


def test_parse_error_location():
    with pytest.raises(exprs.ParseError) as info:
        exprs.parse("t1 +* t2")
    assert info.value.col == 4
    with pytest.raises(exprs.ParseError):
        exprs.parse("((t1)")
    with pytest.raises(exprs.ParseError):
        exprs.parse("t1 $ t2")
    with pytest.raises(exprs.ParseError):
        exprs.parse("frobenius(t1)")


def test_parse_rationals_and_negatives():
    assert exprs.parse("2/3") == ("rat", Fraction(2, 3))
    assert exprs.parse("-2/3") == ("rat", Fraction(-2, 3))
    assert exprs.parse("-t1") == ("neg", ("var", "t", 1))
    with pytest.raises(exprs.ParseError):
        exprs.parse("1/0")


def test_precedence():
    assert exprs.parse("t1 + t2*t1") == (
        "add",
        ("var", "t", 1),
        ("mul", ("var", "t", 2), ("var", "t", 1)),
    )
    assert exprs.parse("t1*t2^2") == (
        "mul",
        ("var", "t", 1),
        ("pow", ("var", "t", 2), 2),
    )
    assert exprs.parse("-t1^2") == ("neg", ("pow", ("var", "t", 1), 2))


def test_render_parse_identity_examples():
    for text in [
        "t1 + 2/3*m1*t1*t2",
        "F(t1, rho(t2))",
        "nser(-2, t1)",
        "chern(1, -1)",
        "(t1 + t2)^3",
        "-(t1*t2)",
        "(t1^2)^3",
    ]:
        ast = exprs.parse(text)
        assert exprs.parse(exprs.render(ast)) == ast


@st.composite
def asts(draw, depth=3):
    kinds = ["rat", "var"] if depth == 0 else ["rat", "var", "add", "sub", "mul", "neg", "pow", "call"]
    kind = draw(st.sampled_from(kinds))
    if kind == "rat":
        return ("rat", Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9))))
    if kind == "var":
        return ("var", draw(st.sampled_from("tmx")), draw(st.integers(1, 4)))
    if kind in ("add", "sub", "mul"):
        return (kind, draw(asts(depth=depth - 1)), draw(asts(depth=depth - 1)))
    if kind == "neg":
        child = draw(asts(depth=depth - 1))
        if child[0] == "rat":
            child = ("var", "t", 1)
        return ("neg", child)
    if kind == "pow":
        return ("pow", draw(asts(depth=depth - 1)), draw(st.integers(0, 5)))
    name = draw(st.sampled_from(exprs.CALL_NAMES))
    if name == "chern":
        return ("call", "chern", [("rat", Fraction(draw(st.integers(-3, 3)))) for _ in range(2)])
    if name == "nser":
        return ("call", "nser", [("rat", Fraction(draw(st.integers(-3, 3)))), draw(asts(depth=depth - 1))])
    if name == "rho":
        return ("call", "rho", [draw(asts(depth=depth - 1))])
    return ("call", "F", [draw(asts(depth=depth - 1)), draw(asts(depth=depth - 1))])


@settings(max_examples=150, deadline=None)
@given(asts())
def test_render_parse_round_trip(ast):
    assert exprs.parse(exprs.render(ast)) == ast


def test_eval_series_matches_engine():
    T = TorusContext(2, build(4, 6))
    got = exprs.eval_series(exprs.parse("F(t1, rho(t2))"), T)
    assert got == T.character_series((1, -1))
    got = exprs.eval_series(exprs.parse("chern(1, -1)"), T)
    assert got == T.character_series((1, -1))
    got = exprs.eval_series(exprs.parse("nser(2, t1)"), T)
    assert got == T.fgl.n_series(2).substitute({"u": T.var(0)})
    got = exprs.eval_series(exprs.parse("1/2*m1*t1 - t2^2"), T)
    want = T.var(0).mul_coeff(exprs.GradedCoeff.generator(1)).scale(Fraction(1, 2)) - T.var(1) ** 2
    assert got == want


def test_eval_series_specialized_m():
    T = TorusContext(1, build(0, 5, ("multiplicative", 2)))
    got = exprs.eval_series(exprs.parse("m1*t1"), T)
    assert got == T.var(0).scale(1)  # m1 = beta/2 = 1


def test_eval_series_rejections():
    T = TorusContext(2, build(4, 6))
    with pytest.raises(exprs.EvalError):
        exprs.eval_series(exprs.parse("t3"), T)
    with pytest.raises(exprs.EvalError):
        exprs.eval_series(exprs.parse("x1"), T)
    with pytest.raises(exprs.EvalError):
        exprs.eval_series(exprs.parse("chern(1)"), T)
    with pytest.raises(exprs.EvalError):
        exprs.eval_series(exprs.parse("nser(1/2, t1)"), T)


def test_eval_xpoly():
    got = exprs.eval_xpoly(exprs.parse("x1^2 - x2*x1 + m2"), 2)
    from torcob import flag

    want = flag.x_var(2, 1) ** 2 - flag.x_var(2, 2) * flag.x_var(2, 1)
    want = want + flag.x_poly(2, {(0, 0): exprs.GradedCoeff.generator(2)})
    assert got == want
    with pytest.raises(exprs.EvalError):
        exprs.eval_xpoly(exprs.parse("t1"), 2)
    with pytest.raises(exprs.EvalError):
        exprs.eval_xpoly(exprs.parse("F(x1, x2)"), 2)
