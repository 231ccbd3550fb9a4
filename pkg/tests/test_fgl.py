"""Formal group law: frozen values, axioms, specializations."""

from fractions import Fraction

import pytest

from torcob.coeff import GradedCoeff
from torcob.errors import TruncationInsufficient
from torcob.fgl import build
from torcob.series import TruncSeries


def mono(exps, q=1):
    return GradedCoeff.monomial(exps, q)


def test_additive_is_plain_sum():
    ctx = build(0, 5, "additive")
    uv = ("u", "v")
    assert ctx.F == TruncSeries.variable(uv, "u", 5) + TruncSeries.variable(uv, "v", 5)


def test_multiplicative_beta_one():
    ctx = build(0, 8, ("multiplicative", 1))
    uv = ("u", "v")
    u = TruncSeries.variable(uv, "u", 8)
    v = TruncSeries.variable(uv, "v", 8)
    assert ctx.F == u + v - u * v


def test_multiplicative_log_coefficients():
    ctx = build(0, 6, ("multiplicative", Fraction(2)))
    # m_i = beta^i/(i+1)
    for i in range(1, 6):
        assert ctx.log.coefficient((i + 1,)) == GradedCoeff.from_rational(
            Fraction(2) ** i / (i + 1)
        )


def test_universal_degree_three():
    ctx = build(6, 3)
    u, v = ("u", "v")
    want = {
        (1, 0): GradedCoeff.one(),
        (0, 1): GradedCoeff.one(),
        (1, 1): mono((1,), -2),
        (2, 1): mono((2,), 4) + mono((0, 1), -3),
        (1, 2): mono((2,), 4) + mono((0, 1), -3),
    }
    assert ctx.F.coeffs == want


def test_a_coeff_values_and_symmetry():
    ctx = build(6, 5)
    assert ctx.a_coeff(1, 0) == GradedCoeff.one()
    assert ctx.a_coeff(1, 1) == mono((1,), -2)
    assert ctx.a_coeff(1, 2) == mono((2,), 4) + mono((0, 1), -3)
    assert ctx.a_coeff(2, 1) == ctx.a_coeff(1, 2)
    with pytest.raises(TruncationInsufficient):
        ctx.a_coeff(3, 3)


def test_a_coeff_grading():
    ctx = build(6, 6)
    for i in range(0, 4):
        for j in range(0, 4):
            if i + j < 1 or i + j > 6:
                continue
            c = ctx.a_coeff(i, j)
            if not c.is_zero():
                assert c.homogeneous_degree() == 1 - i - j


def test_n_series_values():
    ctx = build(6, 4)
    u = TruncSeries.variable(("u",), "u", 4)
    assert ctx.n_series(1) == u
    assert ctx.n_series(0).is_zero()
    rho = ctx.n_series(-1)
    assert rho == ctx.rho
    assert rho.coefficient((1,)) == GradedCoeff.from_rational(-1)
    assert rho.coefficient((2,)) == mono((1,), -2)
    two = ctx.n_series(2)
    assert two.coefficient((1,)) == GradedCoeff.from_rational(2)
    assert two.coefficient((2,)) == mono((1,), -2)
    assert two.coefficient((3,)) == mono((2,), 8) + mono((0, 1), -6)


def test_n_series_multiplicative():
    ctx = build(0, 6, ("multiplicative", 1))
    u = TruncSeries.variable(("u",), "u", 6)
    assert ctx.n_series(2) == u.scale(2) - u * u


def test_n_series_linear_coefficient_is_n():
    ctx = build(4, 5)
    for n in (-3, -1, 0, 1, 2, 5):
        assert ctx.n_series(n).coefficient((1,)) == GradedCoeff.from_rational(n)


def test_n_series_homogeneous_of_degree_one():
    ctx = build(4, 5)
    for n in (-2, -1, 2, 3):
        assert ctx.n_series(n).homogeneous_degree() == 1
    assert ctx.F.homogeneous_degree() == 1
    assert ctx.rho.homogeneous_degree() == 1


def test_formal_sum_fold():
    ctx = build(4, 5)
    from torcob.torus import TorusContext

    T = TorusContext(3, ctx)
    t1, t2, t3 = (T.var(i) for i in range(3))
    assert ctx.formal_sum([t1]) == t1
    assert ctx.formal_sum([t1, T.zero()]) == t1
    left = ctx.formal_sum([t1, t2, t3])
    right = ctx.plus(t1, ctx.plus(t2, t3))
    assert left == right  # associativity makes the bracketing irrelevant
    with pytest.raises(ValueError):
        ctx.formal_sum([T.one()])


def test_inverse_axiom():
    ctx = build(5, 6)
    u = TruncSeries.variable(("u",), "u", 6)
    assert ctx.F.substitute({"u": u, "v": ctx.rho}).is_zero()


def test_commutativity():
    ctx = build(5, 6)
    uv = ("u", "v")
    u = TruncSeries.variable(uv, "u", 6)
    v = TruncSeries.variable(uv, "v", 6)
    assert ctx.F.substitute({"u": v, "v": u}) == ctx.F


def test_log_exp_round_trip():
    ctx = build(5, 7)
    u = TruncSeries.variable(("u",), "u", 7)
    assert ctx.log.substitute({"u": ctx.exp}) == u
    assert ctx.exp.substitute({"u": ctx.log}) == u


def test_specialization_commutes_with_construction():
    uni = build(6, 6)
    beta = Fraction(3, 2)
    mult = build(0, 6, ("multiplicative", beta))

    def value(i):
        return beta ** i / (i + 1)

    assert uni.F.specialize(value) == mult.F
    assert uni.rho.specialize(value) == mult.rho
    add = build(0, 6, "additive")
    assert uni.F.specialize(lambda i: Fraction(0)) == add.F


def test_custom_specialization():
    ctx = build(0, 4, {1: Fraction(1, 2)})
    # log = u + u^2/2, a truncated multiplicative-like law
    assert ctx.log.coefficient((2,)) == GradedCoeff.from_rational(Fraction(1, 2))
    assert ctx.log.coefficient((3,)).is_zero()


def test_build_validates_arguments():
    with pytest.raises(ValueError):
        build(-1, 4)
    with pytest.raises(ValueError):
        build(2, 0)
