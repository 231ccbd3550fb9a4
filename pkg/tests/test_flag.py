"""Coinvariant algebra of the flag variety and its moment-graph bridge."""

import math
import random

import pytest

from torcob import flag, gkm
from torcob.coeff import GradedCoeff
from torcob.errors import TruncationInsufficient
from torcob.fgl import build
from torcob.torus import TorusContext


def test_normal_form_examples():
    assert str(flag.normal_form(2, flag.x_var(2, 2))) == "-x1"
    assert flag.normal_form(2, flag.x_var(2, 1) ** 2).is_zero()
    assert flag.normal_form(3, flag.elementary_symmetric(3, 2)).is_zero()
    # oracle for x1^2: x1^2 = x1 e1 - e2
    p = flag.x_var(2, 1) * flag.elementary_symmetric(2, 1) - flag.elementary_symmetric(2, 2)
    assert p == flag.x_var(2, 1) ** 2


def test_normal_form_lands_on_staircase():
    rng = random.Random(9)
    for n in (2, 3, 4):
        staircase = set(flag.artin_exponents(n))
        for _ in range(8):
            exps = tuple(rng.randint(0, n) for _ in range(n))
            p = flag.x_poly(n, {exps: GradedCoeff.one()})
            nf = flag.normal_form(n, p)
            assert set(nf.coeffs) <= staircase


def test_normal_form_fixes_staircase():
    for n in (2, 3, 4):
        for a in flag.artin_exponents(n):
            p = flag.x_poly(n, {a: GradedCoeff.one()})
            assert flag.normal_form(n, p) == p


def test_normal_form_is_ring_map():
    rng = random.Random(13)
    for n in (2, 3):
        for _ in range(8):
            a = _rand_xpoly(n, rng)
            b = _rand_xpoly(n, rng)
            lhs = flag.normal_form(n, a * b)
            rhs = flag.normal_form(n, flag.normal_form(n, a) * flag.normal_form(n, b))
            assert lhs == rhs


def _rand_xpoly(n, rng, maxdeg=2):
    terms = {}
    for _ in range(3):
        e = tuple(rng.randint(0, 2) for _ in range(n))
        if sum(e) > maxdeg:
            continue
        c = GradedCoeff.from_rational(rng.randint(-3, 3))
        if rng.random() < 0.5:
            c = c + GradedCoeff.generator(1)
        if not c.is_zero():
            terms[e] = c
    return flag.x_poly(n, terms)


def test_coinv_rank():
    for n in (1, 2, 3, 4):
        count, basis = flag.coinv_rank(n)
        assert count == math.factorial(n)
        assert len(set(basis)) == count
        for a in basis:
            assert all(a[i] <= n - 1 - i for i in range(n))
    assert flag.coinv_rank(1) == (1, [(0,)])
    assert flag.coinv_rank(2)[1] == [(0, 0), (1, 0)]


def test_flag_restriction_examples():
    T = TorusContext(2, build(3, 5))
    alpha = flag.flag_restriction(T, 2, flag.x_var(2, 1))
    assert alpha.restrict("12") == T.var(0)
    assert alpha.restrict("21") == T.var(1)
    e1 = flag.elementary_symmetric(2, 1)
    sym = flag.flag_restriction(T, 2, e1)
    assert sym.restrict("12") == sym.restrict("21") == T.var(0) + T.var(1)
    one = flag.flag_restriction(T, 2, flag.x_one(2))
    assert one.restrict("12") == T.one() and one.restrict("21") == T.one()


def test_flag_restriction_is_ring_map_into_classes():
    rng = random.Random(21)
    for n in (2, 3):
        T = TorusContext(n, build(3, 6))
        g = gkm.flag_graph(n)
        for _ in range(4):
            a = _rand_xpoly(n, rng)
            b = _rand_xpoly(n, rng)
            ra = flag.flag_restriction(T, n, a)
            rb = flag.flag_restriction(T, n, b)
            rab = flag.flag_restriction(T, n, a * b)
            assert rab == ra * rb
            assert gkm.is_class(T, g, ra)
            assert gkm.is_class(T, g, rab)


def test_flag_restriction_truncation_guard():
    T = TorusContext(2, build(3, 3))
    with pytest.raises(TruncationInsufficient):
        flag.flag_restriction(T, 2, flag.x_var(2, 1) ** 5)


def test_kernel_check_examples():
    T2 = TorusContext(2, build(3, 5))
    assert flag.kernel_check(T2, 2, flag.x_var(2, 1) ** 2)
    assert not flag.kernel_check(T2, 2, flag.x_var(2, 1))
    T3 = TorusContext(3, build(3, 5))
    assert flag.kernel_check(T3, 3, flag.elementary_symmetric(3, 1))


def test_kernel_check_random_agreement():
    # the check itself raises if the two routes ever disagree
    rng = random.Random(37)
    T2 = TorusContext(2, build(3, 5))
    T3 = TorusContext(3, build(3, 5))
    for i in range(10):
        n, T = (2, T2) if i % 2 == 0 else (3, T3)
        p = _rand_xpoly(n, rng)
        if i % 3 == 0:
            p = p * flag.elementary_symmetric(n, 1)
        flag.kernel_check(T, n, p)


def test_artin_restriction_basis_is_free():
    # expanding a symmetric-multiple restriction gives coordinates that all
    # augment to zero; expanding x1 gives something visibly nonzero
    T = TorusContext(2, build(3, 5))
    g = gkm.flag_graph(2)
    basis = flag.artin_restriction_basis(T, 2, g)
    alpha = flag.flag_restriction(T, 2, flag.elementary_symmetric(2, 1) * flag.x_var(2, 1))
    coords = gkm.basis_expand(T, g, basis, alpha)
    assert all(T.augment(c).is_zero() for c in coords)
    beta = flag.flag_restriction(T, 2, flag.x_var(2, 1))
    coords = gkm.basis_expand(T, g, basis, beta)
    assert [str(T.augment(c)) for c in coords] == ["0", "1"]
