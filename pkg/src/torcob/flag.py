"""The rational cobordism ring of the full flag variety of GL_n.

The ring is the coinvariant algebra: polynomials in x_1..x_n over the
Lazard coefficients modulo the ideal of positive-degree symmetric
polynomials.  Normal forms live on the Artin staircase {x^a : a_i <= n-i};
reduction divides by the Groebner basis h_i(x_1, ..., x_{n+1-i}) under the
lexicographic order with x_n largest, whose leading terms are the staircase
walls x_{n+1-i}^i.

The bridge to the moment-graph model evaluates a polynomial at the
tautological weights t_{w(1)}, ..., t_{w(n)} of each coset w.
"""

from __future__ import annotations

import itertools
import math

from torcob.coeff import GradedCoeff
from torcob.errors import TruncationInsufficient
from torcob.gkm import GKMGraph, PiecewiseClass, basis_expand, flag_graph
from torcob.series import TruncSeries
from torcob.torus import TorusContext

XBOUND = 1 << 30  # polynomials: no truncation in practice


def xvars(n: int):
    return tuple(f"x{i + 1}" for i in range(n))


def x_poly(n: int, terms) -> TruncSeries:
    return TruncSeries(xvars(n), terms, XBOUND)


def x_zero(n: int) -> TruncSeries:
    return TruncSeries.zero(xvars(n), XBOUND)


def x_one(n: int) -> TruncSeries:
    return TruncSeries.constant(xvars(n), 1, XBOUND)


def x_var(n: int, k: int) -> TruncSeries:
    """x_k, 1-based."""
    return TruncSeries.variable(xvars(n), f"x{k}", XBOUND)


def elementary_symmetric(n: int, k: int) -> TruncSeries:
    if not 0 <= k <= n:
        raise ValueError("elementary symmetric index out of range")
    terms = {}
    for c in itertools.combinations(range(n), k):
        exps = [0] * n
        for i in c:
            exps[i] = 1
        terms[tuple(exps)] = GradedCoeff.one()
    return x_poly(n, terms)


def complete_homogeneous(n: int, k: int, nvars: int) -> TruncSeries:
    """h_k(x_1, ..., x_nvars) inside the n-variable ring."""
    terms = {}
    for c in itertools.combinations_with_replacement(range(nvars), k):
        exps = [0] * n
        for i in c:
            exps[i] += 1
        terms[tuple(exps)] = GradedCoeff.one()
    return x_poly(n, terms)


def _order_key(exps):
    # lexicographic with x_n > ... > x_1
    return tuple(reversed(exps))


def _groebner_basis(n: int):
    """(leading exponent, polynomial terms) pairs for the symmetric ideal."""
    out = []
    for i in range(1, n + 1):
        g = complete_homogeneous(n, i, n + 1 - i)
        lead = [0] * n
        lead[n - i] = i
        out.append((tuple(lead), g.coeffs))
    return out


def normal_form(n: int, p: TruncSeries) -> TruncSeries:
    """Reduce onto the Artin staircase; a ring map to the quotient."""
    if p.vars != xvars(n):
        raise ValueError("polynomial is not in the expected x-variables")
    gb = _groebner_basis(n)
    work = dict(p.coeffs)
    done = {}
    while work:
        t = max(work, key=_order_key)
        c = work.pop(t)
        if c.is_zero():
            continue
        for lead, gterms in gb:
            if all(l <= e for l, e in zip(lead, t)):
                shift = tuple(e - l for e, l in zip(t, lead))
                for gt, gc in gterms.items():
                    key = tuple(a + b for a, b in zip(gt, shift))
                    if key == t:
                        continue
                    prev = work.get(key, GradedCoeff.zero())
                    nxt = prev - gc * c
                    if nxt.is_zero():
                        work.pop(key, None)
                    else:
                        work[key] = nxt
                break
        else:
            done[t] = c
    return x_poly(n, done)


def artin_exponents(n: int):
    """The staircase exponents a with a_i <= n - i, in graded-lex order."""
    ranges = [range(n - i + 1) for i in range(1, n + 1)]
    exps = [tuple(a) for a in itertools.product(*ranges)]
    return sorted(exps, key=lambda e: (sum(e), tuple(-x for x in e)))


def coinv_rank(n: int):
    """(n!, Artin staircase): the free rank over the Lazard ring."""
    if n < 1:
        raise ValueError("need n >= 1")
    basis = artin_exponents(n)
    count = math.factorial(n)
    if len(basis) != count:
        raise ArithmeticError("staircase does not enumerate n! monomials")
    return count, basis


class CoinvariantElement:
    """Normal-form representative on the Artin staircase."""

    def __init__(self, n: int, poly: TruncSeries):
        self.n = n
        self.poly = normal_form(n, poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CoinvariantElement):
            return NotImplemented
        return self.n == other.n and self.poly == other.poly

    def __str__(self):
        return str(self.poly)

    def __mul__(self, other):
        return CoinvariantElement(self.n, self.poly * other.poly)

    def __add__(self, other):
        return CoinvariantElement(self.n, self.poly + other.poly)


def flag_restriction(ctx: TorusContext, n: int, p: TruncSeries) -> PiecewiseClass:
    """Evaluate p at the tautological weights of each coset: x_k -> t_{w(k)}."""
    if ctx.rank != n:
        raise ValueError("torus rank must equal n")
    g = flag_graph(n)
    deg = p.max_degree() or 0
    if deg > ctx.D:
        raise TruncationInsufficient(
            f"polynomial degree {deg} exceeds series truncation {ctx.D}"
        )
    values = {}
    for v in g.vertices:
        w = [int(c) for c in v]
        assignment = {f"x{k + 1}": ctx.var(w[k] - 1) for k in range(n)}
        values[v] = p.substitute(assignment)
    return PiecewiseClass(values)


def artin_restriction_basis(ctx: TorusContext, n: int, g: GKMGraph = None):
    """Restrictions of the Artin monomials: a free S-basis of the class module."""
    if g is None:
        g = flag_graph(n)
    out = []
    for a in artin_exponents(n):
        mono = x_poly(n, {a: GradedCoeff.one()})
        out.append(flag_restriction(ctx, n, mono))
    return out


def kernel_check(ctx: TorusContext, n: int, p: TruncSeries) -> bool:
    """True iff p maps to zero in the flag cobordism ring.

    Two independent routes must agree: the coinvariant normal form, and the
    moment-graph expansion of the restriction followed by the forgetful
    augmentation of every coordinate.
    """
    nf_zero = normal_form(n, p).is_zero()
    g = flag_graph(n)
    alpha = flag_restriction(ctx, n, p)
    basis = artin_restriction_basis(ctx, n, g)
    coords = basis_expand(ctx, g, basis, alpha)
    gkm_zero = all(ctx.augment(c).is_zero() for c in coords)
    if nf_zero != gkm_zero:
        raise ArithmeticError(
            f"normal-form route ({nf_zero}) disagrees with the moment-graph route ({gkm_zero})"
        )
    return nf_zero
