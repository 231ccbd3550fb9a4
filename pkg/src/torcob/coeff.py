"""Coefficient ring arithmetic: the rationalized Lazard ring.

With rational coefficients the Lazard ring is the free polynomial ring
Q[m1, m2, ...] on the logarithm coefficients, so a coefficient is a sparse
polynomial with exact rational coefficients.  The generator ``m_i`` sits in
cohomological degree ``-i``; no floating point is used anywhere.

Exponent vectors are tuples with trailing zeros trimmed, position ``p``
holding the exponent of ``m_{p+1}``; the empty tuple is the constant
monomial.
"""

from __future__ import annotations

from fractions import Fraction


def _trim(exps):
    n = len(exps)
    while n and exps[n - 1] == 0:
        n -= 1
    return tuple(exps[:n])


def madd(a: tuple, b: tuple) -> tuple:
    """Multiply two m-monomials (no trimming needed: sums of nonneg ints)."""
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def mweight(exps: tuple) -> int:
    """Weight of an m-monomial: sum of i * exp(m_i).  Cohomological degree is -weight."""
    return sum((p + 1) * e for p, e in enumerate(exps))


def _sort_key(exps: tuple):
    # graded order: weight first, then lexicographically largest exponent
    # vector first (so m1^2 precedes m2)
    return (mweight(exps), tuple(-e for e in exps))


class GradedCoeff:
    """Element of Q[m1, m2, ...], stored as {exponent tuple: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> GradedCoeff:
        return cls({})

    @classmethod
    def one(cls) -> GradedCoeff:
        return cls({(): Fraction(1)})

    @classmethod
    def from_rational(cls, q) -> GradedCoeff:
        q = Fraction(q)
        return cls({(): q} if q else {})

    @classmethod
    def generator(cls, i: int) -> GradedCoeff:
        """The Lazard generator m_i, of cohomological degree -i."""
        if i < 1:
            raise ValueError("generator index must be >= 1")
        exps = (0,) * (i - 1) + (1,)
        return cls({exps: Fraction(1)})

    @classmethod
    def monomial(cls, exps, q=1) -> GradedCoeff:
        q = Fraction(q)
        return cls({_trim(exps): q} if q else {})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def rational_part(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def max_generator_index(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    # -- grading -----------------------------------------------------------

    def degrees(self):
        """Sorted list of cohomological degrees present."""
        return sorted({-mweight(e) for e in self.terms})

    def homogeneous_degree(self):
        """The single cohomological degree, or None if zero or mixed."""
        degs = self.degrees()
        if len(degs) == 1:
            return degs[0]
        return None

    def degree_component(self, j: int) -> GradedCoeff:
        return GradedCoeff({e: q for e, q in self.terms.items() if -mweight(e) == j})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: GradedCoeff) -> GradedCoeff:
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, q in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = q
            else:
                s = s + q
                if s:
                    out[e] = s
                else:
                    del out[e]
        return GradedCoeff(out)

    def __neg__(self) -> GradedCoeff:
        return GradedCoeff({e: -q for e, q in self.terms.items()})

    def __sub__(self, other: GradedCoeff) -> GradedCoeff:
        return self + (-other)

    def __mul__(self, other: GradedCoeff) -> GradedCoeff:
        if not self.terms or not other.terms:
            return GradedCoeff.zero()
        out = {}
        for ea, qa in self.terms.items():
            for eb, qb in other.terms.items():
                e = madd(ea, eb)
                q = qa * qb
                s = out.get(e)
                if s is None:
                    out[e] = q
                else:
                    s = s + q
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return GradedCoeff(out)

    def scale(self, q) -> GradedCoeff:
        q = Fraction(q)
        if not q:
            return GradedCoeff.zero()
        return GradedCoeff({e: c * q for e, c in self.terms.items()})

    def __pow__(self, n: int) -> GradedCoeff:
        if n < 0:
            raise ValueError("negative power of a coefficient")
        out = GradedCoeff.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- substitution ------------------------------------------------------

    def specialize(self, value_of) -> GradedCoeff:
        """Substitute m_i -> value_of(i) (an exact rational) everywhere."""
        out = Fraction(0)
        for e, q in self.terms.items():
            v = q
            for p, k in enumerate(e):
                if k:
                    v *= Fraction(value_of(p + 1)) ** k
            out += v
        return GradedCoeff.from_rational(out)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, q in self.sorted_terms():
            pieces.append((q < 0, _term_text(e, abs(q))))
        return join_signed(pieces)

    def __repr__(self) -> str:
        return f"GradedCoeff({self})"


def _mon_text(exps: tuple) -> str:
    parts = []
    for p, k in enumerate(exps):
        if k == 0:
            continue
        parts.append(f"m{p + 1}" if k == 1 else f"m{p + 1}^{k}")
    return "*".join(parts)


def _term_text(exps: tuple, mag: Fraction) -> str:
    if not exps:
        return str(mag)
    mon = _mon_text(exps)
    if mag == 1:
        return mon
    return f"{mag}*{mon}"


def join_signed(pieces) -> str:
    """Join (negative, text) pairs canonically: 'a - b + c'."""
    out = []
    for i, (neg, text) in enumerate(pieces):
        if i == 0:
            out.append("-" + text if neg else text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out)
