"""Moment graphs: fixed points, character-labelled curves, and piecewise classes.

A graph stores one character per edge, the tangent character at the first
vertex (the second sees its negative); every vertex must have the same
valence with pairwise non-proportional characters, matching smooth varieties
with isolated fixed points and finitely many invariant curves.

A piecewise class assigns a series to each fixed point; it is an honest
equivariant class when every edge difference is divisible by the Chern class
of the edge character.  Integration runs the fixed-point residue sum: add
the fractions alpha_v / euler_v by cross-multiplication, clear the final
denominator by exact division, and push down to the Lazard ring.
"""

from __future__ import annotations

import itertools

from torcob.coeff import GradedCoeff
from torcob.errors import (
    Ambiguous,
    GraphInvalid,
    NoSolution,
    NotAClass,
    NotDivisible,
    TruncationInsufficient,
)
from torcob.linalg import INCONSISTENT, UNDERDETERMINED, solve
from torcob.series import TruncSeries
from torcob.torus import TorusContext, content, proportional


class GKMGraph:
    """rank, common valence dim, vertex ids, and signed edges."""

    def __init__(self, rank, dim, vertices, edges):
        self.rank = rank
        self.dim = dim
        self.vertices = list(vertices)
        self.edges = [(v, w, tuple(chi)) for v, w, chi in edges]
        self._incident = {v: [] for v in self.vertices}
        for v, w, chi in self.edges:
            self._incident[v].append((w, chi))
            self._incident[w].append((v, tuple(-x for x in chi)))

    def incident(self, v):
        """(other vertex, tangent character at v) pairs."""
        return self._incident[v]

    def validate(self):
        """List of violation messages; empty means the graph is valid."""
        problems = []
        for v, w, chi in self.edges:
            if v not in self._incident or w not in self._incident:
                problems.append(f"edge ({v},{w}) references an unknown vertex")
            if content(chi) == 0:
                problems.append(f"edge ({v},{w}) has the zero character")
        for v in self.vertices:
            inc = self._incident[v]
            if len(inc) != self.dim:
                problems.append(f"vertex {v} has valence {len(inc)}, expected {self.dim}")
            for (_, chi_a), (_, chi_b) in itertools.combinations(inc, 2):
                if content(chi_a) and content(chi_b) and proportional(chi_a, chi_b):
                    problems.append(
                        f"vertex {v} has proportional edge characters {chi_a} and {chi_b}"
                    )
        return problems

    def require_valid(self):
        problems = self.validate()
        if problems:
            raise GraphInvalid("; ".join(problems))

    def to_json(self):
        return {
            "rank": self.rank,
            "dim": self.dim,
            "vertices": list(self.vertices),
            "edges": [{"v": v, "w": w, "char": list(chi)} for v, w, chi in self.edges],
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            int(obj["rank"]),
            int(obj["dim"]),
            [str(v) for v in obj["vertices"]],
            [(str(e["v"]), str(e["w"]), tuple(int(x) for x in e["char"])) for e in obj["edges"]],
        )


class PiecewiseClass:
    """Tuple of series indexed by the fixed points, sharing variables."""

    def __init__(self, values):
        self.values = dict(values)
        its = list(self.values.values())
        for s in its[1:]:
            if s.vars != its[0].vars:
                raise ValueError("components disagree on variables")

    @property
    def guarantee(self):
        return min(s.guarantee for s in self.values.values())

    def restrict(self, v) -> TruncSeries:
        return self.values[v]

    def __add__(self, other):
        return PiecewiseClass({v: s + other.values[v] for v, s in self.values.items()})

    def __sub__(self, other):
        return PiecewiseClass({v: s - other.values[v] for v, s in self.values.items()})

    def __mul__(self, other):
        return PiecewiseClass({v: s * other.values[v] for v, s in self.values.items()})

    def mul_coeff(self, c):
        return PiecewiseClass({v: s.mul_coeff(c) for v, s in self.values.items()})

    def mul_series(self, f):
        return PiecewiseClass({v: s * f for v, s in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, PiecewiseClass):
            return NotImplemented
        return self.values == other.values

    def is_zero(self):
        return all(s.is_zero() for s in self.values.values())

    def homogeneous_components(self):
        degs = set()
        for s in self.values.values():
            degs.update(s.homogeneous_components())
        out = {}
        for j in sorted(degs):
            out[j] = PiecewiseClass(
                {
                    v: s.homogeneous_components().get(j, TruncSeries.zero(s.vars, s.bound, s.guarantee))
                    for v, s in self.values.items()
                }
            )
        return out


def constant_class(ctx: TorusContext, g: GKMGraph, value) -> PiecewiseClass:
    return PiecewiseClass({v: ctx.constant(value) for v in g.vertices})


def is_class(ctx: TorusContext, g: GKMGraph, alpha: PiecewiseClass, use_linear_form=False) -> bool:
    """Edge congruence test: alpha_v - alpha_w divisible by c(chi) throughout."""
    if alpha.guarantee < 1:
        raise TruncationInsufficient("guarantee below 1 cannot see any congruence")
    for v, w, chi in g.edges:
        diff = alpha.values[v] - alpha.values[w]
        if diff.is_zero():
            continue
        if not ctx.chern_divides(diff, chi, 1, use_linear_form=use_linear_form):
            return False
    return True


def euler_class(ctx: TorusContext, g: GKMGraph, v) -> TruncSeries:
    """Product of the tangent Chern classes at v (top Chern class of T_v X)."""
    out = ctx.one()
    for _, chi in g.incident(v):
        out = out * ctx.character_series(chi)
    return out


def pushforward_point(ctx: TorusContext, g: GKMGraph, v, s: TruncSeries) -> PiecewiseClass:
    """Class supported at v with value s times the Euler class there."""
    values = {w: ctx.zero() for w in g.vertices}
    values[v] = s * euler_class(ctx, g, v)
    return PiecewiseClass(values)


def required_guarantee(g: GKMGraph, alpha: PiecewiseClass) -> int:
    """Up-front truncation demand: total Euler degree plus the class degree."""
    margin = 0
    for s in alpha.values.values():
        j = s.homogeneous_degree()
        if j is None:
            j = s.max_degree() or 0
        margin = max(margin, j)
    return len(g.vertices) * g.dim + max(0, margin)


def integrate(ctx: TorusContext, g: GKMGraph, alpha: PiecewiseClass, check_class=True) -> GradedCoeff:
    """Fixed-point residue sum pushed down to the Lazard ring.

    Adds the localized fractions pairwise, clears the denominator by exact
    division, and applies the forgetful augmentation t -> 0.  Exact over Q;
    the combination order cannot affect the result.
    """
    need = required_guarantee(g, alpha)
    if alpha.guarantee < need:
        raise TruncationInsufficient(
            f"guarantee {alpha.guarantee} below required {need}"
        )
    if check_class and not is_class(ctx, g, alpha):
        raise NotAClass("piecewise values violate an edge congruence")
    num = None
    den = None
    for v in g.vertices:
        ev = euler_class(ctx, g, v)
        av = alpha.values[v]
        if num is None:
            num, den = av, ev
        else:
            num = num * ev + av * den
            den = den * ev
    try:
        quotient = num.divide_exact(den)
    except NotDivisible as exc:
        raise NotDivisible(
            "residue sum not divisible; class condition or guarantee violated"
        ) from exc
    return quotient.constant_term()


def basis_expand(ctx: TorusContext, g: GKMGraph, basis, alpha: PiecewiseClass):
    """Coefficients c_k in S(T) with sum c_k * basis_k = alpha through the guarantee.

    Fails with NoSolution when alpha is outside the span and with Ambiguous
    when the basis is not free through the truncation.  Uniqueness is what
    the free-module structure theorems predict for honest bases.
    """
    if len(basis) != len(g.vertices):
        raise ValueError("basis size must equal the number of fixed points")
    guar = min([alpha.guarantee] + [b.guarantee for b in basis])
    supports = []
    for b in basis:
        supp = [v for v, s in b.values.items() if not s.is_zero()]
        supports.append(supp)
    if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(basis):
        out = []
        for b, supp in zip(basis, supports):
            v = supp[0]
            try:
                out.append(alpha.values[v].divide_exact(b.values[v]))
            except NotDivisible as exc:
                raise NoSolution(f"component at {v} is not a multiple of the basis value") from exc
        return out
    return _expand_linear(ctx, g, basis, alpha, guar)


def _expand_linear(ctx, g, basis, alpha, guar):
    lows = []
    for b in basis:
        degs = [s.lowest_degree() for s in b.values.values() if not s.is_zero()]
        if not degs:
            raise Ambiguous("zero basis element")
        lows.append(min(degs))
    if ctx.fgl.is_specialized:
        jobs = [(None, alpha, [None] * len(basis))]
    else:
        comps = alpha.homogeneous_components()
        bdegs = []
        for b in basis:
            degs = {s.homogeneous_degree() for s in b.values.values() if not s.is_zero()}
            if len(degs) != 1:
                raise ValueError("basis element is not homogeneous")
            bdegs.append(degs.pop())
        if not comps:
            comps = {0: constant_class(ctx, g, 0)}
        jobs = [(j, comp, bdegs) for j, comp in comps.items()]
    totals = [ctx.zero().truncated(min(guar, ctx.D)) for _ in basis]
    for j, comp, bdegs in jobs:
        sols = _expand_component(ctx, g, basis, comp, guar, lows, j, bdegs)
        totals = [t + s for t, s in zip(totals, sols)]
    return totals


def _m_monomials(weight, max_index):
    """All m-exponent tuples of the given weight with parts <= max_index."""
    if weight == 0:
        return [()]
    out = []

    def rec(remaining, index, acc):
        if remaining == 0:
            exps = [0] * max_index
            for i, e in acc:
                exps[i - 1] = e
            n = len(exps)
            while n and exps[n - 1] == 0:
                n -= 1
            out.append(tuple(exps[:n]))
            return
        if index == 0:
            return
        for e in range(remaining // index, -1, -1):
            rec(remaining - e * index, index - 1, acc + [(index, e)] if e else acc)

    rec(weight, max_index, [])
    return sorted(out)


def _t_monomials(rank, max_deg):
    out = []
    for deg in range(max_deg + 1):
        for c in itertools.combinations_with_replacement(range(rank), deg):
            exps = [0] * rank
            for i in c:
                exps[i] += 1
            out.append(tuple(exps))
    return out


def _expand_component(ctx, g, basis, alpha, guar, lows, j, bdegs):
    rank = ctx.rank
    dc = ctx.fgl.Dc
    specialized = ctx.fgl.is_specialized
    slots = []
    for k, b in enumerate(basis):
        cap = guar - lows[k]
        if cap < 0:
            continue
        for tmon in _t_monomials(rank, cap):
            e = sum(tmon)
            if specialized:
                slots.append((k, tmon, ()))
            else:
                w = e + bdegs[k] - j
                if w < 0:
                    continue
                for mmon in _m_monomials(w, dc):
                    slots.append((k, tmon, mmon))
    eq_index = {}
    columns = []
    from torcob.coeff import madd

    for k, tmon, mmon in slots:
        col = {}
        b = basis[k]
        sd = sum(tmon)
        for v, s in b.values.items():
            for texp, c in s.coeffs.items():
                if sd + sum(texp) > guar:
                    continue
                tkey = tuple(x + y for x, y in zip(tmon, texp))
                for mexp, q in c.terms.items():
                    key = (v, tkey, madd(mmon, mexp))
                    row = eq_index.setdefault(key, len(eq_index))
                    col[row] = col.get(row, 0) + q
        columns.append(col)
    rhs_map = {}
    for v in g.vertices:
        s = alpha.values[v]
        for texp, c in s.coeffs.items():
            if sum(texp) > guar:
                continue
            for mexp, q in c.terms.items():
                key = (v, texp, mexp)
                row = eq_index.setdefault(key, len(eq_index))
                rhs_map[row] = q
    nrows = len(eq_index)
    rows = [{} for _ in range(nrows)]
    for ci, col in enumerate(columns):
        for ri, q in col.items():
            rows[ri][ci] = q
    rhs = [rhs_map.get(i, 0) for i in range(nrows)]
    status, x = solve(rows, rhs, len(slots))
    if status == INCONSISTENT:
        raise NoSolution("class is not in the span of the basis")
    if status == UNDERDETERMINED:
        raise Ambiguous("basis is not free through the truncation")
    out = []
    for k in range(len(basis)):
        coeffs = {}
        for ci, (kk, tmon, mmon) in enumerate(slots):
            if kk != k or not x[ci]:
                continue
            gc = coeffs.setdefault(tmon, {})
            gc[mmon] = gc.get(mmon, 0) + x[ci]
        series = TruncSeries(
            ctx.vars,
            {t: GradedCoeff({m: q for m, q in mm.items() if q}) for t, mm in coeffs.items()},
            ctx.D,
            min(guar, ctx.D),
        )
        out.append(series)
    return out


def tensor_with_L(ctx: TorusContext, g: GKMGraph, basis, alpha: PiecewiseClass):
    """Augmented expansion coordinates: the non-equivariant class in the basis."""
    return [ctx.augment(c) for c in basis_expand(ctx, g, basis, alpha)]


# -- generated graphs -----------------------------------------------------------


def p1_graph(chi) -> GKMGraph:
    """The projective line with a weight-chi torus action."""
    chi = tuple(chi)
    if content(chi) == 0:
        raise ValueError("the action character must be nonzero")
    return GKMGraph(len(chi), 1, ["0", "inf"], [("0", "inf", chi)])


def pn_graph(n: int) -> GKMGraph:
    """Projective n-space for the rank-n torus; vertices 0..n, e_0 = 0."""
    if n < 1:
        raise ValueError("need n >= 1")

    def e(i):
        return tuple(1 if k == i - 1 else 0 for k in range(n)) if i else (0,) * n

    vertices = [str(i) for i in range(n + 1)]
    edges = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            chi = tuple(a - b for a, b in zip(e(i), e(j)))
            edges.append((str(i), str(j), chi))
    return GKMGraph(n, n, vertices, edges)


def flag_graph(n: int) -> GKMGraph:
    """Complete flag variety of GL_n: vertices are permutations of 1..n."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > 9:
        raise ValueError("vertex ids use single digits; n <= 9")
    perms = sorted(itertools.permutations(range(1, n + 1)))
    ident = {w: "".join(str(x) for x in w) for w in perms}
    edges = []
    for w in perms:
        for i in range(n):
            for j in range(i + 1, n):
                wp = list(w)
                wp[i], wp[j] = wp[j], wp[i]
                wp = tuple(wp)
                if ident[w] < ident[wp]:
                    chi = [0] * n
                    chi[w[i] - 1] += 1
                    chi[w[j] - 1] -= 1
                    edges.append((ident[w], ident[wp], tuple(chi)))
    return GKMGraph(n, n * (n - 1) // 2, [ident[w] for w in perms], edges)


def pn_hyperplane(ctx: TorusContext, g: GKMGraph) -> PiecewiseClass:
    """Tautological hyperplane class on pn: restriction c(e_v) at vertex v."""
    n = g.rank
    values = {}
    for v in g.vertices:
        i = int(v)
        chi = tuple(1 if k == i - 1 else 0 for k in range(n)) if i else (0,) * n
        values[v] = ctx.character_series(chi)
    return PiecewiseClass(values)


def flag_tautological(ctx: TorusContext, g: GKMGraph, k: int) -> PiecewiseClass:
    """The class x_k with restriction t_{w(k)} at the flag w (k is 1-based)."""
    values = {}
    for v in g.vertices:
        w = [int(c) for c in v]
        values[v] = ctx.var(w[k - 1] - 1)
    return PiecewiseClass(values)


def generate(kind: str, *, char=None, n=None) -> GKMGraph:
    """Dispatch for the CLI: p1(char), pn(n), flag(n)."""
    if kind == "p1":
        if char is None:
            raise ValueError("p1 needs a character")
        return p1_graph(char)
    if kind == "pn":
        if n is None:
            raise ValueError("pn needs n")
        return pn_graph(n)
    if kind == "flag":
        if n is None:
            raise ValueError("flag needs n")
        return flag_graph(n)
    raise ValueError(f"unsupported graph kind {kind!r}")


def distinguished_classes(ctx: TorusContext, g: GKMGraph, kind: str) -> dict:
    """Named tautological classes shipped with a generated graph."""
    out = {}
    if kind == "pn":
        out["h"] = pn_hyperplane(ctx, g)
    elif kind == "flag":
        for k in range(1, g.rank + 1):
            out[f"x{k}"] = flag_tautological(ctx, g, k)
    elif kind == "p1":
        out["point0"] = pushforward_point(ctx, g, "0", ctx.one())
        out["pointinf"] = pushforward_point(ctx, g, "inf", ctx.one())
    return out


def class_to_json(g: GKMGraph, alpha: PiecewiseClass) -> dict:
    """Class JSON: truncation plus canonical series text per vertex."""
    return {
        "truncation": alpha.guarantee,
        "values": {v: str(alpha.restrict(v)) for v in g.vertices},
    }
