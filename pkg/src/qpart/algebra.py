"""Linear combinations of diagrams and the projected quasi-partition algebras.

Elements of the partition algebra are dicts diagram -> LaurentPoly.  The
projected algebras QP_k, QP_{k+1/2} and tildeQP_{k+1} are stored in the basis
of conjugates  bar(d) = pi d pi  indexed by their leading diagram d.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping, Optional, Union

from .diagram import (
    AlgebraContext,
    Diagram,
    SizeMismatch,
    compose,
    identity,
    p_gen,
    p_set,
    ptilde_diagram,
    tensor,
)
from .exactnum import ONE, ZERO, LaurentPoly, lp_eval


class HasSingletons(ValueError):
    pass


class NotInSpan(ArithmeticError):
    """A vector or element failed to lie in the claimed span."""


class SemisimplicityWarning(UserWarning):
    pass


def check_eval_point(n, k: int) -> None:
    if n in range(0, 2 * k - 1):
        warnings.warn(f"x = {n} lies in {{0, ..., {2 * k - 2}}}; the algebra may not be semisimple",
                      SemisimplicityWarning, stacklevel=3)


@lru_cache(maxsize=1 << 20)
def _compose(d1: Diagram, d2: Diagram):
    return compose(d1, d2)


def _context_tag(ctx, size):
    if ctx is None:
        return f"partition:{size}"
    return f"{ctx.kind}:{ctx.k}"


def _parse_tag(tag: str):
    kind, k = tag.split(":")
    if kind == "partition":
        return None, int(k)
    ctx = AlgebraContext(kind, int(k))
    return ctx, ctx.size


class AlgebraElement:
    """Finite sum of diagrams of one size with LaurentPoly coefficients."""

    __slots__ = ("size", "terms", "context")

    def __init__(self, size: int, terms: Mapping[Diagram, LaurentPoly] = (), context: Optional[AlgebraContext] = None):
        self.size = size
        self.context = context
        self.terms: Dict[Diagram, LaurentPoly] = {}
        for d, c in dict(terms).items():
            if d.k != size:
                raise SizeMismatch(f"diagram of size {d.k} in element of size {size}")
            c = LaurentPoly.coerce(c)
            if c:
                self.terms[d] = c

    @classmethod
    def from_diagram(cls, d: Diagram, coeff=ONE, context=None):
        return cls(d.k, {d: coeff}, context)

    def _like(self, terms):
        out = AlgebraElement.__new__(AlgebraElement)
        out.size = self.size
        out.context = self.context
        out.terms = terms
        return out

    def coeff(self, d: Diagram) -> LaurentPoly:
        return self.terms.get(d, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __add__(self, other: "AlgebraElement"):
        if other.size != self.size:
            raise SizeMismatch
        acc = dict(self.terms)
        for d, c in other.terms.items():
            s = acc.get(d, ZERO) + c
            if s:
                acc[d] = s
            else:
                acc.pop(d, None)
        return self._like(acc)

    def __neg__(self):
        return self._like({d: -c for d, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = LaurentPoly.coerce(c)
        if not c:
            return self._like({})
        return self._like({d: a * c for d, a in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return pa_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.size == other.size and self.terms == other.terms

    def __hash__(self):
        return hash((self.size, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{d}" for d, c in sorted(self.terms.items()))

    def evaluate(self, n) -> Dict[Diagram, Fraction]:
        k = self.context.k if self.context else self.size
        check_eval_point(n, k)
        out = {}
        for d, c in self.terms.items():
            v = lp_eval(c, n)
            if v:
                out[d] = v
        return out

    def to_json(self):
        return {
            "context": _context_tag(self.context, self.size),
            "terms": [{"diagram": d.to_json(), "coeff": c.to_json()} for d, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, obj):
        ctx, size = _parse_tag(obj["context"])
        terms = {}
        for t in obj["terms"]:
            d = Diagram.from_json(t["diagram"])
            terms[d] = terms.get(d, ZERO) + LaurentPoly.from_json(t["coeff"])
        return cls(size, terms, ctx)


def pa_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of d1 * d2 = x^m d3."""
    if a.size != b.size:
        raise SizeMismatch(f"sizes {a.size} and {b.size}")
    acc: Dict[Diagram, LaurentPoly] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            m, d3 = _compose(d1, d2)
            c = (c1 * c2).shift(m)
            s = acc.get(d3)
            acc[d3] = c if s is None else s + c
    return AlgebraElement(a.size, {d: c for d, c in acc.items() if c}, a.context or b.context)


def unit(size: int, context=None) -> AlgebraElement:
    return AlgebraElement.from_diagram(identity(size), ONE, context)


def pi_projector(k: int, ambient: Optional[AlgebraContext] = None) -> AlgebraElement:
    """sum over J in [k] of (-x)^{-|J|} p_J, padded by a free strand for half/tilde."""
    size = k if ambient is None or ambient.kind == "whole" else k + 1
    terms = {}
    for r in range(k + 1):
        c = LaurentPoly.monomial(-r, (-1) ** r)
        for J in combinations(range(1, k + 1), r):
            terms[p_set(J, size)] = c
    return AlgebraElement(size, terms, ambient)


def ptilde_element(k: int, m: int) -> AlgebraElement:
    """x^{-(k-m)} times the diagram with strands 1..m and singletons elsewhere."""
    return AlgebraElement.from_diagram(ptilde_diagram(k, m), LaurentPoly.monomial(-(k - m)))


@lru_cache(maxsize=None)
def _projector(ctx: AlgebraContext) -> AlgebraElement:
    return pi_projector(ctx.k, ctx)


@lru_cache(maxsize=None)
def _bar_cached(d: Diagram, ctx: AlgebraContext) -> AlgebraElement:
    P = _projector(ctx)
    return pa_mul(pa_mul(P, AlgebraElement.from_diagram(d, ONE, ctx)), P)


def bar(d: Diagram, ctx: AlgebraContext) -> AlgebraElement:
    """pi d pi, computed by direct multiplication."""
    if not ctx.admits(d):
        raise ValueError(f"{d} does not belong to {ctx.label()}")
    return _bar_cached(d, ctx)


def tilde(d: Diagram) -> AlgebraElement:
    """Conjugation of a size k+1 diagram by pi^{(x)k} (x) 1."""
    return bar(d, AlgebraContext("tilde", d.k - 1))


def conjugate(a: AlgebraElement, ctx: AlgebraContext) -> AlgebraElement:
    P = _projector(ctx)
    return pa_mul(pa_mul(P, a), P)


def _block_options(B, k):
    """Splittings of one block with their coefficients."""
    fixed = tuple(v for v in B if abs(v) > k)
    free = [v for v in B if abs(v) <= k]
    opts = []
    mx = LaurentPoly.monomial(-1, -1)  # -1/x
    if fixed:
        for r in range(len(free) + 1):
            for S in combinations(free, r):
                rest = [v for v in free if v not in S]
                opts.append(([fixed + S] + [(v,) for v in rest], mx ** len(rest)))
        return opts
    n = len(B)
    opts.append(([(v,) for v in B], (mx ** (n - 1)) * (n - 1)))
    for r in range(2, n + 1):
        for S in combinations(B, r):
            rest = [v for v in B if v not in S]
            opts.append(([S] + [(v,) for v in rest], mx ** len(rest)))
    return opts


def bar_closed_form(d: Diagram, ctx: AlgebraContext) -> AlgebraElement:
    """Expansion of bar(d) from the product formula for a_{d,d'} over d' <=* d.

    Each block B splits into one large part and l singletons; the factor is
    (|B|-1)/(-x)^(l-1) when every vertex becomes a singleton and 1/(-x)^l
    otherwise.  Vertices outside the projected range never split off.
    """
    if not ctx.is_leader(d):
        raise HasSingletons(f"{d} is not a basis label of {ctx.label()}")
    per_block = [_block_options(B, ctx.k) for B in d.blocks]
    terms: Dict[Diagram, LaurentPoly] = {}
    for choice in product(*per_block):
        blocks = []
        c = ONE
        for bl, a in choice:
            blocks += bl
            c = c * a
        dp = Diagram(d.k, blocks, check=False)
        terms[dp] = terms.get(dp, ZERO) + c
    return AlgebraElement(d.k, terms, ctx)


class BarBasisElement:
    """bar(leader) together with its diagram expansion."""

    __slots__ = ("leader", "context", "expansion")

    def __init__(self, leader: Diagram, context: AlgebraContext):
        if not context.is_leader(leader):
            raise HasSingletons(f"{leader} is not a basis label of {context.label()}")
        self.leader = leader
        self.context = context
        self.expansion = bar(leader, context)

    def as_element(self) -> "QPElement":
        return QPElement(self.context, {self.leader: ONE})

    def __repr__(self):
        return f"bar({self.leader})"

    def to_json(self, with_expansion: bool = False):
        out = {"context": _context_tag(self.context, self.context.size), "leader": self.leader.to_json()}
        if with_expansion:
            out["expansion"] = self.expansion.to_json()
        return out


class QPElement:
    """Element of a projected algebra written in the bar basis: leader -> coefficient."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: AlgebraContext, coeffs: Mapping[Diagram, LaurentPoly] = ()):
        self.context = context
        self.coeffs = {}
        for d, c in dict(coeffs).items():
            if not context.is_leader(d):
                raise HasSingletons(f"{d} is not a basis label of {context.label()}")
            c = LaurentPoly.coerce(c)
            if c:
                self.coeffs[d] = c

    @classmethod
    def unit(cls, ctx):
        return cls(ctx, {identity(ctx.size): ONE})

    def expansion(self) -> AlgebraElement:
        out = AlgebraElement(self.context.size, {}, self.context)
        for d, c in self.coeffs.items():
            out = out + bar(d, self.context).scale(c)
        return out

    def __add__(self, other):
        acc = dict(self.coeffs)
        for d, c in other.coeffs.items():
            acc[d] = acc.get(d, ZERO) + c
        return QPElement(self.context, acc)

    def __neg__(self):
        return QPElement(self.context, {d: -c for d, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        return QPElement(self.context, {d: a * c for d, a in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (QPElement, BarBasisElement)):
            return qp_mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, QPElement):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.context, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*bar{d}" for d, c in sorted(self.coeffs.items()))

    def to_json(self):
        return {
            "context": _context_tag(self.context, self.context.size),
            "terms": [{"leader": d.to_json(), "coeff": c.to_json()} for d, c in sorted(self.coeffs.items())],
        }


def _coarsest_first(ds: Iterable[Diagram]) -> List[Diagram]:
    return sorted(ds, key=lambda d: (len(d.blocks), d.sort_key()))


def re_express(a: AlgebraElement, ctx: AlgebraContext) -> QPElement:
    """Write a diagram expansion in the bar basis by triangular elimination.

    Leaders are processed from coarsest to finest.  Raises NotInSpan when a
    nonzero residual without leaders remains.
    """
    rem = dict(a.terms)
    out: Dict[Diagram, LaurentPoly] = {}
    while True:
        leads = _coarsest_first(d for d in rem if ctx.is_leader(d))
        if not leads:
            break
        for d in leads:
            c = rem.get(d)
            if not c:
                continue
            out[d] = out.get(d, ZERO) + c
            for dp, e in bar(d, ctx).terms.items():
                s = rem.get(dp, ZERO) - c * e
                if s:
                    rem[dp] = s
                else:
                    rem.pop(dp, None)
    if rem:
        raise NotInSpan(f"residual with {len(rem)} terms outside {ctx.label()}")
    return QPElement(ctx, out)


def in_span(a: AlgebraElement, ctx: AlgebraContext) -> bool:
    if a.size != ctx.size or not all(ctx.admits(d) for d in a.terms):
        return False
    try:
        re_express(a, ctx)
    except NotInSpan:
        return False
    return True


def _as_qp(a) -> QPElement:
    if isinstance(a, BarBasisElement):
        return a.as_element()
    return a


def qp_mul(a, b) -> QPElement:
    """Product in the projected algebra, returned in the bar basis."""
    a, b = _as_qp(a), _as_qp(b)
    if a.context != b.context:
        raise SizeMismatch("different algebra contexts")
    prod = pa_mul(a.expansion(), b.expansion())
    return re_express(prod, a.context)


def qp_basis(ctx: AlgebraContext) -> List[BarBasisElement]:
    return [BarBasisElement(d, ctx) for d in ctx.leaders()]


def algebra_dim(ctx: AlgebraContext) -> int:
    return len(ctx.leaders())


def qp_from_diagram(d: Diagram, ctx: AlgebraContext) -> QPElement:
    """bar(d) for any admissible d, written in the bar basis (zero for singletons)."""
    return re_express(bar(d, ctx), ctx)


# tower maps


def embed_half(a: QPElement) -> QPElement:
    """QP_k -> QP_{k+1/2}, bar(d) -> bar(d (x) 1)."""
    if a.context.kind != "whole":
        raise ValueError("expected an element of QP_k")
    k = a.context.k
    one = identity(1)
    return QPElement(AlgebraContext("half", k), {tensor(d, one): c for d, c in a.coeffs.items()})


def half_to_tilde(a: QPElement) -> QPElement:
    """QP_{k+1/2} is a subalgebra of tildeQP_{k+1}; same projector, same labels."""
    if a.context.kind != "half":
        raise ValueError("expected an element of QP_{k+1/2}")
    return QPElement(AlgebraContext("tilde", a.context.k), a.coeffs)


def project_tilde(a: QPElement) -> QPElement:
    """tildeQP_{k+1} -> QP_{k+1}: conjugate by (1 - p_{k+1}/x)."""
    if a.context.kind != "tilde":
        raise ValueError("expected an element of tildeQP_{k+1}")
    K = a.context.k + 1
    q = unit(K) - AlgebraElement.from_diagram(p_gen(K, K), LaurentPoly.monomial(-1))
    e = a.expansion()
    e = AlgebraElement(K, e.terms)
    return re_express(pa_mul(pa_mul(q, e), q), AlgebraContext("whole", K))
