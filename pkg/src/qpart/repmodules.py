"""Standard modules of partition and half-partition algebras, and the simple
modules of QP_k obtained by projecting with pi^{(x)k}.

A basis vector of a standard module is a pair (d, T) with d a standard
diagram and T a standard tableau; vectors are dicts pair -> LaurentPoly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .algebra import AlgebraElement, NotInSpan, QPElement, check_eval_point, pi_projector
from .diagram import (
    Diagram,
    NotAVkmDiagram,
    SizeMismatch,
    compose,
    factor_half_standard,
    factor_standard,
    half_standard_diagrams,
    propagating_number,
    standard_diagrams,
)
from .exactnum import ONE, ZERO, LaurentPoly, lp_eval
from .tableaux import Partition, Tableau, specht_act, standard_tableaux

Pair = Tuple[Diagram, Tableau]


class NuTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ModuleContext:
    """Delta_k(nu) (half=False) or Delta_{k+1/2}(nu) (half=True)."""

    k: int
    nu: Partition
    half: bool = False

    @property
    def m(self) -> int:
        return sum(self.nu)

    @property
    def size(self) -> int:
        return self.k + 1 if self.half else self.k


class ModuleVector:
    __slots__ = ("context", "terms")

    def __init__(self, context: ModuleContext, terms=()):
        self.context = context
        self.terms: Dict[Pair, LaurentPoly] = {}
        for p, c in dict(terms).items():
            c = LaurentPoly.coerce(c)
            if c:
                self.terms[p] = c

    def __add__(self, other):
        acc = dict(self.terms)
        for p, c in other.terms.items():
            acc[p] = acc.get(p, ZERO) + c
        return ModuleVector(self.context, acc)

    def __neg__(self):
        return ModuleVector(self.context, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = LaurentPoly.coerce(c)
        return ModuleVector(self.context, {p: a * c for p, a in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.context == other.context and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{d} x {T}]" for (d, T), c in self.terms.items())

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda pc: (pc[0][0].sort_key(), pc[0][1]))
        return [{"diagram": d.to_json(), "tableau": [list(r) for r in T], "coeff": c.to_json()}
                for (d, T), c in items]


def delta_basis(k: int, nu: Partition, half: bool = False) -> List[Pair]:
    """(standard diagram, standard tableau) pairs indexing Delta_k(nu) or Delta_{k+1/2}(nu)."""
    nu = tuple(nu)
    m = sum(nu)
    if m > k:
        raise NuTooLarge(f"|nu| = {m} exceeds k = {k}")
    ds = half_standard_diagrams(k, m) if half else standard_diagrams(k, m)
    ds = sorted(ds)
    return [(d, T) for d in ds for T in standard_tableaux(nu)]


def _inverse(sigma: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def act_diagram(d: Diagram, pair: Pair, ctx: ModuleContext) -> Dict[Pair, LaurentPoly]:
    """d . (d' (x) T): zero if propagation drops, else x^a d1 (x) tau.T."""
    dp, T = pair
    if d.k != ctx.size:
        raise SizeMismatch(f"diagram of size {d.k} on a module of size {ctx.size}")
    a, prod = compose(d, dp)
    need = ctx.m + (1 if ctx.half else 0)
    if propagating_number(prod) < need:
        return {}
    try:
        d1, tau = (factor_half_standard if ctx.half else factor_standard)(prod, ctx.m)
    except NotAVkmDiagram:
        return {}
    # the diagram with blocks {i, -tau(i)} acts on S^nu as the permutation tau^{-1}
    xa = LaurentPoly.monomial(a)
    return {(d1, u): xa * c for u, c in specht_act(_inverse(tau), T).items()}


def act(a, v, ctx: ModuleContext = None) -> ModuleVector:
    """Act by a diagram or AlgebraElement on a basis pair or ModuleVector."""
    if isinstance(v, ModuleVector):
        ctx = v.context
        vec = v.terms
    else:
        vec = {v: ONE}
    if isinstance(a, Diagram):
        a = AlgebraElement.from_diagram(a)
    acc: Dict[Pair, LaurentPoly] = {}
    for d, c in a.terms.items():
        for p, e in vec.items():
            for q, f in act_diagram(d, p, ctx).items():
                acc[q] = acc.get(q, ZERO) + c * e * f
    return ModuleVector(ctx, acc)


def action_matrix(a, ctx: ModuleContext, basis: List[Pair] = None) -> List[List[LaurentPoly]]:
    """Column j holds the coordinates of a . basis[j]."""
    basis = basis if basis is not None else delta_basis(ctx.k, ctx.nu, ctx.half)
    index = {p: i for i, p in enumerate(basis)}
    M = [[ZERO] * len(basis) for _ in basis]
    for j, p in enumerate(basis):
        for q, c in act(a, p, ctx).terms.items():
            M[index[q]][j] = c
    return M


def eval_matrix(M, n) -> List[List[Fraction]]:
    return [[lp_eval(c, n) for c in row] for row in M]


def mat_mul(A, B):
    if not A:
        return []
    zero = A[0][0] * 0 if A[0] else 0
    return [[sum((A[i][l] * B[l][j] for l in range(len(B))), zero) for j in range(len(B[0]))]
            for i in range(len(A))]


# simple modules of QP_k


def _top_singletons(d: Diagram) -> bool:
    return any(len(b) == 1 and b[0] > 0 for b in d.blocks)


@dataclass
class SimpleModuleBasis:
    """Vectors pi^{(x)k} (d (x) T) for the d without top singletons."""

    k: int
    nu: Partition
    leaders: List[Pair] = field(default_factory=list)
    vectors: List[ModuleVector] = field(default_factory=list)

    @property
    def context(self) -> ModuleContext:
        return ModuleContext(self.k, tuple(self.nu))

    def __len__(self):
        return len(self.vectors)

    def coordinates(self, w: ModuleVector) -> List[LaurentPoly]:
        """Coefficients of w in this basis by leader read-off; NotInSpan if w is outside."""
        index = {p: i for i, p in enumerate(self.leaders)}
        coords = [ZERO] * len(self.leaders)
        rem = dict(w.terms)
        for p in list(rem):
            if p in index and rem.get(p):
                c = rem[p]
                coords[index[p]] = coords[index[p]] + c
                for q, e in self.vectors[index[p]].terms.items():
                    s = rem.get(q, ZERO) - c * e
                    if s:
                        rem[q] = s
                    else:
                        rem.pop(q, None)
        if rem:
            raise NotInSpan(f"vector leaves QP_{self.k}^{self.nu}")
        return coords


def qp_simple_basis(k: int, nu: Partition) -> SimpleModuleBasis:
    ctx = ModuleContext(k, tuple(nu))
    P = pi_projector(k)
    sb = SimpleModuleBasis(k, tuple(nu))
    for p in delta_basis(k, nu):
        if _top_singletons(p[0]):
            continue
        sb.leaders.append(p)
        sb.vectors.append(act(P, p, ctx))
    return sb


def qp_act(b, v: ModuleVector) -> ModuleVector:
    """Act by a QP element (or bar-basis element) on a vector of a simple module."""
    if not isinstance(b, QPElement):
        b = b.as_element()
    return act(b.expansion(), v)


def simple_action_matrix(b, sb: SimpleModuleBasis) -> List[List[LaurentPoly]]:
    n = len(sb)
    M = [[ZERO] * n for _ in range(n)]
    for j, v in enumerate(sb.vectors):
        for i, c in enumerate(sb.coordinates(qp_act(b, v))):
            M[i][j] = c
    return M


def simple_dim(k: int, nu: Partition) -> int:
    return len(qp_simple_basis(k, nu)) if sum(nu) <= k else 0


def evaluate_checked(M, n, k):
    check_eval_point(n, k)
    return eval_matrix(M, n)
