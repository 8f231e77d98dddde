"""Diagrams acting on tensor space V_n^{(x)k}, and brute-force checks that the
projected algebras are the centralizers of S_n (or S_{n-1}).

Basis vectors of V_n^{(x)k} are tuples (i_1..i_k) in [n]^k, ordered
lexicographically.  diagram_matrix puts the top labels on rows and the
bottom labels on columns, so that matrix products follow diagram products:
M(d1) M(d2) = n^m M(d3).
"""

from __future__ import annotations

import os
import warnings
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence

from .algebra import AlgebraElement, SemisimplicityWarning, bar, pa_mul
from .diagram import AlgebraContext, Diagram, b_gen, identity
from .exactnum import lp_eval, X
from .matrix import Echelon, ExactMatrix


class BoundViolated(ValueError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class SizeGuard(ValueError):
    pass


COMMUTANT_CAP = 10 ** 4


def max_dim() -> int:
    return int(os.environ.get("QPART_MAX_DIM", 10 ** 5))


def _index(t: Sequence[int], n: int) -> int:
    i = 0
    for a in t:
        i = i * n + (a - 1)
    return i


def tensor_basis(n: int, k: int):
    return list(product(range(1, n + 1), repeat=k))


def diagram_matrix(d: Diagram, n: int, k: Optional[int] = None) -> ExactMatrix:
    """0/1 matrix: entry (top, bottom) is 1 iff the labels are constant on blocks."""
    k = d.k if k is None else k
    if d.k != k:
        raise ValueError("diagram size does not match k")
    N = n ** k
    data = {}
    for vals in product(range(1, n + 1), repeat=len(d.blocks)):
        top = [0] * k
        bot = [0] * k
        for b, v in zip(d.blocks, vals):
            for u in b:
                if u > 0:
                    top[u - 1] = v
                else:
                    bot[-u - 1] = v
        data[(_index(top, n), _index(bot, n))] = 1
    return ExactMatrix(N, N, data)


def element_matrix(a: AlgebraElement, n: int) -> ExactMatrix:
    N = n ** a.size
    out = ExactMatrix(N, N)
    for d, c in a.terms.items():
        v = lp_eval(c, n)
        if v:
            out = out + diagram_matrix(d, n).scale(v)
    return out


def perm_matrix(sigma: Sequence[int], n: int, k: int) -> ExactMatrix:
    """Diagonal action v_{i1} (x) ... -> v_{sigma(i1)} (x) ...; sigma in one-line notation on [n]."""
    N = n ** k
    data = {}
    for t in product(range(1, n + 1), repeat=k):
        data[(_index([sigma[a - 1] for a in t], n), _index(t, n))] = 1
    return ExactMatrix(N, N, data)


def kron(A: ExactMatrix, B: ExactMatrix) -> ExactMatrix:
    data = {}
    for i, j, v in A.entries():
        for p, q, w in B.entries():
            data[(i * B.rows + p, j * B.cols + q)] = v * w
    return ExactMatrix(A.rows * B.rows, A.cols * B.cols, data)


def pi_matrix(n: int) -> ExactMatrix:
    """I - J/n on V_n."""
    f = Fraction(1, n)
    return ExactMatrix(n, n, {(i, j): (1 if i == j else 0) - f for i in range(n) for j in range(n)})


def standard_projector(n: int, k: int, mode: str = "full") -> ExactMatrix:
    """pi^{(x)k} (mode 'full') or pi^{(x)k} (x) I (mode 'last-strand-identity')."""
    if n < 2:
        raise ValueError("n must be at least 2")
    P = ExactMatrix.identity(1)
    pi = pi_matrix(n)
    for _ in range(k):
        P = kron(P, pi)
    if mode == "last-strand-identity":
        P = kron(P, ExactMatrix.identity(n))
    elif mode != "full":
        raise ValueError(f"unknown mode {mode!r}")
    return P


def last_index_block(n: int, K: int) -> List[int]:
    """Indices of basis tuples of length K whose last entry is n."""
    return [_index(t + (n,), n) for t in product(range(1, n + 1), repeat=K - 1)]


def _apply(g: ExactMatrix, v: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    cols = {}
    for i, j, a in g.entries():
        cols.setdefault(j, []).append((i, a))
    for j, b in v.items():
        for i, a in cols.get(j, ()):
            out[i] = out.get(i, 0) + a * b
    return {i: c for i, c in out.items() if c}


def commutant_dim(generator_matrices: Sequence[ExactMatrix], subspace_projector: ExactMatrix) -> int:
    """dim {X : XP = PX = X, Xg = gX for all generators g}.

    The generators must commute with P.  A basis W of image(P) is read from
    the reduced echelon form of P^T, each generator is restricted to it, and
    the commutant is the exact nullspace of Y -> Y g - g Y.
    """
    P = subspace_projector
    if P.rows > COMMUTANT_CAP:
        raise SizeGuard(f"{P.rows} basis states exceed the commutant cap {COMMUTANT_CAP}")
    piv, W = P.transpose().rref()
    r = len(piv)
    restricted = []
    for g in generator_matrices:
        cols = {}
        for i, j, a in g.entries():
            cols.setdefault(j, []).append((i, a))
        gr: Dict[int, Dict[int, Fraction]] = {}
        for j, w in enumerate(W):
            gw: Dict[int, Fraction] = {}
            for c, b in w.items():
                for i, a in cols.get(c, ()):
                    gw[i] = gw.get(i, 0) + a * b
            gw = {i: v for i, v in gw.items() if v}
            # express gw in the basis W via its pivot coordinates
            coords = {i: gw.get(p, Fraction(0)) for i, p in enumerate(piv)}
            recon: Dict[int, Fraction] = {}
            for i, c in coords.items():
                if c:
                    for q, v in W[i].items():
                        recon[q] = recon.get(q, 0) + c * v
            if {q: v for q, v in recon.items() if v} != gw:
                raise ValueError("generator does not preserve the subspace")
            for i, c in coords.items():
                if c:
                    gr.setdefault(i, {})[j] = c
        restricted.append(gr)
    # unknown Y[a][b] has index a*r + b
    E = Echelon()
    for gr in restricted:
        gcols: Dict[int, Dict[int, Fraction]] = {}
        for i, row in gr.items():
            for j, v in row.items():
                gcols.setdefault(j, {})[i] = v
        for i in range(r):
            for j in range(r):
                eq: Dict[int, Fraction] = {}
                for l, v in gcols.get(j, {}).items():  # (Y g)[i][j]
                    eq[i * r + l] = eq.get(i * r + l, 0) + v
                for l, v in gr.get(i, {}).items():  # (g Y)[i][j]
                    eq[l * r + j] = eq.get(l * r + j, 0) - v
                eq = {a: v for a, v in eq.items() if v}
                if eq:
                    E.add(eq)
    return r * r - E.rank


def sn_generators(n: int) -> List[List[int]]:
    """Adjacent transposition and long cycle of S_n in one-line notation."""
    if n < 2:
        return []
    t = [2, 1] + list(range(3, n + 1))
    c = list(range(2, n + 1)) + [1]
    return [t, c]


def theorem_bound(kind: str, k: int) -> int:
    return {"whole": 2 * k, "half": 2 * k + 1, "tilde": 2 * k + 2}[kind]


@dataclass
class CentralizerReport:
    kind: str
    k: int
    n: int
    algebra_dim: int
    image_rank: int
    commutant_dim: int
    theorem_range: bool
    commutes: bool
    passed: bool

    def to_json(self):
        out = asdict(self)
        out["pass"] = out.pop("passed")
        return out


def _projected_images(ctx: AlgebraContext, n: int):
    K = ctx.size
    idx = last_index_block(n, K) if ctx.kind == "half" else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SemisimplicityWarning)
        for d in ctx.leaders():
            M = element_matrix(bar(d, ctx), n)
            yield M.restrict(idx) if idx is not None else M


def setting(kind: str, k: int, n: int):
    """Generators and projector on the space where the algebra acts."""
    if kind == "whole":
        return [perm_matrix(g, n, k) for g in sn_generators(n)], standard_projector(n, k, "full")
    if kind == "half":
        gens = [perm_matrix(g + [n], n, k) for g in sn_generators(n - 1)]
        return gens, standard_projector(n, k, "full")
    if kind == "tilde":
        return [perm_matrix(g, n, k + 1) for g in sn_generators(n)], standard_projector(n, k, "last-strand-identity")
    raise ValueError(kind)


def verify_centralizer(kind: str, k: int, n: int, strict: bool = False) -> CentralizerReport:
    """Compare algebra dimension, rank of the image and commutant dimension."""
    ctx = AlgebraContext(kind, k)
    space = n ** (k if kind in ("whole", "half") else k + 1)
    if space > max_dim():
        raise SizeGuard(f"n^k = {space} exceeds QPART_MAX_DIM = {max_dim()}")
    gens, P = setting(kind, k, n)
    E = Echelon()
    commutes = True
    dim = 0
    for M in _projected_images(ctx, n):
        dim += 1
        E.add(M.flatten())
        for g in gens:
            if g @ M != M @ g:
                commutes = False
    cd = commutant_dim(gens, P)
    in_range = n >= theorem_bound(kind, k)
    rep = CentralizerReport(kind, k, n, dim, E.rank, cd, in_range, commutes,
                            commutes and dim == E.rank == cd)
    if strict and not in_range:
        raise BoundViolated(f"n = {n} is below the bound {theorem_bound(kind, k)}", rep)
    return rep


def half_isomorphism_check(n: Optional[int] = None) -> Dict[str, bool]:
    """QP_{1+1/2}(x) against P_1(x-1) via 1 -> pi and p -> x bar(b_1).

    Checks the relations symbolically and, when n is given, on matrices at x = n.
    """
    ctx = AlgebraContext("half", 1)
    one = bar(identity(2), ctx)
    phi_p = bar(b_gen(1, 2), ctx).scale(X)
    out = {
        "unit_idempotent": pa_mul(one, one) == one,
        "unit_left": pa_mul(one, phi_p) == phi_p,
        "unit_right": pa_mul(phi_p, one) == phi_p,
        "p_squared": pa_mul(phi_p, phi_p) == phi_p.scale(X - 1),
    }
    if n is not None:
        idx = last_index_block(n, 2)
        M1 = element_matrix(one, n).restrict(idx)
        Mp = element_matrix(phi_p, n).restrict(idx)
        E = Echelon()
        E.add(M1.flatten())
        E.add(Mp.flatten())
        out["matrix_p_squared"] = Mp @ Mp == Mp.scale(n - 1)
        out["matrix_unit"] = M1 @ M1 == M1 and M1 @ Mp == Mp
        out["independent"] = E.rank == 2
    return out
