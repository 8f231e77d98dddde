"""Sparse exact matrices over the rationals.

Rank and nullspace use fraction-free integer elimination: each row is scaled
to a primitive integer vector and rows are combined as p*r - a*s, then
divided by the content, so no rational arithmetic happens inside the loop.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

Row = Dict[int, int]


class ExactMatrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Mapping[Tuple[int, int], object] = ()):
        self.rows = rows
        self.cols = cols
        self.data: Dict[int, Dict[int, Fraction]] = {}
        for (i, j), v in dict(data).items():
            v = Fraction(v)
            if v:
                self.data.setdefault(i, {})[j] = v

    @classmethod
    def from_rows(cls, rows_: Iterable[Mapping[int, object]], cols: int) -> "ExactMatrix":
        M = cls(0, cols)
        for i, r in enumerate(rows_):
            rr = {j: Fraction(v) for j, v in r.items() if v}
            if rr:
                M.data[i] = rr
            M.rows = i + 1
        return M

    @classmethod
    def from_dense(cls, A: Sequence[Sequence]) -> "ExactMatrix":
        r = len(A)
        c = len(A[0]) if r else 0
        return cls(r, c, {(i, j): v for i, row in enumerate(A) for j, v in enumerate(row) if v})

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def __getitem__(self, ij):
        i, j = ij
        return self.data.get(i, {}).get(j, Fraction(0))

    def entries(self):
        for i, r in self.data.items():
            for j, v in r.items():
                yield i, j, v

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    def to_dense(self) -> List[List[Fraction]]:
        A = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, j, v in self.entries():
            A[i][j] = v
        return A

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset((i, j, v) for i, j, v in self.entries())))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def _new(self, rows, cols, data):
        M = ExactMatrix(rows, cols)
        M.data = {i: r for i, r in data.items() if r}
        return M

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = {i: dict(r) for i, r in self.data.items()}
        for i, j, v in other.entries():
            r = out.setdefault(i, {})
            s = r.get(j, 0) + v
            if s:
                r[j] = s
            else:
                r.pop(j, None)
        return self._new(self.rows, self.cols, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return ExactMatrix(self.rows, self.cols)
        return self._new(self.rows, self.cols, {i: {j: v * c for j, v in r.items()} for i, r in self.data.items()})

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out: Dict[int, Dict[int, Fraction]] = {}
        for i, r in self.data.items():
            acc: Dict[int, Fraction] = {}
            for l, a in r.items():
                orow = other.data.get(l)
                if not orow:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                out[i] = acc
        return self._new(self.rows, other.cols, out)

    def transpose(self) -> "ExactMatrix":
        out: Dict[int, Dict[int, Fraction]] = {}
        for i, j, v in self.entries():
            out.setdefault(j, {})[i] = v
        return self._new(self.cols, self.rows, out)

    @property
    def T(self):
        return self.transpose()

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def restrict(self, idx: Sequence[int]) -> "ExactMatrix":
        """Principal submatrix on the given indices (in order)."""
        pos = {a: t for t, a in enumerate(idx)}
        out: Dict[int, Dict[int, Fraction]] = {}
        for a in idx:
            r = self.data.get(a)
            if not r:
                continue
            rr = {pos[j]: v for j, v in r.items() if j in pos}
            if rr:
                out[pos[a]] = rr
        return self._new(len(idx), len(idx), out)

    def flatten(self) -> Dict[int, Fraction]:
        return {i * self.cols + j: v for i, j, v in self.entries()}

    def rank(self) -> int:
        return rank_of_rows(r for _, r in sorted(self.data.items()))

    def rref(self) -> Tuple[List[int], List[Dict[int, Fraction]]]:
        return rref_rows([r for _, r in sorted(self.data.items())])

    def nullspace(self) -> List[Dict[int, Fraction]]:
        return nullspace_rows([r for _, r in sorted(self.data.items())], self.cols)

    def is_idempotent(self) -> bool:
        return self @ self == self


def _primitive(row: Mapping[int, object]) -> Row:
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    r = {j: int(Fraction(v) * den) for j, v in row.items() if v}
    g = 0
    for v in r.values():
        g = gcd(g, v)
    if g > 1:
        r = {j: v // g for j, v in r.items()}
    return r


def _combine(p: int, r: Row, a: int, s: Row) -> Row:
    """p*r - a*s, made primitive."""
    out = {j: p * v for j, v in r.items()}
    for j, v in s.items():
        w = out.get(j, 0) - a * v
        if w:
            out[j] = w
        else:
            out.pop(j, None)
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


class Echelon:
    """Incremental fraction-free row echelon form; pivot column -> primitive row."""

    def __init__(self):
        self.pivots: Dict[int, Row] = {}

    def reduce(self, row: Mapping[int, object]) -> Row:
        r = _primitive(row)
        while r:
            c = min(r)
            prow = self.pivots.get(c)
            if prow is None:
                return r
            r = _combine(prow[c], r, r[c], prow)
        return r

    def add(self, row: Mapping[int, object]) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[min(r)] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank_of_rows(rows: Iterable[Mapping[int, object]]) -> int:
    E = Echelon()
    for r in rows:
        E.add(r)
    return E.rank


def rref_rows(rows: Sequence[Mapping[int, object]]) -> Tuple[List[int], List[Dict[int, Fraction]]]:
    """Reduced row echelon form: pivot columns and rows with a 1 in each pivot."""
    E = Echelon()
    for r in rows:
        E.add(r)
    piv = sorted(E.pivots)
    red: Dict[int, Dict[int, Fraction]] = {}
    for c in reversed(piv):
        r = {j: Fraction(v) for j, v in E.pivots[c].items()}
        lead = r[c]
        r = {j: v / lead for j, v in r.items()}
        for c2 in list(r):
            if c2 != c and c2 in red:
                f = r[c2]
                for j, v in red[c2].items():
                    w = r.get(j, 0) - f * v
                    if w:
                        r[j] = w
                    else:
                        r.pop(j, None)
        red[c] = r
    return piv, [red[c] for c in piv]


def nullspace_rows(rows: Sequence[Mapping[int, object]], ncols: int) -> List[Dict[int, Fraction]]:
    piv, red = rref_rows(rows)
    pset = set(piv)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = {f: Fraction(1)}
        for c, r in zip(piv, red):
            if f in r:
                v[c] = -r[f]
        basis.append(v)
    return basis
