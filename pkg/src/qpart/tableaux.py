"""Partitions, standard tableaux, Specht modules and set-valued tableaux.

Tableaux are stored in English convention as tuples of rows (row 0 is the
longest).  Specht modules use the polytabloid basis indexed by standard
tableaux, with Garnir straightening, so every action matrix is integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .diagram import Diagram, NotAVkmDiagram, is_standard, set_partitions

Partition = Tuple[int, ...]
Tableau = Tuple[Tuple[int, ...], ...]


class NotStandardDiagram(ValueError):
    pass


# partitions


def partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(a) for a in parts if a)
    if any(a < 0 for a in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


@cache
def partitions(m: int, maxpart: Optional[int] = None) -> Tuple[Partition, ...]:
    """Partitions of m in reverse lexicographic order."""
    if maxpart is None:
        maxpart = m
    if m == 0:
        return ((),)
    out = []
    for a in range(min(m, maxpart), 0, -1):
        for rest in partitions(m - a, a):
            out.append((a,) + rest)
    return tuple(out)


def partitions_upto(k: int) -> List[Partition]:
    return [p for m in range(k + 1) for p in partitions(m)]


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for a in p if a > j) for j in range(p[0])) if p else ()


def add_box(p: Partition) -> List[Partition]:
    """All partitions obtained by adding one box."""
    out = []
    for i in range(len(p) + 1):
        if i == 0 or p[i - 1] > (p[i] if i < len(p) else 0):
            q = list(p) + [0]
            q[i] += 1
            out.append(partition(q))
    return out


def remove_box(p: Partition) -> List[Partition]:
    out = []
    for i in range(len(p)):
        if i == len(p) - 1 or p[i] > p[i + 1]:
            q = list(p)
            q[i] -= 1
            out.append(partition(q))
    return out


def hook_dim(nu: Partition) -> int:
    """Number of standard tableaux of shape nu by the hook length formula."""
    nu = tuple(nu)
    m = sum(nu)
    cj = conjugate(nu)
    prod = 1
    for i, row in enumerate(nu):
        for j in range(row):
            prod *= (row - j - 1) + (cj[j] - i - 1) + 1
    return factorial(m) // prod


# standard tableaux


@cache
def standard_tableaux(shape: Partition) -> Tuple[Tableau, ...]:
    """All standard tableaux of the given shape, in a fixed order."""
    shape = tuple(shape)
    m = sum(shape)
    if m == 0:
        return ((),)
    out = []
    # the entry m sits in a removable corner
    for i in range(len(shape)):
        if i == len(shape) - 1 or shape[i] > shape[i + 1]:
            sub = list(shape)
            sub[i] -= 1
            for t in standard_tableaux(partition(sub)):
                rows = [list(r) for r in t] + [[]] * (len(shape) - len(t))
                rows[i] = rows[i] + [m]
                out.append(tuple(tuple(r) for r in rows))
    out.sort()
    return tuple(out)


def shape_of(t: Tableau) -> Partition:
    return tuple(len(r) for r in t if r)


def is_standard_tableau(t: Tableau) -> bool:
    entries = sorted(v for r in t for v in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for i, r in enumerate(t):
        if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
            return False
        if i and any(t[i - 1][j] >= r[j] for j in range(len(r))):
            return False
    return True


def _perm_sign(w: Dict[int, int]) -> int:
    seen = set()
    sign = 1
    for a in w:
        if a in seen:
            continue
        length = 0
        b = a
        while b not in seen:
            seen.add(b)
            b = w[b]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _sort_columns(t: Tableau):
    rows = [list(r) for r in t]
    sign = 1
    for j in range(len(rows[0]) if rows else 0):
        col = [rows[i][j] for i in range(len(rows)) if j < len(rows[i])]
        sc = sorted(col)
        if sc != col:
            sign *= _perm_sign(dict(zip(col, sc)))
            for i, v in enumerate(sc):
                rows[i][j] = v
    return sign, tuple(tuple(r) for r in rows)


@cache
def _straighten(t: Tableau) -> Tuple[Tuple[Tableau, int], ...]:
    sign, t = _sort_columns(t)
    for i, r in enumerate(t):
        for j in range(len(r) - 1):
            if r[j] > r[j + 1]:
                break
        else:
            continue
        break
    else:
        return ((t, sign),)
    # Garnir relation for the descent at row i between columns j and j+1
    hj = sum(1 for row in t if len(row) > j)
    posA = [(a, j) for a in range(i, hj)]
    posB = [(a, j + 1) for a in range(0, i + 1)]
    A = [t[a][b] for a, b in posA]
    U = A + [t[a][b] for a, b in posB]
    acc: Dict[Tableau, int] = {}
    for X in combinations(sorted(U), len(A)):
        if set(X) == set(A):
            continue
        Y = sorted(set(U) - set(X))
        rows = [list(row) for row in t]
        for (a, b), v in zip(posA + posB, list(X) + Y):
            rows[a][b] = v
        w = {t[a][b]: rows[a][b] for a, b in posA + posB}
        s = -_perm_sign(w) * sign
        for u, c in _straighten(tuple(tuple(row) for row in rows)):
            acc[u] = acc.get(u, 0) + s * c
    return tuple((u, c) for u, c in sorted(acc.items()) if c)


def straighten(t: Tableau) -> Dict[Tableau, int]:
    """Expand the polytabloid e_t of any bijective filling in the standard basis."""
    return dict(_straighten(tuple(tuple(r) for r in t)))


def apply_perm(sigma: Sequence[int], t: Tableau) -> Tableau:
    """Replace every entry v by sigma(v); sigma in one-line notation."""
    return tuple(tuple(sigma[v - 1] for v in r) for r in t)


def specht_act(sigma: Sequence[int], t: Tableau) -> Dict[Tableau, int]:
    """sigma . e_t in the standard polytabloid basis."""
    return straighten(apply_perm(sigma, t))


def specht_matrix(sigma: Sequence[int], shape: Partition) -> List[List[int]]:
    basis = standard_tableaux(tuple(shape))
    index = {t: i for i, t in enumerate(basis)}
    M = [[0] * len(basis) for _ in basis]
    for c, t in enumerate(basis):
        for u, v in specht_act(sigma, t).items():
            M[index[u]][c] = v
    return M


def tabloid_expansion(t: Tableau) -> Dict[Tuple[frozenset, ...], int]:
    """Polytabloid e_t as a signed sum of row tabloids, by brute force over the column group."""
    from itertools import permutations, product as iproduct

    cols = []
    for j in range(len(t[0]) if t else 0):
        cols.append([i for i in range(len(t)) if len(t[i]) > j])
    acc: Dict[Tuple[frozenset, ...], int] = {}
    choices = [list(permutations(range(len(c)))) for c in cols]
    for pick in iproduct(*choices):
        rows = [list(r) for r in t]
        sign = 1
        for j, (rows_idx, p) in enumerate(zip(cols, pick)):
            vals = [t[i][j] for i in rows_idx]
            for a, b in zip(rows_idx, p):
                rows[a][j] = vals[b]
            sign *= _perm_sign({vals[a]: vals[b] for a, b in enumerate(p)})
        key = tuple(frozenset(r) for r in rows)
        acc[key] = acc.get(key, 0) + sign
    return {k: v for k, v in acc.items() if v}


# set-valued tableaux

Block = Tuple[int, ...]


@dataclass(frozen=True)
class SetValuedTableau:
    """Shape (n - |nu|, nu): upper rows hold one block per cell, trailing
    first-row cells hold the remaining blocks in ascending order of maxima."""

    k: int
    upper: Tuple[Tuple[Block, ...], ...]
    first_row: Tuple[Block, ...]
    n: Optional[int] = None

    @property
    def nu(self) -> Partition:
        return tuple(len(r) for r in self.upper)

    def blocks(self) -> List[Block]:
        return [b for r in self.upper for b in r] + list(self.first_row)

    def max_tableau(self) -> Tableau:
        """Relabel upper blocks 1..m by increasing maximum."""
        ups = sorted((b for r in self.upper for b in r), key=max)
        lab = {b: i + 1 for i, b in enumerate(ups)}
        return tuple(tuple(lab[b] for b in r) for r in self.upper)

    def is_valid(self, ground=None) -> bool:
        ground = set(range(1, self.k + 1)) if ground is None else set(ground)
        bs = self.blocks()
        flat = [v for b in bs for v in b]
        if len(flat) != len(set(flat)) or set(flat) != ground:
            return False
        if any(max(a) > max(b) for a, b in zip(self.first_row, self.first_row[1:])):
            return False
        return is_standard_tableau(self.max_tableau())

    def to_json(self):
        return {
            "upper": [[list(b) for b in r] for r in self.upper],
            "first_row_blocks": [list(b) for b in self.first_row],
            "n": self.n,
        }


def rho(d: Diagram, T: Tableau, n: Optional[int] = None) -> SetValuedTableau:
    """Send a standard-module basis pair d (x) T to its set-valued tableau."""
    k = d.k
    m = sum(len(r) for r in T)
    if n is not None and n < 2 * k:
        raise ValueError(f"n = {n} is below 2k = {2 * k}")
    if not is_standard(d, m):
        raise NotStandardDiagram(f"{d} is not ({k},{m})-standard")
    Bj = {}
    free = []
    for b in d.blocks:
        bot = [v for v in b if v < 0]
        tp = tuple(v for v in b if v > 0)
        if bot and tp:
            Bj[-bot[0]] = tp
        elif tp:
            free.append(tp)
    upper = tuple(tuple(Bj[j] for j in r) for r in T)
    return SetValuedTableau(k, upper, tuple(sorted(free, key=max)), n)


def rho_inverse(S: SetValuedTableau) -> Tuple[Diagram, Tableau]:
    T = S.max_tableau()
    if not is_standard_tableau(T):
        raise NotStandardDiagram("upper blocks do not form a standard filling")
    k = S.k
    m = sum(S.nu)
    bl = [list(b) for b in S.first_row]
    for r, tr in zip(S.upper, T):
        for b, j in zip(r, tr):
            bl.append(list(b) + [-j])
    bl += [[-j] for j in range(m + 1, k + 1)]
    return Diagram(k, bl), T


CONSTRAINTS = ("none", "no-singleton-first-row", "tilde-rule", "half-pair")


def _svt_over(ground: Sequence[int], k: int, nu: Partition, n=None) -> Iterator[SetValuedTableau]:
    m = sum(nu)
    shapes = standard_tableaux(tuple(nu))
    for alpha in set_partitions(list(ground)):
        alpha = [tuple(sorted(b)) for b in alpha]
        for chosen in combinations(range(len(alpha)), m):
            ups = sorted((alpha[c] for c in chosen), key=max)
            rest = tuple(sorted((alpha[c] for c in range(len(alpha)) if c not in chosen), key=max))
            for T in shapes:
                upper = tuple(tuple(ups[j - 1] for j in r) for r in T)
                yield SetValuedTableau(k, upper, rest, n)


@dataclass(frozen=True)
class HalfPair:
    """A separate cell holding S u {k+1} and a ([k] - S)-tableau."""

    cell: Block
    tableau: SetValuedTableau


def enumerate_svt(k: int, nu: Partition, constraint: str = "none", n: Optional[int] = None):
    """Stream the set-valued tableaux of upper shape nu under a constraint.

    none / no-singleton-first-row use ground set [k]; tilde-rule uses [k+1]
    and allows a first-row singleton only for {k+1}; half-pair yields HalfPair
    objects for every S in [k].
    """
    nu = tuple(nu)
    if constraint == "none":
        yield from _svt_over(range(1, k + 1), k, nu, n)
    elif constraint == "no-singleton-first-row":
        for S in _svt_over(range(1, k + 1), k, nu, n):
            if all(len(b) > 1 for b in S.first_row):
                yield S
    elif constraint == "tilde-rule":
        for S in _svt_over(range(1, k + 2), k + 1, nu, n):
            if all(len(b) > 1 or b == (k + 1,) for b in S.first_row):
                yield S
    elif constraint == "half-pair":
        for r in range(k + 1):
            for Sset in combinations(range(1, k + 1), r):
                rest = [v for v in range(1, k + 1) if v not in Sset]
                for S in _svt_over(rest, k, nu, n):
                    if all(len(b) > 1 for b in S.first_row):
                        yield HalfPair(Sset + (k + 1,), S)
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
