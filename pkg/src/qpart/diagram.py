"""Set-partition diagrams on the vertices {1..K} (top) and {-1..-K} (bottom).

A diagram is stored in canonical form: elements sorted within each block and
blocks sorted by their minimum under the order 1 < 2 < ... < K < -1 < ... < -K.
Products, tensor products, refinement orders and the combinatorics of
standard diagrams all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

_BIG = 1 << 30


class SizeMismatch(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class NotAVkmDiagram(ValueError):
    pass


class InvalidDiagram(ValueError):
    pass


def vkey(v: int) -> int:
    """Sort key realizing 1 < 2 < ... < K < -1 < -2 < ... < -K."""
    return v if v > 0 else _BIG - v


def _canon(blocks) -> Tuple[Tuple[int, ...], ...]:
    bs = [tuple(sorted(b, key=vkey)) for b in blocks]
    bs.sort(key=lambda b: vkey(b[0]))
    return tuple(bs)


class Diagram:
    """A set partition of {1..k} u {-1..-k}; immutable and hashable."""

    __slots__ = ("k", "blocks", "_hash")

    def __init__(self, k: int, blocks: Iterable[Iterable[int]], check: bool = True):
        blocks = [tuple(b) for b in blocks]
        if check:
            seen = set()
            for b in blocks:
                if not b:
                    raise InvalidDiagram("empty block")
                for v in b:
                    if not isinstance(v, int) or v == 0 or abs(v) > k or v in seen:
                        raise InvalidDiagram(f"bad or repeated vertex {v!r}")
                    seen.add(v)
            if len(seen) != 2 * k:
                raise InvalidDiagram("blocks do not cover all vertices")
        self.k = k
        self.blocks = _canon(blocks)
        self._hash = None

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.k == other.k and self.blocks == other.blocks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.blocks))
        return self._hash

    def sort_key(self):
        return (self.k, tuple(tuple(vkey(v) for v in b) for b in self.blocks))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Diagram({self.k}, {[list(b) for b in self.blocks]})"

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"

    def block_of(self, v: int) -> Tuple[int, ...]:
        for b in self.blocks:
            if v in b:
                return b
        raise KeyError(v)

    def top(self, b) -> Tuple[int, ...]:
        return tuple(v for v in b if v > 0)

    def bottom(self, b) -> Tuple[int, ...]:
        return tuple(v for v in b if v < 0)

    def propagating_blocks(self):
        return [b for b in self.blocks if b[0] > 0 and b[-1] < 0]

    def singletons(self) -> List[int]:
        return [b[0] for b in self.blocks if len(b) == 1]

    def has_singletons(self, among: Optional[Iterable[int]] = None) -> bool:
        if among is None:
            return any(len(b) == 1 for b in self.blocks)
        among = set(among)
        return any(len(b) == 1 and b[0] in among for b in self.blocks)

    def to_json(self):
        return {"k": self.k, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj) -> "Diagram":
        return cls(int(obj["k"]), obj["blocks"])


SetPartitionDiagram = Diagram


def compose(d1: Diagram, d2: Diagram) -> Tuple[int, Diagram]:
    """Stack d1 on top of d2; return (number of closed middle components, result)."""
    if d1.k != d2.k:
        raise SizeMismatch(f"sizes {d1.k} and {d2.k}")
    K = d1.k
    # slots: top i -> i-1, middle j -> K+j-1, bottom j -> 2K+j-1
    parent = list(range(3 * K))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for b in d1.blocks:
        r = find(b[0] - 1 if b[0] > 0 else K - b[0] - 1)
        for v in b[1:]:
            s = find(v - 1 if v > 0 else K - v - 1)
            if s != r:
                parent[s] = r
    for b in d2.blocks:
        r = find(K + b[0] - 1 if b[0] > 0 else 2 * K - b[0] - 1)
        for v in b[1:]:
            s = find(K + v - 1 if v > 0 else 2 * K - v - 1)
            if s != r:
                parent[s] = r

    groups = {}
    for i in range(K):
        groups.setdefault(find(i), []).append(i + 1)
    for j in range(K):
        groups.setdefault(find(2 * K + j), []).append(-(j + 1))
    outer_roots = set(groups)
    middle_roots = {find(K + j) for j in range(K)}
    m = len(middle_roots - outer_roots)
    return m, Diagram(K, groups.values(), check=False)


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    """Place d2 to the right of d1."""
    s = d1.k
    shifted = [tuple(v + s if v > 0 else v - s for v in b) for b in d2.blocks]
    return Diagram(d1.k + d2.k, list(d1.blocks) + shifted, check=False)


def propagating_number(d: Diagram) -> int:
    return sum(1 for b in d.blocks if b[0] > 0 and b[-1] < 0)


# generators


def _check_index(i, lo, hi):
    if not (lo <= i <= hi):
        raise IndexOutOfRange(f"index {i} not in [{lo}, {hi}]")


def identity(k: int) -> Diagram:
    return Diagram(k, [(i, -i) for i in range(1, k + 1)], check=False)


def s_gen(i: int, k: int) -> Diagram:
    _check_index(i, 1, k - 1)
    bl = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    bl += [(i, -(i + 1)), (i + 1, -i)]
    return Diagram(k, bl, check=False)


def p_gen(j: int, k: int) -> Diagram:
    _check_index(j, 1, k)
    bl = [(t, -t) for t in range(1, k + 1) if t != j] + [(j,), (-j,)]
    return Diagram(k, bl, check=False)


def b_gen(i: int, k: int) -> Diagram:
    _check_index(i, 1, k - 1)
    bl = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    bl.append((i, i + 1, -i, -(i + 1)))
    return Diagram(k, bl, check=False)


def e_gen(i: int, k: int) -> Diagram:
    _check_index(i, 1, k - 1)
    bl = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    bl += [(i, i + 1), (-i, -(i + 1))]
    return Diagram(k, bl, check=False)


def p_set(J: Iterable[int], k: int) -> Diagram:
    """Product of p_j over j in J: isolate j and -j for each j in J."""
    J = set(J)
    bl = []
    for t in range(1, k + 1):
        if t in J:
            bl += [(t,), (-t,)]
        else:
            bl.append((t, -t))
    return Diagram(k, bl, check=False)


def ptilde_diagram(k: int, m: int) -> Diagram:
    """Identity strands on 1..m, singletons elsewhere (coefficient handled by callers)."""
    _check_index(m, 0, k)
    return p_set(range(m + 1, k + 1), k)


def perm_diagram(sigma: Sequence[int], k: Optional[int] = None) -> Diagram:
    """Blocks {i, -sigma(i)}; padded with identity strands up to size k."""
    m = len(sigma)
    k = m if k is None else k
    bl = [(i + 1, -sigma[i]) for i in range(m)] + [(j, -j) for j in range(m + 1, k + 1)]
    return Diagram(k, bl)


def generator(name: str, k: int, i: Optional[int] = None, m: Optional[int] = None) -> Diagram:
    """Look up a generator by name: identity, s, p, b, e, ptilde."""
    if name in ("identity", "1"):
        return identity(k)
    if name == "ptilde":
        return ptilde_diagram(k, m if m is not None else i)
    table = {"s": s_gen, "p": p_gen, "b": b_gen, "e": e_gen}
    if name not in table:
        raise ValueError(f"unknown generator {name!r}")
    if i is None:
        raise IndexOutOfRange("generator index required")
    return table[name](i, k)


# refinement


def sp(dp: Diagram, B: Iterable[int]) -> List[Tuple[int, ...]]:
    """Blocks of dp contained in B."""
    B = set(B)
    return [b for b in dp.blocks if set(b) <= B]


def refines(dp: Diagram, d: Diagram) -> bool:
    """Every block of dp lies inside a block of d."""
    if dp.k != d.k:
        raise SizeMismatch
    where = {}
    for idx, b in enumerate(d.blocks):
        for v in b:
            where[v] = idx
    return all(len({where[v] for v in b}) == 1 for b in dp.blocks)


def refines_star(dp: Diagram, d: Diagram) -> bool:
    """dp refines d and each block of d splits into at most one set of size >= 2."""
    if not refines(dp, d):
        return False
    return all(sum(1 for b in sp(dp, B) if len(b) >= 2) <= 1 for B in d.blocks)


def block_length(dp: Diagram, B: Iterable[int]) -> int:
    """Number of size-one sets in sp_{dp}(B)."""
    return sum(1 for b in sp(dp, B) if len(b) == 1)


# enumeration


def set_partitions(items: Sequence) -> Iterator[List[List]]:
    """All set partitions of items, in restricted-growth-string order."""
    items = list(items)
    n = len(items)
    blocks: List[List] = []

    def rec(i):
        if i == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def vertices(K: int) -> List[int]:
    return list(range(1, K + 1)) + [-i for i in range(1, K + 1)]


def is_half(d: Diagram) -> bool:
    K = d.k
    return K >= 1 and -K in d.block_of(K)


def is_tilde_basis(d: Diagram) -> bool:
    """No singleton among +-1..+-(K-1)."""
    K = d.k
    return not any(len(b) == 1 and abs(b[0]) < K for b in d.blocks)


def all_diagrams(K: int) -> Iterator[Diagram]:
    for p in set_partitions(vertices(K)):
        yield Diagram(K, p, check=False)


def half_diagrams(K: int) -> Iterator[Diagram]:
    """Diagrams of size K with K and -K in one block."""
    if K == 0:
        return
    items = list(range(1, K)) + [-i for i in range(1, K)] + [0]
    for p in set_partitions(items):
        bl = [[v for v in b if v] + ([K, -K] if 0 in b else []) for b in p]
        yield Diagram(K, bl, check=False)


FILTERS = {
    "no-singletons": lambda d: not d.has_singletons(),
    "half": is_half,
    "tilde": is_tilde_basis,
}


def enumerate_diagrams(K: int, filters: Iterable = ()) -> Iterator[Diagram]:
    """Stream diagrams of size K passing every filter.

    A filter is a name from FILTERS or a predicate.  The half filter uses a
    dedicated generator so it never materializes the full set.
    """
    fs = list(filters)
    base = all_diagrams(K)
    if "half" in fs:
        fs.remove("half")
        base = half_diagrams(K)
    preds: List[Callable] = [FILTERS[f] if isinstance(f, str) else f for f in fs]
    for d in base:
        if all(p(d) for p in preds):
            yield d


@dataclass(frozen=True)
class AlgebraContext:
    """Which algebra a diagram or element belongs to.

    kind is 'whole' (size k), 'half' (size k+1; k+1 and -(k+1) joined)
    or 'tilde' (size k+1; projector on the first k strands only).
    """

    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in ("whole", "half", "tilde"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    @property
    def size(self) -> int:
        return self.k if self.kind == "whole" else self.k + 1

    @property
    def projected(self) -> range:
        return range(1, self.k + 1)

    def admits(self, d: Diagram) -> bool:
        """d is a diagram of the ambient partition algebra."""
        if d.k != self.size:
            return False
        return self.kind != "half" or is_half(d)

    def is_leader(self, d: Diagram) -> bool:
        """d indexes a basis element of the projected algebra."""
        if not self.admits(d):
            return False
        k = self.k
        return not any(len(b) == 1 and abs(b[0]) <= k for b in d.blocks)

    def leaders(self) -> List[Diagram]:
        if self.kind == "whole":
            return list(enumerate_diagrams(self.k, ["no-singletons"]))
        if self.kind == "half":
            return list(enumerate_diagrams(self.size, ["half", "no-singletons"]))
        return list(enumerate_diagrams(self.size, ["tilde"]))

    def label(self) -> str:
        return {"whole": f"QP_{self.k}", "half": f"QP_{self.k}+1/2", "tilde": f"tildeQP_{self.k + 1}"}[self.kind]

    def to_json(self):
        return {"kind": self.kind, "k": self.k}


Whole = lambda k: AlgebraContext("whole", k)  # noqa: E731
Half = lambda k: AlgebraContext("half", k)  # noqa: E731
Tilde = lambda k: AlgebraContext("tilde", k)  # noqa: E731


# (k,m)-diagrams and standard diagrams


def _propagating_labels(d: Diagram, m: int, extra: Tuple[int, ...] = ()):
    """Check the V(k,m) shape and return [(top part, j)] for -j, j <= m."""
    K = d.k
    k = K - len(extra)
    out = []
    seen = set()
    for b in d.blocks:
        bot = [v for v in b if v < 0]
        tp = [v for v in b if v > 0]
        if not bot:
            continue
        if any(-v in extra for v in bot):
            continue
        if len(bot) != 1:
            raise NotAVkmDiagram(f"block {b} has several bottom vertices")
        j = -bot[0]
        if j > m:
            if tp:
                raise NotAVkmDiagram(f"-{j} should be a singleton")
            continue
        if not tp:
            raise NotAVkmDiagram(f"-{j} does not propagate")
        out.append((tuple(tp), j))
        seen.add(j)
    if seen != set(range(1, m + 1)) or m > k:
        raise NotAVkmDiagram("wrong propagating pattern")
    return out


def factor_standard(d: Diagram, m: int) -> Tuple[Diagram, Tuple[int, ...]]:
    """Write a V(k,m) diagram as dstd * sigma with dstd (k,m)-standard.

    sigma is returned in one-line notation; compose(dstd, perm_diagram(sigma, k))
    reproduces d with no closed loops.
    """
    props = _propagating_labels(d, m)
    props.sort(key=lambda tj: max(tj[0]))
    sigma = tuple(j for _, j in props)
    bl = [b for b in d.blocks if all(v > 0 for v in b)]
    bl += [tp + (-(i + 1),) for i, (tp, _) in enumerate(props)]
    bl += [(-j,) for j in range(m + 1, d.k + 1)]
    return Diagram(d.k, bl, check=False), sigma


def factor_half_standard(d: Diagram, m: int) -> Tuple[Diagram, Tuple[int, ...]]:
    """Half analogue of factor_standard for size k+1 diagrams."""
    K = d.k
    if not is_half(d):
        raise NotAVkmDiagram("not a half diagram")
    kb = d.block_of(K)
    if [v for v in kb if v < 0] != [-K]:
        raise NotAVkmDiagram("the last block must meet the bottom only in -(k+1)")
    props = _propagating_labels(d, m, extra=(K,))
    props.sort(key=lambda tj: max(tj[0]))
    sigma = tuple(j for _, j in props)
    bl = [b for b in d.blocks if all(v > 0 for v in b)]
    bl.append(kb)
    bl += [tp + (-(i + 1),) for i, (tp, _) in enumerate(props)]
    bl += [(-j,) for j in range(m + 1, K)]
    return Diagram(K, bl, check=False), sigma


def is_standard(d: Diagram, m: int, half: bool = False) -> bool:
    try:
        fs = factor_half_standard(d, m) if half else factor_standard(d, m)
    except NotAVkmDiagram:
        return False
    return fs[1] == tuple(range(1, m + 1)) and fs[0] == d


def standard_diagrams(k: int, m: int) -> List[Diagram]:
    """All (k,m)-standard diagrams."""
    if not 0 <= m <= k:
        return []
    out = []
    for p in set_partitions(range(1, k + 1)):
        for chosen in combinations(range(len(p)), m):
            prop = sorted((p[c] for c in chosen), key=max)
            rest = [p[c] for c in range(len(p)) if c not in chosen]
            bl = rest + [b + [-(i + 1)] for i, b in enumerate(prop)]
            bl += [[-j] for j in range(m + 1, k + 1)]
            out.append(Diagram(k, bl, check=False))
    return out


def half_standard_diagrams(k: int, m: int) -> List[Diagram]:
    """Half-(k+1,m)-standard diagrams: size k+1, the block of k+1 reaches only -(k+1)."""
    if not 0 <= m <= k:
        return []
    K = k + 1
    out = []
    for p in set_partitions(range(1, k + 1)):
        for chosen in combinations(range(len(p)), m):
            prop = sorted((p[c] for c in chosen), key=max)
            rest = [p[c] for c in range(len(p)) if c not in chosen]
            for extra in [None] + list(range(len(rest))):
                bl = [b for i, b in enumerate(rest) if i != extra]
                last = [K, -K] + (rest[extra] if extra is not None else [])
                bl.append(last)
                bl += [b + [-(i + 1)] for i, b in enumerate(prop)]
                bl += [[-j] for j in range(m + 1, K)]
                out.append(Diagram(K, bl, check=False))
    return out


# the singleton-filling bijection onto half diagrams without singletons


def singleton_fill_bijection_F(d: Diagram) -> Diagram:
    """Move every singleton of d into a new block with k+1 and -(k+1)."""
    K = d.k + 1
    singles = [b[0] for b in d.blocks if len(b) == 1]
    bl = [b for b in d.blocks if len(b) > 1] + [tuple(singles) + (K, -K)]
    return Diagram(K, bl, check=False)


def singleton_fill_inverse(h: Diagram) -> Diagram:
    K = h.k
    if not is_half(h) or h.has_singletons():
        raise InvalidDiagram("not a half diagram without singletons")
    kb = h.block_of(K)
    bl = [b for b in h.blocks if b != kb]
    bl += [(v,) for v in kb if abs(v) != K]
    return Diagram(K - 1, bl, check=False)
