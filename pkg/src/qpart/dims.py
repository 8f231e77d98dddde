"""Counting formulas for the algebras and their irreducibles, the recursions
along the tower QP_k -> QP_{k+1/2} -> tildeQP_{k+1} -> QP_{k+1}, and the
Bratteli-like graph built from them.

Irreducibles are labelled by lam_bar, the partition lam with its first row
removed; n stays symbolic.  Kinds are 'whole', 'half' and 'tilde', where
tilde at k means tildeQP_{k+1}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cache
from math import comb
from typing import Dict, List, Tuple

from .tableaux import Partition, add_box, hook_dim, partitions_upto, remove_box, enumerate_svt

KINDS = ("whole", "half", "tilde")


def binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


@cache
def stirling2(k: int, i: int) -> int:
    if k == i:
        return 1
    if i <= 0 or i > k:
        return 0
    return i * stirling2(k - 1, i) + stirling2(k - 1, i - 1)


@cache
def bell(m: int) -> int:
    return sum(stirling2(m, i) for i in range(m + 1))


@cache
def b2(t: int) -> int:
    """Set partitions of [t] with every block of size at least two."""
    if t == 0:
        return 1
    return sum(binom(t - 1, j - 1) * b2(t - j) for j in range(2, t + 1))


def _size(p) -> int:
    return sum(p)


# closed formulas


def q_formula(k: int, lam: Partition) -> int:
    m = _size(lam)
    if m > k:
        return 0
    return hook_dim(lam) * sum(binom(k, t) * stirling2(k - t, m) * b2(t) for t in range(k + 1))


def h_formula(k: int, mu: Partition) -> int:
    m = _size(mu)
    if m > k:
        return 0
    tot = 0
    for s in range(k + 1):
        for t in range(k - s + 1):
            tot += binom(k, s) * binom(k - s, t) * stirling2(k - s - t, m) * b2(t)
    return hook_dim(mu) * tot


def h_from_q(k: int, mu: Partition) -> int:
    """H(k, mu) = sum_s C(k,s) Q(k-s, mu)."""
    return sum(binom(k, s) * q_formula(k - s, mu) for s in range(k + 1))


def q_mobius(k: int, lam: Partition, H=None) -> int:
    """Q(k, lam) = sum_s (-1)^s C(k,s) H(k-s, lam)."""
    H = H or h_formula
    return sum((-1) ** s * binom(k, s) * H(k - s, lam) for s in range(k + 1))


def t_formula(k: int, lam: Partition) -> int:
    """tildeQP_{k+1}: Q(k, lam) + Q(k+1, lam)."""
    return q_formula(k, lam) + q_formula(k + 1, lam)


def dim_delta(k: int, nu: Partition) -> int:
    m = _size(nu)
    if m > k:
        return 0
    return hook_dim(nu) * sum(stirling2(k, i) * binom(i, m) for i in range(m, k + 1))


def dim_half_delta(k: int, nu: Partition) -> int:
    m = _size(nu)
    if m > k:
        return 0
    return hook_dim(nu) * sum(stirling2(k, i) * binom(i, m) * (i - m + 1) for i in range(m, k + 1))


# recursions


def up_labels(mu: Partition) -> List[Partition]:
    return [tuple(mu)] + add_box(tuple(mu))


def down_labels(lam: Partition) -> List[Partition]:
    return [tuple(lam)] + remove_box(tuple(lam))


@cache
def q_rec(k: int, lam: Partition) -> int:
    if k == 0:
        return 1 if not lam else 0
    return t_rec(k - 1, lam) - q_rec(k - 1, lam)


@cache
def h_rec(k: int, mu: Partition) -> int:
    return sum(q_rec(k, lam) for lam in up_labels(mu))


@cache
def t_rec(k: int, lam: Partition) -> int:
    return sum(h_rec(k, mu) for mu in down_labels(lam))


# tableau counts


def q_tableaux(k: int, lam: Partition) -> int:
    return sum(1 for _ in enumerate_svt(k, lam, "no-singleton-first-row"))


def h_tableaux(k: int, mu: Partition) -> int:
    return sum(1 for _ in enumerate_svt(k, mu, "half-pair"))


def t_tableaux(k: int, lam: Partition) -> int:
    return sum(1 for _ in enumerate_svt(k, lam, "tilde-rule"))


# module counts


def q_module(k: int, lam: Partition) -> int:
    from .repmodules import simple_dim

    return simple_dim(k, lam)


def h_module(k: int, mu: Partition) -> int:
    # QP_{k+1/2}(n) is isomorphic to P_k(n-1): its simples are the Delta_k(mu)
    from .repmodules import delta_basis

    return len(delta_basis(k, mu)) if _size(mu) <= k else 0


def t_module(k: int, lam: Partition) -> int:
    # induce the half simples along one box
    return sum(h_module(k, mu) for mu in down_labels(lam))


EVALUATORS = {
    "whole": {"formula": q_formula, "tableaux": q_tableaux, "recursion": q_rec, "module": q_module},
    "half": {"formula": h_formula, "tableaux": h_tableaux, "recursion": h_rec, "module": h_module},
    "tilde": {"formula": t_formula, "tableaux": t_tableaux, "recursion": t_rec, "module": t_module},
}


class EvaluatorDisagreement(ArithmeticError):
    pass


def dim_simple(kind: str, k: int, lam: Partition, method: str = "formula") -> int:
    lam = tuple(lam)
    if kind not in EVALUATORS:
        raise ValueError(f"unknown kind {kind!r}")
    if _size(lam) > (k + 1 if kind == "tilde" else k):
        return 0
    return EVALUATORS[kind][method](k, lam)


def dim_simple_all(kind: str, k: int, lam: Partition) -> Dict[str, int]:
    """Run the four evaluators; raise if they disagree."""
    vals = {m: dim_simple(kind, k, lam, m) for m in EVALUATORS[kind]}
    if len(set(vals.values())) != 1:
        raise EvaluatorDisagreement(f"{kind} k={k} {lam}: {vals}")
    return vals


def labels(kind: str, k: int) -> List[Partition]:
    return partitions_upto(k + 1 if kind == "tilde" else k)


def simple_dims(kind: str, k: int, method: str = "formula") -> Dict[Partition, int]:
    return {lam: dim_simple(kind, k, lam, method) for lam in labels(kind, k)}


def algebra_dim_formula(kind: str, k: int) -> int:
    if kind == "whole":
        return sum((-1) ** (j - 1) * bell(2 * k - j) for j in range(1, 2 * k + 1)) + 1
    if kind == "half":
        return bell(2 * k)
    if kind == "tilde":
        return sum((-1) ** s * binom(2 * k, s) * bell(2 * k + 2 - s) for s in range(2 * k + 1))
    raise ValueError(f"unknown kind {kind!r}")


def dim_table(k_max: int, method: str = "formula") -> Dict[Tuple[str, int, Partition], int]:
    out = {}
    for kind in KINDS:
        for k in range(k_max + 1):
            for lam, v in simple_dims(kind, k, method).items():
                out[(kind, k, lam)] = v
    return out


# Bratteli-like graph

EDGE_TYPES = {
    ("whole", "half"): "inclusion-red-blue",
    ("half", "tilde"): "inclusion-blue-green",
    ("tilde", "whole"): "projection-green-red",
}
COLORS = {"whole": "red", "half": "blue", "tilde": "darkgreen"}


@dataclass
class BratteliGraph:
    levels: List[Tuple[str, int]] = field(default_factory=list)
    nodes: Dict[Tuple[int, Partition], int] = field(default_factory=dict)
    edges: List[Tuple[Tuple[int, Partition], Tuple[int, Partition], str]] = field(default_factory=list)

    @staticmethod
    def level_name(kind: str, k: int) -> str:
        return {"whole": f"QP({k})", "half": f"QP({k}+1/2)", "tilde": f"tildeQP({k + 1})"}[kind]

    def to_json(self):
        return {
            "levels": [self.level_name(*lv) for lv in self.levels],
            "nodes": [{"level": i, "label": list(lam), "dim": d} for (i, lam), d in sorted(self.nodes.items())],
            "edges": [{"from": [i, list(a)], "to": [j, list(b)], "type": t}
                      for (i, a), (j, b), t in self.edges],
        }

    def to_dot(self) -> str:
        def nid(i, lam):
            return f"n{i}_" + ("_".join(map(str, lam)) or "e")

        lines = ["digraph bratteli {", "  rankdir=TB;"]
        for i, (kind, k) in enumerate(self.levels):
            lines.append(f"  subgraph level{i} {{")
            lines.append("    rank=same;")
            lines.append(f'    l{i} [shape=plaintext, label="{self.level_name(kind, k)}"];')
            for (j, lam), d in sorted(self.nodes.items()):
                if j == i:
                    lab = "(" + ",".join(map(str, lam)) + ")" if lam else "()"
                    lines.append(f'    {nid(j, lam)} [label="{lab}\\n{d}", color={COLORS[kind]}];')
            lines.append("  }")
        for i in range(len(self.levels) - 1):
            lines.append(f"  l{i} -> l{i + 1} [style=invis];")
        for (i, a), (j, b), t in self.edges:
            style = "dashed" if t.startswith("projection") else "solid"
            lines.append(f"  {nid(i, a)} -> {nid(j, b)} [style={style}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def bratteli(k_max: int) -> BratteliGraph:
    if k_max > 6:
        raise ValueError("k_max must be at most 6")
    G = BratteliGraph()
    for k in range(k_max + 1):
        G.levels += [("whole", k), ("half", k), ("tilde", k)]
    G.levels.append(("whole", k_max + 1))
    for i, (kind, k) in enumerate(G.levels):
        for lam, d in simple_dims(kind, k).items():
            if d:
                G.nodes[(i, lam)] = d
    for i in range(len(G.levels) - 1):
        src, dst = G.levels[i][0], G.levels[i + 1][0]
        t = EDGE_TYPES[(src, dst)]
        for (a, lam), _ in sorted(G.nodes.items()):
            if a != i:
                continue
            if src == "whole":
                targets = down_labels(lam)
            elif src == "half":
                targets = up_labels(lam)
            else:
                targets = [lam]
            for mu in targets:
                if (i + 1, mu) in G.nodes:
                    G.edges.append(((i, lam), (i + 1, mu), t))
    return G


def check_bratteli(G: BratteliGraph) -> bool:
    """Node dimensions obey the three edge rules."""
    ok = True
    for i in range(1, len(G.levels)):
        kind = G.levels[i][0]
        for (j, lam), d in G.nodes.items():
            if j != i:
                continue
            ins = [G.nodes[a] for a, b, _ in G.edges if b == (j, lam)]
            if kind in ("half", "tilde"):
                ok &= sum(ins) == d
            else:
                prev = G.nodes.get((i - 3, lam), 0)
                ok &= sum(ins) - prev == d
    return ok


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True)
