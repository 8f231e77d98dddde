import json

import pytest

from qpart.diagram import AlgebraContext, set_partitions
from qpart.dims import (
    EVALUATORS, EvaluatorDisagreement, b2, bell, binom, bratteli, check_bratteli, dim_delta, dim_simple,
    dim_simple_all, dim_table, down_labels, h_formula, h_from_q, labels, q_formula, q_mobius,
    simple_dims, stirling2, t_formula, up_labels, algebra_dim_formula,
)
from qpart.tableaux import hook_dim, partitions_upto

TABLE = {
    "whole": [1, 1, 4, 41, 715, 17722, 580317],
    "half": [1, 2, 15, 203, 4140, 115975, 4213597],
    "tilde": [2, 7, 67, 1080, 25287, 794545, 31858034],
}


def brute_b2(t):
    return sum(1 for p in set_partitions(list(range(t))) if all(len(b) > 1 for b in p))


def test_counting_functions():
    assert [bell(m) for m in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert [b2(t) for t in range(5)] == [1, 0, 1, 1, 4]
    assert all(b2(t) == brute_b2(t) for t in range(9))
    assert all(bell(t) == sum(1 for _ in set_partitions(list(range(t)))) for t in range(8))
    assert stirling2(3, 2) == 3 and stirling2(0, 0) == 1 and stirling2(3, 0) == 0
    assert binom(3, 5) == 0 and binom(5, 2) == 10


@pytest.mark.parametrize("kind", TABLE)
def test_algebra_dim_table(kind):
    assert [algebra_dim_formula(kind, k) for k in range(7)] == TABLE[kind]


@pytest.mark.parametrize("kind", TABLE)
def test_sum_of_squares(kind):
    for k in range(7):
        assert sum(v * v for v in simple_dims(kind, k).values()) == TABLE[kind][k]


def test_examples():
    assert [dim_simple("whole", 2, l) for l in ((), (1,), (2,), (1, 1))] == [1, 1, 1, 1]
    assert [dim_simple("half", 2, l) for l in ((), (1,), (2,), (1, 1))] == [2, 3, 1, 1]
    assert [dim_simple("tilde", 1, l) for l in ((), (1,), (2,), (1, 1))] == [1, 2, 1, 1]
    assert dim_simple("whole", 1, ()) == 0 and dim_simple("whole", 1, (1,)) == 1
    assert dim_simple("whole", 2, (3,)) == 0
    assert dim_delta(2, (1,)) == 3 and dim_delta(3, (2, 1)) == 2
    assert sum(dim_delta(2, nu) ** 2 for nu in partitions_upto(2)) == 15


@pytest.mark.parametrize("k", range(0, 4))
def test_recursions(k):
    for lam in partitions_upto(k + 2):
        # the half level from the whole level through up-edges
        assert h_formula(k, lam) == sum(q_formula(k, nu) for nu in up_labels(lam))
        # the tilde level from the half level through down-edges
        assert t_formula(k, lam) == sum(h_formula(k, mu) for mu in down_labels(lam))
        # the next whole level is the tilde level minus the previous one
        assert q_formula(k + 1, lam) == t_formula(k, lam) - q_formula(k, lam)
        # tilde splits as two consecutive whole levels
        assert t_formula(k, lam) == q_formula(k, lam) + q_formula(k + 1, lam)


@pytest.mark.parametrize("k", range(0, 5))
def test_mobius_pair(k):
    for lam in partitions_upto(k):
        assert h_from_q(k, lam) == h_formula(k, lam)
        assert q_mobius(k, lam) == q_formula(k, lam)
        assert q_mobius(k, lam, h_from_q) == q_formula(k, lam)


def _brute_q(k, lam):
    # set partitions of [k]; every singleton must sit in the upper shape
    m = sum(lam)
    count = 0
    for p in set_partitions(list(range(k))):
        sing = sum(1 for b in p if len(b) == 1)
        count += binom(len(p) - sing, m - sing)
    return hook_dim(lam) * count


@pytest.mark.parametrize("k", range(0, 6))
def test_q_formula_brute(k):
    for lam in partitions_upto(k):
        assert q_formula(k, lam) == _brute_q(k, lam)


@pytest.mark.parametrize("kind", ["whole", "half", "tilde"])
@pytest.mark.parametrize("k", range(0, 5))
def test_four_way_agreement(kind, k):
    for lam in labels(kind, k):
        vals = dim_simple_all(kind, k, lam)
        assert set(vals) == set(EVALUATORS[kind]) and len(set(vals.values())) == 1


def test_disagreement_raises(monkeypatch):
    monkeypatch.setitem(EVALUATORS["whole"], "formula", lambda k, lam: 99)
    with pytest.raises(EvaluatorDisagreement):
        dim_simple_all("whole", 2, (1,))


def test_enumerated_algebra_dims():
    for kind in TABLE:
        for k in range(4):
            assert len(AlgebraContext(kind, k).leaders()) == TABLE[kind][k]


def test_dim_table():
    T = dim_table(2)
    assert T[("half", 2, (1,))] == 3
    assert all(v >= 0 for v in T.values())
    assert all(v == 0 for (kind, k, lam), v in T.items() if sum(lam) > (k + 1 if kind == "tilde" else k))


def test_bratteli():
    G = bratteli(3)
    assert check_bratteli(G)
    names = G.to_json()["levels"]
    assert names[:4] == ["QP(0)", "QP(0+1/2)", "tildeQP(1)", "QP(1)"]
    i = names.index("QP(2)")
    assert {lam for (j, lam) in G.nodes if j == i} == {(), (1,), (2,), (1, 1)}
    q1 = names.index("QP(1)")
    assert (q1, ()) not in G.nodes and G.nodes[(q1, (1,))] == 1
    for lv, (kind, k) in enumerate(G.levels):
        assert sum(d * d for (j, _), d in G.nodes.items() if j == lv) == algebra_dim_formula(kind, k)
    types = {t for _, _, t in G.edges}
    assert types == {"inclusion-red-blue", "inclusion-blue-green", "projection-green-red"}
    json.dumps(G.to_json())
    dot = G.to_dot()
    assert dot.startswith("digraph") and "rank=same" in dot and "darkgreen" in dot
    with pytest.raises(ValueError):
        bratteli(7)


def test_bratteli_detects_bad_dims():
    G = bratteli(2)
    key = next(iter(k for k in G.nodes if k[0] == 4))
    G.nodes[key] += 1
    assert not check_bratteli(G)
