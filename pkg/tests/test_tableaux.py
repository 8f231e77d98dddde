from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpart.diagram import Diagram, standard_diagrams
from qpart.tableaux import (
    HalfPair, SetValuedTableau, add_box, apply_perm, conjugate, enumerate_svt, hook_dim, is_standard_tableau,
    partitions, remove_box, rho, rho_inverse, specht_act, specht_matrix, standard_tableaux, straighten,
)
from qpart.tableaux import NotStandardDiagram


def brute_syt(shape):
    m = sum(shape)
    out = []
    for w in permutations(range(1, m + 1)):
        t, i = [], 0
        for r in shape:
            t.append(tuple(w[i:i + r]))
            i += r
        t = tuple(t)
        rows_ok = all(a < b for r in t for a, b in zip(r, r[1:]))
        cols_ok = all(t[i][j] < t[i + 1][j] for i in range(len(t) - 1) for j in range(len(t[i + 1])))
        if rows_ok and cols_ok:
            out.append(t)
    return out


def polytabloid(t):
    """e_t as a dict tabloid -> coefficient, summing over the column group."""
    cols = [[r[j] for r in t if j < len(r)] for j in range(len(t[0]))]
    out = {}
    for perms in product(*[list(permutations(c)) for c in cols]):
        sign = 1
        for c, p in zip(cols, perms):
            inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p))
                      if c.index(p[a]) > c.index(p[b]))
            sign *= (-1) ** inv
        rows = [[None] * len(r) for r in t]
        for j, p in enumerate(perms):
            for i, v in enumerate(p):
                rows[i][j] = v
        key = tuple(frozenset(r) for r in rows)
        out[key] = out.get(key, 0) + sign
    return {k: v for k, v in out.items() if v}


def lin(comb):
    acc = {}
    for t, c in comb.items():
        for k, v in polytabloid(t).items():
            acc[k] = acc.get(k, 0) + c * v
    return {k: v for k, v in acc.items() if v}


def test_partitions_and_boxes():
    assert [len(partitions(m)) for m in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert conjugate((3, 1)) == (2, 1, 1)
    assert sorted(add_box((1,))) == [(1, 1), (2,)]
    assert remove_box((2, 1)) in ([(1, 1), (2,)], [(2,), (1, 1)])
    assert remove_box(()) == []


@pytest.mark.parametrize("m", range(7))
def test_hook_matches_brute_force(m):
    for nu in partitions(m):
        syt = brute_syt(nu) if nu else [()]
        assert hook_dim(nu) == len(syt) == len(standard_tableaux(nu))
        assert set(standard_tableaux(nu)) == set(syt)


@pytest.mark.parametrize("m", range(1, 6))
def test_sum_of_squares(m):
    assert sum(hook_dim(nu) ** 2 for nu in partitions(m)) == factorial(m)


def test_straighten_identity_and_stabilizers():
    T = ((1, 2, 4), (3, 5))
    assert specht_act((1, 2, 3, 4, 5), T) == {T: 1}
    assert straighten(T) == {T: 1}
    # (1 2) fixes the tabloid of T; the polytabloid changes
    sT = apply_perm((2, 1, 3, 4, 5), T)
    assert tuple(map(frozenset, sT)) == tuple(map(frozenset, T))
    assert specht_act((2, 1, 3, 4, 5), T) != {T: 1}
    # (1 3) lies in the column group of T and acts by its sign
    assert specht_act((3, 2, 1, 4, 5), T) == {T: -1}


@pytest.mark.parametrize("m", range(1, 6))
def test_straightening_matches_polytabloids(m):
    for nu in partitions(m):
        for t0 in standard_tableaux(nu):
            for sigma in permutations(range(1, m + 1)):
                comb = specht_act(sigma, t0)
                assert all(isinstance(c, int) for c in comb.values())
                assert lin(comb) == polytabloid(apply_perm(sigma, t0))
            if m == 5:
                break


def test_s3_two_dimensional_irrep():
    s1 = specht_matrix((2, 1, 3), (2, 1))
    s2 = specht_matrix((1, 3, 2), (2, 1))
    I = [[1, 0], [0, 1]]

    def mm(A, B):
        return [[sum(A[i][l] * B[l][j] for l in range(2)) for j in range(2)] for i in range(2)]

    assert mm(s1, s1) == I and mm(s2, s2) == I
    assert mm(mm(s1, s2), s1) == mm(mm(s2, s1), s2)
    assert s1[0][0] + s1[1][1] == 0
    c = mm(s1, s2)
    assert c[0][0] + c[1][1] == -1


def _compose(a, b):
    return tuple(a[b[i] - 1] for i in range(len(a)))


@given(st.integers(1, 5).flatmap(lambda m: st.tuples(st.permutations(range(1, m + 1)), st.permutations(range(1, m + 1)))))
def test_specht_is_a_representation(st_pair):
    s, t = st_pair
    m = len(s)
    for nu in partitions(m):
        A, B = specht_matrix(s, nu), specht_matrix(t, nu)
        C = specht_matrix(_compose(s, t), nu)
        n = len(A)
        assert C == [[sum(A[i][l] * B[l][j] for l in range(n)) for j in range(n)] for i in range(n)]


def test_rho_example():
    d = Diagram(9, [[1, 3, -2], [2, -1], [4, 5, 9, -3], [6, 7], [8]] + [[-j] for j in range(4, 10)])
    T = ((1, 3), (2,))
    S = rho(d, T, 18)
    assert S.upper == (((2,), (4, 5, 9)), ((1, 3),))
    assert S.first_row == ((6, 7), (8,))
    assert S.is_valid()
    assert rho_inverse(S) == (d, T)
    with pytest.raises(ValueError):
        rho(d, T, 17)


def test_rho_empty_nu():
    d = Diagram(3, [[1, 3], [2], [-1], [-2], [-3]])
    S = rho(d, ())
    assert S.upper == () and S.first_row == ((2,), (1, 3))


def test_rho_rejects_nonstandard():
    with pytest.raises(NotStandardDiagram):
        rho(Diagram(2, [[1, -2], [2], [-1]]), ((1,),))


@pytest.mark.parametrize("k", range(0, 4))
def test_rho_round_trip_and_bijection(k):
    for m in range(k + 1):
        for nu in partitions(m):
            images = set()
            for d in standard_diagrams(k, m):
                for T in standard_tableaux(nu):
                    S = rho(d, T)
                    assert rho_inverse(S) == (d, T)
                    images.add(S)
            everything = {S for S in enumerate_svt(k, nu, "none") if S.is_valid()}
            assert images == everything


def test_svt_counts():
    six = list(enumerate_svt(3, (2,), "none"))
    assert len([S for S in six if S.is_valid()]) == 6
    assert sum(1 for _ in enumerate_svt(2, (1,), "no-singleton-first-row")) == 1
    assert sum(1 for _ in enumerate_svt(2, (), "no-singleton-first-row")) == 1
    for S in enumerate_svt(3, (1,), "tilde-rule"):
        assert all(len(b) > 1 or b == (4,) for b in S.first_row)
    hp = list(enumerate_svt(1, (), "half-pair"))
    assert all(isinstance(h, HalfPair) and 2 in h.cell for h in hp)
    assert len(hp) == 1  # S = {} would leave {1} alone in the first row
    with pytest.raises(ValueError):
        list(enumerate_svt(2, (), "bogus"))


def test_svt_json():
    S = SetValuedTableau(3, (((1, 2),),), ((3,),), 7)
    assert S.to_json() == {"upper": [[[1, 2]]], "first_row_blocks": [[3]], "n": 7}
    assert is_standard_tableau(S.max_tableau())
