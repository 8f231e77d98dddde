from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpart.algebra import (
    AlgebraElement, BarBasisElement, HasSingletons, NotInSpan, QPElement, bar, bar_closed_form,
    embed_half, half_to_tilde, in_span, pa_mul, pi_projector, project_tilde, ptilde_element, qp_basis,
    qp_from_diagram, qp_mul, re_express, tilde, unit,
)
from qpart.diagram import (
    AlgebraContext, Diagram, Half, Tilde, Whole, b_gen, compose, identity, p_gen, p_set, refines,
    refines_star, s_gen, tensor,
)
from qpart.exactnum import ONE, X, XINV, LaurentPoly, lp_eval
from qpart.matrix import rank_of_rows

D = Diagram
el = AlgebraElement.from_diagram


def test_pa_mul_examples():
    d = D(2, [[1, -2], [2], [-1]])
    a = el(d, X + 1)
    assert pa_mul(unit(2), a) == a
    for i in (1, 2):
        assert pa_mul(el(p_gen(i, 2)), el(p_gen(i, 2))) == el(p_gen(i, 2), X)
    assert pa_mul(el(b_gen(1, 2)), el(b_gen(1, 2))) == el(b_gen(1, 2))


def test_pi_projector_expansion():
    P = pi_projector(3)
    assert len(P.terms) == 8
    for r in range(4):
        for J in combinations((1, 2, 3), r):
            assert P.coeff(p_set(J, 3)) == LaurentPoly.monomial(-r, (-1) ** r)
    assert pa_mul(P, P) == P
    for i in (1, 2, 3):
        assert pa_mul(P, el(p_gen(i, 3))).is_zero()
        assert pa_mul(el(p_gen(i, 3)), P).is_zero()


def test_pi_projector_half_ambient():
    P = pi_projector(2, Half(2))
    assert P.size == 3
    assert all((3, -3) in d.blocks for d in P.terms)
    assert pa_mul(P, P) == P


def test_bar_examples():
    H = Half(2)
    assert bar(D(3, [[1, 2, -1], [3, -3], [-2]]), H).is_zero()
    d = D(3, [[1, 2, -1], [3, -2, -3]])
    b = bar(d, H)
    assert b.coeff(D(3, [[1], [2], [-1], [-2], [3, -3]])) == LaurentPoly.monomial(-3, -2)
    assert b.coeff(D(3, [[1], [2, -1], [3, -2, -3]])) == -XINV
    assert b.coeff(d) == ONE
    assert bar(identity(2), Whole(2)) == pi_projector(2, Whole(2))


def test_bar_zero_on_singletons():
    W = Whole(3)
    d = D(3, [[1, 2, -1, -2], [3], [-3]])
    assert bar(d, W).is_zero()
    with pytest.raises(HasSingletons):
        bar_closed_form(d, W)


def test_closed_form_examples():
    W = Whole(2)
    d = D(2, [[1, 2, -1, -2]])
    cf = bar_closed_form(d, W)
    allsing = D(2, [[1], [2], [-1], [-2]])
    assert cf.coeff(allsing) == LaurentPoly.monomial(-3, -3)
    # the a_{d,d'} of the worked example, as products of block factors
    H = Half(2)
    d = D(3, [[1, 2, -1], [3, -2, -3]])
    cf = bar_closed_form(d, H)
    mx = LaurentPoly.monomial(-1, -1)
    assert cf.coeff(D(3, [[1], [2], [-1], [3, -3], [-2]])) == (mx ** 2 * 2) * mx
    assert cf.coeff(D(3, [[1], [2, -1], [3, -2, -3]])) == mx * ONE


@pytest.mark.parametrize("ctx", [Whole(1), Whole(2), Whole(3), Half(0), Half(1), Half(2), Tilde(0), Tilde(1), Tilde(2)])
def test_closed_form_matches_direct(ctx):
    for d in ctx.leaders():
        assert bar_closed_form(d, ctx) == bar(d, ctx)


@pytest.mark.parametrize("ctx", [Whole(2), Whole(3), Half(2), Tilde(1)])
def test_triangularity(ctx):
    P = pi_projector(ctx.k, ctx)
    for d in ctx.leaders():
        b = bar(d, ctx)
        assert b.coeff(d) == ONE
        for dp in b.terms:
            if dp != d:
                assert refines_star(dp, d)
                assert not ctx.is_leader(dp)
        assert pa_mul(pa_mul(P, b), P) == b


def _check_closure(ctx):
    B = qp_basis(ctx)
    for a in B:
        for b in B:
            p = qp_mul(a, b)
            _, d3 = compose(a.leader, b.leader)
            assert all(refines(d, d3) for d in p.coeffs)
            assert p.expansion() == pa_mul(a.expansion, b.expansion)


@pytest.mark.parametrize("ctx", [Whole(1), Whole(2), Half(1), Half(2), Tilde(1)])
def test_closure(ctx):
    _check_closure(ctx)


def test_sample_products():
    H = Half(2)
    t1 = D(3, [[1, 2, -1], [3, -2, -3]])
    e1 = D(3, [[1, 2], [-1, -2], [3, -3]])
    T, E = QPElement(H, {t1: 1}), QPElement(H, {e1: 1})
    assert qp_mul(E, T) == QPElement(H, {})
    _, te = compose(t1, e1)
    assert te == D(3, [[1, 2, 3, -3], [-1, -2]])
    assert qp_mul(T, E) == QPElement(H, {te: 1, e1: -XINV})


def test_symmetric_group_relations():
    W = Whole(3)
    one = QPElement.unit(W)
    s = [qp_from_diagram(s_gen(i, 3), W) for i in (1, 2)]
    assert s[0] == QPElement(W, {s_gen(1, 3): 1})
    for si in s:
        assert si * si == one
    assert s[0] * s[1] * s[0] == s[1] * s[0] * s[1]
    W4 = Whole(4)
    a, c = qp_from_diagram(s_gen(1, 4), W4), qp_from_diagram(s_gen(3, 4), W4)
    assert a * c == c * a


def test_unit_acts_trivially():
    for ctx in (Whole(2), Half(2), Tilde(1)):
        one = QPElement.unit(ctx)
        for b in qp_basis(ctx):
            assert one * b == b.as_element() == b.as_element() * one


@pytest.mark.parametrize("k", [1, 2])
def test_embed_half_is_algebra_map(k):
    B = qp_basis(Whole(k))
    for a in B:
        ea = embed_half(a.as_element())
        assert ea.expansion() == AlgebraElement(k + 1, {tensor(d, identity(1)): c for d, c in a.expansion.terms.items()})
        for b in B:
            assert embed_half(qp_mul(a, b)) == embed_half(a.as_element()) * embed_half(b.as_element())
    images = {d for a in B for d in embed_half(a.as_element()).coeffs}
    assert len(images) == len(B)


def test_half_inside_tilde():
    for d in Half(2).leaders():
        assert tilde(d) == bar(d, Half(2))
    a = QPElement(Half(1), {Half(1).leaders()[0]: 1})
    assert half_to_tilde(a).expansion().terms == a.expansion().terms


@pytest.mark.parametrize("k", [0, 1, 2])
def test_projection_lands_in_qp(k):
    T, W = Tilde(k), Whole(k + 1)
    idx = {d: i for i, d in enumerate(W.leaders())}
    rows = []
    for d in T.leaders():
        q = project_tilde(QPElement(T, {d: 1}))
        assert q.context == W
        rows.append({idx[dd]: lp_eval(c, Fraction(101, 7)) for dd, c in q.coeffs.items()})
    # surjective: the images span QP_{k+1}
    assert rank_of_rows(rows) == len(idx)


def test_tilde_of_projected_p():
    k = 1
    K = k + 1
    a = pa_mul(pi_projector(k, Tilde(k)), el(p_gen(K, K)))
    t = pa_mul(pa_mul(pi_projector(k, Tilde(k)), a), pi_projector(k, Tilde(k)))
    assert not t.is_zero()
    assert in_span(t, Tilde(k))
    assert not in_span(t, Half(k))
    assert not in_span(t, Whole(K))
    assert tilde(p_gen(K, K)) == t


def test_re_express_rejects_outside():
    W = Whole(2)
    with pytest.raises(NotInSpan):
        re_express(el(D(2, [[1], [2], [-1], [-2]])), W)
    assert not in_span(el(identity(2)), W)
    assert in_span(pi_projector(2), W)


def test_basis_sizes():
    assert [len(qp_basis(Whole(k))) for k in range(4)] == [1, 1, 4, 41]
    assert [len(qp_basis(Half(k))) for k in range(3)] == [1, 2, 15]
    assert [len(qp_basis(Tilde(k))) for k in range(3)] == [2, 7, 67]


def test_ptilde_element():
    e = ptilde_element(3, 1)
    (d, c), = e.terms.items()
    assert c == LaurentPoly.monomial(-2)
    assert pa_mul(e, e) == e  # idempotent: the loops pay back x^{k-m}


def test_element_json_round_trip():
    H = Half(2)
    b = bar(D(3, [[1, 2, -1], [3, -2, -3]]), H)
    js = b.to_json()
    assert js["context"] == "half:2"
    back = AlgebraElement.from_json(js)
    assert back == b and back.context == H
    assert BarBasisElement(identity(3), H).to_json(with_expansion=True)["expansion"]["terms"]


def test_evaluate_warns_below_bound():
    from qpart.algebra import SemisimplicityWarning
    b = bar(identity(2), Whole(2))
    with pytest.warns(SemisimplicityWarning):
        b.evaluate(1)
    v = b.evaluate(5)
    assert v[identity(2)] == 1


@given(st.lists(st.integers(0, 3), min_size=2, max_size=2), st.lists(st.integers(-2, 2), min_size=2, max_size=2))
def test_qp_mul_random_combinations(idxs, coeffs):
    W = Whole(2)
    L = W.leaders()
    a = QPElement(W, {L[idxs[0]]: LaurentPoly.monomial(coeffs[0]), L[idxs[1]]: 1})
    b = QPElement(W, {L[idxs[1]]: X + coeffs[1]})
    assert (a * b).expansion() == pa_mul(a.expansion(), b.expansion())
