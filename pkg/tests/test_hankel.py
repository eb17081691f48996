from fractions import Fraction as F

import pytest
from hypothesis import assume, given

from conftest import P, QUINTIC, X3_MINUS_X, X3_PLUS_X, cubic, monic_pairs, monic_polys, q_a
from oracles import laplace_det
from tridet.exact_core import DenseMat, Poly, ZeroPivot, companion_matrix, poly_at_matrix, poly_gcd
from tridet.hankel import (
    HankelSeq,
    NotCoprime,
    barnett_check,
    bezoutian_canonical,
    dual_q_tilde,
    duality_check,
    hankel_ldlt,
    hankel_signature,
    hankel_tridiag,
    horner_basis,
    intertwinning_check,
    newton_sums,
    pch_matrix,
    principal_minors,
    series_expand,
    wdr,
    wdr_check,
    wdr_tridiag,
)
from tridet.srems import srems_compute
from tridet.tridiag import surd_view, tridiag_from_srems

M = DenseMat.from_rows


@pytest.mark.parametrize(
    "p,q,s",
    [
        (X3_MINUS_X, P("-1/3", 0, 1), (1, 0, F(2, 3), 0, F(2, 3))),
        (P(2, -3, 1), P(-1, 1), (1, 2, 4)),
        (P(1, 0, 1), P(1), (0, 1, 0)),
    ],
)
def test_series_expand_examples(p, q, s):
    assert series_expand(p, q).s == s


@given(monic_pairs(min_degree=1, max_degree=6))
def test_series_matches_long_division(pq):
    # q/p = sum s_j x^{-j-1}: x^{2n-1} q = (sum s_j x^{2n-2-j}) p + O(x^{n-1})
    p, q = pq
    n = p.degree
    h = series_expand(p, q)
    head = Poly([h.s[2 * n - 2 - i] for i in range(2 * n - 1)])
    diff = q * Poly.monomial(2 * n - 1) - head * p
    assert diff.is_zero() or diff.degree < n


def test_newton_sums_examples():
    assert newton_sums(cubic(-1, 1)).s == (3, 0, 2, -3, 2)
    assert newton_sums(QUINTIC).s[:5] == (5, 0, 10, 0, 34)
    assert newton_sums(P(F(-7, 2), 1)).s == (1,)


@given(monic_polys(max_degree=8))
def test_newton_sums_is_series_of_derivative(p):
    assert newton_sums(p) == series_expand(p, p.derivative())


def test_newton_sums_power_sums_of_roots():
    roots = [F(-2), F(1, 2), F(3), F(5, 3)]
    h = newton_sums(Poly.from_roots(roots))
    assert h.s == tuple(sum(r**k for r in roots) for k in range(7))


def test_intertwinning_examples():
    assert intertwinning_check(series_expand(X3_MINUS_X, P("-1/3", 0, 1)), X3_MINUS_X)
    assert intertwinning_check(newton_sums(QUINTIC), QUINTIC)
    assert not intertwinning_check(HankelSeq(3, (1, 0, 0, 0, 1)), X3_MINUS_X)


@given(monic_pairs(min_degree=2, max_degree=7))
def test_perturbing_the_tail_breaks_intertwinning(pq):
    p, q = pq
    h = series_expand(p, q)
    assert intertwinning_check(h, p)
    n = p.degree
    for k in range(n, 2 * n - 1):
        s = list(h.s)
        s[k] += 1
        assert not intertwinning_check(HankelSeq(n, tuple(s)), p)


def test_horner_basis_examples():
    assert horner_basis(P(-1, 0, 1)).polys == (P(0, 1), P(1))
    assert horner_basis(P(2, -3, 1)).polys == (P(-3, 1), P(1))
    assert horner_basis(cubic(-1, 1)).polys == (P(-1, 0, 1), P(0, 1), P(1))


def test_pch_matrix_examples():
    assert pch_matrix(P(2, -3, 1)) == M([[-3, 1], [1, 0]])
    assert pch_matrix(P(-1, 0, 1)) == M([[0, 1], [1, 0]])
    assert pch_matrix(Poly.monomial(4)) == DenseMat.anti_identity(4)


def test_barnett_examples():
    p, q = P(2, -3, 1), P(-1, 1)
    assert barnett_check(p, q)
    assert poly_at_matrix(q, companion_matrix(p)) == M([[-1, -2], [1, 2]])
    assert barnett_check(X3_MINUS_X, Poly([0]))
    assert barnett_check(P(-1, 0, 1), P(0, 1))


@given(monic_pairs(min_degree=1, max_degree=8))
def test_barnett_random(pq):
    p, q = pq
    assert barnett_check(p, q)
    # q(C_p) P_CH = P_CH^T H P_CH is symmetric
    assert bezoutian_canonical(p, q).is_symmetric()


def test_wdr_examples():
    h, sym = wdr(X3_MINUS_X, P("-1/3", 0, 1))
    assert h.matrix() == M([[1, 0, F(2, 3)], [0, F(2, 3), 0], [F(2, 3), 0, F(2, 3)]])
    assert sym.is_symmetric()
    assert sym.scale(-1).det() == h.matrix().det() * X3_MINUS_X(0) == 0
    assert wdr_check(X3_PLUS_X, P(2, 0, 1))


def test_wdr_rejects_common_root():
    with pytest.raises(NotCoprime):
        wdr(X3_PLUS_X, P(1, 0, 1))


@given(monic_pairs(min_degree=1, max_degree=7))
def test_wdr_identity_random(pq):
    p, q = pq
    assume(poly_gcd(p, q).degree == 0)
    assert wdr_check(p, q)


def test_wdr_tridiag_is_symmetric_tridiagonal():
    d, td = wdr_tridiag(cubic(-1, 1), P(-1, 0, 3))
    assert td.is_symmetric() and td.is_tridiagonal()
    assert d == (3, 2, F(-23, 6))


def test_dual_q_tilde_examples():
    p, q = X3_MINUS_X, P("-1/3", 0, 1)
    assert dual_q_tilde(p, q) == P("-2/3", 0, 1)
    assert dual_q_tilde(p, dual_q_tilde(p, q)) == q
    with pytest.raises(ZeroPivot) as err:
        dual_q_tilde(P(2, -3, 1), P(-1, 1))
    assert err.value.index == 2


def test_duality_examples():
    p, q = X3_MINUS_X, P("-1/3", 0, 1)
    assert duality_check(p, q)
    qt = dual_q_tilde(p, q)
    assert tridiag_from_srems(srems_compute(p, qt)).couplings == ((1, F(1, 3)), (1, F(2, 3)))
    assert duality_check(X3_PLUS_X, P(2, 0, 1))
    assert duality_check(P(3, 1), P(1))


@given(monic_pairs(min_degree=1, max_degree=7))
def test_duality_and_involution_random(pq):
    p, q = pq
    assume(srems_compute(p, q).breakdown is None)
    assert duality_check(p, q)
    assert dual_q_tilde(p, dual_q_tilde(p, q)) == q


@given(monic_pairs(min_degree=1, max_degree=6))
def test_principal_minors_are_pivot_products(pq):
    h = series_expand(*pq)
    minors = principal_minors(h)
    m = h.matrix().to_rows()
    assert minors == tuple(laplace_det([r[:k] for r in m[:k]]) for k in range(1, h.n + 1))
    try:
        assert hankel_ldlt(*pq).minors() == minors
    except ZeroPivot as exc:
        assert minors[exc.index - 1] == 0


def test_hankel_signature_examples():
    assert hankel_signature(newton_sums(X3_MINUS_X)) == 3
    assert hankel_signature(newton_sums(cubic(1, 1))) == 1
    h = series_expand(QUINTIC, q_a(F(3, 2)))
    assert hankel_signature(h) == 5


def test_hankel_tridiag_matches_sturm_side():
    q = QUINTIC.derivative().scale(F(1, 5))
    ht = hankel_tridiag(QUINTIC, q)
    assert ht.radicands == (2, F(7, 5), F(36, 35), F(4, 7))
    assert ht == surd_view(tridiag_from_srems(srems_compute(QUINTIC, q)))
    assert ht.char_poly() == QUINTIC
