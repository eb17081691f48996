from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import P, QUINTIC, X3_MINUS_X, X3_PLUS_X, monic_pairs
from oracles import pencil_poly
from tridet.exact_core import DenseMat, Poly, companion_matrix
from tridet.srems import DegreeBreakdown, SignSeq, pmv, srems_compute
from tridet.tridiag import (
    TridiagRep,
    build_L,
    canonical_matrix,
    char_polys,
    char_polys_from_data,
    dual,
    split_blocks,
    surd_view,
    tridiag_from_srems,
    tridiag_from_symmetric,
)

SMALL = TridiagRep((0, 0, 0), ((1, F(2, 3)), (1, F(1, 3))))
ONE_REAL = TridiagRep((0, 0, 0), ((1, F(1)), (-1, F(2))))
QUINTIC_TD = TridiagRep((0,) * 5, tuple((1, b) for b in (F(2), F(7, 5), F(36, 35), F(4, 7))))


def test_from_srems_examples():
    assert tridiag_from_srems(srems_compute(X3_MINUS_X, P("-1/3", 0, 1))) == SMALL
    assert tridiag_from_srems(srems_compute(X3_PLUS_X, P(2, 0, 1))) == ONE_REAL
    t = tridiag_from_srems(srems_compute(P(-5, 1), P(1)))
    assert t.alphas == (5,) and t.couplings == ()


def test_from_srems_rejects_breakdown():
    with pytest.raises(DegreeBreakdown):
        tridiag_from_srems(srems_compute(X3_PLUS_X, P(1, 0, 1)))


def test_rep_validates_couplings():
    with pytest.raises(ValueError):
        TridiagRep((0, 0), ((1, F(0)),))
    with pytest.raises(ValueError):
        TridiagRep((0, 0, 0), ((1, F(1)),))


def test_char_polys_examples():
    assert char_polys(SMALL)[0] == X3_MINUS_X
    assert char_polys(TridiagRep((5,), ())) == [P(-5, 1), P(1)]
    # the quintic couplings read top-down in its displayed matrix are 2, 7/5, 36/35, 4/7
    assert char_polys(QUINTIC_TD)[0] == QUINTIC
    assert char_polys(dual(QUINTIC_TD))[0] == QUINTIC


@given(monic_pairs(min_degree=1, max_degree=8))
def test_round_trip_through_srems(pq):
    p, q = pq
    s = srems_compute(p, q)
    assume(s.breakdown is None)
    deltas = char_polys(tridiag_from_srems(s))
    assert tuple(deltas) == s.polys[: p.degree + 1]


@given(monic_pairs(min_degree=1, max_degree=7))
def test_canonical_matrix_char_poly_oracle(pq):
    s = srems_compute(*pq)
    assume(s.breakdown is None)
    m = canonical_matrix(tridiag_from_srems(s))
    assert m.is_tridiagonal()
    assert Poly(pencil_poly(m.to_rows(), [1] * m.rows)) == pq[0]


def test_dual_examples():
    assert dual(SMALL).couplings == ((1, F(1, 3)), (1, F(2, 3)))
    assert dual(dual(ONE_REAL)) == ONE_REAL


def test_build_L_examples():
    assert build_L(SMALL) == DenseMat.from_rows([[F(2, 9), 0, 0], [0, F(2, 3), 0], [F(-1, 3), 0, 1]])
    assert build_L(TridiagRep((7,), ())) == DenseMat.from_rows([[1]])


def _commutation_nullity(t: TridiagRep) -> int:
    """Dimension of {X lower triangular : X C_p^T = M X}."""
    n = t.n
    m = canonical_matrix(t)
    ct = companion_matrix(char_polys(t)[0]).T
    unknowns = [(i, j) for i in range(n) for j in range(i + 1)]
    rows = []
    for a in range(n):
        for b in range(n):
            row = []
            for i, j in unknowns:
                # coefficient of X[i, j] in (X ct - m X)[a, b]
                v = (ct[j, b] if i == a else 0) - (m[a, i] if j == b else 0)
                row.append(v)
            rows.append(row)
    return len(unknowns) - DenseMat.from_rows(rows).rank()


@given(monic_pairs(min_degree=1, max_degree=6))
def test_build_L_conjugates_and_is_unique(pq):
    p, q = pq
    s = srems_compute(p, q)
    assume(s.breakdown is None)
    t = tridiag_from_srems(s)
    L = build_L(t)
    assert L.is_lower_triangular()
    assert canonical_matrix(t) @ L == L @ companion_matrix(p).T
    if p.degree <= 4:
        assert _commutation_nullity(t) == 1


def test_build_L_uniqueness_small():
    assert _commutation_nullity(SMALL) == 1


def test_surd_view_examples():
    sv = surd_view(SMALL)
    assert sv.radicands == (F(2, 3), F(1, 3)) and sv.J == (1, 1, 1) and sv.signature() == 3
    sv = surd_view(ONE_REAL)
    assert sv.J == (-1, 1, 1) and sv.signature() == 1
    sv = surd_view(QUINTIC_TD)
    assert sv.J == (1,) * 5
    assert sv.radicands_top_down() == (F(4, 7), F(36, 35), F(7, 5), F(2))
    assert sv.char_poly() == QUINTIC


@given(monic_pairs(min_degree=1, max_degree=8))
def test_surd_view_consistency(pq):
    p, q = pq
    s = srems_compute(p, q)
    assume(s.breakdown is None)
    t = tridiag_from_srems(s)
    sv = surd_view(t)
    assert sv.radicands == t.beta_sqs
    assert sv.J[-1] == 1
    assert sv.signature() == pmv(s.nu)
    assert sv.char_poly() == p
    assert tridiag_from_symmetric(sv) == t


def test_surd_view_json():
    js = surd_view(ONE_REAL).to_json(approx=True)
    assert js["offdiag_radicands"] == ["1", "2"]
    assert js["J"] == [-1, 1, 1]
    assert js["approx_matrix"][0][1] == pytest.approx(-(2 ** 0.5), rel=1e-11)


def test_split_blocks_examples():
    couplings = ((1, F(2, 3)), (1, F(0)), (1, F(1, 3)))
    blocks = split_blocks((1, 2, 3, 4), couplings, (1, 1, 1, 1))
    assert [b.n for b, _ in blocks] == [2, 2]
    whole = split_blocks((1, 2, 3), ((1, F(1)), (-1, F(2))), (-1, 1, 1))
    assert len(whole) == 1 and whole[0][0] == TridiagRep((1, 2, 3), ((1, F(1)), (-1, F(2))))


def test_split_blocks_rejects_negative_entry_at_cut():
    with pytest.raises(ValueError):
        split_blocks((0, 0, 0), ((1, F(1)), (-1, F(0))), (-1, -1, 1))


@given(st.integers(2, 7), st.data())
def test_split_blocks_product_of_char_polys(n, data):
    rat = st.builds(F, st.integers(-6, 6), st.integers(1, 3))
    J = [data.draw(st.sampled_from([-1, 1])) for _ in range(n - 1)] + [1]
    diag = [data.draw(rat) for _ in range(n)]
    couplings = []
    for k in range(1, n):
        zero = data.draw(st.booleans()) and J[n - 1 - k] == 1
        b = F(0) if zero else data.draw(st.builds(F, st.integers(1, 9), st.integers(1, 3)))
        couplings.append((J[n - 1 - k] * J[n - k], b))
    blocks = split_blocks(diag, couplings, J)
    whole = char_polys_from_data(diag, [e * b for e, b in couplings])[0]
    prod = P(1)
    for rep, sig in blocks:
        assert isinstance(sig, SignSeq) and sig.signs[-1] == 1
        prod = prod * char_polys(rep)[0]
    assert prod == whole
    assert sum(rep.n for rep, _ in blocks) == n
