"""Hankel matrices of ``q/p``: series, Newton sums, Barnett, WDR and duality."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_core import (
    DenseMat,
    NotMonicError,
    Poly,
    UnitLDL,
    companion_matrix,
    ldlt_decompose,
    lower_tri_inverse,
    poly_at_matrix,
    poly_gcd,
    rat_to_str,
    sign,
)
from .srems import DegreeBreakdown, srems_compute
from .tridiag import SurdTridiag, dual, tridiag_from_srems


class NotCoprime(ValueError):
    pass


@dataclass(frozen=True)
class HankelSeq:
    n: int
    s: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.s) != 2 * self.n - 1:
            raise ValueError("a size-n Hankel sequence has 2n-1 terms")

    def matrix(self) -> DenseMat:
        n = self.n
        return DenseMat.from_rows([[self.s[i + j] for j in range(n)] for i in range(n)])

    def to_json(self) -> dict:
        return {"n": self.n, "s": [rat_to_str(v) for v in self.s]}


@dataclass(frozen=True)
class HornerBasis:
    polys: tuple[Poly, ...]


def _check_monic(p: Poly, what: str) -> None:
    if p.degree < 1 or not p.is_monic():
        raise NotMonicError(f"{what} expects a monic polynomial of degree >= 1")


def series_expand(p: Poly, q: Poly) -> HankelSeq:
    """First ``2n-1`` coefficients of ``q/p = sum_j s_j / x^(j+1)``.

    ``s_0..s_{n-1}`` come from matching coefficients against ``q``; the rest
    follow the linear recurrence given by ``p``.
    """
    _check_monic(p, "series_expand")
    n = p.degree
    if not q.is_zero() and q.degree >= n:
        raise ValueError("need deg q < deg p")
    a = p.coeffs
    b = q.coeffs + (Fraction(0),) * (n - len(q.coeffs))
    s: list[Fraction] = []
    for k in range(2 * n - 1):
        acc = b[n - 1 - k] if k < n else Fraction(0)
        for j in range(max(0, k - n), k):
            acc -= a[n - k + j] * s[j]
        s.append(acc)
    return HankelSeq(n, tuple(s))


def newton_sums(p: Poly) -> HankelSeq:
    """Power sums ``N_0..N_{2n-2}`` of the roots via Newton's identities."""
    _check_monic(p, "newton_sums")
    n = p.degree
    a = p.coeffs
    N = [Fraction(n)]
    for k in range(1, 2 * n - 1):
        acc = Fraction(0)
        for i in range(1, min(k, n + 1)):
            acc += a[n - i] * N[k - i]
        if k <= n:
            acc += k * a[n - k]
        N.append(-acc)
    return HankelSeq(n, tuple(N))


def intertwinning_check(h: HankelSeq, p: Poly) -> bool:
    """Whether ``H C_p = C_p^T H`` holds exactly."""
    cp = companion_matrix(p)
    if h.n != cp.rows:
        raise ValueError("size mismatch")
    m = h.matrix()
    return m @ cp == cp.T @ m


def horner_basis(p: Poly) -> HornerBasis:
    _check_monic(p, "horner_basis")
    n = p.degree
    hs = [Poly([1])]
    for i in range(n - 2, -1, -1):
        hs.append(hs[-1] * Poly.x() + p.coeffs[i + 1])
    return HornerBasis(tuple(reversed(hs)))


def pch_matrix(p: Poly) -> DenseMat:
    """Change of basis from the canonical basis to the Horner basis.

    Column ``i`` holds the coefficients of ``h_i``; this is the Hankel matrix
    ``H(a_1, ..., a_{n-1}, 1, 0, ..., 0)``.
    """
    _check_monic(p, "pch_matrix")
    n = p.degree
    a = p.coeffs
    return DenseMat.from_rows(
        [[a[i + 1 + m] if i + 1 + m <= n else 0 for i in range(n)] for m in range(n)]
    )


def barnett_check(p: Poly, q: Poly) -> bool:
    """Whether ``q(C_p) = P_CH^T H_n(q/p)`` holds exactly."""
    lhs = poly_at_matrix(q, companion_matrix(p))
    rhs = pch_matrix(p).T @ series_expand(p, q).matrix()
    return lhs == rhs


def bezoutian_canonical(p: Poly, q: Poly) -> DenseMat:
    """Bezoutian in the canonical basis, ``q(C_p) P_CH``."""
    return poly_at_matrix(q, companion_matrix(p)) @ pch_matrix(p)


def wdr(p: Poly, q: Poly) -> tuple[HankelSeq, DenseMat]:
    """``H = H_n(q/p)`` and the symmetric ``C_p^T H``.

    Together they satisfy ``det(H) p(x) = det(x H - C_p^T H)``.
    """
    _check_monic(p, "wdr")
    if not q.is_monic() or q.degree != p.degree - 1:
        raise NotMonicError("wdr expects a monic q of degree n-1")
    if poly_gcd(p, q).degree > 0:
        raise NotCoprime("gcd(p, q) != 1, so H_n(q/p) is singular")
    h = series_expand(p, q)
    sym = companion_matrix(p).T @ h.matrix()
    if not sym.is_symmetric():  # pragma: no cover - would be a bug
        raise AssertionError("C_p^T H is not symmetric")
    return h, sym


def wdr_check(p: Poly, q: Poly) -> bool:
    """Check ``det(H) p(x) = det(xH - C_p^T H)`` at ``n+1`` integer points."""
    h, sym = wdr(p, q)
    hm = h.matrix()
    dh = hm.det()
    return all(dh * p(x) == (hm.scale(x) - sym).det() for x in range(p.degree + 1))


def wdr_tridiag(p: Poly, q: Poly) -> tuple[tuple[Fraction, ...], DenseMat]:
    """``D`` and the rational symmetric tridiagonal ``Td = K^{-1} C_p^T K D``.

    Here ``H_n(q/p) = K diag(D) K^T`` with ``K`` unit lower triangular, and
    ``det(x diag(D) - Td) = det(H) p(x)``.  ``q`` need not be monic.
    """
    ldl = ldlt_decompose(series_expand(p, q).matrix())
    k = ldl.L
    td = lower_tri_inverse(k) @ companion_matrix(p).T @ k @ DenseMat.diag(ldl.D)
    return ldl.D, td


def hankel_ldlt(p: Poly, q: Poly) -> UnitLDL:
    return ldlt_decompose(series_expand(p, q).matrix())


def dual_q_tilde(p: Poly, q: Poly) -> Poly:
    """Monic polynomial read off the last row of ``L^{-1}`` (``H_n(q/p) = L D L^T``)."""
    ldl = hankel_ldlt(p, q)
    last = lower_tri_inverse(ldl.L).row(p.degree - 1)
    return Poly(last).monic()


def duality_check(p: Poly, q: Poly) -> bool:
    """Whether ``Td(p, q~)`` is exactly the dual of ``Td(p, q)``."""
    s = srems_compute(p, q)
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    qt = dual_q_tilde(p, q)
    st = srems_compute(p, qt)
    if st.breakdown is not None:
        return False
    return tridiag_from_srems(st) == dual(tridiag_from_srems(s))


def hankel_signature(h: HankelSeq) -> int:
    """Signature of ``H_n`` from the pivot signs; raises ``ZeroPivot`` on a vanishing minor."""
    return ldlt_decompose(h.matrix()).signature()


def principal_minors(h: HankelSeq) -> tuple[Fraction, ...]:
    """``det H_1, ..., det H_n`` computed directly (no pivot bookkeeping)."""
    m = h.matrix()
    return tuple(
        DenseMat.from_rows([m.row(i)[:k] for i in range(k)]).det() for k in range(1, h.n + 1)
    )


def hankel_tridiag(p: Poly, q: Poly) -> SurdTridiag:
    """Symmetric tridiagonal representation built from ``H_n(q/p) = K J K^T``.

    The matrix ``K^{-1} C_p^T K J`` has its first signature entry equal to
    ``sign(s_0)``; it is returned mirrored so that, as for
    :func:`tridiag.surd_view`, the last entry of ``J`` is ``+1`` when ``q`` is
    monic.  Radicands are ``|D_{k+1} / D_k|`` in coupling order.
    """
    n = p.degree
    ldl = hankel_ldlt(p, q)
    d = ldl.D
    t = lower_tri_inverse(ldl.L) @ companion_matrix(p).T @ ldl.L
    jh = [sign(v) for v in d]
    diag_h = [t[i, i] * jh[i] for i in range(n)]
    off_h = [(jh[i + 1], abs(d[i + 1] / d[i])) for i in range(n - 1)]
    # off_h[i] couples rows i, i+1 of the unmirrored matrix = coupling i+1 after mirroring
    return SurdTridiag(tuple(diag_h[::-1]), tuple(off_h), tuple(jh[::-1]))
