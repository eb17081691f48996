"""Exact tridiagonal representations of signed remainder sequences.

Orientation: ``alphas[0]`` is the bottom-right diagonal entry and
``couplings[0]`` the bottom-right 2x2 coupling, so reading a
:class:`TridiagRep` front to back walks the displayed matrix bottom-up.
The exact matrix form (:func:`canonical_matrix`) has ones on the
subdiagonal and ``c_k = eps_k * beta_k^2`` on the superdiagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_core import DenseMat, Poly, rat_to_str, sign
from .srems import DegreeBreakdown, SignSeq, SremSeq

X = Poly.x()


@dataclass(frozen=True)
class TridiagRep:
    alphas: tuple[Fraction, ...]
    couplings: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        if len(self.couplings) != max(len(self.alphas) - 1, 0):
            raise ValueError("need n alphas and n-1 couplings")
        for e, b in self.couplings:
            if e not in (-1, 1) or not b > 0:
                raise ValueError("couplings must be (+-1, positive beta^2)")

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def products(self) -> tuple[Fraction, ...]:
        return tuple(e * b for e, b in self.couplings)

    @property
    def epsilons(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.couplings)

    @property
    def beta_sqs(self) -> tuple[Fraction, ...]:
        return tuple(b for _, b in self.couplings)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alphas": [rat_to_str(a) for a in self.alphas],
            "couplings": [{"eps": e, "beta_sq": rat_to_str(b)} for e, b in self.couplings],
        }


@dataclass(frozen=True)
class SurdTridiag:
    """Symmetric tridiagonal matrix ``S`` with a signature ``J``.

    ``diag`` and ``J`` run top to bottom.  ``offdiag[k-1] = (sign, radicand)``
    is the entry ``sign*sqrt(radicand)`` coupling rows ``n-1-k`` and ``n-k``
    (0-based), i.e. the same bottom-up order as ``TridiagRep.couplings``.
    The represented polynomial is ``det(J) det(xJ - S)``.
    """

    diag: tuple[Fraction, ...]
    offdiag: tuple[tuple[int, Fraction], ...]
    J: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.diag)

    @property
    def radicands(self) -> tuple[Fraction, ...]:
        return tuple(r for _, r in self.offdiag)

    def radicands_top_down(self) -> tuple[Fraction, ...]:
        return self.radicands[::-1]

    def signature(self) -> int:
        return sum(self.J)

    def char_poly(self) -> Poly:
        return pencil_char_poly(self.diag, self.radicands_top_down(), self.J)

    def mirror(self) -> "SurdTridiag":
        """Conjugation by the anti-identity: reverses the basis order."""
        return SurdTridiag(self.diag[::-1], self.offdiag[::-1], self.J[::-1])

    def float_rows(self) -> list[list[float]]:
        """Display-only floating rendering of ``S``."""
        n = self.n
        rows = [[0.0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = float(self.diag[i])
        for k, (s, r) in enumerate(self.offdiag, start=1):
            i = n - 1 - k
            v = s * math.sqrt(r)
            rows[i][i + 1] = rows[i + 1][i] = v
        return rows

    def to_json(self, approx: bool = False) -> dict:
        out = {
            "diag": [rat_to_str(d) for d in self.diag],
            "offdiag_signs": [s for s, _ in self.offdiag],
            "offdiag_radicands": [rat_to_str(r) for r in self.radicands],
            "J": list(self.J),
        }
        if approx:
            out["approx_matrix"] = [[float(f"{v:.12g}") for v in row] for row in self.float_rows()]
        return out


def pencil_char_poly(diag: Sequence, radicands_top_down: Sequence, J: Sequence[int]) -> Poly:
    """``det(J) det(xJ - S)`` for symmetric tridiagonal ``S`` given by its squared off-diagonals.

    Expands the determinant top-down; only the squares of the off-diagonal
    entries enter, so the result is exact for surd entries.
    """
    n = len(diag)
    prev, cur = Poly([1]), Poly([1])
    for i in range(n):
        nxt = Poly([-diag[i], J[i]]) * cur
        if i > 0:
            nxt = nxt - prev.scale(radicands_top_down[i - 1])
        prev, cur = cur, nxt
    det_j = 1
    for j in J:
        det_j *= j
    return cur.scale(det_j)


def tridiag_from_srems(s: SremSeq) -> TridiagRep:
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    return TridiagRep(tuple(s.alphas), tuple(zip(s.epsilons, s.beta_sqs)))


def char_polys_from_data(alphas: Sequence, products: Sequence) -> list[Poly]:
    """``(delta_0, ..., delta_n)`` from ``delta_k = (x - alpha_{k+1}) delta_{k+1} - c_{k+1} delta_{k+2}``.

    Couplings may be zero here, unlike in :class:`TridiagRep`.
    """
    n = len(alphas)
    deltas = [Poly([0])] * (n + 1)
    deltas[n] = Poly([1])
    if n == 0:
        return deltas
    deltas[n - 1] = X - alphas[n - 1]
    for k in range(n - 2, -1, -1):
        deltas[k] = (X - alphas[k]) * deltas[k + 1] - deltas[k + 2].scale(products[k])
    return deltas


def char_polys(t: TridiagRep) -> list[Poly]:
    """Characteristic polynomials of the leading principal blocks.

    ``delta_{n-k} = det(x Id_k - Td_k)``; ``delta_0`` is the full one and
    ``delta_n = 1``.
    """
    return char_polys_from_data(t.alphas, t.products)


def canonical_matrix(t: TridiagRep) -> DenseMat:
    n = t.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = t.alphas[n - 1 - i]
    for k, c in enumerate(t.products, start=1):
        i = n - 1 - k
        rows[i][i + 1] = c
        rows[i + 1][i] = Fraction(1)
    return DenseMat.from_rows(rows)


def dual(t: TridiagRep) -> TridiagRep:
    """Conjugation by the anti-identity: both sequences reversed."""
    return TridiagRep(t.alphas[::-1], t.couplings[::-1])


def build_L(t: TridiagRep) -> DenseMat:
    """Lower triangular ``L`` with ``M(t) L = L C_p^T``, ``p = delta_0``.

    Row ``j`` of ``L`` holds the coefficients of ``c_1...c_{n-1-j} * delta_{n-j}``,
    so the top-left entry is ``c_1 ... c_{n-1}``.
    """
    n = t.n
    deltas = char_polys(t)
    prods = t.products
    rows = []
    for j in range(n):
        scale = Fraction(1)
        for c in prods[: n - 1 - j]:
            scale *= c
        poly = deltas[n - j].scale(scale)
        rows.append([poly.coeffs[i] if i <= poly.degree else Fraction(0) for i in range(n)])
    return DenseMat.from_rows(rows)


def thetas(epsilons: Sequence[int]) -> tuple[int, ...]:
    """``theta_k = eps_k theta_{k-1}`` with ``theta_0 = 1``; returns ``theta_1..theta_{n-1}``."""
    out, th = [], 1
    for e in epsilons:
        th *= e
        out.append(th)
    return tuple(out)


def surd_view(t: TridiagRep) -> SurdTridiag:
    """Symmetric form ``S`` and signature ``J = diag(theta_{n-1}, ..., theta_1, 1)``.

    ``S J`` is diagonally similar to the canonical matrix; the coupling ``k``
    carries the sign ``theta_k``.
    """
    n = t.n
    th = thetas(t.epsilons)
    J = tuple(reversed((1,) + th))
    diag = tuple(t.alphas[n - 1 - i] * J[i] for i in range(n))
    offdiag = tuple((th[k], b) for k, (_, b) in enumerate(t.couplings))
    return SurdTridiag(diag, offdiag, J)


def tridiag_from_symmetric(sym: SurdTridiag) -> TridiagRep:
    """Canonical representation of ``S J`` (requires nonzero couplings)."""
    n = sym.n
    J = sym.J
    alphas = tuple(sym.diag[n - 1 - k] * J[n - 1 - k] for k in range(n))
    couplings = tuple(
        (J[n - 1 - k] * J[n - k], r) for k, r in enumerate(sym.radicands, start=1)
    )
    return TridiagRep(alphas, couplings)


def split_blocks(
    diag: Sequence, couplings: Sequence[tuple[int, Fraction]], J: Sequence[int]
) -> list[tuple[TridiagRep, SignSeq]]:
    """Split at zero couplings into a direct sum of blocks.

    ``diag`` (the canonical diagonal, i.e. the alphas) and ``couplings``
    follow the :class:`TridiagRep` orientation (bottom-up); ``J`` is the
    signature diagonal top to bottom.  A zero coupling ``k`` needs
    ``J[n-1-k] = +1``, so every block keeps a ``+1`` as its last signature
    entry.  Blocks are returned top to bottom.
    """
    n = len(diag)
    if len(couplings) != n - 1 or len(J) != n:
        raise ValueError("size mismatch")
    cuts = []
    for k, (e, b) in enumerate(couplings, start=1):
        if b == 0:
            if J[n - 1 - k] != 1:
                raise ValueError(f"zero coupling {k} sits on a -1 signature entry")
            cuts.append(k)
        elif b < 0 or e not in (-1, 1):
            raise ValueError("couplings must be (+-1, beta^2 >= 0)")
        elif e != J[n - 1 - k] * J[n - k]:
            raise ValueError(f"coupling {k}: eps disagrees with the signature")
    bounds = [0] + cuts + [n]
    blocks = []
    for lo, hi in zip(bounds, bounds[1:]):
        # alpha indices lo..hi-1 (bottom-up); couplings lo+1..hi-1
        rep = TridiagRep(tuple(diag[lo:hi]), tuple(couplings[lo:hi - 1]))
        sig = SignSeq(tuple(J[n - hi:n - lo]))
        blocks.append((rep, sig))
    return blocks[::-1]
