"""Normalized signed remainder sequences, PmV, Sturm counting and Tarski queries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_core import (
    NotMonicError,
    Poly,
    ZeroPivot,
    ldlt_decompose,
    poly_divrem,
    poly_gcd,
    rat_to_str,
    sign,
)


class NotSquarefree(ValueError):
    pass


class DegreeBreakdown(ArithmeticError):
    def __init__(self, index: int, message: str | None = None):
        super().__init__(message or f"degree breakdown at step {index}")
        self.index = index


@dataclass(frozen=True)
class SignSeq:
    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs or any(s not in (-1, 1) for s in self.signs):
            raise ValueError("a sign sequence is a nonempty sequence of +-1")

    def __iter__(self):
        return iter(self.signs)

    def __len__(self):
        return len(self.signs)


@dataclass(frozen=True)
class SremSeq:
    """Output of :func:`srems_compute`.

    ``alphas[k-1]`` is the root of the k-th linear quotient; ``epsilons`` and
    ``beta_sqs`` describe the normalized remainders.  When ``breakdown`` is set,
    ``alphas`` stop at the failing step and ``nu`` is empty.
    """

    polys: tuple[Poly, ...]
    alphas: tuple[Fraction, ...]
    epsilons: tuple[int, ...]
    beta_sqs: tuple[Fraction, ...]
    nu: tuple[int, ...]
    breakdown: Optional[int] = None

    @property
    def n(self) -> int:
        return self.polys[0].degree

    def to_json(self) -> dict:
        return {
            "alphas": [rat_to_str(a) for a in self.alphas],
            "epsilons": list(self.epsilons),
            "beta_sqs": [rat_to_str(b) for b in self.beta_sqs],
            "nu": list(self.nu),
            "breakdown": self.breakdown,
        }


def srems_compute(p: Poly, q: Poly) -> SremSeq:
    """Signed remainder sequence with monic remainders.

    Each step writes ``p_k = (x - alpha) p_{k+1} + r`` and stores
    ``eps = -sign(lc r)``, ``beta^2 = |lc r|``, ``p_{k+2} = r / lc r``.
    """
    if not (p.is_monic() and q.is_monic()):
        raise NotMonicError("srems_compute expects monic p and q")
    n = p.degree
    if n < 1 or q.degree != n - 1:
        raise ValueError("need deg p = n >= 1 and deg q = n - 1")

    polys = [p, q]
    alphas: list[Fraction] = []
    eps: list[int] = []
    bsq: list[Fraction] = []
    breakdown = None
    k = 0
    while True:
        quot, rem = poly_divrem(polys[k], polys[k + 1])
        if breakdown is None:
            if quot.degree == 1:
                alphas.append(-quot.coeffs[0])
            else:
                breakdown = k
        if rem.is_zero():
            if polys[k + 1].degree > 0 and breakdown is None:
                breakdown = k
            break
        if breakdown is None and rem.degree != polys[k + 1].degree - 1:
            breakdown = k
        lc = rem.lc
        eps.append(-sign(lc))
        bsq.append(abs(lc))
        polys.append(rem.monic())
        k += 1

    nu: tuple[int, ...] = ()
    if breakdown is None:
        nu = _nu_from_epsilons(eps)
    return SremSeq(tuple(polys), tuple(alphas), tuple(eps), tuple(bsq), nu, breakdown)


def _nu_from_epsilons(eps: Sequence[int]) -> tuple[int, ...]:
    nu = [1, 1]
    for k, e in enumerate(eps, start=1):
        nu.append(nu[k - 1] * e)
    return tuple(nu)


def sign_sequence(s: SremSeq) -> SignSeq:
    """Leading-coefficient signs ``nu_0 = nu_1 = 1``, ``nu_{k+1} = nu_{k-1} eps_k``."""
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    return SignSeq(_nu_from_epsilons(s.epsilons))


def pmv(nu) -> int:
    """Permanences minus variations of a +-1 sequence."""
    signs = tuple(nu)
    if len(signs) < 2:
        raise ValueError("PmV needs at least two signs")
    return sum(a * b for a, b in zip(signs, signs[1:]))


def classical_remainders(p: Poly, q: Poly) -> list[Poly]:
    """Unnormalized signed remainder sequence ``S_{k+2} = -rem(S_k, S_{k+1})``."""
    seq = [p, q]
    while not seq[-1].is_zero():
        seq.append(-poly_divrem(seq[-2], seq[-1])[1])
    return seq[:-1]


def _variations(values) -> int:
    nz = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def _variations_at_infinity(seq: Sequence[Poly], positive: bool) -> int:
    vals = [c.lc if positive or c.degree % 2 == 0 else -c.lc for c in seq]
    return _variations(vals)


def classical_sturm_query(p: Poly, a, b) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(a, b)``."""
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p(a) == 0 or p(b) == 0:
        raise ValueError("interval endpoint is a root")
    seq = classical_remainders(p, p.derivative())
    return _variations(s(a) for s in seq) - _variations(s(b) for s in seq)


def sturm_count(p: Poly) -> int:
    """Number of distinct real roots as PmV of ``SRemS(p, p'/n)``."""
    if not p.is_monic():
        raise NotMonicError("sturm_count expects a monic polynomial")
    n = p.degree
    if n < 1:
        return 0
    dp = p.derivative()
    if poly_gcd(p, dp).degree > 0:
        raise NotSquarefree("p has a multiple root")
    s = srems_compute(p, dp.scale(Fraction(1, n)))
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    return pmv(s.nu)


def tarski_query(r: Poly, p: Poly) -> int:
    """``#{p=0, r>0} - #{p=0, r<0}`` via the signature of ``H_n(q/p)``, ``q = p'r mod p``.

    Falls back to the Cauchy index of ``q/p`` (sign variations of the classical
    remainder chain at -inf and +inf) when a leading minor vanishes, which
    covers ``r`` vanishing at some roots of ``p``.
    """
    from .hankel import series_expand

    if not p.is_monic() or p.degree < 1:
        raise NotMonicError("tarski_query expects a monic p of degree >= 1")
    dp = p.derivative()
    if poly_gcd(p, dp).degree > 0:
        raise NotSquarefree("p has a multiple root")
    q = poly_divrem(dp * r, p)[1]
    if q.is_zero():
        return 0
    try:
        return ldlt_decompose(series_expand(p, q).matrix()).signature()
    except ZeroPivot:
        seq = classical_remainders(p, q)
        return _variations_at_infinity(seq, False) - _variations_at_infinity(seq, True)
