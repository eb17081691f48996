"""Tridiagonal determinantal representations ``p = det(J) det(xJ - Td)``.

Construction: isolate the real roots of ``p``, pick a monic ``q`` of degree
``n-1`` whose real roots interlace them, and read ``(J, Td)`` off the signed
remainder sequence of ``(p, q)``.  Then ``sgn(J)`` equals the number of real
roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Optional, Sequence

from .exact_core import (
    NotMonicError,
    Poly,
    ZeroPivot,
    cauchy_bound,
    ldlt_decompose,
    poly_divrem,
    poly_gcd,
    rat_to_str,
)
from .hankel import series_expand
from .srems import (
    DegreeBreakdown,
    NotSquarefree,
    classical_remainders,
    srems_compute,
)
from .tridiag import pencil_char_poly, surd_view, tridiag_from_srems

MAX_ATTEMPTS = 32


class RetryExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class IsolationList:
    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __len__(self):
        return len(self.intervals)

    def to_json(self) -> list[list[str]]:
        return [[rat_to_str(lo), rat_to_str(hi)] for lo, hi in self.intervals]


@dataclass(frozen=True)
class DetRep:
    """``p(x) = det(J) det(xJ - Td)`` with ``Td`` symmetric tridiagonal.

    ``J`` and ``diag`` run top to bottom.  ``offdiag`` and ``couplings`` are in
    coupling order: entry ``k-1`` couples rows ``n-1-k`` and ``n-k``.  The
    off-diagonal entry is ``sign*sqrt(radicand)``; a zero radicand marks a
    direct-sum split.
    """

    J: tuple[int, ...]
    diag: tuple[Fraction, ...]
    offdiag: tuple[tuple[int, Fraction], ...]
    couplings: tuple[tuple[int, Fraction], ...]
    p: Poly

    @property
    def n(self) -> int:
        return len(self.J)

    @property
    def sgnJ(self) -> int:
        return sum(self.J)

    @property
    def radicands(self) -> tuple[Fraction, ...]:
        return tuple(r for _, r in self.offdiag)

    def radicands_top_down(self) -> tuple[Fraction, ...]:
        return self.radicands[::-1]

    def char_poly(self) -> Poly:
        return pencil_char_poly(self.diag, self.radicands_top_down(), self.J)

    def to_json(self) -> dict:
        return {
            "J": list(self.J),
            "diag": [rat_to_str(d) for d in self.diag],
            "offdiag_radicands": [rat_to_str(r) for r in self.radicands],
            "couplings": [{"eps": e, "beta_sq": rat_to_str(b)} for e, b in self.couplings],
            "p": self.p.to_json(),
            "sgnJ": self.sgnJ,
        }


def _require_squarefree(p: Poly) -> None:
    if p.degree >= 1 and poly_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree("p has a multiple root")


def _sturm_counter(p: Poly):
    seq = classical_remainders(p, p.derivative())

    def variations(x: Fraction) -> int:
        vals = [v for v in (s(x) for s in seq) if v != 0]
        return sum(1 for a, b in zip(vals, vals[1:]) if (a > 0) != (b > 0))

    return lambda lo, hi: variations(lo) - variations(hi)


def isolate_real_roots(p: Poly) -> IsolationList:
    """Disjoint open intervals with rational non-root endpoints, one per real root.

    Bisects ``(-B, B)``.  When a midpoint is itself a root, the root gets a
    symmetric interval around it, halved until it isolates.
    """
    if not p.is_monic():
        raise NotMonicError("isolate_real_roots expects a monic polynomial")
    _require_squarefree(p)
    if p.degree < 1:
        return IsolationList(())
    n_roots = _sturm_counter(p)
    bound = cauchy_bound(p)
    found: list[tuple[Fraction, Fraction]] = []
    todo = [(-bound, bound, n_roots(-bound, bound))]
    while todo:
        lo, hi, c = todo.pop()
        if c == 0:
            continue
        if c == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p(mid) != 0:
            left = n_roots(lo, mid)
            todo += [(lo, mid, left), (mid, hi, c - left)]
            continue
        delta = (hi - lo) / 4
        while True:
            a, b = mid - delta, mid + delta
            if p(a) != 0 and p(b) != 0 and n_roots(a, b) == 1:
                break
            delta /= 2
        left = n_roots(lo, a)
        found.append((a, b))
        todo += [(lo, a, left), (b, hi, c - 1 - left)]
    return IsolationList(tuple(sorted(found)))


def squarefree_integers():
    """2, 3, 5, 6, 7, 10, 11, ..."""
    for k in count(2):
        if all(k % (d * d) for d in range(2, int(k**0.5) + 1)):
            yield k


def filler_constant(seed: int) -> int:
    for i, c in enumerate(squarefree_integers()):
        if i == seed:
            return c
    raise AssertionError("unreachable")


def interlacing_q(p: Poly, isolation: IsolationList, seed: int) -> Poly:
    """Monic ``q`` of degree ``n-1`` with ``s-1`` real roots interlacing those of ``p``.

    The interlacing roots are the midpoints of the gaps between consecutive
    isolating intervals; the remaining degree is filled by ``(x^2 + c)^m``
    with ``c`` the ``seed``-th square-free integer.  Without real roots the
    degree of ``q`` is odd, so ``q`` gets the single real root 0.
    """
    n = p.degree
    iv = isolation.intervals
    ys = [(h1 + l2) / 2 for (_, h1), (l2, _) in zip(iv, iv[1:])]
    if not iv:
        ys = [Fraction(0)]
    rest = n - 1 - len(ys)
    if rest < 0 or rest % 2:
        raise AssertionError("real-root count parity does not match the degree")
    c = filler_constant(seed)
    return Poly.from_roots(ys) * Poly([c, 0, 1]) ** (rest // 2)


def detrep_from_q(p: Poly, q: Poly) -> DetRep:
    """Representation read off ``SRemS(p, q)``; raises on degree breakdown."""
    s = srems_compute(p, q)
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    t = tridiag_from_srems(s)
    sv = surd_view(t)
    return DetRep(sv.J, sv.diag, sv.offdiag, t.couplings, p)


def direct_sum(top: DetRep, bottom: DetRep) -> DetRep:
    """Block-diagonal assembly joined by a zero coupling (``top`` keeps its +1 last entry)."""
    if top.J[-1] != 1:
        raise ValueError("the upper block must end with a +1 signature entry")
    zero = (1, Fraction(0))
    return DetRep(
        top.J + bottom.J,
        top.diag + bottom.diag,
        bottom.offdiag + (zero,) + top.offdiag,
        bottom.couplings + (zero,) + top.couplings,
        top.p * bottom.p,
    )


def _build_squarefree(p: Poly, seed: int) -> DetRep:
    iso = isolate_real_roots(p)
    for attempt in range(MAX_ATTEMPTS):
        q = interlacing_q(p, iso, seed + attempt)
        if poly_gcd(p, q).degree > 0:
            continue
        try:
            rep = detrep_from_q(p, q)
        except DegreeBreakdown:
            continue
        if rep.sgnJ != len(iso):  # pragma: no cover - would contradict Sturm
            raise AssertionError("signature differs from the real-root count")
        return rep
    raise RetryExhausted(f"no breakdown-free q after {MAX_ATTEMPTS} attempts")


def detrep_build(p: Poly, seed: int = 0) -> DetRep:
    """Representation with ``sgn(J)`` equal to the number of real roots of ``p``.

    Multiple roots are split off through ``gcd(p, p')`` and recombined as a
    direct sum, so roots are then counted with multiplicity.
    """
    if not p.is_monic() or p.degree < 1:
        raise NotMonicError("detrep_build expects a monic polynomial of degree >= 1")
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return _build_squarefree(p, seed)
    head = _build_squarefree(poly_divrem(p, g)[0], seed)
    return direct_sum(head, detrep_build(g, seed))


def lower_bound_check(rep: DetRep, oracle_count: int) -> bool:
    """Whether the real-root count ``oracle_count`` is at least ``sgn(J)``."""
    return oracle_count >= rep.sgnJ


@dataclass(frozen=True)
class ScanEntry:
    q: Poly
    pivots: tuple[Fraction, ...]
    breakdown: Optional[int] = None

    @property
    def D(self) -> Optional[tuple[Fraction, ...]]:
        return None if self.breakdown is not None else self.pivots

    def positive_definite(self) -> bool:
        return self.breakdown is None and all(d > 0 for d in self.pivots)


def interval_family_scan(p: Poly, q_family: Sequence[Poly]) -> list[ScanEntry]:
    """LDL^T pivots of ``H(q/p)`` for each ``q``; breakdowns keep the pivots found so far."""
    out = []
    for q in q_family:
        try:
            d = ldlt_decompose(series_expand(p, q).matrix()).D
            out.append(ScanEntry(q, d))
        except ZeroPivot as exc:
            out.append(ScanEntry(q, exc.pivots, exc.index))
    return out
