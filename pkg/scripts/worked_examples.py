"""Recompute the two worked examples and print every exact intermediate."""

from fractions import Fraction as F

from tridet.detrep import detrep_from_q, interval_family_scan
from tridet.exact_core import Poly, format_poly, ldlt_decompose, rat_to_str
from tridet.hankel import hankel_tridiag, newton_sums, wdr_tridiag


def show(rows):
    cells = [[rat_to_str(v) for v in r] for r in rows]
    w = max(len(c) for r in cells for c in r)
    for r in cells:
        print("   ", "  ".join(c.rjust(w) for c in r))


def cubic_family():
    for s, t in [(-1, 0), (-1, 1), (1, 1), (-3, 1)]:
        p = Poly([t, s, 0, 1])
        disc = -4 * s**3 - 27 * t**2
        h = newton_sums(p).matrix()
        ldl = ldlt_decompose(h)
        d, td = wdr_tridiag(p, p.derivative())
        print(f"p = {format_poly(p)}   discriminant {disc}   signature {ldl.signature()}")
        print("  H(p'/p):")
        show(h.to_rows())
        print("  K:")
        show(ldl.L.to_rows())
        print("  D:", ", ".join(rat_to_str(v) for v in d))
        print("  Td:")
        show(td.to_rows())


def quintic():
    p = Poly.from_roots([-2, -1, 0, 1, 2])
    print(f"p = {format_poly(p)}")
    print("  N(p'/p):")
    show(newton_sums(p).matrix().to_rows())
    ht = hankel_tridiag(p, p.derivative().scale(F(1, 5))).mirror()
    print("  squared off-diagonals, top-down:", ", ".join(map(rat_to_str, ht.radicands_top_down())))

    def q_a(a):
        return Poly.from_roots([a, F(-3, 2), F(-1, 2), F(1, 2)])

    grid = [F(k, 4) for k in range(-6, 13)]
    print("  a       pivots of H(q_a/p)")
    for a, e in zip(grid, interval_family_scan(p, [q_a(a) for a in grid])):
        piv = ", ".join(rat_to_str(v) for v in e.pivots)
        tag = "positive definite" if e.positive_definite() else (
            f"breakdown at {e.breakdown}" if e.breakdown else "indefinite")
        print(f"  {rat_to_str(a):>5}   {piv}   [{tag}]")
    rep = detrep_from_q(p, q_a(F(3, 2)))
    print("  a = 3/2, squared off-diagonals in coupling order:",
          ", ".join(map(rat_to_str, rep.radicands)))


if __name__ == "__main__":
    cubic_family()
    print()
    quintic()
