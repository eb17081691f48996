"""Exact rational scalars, dense univariate polynomials and dense matrices.

Everything here is immutable and works over :class:`fractions.Fraction`.
Polynomials store their coefficients in ascending degree order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction


class ZeroPivot(ArithmeticError):
    """Raised by :func:`ldlt_decompose` when a leading principal minor vanishes.

    ``index`` is 1-based (the size of the vanishing minor).  ``pivots`` holds
    the pivots computed before the failure.
    """

    def __init__(self, index: int, pivots: Sequence[Fraction] = ()):
        super().__init__(f"leading principal minor of order {index} vanishes")
        self.index = index
        self.pivots = tuple(pivots)


class NotMonicError(ValueError):
    pass


def to_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact input")
    return Fraction(value)


def rat_to_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_from_str(text: str) -> Fraction:
    num, sep, den = text.strip().partition("/")
    if sep and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if sep else 1)


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


# --------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial, coefficients in ascending degree order."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = (0,)):
        cs = [to_rat(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-to_rat(r), 1])
        return out

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0, like a nonzero constant
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic associate")
        return self.scale(1 / self.lc)

    def scale(self, c) -> "Poly":
        c = to_rat(c)
        return Poly(c * a for a in self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([i * a for i, a in enumerate(self.coeffs)][1:] or [0])

    def __call__(self, x):
        acc = Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(u + v for u, v in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        out = Poly([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        return poly_divrem(self, _as_poly(other))

    def __floordiv__(self, other) -> "Poly":
        return poly_divrem(self, _as_poly(other))[0]

    def __mod__(self, other) -> "Poly":
        return poly_divrem(self, _as_poly(other))[1]

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def to_json(self) -> list[str]:
        return [rat_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Poly":
        return cls(rat_from_str(str(c)) for c in data)


def _as_poly(v) -> Poly:
    return v if isinstance(v, Poly) else Poly([v])


def format_poly(p: Poly, var: str = "x") -> str:
    """Canonical printer, descending powers: ``x^3 - 1/3*x``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = rat_to_str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{rat_to_str(mag)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def poly_divrem(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num.coeffs)
    dd = den.degree
    inv = 1 / den.lc
    if num.degree < dd:
        return Poly([0]), num
    quot = [Fraction(0)] * (num.degree - dd + 1)
    for k in range(num.degree - dd, -1, -1):
        c = rem[k + dd] * inv
        quot[k] = c
        if c:
            for j, b in enumerate(den.coeffs):
                rem[k + j] -= c * b
    return Poly(quot), Poly(rem[:dd] or [0])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()


def poly_xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic."""
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = Poly([1]), Poly([0])
    v0, v1 = Poly([0]), Poly([1])
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    c = 1 / r0.lc
    return r0.scale(c), u0.scale(c), v0.scale(c)


def poly_invmod(a: Poly, m: Poly) -> Poly:
    """Inverse of ``a`` modulo ``m``; raises if they share a factor."""
    g, u, _ = poly_xgcd(a, m)
    if g.degree > 0:
        raise ZeroDivisionError("not invertible: common factor with the modulus")
    return poly_divrem(u, m)[1]


def squarefree_part(p: Poly) -> Poly:
    return poly_divrem(p, poly_gcd(p, p.derivative()))[0].monic()


def cauchy_bound(p: Poly) -> Fraction:
    """``1 + max |a_i|``; every root of the monic ``p`` has modulus below it."""
    if not p.is_monic() or p.degree < 1:
        raise NotMonicError("cauchy_bound expects a monic polynomial of degree >= 1")
    return 1 + max(abs(a) for a in p.coeffs[:-1])


def interpolate(xs: Sequence, ys: Sequence) -> Poly:
    """Newton interpolation through the points ``(xs[i], ys[i])``."""
    xs = [to_rat(v) for v in xs]
    table = [to_rat(v) for v in ys]
    n = len(xs)
    coef = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        coef.append(table[0])
    out = Poly([coef[-1]])
    for k in range(n - 2, -1, -1):
        out = out * Poly([-xs[k], 1]) + coef[k]
    return out


# --------------------------------------------------------------------------
# Matrices


@dataclass(frozen=True)
class DenseMat:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "DenseMat":
        rows = [list(r) for r in rows]
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), m, tuple(to_rat(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "DenseMat":
        m = n if m is None else m
        return cls(n, m, (Fraction(0),) * (n * m))

    @classmethod
    def identity(cls, n: int) -> "DenseMat":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "DenseMat":
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def anti_identity(cls, n: int) -> "DenseMat":
        return cls.from_rows([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "DenseMat":
        return DenseMat.from_rows([self.col(j) for j in range(self.cols)])

    def __matmul__(self, other: "DenseMat") -> "DenseMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = [other.col(j) for j in range(other.cols)]
        return DenseMat.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), c)), Fraction(0)) for c in cols]
             for i in range(self.rows)]
        )

    def __add__(self, other: "DenseMat") -> "DenseMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return DenseMat(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "DenseMat") -> "DenseMat":
        return self + other.scale(-1)

    def scale(self, c) -> "DenseMat":
        c = to_rat(c)
        return DenseMat(self.rows, self.cols, tuple(c * a for a in self.entries))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i)
        )

    def is_lower_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_tridiagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if abs(i - j) > 1
        )

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        a = self.to_rows()
        n = self.rows
        out = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                out = -out
            out *= a[k][k]
            for i in range(k + 1, n):
                f = a[i][k] / a[k][k]
                if f:
                    for j in range(k, n):
                        a[i][j] -= f * a[k][j]
        return out

    def rank(self) -> int:
        a = self.to_rows()
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, self.rows) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            for i in range(self.rows):
                if i != r and a[i][c] != 0:
                    f = a[i][c] / a[r][c]
                    a[i] = [u - f * v for u, v in zip(a[i], a[r])]
            r += 1
        return r

    def charpoly(self) -> Poly:
        """``det(x*Id - self)`` by the Faddeev-LeVerrier recursion."""
        n = self.rows
        coeffs = [Fraction(0)] * n + [Fraction(1)]
        m = DenseMat.zeros(n)
        ident = DenseMat.identity(n)
        for k in range(1, n + 1):
            m = self @ m + ident.scale(coeffs[n - k + 1])
            am = self @ m
            coeffs[n - k] = -sum((am[i, i] for i in range(n)), Fraction(0)) / k
        return Poly(coeffs)

    def to_json(self) -> list[list[str]]:
        return [[rat_to_str(v) for v in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> "DenseMat":
        return cls.from_rows([[rat_from_str(str(v)) for v in r] for r in data])


def poly_at_matrix(q: Poly, m: DenseMat) -> DenseMat:
    out = DenseMat.zeros(m.rows)
    ident = DenseMat.identity(m.rows)
    for c in reversed(q.coeffs):
        out = out @ m + ident.scale(c)
    return out


def companion_matrix(p: Poly) -> DenseMat:
    """Companion matrix with ones on the subdiagonal and ``-a_0..-a_{n-1}`` in the last column."""
    if p.degree < 1 or not p.is_monic():
        raise NotMonicError("companion_matrix expects a monic polynomial of degree >= 1")
    n = p.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return DenseMat.from_rows(rows)


@dataclass(frozen=True)
class UnitLDL:
    L: DenseMat
    D: tuple[Fraction, ...]

    def signature(self) -> int:
        return sum(sign(d) for d in self.D)

    def signs(self) -> tuple[int, ...]:
        return tuple(sign(d) for d in self.D)

    def minors(self) -> tuple[Fraction, ...]:
        out, acc = [], Fraction(1)
        for d in self.D:
            acc *= d
            out.append(acc)
        return tuple(out)

    def reconstruct(self) -> DenseMat:
        return self.L @ DenseMat.diag(self.D) @ self.L.T


def ldlt_decompose(h: DenseMat) -> UnitLDL:
    """``h = L diag(D) L^T`` with ``L`` unit lower triangular, no pivoting."""
    if not h.is_symmetric():
        raise ValueError("ldlt_decompose expects a symmetric matrix")
    n = h.rows
    low = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for k in range(n):
        dk = h[k, k] - sum((low[k][j] ** 2 * d[j] for j in range(k)), Fraction(0))
        if dk == 0:
            raise ZeroPivot(k + 1, d)
        d.append(dk)
        for i in range(k + 1, n):
            s = h[i, k] - sum((low[i][j] * low[k][j] * d[j] for j in range(k)), Fraction(0))
            low[i][k] = s / dk
    return UnitLDL(DenseMat.from_rows(low), tuple(d))


def lower_tri_inverse(low: DenseMat) -> DenseMat:
    if not low.is_square() or not low.is_lower_triangular():
        raise ValueError("expected a square lower triangular matrix")
    n = low.rows
    if any(low[i, i] == 0 for i in range(n)):
        raise ZeroDivisionError("zero on the diagonal")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        inv[j][j] = 1 / low[j, j]
        for i in range(j + 1, n):
            s = sum((low[i, k] * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = -s / low[i, i]
    return DenseMat.from_rows(inv)


def symmetric_signature(m: DenseMat) -> int:
    """Signature of a symmetric matrix by exact congruence diagonalization.

    Unlike the LDL^T route this needs no nonzero leading minors: a zero
    diagonal is repaired by adding a row/column pair with a nonzero
    off-diagonal entry.
    """
    if not m.is_symmetric():
        raise ValueError("symmetric_signature expects a symmetric matrix")
    a = m.to_rows()
    n = m.rows
    out = 0
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0), None
            )
            if pair is None:
                break
            i, j = pair
            # row_i += row_j and col_i += col_j; a[i][i] becomes 2*a[i][j]
            a[i] = [u + v for u, v in zip(a[i], a[j])]
            for row in a:
                row[i] += row[j]
            piv = i
        a[k], a[piv] = a[piv], a[k]
        for row in a:
            row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        out += sign(d)
        for i in range(k + 1, n):
            f = a[i][k] / d
            if f:
                a[i] = [u - f * v for u, v in zip(a[i], a[k])]
        for i in range(k + 1, n):
            a[k][i] = a[i][k] = Fraction(0)
    return out
