"""Exact integer polynomials and the polynomial families used for snake graphs.

All polynomials are dense, lowest degree first, with Python integers as
coefficients.  The indeterminate is written ``x`` (``y`` for Chebyshev
polynomials, which live in the variable ``y`` with ``x = 2y + 3``).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients.

    ``IntPoly([c0, c1, c2])`` is ``c0 + c1*x + c2*x**2``.  Trailing zeros are
    stripped on construction, so the zero polynomial has no coefficients and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, root: int) -> "IntPoly":
        """The monic polynomial ``x - root``."""
        return cls([-root, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        return exact_div(self, self._coerce(other))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation ------------------------------------------------------

    def __call__(self, value):
        """Evaluate by Horner's rule.

        Integers, fractions and floats evaluate to numbers; an ``IntPoly``
        argument composes.
        """
        if isinstance(value, IntPoly):
            return compose(self, value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def substitute_square(self) -> "IntPoly":
        """``p(x) -> p(t**2)``, returned as a polynomial in ``t``."""
        out = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[2 * i] = c
        return IntPoly(out)

    # -- rendering -------------------------------------------------------

    def to_text(self, var: str = "x") -> str:
        """Descending-power text, e.g. ``x^4-12x^3+50x^2-84x+46``."""
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                mono = var if power == 1 else f"{var}^{power}"
                body = mono if mag == 1 else f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "IntPoly":
        return cls(int(c) for c in data)

    def __repr__(self):
        return f"IntPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


X = IntPoly.x()
ONE = IntPoly.const(1)
ZERO = IntPoly()


def add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def eval_at_integer(p: IntPoly, value: int) -> int:
    return p(int(value))


def eval_at_float(p: IntPoly, value: float) -> float:
    return float(p(float(value)))


def compose(p: IntPoly, q: IntPoly) -> IntPoly:
    """``p(q(x))`` by Horner's rule in the polynomial ring."""
    acc = IntPoly()
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


def exact_div(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Polynomial long division over the integers.

    Returns ``(quotient, remainder)`` with ``p = quotient*d + remainder`` and
    ``deg remainder < deg d``.  Raises ``ZeroDivisionError`` for ``d == 0``
    and ``ValueError`` when a quotient coefficient is not an integer (which
    cannot happen for monic ``d``).
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dd, lead = d.degree, d.lead
    quot = [0] * max(len(rem) - dd, 0)
    for shift in range(len(rem) - 1 - dd, -1, -1):
        c = rem[shift + dd]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ValueError(f"quotient coefficient {c}/{lead} is not an integer")
        quot[shift] = q
        for i, dc in enumerate(d.coeffs):
            rem[shift + i] -= q * dc
    return IntPoly(quot), IntPoly(rem)


# ---------------------------------------------------------------------------
# Tridiagonal characteristic polynomials
# ---------------------------------------------------------------------------


def tridiag_principal_charpolys(diagonal: Sequence[int]) -> list[IntPoly]:
    """Characteristic polynomials of all leading principal submatrices.

    For the tridiagonal matrix with the given diagonal and ones on the sub-
    and super-diagonal, returns ``[chi_0, chi_1, ..., chi_n]`` where
    ``chi_0 = 1`` and ``chi_{k+1} = (x - e_k) chi_k - chi_{k-1}``.
    """
    polys = [ONE]
    prev = ZERO
    for e in diagonal:
        nxt = IntPoly.linear(e) * polys[-1] - prev
        prev = polys[-1]
        polys.append(nxt)
    return polys


def tridiag_charpoly(diagonal: Sequence[int]) -> IntPoly:
    """Monic characteristic polynomial of the unit tridiagonal matrix.

    The empty diagonal gives the constant polynomial 1.
    """
    return tridiag_principal_charpolys(diagonal)[-1]


def tridiag_matrix(diagonal: Sequence[int], off: int = 1) -> list[list[int]]:
    n = len(diagonal)
    rows = [[0] * n for _ in range(n)]
    for i, e in enumerate(diagonal):
        rows[i][i] = int(e)
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = off
    return rows


def charpoly_exact(matrix) -> IntPoly:
    """Exact characteristic polynomial ``det(x I - M)`` of a square matrix.

    Uses Berkowitz's algorithm, which needs only ring operations, so integer
    input never leaves the integers.  Accepts an ``IntMatrix`` or a sequence
    of rows.
    """
    rows = [list(r) for r in getattr(matrix, "rows", matrix)]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("charpoly_exact needs a square matrix")
    if n == 0:
        return ONE
    # vect holds the coefficients of det(x I - M_k), highest degree first,
    # for the leading k x k block M_k.
    vect = [1, -rows[0][0]]
    for k in range(1, n):
        # Partition the leading (k+1)x(k+1) block as [[A, R], [C, a]].
        R = [rows[i][k] for i in range(k)]
        C = [rows[k][j] for j in range(k)]
        a = rows[k][k]
        # Toeplitz column: 1, -a, -C R, -C A R, -C A^2 R, ...
        col = [1, -a]
        AR = R[:]
        for _ in range(k):
            col.append(-sum(C[j] * AR[j] for j in range(k)))
            AR = [sum(rows[i][j] * AR[j] for j in range(k)) for i in range(k)]
        # new = T * vect with T lower-triangular Toeplitz of size (k+2)x(k+1).
        new = []
        for i in range(k + 2):
            s = 0
            for j in range(min(i, k) + 1):
                s += col[i - j] * vect[j]
            new.append(s)
        vect = new
    return IntPoly(reversed(vect))


# ---------------------------------------------------------------------------
# Chebyshev and Fibonacci product polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> IntPoly:
    """Chebyshev polynomial of the first kind in ``y``."""
    if n < 0:
        raise ValueError("chebyshev_T is defined for n >= 0")
    if n == 0:
        return ONE
    if n == 1:
        return X
    return 2 * X * chebyshev_T(n - 1) - chebyshev_T(n - 2)


@lru_cache(maxsize=None)
def chebyshev_U(n: int) -> IntPoly:
    """Chebyshev polynomial of the second kind in ``y``; ``U_{-1} = 0``."""
    if n < -1:
        raise ValueError("chebyshev_U is defined for n >= -1")
    if n == -1:
        return ZERO
    if n == 0:
        return ONE
    return 2 * X * chebyshev_U(n - 1) - chebyshev_U(n - 2)


@lru_cache(maxsize=None)
def fib_poly_P(n: int) -> IntPoly:
    """Fibonacci product polynomial P_n: diagonal (2, 3, 3, ...)."""
    if n < 0:
        raise ValueError("fib_poly_P is defined for n >= 0")
    if n == 0:
        return ONE
    if n == 1:
        return IntPoly.linear(2)
    return IntPoly.linear(3) * fib_poly_P(n - 1) - fib_poly_P(n - 2)


@lru_cache(maxsize=None)
def fib_poly_Q(n: int) -> IntPoly:
    """Fibonacci product polynomial Q_n: diagonal (3, 3, ...); ``Q_{-1} = 0``."""
    if n < -1:
        raise ValueError("fib_poly_Q is defined for n >= -1")
    if n == -1:
        return ZERO
    if n == 0:
        return ONE
    return IntPoly.linear(3) * fib_poly_Q(n - 1) - fib_poly_Q(n - 2)


def fib_roots(family: str, n: int) -> list[float]:
    """Closed-form roots of ``P_n`` or ``Q_n``, in decreasing order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if family == "P":
        denom = 2 * n + 1
    elif family == "Q":
        denom = 2 * (n + 1)
    else:
        raise ValueError(f"unknown family {family!r}; expected 'P' or 'Q'")
    return [4 * math.cos(math.pi * l / denom) ** 2 + 1 for l in range(1, n + 1)]


def horizontal_eigenvalues(n: int) -> list[float]:
    """Eigenvalues ``4cos^2(l pi/(n+2)) + 1``, l = 1..n+1, of BB^T for H_n."""
    return [4 * math.cos(l * math.pi / (n + 2)) ** 2 + 1 for l in range(1, n + 2)]


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("fibonacci is defined for n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# ---------------------------------------------------------------------------
# Closed forms for the char poly of BB^T
# ---------------------------------------------------------------------------


def closed_form_H(n: int) -> IntPoly:
    """Char poly of BB^T for the horizontal snake graph with ``n`` tiles."""
    if n < 1:
        raise ValueError("H_n needs n >= 1")
    r, odd = divmod(n, 2)
    if odd:
        return fib_poly_P(r + 1) ** 2
    return IntPoly.linear(1) * fib_poly_Q(r) ** 2


def closed_form_L(r: int, s: int) -> IntPoly:
    """Char poly of BB^T for the L-shaped snake: ``r`` tiles right, then ``s - 1`` up.

    The (odd, even) case is reduced to (even, odd) by reflecting the graph in
    the diagonal, which swaps the two legs.
    """
    if r < 1 or s < 1:
        raise ValueError("L-shaped snakes need r, s >= 1")
    P, Q = fib_poly_P, fib_poly_Q
    xm1 = IntPoly.linear(1)
    m, r_odd = divmod(r, 2)
    n, s_odd = divmod(s, 2)
    if not r_odd and not s_odd:
        return (Q(m + n - 1) - Q(m - 1) * Q(n - 1)) * (xm1 * Q(m + n) + P(m) * P(n))
    if r_odd and s_odd:
        return (xm1 * Q(m + n) - P(m) * P(n)) * (Q(m + n + 1) + Q(m) * Q(n))
    if not r_odd and s_odd:
        return (P(m + n) - Q(m - 1) * P(n)) * (P(m + n + 1) + P(m) * Q(n))
    return closed_form_L(s, r)


def closed_form_staircase(m: int) -> IntPoly:
    """Char poly of BB^T for the staircase ``S_{m,3}``, ``m >= 2``."""
    if m < 2:
        raise ValueError("staircase S_{m,3} needs m >= 2")
    u = (X - 3) ** 2
    Q = lambda k: compose(fib_poly_Q(k), u)  # noqa: E731
    k, odd = divmod(m, 2)
    if odd:
        return (Q(k + 1) + IntPoly.linear(1) * Q(k)) ** 2
    x2 = IntPoly.linear(2)
    return x2 * Q(k) * (x2 * Q(k) + X * Q(k - 1))


# ---------------------------------------------------------------------------
# Real roots of tridiagonal char polys
# ---------------------------------------------------------------------------


def _count_below(diagonal: Sequence[float], x: float) -> int:
    # Sturm count via the LDL^T pivots of (M - x I); off-diagonals are 1.
    count = 0
    q = 1.0
    for i, e in enumerate(diagonal):
        q = (e - x) - (1.0 / q if i else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0:
            count += 1
    return count


def tridiag_eigenvalues(diagonal: Sequence[int], tol: float = 1e-12) -> list[float]:
    """Eigenvalues of the unit tridiagonal matrix by Sturm bisection.

    The roots are simple, so each eigenvalue is isolated by bisecting on the
    eigenvalue count.  Returned in increasing order.
    """
    n = len(diagonal)
    if n == 0:
        return []
    lo = min(diagonal) - 2.0
    hi = max(diagonal) + 2.0
    roots = []
    for k in range(n):
        a, b = lo, hi
        while b - a > tol * max(1.0, abs(a), abs(b)):
            mid = 0.5 * (a + b)
            if _count_below(diagonal, mid) > k:
                b = mid
            else:
                a = mid
        roots.append(_newton_polish(diagonal, 0.5 * (a + b), a, b))
    return roots


def _newton_polish(diagonal: Sequence[float], x: float, lo: float, hi: float) -> float:
    # Bisection stalls at the resolution of the pivot recurrence; a few Newton
    # steps on the three-term recursion recover full precision.
    for _ in range(3):
        p_prev, p = 0.0, 1.0
        d_prev, d = 0.0, 0.0
        for e in diagonal:
            p_prev, p, d_prev, d = p, (x - e) * p - p_prev, d, p + (x - e) * d - d_prev
        if d == 0.0:
            break
        step = x - p / d
        if not lo - 1e-9 <= step <= hi + 1e-9:
            break
        x = step
    return x


def refine_eigenvalue(diagonal: Sequence[int], x: float, bits: int = 96) -> Fraction:
    """Narrow a floating eigenvalue to a rational within ``2**-bits`` of the true root.

    Doubles cannot do better than half an ulp, which leaves ``|chi(x)|`` near
    ``ulp * |chi'(x)|``; for steep char polys that is well above 1e-7.  Here the
    sign of the exact char poly is bisected on rationals instead.
    """
    p = tridiag_charpoly(diagonal)
    centre = Fraction(x)
    if p(centre) == 0:
        return centre
    step = Fraction(math.ulp(x) or 2.0**-1074) * 4
    while True:
        lo, hi = centre - step, centre + step
        s_lo, s_hi = p(lo), p(hi)
        if s_lo == 0:
            return lo
        if s_hi == 0:
            return hi
        if (s_lo < 0) != (s_hi < 0):
            break
        step *= 2
        if step > 1e-6:
            raise ValueError(f"no sign change of the char poly near {x}")
    neg_lo = s_lo < 0
    width = Fraction(1, 2**bits)
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            return mid
        if (v < 0) == neg_lo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
