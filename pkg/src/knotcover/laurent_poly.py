"""
Exact integer Laurent polynomials and the polynomial toolbox built on them:
Alexander-polynomial symmetrization, cyclotomic polynomials, and big-integer
resultants.

A Laurent polynomial is stored as a minimum degree plus a dense coefficient
tuple, so t - 1 + t^-1 is LaurentPoly(-1, (1, -1, 1)).  An ordinary integer
polynomial is an IntPoly, a dense ascending coefficient tuple.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import re
from fractions import Fraction
from typing import Sequence


class NotSymmetrizable(ValueError):
    """No unit multiple of the polynomial is invariant under t -> 1/t."""


class NotAKnotPolynomial(ValueError):
    """The symmetrized candidate does not take the value 1 at t = 1."""


class ZeroArgument(ZeroDivisionError):
    """Evaluation at 0 of a polynomial with genuine negative powers."""


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class LaurentPoly:
    """
    A Laurent polynomial over the integers, represented by a minimum degree and
    a dense list of coefficients going up from that degree.  The zero
    polynomial is represented by min_deg 0 and an empty coefficient tuple.

    >>> LaurentPoly(-1, (1, -1, 1))
    LaurentPoly('1*t^-1 - 1 + 1*t^1')
    >>> LaurentPoly(3, (0, 0))
    LaurentPoly('0')
    >>> LaurentPoly(0, (0, 5)) == LaurentPoly(1, (5,))
    True
    """

    min_deg: int
    coeffs: tuple[int, ...]

    def __init__(self, min_deg: int, coeffs: Sequence[int]):
        # Trim leading and trailing zeros so equality is coefficientwise.
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            min_deg += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1

        if lo == hi:
            self.min_deg = 0
            self.coeffs = ()
        else:
            self.min_deg = min_deg
            self.coeffs = tuple(coeffs[lo:hi])

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly(0, (1,))

    @staticmethod
    def t(k: int = 1, c: int = 1) -> LaurentPoly:
        """The monomial c*t^k."""
        return LaurentPoly(k, (c,))

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def max_deg(self) -> int:
        """Degree of the top term, or min_deg - 1 (garbage) for zero."""
        return self.min_deg + len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        """The coefficient of t^k."""
        i = k - self.min_deg
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __repr__(self):
        return f"LaurentPoly('{self.to_text()}')"

    def __add__(self, other: int | LaurentPoly) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(0, (other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_deg, other.min_deg)
        hi = max(self.max_deg(), other.max_deg())
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_deg + i - lo] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_deg + i - lo] += c
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_deg, tuple(-c for c in self.coeffs))

    def __sub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __rsub__(self, other: int | LaurentPoly) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: int | LaurentPoly) -> LaurentPoly:
        """
        >>> (LaurentPoly(0, (-1, 1)) * LaurentPoly(0, (1, 1)))
        LaurentPoly('-1 + 1*t^2')
        >>> LaurentPoly(-1, (1, 1)) * LaurentPoly.t()
        LaurentPoly('1 + 1*t^1')
        """
        if isinstance(other, int):
            return LaurentPoly(self.min_deg, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly(0, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for (i, c), (j, d) in itertools.product(enumerate(self.coeffs), enumerate(other.coeffs)):
            out[i + j] += c * d
        return LaurentPoly(self.min_deg + other.min_deg, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if self.is_unit():
                return LaurentPoly(-self.min_deg, self.coeffs) ** (-n)
            raise ValueError("cannot invert a non-unit Laurent polynomial")
        if n == 0:
            return LaurentPoly(0, (1,))
        half = self ** (n // 2)
        return half * half if n % 2 == 0 else half * half * self

    def __truediv__(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ValueError when the division has a remainder."""
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        num, num_shift = self.as_int_poly()
        den, den_shift = other.as_int_poly()
        quo = num / den
        return LaurentPoly(num_shift - den_shift, quo.coeffs)

    def involute(self) -> LaurentPoly:
        """
        Substitute t -> 1/t.

        >>> LaurentPoly(2, (1,)).involute()
        LaurentPoly('1*t^-2')
        >>> p = LaurentPoly(-1, (1, -1, 1)); p.involute() == p
        True
        """
        return LaurentPoly(-self.max_deg(), tuple(reversed(self.coeffs)))

    def as_int_poly(self) -> tuple[IntPoly, int]:
        """
        Split off the monomial content: return (P, s) with self = t^s * P and
        P an ordinary polynomial with nonzero constant term (P = 0 for zero).
        """
        if self.is_zero():
            return IntPoly(), 0
        return IntPoly(*self.coeffs), self.min_deg

    def eval_rational(self, x: Fraction | int) -> Fraction:
        """
        Exact evaluation at a rational point.

        >>> LaurentPoly(-1, (1, -1, 1)).eval_rational(1)
        Fraction(1, 1)
        >>> LaurentPoly(-1, (-1, 3, -1)).eval_rational(-1)
        Fraction(5, 1)
        """
        x = Fraction(x)
        if x == 0:
            if self.min_deg < 0:
                raise ZeroArgument("Laurent polynomial with negative powers evaluated at 0")
            return Fraction(self.coeff(0))
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.min_deg

    def eval_complex(self, z: complex) -> complex:
        """Double-precision evaluation at a nonzero complex point."""
        z = complex(z)
        if z == 0:
            if self.min_deg < 0:
                raise ZeroArgument("Laurent polynomial with negative powers evaluated at 0")
            return complex(self.coeff(0))
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc * z ** self.min_deg

    def to_text(self) -> str:
        """
        Render in the ascending textual format, e.g. "-1*t^-1 + 3 - 1*t^1".

        >>> LaurentPoly(-1, (-1, 3, -1)).to_text()
        '-1*t^-1 + 3 - 1*t^1'
        >>> LaurentPoly(0, ()).to_text()
        '0'
        """
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs, self.min_deg):
            if c == 0:
                continue
            sign = (" + " if c > 0 else " - ") if parts else ("" if c > 0 else "-")
            term = f"{abs(c)}" if i == 0 else f"{abs(c)}*t^{i}"
            parts.append(sign + term)
        return "".join(parts)

    @staticmethod
    def from_text(text: str) -> LaurentPoly:
        """
        Parse the textual format.

        >>> LaurentPoly.from_text("-1*t^-1 + 3 - 1*t^1")
        LaurentPoly('-1*t^-1 + 3 - 1*t^1')
        >>> LaurentPoly.from_text("0")
        LaurentPoly('0')
        """
        s = text.strip()
        if s == "0":
            return LaurentPoly(0, ())
        term = re.compile(r"\s*([+-]?)\s*(\d+)(?:\s*\*\s*t\^(-?\d+))?")
        pos = 0
        poly = LaurentPoly(0, ())
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial text at: {s[pos:]!r}")
            sign, mag, exp = m.groups()
            c = -int(mag) if sign == "-" else int(mag)
            k = int(exp) if exp is not None else 0
            poly = poly + LaurentPoly(k, (c,))
            pos = m.end()
        return poly

    def to_json_obj(self) -> dict:
        """The compact JSON form, e.g. {"min_deg": -1, "coeffs": [-1, 3, -1]}."""
        return {"min_deg": self.min_deg, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json_obj(obj: dict) -> LaurentPoly:
        return LaurentPoly(int(obj["min_deg"]), [int(c) for c in obj["coeffs"]])


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class IntPoly:
    """
    An ordinary polynomial over the integers: a dense ascending coefficient
    tuple, trimmed, so IntPoly(1, 0, 1) is 1 + t^2 and IntPoly() is zero.

    >>> IntPoly(1, 0, 1)
    IntPoly('1 + 1*t^2')
    >>> IntPoly(0, 0).is_zero()
    True
    """

    coeffs: tuple[int, ...]

    def __init__(self, *coeffs: int):
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[:end])

    def deg(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def lead(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def as_laurent(self) -> LaurentPoly:
        return LaurentPoly(0, self.coeffs)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"IntPoly('{self.as_laurent().to_text()}')"

    def __add__(self, other: int | IntPoly) -> IntPoly:
        oc = (other,) if isinstance(other, int) else other.coeffs
        return IntPoly(*(a + b for a, b in itertools.zip_longest(self.coeffs, oc, fillvalue=0)))

    def __sub__(self, other: int | IntPoly) -> IntPoly:
        oc = (other,) if isinstance(other, int) else other.coeffs
        return IntPoly(*(a - b for a, b in itertools.zip_longest(self.coeffs, oc, fillvalue=0)))

    def __neg__(self) -> IntPoly:
        return IntPoly(*(-c for c in self.coeffs))

    def __mul__(self, other: int | IntPoly) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(*(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for (i, c), (j, d) in itertools.product(enumerate(self.coeffs), enumerate(other.coeffs)):
            out[i + j] += c * d
        return IntPoly(*out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """
        Quotient and remainder over the integers; every leading-term step must
        divide exactly (sufficient for the exact divisions used here).

        >>> divmod(IntPoly(-1, 0, 0, 1), IntPoly(-1, 1))
        (IntPoly('1 + 1*t^1 + 1*t^2'), IntPoly('0'))
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quo, rem = IntPoly(), self
        while not rem.is_zero() and rem.deg() >= other.deg():
            c, leftover = divmod(rem.lead(), other.lead())
            if leftover != 0:
                raise ValueError(f"{rem.lead()} is not divisible by {other.lead()}")
            shift = rem.deg() - other.deg()
            mono = IntPoly(*((0,) * shift + (c,)))
            quo, rem = quo + mono, rem - other * mono
        return quo, rem

    def __truediv__(self, other: IntPoly) -> IntPoly:
        quo, rem = divmod(self, other)
        if not rem.is_zero():
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return quo

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def cyclotomic(n: int) -> IntPoly:
        """
        The n-th cyclotomic polynomial, by exact division of t^n - 1 by the
        cyclotomic polynomials of the proper divisors of n.

        >>> IntPoly.cyclotomic(1)
        IntPoly('-1 + 1*t^1')
        >>> IntPoly.cyclotomic(12)
        IntPoly('1 - 1*t^2 + 1*t^4')
        """
        if n < 1:
            raise ValueError("cyclotomic index must be positive")
        poly = IntPoly(*((-1,) + (0,) * (n - 1) + (1,)))
        for d in (d for d in range(1, n) if n % d == 0):
            poly = poly / IntPoly.cyclotomic(d)
        return poly

    @staticmethod
    def all_ones(n: int) -> IntPoly:
        """1 + t + ... + t^(n-1), the characteristic polynomial of the
        root-lattice rotation; its roots are the nontrivial n-th roots of 1."""
        if n < 1:
            raise ValueError("need n >= 1")
        return IntPoly(*((1,) * n))


def symmetrize_alexander(p: LaurentPoly) -> LaurentPoly:
    """
    Normalize a raw Alexander polynomial: the unique unit multiple e*t^m*p
    that is invariant under t -> 1/t and takes the value 1 at t = 1.

    >>> symmetrize_alexander(LaurentPoly(0, (-1, 1, -1)))
    LaurentPoly('1*t^-1 - 1 + 1*t^1')
    >>> symmetrize_alexander(LaurentPoly(0, (1, -3, 1)))
    LaurentPoly('-1*t^-1 + 3 - 1*t^1')
    """
    if p.is_zero():
        raise NotSymmetrizable("the zero polynomial has no palindromic unit multiple")
    if tuple(reversed(p.coeffs)) != p.coeffs:
        raise NotSymmetrizable("coefficients are not palindromic up to a unit")
    span = p.min_deg + p.max_deg()
    if span % 2 != 0:
        raise NotSymmetrizable("coefficient span is odd; no centered representative exists")
    q = LaurentPoly(p.min_deg - span // 2, p.coeffs)
    value = sum(q.coeffs)
    if value == 1:
        return q
    if value == -1:
        return -q
    raise NotAKnotPolynomial(f"normalized value at t=1 is {value}, not +-1")


def _det_bareiss(rows: list[list[int]]) -> int:
    # Fraction-free elimination; all interior divisions are exact.
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly) -> int:
    """
    Resultant of two nonzero integer polynomials, as the determinant of the
    Sylvester matrix built from ascending coefficient rows with the f-rows
    first.  With this convention Res(f, g) = lc(g)^deg(f) * prod f(beta) over
    the roots beta of g, so it is the exact route to "f evaluated at all roots
    of g".

    >>> resultant(IntPoly(-2, 1), IntPoly(-3, 1))
    1
    >>> resultant(IntPoly(0, 1), IntPoly(0, 1))
    0
    >>> resultant(IntPoly(1, 0, 1), IntPoly(-1, 1))
    2
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial is not defined here")
    m, n = f.deg(), g.deg()
    size = m + n
    rows = []
    for r in range(n):
        row = [0] * size
        for i, c in enumerate(f.coeffs):
            row[r + i] = c
        rows.append(row)
    for r in range(m):
        row = [0] * size
        for i, c in enumerate(g.coeffs):
            row[r + i] = c
        rows.append(row)
    return _det_bareiss(rows)
