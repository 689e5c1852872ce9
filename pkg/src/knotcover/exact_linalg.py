"""
Exact linear algebra over the integers and over cyclotomic fields.

Integer side: big-integer determinants, Smith normal form with recorded
unimodular transforms, cokernels as abelian groups, companion matrices of
1 + t + ... + t^(N-1), and evaluation of Laurent polynomials at integer
matrices.  Cyclotomic side: arithmetic in Q(zeta_N) as polynomials reduced
modulo the N-th cyclotomic polynomial, plus dense determinants over that
field.  No floating point anywhere in this module.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Sequence

from .laurent_poly import IntPoly, LaurentPoly, _det_bareiss

Matrix = list[list[int]]


class NonSquare(ValueError):
    """A square-matrix operation was given a rectangular matrix."""


class BadRank(ValueError):
    """Companion-matrix rank parameter out of range."""


class NotUnimodular(ValueError):
    """Integer matrix inverse requested for a matrix of determinant not +-1."""


def _as_rows(a: Sequence[Sequence[int]]) -> Matrix:
    rows = [list(map(int, row)) for row in a]
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise ValueError("ragged matrix")
    return rows


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(b) != (len(a[0]) if a else 0):
        raise NonSquare("inner dimensions do not match")
    if not a or not b:
        return [[] for _ in a]
    cols = len(b[0])
    out = [[0] * cols for _ in a]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, x in enumerate(arow):
            if x == 0:
                continue
            brow = b[k]
            for j in range(cols):
                orow[j] += x * brow[j]
    return out


def mat_vec(a: Matrix, v: Sequence) -> list:
    if a and len(a[0]) != len(v):
        raise NonSquare("matrix and vector sizes do not match")
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_pow(a: Matrix, n: int) -> Matrix:
    """n-th power of a square integer matrix, n >= 0, by repeated squaring."""
    if any(len(row) != len(a) for row in a):
        raise NonSquare("matrix power needs a square matrix")
    if n < 0:
        raise ValueError("negative powers need matrix_inverse_unimodular")
    out = _identity(len(a))
    base = [row[:] for row in a]
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def det_exact(a: Sequence[Sequence[int]]) -> int:
    """
    Exact determinant by fraction-free elimination.  The empty matrix has
    determinant 1.

    >>> det_exact([[2, 1], [7, 4]])
    1
    >>> det_exact([[10**20, 1], [1, 10**20]])
    9999999999999999999999999999999999999999
    """
    rows = _as_rows(a)
    if any(len(row) != len(rows) for row in rows):
        raise NonSquare("determinant of a rectangular matrix")
    return _det_bareiss(rows)


@dataclasses.dataclass(frozen=True)
class SmithForm:
    """
    Result of smith_normal_form: u * a * v is the diagonal matrix carrying
    invariant_factors on its diagonal.  Factors are nonnegative, each divides
    the next, and zeros come last; len(invariant_factors) = min(rows, cols).
    """

    rows: int
    cols: int
    invariant_factors: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)

    def diagonal_matrix(self) -> Matrix:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.invariant_factors):
            out[i][i] = d
        return out


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithForm:
    """
    Smith normal form with transforms, using a deterministic pivot rule:
    at each step the submatrix entry of smallest nonzero absolute value is
    chosen, ties broken in row-major order.

    >>> smith_normal_form([[2, 0], [0, 3]]).invariant_factors
    (1, 6)
    >>> smith_normal_form([[2, 1], [0, 2]]).invariant_factors
    (1, 4)
    >>> smith_normal_form([[6, 0], [0, 0]]).invariant_factors
    (6, 0)
    """
    m = _as_rows(a)
    r = len(m)
    c = len(m[0]) if r else 0
    k = min(r, c)
    u = _identity(r)
    v = _identity(c)

    def row_op(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        mi, mj = m[i], m[j]
        for x in range(c):
            mi[x] -= q * mj[x]
        ui, uj = u[i], u[j]
        for x in range(r):
            ui[x] -= q * uj[x]

    def col_op(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for row in m:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def diagonalize(t0: int) -> None:
        for t in range(t0, k):
            while True:
                best = None
                for i in range(t, r):
                    for j in range(t, c):
                        x = m[i][j]
                        if x != 0 and (best is None or abs(x) < best[0]):
                            best = (abs(x), i, j)
                if best is None:
                    return
                _, bi, bj = best
                if bi != t:
                    m[t], m[bi] = m[bi], m[t]
                    u[t], u[bi] = u[bi], u[t]
                if bj != t:
                    for row in m:
                        row[t], row[bj] = row[bj], row[t]
                    for row in v:
                        row[t], row[bj] = row[bj], row[t]
                p = m[t][t]
                dirty = False
                for i in range(t + 1, r):
                    if m[i][t] != 0:
                        row_op(i, t, m[i][t] // p)
                        dirty = dirty or m[i][t] != 0
                for j in range(t + 1, c):
                    if m[t][j] != 0:
                        col_op(j, t, m[t][j] // p)
                        dirty = dirty or m[t][j] != 0
                if not dirty:
                    break

    def normalize_signs() -> None:
        for i in range(k):
            if m[i][i] < 0:
                m[i] = [-x for x in m[i]]
                u[i] = [-x for x in u[i]]

    diagonalize(0)
    normalize_signs()
    # Divisibility sweep: splice d_{t+1} into row t and rediagonalize, which
    # replaces the pair by (gcd, lcm); repeat until each factor divides the next.
    t = 0
    while t < k - 1:
        dt, dn = m[t][t], m[t + 1][t + 1]
        if dt != 0 and dn % dt != 0:
            row_op(t, t + 1, -1)
            diagonalize(t)
            normalize_signs()
            t = max(t - 1, 0)
        else:
            t += 1

    return SmithForm(
        rows=r,
        cols=c,
        invariant_factors=tuple(m[i][i] for i in range(k)),
        u=tuple(tuple(row) for row in u),
        v=tuple(tuple(row) for row in v),
    )


@dataclasses.dataclass(frozen=True)
class AbelianGroup:
    """
    A finitely generated abelian group: cyclic factors (each dividing the
    next, all > 1) plus a free rank.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank > 0:
            return None
        return math.prod(self.invariant_factors)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def to_text(self) -> str:
        """
        >>> AbelianGroup((4, 4), 0).to_text()
        'Z/4 + Z/4'
        >>> AbelianGroup((), 2).to_text()
        'Z^2'
        >>> AbelianGroup((), 0).to_text()
        '0'
        """
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def cokernel(a: Sequence[Sequence[int]]) -> AbelianGroup:
    """
    The cokernel of a as a map from Z^cols to Z^rows: Z^rows modulo the
    column span.

    >>> cokernel([[3]])
    AbelianGroup(invariant_factors=(3,), free_rank=0)
    >>> cokernel([[2, 0], [0, 3]])
    AbelianGroup(invariant_factors=(6,), free_rank=0)
    >>> cokernel([[0, 0]])
    AbelianGroup(invariant_factors=(), free_rank=1)
    """
    form = smith_normal_form(a)
    factors = tuple(d for d in form.invariant_factors if d > 1)
    free = form.rows - form.rank
    return AbelianGroup(invariant_factors=factors, free_rank=free)


def companion_tau(n: int) -> Matrix:
    """
    Companion matrix of 1 + t + ... + t^(n-1), size (n-1) x (n-1): ones on
    the subdiagonal, -1 down the last column.  Its eigenvalues are exactly
    the nontrivial n-th roots of unity, each once.

    >>> companion_tau(2)
    [[-1]]
    >>> companion_tau(3)
    [[0, -1], [1, -1]]
    """
    if n < 2:
        raise BadRank(f"companion matrix needs n >= 2, got {n}")
    size = n - 1
    m = [[0] * size for _ in range(size)]
    for i in range(1, size):
        m[i][i - 1] = 1
    for i in range(size):
        m[i][size - 1] = -1
    return m


def matrix_inverse_unimodular(a: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of an integer matrix of determinant +-1."""
    rows = _as_rows(a)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquare("inverse of a rectangular matrix")
    d = _det_bareiss([row[:] for row in rows])
    if d not in (1, -1):
        raise NotUnimodular(f"determinant is {d}, not +-1")
    # Gauss-Jordan on [a | I] over Q.
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def poly_at_matrix(p: LaurentPoly, a: Sequence[Sequence[int]]) -> Matrix:
    """
    Evaluate a Laurent polynomial at a square integer matrix.  Negative
    powers use the exact inverse and require the matrix to be unimodular.

    >>> poly_at_matrix(LaurentPoly(-1, (-1, 3, -1)), companion_tau(3))
    [[4, 0], [0, 4]]
    """
    rows = _as_rows(a)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquare("polynomial evaluation at a rectangular matrix")
    if p.is_zero():
        return [[0] * n for _ in range(n)]
    acc = [[p.coeffs[-1] if i == j else 0 for j in range(n)] for i in range(n)]
    for c in reversed(p.coeffs[:-1]):
        acc = mat_mul(acc, rows)
        for i in range(n):
            acc[i][i] += c
    if p.min_deg > 0:
        acc = mat_mul(acc, mat_pow(rows, p.min_deg))
    elif p.min_deg < 0:
        acc = mat_mul(acc, mat_pow(matrix_inverse_unimodular(rows), -p.min_deg))
    return acc


# ---------------------------------------------------------------------------
# Arithmetic in Q(zeta_N)


def _phi_coeffs(n: int) -> tuple[int, ...]:
    return IntPoly.cyclotomic(n).coeffs


def _reduce_mod_phi(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    phi = _phi_coeffs(n)
    deg = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        top = work[i]
        if top == 0:
            continue
        # phi is monic, so the division step is exact over Q
        for j, pc in enumerate(phi):
            work[i - deg + j] -= top * pc
    out = work[:deg]
    out += [Fraction(0)] * (deg - len(out))
    return tuple(out)


# Dense ascending-coefficient polynomials over Q, used only by the extended
# Euclidean algorithm below.

def _fp_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _fp_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _fp_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c == 0:
            continue
        for j, d in enumerate(b):
            out[i + j] += c * d
    return out


def _fp_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        f = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        quo[shift] = f
        for i, c in enumerate(b):
            rem[shift + i] -= f * c
        rem.pop()
        _fp_trim(rem)
    return quo, rem


@dataclasses.dataclass(frozen=True)
class CycNumber:
    """
    An element of Q(zeta_N), stored as a polynomial in zeta of degree less
    than deg(Phi_N) with Fraction coefficients.

    >>> z = CycNumber.zeta(4)
    >>> z * z == CycNumber.integer(4, -1)
    True
    >>> (CycNumber.integer(5, 1) / (CycNumber.one(5) + CycNumber.zeta(5))) * (CycNumber.one(5) + CycNumber.zeta(5)) == CycNumber.one(5)
    True
    """

    n: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def make(n: int, coeffs: Sequence[Fraction | int]) -> CycNumber:
        return CycNumber(n, _reduce_mod_phi(n, [Fraction(c) for c in coeffs]))

    @staticmethod
    def integer(n: int, value: int | Fraction) -> CycNumber:
        return CycNumber.make(n, [value])

    @staticmethod
    def zero(n: int) -> CycNumber:
        return CycNumber.integer(n, 0)

    @staticmethod
    def one(n: int) -> CycNumber:
        return CycNumber.integer(n, 1)

    @staticmethod
    def zeta(n: int, k: int = 1) -> CycNumber:
        """zeta_N^k for any integer k."""
        k %= n
        return CycNumber.make(n, [0] * k + [1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check(self, other: CycNumber) -> None:
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other: CycNumber) -> CycNumber:
        self._check(other)
        return CycNumber(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: CycNumber) -> CycNumber:
        self._check(other)
        return CycNumber(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CycNumber:
        return CycNumber(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other: CycNumber | int | Fraction) -> CycNumber:
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.n, tuple(a * other for a in self.coeffs))
        self._check(other)
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return CycNumber(self.n, _reduce_mod_phi(self.n, out))

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Field inverse by the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        r0 = _fp_trim([Fraction(c) for c in _phi_coeffs(self.n)])
        r1 = _fp_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            quo, rem = _fp_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _fp_trim(_fp_sub(s0, _fp_mul(quo, s1)))
        # r0 is now the gcd, a nonzero constant since Phi_N is irreducible.
        assert len(r0) == 1
        scale = 1 / r0[0]
        return CycNumber.make(self.n, [c * scale for c in s0])

    def __truediv__(self, other: CycNumber) -> CycNumber:
        self._check(other)
        return self * other.inverse()

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c != 0]
        return f"CycNumber({self.n}: {' + '.join(terms) if terms else '0'})"


def eval_at_zeta(p: LaurentPoly, n: int, k: int) -> CycNumber:
    """Exact evaluation of a Laurent polynomial at zeta_N^k."""
    raw = [Fraction(0)] * max(n, 1)
    for i, c in enumerate(p.coeffs):
        raw[(k * (p.min_deg + i)) % n] += c
    return CycNumber.make(n, raw)


def cyc_mat_mul(a: list[list[CycNumber]], b: list[list[CycNumber]]) -> list[list[CycNumber]]:
    n = a[0][0].n
    cols = len(b[0])
    out = [[CycNumber.zero(n) for _ in range(cols)] for _ in a]
    for i, arow in enumerate(a):
        for k, x in enumerate(arow):
            if x.is_zero():
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + x * b[k][j]
    return out


def cyc_det(a: list[list[CycNumber]]) -> CycNumber:
    """Determinant over Q(zeta_N) by Gaussian elimination."""
    size = len(a)
    if any(len(row) != size for row in a):
        raise NonSquare("determinant of a rectangular matrix")
    if size == 0:
        raise ValueError("empty cyclotomic determinant has no field order")
    n = a[0][0].n
    m = [row[:] for row in a]
    det = CycNumber.one(n)
    for col in range(size):
        piv = next((i for i in range(col, size) if not m[i][col].is_zero()), None)
        if piv is None:
            return CycNumber.zero(n)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for i in range(col + 1, size):
            if m[i][col].is_zero():
                continue
            f = m[i][col] * inv
            m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return det
