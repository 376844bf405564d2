"""Exact dense linear algebra over Q and over prime fields F_p with p odd.

Scalars are plain values: `fractions.Fraction` over Q (always in lowest terms
with positive denominator) and canonical ints in [0, p) over F_p.  Every
matrix and polynomial carries the `Field` that owns its entries; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    """Unsupported coefficient field (characteristic 2, or modulus not prime)."""


class SingularMatrixError(ArithmeticError):
    """An operation required an invertible matrix but received a singular one."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (``p is None``) or the prime field F_p for an odd prime p."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and (p == 2 or not _is_prime(p)):
            raise FieldError(f"modulus must be an odd prime, got {p!r}")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def convert(self, x):
        """Coerce an int, Fraction or string to a canonical field element."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, (int, str)):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, str):
            x = int(x, 10)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer residue mod {self.p}")
            x = x.numerator
        if not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into F_{self.p}")
        return x % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / a if self.p is None else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


class Matrix:
    """Immutable dense matrix over a fixed field.  0x0 matrices are legal."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        conv = field.convert
        self.field = field
        self.rows = tuple(tuple(conv(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @staticmethod
    def zeros(field: Field, m: int, n: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * n for _ in range(m)], ncols=n)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)], ncols=n)

    @staticmethod
    def from_cols(field: Field, cols: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if cols:
            m = len(cols[0])
        else:
            m = 0 if nrows is None else nrows
        return Matrix(field, [[c[i] for c in cols] for i in range(m)], ncols=len(cols))

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for row in self.rows for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    __hash__ = None

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [[add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [[sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], ncols=self.ncols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        f = self.field
        add, mul, z = f.add, f.mul, f.zero()
        ocols = [other.col(j) for j in range(other.ncols)]
        out = []
        for r in self.rows:
            line = []
            for c in ocols:
                s = z
                for a, b in zip(r, c):
                    s = add(s, mul(a, b))
                line.append(s)
            out.append(line)
        return Matrix(f, out, ncols=other.ncols)

    def scale(self, c) -> "Matrix":
        mul = self.field.mul
        c = self.field.convert(c)
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.rows], ncols=self.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)) if self.rows else [], ncols=self.nrows)

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "Matrix":
        ci = list(col_idx)
        return Matrix(self.field, [[self.rows[i][j] for j in ci] for i in row_idx], ncols=len(ci))

    def apply_to_vec(self, v: Sequence):
        """Matrix-vector product A·v with v a plain coefficient sequence."""
        f = self.field
        add, mul, z = f.add, f.mul, f.zero()
        out = []
        for r in self.rows:
            s = z
            for a, b in zip(r, v):
                s = add(s, mul(a, b))
            out.append(s)
        return tuple(out)

    def to_lists(self):
        return [list(r) for r in self.rows]

    def _same_shape(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols or self.field != other.field:
            raise ValueError("shape or field mismatch")

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in r) for r in self.rows)
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols}: [{body}])"


def vstack(top: Matrix, bottom: Matrix) -> Matrix:
    if top.ncols != bottom.ncols or top.field != bottom.field:
        raise ValueError("vstack mismatch")
    return Matrix(top.field, list(top.rows) + list(bottom.rows), ncols=top.ncols)


def hstack(left: Matrix, right: Matrix) -> Matrix:
    if left.nrows != right.nrows or left.field != right.field:
        raise ValueError("hstack mismatch")
    return Matrix(left.field, [list(a) + list(b) for a, b in zip(left.rows, right.rows)],
                  ncols=left.ncols + right.ncols)


def _forward_eliminate(rows, field):
    """In-place forward elimination; returns the number of pivots."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    sub, mul, div = field.sub, field.mul, field.div
    piv = 0
    for col in range(n):
        if piv >= m:
            break
        src = None
        for i in range(piv, m):
            if not field.is_zero(rows[i][col]):
                src = i
                break
        if src is None:
            continue
        rows[piv], rows[src] = rows[src], rows[piv]
        prow = rows[piv]
        pval = prow[col]
        for i in range(piv + 1, m):
            f = rows[i][col]
            if field.is_zero(f):
                continue
            ratio = div(f, pval)
            ri = rows[i]
            for j in range(col, n):
                ri[j] = sub(ri[j], mul(prow[j], ratio))
        piv += 1
    return piv


def rank(A: Matrix) -> int:
    """Rank over the matrix's field, by Gaussian elimination with exact arithmetic."""
    rows = [list(r) for r in A.rows]
    if not rows:
        return 0
    return _forward_eliminate(rows, A.field)


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    f = A.field
    rows = [list(r) for r in A.rows]
    m, n = A.nrows, A.ncols
    sub, mul = f.sub, f.mul
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        src = None
        for i in range(r, m):
            if not f.is_zero(rows[i][c]):
                src = i
                break
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = f.inv(rows[r][c])
        rows[r] = [mul(inv, x) for x in rows[r]]
        for i in range(m):
            if i != r and not f.is_zero(rows[i][c]):
                fac = rows[i][c]
                rows[i] = [sub(x, mul(fac, y)) for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    return Matrix(f, rows, ncols=n), piv_cols


def nullspace(A: Matrix) -> Matrix:
    """Right null space basis, returned as the columns of an n x k matrix."""
    f = A.field
    R, piv = rref(A)
    n = A.ncols
    piv_set = set(piv)
    free = [j for j in range(n) if j not in piv_set]
    cols = []
    for fv in free:
        v = [f.zero()] * n
        v[fv] = f.one()
        for r_i, pc in enumerate(piv):
            v[pc] = f.neg(R[r_i, fv])
        cols.append(v)
    return Matrix.from_cols(f, cols, nrows=n)


def solve(A: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution of A·X = b (free variables set to zero), or None."""
    if A.nrows != b.nrows:
        raise ValueError("solve shape mismatch")
    f = A.field
    aug = hstack(A, b)
    R, piv = rref(aug)
    n = A.ncols
    # a pivot in the augmented part means the system is inconsistent
    if any(pc >= n for pc in piv):
        return None
    cols = []
    for k in range(b.ncols):
        v = [f.zero()] * n
        for r_i, pc in enumerate(piv):
            v[pc] = R[r_i, n + k]
        cols.append(v)
    return Matrix.from_cols(f, cols, nrows=n)


def inverse(A: Matrix) -> Matrix:
    """Exact two-sided inverse via Gauss-Jordan; raises SingularMatrixError."""
    if not A.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = A.nrows
    if n == 0:
        return A
    f = A.field
    aug = hstack(A, Matrix.identity(f, n))
    R, piv = rref(aug)
    if piv != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return R.submatrix(range(n), range(n, 2 * n))


def det(A: Matrix):
    """Exact determinant by fraction-free (Bareiss) elimination; det(0x0) = 1."""
    if not A.is_square:
        raise ValueError("determinant of a non-square matrix")
    f = A.field
    n = A.nrows
    if n == 0:
        return f.one()
    rows = [list(r) for r in A.rows]
    sub, mul, div = f.sub, f.mul, f.div
    sign = 1
    prev = f.one()
    for k in range(n - 1):
        src = None
        for i in range(k, n):
            if not f.is_zero(rows[i][k]):
                src = i
                break
        if src is None:
            return f.zero()
        if src != k:
            rows[k], rows[src] = rows[src], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(rows[k][k], rows[i][j]), mul(rows[i][k], rows[k][j]))
                rows[i][j] = div(num, prev)
            rows[i][k] = f.zero()
        prev = rows[k][k]
    d = rows[n - 1][n - 1]
    return f.neg(d) if sign < 0 else d


class Poly:
    """Dense univariate polynomial, coefficients ascending, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence):
        conv = field.convert
        cs = [conv(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, [])

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, [field.one()])

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, [field.zero(), field.one()])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        out = [f.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c) -> "Poly":
        f = self.field
        c = f.convert(c)
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        # repeated multiplication is plenty at the sizes we build
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def eval(self, c):
        f = self.field
        c = f.convert(c)
        acc = f.zero()
        for a in reversed(self.coeffs):
            acc = f.add(f.mul(acc, c), a)
        return acc

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.leading()))

    def divexact(self, other: "Poly") -> "Poly":
        """Quotient self/other when the division is exact; ValueError otherwise."""
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [f.zero()] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.coeffs
        inv_lead = f.inv(other.leading())
        while len(rem) >= len(d) and rem:
            coef = f.mul(rem[-1], inv_lead)
            pos = len(rem) - len(d)
            q[pos] = coef
            for i, c in enumerate(d):
                rem[pos + i] = f.sub(rem[pos + i], f.mul(coef, c))
            while rem and f.is_zero(rem[-1]):
                rem.pop()
        if rem:
            raise ValueError("inexact polynomial division")
        return Poly(f, q)

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        f = self.field
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if f.is_zero(c):
                continue
            if i == 0:
                parts.append(f.to_str(c))
            else:
                xs = var if i == 1 else f"{var}^{i}"
                parts.append(xs if c == f.one() else f"{f.to_str(c)}*{xs}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.field!r}, {self.to_str()})"


def det_poly(A: Matrix, B: Matrix) -> Poly:
    """det(A + t·B) as an exact polynomial in t, by fraction-free elimination
    over F[t].  Works over any supported field, including F_3; the zero
    polynomial signals a singular pencil."""
    if not A.is_square or not B.is_square:
        raise ValueError("det_poly needs square matrices")
    A._same_shape(B)
    f = A.field
    n = A.nrows
    if n == 0:
        return Poly.one(f)
    rows = [[Poly(f, [A[i, j], B[i, j]]) for j in range(n)] for i in range(n)]
    sign = 1
    prev = Poly.one(f)
    for k in range(n - 1):
        src = None
        for i in range(k, n):
            if not rows[i][k].is_zero():
                src = i
                break
        if src is None:
            return Poly.zero(f)
        if src != k:
            rows[k], rows[src] = rows[src], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = num.divexact(prev)
            rows[i][k] = Poly.zero(f)
        prev = rows[k][k]
    d = rows[n - 1][n - 1]
    return -d if sign < 0 else d


def power_rank_sequence(A: Matrix, mu, kmax: int) -> list[int]:
    """[r_0, ..., r_kmax] with r_k = rank((A - mu·I)^k); r_0 = size.

    Stops iterating once the rank stabilizes and pads with the stable value.
    """
    if not A.is_square:
        raise ValueError("power_rank_sequence needs a square matrix")
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    f = A.field
    n = A.nrows
    P = A - Matrix.identity(f, n).scale(mu)
    seq = [n]
    cur: Matrix | None = None
    for _ in range(kmax):
        cur = P if cur is None else cur * P
        r = rank(cur)
        seq.append(r)
        if r == seq[-2] or r == 0:
            break
    while len(seq) < kmax + 1:
        seq.append(seq[-1])
    return seq[: kmax + 1]
