"""Canonical building blocks: Jordan blocks, anti-triangular blocks, companion
matrices of prime-power polynomials, skew and direct sums, symplectic units,
and the rectangular pencil blocks.  These power the decision paths, the test
generators and the CLI `blocks` subcommand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import (
    QQ,
    Field,
    Matrix,
    Poly,
    inverse,
    power_rank_sequence,
)


class ZeroConstantTermError(ValueError):
    """Reciprocal polynomial requested for a polynomial with p(0) = 0."""


@dataclass(frozen=True)
class PolySpec:
    """A monic polynomial together with the exponent of its companion block."""

    poly: Poly
    power: int

    def __post_init__(self):
        if self.poly.degree < 1 or not self.poly.is_monic():
            raise ValueError("PolySpec needs a monic polynomial of degree >= 1")
        if self.power < 1:
            raise ValueError("PolySpec power must be >= 1")

    @property
    def block_size(self) -> int:
        return self.poly.degree * self.power


def jordan(r: int, lam, field: Field = QQ) -> Matrix:
    """r x r block with lam on the diagonal and 1 on the first subdiagonal."""
    if r < 1:
        raise ValueError("jordan block size must be >= 1")
    lam = field.convert(lam)
    z, o = field.zero(), field.one()
    rows = []
    for i in range(r):
        row = [z] * r
        row[i] = lam
        if i > 0:
            row[i - 1] = o
        rows.append(row)
    return Matrix(field, rows)


def gamma(r: int, field: Field = QQ) -> Matrix:
    """The r x r anti-triangular block with (-1)^(i+1) on the two central
    anti-diagonals (1-based i+j in {r+1, r+2}), zero elsewhere.

    The constructor checks the defining property of the block: the rank
    sequence of its cosquare at eigenvalue (-1)^(r+1) is [r, r-1, ..., 1, 0],
    i.e. the cosquare is similar to a single Jordan block of that eigenvalue.
    """
    if r < 1:
        raise ValueError("gamma block size must be >= 1")
    z, o = field.zero(), field.one()
    rows = []
    for i in range(1, r + 1):
        sgn = o if i % 2 == 1 else field.neg(o)
        row = [z] * r
        for j in range(1, r + 1):
            if i + j == r + 1 or i + j == r + 2:
                row[j - 1] = sgn
        rows.append(row)
    G = Matrix(field, rows)
    eig = field.one() if r % 2 == 1 else field.neg(field.one())
    cosq = inverse(G.transpose()) * G
    seq = power_rank_sequence(cosq, eig, r)
    if seq != list(range(r, -1, -1)):
        raise AssertionError(f"gamma({r}) failed its cosquare self-check: {seq}")
    return G


def frobenius(spec: PolySpec) -> Matrix:
    """Companion matrix of p(x)^l: subdiagonal ones, last column the negated
    coefficients of p^l (constant term at the top)."""
    field = spec.poly.field
    q = spec.poly ** spec.power
    m = spec.block_size
    z, o = field.zero(), field.one()
    rows = []
    for i in range(m):
        row = [z] * m
        if i > 0:
            row[i - 1] = o
        row[m - 1] = field.neg(q.coeffs[i])
        rows.append(row)
    return Matrix(field, rows)


def reciprocal(p: Poly) -> Poly:
    """The monic reversed polynomial p(0)^{-1} x^s p(1/x) of the same degree."""
    if p.degree < 0 or not p.is_monic():
        raise ValueError("reciprocal needs a monic polynomial")
    f = p.field
    if f.is_zero(p.constant()):
        raise ZeroConstantTermError("p(0) = 0 has no reciprocal of equal degree")
    rev = list(reversed(p.coeffs))
    return Poly(f, rev).scale(f.inv(p.constant()))


def is_cosquare_block(spec: PolySpec) -> bool:
    """Whether the companion block of p^l is a cosquare: p != x,
    p != x + (-1)^(m+1) with m the block size, and p self-reciprocal."""
    p = spec.poly
    f = p.field
    m = spec.block_size
    x = Poly.x(f)
    if p == x:
        return False
    if f.is_zero(p.constant()):
        # x divides p, so p is x itself or not irreducible; never a cosquare
        return False
    eps = f.one() if m % 2 == 0 else f.neg(f.one())
    forbidden = Poly(f, [f.neg(eps), f.one()])  # x + (-1)^(m+1)
    if p == forbidden:
        return False
    return reciprocal(p) == p


def skew_sum(A: Matrix, B: Matrix) -> Matrix:
    """[[0, B], [A, 0]] with zero blocks sized to fit."""
    if A.field != B.field:
        raise ValueError("skew_sum over mixed fields")
    f = A.field
    z = f.zero()
    top = [[z] * A.ncols + list(rb) for rb in B.rows]
    bot = [list(ra) + [z] * B.ncols for ra in A.rows]
    return Matrix(f, top + bot, ncols=A.ncols + B.ncols)


def direct_sum(parts: list[Matrix], field: Field | None = None) -> Matrix:
    """Block diagonal sum; the empty list gives the 0x0 matrix."""
    if not parts:
        return Matrix(field if field is not None else QQ, [], ncols=0)
    f = parts[0].field
    if any(p.field != f for p in parts):
        raise ValueError("direct_sum over mixed fields")
    if any(not p.is_square for p in parts):
        raise ValueError("direct_sum needs square parts")
    n = sum(p.nrows for p in parts)
    z = f.zero()
    rows = []
    off = 0
    for p in parts:
        for r in p.rows:
            rows.append([z] * off + list(r) + [z] * (n - off - p.ncols))
        off += p.nrows
    return Matrix(f, rows, ncols=n)


def symplectic_unit(m: int, field: Field = QQ) -> Matrix:
    """The 2m x 2m matrix [[0, I_m], [-I_m, 0]]."""
    if m < 1:
        raise ValueError("symplectic unit needs m >= 1")
    z, o = field.zero(), field.one()
    n = 2 * m
    rows = [[z] * n for _ in range(n)]
    for i in range(m):
        rows[i][m + i] = o
        rows[m + i][i] = field.neg(o)
    return Matrix(field, rows)


def kronecker_pair_blocks(t: int, field: Field = QQ) -> tuple[Matrix, Matrix]:
    """The (t-1) x t blocks with ones on the diagonal and on the
    superdiagonal respectively; t = 1 yields a pair of 0 x 1 matrices."""
    if t < 1:
        raise ValueError("kronecker pair needs t >= 1")
    z, o = field.zero(), field.one()
    F_rows = []
    G_rows = []
    for i in range(t - 1):
        fr = [z] * t
        gr = [z] * t
        fr[i] = o
        gr[i + 1] = o
        F_rows.append(fr)
        G_rows.append(gr)
    return Matrix(field, F_rows, ncols=t), Matrix(field, G_rows, ncols=t)
