"""Shared builders and the independent singular-size oracle used by tests."""

from __future__ import annotations

import itertools
import random

from isodet import GF, QQ, Matrix
from isodet.exactmat import hstack, nullspace, rank, rref


def mat(rows, field=QQ):
    return Matrix(field, rows)


def all_matrices(n, p):
    """Every n x n matrix over F_p, row-major digit order."""
    f = GF(p)
    for bits in itertools.product(range(p), repeat=n * n):
        yield Matrix(f, [bits[i * n:(i + 1) * n] for i in range(n)])


def random_rational(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    return Matrix(QQ, [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_nonsingular(rng: random.Random, n: int, field=QQ, bound: int = 3) -> Matrix:
    while True:
        if field.p is None:
            rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        T = Matrix(field, rows)
        if rank(T) == n:
            return T


def _column_space_basis(f, cols_matrix, n):
    R, piv = rref(cols_matrix.transpose())
    return Matrix.from_cols(f, [R.row(i) for i in range(len(piv))], nrows=n)


def filtration_sizes(M: Matrix) -> tuple[int, ...]:
    """Singular block sizes from subspace dimensions alone.

    Completely independent of the regularize implementation: walk the
    filtration K_1 = ker M, K_{2j+1} = {x : M x in M^T K_{2j-1}}.  Then
    dim K_{2j-1} jumps count chains of size >= 2j-1, and the dimension of
    K_{2j-1} meet ker(M^T) counts odd chains of size <= 2j-1.
    """
    f = M.field
    n = M.nrows
    if n == 0:
        return ()
    MT = M.transpose()
    cur = nullspace(M)
    ds: list[int] = []
    es: list[int] = []
    for _ in range(n + 1):
        ds.append(cur.ncols)
        es.append(nullspace(MT * cur).ncols if cur.ncols else 0)
        if cur.ncols:
            block = hstack(M, (MT * cur).scale(-1))
        else:
            block = M
        NS = nullspace(block)
        xs = NS.submatrix(range(n), range(NS.ncols))
        cur = _column_space_basis(f, xs, n)
    d = [0] + ds
    e = [0] + es
    sizes: list[int] = []
    for j in range(1, len(ds)):
        ge_this = d[j] - d[j - 1]
        ge_next = d[j + 1] - d[j] if j + 1 < len(d) else 0
        odd_exact = e[j] - e[j - 1]
        even_exact = (ge_this - ge_next) - odd_exact
        sizes += [2 * j - 1] * odd_exact + [2 * j] * even_exact
    return tuple(sorted(sizes))
