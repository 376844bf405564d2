"""Brute-force ground truth over small prime fields: enumerate all matrices,
keep the isometries S^T M S = M, and tally their determinants.

Candidates are visited in a fixed order: index i in [0, p^(n*n)) is written
base p and filled into the matrix row-major, entry (r, c) taking digit
r*n + c (least significant first).  Ranges of indices can be processed
independently and the partial summaries added, so the scan shards cleanly.

The congruence test runs vectorized over numpy int batches; arithmetic stays
exact because all values are tiny integers reduced mod p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .exactmat import Field, Matrix, rank

#: visiting more candidates than this raises BudgetExceededError; the default
#: admits p=3 up to n=4 (3^16 ~ 4.3e7) and p=5 up to n=3 (5^9 ~ 2.0e6).
DEFAULT_LIMIT = 50_000_000

_BATCH = 1 << 17


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the allowed budget."""


@dataclass(frozen=True)
class IsometrySummary:
    """Isometry group of a form over F_p, by exhaustive enumeration."""

    group_order: int
    det_counts: dict[int, int]
    all_det_one: bool


def _require_prime_field(M: Matrix) -> int:
    p = M.field.p
    if p is None:
        raise ValueError("the enumeration oracle needs a prime field, not Q")
    return p


def _as_array(M: Matrix) -> np.ndarray:
    return np.array(M.to_lists(), dtype=np.int64).reshape(M.nrows, M.nrows)


def _candidates(lo: int, hi: int, n: int, p: int) -> np.ndarray:
    """Candidate matrices for indices [lo, hi), shape (hi-lo, n, n)."""
    ids = np.arange(lo, hi, dtype=np.int64)
    powers = p ** np.arange(n * n, dtype=np.int64)
    digits = (ids[:, None] // powers[None, :]) % p
    return digits.reshape(-1, n, n).astype(np.int16)


def _det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a batch of n x n integer matrices, n <= 4."""
    n = mats.shape[1]
    m = mats.astype(np.int64)
    if n == 0:
        return np.ones(mats.shape[0], dtype=np.int64)
    if n == 1:
        return m[:, 0, 0] % p
    if n == 2:
        return (m[:, 0, 0] * m[:, 1, 1] - m[:, 0, 1] * m[:, 1, 0]) % p
    if n == 3:
        d = (
            m[:, 0, 0] * (m[:, 1, 1] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 1])
            - m[:, 0, 1] * (m[:, 1, 0] * m[:, 2, 2] - m[:, 1, 2] * m[:, 2, 0])
            + m[:, 0, 2] * (m[:, 1, 0] * m[:, 2, 1] - m[:, 1, 1] * m[:, 2, 0])
        )
        return d % p
    if n == 4:
        d = np.zeros(mats.shape[0], dtype=np.int64)
        sign = 1
        for j in range(4):
            cols = [c for c in range(4) if c != j]
            minor = m[:, 1:, :][:, :, cols]
            d += sign * m[:, 0, j] * _det_mod(minor, p) % p
            sign = -sign
        return d % p
    raise ValueError("det batch supports n <= 4 only")


def _congruence_hits(S: np.ndarray, A: np.ndarray, p: int) -> np.ndarray:
    """Boolean mask of batch entries with S^T A S = A (mod p)."""
    AS = np.matmul(A[None, :, :], S.astype(np.int64)) % p
    T = np.matmul(S.transpose(0, 2, 1).astype(np.int64), AS) % p
    return (T == A[None, :, :]).all(axis=(1, 2))


def enumerate_isometries(M: Matrix, limit: int = DEFAULT_LIMIT) -> IsometrySummary:
    """Visit every S in M_n(F_p), keep nonsingular solutions of S^T M S = M,
    and tally their determinants."""
    if not M.is_square:
        raise ValueError("square matrix required")
    p = _require_prime_field(M)
    n = M.nrows
    total = p ** (n * n)
    if total > limit:
        raise BudgetExceededError(f"{total} candidates exceed the limit {limit}")
    if n == 0:
        return IsometrySummary(1, {1: 1}, True)
    A = _as_array(M) % p
    order = 0
    det_counts: dict[int, int] = {}
    for lo in range(0, total, _BATCH):
        S = _candidates(lo, min(lo + _BATCH, total), n, p)
        dets = _det_mod(S, p)
        keep = dets != 0
        S = S[keep]
        dets = dets[keep]
        hits = _congruence_hits(S, A, p)
        order += int(hits.sum())
        vals, cnts = np.unique(dets[hits], return_counts=True)
        for v, c in zip(vals.tolist(), cnts.tolist()):
            det_counts[v] = det_counts.get(v, 0) + c
    all_one = det_counts.get(1, 0) == order
    return IsometrySummary(order, det_counts, all_one)


def oracle_verdict(M: Matrix, limit: int = DEFAULT_LIMIT) -> bool:
    """Membership by definition: True iff no isometry with det != 1 exists.

    Scans only determinant != 1 candidates and stops at the first witness.
    """
    if not M.is_square:
        raise ValueError("square matrix required")
    p = _require_prime_field(M)
    n = M.nrows
    total = p ** (n * n)
    if total > limit:
        raise BudgetExceededError(f"{total} candidates exceed the limit {limit}")
    if n == 0:
        return True
    A = _as_array(M) % p
    for lo in range(0, total, _BATCH):
        S = _candidates(lo, min(lo + _BATCH, total), n, p)
        dets = _det_mod(S, p)
        keep = (dets != 0) & (dets != 1)
        S = S[keep]
        if S.shape[0] == 0:
            continue
        if _congruence_hits(S, A, p).any():
            return False
    return True


class BulkOracle:
    """Verdicts for every matrix in M_n(F_p) against one precomputed scan set.

    The determinant != 1 part of GL_n(F_p) is materialized once; each query
    then needs a single vectorized congruence pass.  Matrices are addressed
    by their enumeration index (same digit order as the candidate scan).
    """

    def __init__(self, n: int, p: int, limit: int = DEFAULT_LIMIT):
        Field(p)  # validates the modulus
        total = p ** (n * n)
        if total > limit:
            raise BudgetExceededError(f"{total} candidates exceed the limit {limit}")
        self.n = n
        self.p = p
        parts = []
        for lo in range(0, total, _BATCH):
            S = _candidates(lo, min(lo + _BATCH, total), n, p)
            dets = _det_mod(S, p)
            parts.append(S[(dets != 0) & (dets != 1)])
        self._scan = np.concatenate(parts, axis=0)
        self._scan_T = self._scan.transpose(0, 2, 1).astype(np.int64)

    def matrix_from_index(self, idx: int, field: Field) -> Matrix:
        rows = _candidates(idx, idx + 1, self.n, self.p)[0].tolist()
        return Matrix(field, rows)

    def verdict_from_array(self, A: np.ndarray) -> bool:
        AS = np.matmul(A[None, :, :], self._scan.astype(np.int64)) % self.p
        T = np.matmul(self._scan_T, AS) % self.p
        return not (T == A[None, :, :]).all(axis=(1, 2)).any()

    def verdict(self, M: Matrix) -> bool:
        return self.verdict_from_array(_as_array(M) % self.p)


def random_transform(field: Field, n: int, seed: int) -> Matrix:
    """Deterministic pseudo-random nonsingular n x n matrix with small
    entries (rejection sampling on the seed stream)."""
    rng = random.Random(seed)
    if n == 0:
        return Matrix(field, [], ncols=0)
    while True:
        if field.is_rational:
            rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        T = Matrix(field, rows)
        if rank(T) == n:
            return T


def random_congruence(M: Matrix, seed: int) -> Matrix:
    """T^T M T for the transform produced by random_transform(seed)."""
    if not M.is_square:
        raise ValueError("square matrix required")
    T = random_transform(M.field, M.nrows, seed)
    return T.transpose() * M * T
