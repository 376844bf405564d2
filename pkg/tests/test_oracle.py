import random

import pytest

from isodet import (
    GF,
    Matrix,
    BudgetExceededError,
    BulkOracle,
    decide,
    enumerate_isometries,
    jordan,
    oracle_verdict,
    random_congruence,
    rank,
    symplectic_unit,
    verify_congruence,
)
from isodet.oracle import random_transform

from helpers import all_matrices, mat


def order_gl(n, q):
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


class TestEnumerate:
    def test_symplectic_f3(self):
        s = enumerate_isometries(symplectic_unit(1, GF(3)))
        assert s.group_order == 24
        assert s.all_det_one
        assert s.det_counts == {1: 24}

    def test_identity_f3(self):
        s = enumerate_isometries(Matrix.identity(GF(3), 2))
        assert not s.all_det_one
        assert s.det_counts[2] > 0

    def test_zero_form(self):
        s = enumerate_isometries(Matrix(GF(3), [[0]]))
        assert s.group_order == 2
        assert s.det_counts == {1: 1, 2: 1}
        assert not s.all_det_one

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            enumerate_isometries(Matrix.zeros(GF(3), 5, 5))

    def test_lagrange(self):
        rng = random.Random(2)
        f = GF(3)
        for _ in range(10):
            M = Matrix(f, [[rng.randrange(3) for _ in range(2)] for _ in range(2)])
            s = enumerate_isometries(M)
            assert order_gl(2, 3) % s.group_order == 0

    def test_group_closure_sample(self):
        # isometries compose to isometries; spot-check via a small group
        f = GF(3)
        M = symplectic_unit(1, f)
        found = []
        for S in all_matrices(2, 3):
            if rank(S) == 2 and S.transpose() * M * S == M:
                found.append(S)
        rng = random.Random(8)
        for _ in range(100):
            A = rng.choice(found)
            B = rng.choice(found)
            C = A * B
            assert C.transpose() * M * C == M


class TestVerdict:
    def test_even_nilpotent(self):
        assert oracle_verdict(jordan(2, 0, GF(3)))

    def test_zero(self):
        assert not oracle_verdict(Matrix(GF(3), [[0]]))

    def test_odd_nilpotent(self):
        assert not oracle_verdict(jordan(3, 0, GF(3)))

    def test_matches_enumeration(self):
        for M in all_matrices(2, 3):
            assert oracle_verdict(M) == enumerate_isometries(M).all_det_one


class TestBulkOracle:
    def test_matches_per_matrix(self):
        b = BulkOracle(2, 3)
        f = GF(3)
        for idx in range(81):
            M = b.matrix_from_index(idx, f)
            assert b.verdict(M) == oracle_verdict(M)

    def test_matches_decide_f5(self):
        b = BulkOracle(2, 5)
        f = GF(5)
        rng = random.Random(4)
        for _ in range(60):
            idx = rng.randrange(5 ** 4)
            M = b.matrix_from_index(idx, f)
            assert b.verdict(M) == decide(M).all_det_one


class TestRandomCongruence:
    def test_always_congruent(self):
        f = GF(5)
        M = Matrix(f, [[1, 2], [3, 4]])
        for seed in range(10):
            N = random_congruence(M, seed)
            T = random_transform(f, 2, seed)
            assert verify_congruence(T, M, N)

    def test_deterministic(self):
        M = Matrix(GF(3), [[1, 0], [1, 2]])
        assert random_congruence(M, 123) == random_congruence(M, 123)

    def test_known_transform(self):
        from isodet import QQ
        M = Matrix.identity(QQ, 2)
        T = mat([[1, 1], [0, 1]])
        assert T.transpose() * M * T == mat([[1, 1], [1, 2]])
