import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isodet import (
    GF,
    QQ,
    Field,
    FieldError,
    Matrix,
    Poly,
    SingularMatrixError,
    det,
    det_poly,
    inverse,
    power_rank_sequence,
    rank,
)
from isodet.blocks import gamma, jordan, direct_sum

from helpers import mat


def small_entries():
    return st.integers(min_value=-4, max_value=4)


def square_matrices(n_max=4, field=QQ):
    def build(data):
        n, flat = data
        return Matrix(field, [flat[i * n:(i + 1) * n] for i in range(n)])

    return st.integers(min_value=0, max_value=n_max).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(small_entries(), min_size=n * n, max_size=n * n))
    ).map(build)


class TestField:
    def test_char_two_rejected(self):
        with pytest.raises(FieldError):
            Field(2)
        with pytest.raises(FieldError):
            Field(9)

    def test_canonical_residues(self):
        f = GF(5)
        assert f.convert(-1) == 4
        assert f.convert("7") == 2

    def test_rationals_lowest_terms(self):
        x = QQ.convert("2/4")
        assert x == Fraction(1, 2) and x.denominator == 2


class TestRank:
    def test_empty(self):
        assert rank(Matrix(QQ, [], ncols=0)) == 0

    def test_jordan_nilpotent(self):
        assert rank(mat([[0, 0], [1, 0]])) == 1

    def test_gamma3_full(self):
        assert rank(gamma(3)) == 3

    @settings(max_examples=60, deadline=None)
    @given(square_matrices())
    def test_rank_transpose(self, A):
        assert rank(A) == rank(A.transpose())


class TestInverse:
    def test_identity(self):
        I3 = Matrix.identity(QQ, 3)
        assert inverse(I3) == I3

    def test_symplectic_unit(self):
        Z2 = mat([[0, 1], [-1, 0]])
        assert inverse(Z2) == mat([[0, -1], [1, 0]])

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            inverse(mat([[0, 0], [1, 0]]))

    @settings(max_examples=40, deadline=None)
    @given(square_matrices(n_max=3))
    def test_two_sided(self, A):
        if A.nrows and rank(A) == A.nrows:
            Ainv = inverse(A)
            I = Matrix.identity(QQ, A.nrows)
            assert A * Ainv == I and Ainv * A == I


class TestDet:
    def test_identity(self):
        assert det(Matrix.identity(QQ, 4)) == 1

    def test_reflection(self):
        assert det(direct_sum([mat([[-1]]), Matrix.identity(QQ, 2)])) == -1

    def test_gamma2(self):
        assert det(mat([[0, 1], [-1, -1]])) == 1

    def test_empty(self):
        assert det(Matrix(QQ, [], ncols=0)) == 1

    def test_multiplicative(self):
        rng = random.Random(11)
        for _ in range(25):
            A = mat([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
            B = mat([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
            assert det(A * B) == det(A) * det(B)


class TestDetPoly:
    def test_zero_pencil(self):
        assert det_poly(mat([[0]]), mat([[0]])).is_zero()

    def test_jordan_pencil(self):
        J = mat([[0, 0], [1, 0]])
        p = det_poly(J.transpose(), J)
        assert p == Poly(QQ, [0, -1])

    def test_scalar_pencil(self):
        I2 = Matrix.identity(QQ, 2)
        assert det_poly(I2, I2) == Poly(QQ, [1, 2, 1])

    def test_works_over_f3(self):
        f = GF(3)
        A = Matrix(f, [[1, 2, 0], [0, 1, 1], [2, 0, 1]])
        B = Matrix(f, [[0, 1, 1], [1, 1, 0], [2, 2, 2]])
        p = det_poly(A, B)
        for c in range(3):
            assert p.eval(c) == det(A + B.scale(c))

    @settings(max_examples=30, deadline=None)
    @given(square_matrices(n_max=3))
    def test_matches_evaluation(self, A):
        rng = random.Random(rank(A) + A.nrows)
        B = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(A.nrows)] for _ in range(A.nrows)])
        p = det_poly(A, B)
        for _ in range(5):
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            assert p.eval(c) == det(A + B.scale(c))


class TestPowerRankSequence:
    def test_jordan_chain(self):
        assert power_rank_sequence(jordan(3, 1), 1, 4) == [3, 2, 1, 0, 0]

    def test_identity_shift(self):
        assert power_rank_sequence(Matrix.identity(QQ, 2), 1, 2) == [2, 0, 0]

    def test_nilpotent_sum(self):
        A = direct_sum([jordan(2, 0), jordan(1, 0)])
        assert power_rank_sequence(A, 0, 3) == [3, 1, 0, 0]

    @settings(max_examples=40, deadline=None)
    @given(square_matrices(n_max=4))
    def test_weyr_monotonicity(self, A):
        seq = power_rank_sequence(A, 1, A.nrows + 2)
        diffs = [seq[k - 1] - seq[k] for k in range(1, len(seq))]
        assert all(d >= 0 for d in diffs)
        assert all(diffs[k] >= diffs[k + 1] for k in range(len(diffs) - 1))
