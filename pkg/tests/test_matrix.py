from fractions import Fraction

import pytest
import sympy
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from unitnilpy.errors import (DimensionMismatch, EmptyInput, MixedFields,
                              NotAPermutation, NotNilpotent, NotSquare,
                              Singular)
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import (Matrix, block_diag, extend_to_basis,
                                       format_matrix, identity, mat_conjugate,
                                       mat_det, mat_inverse, mat_mul, mat_pow,
                                       mat_rank, matrix_unit, nilpotency_index,
                                       nilpotent_jordan_type, nullspace,
                                       permutation_matrix, rref, stack_rows,
                                       zeros)
from unitnilpy.exactalg.polynomial import Polynomial, companion
from unitnilpy.verify.generator import random_invertible, random_matrix_of_rank

QQ = FieldSpec.rationals()
F5 = FieldSpec.prime(5)

small_tables = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(st.integers(min_value=-6, max_value=6), min_size=n, max_size=n),
                       min_size=n, max_size=n))


def test_construction_and_access():
    A = Matrix(QQ, [[1, 2], [3, Fraction(1, 2)]])
    assert A.shape == (2, 2)
    assert A[1, 1] == Fraction(1, 2)
    assert A.to_strings() == [["1", "2"], ["3", "1/2"]]
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [])
    with pytest.raises(AttributeError):
        A.spec = F5


def test_entries_reduced_mod_p():
    A = Matrix(F5, [[7, -1], [5, 12]])
    assert A.tolist() == [[2, 4], [0, 2]]


def test_matrix_unit_is_one_based():
    E = matrix_unit(QQ, 3, 1, 2)
    assert E.entry(0, 1) == 1
    assert sum(1 for row in E.tolist() for x in row if x != 0) == 1


def test_constructors_reject_empty_sizes():
    with pytest.raises(DimensionMismatch):
        zeros(QQ, 0)
    with pytest.raises(DimensionMismatch):
        zeros(QQ, 2, 0)
    with pytest.raises(DimensionMismatch):
        identity(F5, 0)
    with pytest.raises(DimensionMismatch):
        matrix_unit(QQ, 2, 3, 1)


def test_unipotent_square_over_f2():
    F2 = FieldSpec.prime(2)
    A = Matrix(F2, [[1, 1], [0, 1]])
    assert mat_mul(A, A) == identity(F2, 2)


def test_multiplication_and_powers():
    A = Matrix(QQ, [[1, 1], [1, 0]])
    assert mat_pow(A, 5) == Matrix(QQ, [[8, 5], [5, 3]])
    assert mat_pow(A, 0) == identity(QQ, 2)
    assert mat_mul(A, mat_pow(A, -1)) == identity(QQ, 2)
    with pytest.raises(DimensionMismatch):
        mat_mul(A, zeros(QQ, 3))
    with pytest.raises(MixedFields):
        mat_mul(A, identity(F5, 2))


def test_rank_and_determinant_examples():
    A = Matrix(QQ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mat_rank(A) == 2
    assert mat_det(A) == 0
    B = Matrix(QQ, [[0, 1], [1, 0]])
    assert mat_det(B) == -1
    C = Matrix(F5, [[2, 0], [0, 3]])
    assert mat_det(C) == 1


def test_inverse_and_singular():
    A = Matrix(F5, [[1, 2], [3, 4]])
    assert mat_mul(A, mat_inverse(A)) == identity(F5, 2)
    with pytest.raises(Singular):
        mat_inverse(Matrix(QQ, [[1, 2], [2, 4]]))
    with pytest.raises(NotSquare):
        mat_det(Matrix(QQ, [[1, 2]]))


def test_rref_and_nullspace():
    A = Matrix(QQ, [[1, 2, 3], [2, 4, 6]])
    R, pivots = rref(A)
    assert pivots == [0]
    assert R == Matrix(QQ, [[1, 2, 3], [0, 0, 0]])
    K = nullspace(A)
    assert K.shape == (3, 2)
    assert mat_mul(A, K).is_zero()
    assert nullspace(identity(QQ, 2)) is None


def test_extend_to_basis():
    K = Matrix(QQ, [[0], [1], [1]])
    B = extend_to_basis(K)
    assert B.column(0) == K
    assert mat_rank(B) == 3


def test_conjugate_changes_basis():
    A = Matrix(QQ, [[0, 0], [1, 0]])
    P = Matrix(QQ, [[0, 1], [1, 0]])
    assert mat_conjugate(A, P) == Matrix(QQ, [[0, 1], [0, 0]])
    assert mat_conjugate(A, identity(QQ, 2)) == A
    Q = Matrix(QQ, [[1, -1], [0, 1]])
    assert mat_conjugate(matrix_unit(QQ, 2, 2, 1), Q) == Matrix(QQ, [[1, -1], [1, -1]])


@pytest.mark.parametrize("spec", [FieldSpec.prime(2), FieldSpec.prime(3), QQ])
@pytest.mark.parametrize("sample_seed", range(6))
def test_similarity_invariants(spec, sample_seed):
    n = 2 + sample_seed % 4
    P = random_invertible(n, spec, sample_seed)
    A = random_matrix_of_rank(n, sample_seed % (n + 1), spec, sample_seed + 100)
    B = mat_conjugate(A, P)
    assert mat_rank(B) == mat_rank(A)
    assert mat_det(B) == mat_det(A)
    J = block_diag([zeros(spec, 1), companion(Polynomial.x_power(spec, n - 1))])
    assert nilpotency_index(mat_conjugate(J, P), n) == nilpotency_index(J, n) == n - 1


def test_nilpotency_index():
    J = Matrix(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert nilpotency_index(J, 3) == 3
    assert nilpotency_index(J, 2) is None
    assert nilpotency_index(zeros(QQ, 2), 2) == 1
    assert nilpotency_index(identity(QQ, 2), 5) is None


def test_nilpotent_jordan_type():
    J = block_diag([Matrix(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]]),
                    Matrix(QQ, [[0, 0], [1, 0]]), zeros(QQ, 1)])
    assert nilpotent_jordan_type(J) == (3, 2, 1)
    assert nilpotent_jordan_type(zeros(F5, 3)) == (1, 1, 1)
    with pytest.raises(NotNilpotent):
        nilpotent_jordan_type(identity(QQ, 2))


def test_block_diag_and_permutation():
    D = block_diag([identity(QQ, 1), Matrix(QQ, [[2, 3], [4, 5]])])
    assert D == Matrix(QQ, [[1, 0, 0], [0, 2, 3], [0, 4, 5]])
    with pytest.raises(EmptyInput):
        block_diag([])
    P = permutation_matrix(QQ, [2, 0, 1])
    assert P == Matrix(QQ, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    with pytest.raises(NotAPermutation):
        permutation_matrix(QQ, [0, 0, 1])


def test_stack_rows():
    S = stack_rows([Matrix(QQ, [[1, 2]]), Matrix(QQ, [[3, 4]])])
    assert S == Matrix(QQ, [[1, 2], [3, 4]])


def test_format_matrix_labels():
    text = format_matrix(Matrix(QQ, [[1, Fraction(-1, 2)]]))
    assert "-1/2" in text
    assert text.splitlines()[0].split() == ["1", "2"]


@seed(3)
@settings(max_examples=60, deadline=None)
@given(small_tables)
def test_rank_and_det_agree_with_sympy(table):
    A = Matrix(QQ, table)
    reference = sympy.Matrix(table)
    assert mat_rank(A) == reference.rank()
    assert mat_det(A) == Fraction(int(reference.det()))


@seed(5)
@settings(max_examples=60, deadline=None)
@given(small_tables)
def test_inverse_over_prime_field(table):
    A = Matrix(F5, table)
    if mat_det(A).is_zero():
        with pytest.raises(Singular):
            mat_inverse(A)
    else:
        assert mat_mul(mat_inverse(A), A) == identity(F5, A.rows)


@seed(29)
@settings(max_examples=80, deadline=None)
@given(small_tables)
def test_full_rank_iff_nonzero_determinant(table):
    for spec in (FieldSpec.prime(2), F5, QQ):
        A = Matrix(spec, table)
        assert (mat_rank(A) == A.rows) == (not mat_det(A).is_zero())
