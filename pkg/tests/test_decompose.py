import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

from unitnilpy.canonical.frobenius import BlockKind, BlockSpec
from unitnilpy.construct.decompose import (Decomposition, Infeasible,
                                           decompose, distribute_zeros,
                                           feasible)
from unitnilpy.construct.gadgets import nilpotent_max_rank, special_nilpotent
from unitnilpy.errors import (DistributionImpossible, IndexConstraintViolated,
                              NotSquare)
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import (Matrix, block_diag, identity, mat_add,
                                       mat_det, mat_neg, mat_rank,
                                       matrix_unit, nilpotency_index, zeros)
from unitnilpy.exactalg.polynomial import Polynomial, companion
from unitnilpy.verify.generator import random_invertible, random_matrix_of_rank
from unitnilpy.verify.verifier import verify_decomposition

QQ = FieldSpec.rationals()
PRIMES = [2, 3, 5, 7, 101]


def _assert_sound(A, k, result):
    assert isinstance(result, Decomposition)
    n = A.rows
    assert mat_add(result.U, result.N) == A
    assert not mat_det(result.U).is_zero()
    assert nilpotency_index(result.N, min(k, n)) is not None
    assert mat_rank(result.N) <= nilpotent_max_rank(n, k)
    assert verify_decomposition(A, result.U, result.N, k).overall


def test_feasible_criterion():
    assert not feasible(matrix_unit(QQ, 4, 1, 2), 2)
    assert feasible(matrix_unit(QQ, 2, 2, 1), 2)
    assert feasible(identity(QQ, 3), 1)
    assert not feasible(zeros(QQ, 3), 5)
    with pytest.raises(NotSquare):
        feasible(Matrix(QQ, [[1, 2]]), 2)
    with pytest.raises(IndexConstraintViolated):
        feasible(identity(QQ, 2), 0)


def test_distribute_zeros_single_host():
    blocks = [BlockSpec.invertible(Polynomial(QQ, [-1, -1, 1]))] + [BlockSpec.zero_one(QQ)] * 7
    assignment = distribute_zeros(blocks, 5)
    assert len(assignment.hosts) == 1
    assert assignment.hosts[0].zeros_assigned == 7
    assert assignment.permutation == tuple(range(8))


def test_distribute_zeros_prefers_invertible_hosts():
    blocks = [BlockSpec.x_power(QQ, 2), BlockSpec.zero_one(QQ),
              BlockSpec.invertible(Polynomial(QQ, [1, 1])), BlockSpec.zero_one(QQ)]
    assignment = distribute_zeros(blocks, 3)
    assert [h.position for h in assignment.hosts] == [2, 0]
    assert [h.zeros_assigned for h in assignment.hosts] == [2, 0]
    assert assignment.permutation == (2, 1, 3, 0)


def test_distribute_zeros_shortfall():
    blocks = [BlockSpec.x_power(QQ, 2), BlockSpec.zero_one(QQ)]
    with pytest.raises(DistributionImpossible):
        distribute_zeros(blocks, 2)
    with pytest.raises(DistributionImpossible):
        distribute_zeros([BlockSpec.zero_one(QQ)], 3)


def test_decompose_nilpotent_two_by_two():
    A = matrix_unit(QQ, 2, 2, 1)
    result = decompose(A, 2)
    assert result.U == Matrix(QQ, [[1, -1], [2, -1]])
    assert result.N == Matrix(QQ, [[-1, 1], [-1, 1]])
    assert result.certificate.index_N == 2
    _assert_sound(A, 2, result)


def test_decompose_invertible_is_trivial():
    A = random_invertible(4, FieldSpec.prime(7), 3)
    result = decompose(A, 2)
    assert result.U == A
    assert result.N.is_zero()
    assert result.certificate.jordan_type_N == (1, 1, 1, 1)


def test_decompose_infeasible():
    result = decompose(matrix_unit(QQ, 4, 1, 2), 2)
    assert result == Infeasible(1, 4, 2)
    assert result.threshold == 2


def test_decompose_k_one_needs_invertible():
    assert isinstance(decompose(matrix_unit(QQ, 2, 2, 1), 1), Infeasible)


def test_decompose_one_by_one():
    assert isinstance(decompose(Matrix(QQ, [[0]]), 3), Infeasible)
    result = decompose(Matrix(QQ, [[5]]), 3)
    assert result.N.is_zero()


def test_decompose_worked_examples():
    B = block_diag([companion(Polynomial(QQ, [-1, -1, 1])), zeros(QQ, 7)])
    result = decompose(B, 5)
    complement = mat_add(special_nilpotent(9, 1, 3, 5, QQ), special_nilpotent(9, 2, 7, 4, QQ))
    assert result.N == mat_neg(complement)
    _assert_sound(B, 5, result)

    C = block_diag([companion(Polynomial.x_power(QQ, 4)), zeros(QQ, 5)])
    result = decompose(C, 4)
    complement = mat_add(special_nilpotent(9, 1, 4, 4, QQ), special_nilpotent(9, 2, 7, 4, QQ))
    assert result.N == mat_neg(complement)
    _assert_sound(C, 4, result)


def test_decompose_clamps_large_k():
    A = matrix_unit(QQ, 3, 2, 1)
    A = mat_add(A, matrix_unit(QQ, 3, 3, 2))
    result = decompose(A, 10)
    _assert_sound(A, 10, result)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_rank_one_necessity(k):
    n = k + 2
    assert isinstance(decompose(matrix_unit(QQ, n, 1, 2), k), Infeasible)


@seed(23)
@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.integers(min_value=2, max_value=9),
       st.integers(min_value=2, max_value=5), st.integers(min_value=0, max_value=10 ** 6))
def test_decompose_random_feasible_prime_field(p, n, k, sample_seed):
    spec = FieldSpec.prime(p)
    low = -(-n // k)
    r = low + sample_seed % (n - low + 1)
    A = random_matrix_of_rank(n, r, spec, sample_seed)
    _assert_sound(A, k, decompose(A, k))


@seed(29)
@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.integers(min_value=2, max_value=4),
       st.integers(min_value=0, max_value=10 ** 6))
def test_decompose_random_feasible_rationals(n, k, sample_seed):
    low = -(-n // k)
    r = low + sample_seed % (n - low + 1)
    A = random_matrix_of_rank(n, r, QQ, sample_seed)
    _assert_sound(A, k, decompose(A, k))


def test_host_blocks_keep_their_kind():
    B = block_diag([companion(Polynomial(QQ, [-1, -1, 1])), zeros(QQ, 7)])
    hosts = decompose(B, 5).certificate.assignment.hosts
    assert [h.block.kind for h in hosts] == [BlockKind.INVERTIBLE]
