import pytest

from unitnilpy.canonical.frobenius import BlockSpec
from unitnilpy.construct.gadgets import (chain_nilpotent,
                                         complement_for_invertible,
                                         complement_for_nilpotent,
                                         host_capacity, j_block,
                                         lemma_basis_matrix,
                                         max_rank_nilpotent,
                                         nilpotent_max_rank,
                                         special_nilpotent)
from unitnilpy.errors import (CapacityExceeded, IndexConstraintViolated,
                              InvalidBlock)
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import (Matrix, block_diag, identity, mat_add,
                                       mat_conjugate, mat_det, mat_mul,
                                       mat_rank, nilpotency_index, zeros)
from unitnilpy.exactalg.polynomial import Polynomial, companion

QQ = FieldSpec.rationals()
F11 = FieldSpec.prime(11)

N_1_3_5 = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -1, -1, -1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
]

N_2_7_4 = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
]

GOLDEN = Polynomial(QQ, [-1, -1, 1])


def test_special_nilpotent_displays():
    assert special_nilpotent(9, 1, 3, 5, QQ) == Matrix(QQ, N_1_3_5)
    assert special_nilpotent(9, 2, 7, 4, QQ) == Matrix(QQ, N_2_7_4)
    assert special_nilpotent(2, 1, 2, 2, QQ) == Matrix(QQ, [[1, -1], [1, -1]])


@pytest.mark.parametrize("args", [(3, 1, 2, 1), (3, 2, 2, 2), (3, 1, 3, 3), (2, 1, 2, 3)])
def test_special_nilpotent_rejects_bad_indices(args):
    with pytest.raises(IndexConstraintViolated):
        special_nilpotent(*args, QQ)


def test_lemma_basis_small_case():
    Q = lemma_basis_matrix(2, 1, 2, 2, QQ)
    assert Q == Matrix(QQ, [[1, -1], [0, 1]])
    J = chain_nilpotent(2, 2, QQ)
    assert mat_conjugate(J, Q) == special_nilpotent(2, 1, 2, 2, QQ)


def test_lemma_basis_reproduces_chain_form():
    n, k = 9, 5
    N = special_nilpotent(n, 1, 2, k, QQ)
    assert mat_conjugate(chain_nilpotent(n, k, QQ), lemma_basis_matrix(n, 1, 2, k, QQ)) == N


def test_gadget_sweep():
    for n in range(2, 9):
        for k in range(2, n + 1):
            for s in range(2, n - k + 3):
                for r in range(1, s):
                    N = special_nilpotent(n, r, s, k, QQ)
                    assert mat_rank(N) == k - 1
                    assert nilpotency_index(N, k) == k
                    Q = lemma_basis_matrix(n, r, s, k, QQ)
                    assert mat_conjugate(chain_nilpotent(n, k, QQ), Q) == N


def test_summed_gadgets_are_orthogonal():
    A = special_nilpotent(9, 1, 3, 5, QQ)
    B = special_nilpotent(9, 2, 7, 4, QQ)
    assert mat_mul(A, B).is_zero()
    assert mat_mul(B, A).is_zero()


@pytest.mark.parametrize("spec", [QQ, FieldSpec.prime(3)])
def test_j_block_determinant(spec):
    for r in range(1, 11):
        assert mat_det(j_block(r, spec)) == (-1) ** r


def test_complement_for_invertible_worked_example():
    N = complement_for_invertible(GOLDEN, 7, 5)
    assert N == mat_add(Matrix(QQ, N_1_3_5), Matrix(QQ, N_2_7_4))
    B = block_diag([companion(GOLDEN), zeros(QQ, 7)])
    assert not mat_det(mat_add(B, N)).is_zero()


def test_complement_for_invertible_small_cases():
    assert complement_for_invertible(GOLDEN, 0, 5) == zeros(QQ, 2)
    q = Polynomial(QQ, [-1, 1])
    N = complement_for_invertible(q, 1, 2)
    assert N == special_nilpotent(2, 1, 2, 2, QQ)
    U = mat_add(block_diag([companion(q), zeros(QQ, 1)]), N)
    assert U == Matrix(QQ, [[2, -1], [1, -1]])
    assert mat_det(U) == -1


def test_complement_for_invertible_errors():
    with pytest.raises(CapacityExceeded):
        complement_for_invertible(GOLDEN, 9, 5)
    with pytest.raises(InvalidBlock):
        complement_for_invertible(Polynomial(QQ, [0, 1]), 1, 2)
    with pytest.raises(IndexConstraintViolated):
        complement_for_invertible(GOLDEN, 1, 1)


def test_complement_for_nilpotent_worked_example():
    N = complement_for_nilpotent(4, 5, 4, QQ)
    expected = mat_add(special_nilpotent(9, 1, 4, 4, QQ), special_nilpotent(9, 2, 7, 4, QQ))
    assert N == expected
    C = block_diag([companion(Polynomial.x_power(QQ, 4)), zeros(QQ, 5)])
    assert not mat_det(mat_add(C, N)).is_zero()


def test_complement_for_nilpotent_small_cases():
    N = complement_for_nilpotent(2, 0, 2, QQ)
    U = mat_add(companion(Polynomial.x_power(QQ, 2)), N)
    assert U == Matrix(QQ, [[1, -1], [2, -1]])
    assert mat_det(U) == 1

    N = complement_for_nilpotent(2, 1, 5, QQ)
    assert N == special_nilpotent(3, 1, 2, 3, QQ)
    U = mat_add(block_diag([companion(Polynomial.x_power(QQ, 2)), zeros(QQ, 1)]), N)
    assert U == Matrix(QQ, [[1, 0, -1], [2, -1, -1], [0, 1, 0]])
    assert mat_det(U) == -1


def test_complement_for_nilpotent_capacity():
    with pytest.raises(CapacityExceeded):
        complement_for_nilpotent(2, 1, 2, QQ)
    with pytest.raises(IndexConstraintViolated):
        complement_for_nilpotent(1, 0, 2, QQ)


@pytest.mark.slow
@pytest.mark.parametrize("spec", [QQ, F11])
def test_complement_for_nilpotent_full_lattice(spec):
    for t in range(2, 9):
        for k in range(2, 9):
            for z in range(0, t * (k - 1) - k + 1):
                N = complement_for_nilpotent(t, z, k, spec)
                assert nilpotency_index(N, k) is not None
                C = block_diag([companion(Polynomial.x_power(spec, t))] + ([zeros(spec, z)] if z else []))
                assert not mat_det(mat_add(C, N)).is_zero()


def test_complement_for_invertible_full_range():
    for q in (Polynomial(QQ, [1, 1]), GOLDEN, Polynomial(QQ, [2, 0, 0, 1])):
        t = q.degree
        for k in range(2, 6):
            for z in range(0, t * (k - 1) + 1):
                N = complement_for_invertible(q, z, k)
                assert nilpotency_index(N, k) is not None


def test_capacities_and_max_rank():
    assert host_capacity(BlockSpec.invertible(GOLDEN), 5) == 8
    assert host_capacity(BlockSpec.x_power(QQ, 2), 3) == 1
    assert host_capacity(BlockSpec.zero_one(QQ), 3) == 0
    assert nilpotent_max_rank(9, 5) == 7
    assert nilpotent_max_rank(9, 4) == 6
    assert nilpotent_max_rank(6, 1) == 0
    for n in range(1, 9):
        for k in range(1, n + 1):
            N = max_rank_nilpotent(n, k, QQ)
            assert mat_rank(N) == nilpotent_max_rank(n, k)
            assert nilpotency_index(N, k) is not None


def test_identity_is_not_nilpotent():
    assert nilpotency_index(identity(QQ, 3), 3) is None
