# -*- coding: utf-8 -*-
"""
Created on 11/10/2026

Replays the two worked 9 x 9 examples entry by entry, over Q and F_11,
together with the sweep over every N_{r,s,k} with n <= 8 and the
determinants of the J_r blocks.

/*
 * GNU GPL v3 License (by, nc, nd, sa)
 *
 * Copyright 2026 unitnilpy developers
 *
 * This program is free software: you can redistribute it and/or modify
 * it under the terms of the GNU General Public License as published by
 * the Free Software Foundation, either version 3 of the License, or
 * (at your option) any later version.
 *
 * This program is distributed in the hope that it will be useful,
 * but WITHOUT ANY WARRANTY; without even the implied warranty of
 * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
 * GNU General Public License for more details.
 *
 * You should have received a copy of the GNU General Public License
 * along with this program.  If not, see <http://www.gnu.org/licenses/>.
 *
 */

@author: unitnilpy developers
"""
from __future__ import annotations

import logging

from unitnilpy.construct.decompose import Decomposition, decompose
from unitnilpy.construct.gadgets import (chain_nilpotent, j_block,
                                         lemma_basis_matrix, special_nilpotent)
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import (Matrix, block_diag, mat_add, mat_det,
                                       mat_conjugate, mat_neg, mat_rank,
                                       nilpotency_index, zeros)
from unitnilpy.exactalg.polynomial import Polynomial, companion

_logger = logging.getLogger(__name__)

# C(x^2 - x - 1) + 0_7 plus N_{1,3,5} + N_{2,7,4}
EXAMPLE_B_UNIT = [
    [1, 1, 0, 0, 0, -1, 0, 0, 0],
    [1, 2, 0, 0, 0, 0, 0, 0, -1],
    [1, 0, -1, -1, -1, -1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
]

# C(x^4) + 0_5 plus N_{1,4,4} + N_{2,7,4}
EXAMPLE_C_UNIT = [
    [1, 0, 0, 0, 0, -1, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, -1],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, -1, -1, -1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, -1, -1],
    [0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
]

SELFTEST_FIELDS = (FieldSpec.rationals(), FieldSpec.prime(11))


def example_b(spec):
    '''C(x^2 - x - 1) followed by seven 1x1 zero blocks.'''
    golden = companion(Polynomial(spec, [-1, -1, 1]))
    return block_diag([golden, zeros(spec, 7)])


def example_c(spec):
    '''The 4x4 nilpotent chain followed by five 1x1 zero blocks.'''
    return block_diag([companion(Polynomial.x_power(spec, 4)), zeros(spec, 5)])


def _replay(A, k, gadgets, unit_rows):
    spec, n = A.spec, A.rows
    result = decompose(A, k)
    if not isinstance(result, Decomposition):
        return False
    complement = zeros(spec, n)
    for r, s, size in gadgets:
        complement = mat_add(complement, special_nilpotent(n, r, s, size, spec))
    return (result.N == mat_neg(complement)
            and result.U == Matrix(spec, unit_rows)
            and not mat_det(result.U).is_zero())


def lemma_sweep(max_n, spec):
    '''
    Every valid (n, r, s, k) with n <= max_n: rank k-1, index exactly k, and
    the change of basis from the single chain.

    :return list of failing tuples
    '''
    failures = []
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            J = chain_nilpotent(n, k, spec)
            for s in range(2, n - k + 3):
                for r in range(1, s):
                    N = special_nilpotent(n, r, s, k, spec)
                    Q = lemma_basis_matrix(n, r, s, k, spec)
                    if (mat_rank(N) != k - 1 or nilpotency_index(N, k) != k
                            or mat_conjugate(J, Q) != N):
                        failures.append((n, r, s, k))
    return failures


def run_selftest(**kwargs):
    '''
    :Keyword Arguments
        * *lemma_max_n* (int) default 8
        * *j_max* (int) default 10

    :return list of (name, passed) pairs
    '''
    lemma_max_n = kwargs.get('lemma_max_n', 8)
    j_max = kwargs.get('j_max', 10)
    results = []

    def record(name, passed):
        results.append((name, bool(passed)))
        if passed:
            _logger.info("PASS %s", name)
        else:
            _logger.error("FAIL %s", name)

    for spec in SELFTEST_FIELDS:
        record(f"example B, k=5, over {spec}",
               _replay(example_b(spec), 5, [(1, 3, 5), (2, 7, 4)], EXAMPLE_B_UNIT))
        record(f"example C, k=4, over {spec}",
               _replay(example_c(spec), 4, [(1, 4, 4), (2, 7, 4)], EXAMPLE_C_UNIT))
    record(f"N_(r,s,k) sweep, n <= {lemma_max_n}", not lemma_sweep(lemma_max_n, FieldSpec.rationals()))
    for spec in (FieldSpec.rationals(), FieldSpec.prime(3)):
        record(f"det J_r = (-1)^r, r <= {j_max}, over {spec}",
               all(mat_det(j_block(r, spec)) == (-1) ** r for r in range(1, j_max + 1)))
    return results
