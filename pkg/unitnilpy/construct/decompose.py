# -*- coding: utf-8 -*-
"""
Created on 08/10/2026

Split a square matrix A into A = U + N with U invertible and N^k = 0,
whenever k.rank(A) >= n.

The matrix is brought to blocks of three kinds (invertible companions, 1x1
zeros, C(x^m) with m >= 2). Every zero block is handed to a host block that
can absorb it; each host and its zeros then receive a nilpotent complement,
and the negated sum of complements, carried back to the original basis, is N.

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
from dataclasses import dataclass

from unitnilpy.canonical.frobenius import BlockKind, block_form
from unitnilpy.construct.gadgets import (complement_for_invertible,
                                         complement_for_nilpotent,
                                         host_capacity, nilpotent_max_rank)
from unitnilpy.errors import (DistributionImpossible, IndexConstraintViolated,
                              InternalVerificationFailed, NotSquare)
from unitnilpy.exactalg.matrix import (Matrix, block_diag, mat_det,
                                       mat_inverse, mat_mul, mat_neg,
                                       mat_rank, mat_sub, nilpotency_index,
                                       nilpotent_jordan_type,
                                       permutation_matrix, zeros)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HostEntry:
    '''
    A host block at position `position` of the block list, followed after
    reordering by the zero blocks at `zero_positions`.
    '''
    position: int
    block: object
    zeros_assigned: int
    zero_positions: tuple


@dataclass(frozen=True)
class HostAssignment:
    hosts: tuple
    permutation: tuple


@dataclass(frozen=True)
class Certificate:
    rank_A: int
    index_N: int
    assignment: HostAssignment
    rank_N: int
    jordan_type_N: tuple


@dataclass(frozen=True)
class Decomposition:
    '''
    A = U + N with det U != 0 and N^k = 0.
    '''
    U: Matrix
    N: Matrix
    k: int
    certificate: Certificate


@dataclass(frozen=True)
class Infeasible:
    '''
    No decomposition exists: k.rank_A < n.
    '''
    rank_A: int
    n: int
    k: int

    @property
    def threshold(self):
        '''Least rank that would make the instance feasible, ceil(n/k).'''
        return -(-self.n // self.k)


def _check_square(A, k):
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols} matrix is not square")
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise IndexConstraintViolated(f"nilpotency index {k!r} must be an integer >= 1")


def feasible(A, k):
    '''
    True iff some invertible U and N with N^k = 0 give A = U + N, that is
    iff k.rank(A) >= n.

    :param A: square matrix.
    :type A: Matrix

    :param k: bound on the nilpotency index, >= 1.
    :type k: int

    :return bool
    '''
    _check_square(A, k)
    return k * mat_rank(A) >= A.rows


def distribute_zeros(blocks, k):
    '''
    Greedy assignment of the 1x1 zero blocks to host blocks.

    Hosts are the invertible companions, in input order, then the C(x^m)
    blocks, in input order; each takes zeros up to its capacity before the
    next one is used. The permutation lists every block position once: each
    host followed by its zeros.

    :param blocks: block list of a BlockForm.
    :type blocks: sequence of BlockSpec

    :param k: nilpotency index bound, >= 2.
    :type k: int

    :return HostAssignment
    :raises DistributionImpossible: the hosts cannot absorb every zero block.
    '''
    if k < 2:
        raise IndexConstraintViolated(f"zero blocks cannot be hosted with k={k}")
    blocks = list(blocks)
    zero_positions = [i for i, b in enumerate(blocks) if b.kind is BlockKind.ZERO_ONE]
    host_positions = [i for i, b in enumerate(blocks) if b.kind is BlockKind.INVERTIBLE] + \
                     [i for i, b in enumerate(blocks) if b.kind is BlockKind.X_POWER]

    pending = list(zero_positions)
    hosts = []
    for position in host_positions:
        block = blocks[position]
        take = min(host_capacity(block, k), len(pending))
        taken, pending = pending[:take], pending[take:]
        hosts.append(HostEntry(position, block, take, tuple(taken)))
    if pending:
        total = sum(host_capacity(blocks[i], k) for i in host_positions)
        raise DistributionImpossible(
            f"{len(zero_positions)} zero blocks but total host capacity {total} for k={k}")

    permutation = []
    for host in hosts:
        permutation.append(host.position)
        permutation.extend(host.zero_positions)
    return HostAssignment(tuple(hosts), tuple(permutation))


def _trivial(A, k, rank_A):
    n = A.rows
    N = zeros(A.spec, n)
    certificate = Certificate(rank_A, 1, HostAssignment((), ()), 0, (1,) * n)
    return Decomposition(A, N, k, certificate)


def _complement(host, k):
    block = host.block
    if block.kind is BlockKind.INVERTIBLE:
        return complement_for_invertible(block.poly, host.zeros_assigned, k)
    return complement_for_nilpotent(block.size, host.zeros_assigned, k, block.spec)


def decompose(A, k, **kwargs):
    '''
    Build A = U + N with U invertible and N^k = 0.

    :param A: square matrix over F_p or Q.
    :type A: Matrix

    :param k: bound on the nilpotency index of N, >= 1. Values above n are
        clamped to n for the construction.
    :type k: int

    :param \\**kwargs:
    See below

    :Keyword Arguments
        * *verify* (bool) default True, forwarded to frobenius_form

    :return Decomposition, or Infeasible when k.rank(A) < n
    :raises InternalVerificationFailed: a constructed object failed its
        post-check. Signals a bug, never bad input.
    '''
    _check_square(A, k)
    spec, n = A.spec, A.rows
    rank_A = mat_rank(A)
    if k * rank_A < n:
        _logger.info("infeasible: %d * rank %d < %d", k, rank_A, n)
        return Infeasible(rank_A, n, k)
    if k == 1 or rank_A == n:
        _logger.debug("invertible input, N = 0")
        return _trivial(A, k, rank_A)

    k_eff = min(k, n)
    form = block_form(A, **kwargs)
    try:
        assignment = distribute_zeros(form.blocks, k_eff)
    except DistributionImpossible as exc:
        raise InternalVerificationFailed(f"feasible input could not be distributed: {exc}") from exc

    offsets = []
    start = 0
    for block in form.blocks:
        offsets.append(start)
        start += block.size
    coords = []
    for position in assignment.permutation:
        block = form.blocks[position]
        coords.extend(range(offsets[position], offsets[position] + block.size))
    S = mat_mul(form.transform, permutation_matrix(spec, coords))

    M = block_diag([_complement(host, k_eff) for host in assignment.hosts])
    N = mat_mul(mat_mul(S, mat_neg(M)), mat_inverse(S))
    U = mat_sub(A, N)

    index_N = nilpotency_index(N, n)
    if mat_det(U).is_zero():
        raise InternalVerificationFailed("U is singular")
    if index_N is None or index_N > k_eff:
        raise InternalVerificationFailed(f"N is not nilpotent of index <= {k}")
    rank_N = mat_rank(N)
    if rank_N > nilpotent_max_rank(n, k):
        raise InternalVerificationFailed(f"rank N = {rank_N} above {nilpotent_max_rank(n, k)}")

    certificate = Certificate(rank_A, index_N, assignment, rank_N, nilpotent_jordan_type(N))
    _logger.debug("decomposed with index %d, rank N %d, hosts %d",
                  index_N, rank_N, len(assignment.hosts))
    return Decomposition(U, N, k, certificate)
