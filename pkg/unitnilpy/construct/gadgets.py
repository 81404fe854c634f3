# -*- coding: utf-8 -*-
"""
Created on 07/10/2026

Nilpotent building blocks N_{r,s,k} and the per-block complements that turn
a companion block followed by z zero blocks into an invertible matrix while
staying nilpotent of index at most k.

All indices r, s are 1-based, as in the formula

    N_{r,s,k} = e_rr + e_sr - e_{r,s+k-2} - sum_{i=0}^{k-2} e_{s,s+i}
                + sum_{i=0}^{k-3} e_{s+i+1,s+i}

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

import numpy as np

from unitnilpy.canonical.frobenius import BlockKind
from unitnilpy.errors import (CapacityExceeded, IndexConstraintViolated,
                              InternalVerificationFailed, InvalidBlock,
                              NotMonic)
from unitnilpy.exactalg.matrix import (Matrix, block_diag, mat_add,
                                       mat_det, nilpotency_index, zeros)
from unitnilpy.exactalg.polynomial import Polynomial, companion

_logger = logging.getLogger(__name__)


def _check_indices(n, r, s, k):
    if not (2 <= k <= n and 1 <= r < s <= n and s + k - 2 <= n):
        raise IndexConstraintViolated(
            f"N_(r={r}, s={s}, k={k}) needs 2 <= k <= n, 1 <= r < s <= n, s+k-2 <= n with n={n}")


def special_nilpotent(n, r, s, k, spec):
    '''
    The n x n matrix N_{r,s,k}: rank k-1 and nilpotent of index exactly k.

    :param n: size.
    :type n: int

    :param r: 1-based row/column of the e_rr entry.
    :type r: int

    :param s: 1-based start of the chain block, r < s.
    :type s: int

    :param k: nilpotency index, 2 <= k <= n.
    :type k: int

    :param spec: field of the entries.
    :type spec: FieldSpec

    :return Matrix
    '''
    _check_indices(n, r, s, k)
    arr = np.full((n, n), 0, dtype=object)
    arr[r - 1, r - 1] += 1
    arr[s - 1, r - 1] += 1
    arr[r - 1, s + k - 3] -= 1
    for i in range(k - 1):
        arr[s - 1, s - 1 + i] -= 1
    for i in range(k - 2):
        arr[s + i, s - 1 + i] += 1
    return Matrix(spec, arr)


def lemma_basis_matrix(n, r, s, k, spec):
    '''
    Change of basis Q with Q^{-1}.J.Q = N_{r,s,k}, where J = sum e_{i+1,i}
    over i = 1..k-1 is a single nilpotent chain of length k.

    Columns: v_r = e_1, v_{s+i} = e_{i+2} - e_1 (i = 0..k-2), and the
    remaining slots take e_{k+1}, e_{k+2}, ... in index order.
    '''
    _check_indices(n, r, s, k)
    arr = np.full((n, n), 0, dtype=object)
    arr[0, r - 1] = 1
    chain = set(range(s, s + k - 1))
    for i in range(k - 1):
        arr[i + 1, s - 1 + i] = 1
        arr[0, s - 1 + i] = -1
    spare = iter(range(k, n))
    for slot in range(1, n + 1):
        if slot != r and slot not in chain:
            arr[next(spare), slot - 1] = 1
    return Matrix(spec, arr)


def chain_nilpotent(n, k, spec):
    '''The n x n matrix sum_{i=1}^{k-1} e_{i+1,i}.'''
    arr = np.full((n, n), 0, dtype=object)
    for i in range(k - 1):
        arr[i + 1, i] = 1
    return Matrix(spec, arr)


def j_block(r, spec):
    '''
    r x r matrix with -1 across the first row and ones on the subdiagonal,
    the companion of 1 + x + ... + x^r up to a reflection. Its determinant
    is (-1)^r.
    '''
    if r < 1:
        raise IndexConstraintViolated(f"block size {r} < 1")
    arr = np.full((r, r), 0, dtype=object)
    arr[0, :] = -1
    for i in range(r - 1):
        arr[i + 1, i] = 1
    return Matrix(spec, arr)


def host_capacity(block, k):
    '''
    Most zero blocks a host block can absorb for nilpotency index k:
    t(k-1) for an invertible companion of size t, t(k-1)-k for C(x^t),
    nothing for a zero block.
    '''
    t = block.size
    if block.kind is BlockKind.INVERTIBLE:
        return t * (k - 1)
    if block.kind is BlockKind.X_POWER:
        return max(t * (k - 1) - k, 0)
    return 0


def _verify_complement(base, N, k, label):
    if nilpotency_index(N, k) is None:
        raise InternalVerificationFailed(f"{label}: complement is not nilpotent of index <= {k}")
    if mat_det(mat_add(base, N)).is_zero():
        raise InternalVerificationFailed(f"{label}: block plus complement is singular")


def _sum(n, spec, parts):
    total = zeros(spec, n)
    for r, s, k in parts:
        total = mat_add(total, special_nilpotent(n, r, s, k, spec))
    return total


def complement_for_invertible(q, z, k):
    '''
    Nilpotent N_B with N_B^k = 0 such that block_diag(companion(q), 0_z) + N_B
    is invertible.

    With t = deg q and z = c(k-1) + d, N_B is the sum of
    N_{i, t+1+(i-1)(k-1), k} for i = 1..c, plus N_{c+1, t+1+c(k-1), d+1}
    when d > 0.

    :param q: monic with q(0) != 0.
    :type q: Polynomial

    :param z: number of trailing zero blocks, 0 <= z <= t(k-1).
    :type z: int

    :param k: nilpotency index bound, >= 2 whenever z > 0.
    :type k: int

    :return Matrix of size t+z
    '''
    if not q.is_monic():
        raise NotMonic(f"{q} is not monic")
    if q.constant_term == 0:
        raise InvalidBlock(f"{q} vanishes at 0")
    spec, t = q.spec, q.degree
    if z < 0:
        raise IndexConstraintViolated(f"negative zero count {z}")
    if z == 0:
        return zeros(spec, t)
    if k < 2:
        raise IndexConstraintViolated(f"index bound {k} < 2 with {z} zero blocks")
    if z > t * (k - 1):
        raise CapacityExceeded(f"{z} zero blocks exceed capacity {t * (k - 1)} of C({q})")

    n = t + z
    c, d = divmod(z, k - 1)
    parts = [(i, t + 1 + (i - 1) * (k - 1), k) for i in range(1, c + 1)]
    if d > 0:
        parts.append((c + 1, t + 1 + c * (k - 1), d + 1))
    N = _sum(n, spec, parts)
    _logger.debug("C(%s) + %d zeros: N_(r,s,k) for %s", q, z, parts)

    _verify_complement(block_diag([companion(q), zeros(spec, z)]), N, k, f"C({q})")
    return N


def complement_for_nilpotent(t, z, k, spec):
    '''
    Nilpotent N_C with N_C^k = 0 such that
    block_diag(companion(x^t), 0_z) + N_C is invertible.

    Below z = k-2 a single N_{1,t,z+2} does it. From there on, with
    z-k+2 = c(k-1) + d, N_C is N_{1,t,k} plus N_{i, t+(i-1)(k-1), k} for
    i = 2..c+1, plus N_{c+2, t+(c+1)(k-1), d+1} when d > 0.

    :raises CapacityExceeded: z > t(k-1) - k
    '''
    if t < 2 or k < 2 or z < 0:
        raise IndexConstraintViolated(f"need t >= 2, k >= 2, z >= 0, got t={t}, k={k}, z={z}")
    capacity = t * (k - 1) - k
    if z > capacity:
        raise CapacityExceeded(f"{z} zero blocks exceed capacity {capacity} of C(x^{t})")

    n = t + z
    if z < k - 2:
        parts = [(1, t, z + 2)]
    else:
        c, d = divmod(z - k + 2, k - 1)
        parts = [(1, t, k)]
        parts += [(i, t + (i - 1) * (k - 1), k) for i in range(2, c + 2)]
        if d > 0:
            parts.append((c + 2, t + (c + 1) * (k - 1), d + 1))
    N = _sum(n, spec, parts)
    _logger.debug("C(x^%d) + %d zeros: N_(r,s,k) for %s", t, z, parts)

    x_t = companion(Polynomial.x_power(spec, t))
    _verify_complement(block_diag([x_t, zeros(spec, z)]) if z else x_t, N, k, f"C(x^{t})")
    return N


def nilpotent_max_rank(n, k):
    '''
    n - ceil(n/k), the largest rank of an n x n matrix N with N^k = 0.
    '''
    return n - (-(-n // k))


def max_rank_nilpotent(n, k, spec):
    '''
    A nilpotent matrix with N^k = 0 reaching nilpotent_max_rank(n, k):
    chains of length k down the diagonal, the last one shorter.
    '''
    k = min(k, n)
    sizes = [k] * (n // k) + ([n % k] if n % k else [])
    return block_diag([chain_nilpotent(size, size, spec) for size in sizes])
