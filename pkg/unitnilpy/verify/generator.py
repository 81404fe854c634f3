# -*- coding: utf-8 -*-
"""
Created on 10/10/2026

Seeded random instances.

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

import numpy as np

from unitnilpy.errors import DimensionMismatch, InvalidSeed
from unitnilpy.exactalg.matrix import Matrix, mat_mul, mat_rank, zeros

# rational entries are drawn from -RATIONAL_RANGE..RATIONAL_RANGE
RATIONAL_RANGE = 9


def _rng(seed):
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise InvalidSeed(f"seed must be a non-negative integer, got {seed!r}")
    return np.random.default_rng(seed)


def _sample(rng, rows, cols, spec):
    if spec.is_prime_field:
        values = rng.integers(0, spec.p, size=(rows, cols))
    else:
        values = rng.integers(-RATIONAL_RANGE, RATIONAL_RANGE + 1, size=(rows, cols))
    return Matrix(spec, values.tolist())


def _full_rank(rng, rows, cols, spec):
    target = min(rows, cols)
    while True:
        M = _sample(rng, rows, cols, spec)
        if mat_rank(M) == target:
            return M


def random_matrix(n, spec, seed):
    '''Uniform n x n matrix (entries in -9..9 over Q).'''
    if n < 1:
        raise DimensionMismatch(f"size {n} is below 1")
    return _sample(_rng(seed), n, n, spec)


def random_matrix_of_rank(n, r, spec, seed):
    '''
    L.R with L (n x r) and R (r x n) of full rank, drawn by rejection.

    :param n: size.
    :type n: int

    :param r: rank of the result, 0 <= r <= n.
    :type r: int

    :param spec: field.
    :type spec: FieldSpec

    :param seed: numpy generator seed; equal arguments give equal matrices.
    :type seed: int

    :raises DimensionMismatch: n < 1 or r outside 0..n.

    :raises InvalidSeed: negative or non-integer seed.

    :return Matrix of rank exactly r
    '''
    if n < 1:
        raise DimensionMismatch(f"size {n} is below 1")
    if not 0 <= r <= n:
        raise DimensionMismatch(f"rank {r} outside 0..{n}")
    rng = _rng(seed)
    if r == 0:
        return zeros(spec, n)
    L = _full_rank(rng, n, r, spec)
    R = _full_rank(rng, r, n, spec)
    return mat_mul(L, R)


def random_invertible(n, spec, seed):
    return random_matrix_of_rank(n, n, spec, seed)
