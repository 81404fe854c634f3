# -*- coding: utf-8 -*-
"""
Created on 10/10/2026

Brute-force feasibility oracle over a small prime field.

Every N in M_n(F_p) is numbered by reading its entries row by row as the
base-p digits of an integer, most significant first, so increasing numbers
are lexicographic entry order and 0 is the zero matrix. Candidates are
handled in int64 numpy batches: batched matrix powers mod p keep those with
N^k = 0, and a batched fraction-free elimination mod p tells which A - N are
invertible. The first witness in that order is returned whatever the batch
size or the number of worker threads.

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
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from contextlib import closing
from dataclasses import dataclass

import numpy as np

from unitnilpy.errors import (BudgetExceeded, IndexConstraintViolated,
                              InternalVerificationFailed,
                              RationalsUnsupported, NotSquare)
from unitnilpy.exactalg.matrix import Matrix, mat_det, mat_sub, nilpotency_index

_logger = logging.getLogger(__name__)

DEFAULT_MAX_CANDIDATES = 2 ** 26
DEFAULT_CHUNK_SIZE = 2 ** 14


@dataclass(frozen=True)
class OracleBudget:
    '''Largest enumeration p^(n^2) the oracle agrees to run.'''
    max_candidates: int = DEFAULT_MAX_CANDIDATES


def check_budget(n, p, budget=None):
    '''
    :raises BudgetExceeded: p^(n^2) candidates exceed the budget, or the
        residues are too large for int64 batches.
    '''
    budget = OracleBudget() if budget is None else budget
    total = p ** (n * n)
    if total > budget.max_candidates:
        raise BudgetExceeded(f"{p}^{n * n} = {total} candidates exceed the budget {budget.max_candidates}")
    if n * (p - 1) ** 2 >= 2 ** 62:
        raise BudgetExceeded(f"residues mod {p} overflow int64 batches at n={n}")
    return total


def decode_candidates(indices, n, p):
    '''
    Matrices numbered by indices, as an int64 array of shape (len, n, n).
    '''
    rest = np.array(indices, dtype=np.int64)
    digits = np.empty((rest.shape[0], n * n), dtype=np.int64)
    for position in range(n * n - 1, -1, -1):
        digits[:, position] = rest % p
        rest = rest // p
    return digits.reshape(-1, n, n)


def _power_vanishes(batch, k, p):
    power = batch
    for _ in range(k - 1):
        power = np.matmul(power, batch) % p
    return np.all(power == 0, axis=(1, 2))


def _nonsingular(batch, p):
    '''
    Row i := pivot.row_i - factor.row_c below each pivot, all mod p. Scaling
    a row by a nonzero pivot keeps the rank, so a matrix is invertible iff
    every column finds a pivot.
    '''
    M = batch.copy()
    count, n = M.shape[0], M.shape[1]
    alive = np.ones(count, dtype=bool)
    rows = np.arange(count)
    for c in range(n):
        nonzero = M[:, c:, c] != 0
        alive &= nonzero.any(axis=1)
        pivot_row = c + np.argmax(nonzero, axis=1)
        top = M[rows, c, :].copy()
        M[rows, c, :] = M[rows, pivot_row, :]
        M[rows, pivot_row, :] = top
        pivot = M[:, c, c][:, None]
        for i in range(c + 1, n):
            factor = M[:, i, c][:, None]
            M[:, i, :] = (M[:, i, :] * pivot - M[:, c, :] * factor) % p
    return alive


def _in_order(function, chunks, jobs):
    '''
    Lazy map over chunks, results in chunk order. With jobs > 1 at most jobs
    chunks are in flight; closing the generator cancels the rest.
    '''
    if jobs <= 1:
        yield from map(function, chunks)
        return
    pending = deque()
    pool = ThreadPoolExecutor(max_workers=jobs)
    try:
        for chunk in chunks:
            pending.append(pool.submit(function, chunk))
            if len(pending) >= jobs:
                yield pending.popleft().result()
        while pending:
            yield pending.popleft().result()
    finally:
        for future in pending:
            future.cancel()
        pool.shutdown(wait=True)


# (n, p, k) -> ascending indices of the k-nilpotent candidates
_nilpotent_cache = {}


def _nilpotent_indices(n, p, k, jobs=1, chunk_size=DEFAULT_CHUNK_SIZE):
    '''
    Numbers of every N in M_n(F_p) with N^k = 0, ascending. Read-only,
    computed once per (n, p, k) whatever jobs and chunk_size are.
    '''
    key = (n, p, k)
    if key in _nilpotent_cache:
        return _nilpotent_cache[key]
    total = p ** (n * n)
    starts = range(0, total, chunk_size)

    def scan(start):
        indices = np.arange(start, min(start + chunk_size, total), dtype=np.int64)
        return indices[_power_vanishes(decode_candidates(indices, n, p), k, p)]

    with closing(_in_order(scan, starts, jobs)) as results:
        found = np.concatenate(list(results))
    found.flags.writeable = False
    _logger.debug("M_%d(F_%d): %d of %d candidates with N^%d = 0", n, p, len(found), total, k)
    _nilpotent_cache[key] = found
    return found


def exhaustive_feasible(A, k, budget=None, **kwargs):
    '''
    Search M_n(F_p) for N with N^k = 0 and A - N invertible.

    :param A: square matrix over a prime field.
    :type A: Matrix

    :param k: bound on the nilpotency index, >= 1.
    :type k: int

    :param budget: enumeration limit, OracleBudget() when None.
    :type budget: OracleBudget

    :param \\**kwargs:
    See below

    :Keyword Arguments
        * *jobs* (int) default 1, worker threads
        * *chunk_size* (int) default 16384, candidates per batch

    :return (True, first witness N) or (False, None)
    '''
    jobs = kwargs.get('jobs', 1)
    chunk_size = kwargs.get('chunk_size', DEFAULT_CHUNK_SIZE)
    spec = A.spec
    if not spec.is_prime_field:
        raise RationalsUnsupported("the exhaustive oracle runs over F_p only")
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols} matrix is not square")
    if k < 1:
        raise IndexConstraintViolated(f"nilpotency index {k} < 1")
    n, p = A.rows, spec.p
    check_budget(n, p, budget)

    k_eff = min(k, n)
    nilpotents = _nilpotent_indices(n, p, k_eff, jobs, chunk_size)
    source = np.array(A.data.tolist(), dtype=np.int64)
    starts = range(0, len(nilpotents), chunk_size)

    def scan(start):
        batch = decode_candidates(nilpotents[start:start + chunk_size], n, p)
        hits = _nonsingular((source - batch) % p, p)
        return batch[np.argmax(hits)] if hits.any() else None

    with closing(_in_order(scan, starts, jobs)) as results:
        found = next((hit for hit in results if hit is not None), None)
    if found is None:
        return False, None
    witness = Matrix(spec, found.tolist())
    if nilpotency_index(witness, k_eff) is None or mat_det(mat_sub(A, witness)).is_zero():
        raise InternalVerificationFailed("oracle witness fails the exact re-check")
    return True, witness
