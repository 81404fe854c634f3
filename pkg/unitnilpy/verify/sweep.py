# -*- coding: utf-8 -*-
"""
Created on 11/10/2026

Agreement sweep: every matrix of M_n(F_p) against every k, comparing the rank
criterion, the constructor and the exhaustive oracle, tabulated with pandas.

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

import pandas as pd

from unitnilpy.construct.decompose import Infeasible, decompose, feasible
from unitnilpy.exactalg.field import FieldSpec
from unitnilpy.exactalg.matrix import Matrix, mat_rank
from unitnilpy.verify.oracle import (check_budget, decode_candidates,
                                     exhaustive_feasible)
from unitnilpy.verify.verifier import verify_decomposition

_logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['index', 'rank', 'k', 'criterion', 'constructor', 'oracle', 'verified', 'agree']


def agreement_sweep(n, p, ks=None, budget=None, **kwargs):
    '''
    One row per (A, k) for every A in M_n(F_p), A numbered as in the oracle.

    :param n: size.
    :type n: int

    :param p: prime.
    :type p: int

    :param ks: values of k, 1..n when None.
    :type ks: iterable of int

    :param budget: oracle enumeration limit.
    :type budget: OracleBudget

    :param \\**kwargs:
    forwarded to exhaustive_feasible (jobs, chunk_size)

    :return pandas.DataFrame with columns SWEEP_COLUMNS
    '''
    spec = FieldSpec.prime(p)
    total = check_budget(n, p, budget)
    ks = list(range(1, n + 1)) if ks is None else list(ks)

    records = []
    for index in range(total):
        A = Matrix(spec, decode_candidates([index], n, p)[0].tolist())
        rank = mat_rank(A)
        for k in ks:
            criterion = feasible(A, k)
            result = decompose(A, k)
            constructed = not isinstance(result, Infeasible)
            verified = constructed and verify_decomposition(A, result.U, result.N, k).overall
            oracle, _ = exhaustive_feasible(A, k, budget, **kwargs)
            agree = criterion == constructed == oracle and (verified or not constructed)
            records.append([index, rank, k, criterion, constructed, oracle, verified, agree])
    frame = pd.DataFrame(records, columns=SWEEP_COLUMNS)
    _logger.info("M_%d(F_%d): %d rows, %d disagreements", n, p, len(frame), int((~frame['agree']).sum()))
    return frame


def write_sweep_report(frame, file_name):
    '''
    Save the sweep table as CSV.

    :param frame: output of agreement_sweep.
    :type frame: pandas.DataFrame

    :param file_name: output path.
    :type file_name: str
    '''
    frame.to_csv(file_name, index=False)
    print('\n\n***SUCCESS writing!  ' + file_name)
