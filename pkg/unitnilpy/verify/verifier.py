# -*- coding: utf-8 -*-
"""
Created on 09/10/2026

Independent check of a claimed decomposition A = U + N.

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
from typing import Optional

from unitnilpy.errors import DimensionMismatch, MixedFields
from unitnilpy.exactalg.matrix import mat_add, mat_det, nilpotency_index

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerifyReport:
    '''
    Outcome of verify_decomposition. index_of_N is None when N is not
    nilpotent at all.
    '''
    sum_ok: bool
    unit_ok: bool
    nilpotent_ok: bool
    index_of_N: Optional[int]

    @property
    def overall(self):
        return self.sum_ok and self.unit_ok and self.nilpotent_ok


def verify_decomposition(A, U, N, k):
    '''
    Check A = U + N, det U != 0 and N^k = 0, each on its own.

    :param A: source matrix.
    :type A: Matrix

    :param U: claimed invertible part.
    :type U: Matrix

    :param N: claimed nilpotent part.
    :type N: Matrix

    :param k: required bound on the nilpotency index, >= 1.
    :type k: int

    :return VerifyReport
    '''
    for other in (U, N):
        if other.spec != A.spec:
            raise MixedFields(f"{A.spec} and {other.spec}")
        if other.shape != A.shape or not A.is_square:
            raise DimensionMismatch(f"shapes {A.shape}, {U.shape}, {N.shape} are not one square size")

    sum_ok = mat_add(U, N) == A
    unit_ok = not mat_det(U).is_zero()
    index = nilpotency_index(N, A.rows)
    nilpotent_ok = index is not None and index <= k
    report = VerifyReport(sum_ok, unit_ok, nilpotent_ok, index)
    _logger.debug("verify: sum %s, unit %s, nilpotent %s (index %s)",
                  sum_ok, unit_ok, nilpotent_ok, index)
    return report
