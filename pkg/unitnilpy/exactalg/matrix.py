# -*- coding: utf-8 -*-
"""
Created on 02/10/2026

Dense exact matrices over F_p or Q.

Entries are raw field values (see field.py) held in a read-only numpy object
array, row-major. Every elimination in this module pivots on the first nonzero
entry scanning top-to-bottom, so all results are reproducible.

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
import pandas as pd

from unitnilpy.errors import (DimensionMismatch, EmptyInput, MixedFields,
                              NotAPermutation, NotNilpotent, NotSquare,
                              Singular)
from unitnilpy.exactalg.field import Scalar


class Matrix:
    '''
    Immutable dense matrix with at least one row and one column.

    :param spec: field of the entries.
    :type spec: FieldSpec

    :param rows_data: nested sequence (or 2D array) of ints, Fractions or
        Scalars; every entry is coerced into the field.
    '''
    __slots__ = ("spec", "data")

    def __init__(self, spec, rows_data):
        raw = np.array(rows_data, dtype=object)
        if raw.ndim != 2 or raw.shape[0] < 1 or raw.shape[1] < 1:
            raise DimensionMismatch(f"expected a nonempty 2D table, got shape {raw.shape}")
        arr = np.empty(raw.shape, dtype=object)
        for index, x in np.ndenumerate(raw):
            arr[index] = spec.coerce(x)
        self._init(spec, arr)

    def _init(self, spec, arr):
        arr.flags.writeable = False
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "data", arr)

    @classmethod
    def _wrap(cls, spec, arr):
        '''Adopt an object array whose entries are already canonical.'''
        obj = cls.__new__(cls)
        obj._init(spec, arr)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def rows(self):
        return self.data.shape[0]

    @property
    def cols(self):
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        return Scalar(self.spec, self.data[index])

    def entry(self, i, j):
        '''Raw value at 0-based position (i, j).'''
        return self.data[i, j]

    def tolist(self):
        return self.data.tolist()

    def to_strings(self):
        return [[self.spec.format(x) for x in row] for row in self.data]

    def is_zero(self):
        return bool(np.all(self.data == 0))

    def submatrix(self, r0, r1, c0, c1):
        return Matrix._wrap(self.spec, self.data[r0:r1, c0:c1].copy())

    def column(self, j):
        return self.submatrix(0, self.rows, j, j + 1)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.spec == other.spec and self.shape == other.shape
                and bool(np.all(self.data == other.data)))

    def __hash__(self):
        return hash((self.spec, self.shape, tuple(self.data.ravel().tolist())))

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return mat_neg(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __pow__(self, exponent):
        return mat_pow(self, exponent)

    def __repr__(self):
        return f"Matrix({self.spec}, {self.to_strings()})"

    def __str__(self):
        return format_matrix(self)


# constructors

def zeros(spec, rows, cols=None):
    cols = rows if cols is None else cols
    _require_size(rows, cols)
    return Matrix._wrap(spec, np.full((rows, cols), spec.zero, dtype=object))


def identity(spec, n):
    _require_size(n, n)
    arr = np.full((n, n), spec.zero, dtype=object)
    for i in range(n):
        arr[i, i] = spec.one
    return Matrix._wrap(spec, arr)


def matrix_unit(spec, n, i, j):
    '''
    The standard matrix e_{ij} of M_n, with 1-based i and j.
    '''
    _require_size(n, n)
    if not (1 <= i <= n and 1 <= j <= n):
        raise DimensionMismatch(f"position ({i}, {j}) outside 1..{n}")
    arr = np.full((n, n), spec.zero, dtype=object)
    arr[i - 1, j - 1] = spec.one
    return Matrix._wrap(spec, arr)


def from_columns(columns):
    '''
    Matrix whose columns are the given n x 1 (or n x d) matrices, in order.
    '''
    if not columns:
        raise EmptyInput("no columns")
    spec = _common_spec(columns)
    if len({c.rows for c in columns}) != 1:
        raise DimensionMismatch("columns of different heights")
    return Matrix._wrap(spec, np.hstack([c.data for c in columns]))


def stack_rows(blocks):
    '''
    Matrix made of the rows of the given matrices, top to bottom.
    '''
    if not blocks:
        raise EmptyInput("no rows")
    spec = _common_spec(blocks)
    if len({b.cols for b in blocks}) != 1:
        raise DimensionMismatch("rows of different widths")
    return Matrix._wrap(spec, np.vstack([b.data for b in blocks]))


def _require_size(rows, cols):
    if rows < 1 or cols < 1:
        raise DimensionMismatch(f"a matrix needs at least one row and one column, got {rows}x{cols}")


def _common_spec(matrices):
    spec = matrices[0].spec
    for m in matrices[1:]:
        if m.spec != spec:
            raise MixedFields(f"{spec} and {m.spec}")
    return spec


def _same_shape(A, B):
    if A.spec != B.spec:
        raise MixedFields(f"{A.spec} and {B.spec}")
    if A.shape != B.shape:
        raise DimensionMismatch(f"shapes {A.shape} and {B.shape}")


def _require_square(A):
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols} matrix is not square")


# arithmetic

def mat_add(A, B):
    _same_shape(A, B)
    return Matrix._wrap(A.spec, A.spec.reduce_array(A.data + B.data))


def mat_sub(A, B):
    _same_shape(A, B)
    return Matrix._wrap(A.spec, A.spec.reduce_array(A.data - B.data))


def mat_neg(A):
    return Matrix._wrap(A.spec, A.spec.reduce_array(-A.data))


def mat_mul(A, B):
    '''
    Exact product A.B.

    :raises DimensionMismatch: A.cols != B.rows.
    :raises MixedFields: A and B over different fields.
    '''
    if A.spec != B.spec:
        raise MixedFields(f"{A.spec} and {B.spec}")
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    return Matrix._wrap(A.spec, A.spec.reduce_array(np.dot(A.data, B.data)))


def mat_pow(A, exponent):
    _require_square(A)
    if exponent < 0:
        return mat_pow(mat_inverse(A), -exponent)
    result = identity(A.spec, A.rows)
    base = A
    while exponent:
        if exponent & 1:
            result = mat_mul(result, base)
        exponent >>= 1
        if exponent:
            base = mat_mul(base, base)
    return result


# elimination

def _echelon(spec, arr, reduced=False):
    '''
    Gaussian elimination on a private copy of arr.

    Returns (E, pivots, swaps): the echelon (or reduced echelon) form, the
    pivot column of each nonzero row, and the number of row swaps done.
    '''
    E = arr.copy()
    n_rows, n_cols = E.shape
    pivots = []
    swaps = 0
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if E[i, c] != 0), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            E[[r, pivot_row]] = E[[pivot_row, r]]
            swaps += 1
        if reduced:
            E[r, :] = spec.reduce_array(E[r, :] * spec.inv(E[r, c]))
            targets = (i for i in range(n_rows) if i != r)
        else:
            targets = range(r + 1, n_rows)
        lead_inv = spec.inv(E[r, c])
        for i in targets:
            if E[i, c] != 0:
                factor = spec.mul(E[i, c], lead_inv)
                E[i, :] = spec.reduce_array(E[i, :] - factor * E[r, :])
        pivots.append(c)
        r += 1
    return E, pivots, swaps


def rref(A):
    '''
    Reduced row echelon form and pivot columns (0-based).
    '''
    E, pivots, _ = _echelon(A.spec, A.data, reduced=True)
    return Matrix._wrap(A.spec, E), pivots


def mat_rank(A):
    '''
    Rank by exact Gaussian elimination.

    :param A: any matrix.
    :type A: Matrix

    :return int in [0, min(rows, cols)]
    '''
    _, pivots, _ = _echelon(A.spec, A.data)
    return len(pivots)


def mat_det(A):
    '''
    Exact determinant, as a Scalar.

    :raises NotSquare:
    '''
    _require_square(A)
    spec = A.spec
    E, pivots, swaps = _echelon(spec, A.data)
    if len(pivots) < A.rows:
        return Scalar(spec, spec.zero)
    det = spec.one if swaps % 2 == 0 else spec.neg(spec.one)
    for i in range(A.rows):
        det = spec.mul(det, E[i, i])
    return Scalar(spec, det)


def mat_inverse(A):
    '''
    Exact inverse by reducing [A | I].

    :raises Singular: A is not invertible.
    '''
    _require_square(A)
    n = A.rows
    augmented = np.hstack([A.data, identity(A.spec, n).data])
    E, pivots, _ = _echelon(A.spec, augmented, reduced=True)
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is not invertible")
    return Matrix._wrap(A.spec, E[:, n:].copy())


def mat_conjugate(A, P):
    '''
    Change of basis P^{-1}.A.P, with the new basis vectors as columns of P.

    :raises Singular: P is not invertible.
    :raises DimensionMismatch: A and P are not square of the same size.
    '''
    _require_square(A)
    _require_square(P)
    if A.rows != P.rows:
        raise DimensionMismatch(f"cannot conjugate {A.rows}x{A.rows} by {P.rows}x{P.rows}")
    return mat_mul(mat_mul(mat_inverse(P), A), P)


def nullspace(A):
    '''
    Basis of {x : A.x = 0} as the columns of a matrix, or None when trivial.

    One basis vector per free column, in increasing column order.
    '''
    spec = A.spec
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    if not free:
        return None
    basis = np.full((A.cols, len(free)), spec.zero, dtype=object)
    for j, f in enumerate(free):
        basis[f, j] = spec.one
        for row, c in enumerate(pivots):
            basis[c, j] = spec.neg(R.data[row, f])
    return Matrix._wrap(spec, basis)


def extend_to_basis(K):
    '''
    Complete the independent columns of K with standard basis vectors
    (lowest index first) to an invertible square matrix.
    '''
    spec, n = K.spec, K.rows
    augmented = np.hstack([K.data, identity(spec, n).data])
    _, pivots, _ = _echelon(spec, augmented)
    if pivots[:K.cols] != list(range(K.cols)):
        raise Singular("columns to extend are dependent")
    chosen = [c - K.cols for c in pivots[K.cols:]]
    extra = identity(spec, n).data[:, chosen]
    return Matrix._wrap(spec, np.hstack([K.data, extra]))


# nilpotence

def nilpotency_index(N, cap):
    '''
    Smallest j <= cap with N^j = 0.

    The zero matrix has index 1.

    :param N: square matrix.
    :type N: Matrix

    :param cap: largest power tried, at least 1.
    :type cap: int

    :return int, or None when N^cap != 0 (not nilpotent within cap)
    '''
    _require_square(N)
    power = N
    for j in range(1, cap + 1):
        if power.is_zero():
            return j
        if j < cap:
            power = mat_mul(power, N)
    return None


def nilpotent_jordan_type(N):
    '''
    Block sizes, largest first, of the Jordan form of a nilpotent N.

    The number of blocks of size >= j is rank N^{j-1} - rank N^j.

    :raises NotNilpotent:
    '''
    _require_square(N)
    n = N.rows
    ranks = [n]
    power = N
    while ranks[-1] > 0:
        if len(ranks) > n:
            raise NotNilpotent("matrix is not nilpotent")
        ranks.append(mat_rank(power))
        power = mat_mul(power, N)
    at_least = [ranks[j - 1] - ranks[j] for j in range(1, len(ranks))]
    sizes = []
    for j in range(len(at_least), 0, -1):
        exactly = at_least[j - 1] - (at_least[j] if j < len(at_least) else 0)
        sizes.extend([j] * exactly)
    return tuple(sizes)


# assembly

def block_diag(blocks):
    '''
    Block diagonal matrix of square blocks, in the given order.

    :raises EmptyInput: no blocks.
    :raises MixedFields: blocks over different fields.
    '''
    blocks = list(blocks)
    if not blocks:
        raise EmptyInput("block_diag of no blocks")
    spec = _common_spec(blocks)
    for b in blocks:
        _require_square(b)
    n = sum(b.rows for b in blocks)
    arr = np.full((n, n), spec.zero, dtype=object)
    offset = 0
    for b in blocks:
        arr[offset:offset + b.rows, offset:offset + b.rows] = b.data
        offset += b.rows
    return Matrix._wrap(spec, arr)


def permutation_matrix(spec, perm):
    '''
    P with P.e_j = e_{perm[j]} (0-based), i.e. a one in row perm[j] of column j.

    :raises NotAPermutation:
    '''
    perm = list(perm)
    if sorted(perm) != list(range(len(perm))) or not perm:
        raise NotAPermutation(f"{perm} is not a permutation of 0..{len(perm) - 1}")
    arr = np.full((len(perm), len(perm)), spec.zero, dtype=object)
    for j, i in enumerate(perm):
        arr[i, j] = spec.one
    return Matrix._wrap(spec, arr)


def format_matrix(A):
    '''
    Text table of the entries, 1-based labels, for diagnostics.
    '''
    frame = pd.DataFrame(A.to_strings(),
                         index=range(1, A.rows + 1),
                         columns=range(1, A.cols + 1))
    return frame.to_string()
