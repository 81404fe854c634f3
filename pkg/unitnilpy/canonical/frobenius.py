# -*- coding: utf-8 -*-
"""
Created on 05/10/2026

Rational canonical form with an explicit change of basis, and the split of
each invariant factor f = x^m . g (g(0) != 0) into the three kinds of blocks
the decomposition works with:

    (i)   companion(q) with q(0) != 0, invertible
    (ii)  the 1x1 zero block, companion(x)
    (iii) companion(x^m) with m >= 2, a single nilpotent Jordan block

No factorization into irreducibles is ever needed. Transforms always have the
new basis vectors as columns: the canonical matrix is P^{-1}.A.P.

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

import enum
import logging
from dataclasses import dataclass
from functools import reduce

import numpy as np

from unitnilpy.errors import (InternalVerificationFailed, InvalidBlock,
                              NotMonic, NotSquare)
from unitnilpy.exactalg.matrix import (Matrix, block_diag, extend_to_basis,
                                       from_columns, identity, mat_conjugate,
                                       mat_inverse, mat_mul, mat_rank,
                                       nullspace, rref, stack_rows, zeros)
from unitnilpy.exactalg.polynomial import (Polynomial, companion, divides,
                                           poly_divmod, poly_gcd, poly_lcm,
                                           poly_apply, strip_x_power)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrobeniusForm:
    '''
    Invariant factors f_1 | f_2 | ... | f_s and a transform P with
    P^{-1}.A.P = block_diag(companion(f_1), ..., companion(f_s)).
    '''
    factors: tuple
    transform: Matrix

    def realize(self):
        return block_diag([companion(f) for f in self.factors])


class BlockKind(enum.Enum):
    INVERTIBLE = "i"
    ZERO_ONE = "ii"
    X_POWER = "iii"


@dataclass(frozen=True)
class BlockSpec:
    '''
    One diagonal block, identified by its elementary polynomial: q with
    q(0) != 0 for type (i), x for type (ii), x^m (m >= 2) for type (iii).
    '''
    kind: BlockKind
    poly: Polynomial

    def __post_init__(self):
        q = self.poly
        if not q.is_monic() or q.degree < 1:
            raise InvalidBlock(f"block polynomial {q} must be monic of positive degree")
        m, g = strip_x_power(q)
        if self.kind is BlockKind.INVERTIBLE and m != 0:
            raise InvalidBlock(f"invertible block needs q(0) != 0, got {q}")
        if self.kind is not BlockKind.INVERTIBLE and g.degree != 0 or \
                self.kind is BlockKind.ZERO_ONE and m != 1 or \
                self.kind is BlockKind.X_POWER and m < 2:
            raise InvalidBlock(f"{q} does not fit a block of type {self.kind.value}")

    @classmethod
    def invertible(cls, q):
        return cls(BlockKind.INVERTIBLE, q)

    @classmethod
    def zero_one(cls, spec):
        return cls(BlockKind.ZERO_ONE, Polynomial.x_power(spec, 1))

    @classmethod
    def x_power(cls, spec, m):
        return cls(BlockKind.X_POWER, Polynomial.x_power(spec, m))

    @property
    def size(self):
        return self.poly.degree

    @property
    def spec(self):
        return self.poly.spec

    def realize(self):
        if self.kind is BlockKind.ZERO_ONE:
            return zeros(self.spec, 1)
        return companion(self.poly)

    def __str__(self):
        if self.kind is BlockKind.INVERTIBLE:
            return f"C({self.poly})"
        if self.kind is BlockKind.ZERO_ONE:
            return "0"
        return f"C(x^{self.size})"


@dataclass(frozen=True)
class BlockForm:
    '''
    Ordered blocks and a transform P with P^{-1}.A.P = realize().
    '''
    blocks: tuple
    transform: Matrix

    def realize(self):
        return realize_blocks(self.blocks)


def realize_blocks(blocks):
    return block_diag([b.realize() for b in blocks])


# Krylov chains

def _krylov(T, v, count):
    '''Columns v, T.v, ..., T^{count-1}.v.'''
    spec = T.spec
    columns = [v.data]
    w = v.data
    for _ in range(count - 1):
        w = spec.reduce_array(np.dot(T.data, w))
        columns.append(w)
    return Matrix._wrap(spec, np.hstack(columns))


def vector_order(T, v):
    '''
    Monic f of least degree with f(T).v = 0.

    :param T: square operator.
    :type T: Matrix

    :param v: column vector.
    :type v: Matrix

    :return Polynomial
    '''
    spec = T.spec
    R, pivots = rref(_krylov(T, v, T.rows + 1))
    # once T^d.v falls in the span of its predecessors every later power does,
    # so the pivots are exactly 0..d-1
    d = len(pivots)
    coeffs = [spec.neg(R.data[j, d]) for j in range(d)] + [spec.one]
    return Polynomial(spec, coeffs)


def _lcm_split(f, g):
    '''
    Coprime a | f and b | g with a.b = lcm(f, g), without factoring.

    A prime keeps its power in a when f carries at least as much of it as g,
    otherwise it goes to b.
    '''
    excess = poly_divmod(g, poly_gcd(f, g))[0]
    a = f
    while True:
        common = poly_gcd(a, excess)
        if common.degree == 0:
            break
        a = poly_divmod(a, common)[0]
    b = poly_divmod(poly_lcm(f, g), a)[0]
    return a, b


def _maximal_vector(T):
    '''
    A vector whose order is the minimal polynomial of T.

    Orders of e_1, e_2, ... are merged in index order; each merge replaces
    the generator by a combination whose order is the lcm.
    '''
    spec, n = T.spec, T.rows
    eye = identity(spec, n)
    v = eye.column(0)
    f = vector_order(T, v)
    for j in range(1, n):
        if f.degree == n:
            break
        w = eye.column(j)
        g = vector_order(T, w)
        if divides(g, f):
            continue
        a, b = _lcm_split(f, g)
        v = poly_apply(poly_divmod(f, a)[0], T, v) + poly_apply(poly_divmod(g, b)[0], T, w)
        f = a * b
    return v, f


def frobenius_form(A, **kwargs):
    '''
    Rational canonical form of a square matrix, with its transform.

    Splits off the cyclic subspace of a maximal-order vector v together with
    an invariant complement, then repeats on the complement. The complement
    is the common kernel of phi, phi.T, ..., phi.T^{d-1}, where phi reads the
    coordinate of T^{d-1}.v in a basis extending the Krylov chain of v: its
    pairing with the chain is anti-triangular with unit anti-diagonal, hence
    nonsingular.

    :param A: square matrix over F_p or Q.
    :type A: Matrix

    :param \\**kwargs:
    See below

    :Keyword Arguments
        * *verify* (bool) default True, re-check P^{-1}.A.P and the
          divisibility chain before returning

    :return FrobeniusForm with ascending factors f_1 | ... | f_s
    '''
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols} matrix is not square")
    verify = kwargs.get('verify', True)
    spec = A.spec

    basis = identity(spec, A.rows)
    T = A
    factors = []
    chains = []
    while True:
        m = T.rows
        v, mu = _maximal_vector(T)
        d = mu.degree
        K = _krylov(T, v, d)
        factors.append(mu)
        chains.append(mat_mul(basis, K))
        if d == m:
            break
        phi = mat_inverse(extend_to_basis(K)).submatrix(d - 1, d, 0, m)
        functionals = [phi]
        for _ in range(d - 1):
            functionals.append(mat_mul(functionals[-1], T))
        W = nullspace(stack_rows(functionals))
        T = mat_conjugate(T, from_columns([K, W])).submatrix(d, m, d, m)
        basis = mat_mul(basis, W)

    # produced largest first
    factors.reverse()
    chains.reverse()
    form = FrobeniusForm(tuple(factors), from_columns(chains))
    _logger.debug("invariant factors: %s", ", ".join(str(f) for f in form.factors))

    if verify:
        for f, g in zip(form.factors, form.factors[1:]):
            if not divides(f, g):
                raise InternalVerificationFailed(f"invariant factor {f} does not divide {g}")
        if mat_conjugate(A, form.transform) != form.realize():
            raise InternalVerificationFailed("frobenius transform does not reproduce the companion blocks")
    return form


def characteristic_polynomial(A):
    '''Product of the invariant factors.'''
    factors = frobenius_form(A).factors
    return reduce(lambda f, g: f * g, factors)


def minimal_polynomial(A):
    return frobenius_form(A).factors[-1]


def coprime_split_block(f):
    '''
    Split companion(f) along f = x^m . g, g(0) != 0.

    With T = companion(f) and v = e_1, the Krylov chain of g(T).v has order
    x^m and the chain of T^m.v has order g; side by side they are the
    columns of Q.

    :param f: monic polynomial of positive degree.
    :type f: Polynomial

    :return (blocks, Q) with Q^{-1}.companion(f).Q = realize_blocks(blocks)
    '''
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    spec = f.spec
    m, g = strip_x_power(f)
    T = companion(f)
    e1 = identity(spec, f.degree).column(0)
    blocks = []
    chains = []
    if m >= 1:
        chains.append(_krylov(T, poly_apply(g, T, e1), m))
        blocks.append(BlockSpec.zero_one(spec) if m == 1 else BlockSpec.x_power(spec, m))
    if g.degree >= 1:
        chains.append(_krylov(T, poly_apply(Polynomial.x_power(spec, m), T, e1), g.degree))
        blocks.append(BlockSpec.invertible(g))
    return blocks, from_columns(chains)


def _diagonal_segments(A):
    '''Finest split of A into diagonal blocks, as (start, stop) pairs.'''
    n = A.rows
    cuts = [0]
    for i in range(1, n):
        if np.all(A.data[:i, i:] == 0) and np.all(A.data[i:, :i] == 0):
            cuts.append(i)
    cuts.append(n)
    return list(zip(cuts, cuts[1:]))


def _companion_polynomial(B):
    '''
    f when B is exactly companion(f) in the displayed layout, else None.
    '''
    spec, m = B.spec, B.rows
    expected = np.full((m, m - 1), spec.zero, dtype=object)
    for i in range(m - 1):
        expected[i + 1, i] = spec.one
    if not np.all(B.data[:, :m - 1] == expected):
        return None
    return Polynomial(spec, [spec.neg(B.data[i, m - 1]) for i in range(m)] + [spec.one])


def _structured_factors(A):
    '''
    Polynomials of the diagonal blocks when A is already a direct sum of
    companion matrices, else None.
    '''
    factors = []
    for start, stop in _diagonal_segments(A):
        f = _companion_polynomial(A.submatrix(start, stop, start, stop))
        if f is None:
            return None
        factors.append(f)
    return factors


def block_form(A, **kwargs):
    '''
    Blocks of types (i), (ii), (iii) and a transform P with
    P^{-1}.A.P = block_diag of their realizations.

    A matrix that is already a direct sum of companion matrices keeps its
    blocks in place (P = I when every block is already of a single type);
    anything else goes through frobenius_form, giving invariant-factor
    order with each factor's x-power part first.

    :raises InternalVerificationFailed: the transform does not reproduce
        the blocks. Signals a bug, never bad input.
    '''
    if not A.is_square:
        raise NotSquare(f"{A.rows}x{A.cols} matrix is not square")
    spec = A.spec
    factors = _structured_factors(A)
    if factors is not None:
        base = identity(spec, A.rows)
    else:
        form = frobenius_form(A, **kwargs)
        factors, base = form.factors, form.transform

    blocks = []
    splits = []
    for f in factors:
        pieces, Q = coprime_split_block(f)
        blocks.extend(pieces)
        splits.append(Q)
    result = BlockForm(tuple(blocks), mat_mul(base, block_diag(splits)))
    _logger.debug("blocks: %s", " + ".join(str(b) for b in result.blocks))

    if mat_conjugate(A, result.transform) != result.realize():
        raise InternalVerificationFailed("block transform does not reproduce the blocks")
    expected_rank = sum(b.size if b.kind is BlockKind.INVERTIBLE else b.size - 1
                        for b in result.blocks)
    if mat_rank(A) != expected_rank:
        raise InternalVerificationFailed(f"rank {mat_rank(A)} disagrees with block rank {expected_rank}")
    return result
