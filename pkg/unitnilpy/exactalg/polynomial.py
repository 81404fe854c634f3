# -*- coding: utf-8 -*-
"""
Created on 03/10/2026

Univariate polynomials over F_p or Q, and the companion matrices built
from them.

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

from unitnilpy.errors import (DegreeZero, DimensionMismatch,
                              DivisionByZeroPoly, MixedFields, NotMonic,
                              NotSquare, ZeroPolynomial)
from unitnilpy.exactalg.field import Scalar
from unitnilpy.exactalg.matrix import Matrix, identity


class Polynomial:
    '''
    Polynomial with ascending coefficients, trailing zeros removed.

    The zero polynomial has no coefficients; asking for its degree raises
    ZeroPolynomial.

    :param spec: field of the coefficients.
    :type spec: FieldSpec

    :param coeffs: a_0, a_1, ..., as ints, Fractions or Scalars.
    :type coeffs: sequence
    '''
    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs=()):
        values = [spec.coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x_power(cls, spec, m):
        return cls(spec, [spec.zero] * m + [spec.one])

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        if not self.coeffs:
            raise ZeroPolynomial("degree of the zero polynomial")
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise ZeroPolynomial("leading coefficient of the zero polynomial")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        lead_inv = self.spec.inv(self.leading)
        return Polynomial(self.spec, [self.spec.mul(c, lead_inv) for c in self.coeffs])

    @property
    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.spec.zero

    def __call__(self, x):
        '''Value at a raw field element, by Horner.'''
        x = self.spec.coerce(x)
        acc = self.spec.zero
        for c in reversed(self.coeffs):
            acc = self.spec.add(self.spec.mul(acc, x), c)
        return Scalar(self.spec, acc)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.spec != self.spec:
            raise MixedFields(f"{self.spec} and {other.spec}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        spec = self.spec
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (spec.zero,) * (size - len(self.coeffs))
        b = other.coeffs + (spec.zero,) * (size - len(other.coeffs))
        return Polynomial(spec, [spec.add(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        return Polynomial(self.spec, [self.spec.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        spec = self.spec
        if self.is_zero() or other.is_zero():
            return Polynomial(spec)
        out = [spec.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = spec.add(out[i + j], spec.mul(a, b))
        return Polynomial(spec, out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.spec == other.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def to_strings(self):
        '''Ascending coefficients as field text.'''
        return [self.spec.format(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        spec = self.spec
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            negative = not spec.is_prime_field and c < 0
            magnitude = -c if negative else c
            if i == 0:
                body = spec.format(magnitude)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if magnitude == 1 else f"{spec.format(magnitude)}*{power}"
            terms.append(("- " if negative else "+ ") + body)
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"Polynomial({self.spec}, {self})"


def poly_divmod(f, g):
    '''
    Euclidean division f = q.g + r with deg r < deg g.

    :raises DivisionByZeroPoly: g is zero.
    '''
    if g.spec != f.spec:
        raise MixedFields(f"{f.spec} and {g.spec}")
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    spec = f.spec
    remainder = list(f.coeffs)
    dg = g.degree
    lead_inv = spec.inv(g.leading)
    quotient = [spec.zero] * max(len(remainder) - dg, 0)
    for shift in range(len(remainder) - dg - 1, -1, -1):
        factor = spec.mul(remainder[shift + dg], lead_inv)
        if factor == 0:
            continue
        quotient[shift] = factor
        for j, b in enumerate(g.coeffs):
            remainder[shift + j] = spec.sub(remainder[shift + j], spec.mul(factor, b))
    return Polynomial(spec, quotient), Polynomial(spec, remainder[:dg])


def poly_gcd(f, g):
    '''
    Monic greatest common divisor.

    :raises ZeroPolynomial: both arguments are zero.
    '''
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def poly_lcm(f, g):
    return poly_divmod(f * g, poly_gcd(f, g))[0].monic()


def divides(g, f):
    return poly_divmod(f, g)[1].is_zero()


def strip_x_power(f):
    '''
    Write f = x^m . g with g(0) != 0.

    :return (m, g)
    :raises ZeroPolynomial:
    '''
    if f.is_zero():
        raise ZeroPolynomial("cannot strip x from the zero polynomial")
    m = 0
    while f.coeffs[m] == 0:
        m += 1
    return m, Polynomial(f.spec, f.coeffs[m:])


def companion(f):
    '''
    Companion matrix of a monic f = x^m + a_{m-1}x^{m-1} + ... + a_0:
    ones on the subdiagonal and -a_0, ..., -a_{m-1} down the last column.
    Its characteristic polynomial is f.

    :raises NotMonic:
    :raises DegreeZero:
    '''
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    m = f.degree
    if m == 0:
        raise DegreeZero("companion matrix of a constant")
    spec = f.spec
    arr = np.full((m, m), spec.zero, dtype=object)
    for i in range(m - 1):
        arr[i + 1, i] = spec.one
    for i in range(m):
        arr[i, m - 1] = spec.neg(f.coeffs[i])
    return Matrix._wrap(spec, arr)


def poly_at_matrix(f, T):
    '''
    f(T) by Horner's rule.

    :raises DimensionMismatch: T is not square.
    '''
    if not T.is_square:
        raise NotSquare(f"{T.rows}x{T.cols} matrix is not square")
    if T.spec != f.spec:
        raise MixedFields(f"{f.spec} and {T.spec}")
    spec, n = T.spec, T.rows
    result = Matrix._wrap(spec, np.full((n, n), spec.zero, dtype=object))
    eye = identity(spec, n).data
    for c in reversed(f.coeffs):
        acc = np.dot(result.data, T.data) + eye * c
        result = Matrix._wrap(spec, spec.reduce_array(acc))
    return result


def poly_apply(f, T, v):
    '''
    The vector f(T).v, by Horner's rule on v (cheaper than forming f(T)).
    '''
    if T.cols != v.rows:
        raise DimensionMismatch(f"{T.rows}x{T.cols} operator on a {v.rows}-vector")
    spec = T.spec
    acc = np.full(v.shape, spec.zero, dtype=object)
    for c in reversed(f.coeffs):
        acc = spec.reduce_array(np.dot(T.data, acc) + v.data * c)
    return Matrix._wrap(spec, acc)
