# -*- coding: utf-8 -*-
"""
Created on 02/10/2026

Exceptions raised by unitnilpy.

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


class UnitNilError(Exception):
    '''Base class of every error raised by the package.'''


# field and scalar arithmetic

class MixedFields(UnitNilError, TypeError):
    '''Operands live over different fields.'''


class DivisionByZero(UnitNilError, ZeroDivisionError):
    pass


class NotPrime(UnitNilError, ValueError):
    pass


class ModulusOutOfRange(UnitNilError, ValueError):
    '''Prime modulus outside [2, 2^31).'''


# matrices

class DimensionMismatch(UnitNilError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class Singular(UnitNilError, ArithmeticError):
    pass


class NotAPermutation(UnitNilError, ValueError):
    pass


class EmptyInput(UnitNilError, ValueError):
    pass


class NotNilpotent(UnitNilError, ValueError):
    pass


# polynomials

class DivisionByZeroPoly(UnitNilError, ArithmeticError):
    pass


class ZeroPolynomial(UnitNilError, ValueError):
    pass


class NotMonic(UnitNilError, ValueError):
    pass


class DegreeZero(UnitNilError, ValueError):
    pass


# constructions

class InvalidBlock(UnitNilError, ValueError):
    '''Block data inconsistent with its declared type.'''


class IndexConstraintViolated(UnitNilError, ValueError):
    pass


class CapacityExceeded(UnitNilError, ValueError):
    '''More zero blocks than a host block can absorb.'''


class DistributionImpossible(UnitNilError, ValueError):
    pass


class InternalVerificationFailed(UnitNilError):
    '''
    A post-hoc check on a computed object failed.

    Never raised for bad input: it means the computation itself is wrong.
    '''


# oracle

class BudgetExceeded(UnitNilError, ValueError):
    pass


class RationalsUnsupported(UnitNilError, ValueError):
    pass


# generator

class InvalidSeed(UnitNilError, ValueError):
    '''Random seed that is not a non-negative integer.'''


# instance files

class ParseError(UnitNilError, ValueError):
    '''
    Malformed instance or result file.

    :param message: what went wrong.
    :param where: JSON path of the offending field, or "line L column C".
    '''

    def __init__(self, message, where=None):
        self.where = where
        if where is not None:
            message = f"{where}: {message}"
        super().__init__(message)


class EntryOutOfField(UnitNilError, ValueError):
    pass
