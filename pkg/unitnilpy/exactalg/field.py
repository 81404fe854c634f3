# -*- coding: utf-8 -*-
"""
Created on 02/10/2026

Exact scalars over a prime field F_p or over the rationals.

Field elements are stored "raw": a Python int in [0, p) for F_p and a
fractions.Fraction for Q. The FieldSpec knows how to combine raw values, so
matrices and polynomials can keep plain values in numpy object arrays and
delegate the arithmetic to their spec. Scalar is the tagged wrapper handed out
to callers.

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
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from unitnilpy.errors import (DivisionByZero, EntryOutOfField, MixedFields,
                              ModulusOutOfRange, NotPrime, ParseError)

MAX_MODULUS = 2 ** 31

# deterministic for every n < 3,215,031,751
_MILLER_RABIN_BASES = (2, 3, 5, 7)

_INTEGER = re.compile(r"^[+-]?\d+$")
_FRACTION = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")


def is_prime(n):
    '''
    Deterministic Miller-Rabin test, exact for n < 2^31.

    :param n: integer to test.
    :type n: int

    :return bool
    '''
    if n < 2:
        return False
    for small in _MILLER_RABIN_BASES:
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MILLER_RABIN_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldKind(enum.Enum):
    PRIME = "fp"
    RATIONALS = "q"


@dataclass(frozen=True)
class FieldSpec:
    '''
    The field every entry of a matrix or polynomial lives in.

    Two specs are equal iff they have the same kind and the same p.
    Use FieldSpec.prime(p) and FieldSpec.rationals() rather than the
    constructor.
    '''
    kind: FieldKind
    p: int = 0

    def __post_init__(self):
        if self.kind is FieldKind.PRIME:
            if not isinstance(self.p, int) or not 2 <= self.p < MAX_MODULUS:
                raise ModulusOutOfRange(f"modulus {self.p!r} outside [2, 2^31)")
            if not is_prime(self.p):
                raise NotPrime(f"{self.p} is not prime")
        elif self.p != 0:
            raise ValueError("the rationals carry no modulus")

    @classmethod
    def prime(cls, p):
        return cls(FieldKind.PRIME, p)

    @classmethod
    def rationals(cls):
        return cls(FieldKind.RATIONALS)

    @classmethod
    def from_flag(cls, flag):
        '''
        Parse the command line form "fp:<p>" or "q".
        '''
        flag = flag.strip().lower()
        if flag in ("q", "qq", "rationals"):
            return cls.rationals()
        if flag.startswith("fp:"):
            try:
                p = int(flag[3:])
            except ValueError:
                raise ParseError(f"bad modulus in field flag {flag!r}") from None
            return cls.prime(p)
        raise ParseError(f"unknown field {flag!r}, expected fp:<p> or q")

    @classmethod
    def from_descriptor(cls, descriptor):
        '''
        Parse the JSON field descriptor {"kind":"fp","p":7} or {"kind":"q"}.
        '''
        if not isinstance(descriptor, dict):
            raise ParseError("field descriptor must be an object", "field")
        kind = descriptor.get("kind")
        if kind == "q":
            return cls.rationals()
        if kind == "fp":
            p = descriptor.get("p")
            if isinstance(p, bool) or not isinstance(p, int):
                raise ParseError("modulus must be an integer", "field.p")
            return cls.prime(p)
        raise ParseError(f"unknown field kind {kind!r}", "field.kind")

    def descriptor(self):
        if self.is_prime_field:
            return {"kind": "fp", "p": self.p}
        return {"kind": "q"}

    @property
    def is_prime_field(self):
        return self.kind is FieldKind.PRIME

    def __str__(self):
        return f"F_{self.p}" if self.is_prime_field else "Q"

    # raw value arithmetic

    @property
    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, x):
        '''
        Bring an int, Fraction or Scalar of this field into canonical raw form.
        '''
        if isinstance(x, Scalar):
            if x.spec != self:
                raise MixedFields(f"{x.spec} value used over {self}")
            return x.value
        if isinstance(x, (bool, float)) or not isinstance(x, (int, Fraction, np.integer)):
            raise EntryOutOfField(f"{x!r} is not an exact value of {self}")
        if self.is_prime_field:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise DivisionByZero(f"denominator of {x} vanishes mod {self.p}")
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(int(x)) if not isinstance(x, Fraction) else x

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime_field else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime_field else a - b

    def mul(self, a, b):
        return a * b % self.p if self.is_prime_field else a * b

    def neg(self, a):
        return -a % self.p if self.is_prime_field else -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.is_prime_field:
            return pow(a, -1, self.p)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def reduce_array(self, arr):
        '''
        Canonical form of a numpy object array produced by raw arithmetic.
        '''
        if self.is_prime_field:
            return arr % self.p
        return arr

    # text form

    def format(self, a):
        '''
        Decimal residue for F_p, "num/den" (or "num" when integral) for Q.
        '''
        if self.is_prime_field:
            return str(int(a))
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, text):
        '''
        Read one entry. F_p accepts decimal integers, reduced into [0, p);
        Q accepts "int" and "int/int".
        '''
        if not isinstance(text, str):
            raise ParseError(f"entry {text!r} must be a string")
        text = text.strip()
        if _INTEGER.match(text):
            return self.coerce(int(text))
        match = _FRACTION.match(text)
        if match is None:
            raise ParseError(f"malformed entry {text!r}")
        if self.is_prime_field:
            raise EntryOutOfField(f"fraction {text!r} is not an entry of {self}")
        num, den = int(match.group(1)), int(match.group(2))
        if den == 0:
            raise EntryOutOfField(f"zero denominator in {text!r}")
        return Fraction(num, den)


@dataclass(frozen=True, eq=False)
class Scalar:
    '''
    A field element tagged with its field.

    Arithmetic between scalars of different fields raises MixedFields,
    and so does comparing them.
    '''
    spec: FieldSpec
    value: object

    @classmethod
    def of(cls, spec, x):
        return cls(spec, spec.coerce(x))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.spec != self.spec:
                raise MixedFields(f"{self.spec} and {other.spec}")
            return other.value
        return self.spec.coerce(other)

    def __add__(self, other):
        return Scalar(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.spec, self.spec.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.spec, self.spec.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.spec, self.spec.neg(self.value))

    def __truediv__(self, other):
        return Scalar(self.spec, self.spec.div(self.value, self._other(other)))

    def inv(self):
        return Scalar(self.spec, self.spec.inv(self.value))

    def is_zero(self):
        return self.value == 0

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        return self.value == self._other(other)

    def __hash__(self):
        return hash((self.spec, self.value))

    def __str__(self):
        return self.spec.format(self.value)

    def __repr__(self):
        return f"Scalar({self.spec}, {self})"
