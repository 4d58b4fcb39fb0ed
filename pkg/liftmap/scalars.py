# liftmap/scalars.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Exact coefficient-field arithmetic for the rationals and prime fields.

    A `FieldSpec` names the coefficient field K, either the rationals
    ℚ or a prime field 𝔽ₚ. Field elements are held in canonical form:
    a reduced `fractions.Fraction` for ℚ, an integer residue in
    ``[0, p-1]`` for 𝔽ₚ. Polynomials store these raw canonical values
    directly; the `Scalar` class wraps one value with its field for
    use at API boundaries.
    """

from fractions import Fraction
import re


class ScalarError(Exception):
    """ Base exception class for errors from this module. """


class FieldSpecError(ScalarError, ValueError):
    """ Exception raised when a field declaration is invalid. """


class FieldMismatchError(ScalarError, ValueError):
    """ Exception raised when operands belong to different fields. """


class ScalarZeroDivisionError(ScalarError, ZeroDivisionError):
    """ Exception raised when inverting the zero element. """


class ScalarSyntaxError(ScalarError, ValueError):
    """ Exception raised when a scalar literal cannot be parsed. """



rationals_kind = 'Q'
prime_field_kind = 'F'

# Prime fields are restricted to word-sized characteristic.
max_characteristic = 2 ** 63


def is_prime(number):
    """ Determine whether `number` is prime, by trial division.

        :param number: The integer to test.
        :return: ``True`` iff `number` is a prime.
        """
    if number < 2:
        return False
    if number % 2 == 0:
        return number == 2
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


class FieldSpec:
    """ Specification of the coefficient field K.

        `kind`
            Either `rationals_kind` (``'Q'``) or `prime_field_kind`
            (``'F'``).

        `characteristic`
            ``0`` for ℚ; the prime ``p`` for 𝔽ₚ.

        Instances are immutable and compare equal when they describe the
        same field. The arithmetic methods operate on raw canonical
        values (see the module documentation), not on `Scalar`
        instances.
        """

    __slots__ = ('kind', 'characteristic')

    def __init__(self, characteristic=0):
        """ Set up a new instance.

            :param characteristic: ``0`` for the rationals, otherwise a
                prime number.
            :raises FieldSpecError: If the characteristic is negative,
                composite, or too large.
            """
        if not isinstance(characteristic, int) or characteristic < 0:
            raise FieldSpecError(
                    "Invalid characteristic: {value!r}".format(
                        value=characteristic))
        if characteristic == 0:
            kind = rationals_kind
        else:
            if characteristic >= max_characteristic:
                raise FieldSpecError(
                        "Characteristic {p:d} is not word-sized".format(
                            p=characteristic))
            if not is_prime(characteristic):
                raise FieldSpecError(
                        "Characteristic {p:d} is not prime".format(
                            p=characteristic))
            kind = prime_field_kind
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'characteristic', characteristic)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec instances are immutable")

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.characteristic == other.characteristic

    def __hash__(self):
        return hash(('FieldSpec', self.characteristic))

    def __repr__(self):
        return "FieldSpec({p!r})".format(p=self.characteristic)

    def __str__(self):
        return self.format()

    @property
    def is_rationals(self):
        """ ``True`` iff this is the field of rationals. """
        return self.kind == rationals_kind

    @property
    def is_prime_field(self):
        """ ``True`` iff this is a prime field. """
        return self.kind == prime_field_kind

    @property
    def zero(self):
        """ The raw zero value of this field. """
        return Fraction(0) if self.is_rationals else 0

    @property
    def one(self):
        """ The raw unit value of this field. """
        return Fraction(1) if self.is_rationals else 1

    def reduce(self, value):
        """ Bring a raw value into canonical form.

            :param value: An integer or `Fraction`.
            :return: The canonical representative of `value` in this
                field.
            :raises ScalarZeroDivisionError: If `value` is a fraction
                whose denominator vanishes in this field.
            """
        if self.is_rationals:
            return Fraction(value)
        if isinstance(value, Fraction):
            denominator = value.denominator % self.characteristic
            if denominator == 0:
                raise ScalarZeroDivisionError(
                        "Denominator of {value} vanishes in {field}".format(
                            value=value, field=self))
            return (value.numerator * pow(
                    denominator, -1, self.characteristic)
                    ) % self.characteristic
        return value % self.characteristic

    def add(self, a, b):
        """ Sum of raw values `a` and `b`. """
        if self.is_rationals:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        """ Difference of raw values `a` and `b`. """
        if self.is_rationals:
            return a - b
        return (a - b) % self.characteristic

    def neg(self, a):
        """ Negation of raw value `a`. """
        if self.is_rationals:
            return -a
        return (-a) % self.characteristic

    def mul(self, a, b):
        """ Product of raw values `a` and `b`. """
        if self.is_rationals:
            return a * b
        return (a * b) % self.characteristic

    def inv(self, a):
        """ Inverse of raw value `a`.

            :raises ScalarZeroDivisionError: If `a` is zero.
            """
        if not a:
            raise ScalarZeroDivisionError("Inverse of zero in {field}".format(
                    field=self))
        if self.is_rationals:
            return 1 / a
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        """ Quotient of raw values `a` by `b`. """
        return self.mul(a, self.inv(b))

    def pool(self, bound):
        """ Candidate pool of raw values, in enumeration order.

            :param bound: Positive integer bound for the rationals.
            :return: A list of raw values: all residues ``0 … p-1`` for
                a prime field; the integers ``0, 1, -1, 2, -2, …,
                bound, -bound`` for the rationals.
            """
        if self.is_prime_field:
            return list(range(self.characteristic))
        values = [Fraction(0)]
        for magnitude in range(1, bound + 1):
            values.append(Fraction(magnitude))
            values.append(Fraction(-magnitude))
        return values

    def random_element(self, rng, bound=10):
        """ Pseudorandom raw value drawn from `rng`.

            :param rng: A `random.Random` instance.
            :param bound: Magnitude bound for rationals (numerator and
                denominator).
            :return: A raw canonical value.
            """
        if self.is_prime_field:
            return rng.randrange(self.characteristic)
        numerator = rng.randint(-bound, bound)
        denominator = rng.randint(1, bound)
        return Fraction(numerator, denominator)

    def format(self):
        """ Field declaration text: ``Q`` or ``F p``. """
        if self.is_rationals:
            return "Q"
        return "F {p:d}".format(p=self.characteristic)

    @classmethod
    def parse(cls, text):
        """ Parse a field declaration.

            :param text: Declaration text, ``Q`` or ``F p``.
            :return: The `FieldSpec` instance.
            :raises FieldSpecError: If the text is not a valid
                declaration.
            """
        words = text.split()
        if words == ['Q']:
            return cls(0)
        if len(words) == 2 and words[0] == 'F' and words[1].isdigit():
            return cls(int(words[1]))
        raise FieldSpecError(
                "Invalid field declaration: {text!r}".format(text=text))


def rationals():
    """ The field of rational numbers ℚ. """
    return FieldSpec(0)


def prime_field(p):
    """ The prime field 𝔽ₚ. """
    return FieldSpec(p)



class Scalar:
    """ An exact element of a coefficient field.

        Instances are immutable; the `value` is always canonical, so two
        equal scalars have identical values.
        """

    __slots__ = ('field', 'value')

    def __init__(self, field, value):
        """ Set up a new instance.

            :param field: The `FieldSpec` of the element.
            :param value: An integer or `Fraction` to be reduced into
                `field`.
            """
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'value', field.reduce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar instances are immutable")

    def _check_field(self, other):
        if not isinstance(other, Scalar):
            other = Scalar(self.field, other)
        if other.field != self.field:
            raise FieldMismatchError(
                    "Field mismatch: {a} and {b}".format(
                        a=self.field, b=other.field))
        return other

    def _wrap(self, value):
        result = object.__new__(Scalar)
        object.__setattr__(result, 'field', self.field)
        object.__setattr__(result, 'value', value)
        return result

    def __add__(self, other):
        other = self._check_field(other)
        return self._wrap(self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check_field(other)
        return self._wrap(self.field.sub(self.value, other.value))

    def __rsub__(self, other):
        other = self._check_field(other)
        return self._wrap(self.field.sub(other.value, self.value))

    def __mul__(self, other):
        other = self._check_field(other)
        return self._wrap(self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check_field(other)
        return self._wrap(self.field.div(self.value, other.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.reduce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return "Scalar({field!r}, {text!r})".format(
                field=self.field, text=format_scalar(self))

    def __str__(self):
        return format_scalar(self)

    def inverse(self):
        """ The multiplicative inverse of this element. """
        return self._wrap(self.field.inv(self.value))


def add(a, b):
    """ Canonical sum of scalars `a` and `b`.

        :raises FieldMismatchError: If the fields differ.
        """
    return a + b


def mul(a, b):
    """ Canonical product of scalars `a` and `b`.

        :raises FieldMismatchError: If the fields differ.
        """
    return a * b


def inv(a):
    """ Inverse of the nonzero scalar `a`.

        :raises ScalarZeroDivisionError: If `a` is zero.
        """
    return a.inverse()


def enumerate_scalars(field, bound):
    """ Enumerate the candidate pool of `field` as scalars.

        :param field: The `FieldSpec` to enumerate.
        :param bound: Positive integer bound (ignored for prime fields).
        :return: A list of `Scalar`, in the fixed pool order of
            `FieldSpec.pool`.
        """
    return [Scalar(field, value) for value in field.pool(bound)]



scalar_literal_regex = re.compile(r"^\s*(-?)\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_raw(text, field):
    """ Parse a scalar literal into a raw canonical value of `field`.

        :param text: Literal text: an integer, or ``a/b``.
        :param field: The `FieldSpec` to read into.
        :return: The raw canonical value.
        :raises ScalarSyntaxError: If the text is not a literal.
        :raises ScalarZeroDivisionError: If the denominator is zero in
            `field`.
        """
    match = scalar_literal_regex.match(text)
    if match is None:
        raise ScalarSyntaxError(
                "Invalid scalar literal: {text!r}".format(text=text))
    (sign, numerator, denominator) = match.groups()
    numerator = int(numerator)
    if sign:
        numerator = -numerator
    if denominator is None:
        return field.reduce(numerator)
    denominator = int(denominator)
    if denominator == 0:
        raise ScalarZeroDivisionError(
                "Zero denominator in {text!r}".format(text=text))
    return field.reduce(Fraction(numerator, denominator))


def parse_scalar(text, field):
    """ Parse a scalar literal into a `Scalar` of `field`. """
    return Scalar(field, parse_raw(text, field))


def format_raw(value):
    """ Text of a raw canonical value. """
    return str(value)


def format_scalar(scalar):
    """ Canonical text of `scalar`: ``a/b``, ``-a``, or a residue. """
    return format_raw(scalar.value)



# Copyright © 2026 Liftmap developers <liftmap-devel@example.org>
#
# This is free software: you may copy, modify, and/or distribute this work
# under the terms of the Apache License, version 2.0 as published by the
# Apache Software Foundation.
# No warranty expressed or implied. See the file ‘LICENSE.ASF-2’ for details.



# Local variables:
# coding: utf-8
# mode: python
# End:
# vim: fileencoding=utf-8 filetype=python :
