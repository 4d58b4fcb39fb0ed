# liftmap/stdbasis.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Gröbner bases, standard bases, normal forms and ideal membership.

    For a global ordering, `buchberger` computes the reduced Gröbner
    basis of an ideal of the polynomial ring. For a local ordering,
    `standard_basis` computes a standard basis of the ideal generated
    in the localization at the origin, using Mora's weak normal form.
    Membership in 𝔞 of the power series ring is decided in the
    localization: a polynomial ideal and its completion meet the
    polynomial ring in the same local ideal.
    """

import itertools
import logging

from .polyring import (
        Polynomial, degrevlex, monomial_divides, monomial_is_coprime,
        monomial_lcm, monomial_quotient, negdegrevlex)


logger = logging.getLogger(__name__)


class BasisError(Exception):
    """ Base exception class for errors from this module. """


class OrderingError(BasisError, ValueError):
    """ Exception raised when an ordering is not of the required kind. """



graded_mode = 'graded'
local_mode = 'local'
modes = (graded_mode, local_mode)


def order_for_mode(context, mode):
    """ The computational ordering for a computation mode.

        :param context: The `VarContext`.
        :param mode: `graded_mode` (global degrevlex) or `local_mode`
            (local negative degrevlex).
        :return: The `MonomialOrder`.
        """
    if mode == graded_mode:
        return degrevlex(context)
    if mode == local_mode:
        return negdegrevlex(context)
    raise ValueError("Unknown mode: {mode!r}".format(mode=mode))


class IdealData:
    """ An ideal given by generators in a polynomial context.

        `context`
            The `VarContext` of the generators.

        `generators`
            Tuple of nonzero polynomials; zero generators are dropped,
            so the zero ideal has no generators.
        """

    __slots__ = ('context', 'generators', '_hash')

    def __init__(self, context, generators=()):
        generators = tuple(generators)
        for generator in generators:
            if generator.context != context:
                raise ValueError(
                        "Generator {g} is not in the ideal's context".format(
                            g=generator))
        self.context = context
        self.generators = tuple(
                generator for generator in generators if generator)
        self._hash = None

    def __eq__(self, other):
        if not isinstance(other, IdealData):
            return NotImplemented
        return (
                self.context == other.context
                and self.generators == other.generators)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.context, self.generators))
        return self._hash

    def __repr__(self):
        return "IdealData([{gens}])".format(gens=", ".join(
                str(generator) for generator in self.generators))

    def is_zero(self):
        """ ``True`` iff this is the zero ideal. """
        return not self.generators

    def is_homogeneous(self):
        """ ``True`` iff every generator is homogeneous. """
        return all(
                generator.is_homogeneous() for generator in self.generators)

    def is_in_maximal_ideal(self):
        """ ``True`` iff every generator has zero constant term. """
        return not any(
                generator.constant_term() for generator in self.generators)

    def extended(self, polynomials):
        """ The ideal with `polynomials` appended to the generators. """
        return IdealData(self.context, self.generators + tuple(polynomials))


class ComputedBasis:
    """ A Gröbner basis or standard basis of an ideal.

        `ideal`
            The `IdealData` the basis was computed from.

        `order`
            The `MonomialOrder` used.

        `elements`
            Tuple of monic polynomials whose leading monomials generate
            the leading ideal.

        `kind`
            `groebner_kind` for a global ordering, `standard_kind` for
            a local ordering.
        """

    groebner_kind = 'Groebner'
    standard_kind = 'Standard'

    def __init__(self, ideal, order, elements, kind):
        self.ideal = ideal
        self.order = order
        self.elements = tuple(elements)
        self.kind = kind

    def __repr__(self):
        return "ComputedBasis({kind}, [{elements}])".format(
                kind=self.kind, elements=", ".join(
                    str(element) for element in self.elements))

    def leading_monomials(self):
        """ List of leading monomials of the elements. """
        return [
                self.order.leading_monomial(element)
                for element in self.elements]

    def normal_form(self, polynomial):
        """ Normal form of `polynomial` with respect to this basis. """
        if self.kind == self.groebner_kind:
            return normal_form(polynomial, self.elements, self.order)
        return mora_normal_form(polynomial, self.elements, self.order)

    def contains(self, polynomial):
        """ ``True`` iff `polynomial` lies in the ideal. """
        return not self.normal_form(polynomial)



def s_polynomial(f, g, order):
    """ The S-polynomial of `f` and `g` with respect to `order`. """
    field = f.context.field
    (monomial_f, value_f) = order.leading_term(f)
    (monomial_g, value_g) = order.leading_term(g)
    lcm = monomial_lcm(monomial_f, monomial_g)
    left = f.mul_term(
            monomial_quotient(lcm, monomial_f), field.inv(value_f))
    right = g.mul_term(
            monomial_quotient(lcm, monomial_g), field.inv(value_g))
    return left - right


class Reduction:
    """ Result of dividing a polynomial by a list of polynomials.

        `quotients`
            List of polynomials, one per divisor.

        `remainder`
            The remainder; no term of it is divisible by a divisor's
            leading monomial.

        The dividend equals Σ quotients[j]·divisors[j] + remainder.
        """

    def __init__(self, quotients, remainder):
        self.quotients = quotients
        self.remainder = remainder


def reduce_polynomial(f, divisors, order):
    """ Multivariate division of `f` by `divisors` under a global order.

        :param f: The `Polynomial` to divide.
        :param divisors: Sequence of nonzero polynomials.
        :param order: A global `MonomialOrder`.
        :return: A `Reduction` recording quotients and the fully
            reduced remainder.
        :raises OrderingError: If `order` is not global.
        """
    if not order.is_global:
        raise OrderingError("Division requires a global ordering")
    context = f.context
    field = context.field
    divisors = list(divisors)
    leading = [order.leading_term(divisor) for divisor in divisors]
    quotients = [dict() for divisor in divisors]
    remainder = {}
    working = dict(f.coefficients)
    while working:
        monomial = max(working, key=order.key)
        value = working[monomial]
        for (index, (divisor_monomial, divisor_value)) in enumerate(leading):
            if monomial_divides(divisor_monomial, monomial):
                factor = field.div(value, divisor_value)
                shift = monomial_quotient(monomial, divisor_monomial)
                quotients[index][shift] = field.add(
                        quotients[index].get(shift, field.zero), factor)
                for (term, coefficient) in (
                        divisors[index].coefficients.items()):
                    target = tuple(x + y for (x, y) in zip(term, shift))
                    updated = field.sub(
                            working.get(target, field.zero),
                            field.mul(factor, coefficient))
                    if updated:
                        working[target] = updated
                    else:
                        working.pop(target, None)
                break
        else:
            remainder[monomial] = value
            del working[monomial]
    return Reduction(
            [Polynomial(context, quotient) for quotient in quotients],
            Polynomial(context, remainder))


def normal_form(f, basis, order):
    """ Fully reduced remainder of `f` modulo `basis` (global order). """
    return reduce_polynomial(f, basis, order).remainder



class WeakNormalForm:
    """ Result of Mora's weak normal form algorithm.

        `remainder`
            The weak normal form h; its leading monomial is divisible by
            no leading monomial of the basis.

        `unit`
            A polynomial u with u(0) ≠ 0, a unit of the local ring.

        `quotients`
            List of polynomials aⱼ, one per basis element.

        The identity u·f − h = Σ aⱼ·gⱼ holds exactly in the polynomial
        ring.
        """

    def __init__(self, remainder, unit, quotients):
        self.remainder = remainder
        self.unit = unit
        self.quotients = quotients


class _Reducer:
    """ Candidate reducer in Mora's algorithm, with its provenance. """

    __slots__ = ('polynomial', 'monomial', 'value', 'ecart', 'origin')

    def __init__(self, polynomial, order, origin):
        self.polynomial = polynomial
        (self.monomial, self.value) = order.leading_term(polynomial)
        self.ecart = polynomial.total_degree() - sum(self.monomial)
        self.origin = origin


def mora_reduction(f, basis, order, record=True):
    """ Mora's weak normal form of `f` with respect to `basis`.

        :param f: The `Polynomial` to reduce.
        :param basis: Sequence of nonzero polynomials.
        :param order: A local `MonomialOrder`.
        :param record: If true, maintain the unit and quotients.
        :return: A `WeakNormalForm`; when `record` is false its `unit`
            and `quotients` are ``None``.
        :raises OrderingError: If `order` is not local.

        The reducer is chosen among those with leading monomial
        dividing the current leading monomial, with minimal ecart
        (earliest on ties). Whenever the chosen reducer has larger
        ecart than the current polynomial, the current polynomial is
        appended to the reducer list; this guarantees termination.
        """
    if not order.is_local:
        raise OrderingError("Weak normal form requires a local ordering")
    context = f.context
    field = context.field
    reducers = [
            _Reducer(element, order, index)
            for (index, element) in enumerate(basis)]
    unit = context.one() if record else None
    quotients = [context.zero() for element in basis] if record else None
    current = f
    while current:
        (monomial, value) = order.leading_term(current)
        candidates = [
                reducer for reducer in reducers
                if monomial_divides(reducer.monomial, monomial)]
        if not candidates:
            break
        chosen = min(candidates, key=lambda reducer: reducer.ecart)
        ecart = current.total_degree() - sum(monomial)
        if chosen.ecart > ecart:
            origin = (unit, list(quotients)) if record else None
            reducers.append(_Reducer(current, order, origin))
        factor = field.div(value, chosen.value)
        shift = monomial_quotient(monomial, chosen.monomial)
        current = current - chosen.polynomial.mul_term(shift, factor)
        if not record:
            continue
        multiplier = context.monomial(shift, factor)
        if isinstance(chosen.origin, int):
            quotients[chosen.origin] = (
                    quotients[chosen.origin] + multiplier)
        else:
            (chosen_unit, chosen_quotients) = chosen.origin
            unit = unit - multiplier * chosen_unit
            quotients = [
                    quotient - multiplier * chosen_quotient
                    for (quotient, chosen_quotient) in zip(
                        quotients, chosen_quotients)]
    return WeakNormalForm(current, unit, quotients)


def mora_normal_form(f, basis, order):
    """ Weak normal form of `f` modulo `basis` under a local order.

        :return: A polynomial h with u·f ≡ h modulo ⟨basis⟩ for a unit
            u of the local ring, whose leading monomial is divisible by
            no leading monomial of `basis`.
        """
    return mora_reduction(f, basis, order, record=False).remainder



def _pair_key(pair, leading, order):
    (i, j) = pair
    lcm = monomial_lcm(leading[i], leading[j])
    return (sum(lcm), order.key(lcm), i, j)


def _minimal_elements(elements, order):
    """ Drop elements whose leading monomial another's divides. """
    leading = [order.leading_monomial(element) for element in elements]
    result = []
    for (index, monomial) in enumerate(leading):
        redundant = False
        for (other, other_monomial) in enumerate(leading):
            if other == index or not monomial_divides(other_monomial, monomial):
                continue
            if other_monomial != monomial or other < index:
                redundant = True
                break
        if not redundant:
            result.append(elements[index])
    return result


def buchberger(ideal, order):
    """ Reduced Gröbner basis of `ideal` under a global ordering.

        :param ideal: The `IdealData`.
        :param order: A global `MonomialOrder`.
        :return: A `ComputedBasis` of kind `groebner_kind`, reduced and
            monic, sorted by descending leading monomial.
        :raises OrderingError: If `order` is not global.

        Pairs are treated by the normal strategy: least lcm degree
        first, ties by the ordering. Pairs with coprime leading
        monomials, and pairs covered by the chain criterion, are
        skipped.
        """
    if not order.is_global:
        raise OrderingError("Buchberger's algorithm requires a global order")
    elements = [generator.monic(order) for generator in ideal.generators]
    leading = [order.leading_monomial(element) for element in elements]
    pending = set(itertools.combinations(range(len(elements)), 2))
    while pending:
        pair = min(pending, key=lambda pair: _pair_key(pair, leading, order))
        pending.discard(pair)
        (i, j) = pair
        if monomial_is_coprime(leading[i], leading[j]):
            continue
        lcm = monomial_lcm(leading[i], leading[j])
        if any(
                k not in pair
                and monomial_divides(leading[k], lcm)
                and tuple(sorted((i, k))) not in pending
                and tuple(sorted((j, k))) not in pending
                for k in range(len(elements))):
            continue
        remainder = normal_form(
                s_polynomial(elements[i], elements[j], order),
                elements, order)
        if not remainder:
            continue
        remainder = remainder.monic(order)
        index = len(elements)
        elements.append(remainder)
        leading.append(order.leading_monomial(remainder))
        pending.update((k, index) for k in range(index))
        logger.debug(
                "Gröbner basis grows to {count:d} elements".format(
                    count=len(elements)))
    minimal = _minimal_elements(elements, order)
    reduced = []
    for (index, element) in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(
                normal_form(element, others, order).monic(order)
                if others else element)
    reduced.sort(key=lambda element: order.key(
            order.leading_monomial(element)), reverse=True)
    return ComputedBasis(ideal, order, reduced, ComputedBasis.groebner_kind)


def standard_basis(ideal, order):
    """ Standard basis of `ideal` in the localization, for a local order.

        :param ideal: The `IdealData`; generators should lie in 𝔪.
        :param order: A local `MonomialOrder`.
        :return: A `ComputedBasis` of kind `standard_kind`: monic
            elements whose leading monomials minimally generate the
            leading ideal.
        :raises OrderingError: If `order` is not local.

        S-polynomials are reduced by Mora's weak normal form; every
        pair is treated, in the normal strategy order.
        """
    if not order.is_local:
        raise OrderingError("Standard bases require a local ordering")
    elements = [generator.monic(order) for generator in ideal.generators]
    leading = [order.leading_monomial(element) for element in elements]
    pending = set(itertools.combinations(range(len(elements)), 2))
    while pending:
        pair = min(pending, key=lambda pair: _pair_key(pair, leading, order))
        pending.discard(pair)
        remainder = mora_normal_form(
                s_polynomial(elements[pair[0]], elements[pair[1]], order),
                elements, order)
        if not remainder:
            continue
        remainder = remainder.monic(order)
        index = len(elements)
        elements.append(remainder)
        leading.append(order.leading_monomial(remainder))
        pending.update((k, index) for k in range(index))
        logger.debug(
                "Standard basis grows to {count:d} elements".format(
                    count=len(elements)))
    minimal = _minimal_elements(elements, order)
    minimal.sort(key=lambda element: order.key(
            order.leading_monomial(element)), reverse=True)
    return ComputedBasis(ideal, order, minimal, ComputedBasis.standard_kind)



class BasisCache:
    """ Computed bases of one pipeline run, keyed by ideal and ordering.

        A cache belongs to a single computation; it is not shared
        between pipelines.
        """

    def __init__(self):
        self._bases = {}
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._bases)

    def get(self, ideal, order):
        """ The basis of `ideal` under `order`, computing it if needed. """
        key = (ideal, order)
        basis = self._bases.get(key)
        if basis is not None:
            self.hits += 1
            return basis
        self.misses += 1
        basis = compute_basis(ideal, order)
        self._bases[key] = basis
        return basis


def compute_basis(ideal, order, cache=None):
    """ Gröbner or standard basis of `ideal`, by the kind of `order`. """
    if cache is not None:
        return cache.get(ideal, order)
    if order.is_global:
        return buchberger(ideal, order)
    return standard_basis(ideal, order)


def is_member(f, ideal, mode, cache=None):
    """ Decide whether `f` lies in the ideal.

        :param f: The `Polynomial` to test.
        :param ideal: The `IdealData`.
        :param mode: `graded_mode` for membership in the polynomial ideal,
            by Gröbner normal form; `local_mode` for membership in the
            localization at the origin, by Mora normal form.
        :param cache: Optional `BasisCache`.
        :return: ``True`` iff `f` lies in the ideal.
        """
    if not f:
        return True
    if ideal.is_zero():
        return False
    basis = compute_basis(ideal, order_for_mode(f.context, mode), cache)
    return basis.contains(f)



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
