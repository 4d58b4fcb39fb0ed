# liftmap/invariants.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Ideal invariants: leading ideals, Krull dimension, colength.

    The Krull dimension of R/I is read off the leading ideal of a
    computed basis: for a global ordering and homogeneous I it is the
    dimension of the graded ring; for a local ordering it is the
    dimension of the localization at the origin, which is the dimension
    of the quotient of the power series ring.
    """

import itertools

from .polyring import (
        infinity, linear_part, linear_rank_extend, monomial_divides,
        monomial_support)
from .stdbasis import (
        compute_basis, graded_mode, local_mode, order_for_mode)


class InvariantError(Exception):
    """ Base exception class for errors from this module. """


class NonHomogeneousIdealError(InvariantError, ValueError):
    """ Exception raised when graded mode receives inhomogeneous input. """


class NonLocalIdealError(InvariantError, ValueError):
    """ Exception raised when local mode receives a generator not in 𝔪. """



class MonomialIdeal:
    """ An ideal generated by monomials.

        `context`
            The `VarContext` of the monomials.

        `generators`
            Tuple of exponent tuples, pairwise non-dividing, sorted.
        """

    def __init__(self, context, generators):
        generators = sorted(set(tuple(generator) for generator in generators))
        minimal = [
                generator for generator in generators
                if not any(
                    other != generator and monomial_divides(other, generator)
                    for other in generators)]
        self.context = context
        self.generators = tuple(minimal)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return (
                self.context == other.context
                and set(self.generators) == set(other.generators))

    def __hash__(self):
        return hash((self.context, frozenset(self.generators)))

    def __repr__(self):
        return "MonomialIdeal({generators!r})".format(
                generators=list(self.generators))

    def contains(self, monomial):
        """ ``True`` iff `monomial` lies in this ideal. """
        return any(
                monomial_divides(generator, monomial)
                for generator in self.generators)

    def is_unit(self):
        """ ``True`` iff this ideal contains the monomial 1. """
        return self.context.unit_monomial() in self.generators

    def pure_power_bounds(self):
        """ For each variable, the least ``a`` with Xᵢ^a in the ideal.

            :return: A list with an integer or ``None`` per variable.
            """
        bounds = [None] * self.context.nvars
        for generator in self.generators:
            support = monomial_support(generator)
            if len(support) == 1:
                (index,) = support
                exponent = generator[index]
                if bounds[index] is None or exponent < bounds[index]:
                    bounds[index] = exponent
        return bounds


def leading_ideal(basis):
    """ The ideal of leading monomials of a `ComputedBasis`. """
    return MonomialIdeal(basis.ideal.context, basis.leading_monomials())


class DimensionReport:
    """ The Krull dimension of a quotient ring with a witness.

        `ideal`
            The `IdealData`, or ``None`` for a bare monomial ideal.

        `mode`
            `graded_mode`, `local_mode`, or ``None``.

        `dimension`
            Integer ≥ −1; −1 for the unit ideal.

        `witness`
            Tuple of variable indices forming the lexicographically
            first maximum independent set of the leading ideal.
        """

    def __init__(self, ideal, mode, dimension, witness, context):
        self.ideal = ideal
        self.mode = mode
        self.dimension = dimension
        self.witness = tuple(witness)
        self.context = context

    def __repr__(self):
        return "DimensionReport(dimension={dim:d}, witness={names!r})".format(
                dim=self.dimension, names=self.witness_names())

    def witness_names(self):
        """ Names of the witness variables, in variable order. """
        return [self.context.names[index] for index in self.witness]


def monomial_dimension(monomial_ideal, ideal=None, mode=None):
    """ Dimension of K[X]/⟨monomial_ideal⟩ by maximum independent sets.

        :param monomial_ideal: The `MonomialIdeal`.
        :param ideal: The `IdealData` to record in the report.
        :param mode: The mode to record in the report.
        :return: A `DimensionReport`.

        A variable set S is independent when no generator is supported
        inside S. Subsets are examined by decreasing size, each size in
        lexicographic order, so the witness is the lexicographically
        first maximum independent set.
        """
    context = monomial_ideal.context
    if monomial_ideal.is_unit():
        return DimensionReport(ideal, mode, -1, (), context)
    supports = [
            monomial_support(generator)
            for generator in monomial_ideal.generators]
    for size in range(context.nvars, -1, -1):
        for subset in itertools.combinations(range(context.nvars), size):
            chosen = frozenset(subset)
            if not any(support <= chosen for support in supports):
                return DimensionReport(ideal, mode, size, subset, context)



def check_mode_input(ideal, mode):
    """ Validate generators for a computation mode.

        :raises NonHomogeneousIdealError: In graded mode, if a generator
            is not homogeneous.
        :raises NonLocalIdealError: In local mode, if a generator has a
            nonzero constant term.
        """
    if mode == graded_mode:
        for generator in ideal.generators:
            if not generator.is_homogeneous():
                raise NonHomogeneousIdealError(
                        "Graded mode needs homogeneous generators,"
                        " got {g}".format(g=generator))
    elif mode == local_mode:
        for generator in ideal.generators:
            if generator.constant_term():
                raise NonLocalIdealError(
                        "Local mode needs generators in the maximal ideal,"
                        " got {g}".format(g=generator))
    else:
        raise ValueError("Unknown mode: {mode!r}".format(mode=mode))


def mode_leading_ideal(ideal, mode, cache=None):
    """ Leading ideal of `ideal` in the ordering of `mode`. """
    check_mode_input(ideal, mode)
    if ideal.is_zero():
        return MonomialIdeal(ideal.context, ())
    order = order_for_mode(ideal.context, mode)
    return leading_ideal(compute_basis(ideal, order, cache))


def krull_dimension(ideal, mode, cache=None):
    """ Krull dimension of R/⟨ideal⟩.

        :param ideal: The `IdealData`.
        :param mode: `graded_mode` for the graded quotient of the
            polynomial ring; `local_mode` for the quotient of the local
            (power series) ring.
        :param cache: Optional `BasisCache`.
        :return: A `DimensionReport`.
        :raises NonHomogeneousIdealError: See `check_mode_input`.
        :raises NonLocalIdealError: See `check_mode_input`.
        """
    monomials = mode_leading_ideal(ideal, mode, cache)
    return monomial_dimension(monomials, ideal=ideal, mode=mode)


def is_m_primary(ideal, mode, cache=None):
    """ ``True`` iff ⟨ideal⟩ is primary to the maximal ideal 𝔪. """
    return krull_dimension(ideal, mode, cache).dimension == 0


def standard_monomials(monomial_ideal):
    """ The monomials outside a zero-dimensional monomial ideal.

        :return: A list of exponent tuples, sorted; or ``None`` when
            the ideal is not zero-dimensional.
        """
    bounds = monomial_ideal.pure_power_bounds()
    if any(bound is None for bound in bounds):
        return None
    return [
            monomial
            for monomial in itertools.product(
                *(range(bound) for bound in bounds))
            if not monomial_ideal.contains(monomial)]


def quotient_k_dimension(ideal, mode, cache=None):
    """ Dimension of R/⟨ideal⟩ as a K-vector space.

        :return: The number of standard monomials, or `infinity` if the
            ideal is not 𝔪-primary.
        """
    monomials = standard_monomials(mode_leading_ideal(ideal, mode, cache))
    if monomials is None:
        return infinity
    return len(monomials)


def embedding_dimension(presentation):
    """ Embedding dimension e = dim_K 𝔪_A/𝔪_A² of A = R/𝔞.

        :param presentation: A presentation with an `ideal` attribute,
            or the `IdealData` 𝔞 itself.
        :return: ``n`` minus the rank of the linear parts of the
            generators of 𝔞.
        """
    ideal = getattr(presentation, 'ideal', presentation)
    (rank, completion) = linear_rank_extend(
            [linear_part(generator) for generator in ideal.generators],
            ideal.context)
    return ideal.context.nvars - rank



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
