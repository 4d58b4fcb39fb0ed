# liftmap/oracle.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Brute-force cross-checks of the computed invariants.

    Nothing here is used by the lifting pipeline; these functions are
    exhaustive and exponential, and exist to corroborate the engine.
    """

import itertools

from .invariants import mode_leading_ideal
from .polyring import monomial_support, monomials_of_degree


class OracleError(Exception):
    """ Base exception class for errors from this module. """


class BudgetExceededError(OracleError, ValueError):
    """ Exception raised when an input is beyond the oracle's budget. """


class OracleInputError(OracleError, ValueError):
    """ Exception raised when an input is outside an oracle's domain. """



class OracleBudget:
    """ Limits on the size of brute-force computations.

        `max_variables`
            Largest number of variables accepted.

        `max_degree`
            Largest degree bound for monomial enumeration.

        `max_field_scan_extension`
            Largest extension degree j of 𝔽_{p^j} scanned for zeros.

        `max_points`
            Largest number of points in one zero-locus scan.
        """

    def __init__(
            self, max_variables=5, max_degree=6,
            max_field_scan_extension=2, max_points=200000):
        limits = {
                'max_variables': max_variables,
                'max_degree': max_degree,
                'max_field_scan_extension': max_field_scan_extension,
                'max_points': max_points,
                }
        for (name, value) in limits.items():
            if not isinstance(value, int) or value < 1:
                raise ValueError("{name} must be a positive integer".format(
                        name=name))
        self.max_variables = max_variables
        self.max_degree = max_degree
        self.max_field_scan_extension = max_field_scan_extension
        self.max_points = max_points

    def check_variables(self, nvars):
        """ :raises BudgetExceededError: If `nvars` is too many. """
        if nvars > self.max_variables:
            raise BudgetExceededError(
                    "{n:d} variables exceed the budget of {limit:d}".format(
                        n=nvars, limit=self.max_variables))


default_budget = OracleBudget()


def monomial_dim_bruteforce(monomial_ideal, budget=default_budget):
    """ Dimension of a monomial quotient by trying every variable subset.

        :param monomial_ideal: A `MonomialIdeal`.
        :param budget: The `OracleBudget`.
        :return: The largest size of a subset S of the variables with
            no generator supported inside S; −1 if there is none.
        :raises BudgetExceededError: If there are too many variables.
        """
    nvars = monomial_ideal.context.nvars
    budget.check_variables(nvars)
    supports = [
            monomial_support(generator)
            for generator in monomial_ideal.generators]
    best = -1
    for mask in range(2 ** nvars):
        subset = frozenset(
                index for index in range(nvars) if mask & (1 << index))
        if len(subset) <= best:
            continue
        if not any(support <= subset for support in supports):
            best = len(subset)
    return best



class BoundedMonomials:
    """ Standard monomials up to a degree bound.

        `monomials`
            List of exponent tuples outside the leading ideal, by
            increasing degree.

        `truncated`
            ``True`` iff a standard monomial of exactly the bound
            degree exists, so the list may be incomplete.
        """

    def __init__(self, monomials, truncated):
        self.monomials = monomials
        self.truncated = truncated

    def __len__(self):
        return len(self.monomials)

    def __repr__(self):
        return "BoundedMonomials({count:d}, truncated={truncated!r})".format(
                count=len(self.monomials), truncated=self.truncated)


def standard_monomials_bounded(
        ideal, mode, degree_bound, budget=default_budget):
    """ Enumerate standard monomials of degree at most `degree_bound`.

        :param ideal: The `IdealData`.
        :param mode: `graded_mode` or `local_mode`.
        :param degree_bound: Nonnegative degree bound.
        :param budget: The `OracleBudget`.
        :return: A `BoundedMonomials`.
        :raises BudgetExceededError: If the variables or the degree
            bound exceed the budget.
        """
    context = ideal.context
    budget.check_variables(context.nvars)
    if degree_bound > budget.max_degree:
        raise BudgetExceededError(
                "Degree bound {bound:d} exceeds the budget of {limit:d}".format(
                    bound=degree_bound, limit=budget.max_degree))
    leading = mode_leading_ideal(ideal, mode)
    monomials = []
    truncated = False
    for degree in range(degree_bound + 1):
        for monomial in monomials_of_degree(context.nvars, degree):
            if leading.contains(monomial):
                continue
            monomials.append(monomial)
            if degree == degree_bound:
                truncated = True
    return BoundedMonomials(monomials, truncated)



# Monic irreducible polynomials defining 𝔽_{p^j}, coefficients from the
# constant term up.
irreducible_polynomials = {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (3, 2): (1, 0, 1),
        (3, 3): (1, 2, 0, 1),
        (5, 2): (2, 0, 1),
        (5, 3): (1, 1, 0, 1),
        (7, 2): (1, 0, 1),
        (7, 3): (2, 0, 0, 1),
        (11, 2): (1, 0, 1),
        (11, 3): (4, 1, 0, 1),
        }


class ExtensionField:
    """ The finite field 𝔽_{p^j} as 𝔽ₚ[t]/(modulus).

        Elements are tuples of ``j`` residues, coefficients of 1, t, …,
        t^{j−1}.
        """

    def __init__(self, characteristic, degree):
        self.characteristic = characteristic
        self.degree = degree
        if degree == 1:
            self.modulus = (0, 1)
        else:
            try:
                self.modulus = irreducible_polynomials[
                        (characteristic, degree)]
            except KeyError as exc:
                error = OracleInputError(
                        "No table entry for 𝔽_{p:d}^{j:d}".format(
                            p=characteristic, j=degree))
                raise error from exc

    def __len__(self):
        return self.characteristic ** self.degree

    def elements(self):
        """ All elements, zero first. """
        return itertools.product(
                range(self.characteristic), repeat=self.degree)

    def embed(self, value):
        """ The element of the prime field with residue `value`. """
        return (value % self.characteristic,) + (0,) * (self.degree - 1)

    def zero(self):
        return (0,) * self.degree

    def add(self, a, b):
        p = self.characteristic
        return tuple((x + y) % p for (x, y) in zip(a, b))

    def mul(self, a, b):
        p = self.characteristic
        product = [0] * (2 * self.degree - 1)
        for (i, x) in enumerate(a):
            if not x:
                continue
            for (j, y) in enumerate(b):
                product[i + j] = (product[i + j] + x * y) % p
        for top in range(len(product) - 1, self.degree - 1, -1):
            factor = product[top]
            if not factor:
                continue
            shift = top - self.degree
            for (index, value) in enumerate(self.modulus):
                product[shift + index] = (
                        product[shift + index] - factor * value) % p
        return tuple(product[:self.degree])

    def power(self, a, exponent):
        result = self.embed(1)
        for count in range(exponent):
            result = self.mul(result, a)
        return result

    def evaluate(self, polynomial, point):
        """ Value of a prime-field `polynomial` at `point`. """
        total = self.zero()
        for (monomial, value) in polynomial.coefficients.items():
            term = self.embed(value)
            for (coordinate, exponent) in zip(point, monomial):
                if exponent:
                    term = self.mul(term, self.power(coordinate, exponent))
            total = self.add(total, term)
        return total


def zero_locus_scan(
        ideal, extension_degree_cap=None, budget=default_budget):
    """ Look for a common zero of `ideal` other than the origin.

        :param ideal: A homogeneous `IdealData` over a prime field.
        :param extension_degree_cap: Largest j such that 𝔽_{p^j} is
            scanned; by default the budget's limit.
        :param budget: The `OracleBudget`.
        :return: ``True`` iff the origin is the only common zero found
            over 𝔽_{p^j} for every j up to the cap.
        :raises OracleInputError: If the field is not a prime field or
            the ideal is not homogeneous.
        :raises BudgetExceededError: If a scan has too many points.

        This is a necessary condition for ⟨ideal⟩ to be 𝔪-primary, not
        a sufficient one.
        """
    context = ideal.context
    field = context.field
    if not field.is_prime_field:
        raise OracleInputError("Zero-locus scans need a prime field")
    if not ideal.is_homogeneous():
        raise OracleInputError("Zero-locus scans need a homogeneous ideal")
    if extension_degree_cap is None:
        extension_degree_cap = budget.max_field_scan_extension
    if extension_degree_cap > budget.max_field_scan_extension:
        raise BudgetExceededError(
                "Extension degree {j:d} exceeds the budget of {limit:d}".format(
                    j=extension_degree_cap,
                    limit=budget.max_field_scan_extension))
    budget.check_variables(context.nvars)
    for degree in range(1, extension_degree_cap + 1):
        extension = ExtensionField(field.characteristic, degree)
        points = len(extension) ** context.nvars
        if points > budget.max_points:
            raise BudgetExceededError(
                    "Scan of {points:d} points exceeds the budget of"
                    " {limit:d}".format(
                        points=points, limit=budget.max_points))
        origin = (extension.zero(),) * context.nvars
        zero = extension.zero()
        for point in itertools.product(
                list(extension.elements()), repeat=context.nvars):
            if point == origin:
                continue
            if all(
                    extension.evaluate(generator, point) == zero
                    for generator in ideal.generators):
                return False
    return True



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
