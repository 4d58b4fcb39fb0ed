# test/test_liftengine.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Unit test for ‘liftengine’ module. """

import logging

from . import scaffold
from .scaffold import (TestCase, make_context, make_ideal, make_polynomials)

import liftmap.invariants as invariants
import liftmap.liftengine as liftengine
import liftmap.polyring as polyring
import liftmap.stdbasis as stdbasis


def make_presentation(names, generators, mode=stdbasis.local_mode, field="Q"):
    """ Make a `Presentation` from variable names and generator texts. """
    context = make_context(names, field)
    return liftengine.Presentation(make_ideal(generators, context), mode)


def make_self_map(
        names, generators, images, mode=stdbasis.local_mode, field="Q"):
    """ Make a `SelfMapOnA` from texts of generators and images. """
    presentation = make_presentation(names, generators, mode, field)
    context = presentation.context
    variable_map = polyring.VariableMap(
            context, make_polynomials(images, context))
    return liftengine.SelfMapOnA(presentation, variable_map)


def make_map(context, images):
    """ Make a self `VariableMap` of `context` from image texts. """
    return polyring.VariableMap(context, make_polynomials(images, context))


class Exception_TestCase(scaffold.Exception_TestCase):
    """ Test cases for module exception classes. """

    scenarios = scaffold.make_exception_scenarios([
            ('liftengine.PresentationError', dict(
                exc_type=liftengine.PresentationError,
                min_args=1,
                types=[liftengine.LiftError, ValueError],
                )),
            ('liftengine.IllDefinedMapError', dict(
                exc_type=liftengine.IllDefinedMapError,
                min_args=1,
                types=[liftengine.LiftError, ValueError],
                )),
            ('liftengine.NotFiniteError', dict(
                exc_type=liftengine.NotFiniteError,
                min_args=1,
                types=[liftengine.LiftError, ValueError],
                )),
            ('liftengine.SearchExhaustedError', dict(
                exc_type=liftengine.SearchExhaustedError,
                min_args=1,
                types=[liftengine.LiftError, RuntimeError],
                )),
            ('liftengine.InternalAssertionError', dict(
                exc_type=liftengine.InternalAssertionError,
                min_args=1,
                types=[liftengine.LiftError, AssertionError],
                )),
            ])


class Presentation_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for ‘Presentation’ class. """

    scenarios = [
            ('hyperplane', {
                'names': "X Y Z",
                'generators': ["Z"],
                'mode': stdbasis.local_mode,
                'expected_dimension': 2,
                'expected_embedding_dimension': 2,
                }),
            ('quadric cone', {
                'names': "X Y Z",
                'generators': ["Z^2 - X*Y"],
                'mode': stdbasis.graded_mode,
                'expected_dimension': 2,
                'expected_embedding_dimension': 3,
                }),
            ('graph of a parabola', {
                'names': "X Y Z",
                'generators': ["Z - X^2"],
                'mode': stdbasis.local_mode,
                'expected_dimension': 2,
                'expected_embedding_dimension': 2,
                }),
            ('artinian', {
                'names': "X Y",
                'generators': ["X^2", "Y^2"],
                'mode': stdbasis.local_mode,
                'expected_dimension': 0,
                'expected_embedding_dimension': 2,
                }),
            ('power series ring', {
                'names': "X Y",
                'generators': [],
                'mode': stdbasis.local_mode,
                'expected_dimension': 2,
                'expected_embedding_dimension': 2,
                }),
            ]

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.test_instance = make_presentation(
                self.names, self.generators, self.mode)

    def test_has_expected_dimension(self):
        """ Should have the expected Krull dimension. """
        self.assertEqual(
                self.expected_dimension, self.test_instance.dimension)

    def test_has_expected_embedding_dimension(self):
        """ Should have the expected embedding dimension. """
        self.assertEqual(
                self.expected_embedding_dimension,
                self.test_instance.embedding_dimension)

    def test_contains_generators(self):
        """ Should contain each of its generators. """
        for generator in self.test_instance.ideal.generators:
            self.assertTrue(self.test_instance.contains(generator))
            self.assertFalse(self.test_instance.residue(generator))


class Presentation_invalid_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for invalid ‘Presentation’ construction. """

    scenarios = [
            ('unit generator', {
                'generators': ["X + 1"],
                'mode': stdbasis.local_mode,
                }),
            ('inhomogeneous graded', {
                'generators': ["X^2 - Y"],
                'mode': stdbasis.graded_mode,
                }),
            ('unknown mode', {
                'generators': ["X*Y"],
                'mode': 'bogus',
                }),
            ]

    def test_raises_presentation_error(self):
        """ Should raise PresentationError. """
        with self.assertRaises(liftengine.PresentationError):
            make_presentation("X Y", self.generators, self.mode)


class Presentation_representative_TestCase(TestCase):
    """ Test cases for ‘Presentation.representative’ method. """

    def test_differs_by_ideal_element(self):
        """ Should differ from its input by an element of the ideal. """
        presentation = make_presentation("X Y", ["X*Y - Y^2"])
        f = polyring.parse("X^2 - 2*X*Y + 2*Y^2", presentation.context)
        result = presentation.representative(f)
        self.assertPolynomialText(result, "X^2")
        self.assertTrue(presentation.contains(f - result))

    def test_keeps_homogeneous_degree(self):
        """ Should keep a homogeneous input homogeneous of its degree. """
        presentation = make_presentation(
                "X Y Z", ["Z^2 - X*Y"], stdbasis.graded_mode)
        f = polyring.parse("Z^3 + X*Y*Z", presentation.context)
        result = presentation.representative(f)
        self.assertTrue(result.is_homogeneous())
        self.assertEqual(3, result.total_degree())


class SelfMapOnA_TestCase(TestCase):
    """ Test cases for ‘SelfMapOnA’ class. """

    def test_well_defined_map(self):
        """ Should accept a map preserving the ideal. """
        self_map = make_self_map("X Y", ["X*Y"], ["X^2", "Y^2"])
        self.assertIs(None, self_map.check_well_defined())

    def test_ill_defined_map_raises(self):
        """ Should raise IllDefinedMapError for a map leaving the ideal. """
        with self.assertRaises(liftengine.IllDefinedMapError):
            make_self_map("X Y", ["X*Y"], ["X", "X"])

    def test_graded_mixed_degrees_raises(self):
        """ Should raise IllDefinedMapError for images of mixed degrees. """
        with self.assertRaises(liftengine.IllDefinedMapError):
            make_self_map(
                    "X Y Z", ["Z"], ["X^2", "Y^3", "0"],
                    mode=stdbasis.graded_mode)

    def test_graded_inhomogeneous_image_raises(self):
        """ Should raise IllDefinedMapError for an inhomogeneous image. """
        with self.assertRaises(liftengine.IllDefinedMapError):
            make_self_map(
                    "X Y Z", ["Z"], ["X^2 + X", "Y^2", "0"],
                    mode=stdbasis.graded_mode)

    def test_graded_common_degree(self):
        """ Should record the common degree of graded images. """
        self_map = make_self_map(
                "X Y Z", ["Z"], ["X^2", "Y^2", "0"],
                mode=stdbasis.graded_mode)
        self.assertEqual(2, self_map.image_degree)

    def test_foreign_map_raises(self):
        """ Should raise IllDefinedMapError for a map of another ring. """
        presentation = make_presentation("X Y", ["X*Y"])
        other = make_context("X Y Z")
        with self.assertRaises(liftengine.IllDefinedMapError):
            liftengine.SelfMapOnA(
                    presentation, polyring.VariableMap.identity(other))


class is_finite_map_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for ‘is_finite_map’ function. """

    scenarios = [
            ('Frobenius-like on a node', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X^2", "Y^2"],
                'expected_result': True,
                }),
            ('identity', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X", "Y"],
                'expected_result': True,
                }),
            ('collapses a branch', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X", "0"],
                'expected_result': False,
                }),
            ('finite only modulo the ideal', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'expected_result': True,
                }),
            ]

    def test_decides_finiteness(self):
        """ Should decide finiteness as expected. """
        self_map = make_self_map(self.names, self.generators, self.images)
        self.assertEqual(
                self.expected_result, liftengine.is_finite_map(self_map))


class strong_sop_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for ‘strong_sop’ function. """

    scenarios = [
            ('node', {
                'names': "X Y",
                'generators': ["X*Y"],
                'expected_elements': ["X + Y"],
                'expected_dimension_trace': (1,),
                'expected_rank_trace': (1,),
                'expected_base_rank': 0,
                }),
            ('hyperplane', {
                'names': "X Y Z",
                'generators': ["Z"],
                'expected_elements': ["X", "Y"],
                'expected_dimension_trace': (2, 1),
                'expected_rank_trace': (2, 3),
                'expected_base_rank': 1,
                }),
            ('artinian', {
                'names': "X Y",
                'generators': ["X^2", "Y^2"],
                'expected_elements': [],
                'expected_dimension_trace': (),
                'expected_rank_trace': (),
                'expected_base_rank': 0,
                }),
            ]

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.presentation = make_presentation(self.names, self.generators)
        self.test_sop = liftengine.strong_sop(self.presentation)

    def test_has_expected_elements(self):
        """ Should choose the expected parameters. """
        self.assertEqual(
                self.expected_elements,
                [str(element) for element in self.test_sop.elements])

    def test_has_expected_traces(self):
        """ Should record the expected dimension and rank traces. """
        self.assertEqual(
                self.expected_dimension_trace, self.test_sop.dimension_trace)
        self.assertEqual(self.expected_rank_trace, self.test_sop.rank_trace)
        self.assertEqual(self.expected_base_rank, self.test_sop.base_rank)
        self.assertEqual(0, self.test_sop.final_dimension)

    def test_parameters_cut_to_dimension_zero(self):
        """ Should cut the ring down to dimension zero. """
        self.assertEqual(
                0, self.presentation.dimension_with(self.test_sop.elements))

    def test_start_dimension_is_ring_dimension(self):
        """ Should start from the dimension of the ring. """
        self.assertEqual(
                self.presentation.dimension, self.test_sop.start_dimension)


class strong_sop_exhausted_TestCase(TestCase):
    """ Test cases for ‘strong_sop’ with an exhausted budget. """

    def test_raises_search_exhausted(self):
        """ Should raise SearchExhaustedError naming step and attempts. """
        presentation = make_presentation("X Y", ["X*Y"])
        with self.assertRaises(
                liftengine.SearchExhaustedError) as context_manager:
            liftengine.strong_sop(presentation, max_attempts=2)
        self.assertEqual(1, context_manager.exception.step)
        self.assertEqual(2, context_manager.exception.attempts)


class coset_search_TestCase(TestCase):
    """ Test cases for ‘coset_search’ function. """

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.presentation = make_presentation("X Y Z", ["Z"])
        self.context = self.presentation.context
        self.fixed = make_polynomials(["X^2", "Y^2"], self.context)

    def test_finds_adjuster_in_ideal(self):
        """ Should adjust by an element of the ideal. """
        choice = liftengine.coset_search(
                self.context.zero(), self.presentation, self.fixed, 0)
        self.assertPolynomialText(choice.adjuster, "Z")
        self.assertPolynomialText(choice.element, "Z")
        self.assertEqual(2, choice.attempts)

    def test_graded_adjuster_has_degree(self):
        """ Should adjust by an element of the required degree. """
        presentation = make_presentation(
                "X Y Z", ["Z"], stdbasis.graded_mode)
        choice = liftengine.coset_search(
                self.context.zero(), presentation, self.fixed, 0, degree=2)
        self.assertPolynomialText(choice.element, "Z^2")
        self.assertEqual(14, choice.attempts)

    def test_unchanged_when_already_good(self):
        """ Should keep u when it already cuts the dimension. """
        u = polyring.parse("Z + X*Y", self.context)
        choice = liftengine.coset_search(
                u, self.presentation, self.fixed, 0)
        self.assertEqual(u, choice.element)
        self.assertFalse(choice.adjuster)

    def test_coset_avoid_returns_element(self):
        """ Should return the chosen element. """
        result = liftengine.coset_avoid(
                self.context.zero(), self.presentation, self.fixed, 0)
        self.assertPolynomialText(result, "Z")

    def test_not_m_primary_raises(self):
        """ Should raise InternalAssertionError for a non-primary input. """
        with self.assertRaises(liftengine.InternalAssertionError):
            liftengine.coset_search(
                    self.context.zero(), self.presentation, [], 0)

    def test_exhausted_raises(self):
        """ Should raise SearchExhaustedError past the attempt budget. """
        with self.assertRaises(liftengine.SearchExhaustedError):
            liftengine.coset_search(
                    self.context.zero(), self.presentation, self.fixed, 0,
                    max_attempts=1)


class verify_lift_TestCase(TestCase):
    """ Test cases for ‘verify_lift’ function. """

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.self_map = make_self_map(
                "X Y Z", ["Z"], ["X^2", "Y^2", "0"])
        self.context = self.self_map.presentation.context

    def test_valid_lift_passes(self):
        """ Should pass every check for a valid lift. """
        report = liftengine.verify_lift(
                self.self_map, make_map(self.context, ["X^2", "Y^2", "Z"]))
        self.assertTrue(report.passed)
        self.assertEqual(
                list(liftengine.check_names),
                [check.name for check in report])
        self.assertEqual(4, report.colength)
        self.assertEqual(
                "colength 4",
                report.check(liftengine.finiteness_check).witness)

    def test_tampered_lift_fails_finiteness_only(self):
        """ Should fail only the finiteness check for a degenerate lift. """
        report = liftengine.verify_lift(
                self.self_map, make_map(self.context, ["X^2", "Y^2", "0"]))
        self.assertEqual(
                [liftengine.finiteness_check],
                [check.name for check in report.failures()])
        self.assertEqual(
                "dimension 1, witness {Z}",
                report.check(liftengine.finiteness_check).witness)
        self.assertIs(None, report.colength)

    def test_wrong_image_fails_commutation(self):
        """ Should fail commutation naming the offending variable. """
        report = liftengine.verify_lift(
                self.self_map,
                make_map(self.context, ["X^2", "X^2 + Y^2", "Z"]))
        check = report.check(liftengine.commutation_check)
        self.assertFalse(check.passed)
        self.assertEqual("Y: -X^2", check.witness)
        self.assertTrue(report.check(liftengine.ideal_check).passed)

    def test_ideal_failure_names_generator(self):
        """ Should fail the ideal check naming the generator. """
        self_map = make_self_map("X Y", ["X*Y"], ["X", "Y"])
        context = self_map.presentation.context
        report = liftengine.verify_lift(
                self_map, make_map(context, ["X", "X + Y"]))
        check = report.check(liftengine.ideal_check)
        self.assertFalse(check.passed)
        self.assertEqual("X*Y -> X^2 + X*Y", check.witness)

    def test_unknown_check_name_raises(self):
        """ Should raise KeyError for an unknown check name. """
        report = liftengine.verify_lift(
                self.self_map, make_map(self.context, ["X^2", "Y^2", "Z"]))
        with self.assertRaises(KeyError):
            report.check('bogus')

    def test_foreign_lift_raises(self):
        """ Should raise ContextMismatchError for a map of another ring. """
        other = make_context("X Y")
        with self.assertRaises(polyring.ContextMismatchError):
            liftengine.verify_lift(
                    self.self_map, polyring.VariableMap.identity(other))


def conjugate_map(variable_map, forward, backward):
    """ The self map forward ∘ `variable_map` ∘ backward of R. """
    return polyring.VariableMap(variable_map.context, [
            forward(variable_map(image)) for image in backward.images])


class verify_lift_coordinate_change_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for ‘verify_lift’ under a linear coordinate change. """

    scenarios = [
            ('valid lift', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'lift': ["X^2", "Y^2", "Z"],
                'matrix': [[1, 1, 0], [0, 2, 0], [3, 0, 1]],
                }),
            ('degenerate lift', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'lift': ["X^2", "Y^2", "0"],
                'matrix': [[1, 1, 0], [0, 2, 0], [3, 0, 1]],
                }),
            ('wrong image', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'lift': ["X^2", "X^2 + Y^2", "Z"],
                'matrix': [[0, 1, 1], [1, 0, 0], [0, 0, 5]],
                }),
            ('ideal failure', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X", "Y"],
                'lift': ["X", "X + Y"],
                'matrix': [[1, 1], [0, -1]],
                }),
            ('node in a prime field', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X^2", "Y^2"],
                'lift': ["X^2", "Y^2"],
                'field': "F 7",
                'matrix': [[1, 3], [0, 1]],
                }),
            ('graded hyperplane', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'lift': ["X^2", "Y^2", "Z^2"],
                'mode': stdbasis.graded_mode,
                'matrix': [[1, 0, 1], [0, 1, 1], [0, 0, 1]],
                }),
            ]

    field = "Q"
    mode = stdbasis.local_mode

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.self_map = make_self_map(
                self.names, self.generators, self.images,
                self.mode, self.field)
        presentation = self.self_map.presentation
        context = presentation.context
        field = context.field
        matrix = [
                [field.reduce(value) for value in row]
                for row in self.matrix]
        forward = polyring.linear_substitution(matrix, context)
        backward = polyring.linear_substitution(
                polyring.matrix_inverse(matrix, field), context)
        self.psi = make_map(context, self.lift)
        changed_presentation = presentation.with_ideal(stdbasis.IdealData(
                context, [
                    forward(generator)
                    for generator in presentation.ideal.generators]))
        self.changed_map = liftengine.SelfMapOnA(
                changed_presentation,
                conjugate_map(self.self_map.map, forward, backward))
        self.changed_psi = conjugate_map(self.psi, forward, backward)

    def test_same_outcome_per_check(self):
        """ Should give the same outcome for each check. """
        report = liftengine.verify_lift(self.self_map, self.psi)
        changed = liftengine.verify_lift(self.changed_map, self.changed_psi)
        self.assertEqual(
                [(check.name, check.passed) for check in report],
                [(check.name, check.passed) for check in changed])

    def test_same_colength(self):
        """ Should report the same colength. """
        report = liftengine.verify_lift(self.self_map, self.psi)
        changed = liftengine.verify_lift(self.changed_map, self.changed_psi)
        self.assertEqual(report.colength, changed.colength)


class lift_map_TestCase(scaffold.TestCaseWithScenarios):
    """ Test cases for ‘lift_map’ function. """

    scenarios = [
            ('hyperplane local', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'mode': stdbasis.local_mode,
                'field': "Q",
                'expected_lift': ["X^2", "Y^2", "Z"],
                'expected_adjusters': ["0", "0", "Z"],
                }),
            ('hyperplane graded', {
                'names': "X Y Z",
                'generators': ["Z"],
                'images': ["X^2", "Y^2", "0"],
                'mode': stdbasis.graded_mode,
                'field': "Q",
                'expected_lift': ["X^2", "Y^2", "Z^2"],
                'expected_adjusters': ["0", "0", "Z^2"],
                }),
            ('node', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X^2", "Y^2"],
                'mode': stdbasis.local_mode,
                'field': "Q",
                'expected_lift': ["X^2", "2*X*Y + Y^2"],
                'expected_adjusters': ["0", "0"],
                }),
            ('node in characteristic two', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X^2", "Y^2"],
                'mode': stdbasis.local_mode,
                'field': "F 2",
                'expected_lift': ["X^2", "Y^2"],
                'expected_adjusters': ["0", "0"],
                }),
            ('identity on node', {
                'names': "X Y",
                'generators': ["X*Y"],
                'images': ["X", "Y"],
                'mode': stdbasis.local_mode,
                'field': "Q",
                'expected_lift': ["X", "Y"],
                'expected_adjusters': ["0", "0"],
                }),
            ('quadric cone', {
                'names': "X Y Z",
                'generators': ["Z^2 - X*Y"],
                'images': ["X^2", "Y^2", "Z^2"],
                'mode': stdbasis.graded_mode,
                'field': "Q",
                'expected_lift': None,
                'expected_adjusters': None,
                }),
            ]

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.self_map = make_self_map(
                self.names, self.generators, self.images,
                self.mode, self.field)
        self.context = self.self_map.presentation.context
        self.certificate = liftengine.lift_map(self.self_map)

    def test_lift_passes_verification(self):
        """ Should produce a lift passing every check. """
        report = liftengine.verify_lift(self.self_map, self.certificate.lift)
        self.assertTrue(report.passed)
        self.assertTrue(self.certificate.report.passed)

    def test_has_expected_lift(self):
        """ Should produce the expected lift. """
        if self.expected_lift is None:
            self.skipTest("No literal lift for this scenario")
        for (image, text) in zip(
                self.certificate.lift.images, self.expected_lift):
            self.assertPolynomialText(image, text)

    def test_has_expected_adjusters(self):
        """ Should record the expected adjusters in the trace. """
        if self.expected_adjusters is None:
            self.skipTest("No literal trace for this scenario")
        for (record, text) in zip(
                self.certificate.trace, self.expected_adjusters):
            self.assertPolynomialText(record.adjuster, text)

    def test_adjusters_lie_in_ideal(self):
        """ Should choose each lifted image in the coset of its image. """
        presentation = self.self_map.presentation
        for record in self.certificate.trace:
            self.assertTrue(
                    presentation.contains(record.adjuster),
                    "Step {step:d} adjuster {a} is not in the ideal".format(
                        step=record.step, a=record.adjuster))

    def test_dimension_trace_descends(self):
        """ Should record dimensions n − 1, …, 0. """
        n = self.context.nvars
        self.assertEqual(
                list(range(n - 1, -1, -1)),
                self.certificate.dimension_trace())

    def test_residues_vanish(self):
        """ Should record zero commutation residues. """
        for residue in self.certificate.residues:
            self.assertFalse(residue)

    def test_coordinate_change_is_inverted(self):
        """ Should record mutually inverse coordinate change matrices. """
        field = self.context.field
        self.assertEqual(
                polyring.identity_matrix(field, self.context.nvars),
                polyring.matrix_product(
                    self.certificate.coordinate_change,
                    self.certificate.inverse, field))

    def test_same_seed_same_lift(self):
        """ Should produce the same lift for the same seed. """
        again = liftengine.lift_map(self.self_map)
        self.assertEqual(self.certificate.lift, again.lift)
        self.assertEqual(self.certificate.trace, again.trace)

    def test_graded_lift_is_graded(self):
        """ Should produce homogeneous images of one degree when graded. """
        if self.mode != stdbasis.graded_mode:
            self.skipTest("Not a graded scenario")
        degrees = set(
                image.total_degree()
                for image in self.certificate.lift.images)
        self.assertEqual(1, len(degrees))
        for image in self.certificate.lift.images:
            self.assertTrue(image.is_homogeneous())


class lift_map_not_finite_TestCase(TestCase):
    """ Test cases for ‘lift_map’ with a map that is not finite. """

    def test_raises_not_finite(self):
        """ Should raise NotFiniteError. """
        self_map = make_self_map("X Y", ["X*Y"], ["X", "0"])
        with self.assertRaises(liftengine.NotFiniteError):
            liftengine.lift_map(self_map)


class minimal_presentation_TestCase(TestCase):
    """ Test cases for ‘minimal_presentation’ function. """

    def test_eliminates_solvable_variable(self):
        """ Should eliminate a variable occurring only linearly. """
        presentation = make_presentation("X Y Z", ["Z - X^2"])
        (reduced, forward, backward) = liftengine.minimal_presentation(
                presentation)
        self.assertEqual(("X", "Y"), reduced.context.names)
        self.assertTrue(reduced.ideal.is_zero())
        self.assertPolynomialText(forward.images[2], "X^2")
        self.assertTrue(liftengine.verify_presentation_maps(
                presentation, reduced, forward, backward))

    def test_reaches_embedding_dimension(self):
        """ Should reach the embedding dimension. """
        presentation = make_presentation(
                "X Y Z W", ["W - X*Y", "Z^2 - X*Y"])
        (reduced, forward, backward) = liftengine.minimal_presentation(
                presentation)
        self.assertEqual(
                presentation.embedding_dimension, reduced.context.nvars)
        self.assertEqual(presentation.dimension, reduced.dimension)
        self.assertTrue(liftengine.verify_presentation_maps(
                presentation, reduced, forward, backward))

    def test_keeps_minimal_presentation(self):
        """ Should keep a presentation without linear terms. """
        presentation = make_presentation("X Y Z", ["Z^2 - X*Y"])
        (reduced, forward, backward) = liftengine.minimal_presentation(
                presentation)
        self.assertEqual(presentation.ideal, reduced.ideal)
        self.assertEqual(
                polyring.VariableMap.identity(presentation.context), forward)

    def test_keeps_one_variable(self):
        """ Should keep one variable for a presentation of the field. """
        presentation = make_presentation("X", ["X"])
        (reduced, forward, backward) = liftengine.minimal_presentation(
                presentation)
        self.assertEqual(("X",), reduced.context.names)
        self.assertEqual(0, reduced.dimension)
        self.assertEqual(0, reduced.embedding_dimension)

    def test_warns_when_no_polynomial_solution(self):
        """ Should warn when a linear term has no polynomial solution. """
        presentation = make_presentation("X Y Z", ["X + X*Y - Z^2"])
        logging.disable(logging.NOTSET)
        self.addCleanup(logging.disable, logging.CRITICAL)
        with self.assertLogs(liftengine.logger, logging.WARNING):
            (reduced, forward, backward) = liftengine.minimal_presentation(
                    presentation, elimination_order=3)
        self.assertEqual(3, reduced.context.nvars)
        self.assertTrue(liftengine.verify_presentation_maps(
                presentation, reduced, forward, backward))


class minimal_presentation_unit_multiple_TestCase(
        scaffold.TestCaseWithScenarios):
    """ Test cases for ‘minimal_presentation’ with unit multiples. """

    scenarios = [
            ('unit multiple of a variable', {
                'names': "X Y",
                'generators': ["X + X*Y"],
                'expected_names': ("Y",),
                'expected_forward': ["0", "Y"],
                }),
            ('unit multiple in a prime field', {
                'names': "X Y",
                'generators': ["X - X*Y^2"],
                'field': "F 7",
                'expected_names': ("Y",),
                'expected_forward': ["0", "Y"],
                }),
            ('two crossing graphs and a free variable', {
                'names': "X Y Z",
                'generators': ["X + Y^2", "Y + X^2"],
                'expected_names': ("Z",),
                'expected_forward': ["0", "0", "Z"],
                }),
            ('graph with a nilpotent unit correction', {
                'names': "X Y Z",
                'generators': ["X + X*Y - Z^2", "Y^2"],
                'expected_names': ("Y", "Z"),
                'expected_forward': ["Z^2 - Y*Z^2", "Y", "Z"],
                }),
            ('artinian graph with a unit coefficient', {
                'names': "X Y",
                'generators': ["X + X*Y - Y^2", "Y^3"],
                'expected_names': ("Y",),
                'expected_forward': ["Y^2", "Y"],
                }),
            ]

    field = "Q"

    def setUp(self):
        """ Set up test fixtures. """
        super().setUp()

        self.presentation = make_presentation(
                self.names, self.generators, field=self.field)
        (self.reduced, self.forward, self.backward) = (
                liftengine.minimal_presentation(self.presentation))

    def test_reaches_embedding_dimension(self):
        """ Should keep as many variables as the embedding dimension. """
        self.assertEqual(self.expected_names, self.reduced.context.names)
        self.assertEqual(
                self.presentation.embedding_dimension,
                self.reduced.context.nvars)
        self.assertEqual(
                self.reduced.context.nvars,
                invariants.embedding_dimension(self.reduced))

    def test_ideal_in_square_of_maximal_ideal(self):
        """ Should leave generators without linear terms. """
        for generator in self.reduced.ideal.generators:
            self.assertGreaterEqual(polyring.order_of_vanishing(generator), 2)

    def test_expected_forward_map(self):
        """ Should send the variables to the expected images. """
        for (image, text) in zip(self.forward.images, self.expected_forward):
            self.assertPolynomialText(image, text)

    def test_maps_are_inverse(self):
        """ Should give mutually inverse maps of the quotients. """
        self.assertTrue(liftengine.verify_presentation_maps(
                self.presentation, self.reduced,
                self.forward, self.backward))

    def test_keeps_dimension(self):
        """ Should keep the Krull dimension. """
        self.assertEqual(self.presentation.dimension, self.reduced.dimension)


class minimal_presentation_field_TestCase(TestCase):
    """ Test cases for ‘minimal_presentation’ of a ring equal to K. """

    def test_reduces_to_one_variable(self):
        """ Should reduce two crossing graphs to one variable. """
        presentation = make_presentation("X Y", ["X + Y^2", "Y + X^2"])
        (reduced, forward, backward) = liftengine.minimal_presentation(
                presentation)
        self.assertEqual(0, presentation.embedding_dimension)
        self.assertEqual(("Y",), reduced.context.names)
        self.assertEqual(0, reduced.embedding_dimension)
        self.assertEqual(0, reduced.dimension)
        self.assertTrue(liftengine.verify_presentation_maps(
                presentation, reduced, forward, backward))



# Copyright © 2026 Liftmap developers <liftmap-devel@example.org>
#
# This is free software: you may copy, modify, and/or distribute this work
# under the terms of the GNU General Public License as published by the
# Free Software Foundation; version 3 of that license or any later version.
# No warranty expressed or implied. See the file ‘LICENSE.GPL-3’ for details.



# Local variables:
# coding: utf-8
# mode: python
# End:
# vim: fileencoding=utf-8 filetype=python :
