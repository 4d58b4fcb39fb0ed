# liftmap/cli.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Command-line runner for the lifting library. """

import argparse
import logging
import os.path
import sys

from . import _metadata
from .certificate import (
        CertificateError, format_certificate, format_check, read_certificate)
from .invariants import InvariantError, krull_dimension
from .liftengine import (
        IllDefinedMapError, InternalAssertionError, LiftError,
        NotFiniteError, SearchExhaustedError, default_adjuster_degree_cap,
        default_coeff_bound, default_max_attempts, default_seed,
        is_finite_map, lift_map, minimal_presentation, strong_sop,
        verify_lift)
from .polyring import PolynomialError, format_polynomial, parse
from .problem import ProblemError, read_problem
from .scalars import ScalarError
from .stdbasis import compute_basis, modes


class LiftRunnerError(Exception):
    """ Abstract base class for errors from LiftRunner. """


class LiftRunnerInvalidActionError(LiftRunnerError, ValueError):
    """ Raised when specified action for LiftRunner is invalid. """


class LiftRunnerVerificationError(LiftRunnerError, RuntimeError):
    """ Raised when a certificate fails verification. """



exit_success = 0
exit_verification_failed = 1
exit_invalid_input = 2
exit_search_exhausted = 3
exit_not_finite = 4
exit_internal_error = 5

exit_codes = [
        ((LiftRunnerVerificationError,), exit_verification_failed),
        ((InternalAssertionError,), exit_internal_error),
        ((SearchExhaustedError,), exit_search_exhausted),
        ((IllDefinedMapError, NotFiniteError), exit_not_finite),
        ((
            LiftRunnerInvalidActionError, ProblemError, CertificateError,
            LiftError, PolynomialError, ScalarError, InvariantError,
            OSError),
            exit_invalid_input),
        ]


def exit_code_for(exc):
    """ The process exit status for the exception `exc`. """
    for (classes, code) in exit_codes:
        if isinstance(exc, classes):
            return code
    raise exc


class LiftRunner:
    """ Controller for the actions of the ``liftmap`` command.

        The first command-line argument is the action to take:

        * 'lift': Lift the problem's map and write a certificate.
        * 'verify': Re-verify a certificate against the problem.
        * 'dim': Report the Krull dimension of the presented ring.
        * 'gb': Print the Gröbner or standard basis of the ideal.
        * 'sop': Print a strong system of parameters.
        * 'finite': Report whether the problem's map is finite.
        * 'present': Print a minimal presentation with its maps.
        * 'member': Decide membership of ``--poly`` in the ideal.

        The exit status is `exit_success`, or the status `exit_codes`
        gives for the exception raised:

        * 1, `exit_verification_failed`: a certificate fails a check.
        * 2, `exit_invalid_input`: malformed or invalid input.
        * 3, `exit_search_exhausted`: a search ran out of attempts.
        * 4, `exit_not_finite`: the map is ill defined or not finite.
        * 5, `exit_internal_error`: a property the construction
          guarantees failed to hold; this is a defect of the library,
          never of the input.
        """

    def __init__(self, argv=None, stdout=None):
        """ Set up the parameters of a new runner.

            :param argv: The command-line arguments, program name
                first; by default `sys.argv`.
            :param stdout: The stream for reports; by default
                `sys.stdout`.
            """
        self.stdout = sys.stdout if stdout is None else stdout
        self.parse_args(argv)

    def _make_parser(self, progname):
        """ Make the `argparse.ArgumentParser` for the command line. """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
                '--input', required=True, metavar='PROBLEM',
                help="problem file to read")
        common.add_argument(
                '--mode', choices=modes, default=None,
                help="override the problem's mode")
        common.add_argument(
                '--seed', type=int, default=default_seed,
                help="seed of the pseudorandom search phases")
        common.add_argument(
                '--max-attempts', type=int, default=default_max_attempts,
                help="candidates examined per search step")
        common.add_argument(
                '--coeff-bound', type=int, default=default_coeff_bound,
                help="coefficient bound of candidate enumeration")
        common.add_argument(
                '--adjuster-degree-cap', type=int,
                default=default_adjuster_degree_cap,
                help="largest degree of coset adjuster multipliers")
        common.add_argument(
                '--verbose', action='store_true', help="report progress")
        common.add_argument(
                '--debug', action='store_true', help="report details")

        parser = argparse.ArgumentParser(
                prog=progname,
                description="Lift finite self maps of complete local rings.")
        parser.add_argument(
                '--version', action='version',
                version="%(prog)s {version}".format(
                    version=_metadata.version_installed))
        subparsers = parser.add_subparsers(dest='action', metavar='ACTION')
        subparsers.required = True
        for action in self.action_funcs:
            subparser = subparsers.add_parser(action, parents=[common])
            if action == 'lift':
                subparser.add_argument(
                        '--out', metavar='CERTIFICATE',
                        help="file to write the certificate to")
            elif action == 'verify':
                subparser.add_argument(
                        '--lift', required=True, metavar='CERTIFICATE',
                        help="certificate file to verify")
            elif action == 'member':
                subparser.add_argument(
                        '--poly', required=True, metavar='EXPR',
                        help="polynomial to test")
        return parser

    def parse_args(self, argv=None):
        """ Parse command-line arguments.

            :param argv: The command-line arguments used to invoke the
                program, as a sequence of strings.
            :return: ``None``.

            The parser expects the first argument as the program name, the
            second argument as the action to perform.

            If the parser fails to parse the arguments, emit a usage
            message and exit the program with status 2.
            """
        if argv is None:
            argv = sys.argv
        progname = os.path.basename(argv[0])
        self.options = self._make_parser(progname).parse_args(argv[1:])
        self.action = self.options.action

    def emit(self, message):
        """ Emit a report line to the runner's output stream. """
        emit_message(message, stream=self.stdout)

    def _search_options(self):
        return dict(
                seed=self.options.seed,
                max_attempts=self.options.max_attempts,
                coeff_bound=self.options.coeff_bound)

    def _load(self):
        """ Read the problem and make its presentation. """
        problem = read_problem(self.options.input)
        presentation = problem.presentation(self.options.mode)
        return (problem, presentation)

    def _lift(self):
        """ Lift the problem's map and emit its certificate. """
        (problem, presentation) = self._load()
        self_map = problem.self_map(presentation)
        certificate = lift_map(
                self_map,
                adjuster_degree_cap=self.options.adjuster_degree_cap,
                **self._search_options())
        text = format_certificate(certificate, presentation.mode)
        if self.options.out is None:
            self.stdout.write(text)
            self.stdout.flush()
        else:
            with open(self.options.out, 'wt', encoding='utf-8') as outfile:
                outfile.write(text)

    def _verify(self):
        """ Re-verify a certificate against the problem.

            :raises LiftRunnerVerificationError: If a check fails.
            """
        (problem, presentation) = self._load()
        self_map = problem.self_map(presentation)
        parsed = read_certificate(self.options.lift, problem.context)
        report = verify_lift(self_map, parsed.lift)
        for check in report.checks:
            self.emit(format_check(check))
        if not report.passed:
            raise LiftRunnerVerificationError(
                    "Failed checks: {names}".format(names=", ".join(
                        check.name for check in report.failures())))

    def _dim(self):
        """ Report the Krull dimension of the presented ring. """
        (problem, presentation) = self._load()
        report = krull_dimension(
                presentation.ideal, presentation.mode, presentation.cache)
        self.emit("dimension: {dim:d}, witness: {{{names}}}".format(
                dim=report.dimension,
                names=", ".join(report.witness_names())))

    def _gb(self):
        """ Print the basis of the ideal in the mode's ordering. """
        (problem, presentation) = self._load()
        if presentation.ideal.is_zero():
            return
        basis = compute_basis(
                presentation.ideal, presentation.order, presentation.cache)
        for element in basis.elements:
            self.emit(format_polynomial(element))

    def _sop(self):
        """ Print a strong system of parameters with its trace. """
        (problem, presentation) = self._load()
        sop = strong_sop(presentation, **self._search_options())
        for (index, (element, dimension)) in enumerate(
                zip(sop.elements, sop.dimension_trace), start=1):
            self.emit("x{index:d} = {element}  (dimension {dim:d})".format(
                    index=index, element=element, dim=dimension))
        self.emit("final dimension: {dim:d}".format(dim=sop.final_dimension))

    def _finite(self):
        """ Report whether the problem's map is finite. """
        (problem, presentation) = self._load()
        self_map = problem.self_map(presentation)
        finite = is_finite_map(self_map)
        self.emit("finite: {answer}".format(answer="yes" if finite else "no"))

    def _present(self):
        """ Print a minimal presentation with its forward and backward maps.
            """
        (problem, presentation) = self._load()
        (reduced, forward, backward) = minimal_presentation(presentation)
        generators = [
                format_polynomial(generator)
                for generator in reduced.ideal.generators]
        self.emit("ring: {names}".format(names=" ".join(
                reduced.context.names)))
        self.emit("ideal: {generators}".format(
                generators="; ".join(generators) or "0"))
        for (label, variable_map) in [
                ('forward', forward), ('backward', backward)]:
            self.emit("{label}: {entries}".format(
                    label=label, entries="; ".join(
                        "{name} -> {image}".format(
                            name=name, image=format_polynomial(image))
                        for (name, image) in zip(
                            variable_map.context.names,
                            variable_map.images))))

    def _member(self):
        """ Decide membership of ``--poly`` in the ideal. """
        (problem, presentation) = self._load()
        polynomial = parse(self.options.poly, problem.context)
        member = presentation.contains(polynomial)
        self.emit("member: {answer}".format(answer="yes" if member else "no"))

    action_funcs = {
            'lift': _lift,
            'verify': _verify,
            'dim': _dim,
            'gb': _gb,
            'sop': _sop,
            'finite': _finite,
            'present': _present,
            'member': _member,
            }

    def _get_action_func(self):
        """ Get the function for the specified action.

            :return: The function object corresponding to the specified
                action.
            :raises LiftRunnerInvalidActionError: if the action is
               unknown.

            The action is specified by the `action` attribute, which is set
            during `parse_args`.
            """
        try:
            func = self.action_funcs[self.action]
        except KeyError:
            error = LiftRunnerInvalidActionError(
                    "Unknown action: {action!r}".format(
                        action=self.action))
            raise error
        return func

    def do_action(self):
        """ Perform the requested action.

            :return: ``None``.

            The action is specified by the `action` attribute, which is set
            during `parse_args`.
            """
        func = self._get_action_func()
        func(self)


def emit_message(message, stream=None):
    """ Emit a message to the specified stream (default `sys.stderr`). """
    if stream is None:
        stream = sys.stderr
    stream.write("{message}\n".format(message=message))
    stream.flush()


def configure_logging(options):
    """ Send log records to `sys.stderr` at the level the options ask. """
    level = logging.WARNING
    if options.verbose:
        level = logging.INFO
    if options.debug:
        level = logging.DEBUG
    logging.basicConfig(
            level=level, stream=sys.stderr,
            format="%(name)s: %(levelname)s: %(message)s")


def main(argv=None, stdout=None):
    """ Run the ``liftmap`` command.

        :param argv: The command-line arguments, program name first.
        :param stdout: The stream for reports.
        :return: The process exit status.
        """
    runner = LiftRunner(argv, stdout=stdout)
    configure_logging(runner.options)
    try:
        runner.do_action()
    except Exception as exc:
        code = exit_code_for(exc)
        emit_message("{progname}: {kind}: {exc}".format(
                progname="liftmap", kind=type(exc).__name__, exc=exc))
        return code
    return exit_success


if __name__ == '__main__':
    sys.exit(main())



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
