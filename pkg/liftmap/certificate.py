# liftmap/certificate.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Plain-text lift certificates.

    A certificate has five sections in fixed order, each opened by its
    name on a line of its own:

    ``LIFT``
        One ``NAME -> POLYNOMIAL`` line per variable.
    ``COORD_CHANGE``
        The rows of the coordinate change matrix, space separated.
    ``TRACE``
        One ``t, dimension, adjuster`` line per variable.
    ``CHECKS``
        One ``name: pass|fail [witness]`` line per check.
    ``META``
        ``key: value`` lines: seed, attempts, mode, version.
    """

from ._metadata import version_installed
from .liftengine import CheckResult, StepRecord, check_names
from .polyring import (
        PolynomialError, VariableMap, format_polynomial, parse)
from .problem import map_entry_regex
from .scalars import ScalarError, format_raw, parse_raw


class CertificateError(Exception):
    """ Base exception class for errors from this module. """


class CertificateFormatError(CertificateError, ValueError):
    """ Exception raised when certificate text is malformed. """

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line {number:d}: {message}".format(
                    number=line_number, message=message)
        super().__init__(message)
        self.line_number = line_number



section_names = ('LIFT', 'COORD_CHANGE', 'TRACE', 'CHECKS', 'META')

passed_token = 'pass'
failed_token = 'fail'


def format_check(check):
    """ The ``CHECKS`` line of a `CheckResult`. """
    text = "{name}: {status}".format(
            name=check.name,
            status=passed_token if check.passed else failed_token)
    if check.witness:
        text = "{text} {witness}".format(text=text, witness=check.witness)
    return text


def format_certificate(certificate, mode, version=version_installed):
    """ The text of a `LiftCertificate`.

        :param certificate: The `LiftCertificate`.
        :param mode: The mode the lift was computed in.
        :param version: The tool version recorded in ``META``.
        :return: The certificate text, ending with a newline.
        """
    context = certificate.lift.context
    lines = ['LIFT']
    for (name, image) in zip(context.names, certificate.lift.images):
        lines.append("{name} -> {image}".format(
                name=name, image=format_polynomial(image)))
    lines.append('COORD_CHANGE')
    for row in certificate.coordinate_change:
        lines.append(" ".join(format_raw(value) for value in row))
    lines.append('TRACE')
    for record in certificate.trace:
        lines.append("{step:d}, {dim:d}, {adjuster}".format(
                step=record.step, dim=record.dimension,
                adjuster=format_polynomial(record.adjuster)))
    lines.append('CHECKS')
    for check in certificate.report.checks:
        lines.append(format_check(check))
    lines.append('META')
    meta = [
            ('seed', certificate.seed),
            ('attempts', certificate.attempts),
            ('mode', mode),
            ('version', version),
            ]
    for (key, value) in meta:
        lines.append("{key}: {value}".format(key=key, value=value))
    return "\n".join(lines) + "\n"



class ParsedCertificate:
    """ The content of certificate text, read in a given context.

        `lift`
            The `VariableMap` ψ of the ``LIFT`` section.

        `coordinate_change`
            The matrix rows of raw values.

        `trace`
            List of `StepRecord`.

        `checks`
            List of `CheckResult` as recorded, not recomputed.

        `meta`
            Mapping of ``META`` keys to text values.
        """

    def __init__(self, lift, coordinate_change, trace, checks, meta):
        self.lift = lift
        self.coordinate_change = coordinate_change
        self.trace = trace
        self.checks = checks
        self.meta = meta


def _split_sections(text):
    """ Map each section name to its list of (line number, line). """
    sections = {}
    current = None
    for (line_number, line) in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line in section_names:
            if line in sections:
                raise CertificateFormatError(
                        "Repeated section {name}".format(name=line),
                        line_number=line_number)
            current = line
            sections[current] = []
            continue
        if current is None:
            raise CertificateFormatError(
                    "Content before the first section",
                    line_number=line_number)
        sections[current].append((line_number, line))
    order = [name for name in section_names if name in sections]
    if order != list(sections) or len(order) != len(section_names):
        raise CertificateFormatError(
                "Expected sections {names}, got {found}".format(
                    names=" ".join(section_names),
                    found=" ".join(sections) or "none"))
    return sections


def _parse_polynomial(text, context, line_number):
    try:
        return parse(text, context)
    except PolynomialError as exc:
        error = CertificateFormatError(str(exc), line_number=line_number)
        raise error from exc


def _parse_lift(lines, context):
    images = {}
    for (line_number, line) in lines:
        match = map_entry_regex.match(line)
        if match is None or match.group('name') not in context.names:
            raise CertificateFormatError(
                    "Invalid lift line {line!r}".format(line=line),
                    line_number=line_number)
        images[match.group('name')] = _parse_polynomial(
                match.group('image'), context, line_number)
    if sorted(images) != sorted(context.names) or len(lines) != len(images):
        raise CertificateFormatError(
                "The lift must give one image per variable")
    try:
        return VariableMap(context, [images[name] for name in context.names])
    except PolynomialError as exc:
        error = CertificateFormatError(str(exc))
        raise error from exc


def _parse_matrix(lines, context):
    rows = []
    for (line_number, line) in lines:
        try:
            row = [parse_raw(word, context.field) for word in line.split()]
        except ScalarError as exc:
            error = CertificateFormatError(str(exc), line_number=line_number)
            raise error from exc
        if len(row) != context.nvars:
            raise CertificateFormatError(
                    "Matrix row needs {n:d} entries".format(n=context.nvars),
                    line_number=line_number)
        rows.append(row)
    if len(rows) != context.nvars:
        raise CertificateFormatError(
                "Coordinate change needs {n:d} rows".format(n=context.nvars))
    return rows


def _parse_trace(lines, context):
    trace = []
    for (line_number, line) in lines:
        parts = [part.strip() for part in line.split(',', 2)]
        if len(parts) != 3 or not all(
                part.lstrip('-').isdigit() for part in parts[:2]):
            raise CertificateFormatError(
                    "Invalid trace line {line!r}".format(line=line),
                    line_number=line_number)
        trace.append(StepRecord(
                int(parts[0]), int(parts[1]),
                _parse_polynomial(parts[2], context, line_number)))
    return trace


def _parse_checks(lines):
    checks = []
    for (line_number, line) in lines:
        (name, separator, rest) = line.partition(': ')
        (status, space, witness) = rest.partition(' ')
        if (
                not separator or name not in check_names
                or status not in (passed_token, failed_token)):
            raise CertificateFormatError(
                    "Invalid check line {line!r}".format(line=line),
                    line_number=line_number)
        checks.append(CheckResult(
                name, status == passed_token, witness or None))
    return checks


def _parse_meta(lines):
    meta = {}
    for (line_number, line) in lines:
        (key, separator, value) = line.partition(':')
        if not separator:
            raise CertificateFormatError(
                    "Invalid meta line {line!r}".format(line=line),
                    line_number=line_number)
        meta[key.strip()] = value.strip()
    return meta


def parse_certificate(text, context):
    """ Parse certificate text in the variable context of its problem.

        :param text: The certificate text.
        :param context: The `VarContext` of the problem.
        :return: A `ParsedCertificate`.
        :raises CertificateFormatError: If the text is malformed.
        """
    sections = _split_sections(text)
    return ParsedCertificate(
            _parse_lift(sections['LIFT'], context),
            _parse_matrix(sections['COORD_CHANGE'], context),
            _parse_trace(sections['TRACE'], context),
            _parse_checks(sections['CHECKS']),
            _parse_meta(sections['META']))


def read_certificate(path, context):
    """ Read and parse the certificate file at `path`. """
    with open(path, 'rt', encoding='utf-8') as infile:
        return parse_certificate(infile.read(), context)



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
