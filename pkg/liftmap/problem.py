# liftmap/problem.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Problem files: a presented ring, an ideal, and optionally a map.

    The format is line oriented; ``#`` starts a comment::

        field F 101
        ring X Y Z
        ideal: Z
        map: X -> X^2; Y -> Y^2; Z -> 0
        mode: local

    `field` and `ring` are required; the ideal defaults to zero and
    the mode to ``local``. Each keyword may appear once.
    """

import re

from .liftengine import Presentation, SelfMapOnA
from .polyring import (
        PolynomialError, VarContext, VariableMap, parse)
from .scalars import FieldSpec, ScalarError
from .stdbasis import IdealData, local_mode, modes


class ProblemError(Exception):
    """ Base exception class for errors from this module. """


class ProblemFileError(ProblemError, ValueError):
    """ Exception raised when a problem file is malformed. """

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line {number:d}: {message}".format(
                    number=line_number, message=message)
        super().__init__(message)
        self.line_number = line_number



keywords = ('field', 'ring', 'ideal', 'map', 'mode')

line_regex = re.compile(
        r"^(?P<keyword>[a-z]+)\s*:?\s*(?P<value>.*)$")

map_entry_regex = re.compile(
        r"^\s*(?P<name>[A-Za-z][A-Za-z0-9_]*)\s*->\s*(?P<image>.*?)\s*$")


class ProblemFile:
    """ The parsed content of a problem file.

        `context`
            The `VarContext` of the field and variables.

        `ideal`
            The `IdealData` 𝔞.

        `map`
            The `VariableMap` given by the ``map`` line, or ``None``.

        `mode`
            The declared mode, `local_mode` by default.
        """

    def __init__(self, context, ideal, variable_map=None, mode=local_mode):
        self.context = context
        self.ideal = ideal
        self.map = variable_map
        self.mode = mode

    def __repr__(self):
        return "ProblemFile({ideal!r}, mode={mode!r})".format(
                ideal=self.ideal, mode=self.mode)

    def presentation(self, mode=None):
        """ The `Presentation` of the problem, in `mode` if given. """
        return Presentation(self.ideal, mode or self.mode)

    def self_map(self, presentation):
        """ The `SelfMapOnA` of the problem's map on `presentation`.

            :raises ProblemFileError: If the problem has no map.
            :raises IllDefinedMapError: If the map is not well defined.
            """
        if self.map is None:
            raise ProblemFileError("The problem declares no map")
        return SelfMapOnA(presentation, self.map)


def _parse_polynomial(text, context, line_number):
    try:
        return parse(text, context)
    except PolynomialError as exc:
        error = ProblemFileError(
                "{text!r}: {exc}".format(text=text, exc=exc),
                line_number=line_number)
        raise error from exc


def _parse_map(text, context, line_number):
    images = {}
    for entry in text.split(';'):
        if not entry.strip():
            continue
        match = map_entry_regex.match(entry)
        if match is None:
            raise ProblemFileError(
                    "Map entry {entry!r} is not ‘NAME -> EXPR’".format(
                        entry=entry.strip()),
                    line_number=line_number)
        name = match.group('name')
        if name not in context.names:
            raise ProblemFileError(
                    "Map entry for unknown variable {name!r}".format(
                        name=name),
                    line_number=line_number)
        if name in images:
            raise ProblemFileError(
                    "Repeated map entry for {name}".format(name=name),
                    line_number=line_number)
        images[name] = _parse_polynomial(
                match.group('image'), context, line_number)
    missing = [name for name in context.names if name not in images]
    if missing:
        raise ProblemFileError(
                "Map has no image for {names}".format(
                    names=", ".join(missing)),
                line_number=line_number)
    try:
        return VariableMap(context, [images[name] for name in context.names])
    except PolynomialError as exc:
        error = ProblemFileError(str(exc), line_number=line_number)
        raise error from exc


def parse_problem(text):
    """ Parse the text of a problem file.

        :param text: The file content.
        :return: A `ProblemFile`.
        :raises ProblemFileError: On any malformed or missing entry,
            with the offending `line_number` where there is one.
        """
    entries = {}
    for (line_number, line) in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        match = line_regex.match(line)
        if match is None or match.group('keyword') not in keywords:
            raise ProblemFileError(
                    "Unrecognised line {line!r}".format(line=line),
                    line_number=line_number)
        keyword = match.group('keyword')
        if keyword in entries:
            raise ProblemFileError(
                    "Repeated ‘{keyword}’ entry".format(keyword=keyword),
                    line_number=line_number)
        entries[keyword] = (match.group('value').strip(), line_number)

    for keyword in ('field', 'ring'):
        if keyword not in entries:
            raise ProblemFileError(
                    "Missing ‘{keyword}’ entry".format(keyword=keyword))

    (value, line_number) = entries['field']
    try:
        field = FieldSpec.parse(value)
    except ScalarError as exc:
        error = ProblemFileError(str(exc), line_number=line_number)
        raise error from exc

    (value, line_number) = entries['ring']
    try:
        context = VarContext(value.split(), field)
    except PolynomialError as exc:
        error = ProblemFileError(str(exc), line_number=line_number)
        raise error from exc

    generators = []
    if 'ideal' in entries:
        (value, line_number) = entries['ideal']
        generators = [
                _parse_polynomial(part, context, line_number)
                for part in value.split(';') if part.strip()]
    ideal = IdealData(context, generators)

    variable_map = None
    if 'map' in entries:
        (value, line_number) = entries['map']
        variable_map = _parse_map(value, context, line_number)

    mode = local_mode
    if 'mode' in entries:
        (mode, line_number) = entries['mode']
        if mode not in modes:
            raise ProblemFileError(
                    "Unknown mode {mode!r}".format(mode=mode),
                    line_number=line_number)

    return ProblemFile(context, ideal, variable_map, mode)


def read_problem(path):
    """ Read and parse the problem file at `path`.

        :raises ProblemFileError: If the file is malformed.
        :raises OSError: If the file cannot be read.
        """
    with open(path, 'rt', encoding='utf-8') as infile:
        return parse_problem(infile.read())



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
