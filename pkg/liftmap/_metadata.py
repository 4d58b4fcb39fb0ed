# liftmap/_metadata.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Package metadata for the ‘python-liftmap’ distribution. """

import pkg_resources


distribution_name = "python-liftmap"
version_declared = "1.0.0"


def get_distribution(name):
    """ Get the `Distribution` instance for distribution `name`.

        :param name: The distribution name for the query.
        :return: The `pkg_resources.Distribution` instance, or
            ``None`` if the distribution instance is not found.
        """
    distribution = None
    try:
        distribution = pkg_resources.get_distribution(name)
    except pkg_resources.DistributionNotFound:
        pass

    return distribution


def get_distribution_version(distribution):
    """ Get the version text of the installed distribution.

        :param distribution: The `pkg_resources.Distribution` instance,
            or ``None``.
        :return: The version text, or `version_declared` if the
            distribution is not installed, as when running from a
            source checkout.
        """
    version = version_declared
    if distribution is not None:
        version = distribution.version

    return version


distribution = get_distribution(distribution_name)
version_installed = get_distribution_version(distribution)


author_name = "Liftmap developers"
author_email = "liftmap-devel@example.org"
author = "{name} <{email}>".format(name=author_name, email=author_email)

copyright_year = "2026"
copyright = "Copyright © {year} {author}".format(
        year=copyright_year, author=author)
license = "Apache-2"
url = "https://example.org/python-liftmap/"



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
