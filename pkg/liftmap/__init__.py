# liftmap/__init__.py
# Part of ‘python-liftmap’, a library to lift finite self maps of
# complete local rings.
#
# This is free software, and you are welcome to redistribute it under
# certain conditions; see the end of this file for copyright
# information, grant of license, and disclaimer of warranty.

""" Library to lift finite self maps of complete local rings.

    Given a complete local ring A = K⟦X₁,…,Xₙ⟧/𝔞 over K = ℚ or K = 𝔽ₚ,
    presented by polynomial generators of 𝔞, and a finite self map φ
    of A given by polynomial representatives of the images of the
    variables, this library constructs a finite self map ψ of the
    power series ring R = K⟦X₁,…,Xₙ⟧ with π∘ψ = φ∘π, where π is the
    quotient map R → A. Every lift comes with a certificate that is
    re-verified by exact computation.

    Simple example of usage::

        from liftmap.polyring import VarContext, VariableMap, parse
        from liftmap.scalars import rationals
        from liftmap.stdbasis import IdealData
        from liftmap.liftengine import Presentation, SelfMapOnA, lift_map

        context = VarContext(["X", "Y", "Z"], rationals())
        presentation = Presentation(IdealData(context, [parse("Z", context)]))
        phi = SelfMapOnA(presentation, VariableMap(context, [
                parse(text, context) for text in ["X^2", "Y^2", "0"]]))
        certificate = lift_map(phi)

    The same computation is available from the command line as
    ``liftmap lift --input PROBLEM``.

    Ideals of the power series ring are computed through standard
    bases under a local monomial ordering; homogeneous problems may
    instead be treated as graded rings, using Gröbner bases.
    """

from .liftengine import (
        Presentation, SelfMapOnA, lift_map, verify_lift)


__all__ = [Presentation, SelfMapOnA, lift_map, verify_lift]



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
