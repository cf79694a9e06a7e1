#!/usr/bin/env python
# -*- coding:utf-8 -*-
# project : compacta
# filename : reference
# author : ly_13
# date : 3/11/2025

from fractions import Fraction

from apps.compacta.maps import EffectiveMap, ImageOracle, UniformModulus, image_oracle
from apps.compacta.maps.expressions import lipschitz_bound


def synthesize_reference_modulus(expression) -> UniformModulus:
    """epsilon / L for the Lipschitz bound L of the expression, 1 for constants."""
    bound = lipschitz_bound(expression)

    def delta(compact, epsilon):
        if bound == 0:
            return Fraction(1)
        return epsilon / bound

    return UniformModulus(delta, label=f"lipschitz {bound}")


def reference_image_oracle(f: EffectiveMap, expression) -> ImageOracle:
    """The image oracle handed to the extractor; the modulus behind it stays here."""
    return image_oracle(f, synthesize_reference_modulus(expression))
