#!/usr/bin/env python3

import numpy as np
from vonroos_zero.cases import register_case
from vonroos_zero.cases.base_case import BaseCase, PotentialKind


@register_case(1)
class OscillatorOscillatorCase(BaseCase):
    """upsilon = 1/2, V~(rho) = a^2 rho^2 / 4, V~(z) = a~^2 z^2 / 4."""

    upsilon = 0.5
    radial_kind = PotentialKind.HarmonicOscillator
    axial_kind = PotentialKind.HarmonicOscillator
    mirrored_axial = True

    def closed_form(self, rho, z, b, j, couplings):
        return couplings.a_sq / (4.0 * b * np.power(z, j)) + couplings.atilde_sq / (
            4.0 * b * np.square(rho) * np.power(z, j - 2.0)
        )

    def published_radicand(self, m, zeta_minus_beta):
        return m * m + 3.0 - 2.0 * zeta_minus_beta

    def published_bracket(self, n_rho, n_z, m, zeta_minus_beta, couplings):
        radicand = self.published_radicand(m, zeta_minus_beta)
        root = self._root(radicand)
        if root is None:
            return None, radicand
        return 2.0 * (n_rho - n_z) + root, radicand
