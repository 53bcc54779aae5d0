#!/usr/bin/env python3

import math

import numpy as np
from vonroos_zero.cases import register_case
from vonroos_zero.cases.base_case import BaseCase, PotentialKind


@register_case(3)
class OscillatorCoulombCase(BaseCase):
    """upsilon = 1/2, V~(rho) = a^2 rho^2 / 4, V~(z) = -2 B~ / z.

    The published constraint keeps the upsilon = -1 radicand
    m^2 + 3/4 - (zeta - beta)/2 and the factor 1/|a|; both are reproduced
    verbatim here. Rederived matching uses the upsilon = 1/2 radicand.
    """

    upsilon = 0.5
    radial_kind = PotentialKind.HarmonicOscillator
    axial_kind = PotentialKind.Coulomb

    def closed_form(self, rho, z, b, j, couplings):
        return couplings.a_sq / (4.0 * b * np.power(z, j)) - 2.0 * couplings.B_tilde / (
            b * np.square(rho) * np.power(z, j + 1.0)
        )

    def published_bracket(self, n_rho, n_z, m, zeta_minus_beta, couplings):
        radicand = self.published_radicand(m, zeta_minus_beta)
        root = self._root(radicand)
        if root is None:
            return None, radicand
        ratio = couplings.B_tilde / math.sqrt(abs(couplings.a_sq))
        return ratio / math.sqrt(2.0 * n_rho + 1.0 + root) - n_z - 1.0, radicand
