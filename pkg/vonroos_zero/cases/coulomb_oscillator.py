#!/usr/bin/env python3

import math

import numpy as np
from vonroos_zero.cases import register_case
from vonroos_zero.cases.base_case import BaseCase, PotentialKind


@register_case(2)
class CoulombOscillatorCase(BaseCase):
    """upsilon = -1, V~(rho) = -2 A~ / rho, V~(z) = a~^2 z^2 / 4."""

    upsilon = -1.0
    radial_kind = PotentialKind.Coulomb
    axial_kind = PotentialKind.HarmonicOscillator

    def closed_form(self, rho, z, b, j, couplings):
        return -2.0 * couplings.A_tilde / (
            b * np.power(z, j)
        ) + couplings.atilde_sq * rho / (4.0 * b * np.power(z, j - 2.0))

    def published_bracket(self, n_rho, n_z, m, zeta_minus_beta, couplings):
        radicand = self.published_radicand(m, zeta_minus_beta)
        root = self._root(radicand)
        if root is None:
            return None, radicand
        ratio = couplings.A_tilde ** 2 / math.sqrt(abs(couplings.atilde_sq))
        return ratio / (n_rho + 1.0 + root) ** 2 - 2.0 * n_z - 1.0, radicand
