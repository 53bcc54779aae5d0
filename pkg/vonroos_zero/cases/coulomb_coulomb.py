#!/usr/bin/env python3

import numpy as np
from vonroos_zero.cases import register_case
from vonroos_zero.cases.base_case import BaseCase, PotentialKind


@register_case(4)
class CoulombCoulombCase(BaseCase):
    """upsilon = -1, V~(rho) = -2 A~ / rho, V~(z) = -2 B~ / z."""

    upsilon = -1.0
    radial_kind = PotentialKind.Coulomb
    axial_kind = PotentialKind.Coulomb

    def closed_form(self, rho, z, b, j, couplings):
        return -2.0 * couplings.A_tilde / (
            b * np.power(z, j)
        ) - 2.0 * couplings.B_tilde * rho / (b * np.power(z, j + 1.0))

    def published_bracket(self, n_rho, n_z, m, zeta_minus_beta, couplings):
        radicand = self.published_radicand(m, zeta_minus_beta)
        root = self._root(radicand)
        if root is None:
            return None, radicand
        ratio = couplings.B_tilde / couplings.A_tilde
        return ratio * (n_rho + 1.0 + root) - n_z - 1.0, radicand
