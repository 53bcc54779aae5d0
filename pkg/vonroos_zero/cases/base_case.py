#!/usr/bin/env python3

import math
from enum import Enum
from typing import NamedTuple, Optional, Tuple

import numpy as np
from vonroos_zero import constants


class PotentialKind(Enum):
    HarmonicOscillator = "ho"
    Coulomb = "coulomb"
    # Free problem: no component potential beyond the inverse-square barrier.
    Free = "none"


class CaseCouplings(NamedTuple):
    """Component potential couplings; each case reads only its own pair.

    a_sq, atilde_sq: oscillator strengths a^2 and a~^2 (V = a^2 x^2 / 4).
    A_tilde, B_tilde: Coulomb strengths (V = -2 A~ / rho, V = -2 B~ / z).
    """

    a_sq: float = constants.DEFAULT_A_SQ
    atilde_sq: float = constants.DEFAULT_ATILDE_SQ
    A_tilde: float = constants.DEFAULT_A_TILDE
    B_tilde: float = constants.DEFAULT_B_TILDE


def oscillator_component(x, a_sq: float):
    return a_sq * np.square(x) / 4.0


def coulomb_component(x, strength: float):
    return -2.0 * strength / x


class BaseCase:
    """One of the four exactly solvable (upsilon, potential pair) settings.

    A case fixes the radial exponent upsilon of the mass
    M = b z^j rho^(2 upsilon + 1) / 2, the radial component potential
    V~(rho) and the axial component potential V~(z).
    """

    case_id = 0
    upsilon = 0.0
    radial_kind = PotentialKind.Free
    axial_kind = PotentialKind.Free
    # The axial oscillator ladder is taken on the mirrored branch
    # sqrt(a~^2) = -sqrt(a^2) so that both k_z^2 carry the same sign.
    mirrored_axial = False

    def radial_component(self, rho, couplings: CaseCouplings):
        if self.radial_kind is PotentialKind.HarmonicOscillator:
            return oscillator_component(rho, couplings.a_sq)
        return coulomb_component(rho, couplings.A_tilde)

    def axial_component(self, z, couplings: CaseCouplings):
        if self.axial_kind is PotentialKind.HarmonicOscillator:
            return oscillator_component(z, couplings.atilde_sq)
        return coulomb_component(z, couplings.B_tilde)

    def radial_coupling(self, couplings: CaseCouplings) -> float:
        """Coefficient carried by the radial EffectiveProblem."""
        if self.radial_kind is PotentialKind.HarmonicOscillator:
            return couplings.a_sq / 4.0
        return couplings.A_tilde

    def axial_coupling(self, couplings: CaseCouplings) -> float:
        if self.axial_kind is PotentialKind.HarmonicOscillator:
            return couplings.atilde_sq / 4.0
        return couplings.B_tilde

    def closed_form(self, rho, z, b: float, j: float, couplings: CaseCouplings):
        raise NotImplementedError

    def published_radicand(self, m: int, zeta_minus_beta: float) -> float:
        """Radicand under the square root of the published constraint."""
        return m * m + 0.75 - zeta_minus_beta / 2.0

    def published_bracket(
        self,
        n_rho: int,
        n_z: int,
        m: int,
        zeta_minus_beta: float,
        couplings: CaseCouplings,
    ) -> Tuple[Optional[float], float]:
        """Returns (bracket, radicand) of the published constraint.

        The constraint reads -1/4 + bracket^2 = F. The bracket is None when
        the radicand is negative.
        """
        raise NotImplementedError

    @staticmethod
    def _root(radicand: float) -> Optional[float]:
        return math.sqrt(radicand) if radicand >= 0.0 else None

    def __repr__(self):
        return f"{type(self).__name__}(case_id={self.case_id})"
