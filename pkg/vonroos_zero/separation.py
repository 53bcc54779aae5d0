#!/usr/bin/env python3

"""Separation of the zero-energy von Roos problem in cylindrical coordinates.

The mass M(rho, phi, z) = b z^j rho^(2 upsilon + 1) / 2 turns the E = 0
equation into an azimuthal factor e^(i m phi), a radial half-line problem with
eigenvalue -k_z^2 and an axial half-line problem with eigenvalue +k_z^2.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, NamedTuple, Optional

import numpy as np
from vonroos_zero import ambiguity, constants
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.cases import BaseCase, CaseCouplings, PotentialKind, build_case
from vonroos_zero.errors import (
    DomainError,
    InadmissibleError,
    SeparationMismatchError,
)


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PdmSpec:
    b: float
    j: float
    upsilon: float

    def __post_init__(self):
        if not self.b > 0:
            raise DomainError(f"Mass scale b must be positive, got {self.b!r}")


class QuantumNumbers(NamedTuple):
    n_rho: int
    n_z: int
    m: int

    def validate(self) -> "QuantumNumbers":
        if self.n_rho < 0 or self.n_z < 0:
            raise DomainError(
                f"n_rho and n_z must be non-negative, got {tuple(self)!r}"
            )
        return self


class Axis(Enum):
    RADIAL = "rho"
    AXIAL = "z"


@dataclass(frozen=True)
class EffectiveProblem:
    """-u'' + barrier_coefficient / x^2 + V(x) = E u on (0, inf), u(0) = 0.

    `coupling` is a^2/4 (resp. a~^2/4) for an oscillator, V = coupling x^2,
    and A~ (resp. B~) for Coulomb, V = -2 coupling / x. The radial problem has
    E = -k_z^2, the axial one E = +k_z^2.
    """

    barrier_coefficient: float
    potential_kind: PotentialKind
    coupling: float
    axis: Axis = Axis.AXIAL

    @classmethod
    def from_spectrum(
        cls,
        kind: PotentialKind,
        l_abs: float,
        spectral_coupling: float,
        axis: Axis = Axis.AXIAL,
    ) -> "EffectiveProblem":
        """Problem with barrier index |L| and frequency omega (HO) or B (Coulomb)."""
        if kind is PotentialKind.HarmonicOscillator:
            coupling = spectral_coupling ** 2 / 4.0
        else:
            coupling = spectral_coupling
        return cls(l_abs * l_abs - 0.25, kind, coupling, axis)

    @property
    def l_abs(self) -> float:
        # barrier = L^2 - 1/4; rounding may leave a tiny negative radicand.
        return math.sqrt(max(self.barrier_coefficient + 0.25, 0.0))

    @property
    def spectral_coupling(self) -> float:
        """Oscillator frequency omega (V = omega^2 x^2 / 4) or Coulomb B."""
        if self.potential_kind is PotentialKind.HarmonicOscillator:
            return 2.0 * math.sqrt(self.coupling)
        return self.coupling

    def potential(self, x):
        x = np.asarray(x, dtype=float)
        if self.potential_kind is PotentialKind.HarmonicOscillator:
            return self.coupling * np.square(x)
        if self.potential_kind is PotentialKind.Coulomb:
            return -2.0 * self.coupling / x
        return np.zeros_like(x)

    def kz_squared(self, eigenvalue: float) -> float:
        if self.axis is Axis.RADIAL:
            return -eigenvalue
        return eigenvalue


def mass_at(pdm: PdmSpec, rho, z):
    rho = np.asarray(rho, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any(rho <= 0) or np.any(z <= 0):
        raise DomainError("The mass is defined on rho > 0, z > 0 only")
    mass = pdm.b * np.power(z, pdm.j) * np.power(rho, 2.0 * pdm.upsilon + 1.0) / 2.0
    return mass if mass.ndim else float(mass)


def effective_ell_radicand(upsilon: float, m: int, zeta_minus_beta: float) -> float:
    return (
        upsilon * (upsilon + 1.0)
        + m * m
        + 0.25
        - (2.0 * upsilon + 1.0) ** 2 * (zeta_minus_beta - 1.0) / 2.0
    )


def effective_ell(upsilon: float, m: int, zeta_minus_beta: float) -> Optional[float]:
    """|l~| of the radial barrier, or None in the fall-to-center regime."""
    radicand = effective_ell_radicand(upsilon, m, zeta_minus_beta)
    if radicand < 0.0:
        return None
    return math.sqrt(radicand)


@dataclass(frozen=True)
class AssembledPotential:
    case_id: int
    couplings: CaseCouplings
    pdm: PdmSpec
    case: BaseCase = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        case = build_case(self.case_id)
        if self.pdm.upsilon != case.upsilon:
            raise DomainError(
                f"Case {self.case_id} requires upsilon = {case.upsilon}, "
                f"got {self.pdm.upsilon}"
            )
        object.__setattr__(self, "case", case)

    @classmethod
    def create(
        cls,
        case_id: int,
        couplings: Optional[CaseCouplings] = None,
        b: float = constants.DEFAULT_MASS_SCALE,
        j: float = 0.0,
    ) -> "AssembledPotential":
        case = build_case(case_id)
        return cls(
            case_id=case.case_id,
            couplings=couplings if couplings is not None else CaseCouplings(),
            pdm=PdmSpec(b=b, j=j, upsilon=case.upsilon),
        )

    def evaluate(self, rho, z):
        return self.case.closed_form(rho, z, self.pdm.b, self.pdm.j, self.couplings)

    def quotient_form(self, rho, z):
        """[V~(rho) + V~(z)] / (b z^j rho^(2 upsilon + 1))."""
        return self.component_sum(rho, z) / self.mass_denominator(rho, z)

    def component_sum(self, rho, z):
        return self.case.radial_component(
            rho, self.couplings
        ) + self.case.axial_component(z, self.couplings)

    def mass_denominator(self, rho, z):
        return (
            self.pdm.b
            * np.power(z, self.pdm.j)
            * np.power(rho, 2.0 * self.pdm.upsilon + 1.0)
        )


def radial_problem(
    case: AssembledPotential, params: AmbiguityParameters, m: int
) -> EffectiveProblem:
    zmb = ambiguity.zeta_minus_beta(params)
    radicand = effective_ell_radicand(case.pdm.upsilon, m, zmb)
    if radicand < 0.0:
        raise InadmissibleError(
            f"Radial barrier radicand {radicand!r} < 0 for upsilon="
            f"{case.pdm.upsilon}, m={m}, zeta-beta={zmb}",
            reason="ell_radicand",
        )
    return EffectiveProblem(
        barrier_coefficient=radicand - 0.25,
        potential_kind=case.case.radial_kind,
        coupling=case.case.radial_coupling(case.couplings),
        axis=Axis.RADIAL,
    )


def axial_problem(
    case: AssembledPotential, params: AmbiguityParameters
) -> EffectiveProblem:
    f_value = ambiguity.barrier_f(params, case.pdm.j)
    if f_value + 0.25 < 0.0:
        raise InadmissibleError(
            f"Axial barrier F + 1/4 = {f_value + 0.25!r} < 0 at j={case.pdm.j}",
            reason="f_radicand",
        )
    return EffectiveProblem(
        barrier_coefficient=f_value,
        potential_kind=case.case.axial_kind,
        coupling=case.case.axial_coupling(case.couplings),
        axis=Axis.AXIAL,
    )


def potential_at(case: AssembledPotential, rho, z):
    rho = np.asarray(rho, dtype=float)
    z = np.asarray(z, dtype=float)
    if np.any(rho <= 0) or np.any(z <= 0):
        raise DomainError("The potential is defined on rho > 0, z > 0 only")
    value = case.evaluate(rho, z)
    return value if np.ndim(value) else float(value)


class SeparatedSolution(NamedTuple):
    """A half-line eigenfunction u(x) with the k_z^2 its problem assigns it."""

    evaluate: Callable
    kz_squared: float


@dataclass(frozen=True)
class WavefunctionAssembly:
    """Psi = rho^upsilon U(rho) e^(i m phi)/sqrt(2 pi) z^(j/2) Z~(z), zero for z <= 0."""

    radial_part: Callable
    axial_part: Callable
    pdm: PdmSpec
    m: int

    def radial_profile(self, rho):
        rho = np.asarray(rho, dtype=float)
        return np.power(rho, self.pdm.upsilon) * self.radial_part(rho)

    def axial_profile(self, z):
        z = np.asarray(z, dtype=float)
        inside = z > 0
        z_safe = np.where(inside, z, 1.0)
        values = np.power(z_safe, self.pdm.j / 2.0) * self.axial_part(z_safe)
        return np.where(inside, values, 0.0)

    def profile(self, rho, z):
        """Real (rho, z) factor of Psi; the azimuthal phase is left out."""
        return self.radial_profile(rho) * self.axial_profile(z)

    def __call__(self, rho, phi, z):
        phase = np.exp(1j * self.m * np.asarray(phi, dtype=float)) / math.sqrt(
            2.0 * math.pi
        )
        return self.profile(rho, z) * phase


def assemble_wavefunction(
    case: AssembledPotential,
    params: AmbiguityParameters,
    qn: QuantumNumbers,
    radial_solution: SeparatedSolution,
    axial_solution: SeparatedSolution,
) -> WavefunctionAssembly:
    # Both problems must be admissible for the parts to exist at all.
    radial_problem(case, params, qn.m)
    axial_problem(case, params)

    radial_kz2 = radial_solution.kz_squared
    axial_kz2 = axial_solution.kz_squared
    scale = max(1.0, abs(radial_kz2), abs(axial_kz2))
    if abs(radial_kz2 - axial_kz2) > constants.SEPARATION_MATCH_TOLERANCE * scale:
        raise SeparationMismatchError(
            f"Separation constants differ: radial k_z^2 = {radial_kz2!r}, "
            f"axial k_z^2 = {axial_kz2!r}"
        )
    logger.debug(
        f"Assembled case {case.case_id} state {tuple(qn)} with k_z^2 = {radial_kz2}"
    )
    return WavefunctionAssembly(
        radial_part=radial_solution.evaluate,
        axial_part=axial_solution.evaluate,
        pdm=case.pdm,
        m=qn.m,
    )
