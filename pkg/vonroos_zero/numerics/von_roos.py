#!/usr/bin/env python3

"""Finite-difference application of the von Roos Hamiltonian to assembled states.

H Psi = -1/4 [M^a div(M^b grad(M^g Psi)) + M^g div(M^b grad(M^a Psi))] + V Psi
in cylindrical coordinates with Psi = psi(rho, z) e^(i m phi)/sqrt(2 pi). The
phi derivatives are taken analytically, giving -m^2 M^b (M^a psi) / rho^2.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy import integrate
from vonroos_zero import constants
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.errors import DomainError, GridError
from vonroos_zero.numerics.grid import Grid1D
from vonroos_zero.numerics.special import problem_eigenfunction
from vonroos_zero.separation import (
    AssembledPotential,
    PdmSpec,
    QuantumNumbers,
    SeparatedSolution,
    WavefunctionAssembly,
    assemble_wavefunction,
    axial_problem,
    radial_problem,
)


logger = logging.getLogger(__name__)

PotentialLike = Union[None, AssembledPotential, Callable]


@dataclass(frozen=True)
class ResidualReport2D:
    h_rho: float
    h_z: float
    residual_norm: float
    wavefunction_norm: float
    convergence_order: Optional[float]
    # Nodes kept after dropping the boundary layers, and H psi on them.
    rho: np.ndarray
    z: np.ndarray
    residual: np.ndarray
    refined: Optional["ResidualReport2D"] = None

    @property
    def relative_residual(self) -> float:
        return self.residual_norm / self.wavefunction_norm

    @property
    def finest(self) -> "ResidualReport2D":
        return self.refined if self.refined is not None else self

    def to_row(self) -> dict:
        return {
            "h_rho": self.h_rho,
            "h_z": self.h_z,
            "residual_norm": self.residual_norm,
            "wavefunction_norm": self.wavefunction_norm,
            "convergence_order": self.convergence_order,
        }


def convergence_order(coarse: float, fine: float) -> float:
    """log2 of the error ratio for a spacing halving."""
    return math.log2(coarse / fine)


def _as_grid(grid) -> Grid1D:
    if isinstance(grid, Grid1D):
        return grid
    return Grid1D.from_points(grid)


def _potential_values(potential: PotentialLike, rho, z):
    if potential is None:
        return np.zeros(np.broadcast(rho, z).shape)
    if isinstance(potential, AssembledPotential):
        return potential.evaluate(rho, z)
    return potential(rho, z)


def _mass_power(pdm: PdmSpec, exponent: float, rho, z):
    # log form keeps M^p finite where M itself under/overflows
    log_mass = (
        math.log(pdm.b / 2.0)
        + pdm.j * np.log(z)
        + (2.0 * pdm.upsilon + 1.0) * np.log(rho)
    )
    return np.exp(exponent * log_mass)


def _apply_half(pdm, beta, inner, m, psi, rho, z, h_rho, h_z):
    """div(M^beta grad(M^inner psi)) on the interior nodes of (rho, z).

    `psi` is sampled on the full node mesh; the result drops one node on
    every side.
    """
    w = _mass_power(pdm, inner, rho, z) * psi
    rc, zc = rho[1:-1, 1:-1], z[1:-1, 1:-1]
    wc = w[1:-1, 1:-1]

    rho_plus, rho_minus = rc + h_rho / 2.0, rc - h_rho / 2.0
    radial = (
        rho_plus * _mass_power(pdm, beta, rho_plus, zc) * (w[2:, 1:-1] - wc)
        - rho_minus * _mass_power(pdm, beta, rho_minus, zc) * (wc - w[:-2, 1:-1])
    ) / (rc * h_rho * h_rho)

    z_plus, z_minus = zc + h_z / 2.0, zc - h_z / 2.0
    axial = (
        _mass_power(pdm, beta, rc, z_plus) * (w[1:-1, 2:] - wc)
        - _mass_power(pdm, beta, rc, z_minus) * (wc - w[1:-1, :-2])
    ) / (h_z * h_z)

    azimuthal = -m * m * _mass_power(pdm, beta, rc, zc) * wc / (rc * rc)
    return radial + axial + azimuthal


def apply_hamiltonian(
    pdm: PdmSpec,
    params: AmbiguityParameters,
    potential: PotentialLike,
    psi: WavefunctionAssembly,
    rho_grid: Grid1D,
    z_grid: Grid1D,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(rho, z, psi, H psi) on the nodes one step inside the grid edges."""
    rho, z = np.meshgrid(rho_grid.points, z_grid.points, indexing="ij")
    values = psi.profile(rho, z)
    alpha, beta, gamma = params.as_tuple()
    h_rho, h_z = rho_grid.h, z_grid.h

    rc, zc = rho[1:-1, 1:-1], z[1:-1, 1:-1]
    kinetic = -0.25 * (
        _mass_power(pdm, alpha, rc, zc)
        * _apply_half(pdm, beta, gamma, psi.m, values, rho, z, h_rho, h_z)
        + _mass_power(pdm, gamma, rc, zc)
        * _apply_half(pdm, beta, alpha, psi.m, values, rho, z, h_rho, h_z)
    )
    psi_c = values[1:-1, 1:-1]
    return rc, zc, psi_c, kinetic + _potential_values(potential, rc, zc) * psi_c


def _weighted_norm(field, rho, h_rho, h_z) -> float:
    return float(np.sqrt(np.sum(np.square(field) * rho) * h_rho * h_z))


def _residual_on(pdm, params, potential, psi, rho_grid, z_grid) -> ResidualReport2D:
    rho, z, values, residual = apply_hamiltonian(
        pdm, params, potential, psi, rho_grid, z_grid
    )
    # apply_hamiltonian already removed one layer.
    cut = constants.RESIDUAL_BOUNDARY_LAYER - 1
    keep = (slice(cut, -cut or None), slice(cut, -cut or None))
    rho, z, values, residual = rho[keep], z[keep], values[keep], residual[keep]
    if residual.size == 0:
        raise GridError("Grid too small for the residual boundary layer")
    report = ResidualReport2D(
        h_rho=rho_grid.h,
        h_z=z_grid.h,
        residual_norm=_weighted_norm(residual, rho, rho_grid.h, z_grid.h),
        wavefunction_norm=_weighted_norm(values, rho, rho_grid.h, z_grid.h),
        convergence_order=None,
        rho=rho[:, 0],
        z=z[0, :],
        residual=residual,
    )
    logger.debug(
        f"Residual {report.residual_norm} on {rho_grid.n_points}x"
        f"{z_grid.n_points} nodes (h_rho={rho_grid.h}, h_z={z_grid.h})"
    )
    return report


def von_roos_residual(
    pdm: PdmSpec,
    params: AmbiguityParameters,
    potential: PotentialLike,
    psi: WavefunctionAssembly,
    grids,
    refine: bool = False,
) -> ResidualReport2D:
    """Discrete L2 norm (measure rho drho dz) of H Psi at E = 0.

    `potential` is an AssembledPotential, any callable V(rho, z), or None for
    V = 0. With `refine`, the computation is repeated with both spacings
    halved and the observed order log2(r(h)/r(h/2)) is reported.
    """
    rho_grid, z_grid = (_as_grid(grid) for grid in grids)
    if isinstance(potential, AssembledPotential) and potential.pdm != pdm:
        raise DomainError(
            f"Potential mass {potential.pdm} differs from the Hamiltonian's {pdm}"
        )
    coarse = _residual_on(pdm, params, potential, psi, rho_grid, z_grid)
    if not refine:
        return coarse
    fine = _residual_on(
        pdm, params, potential, psi, rho_grid.refined(), z_grid.refined()
    )
    order = convergence_order(coarse.residual_norm, fine.residual_norm)
    logger.info(f"Residual {coarse.residual_norm} -> {fine.residual_norm}, order {order}")
    return ResidualReport2D(
        h_rho=coarse.h_rho,
        h_z=coarse.h_z,
        residual_norm=coarse.residual_norm,
        wavefunction_norm=coarse.wavefunction_norm,
        convergence_order=order,
        rho=coarse.rho,
        z=coarse.z,
        residual=coarse.residual,
        refined=fine,
    )


def build_case_wavefunction(
    potential: AssembledPotential,
    params: AmbiguityParameters,
    qn: QuantumNumbers,
) -> WavefunctionAssembly:
    """Assembles Psi from the analytic radial and axial eigenfunctions.

    The oscillator-oscillator case takes the axial ladder on the mirrored
    branch, so its Psi grows along z. Raises SeparationMismatchError when the
    couplings do not satisfy the quantization constraint.
    """
    qn = qn.validate()
    radial = radial_problem(potential, params, qn.m)
    axial = axial_problem(potential, params)
    radial_fn = problem_eigenfunction(radial, qn.n_rho)
    axial_fn = problem_eigenfunction(
        axial, qn.n_z, mirrored=potential.case.mirrored_axial
    )
    return assemble_wavefunction(
        potential,
        params,
        qn,
        SeparatedSolution(radial_fn, radial.kz_squared(radial_fn.eigenvalue)),
        SeparatedSolution(axial_fn, axial.kz_squared(axial_fn.eigenvalue)),
    )


def cylindrical_norm(psi: WavefunctionAssembly, rho_grid, z_grid) -> float:
    """Integral of |Psi|^2 rho drho dphi dz over the grid box."""
    rho_grid, z_grid = _as_grid(rho_grid), _as_grid(z_grid)
    rho = np.concatenate([[0.0], rho_grid.points])
    z = np.concatenate([[0.0], z_grid.points])
    r, zz = np.meshgrid(rho_grid.points, z_grid.points, indexing="ij")
    density = np.zeros((len(rho), len(z)))
    # The axis and the wall carry zero weight.
    density[1:, 1:] = np.square(psi.profile(r, zz)) * r
    return float(integrate.trapezoid(integrate.trapezoid(density, z, axis=1), rho))
