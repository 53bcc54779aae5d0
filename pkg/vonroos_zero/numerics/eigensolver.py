#!/usr/bin/env python3

import logging
from typing import NamedTuple

import numpy as np
from scipy import integrate, linalg
from vonroos_zero.errors import EigenSolverError, GridError
from vonroos_zero.numerics.grid import Grid1D
from vonroos_zero.separation import EffectiveProblem


logger = logging.getLogger(__name__)


class EigenResult(NamedTuple):
    eigenvalues: np.ndarray
    # Shape (count, grid.n_points); unit norm under norm_check.
    eigenfunctions: np.ndarray
    grid: Grid1D


def norm_check(u, grid: Grid1D) -> float:
    """Trapezoidal integral of |u|^2 over [0, x_max], u vanishing at both walls."""
    padded = np.concatenate([[0.0], np.abs(np.asarray(u)), [0.0]])
    return float(integrate.trapezoid(np.square(padded), dx=grid.h))


def inner_product(u, v, grid: Grid1D) -> float:
    return float(grid.h * np.dot(u, v))


def align_sign(u: np.ndarray) -> np.ndarray:
    """Flips u so that its first significant lobe is positive."""
    threshold = 1e-3 * np.max(np.abs(u))
    first = int(np.argmax(np.abs(u) > threshold))
    return -u if u[first] < 0 else u


def eigen_solve(problem: EffectiveProblem, count: int, grid: Grid1D) -> EigenResult:
    """Lowest `count` eigenpairs of -u'' + C/x^2 + V(x) with Dirichlet walls.

    Second-order central differences on the interior nodes give a symmetric
    tridiagonal matrix; LAPACK bisection on Sturm sequences selects the
    eigenvalues by index and inverse iteration returns the vectors.
    """
    if count < 1:
        raise GridError(f"At least one eigenpair must be requested, got {count}")
    if count > grid.max_modes:
        raise GridError(
            f"{count} modes requested but a grid of {grid.n_points} points "
            f"resolves at most {grid.max_modes}"
        )
    x = grid.points
    h2 = grid.h * grid.h
    diagonal = 2.0 / h2 + problem.barrier_coefficient / (x * x) + problem.potential(x)
    off_diagonal = np.full(grid.n_points - 1, -1.0 / h2)
    logger.debug(
        f"Solving {problem.potential_kind.name} problem for {count} modes on "
        f"{grid.n_points} points, h = {grid.h}"
    )
    try:
        values, vectors = linalg.eigh_tridiagonal(
            diagonal,
            off_diagonal,
            select="i",
            select_range=(0, count - 1),
            lapack_driver="stebz",
        )
    except (linalg.LinAlgError, ValueError) as e:
        raise EigenSolverError(f"Tridiagonal eigensolve failed: {e}") from e
    if np.any(np.diff(values) <= 0):
        raise EigenSolverError(f"Eigenvalues are not strictly ascending: {values}")

    functions = []
    for vector in vectors.T:
        vector = vector / np.sqrt(norm_check(vector, grid))
        functions.append(align_sign(vector))
    return EigenResult(
        eigenvalues=values, eigenfunctions=np.array(functions), grid=grid
    )
