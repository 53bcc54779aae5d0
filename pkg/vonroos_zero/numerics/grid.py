#!/usr/bin/env python3

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from vonroos_zero import constants
from vonroos_zero.cases import PotentialKind
from vonroos_zero.errors import GridError


@dataclass(frozen=True)
class Grid1D:
    """Uniform interior nodes x_k = k h, k = 1..n_points, walls at 0 and x_max."""

    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_max > 0:
            raise GridError(f"x_max must be positive, got {self.x_max}")
        if self.n_points < constants.MIN_GRID_POINTS:
            raise GridError(
                f"Grid has {self.n_points} interior points; at least "
                f"{constants.MIN_GRID_POINTS} are required"
            )

    @classmethod
    def uniform(cls, x_max: float, h: float = constants.DEFAULT_GRID_SPACING):
        if not h > 0:
            raise GridError(f"Grid spacing must be positive, got {h}")
        intervals = int(round(x_max / h))
        return cls(x_max=float(x_max), n_points=intervals - 1)

    @classmethod
    def from_points(cls, points) -> "Grid1D":
        """Rebuilds a grid from its interior nodes; they must be k h, k = 1..n."""
        points = np.asarray(points, dtype=float)
        if points.ndim != 1 or len(points) < 2:
            raise GridError("Grid points must be a one-dimensional array")
        h = points[1] - points[0]
        expected = h * np.arange(1, len(points) + 1)
        if not np.allclose(points, expected, rtol=1e-9, atol=1e-12 * h):
            raise GridError("Only uniform grids starting at x = h are supported")
        return cls(x_max=h * (len(points) + 1), n_points=len(points))

    @classmethod
    def default_for(
        cls,
        kind: PotentialKind,
        l_abs: float,
        spectral_coupling: float,
        count: int,
        h: Optional[float] = None,
    ) -> "Grid1D":
        return cls.uniform(
            default_extent(kind, l_abs, spectral_coupling, count),
            h if h is not None else constants.DEFAULT_GRID_SPACING,
        )

    @property
    def h(self) -> float:
        return self.x_max / (self.n_points + 1)

    @property
    def x_min(self) -> float:
        """First interior node, one spacing from the Dirichlet wall."""
        return self.h

    @property
    def points(self) -> np.ndarray:
        return self.x_min * np.arange(1, self.n_points + 1)

    @property
    def max_modes(self) -> int:
        return self.n_points // constants.POINTS_PER_MODE

    def refined(self) -> "Grid1D":
        """Same extent, half the spacing."""
        return Grid1D(x_max=self.x_max, n_points=2 * (self.n_points + 1) - 1)


def default_extent(
    kind: PotentialKind, l_abs: float, spectral_coupling: float, count: int
) -> float:
    """Domain length well beyond the turning point of the `count`-th level."""
    if kind is PotentialKind.HarmonicOscillator:
        return constants.HO_EXTENT_FACTOR * math.sqrt(
            (2 * count + l_abs + 1.0) / spectral_coupling
        )
    if kind is PotentialKind.Coulomb:
        return constants.COULOMB_EXTENT_FACTOR * (count + l_abs + 1.0) / spectral_coupling
    raise GridError(f"No default extent for {kind}")
