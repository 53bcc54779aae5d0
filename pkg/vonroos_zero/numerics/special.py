#!/usr/bin/env python3

"""Generalized Laguerre polynomials and the analytic half-line eigenfunctions."""

from dataclasses import dataclass, replace

import numpy as np
from scipy import integrate
from vonroos_zero import constants
from vonroos_zero.cases import PotentialKind
from vonroos_zero.numerics.grid import default_extent
from vonroos_zero.spectra import SpectrumConvention, coulomb_kz, ho_level


def laguerre(n: int, a: float, x):
    """L_n^(a)(x) by the three-term recurrence; works elementwise on arrays."""
    assert n >= 0, f"Laguerre degree must be non-negative, got {n}"
    x = np.asarray(x, dtype=float)
    previous = np.ones_like(x)
    if n == 0:
        return previous if previous.ndim else float(previous)
    current = 1.0 + a - x
    for k in range(1, n):
        previous, current = (
            current,
            ((2 * k + 1 + a - x) * current - (k + a) * previous) / (k + 1),
        )
    return current if current.ndim else float(current)


@dataclass(frozen=True)
class AnalyticEigenfunction:
    """n-th eigenfunction of -u'' + (L^2 - 1/4)/x^2 + V(x) on the half-line.

    HO (V = omega^2 x^2/4):  x^(L+1/2) exp(-omega x^2/4) L_n^(L)(omega x^2/2).
    Coulomb (V = -2B/x):    x^(l+1) exp(-kappa x) L_n^(2l+1)(2 kappa x),
    l = L - 1/2, kappa = B/(n + L + 1/2).
    A mirrored oscillator is the omega -> -omega continuation; it grows at
    large x, has eigenvalue -omega (2n + L + 1) and is left unnormalized.
    """

    kind: PotentialKind
    n: int
    l_abs: float
    coupling: float
    mirrored: bool = False
    normalization: float = 1.0

    @property
    def kappa(self) -> float:
        assert self.kind is PotentialKind.Coulomb
        return coulomb_kz(
            self.coupling, self.l_abs, self.n, SpectrumConvention.OracleCalibrated
        )

    @property
    def eigenvalue(self) -> float:
        if self.kind is PotentialKind.HarmonicOscillator:
            level = ho_level(self.coupling, self.l_abs, self.n)
            return -level if self.mirrored else level
        return -self.kappa ** 2

    def shape(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind is PotentialKind.HarmonicOscillator:
            omega = -self.coupling if self.mirrored else self.coupling
            return (
                np.power(x, self.l_abs + 0.5)
                * np.exp(-omega * x * x / 4.0)
                * laguerre(self.n, self.l_abs, omega * x * x / 2.0)
            )
        kappa = self.kappa
        l = self.l_abs - 0.5
        return (
            np.power(x, l + 1.0)
            * np.exp(-kappa * x)
            * laguerre(self.n, 2.0 * l + 1.0, 2.0 * kappa * x)
        )

    def __call__(self, x):
        return self.normalization * self.shape(x)


def analytic_eigenfunction(
    kind: PotentialKind,
    n: int,
    l_abs: float,
    coupling: float,
    mirrored: bool = False,
) -> AnalyticEigenfunction:
    """`coupling` is omega for HO and B for Coulomb."""
    assert coupling > 0, f"Coupling must be positive, got {coupling}"
    assert kind is not PotentialKind.Free, "The free problem has no eigenfunctions"
    assert not (
        mirrored and kind is PotentialKind.Coulomb
    ), "Only the oscillator has a mirrored branch"
    function = AnalyticEigenfunction(kind, n, l_abs, coupling, mirrored)
    if mirrored:
        return function

    x = np.linspace(
        0.0,
        default_extent(kind, l_abs, coupling, n + 1),
        constants.NORMALIZATION_POINTS,
    )
    norm = integrate.trapezoid(np.square(function.shape(x)), x)
    return replace(function, normalization=1.0 / np.sqrt(norm))


def problem_eigenfunction(problem, n: int, mirrored: bool = False):
    """Analytic eigenfunction for an EffectiveProblem."""
    return analytic_eigenfunction(
        problem.potential_kind,
        n,
        problem.l_abs,
        problem.spectral_coupling,
        mirrored=mirrored,
    )
