#!/usr/bin/env python3

"""Analytic half-line spectra and the quantization constraints they imply.

Matching the radial separation constant against the axial one ties the
ordering parameters to the quantum numbers. Each constraint is reported as
(-1/4 + bracket^2) - F(alpha, beta, gamma, j), which vanishes when the axial
barrier index |L| equals the bracket.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np
from scipy import optimize
from tqdm import tqdm
from vonroos_zero import ambiguity, constants
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.cases import BaseCase, CaseCouplings, PotentialKind, build_case
from vonroos_zero.errors import DomainError, InadmissibleError, InvalidBracketError
from vonroos_zero.separation import (
    QuantumNumbers,
    effective_ell,
    effective_ell_radicand,
)


logger = logging.getLogger(__name__)


class SpectrumConvention(Enum):
    # Coulomb denominator n + |L| + 1, as printed.
    AsPublished = "published"
    # Coulomb denominator n + |L| + 1/2, reproduced by the eigensolver.
    OracleCalibrated = "oracle"


class ConstraintMode(Enum):
    PublishedFormula = "published"
    RederivedMatching = "rederived"


# Cases whose radial and axial eigenvalues can share one real k_z^2.
_SIGN_COMPATIBLE_CASES = frozenset({2, 3})


def coulomb_offset(convention: SpectrumConvention) -> float:
    if convention is SpectrumConvention.AsPublished:
        return 1.0
    return 0.5


def ho_level(omega: float, l_abs: float, n: int) -> float:
    """Positive level omega (2n + |L| + 1) of -u'' + (L^2 - 1/4)/x^2 + omega^2 x^2/4."""
    assert omega > 0, f"Oscillator frequency must be positive, got {omega}"
    return omega * (2 * n + l_abs + 1.0)


def coulomb_kz(
    coupling: float,
    l_abs: float,
    n: int,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
) -> float:
    """kappa of -u'' + (L^2 - 1/4)/x^2 - 2 B/x; the bound energy is -kappa^2."""
    assert coupling > 0, f"Coulomb coupling must be positive, got {coupling}"
    return coupling / (n + l_abs + coulomb_offset(convention))


def problem_level(problem, n: int, convention: SpectrumConvention) -> float:
    """Analytic n-th eigenvalue E of an EffectiveProblem."""
    if problem.potential_kind is PotentialKind.HarmonicOscillator:
        return ho_level(problem.spectral_coupling, problem.l_abs, n)
    if problem.potential_kind is PotentialKind.Coulomb:
        return -coulomb_kz(problem.spectral_coupling, problem.l_abs, n, convention) ** 2
    raise DomainError("The free half-line problem has no bound states")


class Level(NamedTuple):
    n: int
    energy: float
    kappa: Optional[float]


def analytic_levels(
    kind: PotentialKind,
    l_abs: float,
    coupling: float,
    levels: int,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
) -> List[Level]:
    """Lowest `levels` eigenvalues; `coupling` is omega for HO and B for Coulomb."""
    result = []
    for n in range(levels):
        if kind is PotentialKind.HarmonicOscillator:
            result.append(Level(n, ho_level(coupling, l_abs, n), None))
        elif kind is PotentialKind.Coulomb:
            kappa = coulomb_kz(coupling, l_abs, n, convention)
            result.append(Level(n, -kappa * kappa, kappa))
        else:
            raise DomainError(f"No analytic spectrum for {kind}")
    return result


@dataclass(frozen=True)
class ConstraintReport:
    residual: float
    lhs: float
    rhs: float
    bracket: Optional[float]
    ell_admissible: bool
    f_admissible: bool
    sign_compatible: bool
    case_id: int
    qn: QuantumNumbers
    j: float
    params: AmbiguityParameters
    mode: ConstraintMode = ConstraintMode.PublishedFormula

    @property
    def admissible(self) -> bool:
        return self.ell_admissible and self.f_admissible

    @property
    def zeta(self) -> float:
        return ambiguity.zeta(self.params)

    def to_row(self, extended: bool = False) -> dict:
        row = {
            "case": self.case_id,
            "j": self.j,
            "n_rho": self.qn.n_rho,
            "n_z": self.qn.n_z,
            "m": self.qn.m,
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "gamma": self.params.gamma,
            "zeta": self.zeta,
            "F": self.rhs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "admissible": self.admissible,
        }
        assert list(row) == constants.CONSTRAINT_COLUMNS
        if extended:
            row.update(
                bracket=self.bracket,
                ell_admissible=self.ell_admissible,
                f_admissible=self.f_admissible,
                sign_compatible=self.sign_compatible,
            )
        return row


def _abs_sqrt(value: float, name: str) -> float:
    if value == 0:
        raise DomainError(f"Coupling {name} must be non-zero")
    return math.sqrt(abs(value))


def _validate_couplings(case: BaseCase, couplings: CaseCouplings):
    for kind, strength, name in (
        (case.radial_kind, couplings.A_tilde, "A_tilde"),
        (case.axial_kind, couplings.B_tilde, "B_tilde"),
    ):
        if kind is PotentialKind.Coulomb and not strength > 0:
            raise DomainError(f"Coulomb coupling {name} must be positive")
    # A mixed case divides by the oscillator frequency.
    if case.radial_kind is not case.axial_kind:
        if case.radial_kind is PotentialKind.HarmonicOscillator:
            _abs_sqrt(couplings.a_sq, "a_sq")
        else:
            _abs_sqrt(couplings.atilde_sq, "atilde_sq")


def _rederived_bracket(
    case: BaseCase,
    ell_abs: float,
    qn: QuantumNumbers,
    couplings: CaseCouplings,
    convention: SpectrumConvention,
) -> float:
    """|L| demanded by equating the radial and axial k_z^2 ladders."""
    delta = coulomb_offset(convention)
    n_rho, n_z = qn.n_rho, qn.n_z
    if case.case_id == 1:
        # Mirrored branch: both ladders share omega, so the level indices match.
        return 2.0 * (n_rho - n_z) + ell_abs
    if case.case_id == 2:
        kappa_rho = couplings.A_tilde / (n_rho + ell_abs + delta)
        return (
            kappa_rho ** 2 / _abs_sqrt(couplings.atilde_sq, "atilde_sq")
            - 2.0 * n_z
            - 1.0
        )
    if case.case_id == 3:
        omega_rho = _abs_sqrt(couplings.a_sq, "a_sq")
        kappa_z = math.sqrt(omega_rho * (2.0 * n_rho + ell_abs + 1.0))
        return couplings.B_tilde / kappa_z - n_z - delta
    return couplings.B_tilde / couplings.A_tilde * (n_rho + ell_abs + delta) - n_z - delta


def _ell_radicand(
    case: BaseCase, m: int, zeta_minus_beta: float, mode: ConstraintMode
) -> float:
    if mode is ConstraintMode.PublishedFormula:
        return case.published_radicand(m, zeta_minus_beta)
    return effective_ell_radicand(case.upsilon, m, zeta_minus_beta)


def constraint_residual(
    case_id: int,
    params: AmbiguityParameters,
    j: float,
    qn: QuantumNumbers,
    couplings: Optional[CaseCouplings] = None,
    mode: ConstraintMode = ConstraintMode.PublishedFormula,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
) -> ConstraintReport:
    case = build_case(case_id)
    qn = QuantumNumbers(*qn).validate()
    couplings = couplings if couplings is not None else CaseCouplings()
    _validate_couplings(case, couplings)

    zmb = ambiguity.zeta_minus_beta(params)
    f_value = ambiguity.barrier_f(params, j)
    if mode is ConstraintMode.PublishedFormula:
        bracket, _ = case.published_bracket(qn.n_rho, qn.n_z, qn.m, zmb, couplings)
    else:
        ell_abs = effective_ell(case.upsilon, qn.m, zmb)
        bracket = (
            None
            if ell_abs is None
            else _rederived_bracket(case, ell_abs, qn, couplings, convention)
        )

    lhs = math.inf if bracket is None else -0.25 + bracket * bracket
    return ConstraintReport(
        residual=lhs - f_value,
        lhs=lhs,
        rhs=f_value,
        bracket=bracket,
        ell_admissible=bracket is not None,
        f_admissible=f_value + 0.25 >= 0.0,
        sign_compatible=case.case_id in _SIGN_COMPATIBLE_CASES,
        case_id=case.case_id,
        qn=qn,
        j=j,
        params=params,
        mode=mode,
    )


def case1_j0_target(qn: QuantumNumbers) -> float:
    """zeta - beta required by the oscillator-oscillator constraint at j = 0."""
    shift = 2.0 * qn.n_z - 2.0 * qn.n_rho + 0.5
    return 0.5 * (qn.m * qn.m + 3.0 - shift * shift)


class FamilyKind(Enum):
    AlphaEqualsGamma = "alpha-eq-gamma"
    FixedBeta = "fixed-beta"


@dataclass(frozen=True)
class Family:
    """One-parameter slice of the von Roos plane, parameterized by alpha."""

    kind: FamilyKind
    beta: Optional[float] = None

    def __post_init__(self):
        if (self.kind is FamilyKind.FixedBeta) != (self.beta is not None):
            raise ValueError("A fixed-beta family needs exactly one beta value")
        if self.beta is not None and not math.isfinite(self.beta):
            raise ValueError(f"Family beta must be finite, got {self.beta!r}")

    @classmethod
    def parse(cls, text: str) -> "Family":
        """'alpha-eq-gamma' or 'fixed-beta=B'."""
        name, _, value = text.strip().lower().partition("=")
        if name == FamilyKind.AlphaEqualsGamma.value and not value:
            return cls(FamilyKind.AlphaEqualsGamma)
        if name == FamilyKind.FixedBeta.value and value:
            return cls(FamilyKind.FixedBeta, float(value))
        raise ValueError(
            f"Unknown family {text!r}; expected alpha-eq-gamma or fixed-beta=B"
        )

    def params_at(self, alpha: float) -> AmbiguityParameters:
        if self.kind is FamilyKind.AlphaEqualsGamma:
            return AmbiguityParameters.from_alpha_gamma(alpha, alpha)
        return AmbiguityParameters(alpha, self.beta, -1.0 - alpha - self.beta)

    def __str__(self):
        if self.kind is FamilyKind.AlphaEqualsGamma:
            return self.kind.value
        return f"{self.kind.value}={self.beta!r}"


def solve_family(
    case_id: int,
    family: Family,
    j: float,
    qn: QuantumNumbers,
    couplings: Optional[CaseCouplings] = None,
    bracket: Sequence[float] = (-1.0, 0.0),
    tolerance: float = constants.ROOT_TOLERANCE,
    mode: ConstraintMode = ConstraintMode.PublishedFormula,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
    divisions: int = constants.ROOT_SCAN_DIVISIONS,
) -> List[AmbiguityParameters]:
    """All roots of constraint_residual along `family` with alpha in `bracket`."""
    lo, hi = (float(bound) for bound in bracket)
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise InvalidBracketError(f"Invalid bracket [{lo}, {hi}]")
    if not tolerance > 0:
        raise InvalidBracketError(f"Tolerance must be positive, got {tolerance}")
    case = build_case(case_id)

    def residual(alpha):
        return constraint_residual(
            case_id, family.params_at(alpha), j, qn, couplings, mode, convention
        ).residual

    def admissibility_margin(alpha):
        params = family.params_at(alpha)
        ell = _ell_radicand(case, qn.m, ambiguity.zeta_minus_beta(params), mode)
        return min(ell, ambiguity.barrier_f(params, j) + 0.25)

    samples = np.linspace(lo, hi, divisions + 1)
    margins = np.array([admissibility_margin(alpha) for alpha in samples])
    breakpoints = []
    for a, b, ma, mb in zip(samples[:-1], samples[1:], margins[:-1], margins[1:]):
        if ma * mb < 0:
            edge = optimize.brentq(admissibility_margin, a, b, xtol=1e-15)
            inside = b if mb > 0 else a
            step = math.copysign(max(abs(edge), 1.0) * 1e-13, inside - edge)
            breakpoints.extend([edge, edge + step])
    points = np.unique(np.concatenate([samples, breakpoints]))
    points = points[(points >= lo) & (points <= hi)]
    values = np.array([residual(alpha) for alpha in points])
    logger.debug(
        f"Scanning {family} on [{lo}, {hi}] with {len(points)} points, "
        f"{len(breakpoints) // 2} admissibility edges"
    )

    roots = [alpha for alpha, value in zip(points, values) if abs(value) < tolerance]
    for a, b, ra, rb in zip(points[:-1], points[1:], values[:-1], values[1:]):
        if not (math.isfinite(ra) and math.isfinite(rb)) or ra * rb >= 0:
            continue
        root = optimize.brentq(
            residual, a, b, xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200
        )
        if abs(residual(root)) < tolerance:
            roots.append(root)
        else:
            logger.warning(
                f"Dropped sign change near alpha={root!r}: residual "
                f"{residual(root)!r} is not below {tolerance}"
            )

    # A touching root leaves only a dip in |residual| between scan points.
    magnitudes = np.abs(values)
    for i in range(1, len(points) - 1):
        left, here, right = values[i - 1 : i + 2]
        if not np.all(np.isfinite([left, here, right])):
            continue
        if left * here <= 0 or here * right <= 0:
            continue
        if not magnitudes[i - 1] > magnitudes[i] <= magnitudes[i + 1]:
            continue
        dip = optimize.minimize_scalar(
            lambda alpha: abs(residual(alpha)),
            bounds=(points[i - 1], points[i + 1]),
            method="bounded",
            options={"xatol": 1e-14},
        )
        if abs(residual(dip.x)) < tolerance:
            roots.append(dip.x)

    unique = []
    for root in sorted(roots):
        if not unique or root - unique[-1] > constants.ROOT_DEDUP_DISTANCE:
            unique.append(float(root))
    logger.info(f"Found {len(unique)} roots of case {case_id} along {family}")
    return [family.params_at(alpha) for alpha in unique]


def scan(
    case_id: int,
    params: AmbiguityParameters,
    j: float,
    n_rho_values: Iterable[int],
    n_z_values: Iterable[int],
    m_values: Iterable[int],
    couplings: Optional[CaseCouplings] = None,
    mode: ConstraintMode = ConstraintMode.PublishedFormula,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
    progress: bool = False,
) -> List[ConstraintReport]:
    """One report per (n_rho, n_z, m), in lexicographic order."""
    tuples = list(itertools.product(n_rho_values, n_z_values, m_values))
    logger.debug(f"Scanning {len(tuples)} quantum-number tuples")
    return [
        constraint_residual(
            case_id, params, j, QuantumNumbers(*qn), couplings, mode, convention
        )
        for qn in tqdm(tuples, disable=not progress, desc="scan")
    ]


def sweep_plane(
    case_id: int,
    j: float,
    qn: QuantumNumbers,
    alpha_values: Iterable[float],
    gamma_values: Iterable[float],
    couplings: Optional[CaseCouplings] = None,
    mode: ConstraintMode = ConstraintMode.PublishedFormula,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
    progress: bool = False,
) -> List[ConstraintReport]:
    """Residuals over an (alpha, gamma) grid with beta = -1 - alpha - gamma."""
    pairs = list(itertools.product(alpha_values, gamma_values))
    return [
        constraint_residual(
            case_id,
            AmbiguityParameters.from_alpha_gamma(alpha, gamma),
            j,
            qn,
            couplings,
            mode,
            convention,
        )
        for alpha, gamma in tqdm(pairs, disable=not progress, desc="atlas")
    ]


def matching_coupling(
    case_id: int,
    params: AmbiguityParameters,
    j: float,
    qn: QuantumNumbers,
    couplings: Optional[CaseCouplings] = None,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
) -> float:
    """Free coupling that makes the rederived constraint hold exactly.

    Returns A~ for case 2 (a~^2 held fixed) and B~ for cases 3 and 4
    (a^2 resp. A~ held fixed).
    """
    case = build_case(case_id)
    qn = QuantumNumbers(*qn).validate()
    couplings = couplings if couplings is not None else CaseCouplings()
    if case.case_id == 1:
        raise DomainError("Case 1 has no free coupling to match")
    ell_abs = effective_ell(case.upsilon, qn.m, ambiguity.zeta_minus_beta(params))
    if ell_abs is None:
        raise InadmissibleError(
            f"Radial barrier is inadmissible for m={qn.m}", reason="ell_radicand"
        )
    strength = ambiguity.script_l(ambiguity.barrier_f(params, j))
    if not strength.admissible:
        raise InadmissibleError(
            f"Axial barrier is inadmissible at j={j}", reason="f_radicand"
        )
    l_abs = strength.script_l_abs
    delta = coulomb_offset(convention)

    if case.case_id == 2:
        omega_z = _abs_sqrt(couplings.atilde_sq, "atilde_sq")
        kappa = math.sqrt(omega_z * (2.0 * qn.n_z + l_abs + 1.0))
        return kappa * (qn.n_rho + ell_abs + delta)
    if case.case_id == 3:
        omega_rho = _abs_sqrt(couplings.a_sq, "a_sq")
        kappa = math.sqrt(omega_rho * (2.0 * qn.n_rho + ell_abs + 1.0))
        return kappa * (qn.n_z + l_abs + delta)
    return couplings.A_tilde * (qn.n_z + l_abs + delta) / (qn.n_rho + ell_abs + delta)


def with_matching_coupling(
    case_id: int,
    params: AmbiguityParameters,
    j: float,
    qn: QuantumNumbers,
    couplings: Optional[CaseCouplings] = None,
    convention: SpectrumConvention = SpectrumConvention.OracleCalibrated,
) -> CaseCouplings:
    couplings = couplings if couplings is not None else CaseCouplings()
    value = matching_coupling(case_id, params, j, qn, couplings, convention)
    if int(case_id) == 2:
        return couplings._replace(A_tilde=value)
    return couplings._replace(B_tilde=value)
