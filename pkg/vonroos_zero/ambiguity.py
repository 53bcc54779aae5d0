#!/usr/bin/env python3

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Union

from vonroos_zero import constants
from vonroos_zero.errors import UnknownParameterSetError, VonRoosConstraintError


@dataclass(frozen=True)
class AmbiguityParameters:
    """Ordering exponents (alpha, beta, gamma) of the von Roos kinetic operator.

    The canonical constructor enforces alpha + beta + gamma = -1. Use
    `AmbiguityParameters.relaxed` for exploratory values that skip the check;
    those carry canonical=False.
    """

    alpha: float
    beta: float
    gamma: float
    canonical: bool = True

    def __post_init__(self):
        # NaN defects fail the comparison and are rejected.
        defect = abs(self.constraint_defect)
        if self.canonical and not defect <= constants.VON_ROOS_TOLERANCE:
            raise VonRoosConstraintError(
                f"alpha + beta + gamma = {self.alpha + self.beta + self.gamma!r} "
                f"for ({self.alpha}, {self.beta}, {self.gamma}); expected -1"
            )

    @classmethod
    def relaxed(cls, alpha: float, beta: float, gamma: float) -> "AmbiguityParameters":
        return cls(alpha, beta, gamma, canonical=False)

    @classmethod
    def from_alpha_gamma(cls, alpha: float, gamma: float) -> "AmbiguityParameters":
        return cls(alpha, -1.0 - alpha - gamma, gamma)

    @property
    def constraint_defect(self) -> float:
        return self.alpha + self.beta + self.gamma + 1.0

    def swapped(self) -> "AmbiguityParameters":
        """alpha <-> gamma; the Hamiltonian is symmetric under this swap."""
        return AmbiguityParameters(
            self.gamma, self.beta, self.alpha, canonical=self.canonical
        )

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma)


class NamedSet(Enum):
    BenDanielDuke = "bdd"
    ZhuKroemer = "zk"
    MustafaMazharimousavi = "mm"
    GoraWilliams = "gw"
    LiKuhn = "lk"


_NAMED_SETS = {
    NamedSet.BenDanielDuke: AmbiguityParameters(0.0, -1.0, 0.0),
    NamedSet.ZhuKroemer: AmbiguityParameters(-0.5, 0.0, -0.5),
    NamedSet.MustafaMazharimousavi: AmbiguityParameters(-0.25, -0.5, -0.25),
    NamedSet.GoraWilliams: AmbiguityParameters(-1.0, 0.0, 0.0),
    NamedSet.LiKuhn: AmbiguityParameters(0.0, -0.5, -0.5),
}


def parse_named_set(name: Union[str, NamedSet]) -> NamedSet:
    """Accepts the enum, its short code ("mm") or its name, case-insensitive."""
    if isinstance(name, NamedSet):
        return name
    key = str(name).strip().lower().replace("-", "").replace("_", "")
    for named in NamedSet:
        if key in (named.value, named.name.lower()):
            return named
    raise UnknownParameterSetError(
        f"Unknown parameter set {name!r}; expected one of "
        f"{', '.join(named.value for named in NamedSet)}"
    )


def named_set(name: Union[str, NamedSet]) -> AmbiguityParameters:
    return _NAMED_SETS[parse_named_set(name)]


class BarrierStrength(NamedTuple):
    f_value: float
    # |L|; None marks the fall-to-center regime F + 1/4 < 0.
    script_l_abs: Optional[float]

    @property
    def admissible(self) -> bool:
        return self.script_l_abs is not None


def zeta(params: AmbiguityParameters) -> float:
    alpha, beta, gamma = params.as_tuple()
    return alpha * (alpha - 1.0) + gamma * (gamma - 1.0) - beta * (beta + 1.0)


def zeta_minus_beta(params: AmbiguityParameters) -> float:
    return zeta(params) - params.beta


def barrier_f(params: AmbiguityParameters, j: float) -> float:
    """Inverse-square coupling F(alpha, beta, gamma, j) of the axial equation."""
    z = zeta(params)
    return -j * (j * (2.0 * z - 3.0) / 4.0 - (j - 1.0) * params.beta / 2.0)


def script_l(f_value: float) -> BarrierStrength:
    # Only |L| enters any spectrum, so the sign branch is dropped.
    radicand = f_value + 0.25
    if radicand < 0.0:
        return BarrierStrength(f_value=f_value, script_l_abs=None)
    return BarrierStrength(f_value=f_value, script_l_abs=math.sqrt(radicand))
