#!/usr/bin/env python3

import io
import os
import tempfile
from typing import Tuple

from vonroos_zero import ambiguity, cli
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.cases import CaseCouplings
from vonroos_zero.numerics import Grid1D, build_case_wavefunction
from vonroos_zero.separation import AssembledPotential, QuantumNumbers


GROUND = QuantumNumbers(0, 0, 0)
MM = ambiguity.named_set("mm")
BDD = ambiguity.named_set("bdd")

# Oscillator-oscillator constraint violated by shifting beta; gamma keeps
# alpha + beta + gamma = -1.
MM_PERTURBED = AmbiguityParameters(-0.25, -0.4, -0.35)


def make_temp_file():
    with tempfile.NamedTemporaryFile(mode="w", delete=False) as f:
        return f.name


def run_cli(argv) -> Tuple[int, str, str]:
    stdout, stderr = io.StringIO(), io.StringIO()
    code = cli.run(argv, stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def residual_grids(h=0.01, rho_max=5.0, z_max=2.5):
    return Grid1D.uniform(rho_max, h), Grid1D.uniform(z_max, h)


def case1_mm_state(params=MM, qn=GROUND, couplings=None):
    potential = AssembledPotential.create(1, couplings or CaseCouplings(), j=0.0)
    return potential, build_case_wavefunction(potential, params, qn)


def remove_quietly(path):
    if os.path.exists(path):
        os.remove(path)
