#!/usr/bin/env python3

from vonroos_zero.numerics.eigensolver import (  # noqa
    EigenResult,
    align_sign,
    eigen_solve,
    inner_product,
    norm_check,
)
from vonroos_zero.numerics.grid import Grid1D, default_extent  # noqa
from vonroos_zero.numerics.special import (  # noqa
    AnalyticEigenfunction,
    analytic_eigenfunction,
    laguerre,
    problem_eigenfunction,
)
from vonroos_zero.numerics.von_roos import (  # noqa
    ResidualReport2D,
    apply_hamiltonian,
    build_case_wavefunction,
    convergence_order,
    cylindrical_norm,
    von_roos_residual,
)
