#!/usr/bin/env python3

# Canonical triples must satisfy alpha + beta + gamma = -1 to this tolerance.
VON_ROOS_TOLERANCE = 1e-12

# Roots returned by the family solver satisfy |residual| below this.
ROOT_TOLERANCE = 1e-12
ROOT_SCAN_DIVISIONS = 1024
# Roots closer than this are reported once.
ROOT_DEDUP_DISTANCE = 1e-9

# Radial and axial separation constants must agree to this (relative) level.
SEPARATION_MATCH_TOLERANCE = 1e-9

MIN_GRID_POINTS = 200
DEFAULT_GRID_SPACING = 2e-3
# A grid of N points resolves at most N // POINTS_PER_MODE eigenmodes.
POINTS_PER_MODE = 10
# Points used to fix analytic eigenfunction normalization by quadrature.
NORMALIZATION_POINTS = 20000

# Default domain multipliers for the half-line eigenproblems.
HO_EXTENT_FACTOR = 6.0
COULOMB_EXTENT_FACTOR = 40.0

# Couplings used when the caller gives none.
DEFAULT_MASS_SCALE = 2.0
DEFAULT_A_SQ = 4.0
DEFAULT_ATILDE_SQ = 4.0
DEFAULT_A_TILDE = 1.0
DEFAULT_B_TILDE = 1.0

# Boundary layer (in nodes) dropped from the 2D residual norm.
RESIDUAL_BOUNDARY_LAYER = 2

FLOAT_FORMAT = ".17g"

CONSTRAINT_COLUMNS = [
    "case",
    "j",
    "n_rho",
    "n_z",
    "m",
    "alpha",
    "beta",
    "gamma",
    "zeta",
    "F",
    "lhs",
    "rhs",
    "residual",
    "admissible",
]

# Box and spacing for 2D residuals and (rho, z) field dumps.
DEFAULT_RHO_MAX = 5.0
DEFAULT_Z_MAX = 2.5
DEFAULT_FIELD_SPACING = 1e-2
