#!/usr/bin/env python3

import math

from vonroos_zero import ambiguity, constants
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.cases import CASE_REGISTRY, CaseCouplings, PotentialKind
from vonroos_zero.errors import UsageError
from vonroos_zero.output import OutputFormat
from vonroos_zero.separation import QuantumNumbers
from vonroos_zero.spectra import ConstraintMode, Family, SpectrumConvention


def finite_float(text):
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"{text!r} is not a finite number")
    return value


def add_output_args(parser):
    group = parser.add_argument_group("Output")
    group.add_argument(
        "--format",
        default=OutputFormat.CSV.value,
        choices=[choice.value for choice in OutputFormat],
        help="Output format for results written to stdout (default: csv).",
    )
    group.add_argument(
        "--out",
        metavar="FILE",
        default=None,
        help="Write results to FILE instead of stdout.",
    )
    return group


def add_verbosity_args(parser):
    verbosity_group = parser.add_argument_group("Verbosity")
    verbosity_group.add_argument(
        "--log-verbose",
        action="store_true",
        help="Whether to output more verbose logs for debugging/profiling.",
    )
    verbosity_group.add_argument(
        "--progress",
        action="store_true",
        help="Show a progress bar on stderr for scans and sweeps.",
    )
    return verbosity_group


def add_params_args(parser):
    group = parser.add_argument_group(
        "Ordering parameters",
        "Either a named set or an explicit (alpha, beta, gamma) triple "
        "with alpha + beta + gamma = -1.",
    )
    group.add_argument(
        "--set",
        dest="param_set",
        metavar="NAME",
        default=None,
        help="Named set: "
        + ", ".join(named.value for named in ambiguity.NamedSet)
        + ".",
    )
    for name in ("alpha", "beta", "gamma"):
        group.add_argument(f"--{name}", type=finite_float, default=None)
    return group


def add_case_args(parser, with_case=True):
    group = parser.add_argument_group("Case")
    if with_case:
        group.add_argument(
            "--case",
            type=int,
            required=True,
            choices=sorted(CASE_REGISTRY),
            help="Separable case: 1 HO/HO, 2 Coulomb/HO, 3 HO/Coulomb, "
            "4 Coulomb/Coulomb (radial/axial).",
        )
    group.add_argument(
        "--j",
        type=finite_float,
        default=0.0,
        help="Axial mass exponent j (default: 0).",
    )
    return group


def add_quantum_number_args(parser):
    group = parser.add_argument_group("Quantum numbers")
    group.add_argument("--nrho", type=int, default=0, help="n_rho (default: 0).")
    group.add_argument("--nz", type=int, default=0, help="n_z (default: 0).")
    group.add_argument(
        "--m", type=int, default=0, help="Magnetic quantum number (default: 0)."
    )
    return group


def add_qn_triple_args(parser):
    parser.add_argument(
        "--qn",
        type=int,
        nargs=3,
        metavar=("N_RHO", "N_Z", "M"),
        default=[0, 0, 0],
        help="Quantum numbers n_rho n_z m (default: 0 0 0).",
    )


def add_coupling_args(parser):
    group = parser.add_argument_group("Couplings")
    group.add_argument(
        "--b",
        type=finite_float,
        default=constants.DEFAULT_MASS_SCALE,
        help=f"Mass scale b (default: {constants.DEFAULT_MASS_SCALE}).",
    )
    group.add_argument(
        "--a-sq",
        type=finite_float,
        default=constants.DEFAULT_A_SQ,
        help=f"Radial oscillator a^2 (default: {constants.DEFAULT_A_SQ}).",
    )
    group.add_argument(
        "--atilde-sq",
        type=finite_float,
        default=constants.DEFAULT_ATILDE_SQ,
        help=f"Axial oscillator a~^2 (default: {constants.DEFAULT_ATILDE_SQ}).",
    )
    group.add_argument(
        "--A-tilde",
        dest="A_tilde",
        type=finite_float,
        default=constants.DEFAULT_A_TILDE,
        help=f"Radial Coulomb A~ (default: {constants.DEFAULT_A_TILDE}).",
    )
    group.add_argument(
        "--B-tilde",
        dest="B_tilde",
        type=finite_float,
        default=constants.DEFAULT_B_TILDE,
        help=f"Axial Coulomb B~ (default: {constants.DEFAULT_B_TILDE}).",
    )
    return group


def add_mode_args(parser, with_mode=True, with_extended=True):
    group = parser.add_argument_group("Constraint evaluation")
    if with_mode:
        group.add_argument(
            "--mode",
            default=ConstraintMode.PublishedFormula.value,
            choices=[choice.value for choice in ConstraintMode],
            help="Evaluate the printed constraint or rederive it by matching "
            "the analytic k_z ladders (default: published).",
        )
    group.add_argument(
        "--convention",
        default=SpectrumConvention.OracleCalibrated.value,
        choices=[choice.value for choice in SpectrumConvention],
        help="Coulomb denominator n + |L| + 1 (published) or n + |L| + 1/2 "
        "(oracle, default).",
    )
    if with_extended:
        group.add_argument(
            "--extended",
            action="store_true",
            help="Append bracket and per-radicand admissibility columns.",
        )
    return group


def add_potential_args(parser):
    group = parser.add_argument_group("Half-line problem")
    group.add_argument(
        "--potential",
        required=True,
        choices=[PotentialKind.HarmonicOscillator.value, PotentialKind.Coulomb.value],
    )
    group.add_argument(
        "--l-abs", type=finite_float, required=True, help="Barrier index |L| >= 0."
    )
    group.add_argument(
        "--coupling",
        type=finite_float,
        required=True,
        help="Oscillator frequency omega or Coulomb strength B.",
    )
    return group


def add_grid_args(parser, default_h=constants.DEFAULT_GRID_SPACING, extents=("x",)):
    group = parser.add_argument_group("Grid")
    group.add_argument(
        "--grid-h",
        type=finite_float,
        default=default_h,
        help=f"Uniform grid spacing (default: {default_h}).",
    )
    for extent in extents:
        group.add_argument(
            f"--{extent}-max",
            type=finite_float,
            default=None,
            help=f"Upper end of the {extent} domain.",
        )
    return group


def validate_params_args(args) -> AmbiguityParameters:
    explicit = [args.alpha, args.beta, args.gamma]
    if args.param_set is not None:
        if any(value is not None for value in explicit):
            raise UsageError("Use either --set or --alpha/--beta/--gamma, not both")
        return ambiguity.named_set(args.param_set)
    if any(value is None for value in explicit):
        raise UsageError("Give --set NAME or all of --alpha, --beta, --gamma")
    return AmbiguityParameters(*explicit)


def validate_quantum_numbers(n_rho, n_z, m) -> QuantumNumbers:
    if n_rho < 0 or n_z < 0:
        raise UsageError(f"n_rho and n_z must be >= 0, got {n_rho}, {n_z}")
    return QuantumNumbers(n_rho, n_z, m)


def validate_coupling_args(args) -> CaseCouplings:
    if not args.b > 0:
        raise UsageError(f"--b must be positive, got {args.b}")
    if not (args.A_tilde > 0 and args.B_tilde > 0):
        raise UsageError("--A-tilde and --B-tilde must be positive")
    return CaseCouplings(
        a_sq=args.a_sq,
        atilde_sq=args.atilde_sq,
        A_tilde=args.A_tilde,
        B_tilde=args.B_tilde,
    )


def validate_potential_args(args):
    if args.l_abs < 0:
        raise UsageError(f"--l-abs must be >= 0, got {args.l_abs}")
    if not args.coupling > 0:
        raise UsageError(f"--coupling must be positive, got {args.coupling}")
    return PotentialKind(args.potential)


def validate_grid_args(args):
    if not args.grid_h > 0:
        raise UsageError(f"--grid-h must be positive, got {args.grid_h}")
    for extent in ("x", "rho", "z"):
        value = getattr(args, f"{extent}_max", None)
        if value is not None and not value > 0:
            raise UsageError(f"--{extent}-max must be positive, got {value}")


def validate_range_args(lo, hi, name):
    if not lo < hi:
        raise UsageError(f"{name} needs LO < HI, got {lo} {hi}")
    return lo, hi


def validate_count(value, name, minimum=1):
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")
    return value


def parse_family(text):
    try:
        return Family.parse(text)
    except ValueError as e:
        raise UsageError(str(e))
