#!/usr/bin/env python3

"""Command-line front end; every subcommand is a thin adapter over the library."""

import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout

import numpy as np
from vonroos_zero import ambiguity, constants, options, spectra
from vonroos_zero.ambiguity import AmbiguityParameters
from vonroos_zero.cases import PotentialKind
from vonroos_zero.errors import UsageError, VonRoosError
from vonroos_zero.numerics import (
    Grid1D,
    analytic_eigenfunction,
    build_case_wavefunction,
    eigen_solve,
    von_roos_residual,
)
from vonroos_zero.output import (
    OutputFormat,
    field_rows,
    render_record,
    render_table,
)
from vonroos_zero.separation import AssembledPotential, EffectiveProblem


logger = logging.getLogger(__name__)


def _constraint_settings(args):
    return dict(
        couplings=options.validate_coupling_args(args),
        mode=spectra.ConstraintMode(args.mode),
        convention=spectra.SpectrumConvention(args.convention),
    )


def _qn_from_flags(args):
    return options.validate_quantum_numbers(args.nrho, args.nz, args.m)


def _field_grids(args):
    options.validate_grid_args(args)
    rho_max = args.rho_max if args.rho_max is not None else constants.DEFAULT_RHO_MAX
    z_max = args.z_max if args.z_max is not None else constants.DEFAULT_Z_MAX
    return Grid1D.uniform(rho_max, args.grid_h), Grid1D.uniform(z_max, args.grid_h)


def _assembled_state(args):
    """(potential, params, qn) for the vonroos / wavefunction subcommands."""
    params = options.validate_params_args(args)
    qn = options.validate_quantum_numbers(*args.qn)
    couplings = options.validate_coupling_args(args)
    if args.match_coupling:
        couplings = spectra.with_matching_coupling(
            args.case,
            params,
            args.j,
            qn,
            couplings,
            spectra.SpectrumConvention.OracleCalibrated,
        )
        logger.info(f"Matched couplings: {couplings}")
    potential = AssembledPotential.create(args.case, couplings, b=args.b, j=args.j)
    return potential, params, qn


def zeta_command(args):
    params = options.validate_params_args(args)
    strength = ambiguity.script_l(ambiguity.barrier_f(params, args.j))
    return render_record(
        {
            "alpha": params.alpha,
            "beta": params.beta,
            "gamma": params.gamma,
            "zeta": ambiguity.zeta(params),
            "zeta_minus_beta": ambiguity.zeta_minus_beta(params),
            "j": args.j,
            "F": strength.f_value,
            "script_l_abs": strength.script_l_abs,
            "admissible": strength.admissible,
        },
        OutputFormat(args.format),
    )


def sets_list_command(args):
    rows = []
    for named in ambiguity.NamedSet:
        params = ambiguity.named_set(named)
        rows.append(
            {
                "set": named.value,
                "name": named.name,
                "alpha": params.alpha,
                "beta": params.beta,
                "gamma": params.gamma,
                "zeta": ambiguity.zeta(params),
                "zeta_minus_beta": ambiguity.zeta_minus_beta(params),
            }
        )
    return render_table(rows, OutputFormat(args.format))


def sets_check_command(args):
    settings = _constraint_settings(args)
    qn = _qn_from_flags(args)
    rows = []
    for named in ambiguity.NamedSet:
        report = spectra.constraint_residual(
            args.case, ambiguity.named_set(named), args.j, qn, **settings
        )
        rows.append({"set": named.value, **report.to_row(args.extended)})
    return render_table(rows, OutputFormat(args.format))


def constraint_residual_command(args):
    params = options.validate_params_args(args)
    report = spectra.constraint_residual(
        args.case, params, args.j, _qn_from_flags(args), **_constraint_settings(args)
    )
    return render_record(report.to_row(args.extended), OutputFormat(args.format))


def constraint_solve_command(args):
    family = options.parse_family(args.family)
    lo, hi = options.validate_range_args(*args.bracket, "--bracket")
    if not args.tol > 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    settings = _constraint_settings(args)
    qn = _qn_from_flags(args)
    roots = spectra.solve_family(
        args.case,
        family,
        args.j,
        qn,
        settings["couplings"],
        (lo, hi),
        args.tol,
        settings["mode"],
        settings["convention"],
    )
    rows = []
    for params in roots:
        report = spectra.constraint_residual(args.case, params, args.j, qn, **settings)
        rows.append(
            {
                "alpha": params.alpha,
                "beta": params.beta,
                "gamma": params.gamma,
                "zeta": ambiguity.zeta(params),
                "zeta_minus_beta": ambiguity.zeta_minus_beta(params),
                "residual": report.residual,
            }
        )
    columns = ["alpha", "beta", "gamma", "zeta", "zeta_minus_beta", "residual"]
    return render_table(rows, OutputFormat(args.format), columns)


def _report_table(reports, args):
    rows = [report.to_row(args.extended) for report in reports]
    columns = list(constants.CONSTRAINT_COLUMNS)
    if args.extended:
        columns += ["bracket", "ell_admissible", "f_admissible", "sign_compatible"]
    return render_table(rows, OutputFormat(args.format), columns)


def constraint_scan_command(args):
    params = options.validate_params_args(args)
    reports = spectra.scan(
        args.case,
        params,
        args.j,
        range(args.nrho_max + 1),
        range(args.nz_max + 1),
        range(args.m_max + 1),
        progress=args.progress,
        **_constraint_settings(args),
    )
    return _report_table(reports, args)


def constraint_atlas_command(args):
    alpha_lo, alpha_hi = options.validate_range_args(*args.alpha_range, "--alpha-range")
    gamma_lo, gamma_hi = options.validate_range_args(*args.gamma_range, "--gamma-range")
    steps = options.validate_count(args.steps, "steps", minimum=2)
    reports = spectra.sweep_plane(
        args.case,
        args.j,
        _qn_from_flags(args),
        np.linspace(alpha_lo, alpha_hi, steps),
        np.linspace(gamma_lo, gamma_hi, steps),
        progress=args.progress,
        **_constraint_settings(args),
    )
    return _report_table(reports, args)


def spectrum_analytic_command(args):
    kind = options.validate_potential_args(args)
    levels = options.validate_count(args.levels, "levels")
    rows = [
        {"n": level.n, "l_abs": args.l_abs, "energy": level.energy, "kappa": level.kappa}
        for level in spectra.analytic_levels(
            kind,
            args.l_abs,
            args.coupling,
            levels,
            spectra.SpectrumConvention(args.convention),
        )
    ]
    return render_table(rows, OutputFormat(args.format), ["n", "l_abs", "energy", "kappa"])


def spectrum_numeric_command(args):
    kind = options.validate_potential_args(args)
    levels = options.validate_count(args.levels, "levels")
    options.validate_grid_args(args)
    convention = spectra.SpectrumConvention(args.convention)
    problem = EffectiveProblem.from_spectrum(kind, args.l_abs, args.coupling)
    if args.x_max is not None:
        grid = Grid1D.uniform(args.x_max, args.grid_h)
    else:
        grid = Grid1D.default_for(kind, args.l_abs, args.coupling, levels, args.grid_h)
    result = eigen_solve(problem, levels, grid)
    rows = []
    for n, numeric in enumerate(result.eigenvalues):
        analytic = spectra.problem_level(problem, n, convention)
        rows.append(
            {
                "n": n,
                "l_abs": args.l_abs,
                "numeric": numeric,
                "analytic": analytic,
                "delta": numeric - analytic,
                "convention": convention,
            }
        )
        if kind is PotentialKind.Coulomb and abs(numeric - analytic) > 1e-3:
            logger.warning(
                f"Level {n}: eigensolver gives {numeric}, the {convention.value} "
                f"Coulomb formula gives {analytic}"
            )
    return render_table(rows, OutputFormat(args.format))


def vonroos_residual_command(args):
    rho_grid, z_grid = _field_grids(args)
    potential, params, qn = _assembled_state(args)
    psi = build_case_wavefunction(potential, params, qn)
    hamiltonian_params = params
    if args.perturb_beta is not None:
        hamiltonian_params = AmbiguityParameters(
            params.alpha, args.perturb_beta, -1.0 - params.alpha - args.perturb_beta
        )
    report = von_roos_residual(
        potential.pdm,
        hamiltonian_params,
        potential,
        psi,
        (rho_grid, z_grid),
        refine=args.refine,
    )
    output_format = OutputFormat(args.format)
    if args.field:
        finest = report.finest
        return render_table(
            field_rows(finest.rho, finest.z, finest.residual, name="residual"),
            output_format,
            ["rho", "z", "residual"],
        )
    rows = [report.to_row()]
    if report.refined is not None:
        rows.append(
            {**report.refined.to_row(), "convergence_order": report.convergence_order}
        )
    return render_table(rows, output_format)


def wavefunction_emit_command(args):
    kind = options.validate_potential_args(args)
    options.validate_grid_args(args)
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    if args.mirrored and kind is not PotentialKind.HarmonicOscillator:
        raise UsageError("--mirrored applies to the oscillator only")
    function = analytic_eigenfunction(
        kind, args.n, args.l_abs, args.coupling, mirrored=args.mirrored
    )
    if args.x_max is not None:
        grid = Grid1D.uniform(args.x_max, args.grid_h)
    else:
        grid = Grid1D.default_for(kind, args.l_abs, args.coupling, args.n + 1, args.grid_h)
    rows = [{"x": x, "u": u} for x, u in zip(grid.points, function(grid.points))]
    return render_table(rows, OutputFormat(args.format), ["x", "u"])


def wavefunction_assemble_command(args):
    rho_grid, z_grid = _field_grids(args)
    potential, params, qn = _assembled_state(args)
    psi = build_case_wavefunction(potential, params, qn)
    rho, z = np.meshgrid(rho_grid.points, z_grid.points, indexing="ij")
    return render_table(
        field_rows(rho_grid.points, z_grid.points, psi.profile(rho, z)),
        OutputFormat(args.format),
        ["rho", "z", "value"],
    )


def potential_emit_command(args):
    rho_grid, z_grid = _field_grids(args)
    couplings = options.validate_coupling_args(args)
    potential = AssembledPotential.create(args.case, couplings, b=args.b, j=args.j)
    rho, z = np.meshgrid(rho_grid.points, z_grid.points, indexing="ij")
    return render_table(
        field_rows(rho_grid.points, z_grid.points, potential.evaluate(rho, z)),
        OutputFormat(args.format),
        ["rho", "z", "value"],
    )


def _add_command(subparsers, name, handler, common, help):
    parser = subparsers.add_parser(name, parents=[common], help=help)
    parser.set_defaults(handler=handler, command_parser=parser)
    return parser


def _add_state_args(parser):
    options.add_case_args(parser)
    options.add_params_args(parser)
    options.add_qn_triple_args(parser)
    options.add_coupling_args(parser)
    options.add_grid_args(
        parser, default_h=constants.DEFAULT_FIELD_SPACING, extents=("rho", "z")
    )
    parser.add_argument(
        "--match-coupling",
        action="store_true",
        help="Replace the free coupling (A~ for case 2, B~ for cases 3 and 4) "
        "by the value that satisfies the quantization constraint.",
    )


def get_parser():
    common = argparse.ArgumentParser(add_help=False)
    options.add_output_args(common)
    options.add_verbosity_args(common)

    parser = argparse.ArgumentParser(
        prog="vonroos-zero",
        description="Zero-energy separability of the von Roos position-dependent "
        "mass Hamiltonian in cylindrical coordinates.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    zeta = _add_command(
        commands, "zeta", zeta_command, common, "zeta, F and |L| for a parameter set"
    )
    options.add_params_args(zeta)
    options.add_case_args(zeta, with_case=False)

    sets = commands.add_parser("sets", help="Named ordering-parameter sets")
    sets_commands = sets.add_subparsers(dest="sets_command", metavar="COMMAND")
    _add_command(sets_commands, "list", sets_list_command, common, "List the sets")
    check = _add_command(
        sets_commands, "check", sets_check_command, common, "Constraint row per set"
    )
    options.add_case_args(check)
    options.add_quantum_number_args(check)
    options.add_coupling_args(check)
    options.add_mode_args(check)

    constraint = commands.add_parser("constraint", help="Quantization constraints")
    constraint_commands = constraint.add_subparsers(
        dest="constraint_command", metavar="COMMAND"
    )
    residual = _add_command(
        constraint_commands,
        "residual",
        constraint_residual_command,
        common,
        "One constraint report",
    )
    options.add_case_args(residual)
    options.add_quantum_number_args(residual)
    options.add_params_args(residual)
    options.add_coupling_args(residual)
    options.add_mode_args(residual)

    solve = _add_command(
        constraint_commands,
        "solve",
        constraint_solve_command,
        common,
        "Roots along a one-parameter family",
    )
    options.add_case_args(solve)
    options.add_quantum_number_args(solve)
    options.add_coupling_args(solve)
    options.add_mode_args(solve, with_extended=False)
    solve.add_argument(
        "--family",
        required=True,
        help="alpha-eq-gamma or fixed-beta=B; the family is parameterized by alpha.",
    )
    solve.add_argument(
        "--bracket",
        nargs=2,
        type=options.finite_float,
        metavar=("LO", "HI"),
        default=[-1.0, 0.0],
        help="alpha interval to search (default: -1 0).",
    )
    solve.add_argument(
        "--tol",
        type=options.finite_float,
        default=constants.ROOT_TOLERANCE,
        help=f"Residual tolerance for roots (default: {constants.ROOT_TOLERANCE}).",
    )

    scan = _add_command(
        constraint_commands,
        "scan",
        constraint_scan_command,
        common,
        "Reports over ranges of quantum numbers",
    )
    options.add_case_args(scan)
    options.add_params_args(scan)
    options.add_coupling_args(scan)
    options.add_mode_args(scan)
    for flag in ("--nrho-max", "--nz-max", "--m-max"):
        scan.add_argument(
            flag, type=int, default=0, help="Inclusive maximum; negative gives none."
        )

    atlas = _add_command(
        constraint_commands,
        "atlas",
        constraint_atlas_command,
        common,
        "Residuals over an (alpha, gamma) grid",
    )
    options.add_case_args(atlas)
    options.add_quantum_number_args(atlas)
    options.add_coupling_args(atlas)
    options.add_mode_args(atlas)
    for flag in ("--alpha-range", "--gamma-range"):
        atlas.add_argument(
            flag,
            nargs=2,
            type=options.finite_float,
            metavar=("LO", "HI"),
            default=[-1.0, 0.0],
        )
    atlas.add_argument("--steps", type=int, default=21, help="Points per axis.")

    spectrum = commands.add_parser("spectrum", help="Half-line spectra")
    spectrum_commands = spectrum.add_subparsers(
        dest="spectrum_command", metavar="COMMAND"
    )
    for name, handler, help in (
        ("analytic", spectrum_analytic_command, "Closed-form levels"),
        ("numeric", spectrum_numeric_command, "Finite-difference levels vs closed form"),
    ):
        command = _add_command(spectrum_commands, name, handler, common, help)
        options.add_potential_args(command)
        options.add_mode_args(command, with_mode=False, with_extended=False)
        command.add_argument("--levels", type=int, default=3)
        if name == "numeric":
            options.add_grid_args(command)

    vonroos = commands.add_parser("vonroos", help="Von Roos Hamiltonian checks")
    vonroos_commands = vonroos.add_subparsers(dest="vonroos_command", metavar="COMMAND")
    vonroos_residual = _add_command(
        vonroos_commands,
        "residual",
        vonroos_residual_command,
        common,
        "Finite-difference H Psi for an assembled state",
    )
    _add_state_args(vonroos_residual)
    vonroos_residual.add_argument(
        "--refine", action="store_true", help="Also run at h/2 and report the order."
    )
    vonroos_residual.add_argument(
        "--field", action="store_true", help="Emit the (rho, z, residual) field."
    )
    vonroos_residual.add_argument(
        "--perturb-beta",
        type=options.finite_float,
        default=None,
        metavar="B",
        help="Apply the Hamiltonian with beta = B (alpha kept, gamma adjusted) "
        "to the state built from the given parameters.",
    )

    wavefunction = commands.add_parser("wavefunction", help="Wavefunction samples")
    wavefunction_commands = wavefunction.add_subparsers(
        dest="wavefunction_command", metavar="COMMAND"
    )
    emit = _add_command(
        wavefunction_commands,
        "emit",
        wavefunction_emit_command,
        common,
        "(x, u) samples of an analytic eigenfunction",
    )
    options.add_potential_args(emit)
    options.add_grid_args(emit)
    emit.add_argument("--n", type=int, default=0)
    emit.add_argument(
        "--mirrored", action="store_true", help="Oscillator omega -> -omega branch."
    )
    assemble = _add_command(
        wavefunction_commands,
        "assemble",
        wavefunction_assemble_command,
        common,
        "(rho, z, value) samples of an assembled state",
    )
    _add_state_args(assemble)

    potential = commands.add_parser("potential", help="Assembled potentials")
    potential_commands = potential.add_subparsers(
        dest="potential_command", metavar="COMMAND"
    )
    potential_emit = _add_command(
        potential_commands,
        "emit",
        potential_emit_command,
        common,
        "(rho, z, value) samples of a case potential",
    )
    options.add_case_args(potential_emit)
    options.add_coupling_args(potential_emit)
    options.add_grid_args(
        potential_emit, default_h=constants.DEFAULT_FIELD_SPACING, extents=("rho", "z")
    )
    return parser


def _configure_logging(args, stream):
    logging.basicConfig(
        stream=stream,
        level=logging.DEBUG if args.log_verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run(argv=None, stdout=None, stderr=None) -> int:
    """Runs one command; returns 0 on success, 1 on domain errors, 2 on usage errors."""
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = get_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if not hasattr(args, "handler"):
        parser.print_usage(stderr)
        stderr.write("error: a command is required\n")
        return 2

    _configure_logging(args, stderr)
    output_format = OutputFormat(args.format)
    try:
        text = args.handler(args)
    except UsageError as e:
        args.command_parser.print_usage(stderr)
        stderr.write(f"error: {e}\n")
        return 2
    except VonRoosError as e:
        logger.error(f"{type(e).__name__}: {e}")
        stderr.write(render_record({"error": str(e), "reason": e.reason}, output_format))
        return 1

    if args.out is not None:
        with open(args.out, "w", newline="\n") as f:
            f.write(text)
    else:
        stdout.write(text)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
