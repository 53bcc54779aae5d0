#!/usr/bin/env python3

import argparse
import unittest

from vonroos_zero import options
from vonroos_zero.cases import PotentialKind
from vonroos_zero.errors import UnknownParameterSetError, UsageError
from vonroos_zero.spectra import Family, FamilyKind


def parse(add_args, argv):
    parser = argparse.ArgumentParser()
    add_args(parser)
    return parser.parse_args(argv)


class TestOptions(unittest.TestCase):
    def test_finite_float(self):
        self.assertEqual(options.finite_float("-0.25"), -0.25)
        self.assertRaises(ValueError, options.finite_float, "inf")
        self.assertRaises(ValueError, options.finite_float, "nan")

    def test_params_by_name_or_triple(self):
        args = parse(options.add_params_args, ["--set", "mm"])
        self.assertEqual(options.validate_params_args(args).as_tuple(), (-0.25, -0.5, -0.25))
        args = parse(
            options.add_params_args, ["--alpha", "0", "--beta", "-1", "--gamma", "0"]
        )
        self.assertEqual(options.validate_params_args(args).as_tuple(), (0.0, -1.0, 0.0))

    def test_params_conflicts(self):
        args = parse(options.add_params_args, ["--set", "mm", "--alpha", "0"])
        self.assertRaises(UsageError, options.validate_params_args, args)
        args = parse(options.add_params_args, ["--alpha", "0", "--beta", "-1"])
        self.assertRaises(UsageError, options.validate_params_args, args)
        args = parse(options.add_params_args, ["--set", "weyl"])
        self.assertRaises(UnknownParameterSetError, options.validate_params_args, args)

    def test_couplings(self):
        args = parse(options.add_coupling_args, ["--a-sq", "4", "--B-tilde", "2.5"])
        couplings = options.validate_coupling_args(args)
        self.assertEqual(couplings.a_sq, 4.0)
        self.assertEqual(couplings.B_tilde, 2.5)
        args = parse(options.add_coupling_args, ["--A-tilde", "0"])
        self.assertRaises(UsageError, options.validate_coupling_args, args)
        args = parse(options.add_coupling_args, ["--b", "-1"])
        self.assertRaises(UsageError, options.validate_coupling_args, args)

    def test_quantum_numbers(self):
        self.assertEqual(tuple(options.validate_quantum_numbers(1, 2, -3)), (1, 2, -3))
        self.assertRaises(UsageError, options.validate_quantum_numbers, -1, 0, 0)

    def test_potential(self):
        args = parse(
            options.add_potential_args,
            ["--potential", "ho", "--l-abs", "0.5", "--coupling", "2"],
        )
        self.assertIs(options.validate_potential_args(args), PotentialKind.HarmonicOscillator)
        args.l_abs = -0.5
        self.assertRaises(UsageError, options.validate_potential_args, args)

    def test_grid(self):
        args = parse(
            lambda parser: options.add_grid_args(parser, extents=("rho", "z")),
            ["--grid-h", "0.01", "--rho-max", "5"],
        )
        options.validate_grid_args(args)
        args.z_max = 0.0
        self.assertRaises(UsageError, options.validate_grid_args, args)
        args.z_max, args.grid_h = None, -1.0
        self.assertRaises(UsageError, options.validate_grid_args, args)

    def test_ranges_and_families(self):
        self.assertEqual(options.validate_range_args(-1.0, 0.0, "--bracket"), (-1.0, 0.0))
        self.assertRaises(UsageError, options.validate_range_args, 0.0, 0.0, "--bracket")
        self.assertRaises(UsageError, options.validate_count, 0, "levels")
        self.assertEqual(options.parse_family("fixed-beta=-1"), Family(FamilyKind.FixedBeta, -1.0))
        self.assertRaises(UsageError, options.parse_family, "diagonal")
