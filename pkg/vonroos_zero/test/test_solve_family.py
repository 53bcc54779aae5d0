#!/usr/bin/env python3

import unittest

from vonroos_zero import ambiguity, spectra
from vonroos_zero.cases import CaseCouplings
from vonroos_zero.errors import InvalidBracketError
from vonroos_zero.spectra import Family, FamilyKind
from vonroos_zero.test import utils as test_utils


ALPHA_EQ_GAMMA = Family(FamilyKind.AlphaEqualsGamma)


class TestFamily(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(Family.parse("alpha-eq-gamma"), ALPHA_EQ_GAMMA)
        self.assertEqual(Family.parse("fixed-beta=-1"), Family(FamilyKind.FixedBeta, -1.0))
        self.assertRaises(ValueError, Family.parse, "fixed-beta")
        self.assertRaises(ValueError, Family.parse, "beta-eq-gamma")
        self.assertRaises(ValueError, Family.parse, "fixed-beta=nan")
        self.assertRaises(ValueError, Family, FamilyKind.FixedBeta, float("inf"))

    def test_parameterization_keeps_von_roos_constraint(self):
        for family in (ALPHA_EQ_GAMMA, Family(FamilyKind.FixedBeta, -0.5)):
            for alpha in (-1.0, -0.3, 0.0, 0.7):
                self.assertAlmostEqual(
                    family.params_at(alpha).constraint_defect, 0.0, places=14
                )


class TestSolveFamily(unittest.TestCase):
    def test_case1_alpha_equals_gamma_roots(self):
        roots = spectra.solve_family(
            1, ALPHA_EQ_GAMMA, 0.0, test_utils.GROUND, bracket=(-1.0, 0.0)
        )
        self.assertEqual(len(roots), 2)
        self.assertAlmostEqual(roots[0].alpha, -0.75, places=12)
        self.assertAlmostEqual(roots[1].alpha, -0.25, places=12)
        for params in roots:
            self.assertEqual(params.alpha, params.gamma)
            report = spectra.constraint_residual(1, params, 0.0, test_utils.GROUND)
            self.assertLess(abs(report.residual), 1e-12)

    def test_roots_off_the_grid_are_refined(self):
        # Residual (2 alpha + 1)^2 - 1/4 has roots at -3/4 and -1/4, which are
        # not scan nodes of [-0.9, -0.1].
        roots = spectra.solve_family(
            1, ALPHA_EQ_GAMMA, 0.0, test_utils.GROUND, bracket=(-0.9, -0.1)
        )
        self.assertEqual([round(p.alpha, 10) for p in roots], [-0.75, -0.25])
        for params in roots:
            report = spectra.constraint_residual(1, params, 0.0, test_utils.GROUND)
            self.assertLess(abs(report.residual), 1e-12)

    def test_no_roots(self):
        roots = spectra.solve_family(
            1, ALPHA_EQ_GAMMA, 0.0, test_utils.GROUND, bracket=(10.0, 11.0)
        )
        self.assertEqual(roots, [])

    def test_case4_fixed_beta_contains_bdd(self):
        roots = spectra.solve_family(
            4,
            Family(FamilyKind.FixedBeta, -1.0),
            0.0,
            test_utils.GROUND,
            CaseCouplings(A_tilde=1.0, B_tilde=1.0),
            bracket=(-0.5, 0.5),
        )
        self.assertIn(ambiguity.named_set("bdd").as_tuple(), [p.as_tuple() for p in roots])

    def test_case4_touching_root_between_scan_points(self):
        # Residual -alpha^2 never changes sign; 0 is not a scan node here.
        family = Family(FamilyKind.FixedBeta, -1.0)
        couplings = CaseCouplings(A_tilde=1.0, B_tilde=1.0)
        for bracket in ((-0.5, 0.6), (-0.4, 0.45)):
            roots = spectra.solve_family(
                4, family, 0.0, test_utils.GROUND, couplings, bracket=bracket
            )
            self.assertEqual(len(roots), 1, bracket)
            self.assertAlmostEqual(roots[0].alpha, 0.0, delta=1e-6)
            report = spectra.constraint_residual(
                4, roots[0], 0.0, test_utils.GROUND, couplings
            )
            self.assertLess(abs(report.residual), 1e-12)

    def test_invalid_bracket(self):
        for bracket in ((0.0, 0.0), (1.0, -1.0), (float("nan"), 1.0), (0.0, float("inf"))):
            self.assertRaises(
                InvalidBracketError,
                spectra.solve_family,
                1,
                ALPHA_EQ_GAMMA,
                0.0,
                test_utils.GROUND,
                bracket=bracket,
            )
