#!/usr/bin/env python3

import math
import unittest

import numpy as np
from scipy import integrate, special
from vonroos_zero.cases import PotentialKind
from vonroos_zero.numerics import analytic_eigenfunction, laguerre


HO = PotentialKind.HarmonicOscillator
COULOMB = PotentialKind.Coulomb


def laguerre_series(n, a, x):
    return sum(
        (-1) ** k * special.binom(n + a, n - k) * x ** k / math.factorial(k)
        for k in range(n + 1)
    )


class TestLaguerre(unittest.TestCase):
    def test_low_orders(self):
        x = np.linspace(0.0, 4.0, 9)
        np.testing.assert_array_equal(laguerre(0, 0.7, x), 1.0)
        np.testing.assert_allclose(laguerre(1, 0.7, x), 1.7 - x, rtol=1e-15)

    def test_against_series_and_scipy(self):
        value = laguerre(2, 0.5, 1.0)
        self.assertAlmostEqual(value, laguerre_series(2, 0.5, 1.0), places=14)
        self.assertAlmostEqual(value, special.eval_genlaguerre(2, 0.5, 1.0), places=14)
        x = np.linspace(0.0, 12.0, 25)
        for n in range(6):
            for a in (0.0, 0.5, 1.5, 3.0):
                np.testing.assert_allclose(
                    laguerre(n, a, x),
                    special.eval_genlaguerre(n, a, x),
                    rtol=1e-11,
                    atol=1e-11,
                )


class TestAnalyticEigenfunction(unittest.TestCase):
    def test_ho_ground_state_shape(self):
        function = analytic_eigenfunction(HO, 0, 0.5, 2.0)
        x = np.array([0.2, 0.9, 1.7, 3.0])
        ratio = function(x) / (x * np.exp(-x * x / 2.0))
        np.testing.assert_allclose(ratio, ratio[0], rtol=1e-13)
        self.assertEqual(function.eigenvalue, 3.0)

    def test_coulomb_ground_state_shape(self):
        function = analytic_eigenfunction(COULOMB, 0, 0.5, 1.0)
        x = np.array([0.2, 0.9, 1.7, 3.0])
        ratio = function(x) / (x * np.exp(-x))
        np.testing.assert_allclose(ratio, ratio[0], rtol=1e-13)
        self.assertEqual(function.eigenvalue, -1.0)

    def test_normalized(self):
        x = np.linspace(0.0, 80.0, 400001)
        for kind, l_abs, coupling in ((HO, 0.5, 2.0), (HO, 1.5, 0.7), (COULOMB, 1.5, 1.3)):
            for n in range(3):
                function = analytic_eigenfunction(kind, n, l_abs, coupling)
                norm = integrate.trapezoid(np.square(function(x)), x)
                self.assertAlmostEqual(norm, 1.0, delta=1e-8, msg=f"{kind} n={n}")

    def test_orthogonal(self):
        x = np.linspace(0.0, 40.0, 200001)
        u0 = analytic_eigenfunction(HO, 0, 1.5, 2.0)(x)
        u1 = analytic_eigenfunction(HO, 1, 1.5, 2.0)(x)
        self.assertLess(abs(integrate.trapezoid(u0 * u1, x)), 1e-8)

    def test_mirrored_branch(self):
        function = analytic_eigenfunction(HO, 1, 0.5, 2.0, mirrored=True)
        self.assertEqual(function.eigenvalue, -7.0)
        self.assertEqual(function.normalization, 1.0)
        x = np.array([1.0, 2.0])
        expected = x * np.exp(x * x / 2.0) * (1.5 + x * x)
        np.testing.assert_allclose(function(x), expected, rtol=1e-14)

    def test_mirrored_coulomb_rejected(self):
        self.assertRaises(AssertionError, analytic_eigenfunction, COULOMB, 0, 0.5, 1.0, True)
