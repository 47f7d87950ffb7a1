# --- START: tests/test_special.py ---
import unittest
import math
from fractions import Fraction

import sys
if '.' not in sys.path:
	sys.path.append('.')

import mpmath
import numpy as np

from core import special


class TestClausen(unittest.TestCase):
	"""Cl2 against mpmath.clsin and its symmetries."""

	def test_againstMpmath(self: 'TestClausen') -> None:
		for theta in np.linspace(0.01, 2.0 * math.pi - 0.01, 37):
			with self.subTest(theta=theta):
				expected = float(mpmath.clsin(2, theta))
				self.assertAlmostEqual(special.clausen2(theta), expected, delta=2e-15)

	def test_vectorisedAndPeriodic(self: 'TestClausen') -> None:
		thetas = np.array([0.3, 1.1, 2.9, 4.0])
		values = special.clausen2(thetas)
		self.assertEqual(values.shape, thetas.shape)
		np.testing.assert_allclose(special.clausen2(thetas + 2.0 * math.pi), values, atol=1e-14)
		np.testing.assert_allclose(special.clausen2(2.0 * math.pi - thetas), -values, atol=1e-14)

	def test_zerosAndMaximum(self: 'TestClausen') -> None:
		self.assertEqual(special.clausen2(0.0), 0.0)
		self.assertAlmostEqual(special.clausen2(math.pi), 0.0, delta=1e-15)
		self.assertAlmostEqual(special.clausenMaximum(), 1.0149416064096536, places=14)

	def test_roundingBoundCoversPerturbation(self: 'TestClausen') -> None:
		u = 0.123456
		for delta in (1e-12, 1e-8, 1e-4):
			with self.subTest(delta=delta):
				change = abs(special.clausen2(2.0 * math.pi * (u + delta)) - special.clausen2(2.0 * math.pi * u))
				self.assertLessEqual(change, float(special.clausenRoundingBound(np.array([delta]))[0]))


class TestElementaryKernels(unittest.TestCase):

	def test_bernoulliPolynomials(self: 'TestElementaryKernels') -> None:
		self.assertAlmostEqual(special.bernoulliB2(0.0), 1.0 / 6.0)
		self.assertAlmostEqual(special.bernoulliB2(0.5), -1.0 / 12.0)
		u = 0.5 - math.sqrt(3.0) / 6.0
		b3 = u ** 3 - 1.5 * u ** 2 + 0.5 * u
		self.assertAlmostEqual(abs(b3), special.bernoulliB3Maximum(), places=15)

	def test_sawtooth(self: 'TestElementaryKernels') -> None:
		self.assertEqual(special.sawtooth(3.0), 0.0)
		self.assertAlmostEqual(special.sawtooth(0.25), -0.25)
		self.assertAlmostEqual(special.sawtooth(-0.25), 0.25)
		np.testing.assert_allclose(special.sawtooth(np.array([1.75, 2.5])), [0.25, 0.0])

	def test_reduceModOne(self: 'TestElementaryKernels') -> None:
		self.assertEqual(special.reduceModOne(Fraction(7, 3)), Fraction(1, 3))
		self.assertEqual(special.reduceModOne(Fraction(-1, 4)), Fraction(3, 4))
		self.assertEqual(special.reduceModOne(5), Fraction(0))
		self.assertAlmostEqual(special.reduceModOne(2.75), 0.75)

	def test_fractionalPartsExactForRationals(self: 'TestElementaryKernels') -> None:
		multipliers = np.arange(1, 8)
		parts, bounds = special.fractionalParts(Fraction(3, 7), multipliers)
		expected = [((e * 3) % 7) / 7.0 for e in range(1, 8)]
		self.assertEqual(parts.tolist(), expected)
		self.assertTrue(np.all(bounds == 0.0))

	def test_fractionalPartsFloatBound(self: 'TestElementaryKernels') -> None:
		x = math.sqrt(2.0)
		multipliers = np.array([1, 10, 1000, 100000])
		parts, bounds = special.fractionalParts(x, multipliers)
		with mpmath.workdps(40):
			for e, part, bound in zip(multipliers, parts, bounds):
				exact = float(mpmath.frac(int(e) * mpmath.mpf(x)))
				self.assertLessEqual(abs(part - exact), bound)
				self.assertGreater(bound, 0.0)


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_special.py ---
