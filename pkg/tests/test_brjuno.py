# --- START: tests/test_brjuno.py ---
import unittest
import math
from fractions import Fraction
from unittest.mock import patch, MagicMock

import sys
if '.' not in sys.path:
	sys.path.append('.')

from core import brjuno
from core.exceptions import DomainError, InsufficientDepthError
from utils.parallel import ParallelMapper


class TestExtremeNumbers(unittest.TestCase):
	"""Quotient lists for the growth regimes."""

	def setUp(self: 'TestExtremeNumbers') -> None:
		self.patcher = patch('core.brjuno.logger', MagicMock())
		self.mock_logger = self.patcher.start()

	def tearDown(self: 'TestExtremeNumbers') -> None:
		self.patcher.stop()

	def test_goldenAndPeriodic(self: 'TestExtremeNumbers') -> None:
		golden = brjuno.constructExtremeNumber('golden', 10)
		self.assertEqual(golden.quotients, (1,) * 10)
		self.assertEqual(golden.text, 'golden:10')
		self.assertFalse(golden.saturated)
		periodic = brjuno.constructExtremeNumber('periodic', 5, period=(1, 2))
		self.assertEqual(periodic.quotients, (1, 2, 1, 2, 1))
		self.assertEqual(periodic.text, 'periodic:[1,2]:5')
		parsed = periodic.parsed()
		self.assertTrue(parsed.surrogate)
		self.assertEqual(parsed.quotients, periodic.quotients)

	def test_liouvilleGrowth(self: 'TestExtremeNumbers') -> None:
		"""a_1 = ceil(e), a_2 = ceil(e^3) with q_2 = 64; a_4 exceeds 64 bits of exponent."""
		number = brjuno.constructExtremeNumber('liouville', 4, rate=1, bitCap=4096)
		self.assertEqual(number.quotients[:2], (3, 21))
		self.assertEqual(number.quotients[2], math.ceil(math.exp(64)))
		self.assertEqual(number.saturatedIndices, (4,))
		self.assertEqual(number.quotients[3], 1 << 4096)
		self.assertTrue(number.saturated)
		self.assertEqual(number.text, 'liouville:1:4')
		self.mock_logger.warning.assert_called_once()

	def test_starViolatorPlantsGrowth(self: 'TestExtremeNumbers') -> None:
		number = brjuno.constructExtremeNumber('star_violator', 24, bitCap=16384)
		self.assertEqual(number.parameters['planted'], (4, 8))
		self.assertEqual(number.quotients[:3], (2, 2, 2))
		self.assertGreater(number.quotients[7].bit_length(), 1000)
		self.assertEqual(number.quotients[23], 7)

	def test_invalidRequests(self: 'TestExtremeNumbers') -> None:
		with self.assertRaises(DomainError):
			brjuno.constructExtremeNumber('silver', 5)
		with self.assertRaises(DomainError):
			brjuno.constructExtremeNumber('golden', 0)
		with self.assertRaises(DomainError):
			brjuno.constructExtremeNumber('periodic', 5, period=(0, 1))
		with self.assertRaises(DomainError):
			brjuno.constructExtremeNumber('liouville', 5, rate=0)


class TestBrjunoReport(unittest.TestCase):

	def setUp(self: 'TestBrjunoReport') -> None:
		self.patcher = patch('core.brjuno.logger', MagicMock())
		self.patcher.start()

	def tearDown(self: 'TestBrjunoReport') -> None:
		self.patcher.stop()

	def test_goldenConverges(self: 'TestBrjunoReport') -> None:
		report = brjuno.brjunoReport(brjuno.constructExtremeNumber('golden', 30), 20)
		self.assertEqual(report.verdict, 'convergent-at-depth')
		self.assertTrue(report.starOk)
		self.assertFalse(report.starStarOk)
		self.assertTrue(all(report.lemmaBracketOk))
		self.assertTrue(all(report.kappaBoundOk))
		self.assertEqual(len(report.brjunoSums[2]), 21)
		self.assertEqual(set(report.brjunoSums), set(brjuno.BRJUNO_EXPONENTS))
		self.assertAlmostEqual(report.muEst, 2.0, delta=0.1)
		self.assertLess(report.lastIncrement, 1e-6)
		self.assertEqual(report.squareSum, report.brjunoSums[2][-1])

	def test_periodicSatisfiesBothConditions(self: 'TestBrjunoReport') -> None:
		report = brjuno.brjunoReport(brjuno.constructExtremeNumber('periodic', 30, period=(2,)), 20)
		self.assertTrue(report.starOk)
		self.assertTrue(report.starStarOk)
		self.assertTrue(all(report.lemmaBracketOk))

	def test_starViolatorFailsStar(self: 'TestBrjunoReport') -> None:
		number = brjuno.constructExtremeNumber('star_violator', 24, bitCap=16384)
		report = brjuno.brjunoReport(number, 20)
		self.assertFalse(report.starOk)
		self.assertGreater(report.starSequence[4], 0.99)
		self.assertTrue(math.isfinite(report.squareSum))

	def test_saturatedLiouvilleIsNonConvergent(self: 'TestBrjunoReport') -> None:
		number = brjuno.constructExtremeNumber('liouville', 6, rate=2, bitCap=4096)
		self.assertEqual(number.saturatedIndices[0], 3)
		report = brjuno.brjunoReport(number, 2)
		self.assertTrue(report.saturated)
		self.assertEqual(report.verdict, 'non-convergent-at-depth')
		with self.assertRaises(InsufficientDepthError) as context:
			brjuno.brjunoReport(number, 3)
		self.assertEqual(context.exception.requiredDepth, 7)


class TestDivergenceScan(unittest.TestCase):

	def setUp(self: 'TestDivergenceScan') -> None:
		self.patcher = patch('core.brjuno.logger', MagicMock())
		self.mock_logger = self.patcher.start()
		self.orbit = brjuno.constructExtremeNumber('golden', 41).orbit()

	def tearDown(self: 'TestDivergenceScan') -> None:
		self.patcher.stop()

	def test_scanStepBracket(self: 'TestDivergenceScan') -> None:
		h, bracketOk = brjuno.scanStep(self.orbit, 1)
		self.assertEqual(self.orbit.x + h, Fraction(7, 9))
		self.assertTrue(bracketOk)
		for n in (3, 5, 7, 9):
			with self.subTest(n=n):
				h, bracketOk = brjuno.scanStep(self.orbit, n)
				self.assertGreater(h, 0)
				self.assertTrue(bracketOk)

	def test_scanRowsAreOrdered(self: 'TestDivergenceScan') -> None:
		rows = brjuno.divergenceScan(self.orbit, [5, 1, 3], mapper=ParallelMapper(1))
		self.assertEqual([row.n for row in rows], [1, 3, 5])
		for row in rows:
			with self.subTest(n=row.n):
				self.assertTrue(row.bracketOk)
				self.assertEqual(row.method, 'hyperbola')
				self.assertTrue(math.isfinite(row.dq))
				self.assertGreater(row.hFloat, 0.0)
		self.mock_logger.warning.assert_not_called()

	def test_scanArguments(self: 'TestDivergenceScan') -> None:
		self.assertEqual(self.orbit.depth % 2, 0)
		with self.assertRaises(DomainError):
			brjuno.divergenceScan(self.orbit, [2])
		with self.assertRaises(DomainError):
			brjuno.divergenceScan(self.orbit, [-1])
		with self.assertRaises(InsufficientDepthError):
			brjuno.divergenceScan(self.orbit, [self.orbit.depth - 1])


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_brjuno.py ---
