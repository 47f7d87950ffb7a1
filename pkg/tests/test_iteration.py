# --- START: tests/test_iteration.py ---
import unittest
import math
from fractions import Fraction
from unittest.mock import patch, MagicMock

import sys
if '.' not in sys.path:
	sys.path.append('.')

from core import analytic, arith, contfrac, iteration
from core.brjuno import constructExtremeNumber
from core.exceptions import DomainError, InsufficientDepthError


def _goldenOrbit(length: int) -> contfrac.GaussOrbit:
	return contfrac.orbitFromQuotients([1] * length)


class TestOrbitExpansion(unittest.TestCase):
	"""F_2 and G_2 through the Gauss-map iteration against the direct evaluators."""

	def setUp(self: 'TestOrbitExpansion') -> None:
		self.patchers = [patch('core.iteration.logger', MagicMock()), patch('core.inversion.logger', MagicMock())]
		for patcher in self.patchers:
			patcher.start()

	def tearDown(self: 'TestOrbitExpansion') -> None:
		for patcher in self.patchers:
			patcher.stop()

	def test_inversionPolynomials(self: 'TestOrbitExpansion') -> None:
		pPoly, qPoly = iteration.inversionPolynomials()
		self.assertEqual(float(pPoly(0.0)), 0.0)
		self.assertAlmostEqual(float(qPoly(0.0)), arith.zetaProductConstant(2), places=15)
		self.assertAlmostEqual(float(pPoly.deriv()(0.0)), iteration.cuspLinearCoefficient(), places=12)

	def test_auxiliaryCoefficientsAreExact(self: 'TestOrbitExpansion') -> None:
		orbit = contfrac.expandCf(Fraction(3, 7), 10)
		auxA, auxB, auxC = iteration.auxiliaryCoefficients(orbit, 1)
		self.assertIsInstance(auxA, Fraction)
		self.assertIsInstance(auxB, Fraction)
		self.assertEqual(auxC, Fraction(-orbit.q(0) ** 3 * orbit.q(1)))

	def test_rationalMatchesDirectEvaluation(self: 'TestOrbitExpansion') -> None:
		for x in (Fraction(3, 7), Fraction(5, 13)):
			with self.subTest(x=x):
				viaOrbit = iteration.evalF2G2Cf(x, 1e-9)
				f, g = analytic.evalSeries(x, 2, 1e-10)
				self.assertLessEqual(abs(viaOrbit.F.value - f.value), viaOrbit.F.errorBound + f.errorBound + 1e-8)
				self.assertLessEqual(abs(viaOrbit.G.value - g.value), viaOrbit.G.errorBound + g.errorBound + 1e-8)
				self.assertEqual(viaOrbit.terms.truncationDepth, contfrac.expandCf(x, 100).depth)

	def test_goldenSurrogateMatchesDirectEvaluation(self: 'TestOrbitExpansion') -> None:
		orbit = _goldenOrbit(60)
		viaOrbit = iteration.evalF2G2Cf(orbit, 1e-9)
		f, g = analytic.evalSeries(orbit.x, 2, 1e-10)
		self.assertLessEqual(abs(viaOrbit.F.value - f.value), viaOrbit.F.errorBound + f.errorBound + 1e-8)
		self.assertLessEqual(abs(viaOrbit.G.value - g.value), viaOrbit.G.errorBound + g.errorBound + 1e-8)
		self.assertLessEqual(viaOrbit.F.errorBound, 1e-9)
		self.assertLess(viaOrbit.terms.truncationDepth, orbit.usableDepth)

	def test_shortSurrogateIsRejected(self: 'TestOrbitExpansion') -> None:
		with self.assertRaises(InsufficientDepthError) as context:
			iteration.evalF2G2Cf(_goldenOrbit(8), 1e-9)
		self.assertGreater(context.exception.requiredDepth, context.exception.availableDepth)

	def test_outsideTheUnitInterval(self: 'TestOrbitExpansion') -> None:
		with self.assertRaises(DomainError):
			iteration.evalF2G2Cf(Fraction(3, 2))


class TestOneStepResidual(unittest.TestCase):

	def setUp(self: 'TestOneStepResidual') -> None:
		self.patcher = patch('core.inversion.logger', MagicMock())
		self.patcher.start()

	def tearDown(self: 'TestOneStepResidual') -> None:
		self.patcher.stop()

	def test_singleStepHolds(self: 'TestOneStepResidual') -> None:
		for x in (Fraction(3, 10), Fraction(2, 3)):
			with self.subTest(x=x):
				reportF, reportG = iteration.oneStepResidual(x)
				self.assertLessEqual(reportF.residual, reportF.certificate + 1e-8)
				self.assertLessEqual(reportG.residual, reportG.certificate + 1e-8)

	def test_rejectsEndpoints(self: 'TestOneStepResidual') -> None:
		for x in (Fraction(0), Fraction(1), 1.5):
			with self.subTest(x=x):
				with self.assertRaises(DomainError):
					iteration.oneStepResidual(x)


class TestDerivatives(unittest.TestCase):
	"""Differentiated orbit expansion and the linearised difference quotient."""

	def setUp(self: 'TestDerivatives') -> None:
		self.patchers = [patch('core.iteration.logger', MagicMock()), patch('core.inversion.logger', MagicMock())]
		for patcher in self.patchers:
			patcher.start()

	def tearDown(self: 'TestDerivatives') -> None:
		for patcher in self.patchers:
			patcher.stop()

	def test_goldenDerivativeMatchesDifferenceQuotient(self: 'TestDerivatives') -> None:
		orbit = _goldenOrbit(50)
		series = iteration.derivativeSeries(orbit, depth=30)
		self.assertFalse(series.divergent)
		self.assertIsNotNone(series.F2Prime)
		self.assertEqual(len(series.partialSumsF), 30)
		step = Fraction(1, 10 ** 5)
		fPlus, gPlus = analytic.evalSeries(orbit.x + step, 2, 1e-12)
		fMinus, gMinus = analytic.evalSeries(orbit.x - step, 2, 1e-12)
		quotientF = (fPlus.value - fMinus.value) / (2.0 * float(step))
		quotientG = (gPlus.value - gMinus.value) / (2.0 * float(step))
		self.assertAlmostEqual(series.F2Prime.value, quotientF, delta=1e-2)
		self.assertAlmostEqual(series.G2Prime.value, quotientG, delta=1e-2)

	def test_rationalHasNoDerivative(self: 'TestDerivatives') -> None:
		with self.assertRaises(DomainError):
			iteration.derivativeSeries(Fraction(3, 7), depth=1)

	def test_depthBeyondTheOrbit(self: 'TestDerivatives') -> None:
		with self.assertRaises(InsufficientDepthError):
			iteration.derivativeSeries(_goldenOrbit(20), depth=40)

	def test_silverDerivativeMatchesDifferenceQuotient(self: 'TestDerivatives') -> None:
		orbit = constructExtremeNumber('periodic', 45, period=(2,)).orbit()
		self.assertAlmostEqual(float(orbit.x), math.sqrt(2.0) - 1.0, places=12)
		series = iteration.derivativeSeries(orbit, depth=30)
		step = Fraction(1, 10 ** 5)
		gPlus = analytic.evalSeries(orbit.x + step, 2, 1e-12)[1]
		gMinus = analytic.evalSeries(orbit.x - step, 2, 1e-12)[1]
		quotientG = (gPlus.value - gMinus.value) / (2.0 * float(step))
		self.assertAlmostEqual(series.G2Prime.value, quotientG, delta=1e-2)
		self.assertGreaterEqual(series.tailEstimateG, 0.0)

	def test_hugeQuotientIsFlaggedDivergent(self: 'TestDerivatives') -> None:
		# q_2 = 11 followed by a 20000-bit quotient: the third gamma increment is ~1184
		orbit = contfrac.orbitFromQuotients((1, 10, 1 << 20000, 1, 1, 1, 1, 1, 2))
		series = iteration.derivativeSeries(orbit, depth=3)
		increments = [series.gammaPartialSums[0]] + [b - a for a, b in zip(series.gammaPartialSums, series.gammaPartialSums[1:])]
		self.assertTrue(all(earlier < later for earlier, later in zip(increments, increments[1:])))
		self.assertGreater(series.gammaPartialSums[-1], iteration.DEFAULT_DIVERGENCE_THRESHOLD)
		self.assertTrue(series.divergent)
		self.assertIsNone(series.F2Prime)
		self.assertTrue(math.isfinite(series.G2Prime.value))

	def test_thresholdDecidesTheFlag(self: 'TestDerivatives') -> None:
		orbit = contfrac.orbitFromQuotients((1, 10, 1 << 20000, 1, 1, 1, 1, 1, 2))
		series = iteration.derivativeSeries(orbit, depth=3, threshold=1e4)
		self.assertFalse(series.divergent)
		self.assertIsNotNone(series.F2Prime)

	def test_liouvilleSurrogateWithHugeDenominators(self: 'TestDerivatives') -> None:
		source = constructExtremeNumber('liouville', 9, rate=2, bitCap=16384)
		series = iteration.derivativeSeries(source.orbit(), depth=3)
		self.assertEqual(series.depth, 3)
		self.assertFalse(series.divergent)
		self.assertTrue(math.isfinite(series.G2Prime.value))

	def test_errorBoundLeavesOutTheTailEstimate(self: 'TestDerivatives') -> None:
		series = iteration.derivativeSeries(_goldenOrbit(30), depth=10)
		self.assertAlmostEqual(series.tailEstimateF, abs(series.partialSumsF[-1] - series.partialSumsF[-2]), delta=1e-9)
		self.assertLess(series.F2Prime.errorBound, 1e-6)

	def test_gammaPartialSumsAreMonotone(self: 'TestDerivatives') -> None:
		series = iteration.derivativeSeries(_goldenOrbit(30), depth=10)
		sums = series.gammaPartialSums
		self.assertEqual(len(sums), 10)
		self.assertTrue(all(later >= earlier for earlier, later in zip(sums, sums[1:])))
		self.assertLess(sums[-1], iteration.DEFAULT_DIVERGENCE_THRESHOLD)

	def test_linearisedQuotientMatchesDirect(self: 'TestDerivatives') -> None:
		orbit = _goldenOrbit(50)
		depth = 6
		z = orbit.x + Fraction(1, 10 ** 6)
		self.assertTrue(orbit.contains(depth, z))
		quotient = iteration.cfDifferenceQuotient(orbit, z, depth, 1e-12)
		fz = analytic.evalSeries(z, 2, 1e-12)[0]
		fx = analytic.evalSeries(orbit.x, 2, 1e-12)[0]
		direct = (fz.value - fx.value) * 10 ** 6
		self.assertEqual(quotient.method, 'cf-linearized')
		self.assertLessEqual(abs(quotient.value - direct), quotient.errorEstimate + 1e-3)

	def test_linearisedQuotientArguments(self: 'TestDerivatives') -> None:
		orbit = _goldenOrbit(50)
		with self.assertRaises(DomainError):
			iteration.cfDifferenceQuotient(orbit, orbit.x, 4)
		with self.assertRaises(DomainError):
			iteration.cfDifferenceQuotient(orbit, orbit.x + Fraction(1, 3), 4)


class TestDivergenceFlag(unittest.TestCase):

	def test_risingIncrementsPastTheThreshold(self: 'TestDivergenceFlag') -> None:
		self.assertTrue(iteration.divergenceFlag([1.0, 2.0, 300.0, 400.0, 500.0], 1e3))

	def test_lateDropIsNotDivergent(self: 'TestDivergenceFlag') -> None:
		self.assertFalse(iteration.divergenceFlag([1.0, 5000.0, 2.0, 3.0], 1e3))

	def test_risingWithAnEarlierPeak(self: 'TestDivergenceFlag') -> None:
		self.assertTrue(iteration.divergenceFlag([2000.0, 1.0, 2.0, 3.0], 1e3))

	def test_needsTheThreshold(self: 'TestDivergenceFlag') -> None:
		self.assertFalse(iteration.divergenceFlag([1.0, 2.0, 3.0], 1e3))
		self.assertTrue(iteration.divergenceFlag([1.0, 2.0, 3.0], 5.0))

	def test_needsStrictPositiveGrowth(self: 'TestDivergenceFlag') -> None:
		for increments in ([600.0, 600.0, 700.0], [-1.0, 800.0, 900.0], [900.0, 800.0, 700.0]):
			with self.subTest(increments=increments):
				self.assertFalse(iteration.divergenceFlag(increments, 1e3))

	def test_tooFewIncrements(self: 'TestDivergenceFlag') -> None:
		self.assertFalse(iteration.divergenceFlag([5000.0, 6000.0], 1e3))


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_iteration.py ---
