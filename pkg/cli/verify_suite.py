# --- START: cli/verify_suite.py ---
# cli/verify_suite.py
"""
The acceptance battery.

Checks are declared in a YAML file (resources/verify_battery.yaml) and implemented by the
routines registered below. Each check receives its own random generator derived from the run
seed and its name, so filtering with ``--only`` never changes the samples another check sees.
"""

import logging
import math
import zlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import mpmath
import numpy as np
import yaml

from core import analytic
from core import arith
from core import special
from core.brjuno import brjunoReport, constructExtremeNumber, divergenceScan
from core.contfrac import (
	depthBracket, expandCf, locateDepth, orbitFromQuotients, orbitInvariantViolations, qkIdentityCheck
)
from core.exceptions import BaseApplicationError, ConfigurationError, InsufficientDepthError
from core.funceq import (
	SL2Matrix, closedFormRightSlope, eisensteinTransformResidual, localExpansion,
	phi2SecondDerivativeResidual, phi2ThirdDerivativeResidual, phi2TransformCheck, verifyFunceqK
)
from core.iteration import derivativeSeries, evalF2G2Cf, oneStepResidual
from utils.parallel import ParallelMapper
from .arguments import VERIFY_GROUPS, resolveRealSpec
from .experiments import runMocSampler, runScanRational
from .output_writer import ResultTable, formatTable

logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckSpec:
	name: str
	check: str
	group: str
	anchor: str
	tolerance: float
	params: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class CheckResult:
	name: str
	group: str
	anchor: str
	measured: float
	tolerance: float
	passed: bool
	detail: str = ''


@dataclass(frozen=True)
class VerifyReport:
	seed: int
	only: Optional[str]
	results: Tuple[CheckResult, ...]

	@property
	def passed(self: 'VerifyReport') -> bool:
		return all(result.passed for result in self.results)

	@property
	def failingAnchors(self: 'VerifyReport') -> List[str]:
		anchors: List[str] = []
		for result in self.results:
			if not result.passed and result.anchor not in anchors:
				anchors.append(result.anchor)
		return anchors


@dataclass(frozen=True)
class CheckContext:
	"""What a check routine gets: its declaration, generator and worker pool."""
	spec: CheckSpec
	rng: np.random.Generator
	mapper: ParallelMapper

	def param(self: 'CheckContext', key: str, default: Any = None) -> Any:
		return self.spec.params.get(key, default)

	@property
	def tolerance(self: 'CheckContext') -> float:
		return self.spec.tolerance


# (measured value, passed, detail)
Outcome = Tuple[float, bool, str]
_REGISTRY: Dict[str, Callable[[CheckContext], Outcome]] = {}


def _register(name: str) -> Callable[[Callable[[CheckContext], Outcome]], Callable[[CheckContext], Outcome]]:
	def decorator(func: Callable[[CheckContext], Outcome]) -> Callable[[CheckContext], Outcome]:
		_REGISTRY[name] = func
		return func
	return decorator


def registeredChecks() -> List[str]:
	return sorted(_REGISTRY)


# --------------------------------------------------------------------------- battery file

def loadBattery(path: str) -> List[CheckSpec]:
	"""
	Reads and validates the battery declaration.

	Raises:
		ConfigurationError: If the file is missing, malformed or names an unknown routine or group.
	"""
	try:
		with open(path, 'r', encoding='utf-8') as handle:
			document = yaml.safe_load(handle)
	except FileNotFoundError as e:
		raise ConfigurationError(f"Verify battery '{path}' not found.") from e
	except yaml.YAMLError as e:
		mark = getattr(e, 'problem_mark', None)
		location = f" (line {mark.line + 1})" if mark is not None else ''
		raise ConfigurationError(f"Verify battery '{path}' is not valid YAML{location}: {e}") from e
	if not isinstance(document, dict) or not isinstance(document.get('checks'), list):
		raise ConfigurationError(f"Verify battery '{path}' must contain a 'checks' list.")
	specs: List[CheckSpec] = []
	for entry in document['checks']:
		try:
			spec = CheckSpec(
				name=str(entry['name']),
				check=str(entry['check']),
				group=str(entry['group']),
				anchor=str(entry['anchor']),
				tolerance=float(entry.get('tolerance', 0.0)),
				params=dict(entry.get('params') or {})
			)
		except (KeyError, TypeError, ValueError) as e:
			raise ConfigurationError(f"Malformed battery entry {entry!r}: {e}") from e
		if spec.check not in _REGISTRY:
			raise ConfigurationError(f"Battery entry '{spec.name}' names unknown routine '{spec.check}'.")
		if spec.group not in VERIFY_GROUPS:
			raise ConfigurationError(f"Battery entry '{spec.name}' has unknown group '{spec.group}'.")
		specs.append(spec)
	logger.debug(f"Loaded {len(specs)} checks from {path}")
	return specs


def _checkSeed(seed: int, name: str) -> np.random.Generator:
	return np.random.default_rng([seed, zlib.crc32(name.encode('utf-8'))])


def runVerifySuite(
	seed: int,
	only: Optional[str] = None,
	batteryFile: str = 'resources/verify_battery.yaml',
	mapper: Optional[ParallelMapper] = None
) -> VerifyReport:
	"""
	Runs every check of the battery, or those of one group.

	A check that raises an application error fails with the error text as its detail; the
	battery continues with the next check.

	Raises:
		ConfigurationError: From loadBattery, or for an unknown ``only`` group.
	"""
	if only is not None and only not in VERIFY_GROUPS:
		raise ConfigurationError(f"Unknown verify group '{only}'; expected one of {VERIFY_GROUPS}.")
	specs = [spec for spec in loadBattery(batteryFile) if only is None or spec.group == only]
	runner = mapper or ParallelMapper(1)
	results: List[CheckResult] = []
	for spec in specs:
		context = CheckContext(spec=spec, rng=_checkSeed(seed, spec.name), mapper=runner)
		try:
			measured, passed, detail = _REGISTRY[spec.check](context)
		except BaseApplicationError as e:
			measured, passed, detail = math.nan, False, f"{type(e).__name__}: {e}"
		result = CheckResult(spec.name, spec.group, spec.anchor, float(measured), spec.tolerance, bool(passed), detail)
		results.append(result)
		if passed:
			logger.info(f"PASS {spec.name} [{spec.anchor}] measured={measured:.3e} tolerance={spec.tolerance:g}")
		else:
			logger.error(f"FAIL {spec.name} [{spec.anchor}] measured={measured} tolerance={spec.tolerance:g} {detail}")
	return VerifyReport(seed=seed, only=only, results=tuple(results))


def reportTable(report: VerifyReport) -> ResultTable:
	table = ResultTable(
		anchor='verify-battery',
		columns=['name', 'group', 'anchor', 'measured', 'tolerance', 'passed', 'detail']
	)
	for result in report.results:
		table.addRow([result.name, result.group, result.anchor, result.measured, result.tolerance, result.passed, result.detail])
	table.summary = {
		'seed': report.seed,
		'only': report.only or 'all',
		'checks': len(report.results),
		'failed': sum(1 for result in report.results if not result.passed),
		'failing_anchors': ','.join(report.failingAnchors),
		'passed': report.passed,
	}
	return table


# --------------------------------------------------------------------------- arith

@_register('divisor_table')
def _divisorTable(context: CheckContext) -> Outcome:
	limit = int(context.param('limit', 1000))
	mismatches = 0
	for weight in context.param('weightExponents', [1]):
		table = arith.buildDivisorTable(int(weight), limit)
		mismatches += sum(1 for n in range(1, limit + 1) if table[n] != arith.divisorSigma(n, int(weight)))
	return float(mismatches), mismatches <= context.tolerance, f"limit={limit}"


@_register('eisenstein_normalisation')
def _eisensteinNormalisation(context: CheckContext) -> Outcome:
	worst = 0.0
	for k in context.param('weights', [2, 4, 6]):
		k = int(k)
		reference = -2 * k / mpmath.bernoulli(k)
		worst = max(worst, float(abs((float(arith.eisensteinFactor(k)) - reference) / reference)))
	# E_4(i) = 3 Gamma(1/4)^8 / (2 pi)^6
	with mpmath.workdps(30):
		e4Reference = float(3 * mpmath.gamma(mpmath.mpf(1) / 4) ** 8 / (2 * mpmath.pi) ** 6)
	e4 = analytic.evalEisenstein(1j, 4, 1e-13)
	worst = max(worst, abs(e4.value - e4Reference) / e4Reference)
	return worst, worst <= context.tolerance, f"E_4(i)={e4.value.real:.15g}"


@_register('zeta_values')
def _zetaValues(context: CheckContext) -> Outcome:
	worst = 0.0
	for s in context.param('arguments', [2, 3]):
		constant = arith.zetaInteger(int(s))
		worst = max(worst, abs(constant.value - float(mpmath.zeta(int(s)))))
	return worst, worst <= context.tolerance, ''


# --------------------------------------------------------------------------- contfrac

@_register('orbit_identities')
def _orbitIdentities(context: CheckContext) -> Outcome:
	maxDenominator = int(context.param('maxDenominator', 50))
	violations = 0
	checked = 0
	for q in range(2, maxDenominator + 1):
		for p in range(1, q):
			if math.gcd(p, q) != 1:
				continue
			orbit = expandCf(Fraction(p, q), q + 2)
			found = orbitInvariantViolations(orbit)
			for k in range(orbit.depth + 1):
				if orbit.beta(k) != 0 and qkIdentityCheck(orbit, k) != orbit.q(k):
					found.append(f"q_k identity at k={k}")
			if found:
				logger.debug(f"{p}/{q}: {found}")
			violations += len(found)
			checked += 1
	return float(violations), violations <= context.tolerance, f"{checked} fractions"


@_register('depth_bracket')
def _depthBracket(context: CheckContext) -> Outcome:
	pairs = int(context.param('pairs', 100))
	length = int(context.param('quotients', 40))
	maxQuotient = int(context.param('maxQuotient', 5))
	low, high = context.param('exponentRange', [1.0, 12.0])
	failures = 0
	skipped = 0
	for _ in range(pairs):
		quotients = [int(a) for a in context.rng.integers(1, maxQuotient + 1, size=length)]
		orbit = orbitFromQuotients(quotients)
		h = Fraction(float(10.0 ** -context.rng.uniform(low, high)))
		if context.rng.random() < 0.5:
			h = -h
		if not 0 < orbit.x + h < 1:
			h = -h
		try:
			depth = locateDepth(orbit, h)
		except InsufficientDepthError:
			skipped += 1
			continue
		if not depthBracket(orbit, depth).holds(h):
			failures += 1
	return float(failures), failures <= context.tolerance, f"{pairs - skipped} pairs located, {skipped} too deep"


# --------------------------------------------------------------------------- analytic

@_register('clausen_oracle')
def _clausenOracle(context: CheckContext) -> Outcome:
	count = int(context.param('points', 32))
	thetas = np.linspace(0.0, 2.0 * math.pi, count + 2)[1:-1]
	values = special.clausen2(thetas)
	worst = max(abs(float(value) - float(mpmath.clsin(2, float(theta)))) for theta, value in zip(thetas, values))
	return worst, worst <= context.tolerance, f"{count} angles"


def _agreementTask(task: Tuple[Fraction, float, bool]) -> Tuple[float, float, float, float]:
	"""Differences hyperbola - orbit for F_2 and G_2 with the summed certificates."""
	x, eps, surrogate = task
	f, g = analytic.evalSeries(x, 2, eps)
	source = expandCf(x, 400, surrogate=surrogate) if surrogate else x
	cf = evalF2G2Cf(source, eps)
	return (
		abs(f.value - cf.F.value), f.errorBound + cf.F.errorBound,
		abs(g.value - cf.G.value), g.errorBound + cf.G.errorBound
	)


@_register('hyperbola_vs_orbit')
def _hyperbolaVsOrbit(context: CheckContext) -> Outcome:
	eps = float(context.param('eps', 1e-9))
	maxDenominator = int(context.param('maxDenominator', 10_000))
	tasks: List[Tuple[Fraction, float, bool]] = []
	while len(tasks) < int(context.param('rationals', 10)):
		q = int(context.rng.integers(2, maxDenominator + 1))
		p = int(context.rng.integers(1, q))
		if math.gcd(p, q) == 1:
			tasks.append((Fraction(p, q), eps, False))
	length = int(context.param('surrogateLength', 40))
	for _ in range(int(context.param('surrogates', 0))):
		quotients = [int(a) for a in context.rng.integers(1, 6, size=length)]
		tasks.append((orbitFromQuotients(quotients).x, eps, True))
	outcomes = context.mapper.map(_agreementTask, tasks, description='evaluator agreement')
	worst = 0.0
	outside = 0
	for diffF, certF, diffG, certG in outcomes:
		worst = max(worst, diffF, diffG)
		outside += int(diffF > certF) + int(diffG > certG)
	return worst, worst <= context.tolerance and outside == 0, f"{len(tasks)} points, {outside} outside certificates"


@_register('naive_vs_hyperbola')
def _naiveVsHyperbola(context: CheckContext) -> Outcome:
	referenceEps = float(context.param('referenceEps', 1e-11))
	worst = 0.0
	outside = 0
	for k, count, eps in ((2, context.param('k2Points', 5), context.param('k2Eps', 1e-5)),
						  (4, context.param('k4Points', 20), context.param('k4Eps', 1e-6))):
		points = [Fraction(float(value)) for value in context.rng.uniform(0.0, 1.0, size=int(count))]
		table = None
		for x in points:
			naiveF, naiveG = analytic.evalSeries(x, k, float(eps), method='naive', table=table)
			if table is None:
				table = arith.buildDivisorTable(k - 1, naiveF.termsUsed)
			fastF, fastG = analytic.evalSeries(x, k, referenceEps)
			for slow, fast in ((naiveF, fastF), (naiveG, fastG)):
				difference = abs(slow.value - fast.value)
				worst = max(worst, difference)
				outside += int(difference > slow.errorBound + fast.errorBound)
	return worst, worst <= context.tolerance and outside == 0, f"{outside} outside certificates"


@_register('lk_oracle')
def _lkOracle(context: CheckContext) -> Outcome:
	worst = 0.0
	for text in context.param('points', ['0.1']):
		x = Fraction(str(text))
		for k in context.param('weights', [2]):
			viaIntegral = analytic.gkViaIntegral(x, int(k))
			direct = analytic.evalSeries(x, int(k), 1e-10)[1]
			worst = max(worst, abs(viaIntegral.value - direct.value))
	return worst, worst <= context.tolerance, ''


# --------------------------------------------------------------------------- funceq

@_register('e2_quasi_modularity')
def _e2QuasiModularity(context: CheckContext) -> Outcome:
	samples = int(context.param('samples', 10))
	maxEntry = int(context.param('maxEntry', 5))
	minImag = float(context.param('minImag', 0.2))
	imageMinImag = float(context.param('imageMinImag', 0.1))
	worst = 0.0
	tested = 0
	for _ in range(200 * samples):
		if tested == samples:
			break
		c = int(context.rng.integers(-maxEntry, maxEntry + 1))
		d = int(context.rng.integers(-maxEntry, maxEntry + 1))
		z = complex(context.rng.uniform(-0.5, 0.5), context.rng.uniform(minImag, 1.5))
		if c == 0 or math.gcd(c, d) != 1:
			continue
		gamma = SL2Matrix.fromBottomRow(c, d)
		if gamma.apply(z).imag < imageMinImag:
			continue
		residual, _ = eisensteinTransformResidual(z, gamma)
		worst = max(worst, residual)
		tested += 1
	return worst, worst <= context.tolerance and tested == samples, f"{tested} (z, gamma) pairs"


@_register('phi2_third_derivative')
def _phi2ThirdDerivative(context: CheckContext) -> Outcome:
	worst = 0.0
	for re, im in context.param('points', [[0.0, 1.0]]):
		residual, _ = phi2ThirdDerivativeResidual(complex(re, im))
		worst = max(worst, residual)
	return worst, worst <= context.tolerance, ''


@_register('phi2_second_derivative')
def _phi2SecondDerivative(context: CheckContext) -> Outcome:
	pairs = int(context.param('pairs', 5))
	low, high = context.param('imagRange', [0.5, 1.5])
	worst = 0.0
	outside = 0
	for c, d in context.param('bottomRows', [[1, 0]]):
		gamma = SL2Matrix.fromBottomRow(int(c), int(d))
		for _ in range(pairs):
			tau, alpha = (complex(context.rng.uniform(-0.5, 0.5), context.rng.uniform(low, high)) for _ in range(2))
			residual, certificate = phi2SecondDerivativeResidual(tau, alpha, gamma)
			worst = max(worst, residual)
			outside += int(residual > certificate + context.tolerance)
	return worst, worst <= context.tolerance and outside == 0, f"{outside} residuals above their certificate"


@_register('real_line_transform')
def _realLineTransform(context: CheckContext) -> Outcome:
	worst = 0.0
	outside = 0
	for x, c, d in context.param('cases', [[0.3, 1, 0]]):
		report = phi2TransformCheck(Fraction(str(x)), SL2Matrix.fromBottomRow(int(c), int(d)))
		worst = max(worst, report.residual)
		outside += int(not report.withinCertificate)
	return worst, worst <= context.tolerance, f"{outside} residuals above their certificate"


@_register('general_weight')
def _generalWeight(context: CheckContext) -> Outcome:
	worst = 0.0
	degenerate = 0.0
	for k in context.param('weights', [4]):
		for tau, alpha in context.param('pairs', []):
			tauPoint = complex(*tau)
			worst = max(worst, verifyFunceqK(int(k), tauPoint, complex(*alpha)).residual)
			degenerate = max(degenerate, verifyFunceqK(int(k), tauPoint, tauPoint).residual)
	degenerateTolerance = float(context.param('degenerateTolerance', 1e-8))
	return worst, worst <= context.tolerance and degenerate <= degenerateTolerance, f"tau=alpha residual {degenerate:.2e}"


@_register('one_step')
def _oneStep(context: CheckContext) -> Outcome:
	worst = 0.0
	outside = 0
	for text in context.param('points', ['3/10']):
		for report in oneStepResidual(Fraction(str(text))):
			worst = max(worst, report.residual)
			outside += int(not report.withinCertificate)
	return worst, worst <= context.tolerance and outside == 0, f"{outside} residuals above their certificate"


@_register('closed_form_slopes')
def _closedFormSlopes(context: CheckContext) -> Outcome:
	worst = 0.0
	for p, q in context.param('fractions', [[0, 1]]):
		expansion = localExpansion(int(p), int(q))
		worst = max(worst, abs(expansion.G2RightSlope - closedFormRightSlope(int(p), int(q))))
	return worst, worst <= context.tolerance, ''


@_register('rational_scans')
def _rationalScans(context: CheckContext) -> Outcome:
	slopeDenominators = {int(q) for q in context.param('slopeDenominators', [1])}
	jumpTolerance = float(context.param('jumpTolerance', 0.01))
	slopeTolerance = float(context.param('g2SlopeTolerance', 0.01))
	lo, hi = context.param('hExponents', [10, 26])
	worstSlope = 0.0
	worstJump = 0.0
	offSlopes: List[str] = []
	for p, q in context.param('fractions', [[0, 1]]):
		summary = runScanRational(int(p), int(q), (int(lo), int(hi)), mapper=context.mapper).summary
		jump = abs(summary['fitted_jump'] - summary['predicted_jump']) / summary['predicted_jump']
		worstJump = max(worstJump, jump)
		if int(q) in slopeDenominators:
			predicted = summary['predicted_F2_log_coefficient']
			worstSlope = max(worstSlope, abs(summary['fitted_F2_log_coefficient'] - predicted) / predicted)
		for side in ('right', 'left'):
			predictedSlope = summary[f"predicted_G2_{side}_slope"]
			if abs(summary[f"fitted_G2_{side}_slope"] - predictedSlope) > slopeTolerance * abs(predictedSlope):
				offSlopes.append(f"{p}/{q} {side}")
	passed = worstSlope <= context.tolerance and worstJump <= jumpTolerance and not offSlopes
	detail = f"worst relative jump error {worstJump:.3e}; G_2 slopes off: {', '.join(offSlopes) or 'none'}"
	return worstSlope, passed, detail


# --------------------------------------------------------------------------- brjuno

@_register('gamma_bracket')
def _gammaBracket(context: CheckContext) -> Outcome:
	depth = int(context.param('depth', 40))
	bitCap = int(context.param('bitCap', 4096))
	extra = 6
	sources = [
		constructExtremeNumber('golden', depth + extra),
		constructExtremeNumber('periodic', depth + extra, period=(2,)),
		constructExtremeNumber('periodic', depth + extra, period=(3,)),
	]
	reports = [brjunoReport(source, depth) for source in sources]
	liouvilleDepth = int(context.param('liouvilleDepth', 20))
	liouville = constructExtremeNumber('liouville', liouvilleDepth + extra, rate=2, bitCap=bitCap)
	reports.append(brjunoReport(liouville, liouvilleDepth))
	maxQuotient = int(context.param('maxQuotient', 9))
	for _ in range(int(context.param('randomLists', 0))):
		quotients = [int(a) for a in context.rng.integers(1, maxQuotient + 1, size=depth + extra)]
		reports.append(brjunoReport(orbitFromQuotients(quotients), depth))
	failures = sum(sum(1 for ok in report.lemmaBracketOk if not ok) for report in reports)
	return float(failures), failures <= context.tolerance, f"{len(reports)} orbits"


@_register('classifier_witnesses')
def _classifierWitnesses(context: CheckContext) -> Outcome:
	depth = int(context.param('depth', 40))
	golden = brjunoReport(constructExtremeNumber('golden', depth + 6), depth)
	muError = abs(golden.muEst - 2.0)
	goldenOk = golden.verdict == 'convergent-at-depth' and golden.starOk and muError <= context.tolerance

	liouvilleDepth = int(context.param('liouvilleDepth', 4))
	liouville = constructExtremeNumber(
		'liouville', liouvilleDepth + 4, rate=int(context.param('liouvilleRate', 9)), bitCap=int(context.param('bitCap', 16384))
	)
	report = brjunoReport(liouville, liouvilleDepth)
	squares = report.brjunoSums[2]
	increment = squares[1] - squares[0] if len(squares) > 1 else 0.0
	liouvilleOk = report.verdict == 'non-convergent-at-depth' and increment > float(context.param('incrementThreshold', 1e3))

	starDepth = int(context.param('starDepth', 20))
	star = brjunoReport(constructExtremeNumber('star_violator', starDepth + 4), starDepth)
	starOk = not star.starOk and not star.saturated and star.verdict != 'non-convergent-at-depth'

	detail = (f"golden {golden.verdict} mu={golden.muEst:.4f}; liouville {report.verdict} increment={increment:.4g}; "
			  f"star_violator starOk={star.starOk} {star.verdict}")
	return muError, goldenOk and liouvilleOk and starOk, detail


def _symmetricQuotients(x: Fraction, step: Fraction) -> Tuple[float, float]:
	"""Symmetric difference quotients of F_2 and G_2 at x."""
	plusF, plusG = analytic.evalSeries(x + step, 2, 1e-12)
	minusF, minusG = analytic.evalSeries(x - step, 2, 1e-12)
	width = 2.0 * float(step)
	return (plusF.value - minusF.value) / width, (plusG.value - minusG.value) / width


@_register('derivative_vs_dq')
def _derivativeVsDq(context: CheckContext) -> Outcome:
	depth = int(context.param('depth', 30))
	step = Fraction(float(context.param('step', 1e-5)))
	golden = constructExtremeNumber('golden', depth + 10).orbit()
	series = derivativeSeries(golden, depth)
	if series.F2Prime is None:
		return math.inf, False, "F_2' partial sums flagged divergent at golden"
	quotientF, _ = _symmetricQuotients(golden.x, step)
	silver = constructExtremeNumber('periodic', depth + 10, period=(2,)).orbit()
	silverSeries = derivativeSeries(silver, depth)
	_, quotientG = _symmetricQuotients(silver.x, step)
	differenceF = abs(series.F2Prime.value - quotientF)
	differenceG = abs(silverSeries.G2Prime.value - quotientG)
	worst = max(differenceF, differenceG)
	detail = (f"golden F_2'={series.F2Prime.value:.8g} vs DQ {quotientF:.8g}; "
			  f"sqrt(2)-1 G_2'={silverSeries.G2Prime.value:.8g} vs DQ {quotientG:.8g}")
	return worst, worst <= context.tolerance, detail


@_register('derivative_divergence')
def _derivativeDivergence(context: CheckContext) -> Outcome:
	bits = int(context.param('quotientBits', 20000))
	depth = int(context.param('depth', 3))
	threshold = context.tolerance
	# one huge quotient right after a moderate one makes the gamma increments climb past the threshold
	quotients = [1, 10, 1 << bits, 1, 1, 1, 1, 1, 2]
	series = derivativeSeries(orbitFromQuotients(quotients), depth, threshold=threshold)
	golden = derivativeSeries(constructExtremeNumber('golden', 40).orbit(), 20, threshold=threshold)
	passed = series.gammaPartialSums[-1] > threshold and series.divergent and series.F2Prime is None and not golden.divergent
	detail = f"gamma sums {', '.join(f'{value:.4g}' for value in series.gammaPartialSums)}; golden divergent={golden.divergent}"
	return series.gammaPartialSums[-1], passed, detail


@_register('divergence_scan')
def _divergenceScan(context: CheckContext) -> Outcome:
	goldenLevels = [int(n) for n in context.param('goldenLevels', [1, 3, 5])]
	liouvilleLevels = [int(n) for n in context.param('liouvilleLevels', [1, 3])]
	golden = constructExtremeNumber('golden', max(goldenLevels) + 6)
	goldenRows = divergenceScan(golden, goldenLevels, mapper=context.mapper)
	liouville = constructExtremeNumber(
		'liouville', max(liouvilleLevels) + 4, rate=int(context.param('liouvilleRate', 2)), bitCap=int(context.param('bitCap', 4096))
	)
	liouvilleRows = divergenceScan(liouville, liouvilleLevels, mapper=context.mapper)
	goldenMax = max(abs(row.dq) for row in goldenRows)
	liouvilleMax = max(abs(row.dq) for row in liouvilleRows)
	bracketsOk = all(row.bracketOk for row in goldenRows + liouvilleRows)
	threshold = float(context.param('informationalThreshold', 100.0))
	detail = (f"liouville max |DQ|={liouvilleMax:.4g} ({'above' if liouvilleMax > threshold else 'below'} "
			  f"informational threshold {threshold:g}); brackets ok={bracketsOk}")
	return goldenMax, goldenMax < context.tolerance and bracketsOk, detail


# --------------------------------------------------------------------------- cli

@_register('moc_sampler')
def _mocSampler(context: CheckContext) -> Outcome:
	worst = 0.0
	finite = True
	for text in context.param('points', ['golden:40']):
		source = resolveRealSpec(str(text), bitCap=4096, asSurrogate=True)
		seed = int(context.rng.integers(0, 2 ** 31))
		summary = runMocSampler(source, int(context.param('pairs', 100)), seed, mapper=context.mapper).summary
		worst = max(worst, summary['max_median_excess'])
		finite = finite and summary['ratios_finite']
	return worst, finite and worst <= context.tolerance, ''


@_register('determinism')
def _determinism(context: CheckContext) -> Outcome:
	source = resolveRealSpec(str(context.param('point', 'golden:40')), bitCap=4096, asSurrogate=True)
	seed = int(context.rng.integers(0, 2 ** 31))
	pairs = int(context.param('pairs', 20))
	first = runMocSampler(source, pairs, seed, mapper=context.mapper)
	second = runMocSampler(source, pairs, seed, mapper=ParallelMapper(1))
	mismatches = sum(int(formatTable(first, fmt) != formatTable(second, fmt)) for fmt in ('csv', 'json'))
	return float(mismatches), mismatches <= context.tolerance, ''

# --- END: cli/verify_suite.py ---
