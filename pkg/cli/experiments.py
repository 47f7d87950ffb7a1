# --- START: cli/experiments.py ---
# cli/experiments.py
"""
Experiment drivers: difference-quotient scans at rationals and along irrational orbits,
and the modulus-of-continuity sampler.

Each driver returns a ResultTable whose rows are plot-ready and whose summary compares the
fitted quantities with the closed-form predictions.
"""

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from core import analytic
from core.brjuno import ExtremeNumber, divergenceScan
from core.contfrac import DEFAULT_GUARD, GaussOrbit, ParsedReal, orbitFromParsed
from core.exceptions import DomainError, InsufficientDepthError
from core.funceq import localExpansion
from core.iteration import derivativeSeries
from core.settings import NumericsSettings
from utils.parallel import ParallelMapper
from .output_writer import ResultTable

logger: logging.Logger = logging.getLogger(__name__)

F2_SLOPE_TOLERANCE: float = 0.02
JUMP_TOLERANCE: float = 0.01
G2_SLOPE_TOLERANCE: float = 0.01
MOC_EXPONENT_RANGE: Tuple[float, float] = (1.0, 6.0)
MOC_MEDIAN_FACTOR: float = 10.0
MOC_MEDIAN_WARMUP: int = 10
_DQ_EPS_SCALE: float = 1e-4

OrbitInput = Union[ExtremeNumber, ParsedReal, GaussOrbit]


def orbitOf(source: OrbitInput, depth: int, guard: int = DEFAULT_GUARD) -> GaussOrbit:
	"""Orbit long enough for ``depth`` levels plus the guard, where the source allows it."""
	if isinstance(source, GaussOrbit):
		return source
	if isinstance(source, ExtremeNumber):
		return source.orbit(guard)
	length = len(source.quotients) if source.quotients else depth + guard + 2
	return orbitFromParsed(source, max(length, 1), guard)


# --------------------------------------------------------------------------- rational scan

def _rationalScanTask(task: Tuple[int, int, int]) -> Tuple[float, float, float, float, float, float, float]:
	"""DQ_F2, right and left DQ_G2 at p/q for h = 2^-exponent, each with its error bound."""
	p, q, exponent = task
	x = Fraction(p, q)
	h = Fraction(1, 2 ** exponent)
	eps = max(analytic.EPS_FLOOR, float(h) * _DQ_EPS_SCALE)
	fMid, gMid = analytic.evalSeries(x, 2, eps)
	fRight, gRight = analytic.evalSeries(x + h, 2, eps)
	_, gLeft = analytic.evalSeries(x - h, 2, eps)
	hf = float(h)
	return (
		(fRight.value - fMid.value) / hf, (fRight.errorBound + fMid.errorBound) / hf,
		(gRight.value - gMid.value) / hf, (gRight.errorBound + gMid.errorBound) / hf,
		(gMid.value - gLeft.value) / hf, (gMid.errorBound + gLeft.errorBound) / hf,
		hf
	)


def _relativeError(measured: float, predicted: float) -> float:
	return abs(measured - predicted) / max(abs(predicted), 1e-300)


def _fit(columns: Sequence[np.ndarray], values: np.ndarray) -> np.ndarray:
	design = np.column_stack(columns)
	coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
	return coefficients


def runScanRational(
	p: int,
	q: int,
	hExponents: Tuple[int, int] = (10, 26),
	eps: float = 1e-9,
	mapper: Optional[ParallelMapper] = None,
	settings: Optional[NumericsSettings] = None
) -> ResultTable:
	"""
	One-sided difference quotients of F_2 and G_2 at p/q on h = 2^-lo .. 2^-hi.

	The F_2 quotients are fitted by c log(1/h) + d + e h, the G_2 quotients by
	s + t h log(1/h) + u h; the summary compares c with pi^3/(3 q^2), each s with the
	one-sided slope of the local expansion and their difference with pi^4/(3 q^2).
	``settings`` supplies the quadrature budget, rule order and q-series floor of the
	cusp fit.

	Raises:
		DomainError: If q < 1, gcd(p, q) != 1 or the grid has fewer than four steps.
	"""
	if q < 1 or math.gcd(p, q) != 1:
		raise DomainError(f"{p}/{q} is not a reduced fraction with positive denominator.")
	lo, hi = hExponents
	if hi - lo + 1 < 4:
		raise DomainError(f"The h grid 2^-{lo}..2^-{hi} is too short for the slope fits.")
	numerics = settings or NumericsSettings()
	expansion = localExpansion(
		p, q, eps,
		budget=numerics.quadratureBudget, minImag=numerics.qSeriesMinImag, order=numerics.quadratureOrder
	)
	runner = mapper or ParallelMapper(1)
	results = runner.map(_rationalScanTask, [(p, q, exponent) for exponent in range(lo, hi + 1)], description='rational scan')

	table = ResultTable(
		anchor='rational-local-expansion',
		columns=['h', 'DQ_F2', 'DQ_F2_err', 'DQ_G2_right', 'DQ_G2_right_err', 'DQ_G2_left', 'DQ_G2_left_err',
				 'predicted_F2', 'predicted_G2_right', 'predicted_G2_left']
	)
	for dqF, errF, dqRight, errRight, dqLeft, errLeft, h in results:
		predictedF = expansion.F2LogCoefficient * math.log(1.0 / h) + expansion.F2LinearCoefficient
		table.addRow([h, dqF, errF, dqRight, errRight, dqLeft, errLeft, predictedF, expansion.G2RightSlope, expansion.G2LeftSlope])

	hs = np.array([row[-1] for row in results])
	logs = np.log(1.0 / hs)
	ones = np.ones_like(hs)
	fitF = _fit((logs, ones, hs), np.array([row[0] for row in results]))
	fitRight = _fit((ones, hs * logs, hs), np.array([row[2] for row in results]))
	fitLeft = _fit((ones, hs * logs, hs), np.array([row[4] for row in results]))
	fittedJump = float(fitLeft[0] - fitRight[0])
	slopeError = abs(float(fitF[0]) - expansion.F2LogCoefficient) / expansion.F2LogCoefficient
	jumpError = abs(fittedJump - expansion.jump) / expansion.jump
	rightError = _relativeError(float(fitRight[0]), expansion.G2RightSlope)
	leftError = _relativeError(float(fitLeft[0]), expansion.G2LeftSlope)
	table.summary = {
		'x': f"{p}/{q}",
		'fitted_F2_log_coefficient': float(fitF[0]),
		'predicted_F2_log_coefficient': expansion.F2LogCoefficient,
		'F2_log_coefficient_ok': slopeError <= F2_SLOPE_TOLERANCE,
		'fitted_G2_right_slope': float(fitRight[0]),
		'fitted_G2_left_slope': float(fitLeft[0]),
		'predicted_G2_right_slope': expansion.G2RightSlope,
		'predicted_G2_left_slope': expansion.G2LeftSlope,
		'closed_form_G2_right_slope': expansion.closedFormRightSlope,
		'G2_right_slope_ok': rightError <= G2_SLOPE_TOLERANCE,
		'G2_left_slope_ok': leftError <= G2_SLOPE_TOLERANCE,
		'fitted_jump': fittedJump,
		'predicted_jump': expansion.jump,
		'jump_ok': jumpError <= JUMP_TOLERANCE,
	}
	logger.info(
		f"Rational scan at {p}/{q}: F_2 log coefficient error {slopeError:.2%}, G_2 slope errors "
		f"{rightError:.2%} right / {leftError:.2%} left, jump error {jumpError:.2%}"
	)
	return table


# --------------------------------------------------------------------------- irrational scan

def runScanIrrational(
	source: OrbitInput,
	nList: Sequence[int],
	depth: int = 40,
	eps: float = 1e-9,
	mapper: Optional[ParallelMapper] = None,
	settings: Optional[NumericsSettings] = None
) -> ResultTable:
	"""
	The divergence scan along odd levels plus the F_2'/G_2' partial sums at the same point.

	The derivative series is reported when the orbit supports it; rational points and
	too shallow orbits leave those summary fields empty. ``settings`` supplies the orbit
	guard, the difference-quotient floor and the divergence threshold.
	"""
	numerics = settings or NumericsSettings()
	orbit = orbitOf(source, max(depth, max(nList) + 2), numerics.cfGuard)
	rows = divergenceScan(orbit, nList, dqFloor=numerics.dqFloor, eps=eps, mapper=mapper)
	table = ResultTable(anchor='difference-quotient-divergence', columns=['n', 'h', 'DQ', 'DQ_err', 'method', 'bracket_ok'])
	for row in rows:
		table.addRow([row.n, row.hFloat, row.dq, row.errorEstimate, row.method, row.bracketOk])

	magnitudes = [abs(row.dq) for row in rows]
	summary = {
		'max_abs_DQ': max(magnitudes),
		'DQ_increasing': all(later > earlier for earlier, later in zip(magnitudes, magnitudes[1:])),
		'brackets_ok': all(row.bracketOk for row in rows),
		'F2_prime': None,
		'G2_prime': None,
		'derivative_divergent': None,
	}
	levels = min(depth, orbit.usableDepth - 1)
	if levels >= 1:
		try:
			series = derivativeSeries(orbit, levels, threshold=numerics.divergenceThreshold)
			summary['F2_prime'] = None if series.F2Prime is None else series.F2Prime.value
			summary['G2_prime'] = series.G2Prime.value
			summary['derivative_divergent'] = series.divergent
		except (DomainError, InsufficientDepthError) as e:
			logger.info(f"Derivative series skipped: {e}")
	table.summary = summary
	return table


# --------------------------------------------------------------------------- modulus of continuity

def _mocTask(task: Tuple[Fraction, Fraction, float]) -> Tuple[float, float]:
	_, y, eps = task
	value = analytic.evalSeries(y, 2, eps)[0]
	return value.value, value.errorBound


def runMocSampler(
	source: OrbitInput,
	pairCount: int = 1000,
	seed: int = 0,
	depth: int = 40,
	mapper: Optional[ParallelMapper] = None,
	settings: Optional[NumericsSettings] = None
) -> ResultTable:
	"""
	Samples y = x +- 10^-u, u uniform in [1, 6], and reports
	|F_2(x) - F_2(y)| / (|x - y| log(1/|x - y|) + |x - y|).

	The summary carries the largest ratio (an empirical modulus constant), the largest ratio
	in the first and last decade of |x - y|, and whether any ratio exceeds ten times the
	running median of the ratios before it.
	"""
	orbit = orbitOf(source, depth, (settings or NumericsSettings()).cfGuard)
	x = orbit.x
	rng = np.random.default_rng(seed)
	exponents = rng.uniform(*MOC_EXPONENT_RANGE, size=pairCount)
	signs = rng.choice((-1.0, 1.0), size=pairCount)
	base = analytic.evalSeries(x, 2, analytic.EPS_FLOOR * 10.0)[0]

	tasks: List[Tuple[Fraction, Fraction, float]] = []
	deltas: List[Fraction] = []
	for exponent, sign in zip(exponents, signs):
		delta = Fraction(float(sign * 10.0 ** -exponent))
		if delta == 0:
			continue
		deltas.append(delta)
		tasks.append((x, x + delta, max(analytic.EPS_FLOOR * 10.0, _DQ_EPS_SCALE * abs(float(delta)))))
	runner = mapper or ParallelMapper(1)
	values = runner.map(_mocTask, tasks, description='moc sampler')

	table = ResultTable(anchor='modulus-of-continuity', columns=['y', 'distance', 'abs_diff', 'abs_diff_err', 'bound_ratio'])
	ratios: List[float] = []
	distances: List[float] = []
	for (_, y, _), delta, (value, bound) in zip(tasks, deltas, values):
		distance = abs(float(delta))
		difference = abs(value - base.value)
		ratio = difference / (distance * math.log(1.0 / distance) + distance)
		ratios.append(ratio)
		distances.append(distance)
		table.addRow([float(y), distance, difference, bound + base.errorBound, ratio])

	spikes = 0
	excess = 0.0
	for index in range(MOC_MEDIAN_WARMUP, len(ratios)):
		median = float(np.median(ratios[:index]))
		if median > 0.0:
			excess = max(excess, ratios[index] / median)
		if ratios[index] > MOC_MEDIAN_FACTOR * median:
			spikes += 1
	first = [r for r, d in zip(ratios, distances) if d >= 10.0 ** -(MOC_EXPONENT_RANGE[0] + 1)]
	last = [r for r, d in zip(ratios, distances) if d < 10.0 ** -(MOC_EXPONENT_RANGE[1] - 1)]
	table.summary = {
		'x': float(orbit.x),
		'pairs': len(ratios),
		'max_ratio': max(ratios) if ratios else math.nan,
		'median_ratio': float(np.median(ratios)) if ratios else math.nan,
		'first_decade_max': max(first) if first else math.nan,
		'last_decade_max': max(last) if last else math.nan,
		'ratios_finite': all(math.isfinite(r) for r in ratios),
		'median_spikes': spikes,
		'max_median_excess': excess,
	}
	logger.info(f"Modulus sampler: {len(ratios)} pairs, max ratio {table.summary['max_ratio']:.4g}")
	return table

# --- END: cli/experiments.py ---
