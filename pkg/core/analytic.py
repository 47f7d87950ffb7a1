# --- START: core/analytic.py ---
# core/analytic.py
"""
Certified evaluation of the divisor-sum series.

On the real line:  F_k(x) = sum sigma_{k-1}(n) n^-(k+1) sin(2 pi n x),  G_k(x) the cosine
analogue and phi_k = G_k + i F_k. Two evaluators are provided: the naive partial sum
(with a harmonic-type tail bound) and the divisor-swapped form
	G_k(x) = pi^2 sum_e B2({e x}) / e^(k+1),    F_k(x) = sum_e Cl2(2 pi {e x}) / e^(k+1),
whose tail decays like E^-k.

In the upper half plane: phi_k and its derivatives, and the Eisenstein series E_k,
through their q-expansions with geometric tail bounds.

The L_k series, L_k(x) = 2 pi^2 sum_r ((r x)) / r^k, gives an independent route to G_k
through G_k(x) = int_0^x L_k + zeta(2) zeta(k+1).
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import zeta as hurwitzZeta

from . import arith
from . import special
from .contfrac import formatReal
from .exceptions import CertificateError, DomainError, QuadratureError, ResourceError
from .quadrature import gaussLegendreRule

logger: logging.Logger = logging.getLogger(__name__)

RealLike = Union[float, int, Fraction]

EPS_FLOOR: float = 1e-13
DEFAULT_EPS: float = 1e-9
Q_SERIES_MIN_IMAG: float = 0.05
NAIVE_MAX_TERMS: int = 5_000_000
HYPERBOLA_CHUNK: int = 65_536
GK_INTEGRAL_BUDGET: int = 20_000_000
METHODS = ('naive', 'hyperbola')

_UNIT_ROUNDOFF: float = 2.0 ** -53
# absolute floor for kernel evaluation and summation rounding in the real-line evaluators
_EVALUATION_FLOOR: float = 5e-15
_ROUNDING_PROBE_TERMS: int = 64
_GRID_CELLS: int = 4_000_000


@dataclass(frozen=True)
class SeriesValue:
	"""A value together with a certified absolute error bound."""
	value: Union[float, complex]
	errorBound: float
	termsUsed: int

	def __add__(self: 'SeriesValue', other: 'SeriesValue') -> 'SeriesValue':
		return SeriesValue(self.value + other.value, self.errorBound + other.errorBound, max(self.termsUsed, other.termsUsed))

	def scaled(self: 'SeriesValue', factor: Union[float, complex]) -> 'SeriesValue':
		return SeriesValue(self.value * factor, self.errorBound * abs(factor), self.termsUsed)


@dataclass(frozen=True)
class UpperHalfPoint:
	"""A point re + i im of the upper half plane."""
	re: float
	im: float

	def __post_init__(self: 'UpperHalfPoint') -> None:
		if not self.im > 0.0:
			raise DomainError(f"Upper half plane points need im > 0, got {self.im}.")

	@property
	def z(self: 'UpperHalfPoint') -> complex:
		return complex(self.re, self.im)

	@classmethod
	def fromComplex(cls, value: complex) -> 'UpperHalfPoint':
		return cls(float(value.real), float(value.imag))


PointLike = Union[UpperHalfPoint, complex]


def _asComplex(point: PointLike) -> complex:
	if isinstance(point, UpperHalfPoint):
		return point.z
	value = complex(point)
	if not value.imag > 0.0:
		raise DomainError(f"Expected a point of the upper half plane, got {value}.")
	return value


def _checkWeight(k: int) -> None:
	if not isinstance(k, (int, np.integer)) or k < 2 or k % 2:
		raise DomainError(f"k must be an even integer >= 2, got {k}.")


def _checkEps(eps: float, epsFloor: float) -> None:
	if not eps >= epsFloor:
		raise DomainError(f"eps={eps} is below the binary64 floor {epsFloor}.")


@lru_cache(maxsize=16)
def _cachedTable(weightExponent: int, limit: int) -> arith.DivisorTable:
	return arith.buildDivisorTable(weightExponent, limit)


def divisorTable(weightExponent: int, limit: int) -> arith.DivisorTable:
	"""Shared read-only table, rounded up to a power of two so nearby requests reuse it."""
	rounded = 1 << max(6, (limit - 1).bit_length())
	return _cachedTable(weightExponent, rounded)


# --------------------------------------------------------------------------- real line

def _naiveTermCount(k: int, eps: float) -> int:
	"""Smallest N whose tail bound min((2 + ln N)/N, zeta(k-1)/N) is below eps."""
	if k >= 4:
		n = math.ceil(arith.zetaInteger(k - 1).value / eps)
	else:
		n = max(2, math.ceil(2.0 / eps))
		for _ in range(50):
			nextN = math.ceil((2.0 + math.log(n)) / eps)
			if nextN == n:
				break
			n = nextN
	return n


def _naiveTail(k: int, n: int) -> float:
	tail = (2.0 + math.log(n)) / n
	if k >= 4:
		tail = min(tail, arith.zetaInteger(k - 1).value / n)
	return tail


def _evalNaive(
	x: RealLike, k: int, eps: float, table: Optional[arith.DivisorTable], maxTerms: int, chunk: int, memoryCapBytes: int
) -> Tuple[SeriesValue, SeriesValue]:
	n = _naiveTermCount(k, 0.5 * eps)
	if n > maxTerms:
		raise ResourceError(
			f"Naive evaluation at eps={eps} needs {n} terms, above the cap of {maxTerms}; use the hyperbola method."
		)
	if table is None or table.weightExponent != k - 1 or table.limit < n:
		table = arith.buildDivisorTable(k - 1, n, memoryCapBytes)
	sinSum = 0.0
	cosSum = 0.0
	rounding = 0.0
	for start in range(1, n + 1, chunk):
		stop = min(n, start + chunk - 1)
		indices = np.arange(start, stop + 1, dtype=np.int64)
		sigma = np.asarray(table.values[start:stop + 1], dtype=np.float64)
		coefficients = sigma / indices.astype(np.float64) ** (k + 1)
		parts, partBounds = special.fractionalParts(x, indices)
		angles = special.TWO_PI * parts
		sinSum += math.fsum((coefficients * np.sin(angles)).tolist())
		cosSum += math.fsum((coefficients * np.cos(angles)).tolist())
		rounding += float(np.sum(coefficients * (special.TWO_PI * partBounds + 4.0 * _UNIT_ROUNDOFF)))
	bound = _naiveTail(k, n) + rounding + _EVALUATION_FLOOR
	logger.debug(f"Naive evaluation x={formatReal(x)} k={k}: N={n}, bound={bound:.3e}")
	return SeriesValue(sinSum, bound, n), SeriesValue(cosSum, bound, n)


def _hyperbolaTermCount(k: int, tailBudget: float) -> int:
	constant = max(math.pi ** 2 / 6.0, special.clausenMaximum())
	return max(1, math.ceil((constant / (k * tailBudget)) ** (1.0 / k)))


def _hyperbolaTail(k: int, terms: int) -> Tuple[float, float]:
	"""Tail bounds (F, G) after E outer terms: sup|kernel| / (k E^k)."""
	base = 1.0 / (k * float(terms) ** k)
	return special.clausenMaximum() * base, (math.pi ** 2 / 6.0) * base


def _hyperbolaKernelSums(parts: np.ndarray, partBounds: np.ndarray, weights: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
	"""
	Weighted kernel sums over axis 0.

	Returns:
		(F sums, G sums, F rounding bounds, G rounding bounds)
	"""
	clausenValues = special.clausen2(special.TWO_PI * parts)
	b2Values = special.bernoulliB2(parts)
	sumF = np.sum(weights * clausenValues, axis=0)
	sumG = (math.pi ** 2) * np.sum(weights * b2Values, axis=0)
	roundF = np.sum(weights * special.clausenRoundingBound(partBounds + _UNIT_ROUNDOFF), axis=0)
	roundG = (math.pi ** 2) * np.sum(weights * (partBounds + _UNIT_ROUNDOFF), axis=0)
	return sumF, sumG, roundF, roundG


def _roundingProbe(x: RealLike, k: int) -> float:
	"""Rounding contribution of the first outer terms, which dominate it."""
	e = np.arange(1, _ROUNDING_PROBE_TERMS + 1, dtype=np.int64)
	parts, partBounds = special.fractionalParts(x, e)
	weights = e.astype(np.float64) ** -(k + 1)
	_, _, roundF, roundG = _hyperbolaKernelSums(parts, partBounds, weights)
	return float(max(roundF, roundG)) + 1e-15


def _evalHyperbola(x: RealLike, k: int, eps: float, chunk: int) -> Tuple[SeriesValue, SeriesValue]:
	tailBudget = eps - _roundingProbe(x, k) - _EVALUATION_FLOOR
	if tailBudget <= 0.1 * eps:
		raise CertificateError(f"eps={eps} is not attainable at x={formatReal(x)} in binary64 arithmetic.")
	terms = _hyperbolaTermCount(k, tailBudget)
	sumF = sumG = roundF = roundG = 0.0
	for start in range(1, terms + 1, chunk):
		e = np.arange(start, min(terms, start + chunk - 1) + 1, dtype=np.int64)
		parts, partBounds = special.fractionalParts(x, e)
		weights = e.astype(np.float64) ** -(k + 1)
		f, g, rf, rg = _hyperbolaKernelSums(parts, partBounds, weights)
		sumF += float(f)
		sumG += float(g)
		roundF += float(rf)
		roundG += float(rg)
	tailF, tailG = _hyperbolaTail(k, terms)
	boundF = tailF + roundF + _EVALUATION_FLOOR
	boundG = tailG + roundG + _EVALUATION_FLOOR
	logger.debug(f"Hyperbola evaluation x={formatReal(x)} k={k}: E={terms}, bounds=({boundF:.2e}, {boundG:.2e})")
	return SeriesValue(sumF, boundF, terms), SeriesValue(sumG, boundG, terms)


def evalSeries(
	x: RealLike,
	k: int = 2,
	eps: float = DEFAULT_EPS,
	method: str = 'hyperbola',
	table: Optional[arith.DivisorTable] = None,
	maxTerms: int = NAIVE_MAX_TERMS,
	chunk: int = HYPERBOLA_CHUNK,
	epsFloor: float = EPS_FLOOR,
	memoryCapBytes: int = arith.DEFAULT_MEMORY_CAP_BYTES
) -> Tuple[SeriesValue, SeriesValue]:
	"""
	Evaluates F_k(x) and G_k(x) with certified error bounds.

	Args:
		x (RealLike): Real point; Fractions keep the fractional parts {n x} exact.
		k (int): Even weight >= 2.
		eps (float): Target absolute accuracy for both values.
		method (str): 'naive' or 'hyperbola'.
		table (Optional[arith.DivisorTable]): Shared sigma_{k-1} table for the naive method.
		maxTerms (int): Cap on naive terms.
		chunk (int): Block size of the vectorised sums.
		epsFloor (float): Smallest admissible eps.
		memoryCapBytes (int): Memory cap for a divisor table the naive method has to build.

	Returns:
		Tuple[SeriesValue, SeriesValue]: (F_k(x), G_k(x)).

	Raises:
		DomainError: Odd k, eps below the floor, or an unknown method.
		ResourceError: Naive evaluation needing more than maxTerms terms.
	"""
	_checkWeight(k)
	_checkEps(eps, epsFloor)
	reduced = special.reduceModOne(x)
	if method == 'naive':
		return _evalNaive(reduced, k, eps, table, maxTerms, chunk, memoryCapBytes)
	if method == 'hyperbola':
		return _evalHyperbola(reduced, k, eps, chunk)
	raise DomainError(f"Unknown evaluation method '{method}'; expected one of {METHODS}.")


def evalPhi(x: RealLike, k: int = 2, eps: float = DEFAULT_EPS, method: str = 'hyperbola') -> SeriesValue:
	"""phi_k(x) = G_k(x) + i F_k(x) on the real line."""
	f, g = evalSeries(x, k, eps, method)
	return SeriesValue(complex(g.value, f.value), f.errorBound + g.errorBound, f.termsUsed)


def evalSeriesGrid(xs: Sequence[float], k: int = 2, eps: float = DEFAULT_EPS) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
	"""
	Vectorised hyperbola evaluation of F_k and G_k at many binary64 points.

	Returns:
		Tuple[np.ndarray, np.ndarray, np.ndarray]: F values, G values, per-point bounds (max of both).
	"""
	_checkWeight(k)
	_checkEps(eps, EPS_FLOOR)
	points = np.asarray(xs, dtype=np.float64)
	points = points - np.floor(points)
	tailBudget = eps - 4e-14 - _EVALUATION_FLOOR
	if tailBudget <= 0.1 * eps:
		raise CertificateError(f"eps={eps} is not attainable for a grid of binary64 points.")
	terms = _hyperbolaTermCount(k, tailBudget)
	sumF = np.zeros(points.shape)
	sumG = np.zeros(points.shape)
	rounding = np.zeros(points.shape)
	rows = max(1, _GRID_CELLS // max(points.size, 1))
	for start in range(1, terms + 1, rows):
		e = np.arange(start, min(terms, start + rows - 1) + 1, dtype=np.float64)
		products = e[:, None] * points[None, :]
		parts = products - np.floor(products)
		partBounds = products * _UNIT_ROUNDOFF
		weights = (e ** -(k + 1))[:, None]
		f, g, rf, rg = _hyperbolaKernelSums(parts, partBounds, weights)
		sumF += f
		sumG += g
		rounding += np.maximum(rf, rg)
	tailF, tailG = _hyperbolaTail(k, terms)
	bounds = max(tailF, tailG) + rounding + _EVALUATION_FLOOR
	return sumF, sumG, bounds


# --------------------------------------------------------------------------- upper half plane

def _powerGeometricTail(ratio: float, power: int, n: int) -> float:
	"""Bound for sum_{m > n} m^power ratio^m, or inf when the geometric bound does not apply yet."""
	if ratio <= 0.0:
		return 0.0
	rho = ((n + 2.0) / (n + 1.0)) ** power * ratio
	if rho >= 1.0:
		return math.inf
	logFirst = power * math.log(n + 1.0) + (n + 1.0) * math.log(ratio)
	if logFirst < -745.0:
		return 0.0
	return math.exp(logFirst) / (1.0 - rho)


def _qSeriesTermCount(ratio: float, power: int, target: float) -> int:
	n = 1
	while _powerGeometricTail(ratio, power, n) > target:
		n = n * 2 if n < 64 else n + max(1, n // 4)
		if n > 10_000_000:
			raise CertificateError("q-series does not reach its tolerance; the point is too close to the real axis.")
	return n


def divisorQSeries(
	zs: np.ndarray,
	k: int,
	exponent: int,
	tolerance: float,
	minImag: float = Q_SERIES_MIN_IMAG
) -> Tuple[np.ndarray, np.ndarray, int]:
	"""
	S(z) = sum_n sigma_{k-1}(n) n^exponent q^n, q = exp(2 pi i z), for an array of points.

	The tail uses sigma_{k-1}(n) <= n^(k-1) * n, so terms are bounded by n^(k+exponent) |q|^n.

	Returns:
		Tuple[np.ndarray, np.ndarray, int]: values, per-point error bounds, terms used.

	Raises:
		CertificateError: If some point has imaginary part below minImag.
	"""
	points = np.atleast_1d(np.asarray(zs, dtype=np.complex128))
	smallestImag = float(points.imag.min())
	if smallestImag < minImag:
		raise CertificateError(
			f"q-series certificate needs im(z) >= {minImag}, got {smallestImag:.4g}."
		)
	ratio = math.exp(-2.0 * math.pi * smallestImag)
	power = max(k + exponent, 0)
	terms = _qSeriesTermCount(ratio, power, tolerance)
	table = divisorTable(k - 1, terms)
	n = np.arange(1, terms + 1, dtype=np.float64)
	coefficients = table.asFloatArray(terms) * n ** exponent
	values = np.empty(points.shape, dtype=np.complex128)
	bounds = np.empty(points.shape, dtype=np.float64)
	rows = max(1, _GRID_CELLS // terms)
	for start in range(0, points.size, rows):
		block = points[start:start + rows]
		powers = np.exp(2j * math.pi * block[:, None] * n[None, :])
		termsMatrix = coefficients[None, :] * powers
		values[start:start + rows] = termsMatrix.sum(axis=1)
		magnitudes = np.abs(termsMatrix)
		phaseError = (4.0 + 2.0 * math.pi * n[None, :] * np.abs(block.real)[:, None]) * _UNIT_ROUNDOFF
		bounds[start:start + rows] = (magnitudes * (phaseError + 2.0 * _UNIT_ROUNDOFF)).sum(axis=1)
	tail = _powerGeometricTail(ratio, power, terms)
	return values, bounds + tail, terms


def evalPhiDerivativeMany(
	zs: np.ndarray,
	k: int,
	order: int,
	eps: float = DEFAULT_EPS,
	minImag: float = Q_SERIES_MIN_IMAG
) -> Tuple[np.ndarray, np.ndarray, int]:
	"""
	phi_k^(order)(z) = (2 pi i)^order sum sigma_{k-1}(n) n^(order-k-1) q^n at many points.

	Returns:
		Tuple[np.ndarray, np.ndarray, int]: values, error bounds, terms used.
	"""
	_checkWeight(k)
	if order < 0:
		raise DomainError(f"Derivative order must be >= 0, got {order}.")
	scale = (2j * math.pi) ** order
	values, bounds, terms = divisorQSeries(zs, k, order - k - 1, eps / abs(scale), minImag)
	return values * scale, bounds * abs(scale), terms


def evalPhiDerivative(
	z: PointLike,
	k: int = 2,
	order: int = 0,
	eps: float = DEFAULT_EPS,
	minImag: float = Q_SERIES_MIN_IMAG
) -> SeriesValue:
	"""phi_k^(order)(z) at a single point of the upper half plane."""
	values, bounds, terms = evalPhiDerivativeMany(np.array([_asComplex(z)]), k, order, eps, minImag)
	return SeriesValue(complex(values[0]), float(bounds[0]), terms)


def evalPhi2Derivatives(z: PointLike, order: int, eps: float = DEFAULT_EPS, minImag: float = Q_SERIES_MIN_IMAG) -> SeriesValue:
	"""
	phi_2, phi_2', phi_2'' or phi_2''' on the upper half plane.

	Raises:
		DomainError: If order is outside 0..3.
		CertificateError: If im(z) < minImag.
	"""
	if order not in (0, 1, 2, 3):
		raise DomainError(f"phi_2 derivatives are provided for orders 0..3, got {order}.")
	return evalPhiDerivative(z, 2, order, eps, minImag)


def evalEisensteinMany(zs: np.ndarray, k: int, eps: float = DEFAULT_EPS, minImag: float = Q_SERIES_MIN_IMAG) -> Tuple[np.ndarray, np.ndarray, int]:
	"""E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n at many points."""
	_checkWeight(k)
	factor = float(arith.eisensteinFactor(k))
	values, bounds, terms = divisorQSeries(zs, k, 0, eps / abs(factor), minImag)
	return 1.0 + factor * values, abs(factor) * bounds, terms


def evalEisenstein(z: PointLike, k: int = 2, eps: float = DEFAULT_EPS, minImag: float = Q_SERIES_MIN_IMAG) -> SeriesValue:
	"""
	E_k(z) from its q-expansion (k = 2 gives the quasi-modular E_2).

	Raises:
		DomainError: For odd k or a point off the upper half plane.
		CertificateError: If im(z) < minImag.
	"""
	values, bounds, terms = evalEisensteinMany(np.array([_asComplex(z)]), k, eps, minImag)
	return SeriesValue(complex(values[0]), float(bounds[0]), terms)


# --------------------------------------------------------------------------- L_k oracle

def evalLk(x: RealLike, k: int = 2, eps: float = DEFAULT_EPS, maxTerms: int = NAIVE_MAX_TERMS) -> SeriesValue:
	"""
	L_k(x) = 2 pi^2 sum_r ((r x)) / r^k.

	For rational p/q with q <= maxTerms the sum is folded over residues:
	L_k(p/q) = 2 pi^2 q^-k sum_{j<q} ((j p / q)) zeta(k, j/q), exact up to rounding.
	Otherwise the partial sum is truncated with tail pi^2 / ((k-1) R^(k-1)).
	"""
	_checkWeight(k)
	if isinstance(x, (Fraction, int)):
		fx = Fraction(x)
		p, q = fx.numerator % fx.denominator, fx.denominator
		if q == 1:
			return SeriesValue(0.0, 0.0, 0)
		if q <= maxTerms:
			j = np.arange(1, q, dtype=np.int64)
			saw = ((j * p) % q).astype(np.float64) / q
			saw = np.where(saw == 0.0, 0.0, saw - 0.5)
			zetas = hurwitzZeta(float(k), j.astype(np.float64) / q)
			value = 2.0 * math.pi ** 2 * float(q) ** -k * math.fsum((saw * zetas).tolist())
			rounding = 2.0 * math.pi ** 2 * float(q) ** -k * float(np.sum(np.abs(zetas))) * 16.0 * _UNIT_ROUNDOFF
			return SeriesValue(value, rounding + 1e-15, q - 1)
		x = float(fx)
	xf = float(x)
	terms = math.ceil((math.pi ** 2 / ((k - 1) * 0.5 * eps)) ** (1.0 / (k - 1)))
	if terms > maxTerms:
		raise ResourceError(f"L_{k} at eps={eps} needs {terms} terms, above the cap of {maxTerms}.")
	r = np.arange(1, terms + 1, dtype=np.float64)
	saw = special.sawtooth(r * xf)
	value = 2.0 * math.pi ** 2 * math.fsum((saw / r ** k).tolist())
	rounding = 2.0 * math.pi ** 2 * float(np.sum(r * abs(xf) * _UNIT_ROUNDOFF / r ** k))
	tail = math.pi ** 2 / ((k - 1) * float(terms) ** (k - 1))
	return SeriesValue(value, tail + rounding + _EVALUATION_FLOOR, terms)


def gkViaIntegral(x: RealLike, k: int = 2, eps: float = 1e-7, budget: int = GK_INTEGRAL_BUDGET) -> SeriesValue:
	"""
	G_k(x) = int_0^x L_k(t) dt + zeta(2) zeta(k+1).

	Term r contributes 2 pi^2 r^-k int_0^x ((r t)) dt. The integrand is linear between the
	breakpoints j/r, so two-point Gauss-Legendre on each piece is exact; the series is cut at R
	where the tail (pi^2/4) / (k R^k) (from |int_0^y ((s)) ds| <= 1/8) is below eps/2.

	Raises:
		DomainError: If x is outside [0, 1).
		QuadratureError: If the composite rule would exceed the node budget.
	"""
	_checkWeight(k)
	xf = float(x)
	if not 0.0 <= xf < 1.0:
		raise DomainError(f"gk_via_integral needs x in [0, 1), got {formatReal(x)}.")
	constant = arith.zetaProductConstant(k)
	constantBound = (math.pi ** 2 / 6.0) * arith.zetaInteger(k + 1).errorBound + 4.0 * math.ulp(constant)
	if xf == 0.0:
		return SeriesValue(constant, constantBound, 0)
	terms = max(1, math.ceil((math.pi ** 2 / (4.0 * k * 0.5 * eps)) ** (1.0 / k)))
	nodesNeeded = sum(2 * (math.floor(r * xf) + 1) for r in range(1, terms + 1))
	if nodesNeeded > budget:
		raise QuadratureError(
			f"gk_via_integral at eps={eps} needs {nodesNeeded} nodes, budget is {budget}.",
			evaluations=0
		)
	nodes, weights = gaussLegendreRule(2)
	total = 0.0
	for r in range(1, terms + 1):
		pieces = np.append(np.arange(0, math.floor(r * xf) + 1, dtype=np.float64) / r, xf)
		pieces = pieces[np.concatenate(([True], np.diff(pieces) > 0.0))]
		left, right = pieces[:-1], pieces[1:]
		half = 0.5 * (right - left)
		mid = 0.5 * (right + left)
		t = mid[:, None] + half[:, None] * nodes[None, :]
		integral = float(np.sum(half[:, None] * weights[None, :] * special.sawtooth(r * t)))
		total += 2.0 * math.pi ** 2 * integral / r ** k
	tail = (math.pi ** 2 / 4.0) / (k * float(terms) ** k)
	rounding = 2.0 * math.pi ** 2 * arith.zetaInteger(k).value * 1e-15
	logger.debug(f"gk_via_integral x={formatReal(x)} k={k}: R={terms}, nodes={nodesNeeded}")
	return SeriesValue(total + constant, tail + rounding + constantBound, terms)

# --- END: core/analytic.py ---
