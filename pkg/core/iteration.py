# --- START: core/iteration.py ---
# core/iteration.py
"""
F_2 and G_2 along the Gauss-map orbit.

Taking the imaginary and real parts of the phi_2 functional equation for S on (0, 1) gives,
with y = T(x),
	F_2(x) = -x^4 F_2(y) + (pi^3/3) x log(1/x) + P(x) - 6 calI(x),
	G_2(x) =  x^4 G_2(y) + pi^2 x^2 log(1/x)  + Q(x) + 6 calJ(x),
where calI, calJ are the integrals int_0^x t^2 (x - 2t) Psi(1/t) dt of F_2 and G_2.
Iterating along the orbit y_k = T^k(x) weights the k-th step by beta_{k-1}^4 (with the sign
(-1)^k for F_2). Differentiating every step with dy_k/dx = (-1)^k / beta_{k-1}^2 gives the
series for F_2' and G_2'.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
from numpy.polynomial import Polynomial

from . import analytic
from . import arith
from .analytic import SeriesValue
from .contfrac import DEFAULT_GUARD, GaussOrbit, ParsedReal, expandCf, formatReal, orbitFromParsed, _logInverse
from .exceptions import DomainError, InsufficientDepthError
from .funceq import ResidualReport
from .inversion import gaussIntegrals, seriesSupremum

logger: logging.Logger = logging.getLogger(__name__)

PI3: float = math.pi ** 3
DEFAULT_DIVERGENCE_THRESHOLD: float = 1e3
DEFAULT_RATIONAL_DEPTH: int = 10_000
_INNER_EPS_FLOOR: float = 1e-15
_DIVERGENCE_WINDOW: int = 3

OrbitSource = Union[GaussOrbit, ParsedReal, Fraction, int]


def cuspLinearCoefficient() -> float:
	"""Im C for gamma = S: -2 pi (zeta(2) log 2pi - zeta(2) - zeta'(2))."""
	zeta2 = math.pi ** 2 / 6.0
	return -2.0 * math.pi * (zeta2 * math.log(2.0 * math.pi) - zeta2 - arith.zetaPrimeTwo())


def inversionPolynomials() -> Tuple[Polynomial, Polynomial]:
	"""
	P(x) = -(pi^3/18) x^3 + (pi^3/2) x^2 + Im(C) x  and
	Q(x) = (3 pi^2/2) x^2 - (pi^4/6) x + zeta(2) zeta(3).
	"""
	pPoly = Polynomial([0.0, cuspLinearCoefficient(), PI3 / 2.0, -PI3 / 18.0])
	qPoly = Polynomial([arith.zetaProductConstant(2), -math.pi ** 4 / 6.0, 1.5 * math.pi ** 2])
	return pPoly, qPoly


@dataclass(frozen=True)
class IterationRecord:
	"""
	One step of the orbit expansion.

	u1 = (-1)^k beta_{k-1}^2 beta_k gamma_k, u2 = (-1)^k beta_{k-1}^4 P(y_k), u3 = (-1)^k beta_{k-1}^4 calI_k;
	v1 = beta_{k-1} beta_k^2 gamma_k, v2 = beta_{k-1}^4 Q(y_k), v3 = beta_{k-1}^4 calJ_k.
	The F_2 step is (pi^3/3) u1 + u2 - 6 u3 and the G_2 step is pi^2 v1 + v2 + 6 v3.
	"""
	k: int
	y: float
	betaPrevious: float
	beta: float
	gamma: float
	u1: float
	u2: float
	u3: float
	v1: float
	v2: float
	v3: float
	calI: SeriesValue
	calJ: SeriesValue
	auxA: Fraction
	auxB: Fraction
	auxC: Fraction

	@property
	def stepF(self: 'IterationRecord') -> float:
		return PI3 / 3.0 * self.u1 + self.u2 - 6.0 * self.u3

	@property
	def stepG(self: 'IterationRecord') -> float:
		return math.pi ** 2 * self.v1 + self.v2 + 6.0 * self.v3


@dataclass(frozen=True)
class IterationTerms:
	"""All steps of an orbit evaluation and the remainder (-1)^m beta_{m-1}^4 Psi(y_m)."""
	records: Tuple[IterationRecord, ...]
	truncationDepth: int
	remainderF: SeriesValue
	remainderG: SeriesValue


@dataclass(frozen=True)
class CfEvaluation:
	F: SeriesValue
	G: SeriesValue
	terms: IterationTerms


def resolveOrbit(source: OrbitSource, maxDepth: Optional[int] = None) -> GaussOrbit:
	"""Accepts an orbit, a parsed RealSpec or an exact rational in (0, 1)."""
	if isinstance(source, GaussOrbit):
		return source
	if isinstance(source, ParsedReal):
		depth = maxDepth if maxDepth is not None else (len(source.quotients) if source.quotients else DEFAULT_RATIONAL_DEPTH)
		return orbitFromParsed(source, depth)
	return expandCf(Fraction(source), maxDepth if maxDepth is not None else DEFAULT_RATIONAL_DEPTH)


def auxiliaryCoefficients(orbit: GaussOrbit, k: int) -> Tuple[Fraction, Fraction, Fraction]:
	"""
	The exact coefficients
	A_k = -3 B^2 q_{k-1} q_k + 6 B beta_k q_{k-1} + 3 (-1)^k B^2 beta_k q_{k-1}^2,
	B_k = (-1)^k (3 B q_{k-1}^2 q_k - 3 beta_k q_{k-1}^2 - beta_k q_{k-1}^3) - 3 B beta_k q_{k-1}^3,
	C_k = -q_{k-1}^3 q_k, with B = beta_{k-1}.
	"""
	b = orbit.beta(k - 1)
	beta = orbit.beta(k)
	qPrev, q = orbit.q(k - 1), orbit.q(k)
	sign = 1 if k % 2 == 0 else -1
	auxA = -3 * b * b * qPrev * q + 6 * b * beta * qPrev + 3 * sign * b * b * beta * qPrev ** 2
	auxB = sign * (3 * b * qPrev ** 2 * q - 3 * beta * qPrev ** 2 - beta * qPrev ** 3) - 3 * b * beta * qPrev ** 3
	auxC = Fraction(-qPrev ** 3 * q)
	return auxA, auxB, auxC


def _truncationDepth(orbit: GaussOrbit, eps: float) -> Tuple[int, str]:
	"""First m with T^m = 0, or beta_{m-1}^4 sup|Psi| <= eps/4, or the end of the usable orbit."""
	supremum = seriesSupremum()
	limit = max(orbit.usableDepth, 0)
	for m in range(0, limit + 1):
		if orbit.T(m) == 0:
			return m, 'terminated'
		if float(orbit.beta(m - 1) ** 4) * supremum <= 0.25 * eps:
			return m, 'bounded'
	return limit, 'evaluated'


def evalF2G2Cf(source: OrbitSource, eps: float = 1e-9, maxDepth: Optional[int] = None) -> CfEvaluation:
	"""
	F_2(x), G_2(x) from the orbit expansion.

	Args:
		source (OrbitSource): The point; surrogates must reach beta^4 sup|Psi| <= eps/4 before
			their guard levels.
		eps (float): Target accuracy.
		maxDepth (Optional[int]): Depth of the orbit built from a RealSpec or rational.

	Returns:
		CfEvaluation: Values with certificates and the per-step records.

	Raises:
		DomainError: If x is not in (0, 1).
		InsufficientDepthError: If a surrogate orbit ends before the remainder is below eps/4.
	"""
	orbit = resolveOrbit(source, maxDepth)
	m, mode = _truncationDepth(orbit, eps)
	supremum = seriesSupremum()
	if mode == 'evaluated' and orbit.surrogate:
		raise InsufficientDepthError(
			f"Orbit of depth {orbit.depth} (guard {orbit.guard}) cannot push the remainder below {0.25 * eps:.2e}.",
			requiredDepth=orbit.depth + 1,
			availableDepth=orbit.depth
		)
	pPoly, qPoly = inversionPolynomials()
	share = 0.75 * eps / (6.0 * max(m, 1))
	records: List[IterationRecord] = []
	partsF: List[float] = []
	partsG: List[float] = []
	boundF = boundG = 0.0
	for k in range(m):
		records.append(_iterationRecord(orbit, k, pPoly, qPoly, share))
		record = records[-1]
		partsF.append(record.stepF)
		partsG.append(record.stepG)
		weight = float(orbit.beta(k - 1) ** 4)
		boundF += 6.0 * weight * record.calI.errorBound + 1e-15 * (abs(record.stepF) + weight)
		boundG += 6.0 * weight * record.calJ.errorBound + 1e-15 * (abs(record.stepG) + weight)

	weight = orbit.beta(m - 1) ** 4
	sign = 1 if m % 2 == 0 else -1
	if mode == 'terminated':
		g0 = arith.zetaProductConstant(2)
		remainderF = SeriesValue(0.0, 0.0, 0)
		remainderG = SeriesValue(float(weight) * g0, float(weight) * 4e-16 * g0, 0)
	elif mode == 'bounded':
		cap = float(weight) * supremum
		remainderF = SeriesValue(0.0, cap, 0)
		remainderG = SeriesValue(0.0, cap, 0)
	else:
		tailEps = max(analytic.EPS_FLOOR, 0.25 * eps / max(float(weight), 1e-300))
		f, g = analytic.evalSeries(orbit.T(m), 2, min(tailEps, 1.0))
		remainderF = f.scaled(sign * float(weight))
		remainderG = g.scaled(float(weight))
	partsF.append(remainderF.value)
	partsG.append(remainderG.value)

	F = SeriesValue(math.fsum(partsF), boundF + remainderF.errorBound, m)
	G = SeriesValue(math.fsum(partsG), boundG + remainderG.errorBound, m)
	logger.debug(f"Orbit evaluation used {m} steps ({mode}); F bound {F.errorBound:.2e}, G bound {G.errorBound:.2e}")
	return CfEvaluation(F=F, G=G, terms=IterationTerms(tuple(records), m, remainderF, remainderG))


def _iterationRecord(orbit: GaussOrbit, k: int, pPoly: Polynomial, qPoly: Polynomial, share: float) -> IterationRecord:
	b = orbit.beta(k - 1)
	beta = orbit.beta(k)
	y = orbit.T(k)
	gamma = orbit.gamma(k)
	sign = 1 if k % 2 == 0 else -1
	weight = float(b ** 4)
	innerEps = max(_INNER_EPS_FLOOR, share / max(weight, 1e-300))
	integrals = gaussIntegrals(y, min(innerEps, 1.0))
	yf = float(y)
	auxA, auxB, auxC = auxiliaryCoefficients(orbit, k)
	return IterationRecord(
		k=k,
		y=yf,
		betaPrevious=float(b),
		beta=float(beta),
		gamma=gamma,
		u1=sign * float(b * b * beta) * gamma,
		u2=sign * weight * float(pPoly(yf)),
		u3=sign * weight * integrals.calIF.value,
		v1=float(b * beta * beta) * gamma,
		v2=weight * float(qPoly(yf)),
		v3=weight * integrals.calIG.value,
		calI=integrals.calIF,
		calJ=integrals.calIG,
		auxA=auxA,
		auxB=auxB,
		auxC=auxC
	)


def oneStepResidual(x: Union[float, Fraction], eps: float = 1e-9) -> Tuple[ResidualReport, ResidualReport]:
	"""
	Checks the single inversion step at x in (0, 1) against the direct evaluator.

	Returns:
		Tuple[ResidualReport, ResidualReport]: reports for F_2 and G_2.
	"""
	value = Fraction(x)
	if not 0 < value < 1:
		raise DomainError(f"The inversion step needs x in (0, 1), got {formatReal(x)}.")
	inverse = 1 / value
	image = inverse - math.floor(inverse)
	pPoly, qPoly = inversionPolynomials()
	xf = float(value)
	weight = xf ** 4
	logInverse = _logInverse(value)
	direct = analytic.evalSeries(value, 2, 0.1 * eps)
	shifted = analytic.evalSeries(image, 2, 0.1 * eps) if image != 0 else (SeriesValue(0.0, 0.0, 0), SeriesValue(arith.zetaProductConstant(2), 1e-15, 0))
	integrals = gaussIntegrals(value, 0.1 * eps / 6.0)
	rhsF = -weight * shifted[0].value + PI3 / 3.0 * xf * logInverse + float(pPoly(xf)) - 6.0 * integrals.calIF.value
	rhsG = weight * shifted[1].value + math.pi ** 2 * xf * xf * logInverse + float(qPoly(xf)) + 6.0 * integrals.calIG.value
	reports = []
	for lhs, rhs, imageValue, integral in ((direct[0], rhsF, shifted[0], integrals.calIF), (direct[1], rhsG, shifted[1], integrals.calIG)):
		certificate = lhs.errorBound + weight * imageValue.errorBound + 6.0 * integral.errorBound + 1e-14 * (abs(rhs) + 10.0)
		reports.append(ResidualReport(residual=abs(lhs.value - rhs), certificate=certificate, parts={'lhs': complex(lhs.value), 'rhs': complex(rhs)}))
	return reports[0], reports[1]


# --------------------------------------------------------------------------- derivatives

@dataclass(frozen=True)
class DerivativeSeries:
	"""
	Partial sums of the F_2' and G_2' series.

	``F2Prime`` is None when ``divergent`` is set (see divergenceFlag). The error bounds of
	``F2Prime`` and ``G2Prime`` certify the computed levels only; ``tailEstimateF`` and
	``tailEstimateG`` hold the size of the last term as an uncertified guess at what the
	truncation drops.
	"""
	F2Prime: Optional[SeriesValue]
	G2Prime: SeriesValue
	divergent: bool
	gammaPartialSums: Tuple[float, ...]
	partialSumsF: Tuple[float, ...]
	partialSumsG: Tuple[float, ...]
	depth: int
	tailEstimateF: float = 0.0
	tailEstimateG: float = 0.0


def divergenceFlag(increments: Sequence[float], threshold: float = DEFAULT_DIVERGENCE_THRESHOLD) -> bool:
	"""
	True when the gamma-term partial sums pass ``threshold`` while still growing: the last
	three increments are positive and strictly increasing.
	"""
	if len(increments) < _DIVERGENCE_WINDOW:
		return False
	last = list(increments[-_DIVERGENCE_WINDOW:])
	rising = all(value > 0.0 for value in last) and all(earlier < later for earlier, later in zip(last, last[1:]))
	return math.fsum(increments) > threshold and rising


def _derivativeTerms(orbit: GaussOrbit, k: int, pPoly: Polynomial, qPoly: Polynomial, eps: float) -> Tuple[float, float, float, float]:
	"""Returns (F2' term, G2' term, gamma term, error bound) for level k."""
	b = orbit.beta(k - 1)
	beta = orbit.beta(k)
	y = orbit.T(k)
	yf = float(y)
	gamma = orbit.gamma(k)
	qPrev = orbit.q(k - 1)
	sign = 1 if k % 2 == 0 else -1
	b2 = float(b * b)
	b3q = float(b ** 3 * qPrev)
	bBeta = float(b * beta)
	beta2y = float(beta * beta * y)
	innerEps = max(_INNER_EPS_FLOOR, eps / max(b2, 1e-300))
	integrals = gaussIntegrals(y, min(innerEps, 1.0))
	nextF, nextG = analytic.evalSeries(orbit.T(k + 1), 2, max(analytic.EPS_FLOOR, min(1.0, eps / max(beta2y, 1e-300))))
	pValue, qValue = float(pPoly(yf)), float(qPoly(yf))
	pSlope, qSlope = float(pPoly.deriv()(yf)), float(qPoly.deriv()(yf))

	gammaTerm = PI3 / 3.0 * float(b) * gamma
	termF = (gammaTerm
			 - PI3 / 3.0 * (4.0 * float(qPrev * b * beta) * gamma + b2)
			 + pSlope * b2 - 4.0 * pValue * b3q
			 + 6.0 * (4.0 * b3q * integrals.calIF.value - b2 * integrals.jF.value + beta2y * nextF.value))
	termG = sign * (math.pi ** 2 * (2.0 * float(beta) * gamma - 4.0 * float(qPrev * beta * beta) * gamma - bBeta)
					+ qSlope * b2 - 4.0 * qValue * b3q
					+ 6.0 * (-4.0 * b3q * integrals.calIG.value + b2 * integrals.jG.value - beta2y * nextG.value))
	bound = 6.0 * (4.0 * abs(b3q) * max(integrals.calIF.errorBound, integrals.calIG.errorBound)
				   + b2 * max(integrals.jF.errorBound, integrals.jG.errorBound)
				   + beta2y * max(nextF.errorBound, nextG.errorBound)) + 1e-15 * (abs(termF) + abs(termG))
	return termF, termG, gammaTerm, bound


def derivativeSeries(
	source: OrbitSource,
	depth: Optional[int] = None,
	eps: float = 1e-8,
	threshold: float = DEFAULT_DIVERGENCE_THRESHOLD
) -> DerivativeSeries:
	"""
	F_2'(x) and G_2'(x) as partial sums over k = 0..depth-1 of the differentiated steps
	-4 q_{k-1} beta_{k-1}^3 R(y_k) + beta_{k-1}^2 R'(y_k).

	Raises:
		InsufficientDepthError: If depth exceeds the usable orbit depth minus one.
		DomainError: If x is rational (an exact orbit that terminates).
	"""
	orbit = resolveOrbit(source, None if depth is None else depth + 1 + DEFAULT_GUARD)
	available = orbit.usableDepth - 1
	levels = available if depth is None else depth
	if levels > available or levels < 1:
		raise InsufficientDepthError(
			f"Derivative series to depth {levels} needs orbit depth {levels + 1 + (orbit.guard if orbit.surrogate else 0)}, have {orbit.depth}.",
			requiredDepth=levels + 1 + (orbit.guard if orbit.surrogate else 0),
			availableDepth=orbit.depth
		)
	if orbit.terminated and not orbit.surrogate:
		raise DomainError("The orbit terminates: F_2 and G_2 are not differentiable at rationals.")
	pPoly, qPoly = inversionPolynomials()
	share = eps / (12.0 * levels)
	termsF: List[float] = []
	termsG: List[float] = []
	gammaSums: List[float] = []
	increments: List[float] = []
	bound = 0.0
	for k in range(levels):
		termF, termG, gammaTerm, termBound = _derivativeTerms(orbit, k, pPoly, qPoly, share)
		termsF.append(termF)
		termsG.append(termG)
		increments.append(gammaTerm)
		gammaSums.append(math.fsum(increments))
		bound += termBound
	partialF = tuple(float(value) for value in np.cumsum(termsF))
	partialG = tuple(float(value) for value in np.cumsum(termsG))
	divergent = divergenceFlag(increments, threshold)
	if divergent:
		logger.warning(f"F_2' partial sums flagged divergent: gamma sum {gammaSums[-1]:.4g} > {threshold:g} at depth {levels}")
	F2Prime = None if divergent else SeriesValue(math.fsum(termsF), bound, levels)
	G2Prime = SeriesValue(math.fsum(termsG), bound, levels)
	return DerivativeSeries(
		F2Prime=F2Prime,
		G2Prime=G2Prime,
		divergent=divergent,
		gammaPartialSums=tuple(gammaSums),
		partialSumsF=partialF,
		partialSumsG=partialG,
		depth=levels,
		tailEstimateF=abs(termsF[-1]) if levels > 1 else 0.0,
		tailEstimateG=abs(termsG[-1]) if levels > 1 else 0.0
	)


# --------------------------------------------------------------------------- difference quotients

@dataclass(frozen=True)
class DifferenceQuotient:
	value: float
	errorEstimate: float
	method: str


def cfDifferenceQuotient(orbit: GaussOrbit, z: Fraction, depth: int, eps: float = 1e-9) -> DifferenceQuotient:
	"""
	(F_2(z) - F_2(x)) / (z - x) for z in I_depth(x) when z - x is below binary64 resolution.

	The first ``depth`` steps are smooth on I_depth(x) and are replaced by their derivatives at x;
	the remainders (-1)^n beta_{n-1}^4 F_2(T^n .) are differenced exactly in mpmath.

	Raises:
		DomainError: If z is not in I_depth(x) or z = x.
	"""
	point = Fraction(z)
	if point == orbit.x or not orbit.contains(depth, point):
		raise DomainError(f"z must differ from x and lie in I_{depth}(x).")
	h = point - orbit.x
	pPoly, qPoly = inversionPolynomials()
	linear = 0.0
	bound = 0.0
	share = eps / (12.0 * max(depth, 1))
	for k in range(depth):
		termF, _, _, termBound = _derivativeTerms(orbit, k, pPoly, qPoly, share)
		linear += termF
		bound += termBound
	qPrev, pPrev = orbit.q(depth - 1), orbit.p(depth - 1)
	betaX = orbit.beta(depth - 1)
	betaZ = abs(qPrev * point - pPrev)
	image = (orbit.q(depth) * point - orbit.p(depth)) / (pPrev - qPrev * point)
	fX = analytic.evalSeries(orbit.T(depth), 2, eps)[0] if orbit.T(depth) != 0 else SeriesValue(0.0, 0.0, 0)
	fZ = analytic.evalSeries(image, 2, eps)[0] if image != 0 else SeriesValue(0.0, 0.0, 0)
	sign = 1 if depth % 2 == 0 else -1
	with mpmath.workdps(40):
		hMp = mpmath.mpf(h.numerator) / h.denominator
		weightZ = (mpmath.mpf(betaZ.numerator) / betaZ.denominator) ** 4
		weightX = (mpmath.mpf(betaX.numerator) / betaX.denominator) ** 4
		remainder = sign * (weightZ * fZ.value - weightX * fX.value) / hMp
		remainderBound = (weightZ * fZ.errorBound + weightX * fX.errorBound) / abs(hMp)
		value = float(linear + remainder)
		qDepth = orbit.q(depth - 1) if depth >= 1 else 1
		linearization = float(10 * abs(hMp) * mpmath.mpf(qDepth) ** 2 * (1 + mpmath.log(max(orbit.q(depth), 1))) * (depth + 1))
		estimate = bound + float(remainderBound) + linearization
	return DifferenceQuotient(value=value, errorEstimate=estimate, method='cf-linearized')

# --- END: core/iteration.py ---
