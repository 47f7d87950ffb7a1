# --- START: core/brjuno.py ---
# core/brjuno.py
"""
Brjuno-type classifiers, extreme numbers and the difference-quotient divergence scan.

Every verdict here is a finite-depth statement: the report exposes partial sums, their
increments and the witnessed sequences behind the growth conditions
	(*)  log q_{n+4} / q_n^2 -> 0,
	(**) log q_{n+3} / q_n^2 -> 0 with quotients eventually > 1,
so callers can judge the evidence themselves.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import mpmath

from . import analytic
from .contfrac import (
	DEFAULT_GUARD, GaussOrbit, ParsedReal, expandCf, quotientsToRational
)
from .exceptions import DomainError, InsufficientDepthError
from .iteration import cfDifferenceQuotient
from utils.parallel import ParallelMapper

logger: logging.Logger = logging.getLogger(__name__)

BRJUNO_EXPONENTS: Tuple[int, ...] = (1, 2, 4, 6)
DEFAULT_BIT_CAP: int = 1_000_000
DEFAULT_INCREMENT_TOLERANCE: float = 1e-6
DEFAULT_DQ_FLOOR: float = 1e-10
STAR_THRESHOLD: float = 0.5
STAR_BURN_IN: int = 4
KAPPA_WINDOW: int = 5
EXTREME_KINDS: Tuple[str, ...] = ('golden', 'periodic', 'liouville', 'star_violator')
_BRACKET_SLACK: float = 1e-12


# --------------------------------------------------------------------------- extreme numbers

@dataclass(frozen=True)
class ExtremeNumber:
	"""
	A quotient list built to exhibit a growth regime.

	``saturatedIndices`` lists the (1-based) quotients that hit the bit cap; their true values
	would be larger.
	"""
	kind: str
	quotients: Tuple[int, ...]
	saturatedIndices: Tuple[int, ...] = ()
	parameters: Dict[str, Union[int, Tuple[int, ...]]] = field(default_factory=dict)
	bitCap: int = DEFAULT_BIT_CAP

	@property
	def saturated(self: 'ExtremeNumber') -> bool:
		return bool(self.saturatedIndices)

	@property
	def text(self: 'ExtremeNumber') -> str:
		if self.kind == 'periodic':
			period = ','.join(str(a) for a in self.parameters.get('period', ()))
			return f"periodic:[{period}]:{len(self.quotients)}"
		if self.kind == 'liouville':
			return f"liouville:{self.parameters.get('rate')}:{len(self.quotients)}"
		return f"{self.kind}:{len(self.quotients)}"

	def parsed(self: 'ExtremeNumber') -> ParsedReal:
		return ParsedReal(
			text=self.text,
			kind='cf',
			value=quotientsToRational(self.quotients),
			quotients=self.quotients,
			surrogate=True
		)

	def orbit(self: 'ExtremeNumber', guard: int = DEFAULT_GUARD) -> GaussOrbit:
		return expandCf(quotientsToRational(self.quotients), len(self.quotients), surrogate=True, guard=guard)


def _cappedExponential(exponent: int, bitCap: int) -> Tuple[int, bool]:
	"""(max(2, ceil(exp(exponent))), saturated) with the result capped at 2**bitCap."""
	if exponent.bit_length() > 64 or exponent / math.log(2.0) > bitCap:
		return 1 << bitCap, True
	if exponent < 700:
		return max(2, math.ceil(math.exp(exponent))), False
	bits = int(exponent / math.log(2.0)) + 64
	with mpmath.workprec(bits):
		return max(2, int(mpmath.ceil(mpmath.exp(exponent)))), False


def constructExtremeNumber(
	kind: str,
	depth: int,
	rate: int = 2,
	period: Sequence[int] = (2,),
	bitCap: int = DEFAULT_BIT_CAP
) -> ExtremeNumber:
	"""
	Builds a quotient list of the requested depth.

	Kinds:
		golden: all ones.
		periodic: the given period repeated.
		liouville: a_{n+1} = max(2, ceil(exp(q_n^rate))), capped at ``bitCap`` bits.
		star_violator: blocks of three quotients m+2 followed, where it fits the bit cap, by a
			quotient with log q_{4m+4} ~ q_{4m}^2, so (*) fails while the square sum converges.

	Raises:
		DomainError: For an unknown kind, depth < 1, rate < 1 or an invalid period.
	"""
	if depth < 1:
		raise DomainError(f"depth must be >= 1, got {depth}.")
	if kind not in EXTREME_KINDS:
		raise DomainError(f"Unknown extreme-number kind '{kind}'; expected one of {EXTREME_KINDS}.")
	if kind == 'golden':
		return ExtremeNumber(kind, (1,) * depth, bitCap=bitCap)
	if kind == 'periodic':
		block = tuple(int(a) for a in period)
		if not block or min(block) < 1:
			raise DomainError(f"Periodic blocks need quotients >= 1, got {period}.")
		quotients = tuple(block[i % len(block)] for i in range(depth))
		return ExtremeNumber(kind, quotients, parameters={'period': block}, bitCap=bitCap)
	if kind == 'liouville':
		if rate < 1:
			raise DomainError(f"rate must be >= 1, got {rate}.")
		quotients: List[int] = []
		saturated: List[int] = []
		qPrev, q = 0, 1
		for index in range(1, depth + 1):
			a, hitCap = _cappedExponential(q ** rate if q.bit_length() * rate <= 64 else 1 << 65, bitCap)
			if hitCap:
				saturated.append(index)
			quotients.append(a)
			qPrev, q = q, a * q + qPrev
		if saturated:
			logger.warning(f"liouville({rate}) saturated the {bitCap}-bit cap at indices {saturated}")
		return ExtremeNumber(kind, tuple(quotients), tuple(saturated), {'rate': rate}, bitCap)
	return _starViolator(depth, bitCap)


def _starViolator(depth: int, bitCap: int) -> ExtremeNumber:
	quotients: List[int] = []
	qs = [1]
	qPrev = 0
	planted: List[int] = []
	for index in range(1, depth + 1):
		block = (index - 1) // 4
		a = block + 2
		if index % 4 == 0:
			anchor = qs[index - 4]
			target = anchor * anchor
			if target / math.log(2.0) <= bitCap:
				big, _ = _cappedExponential(target, bitCap)
				a = max(a, -(-big // qs[-1]))
				planted.append(index)
		quotients.append(a)
		qPrev, qNext = qs[-1], a * qs[-1] + qPrev
		qs.append(qNext)
	logger.debug(f"star_violator planted growth at indices {planted}")
	return ExtremeNumber('star_violator', tuple(quotients), parameters={'planted': tuple(planted)}, bitCap=bitCap)


# --------------------------------------------------------------------------- reports

@dataclass(frozen=True)
class BrjunoReport:
	"""
	Finite-depth Brjuno data of x.

	brjunoSums[k][n] = sum_{j<=n} log q_{j+1} / q_j^k; betaGammaSums[n] = sum_{j<=n} beta_{j-1} gamma_j.
	starSequence[n] = log q_{n+4}/q_n^2, starStarSequence[n] = log q_{n+3}/q_n^2.
	kappa[n] solves |x - p_n/q_n| = q_n^-kappa (None for q_n = 1).
	"""
	depth: int
	brjunoSums: Dict[int, Tuple[float, ...]]
	betaGammaSums: Tuple[float, ...]
	starSequence: Tuple[float, ...]
	starStarSequence: Tuple[float, ...]
	starOk: bool
	starStarOk: bool
	kappa: Tuple[Optional[float], ...]
	muEst: float
	nuEst: float
	lemmaBracketOk: Tuple[bool, ...]
	kappaBoundOk: Tuple[bool, ...]
	lastIncrement: float
	saturated: bool
	verdict: str

	@property
	def squareSum(self: 'BrjunoReport') -> float:
		return self.brjunoSums[2][-1]


def _logInt(n: int) -> float:
	return math.log(n) if n > 0 else 0.0


def _overPower(value: float, q: int, power: int) -> float:
	"""value / q^power for q of any size."""
	if value <= 0.0:
		return 0.0
	return math.exp(math.log(value) - power * math.log(q))


def brjunoReport(
	source: Union[ExtremeNumber, GaussOrbit, ParsedReal],
	depth: int,
	incrementTolerance: float = DEFAULT_INCREMENT_TOLERANCE,
	starThreshold: float = STAR_THRESHOLD,
	starBurnIn: int = STAR_BURN_IN
) -> BrjunoReport:
	"""
	Brjuno sums, conditions (*)/(**) and the approximation exponents up to ``depth``.

	Raises:
		InsufficientDepthError: If the orbit is shorter than depth + 4.
	"""
	saturatedIndices: Tuple[int, ...] = ()
	if isinstance(source, ExtremeNumber):
		saturatedIndices = source.saturatedIndices
		orbit = source.orbit()
	elif isinstance(source, ParsedReal):
		length = len(source.quotients) if source.quotients else depth + DEFAULT_GUARD + 1
		orbit = expandCf(source.value - math.floor(source.value), length, surrogate=source.surrogate)
	else:
		orbit = source
	if orbit.depth < depth + 4:
		raise InsufficientDepthError(
			f"Brjuno report to depth {depth} needs orbit depth {depth + 4}, have {orbit.depth}.",
			requiredDepth=depth + 4,
			availableDepth=orbit.depth
		)
	logQ = [_logInt(orbit.q(n)) for n in range(depth + 5)]
	sums: Dict[int, List[float]] = {k: [] for k in BRJUNO_EXPONENTS}
	betaGamma: List[float] = []
	increments: Dict[int, List[float]] = {k: [] for k in BRJUNO_EXPONENTS}
	upperTerms: List[float] = []
	lowerTerms: List[float] = []
	for n in range(depth + 1):
		q = orbit.q(n)
		for k in BRJUNO_EXPONENTS:
			increments[k].append(_overPower(logQ[n + 1], q, k))
			sums[k].append(math.fsum(increments[k]))
		previous = orbit.beta(n - 1)
		betaGamma.append(float(previous) * orbit.gamma(n) if orbit.T(n) != 0 else 0.0)
		upperTerms.append(_overPower(math.log(2.0) + logQ[n + 1], q, 2))
		lowerTerms.append(_overPower(math.log(2.0) + logQ[n], q, 2))
	betaGammaSums = [math.fsum(betaGamma[:n + 1]) for n in range(depth + 1)]

	lemmaOk = []
	for n in range(depth + 1):
		upper = math.fsum(upperTerms[:n + 1])
		lower = math.fsum(lowerTerms[:n + 1])
		first = betaGammaSums[n] <= upper * (1 + _BRACKET_SLACK)
		second = sums[2][n] <= (2.0 * betaGammaSums[n] + lower) * (1 + _BRACKET_SLACK)
		lemmaOk.append(first and second)

	star = [_overPower(logQ[n + 4], orbit.q(n), 2) for n in range(depth + 1)]
	starStar = [_overPower(logQ[n + 3], orbit.q(n), 2) for n in range(depth + 1)]
	tailStar = star[starBurnIn:] or star[-1:]
	tailStarStar = starStar[starBurnIn:] or starStar[-1:]
	starOk = max(tailStar) <= starThreshold
	quotientsAboveOne = all(orbit.a(n) >= 2 for n in range(min(starBurnIn + 1, depth + 3), depth + 4))
	starStarOk = max(tailStarStar) <= starThreshold and quotientsAboveOne

	kappa: List[Optional[float]] = []
	kappaOk: List[bool] = []
	for n in range(depth + 1):
		q = orbit.q(n)
		beta = orbit.beta(n)
		kappaOk.append(beta * orbit.q(n + 1) <= 1)
		if q < 2 or beta == 0:
			kappa.append(None)
			continue
		logDistance = (math.log(beta.numerator) - math.log(beta.denominator)) - math.log(q)
		kappa.append(-logDistance / math.log(q))
	window = [value for value in kappa[-KAPPA_WINDOW:] if value is not None]
	muEst = max(window) if window else math.nan
	nuEst = min(window) if window else math.nan

	lastIncrement = increments[2][-1]
	saturated = any(index <= depth + 1 for index in saturatedIndices)
	if saturated:
		verdict = 'non-convergent-at-depth'
	elif lastIncrement < incrementTolerance:
		verdict = 'convergent-at-depth'
	else:
		verdict = 'undecided-at-depth'
	logger.info(f"Brjuno report to depth {depth}: square sum {sums[2][-1]:.6g}, verdict {verdict}")
	return BrjunoReport(
		depth=depth,
		brjunoSums={k: tuple(v) for k, v in sums.items()},
		betaGammaSums=tuple(betaGammaSums),
		starSequence=tuple(star),
		starStarSequence=tuple(starStar),
		starOk=starOk,
		starStarOk=starStarOk,
		kappa=tuple(kappa),
		muEst=muEst,
		nuEst=nuEst,
		lemmaBracketOk=tuple(lemmaOk),
		kappaBoundOk=tuple(kappaOk),
		lastIncrement=lastIncrement,
		saturated=saturated,
		verdict=verdict
	)


# --------------------------------------------------------------------------- divergence scan

@dataclass(frozen=True)
class DivergenceRow:
	"""One level of the scan: h_n, the bracket check and DQ_n = (F_2(x+h_n) - F_2(x)) / h_n."""
	n: int
	h: Fraction
	dq: float
	errorEstimate: float
	method: str
	bracketOk: bool

	@property
	def hFloat(self: 'DivergenceRow') -> float:
		return float(self.h)


def scanStep(orbit: GaussOrbit, n: int) -> Tuple[Fraction, bool]:
	"""
	h_n = z - x for z = [0; a_1, ..., a_n, a_{n+1} + 2, 2] and whether
	1/(18 q_{n+1}^2) < h_n <= 1/(q_n q_{n+1}).
	"""
	quotients = list(orbit.quotients[:n]) + [orbit.a(n + 1) + 2, 2]
	h = quotientsToRational(quotients) - orbit.x
	q, qNext = orbit.q(n), orbit.q(n + 1)
	return h, Fraction(1, 18 * qNext * qNext) < h <= Fraction(1, q * qNext)


def _scanTask(task: Tuple[GaussOrbit, int, float, float]) -> DivergenceRow:
	orbit, n, dqFloor, eps = task
	h, bracketOk = scanStep(orbit, n)
	z = orbit.x + h
	if float(h) >= dqFloor:
		localEps = max(analytic.EPS_FLOOR, float(h) * 1e-3)
		fz = analytic.evalSeries(z, 2, localEps)[0]
		fx = analytic.evalSeries(orbit.x, 2, localEps)[0]
		dq = (fz.value - fx.value) / float(h)
		return DivergenceRow(n, h, dq, (fz.errorBound + fx.errorBound) / float(h), 'hyperbola', bracketOk)
	quotient = cfDifferenceQuotient(orbit, z, n, eps)
	return DivergenceRow(n, h, quotient.value, quotient.errorEstimate, quotient.method, bracketOk)


def divergenceScan(
	source: Union[ExtremeNumber, GaussOrbit],
	nList: Sequence[int],
	dqFloor: float = DEFAULT_DQ_FLOOR,
	eps: float = 1e-9,
	mapper: Optional[ParallelMapper] = None
) -> List[DivergenceRow]:
	"""
	Difference quotients of F_2 at x along h_n with x + h_n in I(a_1, ..., a_n, a_{n+1} + 2).

	Steps above ``dqFloor`` use the hyperbola evaluator directly; smaller steps use the
	linearised orbit expansion.

	Raises:
		DomainError: For even n or when the orbit terminates before n + 1.
		InsufficientDepthError: If n > orbit depth - 2.
	"""
	orbit = source.orbit() if isinstance(source, ExtremeNumber) else source
	for n in nList:
		if n % 2 == 0 or n < 1:
			raise DomainError(f"Scan levels must be odd and positive, got {n}.")
		if orbit.terminated and n + 1 > orbit.depth:
			raise DomainError(f"The orbit terminates at depth {orbit.depth}; no bracket exists at n={n}.")
		if n > orbit.depth - 2:
			raise InsufficientDepthError(
				f"Scan level {n} needs orbit depth {n + 2}, have {orbit.depth}.",
				requiredDepth=n + 2,
				availableDepth=orbit.depth
			)
	runner = mapper or ParallelMapper(1)
	rows = runner.map(_scanTask, [(orbit, n, dqFloor, eps) for n in sorted(nList)], description='divergence scan')
	for row in rows:
		if not row.bracketOk:
			logger.warning(f"h_{row.n} = {float(row.h):.3e} violates the scan bracket")
	return rows

# --- END: core/brjuno.py ---
