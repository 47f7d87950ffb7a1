# --- START: core/contfrac.py ---
# core/contfrac.py
"""
Exact continued-fraction engine.

Everything here is computed with Python integers and ``fractions.Fraction``: partial
quotients, convergents p_k/q_k, Gauss iterates T^k(x), the products beta_k = |q_k x - p_k|
and the basic intervals I_k(x). Only gamma_k = beta_{k-1} log(1/T^k x) is a float.

An irrational number is represented by a long rational surrogate, the value of a finite
quotient list. Consumers must stay ``guard`` levels above the end of such an orbit.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .exceptions import DomainError, InsufficientDepthError, ParsingError

logger: logging.Logger = logging.getLogger(__name__)

RealSpec = str
DEFAULT_GUARD: int = 4
_LOG_DIRECT_LIMIT: int = 2 ** 1000

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*/\s*(\d+)\s*$')
_CF_PATTERN = re.compile(r'^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$')
_FORMAT_BIT_LIMIT: int = 128


def formatReal(value: object) -> str:
	"""
	Short text for a real number in log lines and error messages.

	Rationals with large terms are shown as a float plus the denominator size; printing
	them in full is slow and fails past the interpreter's integer string limit.
	"""
	if isinstance(value, Fraction) and max(abs(value.numerator), value.denominator).bit_length() > _FORMAT_BIT_LIMIT:
		try:
			approximate = f"~{float(value):.17g}"
		except OverflowError:
			approximate = f"~2^{abs(value.numerator).bit_length() - value.denominator.bit_length()}"
		return f"{approximate} (rational, {value.denominator.bit_length()}-bit denominator)"
	return str(value)


@dataclass(frozen=True)
class ParsedReal:
	"""
	The exact value behind a RealSpec string.

	``quotients`` keeps a user supplied quotient list verbatim (value = [0; a_1, ..., a_N]);
	``surrogate`` marks rationals that stand in for an irrational number.
	"""
	text: str
	kind: str
	value: Fraction
	quotients: Optional[Tuple[int, ...]] = None
	surrogate: bool = False


def quotientsToRational(quotients: Sequence[int]) -> Fraction:
	"""
	[0; a_1, ..., a_N] evaluated with the forward recurrence.

	Raises:
		DomainError: If a quotient is < 1.
	"""
	pPrev, p = 1, 0
	qPrev, q = 0, 1
	for a in quotients:
		if a < 1:
			raise DomainError(f"Partial quotients must be >= 1, got {a}.")
		pPrev, p = p, a * p + pPrev
		qPrev, q = q, a * q + qPrev
	return Fraction(p, q)


def parseReal(text: RealSpec) -> ParsedReal:
	"""
	Parses ``rational:p/q``, ``cf:[a1,a2,...]`` or ``decimal:<digits>``.

	Args:
		text (RealSpec): The specification string.

	Returns:
		ParsedReal: The exact value; cf lists are retained.

	Raises:
		ParsingError: On a malformed string, a zero denominator or a quotient < 1.
	"""
	if not isinstance(text, str) or ':' not in text:
		raise ParsingError(f"RealSpec must look like 'kind:value', got {text!r}.")
	kind, _, body = text.partition(':')
	kind = kind.strip().lower()
	if kind == 'rational':
		match = _RATIONAL_PATTERN.match(body)
		if not match:
			raise ParsingError(f"Malformed rational '{body}'; expected p/q.")
		numerator, denominator = int(match.group(1)), int(match.group(2))
		if denominator == 0:
			raise ParsingError(f"Zero denominator in '{text}'.")
		return ParsedReal(text=text, kind=kind, value=Fraction(numerator, denominator))
	if kind == 'cf':
		match = _CF_PATTERN.match(body)
		if not match or match.group(1) is None:
			raise ParsingError(f"Malformed quotient list '{body}'; expected [a1,a2,...].")
		quotients = tuple(int(token) for token in match.group(1).split(','))
		if min(quotients) < 1:
			raise ParsingError(f"Partial quotients must be >= 1 in '{text}'.")
		return ParsedReal(text=text, kind=kind, value=quotientsToRational(quotients), quotients=quotients)
	if kind == 'decimal':
		try:
			number = Decimal(body.strip())
		except InvalidOperation as exc:
			raise ParsingError(f"Malformed decimal '{body}'.") from exc
		if not number.is_finite():
			raise ParsingError(f"Decimal '{body}' is not finite.")
		return ParsedReal(text=text, kind=kind, value=Fraction(number))
	raise ParsingError(f"Unknown RealSpec kind '{kind}'; expected rational, cf or decimal.")


def _logInverse(t: Fraction) -> float:
	"""log(1/t) for a rational 0 < t <= 1, accurate near t = 1 and for huge denominators."""
	numerator, denominator = t.numerator, t.denominator
	if denominator > _LOG_DIRECT_LIMIT * numerator:
		return math.log(denominator) - math.log(numerator)
	return math.log1p((denominator - numerator) / numerator)


def _logOf(t: Fraction) -> float:
	return math.log(t.numerator) - math.log(t.denominator)


@dataclass(frozen=True)
class GaussOrbit:
	"""
	The Gauss-map orbit of a rational x in (0, 1) up to ``depth``.

	Index conventions: quotient a_k for k = 1..depth; p_k, q_k for k = -2..depth;
	T^k(x) for k = 0..depth; beta_k for k = -1..depth; gamma_k for k = 0..depth with T^k > 0.
	"""
	x: Fraction
	quotients: Tuple[int, ...]
	pValues: Tuple[int, ...]
	qValues: Tuple[int, ...]
	iterates: Tuple[Fraction, ...]
	betaValues: Tuple[Fraction, ...]
	gammaValues: Tuple[float, ...]
	terminated: bool
	surrogate: bool = False
	guard: int = DEFAULT_GUARD

	@property
	def depth(self: 'GaussOrbit') -> int:
		return len(self.quotients)

	@property
	def usableDepth(self: 'GaussOrbit') -> int:
		"""Deepest level a consumer may rely on (surrogates reserve ``guard`` levels)."""
		return self.depth - self.guard if self.surrogate else self.depth

	def a(self: 'GaussOrbit', k: int) -> int:
		if not 1 <= k <= self.depth:
			raise DomainError(f"Quotient a_{k} outside 1..{self.depth}.")
		return self.quotients[k - 1]

	def p(self: 'GaussOrbit', k: int) -> int:
		self._checkIndex(k, -2)
		return self.pValues[k + 2]

	def q(self: 'GaussOrbit', k: int) -> int:
		self._checkIndex(k, -2)
		return self.qValues[k + 2]

	def T(self: 'GaussOrbit', k: int) -> Fraction:
		self._checkIndex(k, 0)
		return self.iterates[k]

	def beta(self: 'GaussOrbit', k: int) -> Fraction:
		self._checkIndex(k, -1)
		return self.betaValues[k + 1]

	def gamma(self: 'GaussOrbit', k: int) -> float:
		"""
		Raises:
			DomainError: If T^k(x) = 0.
		"""
		self._checkIndex(k, 0)
		if self.iterates[k] == 0:
			raise DomainError(f"gamma_{k} is undefined: T^{k}(x) = 0.")
		return self.gammaValues[k]

	def interval(self: 'GaussOrbit', k: int) -> Tuple[Fraction, Fraction]:
		"""Endpoints (p_k/q_k, (p_k+p_{k-1})/(q_k+q_{k-1})) of I_k(x); the first one is included."""
		self._checkIndex(k, 0)
		closed = Fraction(self.p(k), self.q(k))
		opened = Fraction(self.p(k) + self.p(k - 1), self.q(k) + self.q(k - 1))
		return closed, opened

	def smallerEndpoint(self: 'GaussOrbit', k: int) -> Fraction:
		return min(self.interval(k))

	def contains(self: 'GaussOrbit', k: int, y: Fraction) -> bool:
		"""Whether y lies in I_k(x)."""
		closed, opened = self.interval(k)
		if closed < opened:
			return closed <= y < opened
		return opened < y <= closed

	def _checkIndex(self: 'GaussOrbit', k: int, lowest: int) -> None:
		if not lowest <= k <= self.depth:
			raise DomainError(f"Index {k} outside {lowest}..{self.depth} for this orbit.")


def expandCf(x: Union[Fraction, int], maxDepth: int, surrogate: bool = False, guard: int = DEFAULT_GUARD) -> GaussOrbit:
	"""
	Runs the Gauss map on an exact rational.

	Args:
		x (Union[Fraction, int]): Point in (0, 1).
		maxDepth (int): Number of quotients to extract at most.
		surrogate (bool): Mark the orbit as standing in for an irrational number.
		guard (int): Levels reserved at the end of a surrogate orbit.

	Returns:
		GaussOrbit: Orbit up to min(maxDepth, termination depth).

	Raises:
		DomainError: If x is not in (0, 1) or maxDepth < 0.
	"""
	value = Fraction(x)
	if not 0 < value < 1:
		raise DomainError(f"expandCf needs 0 < x < 1, got {formatReal(value)}; reduce mod 1 first.")
	if maxDepth < 0:
		raise DomainError(f"maxDepth must be >= 0, got {maxDepth}.")
	quotients: List[int] = []
	pValues = [0, 1, 0]
	qValues = [1, 0, 1]
	iterates = [value]
	betaValues = [Fraction(1), value]
	current = value
	while len(quotients) < maxDepth and current != 0:
		a, remainder = divmod(current.denominator, current.numerator)
		current = Fraction(remainder, current.numerator)
		quotients.append(a)
		pValues.append(a * pValues[-1] + pValues[-2])
		qValues.append(a * qValues[-1] + qValues[-2])
		iterates.append(current)
		betaValues.append(betaValues[-1] * current)
	gammaValues = []
	for k, t in enumerate(iterates):
		if t == 0:
			gammaValues.append(math.inf)
			continue
		previous = betaValues[k]
		logInverse = _logInverse(t)
		weight = float(previous)
		if weight == 0.0 and logInverse > 0.0:
			gammaValues.append(math.exp(_logOf(previous) + math.log(logInverse)))
		else:
			gammaValues.append(weight * logInverse)
	orbit = GaussOrbit(
		x=value,
		quotients=tuple(quotients),
		pValues=tuple(pValues),
		qValues=tuple(qValues),
		iterates=tuple(iterates),
		betaValues=tuple(betaValues),
		gammaValues=tuple(gammaValues),
		terminated=current == 0,
		surrogate=surrogate,
		guard=guard
	)
	logger.debug(f"Expanded continued fraction to depth {orbit.depth} (terminated={orbit.terminated})")
	return orbit


def orbitFromQuotients(quotients: Sequence[int], maxDepth: Optional[int] = None, surrogate: bool = True, guard: int = DEFAULT_GUARD) -> GaussOrbit:
	"""Orbit of the surrogate [0; a_1, ..., a_N]; the canonical expansion may merge a trailing 1."""
	depth = len(quotients) if maxDepth is None else maxDepth
	return expandCf(quotientsToRational(quotients), depth, surrogate=surrogate, guard=guard)


def orbitFromParsed(parsed: ParsedReal, maxDepth: int, guard: int = DEFAULT_GUARD) -> GaussOrbit:
	"""Orbit of a parsed RealSpec, reduced mod 1."""
	value = parsed.value - math.floor(parsed.value)
	return expandCf(value, maxDepth, surrogate=parsed.surrogate, guard=guard)


def qkIdentityCheck(orbit: GaussOrbit, k: int) -> Fraction:
	"""
	(-1)^k beta_k sum_{j<=k} (-1)^j T^j(x) / beta_j^2, which equals q_k.

	Raises:
		DomainError: If beta_j = 0 for some j <= k, i.e. k is at or past termination.
	"""
	if k < 0 or k > orbit.depth:
		raise DomainError(f"k={k} outside 0..{orbit.depth}.")
	if orbit.beta(k) == 0:
		raise DomainError(f"k={k} is at or beyond the termination depth of the orbit.")
	total = Fraction(0)
	for j in range(k + 1):
		term = orbit.T(j) / orbit.beta(j) ** 2
		total += term if j % 2 == 0 else -term
	value = orbit.beta(k) * total
	return value if k % 2 == 0 else -value


def locateDepth(orbit: GaussOrbit, h: Fraction) -> int:
	"""
	The depth K_h with x + h in I_K(x) and x + h outside I_{K+1}(x).

	Raises:
		DomainError: If h = 0 or x + h leaves (0, 1).
		InsufficientDepthError: If the orbit is too shallow to certify K_h.
	"""
	step = Fraction(h)
	if step == 0:
		raise DomainError("h must be non-zero.")
	y = orbit.x + step
	if not 0 < y < 1:
		raise DomainError(f"x + h = {formatReal(y)} is outside (0, 1).")
	depth = 0
	while depth < orbit.depth and orbit.contains(depth + 1, y):
		depth += 1
	if orbit.surrogate and depth + orbit.guard > orbit.depth:
		raise InsufficientDepthError(
			f"Locating h={step} needs orbit depth {depth + orbit.guard}, have {orbit.depth}.",
			requiredDepth=depth + orbit.guard,
			availableDepth=orbit.depth
		)
	if not orbit.terminated and depth == orbit.depth:
		raise InsufficientDepthError(
			f"x + h stays inside every computed interval down to depth {orbit.depth}.",
			requiredDepth=orbit.depth + 1,
			availableDepth=orbit.depth
		)
	return depth


@dataclass(frozen=True)
class DepthBracket:
	"""lower <= |h| <= upper for the located depth; ``refined`` when a_{K+2} >= 2 allowed the sharper lower bound."""
	depth: int
	lower: Optional[Fraction]
	upper: Fraction
	refined: bool = False

	def holds(self: 'DepthBracket', h: Fraction) -> bool:
		size = abs(Fraction(h))
		return (self.lower is None or self.lower <= size) and size <= self.upper


def depthBracket(orbit: GaussOrbit, depth: int) -> DepthBracket:
	"""
	Bracket for |h| given K_h = depth: |h| <= 2/q_K^2 and |h| >= 1/(2 q_{K+2} q_{K+3}),
	or >= 1/(2 q_{K+1} q_{K+2}) when a_{K+2} >= 2. The lower bound is None past the orbit.
	"""
	upper = Fraction(2, orbit.q(depth) ** 2)
	if depth + 2 <= orbit.depth and orbit.a(depth + 2) >= 2:
		return DepthBracket(depth, Fraction(1, 2 * orbit.q(depth + 1) * orbit.q(depth + 2)), upper, refined=True)
	if depth + 3 <= orbit.depth:
		return DepthBracket(depth, Fraction(1, 2 * orbit.q(depth + 2) * orbit.q(depth + 3)), upper)
	return DepthBracket(depth, None, upper)


def _fibonacci(count: int) -> List[int]:
	values = [0, 1]
	while len(values) < count + 2:
		values.append(values[-1] + values[-2])
	return values


def orbitInvariantViolations(orbit: GaussOrbit) -> List[str]:
	"""
	Checks the exact orbit identities and returns a description of every violation.

	Covered: convergent recurrences and seeds, the determinant identity, q_k >= Fib_{k+1},
	the beta bounds and closed form, the Moebius form of T^k, sum q_j <= 3 q_k,
	the two-sided bound on T^k, the backward beta recurrence, and (in floating point) the
	gamma bracket.
	"""
	problems: List[str] = []
	x = orbit.x
	n = orbit.depth
	fib = _fibonacci(n + 2)
	if (orbit.p(-2), orbit.p(-1), orbit.q(-2), orbit.q(-1)) != (0, 1, 1, 0):
		problems.append("convergent seeds")
	qSum = 0
	for k in range(0, n + 1):
		a = orbit.a(k) if k >= 1 else 0
		if orbit.p(k) != a * orbit.p(k - 1) + orbit.p(k - 2) or orbit.q(k) != a * orbit.q(k - 1) + orbit.q(k - 2):
			problems.append(f"recurrence at k={k}")
		if orbit.p(k) * orbit.q(k - 1) - orbit.p(k - 1) * orbit.q(k) != (-1) ** ((k - 1) % 2):
			problems.append(f"determinant at k={k}")
		if orbit.q(k) < fib[k + 1]:
			problems.append(f"Fibonacci lower bound at k={k}")
		if orbit.beta(k) != abs(orbit.q(k) * x - orbit.p(k)):
			problems.append(f"beta definition at k={k}")
		qSum += orbit.q(k)
		if qSum > 3 * orbit.q(k):
			problems.append(f"sum of denominators at k={k}")
		if k >= 1 and orbit.T(k - 1) != 0:
			moebius = (orbit.q(k) * x - orbit.p(k)) / (-orbit.q(k - 1) * x + orbit.p(k - 1))
			if moebius != orbit.T(k):
				problems.append(f"Moebius form of T^{k}")
			if orbit.beta(k - 1) * orbit.q(k) != 1 - orbit.q(k - 1) * orbit.beta(k):
				problems.append(f"backward beta recurrence at k={k}")
		if k < n:
			qNext = orbit.q(k + 1)
			beta = orbit.beta(k)
			if not Fraction(1, orbit.q(k) + qNext) <= beta <= Fraction(1, qNext):
				problems.append(f"beta bounds at k={k}")
			if beta != 1 / (qNext + orbit.T(k + 1) * orbit.q(k)):
				problems.append(f"beta closed form at k={k}")
			t = orbit.T(k)
			if not Fraction(orbit.q(k), 2 * qNext) <= t <= Fraction(2 * orbit.q(k), qNext):
				problems.append(f"iterate bounds at k={k}")
			gamma = orbit.gamma(k)
			lower = max(0.0, math.log(qNext) - math.log(2 * orbit.q(k))) / (2 * orbit.q(k))
			upper = (math.log(2 * qNext) - math.log(orbit.q(k))) / orbit.q(k)
			if not lower * (1 - 1e-12) <= gamma <= upper * (1 + 1e-12):
				problems.append(f"gamma bracket at k={k}")
	return problems

# --- END: core/contfrac.py ---
