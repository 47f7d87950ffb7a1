# --- START: core/arith.py ---
# core/arith.py
"""
Integer and constant substrate: divisor-power sums, Bernoulli numbers and the
zeta constants that appear as values of the series at the origin.

Tables are built with a divisor-accumulation sieve on numpy arrays; values beyond a
table's limit are computed by trial-division factorisation. Zeta values at integers
are computed by Euler-Maclaurin summation with exact Bernoulli numbers, so no
literal digits are needed anywhere outside the tests.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import mpmath
import numpy as np

from .exceptions import DomainError, ResourceError

logger: logging.Logger = logging.getLogger(__name__)

DEFAULT_MEMORY_CAP_BYTES: int = 256 * 1024 * 1024
# largest value kept in an int64 table; leaves a factor 2 of headroom for the running sums
_INT64_VALUE_LIMIT: int = 2 ** 62
# rough per-entry cost of a Python int held in an object array
_OBJECT_ENTRY_BYTES: int = 8 + 32

# Euler-Maclaurin parameters for zeta at integers >= 2
_EM_CUTOFF: int = 16
_EM_CORRECTIONS: int = 12


@dataclass(frozen=True)
class CertifiedConstant:
	"""A real constant with an absolute error bound."""
	value: float
	errorBound: float


@dataclass(frozen=True, eq=False)
class DivisorTable:
	"""
	Immutable table of sigma_w(n) = sum of d**w over the divisors d of n.

	``values`` has length limit + 1 with ``values[0] == 0`` so that ``values[n]`` is
	sigma_w(n). Indexing the table itself falls back to factorisation above the limit.
	"""
	weightExponent: int
	limit: int
	values: np.ndarray

	def __post_init__(self: 'DivisorTable') -> None:
		self.values.setflags(write=False)

	def __len__(self: 'DivisorTable') -> int:
		return self.limit

	def __getitem__(self: 'DivisorTable', n: int) -> int:
		if n < 1:
			raise DomainError(f"Divisor sums are defined for n >= 1, got {n}.")
		if n <= self.limit:
			return int(self.values[n])
		return divisorSigma(n, self.weightExponent)

	def coefficients(self: 'DivisorTable') -> List[int]:
		"""sigma_w(1), ..., sigma_w(N) as Python integers."""
		return [int(v) for v in self.values[1:]]

	def asFloatArray(self: 'DivisorTable', upTo: int) -> np.ndarray:
		"""sigma_w(1..upTo) as float64 (exact while the values stay below 2**53)."""
		if upTo > self.limit:
			raise DomainError(f"Table limit {self.limit} is below the requested {upTo}.")
		return np.asarray(self.values[1:upTo + 1], dtype=np.float64)


def _maxSigmaEstimate(weightExponent: int, limit: int) -> float:
	"""Upper bound for sigma_w(n), n <= limit: n**w * (1 + ln n)."""
	return float(limit) ** weightExponent * (1.0 + math.log(limit))


def buildDivisorTable(weightExponent: int, limit: int, memoryCapBytes: int = DEFAULT_MEMORY_CAP_BYTES) -> DivisorTable:
	"""
	Builds sigma_w(1..limit) with a divisor-accumulation sieve.

	Divisors d <= sqrt(N) are added to all their multiples by slicing; the larger
	divisors are added cofactor by cofactor, so the Python-level loop runs O(sqrt N)
	times while numpy performs the O(N log N) additions.

	Args:
		weightExponent (int): The w in sigma_w (k - 1 for weight-k series).
		limit (int): Largest n stored.
		memoryCapBytes (int): Memory the table may occupy.

	Returns:
		DivisorTable: The completed table.

	Raises:
		DomainError: If weightExponent is negative.
		ResourceError: If limit < 1 or the table would exceed memoryCapBytes.
	"""
	if weightExponent < 0:
		raise DomainError(f"Weight exponent must be >= 0, got {weightExponent}.")
	if limit < 1:
		raise ResourceError(f"Divisor table limit must be >= 1, got {limit}.")

	useInt64 = _maxSigmaEstimate(weightExponent, limit) < _INT64_VALUE_LIMIT
	entryBytes = 8 if useInt64 else _OBJECT_ENTRY_BYTES + (weightExponent * limit.bit_length()) // 8
	requiredBytes = (limit + 1) * entryBytes
	if requiredBytes > memoryCapBytes:
		raise ResourceError(
			f"Divisor table sigma_{weightExponent}(1..{limit}) needs ~{requiredBytes} bytes, cap is {memoryCapBytes}."
		)

	dtype = np.int64 if useInt64 else object
	values = np.zeros(limit + 1, dtype=dtype)
	root = math.isqrt(limit)
	for d in range(1, root + 1):
		values[d::d] += d ** weightExponent
	# divisors d > root pair with cofactors j < limit / root
	for j in range(1, limit // (root + 1) + 1):
		upper = limit // j
		if upper <= root:
			continue
		divisors = np.arange(root + 1, upper + 1, dtype=np.int64)
		if useInt64:
			powers = divisors ** weightExponent
		else:
			powers = np.array([int(d) ** weightExponent for d in divisors], dtype=object)
		values[divisors * j] += powers
	logger.debug(f"Built divisor table sigma_{weightExponent}(1..{limit}) with dtype {values.dtype}")
	return DivisorTable(weightExponent=weightExponent, limit=limit, values=values)


def factorize(n: int) -> Dict[int, int]:
	"""Trial-division factorisation; adequate for the spot checks it serves (n up to ~1e14)."""
	if n < 1:
		raise DomainError(f"Cannot factorise {n}.")
	factors: Dict[int, int] = {}
	for p in (2, 3):
		while n % p == 0:
			factors[p] = factors.get(p, 0) + 1
			n //= p
	p = 5
	while p * p <= n:
		for candidate in (p, p + 2):
			while n % candidate == 0:
				factors[candidate] = factors.get(candidate, 0) + 1
				n //= candidate
		p += 6
	if n > 1:
		factors[n] = factors.get(n, 0) + 1
	return factors


def divisorSigma(n: int, weightExponent: int) -> int:
	"""sigma_w(n) from the factorisation of n (multiplicativity)."""
	result = 1
	for p, e in factorize(n).items():
		if weightExponent == 0:
			result *= e + 1
		else:
			pw = p ** weightExponent
			result *= (pw ** (e + 1) - 1) // (pw - 1)
	return result


@lru_cache(maxsize=None)
def _bernoulliUpTo(m: int) -> Tuple[Fraction, ...]:
	numbers: List[Fraction] = [Fraction(1)]
	for n in range(1, m + 1):
		acc = sum((math.comb(n + 1, j) * numbers[j] for j in range(n)), Fraction(0))
		numbers.append(-acc / (n + 1))
	return tuple(numbers)


def bernoulli(k: int) -> Fraction:
	"""
	Exact Bernoulli number B_k for even k >= 0, from sum_{j<m} C(m, j) B_j = 0.

	Raises:
		DomainError: If k is odd or negative.
	"""
	if k < 0 or k % 2:
		raise DomainError(f"Bernoulli numbers are provided for even k >= 0, got {k}.")
	return _bernoulliUpTo(k)[k]


def eisensteinFactor(k: int) -> Fraction:
	"""The coefficient -2k/B_k of the Eisenstein q-expansion (-24, 240, -504, ...)."""
	if k < 2 or k % 2:
		raise DomainError(f"Eisenstein series need even k >= 2, got {k}.")
	return Fraction(-2 * k) / bernoulli(k)


@lru_cache(maxsize=None)
def zetaInteger(s: int) -> CertifiedConstant:
	"""
	Riemann zeta(s) for integer s >= 2 by Euler-Maclaurin summation.

	With cutoff N and M correction terms the remainder is bounded by the first omitted
	correction term doubled, which is far below binary64 resolution for N = 16, M = 12.

	Raises:
		DomainError: For s < 2.
	"""
	if s < 2:
		raise DomainError(f"zeta(s) is evaluated for integers s >= 2 only, got {s}.")
	n = _EM_CUTOFF
	terms: List[float] = [float(j) ** (-s) for j in range(1, n)]
	terms.append(float(n) ** (1 - s) / (s - 1))
	terms.append(0.5 * float(n) ** (-s))
	rising = float(s)  # s (s+1) ... (s+2j-2)
	omitted = 0.0
	for j in range(1, _EM_CORRECTIONS + 2):
		if j > 1:
			rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
		term = float(bernoulli(2 * j)) / math.factorial(2 * j) * rising * float(n) ** (-s - 2 * j + 1)
		if j <= _EM_CORRECTIONS:
			terms.append(term)
		else:
			omitted = abs(term)
	value = math.fsum(terms)
	bound = 2.0 * omitted + 4.0 * math.ulp(value)
	return CertifiedConstant(value=value, errorBound=bound)


def zetaProductConstant(k: int) -> float:
	"""
	G_k(0) = zeta(2) zeta(k+1).

	Raises:
		DomainError: If k is not even or below 2.
	"""
	if k < 2 or k % 2:
		raise DomainError(f"k must be even and >= 2, got {k}.")
	return (math.pi ** 2 / 6.0) * zetaInteger(k + 1).value


@lru_cache(maxsize=1)
def zetaPrimeTwo() -> float:
	"""zeta'(2), needed for the linear coefficient of F_2 at the cusp 0."""
	with mpmath.workdps(30):
		return float(mpmath.zeta(2, derivative=1))

# --- END: core/arith.py ---
