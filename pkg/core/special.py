# --- START: core/special.py ---
# core/special.py
"""
Elementary special functions for the accelerated evaluators.

The divisor swap turns the inner sums over d into closed forms:
sum_d cos(2 pi d y)/d^2 = pi^2 B2({y}) and sum_d sin(2 pi d y)/d^2 = Cl2(2 pi {y}).
This module provides those kernels, the odd sawtooth ((y)) of the L_k series, and
fractional parts {e x} that stay exact for rational x when the integers fit in int64.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

import numpy as np

from . import arith

logger: logging.Logger = logging.getLogger(__name__)

RealLike = Union[float, int, Fraction]

TWO_PI: float = 2.0 * math.pi
CLAUSEN_TERMS: int = 30
_UNIT_ROUNDOFF: float = 2.0 ** -53
_EXACT_PRODUCT_LIMIT: int = 2 ** 62


@lru_cache(maxsize=1)
def _clausenCoefficients() -> np.ndarray:
	"""c_n = |B_2n| / (2n (2n+1) (2n)!) for n = 1..CLAUSEN_TERMS, highest first for polyval."""
	coefficients = []
	for n in range(1, CLAUSEN_TERMS + 1):
		b = abs(arith.bernoulli(2 * n))
		coefficients.append(float(b / (2 * n * (2 * n + 1) * math.factorial(2 * n))))
	return np.array(coefficients[::-1], dtype=np.float64)


def clausen2(theta: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
	"""
	Clausen function Cl2(theta) = sum_n sin(n theta)/n^2.

	On [0, pi]: Cl2(t) = t - t log t + sum_n c_n t^(2n+1); the series has ratio (t/2pi)^2 <= 1/4,
	so thirty terms reach full double precision. Other angles are folded with
	2pi-periodicity and Cl2(2pi - t) = -Cl2(t).
	"""
	angles = np.mod(np.asarray(theta, dtype=np.float64), TWO_PI)
	mirrored = angles > math.pi
	t = np.where(mirrored, TWO_PI - angles, angles)
	with np.errstate(divide='ignore', invalid='ignore'):
		logPart = np.where(t > 0.0, t - t * np.log(np.where(t > 0.0, t, 1.0)), 0.0)
	tSquared = t * t
	series = t * tSquared * np.polyval(_clausenCoefficients(), tSquared)
	values = np.where(mirrored, -(logPart + series), logPart + series)
	if np.ndim(values) == 0:
		return float(values)
	return values


@lru_cache(maxsize=1)
def clausenMaximum() -> float:
	"""max Cl2 = Cl2(pi/3), the constant of the F-tail bounds."""
	return float(clausen2(math.pi / 3.0))


def bernoulliB2(u: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
	"""B2(u) = u^2 - u + 1/6 on [0, 1]."""
	return u * u - u + 1.0 / 6.0


def bernoulliB3Maximum() -> float:
	"""max |B3| on [0,1] = sqrt(3)/36, attained at 1/2 -+ sqrt(3)/6."""
	return math.sqrt(3.0) / 36.0


def sawtooth(y: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
	"""((y)) = {y} - 1/2 off the integers and 0 on them (odd, 1-periodic)."""
	values = np.asarray(y, dtype=np.float64)
	fractional = values - np.floor(values)
	result = np.where(fractional == 0.0, 0.0, fractional - 0.5)
	if np.ndim(result) == 0:
		return float(result)
	return result


def reduceModOne(x: RealLike) -> RealLike:
	"""x mod 1, exact for Fractions and integers."""
	if isinstance(x, (Fraction, int)):
		return Fraction(x) - math.floor(x)
	return float(x) - math.floor(x)


def fractionalParts(x: RealLike, multipliers: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
	"""
	{e x} for an array of positive integers e.

	For a rational x = p/q with q * max(e) < 2**62 the residues e p mod q are computed in
	int64 and the parts are correctly rounded, reported with zero extra error. Otherwise
	the parts come from binary64 products and the returned bound is |e x| * 2**-52 per entry.

	Returns:
		Tuple[np.ndarray, np.ndarray]: fractional parts and per-entry absolute error bounds.
	"""
	e = np.asarray(multipliers, dtype=np.int64)
	if isinstance(x, (Fraction, int)):
		fx = Fraction(x) - math.floor(x)
		p, q = fx.numerator, fx.denominator
		largest = int(e.max()) if e.size else 0
		if q * max(largest, 1) < _EXACT_PRODUCT_LIMIT:
			residues = (e * p) % q
			return residues.astype(np.float64) / float(q), np.zeros(e.shape, dtype=np.float64)
		xf = float(fx)
	else:
		xf = float(x) - math.floor(float(x))
	products = e.astype(np.float64) * xf
	parts = products - np.floor(products)
	bounds = (np.abs(products) + 1.0) * (4.0 * _UNIT_ROUNDOFF)
	return parts, bounds


def clausenRoundingBound(delta: np.ndarray) -> np.ndarray:
	"""
	Bound for |Cl2(2pi(u + d)) - Cl2(2pi u)| with |d| <= delta.

	Cl2'(t) = -log|2 sin(t/2)|, so the change is at most 2pi delta (1 + log(1/(2pi delta))).
	"""
	scaled = np.maximum(TWO_PI * np.asarray(delta, dtype=np.float64), 1e-300)
	return np.where(scaled > 0.0, scaled * (1.0 + np.maximum(np.log(1.0 / scaled), 0.0)), 0.0)

# --- END: core/special.py ---
