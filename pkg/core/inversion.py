# --- START: core/inversion.py ---
# core/inversion.py
"""
Integrals of F_2 and G_2 composed with the inversion t -> 1/t.

Both the continued-fraction iteration and the real-line functional equation need
integrals whose integrand oscillates without bound near one endpoint, e.g.
	int_0^y t^2 (y - 2t) F_2(1/t) dt = int_{1/y}^inf (y s^-4 - 2 s^-5) F_2(s) ds.
After the divisor swap F_2(s) = sum_e Cl2(2 pi {e s}) / e^3 each outer term is the
integral of a 1-periodic kernel against a power weight; summing the weight over whole
periods gives Hurwitz zeta values, so every outer term reduces to two smooth integrals
over one period. The outer sum is cut with an integration-by-parts tail bound.

The general primitive is
	M_m = int_L^inf w^-m Psi(offset + direction * w / period) dw,  Psi in {G_2, F_2}.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Sequence, Tuple, Union

import numpy as np
from scipy.special import zeta as hurwitzZeta

from . import arith
from . import special
from .analytic import SeriesValue
from .contfrac import formatReal
from .exceptions import DomainError
from .quadrature import gradedUnitRule

logger: logging.Logger = logging.getLogger(__name__)

RealLike = Union[float, int, Fraction]

_FINE_ORDER: int = 10
_COARSE_ORDER: int = 6
_GRADING_LEVELS: int = 24
_MAX_CELLS: int = 2_000_000
_EXACT_OUTER_LIMIT: int = 200_000
_SHORTCUT_FRACTION: float = 1e-3


def _kernelAntiderivativeBounds() -> Tuple[float, float]:
	"""Sup of the zero-mean antiderivatives of the G and F kernels."""
	boundG = math.pi ** 2 * special.bernoulliB3Maximum() / 3.0
	boundF = arith.zetaInteger(3).value / (2.0 * math.pi)
	return boundG, boundF


def seriesSupremum() -> float:
	"""sup |F_2|, sup |G_2| <= zeta(2) zeta(3)."""
	return arith.zetaProductConstant(2)


@dataclass(frozen=True)
class MomentSet:
	"""Moments M_m of G_2 (``g``) and F_2 (``f``) keyed by the power m."""
	g: Dict[int, SeriesValue] = field(default_factory=dict)
	f: Dict[int, SeriesValue] = field(default_factory=dict)
	outerTerms: int = 0


def _outerTermCount(lower: float, powers: Sequence[int], period: float, eps: float) -> int:
	boundG, boundF = _kernelAntiderivativeBounds()
	worst = max(2.0 * max(boundG, boundF) * period * lower ** (-m) for m in powers)
	return max(1, math.ceil((worst / (3.0 * 0.5 * eps)) ** (1.0 / 3.0)))


def _periodData(
	lower: RealLike, offset: RealLike, direction: int, period: int, e: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
	"""
	Start fraction f_e in (0, 1] of the partial period and the Hurwitz shift m0 + h for each e.

	L = e (lower/period + direction*offset), m0 = ceil(L), f = L - (m0 - 1), h = -e*direction*offset.
	Computed exactly when the inputs are rational.
	"""
	exact = isinstance(lower, (Fraction, int)) and isinstance(offset, (Fraction, int)) and e.size <= _EXACT_OUTER_LIMIT
	if exact:
		base = Fraction(lower) / period + direction * Fraction(offset)
		shiftBase = -direction * Fraction(offset)
		starts = np.empty(e.size)
		shifts = np.empty(e.size)
		for index, ei in enumerate(e.tolist()):
			bigL = base * ei
			m0 = -((-bigL.numerator) // bigL.denominator)
			starts[index] = float(bigL - (m0 - 1))
			shifts[index] = float(m0 + shiftBase * ei)
		return starts, shifts
	ef = e.astype(np.float64)
	bigL = ef * (float(lower) / period + direction * float(offset))
	m0 = np.ceil(bigL)
	return bigL - (m0 - 1.0), m0 - ef * direction * float(offset)


def inversionMoments(
	lower: RealLike,
	powers: Sequence[int] = (4, 5),
	offset: RealLike = 0,
	direction: int = 1,
	period: int = 1,
	eps: float = 1e-10
) -> MomentSet:
	"""
	M_m = int_lower^inf w^-m Psi(offset + direction w / period) dw for Psi = G_2 and F_2.

	Args:
		lower (RealLike): Lower limit, > 0.
		powers (Sequence[int]): Weight exponents m >= 2.
		offset (RealLike): Shift of the argument.
		direction (int): +1 or -1.
		period (int): Positive integer divisor of the argument.
		eps (float): Target absolute accuracy of every moment.

	Returns:
		MomentSet: The moments with truncation-plus-quadrature bounds.

	Raises:
		DomainError: If lower <= 0, direction not +-1, period < 1 or a power < 2.
	"""
	if not lower > 0 or direction not in (1, -1) or period < 1 or min(powers) < 2:
		raise DomainError(
			f"Invalid inversion moment request: lower={lower}, direction={direction}, period={period}, powers={powers}."
		)
	lowerF = float(lower)
	terms = _outerTermCount(lowerF, powers, float(period), eps)
	fineNodes, fineWeights = gradedUnitRule(_FINE_ORDER, _GRADING_LEVELS)
	coarseNodes, coarseWeights = gradedUnitRule(_COARSE_ORDER, _GRADING_LEVELS)
	kernelsFine = (math.pi ** 2 * special.bernoulliB2(fineNodes), special.clausen2(special.TWO_PI * fineNodes))
	kernelsCoarse = (math.pi ** 2 * special.bernoulliB2(coarseNodes), special.clausen2(special.TWO_PI * coarseNodes))

	totals = {(kind, m): [0.0, 0.0] for kind in (0, 1) for m in powers}  # [fine, |fine - coarse|]
	rows = max(1, _MAX_CELLS // (fineNodes.size * len(powers)))
	for start in range(1, terms + 1, rows):
		e = np.arange(start, min(terms, start + rows - 1) + 1, dtype=np.int64)
		starts, shifts = _periodData(lower, offset, direction, period, e)
		ef = e.astype(np.float64)
		span = 1.0 - starts
		for m in powers:
			prefactor = ef ** -3.0 * (period / ef) ** (1.0 - m)
			perTerm: Dict[Tuple[str, int], np.ndarray] = {}
			for slot, nodes, weights, kernels in (('fine', fineNodes, fineWeights, kernelsFine),
												  ('coarse', coarseNodes, coarseWeights, kernelsCoarse)):
				# partial period: theta = m0 - 1 + u with u in [f, 1]
				u = starts[:, None] + span[:, None] * nodes[None, :]
				partialWeight = (shifts[:, None] - 1.0 + u) ** (-m) * (span[:, None] * weights[None, :])
				partialKernels = (math.pi ** 2 * special.bernoulliB2(u), special.clausen2(special.TWO_PI * u))
				# whole periods: int_0^1 kappa(u) zeta(m, m0 + h + u) du
				periodicWeight = hurwitzZeta(float(m), shifts[:, None] + nodes[None, :]) * weights[None, :]
				for kind in (0, 1):
					perE = (partialWeight * partialKernels[kind]).sum(axis=1) + (periodicWeight * kernels[kind][None, :]).sum(axis=1)
					sign = direction if kind == 1 else 1
					perTerm[(slot, kind)] = sign * prefactor * perE
			for kind in (0, 1):
				fine = perTerm[('fine', kind)]
				totals[(kind, m)][0] += math.fsum(fine.tolist())
				totals[(kind, m)][1] += float(np.sum(np.abs(fine - perTerm[('coarse', kind)])))

	boundG, boundF = _kernelAntiderivativeBounds()
	moments = MomentSet(outerTerms=terms)
	for m in powers:
		for kind, target, kernelBound in ((0, moments.g, boundG), (1, moments.f, boundF)):
			value, quadratureError = totals[(kind, m)][0], totals[(kind, m)][1]
			tail = 2.0 * kernelBound * period * lowerF ** (-m) / (3.0 * float(terms) ** 3)
			rounding = 64.0 * 2.0 ** -53 * (abs(value) + seriesSupremum() * lowerF ** (1 - m))
			target[m] = SeriesValue(value, tail + quadratureError + rounding, terms)
	logger.debug(f"Inversion moments lower={lowerF:.6g} offset={float(offset):.6g} dir={direction} period={period}: E={terms}")
	return moments


@dataclass(frozen=True)
class GaussIntegrals:
	"""
	For y = T^k(x):  calI = int_0^y t^2 (y - 2t) Psi(1/t) dt  and  J = int_0^y t^2 Psi(1/t) dt,
	for Psi = F_2 (suffix F) and Psi = G_2 (suffix G).
	"""
	y: float
	calIF: SeriesValue
	jF: SeriesValue
	calIG: SeriesValue
	jG: SeriesValue


def gaussIntegrals(y: RealLike, eps: float = 1e-10) -> GaussIntegrals:
	"""
	The inner integrals of the continued-fraction iteration at y in (0, 1].

	Tiny y is answered by the a-priori bounds |calI| <= (3/16) y^4 sup|Psi| and
	|J| <= y^3/3 sup|Psi| once those fall well below eps.

	Raises:
		DomainError: If y is not in (0, 1].
	"""
	if not 0 < y <= 1:
		raise DomainError(f"Gauss-map integrals need y in (0, 1], got {formatReal(y)}.")
	supremum = seriesSupremum()
	yf = float(y)
	boundCalI = 3.0 / 16.0 * yf ** 4 * supremum
	boundJ = yf ** 3 / 3.0 * supremum
	if max(boundCalI, boundJ) <= _SHORTCUT_FRACTION * eps:
		zeroI = SeriesValue(0.0, boundCalI, 0)
		zeroJ = SeriesValue(0.0, boundJ, 0)
		return GaussIntegrals(y=yf, calIF=zeroI, jF=zeroJ, calIG=zeroI, jG=zeroJ)
	lower = 1 / Fraction(y) if isinstance(y, (Fraction, int)) else 1.0 / yf
	moments = inversionMoments(lower, (4, 5), eps=eps / 3.0)

	def combine(values: Dict[int, SeriesValue]) -> Tuple[SeriesValue, SeriesValue]:
		m4, m5 = values[4], values[5]
		calI = SeriesValue(yf * m4.value - 2.0 * m5.value, yf * m4.errorBound + 2.0 * m5.errorBound, m4.termsUsed)
		return calI, m4

	calIF, jF = combine(moments.f)
	calIG, jG = combine(moments.g)
	return GaussIntegrals(y=yf, calIF=calIF, jF=jF, calIG=calIG, jG=jG)

# --- END: core/inversion.py ---
