# --- START: core/funceq.py ---
# core/funceq.py
"""
Functional equations of phi_2 and phi_k under SL2(Z).

Integrating the transformation law of E_2 three times gives, for gamma = (a b; c d) with c != 0,
	phi_2(x) = (cx+d)^4 phi_2(gamma x) - (i pi^3 / 3c^3)(cx+d) Log(cx+d) - (pi^2/c^2)(cx+d)^2 Log(cx+d)
	           + P(x) + 6 int_{-d/c}^x c (ct+d)^2 (c(x-t) - (ct+d)) phi_2(gamma t) dt,
with a cubic P in u = cx + d. This module evaluates the constant f_gamma, determines P
numerically on the vertical ray above the cusp -d/c, reads off the one-sided slopes of
G_2 at rationals and checks the identity on the real line. It also checks the general-k
identity for phi_k under z -> -1/z inside the upper half plane.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from . import analytic
from . import arith
from .analytic import SeriesValue, PointLike
from .contfrac import formatReal
from .exceptions import CertificateError, DomainError
from .inversion import inversionMoments
from .quadrature import integrateAdaptive, DEFAULT_BUDGET, DEFAULT_ORDER

logger: logging.Logger = logging.getLogger(__name__)

PI3: float = math.pi ** 3
DEFAULT_EPS: float = 1e-10
CUSP_SAMPLES: Tuple[float, ...] = (0.6, 0.8, 1.0, 1.25, 1.6)
CUSP_PROBES: Tuple[float, ...] = (1.0, 1.25, 0.8)
_CUSP_GUARD: float = 1e-9


def _extendedGcd(a: int, b: int) -> Tuple[int, int, int]:
	"""Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0."""
	x0, y0, x1, y1 = 1, 0, 0, 1
	while b:
		quotient, remainder = divmod(a, b)
		a, b = b, remainder
		x0, x1 = x1, x0 - quotient * x1
		y0, y1 = y1, y0 - quotient * y1
	if a < 0:
		a, x0, y0 = -a, -x0, -y0
	return a, x0, y0


@dataclass(frozen=True)
class SL2Matrix:
	"""Integer matrix (a b; c d) of determinant 1 acting by fractional linear maps."""
	a: int
	b: int
	c: int
	d: int

	def __post_init__(self: 'SL2Matrix') -> None:
		if self.a * self.d - self.b * self.c != 1:
			raise DomainError(f"Matrix ({self.a} {self.b}; {self.c} {self.d}) does not have determinant 1.")

	@classmethod
	def fromBottomRow(cls, c: int, d: int, lift: int = 0) -> 'SL2Matrix':
		"""
		Completes (c, d) to a matrix of SL2(Z) by Bezout; ``lift`` selects another completion
		(a + lift c, b + lift d).

		Raises:
			DomainError: If gcd(c, d) != 1.
		"""
		g, x, y = _extendedGcd(d, c)
		if g != 1:
			raise DomainError(f"Bottom row ({c}, {d}) is not coprime.")
		a, b = x, -y
		return cls(a + lift * c, b + lift * d, c, d)

	def apply(self: 'SL2Matrix', z: Union[complex, float]) -> Union[complex, float]:
		return (self.a * z + self.b) / (self.c * z + self.d)

	def applyExact(self: 'SL2Matrix', x: Fraction) -> Fraction:
		return (self.a * x + self.b) / (self.c * x + self.d)

	def negate(self: 'SL2Matrix') -> 'SL2Matrix':
		return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

	@property
	def cusp(self: 'SL2Matrix') -> Fraction:
		"""The pole -d/c of gamma."""
		if self.c == 0:
			raise DomainError("Matrices with c = 0 have no finite cusp.")
		return Fraction(-self.d, self.c)


S_MATRIX: SL2Matrix = SL2Matrix(0, -1, 1, 0)


def _requireCusp(c: int, d: int) -> None:
	if c == 0:
		raise DomainError("The functional equation needs c != 0.")
	if math.gcd(c, d) != 1:
		raise DomainError(f"gcd(c, d) must be 1, got gcd({c}, {d}) = {math.gcd(c, d)}.")


# --------------------------------------------------------------------------- E_2 and phi_2''

def eisensteinTransformResidual(z: PointLike, gamma: SL2Matrix, eps: float = 1e-12, minImag: float = analytic.Q_SERIES_MIN_IMAG) -> Tuple[float, float]:
	"""
	|E_2(gamma z) - (cz+d)^2 E_2(z) - (6c/(pi i))(cz+d)| with its certificate.

	Returns:
		Tuple[float, float]: (residual, certificate).
	"""
	zc = analytic._asComplex(z)
	gz = gamma.apply(zc)
	j = gamma.c * zc + gamma.d
	e2z = analytic.evalEisenstein(zc, 2, eps, minImag)
	e2gz = analytic.evalEisenstein(gz, 2, eps, minImag)
	residual = abs(e2gz.value - j * j * e2z.value - 6.0 * gamma.c / (math.pi * 1j) * j)
	certificate = e2gz.errorBound + abs(j) ** 2 * e2z.errorBound + 1e-14 * (1.0 + abs(j) ** 2) * abs(e2z.value)
	return residual, certificate


def phi2ThirdDerivativeResidual(z: PointLike, eps: float = 1e-12, minImag: float = analytic.Q_SERIES_MIN_IMAG) -> Tuple[float, float]:
	"""|phi_2'''(z) - (i pi^3/3)(E_2(z) - 1)| with its certificate."""
	third = analytic.evalPhi2Derivatives(z, 3, eps, minImag)
	e2 = analytic.evalEisenstein(z, 2, eps, minImag)
	residual = abs(third.value - 1j * PI3 / 3.0 * (e2.value - 1.0))
	return residual, third.errorBound + PI3 / 3.0 * e2.errorBound


def _fGammaAt(z: complex, gamma: SL2Matrix, eps: float, minImag: float) -> SeriesValue:
	"""phi_2''(z) - phi_2''(gamma z) + i pi^3/(3c(cz+d)) + 2 pi^2 Log(cz+d) + (i pi^3/3) z."""
	j = gamma.c * z + gamma.d
	here = analytic.evalPhi2Derivatives(z, 2, 0.5 * eps, minImag)
	there = analytic.evalPhi2Derivatives(gamma.apply(z), 2, 0.5 * eps, minImag)
	closed = 1j * PI3 / (3.0 * gamma.c * j) + 2.0 * math.pi ** 2 * cmath.log(j) + 1j * PI3 / 3.0 * z
	value = here.value - there.value + closed
	return SeriesValue(value, here.errorBound + there.errorBound + 1e-14 * abs(closed), max(here.termsUsed, there.termsUsed))


def phi2SecondDerivativeResidual(tau: PointLike, alpha: PointLike, gamma: SL2Matrix, eps: float = 1e-12, minImag: float = analytic.Q_SERIES_MIN_IMAG) -> Tuple[float, float]:
	"""
	Residual of the phi_2'' identity between two points: the combination f_gamma evaluated at
	tau and at alpha must coincide.
	"""
	atTau = _fGammaAt(analytic._asComplex(tau), gamma, eps, minImag)
	atAlpha = _fGammaAt(analytic._asComplex(alpha), gamma, eps, minImag)
	return abs(atTau.value - atAlpha.value), atTau.errorBound + atAlpha.errorBound


@dataclass(frozen=True)
class GammaConstants:
	"""f_gamma and the cusp value g_gamma(-d/c) for a bottom row (c, d)."""
	c: int
	d: int
	a: int
	b: int
	fGamma: complex
	fGammaBound: float
	gGammaAtCusp: complex
	probeValues: Tuple[Tuple[complex, complex], ...]


def _probePoints(gamma: SL2Matrix, probes: Optional[Sequence[complex]], minImag: float) -> Tuple[complex, ...]:
	candidates = tuple(probes) if probes is not None else (1j, 0.5 + 1j, 2j)
	usable = tuple(z for z in candidates if z.imag >= minImag and gamma.apply(z).imag >= minImag)
	if len(usable) >= 2:
		return usable
	centre = float(gamma.cusp)
	scale = abs(gamma.c)
	centred = tuple(complex(centre, s / scale) for s in CUSP_PROBES)
	usable = tuple(z for z in centred if z.imag >= minImag and gamma.apply(z).imag >= minImag)
	if len(usable) < 2:
		raise CertificateError(f"No admissible probe points for c={gamma.c}, d={gamma.d}.")
	return usable


def computeFGamma(
	c: int,
	d: int,
	eps: float = DEFAULT_EPS,
	lift: int = 0,
	probes: Optional[Sequence[complex]] = None,
	minImag: float = analytic.Q_SERIES_MIN_IMAG
) -> GammaConstants:
	"""
	The constant f_gamma of the phi_2'' identity, evaluated at several probe points.

	Args:
		c (int): Lower-left entry, non-zero.
		d (int): Lower-right entry, coprime to c.
		eps (float): Accuracy per probe evaluation.
		lift (int): Selects the Bezout completion (a, b).
		probes (Optional[Sequence[complex]]): Probe points; defaults to i, 1/2 + i, 2i.
		minImag (float): Smallest admissible imaginary part for the q-series.

	Returns:
		GammaConstants: f_gamma (value at the first probe) and g_gamma(-d/c).

	Raises:
		DomainError: If c = 0 or gcd(c, d) != 1.
		CertificateError: If the probe values disagree beyond their certificates.
	"""
	_requireCusp(c, d)
	gamma = SL2Matrix.fromBottomRow(c, d, lift)
	points = _probePoints(gamma, probes, minImag)
	values = [_fGammaAt(z, gamma, eps, minImag) for z in points]
	reference = values[0]
	for z, value in zip(points[1:], values[1:]):
		deviation = abs(value.value - reference.value)
		if deviation > 2.0 * eps + value.errorBound + reference.errorBound:
			raise CertificateError(
				f"f_gamma for (c,d)=({c},{d}) differs by {deviation:.3e} between probes {points[0]} and {z}."
			)
	f = reference.value
	gAtCusp = (math.pi ** 2 * d / (2.0 * c) + 1j * PI3 * d * d / (18.0 * c * c)
			   - 1j * PI3 / (3.0 * c * c) + d / (2.0 * c) * f)
	logger.debug(f"f_gamma(c={c}, d={d}) = {f} from probes {points}")
	return GammaConstants(
		c=c, d=d, a=gamma.a, b=gamma.b,
		fGamma=f,
		fGammaBound=reference.errorBound,
		gGammaAtCusp=gAtCusp,
		probeValues=tuple((z, v.value) for z, v in zip(points, values))
	)


# --------------------------------------------------------------------------- cusp polynomial

@dataclass(frozen=True)
class CuspPolynomial:
	"""
	P(x) = A u^3 + B u^2 + C u + D with u = cx + d.

	A is exact; D is phi_2(-d/c); B and C are fitted on the ray above the cusp.
	``fitResidual`` is the largest misfit of the cubic over the samples and
	``coefficientBound`` bounds the error of B and C.
	"""
	c: int
	d: int
	A: complex
	B: complex
	C: complex
	D: complex
	dBound: float
	fitResidual: float
	coefficientBound: float
	closedFormB: complex

	def evaluate(self: 'CuspPolynomial', u: complex) -> complex:
		return ((self.A * u + self.B) * u + self.C) * u + self.D

	def bound(self: 'CuspPolynomial', u: complex) -> float:
		"""Error bound of ``evaluate`` at u."""
		return self.coefficientBound * (abs(u) ** 2 + abs(u)) + self.dBound


def _vacuumIntegral(gamma: SL2Matrix, s: float, eps: float, budget: int, minImag: float, order: int) -> Tuple[complex, float]:
	"""6 int_0^s sigma^2 (s - 2 sigma) phi_2(a/c + i/(|c| sigma)) d sigma on the ray above the cusp."""
	scale = abs(gamma.c)
	base = gamma.a / gamma.c

	def integrand(sigma: np.ndarray) -> np.ndarray:
		points = base + 1j / (scale * sigma)
		values, _, _ = analytic.evalPhiDerivativeMany(points, 2, 0, 0.1 * eps, minImag)
		return 6.0 * sigma * sigma * (s - 2.0 * sigma) * values

	result = integrateAdaptive(integrand, 0.0, s, 0.1 * eps, order=order, budget=budget)
	# each value carries at most 0.1 eps; weights integrate to at most 6 s^4
	return complex(result.value), result.errorEstimate + 0.1 * eps * 6.0 * s ** 4


def cuspPolynomial(
	c: int,
	d: int,
	eps: float = DEFAULT_EPS,
	samples: Sequence[float] = CUSP_SAMPLES,
	budget: int = DEFAULT_BUDGET,
	minImag: float = analytic.Q_SERIES_MIN_IMAG,
	order: int = DEFAULT_ORDER
) -> CuspPolynomial:
	"""
	The cubic P of the phi_2 functional equation for the bottom row (c, d).

	The identity is continued to tau = -d/c + i s/|c| (u = i sgn(c) s). There every term
	except B u^2 + C u is computable, and B, C follow from a least-squares fit over the samples.

	Raises:
		DomainError: If c = 0 or gcd(c, d) != 1.
		CertificateError: If a sample point violates the q-series floor.
	"""
	_requireCusp(c, d)
	gamma = SL2Matrix.fromBottomRow(c, d)
	sign = 1 if c > 0 else -1
	scale = abs(c)
	A = -1j * PI3 / (18.0 * c ** 3)
	dValue = analytic.evalPhi(Fraction(-d, c), 2, eps)
	D = complex(dValue.value)

	rows = []
	rhs = []
	bounds = []
	for s in samples:
		tau = complex(float(gamma.cusp), s / scale)
		u = 1j * sign * s
		gammaTau = gamma.apply(tau)
		if tau.imag < minImag or gammaTau.imag < minImag:
			raise CertificateError(f"Sample s={s} leaves the certified region for c={c}.")
		phiTau = analytic.evalPhiDerivative(tau, 2, 0, 0.1 * eps, minImag)
		phiGammaTau = analytic.evalPhiDerivative(gammaTau, 2, 0, 0.1 * eps / s ** 4, minImag)
		jValue, jBound = _vacuumIntegral(gamma, s, eps, budget, minImag, order)
		logU = cmath.log(u)
		residual = (phiTau.value - u ** 4 * phiGammaTau.value
					+ 1j * PI3 / (3.0 * c ** 3) * u * logU
					+ math.pi ** 2 / c ** 2 * u * u * logU
					- jValue - A * u ** 3 - D)
		rows.append([u * u, u])
		rhs.append(residual)
		bounds.append(phiTau.errorBound + s ** 4 * phiGammaTau.errorBound + jBound + dValue.errorBound)
	matrix = np.array(rows, dtype=np.complex128)
	target = np.array(rhs, dtype=np.complex128)
	solution, _, _, _ = np.linalg.lstsq(matrix, target, rcond=None)
	B, C = complex(solution[0]), complex(solution[1])
	fitResidual = float(np.max(np.abs(matrix @ solution - target)))
	pseudoInverse = np.linalg.pinv(matrix)
	coefficientBound = float(np.max(np.abs(pseudoInverse).sum(axis=1))) * (max(bounds) + fitResidual)

	f = computeFGamma(c, d, eps, minImag=minImag).fGamma
	closedFormB = f / (2.0 * c * c) + 3.0 * math.pi ** 2 / (2.0 * c * c) + 1j * PI3 * d / (6.0 * c ** 3)
	logger.debug(f"Cusp polynomial (c={c}, d={d}): B={B}, C={C}, fit residual {fitResidual:.2e}")
	return CuspPolynomial(
		c=c, d=d, A=A, B=B, C=C, D=D,
		dBound=dValue.errorBound,
		fitResidual=fitResidual,
		coefficientBound=coefficientBound,
		closedFormB=closedFormB
	)


# --------------------------------------------------------------------------- local expansions

@dataclass(frozen=True)
class LocalExpansion:
	"""One-sided slopes of G_2 and the h log(1/h) coefficient of F_2 at p/q."""
	p: int
	q: int
	G2RightSlope: float
	G2LeftSlope: float
	jump: float
	F2LogCoefficient: float
	F2LinearCoefficient: float
	closedFormRightSlope: float


def closedFormRightSlope(p: int, q: int) -> float:
	"""
	Right derivative of G_2 at p/q from the divisor swap:
	pi^2 sum_e (2{ep/q} - 1)/e^2 = L_2(p/q) - pi^4/(6 q^2).
	"""
	lk = analytic.evalLk(Fraction(p, q), 2)
	return lk.value - math.pi ** 4 / (6.0 * q * q)


def localExpansion(
	p: int,
	q: int,
	eps: float = DEFAULT_EPS,
	budget: int = DEFAULT_BUDGET,
	minImag: float = analytic.Q_SERIES_MIN_IMAG,
	order: int = DEFAULT_ORDER
) -> LocalExpansion:
	"""
	Local data of G_2 and F_2 at the rational p/q, read off the cusp polynomial of (q, -p).
	``budget``, ``minImag`` and ``order`` are handed to the cusp fit unchanged.

	Raises:
		DomainError: If q < 1 or gcd(p, q) != 1.
	"""
	if q < 1:
		raise DomainError(f"Denominator must be >= 1, got {q}.")
	if math.gcd(p, q) != 1:
		raise DomainError(f"{p}/{q} is not in lowest terms.")
	polynomial = cuspPolynomial(q, -p, eps, budget=budget, minImag=minImag, order=order)
	right = q * polynomial.C.real
	jump = math.pi ** 4 / (3.0 * q * q)
	return LocalExpansion(
		p=p, q=q,
		G2RightSlope=right,
		G2LeftSlope=right + jump,
		jump=jump,
		F2LogCoefficient=PI3 / (3.0 * q * q),
		F2LinearCoefficient=q * polynomial.C.imag - PI3 * math.log(q) / (3.0 * q * q),
		closedFormRightSlope=closedFormRightSlope(p, q)
	)


# --------------------------------------------------------------------------- real-line identity

@dataclass(frozen=True)
class ResidualReport:
	"""|LHS - RHS| of an identity together with the certificate it must respect."""
	residual: float
	certificate: float
	parts: Dict[str, complex]

	@property
	def withinCertificate(self: 'ResidualReport') -> bool:
		return self.residual <= self.certificate


def _cuspIntegralOnLine(gamma: SL2Matrix, u: float, eps: float) -> SeriesValue:
	"""
	6 int_{-d/c}^x c(ct+d)^2 (c(x-t) - (ct+d)) phi_2(gamma t) dt with u = cx + d, rewritten as
	6 int_{1/|u|}^inf (|u| w^-4 - 2 w^-5) phi_2(a/c + eps_s w/|c|) dw, eps_s = -sgn(c) sgn(u).
	"""
	absU = abs(u)
	direction = -(1 if gamma.c > 0 else -1) * (1 if u > 0 else -1)
	scale = abs(gamma.c)
	moments = inversionMoments(
		1.0 / absU, (4, 5), offset=Fraction(gamma.a, gamma.c), direction=direction, period=scale,
		eps=eps / (12.0 * (absU + 2.0))
	)
	gPart = absU * moments.g[4].value - 2.0 * moments.g[5].value
	fPart = absU * moments.f[4].value - 2.0 * moments.f[5].value
	bound = sum(absU * parts[4].errorBound + 2.0 * parts[5].errorBound for parts in (moments.g, moments.f))
	return SeriesValue(6.0 * complex(gPart, fPart), 6.0 * bound, moments.outerTerms)


def phi2TransformCheck(
	x: Union[float, Fraction],
	gamma: SL2Matrix,
	eps: float = DEFAULT_EPS,
	quadBudget: int = DEFAULT_BUDGET
) -> ResidualReport:
	"""
	Evaluates both sides of the phi_2 functional equation at a real point.

	Raises:
		DomainError: If c = 0 or x is within 1e-9 of the cusp -d/c.
	"""
	if gamma.c == 0:
		raise DomainError("The functional equation needs c != 0.")
	u = gamma.c * float(x) + gamma.d
	if abs(float(x) - float(gamma.cusp)) < _CUSP_GUARD:
		raise DomainError(f"x={formatReal(x)} is within {_CUSP_GUARD} of the cusp {gamma.cusp}.")
	c = gamma.c
	polynomial = cuspPolynomial(c, gamma.d, 0.1 * eps, budget=quadBudget)
	gammaX = gamma.applyExact(Fraction(x)) if isinstance(x, Fraction) else gamma.apply(float(x))
	left = analytic.evalPhi(x, 2, 0.1 * eps)
	image = analytic.evalPhi(gammaX, 2, max(analytic.EPS_FLOOR, 0.1 * eps / max(1.0, u ** 4)))
	logU = cmath.log(complex(u))
	logTerms = -1j * PI3 / (3.0 * c ** 3) * u * logU - math.pi ** 2 / c ** 2 * u * u * logU
	integral = _cuspIntegralOnLine(gamma, u, 0.1 * eps)
	pValue = polynomial.evaluate(u)
	right = u ** 4 * image.value + logTerms + pValue + integral.value
	certificate = (left.errorBound + u ** 4 * image.errorBound + polynomial.bound(u)
				   + integral.errorBound + 1e-13 * (abs(right) + 1.0))
	residual = abs(left.value - right)
	logger.info(f"phi_2 transform check x={formatReal(x)}, gamma=({gamma.a} {gamma.b}; {gamma.c} {gamma.d}): residual {residual:.3e}")
	return ResidualReport(
		residual=residual,
		certificate=certificate,
		parts={'lhs': complex(left.value), 'image': u ** 4 * image.value, 'log': logTerms,
			   'polynomial': pValue, 'integral': integral.value}
	)


# --------------------------------------------------------------------------- general weight

def eisensteinNormaliser(k: int) -> complex:
	"""C_k = -k! 2k / ((2 i pi)^(k+1) B_k), so that phi_k^(k+1) = (k!/C_k)(E_k - 1)."""
	return -math.factorial(k) * 2 * k / ((2j * math.pi) ** (k + 1) * float(arith.bernoulli(k)))


def _laurentDerivative(k: int, tau: complex, u: complex, order: int) -> complex:
	"""d^order/du^order of (1 + tau u)^k / u^2 = sum_j C(k,j) tau^j u^(j-2)."""
	total = 0j
	for j in range(k + 1):
		exponent = j - 2
		falling = 1.0
		for step in range(order):
			falling *= exponent - step
		if falling == 0.0:
			continue
		total += math.comb(k, j) * tau ** j * falling * u ** (exponent - order)
	return total


def _phiDerivativesAt(z: complex, k: int, maxOrder: int, eps: float, minImag: float) -> Tuple[np.ndarray, np.ndarray]:
	values = np.empty(maxOrder + 1, dtype=np.complex128)
	bounds = np.empty(maxOrder + 1)
	for order in range(maxOrder + 1):
		value = analytic.evalPhiDerivative(z, k, order, eps, minImag)
		values[order], bounds[order] = value.value, value.errorBound
	return values, bounds


def verifyFunceqK(
	k: int,
	tau: PointLike,
	alpha: PointLike,
	eps: float = 1e-12,
	quadBudget: int = DEFAULT_BUDGET,
	minImag: float = analytic.Q_SERIES_MIN_IMAG
) -> ResidualReport:
	"""
	Checks, for even k >= 4,
	phi_k(tau) = tau^(k+2) phi_k(-1/tau) - (k/C_k) tau Log tau + P_{k,alpha}(tau)
	             + (k+1) int_alpha^tau (k tau t^k - (k+2) t^(k+1)) phi_k(-1/t) dt,
	with P_{k,alpha} = (p + q)/C_k - (1/k!) sum_i (-1)^i g^(i)(-1/alpha) phi_k^(k-i)(-1/alpha),
	g(u) = (1 + tau u)^k / u^2, and
	p = -(tau-alpha)^(k+1)/(k+1) + C_k sum_m (tau-alpha)^(k-m) phi_k^(k-m)(alpha)/(k-m)!,
	q = sum_{m<=k-2} (-1)^m C(k,m) (tau - tau^(k-m) alpha^(m-k+1))/(m-k+1) + k tau Log alpha + tau - alpha.

	Raises:
		DomainError: For odd k or k < 4.
		CertificateError: If the straight path from alpha to tau, or its image under -1/t,
			comes below the q-series floor.
	"""
	if k < 4 or k % 2:
		raise DomainError(f"verify_funceq_k needs even k >= 4 (use phi2TransformCheck for k = 2), got {k}.")
	tauC = analytic._asComplex(tau)
	alphaC = analytic._asComplex(alpha)
	path = alphaC + np.linspace(0.0, 1.0, 257) * (tauC - alphaC)
	if float(path.imag.min()) < minImag or float((-1.0 / path).imag.min()) < minImag:
		raise CertificateError(f"Integration path from {alphaC} to {tauC} leaves the certified region.")

	normaliser = eisensteinNormaliser(k)
	factorial = math.factorial(k)
	delta = tauC - alphaC

	lhs = analytic.evalPhiDerivative(tauC, k, 0, eps, minImag)
	image = analytic.evalPhiDerivative(-1.0 / tauC, k, 0, eps, minImag)
	main = tauC ** (k + 2) * image.value
	logTerm = -(k / normaliser) * tauC * cmath.log(tauC)

	atAlpha, alphaBounds = _phiDerivativesAt(alphaC, k, k, eps, minImag)
	pPoly = -delta ** (k + 1) / (k + 1) + normaliser * sum(
		delta ** (k - m) * atAlpha[k - m] / math.factorial(k - m) for m in range(k + 1)
	)
	qPoly = sum(
		(-1) ** m * math.comb(k, m) * (tauC - tauC ** (k - m) * alphaC ** (m - k + 1)) / (m - k + 1)
		for m in range(k - 1)
	) + k * tauC * cmath.log(alphaC) + tauC - alphaC
	uAlpha = -1.0 / alphaC
	atImage, imageBounds = _phiDerivativesAt(uAlpha, k, k, eps, minImag)
	boundary = sum(
		(-1) ** i * _laurentDerivative(k, tauC, uAlpha, i) * atImage[k - i] for i in range(k + 1)
	) / factorial
	polynomial = (pPoly + qPoly) / normaliser - boundary

	def integrand(s: np.ndarray) -> np.ndarray:
		t = alphaC + s * delta
		values, _, _ = analytic.evalPhiDerivativeMany(-1.0 / t, k, 0, eps, minImag)
		return (k + 1) * (k * tauC * t ** k - (k + 2) * t ** (k + 1)) * values * delta

	if delta == 0:
		integral, integralBound = 0j, 0.0
	else:
		result = integrateAdaptive(integrand, 0.0, 1.0, eps, budget=quadBudget)
		pathScale = max(abs(tauC), abs(alphaC))
		weightMax = (k + 1) * (k * abs(tauC) * pathScale ** k + (k + 2) * pathScale ** (k + 1)) * abs(delta)
		integral, integralBound = complex(result.value), result.errorEstimate + weightMax * eps

	rhs = main + logTerm + polynomial + integral
	residual = abs(lhs.value - rhs)
	alphaWeight = abs(normaliser) * sum(abs(delta) ** (k - m) * alphaBounds[k - m] / math.factorial(k - m) for m in range(k + 1))
	imageWeight = sum(abs(_laurentDerivative(k, tauC, uAlpha, i)) * imageBounds[k - i] for i in range(k + 1)) / factorial
	magnitude = abs(main) + abs(logTerm) + abs(pPoly / normaliser) + abs(qPoly / normaliser) + abs(boundary) + abs(integral)
	certificate = (lhs.errorBound + abs(tauC) ** (k + 2) * image.errorBound + alphaWeight / abs(normaliser)
				   + imageWeight + integralBound + 64.0 * 2.0 ** -53 * magnitude)
	logger.info(f"Weight-{k} functional equation at tau={tauC}, alpha={alphaC}: residual {residual:.3e}")
	return ResidualReport(
		residual=residual,
		certificate=certificate,
		parts={'lhs': complex(lhs.value), 'main': main, 'log': logTerm, 'polynomial': polynomial, 'integral': integral}
	)

# --- END: core/funceq.py ---
