# --- START: core/quadrature.py ---
# core/quadrature.py
"""
Gauss-Legendre quadrature: fixed composite rules and an adaptive integrator.

The adaptive integrator bisects panels whose estimate |G_n(panel) - G_n(left) - G_n(right)|
exceeds their share of the tolerance. Integrands are vectorised: all nodes of the
current batch of panels are evaluated in one call, and every node counts against the
evaluation budget. An optional singular endpoint gets an initial dyadic partition.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Tuple, Union

import numpy as np
from numpy.polynomial.legendre import leggauss

from .exceptions import QuadratureError

logger: logging.Logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]
Scalar = Union[float, complex]

DEFAULT_ORDER: int = 10
DEFAULT_BUDGET: int = 100_000
_DYADIC_LEVELS: int = 24
_MIN_RELATIVE_WIDTH: float = 1e-14


@dataclass(frozen=True)
class QuadratureResult:
	"""Integral value with its error estimate and the work spent."""
	value: Scalar
	errorEstimate: float
	evaluations: int
	panels: int


@lru_cache(maxsize=32)
def gaussLegendreRule(order: int) -> Tuple[np.ndarray, np.ndarray]:
	"""Nodes and weights of the order-n rule on [-1, 1]."""
	nodes, weights = leggauss(order)
	nodes.setflags(write=False)
	weights.setflags(write=False)
	return nodes, weights


def compositeRule(breakpoints: np.ndarray, order: int) -> Tuple[np.ndarray, np.ndarray]:
	"""
	Composite Gauss-Legendre rule over consecutive breakpoints.

	Returns:
		Tuple[np.ndarray, np.ndarray]: flattened nodes and weights.
	"""
	x, w = gaussLegendreRule(order)
	left = np.asarray(breakpoints[:-1], dtype=np.float64)
	right = np.asarray(breakpoints[1:], dtype=np.float64)
	half = 0.5 * (right - left)
	mid = 0.5 * (right + left)
	nodes = mid[:, None] + half[:, None] * x[None, :]
	weights = half[:, None] * w[None, :]
	return nodes.ravel(), weights.ravel()


@lru_cache(maxsize=8)
def gradedUnitRule(order: int, levels: int = 30) -> Tuple[np.ndarray, np.ndarray]:
	"""
	Composite rule on [0, 1] graded geometrically toward both endpoints.

	Panels [2^-(j+1), 2^-j] for j < levels (mirrored at 1) resolve integrands with
	logarithmic endpoint behaviour such as Cl2(2 pi u).
	"""
	half = [0.0] + [2.0 ** -(j + 1) for j in range(levels, 0, -1)]
	left = np.array(half + [0.5])
	breakpoints = np.concatenate([left, 1.0 - left[-2::-1]])
	nodes, weights = compositeRule(breakpoints, order)
	nodes.setflags(write=False)
	weights.setflags(write=False)
	return nodes, weights


def _initialPanels(a: float, b: float, singularEnd: Optional[str]) -> List[Tuple[float, float]]:
	if singularEnd is None:
		return [(a, b)]
	width = b - a
	cuts = [width * 2.0 ** -j for j in range(_DYADIC_LEVELS, -1, -1)]
	if singularEnd == 'left':
		points = [a] + [a + c for c in cuts]
	elif singularEnd == 'right':
		points = [b - c for c in cuts[::-1]] + [b]
	else:
		raise ValueError(f"singularEnd must be 'left', 'right' or None, got {singularEnd!r}")
	points[-1 if singularEnd == 'left' else 0] = b if singularEnd == 'left' else a
	return [(points[i], points[i + 1]) for i in range(len(points) - 1) if points[i + 1] > points[i]]


def integrateAdaptive(
	func: Integrand,
	a: float,
	b: float,
	tol: float,
	budget: int = DEFAULT_BUDGET,
	order: int = DEFAULT_ORDER,
	singularEnd: Optional[str] = None
) -> QuadratureResult:
	"""
	Adaptive Gauss-Legendre integration of a vectorised (real or complex) integrand.

	Args:
		func (Integrand): Maps an array of nodes to an array of values.
		a (float): Lower limit.
		b (float): Upper limit (b > a).
		tol (float): Absolute tolerance for the total error estimate.
		budget (int): Maximum number of integrand evaluations.
		order (int): Gauss-Legendre order per panel.
		singularEnd (Optional[str]): 'left' or 'right' to start with a dyadic partition
			toward that endpoint.

	Returns:
		QuadratureResult: Value, error estimate and work statistics.

	Raises:
		QuadratureError: If the tolerance is not met within the budget.
	"""
	if not b > a:
		if b == a:
			return QuadratureResult(value=0.0, errorEstimate=0.0, evaluations=0, panels=0)
		raise ValueError(f"Integration limits must satisfy a < b, got [{a}, {b}].")
	x, w = gaussLegendreRule(order)
	total = b - a
	minWidth = _MIN_RELATIVE_WIDTH * max(total, abs(a), abs(b))
	pending = _initialPanels(a, b, singularEnd)
	accepted: List[Scalar] = []
	acceptedError = 0.0
	evaluations = 0
	panelCount = 0

	def panelSums(panels: List[Tuple[float, float]]) -> np.ndarray:
		nonlocal evaluations
		lefts = np.array([p[0] for p in panels])
		rights = np.array([p[1] for p in panels])
		half = 0.5 * (rights - lefts)
		mids = 0.5 * (rights + lefts)
		nodes = mids[:, None] + half[:, None] * x[None, :]
		values = np.asarray(func(nodes.ravel())).reshape(nodes.shape)
		evaluations += nodes.size
		return (values * w[None, :]).sum(axis=1) * half

	# whole-panel estimates are refined into halves; each level evaluates 2 halves per panel
	coarse = panelSums(pending)
	while pending:
		halves: List[Tuple[float, float]] = []
		for left, right in pending:
			middle = 0.5 * (left + right)
			halves.extend([(left, middle), (middle, right)])
		if evaluations + len(halves) * order > budget:
			estimate = sum(accepted) + complex(np.sum(coarse)) if accepted or len(coarse) else 0.0
			remaining = float(np.sum(np.abs(coarse)))
			raise QuadratureError(
				f"Quadrature budget of {budget} evaluations exhausted on [{a}, {b}] "
				f"with {len(pending)} unresolved panels.",
				estimate=estimate,
				errorEstimate=acceptedError + remaining,
				evaluations=evaluations
			)
		fine = panelSums(halves).reshape(-1, 2)
		refined = fine.sum(axis=1)
		errors = np.abs(refined - coarse)
		nextPending: List[Tuple[float, float]] = []
		nextCoarse: List[Scalar] = []
		for index, (left, right) in enumerate(pending):
			width = right - left
			share = tol * width / total
			if errors[index] <= share or width <= minWidth:
				accepted.append(refined[index])
				acceptedError += float(errors[index])
				panelCount += 2
			else:
				middle = 0.5 * (left + right)
				nextPending.extend([(left, middle), (middle, right)])
				nextCoarse.extend([fine[index, 0], fine[index, 1]])
		pending = nextPending
		coarse = np.array(nextCoarse)

	acceptedValues = np.array(accepted)
	value: Scalar = complex(acceptedValues.sum()) if np.iscomplexobj(acceptedValues) else math.fsum(acceptedValues.tolist())
	if acceptedError > tol:
		logger.debug(f"Quadrature on [{a}, {b}] accepted minimal-width panels; estimate {acceptedError:.3e} > tol {tol:.3e}")
	return QuadratureResult(value=value, errorEstimate=acceptedError, evaluations=evaluations, panels=panelCount)

# --- END: core/quadrature.py ---
