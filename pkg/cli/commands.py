# --- START: cli/commands.py ---
# cli/commands.py
"""
Command dispatch: turns a RunConfig into a ResultTable and an exit code.
"""

import logging
import math
from typing import Callable, Dict, Tuple

from core import analytic
from core.brjuno import BRJUNO_EXPONENTS, ExtremeNumber, brjunoReport
from core.contfrac import orbitFromParsed, orbitInvariantViolations
from core.exceptions import DomainError, ParsingError
from core.iteration import DEFAULT_RATIONAL_DEPTH, evalF2G2Cf
from core.settings import NumericsSettings
from utils.parallel import ParallelMapper
from .arguments import PointSource, RunConfig, resolveRealSpec
from .experiments import orbitOf, runMocSampler, runScanIrrational, runScanRational
from .output_writer import ResultTable
from .verify_suite import reportTable, runVerifySuite

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_VERIFY_FAILED: int = 3

CommandHandler = Callable[[RunConfig, NumericsSettings, ParallelMapper], Tuple[ResultTable, int]]


def _source(config: RunConfig, settings: NumericsSettings, asSurrogate: bool) -> PointSource:
	return resolveRealSpec(config.x, settings.quotientBitCap, asSurrogate=asSurrogate)


def _label(source: PointSource) -> str:
	return source.text


def _runEval(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	source = _source(config, settings, asSurrogate=config.method == 'cf')
	table = ResultTable(anchor='series-definition', columns=['x', 'k', 'method', 'F', 'F_err', 'G', 'G_err', 'terms'])
	if config.method == 'cf':
		if config.k != 2:
			raise DomainError("The orbit evaluator is available for k = 2 only.")
		if isinstance(source, ExtremeNumber):
			orbit = source.orbit(settings.cfGuard)
		else:
			length = len(source.quotients) if source.quotients else DEFAULT_RATIONAL_DEPTH
			orbit = orbitFromParsed(source, length, settings.cfGuard)
		result = evalF2G2Cf(orbit, config.eps)
		F, G = result.F, result.G
	else:
		value = source.parsed().value if isinstance(source, ExtremeNumber) else source.value
		F, G = analytic.evalSeries(
			value, config.k, config.eps, config.method,
			maxTerms=settings.naiveMaxTerms, chunk=settings.hyperbolaChunk, epsFloor=settings.epsFloor,
			memoryCapBytes=settings.memoryCapBytes
		)
	table.addRow([_label(source), config.k, config.method, F.value, F.errorBound, G.value, G.errorBound, F.termsUsed])
	return table, EXIT_OK


def _runCf(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	source = _source(config, settings, asSurrogate=True)
	orbit = orbitOf(source, config.depth, settings.cfGuard)
	table = ResultTable(anchor='gauss-map-orbit', columns=['k', 'a_k', 'p_k', 'q_k', 'T_k', 'beta_k', 'gamma_k'])
	for k in range(0, min(config.depth, orbit.depth) + 1):
		gamma = orbit.gamma(k) if orbit.T(k) != 0 else None
		table.addRow([k, orbit.a(k) if k >= 1 else None, orbit.p(k), orbit.q(k), float(orbit.T(k)), float(orbit.beta(k)), gamma])
	violations = orbitInvariantViolations(orbit)
	table.summary = {
		'x': _label(source),
		'depth': orbit.depth,
		'terminated': orbit.terminated,
		'surrogate': orbit.surrogate,
		'usable_depth': orbit.usableDepth,
		'invariant_violations': len(violations),
	}
	return table, EXIT_OK


def _runBrjuno(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	source = _source(config, settings, asSurrogate=True)
	report = brjunoReport(source, config.depth, incrementTolerance=settings.incrementTolerance)
	columns = ['n'] + [f"brjuno_sum_{k}" for k in BRJUNO_EXPONENTS] + [
		'beta_gamma_sum', 'star', 'star_star', 'kappa', 'bracket_ok', 'kappa_bound_ok'
	]
	table = ResultTable(anchor='square-brjuno-classification', columns=columns)
	for n in range(report.depth + 1):
		table.addRow(
			[n] + [report.brjunoSums[k][n] for k in BRJUNO_EXPONENTS] + [
				report.betaGammaSums[n], report.starSequence[n], report.starStarSequence[n],
				report.kappa[n], report.lemmaBracketOk[n], report.kappaBoundOk[n]
			]
		)
	table.summary = {
		'x': _label(source),
		'verdict': report.verdict,
		'square_sum': report.squareSum,
		'last_increment': report.lastIncrement,
		'star_ok': report.starOk,
		'star_star_ok': report.starStarOk,
		'mu_est': report.muEst,
		'nu_est': report.nuEst,
		'saturated': report.saturated,
	}
	return table, EXIT_OK


def _reducedFraction(text: str) -> Tuple[int, int]:
	"""p, q of ``rational:p/q`` as written; scan-rational refuses unreduced input."""
	kind, _, body = text.partition(':')
	if kind.strip().lower() != 'rational':
		raise ParsingError(f"scan-rational needs --x rational:p/q, got '{text}'.")
	numerator, _, denominator = body.partition('/')
	try:
		p, q = int(numerator), int(denominator)
	except ValueError as e:
		raise ParsingError(f"Malformed rational '{body}'.") from e
	if q < 1 or math.gcd(p, q) != 1:
		raise DomainError(f"{p}/{q} is not a reduced fraction with positive denominator.")
	return p % q, q


def _runScanRational(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	p, q = _reducedFraction(config.x)
	return runScanRational(p, q, config.hExponents, config.eps, mapper, settings), EXIT_OK


def _runScanIrrational(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	source = _source(config, settings, asSurrogate=True)
	table = runScanIrrational(source, config.nList, config.depth, config.eps, mapper, settings)
	table.summary['x'] = _label(source)
	return table, EXIT_OK


def _runMoc(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	source = _source(config, settings, asSurrogate=True)
	table = runMocSampler(source, config.pairs, config.seed, config.depth, mapper, settings)
	table.summary['x'] = _label(source)
	return table, EXIT_OK


def _runVerify(config: RunConfig, settings: NumericsSettings, mapper: ParallelMapper) -> Tuple[ResultTable, int]:
	report = runVerifySuite(config.seed, config.only, settings.batteryFile, mapper)
	if not report.passed:
		logger.error(f"Verify battery failed at: {', '.join(report.failingAnchors)}")
		return reportTable(report), EXIT_VERIFY_FAILED
	return reportTable(report), EXIT_OK


COMMAND_HANDLERS: Dict[str, CommandHandler] = {
	'eval': _runEval,
	'cf': _runCf,
	'brjuno': _runBrjuno,
	'scan-rational': _runScanRational,
	'scan-irrational': _runScanIrrational,
	'moc': _runMoc,
	'verify': _runVerify,
}


def executeCommand(config: RunConfig, settings: NumericsSettings) -> Tuple[ResultTable, int]:
	"""
	Runs one command.

	Returns:
		Tuple[ResultTable, int]: The result table and the process exit code.

	Raises:
		BaseApplicationError: Whatever the core raises for invalid input or unattainable accuracy.
	"""
	mapper = ParallelMapper(config.workers)
	logger.info(f"Running '{config.command}' (x={config.x}, k={config.k}, eps={config.eps:g}, depth={config.depth})")
	return COMMAND_HANDLERS[config.command](config, settings, mapper)

# --- END: cli/commands.py ---
