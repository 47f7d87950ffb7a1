# --- START: cli/arguments.py ---
# cli/arguments.py
"""
Command-line arguments and the RunConfig they produce.

Besides the RealSpec grammar of ``core.contfrac`` (``rational:p/q``, ``cf:[...]``,
``decimal:...``) the ``--x`` flag accepts the extreme-number constructors
``golden:N``, ``periodic:[a,b,...]:N``, ``liouville:r:N`` and ``star_violator:N``.
"""

import argparse
import dataclasses
import logging
import re
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from core.brjuno import ExtremeNumber, constructExtremeNumber
from core.contfrac import ParsedReal, parseReal
from core.exceptions import ParsingError
from core.settings import METHOD_CHOICES, OUTPUT_CHOICES, NumericsSettings

logger: logging.Logger = logging.getLogger(__name__)

COMMANDS: Tuple[str, ...] = ('eval', 'cf', 'brjuno', 'scan-rational', 'scan-irrational', 'moc', 'verify')
VERIFY_GROUPS: Tuple[str, ...] = ('arith', 'contfrac', 'analytic', 'funceq', 'brjuno', 'cli')

_EXTREME_PATTERN = re.compile(
	r'^\s*(?:(golden|star_violator):(\d+)'
	r'|periodic:\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]:(\d+)'
	r'|liouville:(\d+):(\d+))\s*$'
)

PointSource = Union[ParsedReal, ExtremeNumber]


@dataclass(frozen=True)
class RunConfig:
	"""One fully resolved command invocation. Identical configs produce identical output."""
	command: str
	x: Optional[str]
	k: int
	eps: float
	depth: int
	method: str
	output: str
	seed: int
	only: Optional[str] = None
	pairs: int = 1000
	nList: Tuple[int, ...] = (1, 3, 5, 7)
	hExponents: Tuple[int, int] = (10, 26)
	outFile: Optional[str] = None
	workers: int = 1
	logLevel: Optional[str] = None


def resolveRealSpec(text: str, bitCap: int, asSurrogate: bool = False) -> PointSource:
	"""
	Parses ``--x``: an extreme-number constructor or a RealSpec.

	Args:
		text (str): The flag value.
		bitCap (int): Quotient bit cap for the Liouville-type constructors.
		asSurrogate (bool): Mark ``cf:`` and ``decimal:`` values as stand-ins for an irrational.

	Raises:
		ParsingError: If the text matches neither grammar.
	"""
	match = _EXTREME_PATTERN.match(text or '')
	if match:
		named, namedDepth, period, periodicDepth, rate, liouvilleDepth = match.groups()
		if named:
			return constructExtremeNumber(named, int(namedDepth), bitCap=bitCap)
		if period:
			block = tuple(int(token) for token in period.split(','))
			return constructExtremeNumber('periodic', int(periodicDepth), period=block, bitCap=bitCap)
		return constructExtremeNumber('liouville', int(liouvilleDepth), rate=int(rate), bitCap=bitCap)
	parsed = parseReal(text)
	if asSurrogate and parsed.kind in ('cf', 'decimal'):
		return dataclasses.replace(parsed, surrogate=True)
	return parsed


def _intList(text: str) -> Tuple[int, ...]:
	try:
		values = tuple(int(token) for token in text.replace(' ', '').split(',') if token)
	except ValueError as e:
		raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got '{text}'") from e
	if not values:
		raise argparse.ArgumentTypeError("the list is empty")
	return values


def _exponentRange(text: str) -> Tuple[int, int]:
	values = _intList(text.replace(':', ','))
	if len(values) != 2 or not 0 < values[0] <= values[1]:
		raise argparse.ArgumentTypeError(f"expected 'lo:hi' with 0 < lo <= hi, got '{text}'")
	return values[0], values[1]


def buildParser(settings: NumericsSettings) -> argparse.ArgumentParser:
	"""The argument parser, with defaults taken from the loaded settings."""
	parser = argparse.ArgumentParser(
		prog='fseries',
		description="Certified numerics for the divisor-sum series F_k, G_k and phi_k."
	)
	parser.add_argument('command', choices=COMMANDS, help="What to run.")
	parser.add_argument('--x', dest='x', default=None, help="Point: rational:p/q, cf:[..], decimal:.., golden:N, periodic:[..]:N, liouville:r:N, star_violator:N.")
	parser.add_argument('--k', dest='k', type=int, default=settings.defaultK, help=f"Even weight (default: {settings.defaultK}).")
	parser.add_argument('--eps', dest='eps', type=float, default=settings.defaultEps, help=f"Target accuracy (default: {settings.defaultEps:g}).")
	parser.add_argument('--depth', dest='depth', type=int, default=settings.defaultDepth, help=f"Orbit depth (default: {settings.defaultDepth}).")
	parser.add_argument('--method', dest='method', choices=METHOD_CHOICES, default=settings.defaultMethod, help="Evaluator for 'eval'.")
	parser.add_argument('--out', dest='output', choices=OUTPUT_CHOICES, default=settings.defaultOutput, help="Output format.")
	parser.add_argument('--seed', dest='seed', type=int, default=settings.defaultSeed, help="Seed of randomised batteries.")
	parser.add_argument('--only', dest='only', choices=VERIFY_GROUPS, default=None, help="Run one group of the verify battery.")
	parser.add_argument('--pairs', dest='pairs', type=int, default=1000, help="Point pairs of the 'moc' sampler.")
	parser.add_argument('--n', dest='nList', type=_intList, default=(1, 3, 5, 7), help="Odd scan levels for 'scan-irrational', e.g. 1,3,5.")
	parser.add_argument('--h-exponents', dest='hExponents', type=_exponentRange, default=(10, 26), help="Steps h = 2^-lo .. 2^-hi for 'scan-rational'.")
	parser.add_argument('--output-file', dest='outFile', default=None, help="Write the table to this path instead of stdout.")
	parser.add_argument('--workers', dest='workers', type=int, default=settings.workers, help="Worker processes for grid commands.")
	parser.add_argument('--log-level', dest='logLevel', default=None, help="Console log level (default from config.ini).")
	return parser


def parseArguments(argv: Optional[Sequence[str]], settings: NumericsSettings) -> RunConfig:
	"""
	Parses the command line into a RunConfig.

	Raises:
		ParsingError: If the flags are inconsistent with the command.
		SystemExit: From argparse on unknown flags or --help.
	"""
	namespace = buildParser(settings).parse_args(None if argv is None else list(argv))
	if namespace.k < 2 or namespace.k % 2:
		raise ParsingError(f"--k must be an even integer >= 2, got {namespace.k}.")
	if namespace.eps <= 0.0:
		raise ParsingError(f"--eps must be positive, got {namespace.eps}.")
	if namespace.depth < 1:
		raise ParsingError(f"--depth must be >= 1, got {namespace.depth}.")
	if namespace.pairs < 1:
		raise ParsingError(f"--pairs must be >= 1, got {namespace.pairs}.")
	if namespace.command not in ('verify',) and not namespace.x:
		raise ParsingError(f"Command '{namespace.command}' needs --x.")
	if namespace.only and namespace.command != 'verify':
		logger.warning(f"--only applies to 'verify' and is ignored by '{namespace.command}'.")
	config = RunConfig(
		command=namespace.command,
		x=namespace.x,
		k=namespace.k,
		eps=namespace.eps,
		depth=namespace.depth,
		method=namespace.method,
		output=namespace.output,
		seed=namespace.seed,
		only=namespace.only,
		pairs=namespace.pairs,
		nList=tuple(namespace.nList),
		hExponents=tuple(namespace.hExponents),
		outFile=namespace.outFile,
		workers=namespace.workers,
		logLevel=namespace.logLevel
	)
	logger.debug(f"Run configuration: {config}")
	return config

# --- END: cli/arguments.py ---
