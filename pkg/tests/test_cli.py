# --- START: tests/test_cli.py ---
import unittest
import dataclasses
import io
import json
import math
import os
import tempfile
from fractions import Fraction
from unittest.mock import patch, MagicMock

import sys
if '.' not in sys.path:
	sys.path.append('.')

import mpmath

import main
from cli import arguments, commands, verify_suite
from cli.output_writer import ResultTable, formatTable, writeTable
from core.brjuno import ExtremeNumber
from core.exceptions import ConfigurationError, DomainError, OutputError, ParsingError, ResourceError
from core.settings import NumericsSettings

ZETA3: float = float(mpmath.zeta(3))

_SINGLE_CHECK_BATTERY: str = """
checks:
  - name: eisenstein-normalisation
    check: eisenstein_normalisation
    group: arith
    anchor: series-definition
    tolerance: 1.0e-12
    params: {weights: [2, 4, 6]}
"""

_IDENTITY_AND_DIVERGENCE_BATTERY: str = """
checks:
  - name: phi2-second-derivative
    check: phi2_second_derivative
    group: funceq
    anchor: phi2-second-derivative-identity
    tolerance: 1.0e-9
    params: {pairs: 5, imagRange: [0.5, 1.5], bottomRows: [[1, 0], [1, 1]]}
  - name: derivative-divergence
    check: derivative_divergence
    group: brjuno
    anchor: derivative-series
    tolerance: 1000.0
    params: {quotientBits: 20000, depth: 3}
"""


def _config(command: str, x: str = None, **overrides) -> arguments.RunConfig:
	values = dict(command=command, x=x, k=2, eps=1e-9, depth=10, method='hyperbola', output='csv', seed=7)
	values.update(overrides)
	return arguments.RunConfig(**values)


class TestArguments(unittest.TestCase):

	def setUp(self: 'TestArguments') -> None:
		self.patcher = patch('cli.arguments.logger', MagicMock())
		self.mock_logger = self.patcher.start()
		self.settings = NumericsSettings()

	def tearDown(self: 'TestArguments') -> None:
		self.patcher.stop()

	def test_defaultsComeFromSettings(self: 'TestArguments') -> None:
		config = arguments.parseArguments(['eval', '--x', 'rational:1/3'], self.settings)
		self.assertEqual(config.command, 'eval')
		self.assertEqual(config.k, self.settings.defaultK)
		self.assertEqual(config.eps, self.settings.defaultEps)
		self.assertEqual(config.method, 'hyperbola')
		self.assertEqual(config.output, 'csv')
		self.assertEqual(config.seed, self.settings.defaultSeed)

	def test_listFlags(self: 'TestArguments') -> None:
		config = arguments.parseArguments(
			['scan-irrational', '--x', 'golden:40', '--n', '1, 3,5', '--h-exponents', '4:8', '--out', 'json'], self.settings
		)
		self.assertEqual(config.nList, (1, 3, 5))
		self.assertEqual(config.hExponents, (4, 8))
		self.assertEqual(config.output, 'json')

	def test_inconsistentFlags(self: 'TestArguments') -> None:
		for argv in (['eval', '--x', 'rational:1/3', '--k', '3'],
					 ['eval', '--x', 'rational:1/3', '--eps', '0'],
					 ['cf', '--x', 'rational:1/3', '--depth', '0'],
					 ['eval']):
			with self.subTest(argv=argv):
				with self.assertRaises(ParsingError):
					arguments.parseArguments(argv, self.settings)
		self.assertEqual(arguments.parseArguments(['verify'], self.settings).x, None)

	def test_onlyIsIgnoredOutsideVerify(self: 'TestArguments') -> None:
		arguments.parseArguments(['eval', '--x', 'rational:1/3', '--only', 'arith'], self.settings)
		self.mock_logger.warning.assert_called_once()

	@patch('sys.stderr', new_callable=io.StringIO)
	def test_argparseRejectsMalformedValues(self: 'TestArguments', mock_stderr: io.StringIO) -> None:
		for argv in (['nope'], ['scan-rational', '--x', 'rational:1/3', '--h-exponents', '8:4'],
					 ['scan-irrational', '--x', 'golden:9', '--n', 'a,b']):
			with self.subTest(argv=argv):
				with self.assertRaises(SystemExit):
					arguments.parseArguments(argv, self.settings)

	def test_resolveRealSpec(self: 'TestArguments') -> None:
		golden = arguments.resolveRealSpec('golden:12', 4096)
		self.assertIsInstance(golden, ExtremeNumber)
		self.assertEqual(golden.quotients, (1,) * 12)
		periodic = arguments.resolveRealSpec('periodic:[1,2]:6', 4096)
		self.assertEqual(periodic.quotients, (1, 2, 1, 2, 1, 2))
		with patch('core.brjuno.logger', MagicMock()):
			liouville = arguments.resolveRealSpec('liouville:1:3', 4096)
		self.assertEqual(liouville.quotients[:2], (3, 21))
		self.assertTrue(arguments.resolveRealSpec('cf:[1,2]', 4096, asSurrogate=True).surrogate)
		self.assertFalse(arguments.resolveRealSpec('rational:1/2', 4096, asSurrogate=True).surrogate)
		with self.assertRaises(ParsingError):
			arguments.resolveRealSpec('bogus', 4096)


class TestOutputWriter(unittest.TestCase):

	def setUp(self: 'TestOutputWriter') -> None:
		self.table = ResultTable(anchor='demo', columns=['a', 'b'])
		self.table.addRow([1, 0.5])
		self.table.addRow([Fraction(1, 3), None])
		self.table.summary = {'x': Fraction(1, 3), 'passed': True}

	def test_csvLayout(self: 'TestOutputWriter') -> None:
		text = formatTable(self.table, 'csv')
		self.assertEqual(text, "# anchor=demo\na,b\n1,0.5\n1/3,\n# summary passed=true;x=1/3\n")

	def test_jsonLayout(self: 'TestOutputWriter') -> None:
		self.table.addRow([complex(1.0, -2.0), math.inf])
		payload = json.loads(formatTable(self.table, 'json'))
		self.assertEqual(payload['anchor'], 'demo')
		self.assertEqual(payload['rows'][0], [1, 0.5])
		self.assertEqual(payload['rows'][2], [[1.0, -2.0], 'inf'])
		self.assertEqual(payload['summary'], {'passed': True, 'x': '1/3'})

	def test_errors(self: 'TestOutputWriter') -> None:
		with self.assertRaises(OutputError):
			self.table.addRow([1])
		with self.assertRaises(OutputError):
			formatTable(self.table, 'xml')
		with self.assertRaises(OutputError):
			writeTable(self.table, 'csv')

	@patch('cli.output_writer.logger', MagicMock())
	def test_writeToFileAndStream(self: 'TestOutputWriter') -> None:
		with tempfile.TemporaryDirectory() as tempDir:
			path = os.path.join(tempDir, 'nested', 'out.csv')
			writeTable(self.table, 'csv', destination=path)
			with open(path, 'r', encoding='utf-8') as handle:
				self.assertEqual(handle.read(), formatTable(self.table, 'csv'))
		stream = io.StringIO()
		writeTable(self.table, 'json', stream=stream)
		self.assertEqual(stream.getvalue(), formatTable(self.table, 'json'))

	def test_columnAccess(self: 'TestOutputWriter') -> None:
		self.assertEqual(self.table.column('a'), [1, Fraction(1, 3)])


class TestCommands(unittest.TestCase):
	"""Dispatch of single commands to the core."""

	def setUp(self: 'TestCommands') -> None:
		self.patchers = [patch('cli.commands.logger', MagicMock()), patch('core.brjuno.logger', MagicMock())]
		for patcher in self.patchers:
			patcher.start()
		self.settings = NumericsSettings()

	def tearDown(self: 'TestCommands') -> None:
		for patcher in self.patchers:
			patcher.stop()

	def test_evalAtOneHalf(self: 'TestCommands') -> None:
		table, exitCode = commands.executeCommand(_config('eval', 'rational:1/2', eps=1e-10), self.settings)
		self.assertEqual(exitCode, commands.EXIT_OK)
		self.assertEqual(table.anchor, 'series-definition')
		g, gErr = table.column('G')[0], table.column('G_err')[0]
		self.assertLessEqual(abs(g + 5.0 * math.pi ** 2 * ZETA3 / 96.0), gErr + 1e-15)

	def test_evalRejectsOrbitMethodForHigherWeight(self: 'TestCommands') -> None:
		with self.assertRaises(DomainError):
			commands.executeCommand(_config('eval', 'golden:40', k=4, method='cf'), self.settings)

	def test_evalHonoursTheMemoryCap(self: 'TestCommands') -> None:
		settings = dataclasses.replace(self.settings, memoryCapBytes=1024)
		with self.assertRaises(ResourceError):
			commands.executeCommand(_config('eval', 'rational:1/5', k=4, eps=1e-5, method='naive'), settings)

	def test_orbitCommandsUseTheConfiguredGuard(self: 'TestCommands') -> None:
		wide = dataclasses.replace(self.settings, cfGuard=self.settings.cfGuard + 2)
		narrowTable, _ = commands.executeCommand(_config('cf', 'golden:40', depth=10), self.settings)
		wideTable, _ = commands.executeCommand(_config('cf', 'golden:40', depth=10), wide)
		self.assertEqual(narrowTable.summary['usable_depth'] - wideTable.summary['usable_depth'], 2)
		table, _ = commands.executeCommand(_config('eval', 'golden:60', method='cf'), wide)
		self.assertLessEqual(table.column('F_err')[0], 1e-9)

	def test_cfTable(self: 'TestCommands') -> None:
		table, exitCode = commands.executeCommand(_config('cf', 'rational:3/7', depth=5), self.settings)
		self.assertEqual(exitCode, commands.EXIT_OK)
		self.assertEqual(table.column('q_k'), [1, 2, 7])
		self.assertEqual(table.column('a_k'), [None, 2, 3])
		self.assertTrue(table.summary['terminated'])
		self.assertEqual(table.summary['invariant_violations'], 0)

	def test_brjunoTable(self: 'TestCommands') -> None:
		table, _ = commands.executeCommand(_config('brjuno', 'golden:30', depth=20), self.settings)
		self.assertEqual(table.anchor, 'square-brjuno-classification')
		self.assertEqual(len(table.rows), 21)
		self.assertEqual(table.summary['verdict'], 'convergent-at-depth')
		self.assertEqual(table.summary['x'], 'golden:30')

	def test_reducedFraction(self: 'TestCommands') -> None:
		self.assertEqual(commands._reducedFraction('rational:-1/3'), (2, 3))
		with self.assertRaises(DomainError):
			commands._reducedFraction('rational:2/4')
		with self.assertRaises(ParsingError):
			commands._reducedFraction('cf:[1,2]')
		with self.assertRaises(ParsingError):
			commands._reducedFraction('rational:a/b')


class TestVerifySuite(unittest.TestCase):
	"""Battery loading, group filtering and fault injection."""

	def setUp(self: 'TestVerifySuite') -> None:
		self.patcher = patch('cli.verify_suite.logger', MagicMock())
		self.patcher.start()
		self.tempDir = tempfile.TemporaryDirectory()
		self.batteryPath = os.path.join(self.tempDir.name, 'battery.yaml')
		with open(self.batteryPath, 'w', encoding='utf-8') as handle:
			handle.write(_SINGLE_CHECK_BATTERY)

	def tearDown(self: 'TestVerifySuite') -> None:
		self.patcher.stop()
		self.tempDir.cleanup()

	def test_shippedBatteryLoads(self: 'TestVerifySuite') -> None:
		specs = verify_suite.loadBattery(NumericsSettings().batteryFile)
		self.assertGreater(len(specs), 10)
		self.assertEqual(len({spec.name for spec in specs}), len(specs))
		self.assertTrue(all(spec.check in verify_suite.registeredChecks() for spec in specs))

	def test_malformedBatteries(self: 'TestVerifySuite') -> None:
		with self.assertRaises(ConfigurationError):
			verify_suite.loadBattery(os.path.join(self.tempDir.name, 'missing.yaml'))
		broken = os.path.join(self.tempDir.name, 'broken.yaml')
		for text in ("checks: [\n", "other: 1\n", "checks:\n  - name: x\n    check: no_such_routine\n    group: arith\n    anchor: a\n"):
			with open(broken, 'w', encoding='utf-8') as handle:
				handle.write(text)
			with self.subTest(text=text):
				with self.assertRaises(ConfigurationError):
					verify_suite.loadBattery(broken)

	def test_onlyFiltersGroups(self: 'TestVerifySuite') -> None:
		report = verify_suite.runVerifySuite(3, 'arith', self.batteryPath)
		self.assertEqual(len(report.results), 1)
		self.assertTrue(report.passed)
		self.assertEqual(verify_suite.runVerifySuite(3, 'brjuno', self.batteryPath).results, ())
		with self.assertRaises(ConfigurationError):
			verify_suite.runVerifySuite(3, 'nothing', self.batteryPath)

	def test_identityAndDivergenceChecksPass(self: 'TestVerifySuite') -> None:
		path = os.path.join(self.tempDir.name, 'identities.yaml')
		with open(path, 'w', encoding='utf-8') as handle:
			handle.write(_IDENTITY_AND_DIVERGENCE_BATTERY)
		with patch('core.iteration.logger', MagicMock()):
			report = verify_suite.runVerifySuite(5, None, path)
		self.assertEqual([result.name for result in report.results], ['phi2-second-derivative', 'derivative-divergence'])
		for result in report.results:
			with self.subTest(name=result.name):
				self.assertTrue(result.passed, result.detail)
		self.assertGreater(report.results[1].measured, 1000.0)

	def test_checkGeneratorsDependOnName(self: 'TestVerifySuite') -> None:
		first = verify_suite._checkSeed(11, 'alpha').random(3)
		self.assertEqual(first.tolist(), verify_suite._checkSeed(11, 'alpha').random(3).tolist())
		self.assertNotEqual(first.tolist(), verify_suite._checkSeed(11, 'beta').random(3).tolist())

	@patch('core.arith.bernoulli', return_value=Fraction(1, 5))
	def test_wrongBernoulliNumbersFailTheNormalisation(self: 'TestVerifySuite', mock_bernoulli: MagicMock) -> None:
		report = verify_suite.runVerifySuite(3, None, self.batteryPath)
		self.assertFalse(report.passed)
		self.assertEqual(report.failingAnchors, ['series-definition'])
		table = verify_suite.reportTable(report)
		self.assertEqual(table.summary['failing_anchors'], 'series-definition')
		self.assertFalse(table.summary['passed'])

	@patch('core.arith.bernoulli', return_value=Fraction(1, 5))
	def test_verifyCommandExitCode(self: 'TestVerifySuite', mock_bernoulli: MagicMock) -> None:
		settings = dataclasses.replace(NumericsSettings(), batteryFile=self.batteryPath)
		with patch('cli.commands.logger', MagicMock()):
			table, exitCode = commands.executeCommand(_config('verify'), settings)
		self.assertEqual(exitCode, commands.EXIT_VERIFY_FAILED)
		self.assertEqual(table.anchor, 'verify-battery')


class TestMain(unittest.TestCase):
	"""Exit codes of the entry point."""

	def setUp(self: 'TestMain') -> None:
		self.patchers = [
			patch('main.setupLogging', return_value=MagicMock()),
			patch('main.configureLogging', return_value=MagicMock()),
		]
		for patcher in self.patchers:
			patcher.start()

	def tearDown(self: 'TestMain') -> None:
		for patcher in self.patchers:
			patcher.stop()

	@patch('main.ConfigManager')
	def test_configurationErrorExitsWithOne(self: 'TestMain', mock_manager_class: MagicMock) -> None:
		mock_manager_class.return_value.loadConfig.side_effect = ConfigurationError("missing config.ini")
		self.assertEqual(main.main(['verify']), main.EXIT_CONFIGURATION_ERROR)

	def test_argumentErrorExitsWithTwo(self: 'TestMain') -> None:
		if not os.path.exists(main.CONFIG_FILE_PATH):
			self.skipTest("config.ini is not in the working directory.")
		self.assertEqual(main.main(['eval']), main.EXIT_APPLICATION_ERROR)

	@patch('main.writeTable')
	@patch('main.executeCommand')
	def test_commandExitCodeIsPassedThrough(self: 'TestMain', mock_execute: MagicMock, mock_write: MagicMock) -> None:
		if not os.path.exists(main.CONFIG_FILE_PATH):
			self.skipTest("config.ini is not in the working directory.")
		table = ResultTable(anchor='verify-battery', columns=['name'])
		mock_execute.return_value = (table, commands.EXIT_VERIFY_FAILED)
		self.assertEqual(main.main(['verify']), commands.EXIT_VERIFY_FAILED)
		mock_write.assert_called_once()
		mock_execute.side_effect = DomainError("bad point")
		self.assertEqual(main.main(['verify']), main.EXIT_APPLICATION_ERROR)


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_cli.py ---
