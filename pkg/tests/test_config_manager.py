# --- START: tests/test_config_manager.py ---
import unittest
import os
import tempfile
from unittest.mock import patch, MagicMock
from typing import Optional, List

import sys
if '.' not in sys.path:
	sys.path.append('.')

from core.config_manager import ConfigManager, _stripInlineComment
from core.exceptions import ConfigurationError
from core.settings import MEM_CAP_ENV_VAR, NumericsSettings


class TestConfigManager(unittest.TestCase):
	"""
	Ini and environment access through ConfigManager.
	.env loading is mocked; .ini files are written to a temporary directory.
	"""
	_envPath: str = 'fseries_test.env'

	def setUp(self: 'TestConfigManager') -> None:
		"""Clears the variables the tests touch and silences the module logger."""
		self._touchedVars: List[str] = ['TEST_ENV_VAR', 'REQUIRED_ENV_VAR', 'EMPTY_ENV_VAR', MEM_CAP_ENV_VAR]
		self._savedEnv: dict[str, Optional[str]] = {}
		for var in self._touchedVars:
			self._savedEnv[var] = os.environ.pop(var, None)

		self.patcher = patch('core.config_manager.logger', MagicMock())
		self.mock_logger = self.patcher.start()
		self._tempDir = tempfile.TemporaryDirectory()

	def tearDown(self: 'TestConfigManager') -> None:
		"""Restores the environment captured in setUp."""
		self.patcher.stop()
		self._tempDir.cleanup()
		for var, value in self._savedEnv.items():
			if value is None:
				os.environ.pop(var, None)
			else:
				os.environ[var] = value

	def _writeIni(self: 'TestConfigManager', content: str) -> str:
		path = os.path.join(self._tempDir.name, 'test_config.ini')
		with open(path, 'w', encoding='utf-8') as handle:
			handle.write(content)
		return path

	@patch('os.path.exists')
	@patch('core.config_manager.load_dotenv')
	def test_envFileApplied(self: 'TestConfigManager', mock_load_dotenv: MagicMock, mock_exists: MagicMock) -> None:
		"""An existing file is handed to python-dotenv without override."""
		mock_exists.return_value = True
		mock_load_dotenv.return_value = True
		cm = ConfigManager(configFilePath=None, envFilePath=self._envPath)
		self.assertTrue(cm.loadEnv())
		self.assertTrue(cm.isEnvLoaded)
		mock_exists.assert_called_once_with(self._envPath)
		mock_load_dotenv.assert_called_once_with(dotenv_path=self._envPath, override=False)

	@patch('os.path.exists', return_value=False)
	@patch('core.config_manager.load_dotenv')
	def test_envFileMissingIsNotAnError(self: 'TestConfigManager', mock_load_dotenv: MagicMock, mock_exists: MagicMock) -> None:
		"""A missing .env file is not an error."""
		cm = ConfigManager(envFilePath=self._envPath)
		self.assertFalse(cm.loadEnv())
		self.assertFalse(cm.isEnvLoaded)
		mock_load_dotenv.assert_not_called()

	@patch('os.path.exists')
	@patch('core.config_manager.load_dotenv')
	def test_envWithoutPath(self: 'TestConfigManager', mock_load_dotenv: MagicMock, mock_exists: MagicMock) -> None:
		cm = ConfigManager(envFilePath=None)
		self.assertFalse(cm.loadEnv())
		mock_exists.assert_not_called()
		mock_load_dotenv.assert_not_called()
		self.mock_logger.info.assert_called_with("No .env path configured; using the process environment only.")

	@patch('os.path.exists', return_value=True)
	@patch('core.config_manager.load_dotenv', return_value=False)
	def test_envFileWithoutAssignments(self: 'TestConfigManager', mock_load_dotenv: MagicMock, mock_exists: MagicMock) -> None:
		"""An empty .env file loads nothing and logs a warning."""
		cm = ConfigManager(envFilePath=self._envPath)
		self.assertFalse(cm.loadEnv())
		self.assertFalse(cm.isEnvLoaded)
		self.mock_logger.warning.assert_called_once()

	@patch('os.path.exists', side_effect=OSError("Permission denied"))
	def test_envFileInspectionFailure(self: 'TestConfigManager', mock_exists: MagicMock) -> None:
		cm = ConfigManager(envFilePath=self._envPath)
		with self.assertRaisesRegex(ConfigurationError, "Error processing .env file.*Permission denied"):
			cm.loadEnv()
		self.assertFalse(cm.isEnvLoaded)
		self.mock_logger.error.assert_called()

	def test_iniLoaded(self: 'TestConfigManager') -> None:
		path = self._writeIni("[Numerics]\ndefaulteps = 1e-8\n")
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		cm.loadConfig()
		self.assertTrue(cm.isConfigLoaded)
		self.assertEqual(cm.getConfigValue('Numerics', 'defaulteps'), '1e-8')

	def test_iniMissingFallsBack(self: 'TestConfigManager') -> None:
		"""A missing .ini file leaves every getter on its fallback."""
		cm = ConfigManager(configFilePath=os.path.join(self._tempDir.name, 'absent.ini'), envFilePath=None)
		cm.loadConfig()
		self.assertFalse(cm.isConfigLoaded)
		self.assertEqual(cm.getConfigValueInt('Numerics', 'naivemaxterms', fallback=7), 7)
		self.mock_logger.warning.assert_called_once()

	def test_iniParseErrorPoisonsReads(self: 'TestConfigManager') -> None:
		path = self._writeIni("this line has no section header\n")
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		with self.assertRaisesRegex(ConfigurationError, "Error parsing config file"):
			cm.loadConfig()
		self.assertFalse(cm.isConfigLoaded)
		# later reads surface the original load failure
		with self.assertRaises(ConfigurationError):
			cm.getConfigValue('Numerics', 'defaulteps', fallback='1e-9')

	def test_inlineCommentsStripped(self: 'TestConfigManager') -> None:
		path = self._writeIni("[CLI]\ndefaultmethod = naive ; fastest at k >= 4\nbatteryfile = resources/x.yaml # local\n")
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		cm.loadConfig()
		self.assertEqual(cm.getConfigValue('CLI', 'defaultmethod'), 'naive')
		self.assertEqual(cm.getConfigValue('CLI', 'batteryfile'), 'resources/x.yaml')
		self.assertEqual(_stripInlineComment("  42  "), "42")

	def test_requiredValueMissing(self: 'TestConfigManager') -> None:
		path = self._writeIni("[Numerics]\n")
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		cm.loadConfig()
		with self.assertRaisesRegex(ConfigurationError, "Required configuration value 'epsfloor'"):
			cm.getConfigValue('Numerics', 'epsfloor', required=True)

	def test_typedGetters(self: 'TestConfigManager') -> None:
		path = self._writeIni(
			"[Values]\nint = 12\nbig = 2e7\nfloat = 1.5e-3\nflag = yes\noff = 0\nchoice = JSON\n"
			"badint = 1.5\nbadbool = maybe\nbadfloat = abc\nbadchoice = xml\n"
		)
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		cm.loadConfig()
		self.assertEqual(cm.getConfigValueInt('Values', 'int'), 12)
		self.assertEqual(cm.getConfigValueInt('Values', 'big'), 20_000_000)
		self.assertAlmostEqual(cm.getConfigValueFloat('Values', 'float'), 1.5e-3)
		self.assertTrue(cm.getConfigValueBool('Values', 'flag'))
		self.assertFalse(cm.getConfigValueBool('Values', 'off'))
		self.assertEqual(cm.getConfigValueChoice('Values', 'choice', ('csv', 'json'), 'csv'), 'json')
		self.assertEqual(cm.getConfigValueChoice('Values', 'absent', ('csv', 'json'), 'csv'), 'csv')
		with self.assertRaises(ConfigurationError):
			cm.getConfigValueInt('Values', 'badint')
		with self.assertRaises(ConfigurationError):
			cm.getConfigValueBool('Values', 'badbool')
		with self.assertRaises(ConfigurationError):
			cm.getConfigValueFloat('Values', 'badfloat')
		with self.assertRaises(ConfigurationError):
			cm.getConfigValueChoice('Values', 'badchoice', ('csv', 'json'), 'csv')

	def test_getEnvVar(self: 'TestConfigManager') -> None:
		os.environ['TEST_ENV_VAR'] = '  value  '
		os.environ['EMPTY_ENV_VAR'] = '   '
		cm = ConfigManager(configFilePath=None, envFilePath=None)
		self.assertEqual(cm.getEnvVar('TEST_ENV_VAR'), 'value')
		self.assertEqual(cm.getEnvVar('EMPTY_ENV_VAR', defaultValue='fallback'), 'fallback')
		with self.assertRaisesRegex(ConfigurationError, "REQUIRED_ENV_VAR"):
			cm.getEnvVar('REQUIRED_ENV_VAR', required=True)

	def test_getEnvVarInt(self: 'TestConfigManager') -> None:
		cm = ConfigManager(configFilePath=None, envFilePath=None)
		self.assertEqual(cm.getEnvVarInt('TEST_ENV_VAR', 5), 5)
		os.environ['TEST_ENV_VAR'] = '4096'
		self.assertEqual(cm.getEnvVarInt('TEST_ENV_VAR', 5), 4096)
		os.environ['TEST_ENV_VAR'] = 'lots'
		with self.assertRaises(ConfigurationError):
			cm.getEnvVarInt('TEST_ENV_VAR')
		os.environ['TEST_ENV_VAR'] = '-3'
		with self.assertRaises(ConfigurationError):
			cm.getEnvVarInt('TEST_ENV_VAR')


class TestNumericsSettings(unittest.TestCase):
	"""NumericsSettings assembled from ini values and the bit-cap environment variable."""

	def setUp(self: 'TestNumericsSettings') -> None:
		self._originalCap = os.environ.pop(MEM_CAP_ENV_VAR, None)
		self._tempDir = tempfile.TemporaryDirectory()
		self.patcher = patch('core.config_manager.logger', MagicMock())
		self.patcher.start()

	def tearDown(self: 'TestNumericsSettings') -> None:
		self.patcher.stop()
		self._tempDir.cleanup()
		os.environ.pop(MEM_CAP_ENV_VAR, None)
		if self._originalCap is not None:
			os.environ[MEM_CAP_ENV_VAR] = self._originalCap

	def _manager(self: 'TestNumericsSettings', content: str) -> ConfigManager:
		path = os.path.join(self._tempDir.name, 'settings.ini')
		with open(path, 'w', encoding='utf-8') as handle:
			handle.write(content)
		cm = ConfigManager(configFilePath=path, envFilePath=None)
		cm.loadConfig()
		return cm

	def test_defaultsWithoutManager(self: 'TestNumericsSettings') -> None:
		self.assertEqual(NumericsSettings.fromConfig(None), NumericsSettings())

	def test_shippedConfigMatchesDefaults(self: 'TestNumericsSettings') -> None:
		"""config.ini at the project root carries the dataclass defaults."""
		cm = ConfigManager(configFilePath='config.ini', envFilePath=None)
		cm.loadConfig()
		if not cm.isConfigLoaded:
			self.skipTest("config.ini not reachable from the working directory")
		self.assertEqual(NumericsSettings.fromConfig(cm), NumericsSettings())

	def test_overrides(self: 'TestNumericsSettings') -> None:
		cm = self._manager("[Numerics]\ndefaulteps = 1e-7\n[CLI]\ndefaultmethod = naive\n[ContinuedFraction]\nquotientbitcap = 2048\n")
		settings = NumericsSettings.fromConfig(cm)
		self.assertEqual(settings.defaultEps, 1e-7)
		self.assertEqual(settings.defaultMethod, 'naive')
		self.assertEqual(settings.quotientBitCap, 2048)

	def test_environmentBitCapWins(self: 'TestNumericsSettings') -> None:
		os.environ[MEM_CAP_ENV_VAR] = '4096'
		cm = self._manager("[ContinuedFraction]\nquotientbitcap = 2048\n")
		self.assertEqual(NumericsSettings.fromConfig(cm).quotientBitCap, 4096)

	def test_invalidValuesRejected(self: 'TestNumericsSettings') -> None:
		for content in (
			"[Numerics]\nepsfloor = 1e-6\ndefaulteps = 1e-9\n",
			"[CLI]\ndefaultk = 3\n",
			"[Numerics]\nnaivemaxterms = 0\n",
			"[Parallel]\nworkers = -1\n",
		):
			with self.subTest(content=content):
				with self.assertRaises(ConfigurationError):
					NumericsSettings.fromConfig(self._manager(content))


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_config_manager.py ---
