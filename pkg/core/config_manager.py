# --- START: core/config_manager.py ---
# core/config_manager.py
"""
Loads run-time settings for the numerics toolkit.

Numeric defaults (tolerances, term caps, quadrature budgets, scan thresholds) live in
``config.ini``; machine-specific overrides such as the quotient bit cap come from the
environment, optionally seeded from a ``.env`` file.
"""

import os
import configparser
import logging
from typing import Optional, Any, Callable, Sequence, TypeVar

from dotenv import load_dotenv

from .exceptions import ConfigurationError

logger: logging.Logger = logging.getLogger(__name__)

T = TypeVar('T')

_COMMENT_MARKERS: Sequence[str] = ('#', ';')

# ini file states
_UNREAD, _ABSENT, _LOADED, _FAILED = 'unread', 'absent', 'loaded', 'failed'


def _stripInlineComment(value: str) -> str:
	"""Removes a trailing ``# ...`` or ``; ...`` comment from a raw ini value."""
	for marker in _COMMENT_MARKERS:
		value = value.partition(marker)[0]
	return value.strip()


def _parseInteger(text: str) -> int:
	"""Integer literal, also accepting exponent notation with an integral value (``2e7``)."""
	try:
		return int(text)
	except ValueError:
		asFloat = float(text)
		if 'e' not in text.lower() or not asFloat.is_integer():
			raise
		return int(asFloat)


def _parseBoolean(text: str) -> bool:
	try:
		return configparser.ConfigParser.BOOLEAN_STATES[text.strip().lower()]
	except KeyError as e:
		raise ValueError(text) from e


class ConfigManager:
	"""
	Typed access to ``config.ini`` sections and to environment variables.

	The ini file is optional: when it is absent every getter returns its fallback. A file that
	exists but cannot be parsed poisons later reads, so a broken configuration is never
	silently replaced by defaults.
	"""
	_parser: configparser.ConfigParser
	_iniPath: Optional[str]
	_dotenvPath: Optional[str]
	_iniState: str
	_iniFailure: Optional[Exception]
	_dotenvApplied: bool

	def __init__(self: 'ConfigManager', configFilePath: Optional[str] = 'config.ini', envFilePath: Optional[str] = '.env') -> None:
		"""
		Args:
			configFilePath (Optional[str]): The ini file, or None to run on built-in defaults.
			envFilePath (Optional[str]): The dotenv file, or None to use the process environment as is.
		"""
		self._iniPath = configFilePath
		self._dotenvPath = envFilePath
		self._parser = configparser.ConfigParser(interpolation=None)
		self._iniState = _UNREAD
		self._iniFailure = None
		self._dotenvApplied = False

	def loadEnv(self: 'ConfigManager', override: bool = False) -> bool:
		"""
		Merges the dotenv file into ``os.environ``.

		Args:
			override (bool): Let file values replace variables that are already set.

		Returns:
			bool: True when the file existed and set at least one variable.

		Raises:
			ConfigurationError: If the file cannot be inspected or read.
		"""
		path = self._dotenvPath
		if not path:
			logger.info("No .env path configured; using the process environment only.")
			return False
		try:
			present = os.path.exists(path)
			if present:
				self._dotenvApplied = bool(load_dotenv(dotenv_path=path, override=override))
		except Exception as e:
			logger.error(f"Could not apply environment file '{path}': {e}", exc_info=True)
			raise ConfigurationError(f"Error processing .env file '{path}': {e}") from e

		if not present:
			logger.debug(f"Environment file '{path}' not present.")
		elif not self._dotenvApplied:
			logger.warning(f"Environment file '{path}' set no variables.")
		else:
			logger.info(f"Environment overrides applied from {path}")
		return self._dotenvApplied

	def loadConfig(self: 'ConfigManager') -> None:
		"""
		Parses the ini file.

		Raises:
			ConfigurationError: If the file exists but is unreadable or malformed.
		"""
		path = self._iniPath
		self._iniFailure = None
		if not path or not os.path.exists(path):
			self._iniState = _ABSENT
			if path:
				logger.warning(f"Configuration file not found: {path}. Built-in defaults apply.")
			return

		parser = configparser.ConfigParser(interpolation=None)
		try:
			if not parser.read(path, encoding='utf-8'):
				raise OSError("file could not be opened")
		except configparser.Error as e:
			self._markFailed(e)
			raise ConfigurationError(f"Error parsing config file '{path}': {e}") from e
		except OSError as e:
			self._markFailed(e)
			raise ConfigurationError(f"Error reading config file '{path}': {e}") from e
		self._parser = parser
		self._iniState = _LOADED
		logger.debug(f"Configuration sections {parser.sections()} read from {path}")

	def _markFailed(self: 'ConfigManager', error: Exception) -> None:
		self._iniState = _FAILED
		self._iniFailure = error
		logger.error(f"Configuration file '{self._iniPath}' rejected: {error}")

	def getEnvVar(self: 'ConfigManager', varName: str, defaultValue: Optional[str] = None, required: bool = False) -> Optional[str]:
		"""
		Reads an environment variable; blank values count as unset.

		Raises:
			ConfigurationError: If required=True and the variable is unset.
		"""
		value = (os.environ.get(varName) or '').strip()
		if value:
			return value
		if required:
			message = f"Environment variable '{varName}' must be set."
			logger.error(message)
			raise ConfigurationError(message)
		return defaultValue

	def getEnvVarInt(self: 'ConfigManager', varName: str, defaultValue: Optional[int] = None) -> Optional[int]:
		"""
		Reads a positive integer from the environment.

		Raises:
			ConfigurationError: If the variable is set to anything but a positive integer.
		"""
		text = self.getEnvVar(varName)
		if text is None:
			return defaultValue
		try:
			value = int(text)
		except ValueError as e:
			raise ConfigurationError(f"Environment variable '{varName}' ('{text}') is not an integer.") from e
		if value < 1:
			raise ConfigurationError(f"Environment variable '{varName}' must be positive, got {value}.")
		return value

	def getConfigValue(self: 'ConfigManager', section: str, key: str, fallback: Optional[Any] = None, required: bool = False) -> Optional[Any]:
		"""
		Raw string value of ``section/key`` with any inline comment removed.

		Args:
			section (str): Section name.
			key (str): Option name.
			fallback (Optional[Any]): Returned when the option is absent.
			required (bool): Raise instead of falling back.

		Returns:
			Optional[Any]: The stripped string, or the fallback.

		Raises:
			ConfigurationError: If the file failed to load, or the option is required and absent.
		"""
		if self._iniState == _FAILED:
			raise ConfigurationError(
				f"Cannot read '{section}/{key}': configuration file '{self._iniPath}' failed to load ({self._iniFailure})."
			) from self._iniFailure
		if self._iniState == _LOADED and self._parser.has_option(section, key):
			return _stripInlineComment(self._parser.get(section, key, raw=True))
		if not required:
			return fallback
		where = f"'{self._iniPath}'" if self._iniState == _LOADED else "the built-in defaults (no configuration loaded)"
		message = f"Required configuration value '{key}' not found in section '{section}' of {where}."
		logger.error(message)
		raise ConfigurationError(message)

	def _typedValue(self: 'ConfigManager', section: str, key: str, fallback: Optional[T], required: bool,
			convert: Callable[[str], T], kind: str) -> Optional[T]:
		text = self.getConfigValue(section, key, required=required)
		if text is None:
			return fallback
		try:
			return convert(text)
		except (ValueError, TypeError) as e:
			message = f"Configuration value '{section}/{key}' ('{text}') is not a valid {kind}."
			logger.error(message)
			raise ConfigurationError(message) from e

	def getConfigValueInt(self: 'ConfigManager', section: str, key: str, fallback: Optional[int] = None, required: bool = False) -> Optional[int]:
		return self._typedValue(section, key, fallback, required, _parseInteger, 'integer')

	def getConfigValueFloat(self: 'ConfigManager', section: str, key: str, fallback: Optional[float] = None, required: bool = False) -> Optional[float]:
		return self._typedValue(section, key, fallback, required, float, 'float')

	def getConfigValueBool(self: 'ConfigManager', section: str, key: str, fallback: Optional[bool] = None, required: bool = False) -> Optional[bool]:
		return self._typedValue(section, key, fallback, required, _parseBoolean, 'boolean')

	def getConfigValueChoice(self: 'ConfigManager', section: str, key: str, choices: Sequence[str], fallback: str) -> str:
		"""
		Lower-cased value that must be one of ``choices``.

		Raises:
			ConfigurationError: If the configured value is not an allowed choice.
		"""
		text = self.getConfigValue(section, key)
		if text is None:
			return fallback
		value = text.lower()
		if value not in choices:
			raise ConfigurationError(f"Configuration value '{section}/{key}' ('{text}') must be one of {list(choices)}.")
		return value

	@property
	def isEnvLoaded(self: 'ConfigManager') -> bool:
		return self._dotenvApplied

	@property
	def isConfigLoaded(self: 'ConfigManager') -> bool:
		return self._iniState == _LOADED

# --- END: core/config_manager.py ---
