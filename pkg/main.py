# --- START: main.py ---
# main.py
"""
Command-line entry point.

Loads config.ini and .env, configures logging, parses the command line and runs one command.
Exit codes: 0 success, 1 configuration error, 2 any other application error,
3 verify battery failure.
"""
import logging
import sys
from typing import Optional, Sequence

from cli.arguments import parseArguments
from cli.commands import executeCommand
from cli.output_writer import writeTable
from core.config_manager import ConfigManager
from core.exceptions import BaseApplicationError, ConfigurationError
from core.settings import NumericsSettings
from utils.logger_setup import parseLogLevel, setupLogging

CONFIG_FILE_PATH: str = 'config.ini'
ENV_FILE_PATH: str = '.env'

EXIT_CONFIGURATION_ERROR: int = 1
EXIT_APPLICATION_ERROR: int = 2


def configureLogging(configManager: ConfigManager, consoleLevelOverride: Optional[str] = None) -> logging.Logger:
	"""Configure logging from the [Logging] section, with an optional console level override."""
	consoleLevel = parseLogLevel(
		consoleLevelOverride or configManager.getConfigValue('Logging', 'consoleloglevel', fallback='WARNING'),
		logging.WARNING
	)
	fileLevel = parseLogLevel(configManager.getConfigValue('Logging', 'fileloglevel', fallback='DEBUG'), logging.DEBUG)
	return setupLogging(
		consoleLevel=consoleLevel,
		logToConsole=True,
		logToFile=configManager.getConfigValueBool('Logging', 'logtofile', fallback=True),
		logFileLevel=fileLevel,
		logDir=configManager.getConfigValue('Logging', 'logdirectory', fallback='logs'),
		logFileName=configManager.getConfigValue('Logging', 'logfilename', fallback='fseries.log')
	)


def main(argv: Optional[Sequence[str]] = None) -> int:
	"""Runs one command and returns the process exit code."""
	logger: logging.Logger = setupLogging(logToFile=False)

	configManager = ConfigManager(CONFIG_FILE_PATH, ENV_FILE_PATH)
	try:
		configManager.loadEnv()
		configManager.loadConfig()
		logger = configureLogging(configManager)
		settings = NumericsSettings.fromConfig(configManager)
		config = parseArguments(argv, settings)
		if config.logLevel:
			logger = configureLogging(configManager, config.logLevel)
	except ConfigurationError as e:
		logger.critical(f"Fatal configuration error: {e}. Check '{ENV_FILE_PATH}' and '{CONFIG_FILE_PATH}'.")
		return EXIT_CONFIGURATION_ERROR
	except BaseApplicationError as e:
		logger.critical(f"Invalid arguments: {e}")
		return EXIT_APPLICATION_ERROR

	try:
		table, exitCode = executeCommand(config, settings)
		writeTable(table, config.output, destination=config.outFile, stream=sys.stdout)
	except ConfigurationError as e:
		logger.critical(f"Fatal configuration error: {e}")
		return EXIT_CONFIGURATION_ERROR
	except BaseApplicationError as e:
		logger.error(f"{type(e).__name__}: {e}")
		return EXIT_APPLICATION_ERROR
	logger.debug(f"'{config.command}' finished with exit code {exitCode}")
	return exitCode


if __name__ == "__main__":
	sys.exit(main())

# --- END: main.py ---
