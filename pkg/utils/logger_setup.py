# --- START: utils/logger_setup.py ---
# utils/logger_setup.py
"""
Logging configuration for fseries runs.

Console output goes to stderr so that CSV/JSON written to stdout stays machine-readable;
a rotating file keeps the debug trail of truncation choices.
"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import List, Union

DEFAULT_LOG_FORMAT: str = '%(asctime)s - %(name)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s'
CONSOLE_LOG_FORMAT: str = '%(levelname)s %(name)s: %(message)s'
DEFAULT_DATE_FORMAT: str = '%Y-%m-%d %H:%M:%S'
DEFAULT_LOG_FILE: str = 'fseries.log'


def parseLogLevel(level: Union[str, int, None], fallback: int = logging.INFO) -> int:
	"""
	Maps 'DEBUG', 'info', 20, ... to a logging level; unknown names give ``fallback``.
	"""
	if level is None:
		return fallback
	if isinstance(level, int):
		return level
	name = str(level).strip().upper()
	if name.isdigit():
		return int(name)
	value = logging.getLevelName(name)
	return value if isinstance(value, int) else fallback


def setupLogging(
	consoleLevel: int = logging.WARNING,
	logToConsole: bool = True,
	logToFile: bool = True,
	logFileName: str = DEFAULT_LOG_FILE,
	logFileLevel: int = logging.DEBUG,
	logDir: str = 'logs',
	maxBytes: int = 10 * 1024 * 1024,
	backupCount: int = 5,
	logFormat: str = DEFAULT_LOG_FORMAT,
	dateFormat: str = DEFAULT_DATE_FORMAT
) -> logging.Logger:
	"""
	Configures the root logger, replacing any handlers installed earlier.

	Args:
		consoleLevel (int): Threshold of the stderr handler.
		logToConsole (bool): Whether to attach the stderr handler.
		logToFile (bool): Whether to attach the rotating file handler.
		logFileName (str): Log file name inside ``logDir``.
		logFileLevel (int): Threshold of the file handler.
		logDir (str): Directory of the log file; created when missing.
		maxBytes (int): Rotation size.
		backupCount (int): Rotated files kept.
		logFormat (str): Format of file records.
		dateFormat (str): Date format of file records.

	Returns:
		logging.Logger: The root logger.
	"""
	handlers: List[logging.Handler] = []

	if logToConsole:
		consoleHandler = logging.StreamHandler(sys.stderr)
		consoleHandler.setFormatter(logging.Formatter(CONSOLE_LOG_FORMAT))
		consoleHandler.setLevel(consoleLevel)
		handlers.append(consoleHandler)

	logFilePath = os.path.join(logDir, logFileName)
	if logToFile:
		try:
			os.makedirs(os.path.abspath(logDir), exist_ok=True)
			fileHandler = RotatingFileHandler(logFilePath, maxBytes=maxBytes, backupCount=backupCount, encoding='utf-8')
			fileHandler.setFormatter(logging.Formatter(logFormat, datefmt=dateFormat))
			fileHandler.setLevel(logFileLevel)
			handlers.append(fileHandler)
		except OSError as e:
			print(f"ERROR: Failed to configure file logging to '{logFilePath}': {e}", file=sys.stderr)
			logToFile = False

	rootLogger = logging.getLogger()
	rootLogger.setLevel(min([handler.level for handler in handlers] or [consoleLevel]))
	for handler in rootLogger.handlers[:]:
		rootLogger.removeHandler(handler)
		handler.close()
	for handler in handlers:
		rootLogger.addHandler(handler)

	if handlers:
		rootLogger.debug(
			f"Logging initialised. Console: {logToConsole} ({logging.getLevelName(consoleLevel)}), "
			f"File: {logToFile} ({logging.getLevelName(logFileLevel)} in '{logFilePath}')."
		)
	else:
		print("WARNING: Logging initialisation completed but no handlers were configured.", file=sys.stderr)
	return rootLogger

# --- END: utils/logger_setup.py ---
