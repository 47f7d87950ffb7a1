# --- START: tests/test_logger_setup.py ---
import unittest
import logging
import os
import tempfile
from logging.handlers import RotatingFileHandler

import sys
if '.' not in sys.path:
	sys.path.append('.')

from utils.logger_setup import parseLogLevel, setupLogging


class TestParseLogLevel(unittest.TestCase):

	def test_namesNumbersAndFallback(self: 'TestParseLogLevel') -> None:
		self.assertEqual(parseLogLevel('DEBUG'), logging.DEBUG)
		self.assertEqual(parseLogLevel(' warning '), logging.WARNING)
		self.assertEqual(parseLogLevel(40), logging.ERROR)
		self.assertEqual(parseLogLevel('15'), 15)
		self.assertEqual(parseLogLevel(None), logging.INFO)
		self.assertEqual(parseLogLevel('LOUD', fallback=logging.ERROR), logging.ERROR)


class TestSetupLogging(unittest.TestCase):
	"""Handlers on the root logger; the original handlers are restored afterwards."""

	def setUp(self: 'TestSetupLogging') -> None:
		self.rootLogger = logging.getLogger()
		self.savedHandlers = self.rootLogger.handlers[:]
		self.savedLevel = self.rootLogger.level
		self.tempDir = tempfile.TemporaryDirectory()

	def tearDown(self: 'TestSetupLogging') -> None:
		for handler in self.rootLogger.handlers[:]:
			self.rootLogger.removeHandler(handler)
			handler.close()
		for handler in self.savedHandlers:
			self.rootLogger.addHandler(handler)
		self.rootLogger.setLevel(self.savedLevel)
		self.tempDir.cleanup()

	def test_consoleAndFileHandlers(self: 'TestSetupLogging') -> None:
		logDir = os.path.join(self.tempDir.name, 'logs')
		root = setupLogging(consoleLevel=logging.INFO, logDir=logDir, logFileName='run.log')
		self.assertIs(root, self.rootLogger)
		self.assertEqual(len(root.handlers), 2)
		fileHandlers = [h for h in root.handlers if isinstance(h, RotatingFileHandler)]
		self.assertEqual(len(fileHandlers), 1)
		self.assertEqual(fileHandlers[0].level, logging.DEBUG)
		self.assertEqual(root.level, logging.DEBUG)
		self.assertTrue(os.path.exists(os.path.join(logDir, 'run.log')))

	def test_consoleOnlyUsesStderr(self: 'TestSetupLogging') -> None:
		root = setupLogging(consoleLevel=logging.WARNING, logToFile=False)
		self.assertEqual(len(root.handlers), 1)
		self.assertIs(root.handlers[0].stream, sys.stderr)
		self.assertEqual(root.level, logging.WARNING)

	def test_repeatedSetupReplacesHandlers(self: 'TestSetupLogging') -> None:
		setupLogging(logToFile=False)
		setupLogging(logToFile=False)
		self.assertEqual(len(self.rootLogger.handlers), 1)


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_logger_setup.py ---
