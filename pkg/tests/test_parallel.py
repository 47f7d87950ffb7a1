# --- START: tests/test_parallel.py ---
import unittest
from unittest.mock import patch, MagicMock

import sys
if '.' not in sys.path:
	sys.path.append('.')

from utils.parallel import ParallelMapper


def _square(value: int) -> int:
	return value * value


def _failOnThree(value: int) -> int:
	if value == 3:
		raise ValueError("three")
	return value


class TestParallelMapper(unittest.TestCase):

	def setUp(self: 'TestParallelMapper') -> None:
		self.patcher = patch('utils.parallel.logger', MagicMock())
		self.mock_logger = self.patcher.start()

	def tearDown(self: 'TestParallelMapper') -> None:
		self.patcher.stop()

	def test_inlineKeepsOrder(self: 'TestParallelMapper') -> None:
		mapper = ParallelMapper(1)
		self.assertEqual(mapper.map(_square, range(6)), [0, 1, 4, 9, 16, 25])
		self.assertEqual(mapper.workers, 1)

	def test_invalidWorkerCountRunsInline(self: 'TestParallelMapper') -> None:
		mapper = ParallelMapper(0)
		self.assertEqual(mapper.workers, 1)
		self.mock_logger.warning.assert_called_once()

	@patch('utils.parallel.ProcessPoolExecutor')
	def test_poolIsUsedForSeveralWorkers(self: 'TestParallelMapper', mock_pool_class: MagicMock) -> None:
		executor = mock_pool_class.return_value.__enter__.return_value
		executor.map.return_value = iter([0, 1, 4])
		result = ParallelMapper(3, chunkSize=2).map(_square, [0, 1, 2], description='squares')
		self.assertEqual(result, [0, 1, 4])
		mock_pool_class.assert_called_once_with(max_workers=3)
		executor.map.assert_called_once_with(_square, [0, 1, 2], chunksize=2)

	@patch('utils.parallel.ProcessPoolExecutor')
	def test_singleItemSkipsThePool(self: 'TestParallelMapper', mock_pool_class: MagicMock) -> None:
		self.assertEqual(ParallelMapper(4).map(_square, [5]), [25])
		mock_pool_class.assert_not_called()

	def test_taskErrorsPropagate(self: 'TestParallelMapper') -> None:
		with self.assertRaises(ValueError):
			ParallelMapper(1).map(_failOnThree, range(5))


if __name__ == '__main__':
	unittest.main()

# --- END: tests/test_parallel.py ---
