# --- START: utils/parallel.py ---
# utils/parallel.py
"""
Ordered parallel map for grid scans and verification batteries.

Tasks run in a ProcessPoolExecutor when more than one worker is configured and inline
otherwise. Results always come back in input order, so output files do not depend on
scheduling.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger: logging.Logger = logging.getLogger(__name__)

TaskInput = TypeVar('TaskInput')
TaskResult = TypeVar('TaskResult')


class ParallelMapper:
	"""
	Maps a picklable callable over inputs.

	Attributes:
		_workers (int): Number of worker processes; values <= 1 run inline.
		_chunkSize (int): Inputs handed to a worker at a time.
	"""

	def __init__(self: 'ParallelMapper', workers: int = 1, chunkSize: int = 1) -> None:
		if workers < 1:
			logger.warning(f"Worker count {workers} is below 1; running inline.")
		self._workers: int = max(1, int(workers))
		self._chunkSize: int = max(1, int(chunkSize))

	@property
	def workers(self: 'ParallelMapper') -> int:
		return self._workers

	def map(
		self: 'ParallelMapper',
		func: Callable[[TaskInput], TaskResult],
		items: Iterable[TaskInput],
		description: Optional[str] = None
	) -> List[TaskResult]:
		"""
		Applies func to every item and returns the results in input order.

		Args:
			func (Callable[[TaskInput], TaskResult]): Top-level (picklable) function.
			items (Iterable[TaskInput]): Inputs.
			description (Optional[str]): Label for log messages.

		Returns:
			List[TaskResult]: One result per input, in order.

		Raises:
			Exception: The first exception raised by a task is re-raised unchanged.
		"""
		inputs = list(items)
		label = description or getattr(func, '__name__', 'task')
		if self._workers == 1 or len(inputs) <= 1:
			logger.debug(f"Running {len(inputs)} '{label}' tasks inline.")
			return [func(item) for item in inputs]
		logger.debug(f"Running {len(inputs)} '{label}' tasks on {self._workers} processes.")
		with ProcessPoolExecutor(max_workers=self._workers) as executor:
			results = list(executor.map(func, inputs, chunksize=self._chunkSize))
		logger.debug(f"Finished {len(results)} '{label}' tasks.")
		return results

# --- END: utils/parallel.py ---
