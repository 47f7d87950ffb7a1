# --- START: cli/output_writer.py ---
# cli/output_writer.py
"""
Self-describing result tables.

CSV layout: a ``# anchor=<check>`` comment line, the header row, the data rows and, when present,
one ``# summary key=value;...`` comment line at the end. JSON carries the same content as an
object with sorted keys. Floats are written with repr(), so identical runs give identical bytes.
"""

import csv
import io
import json
import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO

from core.exceptions import OutputError

logger: logging.Logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ('csv', 'json')


@dataclass
class ResultTable:
	"""Rows of one command run. ``summary`` holds scalar results and pass/fail flags."""
	anchor: str
	columns: List[str]
	rows: List[List[Any]] = field(default_factory=list)
	summary: Dict[str, Any] = field(default_factory=dict)

	def addRow(self: 'ResultTable', values: Sequence[Any]) -> None:
		if len(values) != len(self.columns):
			raise OutputError(f"Row has {len(values)} values for {len(self.columns)} columns in '{self.anchor}'.")
		self.rows.append(list(values))

	def column(self: 'ResultTable', name: str) -> List[Any]:
		index = self.columns.index(name)
		return [row[index] for row in self.rows]


def _plain(value: Any) -> Any:
	"""Converts numpy scalars, Fractions and complex numbers to JSON-friendly values."""
	if value is None or isinstance(value, (bool, str, int)):
		return value
	if isinstance(value, Fraction):
		return f"{value.numerator}/{value.denominator}"
	if isinstance(value, complex):
		return [_plain(value.real), _plain(value.imag)]
	if isinstance(value, float):
		if math.isnan(value) or math.isinf(value):
			return repr(value)
		return value
	if hasattr(value, 'item'):
		return _plain(value.item())
	if isinstance(value, (list, tuple)):
		return [_plain(item) for item in value]
	if isinstance(value, dict):
		return {str(key): _plain(item) for key, item in value.items()}
	return str(value)


def _cell(value: Any) -> str:
	plain = _plain(value)
	if plain is None:
		return ''
	if isinstance(plain, bool):
		return 'true' if plain else 'false'
	if isinstance(plain, float):
		return repr(plain)
	if isinstance(plain, list):
		return ' '.join(_cell(item) for item in plain)
	return str(plain)


def formatTable(table: ResultTable, outputFormat: str) -> str:
	"""
	Renders a table as CSV or JSON text.

	Raises:
		OutputError: For an unknown format.
	"""
	if outputFormat == 'json':
		payload = {
			'anchor': table.anchor,
			'columns': list(table.columns),
			'rows': [[_plain(value) for value in row] for row in table.rows],
			'summary': _plain(table.summary),
		}
		return json.dumps(payload, indent=2, sort_keys=True) + '\n'
	if outputFormat == 'csv':
		buffer = io.StringIO()
		buffer.write(f"# anchor={table.anchor}\n")
		writer = csv.writer(buffer, lineterminator='\n')
		writer.writerow(table.columns)
		for row in table.rows:
			writer.writerow([_cell(value) for value in row])
		if table.summary:
			items = ';'.join(f"{key}={_cell(table.summary[key])}" for key in sorted(table.summary))
			buffer.write(f"# summary {items}\n")
		return buffer.getvalue()
	raise OutputError(f"Unknown output format '{outputFormat}'; expected one of {OUTPUT_FORMATS}.")


def writeTable(table: ResultTable, outputFormat: str, destination: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
	"""
	Writes a table to ``destination`` (a path) or to ``stream``.

	Raises:
		OutputError: If the file cannot be written.
	"""
	text = formatTable(table, outputFormat)
	if destination:
		try:
			directory = os.path.dirname(os.path.abspath(destination))
			os.makedirs(directory, exist_ok=True)
			with open(destination, 'w', encoding='utf-8', newline='') as handle:
				handle.write(text)
		except OSError as e:
			raise OutputError(f"Could not write '{destination}': {e}") from e
		logger.info(f"Wrote {len(table.rows)} rows ({outputFormat}) to {destination}")
		return
	if stream is None:
		raise OutputError("writeTable needs a destination path or a stream.")
	stream.write(text)

# --- END: cli/output_writer.py ---
