# --- START: core/exceptions.py ---
# core/exceptions.py
"""
Defines custom exception classes for the error conditions of the numerics toolkit.
Every error raised on purpose by the package derives from BaseApplicationError so that
the command-line layer can map failures onto exit codes without catching programming errors.
"""

from typing import Optional


class BaseApplicationError(Exception):
	"""
	Base class for all custom application-specific exceptions.
	Provides a common ancestor for catching application-related errors.
	"""
	def __init__(self: 'BaseApplicationError', message: str = "An application error occurred.") -> None:
		"""
		Initialises the BaseApplicationError.

		Args:
			message (str): A descriptive message for the error.
		"""
		super().__init__(message)


class ConfigurationError(BaseApplicationError):
	"""
	Raised for errors encountered during loading, parsing, or accessing
	configuration settings (e.g., missing keys, invalid formats).
	"""
	def __init__(self: 'ConfigurationError', message: str = "Configuration error.") -> None:
		"""
		Initialises the ConfigurationError.

		Args:
			message (str): A descriptive message specific to the configuration issue.
		"""
		super().__init__(message)


class ParsingError(BaseApplicationError):
	"""
	Raised when a real-number specification (``rational:``, ``cf:``, ``decimal:``)
	or another textual input cannot be parsed.
	"""
	def __init__(self: 'ParsingError', message: str = "Parsing error.") -> None:
		super().__init__(message)


class DomainError(BaseApplicationError):
	"""
	Raised when an argument lies outside the mathematical domain of an operation:
	odd weights, points outside (0,1), non-coprime matrix rows, derivative orders out of range.
	"""
	def __init__(self: 'DomainError', message: str = "Argument outside the domain of the operation.") -> None:
		super().__init__(message)


class ResourceError(BaseApplicationError):
	"""
	Raised when a computation would exceed a configured resource limit
	(memory cap of a divisor table, maximum number of series terms).
	"""
	def __init__(self: 'ResourceError', message: str = "Resource limit exceeded.") -> None:
		super().__init__(message)


class CertificateError(BaseApplicationError):
	"""
	Raised when a certified bound cannot be established, e.g. a q-series evaluated too
	close to the real axis or two probe evaluations of a constant that disagree.
	"""
	def __init__(self: 'CertificateError', message: str = "Certificate could not be established.") -> None:
		super().__init__(message)


class QuadratureError(BaseApplicationError):
	"""
	Raised when an integral does not reach its tolerance within the evaluation budget.
	The partial estimate is kept so callers can report it.
	"""
	def __init__(
		self: 'QuadratureError',
		message: str = "Quadrature did not converge.",
		estimate: Optional[complex] = None,
		errorEstimate: Optional[float] = None,
		evaluations: int = 0
	) -> None:
		"""
		Initialises the QuadratureError.

		Args:
			message (str): Description of the failure.
			estimate (Optional[complex]): Integral value reached before the budget ran out.
			errorEstimate (Optional[float]): Error estimate attached to that value.
			evaluations (int): Number of integrand evaluations spent.
		"""
		super().__init__(message)
		self.estimate: Optional[complex] = estimate
		self.errorEstimate: Optional[float] = errorEstimate
		self.evaluations: int = evaluations


class InsufficientDepthError(BaseApplicationError):
	"""
	Raised when a continued-fraction orbit is too shallow for the requested depth.
	"""
	def __init__(
		self: 'InsufficientDepthError',
		message: str = "Continued-fraction orbit is too shallow.",
		requiredDepth: Optional[int] = None,
		availableDepth: Optional[int] = None
	) -> None:
		super().__init__(message)
		self.requiredDepth: Optional[int] = requiredDepth
		self.availableDepth: Optional[int] = availableDepth


class OutputError(BaseApplicationError):
	"""
	Raised for errors while writing result tables (CSV/JSON) to disk.
	"""
	def __init__(self: 'OutputError', message: str = "Could not write output.") -> None:
		super().__init__(message)

# --- END: core/exceptions.py ---
