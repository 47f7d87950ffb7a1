# --- START: core/settings.py ---
# core/settings.py
"""
Typed view of the numeric configuration.

Core functions take explicit keyword arguments; the command-line layer builds one
NumericsSettings from config.ini and the environment and passes its fields down.
The dataclass defaults mirror the shipped config.ini.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from .config_manager import ConfigManager
from .exceptions import ConfigurationError

logger: logging.Logger = logging.getLogger(__name__)

MEM_CAP_ENV_VAR: str = 'FSERIES_MEM_CAP_BITS'
METHOD_CHOICES = ('naive', 'hyperbola', 'cf')
OUTPUT_CHOICES = ('csv', 'json')


@dataclass(frozen=True)
class NumericsSettings:
	"""All tunables of a run. Frozen so it can be shared with worker processes."""
	defaultEps: float = 1e-9
	epsFloor: float = 1e-13
	memoryCapBytes: int = 256 * 1024 * 1024
	naiveMaxTerms: int = 5_000_000
	qSeriesMinImag: float = 0.05
	hyperbolaChunk: int = 65_536
	quadratureBudget: int = 100_000
	quadratureOrder: int = 10
	cfGuard: int = 4
	quotientBitCap: int = 1_000_000
	divergenceThreshold: float = 1e3
	incrementTolerance: float = 1e-6
	dqFloor: float = 1e-10
	workers: int = 1
	defaultK: int = 2
	defaultDepth: int = 40
	defaultMethod: str = 'hyperbola'
	defaultOutput: str = 'csv'
	defaultSeed: int = 20240101
	batteryFile: str = 'resources/verify_battery.yaml'

	@classmethod
	def fromConfig(cls, configManager: Optional[ConfigManager]) -> 'NumericsSettings':
		"""
		Builds settings from a loaded ConfigManager; missing keys keep their defaults.

		Args:
			configManager (Optional[ConfigManager]): Loaded manager, or None for pure defaults.

		Returns:
			NumericsSettings: The assembled settings.

		Raises:
			ConfigurationError: If a value is malformed or inconsistent.
		"""
		base = cls()
		if configManager is None:
			return base
		cm = configManager
		settings = cls(
			defaultEps=cm.getConfigValueFloat('Numerics', 'defaulteps', fallback=base.defaultEps),
			epsFloor=cm.getConfigValueFloat('Numerics', 'epsfloor', fallback=base.epsFloor),
			memoryCapBytes=cm.getConfigValueInt('Numerics', 'memorycapbytes', fallback=base.memoryCapBytes),
			naiveMaxTerms=cm.getConfigValueInt('Numerics', 'naivemaxterms', fallback=base.naiveMaxTerms),
			qSeriesMinImag=cm.getConfigValueFloat('Numerics', 'qseriesminimag', fallback=base.qSeriesMinImag),
			hyperbolaChunk=cm.getConfigValueInt('Numerics', 'hyperbolachunk', fallback=base.hyperbolaChunk),
			quadratureBudget=cm.getConfigValueInt('Quadrature', 'budget', fallback=base.quadratureBudget),
			quadratureOrder=cm.getConfigValueInt('Quadrature', 'order', fallback=base.quadratureOrder),
			cfGuard=cm.getConfigValueInt('ContinuedFraction', 'guard', fallback=base.cfGuard),
			quotientBitCap=cm.getEnvVarInt(
				MEM_CAP_ENV_VAR,
				cm.getConfigValueInt('ContinuedFraction', 'quotientbitcap', fallback=base.quotientBitCap)
			),
			divergenceThreshold=cm.getConfigValueFloat('Brjuno', 'divergencethreshold', fallback=base.divergenceThreshold),
			incrementTolerance=cm.getConfigValueFloat('Brjuno', 'incrementtolerance', fallback=base.incrementTolerance),
			dqFloor=cm.getConfigValueFloat('Brjuno', 'dqfloor', fallback=base.dqFloor),
			workers=cm.getConfigValueInt('Parallel', 'workers', fallback=base.workers),
			defaultK=cm.getConfigValueInt('CLI', 'defaultk', fallback=base.defaultK),
			defaultDepth=cm.getConfigValueInt('CLI', 'defaultdepth', fallback=base.defaultDepth),
			defaultMethod=cm.getConfigValueChoice('CLI', 'defaultmethod', METHOD_CHOICES, base.defaultMethod),
			defaultOutput=cm.getConfigValueChoice('CLI', 'defaultoutput', OUTPUT_CHOICES, base.defaultOutput),
			defaultSeed=cm.getConfigValueInt('CLI', 'defaultseed', fallback=base.defaultSeed),
			batteryFile=cm.getConfigValue('CLI', 'batteryfile', fallback=base.batteryFile),
		)
		settings.validate()
		logger.debug(f"Numerics settings: {settings}")
		return settings

	def validate(self: 'NumericsSettings') -> None:
		"""
		Raises:
			ConfigurationError: If a value is outside its admissible range.
		"""
		if not (0.0 < self.epsFloor <= self.defaultEps):
			raise ConfigurationError(f"Need 0 < epsfloor <= defaulteps, got {self.epsFloor} and {self.defaultEps}.")
		if self.defaultK < 2 or self.defaultK % 2:
			raise ConfigurationError(f"defaultk must be an even integer >= 2, got {self.defaultK}.")
		if self.qSeriesMinImag <= 0.0:
			raise ConfigurationError("qseriesminimag must be positive.")
		for name in ('memoryCapBytes', 'naiveMaxTerms', 'hyperbolaChunk', 'quadratureBudget',
					 'quadratureOrder', 'quotientBitCap', 'defaultDepth'):
			if getattr(self, name) <= 0:
				raise ConfigurationError(f"Setting '{name}' must be positive, got {getattr(self, name)}.")
		if self.cfGuard < 0 or self.workers < 0:
			raise ConfigurationError("guard and workers must be non-negative.")

# --- END: core/settings.py ---
