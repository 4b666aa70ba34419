"""Utility modules for the modsurf toolkit."""

from .config import config, ConfigManager
from .errors import (
    CapabilityError,
    DomainError,
    InvariantViolation,
    ModsurfError,
    RetryBudgetExceeded,
    StructuralInputError,
    UnflippableArcError,
    check_cap,
)
from .logger import get_logger, ExperimentLogger, set_global_level
from .parallel import parallel_map

__all__ = [
    'config', 'ConfigManager', 'get_logger', 'ExperimentLogger', 'set_global_level',
    'ModsurfError', 'StructuralInputError', 'DomainError', 'UnflippableArcError',
    'CapabilityError', 'RetryBudgetExceeded', 'InvariantViolation', 'check_cap', 'parallel_map',
]
