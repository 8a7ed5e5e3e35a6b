"""Utility modules: configuration, logging and parallel execution."""

from .logger import get_logger, configure_logging
from .config import Config, get_config, set_config
from .parallel import parallel_map

__all__ = [
    'get_logger',
    'configure_logging',
    'Config',
    'get_config',
    'set_config',
    'parallel_map',
]
