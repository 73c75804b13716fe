"""Utility modules for flag-variety cohomology computations."""

from .config import Config
from .cache import InvariantCache, configure_cache, get_cache
from .helpers import (
    prepare_cache_dir,
    format_rational,
    parse_rational,
    parse_node_list,
    format_nodes,
    format_duration,
)

__all__ = [
    'Config',
    'InvariantCache',
    'configure_cache',
    'get_cache',
    'prepare_cache_dir',
    'format_rational',
    'parse_rational',
    'parse_node_list',
    'format_nodes',
    'format_duration',
]
