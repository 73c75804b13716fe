"""On-disk cache of invariant subspaces, one YAML file per (type, gens, degree)."""

import logging
import os
from typing import List, Optional, Sequence, Tuple

import yaml

from .config import CACHE_ENV_VAR
from .helpers import prepare_cache_dir

logger = logging.getLogger(__name__)

CacheKey = Tuple[str, Tuple[int, ...], int]


class InvariantCache:
    """
    Stores invariant bases in the polynomial text format.

    Files are named ``<TYPE>_<gens or none>_d<degree>.yaml`` and hold the key
    fields next to the basis so a stray file can be checked against its name.
    """

    def __init__(self, directory: str):
        self.directory = directory

    def path(self, key: CacheKey) -> str:
        cartan_type, gens, degree = key
        gens_part = '-'.join(str(i) for i in gens) if gens else 'none'
        return os.path.join(self.directory, f"{cartan_type}_{gens_part}_d{degree}.yaml")

    def load(self, key: CacheKey) -> Optional[List[str]]:
        """
        Read a cached basis.

        Args:
            key: (cartan type text, sorted generator nodes, degree)

        Returns:
            Basis as polynomial text strings, or None when absent or unreadable
        """
        path = self.path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r') as f:
                data = yaml.safe_load(f)
            if (data['cartan_type'], tuple(data['gens']), data['degree']) != key:
                raise ValueError(f"key mismatch in {path}")
            return [str(p) for p in data['basis']]
        except (OSError, yaml.YAMLError, KeyError, TypeError, ValueError) as e:
            logger.warning("ignoring unreadable cache file %s: %s", path, e)
            return None

    def store(self, key: CacheKey, basis: Sequence[str]) -> None:
        prepare_cache_dir(self.directory)
        cartan_type, gens, degree = key
        data = {
            'cartan_type': cartan_type,
            'gens': list(gens),
            'degree': degree,
            'basis': list(basis),
        }
        with open(self.path(key), 'w') as f:
            yaml.safe_dump(data, f, default_flow_style=False)
        logger.debug("cached %s", self.path(key))


_active_cache: Optional[InvariantCache] = None
_configured = False


def configure_cache(directory: Optional[str]) -> Optional[InvariantCache]:
    """
    Select the cache directory for this process; None disables the disk cache.

    Args:
        directory: Cache directory or None

    Returns:
        The active cache, if any
    """
    global _active_cache, _configured
    _active_cache = InvariantCache(directory) if directory else None
    _configured = True
    return _active_cache


def get_cache() -> Optional[InvariantCache]:
    """The configured cache, falling back to ``$FLAGCOH_CACHE`` when never configured."""
    if not _configured:
        configure_cache(os.environ.get(CACHE_ENV_VAR))
    return _active_cache
