"""Configuration utilities for flag-variety cohomology computations."""

import copy
import os
from typing import Any, Callable, Dict, Optional, Tuple

import yaml

from .errors import ConfigError


CACHE_ENV_VAR = 'FLAGCOH_CACHE'

IDEAL_GENERATOR_MODES = ('indecomposable', 'full')


def _positive_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def _sizes(value: Any) -> bool:
    return isinstance(value, (list, tuple)) and all(_positive_int(v) for v in value)


# dotted key -> (predicate, what the value must be)
VALIDATORS: Dict[str, Tuple[Callable[[Any], bool], str]] = {
    'weyl.max_group_order': (_positive_int, 'a positive integer'),
    'weyl.iteration_budget': (lambda v: v is None or _positive_int(v), 'null or a positive integer'),
    'invariants.ideal_generators': (lambda v: v in IDEAL_GENERATOR_MODES, f"one of {IDEAL_GENERATOR_MODES}"),
    'verify.max_rank': (_positive_int, 'a positive integer'),
    'verify.workers': (_positive_int, 'a positive integer'),
    'verify.example_n': (_sizes, 'a list of positive integers'),
    'verify.annihilation_n': (_sizes, 'a list of positive integers'),
    'output.json_indent': (lambda v: v is None or (_positive_int(v) or v == 0), 'null or an integer >= 0'),
}


def validate_setting(key: str, value: Any) -> None:
    """
    Reject a value the engine cannot use.

    Args:
        key: Dotted key, e.g. 'verify.workers'
        value: Proposed value

    Raises:
        ConfigError: if ``key`` has a validator and ``value`` fails it
    """
    rule = VALIDATORS.get(key)
    if rule is not None and not rule[0](value):
        raise ConfigError(f"{key} must be {rule[1]}, got {value!r}")


class Config:
    """Configuration manager for the computation engine and the CLI."""

    DEFAULT_CONFIG = {
        'weyl': {
            'max_group_order': 51840,  # |W(E6)|
            'iteration_budget': None,  # derived from max_group_order if None
        },
        'invariants': {
            'cache_dir': None,  # falls back to $FLAGCOH_CACHE
            'ideal_generators': 'indecomposable',
        },
        'verify': {
            'max_rank': 4,
            'workers': 1,
            'example_n': [1, 2, 3],
            'annihilation_n': [1, 2, 3, 4],
            'progress': True,
        },
        'logging': {
            'level': 'WARNING',
            'format': '%(asctime)s %(name)s %(levelname)s %(message)s',
        },
        'output': {
            'json_indent': 2,
        },
    }

    def __init__(self, config_dict: Optional[Dict[str, Any]] = None):
        """
        Initialize configuration.

        Args:
            config_dict: Optional section -> settings overrides

        Raises:
            ConfigError: if an override is not a mapping or fails validation
        """
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        if config_dict:
            self._merge(config_dict)

    def _merge(self, updates: Dict[str, Any]) -> None:
        """Merge section by section; a section given in part keeps its other defaults."""
        if not isinstance(updates, dict):
            raise ConfigError(f"configuration must be a mapping of sections, got {type(updates).__name__}")
        for section, settings in updates.items():
            current = self.config.get(section)
            if isinstance(current, dict) and isinstance(settings, dict):
                for name, value in settings.items():
                    validate_setting(f"{section}.{name}", value)
                current.update(settings)
            else:
                self.config[section] = settings

    @classmethod
    def from_yaml(cls, yaml_path: str) -> 'Config':
        """
        Load configuration from YAML file.

        Args:
            yaml_path: Path to YAML configuration file

        Returns:
            Config object

        Raises:
            ConfigError: if the file is not valid YAML or holds an invalid setting
        """
        with open(yaml_path, 'r') as f:
            try:
                config_dict = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigError(f"cannot parse {yaml_path}: {e}") from e
        return cls(config_dict or {})

    @classmethod
    def from_environment(cls, yaml_path: Optional[str] = None) -> 'Config':
        """
        Build a configuration from an optional YAML file and the environment.

        ``FLAGCOH_CACHE`` fills ``invariants.cache_dir`` when the file leaves it unset.

        Args:
            yaml_path: Optional path to YAML configuration file

        Returns:
            Config object
        """
        config = cls.from_yaml(yaml_path) if yaml_path else cls()
        env_dir = os.environ.get(CACHE_ENV_VAR)
        if env_dir and not config.get('invariants.cache_dir'):
            config.set('invariants.cache_dir', env_dir)
        return config

    def save_yaml(self, yaml_path: str) -> None:
        """Write the settings in section order, so a saved file reads like config.yaml."""
        os.makedirs(os.path.dirname(yaml_path) or '.', exist_ok=True)
        with open(yaml_path, 'w') as f:
            yaml.safe_dump(self.config, f, default_flow_style=False, sort_keys=False)

    def get(self, key: str, default: Any = None) -> Any:
        """
        Value at a dotted key such as 'verify.max_rank'.

        Args:
            key: Dotted key path
            default: Returned when any part of the path is missing

        Returns:
            Configuration value
        """
        node: Any = self.config
        for part in key.split('.'):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def set(self, key: str, value: Any) -> None:
        """
        Set a dotted key, creating missing sections.

        Raises:
            ConfigError: if ``value`` is not valid for ``key``
        """
        validate_setting(key, value)
        *sections, name = key.split('.')
        node = self.config
        for part in sections:
            node = node.setdefault(part, {})
        node[name] = value
