"""
Unit tests for configuration and formatting helpers.

Run tests with: python -m pytest tests/
"""

import os
import tempfile
from fractions import Fraction

import pytest

from flag_cohomology.utils import Config
from flag_cohomology.utils.errors import ConfigError
from flag_cohomology.utils.helpers import (
    format_duration,
    format_rational,
    parse_node_list,
    parse_rational,
    prepare_cache_dir,
)


class TestConfig:
    """Test configuration functionality."""

    def test_config_init(self):
        """Test configuration initialization."""
        config = Config()
        assert config.get('weyl.max_group_order') == 51840
        assert config.get('verify.max_rank') == 4
        assert config.get('invariants.ideal_generators') == 'indecomposable'

    def test_config_get_set(self):
        """Test getting and setting config values."""
        config = Config()

        config.set('verify.workers', 4)
        assert config.get('verify.workers') == 4

        config.set('custom.value', 123)
        assert config.get('custom.value') == 123
        assert config.get('missing.key', 'fallback') == 'fallback'

    def test_partial_update_keeps_defaults(self):
        """Test that nested updates merge with the defaults."""
        config = Config({'verify': {'max_rank': 2}})
        assert config.get('verify.max_rank') == 2
        assert config.get('verify.workers') == 1

    def test_config_yaml(self):
        """Test saving and loading YAML config."""
        config = Config()
        config.set('verify.max_rank', 3)

        with tempfile.NamedTemporaryFile(mode='w', suffix='.yaml', delete=False) as f:
            yaml_path = f.name

        try:
            config.save_yaml(yaml_path)
            assert os.path.exists(yaml_path)

            loaded_config = Config.from_yaml(yaml_path)
            assert loaded_config.get('verify.max_rank') == 3
        finally:
            if os.path.exists(yaml_path):
                os.remove(yaml_path)

    def test_environment_cache_dir(self, monkeypatch):
        """Test that FLAGCOH_CACHE fills an unset cache directory."""
        monkeypatch.setenv('FLAGCOH_CACHE', '/tmp/flagcoh-cache')
        assert Config.from_environment().get('invariants.cache_dir') == '/tmp/flagcoh-cache'

    def test_file_cache_dir_wins(self, monkeypatch, tmp_path):
        """Test that a configured cache directory is not overridden."""
        monkeypatch.setenv('FLAGCOH_CACHE', '/tmp/flagcoh-cache')
        config = Config({'invariants': {'cache_dir': str(tmp_path)}})
        path = str(tmp_path / 'config.yaml')
        config.save_yaml(path)
        assert Config.from_environment(path).get('invariants.cache_dir') == str(tmp_path)

    def test_malformed_yaml(self, tmp_path):
        """Test that a file YAML cannot parse raises ConfigError."""
        path = tmp_path / 'bad.yaml'
        path.write_text("verify: {max_rank: [1, 2\n")
        with pytest.raises(ConfigError):
            Config.from_yaml(str(path))

    def test_top_level_must_be_mapping(self, tmp_path):
        """Test that a YAML list is rejected."""
        path = tmp_path / 'list.yaml'
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigError):
            Config.from_yaml(str(path))

    @pytest.mark.parametrize('key,value', [
        ('invariants.ideal_generators', 'minimal'),
        ('verify.workers', 0),
        ('verify.max_rank', 'four'),
        ('verify.example_n', [1, -2]),
        ('weyl.max_group_order', True),
    ])
    def test_invalid_settings(self, key, value):
        """Test that set and the constructor both validate known keys."""
        with pytest.raises(ConfigError):
            Config().set(key, value)
        section, name = key.split('.')
        with pytest.raises(ConfigError):
            Config({section: {name: value}})

    def test_saved_order_follows_sections(self, tmp_path):
        """Test that save_yaml keeps section order instead of sorting keys."""
        path = tmp_path / 'saved.yaml'
        Config().save_yaml(str(path))
        lines = [line for line in path.read_text().splitlines() if not line.startswith(' ')]
        assert lines == ['weyl:', 'invariants:', 'verify:', 'logging:', 'output:']


class TestHelpers:
    """Test formatting and parsing helpers."""

    def test_format_rational(self):
        """Test integer and fraction rendering."""
        assert format_rational(Fraction(3, 4)) == '3/4'
        assert format_rational(Fraction(-2)) == '-2'

    def test_parse_rational(self):
        """Test parsing back."""
        assert parse_rational('-3/4') == Fraction(-3, 4)
        assert parse_rational('5') == 5

    def test_parse_node_list(self):
        """Test comma-separated node lists."""
        assert set(parse_node_list('1, 3')) == {1, 3}
        assert not parse_node_list('')
        with pytest.raises(ValueError):
            parse_node_list('1,x')

    def test_format_duration(self):
        """Test the three duration ranges."""
        assert format_duration(0.25) == '250ms'
        assert format_duration(12.34) == '12.3s'
        assert format_duration(247.0) == '4m07s'

    def test_prepare_cache_dir(self, tmp_path):
        """Test that a nested cache directory is created and returned absolute."""
        target = tmp_path / 'a' / 'b'
        path = prepare_cache_dir(str(target))
        assert os.path.isdir(path)
        assert os.path.isabs(path)
        assert prepare_cache_dir(path) == path


if __name__ == '__main__':
    pytest.main([__file__, '-v'])
