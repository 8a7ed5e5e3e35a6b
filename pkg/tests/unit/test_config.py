"""Unit tests for the settings layer."""

import pytest
import yaml

from utils.config import PROJECT_ROOT, Config


class TestConfig:
    """Tests for Config."""

    def test_defaults(self):
        """Test built-in defaults."""
        config = Config()
        assert config.get('game.P') == 4
        assert config.get('engine.budget_per_tick') == 1000
        assert config.get('missing.key', 'fallback') == 'fallback'

    def test_yaml_merge(self, tmp_path):
        """Test file values override defaults key by key."""
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.safe_dump({'game': {'P': 2}, 'engine': {'max_ticks': 50}}))
        config = Config(str(path))
        assert config.get('game.P') == 2
        assert config.get('game.PP') == 15
        assert config.get('engine.max_ticks') == 50

    def test_relative_paths_resolved(self, tmp_path):
        """Test relative content paths are anchored at the project root."""
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.safe_dump({'content': {'cards_path': 'data/other.csv'}}))
        config = Config(str(path))
        assert config.get('content.cards_path') == str(PROJECT_ROOT / 'data' / 'other.csv')

    def test_missing_file(self, tmp_path):
        """Test an absent settings file."""
        with pytest.raises(FileNotFoundError):
            Config(str(tmp_path / 'absent.yaml'))

    def test_environment_overrides(self, monkeypatch):
        """Test SFP_* variables win over defaults."""
        monkeypatch.setenv('SFP_JOBS', '4')
        monkeypatch.setenv('SFP_LOG_LEVEL', 'DEBUG')
        config = Config()
        assert config.get('experiments.jobs') == 4
        assert config.get('logging.level') == 'DEBUG'

    def test_sections_are_copies(self):
        """Test callers cannot mutate the stored settings."""
        config = Config()
        config.get_section('game')['P'] = 3
        assert config.get('game.P') == 4

    def test_save_round_trip(self, tmp_path):
        """Test saved settings load back unchanged."""
        config = Config()
        config.set('tuning.k', 2.5)
        path = tmp_path / 'saved' / 'settings.yaml'
        config.save_to_file(str(path))
        assert Config(str(path)).get('tuning.k') == 2.5
