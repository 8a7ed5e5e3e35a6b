"""Configuration management for the game engine, agents and experiments."""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

PROJECT_ROOT = Path(__file__).resolve().parent.parent

# Environment variables that override configuration keys.
ENV_OVERRIDES = {
    'SFP_LOG_LEVEL': ('logging.level', str),
    'SFP_LOG_FORMAT': ('logging.format', str),
    'SFP_CARDS_PATH': ('content.cards_path', str),
    'SFP_NOBLES_PATH': ('content.nobles_path', str),
    'SFP_JOBS': ('experiments.jobs', int),
}

# Keys holding paths; relative values are resolved against PROJECT_ROOT.
PATH_KEYS = (
    'content.cards_path',
    'content.nobles_path',
    'experiments.search_spaces_dir',
    'experiments.agents_dir',
)


class Config:
    """Configuration manager.

    Loads built-in defaults, merges an optional YAML file on top and applies
    ``SFP_*`` environment overrides (a ``.env`` file is honoured).
    """

    def __init__(self, config_path: Optional[str] = None):
        """Initialize configuration.

        Args:
            config_path: Path to configuration YAML file
        """
        self._config: Dict[str, Any] = {}
        self._load_defaults()

        if config_path:
            self.load_from_file(config_path)

        load_dotenv()
        self._apply_environment()

    def _load_defaults(self):
        """Load default configuration."""
        self._config = {
            'game': {
                'P': 4,
                'nTT': 5,
                'nJT': 5,
                'D': 3,
                'FUC': 4,
                'EN': 1,
                'maxT': 10,
                'maxRC': 3,
                'PP': 15,
                'nTTPD': 3,
                'nTPD': 1,
                'nTPS': 2,
                'minTPS': 4,
            },
            'engine': {
                'max_ticks': 300,
                'budget_per_tick': 1000,
            },
            'content': {
                'cards_path': str(PROJECT_ROOT / 'data' / 'cards.csv'),
                'nobles_path': str(PROJECT_ROOT / 'data' / 'nobles.csv'),
            },
            'tuning': {
                'k': 1.0,
                'epsilon_mutation': 0.2,
                'neighbours': 50,
                'ucb_epsilon': 1e-6,
            },
            'experiments': {
                'games': 1000,
                'jobs': 1,
                'ntbea_budgets': [50, 100, 200, 500, 1000],
                'ntbea_repeats': 10,
                'fitness_games': 200,
                'bench_seconds': 10.0,
                'search_spaces_dir': str(PROJECT_ROOT / 'config' / 'search_spaces'),
                'agents_dir': str(PROJECT_ROOT / 'config' / 'agents'),
            },
            'logging': {
                'level': 'INFO',
                'format': 'console',
            },
        }

    def _apply_environment(self):
        """Apply SFP_* environment overrides."""
        for variable, (key, cast) in ENV_OVERRIDES.items():
            raw = os.environ.get(variable)
            if raw is not None and raw != '':
                self.set(key, cast(raw))

    def load_from_file(self, file_path: str):
        """Load configuration from YAML file.

        Args:
            file_path: Path to YAML configuration file
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {file_path}")

        with open(path, 'r') as f:
            file_config = yaml.safe_load(f) or {}

        self._merge_config(self._config, file_config)
        self._resolve_paths()

    def _resolve_paths(self):
        """Make relative content and experiment paths relative to the project root."""
        for key in PATH_KEYS:
            value = self.get(key)
            if value and not Path(value).is_absolute():
                self.set(key, str(PROJECT_ROOT / value))

    def _merge_config(self, base: Dict, update: Dict):
        """Recursively merge configuration dictionaries (update wins)."""
        for key, value in update.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by dot-notation key.

        Args:
            key: Configuration key (e.g., 'engine.max_ticks')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        value = self._config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any):
        """Set configuration value by dot-notation key."""
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def get_section(self, section: str) -> Dict[str, Any]:
        """Get a copy of an entire configuration section (e.g. 'game')."""
        return copy.deepcopy(self._config.get(section, {}))

    def to_dict(self) -> Dict[str, Any]:
        """Get entire configuration as dictionary."""
        return copy.deepcopy(self._config)

    def save_to_file(self, file_path: str):
        """Save configuration to YAML file."""
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)

        with open(path, 'w') as f:
            yaml.dump(self._config, f, default_flow_style=False, sort_keys=False)


_global_config: Optional[Config] = None


def get_config() -> Config:
    """Get global configuration instance."""
    global _global_config
    if _global_config is None:
        _global_config = Config()
    return _global_config


def set_config(config: Config):
    """Set global configuration instance."""
    global _global_config
    _global_config = config
