"""Agent hyper-parameter configurations.

Configurations serialize to flat dictionaries keyed by the short
hyper-parameter symbols used in search-space files (``l``, ``n``, ``usb``,
``om``, ...). Defaults are the best configurations found by grid search.
"""

from dataclasses import dataclass, fields
from typing import Any, ClassVar, Dict

from models.enums import MutationScheme, OpponentModel, Recommendation

# Alternative spellings accepted when reading configurations.
SYMBOL_ALIASES = {
    'ombs': 'omsb',
    'μ': 'mu',
    'σ': 'sigma',
}


@dataclass
class AgentCommonConfig:
    """Opponent modelling shared by all search agents."""
    opponent_model: OpponentModel = OpponentModel.DO_NOTHING
    opponent_budget: float = 0.05

    SYMBOLS: ClassVar[Dict[str, str]] = {
        'opponent_model': 'om',
        'opponent_budget': 'omsb',
    }

    def __post_init__(self):
        """Validate and convert types."""
        self.opponent_model = OpponentModel(int(self.opponent_model))
        if not 0.0 <= self.opponent_budget <= 1.0:
            raise ValueError(f"omsb must be in [0, 1], got {self.opponent_budget}")

    @classmethod
    def symbols(cls) -> Dict[str, str]:
        """Field name -> symbol for this configuration class."""
        mapping: Dict[str, str] = {}
        for klass in reversed(cls.__mro__):
            mapping.update(klass.__dict__.get('SYMBOLS', {}))
        return mapping

    def to_dict(self) -> Dict[str, Any]:
        """Convert to a symbol-keyed dictionary."""
        mapping = self.symbols()
        result = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, (OpponentModel, MutationScheme, Recommendation)):
                value = int(value)
            result[mapping[f.name]] = value
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AgentCommonConfig':
        """Create from a dictionary keyed by symbols or field names.

        Raises:
            ValueError: If a key is not a hyper-parameter of this agent
        """
        by_symbol = {symbol: name for name, symbol in cls.symbols().items()}
        kwargs = {}
        for key, value in data.items():
            key = SYMBOL_ALIASES.get(key, key)
            if key in by_symbol:
                kwargs[by_symbol[key]] = value
            elif key in cls.symbols():
                kwargs[key] = value
            else:
                raise ValueError(f"Unknown hyper-parameter for {cls.__name__}: {key}")
        return cls(**kwargs)


@dataclass
class BMRHConfig(AgentCommonConfig):
    """Branching-mutation rolling horizon hyper-parameters."""
    sequence_length: int = 2
    max_evaluations: int = 200
    shift_buffer: bool = True
    mutate_once: bool = True
    mutation_scheme: MutationScheme = MutationScheme.EXPONENTIAL_DECAY
    decay: float = 0.8
    gauss_mean: float = 0.1
    gauss_std: float = 0.5

    SYMBOLS: ClassVar[Dict[str, str]] = {
        'sequence_length': 'l',
        'max_evaluations': 'n',
        'shift_buffer': 'usb',
        'mutate_once': 'mo',
        'mutation_scheme': 'ms',
        'decay': 'dcy',
        'gauss_mean': 'mu',
        'gauss_std': 'sigma',
    }

    def __post_init__(self):
        """Validate ranges."""
        super().__post_init__()
        self.mutation_scheme = MutationScheme(int(self.mutation_scheme))
        self.shift_buffer = bool(self.shift_buffer)
        self.mutate_once = bool(self.mutate_once)
        if self.sequence_length < 1:
            raise ValueError("l must be at least 1")
        if self.max_evaluations < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 < self.decay < 1.0:
            raise ValueError(f"dcy must be in (0, 1), got {self.decay}")
        if not 0.0 <= self.gauss_mean <= 1.0:
            raise ValueError(f"mu must be in [0, 1], got {self.gauss_mean}")
        if self.gauss_std <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.gauss_std}")


@dataclass
class SRHConfig(AgentCommonConfig):
    """Seeding rolling horizon hyper-parameters."""
    sequence_length: int = 2
    max_evaluations: int = 200
    shift_buffer: bool = True
    mutate_once: bool = False
    mutation_rate: float = 0.9

    SYMBOLS: ClassVar[Dict[str, str]] = {
        'sequence_length': 'l',
        'max_evaluations': 'n',
        'shift_buffer': 'usb',
        'mutate_once': 'mo',
        'mutation_rate': 'mr',
    }

    def __post_init__(self):
        """Validate ranges."""
        super().__post_init__()
        self.shift_buffer = bool(self.shift_buffer)
        self.mutate_once = bool(self.mutate_once)
        if self.sequence_length < 1:
            raise ValueError("l must be at least 1")
        if self.max_evaluations < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError(f"mr must be in [0, 1], got {self.mutation_rate}")


@dataclass
class MCTSConfig(AgentCommonConfig):
    """Monte-Carlo tree search hyper-parameters."""
    max_depth: int = 2
    exploration: float = 0.0
    ucb_epsilon: float = 1e-6
    expansion_probability: float = 0.4
    expansion_samples: int = 1
    recommendation: Recommendation = Recommendation.MAX_CHILD

    SYMBOLS: ClassVar[Dict[str, str]] = {
        'max_depth': 'd',
        'exploration': 'c',
        'ucb_epsilon': 'e',
        'expansion_probability': 'ep',
        'expansion_samples': 'ps',
        'recommendation': 'rt',
    }

    def __post_init__(self):
        """Validate ranges."""
        super().__post_init__()
        self.recommendation = Recommendation(int(self.recommendation))
        if self.max_depth < 1:
            raise ValueError("d must be at least 1")
        if self.exploration < 0.0:
            raise ValueError("c must be non-negative")
        if self.ucb_epsilon <= 0.0:
            raise ValueError("e must be positive")
        if not 0.0 <= self.expansion_probability <= 1.0:
            raise ValueError(f"ep must be in [0, 1], got {self.expansion_probability}")
        if self.expansion_samples < 1:
            raise ValueError("ps must be at least 1")
