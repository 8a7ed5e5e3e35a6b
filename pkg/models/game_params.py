"""Game parameter vector for Splendor-like games."""

from dataclasses import dataclass, fields, replace
from typing import Dict, List, Sequence

from core.exceptions import SetupError

# Field name -> rule symbol, in vector order.
SYMBOLS = {
    'players': 'P',
    'token_types': 'nTT',
    'jokers': 'nJT',
    'decks': 'D',
    'face_up_cards': 'FUC',
    'extra_nobles': 'EN',
    'max_tokens': 'maxT',
    'max_reserved': 'maxRC',
    'prestige_points': 'PP',
    'pick_different_types': 'nTTPD',
    'pick_different_tokens': 'nTPD',
    'pick_same_tokens': 'nTPS',
    'pick_same_min_stack': 'minTPS',
}


@dataclass(frozen=True)
class GameParams:
    """The 13 integers governing setup, rules and actions.

    Defaults are those of the four-player base game.
    """
    players: int = 4
    token_types: int = 5
    jokers: int = 5
    decks: int = 3
    face_up_cards: int = 4
    extra_nobles: int = 1
    max_tokens: int = 10
    max_reserved: int = 3
    prestige_points: int = 15
    pick_different_types: int = 3
    pick_different_tokens: int = 1
    pick_same_tokens: int = 2
    pick_same_min_stack: int = 4

    def __post_init__(self):
        """Validate parameter ranges."""
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise SetupError(f"{SYMBOLS[f.name]} must be an integer, got {value!r}")
            if value < 0:
                raise SetupError(f"{SYMBOLS[f.name]} must be non-negative, got {value}")

        if self.players < 2:
            raise SetupError(f"P must be at least 2, got {self.players}")
        if self.token_types < 1:
            raise SetupError(f"nTT must be at least 1, got {self.token_types}")
        if self.decks < 1:
            raise SetupError(f"D must be at least 1, got {self.decks}")
        if self.prestige_points < 1:
            raise SetupError(f"PP must be at least 1, got {self.prestige_points}")
        for name in ('pick_different_types', 'pick_different_tokens', 'pick_same_tokens'):
            if getattr(self, name) < 1:
                raise SetupError(f"{SYMBOLS[name]} must be at least 1")

    @property
    def tokens_per_suit(self) -> int:
        """Common tokens of each suit that enter play (P+2)."""
        return self.players + 2

    @property
    def noble_count(self) -> int:
        """Nobles placed on the table at setup (P+EN)."""
        return self.players + self.extra_nobles

    @property
    def joker_index(self) -> int:
        """Position of the joker entry in token vectors."""
        return self.token_types

    def with_players(self, players: int) -> 'GameParams':
        """Copy of these parameters for a different player count."""
        return replace(self, players=players)

    def to_vector(self) -> List[int]:
        """The 13-element integer vector [P, nTT, ..., minTPS]."""
        return [getattr(self, name) for name in SYMBOLS]

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> 'GameParams':
        """Build parameters from the 13-element integer vector."""
        if len(vector) != len(SYMBOLS):
            raise SetupError(f"Expected {len(SYMBOLS)} parameters, got {len(vector)}")
        return cls(**dict(zip(SYMBOLS, (int(v) for v in vector))))

    def to_dict(self) -> Dict[str, int]:
        """Convert to a symbol-keyed dictionary."""
        return {symbol: getattr(self, name) for name, symbol in SYMBOLS.items()}

    @classmethod
    def from_dict(cls, data: Dict[str, int]) -> 'GameParams':
        """Create from a dictionary keyed by symbols or field names."""
        by_symbol = {symbol: name for name, symbol in SYMBOLS.items()}
        kwargs = {}
        for key, value in data.items():
            if key in SYMBOLS:
                kwargs[key] = value
            elif key in by_symbol:
                kwargs[by_symbol[key]] = value
            else:
                raise SetupError(f"Unknown game parameter: {key}")
        return cls(**kwargs)
