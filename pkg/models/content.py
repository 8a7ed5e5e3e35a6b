"""Immutable game content: development cards and noble tiles."""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.exceptions import SetupError


@dataclass(frozen=True)
class Card:
    """A development card.

    ``price`` is a token vector of length nTT+1 whose joker entry is 0.
    """
    card_id: int
    level: int
    bonus: int
    price: Tuple[int, ...]
    value: int
    cost: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate card fields and cache the undiscounted token cost."""
        if self.level < 1:
            raise SetupError(f"Card {self.card_id}: level must be >= 1")
        if not 0 <= self.bonus < len(self.price) - 1:
            raise SetupError(f"Card {self.card_id}: bonus suit {self.bonus} out of range")
        if self.price[-1] != 0:
            raise SetupError(f"Card {self.card_id}: price cannot include jokers")
        if any(c < 0 for c in self.price) or self.value < 0:
            raise SetupError(f"Card {self.card_id}: negative price or value")
        object.__setattr__(self, 'cost', sum(self.price))


@dataclass(frozen=True)
class Noble:
    """A noble tile acquired passively once bonus requirements are met."""
    noble_id: int
    value: int
    requirement: Tuple[int, ...]
    total: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate noble fields and cache the number of cards required."""
        if self.value <= 0:
            raise SetupError(f"Noble {self.noble_id}: value must be positive")
        if self.requirement[-1] != 0 or sum(self.requirement) <= 0:
            raise SetupError(f"Noble {self.noble_id}: requirement must be positive and joker-free")
        if any(r < 0 for r in self.requirement):
            raise SetupError(f"Noble {self.noble_id}: negative requirement")
        object.__setattr__(self, 'total', sum(self.requirement))

    def is_satisfied_by(self, bonus_counts: List[int]) -> bool:
        """Check the requirement against per-suit bonus counts (threshold rule)."""
        return all(have >= need for have, need in zip(bonus_counts, self.requirement))


@dataclass(frozen=True)
class ContentSet:
    """Cards and nobles available to a game, shared read-only between games."""
    cards: Tuple[Card, ...]
    nobles: Tuple[Noble, ...]
    token_types: int
    levels: int

    def __post_init__(self):
        """Validate consistency of the content with its declared shape."""
        for card in self.cards:
            if len(card.price) != self.token_types + 1:
                raise SetupError(f"Card {card.card_id} does not have {self.token_types} suits")
            if card.level > self.levels:
                raise SetupError(f"Card {card.card_id} level {card.level} exceeds {self.levels} decks")
        for noble in self.nobles:
            if len(noble.requirement) != self.token_types + 1:
                raise SetupError(f"Noble {noble.noble_id} does not have {self.token_types} suits")

    @property
    def total_cards(self) -> int:
        """Number of cards in the set."""
        return len(self.cards)

    def level_sizes(self) -> Dict[int, int]:
        """Number of cards per level."""
        sizes = {level: 0 for level in range(1, self.levels + 1)}
        for card in self.cards:
            sizes[card.level] += 1
        return sizes

    def cards_of_level(self, level: int) -> List[Card]:
        """All cards of a level, in content order."""
        return [card for card in self.cards if card.level == level]
