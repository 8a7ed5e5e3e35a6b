"""Game result data model."""

from dataclasses import dataclass, field
from typing import FrozenSet, List

from models.enums import GameOutcome


@dataclass(frozen=True)
class GameResult:
    """Outcome of a finished game.

    ``winners`` is empty exactly when the game ended in a stalemate.
    """
    winners: FrozenSet[int]
    prestige: List[int]
    card_counts: List[int]
    ticks: int
    outcome: GameOutcome
    seed: int = 0
    agent_labels: List[str] = field(default_factory=list)
    passes: int = 0

    def __post_init__(self):
        """Validate outcome and winner consistency."""
        if isinstance(self.outcome, str):
            object.__setattr__(self, 'outcome', GameOutcome(self.outcome))
        if (self.outcome == GameOutcome.STALEMATE) != (len(self.winners) == 0):
            raise ValueError("Winners must be empty iff the game ended in a stalemate")

    @property
    def is_stalemate(self) -> bool:
        """Check if nobody won."""
        return self.outcome == GameOutcome.STALEMATE

    def credit(self, player: int) -> float:
        """Win credit of a player: 1/|winners| for a winner, else 0."""
        if player in self.winners:
            return 1.0 / len(self.winners)
        return 0.0

    def to_dict(self) -> dict:
        """Flat dictionary suitable for a CSV row."""
        row = {
            'seed': self.seed,
            'outcome': str(self.outcome),
            'ticks': self.ticks,
            'winners': ";".join(str(w) for w in sorted(self.winners)),
            'passes': self.passes,
        }
        for index, points in enumerate(self.prestige):
            row[f'prestige_{index}'] = points
        for index, cards in enumerate(self.card_counts):
            row[f'cards_{index}'] = cards
        for index, label in enumerate(self.agent_labels):
            row[f'agent_{index}'] = label
        return row
