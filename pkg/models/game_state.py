"""Mutable game state and per-player holdings."""

import hashlib
from dataclasses import dataclass, field
from typing import List, NamedTuple

from core.rng import GameRNG
from models.content import Card, ContentSet, Noble
from models.game_params import GameParams


def zero_tokens(token_types: int) -> List[int]:
    """Empty token vector (common suits plus the joker slot)."""
    return [0] * (token_types + 1)


def total(tokens) -> int:
    """Total number of tokens in a vector, jokers included."""
    return sum(tokens)


class ReservedCard(NamedTuple):
    """A reserved card; ``from_deck`` cards are hidden from opponents."""
    card: Card
    from_deck: bool


@dataclass
class PlayerState:
    """Holdings of one player.

    ``bonus_counts`` and ``prestige`` are caches kept consistent with
    ``purchased`` and ``nobles`` by the rules module.
    """
    hand: List[int]
    purchased: List[Card] = field(default_factory=list)
    reserved: List[ReservedCard] = field(default_factory=list)
    nobles: List[Noble] = field(default_factory=list)
    bonus_counts: List[int] = field(default_factory=list)
    prestige: int = 0

    @classmethod
    def empty(cls, token_types: int) -> 'PlayerState':
        """Player with no tokens, cards or nobles."""
        return cls(hand=zero_tokens(token_types), bonus_counts=[0] * token_types)

    @property
    def token_count(self) -> int:
        """Total tokens in hand."""
        return sum(self.hand)

    @property
    def card_count(self) -> int:
        """Number of purchased cards (used to break prestige ties)."""
        return len(self.purchased)

    def recompute_prestige(self) -> int:
        """Prestige recomputed from owned cards and nobles."""
        return sum(c.value for c in self.purchased) + sum(n.value for n in self.nobles)

    def recompute_bonus_counts(self) -> List[int]:
        """Bonus counts recomputed from purchased cards."""
        counts = [0] * len(self.bonus_counts)
        for card in self.purchased:
            counts[card.bonus] += 1
        return counts

    def copy(self) -> 'PlayerState':
        """Independent copy; cards and nobles are immutable and shared."""
        return PlayerState(
            hand=self.hand[:],
            purchased=self.purchased[:],
            reserved=self.reserved[:],
            nobles=self.nobles[:],
            bonus_counts=self.bonus_counts[:],
            prestige=self.prestige,
        )

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            'hand': list(self.hand),
            'purchased': [c.card_id for c in self.purchased],
            'reserved': [(r.card.card_id, r.from_deck) for r in self.reserved],
            'nobles': [n.noble_id for n in self.nobles],
            'bonus_counts': list(self.bonus_counts),
            'prestige': self.prestige,
        }


@dataclass
class GameState:
    """Complete state of a game.

    ``decks[d]`` is drawn from the end of the list. ``face_up[d]`` holds at
    most FUC cards; a slot whose deck is exhausted is removed, so slot
    indices stay contiguous. ``passes`` counts turns skipped by a player
    with no legal action.
    """
    params: GameParams
    content: ContentSet
    table_tokens: List[int]
    decks: List[List[Card]]
    face_up: List[List[Card]]
    nobles: List[Noble]
    players: List[PlayerState]
    rng: GameRNG
    tick: int = 0
    current_player: int = 0
    final_round: bool = False
    passes: int = 0

    def player(self, index: int) -> PlayerState:
        """Holdings of a player."""
        return self.players[index]

    def copy(self) -> 'GameState':
        """Independent deep copy (content is shared, it is immutable)."""
        return GameState(
            params=self.params,
            content=self.content,
            table_tokens=self.table_tokens[:],
            decks=[deck[:] for deck in self.decks],
            face_up=[row[:] for row in self.face_up],
            nobles=self.nobles[:],
            players=[p.copy() for p in self.players],
            rng=self.rng.clone(),
            tick=self.tick,
            current_player=self.current_player,
            final_round=self.final_round,
            passes=self.passes,
        )

    def conservation_errors(self) -> List[str]:
        """Violated conservation and cache invariants (empty when consistent)."""
        errors = []
        params = self.params
        joker = params.joker_index

        for suit in range(params.token_types):
            held = self.table_tokens[suit] + sum(p.hand[suit] for p in self.players)
            if held != params.tokens_per_suit:
                errors.append(f"suit {suit}: {held} tokens in play, expected {params.tokens_per_suit}")
        jokers = self.table_tokens[joker] + sum(p.hand[joker] for p in self.players)
        if jokers != params.jokers:
            errors.append(f"jokers: {jokers} in play, expected {params.jokers}")
        if any(t < 0 for t in self.table_tokens) or any(t < 0 for p in self.players for t in p.hand):
            errors.append("negative token count")

        cards = (
            sum(len(d) for d in self.decks)
            + sum(len(row) for row in self.face_up)
            + sum(len(p.purchased) + len(p.reserved) for p in self.players)
        )
        if cards != self.content.total_cards:
            errors.append(f"cards: {cards} accounted for, expected {self.content.total_cards}")

        nobles = len(self.nobles) + sum(len(p.nobles) for p in self.players)
        if nobles != params.noble_count:
            errors.append(f"nobles: {nobles} accounted for, expected {params.noble_count}")

        for index, p in enumerate(self.players):
            if p.prestige != p.recompute_prestige():
                errors.append(f"player {index}: prestige cache {p.prestige} != {p.recompute_prestige()}")
            if p.bonus_counts != p.recompute_bonus_counts():
                errors.append(f"player {index}: stale bonus counts")
            if p.token_count > params.max_tokens:
                errors.append(f"player {index}: holds {p.token_count} tokens")
            if len(p.reserved) > params.max_reserved:
                errors.append(f"player {index}: {len(p.reserved)} reserved cards")
        return errors

    def to_dict(self) -> dict:
        """Convert to dictionary representation (full information)."""
        return {
            'params': self.params.to_dict(),
            'table_tokens': list(self.table_tokens),
            'decks': [[c.card_id for c in deck] for deck in self.decks],
            'face_up': [[c.card_id for c in row] for row in self.face_up],
            'nobles': [n.noble_id for n in self.nobles],
            'players': [p.to_dict() for p in self.players],
            'rng_state': self.rng.get_state(),
            'tick': self.tick,
            'current_player': self.current_player,
            'final_round': self.final_round,
            'passes': self.passes,
        }

    def fingerprint(self) -> str:
        """Stable digest of the full state."""
        return hashlib.sha256(repr(self.to_dict()).encode()).hexdigest()

