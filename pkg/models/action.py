"""Action value objects."""

from dataclasses import dataclass
from typing import Tuple

from models.enums import ActionKind


@dataclass(frozen=True)
class Action:
    """One active action of a player.

    Payload by kind:
        PICK_DIFFERENT: ``suits`` holds the distinct suits picked
        PICK_SAME: ``suits`` holds the single suit picked
        RESERVE_TABLE / BUY_TABLE: ``deck`` and face-up ``slot``
        RESERVE_DECK: ``deck``
        BUY_RESERVED: ``slot`` indexes the player's reserved cards

    ``give_back`` is a token vector returned to the table after the effect
    (empty tuple when nothing is returned); ``payment`` is the token vector
    paid by buy actions. Actions are hashable so identical samples can be
    de-duplicated.
    """
    kind: ActionKind
    player: int
    suits: Tuple[int, ...] = ()
    deck: int = -1
    slot: int = -1
    give_back: Tuple[int, ...] = ()
    payment: Tuple[int, ...] = ()

    @property
    def returns_tokens(self) -> bool:
        """Check if the action gives tokens back."""
        return any(self.give_back)

    def describe(self) -> str:
        """Short human-readable form used in logs."""
        if self.kind.is_pick:
            target = "suits=" + ",".join(str(s) for s in self.suits)
        elif self.kind == ActionKind.RESERVE_DECK:
            target = f"deck={self.deck}"
        elif self.kind == ActionKind.BUY_RESERVED:
            target = f"reserved={self.slot}"
        else:
            target = f"deck={self.deck} slot={self.slot}"
        extra = f" give_back={list(self.give_back)}" if self.returns_tokens else ""
        return f"p{self.player} {self.kind} {target}{extra}"
