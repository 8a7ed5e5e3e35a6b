"""Budget-metered forward model handed to agents each turn.

Every simulated action application and every random-action-generator draw
on a simulated state costs one unit. State copies are free. A budget can
delegate part of its capacity to a child meter (e.g. for opponent models);
units the child leaves unspent return to the parent on release.
"""

import math
from typing import Optional

from core import action_generators, rules
from core.exceptions import BudgetExpiredError, UsageError
from models.action import Action
from models.enums import ActionKind
from models.game_state import GameState


class Budget:
    """Forward-model call meter.

    Args:
        capacity: Units available
        parent: Budget this one was forked from, refunded on release
    """

    __slots__ = ('capacity', 'used', 'parent', 'released')

    def __init__(self, capacity: int, parent: Optional['Budget'] = None):
        if capacity < 0:
            raise UsageError(f"Budget capacity must be non-negative, got {capacity}")
        self.capacity = capacity
        self.used = 0
        self.parent = parent
        self.released = False

    @property
    def remaining(self) -> int:
        """Units still available."""
        if self.released:
            return 0
        return self.capacity - self.used

    @property
    def expired(self) -> bool:
        """Check if no unit is left."""
        return self.remaining <= 0

    def consume(self, units: int = 1):
        """Spend units.

        Raises:
            BudgetExpiredError: If fewer than ``units`` remain; nothing is spent
        """
        if units > self.remaining:
            raise BudgetExpiredError(self.capacity, self.used)
        self.used += units

    def fork(self, fraction: float) -> 'Budget':
        """Reserve ``ceil(fraction * capacity)`` units for a child meter.

        The child gets whatever remains when the parent is short (possibly 0).

        Raises:
            UsageError: If fraction is outside (0, 1]
        """
        if not 0.0 < fraction <= 1.0:
            raise UsageError(f"Fork fraction must be in (0, 1], got {fraction}")
        # round() absorbs float noise such as 0.07 * 1000 = 70.00000000000001
        size = min(math.ceil(round(fraction * self.capacity, 9)), self.remaining)
        self.used += size
        return Budget(size, parent=self)

    def release(self) -> int:
        """Return unspent units to the parent and close this meter.

        Returns:
            Units refunded (0 for a root budget or a second release)
        """
        if self.released:
            return 0
        refund = self.capacity - self.used
        if self.parent is not None:
            self.parent.used -= refund
        self.released = True
        return refund if self.parent is not None else 0

    def __enter__(self) -> 'Budget':
        return self

    def __exit__(self, exc_type, exc, tb):
        self.release()
        return False

    def __repr__(self) -> str:
        return f"Budget(capacity={self.capacity}, used={self.used})"


def budget_fork(parent: Budget, fraction: float) -> Budget:
    """Functional form of :meth:`Budget.fork`."""
    return parent.fork(fraction)


class ForwardModel:
    """Rules engine access for agents, metered by a :class:`Budget`.

    Args:
        budget: Meter charged one unit per apply or generator call
    """

    __slots__ = ('budget',)

    def __init__(self, budget: Budget):
        self.budget = budget

    @property
    def remaining(self) -> int:
        """Units left on the attached budget."""
        return self.budget.remaining

    def apply(self, state: GameState, action: Action, validate: bool = True) -> GameState:
        """Apply an action to a simulated state in place (1 unit)."""
        self.budget.consume()
        return rules.apply(state, action, validate=validate)

    def random_action(self, state: GameState, player: int, seed: int) -> Action:
        """Random action from the six generators (1 unit).

        Raises:
            StalemateError: If the player has no legal action
        """
        self.budget.consume()
        return action_generators.random_action(state, player, seed)

    def generate(self, kind: ActionKind, state: GameState, player: int, seed: int) -> Optional[Action]:
        """Random action of one kind, or None (1 unit)."""
        self.budget.consume()
        return action_generators.rag_generate(kind, state, player, seed)

    @staticmethod
    def copy(state: GameState) -> GameState:
        """Deep copy of a state (free)."""
        return state.copy()

    def fork(self, fraction: float) -> 'ForwardModel':
        """Forward model on a child budget; use as a context manager to release it."""
        return ForwardModel(self.budget.fork(fraction))

    def __enter__(self) -> 'ForwardModel':
        return self

    def __exit__(self, exc_type, exc, tb):
        self.budget.release()
        return False
