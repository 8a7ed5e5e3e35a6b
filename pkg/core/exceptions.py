"""Exceptions raised by the game engine and forward model."""

from typing import Optional


class EngineError(Exception):
    """Base class for all engine errors."""
    pass


class SetupError(EngineError, ValueError):
    """Invalid game parameters or content set."""
    pass


class UsageError(EngineError, ValueError):
    """API misuse, e.g. a player index out of range."""
    pass


class RuleViolationError(EngineError):
    """An action breaks a game rule.

    Attributes:
        rule: Short name of the violated rule (e.g. 'pick_same_min_stack')
    """

    def __init__(self, rule: str, message: Optional[str] = None):
        self.rule = rule
        super().__init__(f"{rule}: {message}" if message else rule)


class StalemateError(EngineError):
    """No random action generator can produce an action for the player."""

    def __init__(self, player: int, tick: int):
        self.player = player
        self.tick = tick
        super().__init__(f"Player {player} has no legal action at tick {tick}")


class BudgetExpiredError(EngineError):
    """A forward-model call was made with an exhausted budget."""

    def __init__(self, capacity: int, used: int):
        self.capacity = capacity
        self.used = used
        super().__init__(f"Budget expired ({used}/{capacity} units used)")
