"""Enumerations for the game engine, agents and experiments."""

from enum import Enum, IntEnum


class ActionKind(str, Enum):
    """The six active action kinds."""
    PICK_DIFFERENT = "pick_different"
    PICK_SAME = "pick_same"
    RESERVE_TABLE = "reserve_table"
    RESERVE_DECK = "reserve_deck"
    BUY_TABLE = "buy_table"
    BUY_RESERVED = "buy_reserved"

    def __str__(self) -> str:
        return self.value

    @property
    def is_pick(self) -> bool:
        """Check if the action takes tokens from the table."""
        return self in (ActionKind.PICK_DIFFERENT, ActionKind.PICK_SAME)

    @property
    def is_reserve(self) -> bool:
        """Check if the action reserves a card."""
        return self in (ActionKind.RESERVE_TABLE, ActionKind.RESERVE_DECK)

    @property
    def is_buy(self) -> bool:
        """Check if the action buys a card."""
        return self in (ActionKind.BUY_TABLE, ActionKind.BUY_RESERVED)


class GameOutcome(str, Enum):
    """How a game ended.

    NORMAL: the final round completed after a player reached the prestige threshold
    STALEMATE: no player had a legal action of any kind
    TIMEOUT: the tick limit was reached first
    """
    NORMAL = "normal"
    STALEMATE = "stalemate"
    TIMEOUT = "timeout"

    def __str__(self) -> str:
        return self.value


class GameStatus(str, Enum):
    """End-condition status reported after each turn."""
    CONTINUE = "continue"
    FINAL_ROUND = "final_round"
    OVER = "over"

    def __str__(self) -> str:
        return self.value


class OpponentModel(IntEnum):
    """Policy used for opponents inside an agent's simulations (om)."""
    DO_NOTHING = 0
    RANDOM = 1
    ONE_STEP_LOOK_AHEAD = 2


class MutationScheme(IntEnum):
    """Distribution of the branching-mutation point (ms)."""
    UNIFORM = 0
    EXPONENTIAL_DECAY = 1
    GAUSSIAN = 2


class Recommendation(IntEnum):
    """MCTS final move selection policy (rt)."""
    MAX_CHILD = 0
    ROBUST_CHILD = 1
    SECURE_CHILD = 2


class AgentKind(str, Enum):
    """Agents that can be built from a configuration."""
    RND = "rnd"
    OSLA = "osla"
    BMRH = "bmrh"
    SRH = "srh"
    MCTS = "mcts"

    def __str__(self) -> str:
        return self.value

    @property
    def is_tunable(self) -> bool:
        """Check if the agent has hyper-parameters to tune."""
        return self in (AgentKind.BMRH, AgentKind.SRH, AgentKind.MCTS)


class ExperimentKind(str, Enum):
    """Commands of the experiment harness."""
    PLAY = "play"
    BENCH = "bench"
    GRID = "grid"
    TUNE = "tune"
    MATCH = "match"
    ROUNDROBIN = "roundrobin"

    def __str__(self) -> str:
        return self.value
