"""Agent interface and evaluation heuristic."""

from abc import ABC, abstractmethod
from typing import Callable, Optional

from core.budget import ForwardModel
from core.rng import GameRNG, derive_seed
from models.action import Action
from models.enums import AgentKind
from models.game_state import GameState

Heuristic = Callable[[GameState, int], float]


class PrestigeHeuristic:
    """State value for a player: their prestige points."""

    def __call__(self, state: GameState, player: int) -> float:
        return float(state.players[player].prestige)

    def __repr__(self) -> str:
        return "PrestigeHeuristic()"


def simulation_over(state: GameState) -> bool:
    """Check if a simulated state has reached the end-game threshold."""
    threshold = state.params.prestige_points
    return state.final_round or any(p.prestige >= threshold for p in state.players)


class Agent(ABC):
    """Game-playing agent.

    Each agent owns its random stream. ``reset`` is called by the engine at
    the start of every game, so a game is reproducible from the agent seed
    and the game seed alone.

    Args:
        seed: Agent seed
        name: Label used in logs and result files (kind name when omitted)
        heuristic: State evaluation function
    """

    kind: AgentKind

    def __init__(self, seed: int = 0, name: Optional[str] = None, heuristic: Optional[Heuristic] = None):
        self.seed = seed
        self.name = name or str(self.kind)
        self.heuristic = heuristic or PrestigeHeuristic()
        self.rng = GameRNG(seed)

    def reset(self, game_seed: Optional[int] = None):
        """Prepare for a new game.

        Args:
            game_seed: Mixed into the agent seed when given
        """
        seed = self.seed if game_seed is None else derive_seed(self.seed, game_seed)
        self.rng = GameRNG(seed)

    @abstractmethod
    def act(self, state: GameState, player: int, fm: ForwardModel) -> Action:
        """Choose an action.

        Args:
            state: Determinized copy of the game state (may be modified)
            player: Seat of this agent
            fm: Budget-metered forward model

        Returns:
            The chosen action
        """

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, seed={self.seed})"
