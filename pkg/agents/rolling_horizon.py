"""Shared (1+1) evolution loop of the rolling-horizon agents."""

from abc import abstractmethod
from typing import Callable, List, NamedTuple, Optional, Tuple

from core.budget import ForwardModel
from core.exceptions import BudgetExpiredError, StalemateError
from models.action import Action
from models.agent_config import AgentCommonConfig
from models.game_state import GameState

from agents.base import Agent, Heuristic, simulation_over
from agents.opponent_model import advance_opponents

GeneDecoder = Callable[[int, GameState], Action]


class Candidate(NamedTuple):
    """An evaluated individual."""
    genome: list
    actions: List[Action]
    value: float


class RollingHorizonAgent(Agent):
    """Evolves a plan of ``l`` own actions and plays its first action.

    The incumbent starts from a fresh (or shifted) individual; each of up to
    ``n`` offspring replaces it when its value is at least as high. Values
    are heuristic gains at the end of a rollout on a copy of the observed
    state, with opponents acting per the opponent model after every own
    action. An offspring cut short by the budget is discarded.

    Args:
        config: Agent hyper-parameters
        seed: Agent seed
        name: Label
        heuristic: State evaluation function
    """

    def __init__(
        self,
        config: AgentCommonConfig,
        seed: int = 0,
        name: Optional[str] = None,
        heuristic: Optional[Heuristic] = None,
    ):
        super().__init__(seed=seed, name=name, heuristic=heuristic)
        self.config = config
        self.buffer: list = []
        self.incumbent_values: List[float] = []

    def reset(self, game_seed: Optional[int] = None):
        super().reset(game_seed)
        self.buffer = []
        self.incumbent_values = []

    def act(self, state: GameState, player: int, fm: ForwardModel) -> Action:
        """Evolve a plan and return its first action.

        Raises:
            StalemateError: If the player has no legal action
            BudgetExpiredError: If the budget cannot pay for the first plan
        """
        base = self.heuristic(state, player)
        best = self._evaluate_initial(state, player, fm, base)
        self.incumbent_values = [best.value]

        for _ in range(self.config.max_evaluations):
            if fm.remaining <= 0:
                break
            try:
                candidate = self._evaluate_offspring(state, player, fm, best, base)
            except (BudgetExpiredError, StalemateError):
                break
            if candidate.value >= best.value:
                best = candidate
            self.incumbent_values.append(best.value)

        self.buffer = best.genome
        return best.actions[0]

    def shifted_buffer(self) -> list:
        """Previous decision's genome without its first gene (empty when disabled)."""
        if not self.config.shift_buffer or not self.buffer:
            return []
        return list(self.buffer[1:])

    def rollout(
        self,
        root: GameState,
        player: int,
        fm: ForwardModel,
        decode: GeneDecoder,
        base: float,
    ) -> Tuple[List[Action], float]:
        """Play up to ``l`` own actions on a copy of ``root``.

        A stalemate after the first action truncates the plan.

        Returns:
            The actions played and the heuristic gain they reach

        Raises:
            StalemateError: If no first action exists
        """
        state = fm.copy(root)
        actions = []
        for index in range(self.config.sequence_length):
            if index > 0 and simulation_over(state):
                break
            try:
                action = decode(index, state)
            except StalemateError:
                if index == 0:
                    raise
                break
            fm.apply(state, action, validate=False)
            actions.append(action)
            advance_opponents(state, player, fm, self.config, self.rng, self.heuristic)
        return actions, self.heuristic(state, player) - base

    @abstractmethod
    def _evaluate_initial(self, state: GameState, player: int, fm: ForwardModel, base: float) -> Candidate:
        """First incumbent of a decision."""

    @abstractmethod
    def _evaluate_offspring(
        self, state: GameState, player: int, fm: ForwardModel, parent: Candidate, base: float
    ) -> Candidate:
        """Mutated copy of the incumbent, evaluated."""
