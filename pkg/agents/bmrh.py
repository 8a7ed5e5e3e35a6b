"""Branching-mutation rolling horizon agent."""

from typing import List, Optional

from core.budget import ForwardModel
from core.rules import is_legal
from models.action import Action
from models.agent_config import BMRHConfig
from models.enums import AgentKind
from models.game_state import GameState

from agents.base import Heuristic
from agents.mutation import mutation_point
from agents.rolling_horizon import Candidate, RollingHorizonAgent


class BMRHAgent(RollingHorizonAgent):
    """Rolling horizon over action sequences with branching mutation.

    An offspring keeps the incumbent's actions before a sampled branch point,
    replays them (an action no longer legal becomes the branch point) and
    samples fresh random actions from the branch point on.
    """

    kind = AgentKind.BMRH

    def __init__(
        self,
        config: Optional[BMRHConfig] = None,
        seed: int = 0,
        name: Optional[str] = None,
        heuristic: Optional[Heuristic] = None,
    ):
        super().__init__(config or BMRHConfig(), seed=seed, name=name, heuristic=heuristic)

    def branch_point(self) -> int:
        """Sampled branch point; with ``mo`` off, extra points are drawn while a coin lands heads and the earliest wins."""
        cfg = self.config
        point = mutation_point(
            cfg.mutation_scheme, cfg.sequence_length, cfg.decay, cfg.gauss_mean, cfg.gauss_std, self.rng
        )
        if not cfg.mutate_once:
            while self.rng.random() < 0.5:
                extra = mutation_point(
                    cfg.mutation_scheme, cfg.sequence_length, cfg.decay, cfg.gauss_mean, cfg.gauss_std, self.rng
                )
                point = min(point, extra)
        return point

    def _evaluate(
        self, state: GameState, player: int, fm: ForwardModel, prefix: List[Action], point: int, base: float
    ) -> Candidate:
        keep = min(point, len(prefix))

        def decode(index: int, sim: GameState) -> Action:
            if index < keep and is_legal(sim, prefix[index]):
                return prefix[index]
            return fm.random_action(sim, player, self.rng.next64())

        actions, value = self.rollout(state, player, fm, decode, base)
        return Candidate(genome=actions, actions=actions, value=value)

    def _evaluate_initial(self, state: GameState, player: int, fm: ForwardModel, base: float) -> Candidate:
        prefix = self.shifted_buffer()
        return self._evaluate(state, player, fm, prefix, len(prefix), base)

    def _evaluate_offspring(
        self, state: GameState, player: int, fm: ForwardModel, parent: Candidate, base: float
    ) -> Candidate:
        return self._evaluate(state, player, fm, parent.actions, self.branch_point(), base)
