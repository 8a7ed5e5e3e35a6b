"""Seeding rolling horizon agent."""

from typing import List, Optional

from core.budget import ForwardModel
from models.action import Action
from models.agent_config import SRHConfig
from models.enums import AgentKind
from models.game_state import GameState

from agents.base import Heuristic
from agents.rolling_horizon import Candidate, RollingHorizonAgent


class SRHAgent(RollingHorizonAgent):
    """Rolling horizon over vectors of 64-bit seeds.

    Gene ``i`` is decoded into an action by feeding it to the random action
    generator on the state reached after the first ``i`` actions, so the
    same genome always decodes to a legal plan.
    """

    kind = AgentKind.SRH

    def __init__(
        self,
        config: Optional[SRHConfig] = None,
        seed: int = 0,
        name: Optional[str] = None,
        heuristic: Optional[Heuristic] = None,
    ):
        super().__init__(config or SRHConfig(), seed=seed, name=name, heuristic=heuristic)

    def mutate(self, genome: List[int]) -> List[int]:
        """Copy of a genome with fresh seeds in mutated genes.

        ``mo`` replaces exactly one uniformly chosen gene; otherwise each gene
        is replaced with probability ``mr``.
        """
        child = list(genome)
        if self.config.mutate_once:
            child[self.rng.randbelow(len(child))] = self.rng.next64()
        else:
            for index in range(len(child)):
                if self.rng.random() < self.config.mutation_rate:
                    child[index] = self.rng.next64()
        return child

    def _evaluate(
        self, state: GameState, player: int, fm: ForwardModel, genome: List[int], base: float
    ) -> Candidate:
        def decode(index: int, sim: GameState) -> Action:
            return fm.random_action(sim, player, genome[index])

        actions, value = self.rollout(state, player, fm, decode, base)
        return Candidate(genome=genome, actions=actions, value=value)

    def _evaluate_initial(self, state: GameState, player: int, fm: ForwardModel, base: float) -> Candidate:
        genome = self.shifted_buffer()
        while len(genome) < self.config.sequence_length:
            genome.append(self.rng.next64())
        return self._evaluate(state, player, fm, genome, base)

    def _evaluate_offspring(
        self, state: GameState, player: int, fm: ForwardModel, parent: Candidate, base: float
    ) -> Candidate:
        return self._evaluate(state, player, fm, self.mutate(parent.genome), base)
