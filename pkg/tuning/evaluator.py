"""Win-rate fitness of an agent configuration."""

from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from agents.factory import make_agent
from core.exceptions import UsageError
from core.game_engine import GameEngine
from core.rng import derive_seed
from data_management.content_loader import load_default_content
from models.content import ContentSet
from models.enums import AgentKind
from models.game_params import GameParams
from utils.parallel import parallel_map

OpponentSpec = Union[str, AgentKind, Tuple[str, Dict[str, Any]]]


def opponent_lineup(opponents: Sequence[OpponentSpec], players: int) -> List[Tuple[AgentKind, Dict[str, Any]]]:
    """Normalize opponents to P-1 (kind, params) pairs; a single opponent is replicated.

    Raises:
        UsageError: If the number of opponents does not fit the player count
    """
    lineup = []
    for spec in opponents:
        if isinstance(spec, (tuple, list)):
            kind, params = spec
        else:
            kind, params = spec, {}
        lineup.append((AgentKind(kind), dict(params or {})))
    if len(lineup) == 1:
        lineup = lineup * (players - 1)
    if len(lineup) != players - 1:
        raise UsageError(f"{len(lineup)} opponents for a {players}-player game")
    return lineup


class GameEvaluator:
    """One game per call: the configured agent against fixed opponents.

    The tuned agent sits in seat ``seed % P``, so consecutive seeds rotate
    it through every seat. Fitness is its win credit: 1/|winners| when among
    the winners, 0 otherwise (stalemates included).

    Args:
        agent_kind: Kind of the agent being evaluated
        opponents: Opponent kinds or (kind, params) pairs
        params: Game parameters (defaults when omitted)
        content: Content set (bundled content when omitted)
        max_ticks: Tick limit per game
        budget_per_tick: Forward-model units per decision
    """

    def __init__(
        self,
        agent_kind: Union[AgentKind, str],
        opponents: Sequence[OpponentSpec] = (AgentKind.OSLA,),
        params: Optional[GameParams] = None,
        content: Optional[ContentSet] = None,
        max_ticks: int = 300,
        budget_per_tick: int = 1000,
    ):
        self.agent_kind = AgentKind(agent_kind)
        self.params = params or GameParams()
        self.opponents = opponent_lineup(opponents, self.params.players)
        self.content = content
        self.max_ticks = max_ticks
        self.budget_per_tick = budget_per_tick

    def seat_for(self, seed: int) -> int:
        """Seat of the evaluated agent in the game played with ``seed``."""
        return seed % self.params.players

    def __call__(self, config: Dict[str, Any], seed: int) -> float:
        seat = self.seat_for(seed)
        agents = [
            make_agent(kind, params, seed=derive_seed(seed, index + 1))
            for index, (kind, params) in enumerate(self.opponents)
        ]
        agents.insert(seat, make_agent(self.agent_kind, config, seed=derive_seed(seed, 0)))
        engine = GameEngine(
            self.params,
            self.content or load_default_content(),
            max_ticks=self.max_ticks,
            budget_per_tick=self.budget_per_tick,
        )
        return engine.play(agents, seed).credit(seat)


def _evaluate_once(task) -> float:
    evaluator, config, seed = task
    return evaluator(config, seed)


def evaluate_config(
    agent_kind: Union[AgentKind, str],
    config: Dict[str, Any],
    n_games: int,
    opponents: Sequence[OpponentSpec],
    seed: int,
    params: Optional[GameParams] = None,
    content: Optional[ContentSet] = None,
    max_ticks: int = 300,
    budget_per_tick: int = 1000,
    jobs: int = 1,
    progress: bool = False,
) -> float:
    """Mean win credit of a configuration over seeded games with seat rotation.

    Game ``g`` uses seed ``seed + g``, so each seat is taken equally often
    (within one game).

    Raises:
        UsageError: If ``n_games`` is below 1
    """
    if n_games < 1:
        raise UsageError(f"n_games must be at least 1, got {n_games}")
    evaluator = GameEvaluator(
        agent_kind,
        opponents,
        params=params,
        content=content,
        max_ticks=max_ticks,
        budget_per_tick=budget_per_tick,
    )
    tasks = [(evaluator, config, seed + g) for g in range(n_games)]
    credits = parallel_map(_evaluate_once, tasks, jobs=jobs, desc=f"Evaluating {agent_kind}", progress=progress)
    return float(np.mean(credits))
