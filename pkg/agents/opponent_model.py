"""Opponent models used inside an agent's simulations."""

from typing import Optional

from core.budget import ForwardModel
from core.exceptions import BudgetExpiredError, StalemateError
from core.rng import GameRNG
from models.action import Action
from models.agent_config import AgentCommonConfig
from models.enums import OpponentModel
from models.game_state import GameState

from agents.base import Heuristic, PrestigeHeuristic
from agents.basic import osla_search

_DEFAULT_HEURISTIC = PrestigeHeuristic()


def opponent_step(
    state: GameState,
    opponent: int,
    om: OpponentModel,
    fm: ForwardModel,
    fraction: float,
    rng: GameRNG,
    heuristic: Optional[Heuristic] = None,
) -> Optional[Action]:
    """Let one opponent act on a simulated state.

    The model decides on a budget forked from ``fm`` (``fraction`` of its
    capacity, unspent units refunded); the chosen action is then applied
    through ``fm`` itself. ``om`` 0 does nothing and forks nothing, and a
    model that runs out of budget or finds no action also does nothing.

    Args:
        state: Simulated state, modified in place
        opponent: Seat of the acting opponent
        om: Opponent model (0 do-nothing, 1 random, 2 one-step look ahead)
        fm: Planning agent's forward model
        fraction: Share of ``fm``'s capacity lent to the model (omsb)
        rng: Planning agent's random stream

    Returns:
        The applied action, or None for a no-op

    Raises:
        BudgetExpiredError: If ``fm`` cannot pay for applying the action
    """
    om = OpponentModel(om)
    if om == OpponentModel.DO_NOTHING or fraction <= 0.0:
        return None

    with fm.fork(fraction) as model_fm:
        try:
            if om == OpponentModel.RANDOM:
                action = model_fm.random_action(state, opponent, rng.next64())
            else:
                action = osla_search(state, opponent, model_fm, heuristic or _DEFAULT_HEURISTIC, rng)
        except (BudgetExpiredError, StalemateError):
            action = None

    if action is None:
        return None
    fm.apply(state, action, validate=False)
    return action


def advance_opponents(
    state: GameState,
    player: int,
    fm: ForwardModel,
    config: AgentCommonConfig,
    rng: GameRNG,
    heuristic: Optional[Heuristic] = None,
):
    """Every opponent, in seat order after ``player``, takes one model action."""
    if config.opponent_model == OpponentModel.DO_NOTHING:
        return
    players = state.params.players
    for offset in range(1, players):
        opponent_step(
            state,
            (player + offset) % players,
            config.opponent_model,
            fm,
            config.opponent_budget,
            rng,
            heuristic,
        )
