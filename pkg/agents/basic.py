"""Random and one-step look-ahead agents."""

from typing import Optional

from core.budget import ForwardModel
from core.exceptions import StalemateError
from core.rng import GameRNG
from models.action import Action
from models.enums import AgentKind
from models.game_state import GameState

from agents.base import Agent, Heuristic


def osla_search(
    state: GameState,
    player: int,
    fm: ForwardModel,
    heuristic: Heuristic,
    rng: GameRNG,
) -> Optional[Action]:
    """Sample and evaluate random actions while at least 2 units remain.

    Each candidate costs one unit to sample and one to apply to a copy.
    The first action with the highest heuristic gain wins.

    Returns:
        Best action, or None if nothing could be evaluated
    """
    base = heuristic(state, player)
    best = None
    best_gain = float('-inf')
    while fm.remaining >= 2:
        try:
            action = fm.random_action(state, player, rng.next64())
        except StalemateError:
            break
        child = fm.copy(state)
        fm.apply(child, action, validate=False)
        gain = heuristic(child, player) - base
        if gain > best_gain:
            best, best_gain = action, gain
    return best


class RandomAgent(Agent):
    """Plays the first random action generated (1 unit)."""

    kind = AgentKind.RND

    def act(self, state: GameState, player: int, fm: ForwardModel) -> Action:
        return fm.random_action(state, player, self.rng.next64())


class OSLAAgent(Agent):
    """One-step look ahead: best of as many sampled actions as the budget allows."""

    kind = AgentKind.OSLA

    def act(self, state: GameState, player: int, fm: ForwardModel) -> Action:
        action = osla_search(state, player, fm, self.heuristic, self.rng)
        if action is None:
            # Budget below 2 units: nothing evaluated
            action = fm.random_action(state, player, self.rng.next64())
        return action
