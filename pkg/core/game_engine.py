"""Turn loop: determinized observation, metered decisions, end conditions."""

from typing import Callable, List, Optional, Sequence, Set

from core import rules
from core.action_generators import legal_kinds, random_action
from core.budget import Budget, ForwardModel
from core.exceptions import RuleViolationError, StalemateError, UsageError
from core.game_setup import copy_for_player, new_game
from core.rng import derive_seed
from models.action import Action
from models.content import ContentSet
from models.enums import GameOutcome, GameStatus
from models.game_params import GameParams
from models.game_result import GameResult
from models.game_state import GameState
from utils.config import get_config
from utils.logger import get_logger

logger = get_logger(__name__)

TurnCallback = Callable[[GameState, Action], None]


def is_game_over(state: GameState) -> GameStatus:
    """Update the final-round flag and report the end-condition status.

    Once any player reaches PP prestige the round is completed; the game is
    over when the turn pointer wraps back to player 0.
    """
    if not state.final_round:
        threshold = state.params.prestige_points
        if any(p.prestige >= threshold for p in state.players):
            state.final_round = True
    if not state.final_round:
        return GameStatus.CONTINUE
    if state.current_player == 0:
        return GameStatus.OVER
    return GameStatus.FINAL_ROUND


def determine_winners(state: GameState) -> Set[int]:
    """Players with maximum prestige, ties broken by fewer purchased cards.

    Remaining ties all win.
    """
    best = max(p.prestige for p in state.players)
    leaders = [i for i, p in enumerate(state.players) if p.prestige == best]
    fewest = min(state.players[i].card_count for i in leaders)
    return {i for i in leaders if state.players[i].card_count == fewest}


def any_player_can_act(state: GameState) -> bool:
    """Check if at least one player has a legal action (exhaustive scan)."""
    return any(legal_kinds(state, player) for player in range(state.params.players))


class GameEngine:
    """Plays games between agents.

    Each turn the player to move receives a determinized copy of the state
    and a forward model on a fresh budget. Illegal actions and agent
    failures are replaced by an engine-generated random action. A player
    with no legal action passes; the game is a stalemate only when no
    player can act.

    Args:
        params: Game parameters
        content: Cards and nobles
        max_ticks: Tick limit (configured default when omitted)
        budget_per_tick: Forward-model units per decision (configured default when omitted)
    """

    def __init__(
        self,
        params: GameParams,
        content: ContentSet,
        max_ticks: Optional[int] = None,
        budget_per_tick: Optional[int] = None,
    ):
        config = get_config()
        self.params = params
        self.content = content
        self.max_ticks = max_ticks if max_ticks is not None else config.get('engine.max_ticks', 300)
        self.budget_per_tick = (
            budget_per_tick if budget_per_tick is not None
            else config.get('engine.budget_per_tick', 1000)
        )
        if self.max_ticks <= 0:
            raise UsageError(f"max_ticks must be positive, got {self.max_ticks}")
        if self.budget_per_tick < 0:
            raise UsageError(f"budget_per_tick must be non-negative, got {self.budget_per_tick}")

    def play(
        self,
        agents: Sequence,
        seed: int,
        on_turn: Optional[TurnCallback] = None,
    ) -> GameResult:
        """Play one game.

        Args:
            agents: One agent per seat
            seed: Game seed
            on_turn: Called with (state, action) after every applied action

        Returns:
            Game result

        Raises:
            UsageError: If the number of agents differs from P
        """
        if len(agents) != self.params.players:
            raise UsageError(f"{len(agents)} agents for {self.params.players} players")

        state = new_game(self.params, self.content, seed)
        for seat, agent in enumerate(agents):
            agent.reset(derive_seed(seed, seat))

        outcome = GameOutcome.TIMEOUT
        while state.tick < self.max_ticks:
            player = state.current_player
            view_seed = state.rng.next_seed()
            fallback_seed = state.rng.next_seed()

            action = self._decide(agents[player], state, player, view_seed)
            if action is None:
                try:
                    action = random_action(state, player, fallback_seed)
                except StalemateError:
                    if not any_player_can_act(state):
                        outcome = GameOutcome.STALEMATE
                        break
                    rules.pass_turn(state, player)
                    logger.debug("Turn passed", player=player, tick=state.tick)

            if action is not None:
                rules.apply(state, action, validate=False)
                if on_turn is not None:
                    on_turn(state, action)
            if is_game_over(state) == GameStatus.OVER:
                outcome = GameOutcome.NORMAL
                break

        winners = frozenset() if outcome == GameOutcome.STALEMATE else frozenset(determine_winners(state))
        result = GameResult(
            winners=winners,
            prestige=[p.prestige for p in state.players],
            card_counts=[p.card_count for p in state.players],
            ticks=state.tick,
            outcome=outcome,
            seed=seed,
            agent_labels=[getattr(a, 'name', type(a).__name__) for a in agents],
            passes=state.passes,
        )
        logger.debug(
            "Game finished",
            seed=seed,
            outcome=str(outcome),
            ticks=state.tick,
            winners=sorted(winners),
        )
        return result

    def _decide(self, agent, state: GameState, player: int, view_seed: int) -> Optional[Action]:
        """Agent decision validated against the real state, or None to fall back."""
        view = copy_for_player(state, player, view_seed)
        fm = ForwardModel(Budget(self.budget_per_tick))
        action = None
        try:
            action = agent.act(view, player, fm)
            if not isinstance(action, Action):
                raise RuleViolationError('not_an_action', f"agent returned {type(action).__name__}")
            if action.player != player:
                raise RuleViolationError('wrong_player', f"action for player {action.player}")
            rules.validate_action(state, action)
            return action
        except StalemateError:
            return None
        except RuleViolationError as exc:
            logger.warning(
                "Illegal action replaced",
                agent=getattr(agent, 'name', type(agent).__name__),
                player=player,
                tick=state.tick,
                rule=exc.rule,
                action=action.describe() if isinstance(action, Action) else repr(action),
            )
        except Exception as exc:
            logger.warning(
                "Agent failed, random action used",
                agent=getattr(agent, 'name', type(agent).__name__),
                player=player,
                tick=state.tick,
                error=repr(exc),
            )
        return None


def run_game(
    params: GameParams,
    content: ContentSet,
    agents: Sequence,
    seed: int,
    max_ticks: int = 300,
    budget_per_tick: int = 1000,
    on_turn: Optional[TurnCallback] = None,
) -> GameResult:
    """Play one game; functional form of :meth:`GameEngine.play`."""
    engine = GameEngine(params, content, max_ticks=max_ticks, budget_per_tick=budget_per_tick)
    return engine.play(agents, seed, on_turn=on_turn)
