"""Forward-model throughput measurement."""

import time
from dataclasses import dataclass
from typing import Optional

from core import rules
from core.action_generators import random_action
from core.exceptions import StalemateError
from core.game_engine import any_player_can_act, is_game_over
from core.game_setup import new_game
from core.rng import derive_seed
from data_management.content_loader import load_default_content
from models.content import ContentSet
from models.enums import GameStatus
from models.game_params import GameParams
from utils.logger import get_logger
from utils.parallel import parallel_map

logger = get_logger(__name__)


@dataclass(frozen=True)
class ThroughputReport:
    """Result of a throughput run."""
    seconds: float
    states: int
    games: int
    stalemates: int

    @property
    def states_per_second(self) -> float:
        """Applied actions per wall-clock second."""
        return self.states / self.seconds if self.seconds > 0 else 0.0

    @property
    def games_per_second(self) -> float:
        """Completed games per wall-clock second."""
        return self.games / self.seconds if self.seconds > 0 else 0.0

    def to_dict(self) -> dict:
        """Flat dictionary suitable for a CSV row."""
        return {
            'seconds': round(self.seconds, 6),
            'states': self.states,
            'games': self.games,
            'states_per_second': round(self.states_per_second, 3),
            'games_per_second': round(self.games_per_second, 3),
            'stalemates': self.stalemates,
        }


def _random_games(task) -> ThroughputReport:
    """One worker: random-action games back to back until the deadline."""
    params, seconds, content, seed, max_ticks = task
    content = content or load_default_content()
    states = games = stalemates = 0
    start = time.perf_counter()
    deadline = start + seconds

    while time.perf_counter() < deadline:
        state = new_game(params, content, derive_seed(seed, games))
        finished = False
        while state.tick < max_ticks:
            player = state.current_player
            try:
                action = random_action(state, player, state.rng.next_seed())
            except StalemateError:
                if not any_player_can_act(state):
                    stalemates += 1
                    finished = True
                    break
                rules.pass_turn(state, player)
                continue
            rules.apply(state, action, validate=False)
            states += 1
            if is_game_over(state) == GameStatus.OVER:
                finished = True
                break
            if states % 256 == 0 and time.perf_counter() >= deadline:
                break
        else:
            finished = True
        if finished:
            games += 1

    return ThroughputReport(
        seconds=time.perf_counter() - start,
        states=states,
        games=games,
        stalemates=stalemates,
    )


def bench_throughput(
    params: GameParams,
    seconds: float,
    content: Optional[ContentSet] = None,
    seed: int = 0,
    max_ticks: int = 300,
    jobs: int = 1,
) -> ThroughputReport:
    """Run random-action games back to back and count applied actions.

    With ``jobs > 1`` every worker process plays its own stream of games
    for ``seconds``; counts are summed and divided by the wall-clock time
    of the whole run.

    Args:
        params: Game parameters
        seconds: Wall-clock duration; the game in progress at the deadline
            is abandoned and not counted as a game
        content: Content set (bundled content when omitted)
        seed: Base seed; game ``g`` uses ``derive_seed(seed, g)`` (worker
            ``w`` uses ``derive_seed(seed, w)`` as its base when ``jobs > 1``)
        max_ticks: Tick limit per game
        jobs: Worker processes

    Returns:
        ThroughputReport
    """
    if jobs <= 1:
        report = _random_games((params, seconds, content, seed, max_ticks))
    else:
        start = time.perf_counter()
        tasks = [(params, seconds, content, derive_seed(seed, worker), max_ticks) for worker in range(jobs)]
        parts = parallel_map(_random_games, tasks, jobs=jobs)
        report = ThroughputReport(
            seconds=time.perf_counter() - start,
            states=sum(p.states for p in parts),
            games=sum(p.games for p in parts),
            stalemates=sum(p.stalemates for p in parts),
        )
    logger.info(
        "Throughput measured",
        states_per_second=round(report.states_per_second, 1),
        games_per_second=round(report.games_per_second, 2),
        games=report.games,
        stalemates=report.stalemates,
        jobs=jobs,
    )
    return report
