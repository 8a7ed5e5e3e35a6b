"""Exhaustive (or sub-sampled) evaluation of a search space."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from core.rng import GameRNG, derive_seed
from tuning.ntbea import Evaluator
from tuning.search_space import Point, SearchSpace
from utils.logger import get_logger
from utils.parallel import parallel_map

logger = get_logger(__name__)


@dataclass(frozen=True)
class GridEntry:
    """Win rate of one configuration."""
    point: Point
    config: Dict[str, Any]
    win_rate: float
    games: int

    def to_dict(self) -> dict:
        """Flat dictionary suitable for a CSV row (without the rank)."""
        row = {'win_rate': self.win_rate, 'games': self.games}
        row.update(self.config)
        return row


def _evaluate_point(task) -> float:
    evaluator, config, base_seed, games = task
    return float(np.mean([evaluator(config, base_seed + g) for g in range(games)]))


def grid_search(
    space: SearchSpace,
    evaluator: Evaluator,
    games_per_config: int,
    seed: int = 0,
    sample: Optional[int] = None,
    jobs: int = 1,
    progress: bool = False,
) -> List[GridEntry]:
    """Evaluate configurations and rank them by win rate.

    Configuration ``i`` plays games with seeds ``derive_seed(seed, i) + g``.

    Args:
        space: Search space
        evaluator: ``evaluator(config, seed)`` returning one fitness sample
        games_per_config: Samples per configuration
        seed: Base seed
        sample: Evaluate only this many distinct random configurations
        jobs: Worker processes (configurations run in parallel)
        progress: Show a progress bar

    Returns:
        Entries sorted by win rate, best first; ties keep enumeration order
    """
    if games_per_config < 1:
        raise ValueError(f"games_per_config must be at least 1, got {games_per_config}")
    if sample is not None:
        points = space.sample_points(sample, GameRNG(seed))
    else:
        points = list(space.points())

    tasks = [
        (evaluator, space.config_at(point), derive_seed(seed, index), games_per_config)
        for index, point in enumerate(points)
    ]
    logger.info("Grid search started", configs=len(points), games_per_config=games_per_config, jobs=jobs)
    rates = parallel_map(_evaluate_point, tasks, jobs=jobs, desc="Grid search", progress=progress)

    entries = [
        GridEntry(point=point, config=task[1], win_rate=rate, games=games_per_config)
        for point, task, rate in zip(points, tasks, rates)
    ]
    entries.sort(key=lambda entry: -entry.win_rate)
    if entries:
        logger.info(
            "Grid search finished",
            configs=len(entries),
            best_win_rate=round(entries[0].win_rate, 4),
            best_config=entries[0].config,
        )
    return entries
