"""N-Tuple Bandit Evolutionary Algorithm over a discrete search space."""

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from core.rng import GameRNG, derive_seed
from tuning.search_space import Point, SearchSpace
from utils.logger import get_logger

logger = get_logger(__name__)

Evaluator = Callable[[Dict[str, Any], int], float]


class NTupleModel:
    """Bandit statistics over sub-tuples of dimensions.

    Tracks every 1-tuple, every 2-tuple and the full N-tuple; for each
    tuple, a map from the value indices seen on it to (count, fitness sum).

    Args:
        dimensions: Number of dimensions of the search space
    """

    def __init__(self, dimensions: int):
        tuples = [(i,) for i in range(dimensions)]
        tuples += list(itertools.combinations(range(dimensions), 2))
        full = tuple(range(dimensions))
        if full not in tuples:
            tuples.append(full)
        self.tuples: List[Tuple[int, ...]] = tuples
        self.stats: List[Dict[Tuple[int, ...], List[float]]] = [{} for _ in tuples]
        self.total = 0

    @staticmethod
    def _key(point: Point, dims: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(point[d] for d in dims)

    def add(self, point: Point, fitness: float):
        """Record one fitness sample at a point."""
        for dims, table in zip(self.tuples, self.stats):
            entry = table.setdefault(self._key(point, dims), [0, 0.0])
            entry[0] += 1
            entry[1] += fitness
        self.total += 1

    def count(self, dims: Tuple[int, ...], values: Tuple[int, ...]) -> int:
        """Samples recorded for a value combination on a tuple."""
        entry = self.stats[self.tuples.index(dims)].get(values)
        return entry[0] if entry else 0

    def score(self, point: Point, k: float, epsilon: float = 1e-6) -> float:
        """Optimistic value of a point.

        Mean over tuples of the tuple mean (``k * sqrt(log(N + 1))`` for an
        unseen combination) plus the mean over tuples of
        ``k * sqrt(log(N + 1) / (count + epsilon))``, N being the number of
        samples recorded. With ``k = 0`` this is the plain model estimate.
        """
        log_total = math.log(self.total + 1)
        exploit = 0.0
        explore = 0.0
        for dims, table in zip(self.tuples, self.stats):
            entry = table.get(self._key(point, dims))
            count = entry[0] if entry else 0
            if count:
                exploit += entry[1] / count
            else:
                exploit += k * math.sqrt(log_total)
            if k:
                explore += k * math.sqrt(log_total / (count + epsilon))
        n = len(self.tuples)
        return exploit / n + explore / n

    def estimate(self, point: Point) -> float:
        """Model estimate of a point's fitness (no exploration bonus)."""
        return self.score(point, k=0.0)


@dataclass
class NTBEAResult:
    """Outcome of an NTBEA run."""
    best_point: Point
    best_config: Dict[str, Any]
    estimate: float
    history: List[Tuple[Point, float]] = field(default_factory=list)
    model: Optional[NTupleModel] = None

    @property
    def evaluations(self) -> int:
        return len(self.history)


def mutate_point(space: SearchSpace, point: Point, epsilon: float, rng: GameRNG) -> Point:
    """Neighbour of a point.

    Each dimension changes to a different value with probability
    ``epsilon``; when none changed, one random mutable dimension does.
    Dimensions with a single value never change.
    """
    mutable = [i for i, d in enumerate(space.dimensions) if len(d) > 1]
    if not mutable:
        return point
    child = list(point)
    changed = False
    for i in mutable:
        if rng.random() < epsilon:
            child[i] = _other_value(child[i], len(space.dimensions[i]), rng)
            changed = True
    if not changed:
        i = rng.choice(mutable)
        child[i] = _other_value(child[i], len(space.dimensions[i]), rng)
    return tuple(child)


def _other_value(current: int, size: int, rng: GameRNG) -> int:
    value = rng.randbelow(size - 1)
    return value + 1 if value >= current else value


def ntbea_run(
    space: SearchSpace,
    evaluator: Evaluator,
    budget: int,
    k: float = 1.0,
    epsilon: float = 0.2,
    neighbours: int = 50,
    seed: int = 0,
    ucb_epsilon: float = 1e-6,
    progress: bool = False,
) -> NTBEAResult:
    """Tune a configuration with NTBEA.

    Each of the ``budget`` iterations evaluates the current point once,
    updates the tuple statistics and moves to the best-scoring of
    ``neighbours`` mutated candidates. The recommendation is the evaluated
    point with the highest model estimate.

    Args:
        space: Search space
        evaluator: ``evaluator(config, seed)`` returning a fitness sample
        budget: Number of evaluations (at least 1)
        k: Exploration constant
        epsilon: Per-dimension mutation probability
        neighbours: Candidates scored per iteration
        seed: Seed for the search and the evaluation seeds
        ucb_epsilon: Added to tuple counts in the exploration term
        progress: Show a progress bar

    Returns:
        NTBEAResult
    """
    if budget < 1:
        raise ValueError(f"NTBEA budget must be at least 1, got {budget}")
    if neighbours < 1:
        raise ValueError(f"neighbours must be at least 1, got {neighbours}")

    rng = GameRNG(seed)
    model = NTupleModel(len(space))
    history: List[Tuple[Point, float]] = []
    current = space.random_point(rng)

    for iteration in tqdm(range(budget), desc="NTBEA", disable=not progress):
        fitness = float(evaluator(space.config_at(current), derive_seed(seed, iteration)))
        model.add(current, fitness)
        history.append((current, fitness))
        if iteration == budget - 1:
            break

        best_candidate = None
        best_score = -math.inf
        for _ in range(neighbours):
            candidate = mutate_point(space, current, epsilon, rng)
            score = model.score(candidate, k, ucb_epsilon)
            if score > best_score:
                best_candidate, best_score = candidate, score
        current = best_candidate

    evaluated = list(dict.fromkeys(point for point, _ in history))
    best_point = max(evaluated, key=model.estimate)
    result = NTBEAResult(
        best_point=best_point,
        best_config=space.config_at(best_point),
        estimate=model.estimate(best_point),
        history=history,
        model=model,
    )
    logger.info(
        "NTBEA finished",
        evaluations=budget,
        distinct_points=len(evaluated),
        estimate=round(result.estimate, 4),
        config=result.best_config,
    )
    return result
