"""Summary statistics for experiment results."""

import math
from typing import Dict, List, Sequence

import numpy as np
from scipy import stats

from models.game_result import GameResult


def win_rate(wins: float, games: int) -> float:
    """Win credit per game; 0.0 for no games."""
    if games <= 0:
        return 0.0
    return wins / games


def std_err(rate: float, games: int) -> float:
    """Standard error of a win rate: sqrt(p(1 - p) / n)."""
    if games <= 0:
        return 0.0
    return math.sqrt(max(rate * (1.0 - rate), 0.0) / games)


def duration_stats(results: Sequence[GameResult]) -> Dict[str, float]:
    """Mean, standard deviation, min and max game length in ticks."""
    if not results:
        return {'mean': 0.0, 'sd': 0.0, 'min': 0, 'max': 0}
    ticks = np.array([r.ticks for r in results], dtype=float)
    return {
        'mean': float(ticks.mean()),
        'sd': float(ticks.std(ddof=1)) if len(ticks) > 1 else 0.0,
        'min': int(ticks.min()),
        'max': int(ticks.max()),
    }


def stalemate_rate(results: Sequence[GameResult]) -> float:
    """Fraction of games that ended in a stalemate."""
    if not results:
        return 0.0
    return sum(1 for r in results if r.is_stalemate) / len(results)


def seat_credits(results: Sequence[GameResult], players: int) -> List[float]:
    """Summed win credit per seat."""
    credits = [0.0] * players
    for result in results:
        for seat in result.winners:
            credits[seat] += result.credit(seat)
    return credits


def equal_rates_pvalue(credits: Sequence[float]) -> float:
    """Chi-square p-value for the hypothesis that all competitors win equally often.

    Returns:
        p-value, or 1.0 when no game was won
    """
    observed = np.asarray(credits, dtype=float)
    if len(observed) < 2 or observed.sum() <= 0:
        return 1.0
    return float(stats.chisquare(observed).pvalue)
