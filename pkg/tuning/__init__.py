"""Hyper-parameter tuning: search spaces, NTBEA, grid search and the game evaluator."""

from .search_space import Dimension, SearchSpace
from .ntbea import NTBEAResult, NTupleModel, ntbea_run
from .grid_search import GridEntry, grid_search
from .evaluator import GameEvaluator, evaluate_config

__all__ = [
    'Dimension',
    'SearchSpace',
    'NTBEAResult',
    'NTupleModel',
    'ntbea_run',
    'GridEntry',
    'grid_search',
    'GameEvaluator',
    'evaluate_config',
]
