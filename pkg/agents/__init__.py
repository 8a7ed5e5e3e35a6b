"""Statistical forward planning agents."""

from .base import Agent, PrestigeHeuristic
from .basic import OSLAAgent, RandomAgent
from .bmrh import BMRHAgent
from .factory import make_agent
from .mcts import MCTSAgent, ucb_value
from .mutation import mutation_point
from .opponent_model import opponent_step
from .srh import SRHAgent

__all__ = [
    'Agent',
    'PrestigeHeuristic',
    'RandomAgent',
    'OSLAAgent',
    'BMRHAgent',
    'SRHAgent',
    'MCTSAgent',
    'make_agent',
    'mutation_point',
    'opponent_step',
    'ucb_value',
]
