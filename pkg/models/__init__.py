"""Data models for the game engine, agents and experiments."""

from .enums import (
    ActionKind,
    AgentKind,
    ExperimentKind,
    GameOutcome,
    GameStatus,
    MutationScheme,
    OpponentModel,
    Recommendation,
)
from .game_params import GameParams
from .content import Card, Noble, ContentSet
from .game_state import GameState, PlayerState, ReservedCard
from .action import Action
from .game_result import GameResult
from .agent_config import AgentCommonConfig, BMRHConfig, SRHConfig, MCTSConfig

__all__ = [
    'ActionKind',
    'AgentKind',
    'ExperimentKind',
    'GameOutcome',
    'GameStatus',
    'MutationScheme',
    'OpponentModel',
    'Recommendation',
    'GameParams',
    'Card',
    'Noble',
    'ContentSet',
    'GameState',
    'PlayerState',
    'ReservedCard',
    'Action',
    'GameResult',
    'AgentCommonConfig',
    'BMRHConfig',
    'SRHConfig',
    'MCTSConfig',
]
