"""Experiment harness: configuration, statistics and commands."""

from .experiment_config import AgentSpec, ExperimentConfig
from .runner import (
    cmd_bench,
    cmd_grid,
    cmd_match,
    cmd_play,
    cmd_roundrobin,
    cmd_tune,
    run_experiment,
)

__all__ = [
    'AgentSpec',
    'ExperimentConfig',
    'cmd_play',
    'cmd_match',
    'cmd_roundrobin',
    'cmd_tune',
    'cmd_grid',
    'cmd_bench',
    'run_experiment',
]
