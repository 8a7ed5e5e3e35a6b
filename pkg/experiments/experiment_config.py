"""Validated experiment configuration."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from agents.base import Agent
from agents.factory import CONFIG_CLASSES, make_agent
from models.enums import AgentKind, ExperimentKind
from models.game_params import GameParams
from utils.config import get_config


class AgentSpec(BaseModel):
    """An agent kind with optional hyper-parameters and label."""

    model_config = ConfigDict(extra='forbid')

    kind: AgentKind
    params: Dict[str, Any] = Field(default_factory=dict)
    name: Optional[str] = None

    @model_validator(mode='after')
    def _check_params(self) -> 'AgentSpec':
        if self.kind in CONFIG_CLASSES:
            CONFIG_CLASSES[self.kind].from_dict(self.params)
        elif self.params:
            raise ValueError(f"Agent '{self.kind.value}' takes no hyper-parameters")
        return self

    @property
    def label(self) -> str:
        """Name used in result files."""
        return self.name or self.kind.value

    def build(self, seed: int) -> Agent:
        """Instantiate the agent."""
        return make_agent(self.kind, self.params, seed=seed, name=self.label)

    @classmethod
    def parse(cls, text: str) -> 'AgentSpec':
        """Parse a command-line agent description.

        Accepted forms: ``kind``, ``kind:key=value,key=value`` and a JSON file
        (looked up in the configured agents directory when not found as given)
        holding ``{"kind": ..., "params": {...}, "name": ...}``.
        Values are read as JSON (``l=2``, ``usb=true``, ``c=1.41``).
        """
        if text.endswith('.json'):
            path = Path(text)
            if not path.exists():
                path = Path(get_config().get('experiments.agents_dir')) / text
            with open(path, 'r') as f:
                return cls.model_validate(json.load(f))
        kind, _, rest = text.partition(':')
        params: Dict[str, Any] = {}
        for item in filter(None, rest.split(',')):
            key, sep, value = item.partition('=')
            if not sep:
                raise ValueError(f"Expected key=value in agent description, got '{item}'")
            try:
                params[key.strip()] = json.loads(value)
            except json.JSONDecodeError:
                params[key.strip()] = value
        return cls(kind=kind.strip(), params=params)


class ExperimentConfig(BaseModel):
    """Settings of one experiment command.

    ``game`` holds GameParams overrides keyed by symbol (``P``, ``PP``, ...).
    """

    model_config = ConfigDict(extra='forbid')

    kind: ExperimentKind
    game: Dict[str, int] = Field(default_factory=dict)
    agents: List[AgentSpec] = Field(default_factory=list)
    games: int = Field(default=1000, ge=0)
    seed: int = 0
    budget: int = Field(default=1000, ge=0)
    max_ticks: int = Field(default=300, gt=0)
    jobs: int = Field(default=1, ge=1)
    out: Optional[str] = None

    # tune / grid
    agent: Optional[AgentKind] = None
    space: Optional[str] = None
    opponents: List[AgentSpec] = Field(default_factory=lambda: [AgentSpec(kind=AgentKind.OSLA)])
    budgets: List[int] = Field(default_factory=lambda: [50, 100, 200, 500, 1000])
    repeats: int = Field(default=10, ge=1)
    fitness_games: Optional[int] = Field(default=None, ge=1)
    sample: Optional[int] = Field(default=None, ge=1)
    k: float = Field(default=1.0, ge=0.0)
    epsilon: float = Field(default=0.2, gt=0.0, le=1.0)
    neighbours: int = Field(default=50, ge=1)

    # bench
    seconds: float = Field(default=10.0, gt=0.0)

    @model_validator(mode='after')
    def _check_kind(self) -> 'ExperimentConfig':
        GameParams.from_dict(self.game)
        if self.kind in (ExperimentKind.TUNE, ExperimentKind.GRID):
            if self.agent is None:
                raise ValueError(f"'{self.kind.value}' needs an agent kind")
            if not self.agent.is_tunable:
                raise ValueError(f"Agent '{self.agent.value}' has no hyper-parameters to tune")
        if self.kind == ExperimentKind.GRID and self.games < 1:
            raise ValueError("grid needs at least one game per configuration")
        if self.kind == ExperimentKind.TUNE and (self.fitness_games or self.games) < 1:
            raise ValueError("tune needs at least one fitness game")
        if self.kind == ExperimentKind.ROUNDROBIN and 0 < len(self.agents) < 2:
            raise ValueError("roundrobin needs at least two agents")
        if any(b < 1 for b in self.budgets):
            raise ValueError("NTBEA budgets must be at least 1")
        return self

    @property
    def game_params(self) -> GameParams:
        """Game parameters with overrides applied."""
        return GameParams.from_dict(self.game)

    @classmethod
    def from_json(cls, file_path: str) -> 'ExperimentConfig':
        """Load and validate a JSON experiment file."""
        with open(Path(file_path), 'r') as f:
            return cls.model_validate(json.load(f))
