"""Build agents from a kind and a symbol-keyed configuration."""

from typing import Any, Dict, Optional, Union

from models.agent_config import BMRHConfig, MCTSConfig, SRHConfig
from models.enums import AgentKind

from agents.base import Agent
from agents.basic import OSLAAgent, RandomAgent
from agents.bmrh import BMRHAgent
from agents.mcts import MCTSAgent
from agents.srh import SRHAgent

CONFIG_CLASSES = {
    AgentKind.BMRH: BMRHConfig,
    AgentKind.SRH: SRHConfig,
    AgentKind.MCTS: MCTSConfig,
}

AGENT_CLASSES = {
    AgentKind.RND: RandomAgent,
    AgentKind.OSLA: OSLAAgent,
    AgentKind.BMRH: BMRHAgent,
    AgentKind.SRH: SRHAgent,
    AgentKind.MCTS: MCTSAgent,
}


def make_agent(
    kind: Union[AgentKind, str],
    params: Optional[Dict[str, Any]] = None,
    seed: int = 0,
    name: Optional[str] = None,
) -> Agent:
    """Create an agent.

    Args:
        kind: rnd, osla, bmrh, srh or mcts
        params: Hyper-parameters keyed by symbol (``l``, ``n``, ``om``, ...);
            missing keys take the tuned defaults
        seed: Agent seed
        name: Label (kind name when omitted)

    Returns:
        Configured agent

    Raises:
        ValueError: If the kind is unknown, or hyper-parameters are given to
            an agent without any or are invalid
    """
    kind = AgentKind(kind)
    params = params or {}
    if kind in CONFIG_CLASSES:
        config = CONFIG_CLASSES[kind].from_dict(params)
        return AGENT_CLASSES[kind](config, seed=seed, name=name)
    if params:
        raise ValueError(f"Agent '{kind}' takes no hyper-parameters, got {sorted(params)}")
    return AGENT_CLASSES[kind](seed=seed, name=name)
