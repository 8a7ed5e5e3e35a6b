"""Monte-Carlo tree search agent with sampled expansion."""

import math
from typing import List, Optional

from core.budget import ForwardModel
from core.exceptions import BudgetExpiredError, StalemateError
from core.rules import is_legal
from models.action import Action
from models.agent_config import MCTSConfig
from models.enums import AgentKind, Recommendation
from models.game_state import GameState

from agents.base import Agent, Heuristic, simulation_over
from agents.opponent_model import advance_opponents

SECURE_CHILD_A = 1.0


def ucb_value(normalized_mean: float, visits: int, parent_visits: int, c: float, e: float) -> float:
    """Upper confidence bound of a child.

    Args:
        normalized_mean: Child mean reward scaled to [0, 1]
        visits: Child visit count
        parent_visits: Parent visit count
        c: Exploration constant
        e: Added to ``visits`` so unvisited children stay finite

    Returns:
        normalized_mean + c * sqrt(ln(parent_visits + 1) / (visits + e))
    """
    if c == 0.0:
        return normalized_mean
    return normalized_mean + c * math.sqrt(math.log(parent_visits + 1) / (visits + e))


class TreeNode:
    """Search tree node reached by ``action`` from its parent.

    ``self_visits`` counts iterations that ended at this node without
    descending into a child, so ``visits == self_visits + sum(child visits)``.
    """

    __slots__ = ('action', 'parent', 'children', 'visits', 'self_visits', 'total_reward')

    def __init__(self, action: Optional[Action] = None, parent: Optional['TreeNode'] = None):
        self.action = action
        self.parent = parent
        self.children: List['TreeNode'] = []
        self.visits = 0
        self.self_visits = 0
        self.total_reward = 0.0

    @property
    def mean(self) -> float:
        """Mean reward (0 when unvisited)."""
        return self.total_reward / self.visits if self.visits else 0.0

    def child_for(self, action: Action) -> Optional['TreeNode']:
        for child in self.children:
            if child.action == action:
                return child
        return None

    def __repr__(self) -> str:
        return f"TreeNode(action={self.action}, visits={self.visits}, mean={self.mean:.3f})"


class MCTSAgent(Agent):
    """MCTS over the agent's own actions, to a total depth ``d`` from the root.

    Selection expands with probability ``ep`` even at nodes that already
    have children; expansion draws ``ps`` random actions and adds one child
    per new unique action. Children whose action is illegal in the current
    simulated state are skipped. Rewards are heuristic gains over the root
    state; UCB uses means min-max normalized over the rewards seen in the
    current decision. An iteration cut short by the budget is discarded.
    """

    kind = AgentKind.MCTS

    def __init__(
        self,
        config: Optional[MCTSConfig] = None,
        seed: int = 0,
        name: Optional[str] = None,
        heuristic: Optional[Heuristic] = None,
    ):
        super().__init__(seed=seed, name=name, heuristic=heuristic)
        self.config = config or MCTSConfig()
        self.root: Optional[TreeNode] = None
        self.iterations = 0
        self._reward_min = 0.0
        self._reward_max = 0.0

    def act(self, state: GameState, player: int, fm: ForwardModel) -> Action:
        """Search until the budget runs out and recommend a root action.

        Raises:
            StalemateError: If the player has no legal action
            BudgetExpiredError: If the budget cannot pay for a single root action
        """
        self.root = TreeNode()
        self.iterations = 0
        self._reward_min = math.inf
        self._reward_max = -math.inf
        base = self.heuristic(state, player)

        while fm.remaining > 0:
            try:
                self._iterate(state, player, fm, base)
            except BudgetExpiredError:
                break
            self.iterations += 1

        choice = self.recommend(self.root)
        if choice is not None:
            return choice.action
        if self.root.children:
            return self.root.children[0].action
        return fm.random_action(state, player, self.rng.next64())

    def _iterate(self, root_state: GameState, player: int, fm: ForwardModel, base: float):
        cfg = self.config
        state = fm.copy(root_state)
        node = self.root
        path = [node]
        depth = 0
        expanded = False

        # Selection and expansion
        while depth < cfg.max_depth and not expanded:
            if depth > 0 and simulation_over(state):
                break
            legal = [child for child in node.children if is_legal(state, child.action)]
            child = None
            if not legal or self.rng.random() < cfg.expansion_probability:
                child = self._expand(node, state, player, fm, root=depth == 0)
                expanded = child is not None
            if child is None:
                if not legal:
                    break
                child = self._select(node, legal)
            fm.apply(state, child.action, validate=False)
            advance_opponents(state, player, fm, cfg, self.rng, self.heuristic)
            node = child
            path.append(node)
            depth += 1

        # Rollout
        while depth < cfg.max_depth and not simulation_over(state):
            try:
                action = fm.random_action(state, player, self.rng.next64())
            except StalemateError:
                break
            fm.apply(state, action, validate=False)
            advance_opponents(state, player, fm, cfg, self.rng, self.heuristic)
            depth += 1

        reward = self.heuristic(state, player) - base
        self._reward_min = min(self._reward_min, reward)
        self._reward_max = max(self._reward_max, reward)
        for visited in path:
            visited.visits += 1
            visited.total_reward += reward
        path[-1].self_visits += 1

    def _expand(
        self, node: TreeNode, state: GameState, player: int, fm: ForwardModel, root: bool
    ) -> Optional[TreeNode]:
        """Add children for new sampled actions and return one of them."""
        fresh = []
        for _ in range(self.config.expansion_samples):
            try:
                action = fm.random_action(state, player, self.rng.next64())
            except StalemateError:
                if root and not node.children:
                    raise
                break
            if node.child_for(action) is None:
                child = TreeNode(action, node)
                node.children.append(child)
                fresh.append(child)
        if not fresh:
            return None
        return self.rng.choice(fresh)

    def normalize(self, mean: float) -> float:
        """Scale a mean reward to [0, 1] over this decision's reward range."""
        spread = self._reward_max - self._reward_min
        if spread <= 0.0:
            return 0.0
        return (mean - self._reward_min) / spread

    def _select(self, node: TreeNode, children: List[TreeNode]) -> TreeNode:
        cfg = self.config
        best = children[0]
        best_value = -math.inf
        for child in children:
            mean = self.normalize(child.mean) if child.visits else 0.0
            value = ucb_value(mean, child.visits, node.visits, cfg.exploration, cfg.ucb_epsilon)
            if value > best_value:
                best, best_value = child, value
        return best

    def recommend(self, root: TreeNode) -> Optional[TreeNode]:
        """Root child chosen by the configured recommendation policy (None if none visited)."""
        visited = [child for child in root.children if child.visits > 0]
        if not visited:
            return None
        policy = self.config.recommendation
        if policy == Recommendation.ROBUST_CHILD:
            return max(visited, key=lambda c: c.visits)
        if policy == Recommendation.SECURE_CHILD:
            return max(visited, key=lambda c: c.mean - SECURE_CHILD_A / math.sqrt(c.visits))
        return max(visited, key=lambda c: c.mean)
