"""Unit tests for agents and opponent models."""

import pytest

from agents import (
    BMRHAgent,
    MCTSAgent,
    OSLAAgent,
    RandomAgent,
    SRHAgent,
    make_agent,
    opponent_step,
    ucb_value,
)
from agents.opponent_model import advance_opponents
from core import rules
from core.budget import Budget, ForwardModel
from core.exceptions import BudgetExpiredError
from core.rng import GameRNG
from models.agent_config import BMRHConfig, MCTSConfig, SRHConfig
from models.enums import ActionKind, AgentKind, OpponentModel, Recommendation
from models.game_state import ReservedCard
from tests.conftest import make_card


def fm_with(units):
    return ForwardModel(Budget(units))


def all_agents(seed=1):
    return [
        RandomAgent(seed=seed),
        OSLAAgent(seed=seed),
        BMRHAgent(seed=seed),
        SRHAgent(seed=seed),
        MCTSAgent(seed=seed),
    ]


class TestAllAgents:
    """Properties every agent must have."""

    @pytest.mark.parametrize("agent", all_agents(), ids=lambda a: a.name)
    def test_returns_legal_action(self, state, agent):
        """Test the chosen action is legal for the acting player."""
        action = agent.act(state, 0, fm_with(1000))
        assert action.player == 0
        assert rules.is_legal(state, action)

    @pytest.mark.parametrize("agent", all_agents(), ids=lambda a: a.name)
    def test_state_not_modified(self, state, agent):
        """Test agents plan on copies only."""
        before = state.fingerprint()
        agent.act(state, 0, fm_with(300))
        assert state.fingerprint() == before

    @pytest.mark.parametrize("agent", all_agents(), ids=lambda a: a.name)
    def test_budget_respected(self, state, agent):
        """Test agents never spend more than their budget."""
        budget = Budget(200)
        agent.act(state, 0, ForwardModel(budget))
        assert 0 <= budget.used <= 200

    @pytest.mark.parametrize("kind", list(AgentKind))
    def test_reproducible(self, state, kind):
        """Test identical seeds give identical decisions."""
        a = make_agent(kind, seed=5)
        b = make_agent(kind, seed=5)
        a.reset(11)
        b.reset(11)
        assert a.act(state, 0, fm_with(400)) == b.act(state, 0, fm_with(400))


class TestRandomAgent:
    """Tests for RandomAgent."""

    def test_one_unit(self, state):
        """Test one unit is enough and is all that is used."""
        fm = fm_with(1)
        RandomAgent().act(state, 0, fm)
        assert fm.remaining == 0

    def test_zero_budget(self, state):
        """Test an empty budget raises."""
        with pytest.raises(BudgetExpiredError):
            RandomAgent().act(state, 0, fm_with(0))


class TestOSLAAgent:
    """Tests for OSLAAgent."""

    def test_spends_budget_in_pairs(self, state):
        """Test each candidate costs a sample and an apply."""
        fm = fm_with(1000)
        OSLAAgent().act(state, 0, fm)
        assert fm.remaining == 0

    def test_prefers_prestige(self, state):
        """Test a free three-point card is bought."""
        state.face_up[1][2] = make_card([0, 0, 0, 0, 0], bonus=1, value=3, level=2)
        action = OSLAAgent(seed=3).act(state, 0, fm_with(1000))
        assert action.kind == ActionKind.BUY_TABLE
        assert (action.deck, action.slot) == (1, 2)

    def test_tiny_budget_falls_back(self, state):
        """Test a one-unit budget still yields an action."""
        action = OSLAAgent().act(state, 0, fm_with(1))
        assert rules.is_legal(state, action)


class TestBMRHAgent:
    """Tests for BMRHAgent."""

    def test_incumbent_never_worsens(self, state):
        """Test the incumbent value is monotone over a decision."""
        agent = BMRHAgent(BMRHConfig(sequence_length=3, max_evaluations=50), seed=2)
        agent.act(state, 0, fm_with(1000))
        values = agent.incumbent_values
        assert len(values) >= 2
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_buffer_holds_plan(self, state):
        """Test the chosen plan is kept for the next decision."""
        agent = BMRHAgent(BMRHConfig(sequence_length=3), seed=2)
        action = agent.act(state, 0, fm_with(1000))
        assert agent.buffer[0] == action
        assert agent.shifted_buffer() == agent.buffer[1:]

    def test_buffer_disabled(self, state):
        """Test usb off gives an empty shifted buffer."""
        agent = BMRHAgent(BMRHConfig(shift_buffer=False), seed=2)
        agent.act(state, 0, fm_with(500))
        assert agent.shifted_buffer() == []

    def test_length_one(self, state):
        """Test single-action plans."""
        agent = BMRHAgent(BMRHConfig(sequence_length=1), seed=4)
        assert rules.is_legal(state, agent.act(state, 0, fm_with(300)))

    def test_branch_point_range(self):
        """Test branch points stay within the sequence."""
        agent = BMRHAgent(BMRHConfig(sequence_length=5, mutate_once=False), seed=9)
        points = {agent.branch_point() for _ in range(500)}
        assert points <= set(range(5))
        assert 0 in points

    def test_reset_clears_buffer(self, state):
        """Test a new game starts with no plan."""
        agent = BMRHAgent(seed=1)
        agent.act(state, 0, fm_with(300))
        agent.reset(3)
        assert agent.buffer == []


class TestSRHAgent:
    """Tests for SRHAgent."""

    def test_no_mutation(self):
        """Test mr=0 without mo leaves the genome unchanged."""
        agent = SRHAgent(SRHConfig(mutate_once=False, mutation_rate=0.0))
        assert agent.mutate([1, 2, 3]) == [1, 2, 3]

    def test_full_mutation(self):
        """Test mr=1 replaces every gene."""
        agent = SRHAgent(SRHConfig(mutate_once=False, mutation_rate=1.0))
        child = agent.mutate([1, 2, 3])
        assert all(a != b for a, b in zip(child, [1, 2, 3]))

    def test_mutate_once(self):
        """Test mo replaces exactly one gene."""
        agent = SRHAgent(SRHConfig(mutate_once=True), seed=6)
        child = agent.mutate([1, 2, 3, 4])
        assert sum(a != b for a, b in zip(child, [1, 2, 3, 4])) == 1

    def test_genome_decodes_deterministically(self, state):
        """Test the buffered genome replays the same first action."""
        agent = SRHAgent(SRHConfig(sequence_length=2), seed=8)
        action = agent.act(state, 0, fm_with(400))
        genome = agent.buffer
        assert len(genome) == 2
        assert rules.is_legal(state, action)
        replay = fm_with(10).random_action(state, 0, genome[0])
        assert replay == action

    def test_zero_offspring(self, state):
        """Test n=0 plays the initial sequence."""
        agent = SRHAgent(SRHConfig(max_evaluations=0), seed=8)
        fm = fm_with(1000)
        agent.act(state, 0, fm)
        assert agent.incumbent_values and len(agent.incumbent_values) == 1
        assert fm.remaining >= 990


class TestMCTSAgent:
    """Tests for MCTSAgent."""

    def test_ucb_value(self):
        """Test the UCB formula."""
        assert ucb_value(0.5, 4, 100, 1.41, 1e-6) == pytest.approx(2.01454, abs=1e-4)
        assert ucb_value(0.3, 0, 10, 0.0, 1e-6) == 0.3

    def test_tree_consistency(self, state):
        """Test visit counts add up through the tree."""
        agent = MCTSAgent(MCTSConfig(max_depth=3, exploration=1.0, expansion_samples=2), seed=3)
        agent.act(state, 0, fm_with(1000))
        assert agent.root.visits == agent.iterations > 0

        def check(node):
            assert node.visits == node.self_visits + sum(c.visits for c in node.children)
            for child in node.children:
                check(child)

        check(agent.root)

    @pytest.mark.parametrize("rt", list(Recommendation))
    def test_recommendation_policies(self, state, rt):
        """Test each policy returns a visited root child."""
        agent = MCTSAgent(MCTSConfig(recommendation=rt, exploration=1.0), seed=2)
        action = agent.act(state, 0, fm_with(600))
        child = agent.root.child_for(action)
        assert child is not None and child.visits > 0

    def test_single_legal_action(self, state):
        """Test the only legal action is chosen."""
        player = state.players[0]
        free = make_card([0, 0, 0, 0, 0], bonus=2, value=1)
        player.reserved = [ReservedCard(free, True)] + [
            ReservedCard(state.decks[0].pop(), True) for _ in range(2)
        ]
        state.table_tokens = [0] * 6
        action = MCTSAgent(seed=1).act(state, 0, fm_with(300))
        assert action.kind == ActionKind.BUY_RESERVED
        assert action.slot == 0

    def test_normalize(self):
        """Test min-max scaling with a degenerate range."""
        agent = MCTSAgent()
        agent._reward_min, agent._reward_max = 2.0, 2.0
        assert agent.normalize(2.0) == 0.0
        agent._reward_min, agent._reward_max = 0.0, 4.0
        assert agent.normalize(1.0) == pytest.approx(0.25)


class TestOpponentModels:
    """Tests for opponent_step and advance_opponents."""

    def test_do_nothing(self, state):
        """Test om=0 spends nothing and changes nothing."""
        fm = fm_with(1000)
        before = state.fingerprint()
        assert opponent_step(state, 1, OpponentModel.DO_NOTHING, fm, 0.05, GameRNG(0)) is None
        assert fm.remaining == 1000
        assert state.fingerprint() == before

    def test_random_model_cost(self, state):
        """Test om=1 costs one generator unit and one apply."""
        fm = fm_with(1000)
        action = opponent_step(state, 1, OpponentModel.RANDOM, fm, 0.05, GameRNG(0))
        assert action.player == 1
        assert fm.remaining == 998
        assert state.tick == 1

    def test_osla_model_bounded(self, state):
        """Test om=2 spends at most its fork plus the apply."""
        fm = fm_with(1000)
        action = opponent_step(state, 2, OpponentModel.ONE_STEP_LOOK_AHEAD, fm, 0.05, GameRNG(0))
        assert action.player == 2
        assert fm.remaining == 1000 - 50 - 1

    def test_no_budget_left_for_model(self, state):
        """Test a model with an empty fork does nothing."""
        budget = Budget(10)
        budget.consume(10)
        fm = ForwardModel(budget)
        assert opponent_step(state, 1, OpponentModel.RANDOM, fm, 0.05, GameRNG(0)) is None

    def test_advance_opponents_seat_order(self, state):
        """Test every opponent acts once, in seat order."""
        fm = fm_with(1000)
        config = BMRHConfig(opponent_model=OpponentModel.RANDOM)
        advance_opponents(state, 1, fm, config, GameRNG(4))
        assert state.tick == 3
        assert state.current_player == 1
        assert fm.remaining == 994


class TestMakeAgent:
    """Tests for the agent factory."""

    def test_defaults(self):
        """Test kinds map to classes with tuned defaults."""
        agent = make_agent('bmrh')
        assert isinstance(agent, BMRHAgent)
        assert agent.name == 'bmrh'
        assert agent.config == BMRHConfig()

    def test_params(self):
        """Test symbol-keyed hyper-parameters."""
        agent = make_agent(AgentKind.MCTS, {'d': 4, 'c': 1.41}, seed=3, name='deep')
        assert agent.config.max_depth == 4
        assert agent.config.exploration == 1.41
        assert agent.name == 'deep'
        assert agent.seed == 3

    def test_params_for_simple_agent(self):
        """Test RND and OSLA reject hyper-parameters."""
        with pytest.raises(ValueError):
            make_agent('osla', {'l': 2})

    def test_unknown_kind(self):
        """Test unknown agent kinds."""
        with pytest.raises(ValueError):
            make_agent('minimax')
