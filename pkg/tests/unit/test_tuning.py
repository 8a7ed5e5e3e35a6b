"""Unit tests for search spaces, NTBEA, grid search and the game evaluator."""

import json

import numpy as np
import pytest

from core.exceptions import UsageError
from core.rng import GameRNG, derive_seed
from models.enums import AgentKind
from models.game_params import GameParams
from tuning import (
    Dimension,
    GameEvaluator,
    NTupleModel,
    SearchSpace,
    grid_search,
    ntbea_run,
)
from tuning.evaluator import opponent_lineup
from tuning.ntbea import mutate_point
from utils.config import PROJECT_ROOT

SPACES_DIR = PROJECT_ROOT / 'config' / 'search_spaces'


@pytest.fixture
def small_space():
    """Three dimensions, 12 configurations."""
    return SearchSpace([
        Dimension('a', (1, 2, 3)),
        Dimension('b', (True, False)),
        Dimension('c', (0.1, 0.5)),
    ])


def binary_space(n):
    return SearchSpace([Dimension(f'x{i}', (0, 1)) for i in range(n)])


class TestSearchSpace:
    """Tests for SearchSpace."""

    def test_size_and_points(self, small_space):
        """Test the product size and enumeration order."""
        points = list(small_space.points())
        assert small_space.size == 12
        assert len(points) == 12
        assert points[0] == (0, 0, 0)
        assert points[1] == (0, 0, 1)

    def test_config_round_trip(self, small_space):
        """Test points map to configurations and back."""
        config = small_space.config_at((2, 1, 0))
        assert config == {'a': 3, 'b': False, 'c': 0.1}
        assert small_space.point_of(config) == (2, 1, 0)

    def test_sample_points(self, small_space):
        """Test sampling distinct points."""
        points = small_space.sample_points(5, GameRNG(1))
        assert len(set(points)) == 5
        assert small_space.sample_points(50, GameRNG(1)) == list(small_space.points())

    def test_invalid_spaces(self):
        """Test empty and duplicate dimensions."""
        with pytest.raises(ValueError):
            SearchSpace([])
        with pytest.raises(ValueError):
            SearchSpace([Dimension('a', (1,)), Dimension('a', (2,))])
        with pytest.raises(ValueError):
            Dimension('a', ())

    def test_json(self, small_space, tmp_path):
        """Test loading a space file."""
        path = tmp_path / 'space.json'
        path.write_text(json.dumps(small_space.to_dict()))
        loaded = SearchSpace.from_json(str(path))
        assert loaded.names == ['a', 'b', 'c']
        assert loaded.size == 12

    def test_json_errors(self, tmp_path):
        """Test missing and malformed files."""
        with pytest.raises(FileNotFoundError):
            SearchSpace.from_json(str(tmp_path / 'missing.json'))
        bad = tmp_path / 'bad.json'
        bad.write_text(json.dumps({'dims': []}))
        with pytest.raises(ValueError):
            SearchSpace.from_json(str(bad))

    @pytest.mark.parametrize("agent,size", [('bmrh', 207360), ('srh', 28800), ('mcts', 32400)])
    def test_bundled_spaces(self, agent, size):
        """Test the bundled search spaces."""
        space = SearchSpace.from_json(str(SPACES_DIR / f'{agent}.json'))
        assert space.size == size
        assert 'om' in space.names and 'omsb' in space.names

    def test_mcts_space_has_recommendation(self):
        """Test the MCTS space tunes the recommendation policy and holds the tuned configuration."""
        space = SearchSpace.from_json(str(SPACES_DIR / 'mcts.json'))
        assert 'rt' in space.names
        tuned = {'d': 2, 'c': 0.0, 'e': 1e-6, 'ep': 0.4, 'ps': 1, 'rt': 0, 'om': 0, 'omsb': 0.05}
        assert space.config_at(space.point_of(tuned)) == tuned


class TestMutatePoint:
    """Tests for neighbour generation."""

    def test_always_moves(self, small_space):
        """Test every neighbour differs from its parent."""
        rng = GameRNG(2)
        for _ in range(200):
            assert mutate_point(small_space, (0, 0, 0), 0.2, rng) != (0, 0, 0)

    def test_fixed_dimension(self):
        """Test single-valued dimensions never change."""
        space = SearchSpace([Dimension('e', (1e-6,)), Dimension('x', (1, 2, 3))])
        rng = GameRNG(3)
        for _ in range(100):
            assert mutate_point(space, (0, 1), 0.5, rng)[0] == 0

    def test_nothing_mutable(self):
        """Test a one-point space returns the point itself."""
        space = SearchSpace([Dimension('e', (1,))])
        assert mutate_point(space, (0,), 0.2, GameRNG(0)) == (0,)


class TestNTupleModel:
    """Tests for the bandit model."""

    def test_tuples(self):
        """Test 1-tuples, 2-tuples and the full tuple."""
        assert len(NTupleModel(4).tuples) == 4 + 6 + 1
        assert NTupleModel(1).tuples == [(0,)]
        assert NTupleModel(2).tuples == [(0,), (1,), (0, 1)]

    def test_estimate_is_tuple_mean(self):
        """Test the k=0 estimate averages tuple means."""
        model = NTupleModel(2)
        model.add((0, 0), 1.0)
        model.add((0, 1), 0.0)
        # (0,): 0.5, (1,) value 0: 1.0, (0, 1) key (0, 0): 1.0
        assert model.estimate((0, 0)) == pytest.approx((0.5 + 1.0 + 1.0) / 3)

    def test_unseen_points_are_optimistic(self):
        """Test exploration favours unseen combinations."""
        model = NTupleModel(1)
        model.add((0,), 1.0)
        assert model.score((1,), k=1.0) > model.score((0,), k=1.0)


class TestNTBEA:
    """Tests for ntbea_run."""

    def test_dominant_arm(self):
        """Test one clearly best value is recommended."""
        space = SearchSpace([Dimension('x', (0, 1, 2, 3, 4))])
        result = ntbea_run(space, lambda config, seed: float(config['x'] == 3), 30, neighbours=10, seed=1)
        assert result.best_config == {'x': 3}
        assert result.evaluations == 30

    def test_onemax(self):
        """Test the model steers towards many ones."""
        space = binary_space(4)
        result = ntbea_run(space, lambda config, seed: sum(config.values()) / 4, 60, seed=2)
        assert sum(result.best_point) >= 3

    @pytest.mark.slow
    def test_noisy_onemax(self):
        """Test 100 runs on 4-bit OneMax with Gaussian noise mostly recommend all ones."""
        space = binary_space(4)

        def noisy_onemax(config, seed):
            return sum(config.values()) / 4 + np.random.default_rng(seed).normal(0.0, 0.1)

        found = sum(
            1 for repeat in range(100)
            if ntbea_run(space, noisy_onemax, 200, seed=repeat).best_point == (1, 1, 1, 1)
        )
        assert found >= 90

    def test_counts_match_history(self):
        """Test tuple statistics agree with the evaluations made."""
        space = binary_space(3)
        result = ntbea_run(space, lambda config, seed: 0.5, 25, seed=3)
        model = result.model
        assert model.total == 25
        for dim in range(3):
            for value in (0, 1):
                expected = sum(1 for point, _ in result.history if point[dim] == value)
                assert model.count((dim,), (value,)) == expected

    def test_evaluation_seeds(self):
        """Test evaluation i receives seed derive_seed(seed, i)."""
        seen = []

        def evaluator(config, seed):
            seen.append(seed)
            return 0.0

        ntbea_run(binary_space(2), evaluator, 5, seed=9)
        assert seen == [derive_seed(9, i) for i in range(5)]

    def test_reproducible(self):
        """Test identical seeds give identical runs."""
        space = binary_space(3)

        def evaluator(config, seed):
            return GameRNG(seed).random()

        a = ntbea_run(space, evaluator, 20, seed=4)
        b = ntbea_run(space, evaluator, 20, seed=4)
        assert a.history == b.history
        assert a.best_point == b.best_point

    def test_recommendation_was_evaluated(self):
        """Test the recommended point is one that was played."""
        result = ntbea_run(binary_space(5), lambda config, seed: GameRNG(seed).random(), 15, seed=5)
        assert result.best_point in {point for point, _ in result.history}

    def test_invalid_budget(self):
        """Test budgets below one."""
        with pytest.raises(ValueError):
            ntbea_run(binary_space(2), lambda config, seed: 0.0, 0)


class TestGridSearch:
    """Tests for grid_search."""

    def test_ranking(self, small_space):
        """Test configurations are sorted by win rate."""
        entries = grid_search(small_space, lambda config, seed: config['a'] / 3, 2)
        assert len(entries) == 12
        rates = [e.win_rate for e in entries]
        assert rates == sorted(rates, reverse=True)
        assert entries[0].config['a'] == 3
        assert entries[0].games == 2

    def test_ties_keep_enumeration_order(self, small_space):
        """Test stable ordering among equal win rates."""
        entries = grid_search(small_space, lambda config, seed: 0.5, 1)
        assert [e.point for e in entries] == list(small_space.points())

    def test_seeds(self, small_space):
        """Test configuration i plays seeds derive_seed(seed, i) + g."""
        seen = []

        def evaluator(config, seed):
            seen.append(seed)
            return 0.0

        grid_search(small_space, evaluator, 3, seed=7, sample=2)
        base = [derive_seed(7, 0), derive_seed(7, 1)]
        assert seen == [base[0], base[0] + 1, base[0] + 2, base[1], base[1] + 1, base[1] + 2]

    def test_sample(self, small_space):
        """Test sub-sampled grids."""
        entries = grid_search(small_space, lambda config, seed: 0.0, 1, sample=4)
        assert len({e.point for e in entries}) == 4

    def test_to_dict(self, small_space):
        """Test CSV row conversion."""
        entry = grid_search(small_space, lambda config, seed: 1.0, 1)[0]
        assert entry.to_dict() == {'win_rate': 1.0, 'games': 1, 'a': 1, 'b': True, 'c': 0.1}

    def test_invalid_games(self, small_space):
        """Test games_per_config below one."""
        with pytest.raises(ValueError):
            grid_search(small_space, lambda config, seed: 0.0, 0)


class TestGameEvaluator:
    """Tests for GameEvaluator."""

    def test_opponent_lineup(self):
        """Test single opponents are replicated and counts checked."""
        assert opponent_lineup(['osla'], 4) == [(AgentKind.OSLA, {})] * 3
        assert opponent_lineup([('mcts', {'d': 3})], 2) == [(AgentKind.MCTS, {'d': 3})]
        with pytest.raises(UsageError):
            opponent_lineup(['rnd', 'rnd'], 4)

    def test_seat_rotation(self):
        """Test the evaluated agent visits every seat."""
        evaluator = GameEvaluator('bmrh', ['rnd'])
        assert [evaluator.seat_for(s) for s in range(8)] == [0, 1, 2, 3, 0, 1, 2, 3]

    def test_fitness_is_win_credit(self, content):
        """Test one short evaluation game yields a credit in [0, 1]."""
        evaluator = GameEvaluator(
            'mcts', ['rnd'], params=GameParams(players=2), content=content,
            max_ticks=30, budget_per_tick=20,
        )
        fitness = evaluator({'d': 2}, 3)
        assert 0.0 <= fitness <= 1.0
        assert fitness == evaluator({'d': 2}, 3)
