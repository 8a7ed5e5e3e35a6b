"""Throughput measurement and forward-model performance."""

import pytest

from core import rules
from core.action_generators import random_action
from core.benchmark import ThroughputReport, bench_throughput
from core.game_setup import new_game
from models.game_params import GameParams


class TestBenchThroughput:
    """Tests for bench_throughput."""

    def test_counts_states(self, content):
        """Test a short run applies actions and reports rates."""
        report = bench_throughput(GameParams(players=2), 0.2, content=content, seed=1)
        assert report.states > 0
        assert report.states_per_second > 0
        assert set(report.to_dict()) == {
            'seconds', 'states', 'games', 'states_per_second', 'games_per_second', 'stalemates',
        }

    def test_stalemates_are_games(self, content):
        """Test stalemated games are counted among completed games."""
        report = bench_throughput(GameParams(), 0.2, content=content, max_ticks=50)
        assert report.stalemates <= report.games

    def test_workers_add_up(self, content):
        """Test worker processes pool their counts over the wall-clock time."""
        report = bench_throughput(GameParams(players=2), 0.3, content=content, seed=2, jobs=2)
        assert report.states > 0
        assert report.seconds >= 0.3
        assert report.stalemates <= report.games

    def test_zero_duration_rates(self):
        """Test rates of an empty report."""
        report = ThroughputReport(seconds=0.0, states=0, games=0, stalemates=0)
        assert report.states_per_second == 0.0
        assert report.games_per_second == 0.0


@pytest.mark.slow
class TestPerformance:
    """pytest-benchmark timings of the hot path."""

    def test_copy_and_step(self, benchmark, content):
        """Time one copy plus one random step from the opening."""
        state = new_game(GameParams(), content, 3)

        def step():
            child = state.copy()
            rules.apply(child, random_action(child, child.current_player, 17), validate=False)
            return child

        child = benchmark(step)
        assert child.tick == 1

    def test_random_action(self, benchmark, state):
        """Time one random action draw from the opening."""
        action = benchmark(random_action, state, 0, 23)
        assert action.player == 0

    def test_noble_check(self, benchmark, state):
        """Time the passive noble rule for a player without cards."""
        assert benchmark(rules.noble_pass, state, 0) is None

    def test_random_playout(self, benchmark, content):
        """Time a full random playout."""

        def playout():
            return bench_throughput(GameParams(), 0.05, content=content, seed=5)

        report = benchmark.pedantic(playout, rounds=3, iterations=1)
        assert report.states > 0
