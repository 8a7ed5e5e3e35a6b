"""Unit tests for experiment configuration, statistics and export."""

import json

import pandas as pd
import pytest
from pydantic import ValidationError

from data_management.results_exporter import ResultsExporter
from experiments.experiment_config import AgentSpec, ExperimentConfig
from experiments.runner import SUMMARY_COLUMNS, _summary_rows, load_space
from experiments.statistics import (
    duration_stats,
    equal_rates_pvalue,
    seat_credits,
    stalemate_rate,
    std_err,
    win_rate,
)
from models.enums import AgentKind, ExperimentKind, GameOutcome
from models.game_result import GameResult


def result(winners, ticks=100, players=2, outcome=GameOutcome.NORMAL):
    return GameResult(
        winners=frozenset(winners),
        prestige=[0] * players,
        card_counts=[0] * players,
        ticks=ticks,
        outcome=outcome,
    )


class TestAgentSpec:
    """Tests for AgentSpec parsing and validation."""

    def test_plain_kind(self):
        """Test a bare kind name."""
        spec = AgentSpec.parse('osla')
        assert spec.kind == AgentKind.OSLA
        assert spec.params == {}
        assert spec.label == 'osla'

    def test_inline_params(self):
        """Test kind:key=value lists with JSON values."""
        spec = AgentSpec.parse('bmrh:l=3,usb=false,dcy=0.9')
        assert spec.params == {'l': 3, 'usb': False, 'dcy': 0.9}

    def test_bad_pair(self):
        """Test items without '='."""
        with pytest.raises(ValueError):
            AgentSpec.parse('srh:l')

    def test_invalid_hyper_parameter(self):
        """Test hyper-parameters are checked against the agent."""
        with pytest.raises(ValidationError):
            AgentSpec.parse('mcts:l=2')
        with pytest.raises(ValidationError):
            AgentSpec(kind='rnd', params={'l': 1})

    def test_json_file(self, tmp_path):
        """Test JSON agent files."""
        path = tmp_path / 'agent.json'
        path.write_text(json.dumps({'kind': 'srh', 'name': 'SRH-3', 'params': {'l': 3}}))
        spec = AgentSpec.parse(str(path))
        assert spec.label == 'SRH-3'
        assert spec.build(1).config.sequence_length == 3

    def test_bundled_agent_file(self):
        """Test files found in the configured agents directory."""
        spec = AgentSpec.parse('mcts_star.json')
        assert spec.kind == AgentKind.MCTS
        assert spec.label == 'MCTS*'


class TestExperimentConfig:
    """Tests for ExperimentConfig validation."""

    def test_defaults(self):
        """Test default settings."""
        config = ExperimentConfig(kind='play')
        assert config.games == 1000
        assert config.budget == 1000
        assert config.max_ticks == 300
        assert config.game_params.players == 4

    def test_game_overrides(self):
        """Test symbol-keyed game parameters."""
        config = ExperimentConfig(kind='play', game={'P': 2, 'PP': 10})
        assert config.game_params.players == 2
        assert config.game_params.prestige_points == 10

    def test_invalid_game(self):
        """Test invalid game parameters are reported."""
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='play', game={'P': 1})

    def test_tuning_needs_tunable_agent(self):
        """Test tune and grid need bmrh, srh or mcts."""
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='tune')
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='grid', agent='osla')
        assert ExperimentConfig(kind='grid', agent='srh').agent == AgentKind.SRH

    def test_roundrobin_needs_two(self):
        """Test a single roundrobin participant."""
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='roundrobin', agents=[{'kind': 'rnd'}])

    @pytest.mark.parametrize("field,value", [('games', -1), ('jobs', 0), ('max_ticks', 0), ('budget', -1)])
    def test_ranges(self, field, value):
        """Test numeric bounds."""
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='play', **{field: value})

    def test_zero_games(self):
        """Test empty experiments are allowed except where a fitness must be measured."""
        assert ExperimentConfig(kind='play', games=0).games == 0
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='grid', agent='mcts', games=0)
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='tune', agent='mcts', games=0)
        assert ExperimentConfig(kind='tune', agent='mcts', games=0, fitness_games=5).fitness_games == 5

    def test_unknown_field(self):
        """Test typos are rejected."""
        with pytest.raises(ValidationError):
            ExperimentConfig(kind='play', gmes=10)

    def test_from_json(self, tmp_path):
        """Test experiment files."""
        path = tmp_path / 'exp.json'
        path.write_text(json.dumps({
            'kind': 'match',
            'games': 4,
            'agents': [{'kind': 'rnd'}, {'kind': 'osla', 'name': 'greedy'}],
            'game': {'P': 2},
        }))
        config = ExperimentConfig.from_json(str(path))
        assert config.kind == ExperimentKind.MATCH
        assert [a.label for a in config.agents] == ['rnd', 'greedy']

    def test_load_bundled_space(self):
        """Test the tuned agent's bundled space is used by default."""
        space = load_space(ExperimentConfig(kind='grid', agent='mcts'))
        assert space.size == 32400


class TestStatistics:
    """Tests for summary statistics."""

    def test_std_err(self):
        """Test the binomial standard error."""
        assert std_err(0.5, 100) == pytest.approx(0.05)
        assert std_err(0.0, 10) == 0.0
        assert std_err(0.3, 0) == 0.0

    def test_win_rate(self):
        """Test win credit per game, with no games giving zero."""
        assert win_rate(3.0, 4) == 0.75
        assert win_rate(0.0, 0) == 0.0

    def test_summary_rows_ignore_stalemates(self):
        """Test rates over decided games sit next to the plain rates."""
        rows = _summary_rows(['a', 'b'], [3.0, 1.0], 8, 4)
        assert rows[0]['win_rate'] == pytest.approx(0.375)
        assert rows[0]['win_rate_decided'] == pytest.approx(0.75)
        assert rows[1]['decided_games'] == 4
        assert rows[1]['std_err_decided'] == pytest.approx(std_err(0.25, 4))
        assert list(rows[0]) == SUMMARY_COLUMNS

    def test_summary_rows_without_games(self):
        """Test zero games give zero rates."""
        rows = _summary_rows(['a'], [0.0], 0, 0)
        assert (rows[0]['win_rate'], rows[0]['win_rate_decided'], rows[0]['std_err']) == (0.0, 0.0, 0.0)

    def test_duration_stats(self):
        """Test mean, sample sd, min and max."""
        stats = duration_stats([result({0}, ticks=t) for t in (10, 20, 30)])
        assert stats == {'mean': 20.0, 'sd': pytest.approx(10.0), 'min': 10, 'max': 30}
        assert duration_stats([])['mean'] == 0.0

    def test_stalemate_rate(self):
        """Test the stalemate fraction."""
        results = [result({0}), result(set(), outcome=GameOutcome.STALEMATE)]
        assert stalemate_rate(results) == 0.5

    def test_seat_credits_split_ties(self):
        """Test shared wins split credit."""
        results = [result({0}), result({0, 1}), result({1})]
        assert seat_credits(results, 2) == [1.5, 1.5]

    def test_equal_rates(self):
        """Test the chi-square p-value."""
        assert equal_rates_pvalue([50, 50]) == pytest.approx(1.0)
        assert equal_rates_pvalue([0, 0]) == 1.0
        assert equal_rates_pvalue([90, 10]) < 0.001


class TestResultsExporter:
    """Tests for CSV export."""

    def test_export_games(self, tmp_path):
        """Test the per-game CSV columns."""
        results = [
            GameResult(frozenset({1}), [3, 15], [4, 9], 80, GameOutcome.NORMAL, seed=0, agent_labels=['rnd', 'osla']),
            GameResult(frozenset(), [0, 0], [0, 0], 12, GameOutcome.STALEMATE, seed=1, agent_labels=['rnd', 'osla']),
        ]
        path = tmp_path / 'games.csv'
        ResultsExporter.export_games(results, str(path))
        df = pd.read_csv(path)
        assert list(df.columns) == [
            'game', 'seed', 'outcome', 'ticks', 'passes', 'winners',
            'prestige_0', 'prestige_1', 'cards_0', 'cards_1', 'agent_0', 'agent_1',
        ]
        assert df['outcome'].tolist() == ['normal', 'stalemate']
        assert df['prestige_1'].tolist() == [15, 0]

    def test_empty_rows_keep_header(self, tmp_path):
        """Test an empty table still has its header."""
        path = tmp_path / 'out' / 'summary.csv'
        ResultsExporter.export_rows([], str(path), ['agent', 'wins'])
        assert path.read_text().strip() == 'agent,wins'

    def test_export_json(self, tmp_path):
        """Test summary export."""
        path = tmp_path / 'summary.json'
        ResultsExporter.export_json({'games': 3}, str(path))
        assert json.loads(path.read_text()) == {'games': 3}
