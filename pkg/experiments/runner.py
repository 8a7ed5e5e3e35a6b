"""Experiment commands: play, match, roundrobin, tune, grid and bench.

Each command takes a validated :class:`ExperimentConfig`, writes its CSV
files under ``config.out`` (when set) and returns a summary dictionary.
"""

from itertools import combinations
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

from agents.base import Agent
from core.benchmark import bench_throughput
from core.exceptions import UsageError
from core.game_engine import GameEngine
from core.rng import derive_seed
from data_management.content_loader import load_default_content
from data_management.results_exporter import ResultsExporter
from experiments.experiment_config import AgentSpec, ExperimentConfig
from experiments.statistics import (
    duration_stats,
    equal_rates_pvalue,
    seat_credits,
    stalemate_rate,
    std_err,
    win_rate,
)
from models.enums import AgentKind
from models.game_params import GameParams
from models.game_result import GameResult
from tuning.evaluator import GameEvaluator, evaluate_config
from tuning.grid_search import grid_search
from tuning.ntbea import ntbea_run
from tuning.search_space import SearchSpace
from utils.config import PROJECT_ROOT, get_config
from utils.logger import get_logger
from utils.parallel import parallel_map

logger = get_logger(__name__)

SUMMARY_COLUMNS = [
    'agent', 'seat_or_label', 'wins', 'games', 'win_rate', 'std_err',
    'decided_games', 'win_rate_decided', 'std_err_decided',
]
ROUNDROBIN_COLUMNS = [
    'agent_a', 'agent_b', 'games',
    'win_rate_a', 'std_err_a', 'win_rate_b', 'std_err_b', 'stalemate_rate',
]
BENCH_COLUMNS = ['seconds', 'states', 'games', 'states_per_second', 'games_per_second', 'stalemates']

GameTask = Tuple[GameParams, List[AgentSpec], int, int, int]


def _play_game(task: GameTask) -> GameResult:
    params, specs, seed, budget, max_ticks = task
    agents: List[Agent] = [spec.build(derive_seed(seed, seat)) for seat, spec in enumerate(specs)]
    engine = GameEngine(params, load_default_content(), max_ticks=max_ticks, budget_per_tick=budget)
    return engine.play(agents, seed)


def _play_all(config: ExperimentConfig, params: GameParams, lineups: Sequence[List[AgentSpec]],
              seeds: Sequence[int], desc: str) -> List[GameResult]:
    tasks = [(params, lineup, seed, config.budget, config.max_ticks) for lineup, seed in zip(lineups, seeds)]
    return parallel_map(_play_game, tasks, jobs=config.jobs, desc=desc, progress=config.jobs > 1)


def _out_path(config: ExperimentConfig, file_name: str) -> Path:
    return Path(config.out) / file_name


def _lineup(config: ExperimentConfig, players: int) -> List[AgentSpec]:
    specs = config.agents or [AgentSpec(kind=AgentKind.RND)]
    if len(specs) == 1:
        specs = specs * players
    if len(specs) != players:
        raise UsageError(f"{len(specs)} agents for a {players}-player game")
    return list(specs)


def _summary_rows(labels: Sequence[str], credits: Sequence[float], games: int,
                  decided: int) -> List[Dict[str, Any]]:
    """Win rates over all games and over the ``decided`` (non-stalemate) ones."""
    rows = []
    for index, (label, wins) in enumerate(zip(labels, credits)):
        rate = win_rate(wins, games)
        rate_decided = win_rate(wins, decided)
        rows.append({
            'agent': label,
            'seat_or_label': index,
            'wins': wins,
            'games': games,
            'win_rate': rate,
            'std_err': std_err(rate, games),
            'decided_games': decided,
            'win_rate_decided': rate_decided,
            'std_err_decided': std_err(rate_decided, decided),
        })
    return rows


def _decided(results: Sequence[GameResult]) -> int:
    return sum(1 for r in results if not r.is_stalemate)


def cmd_play(config: ExperimentConfig) -> Dict[str, Any]:
    """Play ``games`` games with a fixed lineup; report per-seat win rates.

    Game ``g`` uses seed ``seed + g``.
    """
    params = config.game_params
    lineup = _lineup(config, params.players)
    seeds = [config.seed + g for g in range(config.games)]
    results = _play_all(config, params, [lineup] * len(seeds), seeds, "Playing")

    labels = [spec.label for spec in lineup]
    rows = _summary_rows(labels, seat_credits(results, params.players), len(results), _decided(results))
    summary = {
        'games': len(results),
        'seats': rows,
        'stalemate_rate': stalemate_rate(results),
        'duration': duration_stats(results),
    }
    if config.out:
        ResultsExporter.export_games(results, _out_path(config, 'games.csv'))
        ResultsExporter.export_rows(rows, _out_path(config, 'summary.csv'), SUMMARY_COLUMNS)
    logger.info(
        "Play finished",
        games=len(results),
        stalemate_rate=round(summary['stalemate_rate'], 4),
        mean_ticks=round(summary['duration']['mean'], 2),
    )
    return summary


def cmd_match(config: ExperimentConfig) -> Dict[str, Any]:
    """Play a lineup of P agents with seats rotated every game.

    In game ``g`` lineup slot ``i`` sits in seat ``(i + g) % P``.
    """
    params = config.game_params
    players = params.players
    lineup = _lineup(config, players)
    seeds = [config.seed + g for g in range(config.games)]
    lineups = []
    for g in range(config.games):
        seated = [None] * players
        for slot, spec in enumerate(lineup):
            seated[(slot + g) % players] = spec
        lineups.append(seated)
    results = _play_all(config, params, lineups, seeds, "Match")

    credits = [0.0] * players
    for g, result in enumerate(results):
        for slot in range(players):
            credits[slot] += result.credit((slot + g) % players)

    labels = [spec.label for spec in lineup]
    rows = _summary_rows(labels, credits, len(results), _decided(results))
    summary = {
        'games': len(results),
        'agents': rows,
        'stalemate_rate': stalemate_rate(results),
        'duration': duration_stats(results),
        'equal_rates_pvalue': equal_rates_pvalue(credits),
    }
    if config.out:
        ResultsExporter.export_games(results, _out_path(config, 'games.csv'))
        ResultsExporter.export_rows(rows, _out_path(config, 'summary.csv'), SUMMARY_COLUMNS)
    logger.info(
        "Match finished",
        games=len(results),
        win_rates={row['agent']: round(row['win_rate'], 4) for row in rows},
        pvalue=round(summary['equal_rates_pvalue'], 4),
    )
    return summary


def cmd_roundrobin(config: ExperimentConfig) -> Dict[str, Any]:
    """Two-player games between every pair of agents, alternating seats.

    Raises:
        UsageError: With fewer than two agents
    """
    if len(config.agents) < 2:
        raise UsageError("roundrobin needs at least two agents")
    params = config.game_params.with_players(2)

    rows = []
    for a, b in combinations(range(len(config.agents)), 2):
        spec_a, spec_b = config.agents[a], config.agents[b]
        seeds = [config.seed + g for g in range(config.games)]
        lineups = [[spec_a, spec_b] if g % 2 == 0 else [spec_b, spec_a] for g in range(config.games)]
        results = _play_all(config, params, lineups, seeds, f"{spec_a.label} vs {spec_b.label}")

        wins_a = sum(r.credit(g % 2) for g, r in enumerate(results))
        wins_b = sum(r.credit(1 - g % 2) for g, r in enumerate(results))
        games = len(results)
        rows.append({
            'agent_a': spec_a.label,
            'agent_b': spec_b.label,
            'games': games,
            'win_rate_a': win_rate(wins_a, games),
            'std_err_a': std_err(win_rate(wins_a, games), games),
            'win_rate_b': win_rate(wins_b, games),
            'std_err_b': std_err(win_rate(wins_b, games), games),
            'stalemate_rate': stalemate_rate(results),
        })
        logger.info(
            "Pair finished",
            agent_a=spec_a.label,
            agent_b=spec_b.label,
            win_rate_a=round(win_rate(wins_a, games), 4),
            win_rate_b=round(win_rate(wins_b, games), 4),
        )

    if config.out:
        ResultsExporter.export_rows(rows, _out_path(config, 'roundrobin.csv'), ROUNDROBIN_COLUMNS)
    return {'pairs': rows}


def load_space(config: ExperimentConfig) -> SearchSpace:
    """Search space of the tuned agent (the bundled one when no path is given)."""
    if config.space:
        return SearchSpace.from_json(config.space)
    directory = Path(get_config().get('experiments.search_spaces_dir', PROJECT_ROOT / 'config' / 'search_spaces'))
    return SearchSpace.from_json(str(directory / f"{config.agent.value}.json"))


def _evaluator(config: ExperimentConfig) -> GameEvaluator:
    return GameEvaluator(
        config.agent,
        [(spec.kind, spec.params) for spec in config.opponents],
        params=config.game_params,
        max_ticks=config.max_ticks,
        budget_per_tick=config.budget,
    )


def cmd_grid(config: ExperimentConfig) -> Dict[str, Any]:
    """Rank the configurations of a search space by win rate over ``games`` games each."""
    space = load_space(config)
    entries = grid_search(
        space,
        _evaluator(config),
        config.games,
        seed=config.seed,
        sample=config.sample,
        jobs=config.jobs,
        progress=config.jobs > 1,
    )
    rows = [dict(rank=rank, **entry.to_dict()) for rank, entry in enumerate(entries, start=1)]
    if config.out:
        ResultsExporter.export_rows(rows, _out_path(config, 'grid.csv'), ['rank', 'win_rate', 'games'] + space.names)
    return {'space_size': space.size, 'configs': len(entries), 'ranking': rows}


def cmd_tune(config: ExperimentConfig) -> Dict[str, Any]:
    """Run NTBEA ``repeats`` times per budget and measure each recommendation's true fitness."""
    space = load_space(config)
    evaluator = _evaluator(config)
    tuning = get_config().get_section('tuning')
    fitness_games = config.fitness_games or config.games
    opponents = [(spec.kind, spec.params) for spec in config.opponents]

    rows = []
    for budget in config.budgets:
        for repeat in range(config.repeats):
            result = ntbea_run(
                space,
                evaluator,
                budget,
                k=config.k,
                epsilon=config.epsilon,
                neighbours=config.neighbours,
                seed=derive_seed(config.seed, budget, repeat),
                ucb_epsilon=tuning.get('ucb_epsilon', 1e-6),
            )
            fitness = evaluate_config(
                config.agent,
                result.best_config,
                fitness_games,
                opponents,
                seed=derive_seed(config.seed, budget, repeat, 1),
                params=config.game_params,
                max_ticks=config.max_ticks,
                budget_per_tick=config.budget,
                jobs=config.jobs,
            )
            row = {
                'agent': config.agent.value,
                'budget': budget,
                'repeat': repeat,
                'true_fitness': fitness,
                'games': fitness_games,
            }
            row.update(result.best_config)
            rows.append(row)
            logger.info("Tuning repeat finished", budget=budget, repeat=repeat, true_fitness=round(fitness, 4))

    if config.out:
        columns = ['agent', 'budget', 'repeat', 'true_fitness', 'games'] + space.names
        ResultsExporter.export_rows(rows, _out_path(config, 'tune.csv'), columns)
    return {'runs': rows}


def cmd_bench(config: ExperimentConfig) -> Dict[str, Any]:
    """Measure forward-model throughput with random-action games."""
    report = bench_throughput(
        config.game_params, config.seconds, seed=config.seed, max_ticks=config.max_ticks, jobs=config.jobs,
    )
    row = report.to_dict()
    if config.out:
        ResultsExporter.export_rows([row], _out_path(config, 'bench.csv'), BENCH_COLUMNS)
    return row


COMMANDS = {
    'play': cmd_play,
    'match': cmd_match,
    'roundrobin': cmd_roundrobin,
    'tune': cmd_tune,
    'grid': cmd_grid,
    'bench': cmd_bench,
}


def run_experiment(config: ExperimentConfig) -> Dict[str, Any]:
    """Dispatch to the command named by ``config.kind``."""
    return COMMANDS[config.kind.value](config)
