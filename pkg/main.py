"""Command-line interface for games, tournaments, tuning and benchmarks."""

import json
import sys
from typing import Any, Dict, List, Optional

import click
from pydantic import ValidationError

from core.exceptions import EngineError
from experiments.experiment_config import AgentSpec, ExperimentConfig
from experiments.runner import run_experiment
from models.enums import AgentKind, ExperimentKind
from utils.config import Config, get_config, set_config
from utils.logger import configure_logging, get_logger

logger = get_logger(__name__)

# Experiment fields that can come from a command-line flag of the same name.
_FLAG_FIELDS = ('games', 'seed', 'budget', 'max_ticks', 'jobs', 'out')


def _parse_game_overrides(items: List[str]) -> Dict[str, int]:
    overrides = {}
    for item in items:
        key, sep, value = item.partition('=')
        if not sep:
            raise click.BadParameter(f"expected KEY=VALUE, got '{item}'", param_hint="--param")
        try:
            overrides[key.strip()] = int(value)
        except ValueError:
            raise click.BadParameter(f"'{value}' is not an integer", param_hint="--param")
    return overrides


def _parse_agents(items: List[str], hint: str) -> Optional[List[AgentSpec]]:
    if not items:
        return None
    try:
        return [AgentSpec.parse(item) for item in items]
    except (ValueError, OSError) as exc:
        raise click.BadParameter(str(exc), param_hint=hint)


def _setting_defaults() -> Dict[str, Any]:
    """Experiment fields taken from the settings file and environment."""
    settings = get_config()
    defaults = {
        'games': settings.get('experiments.games', 1000),
        'budget': settings.get('engine.budget_per_tick', 1000),
        'max_ticks': settings.get('engine.max_ticks', 300),
        'jobs': settings.get('experiments.jobs', 1),
        'budgets': settings.get('experiments.ntbea_budgets'),
        'repeats': settings.get('experiments.ntbea_repeats', 10),
        'fitness_games': settings.get('experiments.fitness_games'),
        'seconds': settings.get('experiments.bench_seconds', 10.0),
        'k': settings.get('tuning.k', 1.0),
        'epsilon': settings.get('tuning.epsilon_mutation', 0.2),
        'neighbours': settings.get('tuning.neighbours', 50),
    }
    return {key: value for key, value in defaults.items() if value is not None}


def _read_experiment_file(path: str, kind: ExperimentKind) -> Dict[str, Any]:
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise click.BadParameter(str(exc), param_hint='--config')
    if not isinstance(data, dict):
        raise click.BadParameter("expected a JSON object", param_hint='--config')
    file_kind = data.get('kind', kind.value)
    if file_kind != kind.value:
        raise click.BadParameter(f"experiment file is for '{file_kind}', not '{kind.value}'", param_hint='--config')
    return data


def _build_config(kind: ExperimentKind, options: Dict[str, Any], **fields) -> ExperimentConfig:
    """Layer settings defaults, the ``--config`` file and command-line flags, then validate.

    Only flags that were given override lower layers, so ``--games 0`` is
    kept and ``--max-ticks 0`` reaches validation.
    """
    data = _setting_defaults()
    game = get_config().get_section('game')
    if options.get('config') is not None:
        experiment = _read_experiment_file(options['config'], kind)
        game.update(experiment.pop('game', None) or {})
        data.update(experiment)
    game.update(_parse_game_overrides(options.get('param') or []))
    if options.get('players') is not None:
        game['P'] = options['players']

    data['kind'] = kind
    data['game'] = game
    data.update({key: options[key] for key in _FLAG_FIELDS if options.get(key) is not None})
    data.update({key: value for key, value in fields.items() if value is not None})
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise click.UsageError(str(exc))


def _run(config: ExperimentConfig) -> Dict[str, Any]:
    try:
        return run_experiment(config)
    except EngineError as exc:
        raise click.ClickException(str(exc))


def experiment_options(func):
    """Options shared by every experiment command."""
    options = [
        click.option('--config', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='JSON experiment file; flags given on the command line override it'),
        click.option('--games', '-n', type=int, default=None, help='Number of games (per config / pair)'),
        click.option('--seed', type=int, default=None, help='Base seed'),
        click.option('--budget', type=int, default=None, help='Forward-model units per decision'),
        click.option('--max-ticks', type=int, default=None, help='Tick limit per game'),
        click.option('--jobs', '-j', type=int, default=None, help='Worker processes'),
        click.option('--out', '-o', type=click.Path(file_okay=False), default=None, help='Output directory for CSV files'),
        click.option('--players', '-p', type=int, default=None, help='Number of players (P)'),
        click.option('--param', multiple=True, help='Game parameter override SYMBOL=VALUE (e.g. PP=10)'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _echo_rates(rows: List[Dict[str, Any]], heading: str):
    click.echo(heading)
    for row in rows:
        click.echo(
            f"  {row['seat_or_label']:>2} {row['agent']:<12} "
            f"win rate {row['win_rate']:.4f} ± {row['std_err']:.4f} ({row['wins']:.1f}/{row['games']}), "
            f"ignoring stalemates {row['win_rate_decided']:.4f} ± {row['std_err_decided']:.4f}"
        )


def _echo_duration(summary: Dict[str, Any]):
    duration = summary['duration']
    click.echo(f"Stalemate rate: {summary['stalemate_rate']:.4f}")
    click.echo(
        f"Duration (ticks): mean {duration['mean']:.2f}, sd {duration['sd']:.2f}, "
        f"min {duration['min']}, max {duration['max']}"
    )


@click.group()
@click.option('--settings', 'settings_path', type=click.Path(exists=True, dir_okay=False),
              help='YAML settings file merged over the defaults')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
              default=None, help='Logging level')
@click.option('--log-format', type=click.Choice(['console', 'json']), default=None,
              help='Log renderer (stderr)')
def cli(settings_path: Optional[str], log_level: Optional[str], log_format: Optional[str]):
    """Splendor-like game engine with statistical forward planning agents."""
    if settings_path:
        set_config(Config(settings_path))
    settings = get_config()
    configure_logging(
        (log_level or settings.get('logging.level', 'INFO')).upper(),
        log_format or settings.get('logging.format', 'console'),
    )


@cli.command()
@experiment_options
@click.option('--agent', '-a', 'agents', multiple=True,
              help='Agent per seat: KIND, KIND:key=value,... or a JSON file (one value fills every seat)')
def play(agents, **options):
    """Play games with a fixed seating and report per-seat win rates."""
    config = _build_config(ExperimentKind.PLAY, options, agents=_parse_agents(list(agents), '--agent'))
    summary = _run(config)
    _echo_rates(summary['seats'], f"Games: {summary['games']}")
    _echo_duration(summary)


@cli.command()
@experiment_options
@click.option('--agent', '-a', 'agents', multiple=True,
              help='Lineup entry: KIND, KIND:key=value,... or a JSON file')
def match(agents, **options):
    """Play a lineup with rotating seats and report per-agent win rates."""
    config = _build_config(ExperimentKind.MATCH, options, agents=_parse_agents(list(agents), '--agent'))
    if not config.agents:
        raise click.UsageError("match needs a lineup (--agent or the agents of --config)")
    summary = _run(config)
    _echo_rates(summary['agents'], f"Games: {summary['games']}")
    _echo_duration(summary)
    click.echo(f"Equal-rates chi-square p-value: {summary['equal_rates_pvalue']:.4g}")


@cli.command()
@experiment_options
@click.option('--agent', '-a', 'agents', multiple=True,
              help='Participant: KIND, KIND:key=value,... or a JSON file')
def roundrobin(agents, **options):
    """Two-player games between every pair of agents."""
    config = _build_config(ExperimentKind.ROUNDROBIN, options, agents=_parse_agents(list(agents), '--agent'))
    if len(config.agents) < 2:
        raise click.UsageError("roundrobin needs at least two agents")
    summary = _run(config)
    for row in summary['pairs']:
        click.echo(
            f"{row['agent_a']} vs {row['agent_b']}: "
            f"{row['win_rate_a']:.4f} ± {row['std_err_a']:.4f} / "
            f"{row['win_rate_b']:.4f} ± {row['std_err_b']:.4f}, "
            f"stalemates {row['stalemate_rate']:.4f}"
        )


def tuning_options(func):
    """Options shared by grid and tune."""
    options = [
        click.argument('agent', type=click.Choice([k.value for k in AgentKind if k.is_tunable])),
        click.option('--space', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='Search space JSON (bundled space of the agent when omitted)'),
        click.option('--opponent', 'opponents', multiple=True,
                     help='Opponent: KIND, KIND:key=value,... or a JSON file (default osla)'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@cli.command()
@experiment_options
@tuning_options
@click.option('--sample', type=int, default=None, help='Evaluate only this many random configurations')
def grid(agent, space, opponents, sample, **options):
    """Evaluate every configuration of a search space (games per config = --games)."""
    config = _build_config(
        ExperimentKind.GRID, options,
        agent=agent, space=space, sample=sample,
        opponents=_parse_agents(list(opponents), '--opponent'),
    )
    summary = _run(config)
    click.echo(f"Evaluated {summary['configs']} of {summary['space_size']} configurations")
    for row in summary['ranking'][:10]:
        click.echo(f"  #{row['rank']:<3} {row['win_rate']:.4f}  " + json.dumps(
            {k: v for k, v in row.items() if k not in ('rank', 'win_rate', 'games')}))


@cli.command()
@experiment_options
@tuning_options
@click.option('--budgets', default=None, help='Comma-separated NTBEA budgets (default 50,100,200,500,1000)')
@click.option('--repeats', type=int, default=None, help='NTBEA runs per budget')
@click.option('--fitness-games', type=int, default=None, help='Games measuring each recommendation')
def tune(agent, space, opponents, budgets, repeats, fitness_games, **options):
    """Tune an agent with NTBEA and measure the true fitness of each recommendation."""
    budget_list = None
    if budgets is not None:
        try:
            budget_list = [int(b) for b in budgets.split(',') if b.strip()]
        except ValueError:
            raise click.BadParameter(f"'{budgets}' is not a list of integers", param_hint='--budgets')
    config = _build_config(
        ExperimentKind.TUNE, options,
        agent=agent, space=space, budgets=budget_list, repeats=repeats, fitness_games=fitness_games,
        opponents=_parse_agents(list(opponents), '--opponent'),
    )
    summary = _run(config)
    for row in summary['runs']:
        click.echo(f"budget {row['budget']:>5} repeat {row['repeat']:>2}: true fitness {row['true_fitness']:.4f}")


@cli.command()
@experiment_options
@click.option('--seconds', type=float, default=None, help='Wall-clock duration')
def bench(seconds, **options):
    """Measure forward-model throughput with random-action games (-j runs worker processes)."""
    config = _build_config(ExperimentKind.BENCH, options, seconds=seconds)
    row = _run(config)
    click.echo(f"States/s: {row['states_per_second']:.1f}")
    click.echo(f"Games/s: {row['games_per_second']:.3f}")
    click.echo(f"Games: {row['games']} (stalemates {row['stalemates']}) in {row['seconds']:.2f} s")


@cli.command()
@click.argument('experiment_file', type=click.Path(exists=True, dir_okay=False))
def run(experiment_file):
    """Run an experiment described by a JSON file."""
    try:
        config = ExperimentConfig.from_json(experiment_file)
    except (ValidationError, ValueError) as exc:
        raise click.UsageError(str(exc))
    summary = _run(config)
    click.echo(json.dumps(summary, indent=2, default=str))


if __name__ == '__main__':
    sys.exit(cli())
