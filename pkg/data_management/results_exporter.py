"""Export of experiment results to CSV and JSON."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from models.game_result import GameResult
from utils.logger import get_logger

logger = get_logger(__name__)


class ResultsExporter:
    """Write experiment tables with stable headers."""

    @staticmethod
    def export_rows(
        rows: Sequence[Dict[str, Any]],
        file_path: str,
        columns: Optional[List[str]] = None,
    ) -> pd.DataFrame:
        """Export rows to a CSV file.

        Args:
            rows: One dictionary per row
            file_path: Output CSV file path
            columns: Column order (also used as header when ``rows`` is empty)

        Returns:
            The exported DataFrame
        """
        df = pd.DataFrame(list(rows), columns=columns)
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, index=False)
        logger.info("Results exported to CSV", file_path=str(path), rows=len(df))
        return df

    @staticmethod
    def export_games(results: Sequence[GameResult], file_path: str) -> pd.DataFrame:
        """Export one row per game: ``game,seed,outcome,ticks,passes,winners,prestige_<i>,cards_<i>,agent_<i>``."""
        rows = []
        for index, result in enumerate(results):
            row = {'game': index}
            row.update(result.to_dict())
            rows.append(row)
        columns = ['game', 'seed', 'outcome', 'ticks', 'passes', 'winners']
        if results:
            players = len(results[0].prestige)
            columns += [f'prestige_{i}' for i in range(players)]
            columns += [f'cards_{i}' for i in range(players)]
            columns += [f'agent_{i}' for i in range(len(results[0].agent_labels))]
        return ResultsExporter.export_rows(rows, file_path, columns)

    @staticmethod
    def export_json(data: Dict[str, Any], file_path: str, indent: int = 2):
        """Export a summary dictionary to JSON.

        Args:
            data: Summary data
            file_path: Output JSON file path
            indent: JSON indentation
        """
        path = Path(file_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w') as f:
            json.dump(data, f, indent=indent, default=str)
        logger.info("Summary exported to JSON", file_path=str(path))
