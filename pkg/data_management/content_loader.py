"""Loading of card and noble content files."""

from functools import lru_cache
from pathlib import Path
from typing import List, Optional

import pandas as pd

from core.exceptions import SetupError
from models.content import Card, ContentSet, Noble
from utils.config import get_config
from utils.logger import get_logger

logger = get_logger(__name__)


class ContentLoader:
    """Load cards and nobles from CSV files.

    Cards: ``level,bonus,value,cost_suit0,...`` one row per card.
    Nobles: ``value,req_suit0,...`` one row per noble.
    The number of suits is inferred from the ``cost_suit*`` columns.
    """

    CARD_COLUMNS = ('level', 'bonus', 'value')
    NOBLE_COLUMNS = ('value',)

    @classmethod
    def load(
        cls,
        cards_path: Optional[str] = None,
        nobles_path: Optional[str] = None,
    ) -> ContentSet:
        """Load a content set.

        Args:
            cards_path: Cards CSV (configured default when omitted)
            nobles_path: Nobles CSV (configured default when omitted)

        Returns:
            Immutable ContentSet

        Raises:
            SetupError: If a file is missing or malformed
        """
        config = get_config()
        cards_path = cards_path or config.get('content.cards_path')
        nobles_path = nobles_path or config.get('content.nobles_path')

        cards_df = cls._read(cards_path)
        nobles_df = cls._read(nobles_path)

        cost_columns = cls._suit_columns(cards_df, 'cost_suit', cls.CARD_COLUMNS, cards_path)
        req_columns = cls._suit_columns(nobles_df, 'req_suit', cls.NOBLE_COLUMNS, nobles_path)
        if len(cost_columns) != len(req_columns):
            raise SetupError(
                f"Cards have {len(cost_columns)} suits but nobles have {len(req_columns)}"
            )

        cards = cls._cards_from_dataframe(cards_df, cost_columns)
        nobles = cls._nobles_from_dataframe(nobles_df, req_columns)
        levels = max((card.level for card in cards), default=0)

        content = ContentSet(
            cards=tuple(cards),
            nobles=tuple(nobles),
            token_types=len(cost_columns),
            levels=levels,
        )
        logger.info(
            "Content loaded",
            cards=content.total_cards,
            nobles=len(content.nobles),
            suits=content.token_types,
            levels=content.levels,
        )
        return content

    @staticmethod
    def _read(file_path: str) -> pd.DataFrame:
        path = Path(file_path)
        if not path.exists():
            raise SetupError(f"Content file not found: {file_path}")
        return pd.read_csv(path)

    @staticmethod
    def _suit_columns(df: pd.DataFrame, prefix: str, required: tuple, file_path: str) -> List[str]:
        missing = [c for c in required if c not in df.columns]
        if missing:
            raise SetupError(f"{file_path}: missing columns {missing}")
        columns = [c for c in df.columns if c.startswith(prefix)]
        expected = [f"{prefix}{i}" for i in range(len(columns))]
        if not columns or columns != expected:
            raise SetupError(f"{file_path}: expected columns {expected}, found {columns}")
        return columns

    @staticmethod
    def _cards_from_dataframe(df: pd.DataFrame, cost_columns: List[str]) -> List[Card]:
        cards = []
        for idx, row in enumerate(df.itertuples(index=False)):
            record = row._asdict()
            price = tuple(int(record[c]) for c in cost_columns) + (0,)
            cards.append(Card(
                card_id=idx,
                level=int(record['level']),
                bonus=int(record['bonus']),
                price=price,
                value=int(record['value']),
            ))
        return cards

    @staticmethod
    def _nobles_from_dataframe(df: pd.DataFrame, req_columns: List[str]) -> List[Noble]:
        nobles = []
        for idx, row in enumerate(df.itertuples(index=False)):
            record = row._asdict()
            requirement = tuple(int(record[c]) for c in req_columns) + (0,)
            nobles.append(Noble(noble_id=idx, value=int(record['value']), requirement=requirement))
        return nobles


@lru_cache(maxsize=8)
def load_default_content(cards_path: Optional[str] = None, nobles_path: Optional[str] = None) -> ContentSet:
    """Cached content set; content is immutable so sharing is safe."""
    return ContentLoader.load(cards_path, nobles_path)
