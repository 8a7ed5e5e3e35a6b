"""Discrete hyper-parameter search spaces."""

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Sequence, Tuple

from core.rng import GameRNG

Point = Tuple[int, ...]


@dataclass(frozen=True)
class Dimension:
    """A named hyper-parameter with an ordered list of discrete values."""
    name: str
    values: Tuple[Any, ...]

    def __post_init__(self):
        """Validate dimension."""
        object.__setattr__(self, 'values', tuple(self.values))
        if not self.name:
            raise ValueError("Dimension name must not be empty")
        if not self.values:
            raise ValueError(f"Dimension '{self.name}' has no values")

    def __len__(self) -> int:
        return len(self.values)


class SearchSpace:
    """Ordered dimensions; a point is a tuple of value indices, one per dimension.

    Args:
        dimensions: At least one dimension, names unique
    """

    def __init__(self, dimensions: Sequence[Dimension]):
        if not dimensions:
            raise ValueError("A search space needs at least one dimension")
        names = [d.name for d in dimensions]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate dimension names in {names}")
        self.dimensions: Tuple[Dimension, ...] = tuple(dimensions)

    @property
    def names(self) -> List[str]:
        """Dimension names in order."""
        return [d.name for d in self.dimensions]

    @property
    def size(self) -> int:
        """Number of configurations (product of dimension sizes)."""
        return math.prod(len(d) for d in self.dimensions)

    def __len__(self) -> int:
        return len(self.dimensions)

    def config_at(self, point: Point) -> Dict[str, Any]:
        """Configuration dictionary for a point."""
        return {d.name: d.values[i] for d, i in zip(self.dimensions, point)}

    def point_of(self, config: Dict[str, Any]) -> Point:
        """Point for a configuration dictionary.

        Raises:
            ValueError: If a value is not in its dimension
        """
        return tuple(d.values.index(config[d.name]) for d in self.dimensions)

    def points(self) -> Iterator[Point]:
        """Every point, last dimension varying fastest."""
        return itertools.product(*(range(len(d)) for d in self.dimensions))

    def random_point(self, rng: GameRNG) -> Point:
        """Uniformly random point."""
        return tuple(rng.randbelow(len(d)) for d in self.dimensions)

    def sample_points(self, count: int, rng: GameRNG) -> List[Point]:
        """``count`` distinct points without replacement (all points when ``count`` >= size)."""
        if count >= self.size:
            return list(self.points())
        chosen = set()
        while len(chosen) < count:
            chosen.add(self.random_point(rng))
        return sorted(chosen)

    def to_dict(self) -> dict:
        """Convert to the JSON representation."""
        return {'dimensions': [{'name': d.name, 'values': list(d.values)} for d in self.dimensions]}

    @classmethod
    def from_dict(cls, data: dict) -> 'SearchSpace':
        """Create from ``{"dimensions": [{"name": ..., "values": [...]}, ...]}``."""
        return cls([Dimension(entry['name'], tuple(entry['values'])) for entry in data['dimensions']])

    @classmethod
    def from_json(cls, file_path: str) -> 'SearchSpace':
        """Load from a JSON file.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the content is not a valid search space
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"Search space file not found: {file_path}")
        with open(path, 'r') as f:
            data = json.load(f)
        try:
            return cls.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"{file_path}: malformed search space ({exc})") from exc

    def __repr__(self) -> str:
        dims = ", ".join(f"{d.name}:{len(d)}" for d in self.dimensions)
        return f"SearchSpace({dims}; size={self.size})"
