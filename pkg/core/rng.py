"""Seedable, splittable 64-bit RNG for deterministic gameplay.

All randomness in games and agent simulations goes through :class:`GameRNG`
so identical seeds reproduce identical games. The generator is SplitMix64:
one 64-bit integer of state, so seeding, cloning and splitting are O(1).
The sequence for a given seed is fixed and will not change between
releases.
"""

import math
from typing import List, MutableSequence, Sequence, TypeVar

T = TypeVar('T')

MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_DOUBLE_UNIT = 1.0 / (1 << 53)


def mix64(value: int) -> int:
    """SplitMix64 finalizer; also used to derive well-spread seeds."""
    z = value & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(*parts: int) -> int:
    """Combine integers into one 64-bit seed (e.g. base seed and game index)."""
    seed = 0
    for part in parts:
        seed = mix64(seed ^ (part & MASK64) ^ _GOLDEN_GAMMA)
    return seed


class GameRNG:
    """Deterministic random stream.

    Args:
        seed: Integer seed; reduced modulo 2**64
    """

    __slots__ = ('seed', '_state')

    def __init__(self, seed: int = 0):
        self.seed = seed & MASK64
        self._state = self.seed

    def next64(self) -> int:
        """Next raw 64-bit output."""
        self._state = (self._state + _GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def next_seed(self) -> int:
        """Fresh 64-bit seed for a RAG call or a child stream."""
        return self.next64()

    def split(self) -> 'GameRNG':
        """Independent child stream seeded from this one."""
        return GameRNG(self.next64())

    def randbelow(self, n: int) -> int:
        """Random integer in [0, n). ``n`` must be positive."""
        return (self.next64() * n) >> 64

    def randint(self, a: int, b: int) -> int:
        """Random integer in [a, b], inclusive."""
        return a + self.randbelow(b - a + 1)

    def random(self) -> float:
        """Random float in [0.0, 1.0)."""
        return (self.next64() >> 11) * _DOUBLE_UNIT

    def gauss(self, mu: float = 0.0, sigma: float = 1.0) -> float:
        """Normal variate via Box-Muller."""
        u1 = 1.0 - self.random()
        u2 = self.random()
        return mu + sigma * math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    def choice(self, seq: Sequence[T]) -> T:
        """Choose a random element from a non-empty sequence."""
        return seq[self.randbelow(len(seq))]

    def shuffle(self, seq: MutableSequence) -> None:
        """Fisher-Yates shuffle in place."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def sample(self, population: Sequence[T], k: int) -> List[T]:
        """``k`` distinct elements chosen uniformly, in selection order."""
        pool = list(population)
        n = len(pool)
        if not 0 <= k <= n:
            raise ValueError(f"Sample size {k} out of range for population of {n}")
        for i in range(k):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def clone(self) -> 'GameRNG':
        """Copy with identical future output."""
        other = GameRNG.__new__(GameRNG)
        other.seed = self.seed
        other._state = self._state
        return other

    def get_state(self) -> int:
        """Current internal state, for use with :meth:`set_state`."""
        return self._state

    def set_state(self, state: int):
        """Restore a state obtained from :meth:`get_state`."""
        self._state = state & MASK64
