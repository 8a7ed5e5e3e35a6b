"""Branch-point sampling for rolling-horizon mutation."""

import math

from core.rng import GameRNG
from models.enums import MutationScheme


def mutation_point(
    ms: MutationScheme,
    length: int,
    decay: float,
    mu: float,
    sigma: float,
    rng: GameRNG,
) -> int:
    """Index in ``[0, length - 1]`` from which a sequence is re-sampled.

    Args:
        ms: 0 uniform; 1 exponential decay, P(i) = (1 - decay) * decay**i for
            i < length - 1 with the residual mass on the last index;
            2 gaussian, round(clamp(N(mu * length, sigma), 0, length - 1))
        length: Sequence length (at least 1)
        decay: Decay factor for ms=1
        mu: Mean as a fraction of the length for ms=2
        sigma: Standard deviation in genes for ms=2
        rng: Random stream

    Returns:
        Branch point
    """
    if length <= 1:
        return 0
    ms = MutationScheme(ms)
    if ms == MutationScheme.UNIFORM:
        return rng.randbelow(length)
    if ms == MutationScheme.EXPONENTIAL_DECAY:
        u = rng.random()
        mass = 1.0 - decay
        for index in range(length - 1):
            if u < mass:
                return index
            u -= mass
            mass *= decay
        return length - 1
    value = rng.gauss(mu * length, sigma)
    value = min(max(value, 0.0), float(length - 1))
    return int(math.floor(value + 0.5))
