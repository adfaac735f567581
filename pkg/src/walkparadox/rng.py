"""Counter-based deterministic random numbers.

Every random family in :mod:`walkparadox.generators` draws from this
generator so that identical seeds reproduce identical graphs on any
platform and in any implementation language.  The scheme is the
splitmix64 output function applied to ``seed + (counter + 1) * GAMMA``
over 64-bit wrapping arithmetic; only ``(seed, counter)`` is state, so
streams can be replayed or split at will.
"""

from __future__ import annotations

from .errors import ParameterError

GAMMA = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """splitmix64 finalizer: a 64-bit bijective scramble."""
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


def derive_seed(seed: int, index: int) -> int:
    """Child seed for sub-stream ``index`` (trials, retries, workers)."""
    if index < 0:
        raise ParameterError("stream index must be nonnegative")
    return mix64(mix64(seed + (index + 1) * GAMMA) + GAMMA)


class CounterRng:
    """Stateless-core PRNG: output i is ``mix64(seed + (i + 1) * GAMMA)``."""

    def __init__(self, seed: int):
        self._seed = seed & _MASK
        self._counter = 0

    def next_u64(self) -> int:
        self._counter += 1
        return mix64(self._seed + self._counter * GAMMA)

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, bound: int) -> int:
        """Unbiased integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ParameterError("randint bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]
