"""Reproducible random streams built on the Philox counter-based generator.

Philox-4x64-10 is a named counter-based generator with published round
constants; numpy's implementation is stable across platforms.  Streams are
derived from (seed, *path) through a splitmix64 hash chain, so replicates
and batches can run in any order, or concurrently, and still reproduce the
same results bit for bit.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _splitmix64(state: int) -> int:
    z = (state + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive_key(seed: int, *path: int) -> tuple[int, int]:
    """Two 64-bit Philox key words from a seed and a stream path."""
    if not 0 <= seed < 1 << 64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    word = _splitmix64(seed)
    for part in path:
        word = _splitmix64(word ^ _splitmix64(part & _MASK))
    return word, _splitmix64(word)


def generator(seed: int, *path: int) -> np.random.Generator:
    """Independent deterministic generator for (seed, *path)."""
    key = derive_key(seed, *path)
    return np.random.Generator(np.random.Philox(key=np.array(key, dtype=np.uint64)))
