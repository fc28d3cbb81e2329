"""
Per-path noise streams.

Path ``i`` of a run seeded with ``seed`` draws its standard normals from a
Philox counter-based generator keyed by ``SeedSequence(seed, spawn_key=(i,))``.
Streams therefore depend on ``(seed, i)`` only, never on the order or the
worker that consumes them. Normals are produced by numpy's ziggurat
``Generator.standard_normal``.

"""

__all__ = ["path_stream", "standard_normals", "noise_block"]

import numpy as np


def path_stream(seed: int, index: int) -> np.random.Generator:
    """
    Independent generator for one path.

    Parameters
    ----------
    seed : int
        Base seed of the run.
    index : int
        Path index.

    Returns
    -------
    np.random.Generator
        Philox-backed generator.

    """
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(sequence))


def standard_normals(seed: int, index: int, n_steps: int) -> np.ndarray:
    """Standard normal draws driving path ``index``."""
    return path_stream(seed, index).standard_normal(n_steps)


def noise_block(seed: int, start: int, count: int, n_steps: int) -> np.ndarray:
    """
    Draws of paths ``start, ..., start + count - 1`` stacked row-wise.

    Returns
    -------
    np.ndarray
        ``(count, n_steps)`` array; row ``m`` equals
        ``standard_normals(seed, start + m, n_steps)``.

    """
    block = np.empty((count, n_steps), dtype=np.float64)
    for m in range(count):
        path_stream(seed, start + m).standard_normal(out=block[m])
    return block
