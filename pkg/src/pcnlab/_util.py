"""Small shared helpers: the default seed, child RNGs and an indexed thread map."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

# Fixed default so every experiment is reproducible out of the box.
DEFAULT_SEED = 42


def child_rng(master_seed: int, index: int) -> np.random.Generator:
    """Independent RNG stream for worker ``index``, derived from the master seed.

    Seeding with the pair (seed, index) makes every stream a pure function of
    those two values, so results cannot depend on scheduling or worker count.
    """
    return np.random.default_rng([int(master_seed), int(index)])


def indexed_map(fn, count: int, threads: int = 1) -> list:
    """Run ``fn(i)`` for i in range(count), returning results in index order.

    With ``threads > 1`` the calls run on a thread pool; results are still
    collected positionally, so output is identical to the sequential path.
    """
    if threads <= 1 or count <= 1:
        return [fn(i) for i in range(count)]
    with ThreadPoolExecutor(max_workers=min(threads, count)) as pool:
        return list(pool.map(fn, range(count)))
