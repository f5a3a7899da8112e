"""Synthetic sparse test matrices with the order and entry counts of the classic collection files.

The originals (Harwell-Boeing WEST0156, SHERMAN3, MCFE, MEMPLUS) are not
redistributed here.  A stand-in has the same order and the same number of
stored entries, placed at distinct uniformly random positions in column-major
order, so the matvec performs the same amount of work.  The access pattern,
and therefore the cache behaviour, is not the original's.
"""
from __future__ import annotations

import os
from importlib import resources

import numpy as np

from jnt.matio.mm import read_matrix_market, write_matrix_market
from jnt.special.rng import rng_fill_uniform, rng_seed
from jnt.sparse import CooMatrix

# name -> (order, stored entries)
COLLECTION_SHAPES = {
    "WEST0156": (156, 371),
    "SHERMAN3": (5505, 20033),
    "MCFE": (765, 24382),
    "MEMPLUS": (17758, 126150),
}


def synthesize(order: int, entries: int, seed: int = 2024) -> CooMatrix:
    """``entries`` distinct positions of an order x order matrix, values in [-1, 1)."""
    if entries > order * order:
        raise ValueError(f"{entries} entries do not fit in a {order}x{order} matrix")
    st = rng_seed(seed)
    chosen = np.empty(0, dtype=np.int64)
    while len(chosen) < entries:
        draw = (rng_fill_uniform(st, 2 * (entries - len(chosen)) + 16) * (order * order)).astype(np.int64)
        # keep first occurrences in draw order so the result depends only on the seed
        merged = np.concatenate([chosen, draw])
        _, first = np.unique(merged, return_index=True)
        chosen = merged[np.sort(first)][:entries]
    chosen = np.sort(chosen)
    cols, rows = np.divmod(chosen, order)
    values = rng_fill_uniform(st, entries, -1.0, 1.0)
    values[values == 0.0] = 0.5
    return CooMatrix(order, order, rows, cols, values)


def standin(name: str, seed: int = 2024) -> CooMatrix:
    order, entries = COLLECTION_SHAPES[name.upper()]
    return synthesize(order, entries, seed)


def write_standin(name: str, directory, seed: int = 2024) -> str:
    name = name.upper()
    order, entries = COLLECTION_SHAPES[name]
    path = os.path.join(os.fspath(directory), name.lower() + ".mtx")
    comment = (
        f"synthetic stand-in for {name}: order {order}, {entries} entries at random positions, seed {seed}"
    )
    write_matrix_market(synthesize(order, entries, seed), path, comment=comment)
    return path


def bundled_matrix_path(name: str = "west0156") -> str:
    return str(resources.files("jnt") / "data" / f"{name.lower()}.mtx")


def load_bundled(name: str = "west0156") -> CooMatrix:
    return read_matrix_market(bundled_matrix_path(name))
