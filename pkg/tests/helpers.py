"""Shared random generators for the test suite."""

import random

from gf2matroid import BinaryMatroid, rank_of


def random_mask(rng: random.Random, r: int, density: float = 0.5) -> int:
    """Random point bitset over the nonzero vectors of GF(2)^r."""
    mask = 0
    for v in range(1, 1 << r):
        if rng.random() < density:
            mask |= 1 << v
    return mask


def random_matroid(rng: random.Random, r: int, density: float = 0.5) -> BinaryMatroid:
    return BinaryMatroid(r, random_mask(rng, r, density))


def random_full_rank_matroid(rng: random.Random, r: int) -> BinaryMatroid:
    while True:
        m = random_matroid(rng, r)
        if not m.is_empty and m.is_full_rank:
            return m


def random_invertible(rng: random.Random, r: int):
    """Images of the unit vectors under a random element of GL(r,2)."""
    while True:
        rows = [rng.randrange(1, 1 << r) for _ in range(r)]
        if rank_of(rows, r) == r:
            return rows


def apply_linear(rows, v: int) -> int:
    """Map v through the matrix whose column for bit i is rows[i]."""
    out = 0
    i = 0
    while v:
        if v & 1:
            out ^= rows[i]
        v >>= 1
        i += 1
    return out


def map_matroid(rows, m: BinaryMatroid) -> BinaryMatroid:
    pts = [apply_linear(rows, v) for v in m.point_list()]
    return BinaryMatroid.from_vectors(m.ambient_rank, pts)
