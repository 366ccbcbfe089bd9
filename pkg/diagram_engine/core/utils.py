# utils.py - Utility functions untuk indexing tensor dan permutasi
from typing import Sequence, Tuple

import numpy as np


def encode_index(entries: Sequence[int], n: int) -> int:
    """
    Encode a tuple over [n] (0-based entries) as a mixed-radix integer.

    The leftmost entry is the most significant digit, which is the Kronecker
    product convention; the empty tuple encodes to 0.
    """
    index = 0
    for e in entries:
        if not 0 <= e < n:
            raise ValueError(f"index entry {e} outside 0..{n - 1}")
        index = index * n + e
    return index


def decode_index(index: int, n: int, r: int) -> Tuple[int, ...]:
    """Inverse of encode_index for tuples of length r."""
    if not 0 <= index < n**r:
        raise ValueError(f"index {index} outside 0..{n**r - 1}")
    digits = []
    for _ in range(r):
        index, d = divmod(index, n)
        digits.append(d)
    return tuple(reversed(digits))


def index_digits(n: int, r: int) -> np.ndarray:
    """
    All tuples of [n]^r as rows of an (n^r, r) integer array, in encoded order.

    Row i is decode_index(i, n, r).
    """
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((n,) * r, dtype=np.int64)  # shape (r, n, ..., n)
    return grid.reshape(r, -1).T


def permutation_sign(order: Sequence[int]) -> int:
    """
    Sign of the permutation that sorts `order` (distinct comparable items).

    Computed from the cycle decomposition of the sorting permutation.
    """
    ranks = {value: pos for pos, value in enumerate(sorted(order))}
    perm = [ranks[value] for value in order]
    if len(ranks) != len(perm):
        raise ValueError("permutation_sign needs distinct items")
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def make_rng(seed: int) -> np.random.Generator:
    """Seeded generator used by every sampler and suite."""
    return np.random.default_rng(seed)
