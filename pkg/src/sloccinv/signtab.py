"""Recursive +/-1 sign tables that orient every invariant term.

sign(n, .) lives on [0, 2**(n-3)) for n >= 4 and on the single index 0
for n in {2, 3}.  The table for n is the table for n-1 followed by its
mirror image, negated when n is even.  sign*(n, .) extends sign(n, .)
to [0, 2**(n-2)) by appending the unnegated mirror.

Tables are built once per n and cached; lookups after warmup are plain
array reads.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import IndexOutOfRange


def _sign_range(n: int) -> int:
    return 1 if n <= 3 else 1 << (n - 3)


@lru_cache(maxsize=None)
def sign_table(n: int) -> np.ndarray:
    """Read-only int8 array of sign(n, i) for i in [0, 2**(n-3))."""
    if n < 2:
        raise IndexOutOfRange(f"sign table needs n >= 2, got {n}")
    if n <= 3:
        table = np.ones(1, dtype=np.int8)
    else:
        prev = sign_table(n - 1)
        mirror = prev[::-1] if n % 2 else -prev[::-1]
        table = np.concatenate([prev, mirror])
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def sign_star_table(n: int) -> np.ndarray:
    """Read-only int8 array of sign*(n, i) for i in [0, 2**(n-2))."""
    if n < 2:
        raise IndexOutOfRange(f"sign* table needs n >= 2, got {n}")
    if n == 2:
        table = np.ones(1, dtype=np.int8)
    else:
        base = sign_table(n)
        table = np.concatenate([base, base[::-1]])
    table.setflags(write=False)
    return table


def sign(n: int, i: int) -> int:
    if n < 2:
        raise IndexOutOfRange(f"sign needs n >= 2, got {n}")
    limit = _sign_range(n)
    if not 0 <= i < limit:
        raise IndexOutOfRange(f"sign({n}, {i}): index outside [0, {limit})")
    return int(sign_table(n)[i])


def sign_star(n: int, i: int) -> int:
    if n < 2:
        raise IndexOutOfRange(f"sign* needs n >= 2, got {n}")
    limit = 1 << (n - 2)
    if not 0 <= i < limit:
        raise IndexOutOfRange(f"sign*({n}, {i}): index outside [0, {limit})")
    return int(sign_star_table(n)[i])
