"""Enumeration of up-sets and shifted up-sets of 2^[n] as indicators.

An up-set F of 2^[n] splits into ``A = {X : X in F, n not in X}`` and
``B = {X - {n} : X in F, n in X}``, both up-sets of 2^[n-1], with
``A`` contained in ``B``.  F is moreover shifted exactly when A and B are
shifted and ``A`` contains every one-element extension (inside [n-1]) of a
member of ``B``.  Both recursions produce each family once.
"""

from __future__ import annotations

from functools import lru_cache

from .._bits import up_indicator
from ..errors import CapacityError

MAX_UPSET_N = 5
MAX_SHIFTED_UPSET_N = 7


@lru_cache(maxsize=None)
def _upsets(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0, 1)
    prev = _upsets(n - 1)
    half = 1 << (n - 1)
    out = []
    for b in prev:
        for a in prev:
            if a & ~b == 0:
                out.append(a | (b << half))
    return tuple(out)


@lru_cache(maxsize=None)
def _shifted_upsets(n: int) -> tuple[int, ...]:
    if n == 0:
        return (0, 1)
    prev = _shifted_upsets(n - 1)
    half = 1 << (n - 1)
    out = []
    for b in prev:
        need = up_indicator(b, n - 1)
        for a in prev:
            if a & ~b == 0 and need & ~a == 0:
                out.append(a | (b << half))
    return tuple(out)


def upset_indicators(n: int) -> tuple[int, ...]:
    """All up-sets of 2^[n] (2, 3, 6, 20, 168, 7581 of them for n = 0..5)."""
    if not isinstance(n, int) or n < 0:
        raise CapacityError(f"ground size must be a non-negative integer, got {n!r}")
    if n > MAX_UPSET_N:
        raise CapacityError(f"up-set enumeration is limited to n <= {MAX_UPSET_N}, got {n}")
    return _upsets(n)


def shifted_upset_indicators(n: int) -> tuple[int, ...]:
    """All shifted up-sets of 2^[n]."""
    if not isinstance(n, int) or n < 0:
        raise CapacityError(f"ground size must be a non-negative integer, got {n!r}")
    if n > MAX_SHIFTED_UPSET_N:
        raise CapacityError(f"shifted up-set enumeration is limited to n <= {MAX_SHIFTED_UPSET_N}, got {n}")
    return _shifted_upsets(n)


def minimal_members(fam: int, n: int) -> int:
    """Indicator of the inclusion-minimal members of ``fam``."""
    return fam & ~up_indicator(fam, n)
