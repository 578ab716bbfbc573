"""Bit-level kernels.

Two encodings are used throughout:

* a *set mask* is an ``int`` whose bit ``i - 1`` is set when element ``i``
  belongs to the set;
* an *indicator* is an ``int`` with one bit per subset of the ground set:
  bit ``U`` is set when the set with mask ``U`` belongs to the family.

Indicators make the family-level operations cheap.  For disjoint ``A`` and
``B`` the union mask is ``A + B``, so shifting an indicator left by ``A``
maps every member ``B`` disjoint from ``A`` onto ``A | B``.  Indicators have
``2**n`` bits and are only used for small ground sets (``n <= BITSET_MAX_N``).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

BITSET_MAX_N = 14


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    return tuple(b + 1 for b in iter_bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def layer_masks(n: int, k: int) -> list[int]:
    """All k-subsets of [n] in increasing mask order (which is colex order)."""
    if k < 0 or k > n:
        return []
    return sorted(sum(1 << i for i in c) for c in combinations(range(n), k))


@lru_cache(maxsize=None)
def subset_indicator(c: int) -> int:
    """Indicator of all subsets of the set mask ``c``."""
    if c == 0:
        return 1
    high = c.bit_length() - 1
    rest = subset_indicator(c ^ (1 << high))
    return rest | (rest << (1 << high))


def disjoint_indicator(a: int, n: int) -> int:
    """Indicator of all subsets of [n] disjoint from ``a``."""
    return subset_indicator(full_mask(n) & ~a)


@lru_cache(maxsize=None)
def containing_indicator(element_bit: int, n: int) -> int:
    """Indicator of all subsets of [n] containing the element at ``element_bit``."""
    return subset_indicator(full_mask(n)) & ~subset_indicator(full_mask(n) & ~(1 << element_bit))


@lru_cache(maxsize=None)
def small_indicator(n: int, q: int) -> int:
    """Indicator of all subsets of [n] with at most ``q`` elements."""
    ind = 0
    for u in range(1 << n):
        if u.bit_count() <= q:
            ind |= 1 << u
    return ind


def indicator_of(masks: Iterable[int]) -> int:
    ind = 0
    for m in masks:
        ind |= 1 << m
    return ind


def extend_unions(reach: int, fam: int, n: int) -> int:
    """Unions ``U | A`` over ``U`` in ``reach`` and ``A`` in ``fam`` with ``U & A == 0``.

    Both arguments and the result are indicators over [n].
    """
    out = 0
    if reach.bit_count() <= fam.bit_count():
        for u in iter_bits(reach):
            out |= (fam & disjoint_indicator(u, n)) << u
    else:
        for a in iter_bits(fam):
            out |= (reach & disjoint_indicator(a, n)) << a
    return out


def shadow_indicator(fam: int, n: int) -> int:
    """Indicator of the immediate shadow of the family ``fam``."""
    out = 0
    for e in range(n):
        out |= (fam & containing_indicator(e, n)) >> (1 << e)
    return out


def up_indicator(fam: int, n: int) -> int:
    """Indicator of ``{A + x : A in fam, x not in A}``."""
    out = 0
    for e in range(n):
        out |= (fam & ~containing_indicator(e, n) & subset_indicator(full_mask(n))) << (1 << e)
    return out
