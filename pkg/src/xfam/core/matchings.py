"""Matching-type parameters: nu, tau, dependence, almost and rainbow matchings.

Every witness returned here is the lexicographically smallest one, comparing
candidate tuples member by member in canonical order.
"""

from __future__ import annotations

from typing import Sequence

from .._bits import (
    BITSET_MAX_N,
    containing_indicator,
    disjoint_indicator,
    extend_unions,
    indicator_of,
    iter_bits,
    layer_masks,
    small_indicator,
)
from ..errors import ParameterError, UndefinedCoverError
from .types import Coloring, ElementSet, MatchingWitness, SetFamily, _same_ground


def matching_number(f: SetFamily) -> int:
    """Maximum number of pairwise disjoint members.

    The empty set is disjoint from every set, so a family containing it
    gains one extra member in any matching.
    """
    n = f.ground_n
    bonus = 1 if 0 in f.maskset else 0
    masks = [m for m in f.masks if m]
    if not masks:
        return bonus
    if n <= BITSET_MAX_N:
        fam = indicator_of(masks)
        reach, t = 1, 0
        while True:
            reach = extend_unions(reach, fam, n)
            if not reach:
                return t + bonus
            t += 1
    return _matching_dp(masks) + bonus


def _matching_dp(masks: list[int]) -> int:
    # any set inside `avail` that contains min(avail) has min(avail) as its minimum
    by_low: dict[int, list[int]] = {}
    support = 0
    for m in masks:
        by_low.setdefault(m & -m, []).append(m)
        support |= m
    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if not avail:
            return 0
        hit = memo.get(avail)
        if hit is not None:
            return hit
        low = avail & -avail
        r = best(avail ^ low)
        for m in by_low.get(low, ()):
            if not m & ~avail:
                v = 1 + best(avail & ~m)
                if v > r:
                    r = v
        memo[avail] = r
        return r

    return best(support)


def minimum_cover(f: SetFamily) -> ElementSet:
    """A smallest set meeting every member (found by iterative deepening)."""
    if 0 in f.maskset:
        raise UndefinedCoverError("no set meets the empty set; tau is undefined")
    masks = list(f.masks)

    def search(budget: int, t: int) -> int | None:
        for m in masks:
            if not m & t:
                break
        else:
            return t
        if budget == 0:
            return None
        for b in iter_bits(m):
            r = search(budget - 1, t | (1 << b))
            if r is not None:
                return r
        return None

    for size in range(f.ground_n + 1):
        t = search(size, 0)
        if t is not None:
            return ElementSet(f.ground_n, t)
    raise AssertionError("unreachable: [n] meets every non-empty set")


def covering_number(f: SetFamily) -> int:
    """tau(f); zero for the empty family, undefined when the empty set is a member."""
    return len(minimum_cover(f))


def _check_families(families: Sequence[SetFamily]) -> int:
    families = list(families)
    if len(families) < 2:
        raise ParameterError("dependence needs at least two families")
    return _same_ground(families)


def find_disjoint_representatives(families: Sequence[SetFamily], q: int | None = None) -> MatchingWitness | None:
    """Pairwise disjoint ``F_i in families[i]`` with union of size at most ``q``.

    ``q=None`` means no size restriction.  Returns ``None`` when no such
    system exists.
    """
    families = list(families)
    n = _check_families(families)
    if q is None:
        q = n
    elif not isinstance(q, int) or not 1 <= q <= n:
        raise ParameterError(f"q={q!r} outside [1, {n}]")
    if n <= BITSET_MAX_N:
        picks = _representatives_bits(families, q, n)
    else:
        picks = _representatives_dfs(families, q)
    if picks is None:
        return None
    return MatchingWitness(tuple(ElementSet(n, m) for m in picks))


def _representatives_bits(families, q, n):
    s = len(families)
    suffix = [0] * (s + 1)
    suffix[s] = 1
    for i in range(s - 1, -1, -1):
        suffix[i] = extend_unions(suffix[i + 1], families[i].indicator(), n) & small_indicator(n, q)
    if not suffix[0]:
        return None
    used, picks = 0, []
    for i, fam in enumerate(families):
        for a in fam.masks:
            if a & used:
                continue
            u = used | a
            room = q - u.bit_count()
            if room >= 0 and suffix[i + 1] & disjoint_indicator(u, n) & small_indicator(n, room):
                picks.append(a)
                used = u
                break
    return picks


def _representatives_dfs(families, q):
    s = len(families)
    dead: set[tuple[int, int]] = set()
    picks: list[int] = []

    def go(i: int, used: int) -> bool:
        if i == s:
            return True
        if (i, used) in dead:
            return False
        for a in families[i].masks:
            if not a & used and (used | a).bit_count() <= q:
                picks.append(a)
                if go(i + 1, used | a):
                    return True
                picks.pop()
        dead.add((i, used))
        return False

    return picks if go(0, 0) else None


def are_cross_dependent(families: Sequence[SetFamily]) -> bool:
    """True when no choice of one member per family is pairwise disjoint."""
    return find_disjoint_representatives(families) is None


def are_q_dependent(families: Sequence[SetFamily], q: int) -> bool:
    """True when no pairwise disjoint representatives have union size <= q."""
    if q is None:
        raise ParameterError("q is required")
    return find_disjoint_representatives(families, q) is None


def has_almost_matching(f: SetFamily, s: int) -> bool:
    """Whether some ``s`` distinct members form an almost matching: at most one
    vertex lies in more than one of them, and it lies in exactly two."""
    if not isinstance(s, int) or s < 1:
        raise ParameterError(f"s must be a positive integer, got {s!r}")
    if f.ground_n <= BITSET_MAX_N:
        return _almost_bits(f.masks, s, f.ground_n)
    return find_almost_matching(f, s) is not None


def _almost_bits(masks, s: int, n: int) -> bool:
    has_empty = bool(masks) and masks[0] == 0
    ms = [m for m in masks if m]
    # the empty set never raises a degree, so it always helps to use it
    t = s - (1 if has_empty else 0)
    if t <= 0:
        return True
    if not ms:
        return False
    if t == 1:
        return True
    fam = indicator_of(ms)
    reach = 1
    for _ in range(t):
        reach = extend_unions(reach, fam, n)
        if not reach:
            break
    if reach:
        return True
    pairs = 0
    for a in ms:
        for b in iter_bits(a):
            x = 1 << b
            partners = fam & containing_indicator(b, n) & disjoint_indicator(a ^ x, n)
            if a == x:
                partners &= ~(1 << a)
            if partners:
                pairs |= (partners >> x) << a
    reach = pairs
    for _ in range(t - 2):
        if not reach:
            return False
        reach = extend_unions(reach, fam, n)
    return bool(reach)


def find_almost_matching(f: SetFamily, s: int) -> MatchingWitness | None:
    """The lexicographically smallest almost matching of ``s`` members, if any."""
    if not isinstance(s, int) or s < 1:
        raise ParameterError(f"s must be a positive integer, got {s!r}")
    masks = f.masks
    total = len(masks)
    dead: set[tuple] = set()
    picks: list[int] = []

    def go(start: int, need: int, covered: int, doubled: bool) -> bool:
        if need == 0:
            return True
        key = (start, need, covered, doubled)
        if key in dead:
            return False
        for idx in range(start, total - need + 1):
            a = masks[idx]
            overlap = a & covered
            if overlap:
                if doubled or overlap & (overlap - 1):
                    continue
                nxt = True
            else:
                nxt = doubled
            picks.append(a)
            if go(idx + 1, need - 1, covered | a, nxt):
                return True
            picks.pop()
        dead.add(key)
        return False

    if not go(0, s, 0, False):
        return None
    return MatchingWitness(tuple(ElementSet(f.ground_n, m) for m in picks))


def find_rainbow_matching(c: Coloring, s: int) -> MatchingWitness | None:
    """``s`` pairwise disjoint k-sets from ``s`` distinct classes, or None.

    The search is exhaustive; the witness is the lexicographically smallest
    in canonical order of the k-sets.
    """
    if not isinstance(s, int) or s < 1:
        raise ParameterError(f"s must be a positive integer, got {s!r}")
    layer = layer_masks(c.ground_n, c.k)
    colors = [c.color_of(m) for m in layer]
    picks: list[int] = []

    def go(start: int, need: int, used: int, used_colors: frozenset) -> bool:
        if need == 0:
            return True
        for idx in range(start, len(layer) - need + 1):
            a = layer[idx]
            col = colors[idx]
            if a & used or col in used_colors:
                continue
            picks.append(idx)
            if go(idx + 1, need - 1, used | a, used_colors | {col}):
                return True
            picks.pop()
        return False

    if s > len(c.classes) or not go(0, s, 0, frozenset()):
        return None
    return MatchingWitness(
        tuple(ElementSet(c.ground_n, layer[i]) for i in picks),
        tuple(colors[i] for i in picks),
    )


def is_star_like(c: Coloring, s: int) -> tuple[ElementSet, int] | None:
    """Find ``(Y, i)`` with ``|Y| = s - 2`` such that every set outside class ``i``
    meets ``Y``.  Returns the first such ``Y`` in canonical order."""
    if not isinstance(s, int) or s < 2:
        raise ParameterError(f"star-likeness needs s >= 2, got {s!r}")
    layer = layer_masks(c.ground_n, c.k)
    for y in layer_masks(c.ground_n, s - 2):
        missing = {c.color_of(m) for m in layer if not m & y}
        if len(missing) <= 1:
            return ElementSet(c.ground_n, y), (missing.pop() if missing else 1)
    return None
