"""Largest families without an almost matching of size s."""

from __future__ import annotations

from itertools import combinations, permutations

from .._bits import canonical_key, iter_bits
from ..core.matchings import has_almost_matching
from ..core.types import SetFamily
from ..errors import CapacityError, ParameterError
from ._engine import DEFAULT_MAX_WITNESSES, NodeBudget, SearchReport
from .upsets import upset_indicators

MODES = ("full", "upsets")
FULL_MAX_N = 4
UPSETS_MAX_N = 5


def is_almost_matching(masks) -> bool:
    """Whether the given distinct sets have at most one vertex of degree > 1, of degree 2."""
    seen = twice = thrice = 0
    for a in masks:
        thrice |= twice & a
        twice |= seen & a
        seen |= a
    return not thrice and twice & (twice - 1) == 0


def _permute(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for b in iter_bits(mask):
        out |= 1 << perm[b]
    return out


def canonical_form(masks, n: int) -> tuple:
    """Smallest sorted member tuple over all relabelings of [n]."""
    best = None
    for perm in permutations(range(n)):
        img = tuple(sorted((_permute(m, perm) for m in masks), key=canonical_key))
        key = tuple(canonical_key(m) for m in img)
        if best is None or key < best[0]:
            best = (key, img)
    return best[1]


def _full_search(n: int, s: int, budget: NodeBudget):
    cands = sorted(range(1 << n), key=canonical_key)
    N = len(cands)
    # forbid[i]: masks (over candidate indices) of the other members of each
    # forbidden configuration whose last member is i
    forbid: list[list[int]] = [[] for _ in range(N)]
    for combo in combinations(range(N), s):
        if is_almost_matching([cands[i] for i in combo]):
            rest = 0
            for i in combo[:-1]:
                rest |= 1 << i
            forbid[combo[-1]].append(rest)
    state = {"best": -1, "fams": []}
    picked: list[int] = []

    def rec(idx: int, included: int) -> None:
        budget.tick()
        size = len(picked)
        if size + (N - idx) < state["best"]:
            return
        if idx == N:
            if size > state["best"]:
                state["best"], state["fams"] = size, []
            state["fams"].append(tuple(cands[i] for i in picked))
            return
        if all(r & ~included for r in forbid[idx]):
            picked.append(idx)
            rec(idx + 1, included | (1 << idx))
            picked.pop()
        rec(idx + 1, included)

    rec(0, 0)
    return state["best"], state["fams"]


def _upsets_search(n: int, s: int, budget: NodeBudget):
    best, fams = -1, []
    for ind in upset_indicators(n):
        budget.tick()
        f = SetFamily.from_indicator(n, ind)
        if len(f) < best or has_almost_matching(f, s):
            continue
        if len(f) > best:
            best, fams = len(f), []
        fams.append(f.masks)
    return best, fams


def max_almost_matching_free(n: int, s: int, mode: str = "full", max_witnesses=DEFAULT_MAX_WITNESSES) -> SearchReport:
    """``a(n, s)``: the largest family in 2^[n] containing no almost matching of size s.

    Every optimal family is enumerated.  ``extra`` carries the number of
    optimal families and of their classes under relabeling of [n], with one
    representative per class.
    """
    for name, v in (("n", n), ("s", s)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParameterError(f"{name} must be an integer, got {v!r}")
    if n < 0 or s < 1:
        raise ParameterError(f"need n >= 0 and s >= 1, got n={n}, s={s}")
    budget = NodeBudget()
    if mode == "full":
        if n > FULL_MAX_N:
            raise CapacityError(f"full mode is limited to n <= {FULL_MAX_N}, got n={n}")
        best, fams = _full_search(n, s, budget)
        reductions = []
    elif mode == "upsets":
        if n > UPSETS_MAX_N:
            raise CapacityError(f"upsets mode is limited to n <= {UPSETS_MAX_N}, got n={n}")
        best, fams = _upsets_search(n, s, budget)
        reductions = ["up-sets only"]
    else:
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    families = sorted((SetFamily(n, f) for f in fams), key=SetFamily.sort_key)
    classes = sorted({canonical_form(f.masks, n) for f in families}, key=lambda t: tuple(canonical_key(m) for m in t))
    return SearchReport(
        problem="max_almost_matching_free",
        params={"n": n, "s": s, "mode": mode},
        optimum=best,
        witnesses=families if max_witnesses is None else families[:max_witnesses],
        witness_count=len(families),
        nodes_explored=budget.used,
        reductions_used=reductions,
        exhaustive=True,
        extra={
            "classes_up_to_permutation": len(classes),
            "class_representatives": [SetFamily(n, c) for c in classes],
        },
    )
