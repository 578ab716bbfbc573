"""Most colors in a coloring of the k-layer with no rainbow s-matching.

The k-sets are colored in canonical order with restricted-growth labels
(a set may only open the next unused label), trying a new label first.
A label is rejected as soon as the newly colored set completes a rainbow
s-matching with sets colored earlier.  The bound is the number of labels
in use plus the number of uncolored sets.
"""

from __future__ import annotations

from .._bits import layer_masks
from ..core.matchings import is_star_like
from ..core.types import Coloring, SetFamily
from ..errors import CapacityError, ParameterError
from ._engine import NodeBudget, SearchReport
from .matching import FULL_MAX_CANDIDATES, max_no_s_matching_with_tau

MAX_CANDIDATES = 15


def _completes_rainbow(i: int, c: int, sets: list[int], colors: list[int], s: int) -> bool:
    """Whether set ``i`` with label ``c`` plus s-1 earlier sets forms a rainbow s-matching."""
    need = s - 1
    if need == 0:
        return True
    a = sets[i]

    def go(start: int, need: int, used: int, labels: int) -> bool:
        for j in range(start, i):
            b = sets[j]
            lab = 1 << colors[j]
            if b & used or lab & labels:
                continue
            if need == 1 or go(j + 1, need - 1, used | b, labels | lab):
                return True
        return False

    return go(0, need, a, 1 << c)


def _search(n: int, k: int, s: int, budget: NodeBudget):
    sets = layer_masks(n, k)
    N = len(sets)
    colors = [0] * N
    state = {"best": 0, "coloring": None}

    def rec(i: int, used: int) -> None:
        budget.tick()
        if used + (N - i) <= state["best"]:
            return
        if i == N:
            state["best"] = used
            state["coloring"] = list(colors)
            return
        for c in range(used, -1, -1):
            if c == used and used == 0 and i > 0:
                continue
            if _completes_rainbow(i, c, sets, colors, s):
                continue
            colors[i] = c
            rec(i + 1, used + 1 if c == used else used)

    rec(0, 0)
    return sets, state


def max_rainbow_free_colors(n: int, k: int, s: int) -> SearchReport:
    """Largest M such that some M-coloring of the k-subsets of [n] has no
    rainbow s-matching; the anti-Ramsey number is this plus one.

    For ``s = 1`` every non-empty class is a rainbow 1-matching, so the
    optimum is 0.  ``extra`` records, for the witness coloring, whether it
    is s-star-like and how its size compares with ``h(n, k, s - 1) + s``;
    the comparison is informational outside the range ``s >= 3``,
    ``k >= 2``, ``n >= sk + (s - 1)(k - 1)``.
    """
    for name, v in (("n", n), ("k", k), ("s", s)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParameterError(f"{name} must be an integer, got {v!r}")
    if not 1 <= k <= n or s < 1:
        raise ParameterError(f"need 1 <= k <= n and s >= 1, got n={n}, k={k}, s={s}")
    N = len(layer_masks(n, k))
    if N > MAX_CANDIDATES:
        raise CapacityError(f"C({n},{k}) = {N} sets exceed the coloring-search limit {MAX_CANDIDATES}")
    budget = NodeBudget()
    if s == 1:
        return SearchReport(
            problem="max_rainbow_free_colors",
            params={"n": n, "k": k, "s": s},
            optimum=0,
            nodes_explored=0,
            notes=["every coloring has a rainbow 1-matching"],
            extra={"ar": 1},
        )
    sets, st = _search(n, k, s, budget)
    labels = st["coloring"]
    M = st["best"]
    classes = [SetFamily(n, [sets[i] for i in range(len(sets)) if labels[i] == c]) for c in range(M)]
    coloring = Coloring(n, k, classes)
    extra = {"ar": M + 1}
    notes = []
    if s >= 2:
        star = is_star_like(coloring, s)
        extra["star_like"] = star is not None
        if N <= FULL_MAX_CANDIDATES and s - 1 >= 1:
            h = max_no_s_matching_with_tau(n, k, s - 1).optimum
            extra["h_plus_s"] = h + s
            in_range = s >= 3 and k >= 2 and n >= s * k + (s - 1) * (k - 1)
            extra["dichotomy_in_range"] = in_range
            holds = star is not None or M <= h + s
            extra["dichotomy_holds"] = holds
            if not holds:
                notes.append(
                    "witness is neither s-star-like nor within h(n,k,s-1)+s colors"
                    + ("" if in_range else " (outside the range where the dichotomy is claimed)")
                )
    return SearchReport(
        problem="max_rainbow_free_colors",
        params={"n": n, "k": k, "s": s},
        optimum=M,
        witnesses=[coloring],
        witness_count=None,
        nodes_explored=budget.used,
        reductions_used=["restricted-growth labels (label symmetry)"],
        exhaustive=True,
        notes=notes,
        extra=extra,
    )
