"""Largest k-uniform families without an s-matching, with and without a
lower bound on the covering number.

The search runs over the k-sets of [n] in colex order, trying to include
each set before excluding it.  ``L[j]`` is the indicator of all unions of
``j`` pairwise disjoint chosen sets, so a candidate ``C`` may join only if
no member of ``L[s-1]`` is disjoint from it.  The bound is the current size
plus the number of later candidates that are still admissible.

Because sets are tried include-first in colex order, leaves appear in
lexicographic order of their member lists; with non-strict pruning the first
optimal family found is the lexicographically smallest one.
"""

from __future__ import annotations

from itertools import combinations

from .._bits import disjoint_indicator, iter_bits, layer_masks
from ..core.types import SetFamily
from ..errors import CapacityError, ParameterError
from ._engine import DEFAULT_MAX_WITNESSES, NodeBudget, SearchReport

FULL_MAX_CANDIDATES = 28
SHIFTED_MAX_CANDIDATES = 120
MODES = ("auto", "full", "shifted")


def _check(n, k, s):
    for name, v in (("n", n), ("k", k), ("s", s)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ParameterError(f"{name} must be an integer, got {v!r}")
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got n={n}, k={k}")
    if s < 1:
        raise ParameterError(f"s must be >= 1, got {s}")


def _shift_order(cands: list[int]):
    """Immediate predecessors and all successors (as candidate bitmasks) in the shift order."""
    index = {c: i for i, c in enumerate(cands)}
    preds = [0] * len(cands)
    succ_direct = [0] * len(cands)
    for i, c in enumerate(cands):
        for b in iter_bits(c):
            if b > 0 and not c >> (b - 1) & 1:
                p = index[c ^ (1 << b) ^ (1 << (b - 1))]
                preds[i] |= 1 << p
                succ_direct[p] |= 1 << i
    succ = [0] * len(cands)
    for i in range(len(cands) - 1, -1, -1):
        acc = succ_direct[i]
        for j in iter_bits(succ_direct[i]):
            acc |= succ[j]
        succ[i] = acc
    return preds, succ


class _Layers:
    """Union layers and the admissibility mask for an s-matching-free family."""

    def __init__(self, n: int, s: int, cands: list[int]):
        self.n, self.s, self.cands = n, s, cands
        self.disj = [disjoint_indicator(c, n) for c in cands]
        self._djc: dict[int, int] = {}

    def blocked_by(self, u: int) -> int:
        """Candidates disjoint from the union ``u``."""
        hit = self._djc.get(u)
        if hit is None:
            hit = 0
            for i, c in enumerate(self.cands):
                if not c & u:
                    hit |= 1 << i
            self._djc[u] = hit
        return hit

    def add(self, L: tuple[int, ...], i: int) -> tuple[tuple[int, ...], int]:
        """New layers after adding candidate ``i`` and the candidates newly blocked."""
        c, dj = self.cands[i], self.disj[i]
        new = list(L)
        for j in range(self.s - 1, 0, -1):
            new[j] = L[j] | ((L[j - 1] & dj) << c)
        fresh = new[self.s - 1] & ~L[self.s - 1]
        blocked = 0
        for u in iter_bits(fresh):
            blocked |= self.blocked_by(u)
        return tuple(new), blocked


def _search(n, k, s, cands, shifted, budget, tau_at_least=None, census=False, max_witnesses=DEFAULT_MAX_WITNESSES):
    N = len(cands)
    lay = _Layers(n, s, cands)
    preds, succ = _shift_order(cands) if shifted else (None, None)
    all_mask = (1 << N) - 1
    state = {"best": -1, "wits": [], "count": 0}
    picked: list[int] = []

    def feasible_leaf() -> bool:
        if tau_at_least is None:
            return True
        return not _has_small_cover([cands[i] for i in picked], n, tau_at_least - 1)

    def rec(idx: int, L, blocked: int, doomed: int, included: int) -> None:
        budget.tick()
        rem = (all_mask >> idx << idx) & ~blocked & ~doomed
        size = len(picked)
        bound = size + rem.bit_count()
        if bound < state["best"] or (bound == state["best"] and not census):
            return
        if not rem:
            if size < state["best"] or not feasible_leaf():
                return
            if size > state["best"]:
                state["best"] = size
                state["wits"] = []
                state["count"] = 0
            state["count"] += 1
            if max_witnesses is None or len(state["wits"]) < max_witnesses:
                state["wits"].append(tuple(cands[i] for i in picked))
            return
        i = (rem & -rem).bit_length() - 1
        if shifted and preds[i] & ~included:
            rec(i + 1, L, blocked, doomed | succ[i] | (1 << i), included)
            return
        L2, newly = lay.add(L, i)
        picked.append(i)
        rec(i + 1, L2, blocked | newly, doomed, included | (1 << i))
        picked.pop()
        rec(i + 1, L, blocked, doomed | (succ[i] if shifted else 0), included)

    L0 = (1,) + (0,) * (s - 1)
    if s == 1:
        # every k-set is a 1-matching; only the empty family qualifies
        rec(N, L0, all_mask, 0, 0)
    else:
        rec(0, L0, 0, 0, 0)
    return state


def _has_small_cover(masks: list[int], n: int, t: int) -> bool:
    """Whether some set of at most ``t`` elements meets every mask."""
    if not masks:
        return True
    for size in range(0, t + 1):
        for comb in combinations(range(n), size):
            cover = sum(1 << b for b in comb)
            if all(m & cover for m in masks):
                return True
    return False


def max_no_s_matching(n: int, k: int, s: int, mode: str = "auto", census: bool = False,
                      max_witnesses=DEFAULT_MAX_WITNESSES) -> SearchReport:
    """``e_k(n, s)``: the largest family of k-subsets of [n] with no s pairwise disjoint members.

    ``mode='full'`` searches all subfamilies (at most 28 candidate sets);
    ``mode='shifted'`` searches shifted families only, which is lossless
    because shifting keeps the size and does not increase the matching
    number (at most 120 candidates).  ``auto`` picks ``full`` when allowed.
    With ``census=True`` ties are enumerated and counted.
    """
    _check(n, k, s)
    cands = layer_masks(n, k)
    N = len(cands)
    if mode == "auto":
        mode = "full" if N <= FULL_MAX_CANDIDATES else "shifted"
    if mode not in ("full", "shifted"):
        raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")
    cap = FULL_MAX_CANDIDATES if mode == "full" else SHIFTED_MAX_CANDIDATES
    if N > cap:
        raise CapacityError(f"C({n},{k}) = {N} candidate sets exceed the {mode}-mode limit {cap}")
    budget = NodeBudget()
    st = _search(n, k, s, cands, mode == "shifted", budget, census=census, max_witnesses=max_witnesses)
    reductions = ["shifted families only (lossless)"] if mode == "shifted" else []
    wits = [SetFamily(n, w) for w in st["wits"]]
    return SearchReport(
        problem="max_no_s_matching",
        params={"n": n, "k": k, "s": s, "mode": mode},
        optimum=st["best"],
        witnesses=wits,
        witness_count=st["count"] if census else None,
        nodes_explored=budget.used,
        reductions_used=reductions,
        exhaustive=True,
    )


def max_no_s_matching_with_tau(n: int, k: int, s: int, census: bool = False,
                               max_witnesses=DEFAULT_MAX_WITNESSES) -> SearchReport:
    """``h(n, k, s)``: the largest family of k-sets with ``nu < s`` and ``tau >= s``.

    No shifting reduction is used, since shifts may lower the covering
    number.  When no family qualifies (always the case for ``s = 1``) the
    optimum is reported as 0 with no witness and ``extra['feasible']`` False.
    """
    _check(n, k, s)
    cands = layer_masks(n, k)
    if len(cands) > FULL_MAX_CANDIDATES:
        raise CapacityError(f"C({n},{k}) = {len(cands)} candidate sets exceed the limit {FULL_MAX_CANDIDATES}")
    budget = NodeBudget()
    if s == 1:
        st = {"best": -1, "wits": [], "count": 0}
    else:
        st = _search(n, k, s, cands, False, budget, tau_at_least=s, census=census, max_witnesses=max_witnesses)
    feasible = st["best"] >= 0
    notes = [] if feasible else ["no family satisfies both constraints"]
    return SearchReport(
        problem="max_no_s_matching_with_tau",
        params={"n": n, "k": k, "s": s},
        optimum=max(st["best"], 0),
        witnesses=[SetFamily(n, w) for w in st["wits"]],
        witness_count=(st["count"] if census else None) if feasible else 0,
        nodes_explored=budget.used,
        reductions_used=[],
        exhaustive=True,
        notes=notes,
        extra={"feasible": feasible},
    )

