"""Largest total size of cross-dependent and q-dependent s-tuples.

Search layout
-------------
Only ``s - 1`` families are enumerated, as a multiset of candidates taken in
order of decreasing size.  The last family is then the maximal completion:
every set ``B`` that has no disjoint partner union ``U`` of the first
``s - 1`` families with ``|U| + |B| <= q``.

An optimal tuple is saturated (no set can be added to any member), and
saturated tuples consist of up-sets, so restricting candidates to up-sets
loses nothing.  If an optimal tuple is listed with its largest families
first, the enumerated prefix reproduces it and its last family is no larger
than the last enumerated one.  Hence ``partial + (s - j) * size[next]`` is an
upper bound along the path to every optimal tuple, and pruning only when
this bound is *strictly* below the incumbent keeps every optimal tuple.  The
set of optimal tuples found is therefore independent of the incumbent, which
makes parallel and sequential runs agree.

Unions are tracked through their inclusion-minimal members only: for
up-sets the minimal unions of disjoint representatives are unions of
minimal members, and minimal unions decide the completion.
"""

from __future__ import annotations

from .._bits import disjoint_indicator, extend_unions, full_mask, iter_bits, small_indicator, subset_indicator
from ..core.types import SetFamily
from ..errors import CapacityError, ParameterError
from ._engine import DEFAULT_MAX_WITNESSES, NodeBudget, SearchReport, check_threads, run_tasks
from .upsets import minimal_members, shifted_upset_indicators, upset_indicators

MODES = ("full", "shifted-upsets")
FULL_MAX_N = 4
SHIFTED_MAX_N = 6
SHIFTED_MAX_S = 4

_MEMO_LIMIT = 1 << 20


class _Problem:
    """Everything a worker needs; sent once per process."""

    def __init__(self, n, s, q, cands, universe):
        self.n, self.s, self.q = n, s, q
        order = sorted(range(len(cands)), key=lambda i: (-cands[i].bit_count(), cands[i]))
        self.cands = [cands[i] for i in order]
        self.sizes = [c.bit_count() for c in self.cands]
        self.mins = [minimal_members(c, n) for c in self.cands]
        self.universe = universe
        self.usize = universe.bit_count()
        self.smallq = small_indicator(n, q)
        self.block = {}
        for u in range(1 << n):
            r = u.bit_count()
            if r <= q:
                self.block[u] = disjoint_indicator(u, n) & small_indicator(n, q - r) & universe
        self.seed = (s - 1) * self.usize


_P: _Problem | None = None


def _install(problem: _Problem) -> None:
    global _P
    _P = problem


def _minimal(x: int, n: int) -> int:
    return minimal_members(x, n)


def _search_chunk(first: int, best: int | None = None, budget: NodeBudget | None = None):
    p = _P
    n, s, sizes, mins, cands = p.n, p.s, p.sizes, p.mins, p.cands
    universe, usize, smallq, block = p.universe, p.usize, p.smallq, p.block
    N = len(cands)
    if budget is None:
        budget = NodeBudget()
    start = budget.used
    state = {"best": p.seed if best is None else best, "wits": set()}
    memo: dict[int, int] = {}
    chosen: list[int] = []

    def record(val: int, fams: list[int]) -> None:
        if val < state["best"]:
            return
        if val > state["best"]:
            state["best"] = val
            state["wits"] = set()
        state["wits"].add(tuple(sorted(fams)))

    def completion(d: int) -> int:
        hit = memo.get(d)
        if hit is not None:
            return hit
        blocked = 0
        for u in iter_bits(d):
            blocked |= block[u]
        c = universe & ~blocked
        if len(memo) < _MEMO_LIMIT:
            memo[d] = c
        return c

    def rec(j: int, idx: int, partial: int, d: int) -> None:
        budget.tick()
        if j == s - 1:
            c = completion(d)
            record(partial + c.bit_count(), [cands[t] for t in chosen] + [c])
            return
        if d == 0:
            # already dependent: the rest may be the whole universe
            record(partial + (s - j) * usize, [cands[t] for t in chosen] + [universe] * (s - j))
            return
        for t in range(idx, N):
            if partial + (s - j) * sizes[t] < state["best"]:
                break
            chosen.append(t)
            rec(j + 1, t, partial + sizes[t], _minimal(extend_unions(d, mins[t], n) & smallq, n))
            chosen.pop()

    if p.s * sizes[first] >= state["best"]:
        chosen.append(first)
        rec(1, first, sizes[first], _minimal(mins[first] & smallq, n))
    return state["best"], state["wits"], budget.used - start


def _run(problem: _Problem, threads: int):
    tasks = list(range(len(problem.cands)))
    if threads <= 1:
        _install(problem)
        best, wits, nodes = problem.seed, set(), 0
        budget = NodeBudget()
        for t in tasks:
            b, w, used = _search_chunk(t, best, budget)
            nodes += used
            if b > best:
                best, wits = b, set(w)
            elif b == best:
                wits |= w
        return best, wits, nodes
    results = run_tasks(_search_chunk, tasks, threads, initializer=_install, initargs=(problem,))
    best = max(r[0] for r in results)
    wits = set()
    for b, w, _ in results:
        if b == best:
            wits |= w
    nodes = sum(r[2] for r in results)
    NodeBudget().tick(nodes)
    return best, wits, nodes


def _family_key(f: SetFamily):
    return (-len(f), f.sort_key())


def _tuple_families(n: int, key: tuple[int, ...]) -> tuple[SetFamily, ...]:
    fams = [SetFamily.from_indicator(n, ind) for ind in key]
    fams.sort(key=_family_key)
    return tuple(fams)


def _witness_order(t: tuple[SetFamily, ...]):
    return tuple(_family_key(f) for f in t)


def _candidates(n: int, s: int, mode: str) -> tuple[list[int], list[str]]:
    if mode == "full":
        if n > FULL_MAX_N:
            raise CapacityError(f"full mode is limited to n <= {FULL_MAX_N}, got n={n}")
        return list(upset_indicators(n)), [
            "up-sets only (lossless: optimal tuples are saturated, hence up-sets)",
            "last family completed maximally",
        ]
    if mode == "shifted-upsets":
        if n > SHIFTED_MAX_N or s > SHIFTED_MAX_S:
            raise CapacityError(
                f"shifted-upsets mode is limited to n <= {SHIFTED_MAX_N}, s <= {SHIFTED_MAX_S}; got n={n}, s={s}"
            )
        return list(shifted_upset_indicators(n)), [
            "first s-1 families restricted to shifted up-sets",
            "last family completed maximally",
        ]
    raise ParameterError(f"unknown mode {mode!r}; expected one of {MODES}")


def _check(n, s):
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(s, int) or s < 2:
        raise ParameterError(f"s must be an integer >= 2, got {s!r}")


def dependent_sum_search(n: int, s: int, q: int, cands, universe: int, threads: int = 1, max_witnesses=DEFAULT_MAX_WITNESSES):
    """Generic engine: maximise the total size of s families drawn from ``cands``
    (last one completed inside ``universe``), with no pairwise disjoint
    representatives of union size at most ``q``.

    Returns ``(optimum, witnesses, witness_count, nodes)``.  The candidate
    list must contain ``universe`` and the empty family.
    """
    problem = _Problem(n, s, q, list(cands), universe)
    best, wits, nodes = _run(problem, check_threads(threads))
    tuples = sorted((_tuple_families(n, k) for k in wits), key=_witness_order)
    count = len(tuples)
    if max_witnesses is not None:
        tuples = tuples[:max_witnesses]
    return best, tuples, count, nodes


def max_q_dependent_sum(n: int, s: int, q: int, mode: str = "full", threads: int = 1, max_witnesses=DEFAULT_MAX_WITNESSES) -> SearchReport:
    """Largest ``|F_1| + ... + |F_s|`` over q-dependent families ``F_i`` in 2^[n]."""
    _check(n, s)
    if not isinstance(q, int) or not 1 <= q <= n:
        raise ParameterError(f"q must lie in [1, n={n}], got {q!r}")
    cands, reductions = _candidates(n, s, mode)
    best, tuples, count, nodes = dependent_sum_search(
        n, s, q, cands, subset_indicator(full_mask(n)), threads, max_witnesses
    )
    return SearchReport(
        problem="max_q_dependent_sum",
        params={"n": n, "s": s, "q": q, "mode": mode},
        optimum=best,
        witnesses=list(tuples),
        witness_count=count,
        nodes_explored=nodes,
        reductions_used=reductions,
        exhaustive=True,
        notes=["witnesses are unordered tuples listed largest family first"],
    )


def max_cross_dependent_sum(n: int, s: int, mode: str = "full", threads: int = 1, max_witnesses=DEFAULT_MAX_WITNESSES) -> SearchReport:
    """Largest ``|F_1| + ... + |F_s|`` over cross-dependent families in 2^[n]."""
    _check(n, s)
    cands, reductions = _candidates(n, s, mode)
    # q = n imposes no size restriction; n = 0 still needs q >= 0
    best, tuples, count, nodes = dependent_sum_search(
        n, s, n, cands, subset_indicator(full_mask(n)), threads, max_witnesses
    )
    return SearchReport(
        problem="max_cross_dependent_sum",
        params={"n": n, "s": s, "mode": mode},
        optimum=best,
        witnesses=list(tuples),
        witness_count=count,
        nodes_explored=nodes,
        reductions_used=reductions,
        exhaustive=True,
        notes=["witnesses are unordered tuples listed largest family first"],
    )
