"""Exhaustive checks of three inequalities on small ground sets.

* :func:`verify_lemma61` -- weighted sizes of nested cross-dependent chains
  of (k-1)-uniform families;
* :func:`verify_prop2` -- total size of cross-dependent families made of
  1- and 2-element sets;
* :func:`verify_shadow_lemma` -- the shadow of an up-set whose size is that
  of a threshold family.
"""

from __future__ import annotations

from fractions import Fraction

from .._bits import layer_masks, shadow_indicator
from ..core.matchings import find_disjoint_representatives
from ..core.types import SetFamily
from ..errors import CapacityError, ParameterError
from ..formulas import binomial, lemma61_rhs
from ._engine import NodeBudget, StatementCheck
from .dependence import dependent_sum_search
from .upsets import upset_indicators

LEMMA61_MAX_SETS = 20
PROP2_MAX_N = 8
PROP2_MAX_S = 4
PROP2_MAX_CANDIDATES = 50_000
SHADOW_MAX_N = 5


def _int(name, v):
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParameterError(f"{name} must be an integer, got {v!r}")
    return v


def verify_lemma61(N: int, k: int, s: int, u) -> StatementCheck:
    """Check ``|F_1| + ... + |F_s| + u |F_{s+1}| <= s C(N, k-1)`` over every
    nested (``F_1 ⊇ ... ⊇ F_{s+1}``) cross-dependent chain of families of
    (k-1)-subsets of [N].

    A chain is the same as a level in ``0..s+1`` for every (k-1)-set (the
    number of families containing it).  The search maximises the weighted
    size exactly, with ``u`` kept as a Fraction.
    """
    _int("N", N), _int("k", k), _int("s", s)
    rhs = lemma61_rhs(N, k, s, u)
    u = Fraction(u)
    sets = layer_masks(N, k - 1)
    if len(sets) > LEMMA61_MAX_SETS:
        raise CapacityError(f"C({N},{k - 1}) = {len(sets)} sets exceed the limit {LEMMA61_MAX_SETS}")
    top = s + 1
    weight = [Fraction(min(L, s)) + (u if L == top else 0) for L in range(top + 1)]
    levels = [0] * len(sets)
    budget = NodeBudget()
    state = {"best": Fraction(-1), "levels": None}

    def chain():
        return [SetFamily(N, [sets[j] for j in range(len(sets)) if levels[j] >= i]) for i in range(1, top + 1)]

    def dependent() -> bool:
        return find_disjoint_representatives(chain()) is None

    def rec(i: int, value: Fraction) -> None:
        budget.tick()
        if value + (len(sets) - i) * weight[top] <= state["best"]:
            return
        if i == len(sets):
            state["best"], state["levels"] = value, list(levels)
            return
        for L in range(top, -1, -1):
            levels[i] = L
            if L == 0 or dependent():
                rec(i + 1, value + weight[L])
        levels[i] = 0

    rec(0, Fraction(0))
    levels[:] = state["levels"]
    best_chain = chain()
    best = state["best"]
    passed = best <= rhs
    return StatementCheck(
        statement="nested cross-dependent chain bound",
        params={"N": N, "k": k, "s": s, "u": u},
        passed=passed,
        checked=budget.used,
        bound=rhs,
        maximum=best,
        counterexample=None if passed else best_chain,
        tight=best_chain if best == rhs else None,
        nodes_explored=budget.used,
        notes=[f"largest weighted sum {best} against bound {rhs}"],
    )


def _prop2_candidates(n: int):
    """Families of 1- and 2-subsets of [n] closed under adding an element within that range."""
    pairs = layer_masks(n, 2)
    out = []
    for single in range(1 << n):
        base = 0
        for e in range(n):
            if single >> e & 1:
                base |= 1 << (1 << e)
        forced = [p for p in pairs if p & single]
        free = [p for p in pairs if not p & single]
        for p in forced:
            base |= 1 << p
        for choice in range(1 << len(free)):
            ind = base
            for b, p in enumerate(free):
                if choice >> b & 1:
                    ind |= 1 << p
            out.append(ind)
    return out


def verify_prop2(s: int, l: int) -> StatementCheck:
    """Check ``sum |F'_i| <= (l - 1) n' + s C(n', 2)`` for cross-dependent
    families ``F'_1, ..., F'_s`` of 1- and 2-subsets of ``[n']``, ``n' = 2s - l``.

    Runs the dependence-sum search with universe the 1- and 2-element sets;
    candidates are the families closed upward inside that universe, which
    loses nothing for the same saturation reason as the full search.
    """
    _int("s", s), _int("l", l)
    if s < 1 or not 1 <= l <= s:
        raise ParameterError(f"need s >= 1 and 1 <= l <= s, got s={s}, l={l}")
    n = 2 * s - l
    if n > PROP2_MAX_N or s > PROP2_MAX_S:
        raise CapacityError(f"limited to n' <= {PROP2_MAX_N}, s' <= {PROP2_MAX_S}; got n'={n}, s'={s}")
    bound = (l - 1) * n + s * binomial(n, 2)
    universe = 0
    for a in layer_masks(n, 1) + layer_masks(n, 2):
        universe |= 1 << a
    if s == 1:
        # a single family is cross-dependent only when empty
        best, tuples, count, nodes = 0, [(SetFamily(n),)], 1, 1
    else:
        cands = _prop2_candidates(n)
        if len(cands) > PROP2_MAX_CANDIDATES:
            raise CapacityError(f"{len(cands)} candidate families exceed the limit {PROP2_MAX_CANDIDATES}")
        best, tuples, count, nodes = dependent_sum_search(n, s, n, cands, universe, max_witnesses=1)
    passed = best <= bound
    return StatementCheck(
        statement="cross-dependent families of 1- and 2-sets",
        params={"s": s, "l": l, "n": n},
        passed=passed,
        checked=nodes,
        bound=bound,
        maximum=best,
        counterexample=None if passed else list(tuples[0]),
        tight=list(tuples[0]) if best == bound else None,
        nodes_explored=nodes,
        reductions_used=["families closed upward within the 1- and 2-layers", "last family completed maximally"],
        notes=[f"largest total {best} against bound {bound}; {count} optimal tuples"],
    )


def threshold_indicator(n: int, k: int) -> int:
    ind = 0
    for a in range(1 << n):
        if a.bit_count() >= k:
            ind |= 1 << a
    return ind


def verify_shadow_lemma(n: int) -> StatementCheck:
    """For every up-set F of 2^[n] with ``|F| = sum_{i >= k} C(n, i)`` (some
    ``1 <= k <= n``) check ``|shadow F| >= sum_{i=k-1}^{n-1} C(n, i)``, with
    equality exactly when F is the threshold family at k."""
    _int("n", n)
    if not 1 <= n <= SHADOW_MAX_N:
        raise CapacityError(f"shadow check is limited to 1 <= n <= {SHADOW_MAX_N}, got {n}")
    sizes = {sum(binomial(n, i) for i in range(k, n + 1)): k for k in range(1, n + 1)}
    thresholds = {k: threshold_indicator(n, k) for k in range(1, n + 1)}
    checked = strict = 0
    counterexample = None
    for ind in upset_indicators(n):
        k = sizes.get(ind.bit_count())
        if k is None:
            continue
        checked += 1
        sh = shadow_indicator(ind, n).bit_count()
        need = sum(binomial(n, i) for i in range(k - 1, n))
        is_threshold = ind == thresholds[k]
        if sh < need or (sh == need) != is_threshold:
            counterexample = {
                "family": SetFamily.from_indicator(n, ind),
                "k": k,
                "shadow_size": sh,
                "bound": need,
            }
            break
        strict += sh > need
    passed = counterexample is None
    return StatementCheck(
        statement="shadow of up-sets of threshold size",
        params={"n": n},
        passed=passed,
        checked=checked,
        counterexample=counterexample,
        nodes_explored=len(upset_indicators(n)),
        notes=[f"{checked} up-sets of threshold size, {strict} with strict inequality"],
    )

