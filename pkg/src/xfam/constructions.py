"""Named extremal families and colorings.

Every family is produced by filtering candidate sets through an explicit
membership predicate; nothing here is derived from the closed-form sizes in
:mod:`xfam.formulas`, so the two modules can be checked against each other.
"""

from __future__ import annotations

from itertools import combinations

from ._bits import full_mask, layer_masks
from .core.matchings import matching_number
from .core.types import Coloring, SetFamily
from .errors import CapacityError, ParameterError
from .formulas import binomial

# largest family these generators will materialise
MAX_MEMBERS = 1 << 22


def _int(name, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParameterError(f"{name} must be an integer, got {v!r}")
    return v


def _all_sets(n: int):
    if 1 << n > MAX_MEMBERS:
        raise CapacityError(f"2^{n} candidate sets exceed the generator limit {MAX_MEMBERS}")
    return range(1 << n)


def _k_sets(n: int, k: int):
    if binomial(n, k) > MAX_MEMBERS:
        raise CapacityError(f"C({n},{k}) candidate sets exceed the generator limit {MAX_MEMBERS}")
    # combinations keeps memory flat; order does not matter, SetFamily sorts
    for c in combinations(range(n), k):
        yield sum(1 << b for b in c)


def threshold_family(n: int, m: int) -> SetFamily:
    """All subsets of [n] with at least ``m`` elements."""
    _int("n", n), _int("m", m)
    if not 0 <= m <= n:
        raise ParameterError(f"threshold needs 0 <= m <= n, got n={n}, m={m}")
    return SetFamily(n, (a for a in _all_sets(n) if a.bit_count() >= m))


def tilde_family(s: int, m: int, l: int, n: int, i: int) -> SetFamily:
    """Member ``i`` of the tilde tuple: threshold at ``m`` for ``i < l``, at ``m + 1`` otherwise.

    Requires ``n >= q = s*m + s - l``; with ``n == q`` this is the
    cross-dependent tuple, in general an extremal q-dependent one.
    """
    for name, v in (("s", s), ("m", m), ("l", l), ("n", n), ("i", i)):
        _int(name, v)
    if s < 2 or m < 0 or not 1 <= l <= s:
        raise ParameterError(f"need s >= 2, m >= 0, 1 <= l <= s; got s={s}, m={m}, l={l}")
    q = s * m + s - l
    if n < q:
        raise ParameterError(f"need n >= q = {q}, got n={n}")
    if not 1 <= i <= s:
        raise ParameterError(f"index i={i} outside [1, {s}]")
    t = m if i < l else m + 1
    return SetFamily(n, (a for a in _all_sets(n) if a.bit_count() >= t))


def tilde_families(s: int, m: int, l: int, n: int | None = None) -> tuple[SetFamily, ...]:
    """The whole tilde tuple; ``n`` defaults to ``s*m + s - l``."""
    if n is None:
        n = s * m + s - l
    first = tilde_family(s, m, l, n, 1)
    if l == 1:
        return (first,) * s
    last = tilde_family(s, m, l, n, s)
    return tuple(first if i < l else last for i in range(1, s + 1))


def frankl_family(n: int, k: int, s: int, i: int) -> SetFamily:
    """k-sets ``A`` of [n] with ``|A & [(s+1)i - 1]| >= i``."""
    for name, v in (("n", n), ("k", k), ("s", s), ("i", i)):
        _int(name, v)
    if k < 1 or s < 1:
        raise ParameterError(f"need k, s >= 1, got k={k}, s={s}")
    if n < (s + 1) * k:
        raise ParameterError(f"need n >= (s + 1)k = {(s + 1) * k}, got n={n}")
    if not 1 <= i <= k:
        raise ParameterError(f"index i={i} outside [1, {k}]")
    prefix = full_mask((s + 1) * i - 1)
    return SetFamily(n, (a for a in _k_sets(n, k) if (a & prefix).bit_count() >= i))


def hm_family(n: int, k: int, s: int) -> SetFamily:
    """k-sets meeting [s], plus ``[s+1, s+k]``, minus the k-sets whose trace
    on [s] is exactly ``{s}`` and which miss ``[s+1, s+k]``."""
    for name, v in (("n", n), ("k", k), ("s", s)):
        _int(name, v)
    if k < 2 or s < 1:
        raise ParameterError(f"need k >= 2 and s >= 1, got k={k}, s={s}")
    if n < (s + 1) * k:
        raise ParameterError(f"need n >= sk + k = {(s + 1) * k}, got n={n}")
    head = full_mask(s)
    last = 1 << (s - 1)
    block = full_mask(s + k) ^ head

    def member(a: int) -> bool:
        if a == block:
            return True
        if not a & head:
            return False
        return not (a & head == last and not a & block)

    return SetFamily(n, (a for a in _k_sets(n, k) if member(a)))


def kleitman_family(s: int, m: int) -> SetFamily:
    """Sets of [sm] with at least ``m + 1`` elements together with the m-subsets of [sm - 1]."""
    _int("s", s), _int("m", m)
    if s < 2 or m < 1:
        raise ParameterError(f"need s >= 2 and m >= 1, got s={s}, m={m}")
    n = s * m
    top = 1 << (n - 1)

    def member(a: int) -> bool:
        c = a.bit_count()
        return c >= m + 1 or (c == m and not a & top)

    return SetFamily(n, (a for a in _all_sets(n) if member(a)))


def star_family(n: int, k: int, center: int = 1) -> SetFamily:
    """All k-subsets of [n] containing ``center``."""
    _int("n", n), _int("k", k), _int("center", center)
    if not 1 <= center <= n or not 1 <= k <= n:
        raise ParameterError(f"need 1 <= center, k <= n; got n={n}, k={k}, center={center}")
    bit = 1 << (center - 1)
    return SetFamily(n, (a for a in _k_sets(n, k) if a & bit))


def ar_lower_coloring(n: int, k: int, s: int, base: SetFamily) -> Coloring:
    """Coloring with no rainbow s-matching built from a base family with ``nu < s - 1``.

    Label 1 holds every k-set outside ``base``; each member of ``base``
    gets its own label ``2, 3, ...`` in canonical order.
    """
    _int("n", n), _int("k", k), _int("s", s)
    if s < 2:
        raise ParameterError(f"need s >= 2, got s={s}")
    if base.ground_n != n:
        raise ParameterError(f"base lives on [{base.ground_n}], expected [{n}]")
    if not 1 <= k <= n:
        raise ParameterError(f"need 1 <= k <= n, got k={k}")
    for a in base.masks:
        if a.bit_count() != k:
            raise ParameterError(f"base member of size {a.bit_count()} is not a {k}-set")
    if matching_number(base) >= s - 1:
        raise ParameterError(f"base must have matching number < s - 1 = {s - 1}")
    layer = layer_masks(n, k)
    rest = [a for a in layer if a not in base.maskset]
    if not rest:
        raise ParameterError("base must not be the whole k-layer")
    classes = [SetFamily(n, rest)] + [SetFamily(n, [a]) for a in base.masks]
    return Coloring(n, k, classes)

