"""Family operators: left shifts, up-sets, shadows and traces."""

from __future__ import annotations

from .._bits import full_mask
from ..errors import ParameterError
from .types import ElementSet, SetFamily


def _check_pair(n: int, i: int, j: int) -> None:
    if not (isinstance(i, int) and isinstance(j, int)) or not 1 <= i < j <= n:
        raise ParameterError(f"shift needs 1 <= i < j <= {n}, got i={i!r}, j={j!r}")


def _shift_mask(a: int, i: int, j: int) -> int:
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    if a & bi or not a & bj:
        return a
    return (a ^ bj) | bi


def shift_set(a: ElementSet, i: int, j: int) -> ElementSet:
    """The (i, j)-shift of ``a``: replace j by i when j is in ``a`` and i is not."""
    _check_pair(a.ground_n, i, j)
    return ElementSet(a.ground_n, _shift_mask(a.members, i, j))


def shift_family(f: SetFamily, i: int, j: int) -> SetFamily:
    """The (i, j)-shift of a family.

    A member is replaced by its shift unless the shifted set is already
    present, in which case the member is kept.
    """
    _check_pair(f.ground_n, i, j)
    present = f.maskset
    out = []
    for a in f.masks:
        b = _shift_mask(a, i, j)
        out.append(a if b in present else b)
    return SetFamily(f.ground_n, out)


def fully_shift(f: SetFamily) -> SetFamily:
    """Apply (i, j)-shifts in lexicographic pair order, restarting after every
    change, until a whole pass leaves the family fixed."""
    n = f.ground_n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    cur = f
    changed = True
    while changed:
        changed = False
        for i, j in pairs:
            nxt = shift_family(cur, i, j)
            if nxt != cur:
                cur = nxt
                changed = True
                break
    return cur


def is_shifted(f: SetFamily) -> bool:
    present = f.maskset
    n = f.ground_n
    for a in f.masks:
        for j in range(2, n + 1):
            if not a >> (j - 1) & 1:
                continue
            for i in range(1, j):
                if not a >> (i - 1) & 1 and (a ^ (1 << (j - 1)) | (1 << (i - 1))) not in present:
                    return False
    return True


def is_up_set(f: SetFamily) -> bool:
    present = f.maskset
    for a in f.masks:
        for e in range(f.ground_n):
            if not a >> e & 1 and a | (1 << e) not in present:
                return False
    return True


def up_closure(f: SetFamily) -> SetFamily:
    """The smallest up-set containing ``f``."""
    seen = set(f.masks)
    stack = list(f.masks)
    while stack:
        a = stack.pop()
        for e in range(f.ground_n):
            b = a | (1 << e)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return SetFamily(f.ground_n, seen)


def shadow(f: SetFamily) -> SetFamily:
    """The immediate shadow: all sets obtained by deleting one element of a member."""
    out = set()
    for a in f.masks:
        x = a
        while x:
            low = x & -x
            out.add(a ^ low)
            x ^= low
    return SetFamily(f.ground_n, out)


def family_trace(g: SetFamily, q: ElementSet, p: int, reindex: bool = False) -> SetFamily:
    """``{G - Q : G in g, G & [p] == Q}``.

    By default the result stays on the ground set [n] (its members live in
    [p+1, n]).  With ``reindex=True`` every element is lowered by ``p`` and
    the result is a family on [n - p].
    """
    n = g.ground_n
    if not isinstance(p, int) or not 0 <= p <= n:
        raise ParameterError(f"trace prefix p={p!r} outside [0, {n}]")
    if q.ground_n != n:
        raise ParameterError("trace set lives on a different ground set")
    prefix = full_mask(p)
    if q.members & ~prefix:
        raise ParameterError(f"trace set {q} is not contained in [{p}]")
    out = [a ^ q.members for a in g.masks if a & prefix == q.members]
    if reindex:
        return SetFamily(n - p, (a >> p for a in out))
    return SetFamily(n, out)


def link_of_last(f: SetFamily) -> SetFamily:
    """``{A - {n} : n in A}`` as a family on [n - 1]."""
    n = f.ground_n
    if n < 1:
        raise ParameterError("ground set is empty")
    top = 1 << (n - 1)
    return SetFamily(n - 1, (a ^ top for a in f.masks if a & top))


def deletion_of_last(f: SetFamily) -> SetFamily:
    """``{A : n not in A}`` as a family on [n - 1]."""
    n = f.ground_n
    if n < 1:
        raise ParameterError("ground set is empty")
    top = 1 << (n - 1)
    return SetFamily(n - 1, (a for a in f.masks if not a & top))
