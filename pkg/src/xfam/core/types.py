"""Value types: subsets of [n], families, colorings and matching witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .._bits import canonical_key, elements_of, full_mask, layer_masks, mask_of
from ..errors import ParameterError

MAX_GROUND = 64


def _check_ground(n: int) -> None:
    if not isinstance(n, int) or n < 0 or n > MAX_GROUND:
        raise ParameterError(f"ground size must be an integer in [0, {MAX_GROUND}], got {n!r}")


@dataclass(frozen=True)
class ElementSet:
    """A subset of [ground_n] stored as a bitmask (bit ``i - 1`` is element ``i``)."""

    ground_n: int
    members: int

    def __post_init__(self):
        _check_ground(self.ground_n)
        if self.members < 0 or self.members >> self.ground_n:
            raise ParameterError(f"mask {self.members:#x} has bits outside [1, {self.ground_n}]")

    @classmethod
    def of(cls, ground_n: int, elements: Iterable[int] = ()) -> ElementSet:
        elements = list(elements)
        for e in elements:
            if not isinstance(e, int) or e < 1 or e > ground_n:
                raise ParameterError(f"element {e!r} outside [1, {ground_n}]")
        return cls(ground_n, mask_of(elements))

    @property
    def elements(self) -> tuple[int, ...]:
        return elements_of(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return 1 <= x <= self.ground_n and bool(self.members >> (x - 1) & 1)

    def __lt__(self, other: ElementSet) -> bool:
        return canonical_key(self.members) < canonical_key(other.members)

    def isdisjoint(self, other: ElementSet) -> bool:
        return not self.members & other.members

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def _as_mask(ground_n: int, s) -> int:
    if isinstance(s, ElementSet):
        if s.ground_n != ground_n:
            raise ParameterError(f"set on [{s.ground_n}] used in a family on [{ground_n}]")
        return s.members
    return ElementSet.of(ground_n, s).members


class SetFamily:
    """A duplicate-free family of subsets of [ground_n].

    Members are kept in canonical order: ascending by (cardinality, mask).
    Instances are immutable and hashable.
    """

    __slots__ = ("ground_n", "masks", "_maskset")

    def __init__(self, ground_n: int, masks: Iterable[int] = ()):
        _check_ground(ground_n)
        ms = set()
        for m in masks:
            if not isinstance(m, int) or m < 0 or m >> ground_n:
                raise ParameterError(f"mask {m!r} is not a subset of [{ground_n}]")
            ms.add(m)
        object.__setattr__(self, "ground_n", ground_n)
        object.__setattr__(self, "masks", tuple(sorted(ms, key=canonical_key)))
        object.__setattr__(self, "_maskset", frozenset(ms))

    def __setattr__(self, name, value):
        raise AttributeError("SetFamily is immutable")

    @classmethod
    def from_sets(cls, ground_n: int, sets: Iterable) -> SetFamily:
        """Build from iterables of elements (or ElementSets)."""
        return cls(ground_n, (_as_mask(ground_n, s) for s in sets))

    @classmethod
    def from_indicator(cls, ground_n: int, indicator: int) -> SetFamily:
        from .._bits import iter_bits

        return cls(ground_n, iter_bits(indicator))

    @property
    def sets(self) -> tuple[ElementSet, ...]:
        return tuple(ElementSet(self.ground_n, m) for m in self.masks)

    @property
    def maskset(self) -> frozenset[int]:
        return self._maskset

    def indicator(self) -> int:
        ind = 0
        for m in self.masks:
            ind |= 1 << m
        return ind

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        if isinstance(s, int):
            return s in self._maskset
        try:
            return _as_mask(self.ground_n, s) in self._maskset
        except ParameterError:
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground_n == other.ground_n and self._maskset == other._maskset

    def __hash__(self) -> int:
        return hash((self.ground_n, self._maskset))

    def sort_key(self) -> tuple:
        """Key comparing families lexicographically by their canonical member lists."""
        return tuple(canonical_key(m) for m in self.masks)

    def union(self, other: SetFamily) -> SetFamily:
        _same_ground([self, other])
        return SetFamily(self.ground_n, self._maskset | other._maskset)

    def to_lists(self) -> list[list[int]]:
        return [list(elements_of(m)) for m in self.masks]

    def __repr__(self) -> str:
        body = ", ".join(str(s) for s in self.sets)
        return f"SetFamily(n={self.ground_n}, [{body}])"


def _same_ground(families: Sequence[SetFamily]) -> int:
    if not families:
        raise ParameterError("at least one family is required")
    n = families[0].ground_n
    for f in families:
        if f.ground_n != n:
            raise ParameterError(f"families on different ground sets: {n} vs {f.ground_n}")
    return n


def k_layer(n: int, k: int) -> SetFamily:
    """All k-subsets of [n]."""
    return SetFamily(n, layer_masks(n, k))


def power_set(n: int) -> SetFamily:
    return SetFamily(n, range(1 << n))


class Coloring:
    """A partition of the k-subsets of [n] into non-empty classes labelled 1..M."""

    __slots__ = ("ground_n", "k", "classes", "_color")

    def __init__(self, ground_n: int, k: int, classes: Iterable):
        _check_ground(ground_n)
        if k < 0 or k > ground_n:
            raise ParameterError(f"uniformity k={k} outside [0, {ground_n}]")
        fams = []
        for c in classes:
            fam = c if isinstance(c, SetFamily) else SetFamily.from_sets(ground_n, c)
            if fam.ground_n != ground_n:
                raise ParameterError("color class on a different ground set")
            if len(fam) == 0:
                raise ParameterError("color classes must be non-empty")
            fams.append(fam)
        color = {}
        for label, fam in enumerate(fams, start=1):
            for m in fam.masks:
                if m.bit_count() != k:
                    raise ParameterError(f"class {label} contains a set of size {m.bit_count()} != {k}")
                if m in color:
                    raise ParameterError(f"set {ElementSet(ground_n, m)} appears in two classes")
                color[m] = label
        layer = layer_masks(ground_n, k)
        if len(color) != len(layer):
            raise ParameterError("color classes do not cover the whole k-layer")
        object.__setattr__(self, "ground_n", ground_n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "classes", tuple(fams))
        object.__setattr__(self, "_color", color)

    def __setattr__(self, name, value):
        raise AttributeError("Coloring is immutable")

    @property
    def num_colors(self) -> int:
        return len(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def color_of(self, s) -> int:
        """Label (1-based) of the class containing the k-set ``s``."""
        m = s if isinstance(s, int) else _as_mask(self.ground_n, s)
        return self._color[m]

    def class_of(self, label: int) -> SetFamily:
        return self.classes[label - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.ground_n, self.k, self.classes) == (other.ground_n, other.k, other.classes)

    def __hash__(self) -> int:
        return hash((self.ground_n, self.k, self.classes))

    def __repr__(self) -> str:
        return f"Coloring(n={self.ground_n}, k={self.k}, M={len(self.classes)})"


@dataclass(frozen=True)
class MatchingWitness:
    """Sets certifying a (plain, rainbow or almost) matching; labels for rainbow ones."""

    sets: tuple[ElementSet, ...]
    class_labels: tuple[int, ...] | None = None

    def to_lists(self) -> list[list[int]]:
        return [list(s.elements) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)


def ground_full(n: int) -> ElementSet:
    return ElementSet(n, full_mask(n))
