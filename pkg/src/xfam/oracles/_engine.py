"""Shared search plumbing: reports, node budgets and the worker pool."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from ..core.types import Coloring, ElementSet, MatchingWitness, SetFamily
from ..errors import CapacityError, ParameterError

DEFAULT_MAX_NODES = 500_000_000
DEFAULT_MAX_WITNESSES = 10


def max_nodes() -> int:
    """Node budget per search, overridable through ``XFAM_MAX_NODES``."""
    raw = os.environ.get("XFAM_MAX_NODES")
    if raw is None or raw == "":
        return DEFAULT_MAX_NODES
    try:
        v = int(raw)
    except ValueError:
        raise CapacityError(f"XFAM_MAX_NODES must be an integer, got {raw!r}") from None
    if v <= 0:
        raise CapacityError("XFAM_MAX_NODES must be positive")
    return v


class NodeBudget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        self.limit = max_nodes() if limit is None else limit
        self.used = 0

    def tick(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise CapacityError(f"node budget of {self.limit} exceeded (set XFAM_MAX_NODES to raise it)")


def _jsonable(x: Any) -> Any:
    if isinstance(x, SetFamily):
        return {"n": x.ground_n, "sets": x.to_lists()}
    if isinstance(x, Coloring):
        return {"n": x.ground_n, "k": x.k, "classes": [c.to_lists() for c in x.classes]}
    if isinstance(x, ElementSet):
        return list(x.elements)
    if isinstance(x, MatchingWitness):
        d = {"sets": x.to_lists()}
        if x.class_labels is not None:
            d["class_labels"] = list(x.class_labels)
        return d
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class SearchReport:
    """Outcome of an optimisation oracle.

    ``witnesses`` holds at most ``max_witnesses`` optimal objects in canonical
    order.  ``witness_count`` is the number of distinct optimal objects seen
    when the search enumerates ties, else ``None``.
    """

    problem: str
    params: dict
    optimum: int
    witnesses: list = field(default_factory=list)
    witness_count: int | None = None
    nodes_explored: int = 0
    reductions_used: list[str] = field(default_factory=list)
    exhaustive: bool = True
    notes: list[str] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "params": _jsonable(self.params),
            "optimum": self.optimum,
            "witnesses": _jsonable(self.witnesses),
            "witness_count": self.witness_count,
            "nodes_explored": self.nodes_explored,
            "reductions_used": list(self.reductions_used),
            "exhaustive": self.exhaustive,
            "notes": list(self.notes),
            "extra": _jsonable(self.extra),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@dataclass
class StatementCheck:
    """Verdict of an exhaustive check of an inequality over a finite class."""

    statement: str
    params: dict
    passed: bool
    checked: int
    bound: Any = None
    maximum: Any = None
    counterexample: Any = None
    tight: Any = None
    nodes_explored: int = 0
    reductions_used: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "params": _jsonable(self.params),
            "passed": self.passed,
            "checked": self.checked,
            "bound": _jsonable(self.bound),
            "maximum": _jsonable(self.maximum),
            "counterexample": _jsonable(self.counterexample),
            "tight": _jsonable(self.tight),
            "nodes_explored": self.nodes_explored,
            "reductions_used": list(self.reductions_used),
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def run_tasks(fn: Callable, tasks: Sequence, threads: int, initializer=None, initargs=()) -> list:
    """Map ``fn`` over ``tasks`` in order, on a process pool when ``threads > 1``.

    Results come back in task order, so merging them is independent of
    scheduling.
    """
    if threads is None or threads <= 1 or len(tasks) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads, initializer=initializer, initargs=initargs) as ex:
        return list(ex.map(fn, tasks, chunksize=max(1, len(tasks) // (8 * threads))))


def check_threads(threads) -> int:
    if threads is None:
        return 1
    if not isinstance(threads, int) or threads < 1:
        raise ParameterError(f"threads must be a positive integer, got {threads!r}")
    return threads


def top_sorted(items: Iterable, key, limit: int | None) -> list:
    out = sorted(items, key=key)
    return out if limit is None else out[:limit]
