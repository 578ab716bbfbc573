"""Plain-text family and coloring files.

Family format::

    n=5
    {}
    1,3
    2,4,5

Coloring format: ``n=`` and ``k=`` header lines, then one block per class,
each headed by ``class=<label>`` and separated by blank lines.
"""

from __future__ import annotations

from pathlib import Path

from .._bits import elements_of, mask_of
from ..errors import FormatError
from .types import Coloring, SetFamily


def format_set_line(mask: int) -> str:
    if mask == 0:
        return "{}"
    return ",".join(map(str, elements_of(mask)))


def format_family(f: SetFamily) -> str:
    lines = [f"n={f.ground_n}"]
    lines.extend(format_set_line(m) for m in f.masks)
    return "\n".join(lines) + "\n"


def _header(line: str, key: str, lineno: int) -> int:
    line = line.strip()
    if not line.startswith(key + "="):
        raise FormatError(f"line {lineno}: expected '{key}=<int>', got {line!r}")
    try:
        return int(line[len(key) + 1:])
    except ValueError:
        raise FormatError(f"line {lineno}: bad integer in {line!r}") from None


def _parse_set(line: str, n: int, lineno: int) -> int:
    if line == "{}":
        return 0
    try:
        elems = [int(tok) for tok in line.split(",")]
    except ValueError:
        raise FormatError(f"line {lineno}: not a comma-separated list of integers: {line!r}") from None
    for a, b in zip(elems, elems[1:]):
        if b <= a:
            raise FormatError(f"line {lineno}: elements must be strictly ascending: {line!r}")
    for e in elems:
        if not 1 <= e <= n:
            raise FormatError(f"line {lineno}: element {e} outside [1, {n}]")
    return mask_of(elems)


def _parse_sets(lines, n: int, first_lineno: int) -> list[int]:
    masks, seen = [], set()
    for offset, raw in enumerate(lines):
        lineno = first_lineno + offset
        line = raw.strip()
        if not line:
            continue
        m = _parse_set(line, n, lineno)
        if m in seen:
            raise FormatError(f"line {lineno}: duplicate set {line!r}")
        seen.add(m)
        masks.append(m)
    return masks


def parse_family(text: str) -> SetFamily:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty input: expected 'n=<int>' header")
    n = _header(lines[0], "n", 1)
    try:
        return SetFamily(n, _parse_sets(lines[1:], n, 2))
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_coloring(c: Coloring) -> str:
    out = [f"n={c.ground_n}", f"k={c.k}"]
    for label, fam in enumerate(c.classes, start=1):
        out.append("")
        out.append(f"class={label}")
        out.extend(format_set_line(m) for m in fam.masks)
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = text.splitlines()
    if len(lines) < 2:
        raise FormatError("expected 'n=' and 'k=' header lines")
    n = _header(lines[0], "n", 1)
    k = _header(lines[1], "k", 2)
    blocks: list[tuple[int, list[int]]] = []
    current: list[int] | None = None
    seen_labels = set()
    for idx in range(2, len(lines)):
        line = lines[idx].strip()
        if not line:
            continue
        if line.startswith("class="):
            label = _header(line, "class", idx + 1)
            if label in seen_labels:
                raise FormatError(f"line {idx + 1}: duplicate class label {label}")
            seen_labels.add(label)
            current = []
            blocks.append((label, current))
            continue
        if current is None:
            raise FormatError(f"line {idx + 1}: set before the first 'class=' header")
        current.append(_parse_set(line, n, idx + 1))
    blocks.sort(key=lambda b: b[0])
    try:
        return Coloring(n, k, [SetFamily(n, masks) for _, masks in blocks])
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_family(path) -> SetFamily:
    return parse_family(Path(path).read_text())


def write_family(path, f: SetFamily) -> None:
    Path(path).write_text(format_family(f))


def read_coloring(path) -> Coloring:
    return parse_coloring(Path(path).read_text())


def write_coloring(path, c: Coloring) -> None:
    Path(path).write_text(format_coloring(c))
