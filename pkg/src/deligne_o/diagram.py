"""Weight diagrams, cap diagrams and the invariants built on them.

Vertices are stored as integer indices ``j``.  The vertex with index ``j``
carries the label ``j`` when delta is even and ``j + 1/2`` when delta is odd;
:func:`vertex_label` and :func:`format_vertex` recover the label.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from . import _kernels
from .partition import Partition, add_boxes, remove_boxes, transpose

__all__ = [
    "Mark",
    "WeightDiagram",
    "Cap",
    "CapDiagram",
    "KInvariants",
    "BoxMove",
    "InvalidDiagramError",
    "vertex_label",
    "format_vertex",
    "weight_diagram",
    "partition_of",
    "cap_diagram",
    "k_invariants",
    "rev",
    "rev_at",
    "rev_images",
    "dprime",
    "box_move",
    "SHIFT_TABLE",
]


class InvalidDiagramError(ValueError):
    """A weight diagram that is not the diagram of any partition."""


class Mark(IntEnum):
    DOWN = _kernels.DOWN
    UP = _kernels.UP
    CIRCLE = _kernels.CIRCLE
    CROSS = _kernels.CROSS
    DIAMOND = _kernels.DIAMOND

    @property
    def ascii(self) -> str:
        return "v^oxD"[self]

    @property
    def glyph(self) -> str:
        return "∨∧○×◇"[self]

    @classmethod
    def from_char(cls, ch: str) -> "Mark":
        for m in cls:
            if ch in (m.ascii, m.glyph):
                return m
        raise ValueError(f"unknown mark {ch!r}")


def vertex_label(j: int, delta: int) -> Fraction:
    return Fraction(2 * j + (delta & 1), 2)


def format_vertex(j: int, delta: int) -> str:
    return str(vertex_label(j, delta))


@dataclass(frozen=True)
class WeightDiagram:
    """Marks on the vertices of the half line; every vertex past ``marks`` is down.

    ``marks`` never ends in ``Mark.DOWN``, so two diagrams are equal exactly
    when they describe the same infinite marking.
    """

    delta: int
    marks: tuple[Mark, ...]

    def __post_init__(self):
        marks = list(self.marks)
        while marks and marks[-1] == Mark.DOWN:
            marks.pop()
        object.__setattr__(self, "marks", tuple(Mark(m) for m in marks))

    def __getitem__(self, j: int) -> Mark:
        if j < 0:
            raise IndexError(j)
        return self.marks[j] if j < len(self.marks) else Mark.DOWN

    def padded(self, n: int) -> tuple[Mark, ...]:
        """The first ``max(n, len(marks))`` marks."""
        return self.marks + (Mark.DOWN,) * max(0, n - len(self.marks))

    def array(self, n: int | None = None) -> np.ndarray:
        n = len(self.marks) if n is None else max(n, len(self.marks))
        return np.array(self.padded(n), dtype=np.int8)

    def count(self, mark: Mark) -> int:
        return sum(1 for m in self.marks if m == mark)

    def replace(self, changes: dict[int, Mark]) -> "WeightDiagram":
        n = max([len(self.marks)] + [j + 1 for j in changes])
        marks = list(self.padded(n))
        for j, m in changes.items():
            marks[j] = m
        return WeightDiagram(self.delta, tuple(marks))

    def to_ascii(self, n: int | None = None) -> str:
        n = len(self.marks) + 1 if n is None else n
        return "".join(m.ascii for m in self.padded(n))

    @classmethod
    def from_ascii(cls, text: str, delta: int) -> "WeightDiagram":
        return cls(delta, tuple(Mark.from_char(c) for c in text if not c.isspace()))

    def to_json(self) -> dict:
        return {"delta": self.delta, "marks": [m.ascii for m in self.marks]}


class Cap(NamedTuple):
    i: int
    j: int
    dotted: bool


@dataclass(frozen=True)
class CapDiagram:
    base: WeightDiagram
    caps: tuple[Cap, ...]

    @property
    def delta(self) -> int:
        return self.base.delta

    @property
    def defect(self) -> int:
        return len(self.caps)

    def pairs(self) -> set[tuple[int, int]]:
        return {(c.i, c.j) for c in self.caps}

    def to_json(self) -> dict:
        out = self.base.to_json()
        out["caps"] = [[c.i, c.j, c.dotted] for c in self.caps]
        return out

    def to_ascii(self) -> str:
        """Vertex labels, marks, then one row of cap art per nesting level."""
        n = max([len(self.base.marks) + 1] + [c.j + 2 for c in self.caps])
        width = max(len(format_vertex(n - 1, self.delta)), 1) + 2
        labels = "".join(format_vertex(j, self.delta).center(width) for j in range(n))
        marks = "".join(m.ascii.center(width) for m in self.base.padded(n))
        depth = {}
        for c in sorted(self.caps, key=lambda c: c.j - c.i):
            inner = [depth[d] for d in depth if c.i < d.i and d.j < c.j]
            depth[c] = 1 + max(inner, default=-1)
        rows = []
        for level in range(max(depth.values(), default=-1) + 1):
            line = [" "] * (n * width)
            for c, d in depth.items():
                a = c.i * width + width // 2
                b = c.j * width + width // 2
                if d >= level:
                    line[a] = line[b] = "|"
                if d == level:
                    fill = "." if c.dotted else "_"
                    for x in range(a + 1, b):
                        line[x] = fill
            rows.append("".join(line).rstrip())
        return "\n".join([labels.rstrip(), marks.rstrip()] + rows)


class KInvariants(NamedTuple):
    defect: int
    rank: int
    k: int


def _nverts(lam: Partition, delta: int) -> int:
    lt = transpose(lam)
    return lt.part(0) + len(lt) + abs(delta) + 2


@lru_cache(maxsize=None)
def weight_diagram(lam: Partition, delta: int) -> WeightDiagram:
    """Weight diagram of ``lam`` at the integer parameter ``delta``."""
    lam = Partition(lam)
    delta = int(delta)
    n = _nverts(lam, delta)
    colt = np.array(transpose(lam), dtype=np.int64)
    marks = _kernels.weight_marks(colt, delta, n)
    return WeightDiagram(delta, tuple(Mark(int(m)) for m in marks))


@lru_cache(maxsize=None)
def partition_of(w: WeightDiagram) -> Partition:
    """Recover the partition whose weight diagram is ``w``."""
    status, colt = _kernels.columns_from_marks(w.array(), w.delta)
    if status == 1:
        raise InvalidDiagramError(f"mark not allowed at its vertex: {w.to_ascii()} (delta={w.delta})")
    if status == 2:
        raise InvalidDiagramError(
            f"#circle - #cross must be {w.delta // 2}: {w.to_ascii()} (delta={w.delta})"
        )
    return transpose(Partition(int(c) for c in colt))


@lru_cache(maxsize=None)
def _caps(w: WeightDiagram, reverse_scan: bool) -> tuple[Cap, ...]:
    arr = _kernels.cap_pairs(w.array(), reverse_scan)
    caps = [Cap(int(i), int(j), bool(d)) for i, j, d in arr]
    return tuple(sorted(caps))


def cap_diagram(w: WeightDiagram | Partition, delta: int | None = None, *, reverse_scan: bool = False) -> CapDiagram:
    """Cap diagram by the two-stage construction.

    Accepts a weight diagram, or a partition together with ``delta``.
    ``reverse_scan`` runs the first stage scanning up-marks right to left;
    the result should not depend on it.
    """
    if not isinstance(w, WeightDiagram):
        w = weight_diagram(Partition(w), delta)
    return CapDiagram(w, _caps(w, reverse_scan))


@lru_cache(maxsize=None)
def k_invariants(lam: Partition, delta: int) -> KInvariants:
    w = weight_diagram(lam, delta)
    defect = len(_caps(w, False))
    rank = min(w.count(Mark.CIRCLE), w.count(Mark.CROSS))
    return KInvariants(defect, rank, defect + rank)


_FLIP = {Mark.UP: Mark.DOWN, Mark.DOWN: Mark.UP, Mark.DIAMOND: Mark.DIAMOND}


def rev(lam: Partition, caps: Iterable[Cap | tuple[int, int]], delta: int) -> Partition:
    """Reverse the orientation of every cap in ``caps`` (a subset of the cap diagram)."""
    cd = cap_diagram(lam, delta)
    allowed = cd.pairs()
    changes = {}
    for c in caps:
        i, j = c[0], c[1]
        if (i, j) not in allowed:
            raise ValueError(f"({i}, {j}) is not a cap of {Partition(lam)} at delta={delta}")
        for v in (i, j):
            changes[v] = _FLIP[cd.base[v]]
    return partition_of(cd.base.replace(changes))


def rev_at(lam: Partition, i: int, delta: int) -> Partition:
    """Flip the single vertex ``i`` (up <-> down, diamond fixed)."""
    w = weight_diagram(lam, delta)
    if w[i] not in _FLIP:
        raise ValueError(f"vertex {format_vertex(i, delta)} of {Partition(lam)} is {w[i].glyph}")
    return partition_of(w.replace({i: _FLIP[w[i]]}))


@lru_cache(maxsize=None)
def rev_images(lam: Partition, delta: int) -> tuple[Partition, ...]:
    """rev_A(lam) for every subset A of caps, identity first."""
    caps = cap_diagram(lam, delta).caps
    out = []
    for k in range(len(caps) + 1):
        for subset in combinations(caps, k):
            out.append(rev(lam, subset, delta))
    return tuple(out)


def dprime(lam: Partition, mu: Partition, delta: int) -> int:
    return int(Partition(mu) in rev_images(Partition(lam), delta))


# --------------------------------------------------------------------------
# single-box moves
# --------------------------------------------------------------------------

_M = Mark
# (marks after adding a box, marks before adding); removing reads it backwards
SHIFT_TABLE: tuple[tuple[tuple[Mark, ...], tuple[Mark, ...]], ...] = (
    ((_M.UP,), (_M.DOWN,)),
    ((_M.CIRCLE, _M.UP), (_M.UP, _M.CIRCLE)),
    ((_M.DOWN, _M.CIRCLE), (_M.CIRCLE, _M.DOWN)),
    ((_M.CROSS, _M.UP), (_M.UP, _M.CROSS)),
    ((_M.DOWN, _M.CROSS), (_M.CROSS, _M.DOWN)),
    ((_M.CIRCLE, _M.UP), (_M.DIAMOND, _M.CIRCLE)),
    ((_M.DIAMOND, _M.CIRCLE), (_M.CIRCLE, _M.DOWN)),
    ((_M.CIRCLE, _M.CROSS), (_M.DIAMOND, _M.DOWN)),
    ((_M.CIRCLE, _M.CROSS), (_M.UP, _M.DOWN)),
    ((_M.CROSS, _M.CIRCLE), (_M.UP, _M.DOWN)),
    ((_M.DIAMOND, _M.UP), (_M.CIRCLE, _M.CROSS)),
    ((_M.DOWN, _M.UP), (_M.CIRCLE, _M.CROSS)),
    ((_M.DOWN, _M.UP), (_M.CROSS, _M.CIRCLE)),
)


class BoxMove(NamedTuple):
    column: int  # 1-based column of the shift table
    vertex: int  # index of the leftmost affected vertex
    before: tuple[Mark, ...]
    after: tuple[Mark, ...]
    added: bool

    def describe(self, delta: int) -> str:
        b = "".join(m.glyph for m in self.before)
        a = "".join(m.glyph for m in self.after)
        return f"{b}@{format_vertex(self.vertex, delta)} ↦ {a}@{format_vertex(self.vertex, delta)}"


def _matching_columns(before, after, vertex, delta, added):
    out = []
    for col, (top, bottom) in enumerate(SHIFT_TABLE, start=1):
        src, dst = (bottom, top) if added else (top, bottom)
        if (src, dst) != (before, after):
            continue
        if col == 1 and not (delta & 1 and vertex == 0):
            continue
        out.append(col)
    return out


def box_move(lam: Partition, mu: Partition, delta: int) -> BoxMove | None:
    """Which shift-table column turns the diagram of ``lam`` into that of ``mu``.

    Returns ``None`` unless ``mu`` differs from ``lam`` by one box.  Raises
    ``RuntimeError`` if the diagrams differ in a way no column describes.
    """
    lam, mu = Partition(lam), Partition(mu)
    if mu in add_boxes(lam):
        added = True
    elif mu in remove_boxes(lam):
        added = False
    else:
        return None
    wl, wm = weight_diagram(lam, delta), weight_diagram(mu, delta)
    n = max(len(wl.marks), len(wm.marks))
    diff = [j for j in range(n) if wl[j] != wm[j]]
    if len(diff) == 1:
        v = diff[0]
        span = [v]
    elif len(diff) == 2 and diff[1] == diff[0] + 1:
        v = diff[0]
        span = diff
    else:
        raise RuntimeError(f"{lam} -> {mu} at delta={delta} changes vertices {diff}")
    before = tuple(wl[j] for j in span)
    after = tuple(wm[j] for j in span)
    cols = _matching_columns(before, after, v, delta, added)
    if len(cols) != 1:
        raise RuntimeError(f"{lam} -> {mu} at delta={delta} matches columns {cols}")
    return BoxMove(cols[0], v, before, after, added)
