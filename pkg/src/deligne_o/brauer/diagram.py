"""Brauer diagrams as perfect matchings with a fixed endpoint order.

A diagram of type r -> s has bottom endpoints 0..r-1 (the source) and top
endpoints r..r+s-1 (the target).  It is stored as a partner array: entry a
is the endpoint joined to a.  Diagrams of a given type are numbered by the
mixed-radix rank of their matching, which also fixes the basis order of the
Brauer algebra.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .. import _kernels as K

__all__ = [
    "BrauerDiagram",
    "ArityError",
    "count_diagrams",
    "diagrams",
    "identity",
    "cup",
    "cap",
    "permutation",
    "compose",
    "tensor",
]


class ArityError(ValueError):
    """Source and target arities do not match."""


def count_diagrams(n_endpoints: int) -> int:
    """(n-1)!! perfect matchings on n endpoints (0 when n is odd)."""
    if n_endpoints % 2:
        return 0
    out = 1
    for k in range(n_endpoints - 1, 0, -2):
        out *= k
    return out


@lru_cache(maxsize=None)
def _unrank(index: int, n: int) -> tuple[int, ...]:
    return tuple(int(v) for v in K.matching_unrank(index, n))


def _rank(partner: Sequence[int]) -> int:
    return int(K.matching_rank(np.asarray(partner, dtype=np.int64)))


class BrauerDiagram:
    """A Brauer diagram of type ``r -> s``."""

    __slots__ = ("r", "s", "partner", "_index")

    def __init__(self, r: int, s: int, partner: Sequence[int]):
        partner = tuple(int(p) for p in partner)
        n = r + s
        if len(partner) != n or n % 2:
            raise ValueError(f"need a perfect matching on {n} endpoints, got {partner}")
        for a, b in enumerate(partner):
            if not 0 <= b < n or b == a or partner[b] != a:
                raise ValueError(f"not a perfect matching: {partner}")
        self.r, self.s, self.partner = r, s, partner
        self._index = None

    @classmethod
    def from_pairs(cls, r: int, s: int, pairs: Iterable[tuple[int, int]]) -> "BrauerDiagram":
        partner = [-1] * (r + s)
        for a, b in pairs:
            partner[a], partner[b] = b, a
        return cls(r, s, partner)

    @classmethod
    def from_index(cls, r: int, s: int, index: int) -> "BrauerDiagram":
        d = cls.__new__(cls)
        d.r, d.s, d.partner, d._index = r, s, _unrank(index, r + s), index
        return d

    @property
    def type(self) -> tuple[int, int]:
        return (self.r, self.s)

    @property
    def index(self) -> int:
        """Position in the basis of diagrams of this type."""
        if self._index is None:
            self._index = _rank(self.partner)
        return self._index

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in enumerate(self.partner) if a < b]

    def propagating(self) -> int:
        """Number of strands joining a bottom endpoint to a top endpoint."""
        return sum(1 for a in range(self.r) if self.partner[a] >= self.r)

    def is_permutation(self) -> bool:
        return self.r == self.s and self.propagating() == self.r

    def closure_loops(self) -> int:
        """Loops left after joining top endpoint r+j to bottom endpoint j."""
        if self.r != self.s:
            raise ArityError("closure needs a diagram of type r -> r")
        if self.r == 0:
            return 0
        return int(K.closure_loops(np.asarray(self.partner, dtype=np.int64), self.r))

    def __eq__(self, other) -> bool:
        return isinstance(other, BrauerDiagram) and self.type == other.type and self.partner == other.partner

    def __hash__(self):
        return hash((self.r, self.s, self.partner))

    def __repr__(self) -> str:
        return f"BrauerDiagram({self.r}->{self.s}, {self.pairs})"

    def __matmul__(self, other: "BrauerDiagram") -> tuple["BrauerDiagram", int]:
        """``h @ g`` is h after g, returned with its bubble count."""
        return compose(other, self)


def diagrams(r: int, s: int) -> Iterator[BrauerDiagram]:
    """All diagrams of type r -> s in basis order."""
    for k in range(count_diagrams(r + s)):
        yield BrauerDiagram.from_index(r, s, k)


def identity(r: int) -> BrauerDiagram:
    return BrauerDiagram(r, r, [a + r for a in range(r)] + list(range(r)))


def cup() -> BrauerDiagram:
    """The unique diagram 0 -> 2."""
    return BrauerDiagram(0, 2, (1, 0))


def cap() -> BrauerDiagram:
    """The unique diagram 2 -> 0."""
    return BrauerDiagram(2, 0, (1, 0))


def permutation(perm: Sequence[int]) -> BrauerDiagram:
    """Bottom endpoint i joined to top endpoint perm[i]."""
    r = len(perm)
    if sorted(perm) != list(range(r)):
        raise ValueError(f"not a permutation: {perm}")
    partner = [0] * (2 * r)
    for i, j in enumerate(perm):
        partner[i], partner[r + j] = r + j, i
    return BrauerDiagram(r, r, partner)


@lru_cache(maxsize=200_000)
def _compose_index(q: int, r: int, s: int, gi: int, hi: int) -> tuple[int, int]:
    pg = np.asarray(_unrank(gi, q + r), dtype=np.int64)
    ph = np.asarray(_unrank(hi, r + s), dtype=np.int64)
    out, bubbles = K.compose(pg, q, r, ph, s)
    return _rank(out), int(bubbles)


def compose(g: BrauerDiagram, h: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack h on top of g: the diagram h*g and the number of closed loops removed."""
    if g.s != h.r:
        raise ArityError(f"cannot compose {g.r}->{g.s} with {h.r}->{h.s}")
    idx, bubbles = _compose_index(g.r, g.s, h.s, g.index, h.index)
    return BrauerDiagram.from_index(g.r, h.s, idx), bubbles


def tensor(g: BrauerDiagram, h: BrauerDiagram) -> BrauerDiagram:
    """Horizontal juxtaposition, g on the left."""
    r1, s1, r2, s2 = g.r, g.s, h.r, h.s
    r = r1 + r2

    def gmap(a):  # endpoint of g -> endpoint of g (x) h
        return a if a < r1 else r + (a - r1)

    def hmap(a):
        return r1 + a if a < r2 else r + s1 + (a - r2)

    partner = [0] * (r + s1 + s2)
    for a, b in enumerate(g.partner):
        partner[gmap(a)] = gmap(b)
    for a, b in enumerate(h.partner):
        partner[hmap(a)] = hmap(b)
    return BrauerDiagram(r, s1 + s2, partner)
