"""Exact linear combinations of Brauer diagrams over Q, at a fixed parameter delta."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .. import _kernels as K
from .diagram import (
    ArityError,
    BrauerDiagram,
    _compose_index,
    count_diagrams,
    identity,
    tensor as tensor_diagrams,
)

__all__ = ["BrauerElement", "composition_table", "as_fraction"]

# full product tables are built up to B_4 (105^2 entries); larger products go pair by pair
TABLE_MAX_RANK = 4


def as_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@lru_cache(maxsize=None)
def composition_table(r: int) -> tuple[np.ndarray, np.ndarray]:
    """(index, bubbles) tables of B_r; entry [h, g] describes h after g."""
    idx, bub = K.composition_table(r, count_diagrams(2 * r))
    idx.setflags(write=False)
    bub.setflags(write=False)
    return idx, bub


class BrauerElement:
    """Sum of diagrams of one type r -> s with rational coefficients.

    Terms are keyed by diagram index; ``h @ g`` is composition (g first),
    each closed loop contributing a factor delta.
    """

    __slots__ = ("r", "s", "delta", "_c")

    def __init__(self, r: int, s: int, terms: Mapping | Iterable = (), delta=0):
        self.r, self.s = r, s
        self.delta = as_fraction(delta)
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict[int, Fraction] = {}
        for key, coeff in items:
            if isinstance(key, BrauerDiagram):
                if key.type != (r, s):
                    raise ArityError(f"diagram {key} in an element of type {r}->{s}")
                key = key.index
            coeff = as_fraction(coeff)
            if coeff:
                c[int(key)] = c.get(int(key), Fraction(0)) + coeff
        self._c = {k: v for k, v in c.items() if v}

    # construction -----------------------------------------------------

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, delta, coeff=1) -> "BrauerElement":
        return cls(d.r, d.s, {d.index: coeff}, delta)

    @classmethod
    def identity(cls, r: int, delta) -> "BrauerElement":
        return cls.from_diagram(identity(r), delta)

    @classmethod
    def zero(cls, r: int, s: int, delta) -> "BrauerElement":
        return cls(r, s, {}, delta)

    @classmethod
    def from_vector(cls, r: int, s: int, vec, delta) -> "BrauerElement":
        return cls(r, s, {i: v for i, v in enumerate(vec) if v}, delta)

    def _new(self, r: int, s: int, c: dict) -> "BrauerElement":
        out = BrauerElement.__new__(BrauerElement)
        out.r, out.s, out.delta = r, s, self.delta
        out._c = {k: v for k, v in c.items() if v}
        return out

    # views ------------------------------------------------------------

    @property
    def type(self) -> tuple[int, int]:
        return (self.r, self.s)

    @property
    def dimension(self) -> int:
        """Size of the diagram basis of this type."""
        return count_diagrams(self.r + self.s)

    def terms(self) -> dict[BrauerDiagram, Fraction]:
        return {BrauerDiagram.from_index(self.r, self.s, k): v for k, v in sorted(self._c.items())}

    def coefficients(self) -> dict[int, Fraction]:
        return dict(self._c)

    def vector(self) -> list[Fraction]:
        out = [Fraction(0)] * self.dimension
        for k, v in self._c.items():
            out[k] = v
        return out

    def __getitem__(self, d: BrauerDiagram) -> Fraction:
        return self._c.get(d.index, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BrauerElement):
            return NotImplemented
        return self.type == other.type and self.delta == other.delta and self._c == other._c

    def __hash__(self):
        return hash((self.type, self.delta, frozenset(self._c.items())))

    def __repr__(self) -> str:
        if not self._c:
            return f"BrauerElement({self.r}->{self.s}, 0)"
        body = " + ".join(f"({v})*{d.pairs}" for d, v in self.terms().items())
        return f"BrauerElement({self.r}->{self.s}, {body})"

    # linear structure -------------------------------------------------

    def _same(self, other: "BrauerElement"):
        if self.type != other.type:
            raise ArityError(f"type mismatch {self.type} vs {other.type}")
        if self.delta != other.delta:
            raise ValueError("elements live at different parameters")

    def __add__(self, other: "BrauerElement") -> "BrauerElement":
        self._same(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return self._new(self.r, self.s, c)

    def __neg__(self) -> "BrauerElement":
        return self._new(self.r, self.s, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "BrauerElement") -> "BrauerElement":
        return self + (-other)

    def __mul__(self, scalar) -> "BrauerElement":
        if isinstance(scalar, BrauerElement):
            return NotImplemented
        a = as_fraction(scalar)
        return self._new(self.r, self.s, {k: a * v for k, v in self._c.items()})

    __rmul__ = __mul__

    # composition ------------------------------------------------------

    def __matmul__(self, g: "BrauerElement") -> "BrauerElement":
        """self after g."""
        h = self
        if g.s != h.r:
            raise ArityError(f"cannot compose {g.r}->{g.s} with {h.r}->{h.s}")
        if g.delta != h.delta:
            raise ValueError("elements live at different parameters")
        q, r, s = g.r, g.s, h.s
        delta = self.delta
        c: dict[int, Fraction] = {}
        if q == r == s and 0 < r <= TABLE_MAX_RANK:
            idx, bub = composition_table(r)
            for hi, hv in h._c.items():
                row_i, row_b = idx[hi], bub[hi]
                for gi, gv in g._c.items():
                    b = int(row_b[gi])
                    if b and not delta:
                        continue
                    k = int(row_i[gi])
                    c[k] = c.get(k, 0) + hv * gv * delta**b
        else:
            for hi, hv in h._c.items():
                for gi, gv in g._c.items():
                    k, b = _compose_index(q, r, s, gi, hi)
                    if b and not delta:
                        continue
                    c[k] = c.get(k, 0) + hv * gv * delta**b
        return self._new(q, s, c)

    def __pow__(self, n: int) -> "BrauerElement":
        if self.r != self.s:
            raise ArityError("powers need an element of B_r")
        out = BrauerElement.identity(self.r, self.delta)
        for _ in range(n):
            out = self @ out
        return out

    def tensor(self, other: "BrauerElement") -> "BrauerElement":
        """Horizontal juxtaposition, self on the left."""
        if self.delta != other.delta:
            raise ValueError("elements live at different parameters")
        c: dict[int, Fraction] = {}
        left, right = self.terms(), other.terms()
        for d1, v1 in left.items():
            for d2, v2 in right.items():
                k = tensor_diagrams(d1, d2).index
                c[k] = c.get(k, 0) + v1 * v2
        return self._new(self.r + other.r, self.s + other.s, c)

    def projection_pi(self) -> "BrauerElement":
        """Keep only the permutation diagrams (the map B_r -> k Sigma_r)."""
        if self.r != self.s:
            raise ArityError("pi is defined on B_r")
        keep = {k: v for k, v in self._c.items() if BrauerDiagram.from_index(self.r, self.s, k).is_permutation()}
        return self._new(self.r, self.s, keep)

    def trace(self) -> Fraction:
        """Categorical trace: each diagram closed up contributes delta^loops."""
        if self.r != self.s:
            raise ArityError("trace needs an element of B_r")
        total = Fraction(0)
        for d, v in self.terms().items():
            total += v * self.delta ** d.closure_loops()
        return total

    def is_idempotent(self) -> bool:
        return self.r == self.s and self @ self == self

    def to_json(self) -> list[dict]:
        return [
            {"pairing": [list(p) for p in d.pairs], "coefficient": str(v)}
            for d, v in self.terms().items()
        ]

    @classmethod
    def from_json(cls, r: int, s: int, data: list[dict], delta) -> "BrauerElement":
        terms = {BrauerDiagram.from_pairs(r, s, t["pairing"]): as_fraction(t["coefficient"]) for t in data}
        return cls(r, s, terms, delta)
