"""Thick ideals I_k of uRep(O_delta) and k-minimal partitions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .diagram import InvalidDiagramError, Mark, WeightDiagram, k_invariants, partition_of, weight_diagram
from .partition import Partition, canonical_key, remove_boxes

__all__ = [
    "ThickIdeal",
    "ZERO_K",
    "contains",
    "is_negligible",
    "is_k_minimal",
    "has_k_minimal_shape",
    "ideal_generated_by",
    "k_minimal_partitions",
]

ZERO_K = math.inf  # k index of the zero ideal


@dataclass(frozen=True)
class ThickIdeal:
    """I_k at a fixed integer delta: objects whose summands all have k(lam) >= k.

    ``k == ZERO_K`` stands for the zero ideal.
    """

    delta: int
    k: float | int

    def __post_init__(self):
        if self.k != ZERO_K and (int(self.k) != self.k or self.k < 0):
            raise ValueError(f"k must be a nonnegative integer or ZERO_K, got {self.k}")

    def __contains__(self, lam) -> bool:
        return contains(self, lam)

    def __le__(self, other: "ThickIdeal") -> bool:
        """Inclusion of ideals (same delta)."""
        return self.delta == other.delta and self.k >= other.k

    @property
    def is_zero(self) -> bool:
        return self.k == ZERO_K

    def to_json(self, lam: Partition | None = None) -> dict:
        out = {"delta": self.delta, "k": None if self.is_zero else int(self.k)}
        if lam is not None:
            out["contains"] = contains(self, lam)
            out["k_of_lambda"] = k_invariants(Partition(lam), self.delta).k
        return out


def contains(ideal: ThickIdeal, lam) -> bool:
    if ideal.is_zero:
        return False
    return k_invariants(Partition(lam), ideal.delta).k >= ideal.k


def is_negligible(lam, delta: int) -> bool:
    """R(lam) has categorical dimension zero, i.e. lies in I_1."""
    return k_invariants(Partition(lam), delta).k >= 1


def is_k_minimal(lam, delta: int) -> bool:
    """lam is k(lam)-minimal: every one-box removal lowers k."""
    lam = Partition(lam)
    k = k_invariants(lam, delta).k
    return all(k_invariants(mu, delta).k < k for mu in remove_boxes(lam))


def _has_minimal_form(w: WeightDiagram) -> bool:
    # a block of diamond/circle/cross marks, then only down marks,
    # and no circle when a diamond is present
    seen_down = False
    for m in w.marks:
        if m == Mark.DOWN:
            seen_down = True
        elif seen_down or m == Mark.UP:
            return False
    return not (Mark.DIAMOND in w.marks and Mark.CIRCLE in w.marks)


def has_k_minimal_shape(lam, delta: int) -> bool:
    """Diagram-shape test for k-minimality (no caps, block then down tail)."""
    lam = Partition(lam)
    inv = k_invariants(lam, delta)
    return inv.k == inv.rank and _has_minimal_form(weight_diagram(lam, delta))


def ideal_generated_by(lam, delta: int) -> ThickIdeal:
    return ThickIdeal(delta, k_invariants(Partition(lam), delta).k)


def k_minimal_partitions(delta: int, k: int, size_bound: int) -> list[Partition]:
    """All k-minimal partitions of size at most ``size_bound``, canonical order.

    Built from diagrams: an initial block with min(#circle, #cross) == k and
    #circle - #cross == delta // 2 (or a diamond followed only by crosses),
    then the down tail.
    """
    diff = delta // 2
    n_circ, n_cross = (k + diff, k) if diff >= 0 else (k, k - diff)
    even = delta % 2 == 0
    found: set[Partition] = set()

    def emit(marks):
        try:
            lam = partition_of(WeightDiagram(delta, tuple(marks)))
        except InvalidDiagramError:
            return
        if lam.size <= size_bound and weight_diagram(lam, delta).marks == WeightDiagram(delta, tuple(marks)).marks:
            found.add(lam)

    length = n_circ + n_cross
    for crosses in combinations(range(length), n_cross):
        block = [Mark.CIRCLE] * length
        for c in crosses:
            block[c] = Mark.CROSS
        if even and block and block[0] == Mark.CROSS:
            continue
        if even and not block:
            continue
        emit(block)
    if even and n_circ == 0 and min(n_circ, n_cross) == k:
        emit([Mark.DIAMOND] + [Mark.CROSS] * n_cross)
    return sorted(found, key=canonical_key)
