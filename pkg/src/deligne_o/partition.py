"""Integer partitions, Young-diagram moves and Littlewood-Richardson numbers."""

from __future__ import annotations

import json
import re
from collections import defaultdict
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "EMPTY",
    "BOX",
    "parse_partition",
    "canonical_key",
    "partitions_of",
    "partitions_up_to",
    "subpartitions",
    "transpose",
    "add_boxes",
    "remove_boxes",
    "contains",
    "lr_coefficient",
    "lr_product",
    "lr_coproduct",
    "hook_count",
]


class Partition(tuple):
    """A partition stored as its finite list of positive parts.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and hashes like the plain tuple ``(2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"


EMPTY = Partition()
BOX = Partition((1,))

_SYNTAX = re.compile(r"^\s*\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*$")


def parse_partition(text: str) -> Partition:
    """Parse the textual form ``"[4,3,3,2,1]"`` (``"[]"`` is the empty partition)."""
    if not _SYNTAX.match(text):
        raise ValueError(f"malformed partition {text!r}; expected e.g. [4,3,1] or []")
    return Partition(json.loads(text))


def canonical_key(lam: Partition) -> tuple:
    """Sort key: by size, then reverse-lexicographic within a size."""
    return (sum(lam), tuple(-p for p in lam))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int, prefix: list[int]):
        if rest == 0:
            yield Partition(prefix)
            return
        for p in range(min(rest, cap), 0, -1):
            prefix.append(p)
            yield from rec(rest - p, p, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def subpartitions(lam: Partition) -> tuple[Partition, ...]:
    """All alpha with alpha contained in lam, in canonical order."""
    out: list[Partition] = []

    def rec(i: int, cap: int, prefix: list[int]):
        if i == len(lam):
            out.append(Partition(prefix))
            return
        for p in range(min(cap, lam[i]), -1, -1):
            prefix.append(p)
            rec(i + 1, p, prefix)
            prefix.pop()

    rec(0, lam[0] if lam else 0, [])
    return tuple(sorted(out, key=canonical_key))


@lru_cache(maxsize=None)
def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def add_boxes(lam: Partition) -> list[Partition]:
    """Partitions obtained by adding one box, in canonical order."""
    out = []
    for i in range(len(lam) + 1):
        if i == 0 or lam.part(i) < lam[i - 1]:
            parts = list(lam) + [0]
            parts[i] += 1
            out.append(Partition(parts))
    return sorted(out, key=canonical_key)


def remove_boxes(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one box, in canonical order."""
    out = []
    for i in range(len(lam)):
        if lam.part(i + 1) < lam[i]:
            parts = list(lam)
            parts[i] -= 1
            out.append(Partition(parts))
    return sorted(out, key=canonical_key)


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff ``lam`` is contained in ``mu`` (lam_i <= mu_i for every i)."""
    return len(lam) <= len(mu) and all(a <= b for a, b in zip(lam, mu))


@lru_cache(maxsize=None)
def lr_coefficient(beta: Partition, gamma: Partition, nu: Partition) -> int:
    """Number of LR tableaux of shape nu/beta and content gamma.

    Cells are filled in reading order (rows top to bottom, each row right to
    left); a filling is kept when rows weakly increase, columns strictly
    increase and the reading word is a lattice word.
    """
    beta, gamma, nu = Partition(beta), Partition(gamma), Partition(nu)
    if beta.size + gamma.size != nu.size or not contains(nu, beta):
        return 0
    if not gamma:
        return 1
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, beta.part(i) - 1, -1)]
    tab: dict[tuple[int, int], int] = {}
    counts = [0] * len(gamma)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = len(gamma)
        if (i, j + 1) in tab:
            hi = min(hi, tab[(i, j + 1)])
        # cells of beta above impose no column condition
        lo = tab[(i - 1, j)] + 1 if (i - 1, j) in tab else 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v - 1] >= gamma[v - 1]:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            counts[v - 1] += 1
            tab[(i, j)] = v
            total += rec(k + 1)
            del tab[(i, j)]
            counts[v - 1] -= 1
        return total

    return rec(0)


@lru_cache(maxsize=None)
def lr_product(beta: Partition, gamma: Partition) -> tuple[tuple[Partition, int], ...]:
    """Pairs (nu, LR^nu_{beta,gamma}) with nonzero coefficient, canonical order."""
    n = beta.size + gamma.size
    max_first = beta.part(0) + gamma.part(0)
    max_len = len(beta) + len(gamma)
    out = []
    for nu in partitions_of(n, max_first):
        if len(nu) > max_len or not contains(nu, beta) or not contains(nu, gamma):
            continue
        c = lr_coefficient(beta, gamma, nu)
        if c:
            out.append((nu, c))
    out.sort(key=lambda t: canonical_key(t[0]))
    return tuple(out)


@lru_cache(maxsize=None)
def lr_coproduct(lam: Partition) -> dict[Partition, tuple[tuple[Partition, int], ...]]:
    """Map alpha -> ((beta, LR^lam_{alpha,beta}), ...) over nonzero coefficients."""
    table: dict[Partition, list[tuple[Partition, int]]] = defaultdict(list)
    for alpha in subpartitions(lam):
        for beta in partitions_of(lam.size - alpha.size, lam.part(0)):
            if not contains(lam, beta):
                continue
            c = lr_coefficient(alpha, beta, lam)
            if c:
                table[alpha].append((beta, c))
    return {a: tuple(v) for a, v in table.items()}


def hook_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    lt = transpose(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (lt[j] - i - 1) + 1
    return factorial(lam.size) // hooks
