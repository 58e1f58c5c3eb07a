"""Summands of V^{(x) r} for the orthosymplectic supergroup OSp(m|2n).

Everything here is label-level: R_{m|2n}(lam) is represented by the pair
(lam, SuperRank(m, n)) and classified through k(lam) at delta = m - 2n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .diagram import k_invariants
from .partition import Partition, canonical_key, partitions_of

__all__ = [
    "SuperRank",
    "OspTensor",
    "UnsupportedCaseError",
    "lambda_r",
    "is_nonzero",
    "tensor_summands",
    "is_projective_tensor",
    "ds_image",
    "k_zero_specialization",
    "summands_report",
]


class UnsupportedCaseError(ValueError):
    """The requested closed-form specialization does not cover this (m, n)."""


@dataclass(frozen=True)
class SuperRank:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"m and n must be nonnegative, got ({self.m}, {self.n})")

    @property
    def delta(self) -> int:
        return self.m - 2 * self.n

    @property
    def ell(self) -> int:
        return self.m // 2

    @property
    def cutoff(self) -> int:
        """min(l, n): largest k surviving in V^{(x) r}."""
        return min(self.ell, self.n)

    def __str__(self) -> str:
        return f"OSp({self.m}|{2 * self.n})"


class OspTensor(NamedTuple):
    """The indecomposable summand R_{m|2n}(partition)."""

    partition: Partition
    rank: SuperRank


def lambda_r(r: int, delta: int) -> list[Partition]:
    """Labels of simple B_r(delta)-modules: |lam| = r - 2i, dropping lam = () when delta = 0 and r even."""
    out = []
    for size in range(r % 2, r + 1, 2):
        if size == 0 and delta == 0 and r > 0:
            continue
        out.extend(partitions_of(size))
    return sorted(out, key=canonical_key)


def _k(lam, G: SuperRank) -> int:
    return k_invariants(Partition(lam), G.delta).k


def is_nonzero(lam, G: SuperRank) -> bool:
    return _k(lam, G) <= G.cutoff


def tensor_summands(G: SuperRank, r: int) -> list[Partition]:
    """Labels of the non-isomorphic nonzero indecomposable summands of V^{(x) r}."""
    return [lam for lam in lambda_r(r, G.delta) if is_nonzero(lam, G)]


def is_projective_tensor(lam, G: SuperRank) -> bool:
    k = _k(lam, G)
    if k > G.cutoff:
        raise ValueError(f"{Partition(lam)} lies in the kernel for {G}; the zero object is not classified")
    return k == G.cutoff


def ds_image(lam, G: SuperRank) -> OspTensor | None:
    """Duflo-Serganova image in OSp(m-2|2n-2); None when it vanishes."""
    if G.m < 2 or G.n < 1:
        raise ValueError(f"DS step needs m >= 2 and n >= 1, got {G}")
    lam = Partition(lam)
    if not is_nonzero(lam, G) or is_projective_tensor(lam, G):
        return None
    return OspTensor(lam, SuperRank(G.m - 2, G.n - 1))


def k_zero_specialization(lam, G: SuperRank) -> bool:
    """Closed-form test of k(lam) == 0 in the classical and near-classical cases."""
    lam = Partition(lam)
    if G.n == 0:
        lt = lam.transpose()
        return lt.part(0) + lt.part(1) <= G.m
    if G.m == 0:
        return lam.part(0) <= G.n
    if G.m == 1:
        return lam.part(0) + lam.part(1) <= 1 + 2 * G.n
    raise UnsupportedCaseError(f"no closed form for {G}; need n = 0 or m in (0, 1)")


def summands_report(G: SuperRank, r: int) -> dict:
    rows = []
    for lam in tensor_summands(G, r):
        k = _k(lam, G)
        rows.append({"partition": list(lam), "k": k, "projective": k == G.cutoff})
    return {"m": G.m, "n": G.n, "r": r, "summands": rows}
