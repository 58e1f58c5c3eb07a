"""Brute-force checks of the diagrammatic formulas inside the Brauer category."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from ..diagram import k_invariants
from ..osp import lambda_r
from ..partition import Partition, canonical_key, partitions_up_to
from ..ring import bilinear_form
from ._linalg import rank, row_basis
from .diagram import diagrams
from .element import BrauerElement, as_fraction
from .idempotent import e_lambda, primitive_decomposition

__all__ = [
    "hom_dim",
    "dim_R",
    "equivalent_idempotents",
    "idempotent_classes",
    "CheckResult",
    "verify",
]


def hom_dim(lam, mu, delta) -> int:
    """dim Hom(im e_lam, im e_mu), as the rank of {e_mu g e_lam : g of type |lam| -> |mu|}."""
    lam, mu = Partition(lam), Partition(mu)
    delta = as_fraction(delta)
    if lam.size < mu.size:
        lam, mu = mu, lam  # the form is symmetric
    a, b = lam.size, mu.size
    if (a - b) % 2:
        return 0
    el, em = e_lambda(lam, delta), e_lambda(mu, delta)
    rows = []
    for g in diagrams(a, b):
        rows.append((em @ BrauerElement.from_diagram(g, delta) @ el).vector())
    return rank(rows, len(rows[0])) if rows else 0


def dim_R(lam, delta) -> Fraction:
    """Categorical dimension of R(lam): the closed-up trace of e_lam."""
    return e_lambda(Partition(lam), as_fraction(delta)).trace()


def _span_basis(elements: list[BrauerElement]) -> list[BrauerElement]:
    if not elements:
        return []
    first = elements[0]
    rows, _ = row_basis([x.vector() for x in elements], first.dimension)
    return [BrauerElement.from_vector(first.r, first.s, row, first.delta) for row in rows]


def equivalent_idempotents(e: BrauerElement, f: BrauerElement) -> bool:
    """e and f have isomorphic images: e lies in the span of e B f B e."""
    delta = e.delta
    basis = [BrauerElement.from_diagram(g, delta) for g in diagrams(e.r, e.r)]
    ebf = _span_basis([e @ g @ f for g in basis])
    fbe = _span_basis([f @ g @ e for g in basis])
    prods = [(x @ y).vector() for x in ebf for y in fbe]
    if not prods:
        return False
    n = e.dimension
    return rank(prods + [e.vector()], n) == rank(prods, n)


def idempotent_classes(r: int, delta) -> list[BrauerElement]:
    """One representative per class of primitive idempotents appearing in a full split of id in B_r."""
    delta = as_fraction(delta)
    reps: list[BrauerElement] = []
    for e in primitive_decomposition(BrauerElement.identity(r, delta)):
        if not any(equivalent_idempotents(e, f) for f in reps):
            reps.append(e)
    return reps


@dataclass
class CheckResult:
    name: str
    delta: Fraction
    cases: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "delta": str(self.delta),
            "cases": self.cases,
            "passed": self.ok,
            "failures": [str(f) for f in self.failures],
        }


def _check_form(max_size: int, delta: int) -> CheckResult:
    parts = sorted(partitions_up_to(max_size), key=canonical_key)
    fails, n = [], 0
    for lam, mu in combinations_with_replacement(parts, 2):
        if (lam.size - mu.size) % 2:
            continue
        n += 1
        a, b = hom_dim(lam, mu, delta), bilinear_form(lam, mu, delta)
        if a != b:
            fails.append((list(lam), list(mu), a, b))
    return CheckResult("hom_dim == sum_nu d'd'", Fraction(delta), n, fails)


def _check_dim(max_size: int, delta: int) -> CheckResult:
    fails, n = [], 0
    for lam in partitions_up_to(max_size):
        n += 1
        d, k = dim_R(lam, delta), k_invariants(lam, delta).k
        if (d != 0) != (k == 0):
            fails.append((list(lam), str(d), k))
    return CheckResult("dim R != 0 iff k == 0", Fraction(delta), n, fails)


def _check_count(max_size: int, delta: int) -> CheckResult:
    fails, n = [], 0
    for r in range(max_size + 1):
        n += 1
        got, want = len(idempotent_classes(r, delta)), len(lambda_r(r, delta))
        if got != want:
            fails.append((r, got, want))
    return CheckResult("primitive idempotent classes == |Lambda_r|", Fraction(delta), n, fails)


def verify(max_size: int, deltas) -> list[CheckResult]:
    """Run the form, dimension and idempotent-count identities for each delta."""
    out = []
    for delta in deltas:
        out.append(_check_form(max_size, delta))
        out.append(_check_dim(max_size, delta))
        out.append(_check_count(max_size, delta))
    return out
