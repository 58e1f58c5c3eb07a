"""Additive Grothendieck rings K_delta (delta an integer) and K_t (generic).

Products in K_delta are computed by lifting both factors to K_t, multiplying
there with the Littlewood-Richardson rule, and pulling the result back with
the inverse of the (unitriangular) lifting map.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .diagram import rev_images
from .partition import EMPTY, Partition, canonical_key, lr_coproduct, lr_product

__all__ = [
    "GENERIC",
    "RingElement",
    "NegativeMultiplicityError",
    "normalize_delta",
    "lift",
    "unlift",
    "tensor_generic",
    "tensor_at",
    "bilinear_form",
]

GENERIC = None  # context marker for K_t


class NegativeMultiplicityError(ArithmeticError):
    """A product of indecomposables came out with a negative multiplicity."""


def normalize_delta(delta) -> int | None:
    """Integers stay integers; non-integral rationals and None mean generic."""
    if delta is None:
        return GENERIC
    if isinstance(delta, str):
        if delta.strip().lower() in ("t", "generic"):
            return GENERIC
        delta = Fraction(delta)
    if isinstance(delta, Rational) or isinstance(delta, float):
        q = Fraction(delta)
        return int(q) if q.denominator == 1 else GENERIC
    raise TypeError(f"cannot use {delta!r} as a parameter")


class RingElement(Mapping):
    """Finite Z-linear combination of partitions in K_delta or K_t.

    Behaves as a read-only mapping partition -> coefficient; zero
    coefficients are never stored.  ``delta is None`` marks the generic ring.
    """

    __slots__ = ("_terms", "delta")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[Partition] = (), delta=GENERIC):
        self.delta = normalize_delta(delta)
        if not isinstance(terms, Mapping):
            terms = Counter(Partition(p) for p in terms)
        self._terms = {Partition(p): int(c) for p, c in terms.items() if c}

    @classmethod
    def basis(cls, lam, delta=GENERIC) -> "RingElement":
        return cls({Partition(lam): 1}, delta)

    @property
    def is_generic(self) -> bool:
        return self.delta is None

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._terms, key=canonical_key))

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, lam) -> bool:
        return Partition(lam) in self._terms

    def items(self):
        return [(p, self._terms[p]) for p in self]

    def _check(self, other: "RingElement"):
        if self.delta != other.delta:
            raise ValueError(f"mixing contexts {self.context_label()} and {other.context_label()}")

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.delta == other.delta and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.delta, frozenset(self._terms.items())))

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        out = Counter(self._terms)
        out.update(other._terms)
        return RingElement(out, self.delta)

    def __neg__(self) -> "RingElement":
        return RingElement({p: -c for p, c in self._terms.items()}, self.delta)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "RingElement":
        if not isinstance(k, int):
            return NotImplemented
        return RingElement({p: k * c for p, c in self._terms.items()}, self.delta)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        if not isinstance(other, RingElement):
            return NotImplemented
        self._check(other)
        if self.is_generic:
            return _multiply_generic(self, other)
        return unlift(_multiply_generic(lift(self), lift(other)), self.delta)

    def __pow__(self, n: int) -> "RingElement":
        out = RingElement.basis(EMPTY, self.delta)
        for _ in range(n):
            out = out * self
        return out

    def context_label(self) -> str:
        return "generic" if self.is_generic else f"delta={self.delta}"

    def __repr__(self) -> str:
        if not self._terms:
            return f"RingElement(0, {self.context_label()})"
        body = " + ".join(f"{c}*{p}" if c != 1 else str(p) for p, c in self.items())
        return f"RingElement({body}, {self.context_label()})"

    def to_json(self) -> dict:
        ctx = "generic" if self.is_generic else {"delta": self.delta}
        return {
            "context": ctx,
            "terms": [{"partition": list(p), "coefficient": c} for p, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RingElement":
        ctx = data["context"]
        delta = GENERIC if ctx == "generic" else int(ctx["delta"])
        return cls({Partition(t["partition"]): int(t["coefficient"]) for t in data["terms"]}, delta)


def _multiply_generic(x: RingElement, y: RingElement) -> RingElement:
    out: Counter = Counter()
    for p, a in x._terms.items():
        for q, b in y._terms.items():
            for nu, c in tensor_generic(p, q)._terms.items():
                out[nu] += a * b * c
    return RingElement(out, GENERIC)


@lru_cache(maxsize=None)
def _lift_basis(lam: Partition, delta: int) -> RingElement:
    return RingElement(rev_images(lam, delta), GENERIC)


def lift(x, delta=GENERIC) -> RingElement:
    """The lifting isomorphism K_delta -> K_t.

    ``x`` is either a partition (with ``delta`` given) or a RingElement in
    some K_delta.  At non-integral delta the map is the identity.
    """
    if isinstance(x, RingElement):
        if x.is_generic:
            return x
        out: Counter = Counter()
        for p, c in x._terms.items():
            for q, d in _lift_basis(p, x.delta)._terms.items():
                out[q] += c * d
        return RingElement(out, GENERIC)
    lam = Partition(x)
    delta = normalize_delta(delta)
    if delta is None:
        return RingElement.basis(lam, GENERIC)
    return _lift_basis(lam, delta)


def unlift(y: RingElement, delta) -> RingElement:
    """Inverse of :func:`lift`: the x in K_delta with lift(x) == y.

    Back-substitution from the largest partitions down; this works because
    lift(lam) is lam plus strictly smaller partitions.
    """
    delta = normalize_delta(delta)
    if not y.is_generic:
        raise ValueError("unlift expects an element of the generic ring")
    if delta is None:
        return y
    rest = Counter(y._terms)
    out: dict[Partition, int] = {}
    while rest:
        top = max(rest, key=lambda p: (p.size, canonical_key(p)))
        c = rest[top]
        out[top] = c
        for q, d in _lift_basis(top, delta)._terms.items():
            rest[q] -= c * d
            if rest[q] == 0:
                del rest[q]
    return RingElement(out, delta)


@lru_cache(maxsize=None)
def _tensor_generic(lam: Partition, mu: Partition) -> RingElement:
    out: Counter = Counter()
    right = lr_coproduct(mu)
    for alpha, betas in lr_coproduct(lam).items():
        gammas = right.get(alpha)
        if not gammas:
            continue
        for beta, c1 in betas:
            for gamma, c2 in gammas:
                for nu, c3 in lr_product(beta, gamma):
                    out[nu] += c1 * c2 * c3
    return RingElement(out, GENERIC)


def tensor_generic(lam, mu) -> RingElement:
    """lam * mu in K_t: sum over alpha, beta, gamma of LR^lam_{a,b} LR^mu_{a,g} LR^nu_{b,g} nu."""
    lam, mu = Partition(lam), Partition(mu)
    if canonical_key(mu) < canonical_key(lam):
        lam, mu = mu, lam
    return _tensor_generic(lam, mu)


def tensor_at(lam, mu, delta) -> RingElement:
    """Decompose R(lam) (x) R(mu) in K_delta."""
    delta = normalize_delta(delta)
    if delta is None:
        return tensor_generic(lam, mu)
    out = RingElement.basis(lam, delta) * RingElement.basis(mu, delta)
    bad = {p: c for p, c in out.items() if c < 0}
    if bad:
        raise NegativeMultiplicityError(f"{lam} x {mu} at delta={delta}: negative terms {bad}")
    return out


def bilinear_form(lam, mu, delta=GENERIC) -> int:
    """dim Hom(R(lam), R(mu)): pairs of cap subsets with equal reversals."""
    lam, mu = Partition(lam), Partition(mu)
    delta = normalize_delta(delta)
    if delta is None:
        return int(lam == mu)
    a = Counter(rev_images(lam, delta))
    b = Counter(rev_images(mu, delta))
    return sum(c * b[p] for p, c in a.items())
