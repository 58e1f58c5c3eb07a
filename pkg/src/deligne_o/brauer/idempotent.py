"""Young symmetrizers and primitive idempotents of the Brauer algebra B_r(delta).

Splitting works inside a corner algebra fBf: pick an element a, compute its
minimal polynomial over Q (with f as the unit), and if that polynomial has
two or more coprime factors, the Chinese-remainder projectors evaluated at a
split f into orthogonal idempotents.  Recursion stops when the corner is
local, which is certified by the trace form: over a field of characteristic
zero its rank equals the dimension of the semisimple quotient.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from sympy import Poly, QQ, factor_list, invert, symbols

from ..partition import Partition, hook_count
from ._linalg import first_dependence, rank, row_basis
from .diagram import cap, cup, diagrams, permutation
from .element import BrauerElement, as_fraction

__all__ = [
    "UndefinedIdempotentError",
    "young_symmetrizer",
    "Corner",
    "is_local",
    "primitive_decomposition",
    "e_lambda",
    "e_lambda_i",
]

_x = symbols("x")


class UndefinedIdempotentError(ValueError):
    """e_lambda^(i) does not exist for lambda = () at delta = 0 with i > 0."""


def _row_tableau(lam: Partition) -> list[list[int]]:
    rows, k = [], 0
    for p in lam:
        rows.append(list(range(k, k + p)))
        k += p
    return rows


def _group(blocks: list[list[int]], n: int):
    """All permutations of range(n) preserving each block, with their signs."""
    per_block = [list(permutations(b)) for b in blocks]
    for choice in product(*per_block):
        perm = list(range(n))
        for block, image in zip(blocks, choice):
            for a, b in zip(block, image):
                perm[a] = b
        yield perm


def _sign(perm: list[int]) -> int:
    seen, sign = [False] * len(perm), 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _young_terms(lam: Partition) -> tuple[tuple[int, Fraction], ...]:
    n = lam.size
    rows = _row_tableau(lam)
    cols = [[row[j] for row in rows if j < len(row)] for j in range(lam.part(0))]
    scale = Fraction(hook_count(lam), factorial(n))
    acc: dict[int, Fraction] = {}
    col_perms = [(q, _sign(q)) for q in _group(cols, n)]
    for p in _group(rows, n):
        for q, sgn in col_perms:
            pq = [p[q[i]] for i in range(n)]  # q first, then p
            k = permutation(pq).index
            acc[k] = acc.get(k, Fraction(0)) + sgn * scale
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def young_symmetrizer(lam, delta=0) -> BrauerElement:
    """z_lam = (f^lam / n!) sum_{p in Row(T), q in Col(T)} sgn(q) p q, T the row-reading tableau."""
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return BrauerElement.identity(0, delta)
    return BrauerElement(n, n, dict(_young_terms(lam)), delta)


class Corner:
    """The corner algebra f B_r f, with a reduced-echelon basis."""

    def __init__(self, f: BrauerElement):
        if f.r != f.s:
            raise ValueError("corner needs an element of B_r")
        self.f = f
        self.r = f.r
        n = f.dimension
        spans = [(f @ BrauerElement.from_diagram(d, f.delta) @ f).vector() for d in diagrams(self.r, self.r)]
        rows, self.pivots = row_basis(spans, n)
        self.basis = [BrauerElement.from_vector(self.r, self.r, row, f.delta) for row in rows]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, x: BrauerElement) -> list[Fraction]:
        return [x._c.get(p, Fraction(0)) for p in self.pivots]

    def combine(self, coeffs) -> BrauerElement:
        out = BrauerElement.zero(self.r, self.r, self.f.delta)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b * c
        return out

    def semisimple_rank(self) -> int:
        """Rank of the trace form (a, b) -> Tr(L_{ab}) on the corner."""
        d = self.dim
        prods = [[self.coords(a @ b) for b in self.basis] for a in self.basis]
        tr = [sum(prods[k][j][j] for j in range(d)) for k in range(d)]
        form = [[sum(prods[i][j][k] * tr[k] for k in range(d)) for j in range(d)] for i in range(d)]
        return rank(form, d)


def is_local(f: BrauerElement) -> bool:
    """The corner f B f has a one-dimensional semisimple quotient (f is primitive)."""
    if not f:
        return False
    c = Corner(f)
    return c.dim == 1 or c.semisimple_rank() == 1


def _minimal_polynomial(a: BrauerElement, unit: BrauerElement) -> list[Fraction]:
    powers = [unit.vector()]
    cur = unit
    n = unit.dimension
    while True:
        cur = a @ cur
        powers.append(cur.vector())
        dep = first_dependence(powers, n)
        if dep is not None:
            return dep


def _evaluate(coeffs: list[Fraction], a: BrauerElement, unit: BrauerElement) -> BrauerElement:
    out = BrauerElement.zero(a.r, a.s, a.delta)
    for c in reversed(coeffs):
        out = a @ out + unit * c
    return out


def _spectral_split(a: BrauerElement, unit: BrauerElement) -> list[BrauerElement] | None:
    mp = Poly(list(reversed(_minimal_polynomial(a, unit))), _x, domain=QQ)
    _, factors = factor_list(mp.as_expr(), _x, domain=QQ)
    if len(factors) < 2:
        return None
    parts = [Poly(g, _x, domain=QQ) ** e for g, e in factors]
    out = []
    for i, g in enumerate(parts):
        h = Poly(1, _x, domain=QQ)
        for j, other in enumerate(parts):
            if j != i:
                h = h * other
        q = (h * Poly(invert(h.as_expr(), g.as_expr(), _x), _x, domain=QQ)).rem(mp)
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(q.all_coeffs())]
        out.append(_evaluate(coeffs, a, unit))
    return out


def _split_once(f: BrauerElement, corner: Corner, seed: int) -> list[BrauerElement] | None:
    for b in corner.basis:
        pieces = _spectral_split(b, f)
        if pieces:
            return pieces
    rng = random.Random(seed)
    for _ in range(40):
        a = corner.combine([rng.randint(-3, 3) for _ in range(corner.dim)])
        pieces = _spectral_split(a, f)
        if pieces:
            return pieces
    return None


def primitive_decomposition(f: BrauerElement, seed: int = 0) -> list[BrauerElement]:
    """Orthogonal primitive idempotents summing to the idempotent f."""
    if not f:
        return []
    corner = Corner(f)
    if corner.dim == 1 or corner.semisimple_rank() == 1:
        return [f]
    pieces = _split_once(f, corner, seed)
    if pieces is None:
        raise RuntimeError("no splitting element found in a non-local corner")
    out = []
    for p in pieces:
        out.extend(primitive_decomposition(p, seed + 1))
    return out


@lru_cache(maxsize=None)
def _e_lambda(lam: Partition, delta: Fraction) -> BrauerElement:
    z = young_symmetrizer(lam, delta)
    if lam.size <= 1:
        return z
    hits = [e for e in primitive_decomposition(z) if e.projection_pi()]
    if len(hits) != 1:
        raise RuntimeError(f"expected one summand of z_{lam} surviving pi, found {len(hits)}")
    return hits[0]


def e_lambda(lam, delta) -> BrauerElement:
    """Primitive idempotent of B_|lam|(delta) whose image under pi is conjugate to z_lam."""
    return _e_lambda(Partition(lam), as_fraction(delta))


def _tensor_power(el: BrauerElement, i: int) -> BrauerElement:
    out = BrauerElement.identity(0, el.delta)
    for _ in range(i):
        out = out.tensor(el)
    return out


def e_lambda_i(lam, i: int, delta) -> BrauerElement:
    """psi e_lam phi in B_{|lam|+2i}: the same object realized with i extra cup/cap pairs."""
    lam = Partition(lam)
    delta = as_fraction(delta)
    e = e_lambda(lam, delta)
    if i == 0:
        return e
    r = lam.size
    if r == 0 and delta == 0:
        raise UndefinedIdempotentError("e_()^(i) is undefined at delta = 0 for i > 0")
    cups = _tensor_power(BrauerElement.from_diagram(cup(), delta), i)
    caps = _tensor_power(BrauerElement.from_diagram(cap(), delta), i)
    psi = BrauerElement.identity(r, delta).tensor(cups)
    if r > 0:
        one = BrauerElement.identity(1, delta)
        phi = BrauerElement.identity(r - 1, delta).tensor(caps).tensor(one)
    else:
        phi = caps * (1 / delta**i)
    return psi @ e @ phi
