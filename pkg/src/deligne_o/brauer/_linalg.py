"""Exact rational row reduction on lists of Fraction vectors (via sympy DomainMatrix)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_dm(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[QQ(int(v.numerator), int(v.denominator)) for v in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    if not rows:
        return 0
    return _to_dm(rows, ncols).rank()


def row_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon basis of the row space and its pivot columns.

    A vector in the row space has coordinates equal to its entries at the
    pivot columns.
    """
    if not rows:
        return [], []
    m, pivots = _to_dm(rows, ncols).rref()
    dense = m.to_list()
    return [[_frac(x) for x in dense[i]] for i in range(len(pivots))], list(pivots)


def first_dependence(vectors: Sequence[Sequence[Fraction]], ncols: int) -> list[Fraction] | None:
    """Coefficients c with sum c_i v_i == 0 and c_last == 1, if the last vector is dependent on the rest."""
    k = len(vectors)
    # columns are the vectors; a nullspace vector with nonzero last entry
    cols = [[vectors[j][i] for j in range(k)] for i in range(ncols)]
    null = _to_dm(cols, k).nullspace().to_list()
    for row in null:
        if row[-1]:
            last = _frac(row[-1])
            return [_frac(x) / last for x in row]
    return None
