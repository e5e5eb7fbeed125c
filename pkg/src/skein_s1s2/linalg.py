"""Sparse exact Gaussian elimination over the scalar field."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .scalars import Scalar

Row = dict[Hashable, Scalar]


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Columns are compared through ``order``: a smaller rank in ``order`` means a more
    significant column, and each row's pivot is its most significant nonzero column.
    """

    def __init__(self, order: Mapping[Hashable, int] | None = None):
        self.order = dict(order or {})
        self.rows: dict[Hashable, Row] = {}  # pivot column -> row with pivot entry 1

    def _rank(self, col) -> tuple:
        return (0, self.order[col]) if col in self.order else (1, repr(col))

    def pivot_of(self, row: Row):
        return min(row, key=self._rank)

    def reduce(self, row: Mapping[Hashable, Scalar]) -> Row:
        """Reduce a vector modulo the current row space (full reduction)."""
        row = {k: v for k, v in row.items() if v}
        changed = True
        while changed:
            changed = False
            for col in sorted((c for c in row if c in self.rows), key=self._rank):
                if col not in row:
                    continue
                c = row[col]
                for k, a in self.rows[col].items():
                    t = row.get(k)
                    t = -(c * a) if t is None else t - c * a
                    if t:
                        row[k] = t
                    else:
                        row.pop(k, None)
                changed = True
                break
        return row

    def add(self, row: Mapping[Hashable, Scalar]) -> bool:
        """Insert a row; returns True when it enlarged the row space."""
        r = self.reduce(row)
        if not r:
            return False
        piv = self.pivot_of(r)
        inv = r[piv].inverse()
        r = {k: a * inv for k, a in r.items()}
        for col, other in self.rows.items():
            c = other.get(piv)
            if c:
                for k, a in r.items():
                    t = other.get(k)
                    t = -(c * a) if t is None else t - c * a
                    if t:
                        other[k] = t
                    else:
                        other.pop(k, None)
        self.rows[piv] = r
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self._rank)


def rank(rows: Iterable[Mapping[Hashable, Scalar]]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def matrix_rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    return rank({j: a for j, a in enumerate(r) if a} for r in matrix)


def invert(matrix: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    """Exact inverse of a square matrix; raises ZeroDivisionError when singular."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("matrix is not square")
    e = Echelon({j: j for j in range(2 * n)})
    for i, r in enumerate(matrix):
        row = {j: a for j, a in enumerate(r) if a}
        row[n + i] = Scalar.from_int(1)
        e.add(row)
    zero = Scalar.from_int(0)
    out = []
    for j in range(n):
        r = e.rows.get(j)
        if r is None or any(k < n and k != j for k in r):
            raise ZeroDivisionError("matrix is singular")
        out.append([r.get(n + i, zero) for i in range(n)])
    return out
