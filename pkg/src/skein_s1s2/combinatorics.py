"""
Young diagrams and the bits of combinatorics the idempotent constructions need.

Rows are listed longest first.  Cells are (row, column) pairs, both 1-based, and
the row-major reading order of the cells is the order in which framed points are
laid out on strands throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .scalars import ONE, Scalar, quantum_int

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {list(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def cells(self) -> list[Cell]:
        """Cells in row-major order."""
        return [(i + 1, j + 1) for i, r in enumerate(self.parts) for j in range(r)]

    def cell_index(self, cell: Cell) -> int:
        """1-based row-major position of a cell."""
        i, j = cell
        if not self.contains(cell):
            raise ValueError(f"cell {cell} is not in {self}")
        return sum(self.parts[: i - 1]) + j

    def contains(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for r in self.parts if r > j) for j in range(self.parts[0])))

    def hook(self, cell: Cell) -> int:
        i, j = cell
        return self.parts[i - 1] + self.transpose().parts[j - 1] - i - j + 1

    @staticmethod
    def content(cell: Cell) -> int:
        return cell[1] - cell[0]

    def content_sum(self) -> int:
        return sum(self.content(c) for c in self.cells())

    def extreme_cells(self) -> list[Cell]:
        """Cells whose removal leaves a partition (the ends of rows that are strictly longer than the next)."""
        out = []
        for i, r in enumerate(self.parts):
            nxt = self.parts[i + 1] if i + 1 < len(self.parts) else 0
            if r > nxt:
                out.append((i + 1, r))
        return out

    def addable_cells(self) -> list[Cell]:
        out = []
        for i in range(len(self.parts) + 1):
            r = self.parts[i] if i < len(self.parts) else 0
            prev = self.parts[i - 1] if i > 0 else None
            if prev is None or prev > r:
                out.append((i + 1, r + 1))
        return out

    def remove(self, cell: Cell) -> "Partition":
        if cell not in self.extreme_cells():
            raise ValueError(f"{cell} is not an extreme cell of {self}")
        i = cell[0]
        parts = list(self.parts)
        parts[i - 1] -= 1
        return Partition(tuple(p for p in parts if p))

    def add(self, cell: Cell) -> "Partition":
        if cell not in self.addable_cells():
            raise ValueError(f"{cell} cannot be added to {self}")
        parts = list(self.parts) + [0]
        parts[cell[0] - 1] += 1
        return Partition(tuple(p for p in parts if p))


def as_partition(obj) -> Partition:
    if isinstance(obj, Partition):
        return obj
    return Partition(tuple(obj))


@dataclass(frozen=True)
class CellStats:
    hooks: dict
    contents: dict
    transpose: Partition
    extreme: list
    addable: list


def cell_stats(lam: Partition) -> CellStats:
    lam = as_partition(lam)
    return CellStats(
        hooks={c: lam.hook(c) for c in lam.cells()},
        contents={c: lam.content(c) for c in lam.cells()},
        transpose=lam.transpose(),
        extreme=lam.extreme_cells(),
        addable=lam.addable_cells(),
    )


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partition_count(n: int) -> int:
    return len(_partitions(n, n))


def hook_product(lam: Partition) -> Scalar:
    lam = as_partition(lam)
    out = ONE
    for c in lam.cells():
        out = out * quantum_int(lam.hook(c))
    return out


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = Partition(tuple(len(r) for r in rows))
        labels = sorted(x for r in rows for x in r)
        if labels != list(range(1, shape.size + 1)):
            raise ValueError("tableau labels must be 1..n")
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if j + 1 < len(r) and r[j + 1] <= x:
                    raise ValueError("tableau rows must increase")
                if i + 1 < len(rows) and j < len(rows[i + 1]) and rows[i + 1][j] <= x:
                    raise ValueError("tableau columns must increase")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return self.shape.size

    def cell_of(self, label: int) -> Cell:
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x == label:
                    return (i + 1, j + 1)
        raise KeyError(label)

    def truncate(self) -> "StandardTableau":
        """Drop the cell carrying the largest label."""
        n = self.size
        rows = tuple(tuple(x for x in r if x != n) for r in self.rows)
        return StandardTableau(tuple(r for r in rows if r))

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


def standard_tableaux(lam: Partition) -> list[StandardTableau]:
    """All standard tableaux of a shape, ordered lexicographically by the cells of labels 1, 2, ..., n."""
    lam = as_partition(lam)
    n = lam.size
    out: list[StandardTableau] = []

    def grow(filled: list[int], placement: list[Cell]):
        k = len(placement)
        if k == n:
            rows = [[0] * r for r in lam.parts]
            for label, (i, j) in enumerate(placement, start=1):
                rows[i - 1][j - 1] = label
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(len(lam.parts)):
            j = filled[i]
            if j < lam.parts[i] and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                grow(filled, placement + [(i + 1, j + 1)])
                filled[i] -= 1

    grow([0] * len(lam.parts), [])
    return out


def extreme_cell_count_e(n: int) -> int:
    """Total number of extreme cells over all partitions of n, by enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(len(lam.extreme_cells()) for lam in partitions(n))


def extreme_cell_count_formula(n: int) -> int:
    return sum(partition_count(i) for i in range(n))


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        raise ValueError(f"partition literal must look like [3,1,1]: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return Partition(())
    try:
        parts = tuple(int(p) for p in body.split(","))
    except ValueError:
        raise ValueError(f"bad partition literal {text!r}") from None
    return Partition(parts)


def parse_tableau(text: str) -> StandardTableau:
    import json

    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"bad tableau literal {text!r}: {exc}") from None
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError(f"tableau literal must be a list of rows: {text!r}")
    return StandardTableau(tuple(tuple(int(x) for x in r) for r in rows))
