"""
The skein algebra of the solid torus: gradings, closures of Hecke elements and
the Young-idempotent basis Q_{lambda,mu}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from .combinatorics import Partition, as_partition, partitions
from .diagrams import braid_closure_diagram, evaluate, reverse
from .elements import AnnulusElement, MonomialKey, monomial_key
from .hecke import HeckeElement, Perm, mul, positive_permutation_braid, routing_braid, word_to_basis, young_idempotent
from .linalg import invert
from .scalars import ONE, S, TWIST, V, X, Scalar

ORIENTATIONS = ("clockwise", "counterclockwise")


def product(a: AnnulusElement, b: AnnulusElement) -> AnnulusElement:
    return a * b


def winding(key: MonomialKey) -> int:
    return sum(key)


def bidegree(key: MonomialKey) -> tuple[int, int]:
    """(sum of |negative indices|, sum of positive indices)."""
    return (-sum(a for a in key if a < 0), sum(a for a in key if a > 0))


def _split(a: AnnulusElement, label) -> dict:
    parts: dict = {}
    for k, c in a.terms.items():
        parts.setdefault(label(k), {})[k] = c
    return {g: AnnulusElement(t) for g, t in sorted(parts.items())}


def grade(a: AnnulusElement) -> dict[int, AnnulusElement]:
    return _split(a, winding)


def bidegree_split(a: AnnulusElement) -> dict[tuple[int, int], AnnulusElement]:
    return _split(a, bidegree)


# -- closures ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _basis_closure(p: Perm, orient: str) -> AnnulusElement:
    d = braid_closure_diagram(len(p), positive_permutation_braid(p), "clockwise")
    if orient == "counterclockwise":
        d = reverse(d)
    return evaluate(d)


def closure(h: HeckeElement, orient: str = "clockwise") -> AnnulusElement:
    """Close a Hecke element around the core.

    ``counterclockwise`` is the same picture with every orientation reversed.
    """
    if orient not in ORIENTATIONS:
        raise ValueError("orientation is clockwise or counterclockwise")
    if h.n == 0:
        return AnnulusElement.phi(h.terms.get((), Scalar.from_int(0)))
    out = AnnulusElement()
    for p, c in h.terms.items():
        out = out + _basis_closure(p, orient).scale(c)
    return out


@lru_cache(maxsize=None)
def q_lambda(lam) -> AnnulusElement:
    return closure(young_idempotent(as_partition(lam)))


@lru_cache(maxsize=None)
def q_lambda_reversed(lam) -> AnnulusElement:
    return closure(young_idempotent(as_partition(lam)), "counterclockwise")


def q_lambda_mu(lam, mu) -> AnnulusElement:
    """Q_{lambda,mu}: reversed closure of y_lambda beside the closure of y_mu."""
    return q_lambda_reversed(as_partition(lam)) * q_lambda(as_partition(mu))


# -- twists and loops -------------------------------------------------------


def full_twist_word(n: int) -> tuple[int, ...]:
    return tuple(range(1, n)) * n


def framing_coefficient(lam) -> Scalar:
    """x^{|lam|^2} v^{-|lam|} s^{2 sum cn}."""
    lam = as_partition(lam)
    n = lam.size
    return X ** (n * n) * V ** (-n) * S ** (2 * lam.content_sum())


def twisted_closure(lam) -> AnnulusElement:
    """Closure of y_lambda with its band given one positive full twist.

    The twisted band is the braid full twist plus one positive curl on every strand.
    """
    lam = as_partition(lam)
    n = lam.size
    y = young_idempotent(lam)
    return closure(mul(y, word_to_basis(n, full_twist_word(n)))).scale(TWIST**n)


def loop_word(n: int) -> tuple[int, ...]:
    """Strand n once around strands 1..n-1: sigma_{n-1}..sigma_1 sigma_1..sigma_{n-1}."""
    return tuple(range(n - 1, 0, -1)) + tuple(range(1, n))


def encircled_closure(mu, cell, direction: int = 1) -> AnnulusElement:
    """Closure of y_mu with the strand through ``cell`` looped around the others.

    ``direction`` +1 loops with positive crossings, -1 with negative ones.
    """
    mu = as_partition(mu)
    n = mu.size
    if cell not in mu.extreme_cells():
        raise ValueError(f"cell {cell} is not extreme in {mu}")
    word = loop_word(n)
    if direction < 0:
        word = tuple(-a for a in reversed(word))
    rho, rho_inv = routing_braid(mu, cell)
    h = mul(mul(mul(young_idempotent(mu), rho_inv), word_to_basis(n, word)), rho)
    return closure(h)


def encirclement_eigenvalue(mu, cell, direction: int = 1) -> Scalar:
    mu = as_partition(mu)
    e = (X ** (2 * (mu.size - 1))) * S ** (2 * Partition.content(cell))
    return e if direction > 0 else e.inverse()


# -- basis change -----------------------------------------------------------


def monomials_of_bidegree(m: int, n: int) -> list[MonomialKey]:
    neg = [tuple(-a for a in p.parts) for p in partitions(m)] if m else [()]
    pos = [p.parts for p in partitions(n)] if n else [()]
    return [monomial_key(a + b) for a, b in cartesian(neg, pos)]


@dataclass
class BasisChange:
    monomials: list[MonomialKey]
    pairs: list[tuple[Partition, Partition]]
    matrix: list[list[Scalar]]  # row r: coordinates of Q_{pairs[r]}
    inverse: list[list[Scalar]]  # row r: coordinates of monomials[r] over the Q's

    def q_coordinates(self, a: AnnulusElement) -> dict:
        idx = {k: j for j, k in enumerate(self.monomials)}
        out: dict = {}
        for k, c in a.terms.items():
            if k not in idx:
                raise ValueError(f"monomial {k} lies outside the basis change")
            for r, pair in enumerate(self.pairs):
                t = self.inverse[idx[k]][r]
                if t:
                    out[pair] = out[pair] + c * t if pair in out else c * t
        return {p: c for p, c in out.items() if c}


def _pairs(m: int, n: int) -> list[tuple[Partition, Partition]]:
    left = partitions(m) if m else [Partition(())]
    right = partitions(n) if n else [Partition(())]
    return [(a, b) for a in left for b in right]


def basis_change(size: int, bidegrees=None) -> BasisChange:
    """Monomials of bidegree (m, n) against Q_{lambda,mu} with |lambda| = m, |mu| = n, m + n <= size."""
    if bidegrees is None:
        bidegrees = [(m, t - m) for t in range(size + 1) for m in range(t + 1)]
    monos: list[MonomialKey] = []
    pairs: list[tuple[Partition, Partition]] = []
    for m, n in bidegrees:
        monos += monomials_of_bidegree(m, n)
        pairs += _pairs(m, n)
    idx = {k: j for j, k in enumerate(monos)}
    zero = Scalar.from_int(0)
    matrix = []
    for lam, mu in pairs:
        row = [zero] * len(monos)
        for k, c in q_lambda_mu(lam, mu).terms.items():
            row[idx[k]] = c
        matrix.append(row)
    inv = invert(matrix)
    return BasisChange(monos, pairs, matrix, inv)


def identity_matrix(n: int) -> list[list[Scalar]]:
    zero = Scalar.from_int(0)
    return [[ONE if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[Scalar]]:
    zero = Scalar.from_int(0)
    out = []
    for row in a:
        r = []
        for j in range(len(b[0]) if b else 0):
            t = zero
            for k, x in enumerate(row):
                if x and b[k][j]:
                    t = t + x * b[k][j]
            r.append(t)
        out.append(r)
    return out

