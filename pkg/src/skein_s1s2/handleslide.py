"""
Handle-slide relations for S^1 x S^2.

S^1 x S^2 is the solid torus with a 2-handle attached along a meridian, plus a
3-ball.  Sliding across the handle identifies the two cappings of every relative
class z, so the skein module is the solid-torus module modulo the rows
``cap_short(z) - cap_long(z)``.  Relation systems collect these rows for all
generators of one winding up to a size bound and eliminate over Q(x, v, s),
largest monomials first, so that phi is the last surviving coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .annulus import BasisChange, basis_change, q_lambda
from .combinatorics import Partition, as_partition
from .diagrams import SliceWord, compile_word
from .elements import AnnulusElement, MonomialKey, RelativeElement, RelativeKey, format_relative_key, key_size, relative_winding
from .linalg import Echelon
from .relative import (
    alt_word,
    cap_long,
    cap_long_word,
    cap_short,
    cap_short_diagram,
    enumerate_relative_basis,
    monomials,
    positive_arc_cappings,
    positive_closure_reversed,
    young_relative_element,
)
from .scalars import ONE, S, TWIST, V, X, Scalar, format_scalar


class RelationError(ValueError):
    pass


def relation_vector(z: RelativeElement) -> AnnulusElement:
    """cap_short(z) - cap_long(z)."""
    windings = {relative_winding(k) for k in z.terms}
    if len(windings) > 1:
        raise RelationError(f"relative element mixes windings {sorted(windings)}")
    return cap_short(z) - cap_long(z)


def word_relation(w: SliceWord) -> AnnulusElement:
    return cap_short_diagram(compile_word(w)) - cap_long_word(w)


def generator_relation(key: RelativeKey) -> AnnulusElement:
    """Relation row of the generator named by ``key``: type 1 for i > 0, type 3 for i = 0, type 2' for i < 0."""
    if key[1] > 0:
        return relation_vector(RelativeElement.basis(*key))
    return word_relation(alt_word(key))


def generator_kind(key: RelativeKey) -> str:
    return "1" if key[1] > 0 else ("3" if key[1] == 0 else "2'")


def column_order(keys) -> list[MonomialKey]:
    """Size descending, then lexicographic on the sorted index tuple."""
    return sorted(set(keys), key=lambda k: (-key_size(k), k))


@dataclass
class RelationSystem:
    winding: int
    size_N: int
    slack: int
    generators: list[RelativeKey]
    rows: list[AnnulusElement]
    columns: list[MonomialKey] = field(default_factory=list)
    echelon: Echelon | None = None

    def quotient_rank(self, size_N: int | None = None) -> dict:
        n = self.size_N if size_N is None else size_N
        span = monomials(n, self.winding)
        killed = [p for p in self.echelon.pivots() if key_size(p) <= n]
        return {"span_dim": len(span), "rank": self.echelon.rank, "quotient_dim": len(span) - len(killed)}

    def dump(self) -> str:
        lines = [
            f"winding = {self.winding}",
            f"size_N = {self.size_N}",
            f"slack = {self.slack}",
            "generators = " + ", ".join(f"{generator_kind(k)}:{format_relative_key(k)}" for k in self.generators),
        ]
        for k, r in zip(self.generators, self.rows):
            lines.append(f"row {generator_kind(k)}:{format_relative_key(k)}: {r}")
        return "\n".join(lines)


def build_system(winding: int, size_N: int, slack: int = 0) -> RelationSystem:
    if size_N < 0 or slack < 0:
        raise ValueError("size_N and slack are non-negative")
    gens = enumerate_relative_basis(winding, size_N + slack)
    rows = [generator_relation(k) for k in gens]
    cols: set = set(monomials(size_N, winding))
    for r in rows:
        cols.update(r.terms)
    order = column_order(cols)
    ech = Echelon({c: j for j, c in enumerate(order)})
    for r in rows:
        ech.add(dict(r.terms))
    return RelationSystem(winding, size_N, slack, gens, rows, order, ech)


def quotient_rank(sys: RelationSystem, size_N: int | None = None) -> dict:
    return sys.quotient_rank(size_N)


@dataclass
class Reduction:
    value: Scalar | None
    residue: AnnulusElement
    resolved: bool

    def __str__(self):
        return format_scalar(self.value) if self.resolved else f"unresolved residue: {self.residue}"


def reduce_to_phi(a: AnnulusElement, sys: RelationSystem) -> Reduction:
    """Reduce a winding-0 element modulo the relations; resolved when only phi remains."""
    if any(sum(k) != 0 for k in a.terms):
        raise RelationError("only winding 0 elements reduce to a multiple of phi")
    if sys.winding != 0:
        raise RelationError("the relation system must have winding 0")
    residue = AnnulusElement(sys.echelon.reduce(dict(a.terms)))
    if set(residue.terms) <= {()}:
        return Reduction(residue.coefficient(()), residue, True)
    return Reduction(None, residue, False)


def stability(winding: int, size_N: int, slack: int) -> tuple[dict, dict, bool]:
    a = build_system(winding, size_N, slack).quotient_rank()
    b = build_system(winding, size_N, slack + 1).quotient_rank()
    return a, b, a["quotient_dim"] == b["quotient_dim"]


# -- closed-form scalars ----------------------------------------------------


def expected_annihilator(mu, cell) -> Scalar:
    """1 - x^{2|mu|} s^{2 cn(cell)} v^-2."""
    mu = as_partition(mu)
    return ONE - X ** (2 * mu.size) * S ** (2 * Partition.content(cell)) * V ** (-2)


def annihilator_scalar(mu, cell) -> Scalar:
    """The scalar t with relation_vector(Q'_{0,mu,cell}) = t Q_{0,mu}, checked against the closed form."""
    mu = as_partition(mu)
    if cell not in mu.extreme_cells():
        raise ValueError(f"cell {cell} is not extreme in {mu}")
    rel = relation_vector(young_relative_element(Partition(()), mu, cell))
    q = q_lambda(mu)
    key = next(iter(q.terms))
    t = rel.coefficient(key) / q.coefficient(key)
    if rel != q.scale(t):
        raise RelationError(f"relation for {mu}, {cell} is not a multiple of Q_{mu}")
    if t != expected_annihilator(mu, cell):
        raise RelationError(f"annihilator for {mu}, {cell} is {t}, expected {expected_annihilator(mu, cell)}")
    return t


def positive_arc_factor(i: int) -> Scalar:
    """The factor f with (reversed positive closure) = f A_{-i} modulo relations.

    The positive outside arc caps short to x v^-1 times the reversed closure of
    sigma_{i-1}..sigma_1 and long to x^-1 v A_{-i}; both shapes are checked.
    """
    short, long_ = positive_arc_cappings(i)
    if short != positive_closure_reversed(i).scale(TWIST):
        raise RelationError("short capping of the positive arc is not a curl on the reversed closure")
    target = AnnulusElement.monomial((-i,))
    if long_ != target.scale(TWIST.inverse()):
        raise RelationError("long capping of the positive arc is not x^-1 v A_{-i}")
    return TWIST ** (-2)


def q_expansion(a: AnnulusElement, change: BasisChange | None = None) -> dict:
    """Coordinates over Q_{lambda,mu}, keyed by (lambda, mu)."""
    if change is None:
        size = max((key_size(k) for k in a.terms), default=0)
        change = basis_change(size)
    return change.q_coordinates(a)


def young_relation(lam, mu, cell) -> AnnulusElement:
    return relation_vector(young_relative_element(lam, mu, cell))


def leading_relation_coefficient(lam, mu, cell) -> Scalar:
    """1 - x^{2(|mu| - |lam|)} v^-2 s^{2 cn(cell)}."""
    lam, mu = as_partition(lam), as_partition(mu)
    return ONE - X ** (2 * (mu.size - lam.size)) * V ** (-2) * S ** (2 * Partition.content(cell))

