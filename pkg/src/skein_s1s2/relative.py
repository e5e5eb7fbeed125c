"""
The relative skein module of the solid torus with one input point A and one
output point B on the boundary: basis enumeration, the alternative basis with
positive outside arcs, Young generators, wirings and the two cappings.

Keys are ``(blob, i)``: the closed curves ``blob`` (any monomial) beside the arc
A'_i.  Type 1 keys have i > 0, type 2 keys have i <= 0.  The same key tuple also
names an alternative generator (:func:`alt_word`): for i < 0 the arc A'_i with all
its crossings made positive, for i = 0 the short arc.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .combinatorics import Partition, as_partition
from .diagrams import (
    AnnularDiagram,
    DiagramError,
    SliceWord,
    braid_closure_word,
    cap,
    cap_relative,
    compile_word,
    cross,
    cup,
    evaluate,
    evaluate_relative,
    nest,
    nest_words,
    reverse,
    smooth,
    standard_arc_word,
    standard_monomial_word,
    standard_relative_word,
    switch,
    traversal,
)
from .elements import AnnulusElement, MonomialKey, RelativeElement, RelativeKey, key_size, monomial_key, relative_size
from .hecke import HeckeElement, mul, positive_permutation_braid, routing_braid, young_idempotent
from .scalars import ONE, TWIST, Scalar

# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def monomials(size_bound: int, winding: int) -> tuple[MonomialKey, ...]:
    """All monomial keys with sum |a| <= size_bound and sum a = winding."""
    out = []

    def grow(acc: list[int], largest: tuple[int, int] | None, room: int):
        if sum(acc) == winding:
            out.append(monomial_key(acc))
        for a in range(1, room + 1):
            for sign in (1, -1):
                tag = (a, sign)
                if largest is not None and tag > largest:
                    continue
                grow(acc + [sign * a], tag, room - a)

    if size_bound >= 0:
        grow([], None, size_bound)
    return tuple(sorted(set(out), key=lambda k: (key_size(k), len(k), [-a for a in k])))


def enumerate_relative_basis(winding: int, size_bound: int) -> list[RelativeKey]:
    """Keys (blob, i) with |blob| + |i| <= size_bound and winding(blob) + i = winding."""
    if size_bound < 0:
        raise ValueError("size bound must be non-negative")
    out = []
    for i in range(-size_bound, size_bound + 1):
        for blob in monomials(size_bound - abs(i), winding - i):
            out.append((blob, i))
    return sorted(out, key=lambda k: (relative_size(k), -k[1], len(k[0]), [-a for a in k[0]]))


def key_type(key: RelativeKey) -> int:
    return 1 if key[1] > 0 else 2


# -- standard and alternative diagrams --------------------------------------


def relative_word(key: RelativeKey) -> SliceWord:
    return standard_relative_word(key[0], key[1])


def positive_arc_word(i: int) -> SliceWord:
    """The outside arc of A'_i (i <= 0) with every crossing made positive."""
    if i > 0:
        raise ValueError("only arcs A'_i with i <= 0 have a positive version")
    w = standard_arc_word(i)
    slices = tuple(("X", sl[1], "R") if sl[0] == "X" else sl for sl in w.slices)
    return SliceWord(w.orient, slices, True)


def alt_word(key: RelativeKey) -> SliceWord:
    blob, i = key
    if i > 0:
        return relative_word(key)
    return nest_words(positive_arc_word(i), standard_monomial_word(blob))


@lru_cache(maxsize=None)
def _arc_alt_expansion(i: int) -> RelativeElement:
    return evaluate_relative(compile_word(positive_arc_word(i)))


def alt_expansion(key: RelativeKey) -> RelativeElement:
    """Standard coordinates of the alternative generator named by ``key``."""
    blob, i = key
    if i > 0:
        return RelativeElement.basis(blob, i)
    return _arc_alt_expansion(i).times_closed(AnnulusElement.monomial(blob))


def convert_type2_to_alt(e: RelativeElement) -> RelativeElement:
    """Rewrite an element supported on type 2 keys over the alternative generators.

    The alternative generator for (blob, -i) is x^{2i} (blob) A'_{-i} plus keys
    with shorter arcs, so the inverse is found by peeling off the longest arc.
    """
    rest = dict(e.terms)
    out: dict[RelativeKey, Scalar] = {}
    if any(i > 0 for _, i in rest):
        raise ValueError("convert_type2_to_alt takes elements supported on type 2 keys")
    while rest:
        key = min(rest, key=lambda k: (k[1], k))  # longest arc first
        c = rest[key]
        gen = alt_expansion(key)
        lead = gen.coefficient(key)
        if not lead:
            raise ArithmeticError(f"alternative generator {key} has no leading term")
        t = c / lead
        out[key] = out.get(key, Scalar.from_int(0)) + t
        for k, a in gen.terms.items():
            v = rest.get(k, Scalar.from_int(0)) - t * a
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return RelativeElement(out)


def alt_to_standard(e: RelativeElement) -> RelativeElement:
    out = RelativeElement()
    for k, c in e.terms.items():
        out = out + alt_expansion(k).scale(c)
    return out


def conversion_matrix(winding: int, size_bound: int) -> tuple[list[RelativeKey], list[list[Scalar]]]:
    """Rows: alternative generators of type 2 keys, columns: the same keys in standard coordinates."""
    keys = [k for k in enumerate_relative_basis(winding, size_bound) if k[1] <= 0]
    zero = Scalar.from_int(0)
    rows = []
    for k in keys:
        g = alt_expansion(k)
        if any(c not in keys for c in g.terms):
            raise ArithmeticError(f"generator {k} leaves the key set")
        rows.append([g.coefficient(c) if c in g.terms else zero for c in keys])
    return keys, rows


def first_arc_undercrossing(d: AnnularDiagram):
    """The first crossing the arc passes under, walking from A."""
    if not d.relative:
        raise DiagramError("diagram has no arc")
    events = traversal(d)[0][0][0]
    return next((c for c, x in events if x == "u"), None)


def arc_crossing_step(i: int) -> tuple[AnnularDiagram, AnnularDiagram, int]:
    """Switch and smoothing of the innermost crossing of A'_i, with that crossing's sign.

    The arc of A'_i (i < 0) runs out over its crossings and back under them, so the
    first undercrossing is the one next to the turning point; smoothing it splits
    off a single counterclockwise curve.
    """
    d = compile_word(standard_arc_word(i))
    c = first_arc_undercrossing(d)
    if c is None:
        raise DiagramError(f"A'_{i} has no crossing")
    return switch(d, c), smooth(d, c), d.signs[c]


# -- wirings of Hecke elements ----------------------------------------------


@lru_cache(maxsize=None)
def _type1_basis(p: tuple[int, ...]) -> RelativeElement:
    w = braid_closure_word(len(p), positive_permutation_braid(p), "clockwise", relative=True)
    return evaluate_relative(compile_word(w))


def type1_wiring_word(p: tuple[int, ...]) -> SliceWord:
    return braid_closure_word(len(p), positive_permutation_braid(p), "clockwise", relative=True)


def type2_wiring_word(p: tuple[int, ...]) -> SliceWord:
    """Strands oriented counterclockwise, the outermost one turned back into the slot.

    The braid is read along the strands, so its letters appear bottom to top.
    """
    n = len(p)
    letters = positive_permutation_braid(p)
    slices = [cap(n - 1), cup(n - 1, "u")] + [cross(a - 1, "R") for a in reversed(letters)]
    return SliceWord(("u",) * n + ("d",), tuple(slices), True)


@lru_cache(maxsize=None)
def _type2_basis(p: tuple[int, ...]) -> RelativeElement:
    return evaluate_relative(compile_word(type2_wiring_word(p)))


def wire_type1(h: HeckeElement) -> RelativeElement:
    """Close strands 1..n-1 clockwise and leave strand n open from A to B."""
    out = RelativeElement()
    for p, c in h.terms.items():
        out = out + _type1_basis(p).scale(c)
    return out


def wire_type2(h: HeckeElement) -> RelativeElement:
    out = RelativeElement()
    for p, c in h.terms.items():
        out = out + _type2_basis(p).scale(c)
    return out


# -- Young generators -------------------------------------------------------


def open_strand_element(mu, cell) -> HeckeElement:
    """(y_{mu'} (x) 1) rho y_mu rho^-1: y_mu with the strand through ``cell`` moved last."""
    mu = as_partition(mu)
    if cell not in mu.extreme_cells():
        raise ValueError(f"cell {cell} is not an extreme cell of {mu}")
    rho, rho_inv = routing_braid(mu, cell)
    small = young_idempotent(mu.remove(cell)).tensor_identity(1)
    return mul(mul(mul(small, rho), young_idempotent(mu)), rho_inv)


def young_relative_generator(lam, mu, cell, kind: str = "primed") -> list[tuple[Scalar, AnnularDiagram]]:
    """Weighted relative diagrams whose sum is Q'_{lam,mu,cell} or Q''_{lam,mu,cell}.

    ``primed``: a clockwise partial closure with the open strand through ``cell``,
    with the reversed closure of y_lam inside it.  ``double_primed``: the
    orientation-reversed partial closure with the clockwise closure of y_lam inside.
    """
    if kind not in ("primed", "double_primed"):
        raise ValueError("kind is primed or double_primed")
    lam, mu = as_partition(lam), as_partition(mu)
    if mu.size < 1:
        raise ValueError("mu must have at least one cell")
    h = open_strand_element(mu, cell)
    inner = _blob_diagrams(lam, reversed_orientation=(kind == "primed"))
    out = []
    for p, c in sorted(h.terms.items()):
        w = type1_wiring_word(p) if kind == "primed" else type2_wiring_word(p)
        arc = compile_word(w)
        for c2, blob in inner:
            out.append((c * c2, nest(arc, blob)))
    return out


def _blob_diagrams(lam: Partition, reversed_orientation: bool) -> list[tuple[Scalar, AnnularDiagram]]:
    if lam.size == 0:
        return [(ONE, AnnularDiagram())]
    out = []
    for p, c in sorted(young_idempotent(lam).terms.items()):
        d = compile_word(braid_closure_word(len(p), positive_permutation_braid(p), "clockwise"))
        out.append((c, reverse(d) if reversed_orientation else d))
    return out


def young_relative_element(lam, mu, cell, kind: str = "primed") -> RelativeElement:
    """Coordinates of Q'_{lam,mu,cell} (or Q''), computed from the Hecke wirings."""
    from .annulus import q_lambda, q_lambda_reversed

    lam, mu = as_partition(lam), as_partition(mu)
    h = open_strand_element(mu, cell)
    if kind == "primed":
        return wire_type1(h).times_closed(q_lambda_reversed(lam))
    if kind == "double_primed":
        return wire_type2(h).times_closed(q_lambda(lam))
    raise ValueError("kind is primed or double_primed")


def evaluate_weighted(diagrams: Iterable[tuple[Scalar, AnnularDiagram]]) -> RelativeElement:
    out = RelativeElement()
    for c, d in diagrams:
        out = out + evaluate_relative(d).scale(c)
    return out


# -- wiring into the annulus ------------------------------------------------


def wiring_word(w: SliceWord, m: int) -> SliceWord:
    """Continue the arc from B outward around m more times and close it at A."""
    if not w.relative:
        raise DiagramError("only relative words can be wired")
    if m < 1:
        raise ValueError("the wiring needs at least one extra turn")
    k = w.strands
    slices = w.slices + tuple(cross(j, "R") for j in range(k - 1, k + m - 1))
    return SliceWord(w.orient + ("d",) * m, slices, False)


@lru_cache(maxsize=None)
def _wired_key(key: RelativeKey, m: int) -> AnnulusElement:
    return evaluate(compile_word(wiring_word(relative_word(key), m)))


def wire_into_annulus(e: RelativeElement, m: int) -> AnnulusElement:
    out = AnnulusElement()
    for k, c in e.terms.items():
        out = out + _wired_key(k, m).scale(c)
    return out


# -- cappings ---------------------------------------------------------------

#: extra framing picked up by pushing the long capping arc back off the 2-handle
HANDLE_FRAMING = TWIST**2


def long_capping_word(w: SliceWord) -> SliceWord:
    """Close a relative word with the long arc around the attaching meridian.

    The new strand leaves B, passes over every strand at the seam on its way in
    (bottom of the strip), runs through the seam innermost and passes under every
    strand on its way back out to A (top of the strip).
    """
    if not w.relative:
        raise DiagramError("nothing to cap")
    k = w.strands
    top = tuple(cross(j, "R") for j in range(k - 1))
    bottom = tuple(cross(j, "R") for j in range(k - 2, -1, -1))
    return SliceWord(("d",) + w.orient[:-1], top + w.slices + bottom, False)


def cap_short_diagram(d: AnnularDiagram) -> AnnulusElement:
    return evaluate(cap_relative(d))


def cap_long_word(w: SliceWord) -> AnnulusElement:
    return evaluate(compile_word(long_capping_word(w))).scale(HANDLE_FRAMING)


@lru_cache(maxsize=None)
def _cap_short_key(key: RelativeKey) -> AnnulusElement:
    return cap_short_diagram(compile_word(relative_word(key)))


@lru_cache(maxsize=None)
def _cap_long_key(key: RelativeKey) -> AnnulusElement:
    return cap_long_word(relative_word(key))


def cap_short(e: RelativeElement) -> AnnulusElement:
    """Phi': close A to B with the boundary-parallel short arc."""
    out = AnnulusElement()
    for k, c in e.terms.items():
        out = out + _cap_short_key(k).scale(c)
    return out


def cap_long(e: RelativeElement) -> AnnulusElement:
    """Phi'': close A to B with the complementary arc over the 2-handle."""
    out = AnnulusElement()
    for k, c in e.terms.items():
        out = out + _cap_long_key(k).scale(c)
    return out


def positive_arc_cappings(i: int) -> tuple[AnnulusElement, AnnulusElement]:
    """(Phi', Phi'') of the bare positive outside arc for A'_{-i}, i >= 1."""
    w = positive_arc_word(-i)
    return cap_short_diagram(compile_word(w)), cap_long_word(w)


def positive_closure_reversed(i: int) -> AnnulusElement:
    """Reversed closure of the positive braid sigma_{i-1}..sigma_1."""
    return evaluate(reverse(compile_word(braid_closure_word(i, range(i - 1, 0, -1), "clockwise"))))


# -- counting ---------------------------------------------------------------


def positive_part_keys(n: int) -> list[RelativeKey]:
    """Keys spanning C'_n: positive blobs with an arc A'_i, i >= 1, of total size n."""
    return [k for k in enumerate_relative_basis(n, n) if k[1] > 0 and all(a > 0 for a in k[0]) and relative_size(k) == n]


def young_generator_labels(n: int) -> list[tuple[Partition, tuple[int, int]]]:
    from .combinatorics import partitions

    return [(mu, c) for mu in partitions(n) for c in mu.extreme_cells()]
