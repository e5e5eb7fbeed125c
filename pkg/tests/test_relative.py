import itertools
import random

import pytest

from skein_s1s2.annulus import winding
from skein_s1s2.combinatorics import Partition, extreme_cell_count_e, partitions, standard_tableaux
from skein_s1s2.diagrams import compile_word, evaluate_relative, switch
from skein_s1s2.elements import AnnulusElement, RelativeElement, monomial_key, relative_size, relative_winding
from skein_s1s2.hecke import mul, tableau_morphisms
from skein_s1s2.linalg import rank
from skein_s1s2.relative import (
    alt_expansion,
    alt_to_standard,
    arc_crossing_step,
    cap_long,
    cap_long_word,
    cap_short,
    cap_short_diagram,
    conversion_matrix,
    convert_type2_to_alt,
    enumerate_relative_basis,
    evaluate_weighted,
    first_arc_undercrossing,
    positive_part_keys,
    relative_word,
    wire_into_annulus,
    wire_type1,
    young_generator_labels,
    young_relative_element,
    young_relative_generator,
)
from skein_s1s2.scalars import DELTA, TWIST, X, Z

from helpers import random_slice_word

R = RelativeElement.basis
A = AnnulusElement.monomial
P = Partition


def brute_keys(w, bound):
    """Every (blob, i) by direct search over index multisets."""
    idx = [a for a in range(-bound, bound + 1) if a]
    out = set()
    for n in range(bound + 1):
        for blob in itertools.combinations_with_replacement(idx, n):
            for i in range(-bound, bound + 1):
                if sum(map(abs, blob)) + abs(i) <= bound and sum(blob) + i == w:
                    out.add((tuple(sorted(blob)), i))
    return out


def test_enumeration_examples():
    assert enumerate_relative_basis(1, 1) == [((), 1), ((1,), 0)]
    assert enumerate_relative_basis(0, 1) == [((), 0)]
    three = enumerate_relative_basis(1, 3)
    assert ((-1,), 2) in three and ((-2,), 3) not in three
    with pytest.raises(ValueError):
        enumerate_relative_basis(0, -1)


@pytest.mark.parametrize("w,bound", [(0, 3), (1, 3), (-2, 4), (3, 4)])
def test_enumeration_is_complete(w, bound):
    keys = enumerate_relative_basis(w, bound)
    assert len(keys) == len(set(keys))
    assert {(tuple(sorted(b)), i) for b, i in keys} == brute_keys(w, bound)
    assert enumerate_relative_basis(w, bound) == keys


def test_standard_relative_diagrams_are_basis_elements():
    for w in range(-4, 5):
        for key in enumerate_relative_basis(w, 4):
            assert evaluate_relative(compile_word(relative_word(key))) == R(*key)


def test_short_capping_examples():
    for i in (1, 2, 3):
        assert cap_short(R((), i)) == A((i,))
        assert cap_short(R((), -i)) == A((-i,)).scale(TWIST.inverse())
    assert cap_short(R((), 0)) == AnnulusElement.phi(DELTA)


def test_cappings_preserve_winding():
    for w in (-2, 0, 1, 2):
        for key in enumerate_relative_basis(w, 3):
            z = R(*key)
            for capped in (cap_short(z), cap_long(z)):
                assert {winding(k) for k in capped.terms} <= {w}


def test_cappings_are_well_defined_on_diagrams():
    rng = random.Random(3)
    for _ in range(20):
        w = random_slice_word(rng, max_crossings=5, max_strands=3, relative=True)
        d = compile_word(w)
        z = evaluate_relative(d)
        assert cap_short(z) == cap_short_diagram(d)
        assert cap_long(z) == cap_long_word(w)


def test_alternative_arc_first_step():
    d = compile_word(relative_word(((), -3)))
    switched, smoothed, sign = arc_crossing_step(-3)
    assert sign == -1
    assert evaluate_relative(smoothed) == R((-1,), -2)
    c = first_arc_undercrossing(d)
    assert switch(d, c).signs[c] == 1
    lhs = evaluate_relative(d)
    rhs = evaluate_relative(switched).scale(X**-2) - evaluate_relative(smoothed).scale(Z / X)
    assert lhs == rhs


@pytest.mark.parametrize("w,bound", [(0, 3), (-1, 3), (1, 3)])
def test_conversion_is_triangular(w, bound):
    keys, rows = conversion_matrix(w, bound)
    assert keys and rank([dict(enumerate(r)) for r in rows]) == len(keys)
    for r, key in enumerate(keys):
        assert rows[r][r] == X ** (-2 * key[1])
        for c, other in enumerate(keys):
            if c != r and rows[r][c]:
                assert abs(other[1]) < abs(key[1])


def test_conversion_round_trip():
    assert convert_type2_to_alt(R((), 0)) == R((), 0)
    e = R((), -3).scale(X) + R((-1,), -2) + R((1,), -1).scale(Z)
    alt = convert_type2_to_alt(e)
    assert alt_to_standard(alt) == e
    with pytest.raises(ValueError):
        convert_type2_to_alt(R((), 1))
    assert alt_expansion(((), 2)) == R((), 2)


def test_young_generators_smallest():
    (only,) = young_relative_generator(P(()), P((1,)), (1, 1))
    assert only[0] == 1 and evaluate_relative(only[1]) == R((), 1)
    with pytest.raises(ValueError):
        young_relative_generator(P(()), P((2, 2)), (1, 2))


@pytest.mark.parametrize("lam,mu,cell", [
    ((), (2,), (1, 2)),
    ((), (1, 1), (2, 1)),
    ((1,), (2,), (1, 2)),
    ((1,), (2, 1), (2, 1)),
    ((2,), (1,), (1, 1)),
])
@pytest.mark.parametrize("kind", ["primed", "double_primed"])
def test_young_generator_diagrams_match_wirings(lam, mu, cell, kind):
    lam, mu = P(lam), P(mu)
    assert evaluate_weighted(young_relative_generator(lam, mu, cell, kind)) == young_relative_element(lam, mu, cell, kind)


@pytest.mark.parametrize("shape", [(2,), (1, 1), (2, 1), (3,), (1, 1, 1)], ids=str)
def test_wired_tableau_products_vanish_off_diagonal(shape):
    ts = standard_tableaux(P(shape))
    for t, tau in itertools.product(ts, ts):
        a, _ = tableau_morphisms(t)
        _, b = tableau_morphisms(tau)
        wired = wire_type1(mul(a, b))
        assert wired.is_zero() == (t != tau)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_young_generators_span_positive_part(n):
    labels = young_generator_labels(n)
    assert len(labels) == extreme_cell_count_e(n) == len(positive_part_keys(n))
    rows = [young_relative_element(P(()), mu, c).terms for mu, c in labels]
    assert rank(rows) == len(labels)
    allowed = set(positive_part_keys(n))
    assert all(set(r) <= allowed for r in rows)


def test_wiring_shifts_the_arc():
    one = wire_into_annulus(R((), 1), 1)
    assert list(one.terms) == [(2,)]
    two = wire_into_annulus(R((-1,), 1), 2)
    assert list(two.terms) == [monomial_key((-1, 3))]
    for w in (0, 1, -1):
        keys = enumerate_relative_basis(w, 3)
        rows = [wire_into_annulus(R(*k), 3).terms for k in keys]
        assert all(len(r) == 1 for r in rows)
        assert rank(rows) == len(keys)


def test_relative_bookkeeping():
    assert relative_size(((-1, 2), -3)) == 6
    assert relative_winding(((-1, 2), -3)) == -2
    assert sum(len(p.extreme_cells()) for p in partitions(4)) == extreme_cell_count_e(4)
