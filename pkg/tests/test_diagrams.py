import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skein_s1s2.annulus import closure
from skein_s1s2.diagrams import (
    DiagramError,
    SliceWord,
    braid_closure_diagram,
    braid_closure_word,
    cap,
    compile_word,
    cross,
    cup,
    evaluate,
    evaluate_relative,
    mirror,
    nest,
    reverse,
    standard_arc_word,
    standard_monomial_word,
    standard_relative_word,
    writhe,
)
from skein_s1s2.elements import AnnulusElement, RelativeElement
from skein_s1s2.hecke import word_to_basis
from skein_s1s2.scalars import DELTA, S, TWIST, V, X, Z
from skein_s1s2.textio import renumbered

from helpers import random_slice_word

A = AnnulusElement.monomial


def bar(a: AnnulusElement) -> AnnulusElement:
    """Negate indices and invert x, v, s."""
    return AnnulusElement({tuple(-j for j in k): c.substitute(x=X.inverse(), v=V.inverse(), s=S.inverse())
                           for k, c in a.terms.items()})


def braid_words(n, max_len):
    return st.lists(st.integers(1, n - 1).flatmap(lambda a: st.sampled_from((a, -a))), max_size=max_len)


def test_compile_examples():
    d = compile_word(SliceWord(()))
    assert not d.signs and not d.loops and evaluate(d) == A(())
    one = braid_closure_diagram(1, [])
    assert one.loops == [1] and evaluate(one) == A((1,))
    two = braid_closure_diagram(2, [1])
    assert list(two.signs.values()) == [1] and writhe(two) == 1
    assert evaluate(two) == A((2,))


def test_orientation_errors():
    with pytest.raises(DiagramError):
        SliceWord(("d", "d"), (cap(0),)).profiles()
    with pytest.raises(DiagramError):
        SliceWord(("x",))
    with pytest.raises(DiagramError):
        braid_closure_word(2, [2])


def test_standard_diagrams_evaluate_to_themselves():
    for key in [(1,), (2,), (3,), (-1,), (-2,), (-3,), (1, -1), (-2, 1, 3), (2, 2)]:
        assert evaluate(compile_word(standard_monomial_word(key))) == A(key)
    for blob, i in [((), 1), ((), 3), ((), 0), ((), -2), ((1,), -1), ((-1, 2), 2)]:
        d = compile_word(standard_relative_word(blob, i))
        assert evaluate_relative(d) == RelativeElement.basis(blob, i)
    assert evaluate_relative(compile_word(standard_arc_word(0))) == RelativeElement.basis((), 0)


def test_closure_examples():
    assert evaluate(braid_closure_diagram(2, [-1])) == A((2,)).scale(X**-2) - A((1, 1)).scale(Z / X)
    ccw = braid_closure_diagram(2, [-1], "counterclockwise")
    assert writhe(ccw) == -1 and evaluate(ccw) == A((-2,))


def test_unknot_and_curl():
    unknot = compile_word(SliceWord((), (cup(0, "d"), cap(0))))
    assert evaluate(unknot) == A(()).scale(DELTA)
    # a kink on a clockwise strand
    for over in ("L", "R"):
        d = compile_word(SliceWord(("d",), (cup(1, "u"), cross(0, over), cap(0))))
        (sign,) = d.signs.values()
        assert evaluate(d) == A((1,)).scale(TWIST**sign)


def test_nest_and_reverse():
    a1 = braid_closure_diagram(1, [])
    assert evaluate(nest(a1, a1)) == A((1, 1))
    a2 = braid_closure_diagram(2, [1])
    assert evaluate(reverse(reverse(a2))) == evaluate(a2)
    assert evaluate(reverse(a2)) == A((-2,)).scale(X**2) + A((-1, -1)).scale(X * Z)


def test_mirror_reverse_conjugates():
    rng = random.Random(11)
    for _ in range(25):
        d = compile_word(random_slice_word(rng, max_crossings=5, max_strands=3))
        assert evaluate(mirror(reverse(d))) == bar(evaluate(d))


def test_salted_traversals_agree():
    rng = random.Random(5)
    for _ in range(25):
        d = compile_word(random_slice_word(rng, max_crossings=6, max_strands=3))
        ref = evaluate(d)
        for salt in (1, 2, 3):
            assert evaluate(d, salt) == ref
        assert evaluate(renumbered(d)) == ref
    for _ in range(15):
        d = compile_word(random_slice_word(rng, max_crossings=5, max_strands=3, relative=True))
        ref = evaluate_relative(d)
        assert all(evaluate_relative(d, salt) == ref for salt in (1, 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), braid_words(n, 8))))
def test_direct_evaluation_matches_hecke_route(case):
    n, w = case
    assert evaluate(braid_closure_diagram(n, w)) == closure(word_to_basis(n, w))


@settings(max_examples=30, deadline=None)
@given(braid_words(3, 5), braid_words(3, 5))
def test_trace_property(w1, w2):
    assert evaluate(braid_closure_diagram(3, w1 + w2)) == evaluate(braid_closure_diagram(3, w2 + w1))


def test_evaluate_rejects_open_diagrams():
    rel = compile_word(standard_arc_word(2))
    with pytest.raises(DiagramError):
        evaluate(rel)
    with pytest.raises(DiagramError):
        evaluate_relative(braid_closure_diagram(2, [1]))
