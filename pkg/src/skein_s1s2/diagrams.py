"""
Oriented framed link diagrams in the annulus and their evaluation in the
monomial basis.

Slice words.  A diagram is drawn in the strip obtained by cutting the annulus
along a radial seam.  Strand positions 0, 1, ... increase outward and slices are
read from top to bottom; travelling down the strip is travelling clockwise.
Whatever leaves the bottom re-enters at the top through the seam.  A strand
oriented ``d`` crosses the seam with count +1, a strand oriented ``u`` with -1.
Slices are

* ``("X", i, over)``: the strand from top position i to bottom position i+1
  (``L``) crosses the strand from top i+1 to bottom i (``R``); ``over`` names the
  strand on top;
* ``("cap", i)``: the strands at positions i and i+1 end by joining each other;
* ``("cup", i, o)``: a new pair appears at positions i, i+1, the left leg oriented o.

In a relative word the outermost slot is cut open: its top end is the input A and
its bottom end is the output B, both oriented downward.

Compiled diagrams.  Every crossing has an over slot ``(c, "o")`` and an under slot
``(c, "u")``, each with an incoming and an outgoing end.  ``nxt`` maps a tail
(``("A",)`` or the outgoing end of a slot) to the head it runs into (``("B",)`` or
the incoming end of a slot) together with the seam count of the edge.
Crossing-free closed curves are kept as a list of windings, and curls already
removed are remembered as a framing exponent of x v^-1.

Evaluation switches or smooths the first crossing met from below, walking the
arc first and then the closed components, until the diagram is descending; a
descending diagram is a stack of single curves each of which is a basis curve up
to framing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .elements import AnnulusElement, RelativeElement, monomial_key
from .scalars import DELTA, ONE, Scalar, TWIST, X, Z

Slot = tuple

A_END = ("A",)
B_END = ("B",)

_DIRS = {("L", "d"): (1, -1), ("R", "d"): (-1, -1), ("L", "u"): (-1, 1), ("R", "u"): (1, 1)}


class DiagramError(ValueError):
    pass


# -- slice words ------------------------------------------------------------


def cross(i: int, over: str) -> tuple:
    if over not in ("L", "R"):
        raise DiagramError("crossing handedness must be L or R")
    return ("X", i, over)


def cap(i: int) -> tuple:
    return ("cap", i)


def cup(i: int, left: str) -> tuple:
    if left not in ("d", "u"):
        raise DiagramError("cup orientation must be d or u")
    return ("cup", i, left)


def crossing_sign(orient_l: str, orient_r: str, over: str) -> int:
    """Sign of the crossing X(i, over) when the L and R strands have the given orientations."""
    a = _DIRS[("L", orient_l)]
    b = _DIRS[("R", orient_r)]
    o, u = (a, b) if over == "L" else (b, a)
    return 1 if o[0] * u[1] - o[1] * u[0] > 0 else -1


@dataclass(frozen=True)
class SliceWord:
    orient: tuple[str, ...]
    slices: tuple[tuple, ...] = ()
    relative: bool = False

    def __post_init__(self):
        object.__setattr__(self, "orient", tuple(self.orient))
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        for o in self.orient:
            if o not in ("d", "u"):
                raise DiagramError(f"orientation labels are d or u, got {o!r}")

    @property
    def strands(self) -> int:
        return len(self.orient)

    def profiles(self) -> list[tuple[str, ...]]:
        """Orientation profile above each slice and after the last one."""
        prof = list(self.orient)
        out = [tuple(prof)]
        for sl in self.slices:
            kind = sl[0]
            if kind == "X":
                i = sl[1]
                _need(prof, i + 1, sl)
                prof[i], prof[i + 1] = prof[i + 1], prof[i]
            elif kind == "cap":
                i = sl[1]
                _need(prof, i + 1, sl)
                if prof[i] == prof[i + 1]:
                    raise DiagramError(f"cap at {i} joins equally oriented strands")
                del prof[i:i + 2]
            elif kind == "cup":
                i, left = sl[1], sl[2]
                if not 0 <= i <= len(prof):
                    raise DiagramError(f"cup position {i} out of range")
                prof[i:i] = [left, "u" if left == "d" else "d"]
            else:
                raise DiagramError(f"unknown slice {sl!r}")
            out.append(tuple(prof))
        return out


def _need(prof, j, sl):
    if j - 1 < 0 or j >= len(prof):
        raise DiagramError(f"slice {sl!r} out of range for {len(prof)} strands")


def reverse_word(w: SliceWord) -> SliceWord:
    if w.relative:
        raise DiagramError("only closed diagrams can be reversed")
    flip = {"d": "u", "u": "d"}
    slices = []
    for sl in w.slices:
        if sl[0] == "cup":
            slices.append(("cup", sl[1], flip[sl[2]]))
        else:
            slices.append(sl)
    return SliceWord(tuple(flip[o] for o in w.orient), tuple(slices), False)


def nest_words(outer: SliceWord, inner: SliceWord) -> SliceWord:
    """Place ``inner`` in the band radially inside ``outer``."""
    if inner.relative:
        raise DiagramError("the boundary points must lie on the outermost diagram")
    k = inner.strands
    shift = []
    for sl in outer.slices:
        shift.append((sl[0], sl[1] + k) + tuple(sl[2:]))
    return SliceWord(inner.orient + outer.orient, inner.slices + tuple(shift), outer.relative)


def stack_words(top: SliceWord, bottom: SliceWord) -> SliceWord:
    """Concatenate two words with matching profiles."""
    if top.profiles()[-1] != bottom.orient:
        raise DiagramError("profiles do not match")
    return SliceWord(top.orient, top.slices + bottom.slices, top.relative or bottom.relative)


def braid_word_slices(word: Iterable[int], offset: int = 0) -> list[tuple]:
    """sigma_a is X(a-1, R) and sigma_a^-1 is X(a-1, L), shifted by ``offset``."""
    out = []
    for a in word:
        if a == 0:
            raise DiagramError("braid letters are nonzero")
        out.append(("X", abs(a) - 1 + offset, "R" if a > 0 else "L"))
    return out


def braid_closure_word(n: int, word: Iterable[int], orient: str = "clockwise", relative: bool = False) -> SliceWord:
    if orient not in ("clockwise", "counterclockwise"):
        raise DiagramError("orientation is clockwise or counterclockwise")
    word = list(word)
    for a in word:
        if a == 0 or abs(a) >= n:
            raise DiagramError(f"generator {a} out of range for {n} strands")
    o = "d" if orient == "clockwise" else "u"
    return SliceWord((o,) * n, tuple(braid_word_slices(word)), relative)


# -- compiled diagrams ------------------------------------------------------


@dataclass
class AnnularDiagram:
    signs: dict = field(default_factory=dict)
    nxt: dict = field(default_factory=dict)
    loops: list = field(default_factory=list)
    framing: int = 0

    @property
    def relative(self) -> bool:
        return A_END in self.nxt

    def copy(self) -> "AnnularDiagram":
        return AnnularDiagram(dict(self.signs), dict(self.nxt), list(self.loops), self.framing)

    def crossing_count(self) -> int:
        return len(self.signs)

    def validate(self):
        heads = [h for h, _ in self.nxt.values()]
        if len(set(heads)) != len(heads):
            raise DiagramError("an incoming end is used twice")
        tails = set(self.nxt)
        for c in self.signs:
            for x in ("o", "u"):
                if (c, x) not in tails or (c, x) not in heads:
                    raise DiagramError(f"crossing {c} slot {x} is not fully connected")
        if (A_END in tails) != (B_END in heads):
            raise DiagramError("relative diagrams need both endpoints A and B")
        extra = tails - {(c, x) for c in self.signs for x in ("o", "u")} - {A_END}
        if extra:
            raise DiagramError(f"edges leave unknown ends {sorted(extra)}")


def compile_word(w: SliceWord) -> AnnularDiagram:
    """Crossing graph of a slice word with seam counts."""
    profs = w.profiles()
    if profs[-1] != w.orient:
        raise DiagramError("top and bottom orientation profiles differ; the word does not close up")
    if w.relative and (not w.orient or w.orient[-1] != "d"):
        raise DiagramError("a relative word needs its outermost slot oriented downward")
    edges: list[tuple] = []  # (tail, head, seam)
    counter = [0]

    def junction():
        counter[0] += 1
        return ("j", counter[0])

    def vertical(upper, lower, o):
        if o == "d":
            edges.append((upper, lower, 0))
        else:
            edges.append((lower, upper, 0))

    n = w.strands
    cur = [("top", j) for j in range(n)]
    if w.relative:
        cur[-1] = A_END
    prof = list(w.orient)
    signs = {}
    cid = 0
    for sl in w.slices:
        kind = sl[0]
        if kind == "X":
            i, over = sl[1], sl[2]
            cid += 1
            ol, orr = prof[i], prof[i + 1]
            signs[cid] = crossing_sign(ol, orr, over)
            xl = "o" if over == "L" else "u"
            xr = "u" if over == "L" else "o"
            # the upper end of a slot is its incoming end for a down strand and its outgoing end otherwise
            up_l, low_l = (cid, xl, "in" if ol == "d" else "out"), (cid, xl, "out" if ol == "d" else "in")
            up_r, low_r = (cid, xr, "in" if orr == "d" else "out"), (cid, xr, "out" if orr == "d" else "in")
            vertical(cur[i], up_l, ol)
            vertical(cur[i + 1], up_r, orr)
            cur[i], cur[i + 1] = low_r, low_l
            prof[i], prof[i + 1] = orr, ol
        elif kind == "cap":
            i = sl[1]
            p = junction()
            vertical(cur[i], p, prof[i])
            vertical(cur[i + 1], p, prof[i + 1])
            del cur[i:i + 2]
            del prof[i:i + 2]
        else:
            i, left = sl[1], sl[2]
            p = junction()
            cur[i:i] = [p, p]
            prof[i:i] = [left, "u" if left == "d" else "d"]
    for j in range(n):
        if w.relative and j == n - 1:
            edges.append((cur[j], B_END, 0))
            continue
        if prof[j] == "d":
            edges.append((cur[j], ("top", j), 1))
        else:
            edges.append((("top", j), cur[j], -1))
    return _contract(edges, signs)


def _contract(edges, signs) -> AnnularDiagram:
    """Collapse pass-through nodes into edges between crossing ends and endpoints."""
    out_of: dict = {}
    into: dict = {}
    for t, h, s in edges:
        if t in out_of:
            raise DiagramError(f"orientation clash: two edges leave {t}")
        if h in into:
            raise DiagramError(f"orientation clash: two edges enter {h}")
        out_of[t] = (h, s)
        into[h] = (t, s)

    def terminal_tail(t):
        return t == A_END or (len(t) == 3 and t[2] == "out")

    def terminal_head(h):
        return h == B_END or (len(h) == 3 and h[2] == "in")

    nxt = {}
    seen = set()
    for t in list(out_of):
        if not terminal_tail(t):
            continue
        h, s = out_of[t]
        seen.add(t)
        while not terminal_head(h):
            if h not in out_of:
                raise DiagramError(f"open strand end at {h}")
            seen.add(h)
            h, ds = out_of[h]
            s += ds
        key_t = A_END if t == A_END else (t[0], t[1])
        key_h = B_END if h == B_END else (h[0], h[1])
        nxt[key_t] = (key_h, s)
    loops = []
    for t in list(out_of):
        if t in seen or terminal_tail(t):
            continue
        s = 0
        cur = t
        while True:
            if cur in seen:
                break
            seen.add(cur)
            if cur not in out_of:
                raise DiagramError(f"open strand end at {cur}")
            h, ds = out_of[cur]
            s += ds
            if terminal_head(h):
                raise DiagramError("inconsistent strand structure")
            cur = h
        if cur != t:
            raise DiagramError("inconsistent strand structure")
        loops.append(s)
    d = AnnularDiagram(signs, nxt, sorted(loops), 0)
    d.validate()
    return d


def compile(w: SliceWord) -> AnnularDiagram:  # noqa: A001 - the natural name for the operation
    return compile_word(w)


def braid_closure_diagram(n: int, word: Iterable[int], orient: str = "clockwise") -> AnnularDiagram:
    return compile_word(braid_closure_word(n, word, orient))


def reverse(d: AnnularDiagram) -> AnnularDiagram:
    """Flip every orientation; seam counts negate and crossing signs stay."""
    if d.relative:
        raise DiagramError("only closed diagrams can be reversed")
    nxt = {h: (t, -s) for t, (h, s) in d.nxt.items()}
    return AnnularDiagram(dict(d.signs), nxt, sorted(-w for w in d.loops), d.framing)


def nest(outer: AnnularDiagram, inner: AnnularDiagram) -> AnnularDiagram:
    """Disjoint union with ``inner`` radially inside ``outer``."""
    if inner.relative:
        raise DiagramError("the boundary points must lie on the outermost diagram")
    shift = max(outer.signs, default=0)

    def ren(slot):
        return slot if slot in (A_END, B_END) else (slot[0] + shift, slot[1])

    nxt = dict(outer.nxt)
    for t, (h, s) in inner.nxt.items():
        nxt[ren(t)] = (ren(h), s)
    signs = dict(outer.signs)
    signs.update({c + shift: e for c, e in inner.signs.items()})
    return AnnularDiagram(signs, nxt, sorted(outer.loops + inner.loops), outer.framing + inner.framing)


# -- local moves ------------------------------------------------------------


def _remove_crossing(d: AnnularDiagram, c, through: dict) -> AnnularDiagram:
    """Delete crossing c, joining each incoming end to the outgoing end ``through`` names."""
    nxt = dict(d.nxt)
    signs = dict(d.signs)
    del signs[c]
    loops = list(d.loops)
    prev = {}
    for t, (h, s) in d.nxt.items():
        if h != B_END and h[0] == c:
            prev[h[1]] = (t, s)
    outs = {x: nxt.pop((c, x)) for x in ("o", "u")}
    used = set()
    for x in ("o", "u"):
        t, total = prev[x]
        if t != A_END and t[0] == c:
            continue
        cur = x
        while True:
            y = through[cur]
            used.add(y)
            h, s = outs[y]
            total += s
            if h != B_END and h[0] == c:
                cur = h[1]
                continue
            break
        nxt[t] = (h, total)
    for y in ("o", "u"):
        if y in used:
            continue
        total = 0
        z = y
        while True:
            used.add(z)
            h, s = outs[z]
            total += s
            z = through[h[1]]
            if z == y:
                break
        loops.append(total)
    return AnnularDiagram(signs, nxt, sorted(loops), d.framing)


def smooth(d: AnnularDiagram, c) -> AnnularDiagram:
    """Oriented smoothing at c."""
    return _remove_crossing(d, c, {"o": "u", "u": "o"})


def switch(d: AnnularDiagram, c) -> AnnularDiagram:
    """Exchange over and under at c."""
    flip = {"o": "u", "u": "o"}

    def ren(slot):
        if slot in (A_END, B_END) or slot[0] != c:
            return slot
        return (c, flip[slot[1]])

    nxt = {ren(t): (ren(h), s) for t, (h, s) in d.nxt.items()}
    signs = dict(d.signs)
    signs[c] = -signs[c]
    return AnnularDiagram(signs, nxt, list(d.loops), d.framing)


def remove_curls(d: AnnularDiagram) -> AnnularDiagram:
    """Remove every monogon, recording the framing change."""
    while True:
        for t, (h, s) in d.nxt.items():
            if s == 0 and t != A_END and h != B_END and t[0] == h[0] and t[1] != h[1]:
                c = t[0]
                sign = d.signs[c]
                d = _remove_crossing(d, c, {"o": "o", "u": "u"})
                d.framing += sign
                break
        else:
            return d


# -- traversal --------------------------------------------------------------


def _trace(d: AnnularDiagram, start):
    """Events and incoming seams from ``start`` until B or back to ``start``."""
    events, segs = [], []
    t = start
    while True:
        h, s = d.nxt[t]
        segs.append(s)
        if h == B_END:
            return events, segs
        events.append(h)
        t = h
        if t == start:
            return events, segs


def _closed_components(d: AnnularDiagram, skip: set) -> list[list]:
    comps = []
    seen = set(skip)
    for c in sorted(d.signs):
        for x in ("o", "u"):
            if (c, x) in seen:
                continue
            events, _ = _trace(d, (c, x))
            seen.update(events)
            comps.append(events)
    return comps


def _rotation(sign: int) -> list[tuple[str, str]]:
    """Counterclockwise order of the four ends at a crossing."""
    if sign > 0:
        return [("out", "o"), ("out", "u"), ("in", "o"), ("in", "u")]
    return [("out", "o"), ("in", "u"), ("in", "o"), ("out", "u")]


def outer_starts(d: AnnularDiagram, start) -> list:
    """Tails from which a walk of the closed component through ``start`` begins on its outer face.

    Only the component's own crossings count as vertices here.  Faces are traced
    with the face on the left; the face holding the outer boundary is the one whose
    boundary walk winds +1.  When no face winds (the curve lies in a disc) every
    start is allowed.
    """
    events, segs = _trace(d, start)
    count: dict = {}
    for c, _ in events:
        count[c] = count.get(c, 0) + 1
    selfs = [t for t, (c, _) in enumerate(events) if count[c] == 2]
    if not selfs:
        return list(events)
    m = len(selfs)
    n = len(events)
    seam = []
    for j in range(m):
        a, b = selfs[j], selfs[(j + 1) % m]
        total = 0
        t = a
        while True:
            t = (t + 1) % n
            total += segs[t]
            if t == b:
                break
        seam.append(total)
    # ends at each vertex: ("out", x) starts segment j, ("in", x) ends segment j-1
    owner = {}
    for j, t in enumerate(selfs):
        c, x = events[t]
        owner[(c, "out", x)] = (j, True)
        owner[(c, "in", x)] = ((j - 1) % m, False)
    ends_of = {}
    for (c, io, x), (j, is_start) in owner.items():
        ends_of[(j, is_start)] = (c, io, x)

    def turn(c, io, x):
        rot = _rotation(d.signs[c])
        k = rot.index((io, x))
        io2, x2 = rot[(k - 1) % 4]
        j, is_start = owner[(c, io2, x2)]
        return (j, is_start)  # walk segment j forward when we leave from its start

    visited = set()
    outer = None
    for j0 in range(m):
        for fwd0 in (True, False):
            if (j0, fwd0) in visited:
                continue
            face, total = [], 0
            dart = (j0, fwd0)
            while dart not in visited:
                visited.add(dart)
                face.append(dart[0])
                j, fwd = dart
                total += seam[j] if fwd else -seam[j]
                c, io, x = ends_of[(j, False)] if fwd else ends_of[(j, True)]
                dart = turn(c, io, x)
            if total == 1:
                outer = face
    if outer is None:
        return [events[t] for t in selfs]
    return sorted({events[selfs[j]] for j in outer})


def _signature(d, events, segs, labels):
    """Projection-only description of a walk.

    Each event records the crossing label, the side from which the other strand
    crosses (unchanged by switching the crossing) and the incoming seam.
    """
    out = []
    fresh = {}
    nxt_label = len(labels)
    for (c, x), s in zip(events, segs):
        if c in labels:
            lab = labels[c]
        elif c in fresh:
            lab = fresh[c]
        else:
            lab = fresh[c] = nxt_label + len(fresh)
        side = 1 if (x == "o") == (d.signs[c] > 0) else -1
        out.append((lab, side, s))
    return tuple(out), fresh


def traversal(d: AnnularDiagram, salt: int | None = None):
    """Component walks in evaluation order together with a relabelling-invariant key.

    Each walk is (events, incoming seams, is_arc).  The arc starts at A and every
    closed component starts on its own outer face.  Order and base points depend
    only on the projection, so switching crossings never changes them and the
    skein recursion terminates.  They are chosen greedily by smallest signature,
    which makes isomorphic diagrams share a key; a ``salt`` reorders candidates by
    a salted hash instead, giving an independent admissible traversal.
    """
    def rank(sig):
        return sig if salt is None else (hash((salt, sig)), sig)

    labels: dict = {}
    walks = []
    key = []
    skip = set()
    if d.relative:
        events, segs = _trace(d, A_END)
        sig, fresh = _signature(d, events, segs, labels)
        labels.update(fresh)
        walks.append((events, segs, True))
        key.append((sig, segs[-1]))
        skip.update(events)
    remaining = [outer_starts(d, comp[0]) for comp in _closed_components(d, skip)]
    while remaining:
        best = None
        for ci, starts in enumerate(remaining):
            for start in starts:
                events, segs = _trace(d, start)
                sig, fresh = _signature(d, events, segs, labels)
                r = rank(sig)
                if best is None or r < best[0]:
                    best = (r, sig, fresh, ci, events, segs)
        _, sig, fresh, ci, events, segs = best
        labels.update(fresh)
        walks.append((events, segs, False))
        key.append(sig)
        remaining.pop(ci)
    overs = tuple(x == "o" for events, _, _ in walks for _, x in events)
    return walks, (d.relative, tuple(key), overs)


def first_bad_crossing(walks):
    seen = set()
    for events, _, _ in walks:
        for c, x in events:
            if c not in seen:
                seen.add(c)
                if x == "u":
                    return c
    return None


def is_descending(d: AnnularDiagram) -> bool:
    return first_bad_crossing(traversal(d)[0]) is None


# -- evaluation -------------------------------------------------------------


def base_writhe(w: int) -> int:
    """Writhe of the standard diagram of A_w."""
    if w == 0:
        return 0
    return (1 if w > 0 else -1) * (abs(w) - 1)


def base_arc_writhe(i: int) -> int:
    """Writhe of the standard diagram of A'_i."""
    if i > 0:
        return i - 1
    return i


_CACHE: dict = {}


def clear_cache():
    _CACHE.clear()


def _add_into(acc: dict, terms: dict, c: Scalar):
    for k, a in terms.items():
        t = a * c
        if k in acc:
            t = acc[k] + t
            if t:
                acc[k] = t
            else:
                del acc[k]
        elif t:
            acc[k] = t


def _terminal(d: AnnularDiagram, walks) -> dict:
    coeff = ONE
    blob = []
    arc = None
    for events, segs, is_arc in walks:
        w = sum(segs)
        cs = [c for c, _ in events]
        r = sum(d.signs[c] for c in set(cs) if cs.count(c) == 2)
        if is_arc:
            i = w + 1
            arc = i
            coeff = coeff * TWIST ** (r - base_arc_writhe(i))
        elif w == 0:
            coeff = coeff * DELTA * TWIST ** r
        else:
            blob.append(w)
            coeff = coeff * TWIST ** (r - base_writhe(w))
    key = monomial_key(blob)
    return {(key, arc) if d.relative else key: coeff}


_XX = X * X
_XZ = X * Z
_XI2 = X ** -2
_MXIZ = -(Z / X)


def _evaluate_core(d: AnnularDiagram, salt) -> dict:
    d = remove_curls(d)
    factor = TWIST ** d.framing
    loop_blob = []
    for w in d.loops:
        if w == 0:
            factor = factor * DELTA
        else:
            loop_blob.append(w)
            factor = factor * TWIST ** (-base_writhe(w))
    core = AnnularDiagram(d.signs, d.nxt, [], 0)
    walks, key = traversal(core, salt)
    base = _CACHE.get(key) if salt is None else None
    if base is None:
        bad = first_bad_crossing(walks)
        if bad is None:
            base = _terminal(core, walks)
        else:
            sw = _evaluate_core(switch(core, bad), salt)
            sm = _evaluate_core(smooth(core, bad), salt)
            base = {}
            if core.signs[bad] > 0:
                _add_into(base, sw, _XX)
                _add_into(base, sm, _XZ)
            else:
                _add_into(base, sw, _XI2)
                _add_into(base, sm, _MXIZ)
        if salt is None:
            _CACHE[key] = base
    out = {}
    for k, c in base.items():
        if d.relative:
            k2 = (monomial_key(k[0] + tuple(loop_blob)), k[1])
        else:
            k2 = monomial_key(k + tuple(loop_blob))
        out[k2] = c * factor
    return out


def evaluate(d: AnnularDiagram, salt: int | None = None) -> AnnulusElement:
    """Monomial coordinates of a closed diagram.

    ``salt`` selects a different admissible traversal order (uncached); the
    result must not depend on it.
    """
    if d.relative:
        raise DiagramError("diagram has endpoints A, B; use evaluate_relative")
    return AnnulusElement(_evaluate_core(d, salt))


def evaluate_relative(d: AnnularDiagram, salt: int | None = None) -> RelativeElement:
    """Coordinates of a diagram with endpoints in the basis (blob) A'_i."""
    if not d.relative:
        raise DiagramError("diagram has no endpoints; use evaluate")
    return RelativeElement(_evaluate_core(d, salt))


def evaluate_any(d: AnnularDiagram, salt: int | None = None):
    return evaluate_relative(d, salt) if d.relative else evaluate(d, salt)


def evaluate_word(w: SliceWord, salt: int | None = None):
    return evaluate_any(compile_word(w), salt)


def writhe(d: AnnularDiagram) -> int:
    return sum(d.signs.values()) + d.framing


def cap_relative(d: AnnularDiagram) -> AnnularDiagram:
    """Join B back to A by a short segment through the seam."""
    if not d.relative:
        raise DiagramError("nothing to cap")
    nxt = dict(d.nxt)
    h0, s0 = nxt.pop(A_END)
    loops = list(d.loops)
    if h0 == B_END:
        loops.append(s0 + 1)
        return AnnularDiagram(dict(d.signs), nxt, sorted(loops), d.framing)
    tail = next(t for t, (h, _) in nxt.items() if h == B_END)
    _, s1 = nxt[tail]
    nxt[tail] = (h0, s1 + 1 + s0)
    return AnnularDiagram(dict(d.signs), nxt, sorted(loops), d.framing)


def standard_monomial_word(key: Sequence[int]) -> SliceWord:
    """Curves A_j in separate bands, the first index innermost."""
    w = SliceWord(())
    for j in key:
        if j > 0:
            piece = braid_closure_word(j, range(j - 1, 0, -1), "clockwise")
        else:
            piece = braid_closure_word(-j, [-a for a in range(-j - 1, 0, -1)], "counterclockwise")
        w = nest_words(piece, w)
    return w


def standard_arc_word(i: int) -> SliceWord:
    """A'_i: the arc from A to B alone, descending from A."""
    if i > 0:
        return braid_closure_word(i, range(i - 1, 0, -1), "clockwise", relative=True)
    orient = ("u",) * (-i + 1) + ("d",)
    slices = [cap(-i), cup(-i, "u")]
    slices += [cross(j, "L") for j in range(-i - 1, -1, -1)]
    return _make_descending(SliceWord(orient, tuple(slices), True))


def _make_descending(w: SliceWord) -> SliceWord:
    """Choose the over strand at every crossing so that the arc meets it first from above."""
    slices = list(w.slices)
    xs = [k for k, sl in enumerate(slices) if sl[0] == "X"]
    for _ in range(len(xs) + 1):
        d = compile_word(SliceWord(w.orient, tuple(slices), w.relative))
        walks, _ = traversal(d)
        bad = first_bad_crossing(walks)
        if bad is None:
            return SliceWord(w.orient, tuple(slices), w.relative)
        k = xs[bad - 1]
        sl = slices[k]
        slices[k] = ("X", sl[1], "R" if sl[2] == "L" else "L")
    raise DiagramError("could not make the arc descending")


def standard_relative_word(blob: Sequence[int], i: int) -> SliceWord:
    return nest_words(standard_arc_word(i), standard_monomial_word(blob))


def mirror(d: AnnularDiagram) -> AnnularDiagram:
    """Switch every crossing."""
    flip = {"o": "u", "u": "o"}

    def ren(slot):
        return slot if slot in (A_END, B_END) else (slot[0], flip[slot[1]])

    nxt = {ren(t): (ren(h), s) for t, (h, s) in d.nxt.items()}
    return AnnularDiagram({c: -e for c, e in d.signs.items()}, nxt, list(d.loops), -d.framing)
