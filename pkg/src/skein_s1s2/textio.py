"""
Diagram files.

Slice form::

    strands 3
    orient d d d
    endpoints A B        # optional; makes the outermost slot the arc
    slices
    X 0 R
    cap 1
    cup 1 u

Graph form::

    crossings
    1 +
    2 -
    edges
    A 1o 0
    1o 2u 1
    2u B -1
    loops 1 -1
    framing 0

Edge ends are ``A``, ``B`` or a crossing number followed by ``o`` (over) or
``u`` (under).  Each edge runs from a tail to a head and carries its seam count.
Comments start with ``#``.
"""

from __future__ import annotations

import re

from .diagrams import A_END, B_END, AnnularDiagram, DiagramError, SliceWord, compile_word
from .scalars import ParseError

SLICE_HEADERS = ("strands", "orient", "endpoints", "slices")
GRAPH_HEADERS = ("crossings", "edges", "loops", "framing")


def _lines(text: str):
    """(line text without comment, offset of its first character)."""
    pos = 0
    for raw in text.splitlines(keepends=True):
        body = raw.split("#", 1)[0].rstrip("\r\n")
        yield body, pos
        pos += len(raw)


def _fail(msg: str, text: str, pos: int):
    raise ParseError(msg, text, pos)


def parse_diagram(text: str) -> SliceWord | AnnularDiagram:
    first = next((b.split()[0] for b, _ in _lines(text) if b.strip()), None)
    if first is None:
        _fail("empty diagram file", text, 0)
    if first in SLICE_HEADERS:
        return parse_slice_form(text)
    if first in GRAPH_HEADERS:
        return parse_graph_form(text)
    _fail(f"unknown section {first!r}", text, text.index(first))


def load_diagram(text: str) -> AnnularDiagram:
    """Parse either form and return a compiled diagram."""
    d = parse_diagram(text)
    return compile_word(d) if isinstance(d, SliceWord) else d


def parse_slice_form(text: str) -> SliceWord:
    strands = orient = None
    relative = False
    slices: list[tuple] = []
    in_slices = False
    for body, pos in _lines(text):
        toks = body.split()
        if not toks:
            continue
        col = pos + body.index(toks[0])
        head = toks[0]
        if in_slices and head not in SLICE_HEADERS:
            slices.append(_parse_slice(toks, text, col))
            continue
        in_slices = False
        if head == "strands":
            if len(toks) != 2 or not toks[1].isdigit():
                _fail("strands takes one non-negative integer", text, col)
            strands = int(toks[1])
        elif head == "orient":
            if any(t not in ("d", "u") for t in toks[1:]):
                _fail("orientations are d or u", text, col)
            orient = tuple(toks[1:])
        elif head == "endpoints":
            if toks[1:] != ["A", "B"]:
                _fail("endpoints must read 'endpoints A B'", text, col)
            relative = True
        elif head == "slices":
            in_slices = True
        else:
            _fail(f"unknown section {head!r}", text, col)
    if orient is None:
        _fail("missing orient section", text, len(text))
    if strands is not None and strands != len(orient):
        _fail(f"strands says {strands} but orient lists {len(orient)}", text, len(text))
    try:
        w = SliceWord(orient, tuple(slices), relative)
        w.profiles()
    except DiagramError as exc:
        raise ParseError(str(exc), text, len(text)) from None
    return w


def _parse_slice(toks: list[str], text: str, pos: int) -> tuple:
    kind = toks[0]
    try:
        if kind == "X" and len(toks) == 3 and toks[2] in ("L", "R"):
            return ("X", int(toks[1]), toks[2])
        if kind == "cap" and len(toks) == 2:
            return ("cap", int(toks[1]))
        if kind == "cup" and len(toks) == 3 and toks[2] in ("d", "u"):
            return ("cup", int(toks[1]), toks[2])
    except ValueError:
        pass
    _fail(f"bad slice {' '.join(toks)!r}", text, pos)


_END = re.compile(r"^(?:(A)|(B)|(\d+)([ou]))$")


def _parse_end(tok: str, text: str, pos: int):
    m = _END.match(tok)
    if not m:
        _fail(f"bad edge end {tok!r}", text, pos)
    if m.group(1):
        return A_END
    if m.group(2):
        return B_END
    return (int(m.group(3)), m.group(4))


def parse_graph_form(text: str) -> AnnularDiagram:
    signs: dict = {}
    nxt: dict = {}
    loops: list[int] = []
    framing = 0
    section = None
    for body, pos in _lines(text):
        toks = body.split()
        if not toks:
            continue
        col = pos + body.index(toks[0])
        head = toks[0]
        if head in GRAPH_HEADERS:
            section = head
            rest = toks[1:]
            try:
                if head == "loops":
                    loops += [int(t) for t in rest]
                elif head == "framing":
                    framing = int(rest[0]) if rest else 0
                elif rest:
                    _fail(f"section {head} takes its entries on the following lines", text, col)
            except ValueError:
                _fail(f"bad integer in {head}", text, col)
            continue
        if section == "crossings":
            if len(toks) != 2 or not toks[0].isdigit() or toks[1] not in ("+", "-", "+1", "-1"):
                _fail("crossing lines read '<number> +' or '<number> -'", text, col)
            signs[int(toks[0])] = 1 if toks[1].startswith("+") else -1
        elif section == "edges":
            if len(toks) != 3:
                _fail("edge lines read '<tail> <head> <seam>'", text, col)
            tail, head_ = _parse_end(toks[0], text, col), _parse_end(toks[1], text, col)
            try:
                seam = int(toks[2])
            except ValueError:
                _fail("seam count must be an integer", text, col)
            if tail in nxt:
                _fail(f"edge tail {toks[0]} used twice", text, col)
            nxt[tail] = (head_, seam)
        else:
            _fail(f"unexpected line {body.strip()!r}", text, col)
    d = AnnularDiagram(signs, nxt, sorted(loops), framing)
    try:
        d.validate()
    except DiagramError as exc:
        raise ParseError(str(exc), text, len(text)) from None
    return d


def format_slice_form(w: SliceWord) -> str:
    lines = [f"strands {w.strands}", "orient " + " ".join(w.orient)]
    if w.relative:
        lines.append("endpoints A B")
    lines.append("slices")
    for sl in w.slices:
        lines.append(" ".join(str(t) for t in sl))
    return "\n".join(lines) + "\n"


def _fmt_end(e) -> str:
    if e == A_END:
        return "A"
    if e == B_END:
        return "B"
    return f"{e[0]}{e[1]}"


def format_graph_form(d: AnnularDiagram) -> str:
    """Graph form with crossings renumbered 1, 2, ... in sorted order."""
    ren = {c: k for k, c in enumerate(sorted(d.signs, key=repr), start=1)}

    def end(e):
        return e if e in (A_END, B_END) else (ren[e[0]], e[1])

    lines = ["crossings"]
    lines += [f"{ren[c]} {'+' if e > 0 else '-'}" for c, e in sorted(d.signs.items(), key=lambda t: ren[t[0]])]
    lines.append("edges")
    edges = sorted(((end(t), end(h), s) for t, (h, s) in d.nxt.items()), key=lambda e: (repr(e[0]), repr(e[1])))
    lines += [f"{_fmt_end(t)} {_fmt_end(h)} {s}" for t, h, s in edges]
    lines.append("loops" + "".join(f" {w}" for w in sorted(d.loops)))
    lines.append(f"framing {d.framing}")
    return "\n".join(lines) + "\n"


def renumbered(d: AnnularDiagram) -> AnnularDiagram:
    """The diagram with crossings renumbered as :func:`format_graph_form` prints them."""
    return parse_graph_form(format_graph_form(d))
