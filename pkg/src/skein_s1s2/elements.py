"""
Sparse vectors over the monomial bases of the solid-torus skein module and of
its relative version with two boundary points.

A monomial key is a tuple of nonzero integers sorted in decreasing order;
``()`` is the empty link phi.  A relative key is a pair ``(blob, i)``: a monomial
key for the closed curves and the index of the arc A'_i.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from .scalars import ONE, Scalar, coerce, format_laurent, parse_scalar

MonomialKey = tuple[int, ...]
RelativeKey = tuple[MonomialKey, int]


def monomial_key(indices: Iterable[int]) -> MonomialKey:
    idx = [int(a) for a in indices]
    if any(a == 0 for a in idx):
        raise ValueError("monomial indices are nonzero integers")
    return tuple(sorted(idx, reverse=True))


def key_size(key: MonomialKey) -> int:
    return sum(abs(a) for a in key)


def key_winding(key: MonomialKey) -> int:
    return sum(key)


def relative_size(key: RelativeKey) -> int:
    return key_size(key[0]) + abs(key[1])


def relative_winding(key: RelativeKey) -> int:
    return key_winding(key[0]) + key[1]


def format_monomial(key: MonomialKey) -> str:
    return "A[" + ",".join(map(str, key)) + "]"


def format_relative_key(key: RelativeKey) -> str:
    blob, i = key
    arc = f"A'[{i}]"
    return arc if not blob else format_monomial(blob) + "*" + arc


def _format_coeff(c: Scalar) -> tuple[str, str]:
    """(sign, text) with the text empty for a unit coefficient."""
    if c == ONE:
        return "+", ""
    if c == -ONE:
        return "-", ""
    if c.is_laurent() and len(c.as_laurent().terms) == 1:
        t = format_laurent(c.as_laurent())
        return ("-", t[1:]) if t.startswith("-") else ("+", t)
    return "+", f"({c})"


class _Vector:
    key_format = staticmethod(str)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = coerce(c)
            if c:
                clean[self._norm_key(k)] = clean[self._norm_key(k)] + c if self._norm_key(k) in clean else c
        self.terms = {k: c for k, c in clean.items() if c}

    @staticmethod
    def _norm_key(k):
        return k

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return type(self)(out)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = coerce(c)
        if not c:
            return type(self)()
        return type(self)({k: c * a for k, a in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, key) -> Scalar:
        from .scalars import ZERO

        return self.terms.get(self._norm_key(key), ZERO)

    def sorted_keys(self) -> list:
        return sorted(self.terms, key=self._sort_key)

    @staticmethod
    def _sort_key(k):
        return k

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k in self.sorted_keys():
            sign, text = _format_coeff(self.terms[k])
            body = (text + " " if text else "") + self.key_format(k)
            if not out:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append((" - " if sign == "-" else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __iter__(self):
        return iter(self.terms.items())


class AnnulusElement(_Vector):
    """Element of the skein module of the solid torus in monomial coordinates."""

    key_format = staticmethod(format_monomial)

    @staticmethod
    def _norm_key(k):
        return monomial_key(k)

    @staticmethod
    def _sort_key(k):
        return (-key_size(k), -len(k), [-a for a in k])

    @classmethod
    def monomial(cls, key: Iterable[int], coeff=ONE) -> "AnnulusElement":
        return cls({monomial_key(key): coeff})

    @classmethod
    def phi(cls, coeff=ONE) -> "AnnulusElement":
        return cls({(): coeff})

    def __mul__(self, other):
        if isinstance(other, AnnulusElement):
            out: dict[MonomialKey, Scalar] = {}
            for k1, c1 in self.terms.items():
                for k2, c2 in other.terms.items():
                    k = monomial_key(k1 + k2)
                    t = c1 * c2
                    out[k] = out[k] + t if k in out else t
            return AnnulusElement(out)
        return self.scale(other)


class RelativeElement(_Vector):
    """Element of the relative skein module with boundary points A, B."""

    key_format = staticmethod(format_relative_key)

    @staticmethod
    def _norm_key(k):
        blob, i = k
        return (monomial_key(blob), int(i))

    @staticmethod
    def _sort_key(k):
        return (-relative_size(k), -abs(k[1]), -k[1], -len(k[0]), [-a for a in k[0]])

    @classmethod
    def basis(cls, blob: Iterable[int], i: int, coeff=ONE) -> "RelativeElement":
        return cls({(monomial_key(blob), i): coeff})

    def times_closed(self, e: AnnulusElement) -> "RelativeElement":
        """Juxtapose closed curves with every term."""
        out: dict[RelativeKey, Scalar] = {}
        for (blob, i), c1 in self.terms.items():
            for k, c2 in e.terms.items():
                key = (monomial_key(blob + k), i)
                t = c1 * c2
                out[key] = out[key] + t if key in out else t
        return RelativeElement(out)

    __mul__ = times_closed


# -- parsing ----------------------------------------------------------------

_MONO = r"A\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]"
_REL = re.compile(r"(?:" + _MONO + r"\s*\*\s*)?A'\[\s*(-?\d+)\s*\]")
_ABS = re.compile(_MONO)


def _split_terms(text: str, key_re: re.Pattern):
    pos = 0
    found = list(key_re.finditer(text))
    if not found:
        raise ValueError("no basis elements found")
    for m in found:
        chunk = text[pos:m.start()].strip()
        pos = m.end()
        if chunk.startswith("+"):
            chunk = chunk[1:].strip()
        if chunk.endswith("*"):
            chunk = chunk[:-1].strip()
        if chunk in ("", "-"):
            coeff = ONE if not chunk else -ONE
        else:
            coeff = parse_scalar(chunk)
        yield m, coeff
    if text[pos:].strip():
        raise ValueError(f"trailing text {text[pos:].strip()!r}")


def _ints(group: str | None) -> tuple[int, ...]:
    if not group:
        return ()
    return tuple(int(a) for a in group.split(","))


def parse_annulus_element(text: str) -> AnnulusElement:
    if text.strip() == "0":
        return AnnulusElement()
    out = AnnulusElement()
    for m, c in _split_terms(text, _ABS):
        out = out + AnnulusElement.monomial(_ints(m.group(1)), c)
    return out


def parse_relative_element(text: str) -> RelativeElement:
    if text.strip() == "0":
        return RelativeElement()
    out = RelativeElement()
    for m, c in _split_terms(text, _REL):
        out = out + RelativeElement.basis(_ints(m.group(1)), int(m.group(2)), c)
    return out
