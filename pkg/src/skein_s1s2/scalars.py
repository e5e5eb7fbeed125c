"""
Exact coefficients: Laurent polynomials in x, v, s over the rationals and the
field of rational functions they generate.

A ``Scalar`` is stored as a reduced fraction ``num/den`` of genuine polynomials
in Q[x, v, s] (negative powers live in the denominator) with ``gcd(num, den) = 1``
and ``den`` monic for the lexicographic order x > v > s.  Equal scalars therefore
have identical representations, which is what the evaluator caches rely on.
Multivariate gcds are delegated to FLINT.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import flint

VARS = ("x", "v", "s")
_CTX = flint.fmpq_mpoly_ctx.get(VARS, "lex")
_ZERO = _CTX.from_dict({})
_ONE = _CTX.from_dict({(0, 0, 0): 1})

Exponent = tuple[int, int, int]


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    return Fraction(c)


class LaurentPoly:
    """Sparse Laurent polynomial: exponent triple (i, j, k) of x, v, s -> rational."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            c = _frac(c)
            if c:
                clean[tuple(int(a) for a in e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, c=1) -> "LaurentPoly":
        return cls({(i, j, k): c})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({(0, 0, 0): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _as_laurent(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        out: dict[Exponent, Fraction] = {}
        for (e1, c1), (e2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly({(-e[0] * -n, -e[1] * -n, -e[2] * -n): Fraction(1) / c ** -n})
        out = LaurentPoly.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0, 0, 0)
        return tuple(min(e[a] for e in self.terms) for a in range(3))

    def to_scalar(self) -> "Scalar":
        return Scalar.from_laurent(self)


def _as_laurent(obj) -> LaurentPoly:
    if isinstance(obj, LaurentPoly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return LaurentPoly.constant(obj)
    raise TypeError(f"cannot use {type(obj).__name__} as a Laurent polynomial")


def _format_coeff_mono(c: Fraction, e: Exponent) -> str:
    factors = []
    for name, p in zip(VARS, e):
        if p == 1:
            factors.append(name)
        elif p:
            factors.append(f"{name}^{p}")
    mono = "*".join(factors)
    a = abs(c)
    if not mono:
        return str(a)
    if a == 1:
        return mono
    return f"{a}*{mono}"


def format_laurent(p: LaurentPoly) -> str:
    """Terms ``c*x^i*v^j*s^k`` sorted by (i, j, k) descending."""
    if not p.terms:
        return "0"
    out = []
    for n, (e, c) in enumerate(p.sorted_terms()):
        body = _format_coeff_mono(c, e)
        if n == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


# -- flint helpers ----------------------------------------------------------


def _poly_from_dict(d: Mapping[Exponent, object]):
    return _CTX.from_dict({e: flint.fmpq(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                           for e, c in d.items()})


def _poly_key(p) -> tuple:
    return tuple(sorted((e, (int(c.p), int(c.q))) for e, c in p.to_dict().items()))


def _monic(num, den):
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


class Scalar:
    """Element of Q(x, v, s) in canonical reduced form."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num=None, den=None, *, _raw: bool = False):
        if _raw:
            self._n, self._d = num, den
            self._hash = None
            return
        n = _ZERO if num is None else num
        d = _ONE if den is None else den
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        if n.is_zero():
            n, d = _ZERO, _ONE
        else:
            g = n.gcd(d)
            if not g.is_one():
                n, d = n / g, d / g
            n, d = _monic(n, d)
        self._n, self._d = n, d
        self._hash = None

    # constructors
    @classmethod
    def from_int(cls, c) -> "Scalar":
        c = _frac(c)
        return cls(_CTX.from_dict({(0, 0, 0): flint.fmpq(c.numerator, c.denominator)}) if c else _ZERO, _ONE,
                   _raw=True)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "Scalar":
        if not p.terms:
            return ZERO
        m = p.min_exponents()
        shift = tuple(-min(a, 0) for a in m)
        num = _poly_from_dict({(e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]): c for e, c in p.terms.items()})
        den = _CTX.from_dict({shift: 1})
        return cls(num, den)

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, c=1) -> "Scalar":
        return cls.from_laurent(LaurentPoly.monomial(i, j, k, c))

    # predicates and access
    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        return self._n.is_one() and self._d.is_one()

    def is_laurent(self) -> bool:
        return len(self._d.to_dict()) == 1

    def _laurent_split(self) -> tuple[LaurentPoly, LaurentPoly]:
        dd = self._d.to_dict()
        m = tuple(min(e[a] for e in dd) for a in range(3))
        num = LaurentPoly({(e[0] - m[0], e[1] - m[1], e[2] - m[2]): _frac(c) for e, c in self._n.to_dict().items()})
        den = LaurentPoly({(e[0] - m[0], e[1] - m[1], e[2] - m[2]): _frac(c) for e, c in dd.items()})
        return num, den

    @property
    def num(self) -> LaurentPoly:
        """Numerator with the monomial part of the denominator divided out."""
        return self._laurent_split()[0]

    @property
    def den(self) -> LaurentPoly:
        return self._laurent_split()[1]

    def as_laurent(self) -> LaurentPoly:
        n, d = self._laurent_split()
        if d != LaurentPoly.constant(1):
            raise ValueError(f"{self} is not a Laurent polynomial")
        return n

    # arithmetic
    def __add__(self, other):
        other = _as_scalar(other)
        if other._n.is_zero():
            return self
        if self._n.is_zero():
            return other
        a, b, c, d = self._n, self._d, other._n, other._d
        if b == d:
            n = a + c
            if n.is_zero():
                return ZERO
            if b.is_one():
                return Scalar(n, b, _raw=True)
            return Scalar(n, b)
        g = b.gcd(d)
        if g.is_one():
            return Scalar(a * d + c * b, b * d)
        bg, dg = b / g, d / g
        return Scalar(a * dg + c * bg, b * dg)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self._n, self._d, _raw=True)

    def __sub__(self, other):
        return self + (-_as_scalar(other))

    def __rsub__(self, other):
        return _as_scalar(other) + (-self)

    def __mul__(self, other):
        other = _as_scalar(other)
        if self._n.is_zero() or other._n.is_zero():
            return ZERO
        a, b, c, d = self._n, self._d, other._n, other._d
        if b.is_one() and d.is_one():
            return Scalar(a * c, _ONE, _raw=True)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        n, den = _monic(a * c, b * d)
        return Scalar(n, den, _raw=True)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self._n.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        n, d = _monic(self._d, self._n)
        return Scalar(n, d, _raw=True)

    def __truediv__(self, other):
        return self * _as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return _as_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** -k
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = _as_scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_poly_key(self._n), _poly_key(self._d)))
        return self._hash

    def __bool__(self):
        return not self._n.is_zero()

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def is_single_term(self) -> bool:
        return self.is_laurent() and len(self._n.to_dict()) == 1

    def substitute(self, x=None, v=None, s=None) -> "Scalar":
        """Evaluate by substituting Scalars for some variables."""
        vals = [x, v, s]
        if all(val is None for val in vals):
            return self
        gens = [X, V, S]
        vals = [gens[a] if val is None else _as_scalar(val) for a, val in enumerate(vals)]

        def ev(p):
            out = ZERO
            for e, c in p.to_dict().items():
                out = out + Scalar.from_int(_frac(c)) * vals[0] ** e[0] * vals[1] ** e[1] * vals[2] ** e[2]
            return out

        return ev(self._n) / ev(self._d)


def _as_scalar(obj) -> Scalar:
    if isinstance(obj, Scalar):
        return obj
    if isinstance(obj, (int, Fraction)):
        return Scalar.from_int(obj)
    if isinstance(obj, LaurentPoly):
        return Scalar.from_laurent(obj)
    raise TypeError(f"cannot use {type(obj).__name__} as a scalar")


def format_scalar(a: Scalar) -> str:
    n, d = a._laurent_split()
    if d == LaurentPoly.constant(1):
        return format_laurent(n)
    return f"({format_laurent(n)})/({format_laurent(d)})"


def normalize(num: LaurentPoly, den: LaurentPoly) -> Scalar:
    """Canonical scalar for the fraction num/den."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    return Scalar.from_laurent(num) / Scalar.from_laurent(den)


ZERO = Scalar(_ZERO, _ONE, _raw=True)
ONE = Scalar(_ONE, _ONE, _raw=True)
X = Scalar.monomial(1, 0, 0)
V = Scalar.monomial(0, 1, 0)
S = Scalar.monomial(0, 0, 1)
Z = S - S.inverse()
DELTA = (V.inverse() - V) / Z
TWIST = X / V


def coerce(obj) -> Scalar:
    return _as_scalar(obj)


# -- quantum integers -------------------------------------------------------


@lru_cache(maxsize=None)
def quantum_int(n: int) -> Scalar:
    """(s^n - s^-n)/(s - s^-1); quantum_int(0) = 0 and quantum_int(-n) = -quantum_int(n)."""
    return (S ** n - S ** -n) / Z


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> Scalar:
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for j in range(1, n + 1):
        out = out * quantum_int(j)
    return out


# -- exponent collapse x -> x, v -> x^(n^2), s -> x^(-n) -----------------------


def collapse_exponents(p: LaurentPoly, n: int) -> dict[int, Fraction]:
    """Send each term x^i v^j s^k to x^(i + j n^2 - k n), summing collisions."""
    out: dict[int, Fraction] = {}
    for (i, j, k), c in p.terms.items():
        e = i + j * n * n - k * n
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def has_exponent_collision(p: LaurentPoly, n: int) -> bool:
    seen = set()
    for i, j, k in p.terms:
        e = i + j * n * n - k * n
        if e in seen:
            return True
        seen.add(e)
    return False


def find_separating_n(p: LaurentPoly) -> int:
    """Least n >= 1 for which the collapsed exponents of the terms of p are pairwise distinct."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no separating n")
    n = 1
    while has_exponent_collision(p, n):
        n += 1
    return n


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xvs])|(\^)|([-+*/()]))")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column = line, col


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            ws = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + ws]!r}", text, pos + ws)
        start = m.start(m.lastindex)
        toks.append((m.lastindex, m.group(m.lastindex), start))
        pos = m.end()
    toks.append((0, "", len(text)))
    return toks


class _Parser:
    # expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
    # unary := '-' unary | power ; power := atom ('^' signed_int)?
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, val):
        t = self.take()
        if t[1] != val:
            raise ParseError(f"expected {val!r}", self.text, t[2])

    def parse(self) -> Scalar:
        out = self.expr()
        t = self.peek()
        if t[0] != 0:
            raise ParseError(f"unexpected {t[1]!r}", self.text, t[2])
        return out

    def expr(self):
        out = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self):
        out = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            rhs = self.unary()
            out = out * rhs if op == "*" else out / rhs
        return out

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] in ("-", "+"):
                sign = -1 if self.take()[1] == "-" else 1
            t = self.take()
            if t[0] != 1:
                raise ParseError("expected integer exponent", self.text, t[2])
            return base ** (sign * int(t[1]))
        return base

    def atom(self):
        t = self.take()
        if t[0] == 1:
            return Scalar.from_int(int(t[1]))
        if t[0] == 2:
            return {"x": X, "v": V, "s": S}[t[1]]
        if t[1] == "(":
            out = self.expr()
            self.expect(")")
            return out
        raise ParseError(f"unexpected {t[1] or 'end of input'!r}", self.text, t[2])


def parse_scalar(text: str) -> Scalar:
    """Parse the textual scalar format (any +,-,*,/,^ expression in x, v, s)."""
    return _Parser(text).parse()


def parse_laurent(text: str) -> LaurentPoly:
    return parse_scalar(text).as_laurent()


def sum_scalars(items: Iterable[Scalar]) -> Scalar:
    out = ZERO
    for a in items:
        out = out + a
    return out


Number = Union[int, Fraction, Scalar]
