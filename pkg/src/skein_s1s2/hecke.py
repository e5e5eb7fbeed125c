"""
Hecke algebras H_n on the basis of positive permutation braids.

Conventions.  A permutation ``pi`` is a tuple of 1-based images: the strand that
starts at top position ``i`` ends at bottom position ``pi[i-1]``.  Products stack
the left factor on top of the right one, so ``omega_pi * omega_rho`` is
``omega_{rho o pi}`` whenever the lengths add.  Right multiplication by sigma_i
uses the quadratic relation sigma_i^2 = x^2 + x z sigma_i with z = s - s^-1.

The canonical word of a permutation strips the smallest bottom descent first, so
the canonical word of ``pi`` is the canonical word of ``tau_i o pi`` followed by
``i``.  Prefixes of canonical words are canonical, which lets products be built
along a tree with one right multiplication per node.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, StandardTableau, as_partition, hook_product
from .scalars import ONE, ZERO, Scalar, X, Z, coerce, quantum_factorial, S

Perm = tuple[int, ...]

_XZ = X * Z
_X2 = X * X
_XI = X.inverse()
_X2I = _XI * _XI
_MXIZ = -(_XI * Z)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p, start=1):
        out[pi - 1] = i
    return tuple(out)


def compose(first: Perm, then: Perm) -> Perm:
    """The permutation of stacking ``first`` above ``then``: i -> then(first(i))."""
    return tuple(then[first[i] - 1] for i in range(len(first)))


def length(p: Perm) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(int(a) for a in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {list(p)}")
    return p


def _swap_bottom(p: Perm, i: int) -> Perm:
    """tau_i o p: exchange the bottom positions i and i+1."""
    out = []
    for a in p:
        out.append(i + 1 if a == i else i if a == i + 1 else a)
    return tuple(out)


def _swap_top(p: Perm, i: int) -> Perm:
    """p o tau_i: exchange the strands starting at top positions i and i+1."""
    out = list(p)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


@lru_cache(maxsize=None)
def positive_permutation_braid(p: Perm) -> tuple[int, ...]:
    """Canonical reduced positive word of a permutation."""
    p = check_perm(p)
    inv = perm_inverse(p)
    for i in range(1, len(p)):
        if inv[i - 1] > inv[i]:
            return positive_permutation_braid(_swap_bottom(p, i)) + (i,)
    return ()


def word_permutation(n: int, word: Iterable[int]) -> Perm:
    p = identity(n)
    for a in word:
        p = _swap_bottom(p, abs(a))
    return p


def all_perms(n: int) -> list[Perm]:
    return [tuple(q) for q in itertools.permutations(range(1, n + 1))]


class HeckeElement:
    """Sparse linear combination of positive permutation braids in H_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, object] | None = None):
        self.n = n
        clean = {}
        for p, c in (terms or {}).items():
            c = coerce(c)
            if c:
                if len(p) != n:
                    raise ValueError(f"permutation {p} has the wrong size for H_{n}")
                clean[tuple(p)] = c
        self.terms = clean

    @classmethod
    def basis(cls, p: Sequence[int], coeff=ONE) -> "HeckeElement":
        p = check_perm(p)
        return cls(len(p), {p: coeff})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {identity(n): ONE})

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "HeckeElement"):
        if not isinstance(other, HeckeElement):
            raise TypeError("expected a HeckeElement")
        if other.n != self.n:
            raise ValueError(f"strand-count mismatch: H_{self.n} vs H_{other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return HeckeElement(self.n, out)

    def __neg__(self):
        return HeckeElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = coerce(c)
        if not c:
            return HeckeElement(self.n)
        return HeckeElement(self.n, {p: c * a for p, a in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"HeckeElement({format_hecke(self)})"

    def __str__(self):
        return format_hecke(self)

    def times_generator(self, i: int) -> "HeckeElement":
        """Right multiplication by sigma_i."""
        out: dict[Perm, Scalar] = {}

        def add(p, c):
            if p in out:
                out[p] = out[p] + c
            else:
                out[p] = c

        for p, c in self.terms.items():
            q = _swap_bottom(p, i)
            inv = perm_inverse(p)
            if inv[i - 1] < inv[i]:
                add(q, c)
            else:
                add(q, _X2 * c)
                add(p, _XZ * c)
        return HeckeElement(self.n, out)

    def generator_times(self, i: int) -> "HeckeElement":
        """Left multiplication by sigma_i."""
        out: dict[Perm, Scalar] = {}

        def add(p, c):
            if p in out:
                out[p] = out[p] + c
            else:
                out[p] = c

        for p, c in self.terms.items():
            q = _swap_top(p, i)
            if p[i - 1] < p[i]:
                add(q, c)
            else:
                add(q, _X2 * c)
                add(p, _XZ * c)
        return HeckeElement(self.n, out)

    def times_word(self, word: Iterable[int]) -> "HeckeElement":
        out = self
        for a in word:
            if a > 0:
                out = out.times_generator(a)
            else:
                # sigma^-1 = x^-2 sigma - x^-1 z
                out = out.times_generator(-a).scale(_X2I) + out.scale(_MXIZ)
        return out

    def tensor_identity(self, k: int) -> "HeckeElement":
        """h (x) 1_k: k straight strands added after the last position."""
        return HeckeElement(self.n + k, {p + tuple(range(self.n + 1, self.n + k + 1)): c for p, c in self.terms.items()})

    def shift(self, k: int, total: int | None = None) -> "HeckeElement":
        """1_k (x) h, padded with identity strands up to ``total``."""
        total = self.n + k if total is None else total
        tail = tuple(range(self.n + k + 1, total + 1))
        return HeckeElement(total, {tuple(range(1, k + 1)) + tuple(a + k for a in p) + tail: c
                                    for p, c in self.terms.items()})


def word_to_basis(n: int, word: Iterable[int]) -> HeckeElement:
    word = list(word)
    for a in word:
        if a == 0 or abs(a) >= n:
            raise ValueError(f"generator index {a} out of range for {n} strands")
    return HeckeElement.one(n).times_word(word)


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Stack a above b."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return HeckeElement(a.n)
    memo: dict[Perm, HeckeElement] = {identity(a.n): a}

    def a_times(p: Perm) -> HeckeElement:
        if p in memo:
            return memo[p]
        word = positive_permutation_braid(p)
        prev = _swap_bottom(p, word[-1])
        out = a_times(prev).times_generator(word[-1])
        memo[p] = out
        return out

    acc: dict[Perm, Scalar] = {}
    for p, c in b.terms.items():
        for q, d in a_times(p).terms.items():
            t = c * d
            acc[q] = acc[q] + t if q in acc else t
    return HeckeElement(a.n, acc)


def tensor(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """a placed on the first strands and b on the following ones."""
    out: dict[Perm, Scalar] = {}
    for p, c in a.terms.items():
        for q, d in b.terms.items():
            out[p + tuple(x + a.n for x in q)] = c * d
    return HeckeElement(a.n + b.n, out)


def braid_inverse_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(word))


def gathering_permutation(positions: Sequence[int], n: int) -> Perm:
    """Send top point k to positions[k-1] for k <= m and the remaining top points, in order, to the unused positions."""
    positions = list(positions)
    if any(positions[i] >= positions[i + 1] for i in range(len(positions) - 1)):
        raise ValueError("positions must be strictly increasing")
    if positions and (positions[0] < 1 or positions[-1] > n):
        raise ValueError(f"positions must lie in 1..{n}")
    rest = [q for q in range(1, n + 1) if q not in positions]
    return tuple(positions + rest)


def conjugate(h: HeckeElement, p: Perm) -> HeckeElement:
    """rho^-1 h rho with rho the positive permutation braid of p (rho^-1 its braid inverse)."""
    word = positive_permutation_braid(p)
    n = h.n
    top = word_to_basis(n, braid_inverse_word(word))
    return mul(top, h).times_word(word)


def embed(h: HeckeElement, positions: Sequence[int], n: int) -> HeckeElement:
    """Place h on the strands at the given top positions of H_n."""
    if len(positions) != h.n:
        raise ValueError("one position per strand of h is required")
    p = gathering_permutation(positions, n)
    return conjugate(h.tensor_identity(n - h.n), p)


# -- idempotents -------------------------------------------------------------


@lru_cache(maxsize=None)
def symmetrizer_unnormalized(n: int, flavor: str) -> HeckeElement:
    """[n]! f_n (flavor 'f') or [n]! g_n (flavor 'g'); Laurent coefficients."""
    if flavor not in ("f", "g"):
        raise ValueError("flavor must be 'f' or 'g'")
    if n < 1:
        raise ValueError("symmetrizers need n >= 1")
    if flavor == "f":
        pre, step = S ** (-(n * (n - 1) // 2)), (X / S).inverse()
    else:
        pre, step = S ** (n * (n - 1) // 2), (-(X * S)).inverse()
    return HeckeElement(n, {p: pre * step ** length(p) for p in all_perms(n)})


@lru_cache(maxsize=None)
def symmetrizer(n: int, flavor: str) -> HeckeElement:
    return symmetrizer_unnormalized(n, flavor).scale(quantum_factorial(n).inverse())


def column_major_permutation(lam: Partition) -> Perm:
    """Send the k-th cell in column-major order to its row-major position."""
    order = sorted(lam.cells(), key=lambda c: (c[1], c[0]))
    return tuple(lam.cell_index(c) for c in order)


@lru_cache(maxsize=None)
def row_symmetrizer(lam: Partition) -> HeckeElement:
    """F_lambda: [lambda_i]! f on each row block."""
    out = HeckeElement.one(0)
    for r in lam.parts:
        out = tensor(out, symmetrizer_unnormalized(r, "f"))
    return out


@lru_cache(maxsize=None)
def column_antisymmetrizer(lam: Partition) -> HeckeElement:
    """G_lambda: [lambda^v_j]! g on each column, carried into row-major order."""
    block = HeckeElement.one(0)
    for c in lam.transpose().parts:
        block = tensor(block, symmetrizer_unnormalized(c, "g"))
    return conjugate(block, column_major_permutation(lam))


@lru_cache(maxsize=None)
def young_quasi_idempotent(lam: Partition) -> HeckeElement:
    """y~_lambda = F_lambda G_lambda, with y~^2 = [hl(lambda)] y~."""
    lam = as_partition(lam)
    if lam.size == 0:
        return HeckeElement.one(0)
    return mul(row_symmetrizer(lam), column_antisymmetrizer(lam))


@lru_cache(maxsize=None)
def young_idempotent(lam: Partition) -> HeckeElement:
    lam = as_partition(lam)
    return young_quasi_idempotent(lam).scale(hook_product(lam).inverse())


def routing_permutation(mu: Partition, cell) -> Perm:
    """Top points: the cells of mu minus ``cell`` in row-major order, then ``cell``; bottom: row-major cells of mu."""
    p = mu.cell_index(cell)
    n = mu.size
    return tuple(list(range(1, p)) + list(range(p + 1, n + 1)) + [p])


def routing_braid(mu: Partition, cell) -> tuple[HeckeElement, HeckeElement]:
    """(rho, rho^-1) for adding ``cell`` to mu minus that cell."""
    word = positive_permutation_braid(routing_permutation(mu, cell))
    n = mu.size
    return word_to_basis(n, word), word_to_basis(n, braid_inverse_word(word))


def absorbed_idempotent(mu: Partition, cell) -> HeckeElement:
    """rho^-1 (y_{mu'} (x) 1) rho, the smaller idempotent placed inside mu's points."""
    mu = as_partition(mu)
    small = mu.remove(cell)
    rho, rho_inv = routing_braid(mu, cell)
    return mul(mul(rho_inv, young_idempotent(small).tensor_identity(1)), rho)


@lru_cache(maxsize=None)
def tableau_morphisms(t: StandardTableau) -> tuple[HeckeElement, HeckeElement]:
    """(alpha_t, beta_t), built by adding the cells in label order."""
    lam = t.shape
    y = young_idempotent(lam)
    if t.size == 1:
        return y, y
    small = t.truncate()
    a_small, b_small = tableau_morphisms(small)
    rho, rho_inv = routing_braid(lam, t.cell_of(t.size))
    alpha = mul(mul(a_small.tensor_identity(1), rho), y)
    beta = mul(mul(y, rho_inv), b_small.tensor_identity(1))
    return alpha, beta


# -- text -------------------------------------------------------------------


def format_coefficient(c: Scalar) -> str:
    """Scalar text; a multi-term Laurent coefficient is parenthesized after pulling out the monomial factor that every term shares with one sign of exponent."""
    from .scalars import LaurentPoly, format_laurent

    if not c.is_laurent():
        return str(c)
    p = c.as_laurent()
    if len(p.terms) == 1:
        return format_laurent(p)
    m = []
    for a in range(3):
        exps = [e[a] for e in p.terms]
        if all(x > 0 for x in exps):
            m.append(min(exps))
        elif all(x < 0 for x in exps):
            m.append(max(exps))
        else:
            m.append(0)
    rest = LaurentPoly({(e[0] - m[0], e[1] - m[1], e[2] - m[2]): a for e, a in p.terms.items()})
    if m == [0, 0, 0]:
        return f"({format_laurent(rest)})"
    return f"{format_laurent(LaurentPoly.monomial(*m))}*({format_laurent(rest)})"


def format_hecke(h: HeckeElement) -> str:
    """Terms ``coeff * w[perm]``, permutations in decreasing lexicographic order."""
    if h.is_zero():
        return "0"
    parts = []
    for p in sorted(h.terms, reverse=True):
        body = format_coefficient(h.terms[p]) + " * w[" + " ".join(map(str, p)) + "]"
        if parts and body.startswith("-"):
            parts.append(" - " + body[1:])
        else:
            parts.append((" + " if parts else "") + body)
    return "".join(parts)


def parse_braid_word(text: str) -> tuple[int, ...]:
    out = []
    for tok in text.split():
        try:
            a = int(tok)
        except ValueError:
            raise ValueError(f"bad braid letter {tok!r}") from None
        if a == 0:
            raise ValueError("braid letters are nonzero integers")
        out.append(a)
    return tuple(out)


def parse_hecke(text: str) -> HeckeElement:
    """Inverse of format_hecke: a sum of ``coeff * w[...]`` terms."""
    import re

    from .scalars import parse_scalar

    pieces = list(re.finditer(r"w\[([\d\s]*)\]", text))
    if not pieces:
        if text.strip() == "0":
            raise ValueError("cannot infer the strand count of 0")
        raise ValueError("no w[...] terms found")
    terms: dict[Perm, Scalar] = {}
    n = None
    pos = 0
    for m in pieces:
        chunk = text[pos:m.start()].strip()
        pos = m.end()
        sign = ONE
        if chunk.startswith("+"):
            chunk = chunk[1:].strip()
        elif chunk.startswith("-"):
            sign, chunk = -ONE, chunk[1:].strip()
        if chunk.endswith("*"):
            chunk = chunk[:-1].strip()
        coeff = sign * (parse_scalar(chunk) if chunk else ONE)
        p = check_perm([int(a) for a in m.group(1).split()])
        if n is None:
            n = len(p)
        elif n != len(p):
            raise ValueError("mixed strand counts")
        terms[p] = terms[p] + coeff if p in terms else coeff
    if text[pos:].strip():
        raise ValueError(f"trailing text {text[pos:].strip()!r}")
    return HeckeElement(n, terms)


__all__ = [
    "HeckeElement", "Perm", "identity", "perm_inverse", "compose", "length", "positive_permutation_braid",
    "word_to_basis", "mul", "tensor", "embed", "conjugate", "symmetrizer", "symmetrizer_unnormalized",
    "young_idempotent", "young_quasi_idempotent", "tableau_morphisms", "routing_braid", "absorbed_idempotent",
    "format_hecke", "parse_hecke", "parse_braid_word", "all_perms", "word_permutation", "ZERO",
]
