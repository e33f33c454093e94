"""The free Reynolds algebra: rational combinations of Reynolds words.

Products are concatenation.  The operator ``P`` brackets words in R' and
unfolds products of bracket towers by

    P([r1]^(n1) ... [rm]^(nm)) = (sum_i P(r*_i) - r) / (m - 1)

where ``r*_i`` lowers the i-th tower by one level.  The residual
functions return the difference of the two sides of an identity so a
failure shows the offending terms.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

from .words import (
    ONE,
    Bracket,
    NotReynoldsError,
    ParseError,
    TokenStream,
    Word,
    WordClass,
    _towers,
    bracket,
    classify,
    is_reynolds_word,
    parse,
    reassemble,
)

# exact rationals with unbounded integer parts; str() gives "p/q" or "p"
Rational = mpq
Scalar = Union[int, Fraction, Rational]


class LinComb:
    """Finite formal sum of words with nonzero rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | Iterable[tuple[Word, Scalar]] = ()):
        acc: dict[Word, Rational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            acc[w] = acc.get(w, 0) + Rational(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Word, Rational]) -> LinComb:
        # caller guarantees nonzero Rational values
        out = cls.__new__(cls)
        out._terms = terms
        return out

    @classmethod
    def of(cls, w: Word | str, c: Scalar = 1) -> LinComb:
        if isinstance(w, str):
            w = parse(w)
        return cls({w: c})

    @property
    def terms(self) -> Mapping[Word, Rational]:
        return self._terms

    def coeff(self, w: Word) -> Rational:
        return self._terms.get(w, Rational(0))

    def support(self) -> list[Word]:
        return sorted(self._terms, key=Word.sort_key)

    def items(self) -> list[tuple[Word, Rational]]:
        return [(w, self._terms[w]) for w in self.support()]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Word):
            return self._terms == {other: 1}
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, Word):
            other = LinComb({other: 1})
        if not isinstance(other, LinComb):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LinComb._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, Word):
            other = LinComb({other: 1})
        if not isinstance(other, LinComb):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return scale(other, self)
        if isinstance(other, Word):
            other = LinComb({other: 1})
        if not isinstance(other, LinComb):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return scale(other, self)
        if isinstance(other, Word):
            return multiply(LinComb({other: 1}), self)
        return NotImplemented

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LinComb({render(self)!r})"


ZERO = LinComb()
UNIT = LinComb({ONE: 1})


def as_lincomb(a: LinComb | Word | str) -> LinComb:
    if isinstance(a, LinComb):
        return a
    if isinstance(a, Word):
        return LinComb({a: 1})
    return parse_lincomb(a)


def add(a: LinComb, b: LinComb) -> LinComb:
    acc = dict(a._terms)
    for w, c in b._terms.items():
        s = acc.get(w, 0) + c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)
    return LinComb._raw(acc)


def scale(c: Scalar, a: LinComb) -> LinComb:
    c = Rational(c)
    if not c:
        return ZERO
    return LinComb._raw({w: c * v for w, v in a._terms.items()})


def multiply(a: LinComb, b: LinComb) -> LinComb:
    acc: dict[Word, Rational] = {}
    for u, cu in a._terms.items():
        for v, cv in b._terms.items():
            w = u * v
            acc[w] = acc.get(w, 0) + cu * cv
    return LinComb._raw({w: c for w, c in acc.items() if c})


def product(factors: Iterable[LinComb]) -> LinComb:
    out = UNIT
    for f in factors:
        out = multiply(out, f)
    return out


# -- the operator P ---------------------------------------------------------


@lru_cache(maxsize=None)
def _p_word(r: Word) -> LinComb:
    # r is a Reynolds word; lru_cache is thread-safe for concurrent readers
    atoms = r.atoms
    if len(atoms) < 2 or any(type(a) is not Bracket for a in atoms):
        return LinComb._raw({bracket(r): Rational(1)})
    factors = _towers(r)
    m = len(factors)
    acc: dict[Word, Rational] = {r: Rational(-1)}
    for i, (core, n) in enumerate(factors):
        lowered = reassemble(factors[:i] + [(core, n - 1)] + factors[i + 1 :])
        for w, c in _p_word(lowered)._terms.items():
            acc[w] = acc.get(w, 0) + c
    k = Rational(1, m - 1)
    return LinComb._raw({w: c * k for w, c in acc.items() if c})


def apply_p(a: LinComb | Word) -> LinComb:
    """The Reynolds operator of the free algebra, extended linearly."""
    a = as_lincomb(a)
    acc: dict[Word, Rational] = {}
    for w, c in a._terms.items():
        if not is_reynolds_word(w):
            raise NotReynoldsError(f"{w} is not a Reynolds word")
        for u, d in _p_word(w)._terms.items():
            acc[u] = acc.get(u, 0) + c * d
    return LinComb._raw({w: c for w, c in acc.items() if c})


def apply_p_power(a: LinComb, n: int) -> LinComb:
    for _ in range(n):
        a = apply_p(a)
    return a


def clear_cache() -> None:
    _p_word.cache_clear()


# -- identity residuals -----------------------------------------------------


def reynolds_residual(r, s) -> LinComb:
    """P(r)P(s) + P(P(r)P(s)) - P(rP(s)) - P(P(r)s)."""
    r, s = as_lincomb(r), as_lincomb(s)
    pr, ps = apply_p(r), apply_p(s)
    prps = pr * ps
    return prps + apply_p(prps) - apply_p(r * ps) - apply_p(pr * s)


def multivariant_residual(us: Sequence) -> LinComb:
    """(m-1) P(prod P(u_i)) - sum_i P(P(u_1)..u_i..P(u_m)) + prod P(u_i)."""
    us = [as_lincomb(u) for u in us]
    m = len(us)
    if m < 2:
        raise ValueError(f"need at least two arguments, got {m}")
    pus = [apply_p(u) for u in us]
    full = product(pus)
    lhs = scale(m - 1, apply_p(full))
    rhs = ZERO
    for i in range(m):
        rhs = rhs + apply_p(product(pus[:i] + [us[i]] + pus[i + 1 :]))
    return lhs - (rhs - full)


def ast_product(u, v) -> LinComb:
    """u*v := uP(v) + P(u)v."""
    u, v = as_lincomb(u), as_lincomb(v)
    return u * apply_p(v) + apply_p(u) * v


def truncated_series_residual(u, v, k: int) -> LinComb:
    """P(u)P(v) - sum_{n<=k} (-1)^n P^(n+1)(u*v) - (-1)^(k+1) P^(k+1)(P(u)P(v))."""
    if k < 0:
        raise ValueError("k must be >= 0")
    u, v = as_lincomb(u), as_lincomb(v)
    prps = apply_p(u) * apply_p(v)
    out = prps
    term = ast_product(u, v)
    for n in range(k + 1):
        term = apply_p(term)
        out = out - scale((-1) ** n, term)
    tail = apply_p_power(prps, k + 1)
    return out - scale((-1) ** (k + 1), tail)


def star_product_free(u, v) -> LinComb:
    """u . P(v) + P(u) . v - P(u) . P(v) (the weight -1 replicated product)."""
    u, v = as_lincomb(u), as_lincomb(v)
    pu, pv = apply_p(u), apply_p(v)
    return u * pv + pu * v - pu * pv


def lowered_words(r: Word) -> list[Word]:
    """The words r*_i: each bracket tower of ``r`` lowered by one level."""
    factors = _towers(r)
    return [
        reassemble(factors[:i] + [(core, n - 1)] + factors[i + 1 :])
        for i, (core, n) in enumerate(factors)
    ]


def tower_expansion_residuals(r: Word, s: Word) -> tuple[LinComb | None, LinComb | None]:
    """Residuals of the two bracket-tower expansion identities for P(rP(s)), P(P(r)s).

    Entry ``i`` is None when the corresponding word is not a product of
    bracket towers, since the identity then says nothing.
    """
    rs = LinComb({r * s: 1})
    left = right = None
    if classify(r) is WordClass.RDoublePrime:
        ps = apply_p(s)
        lw = lowered_words(r)
        rhs = ZERO
        for ri in lw:
            rhs = rhs + apply_p(LinComb({ri: 1}) * ps)
        rhs = rhs - LinComb({r: 1}) * ps + apply_p(rs)
        left = scale(len(lw), apply_p(LinComb({r: 1}) * ps)) - rhs
    if classify(s) is WordClass.RDoublePrime:
        pr = apply_p(r)
        lw = lowered_words(s)
        rhs = ZERO
        for sj in lw:
            rhs = rhs + apply_p(pr * LinComb({sj: 1}))
        rhs = rhs - pr * LinComb({s: 1}) + apply_p(rs)
        right = scale(len(lw), apply_p(pr * LinComb({s: 1}))) - rhs
    return left, right


# -- text and JSON ----------------------------------------------------------


def render(a: LinComb) -> str:
    """``c1 * w1 + c2 * w2 - ...`` in (size, text) order; ``0`` when empty."""
    if not a._terms:
        return "0"
    parts = []
    for i, (w, c) in enumerate(a.items()):
        mag = str(abs(c))
        if i == 0:
            parts.append(f"{'-' if c < 0 else ''}{mag} * {w}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {mag} * {w}")
    return " ".join(parts)


def to_json(a: LinComb) -> str:
    return json.dumps({"terms": [{"coeff": str(c), "word": str(w)} for w, c in a.items()]})


def from_json(text: str) -> LinComb:
    data = json.loads(text)
    return LinComb((parse(t["word"]), Rational(t["coeff"])) for t in data["terms"])


def parse_lincomb(text: str) -> LinComb:
    """Parse ``[sign] term (sign term)*`` where term is ``c * word``, ``word`` or ``c``."""
    ts = TokenStream(text)
    acc: list[tuple[Word, Rational]] = []
    if ts.peek().kind == "end":
        raise ParseError("empty expression", 0)
    first = True
    while True:
        sign = 1
        tok = ts.peek()
        if tok.kind == "op" and tok.text in "+-":
            if first and tok.text == "+":
                raise ParseError("unexpected '+'", tok.pos)
            sign = -1 if tok.text == "-" else 1
            ts.next()
        elif not first:
            raise ParseError(f"expected '+' or '-', got {tok.text or 'end of input'!r}", tok.pos)
        first = False
        start = ts.peek()
        coeff = Rational(1)
        if start.kind == "num" and ts.peek(1).text == "*":
            coeff = _fraction(start)
            ts.next()
            ts.next()
            w = ts.word()
        elif start.kind == "num" and start.text != "1":
            coeff = _fraction(start)
            ts.next()
            w = ONE
        else:
            i0 = ts.i
            w = ts.word()
            if ts.i == i0:
                raise ParseError(f"expected a term, got {start.text or 'end of input'!r}", start.pos)
        acc.append((w, sign * coeff))
        if ts.peek().kind == "end":
            return LinComb(acc)
        nxt = ts.peek()
        if nxt.kind == "rb":
            raise ParseError("unbalanced ']'", nxt.pos)
        if not (nxt.kind == "op" and nxt.text in "+-"):
            raise ParseError(f"unexpected {nxt.text!r}", nxt.pos)


def _fraction(tok) -> Rational:
    try:
        return Rational(tok.text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", tok.pos) from None
