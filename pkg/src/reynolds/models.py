"""Concrete Reynolds algebras and the universal map out of the free one.

A model is a carrier whose elements support ``+``, ``-``, ``*`` and
multiplication by rationals, together with a linear operator and the
weight it is claimed to satisfy.  Factories check the claim on a grid of
monomials before handing the model out.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable, Mapping, Sequence

from .algebra import LinComb, Rational, UNIT, ZERO, apply_p, as_lincomb
from .words import Bracket, Letter, NotReynoldsError, Word, is_reynolds_word


class Polynomial:
    """Univariate polynomial over the rationals, stored as ``{exponent: coeff}``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Any] | None = None):
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise ValueError("negative exponent")
            c = Rational(c)
            if c:
                self.coeffs[e] = c

    @classmethod
    def _raw(cls, coeffs: dict) -> Polynomial:
        # caller guarantees nonzero Rational coefficients
        out = cls.__new__(cls)
        out.coeffs = coeffs
        return out

    @classmethod
    def monomial(cls, n: int, c=1) -> Polynomial:
        return cls({n: c})

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({0: c})

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not Polynomial:
            if isinstance(other, (int, Fraction, Rational)):
                return Polynomial({e: c * other for e, c in self.coeffs.items()})
            return NotImplemented
        out: dict[int, Any] = {}
        get = out.get
        b = other.coeffs.items()
        for e1, c1 in self.coeffs.items():
            for e2, c2 in b:
                e = e1 + e2
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def derivative(self) -> Polynomial:
        return Polynomial({e - 1: e * c for e, c in self.coeffs.items() if e})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self.coeffs)):
            c = self.coeffs[e]
            body = str(abs(c)) + ("" if e == 0 else "*x" if e == 1 else f"*x^{e}")
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


X = Polynomial.monomial(1)

_POLY_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?"
    r"(?:(?P<x>x)\s*(?:\^\s*(?P<exp>\d+))?)?\s*"
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse sums like ``1/2*x^2 - x + 3`` (variable ``x`` only)."""
    pos, out, first = 0, Polynomial(), True
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    while pos < len(text):
        m = _POLY_TERM.match(text, pos)
        if not m or m.end() == pos or not (m["coeff"] or m["x"]):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if not first and not m["sign"]:
            raise ValueError(f"missing '+' or '-' in {text!r} at position {pos}")
        if m["star"] and not m["x"]:
            raise ValueError(f"dangling '*' in {text!r}")
        first = False
        c = Rational(m["coeff"] or 1) * (-1 if m["sign"] == "-" else 1)
        e = 0 if not m["x"] else int(m["exp"] or 1)
        out = out + Polynomial.monomial(e, c)
        pos = m.end()
    return out


# -- models -----------------------------------------------------------------


@dataclass(frozen=True)
class GridConfig:
    """Sizes of the finite test grids used to verify models and identities."""

    max_degree: int = 10
    max_word_size: int = 5


@dataclass(frozen=True)
class ReynoldsModel:
    """An operated algebra claimed to satisfy the Reynolds identity of ``weight``."""

    name: str
    operator: Callable[[Any], Any]
    weight: Any = -1
    one: Any = field(default_factory=lambda: Polynomial.constant(1))
    zero: Any = field(default_factory=Polynomial)

    def __call__(self, u):
        return self.operator(u)

    def verify(self, samples: Iterable) -> None:
        samples = list(samples)
        for u in samples:
            for v in samples:
                if weighted_residual(self, self.weight, u, v):
                    raise ValueError(
                        f"{self.name}: weight {self.weight} identity fails at ({u}, {v})"
                    )


def monomials(max_degree: int) -> list[Polynomial]:
    return [Polynomial.monomial(n) for n in range(max_degree + 1)]


def _averaging(f: Polynomial) -> Polynomial:
    return Polynomial({n: c / (n + 1) for n, c in f.coeffs.items()})


def _differential(f: Polynomial) -> Polynomial:
    out, term, sign = Polynomial(), f, 1
    while term:
        out = out + term * sign
        term, sign = term.derivative(), -sign
    return out


def averaging_model(config: GridConfig = GridConfig()) -> ReynoldsModel:
    """x^n -> x^n / (n + 1) on k[x]; weight -1, not idempotent."""
    model = ReynoldsModel("averaging", _averaging, Rational(-1))
    model.verify(monomials(config.max_degree))
    return model


def differential_model(config: GridConfig = GridConfig()) -> ReynoldsModel:
    """f -> f - f' + f'' - ... on k[x]; the sum stops at the degree of f."""
    model = ReynoldsModel("differential", _differential, Rational(-1))
    model.verify(monomials(config.max_degree))
    return model


def free_model() -> ReynoldsModel:
    """The free Reynolds algebra itself, as a model."""
    return ReynoldsModel("free", apply_p, Rational(-1), one=UNIT, zero=ZERO)


def scaled_model(model: ReynoldsModel, c) -> ReynoldsModel:
    """``c * Q`` has weight ``weight / c``: lambda Q has weight 1, -Q weight -lambda."""
    c = Rational(c)
    if not c:
        raise ValueError("scale factor must be nonzero; use zero_operator_model")
    op = model.operator
    return ReynoldsModel(
        f"{c}*{model.name}", lambda u: op(u) * c, model.weight / c, model.one, model.zero
    )


def zero_operator_model(model: ReynoldsModel, weight=0) -> ReynoldsModel:
    """The zero operator on the same carrier satisfies every weighted identity."""
    zero = model.zero
    return ReynoldsModel(f"0*{model.name}", lambda u: zero, Rational(weight), model.one, zero)


def model_at_weight(model: ReynoldsModel, weight) -> ReynoldsModel:
    """A rescaling of the model's operator that has the requested weight."""
    weight = Rational(weight)
    if weight == model.weight:
        return model
    if not weight:
        return zero_operator_model(model, 0)
    if not model.weight:
        raise ValueError("a weight 0 operator cannot be rescaled to nonzero weight")
    return scaled_model(model, model.weight / weight)


def weighted_residual(model: ReynoldsModel, weight, u, v):
    """Q(u)Q(v) - Q(uQ(v)) - Q(Q(u)v) - weight * Q(Q(u)Q(v))."""
    Q = model.operator
    qu, qv = Q(u), Q(v)
    qq = qu * qv
    return qq - Q(u * qv) - Q(qu * v) - Q(qq) * Rational(weight)


@dataclass
class CheckReport:
    name: str
    results: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.results)

    def failures(self) -> list[str]:
        return [label for label, ok in self.results if not ok]

    def record(self, label: str, residual) -> None:
        self.results.append((label, not residual))

    def __str__(self):
        bad = self.failures()
        status = "PASS" if not bad else f"FAIL ({len(bad)} of {len(self.results)})"
        return f"{self.name}: {status}"


def weight_transform_check(model: ReynoldsModel, weight, samples: Sequence) -> CheckReport:
    """weight*Q must have weight 1 and -Q weight -weight, on every sample pair."""
    weight = Rational(weight)
    Q = model.operator
    scaled = ReynoldsModel("lambda*Q", lambda u: Q(u) * weight, 1, model.one, model.zero)
    negated = ReynoldsModel("-Q", lambda u: -Q(u), -weight, model.one, model.zero)
    report = CheckReport(f"weight transforms of {model.name} at {weight}")
    for i, u in enumerate(samples):
        for j, v in enumerate(samples):
            report.record(f"lambda*Q weight 1 ({i},{j})", weighted_residual(scaled, 1, u, v))
            report.record(f"-Q weight -lambda ({i},{j})", weighted_residual(negated, -weight, u, v))
    return report


def star_product(model: ReynoldsModel, weight, u, v):
    """u Q(v) + Q(u) v + weight Q(u) Q(v)."""
    Q = model.operator
    qu, qv = Q(u), Q(v)
    return u * qv + qu * v + (qu * qv) * Rational(weight)


def star_checks(model: ReynoldsModel, weight, triples: Sequence[tuple]) -> CheckReport:
    """Check the replicated product on each triple (u, v, w).

    (a) Q(u)Q(v) = Q(u*v); (b) * is associative; (c) Q satisfies the
    weighted identity with * as product; (d) Q(u*v) = Q(u)Q(v), i.e. Q is
    a homomorphism from (E, *) to (E, .).
    """
    Q = model.operator
    lam = Rational(weight)
    star = lambda a, b: star_product(model, lam, a, b)  # noqa: E731
    report = CheckReport(f"star checks for {model.name} at weight {lam}")
    for i, (u, v, w) in enumerate(triples):
        qu, qv = Q(u), Q(v)
        report.record(f"(a) #{i}", qu * qv - Q(star(u, v)))
        report.record(f"(b) #{i}", star(star(u, v), w) - star(u, star(v, w)))
        report.record(
            f"(c) #{i}",
            star(qu, qv) - Q(star(u, qv)) - Q(star(qu, v)) - Q(star(qu, qv)) * lam,
        )
        report.record(f"(d) #{i}", Q(star(u, v)) - qu * qv)
    return report


def binomial_identity_check(p: int, q: int, r: int) -> bool:
    """C(p+r, r-1) + sum_{j=r}^{q} C(p+j, j) == C(p+q+1, p+1)."""
    if p < 1 or q < 1 or not 1 <= r <= q:
        raise ValueError(f"need p >= 1 and 1 <= r <= q, got p={p}, q={q}, r={r}")
    lhs = comb(p + r, r - 1) + sum(comb(p + j, j) for j in range(r, q + 1))
    return lhs == comb(p + q + 1, p + 1)


def binomial_identity_r1(p: int, q: int) -> bool:
    """The r = 1 case: sum_{j=0}^{q} C(p+j, j) == C(p+q+1, p+1)."""
    if p < 1 or q < 1:
        raise ValueError(f"need p, q >= 1, got p={p}, q={q}")
    return sum(comb(p + j, j) for j in range(q + 1)) == comb(p + q + 1, p + 1)


# -- universal map ----------------------------------------------------------


class UniversalMap:
    """The homomorphism out of the free algebra fixed by ``assignment``.

    Letters go to their images, concatenation to the model product and a
    bracket ``[u]`` to ``Q`` of the image of ``u``.  Word images are cached,
    so one instance can be applied to many inputs cheaply.
    """

    def __init__(self, model: ReynoldsModel, assignment: Mapping[str, Any]):
        self.model = model
        self.assignment = dict(assignment)
        self._brackets: dict[Bracket, Any] = {}

    def _atom(self, atom):
        if type(atom) is Letter:
            try:
                return self.assignment[atom.name]
            except KeyError:
                raise KeyError(f"no image assigned to letter {atom.name!r}") from None
        val = self._brackets.get(atom)
        if val is None:
            val = self._brackets[atom] = self.model.operator(self.word_image(atom.inner))
        return val

    def word_image(self, w: Word):
        out = self.model.one
        for atom in w.atoms:
            out = out * self._atom(atom)
        return out

    def __call__(self, a):
        a = as_lincomb(a)
        total = self.model.zero
        for w, c in a.terms.items():
            if not is_reynolds_word(w):
                raise NotReynoldsError(f"{w} is not a Reynolds word")
            total = total + self.word_image(w) * c
        return total


def universal_map(model: ReynoldsModel, assignment: Mapping[str, Any], a) -> Any:
    return UniversalMap(model, assignment)(a)


def parse_assignment(text: str) -> dict[str, Polynomial]:
    """``"x=x,y=x^2"`` -> ``{"x": x, "y": x^2}``."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected name=polynomial, got {item!r}")
        Letter(name.strip())
        out[name.strip()] = parse_polynomial(value)
    return out
