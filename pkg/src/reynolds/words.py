"""Bracketed words of the free operated monoid and their structure.

A bracketed word is a finite sequence of atoms, each atom a letter or a
bracket wrapped around another bracketed word.  The empty sequence is the
identity word.  Text form uses ASCII brackets::

    >>> w = parse("[[x]] [y] [z]")
    >>> str(w)
    '[[x]] [y] [z]'
    >>> classify(w).name
    'RDoublePrime'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

__all__ = [
    "SIGMA",
    "Letter",
    "Bracket",
    "Word",
    "Atom",
    "ONE",
    "WordClass",
    "ParseError",
    "NotReynoldsError",
    "parse",
    "render",
    "bracket",
    "size",
    "depth",
    "is_reynolds_word",
    "classify",
    "bracket_tower_factorization",
    "reassemble",
    "standard_decomposition",
    "letters_of",
]

SIGMA = "sigma"
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class ParseError(ValueError):
    """Malformed text input; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class NotReynoldsError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Letter:
    name: str

    def __post_init__(self):
        if not _IDENT.match(self.name):
            raise ValueError(f"invalid letter name {self.name!r}")
        if self.name == SIGMA:
            raise ValueError(f"{SIGMA!r} is reserved and cannot be a letter")

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Bracket:
    inner: Word

    def __str__(self):
        return f"[{self.inner.text()}]"


Atom = Union[Letter, Bracket]


class Word:
    """Immutable atom sequence; this sequence is the standard decomposition.

    Hash, size and the Reynolds flag are computed once, since words are
    used heavily as dictionary keys.
    """

    __slots__ = ("atoms", "_hash", "_size", "_text", "_depth", "_reynolds")

    def __init__(self, atoms: Sequence[Atom] = ()):
        atoms = tuple(atoms)
        self.atoms = atoms
        self._hash = hash(atoms)
        self._size = sum(1 if type(a) is Letter else a.inner._size + 1 for a in atoms)
        self._text = None
        self._depth = None
        self._reynolds = None

    @classmethod
    def of_letters(cls, *names: str) -> Word:
        return cls(Letter(n) for n in names)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self._hash == other._hash and self.atoms == other.atoms

    def __len__(self):
        return len(self.atoms)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __bool__(self):
        return bool(self.atoms)

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if not other.atoms:
            return self
        if not self.atoms:
            return other
        return Word(self.atoms + other.atoms)

    def text(self) -> str:
        """Space-separated atoms; empty string for the identity."""
        if self._text is None:
            self._text = " ".join(map(str, self.atoms))
        return self._text

    def __str__(self):
        return self.text() or "1"

    def __repr__(self):
        return f"Word({str(self)!r})"

    def sort_key(self):
        return (self._size, str(self))


ONE = Word()


def bracket(w: Word) -> Word:
    """The one-atom word ``[w]``."""
    return Word((Bracket(w),))


def render(w: Word) -> str:
    return str(w)


def size(w: Word) -> int:
    """Letter occurrences plus bracket pairs, at every nesting level."""
    return w._size


def depth(w: Word) -> int:
    if w._depth is None:
        w._depth = max(
            (depth(a.inner) + 1 for a in w.atoms if type(a) is Bracket), default=0
        )
    return w._depth


def _all_brackets(w: Word) -> bool:
    return len(w.atoms) >= 2 and all(type(a) is Bracket for a in w.atoms)


def is_reynolds_word(w: Word) -> bool:
    """No bracket anywhere encloses a product of two or more brackets."""
    if w._reynolds is None:
        ok = True
        for a in w.atoms:
            if type(a) is Bracket and (_all_brackets(a.inner) or not is_reynolds_word(a.inner)):
                ok = False
                break
        w._reynolds = ok
    return w._reynolds


class WordClass(enum.Enum):
    RPrime = "R'"
    RDoublePrime = "R''"
    NotReynolds = "not Reynolds"


def classify(w: Word) -> WordClass:
    if not is_reynolds_word(w):
        return WordClass.NotReynolds
    if _all_brackets(w):
        return WordClass.RDoublePrime
    return WordClass.RPrime


def bracket_tower_factorization(w: Word) -> list[tuple[Word, int]]:
    """Write ``w`` as ``[r1]^(n1) ... [rm]^(nm)`` with no core a single bracket.

    Returns the ``(core, tower_height)`` pairs in order.
    """
    if classify(w) is not WordClass.RDoublePrime:
        raise NotReynoldsError(f"{w} is not a product of >= 2 brackets in a Reynolds word")
    return _towers(w)


def _towers(w: Word) -> list[tuple[Word, int]]:
    out = []
    for a in w.atoms:
        core, n = a.inner, 1
        while len(core.atoms) == 1 and type(core.atoms[0]) is Bracket:
            core = core.atoms[0].inner
            n += 1
        out.append((core, n))
    return out


def tower(core: Word, height: int) -> Word:
    """``core`` wrapped in ``height`` brackets (``core`` itself when 0)."""
    for _ in range(height):
        core = bracket(core)
    return core


def reassemble(factors: Sequence[tuple[Word, int]]) -> Word:
    atoms: list[Atom] = []
    for core, n in factors:
        atoms.extend(tower(core, n).atoms)
    return Word(atoms)


def standard_decomposition(w: Word) -> list[Atom]:
    if not w.atoms:
        raise ValueError("the identity word has no standard decomposition")
    return list(w.atoms)


def letters_of(w: Word) -> set[str]:
    names = set()
    for a in w.atoms:
        if type(a) is Letter:
            names.add(a.name)
        else:
            names |= letters_of(a.inner)
    return names


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<lb>\[)|(?P<rb>\])|(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op>[*+-]))"
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"illegal character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        self.i += 1
        return tok

    def word(self) -> Word:
        """Read atoms until a token that cannot start an atom."""
        atoms: list[Atom] = []
        while True:
            tok = self.peek()
            if tok.kind == "ident":
                if tok.text == SIGMA:
                    raise ParseError(f"{SIGMA!r} is reserved", tok.pos)
                atoms.append(Letter(tok.text))
            elif tok.kind == "num" and tok.text == "1":
                pass  # the identity contributes no atoms
            elif tok.kind == "lb":
                self.next()
                inner = self.word()
                close = self.peek()
                if close.kind != "rb":
                    raise ParseError("expected ']'", close.pos)
                atoms.append(Bracket(inner))
            else:
                return Word(atoms)
            self.next()


def parse(text: str) -> Word:
    """Parse a bracketed word; ``""`` and ``"1"`` both give the identity."""
    ts = TokenStream(text)
    w = ts.word()
    tok = ts.peek()
    if tok.kind != "end":
        what = "unbalanced ']'" if tok.kind == "rb" else f"unexpected {tok.text!r}"
        raise ParseError(what, tok.pos)
    return w
