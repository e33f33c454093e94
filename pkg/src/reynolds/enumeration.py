"""Brute-force generation of bracketed words by size, and an oracle for P.

Size counts letters plus bracket pairs, so every level is finite.  The
generator builds level ``n`` from atoms of size ``k`` (a letter when
``k == 1``, a bracket around a word of size ``k - 1``) followed by a word
of size ``n - k``.
"""

from __future__ import annotations

from typing import Iterable

from .algebra import LinComb, Rational
from .words import Bracket, Letter, NotReynoldsError, Word, is_reynolds_word


def _alphabet(alphabet: Iterable[str | Letter]) -> list[Letter]:
    letters = sorted({a if isinstance(a, Letter) else Letter(a) for a in alphabet}, key=str)
    if not letters:
        raise ValueError("alphabet must be nonempty")
    return letters


def words_by_size(alphabet, max_size: int) -> list[list[Word]]:
    """``levels[n]`` holds every word of size ``n``, sorted by text."""
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    letters = _alphabet(alphabet)
    levels: list[list[Word]] = [[Word()]]
    atoms_of: list[list] = [[]]
    for n in range(1, max_size + 1):
        atoms_of.append(
            (list(letters) if n == 1 else []) + [Bracket(w) for w in levels[n - 1]]
        )
        level = []
        for k in range(1, n + 1):
            for a in atoms_of[k]:
                for rest in levels[n - k]:
                    level.append(Word((a,) + rest.atoms))
        level.sort(key=str)
        levels.append(level)
    return levels


def enumerate_words(alphabet, max_size: int) -> list[Word]:
    return [w for level in words_by_size(alphabet, max_size) for w in level]


def enumerate_reynolds_words(alphabet, max_size: int) -> list[Word]:
    return [w for w in enumerate_words(alphabet, max_size) if is_reynolds_word(w)]


def reynolds_words_by_size(alphabet, max_size: int) -> list[list[Word]]:
    return [[w for w in level if is_reynolds_word(w)] for level in words_by_size(alphabet, max_size)]


def count_words(alphabet_size: int, max_size: int) -> list[int]:
    """Number of words of each size, by a counting recurrence (no generation).

    words(n) = sum_k atoms(k) * words(n - k), atoms(1) = |X| + 1,
    atoms(k) = words(k - 1) for k >= 2.
    """
    words = [1]
    for n in range(1, max_size + 1):
        atoms = lambda k: alphabet_size + 1 if k == 1 else words[k - 1]  # noqa: E731
        words.append(sum(atoms(k) * words[n - k] for k in range(1, n + 1)))
    return words


def reynolds_counts(alphabet, max_size: int) -> list[int]:
    return [len(level) for level in reynolds_words_by_size(alphabet, max_size)]


def oracle_p(r: Word) -> LinComb:
    """Unmemoized P: a product of m >= 2 brackets [s_1]...[s_m] satisfies

        (m - 1) P(r) = sum_i P([s_1] .. s_i .. [s_m]) - r

    with s_i spliced in place of its bracket; anything else is bracketed.
    Used only to cross-check ``algebra.apply_p``.
    """
    if not is_reynolds_word(r):
        raise NotReynoldsError(f"{r} is not a Reynolds word")
    return LinComb(_oracle(r.atoms))


def _oracle(atoms: tuple) -> dict:
    m = len(atoms)
    if m < 2 or not all(isinstance(a, Bracket) for a in atoms):
        return {Word((Bracket(Word(atoms)),)): Rational(1)}
    out: dict = {Word(atoms): Rational(-1, m - 1)}
    for i in range(m):
        spliced = atoms[:i] + atoms[i].inner.atoms + atoms[i + 1 :]
        for w, c in _oracle(spliced).items():
            out[w] = out.get(w, 0) + c / (m - 1)
    return out


def random_word(rng, alphabet, size: int) -> Word:
    """A random word of exactly ``size``; not uniform over the level."""
    letters = _alphabet(alphabet)
    atoms = []
    left = size
    while left > 0:
        k = rng.randint(1, left)
        if k == 1 and rng.random() < 0.75:
            atoms.append(rng.choice(letters))
        else:
            atoms.append(Bracket(random_word(rng, letters, k - 1)))
        left -= k
    return Word(atoms)


def random_reynolds_word(rng, alphabet, max_size: int) -> Word:
    """Rejection-sample ``random_word`` at a random size <= max_size."""
    while True:
        w = random_word(rng, alphabet, rng.randint(0, max_size))
        if is_reynolds_word(w):
            return w
