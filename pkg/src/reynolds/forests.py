"""Planar decorated rooted forests and their correspondence with words.

Letters decorate leaves; every internal vertex, and possibly some leaves,
carry the reserved decoration ``sigma``.  A bracket ``[u]`` becomes a new
sigma root grafted over the forest of ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .words import SIGMA, Bracket, Letter, Word


@dataclass(frozen=True)
class DecoratedTree:
    decoration: str
    children: tuple[DecoratedTree, ...] = ()

    @property
    def is_sigma(self) -> bool:
        return self.decoration == SIGMA


@dataclass(frozen=True)
class DecoratedForest:
    trees: tuple[DecoratedTree, ...] = field(default=())

    def __add__(self, other: DecoratedForest) -> DecoratedForest:
        return DecoratedForest(self.trees + other.trees)

    def __len__(self):
        return len(self.trees)


def leaf(name: str) -> DecoratedTree:
    return DecoratedTree(name)


def graft(f: DecoratedForest) -> DecoratedTree:
    """New sigma root over ``f``; the empty forest gives a lone sigma vertex."""
    return DecoratedTree(SIGMA, f.trees)


def word_to_forest(w: Word) -> DecoratedForest:
    trees = []
    for a in w.atoms:
        if isinstance(a, Letter):
            trees.append(leaf(a.name))
        else:
            trees.append(graft(word_to_forest(a.inner)))
    return DecoratedForest(tuple(trees))


def _tree_to_atom(t: DecoratedTree):
    if t.is_sigma:
        return Bracket(Word(_tree_to_atom(c) for c in t.children))
    if t.children:
        raise ValueError(f"internal vertex decorated by letter {t.decoration!r}")
    return Letter(t.decoration)


def forest_to_word(f: DecoratedForest) -> Word:
    return Word(_tree_to_atom(t) for t in f.trees)


def _tree_has_super_crown(t: DecoratedTree) -> bool:
    if t.is_sigma and len(t.children) >= 2 and all(c.is_sigma for c in t.children):
        return True
    return any(_tree_has_super_crown(c) for c in t.children)


def has_super_crown(f: DecoratedForest) -> bool:
    """Some sigma vertex has two or more children, all of them sigma vertices."""
    return any(_tree_has_super_crown(t) for t in f.trees)


def to_dot(f: DecoratedForest, name: str = "forest") -> str:
    """Graphviz digraph; nodes numbered in preorder, edges labeled by child position."""
    lines = [f"digraph {name} {{"]
    edges = []
    counter = 0

    def visit(t: DecoratedTree) -> int:
        nonlocal counter
        me = counter
        counter += 1
        lines.append(f'  n{me} [label="{t.decoration}"];')
        for pos, c in enumerate(t.children, start=1):
            child = visit(c)
            edges.append(f'  n{me} -> n{child} [label="{pos}"];')
        return me

    for t in f.trees:
        visit(t)
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
