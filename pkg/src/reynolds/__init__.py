"""Free Reynolds algebras on bracketed words, with exact rational arithmetic."""

from .words import (
    ONE,
    Bracket,
    Letter,
    NotReynoldsError,
    ParseError,
    Word,
    WordClass,
    bracket,
    bracket_tower_factorization,
    classify,
    depth,
    is_reynolds_word,
    parse,
    size,
    standard_decomposition,
)
from .algebra import (
    LinComb,
    add,
    apply_p,
    multiply,
    multivariant_residual,
    parse_lincomb,
    reynolds_residual,
    scale,
    star_product_free,
    truncated_series_residual,
)

__version__ = "0.1.0"
