"""phi-shuffle products on noncommutative polynomials over structured alphabets.

Thin bindings over the C++ core: words, polynomials and rationals travel
as text in the canonical grammar (see the project README).
"""

from ._core import (
    ParseError,
    SemanticError,
    InternalError,
    product,
    product_terms,
    lyndon_words,
    is_lyndon,
    decompose,
    lawcheck,
    coproduct_conc,
    coproduct_phi,
    zetacheck,
    truncated_m,
    partial_fraction,
)

__all__ = [
    "ParseError",
    "SemanticError",
    "InternalError",
    "product",
    "product_terms",
    "lyndon_words",
    "is_lyndon",
    "decompose",
    "lawcheck",
    "coproduct_conc",
    "coproduct_phi",
    "zetacheck",
    "truncated_m",
    "partial_fraction",
]
