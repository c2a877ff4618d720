"""Exact tools for Lüroth sets, their Cantor constructions and sumsets."""
from .exact import (
    DigitSet,
    LurothDomainError,
    LurothWord,
    as_fraction,
    chevron_left,
    chevron_right,
    digit_of,
    eval_word,
    expand,
    fraction_str,
    luroth_map,
    periodic_value,
)

__version__ = "0.1.0"
