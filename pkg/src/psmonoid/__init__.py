"""Left and right patience sorting monoids."""

from .leftinsert import from_word_left, insert_left
from .monoid import MonoidSpec, equiv, growth, multiply
from .presentation import normal_form
from .subsequences import minimal_subsequences
from .tableau import Tableau, Variant, canonical_word, from_word_right, is_canonical_word
from .words import WordError, parse_word

__all__ = [
    "MonoidSpec",
    "Tableau",
    "Variant",
    "WordError",
    "canonical_word",
    "equiv",
    "from_word_left",
    "from_word_right",
    "growth",
    "insert_left",
    "is_canonical_word",
    "minimal_subsequences",
    "multiply",
    "normal_form",
    "parse_word",
]
