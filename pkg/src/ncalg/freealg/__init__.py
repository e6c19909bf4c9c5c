from .field import QQ, Field, FieldError, QuadElem, make_field, rational, roots_in_field
from .poly import NCPoly, format_word, word_degree
from .presentation import (ParseError, Presentation, load_presentation, parse_field, parse_presentation,
                           parse_scalar)

__all__ = [
    "QQ", "Field", "FieldError", "QuadElem", "make_field", "rational", "roots_in_field",
    "NCPoly", "format_word", "word_degree",
    "ParseError", "Presentation", "load_presentation", "parse_field", "parse_presentation", "parse_scalar",
]
