"""A small text language for finite categories, functors and transformations."""
from .elaborate import Environment, LawFailure, elaborate, elaborate_table, eval_word, load
from .parser import parse, tokenize, word_type
from .printer import category_to_presentation, print_entity
from .saturate import Saturation, SaturationExceeded, saturate, saturate_full
from .syntax import (
    ArrowDecl,
    DslError,
    FunctorDecl,
    LexError,
    NatDecl,
    ParseError,
    Presentation,
    SaturationConfig,
    TypingError,
    UnknownNameError,
)
