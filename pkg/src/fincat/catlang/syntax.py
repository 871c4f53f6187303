"""Tokens and syntax trees for the category description language."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

KEYWORDS = frozenset({
    "category", "functor", "nat", "diagram", "objects", "arrows", "id", "compose",
    "equiv", "generators", "relations", "obj", "arr", "at", "table", "presented",
})
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def is_name(s: str) -> bool:
    return s == "*" or (NAME_RE.fullmatch(s) is not None and s not in KEYWORDS)


class DslError(Exception):
    """Input error with a source position and, for parse errors, the expected tokens."""

    kind = "input"

    def __init__(self, message: str, line: int = 0, col: int = 0, expected: tuple[str, ...] = ()):
        self.message, self.line, self.col, self.expected = message, line, col, tuple(expected)
        where = f"line {line}, column {col}: " if line else ""
        more = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"{self.kind} error: {where}{message}{more}")


class LexError(DslError):
    kind = "lexical"


class ParseError(DslError):
    kind = "syntax"


class UnknownNameError(DslError):
    kind = "reference"


class TypingError(DslError):
    kind = "typing"


@dataclass(frozen=True)
class Token:
    kind: str     # NAME, keyword text, symbol text, or EOF
    text: str
    line: int
    col: int


@dataclass(frozen=True)
class Pos:
    line: int = 0
    col: int = 0


def _pos():
    return field(default=Pos(), compare=False, repr=False)


Word = tuple  # names as written, leftmost applied last: ("g", "f") is g . f


@dataclass(frozen=True)
class ArrowDecl:
    name: str
    src: str
    dst: str
    pos: Pos = _pos()


@dataclass(frozen=True)
class Presentation:
    name: str
    mode: str                                   # "table" or "presented"
    objects: tuple[str, ...]
    arrows: tuple[ArrowDecl, ...]               # arrows (table) or generators (presented)
    identities: tuple[tuple[str, str], ...] = ()       # (object, arrow)
    compose: tuple[tuple[str, str, str], ...] = ()     # (g, f, h) for g . f = h
    equivs: tuple[tuple[str, str], ...] = ()
    relations: tuple[tuple[Word, Word], ...] = ()
    pos: Pos = _pos()


@dataclass(frozen=True)
class FunctorDecl:
    name: str
    source: str
    target: str
    obj_map: tuple[tuple[str, str], ...]
    arr_map: tuple[tuple[str, Word], ...]
    kind: str = "functor"                       # "functor" or "diagram"
    pos: Pos = _pos()


@dataclass(frozen=True)
class NatDecl:
    name: str
    F: str
    G: str
    components: tuple[tuple[str, Word], ...]
    pos: Pos = _pos()


Item = Union[Presentation, FunctorDecl, NatDecl]


@dataclass(frozen=True)
class SaturationConfig:
    max_arrows: int = 512
    max_word_length: int = 8

    def __post_init__(self):
        if self.max_arrows <= 0 or self.max_word_length <= 0:
            raise ValueError("saturation bounds must be positive")
