"""Lexer and recursive-descent parser.

Layout is free: items and sections are delimited by keywords.  Names,
arrows and relation words are resolved and typed as soon as they are read.
"""
from __future__ import annotations

import re

from .syntax import (
    KEYWORDS,
    ArrowDecl,
    FunctorDecl,
    Item,
    LexError,
    NatDecl,
    ParseError,
    Pos,
    Presentation,
    Token,
    TypingError,
    UnknownNameError,
)

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<name>[A-Za-z_][A-Za-z0-9_']*|\*)
  | (?P<sym>->|=>|[:.=~])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    out = []
    i, line, col = 0, 1, 1
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise LexError(f"unexpected character {text[i]!r}", line, col)
        s = m.group()
        if m.lastgroup == "name":
            out.append(Token(s if s in KEYWORDS else "NAME", s, line, col))
        elif m.lastgroup == "sym":
            out.append(Token(s, s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
        i = m.end()
    out.append(Token("EOF", "", line, col))
    return out


def _describe(t: Token) -> str:
    return "end of input" if t.kind == "EOF" else repr(t.text)


class _CatScope:
    def __init__(self, mode, objects, arrows):
        self.mode = mode
        self.objects = set(objects)
        self.arrows = arrows  # name -> (src, dst)


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.cats: dict[str, _CatScope] = {}
        self.functors: dict[str, FunctorDecl] = {}
        self.names: set[str] = set()

    # ------------------------------------------------------------ token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def at(self, *kinds) -> bool:
        return self.tok.kind in kinds

    def expect(self, *kinds) -> Token:
        t = self.tok
        if t.kind not in kinds:
            raise ParseError(f"found {_describe(t)}", t.line, t.col,
                             tuple(k if k != "NAME" else "a name" for k in kinds))
        self.i += 1
        return t

    def pos(self, t: Token) -> Pos:
        return Pos(t.line, t.col)

    # ------------------------------------------------------------ items
    def parse(self) -> list[Item]:
        items = []
        while not self.at("EOF"):
            t = self.expect("category", "functor", "diagram", "nat")
            if t.kind == "category":
                items.append(self.category(t))
            elif t.kind == "nat":
                items.append(self.nat(t))
            else:
                items.append(self.functor(t))
        return items

    def declare(self, name_tok: Token):
        if name_tok.text in self.names:
            raise TypingError(f"{name_tok.text!r} is declared twice", name_tok.line, name_tok.col)
        self.names.add(name_tok.text)

    def names_until_keyword(self) -> list[Token]:
        out = []
        while self.at("NAME"):
            out.append(self.expect("NAME"))
        return out

    def arrow_decls(self, objects: set[str]) -> list[ArrowDecl]:
        decls, seen = [], set()
        while self.at("NAME"):
            n = self.expect("NAME")
            self.expect(":")
            s = self.expect("NAME")
            self.expect("->")
            d = self.expect("NAME")
            for o in (s, d):
                if o.text not in objects:
                    raise UnknownNameError(f"undeclared object {o.text!r}", o.line, o.col)
            if n.text in seen or n.text in objects:
                raise TypingError(f"arrow name {n.text!r} is already in use", n.line, n.col)
            seen.add(n.text)
            decls.append(ArrowDecl(n.text, s.text, d.text, self.pos(n)))
        return decls

    def category(self, start: Token) -> Presentation:
        name = self.expect("NAME")
        self.declare(name)
        mode = self.expect("table", "presented").kind
        self.expect("objects")
        self.expect(":")
        obj_toks = self.names_until_keyword()
        objects = []
        for t in obj_toks:
            if t.text in objects:
                raise TypingError(f"object {t.text!r} declared twice", t.line, t.col)
            objects.append(t.text)
        objs = set(objects)
        if mode == "table":
            self.expect("arrows")
            self.expect(":")
            arrows = self.arrow_decls(objs)
            types = {a.name: (a.src, a.dst) for a in arrows}
            identities = []
            while self.at("id"):
                self.expect("id")
                o = self.expect("NAME")
                self.expect(":")
                a = self.expect("NAME")
                self.need(o, objs, "object")
                self.need(a, types, "arrow")
                if types[a.text] != (o.text, o.text):
                    raise TypingError(f"identity {a.text!r} is not an endo-arrow of {o.text!r}", a.line, a.col)
                identities.append((o.text, a.text))
            self.expect("compose")
            self.expect(":")
            compose = []
            while self.at("NAME"):
                g = self.expect("NAME")
                self.expect(".")
                f = self.expect("NAME")
                self.expect("=")
                h = self.expect("NAME")
                for t in (g, f, h):
                    self.need(t, types, "arrow")
                if types[f.text][1] != types[g.text][0]:
                    raise TypingError(f"{g.text}.{f.text} is not composable", g.line, g.col)
                if types[h.text] != (types[f.text][0], types[g.text][1]):
                    raise TypingError(f"{h.text!r} has the wrong endpoints for {g.text}.{f.text}", h.line, h.col)
                compose.append((g.text, f.text, h.text))
            equivs = []
            if self.at("equiv"):
                self.expect("equiv")
                self.expect(":")
                while self.at("NAME"):
                    a = self.expect("NAME")
                    self.expect("~")
                    b = self.expect("NAME")
                    self.need(a, types, "arrow")
                    self.need(b, types, "arrow")
                    if types[a.text] != types[b.text]:
                        raise TypingError(f"{a.text} ~ {b.text} relates non-parallel arrows", a.line, a.col)
                    equivs.append((a.text, b.text))
            self.cats[name.text] = _CatScope(mode, objects, types)
            return Presentation(name.text, mode, tuple(objects), tuple(arrows), tuple(identities),
                                tuple(compose), tuple(equivs), (), self.pos(start))
        self.expect("generators")
        self.expect(":")
        gens = self.arrow_decls(objs)
        types = {a.name: (a.src, a.dst) for a in gens}
        self.expect("relations")
        self.expect(":")
        relations = []
        while self.at("NAME", "id"):
            first = self.tok
            lhs = self.word(types)
            self.expect("=")
            rhs = self.word(types)
            tl, tr = word_type(lhs, types), word_type(rhs, types)
            if tl is None and tr is None:
                raise TypingError("a relation needs a generator on at least one side", first.line, first.col)
            if tl is not None and tr is not None and tl != tr:
                raise TypingError(f"relation {'.'.join(lhs)} = {'.'.join(rhs)} equates non-parallel words",
                                  first.line, first.col)
            if (tl or tr)[0] != (tl or tr)[1] and (tl is None or tr is None):
                raise TypingError("id can only equal an endo-word", first.line, first.col)
            relations.append((lhs, rhs))
        self.cats[name.text] = _CatScope(mode, objects, types)
        return Presentation(name.text, mode, tuple(objects), tuple(gens), (), (), (),
                            tuple(relations), self.pos(start))

    def need(self, t: Token, scope, what: str):
        if t.text not in scope:
            raise UnknownNameError(f"undeclared {what} {t.text!r}", t.line, t.col)

    def word(self, types) -> tuple[str, ...]:
        """WORD := (NAME | id) ('.' (NAME | id))*; typed as it is read."""
        start = self.tok
        parts = [self.word_atom(types)]
        while self.at("."):
            self.expect(".")
            parts.append(self.word_atom(types))
        try:
            word_type(tuple(parts), types)
        except TypingError as e:
            raise TypingError(e.message, start.line, start.col) from None
        return tuple(parts)

    def word_atom(self, types) -> str:
        t = self.expect("NAME", "id")
        if t.kind == "NAME":
            self.need(t, types, "arrow")
        return t.text

    def functor(self, start: Token) -> FunctorDecl:
        name = self.expect("NAME")
        self.declare(name)
        self.expect(":")
        s = self.expect("NAME")
        self.expect("->")
        d = self.expect("NAME")
        self.need(s, self.cats, "category")
        self.need(d, self.cats, "category")
        src, dst = self.cats[s.text], self.cats[d.text]
        obj_map, arr_map = [], []
        seen_o, seen_a = set(), set()
        while self.at("obj", "arr"):
            if self.expect("obj", "arr").kind == "obj":
                a = self.expect("NAME")
                self.expect("->")
                x = self.expect("NAME")
                self.need(a, src.objects, "object")
                self.need(x, dst.objects, "object")
                if a.text in seen_o:
                    raise TypingError(f"object {a.text!r} mapped twice", a.line, a.col)
                seen_o.add(a.text)
                obj_map.append((a.text, x.text))
            else:
                f = self.expect("NAME")
                self.expect("->")
                self.need(f, src.arrows, "arrow")
                if f.text in seen_a:
                    raise TypingError(f"arrow {f.text!r} mapped twice", f.line, f.col)
                seen_a.add(f.text)
                arr_map.append((f.text, self.word(dst.arrows)))
        decl = FunctorDecl(name.text, s.text, d.text, tuple(obj_map), tuple(arr_map), start.kind, self.pos(start))
        self.functors[name.text] = decl
        return decl

    def nat(self, start: Token) -> NatDecl:
        name = self.expect("NAME")
        self.declare(name)
        self.expect(":")
        f = self.expect("NAME")
        self.expect("=>")
        g = self.expect("NAME")
        self.need(f, self.functors, "functor")
        self.need(g, self.functors, "functor")
        F, G = self.functors[f.text], self.functors[g.text]
        if (F.source, F.target) != (G.source, G.target):
            raise TypingError("functors of a transformation must share endpoints", g.line, g.col)
        src, dst = self.cats[F.source], self.cats[F.target]
        comps, seen = [], set()
        while self.at("at"):
            self.expect("at")
            x = self.expect("NAME")
            self.need(x, src.objects, "object")
            if x.text in seen:
                raise TypingError(f"component at {x.text!r} given twice", x.line, x.col)
            seen.add(x.text)
            self.expect(":")
            comps.append((x.text, self.word(dst.arrows)))
        return NatDecl(name.text, f.text, g.text, tuple(comps), self.pos(start))


def word_type(word, types) -> tuple[str, str] | None:
    """Endpoints of ``word`` (written right to left), ``None`` if it is all ``id``."""
    cur = None
    for name in reversed(word):
        if name == "id":
            continue
        s, d = types[name]
        if cur is not None and cur[1] != s:
            raise TypingError(f"word {'.'.join(word)} is not composable")
        cur = (s if cur is None else cur[0], d)
    return cur


def parse(text: str) -> list[Item]:
    return Parser(text).parse()
