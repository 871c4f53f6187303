"""Canonical text for syntax trees and table categories."""
from __future__ import annotations

from typing import Iterable

from ..category import FinCategory
from .syntax import ArrowDecl, FunctorDecl, Item, NatDecl, Presentation, is_name


def _word(w) -> str:
    return ".".join(w)


def _presentation(p: Presentation) -> list[str]:
    out = [f"category {p.name} {p.mode}", "  objects: " + " ".join(p.objects)]
    head = "arrows" if p.mode == "table" else "generators"
    out.append(f"  {head}:")
    out += [f"    {a.name} : {a.src} -> {a.dst}" for a in p.arrows]
    if p.mode == "table":
        out += [f"  id {o} : {a}" for o, a in p.identities]
        out.append("  compose:")
        out += [f"    {g}.{f} = {h}" for g, f, h in p.compose]
        if p.equivs:
            out.append("  equiv:")
            out += [f"    {a} ~ {b}" for a, b in p.equivs]
    else:
        out.append("  relations:")
        out += [f"    {_word(l)} = {_word(r)}" for l, r in p.relations]
    return out


def _functor(f: FunctorDecl) -> list[str]:
    out = [f"{f.kind} {f.name} : {f.source} -> {f.target}"]
    out += [f"  obj {a} -> {x}" for a, x in f.obj_map]
    out += [f"  arr {a} -> {_word(w)}" for a, w in f.arr_map]
    return out


def _nat(n: NatDecl) -> list[str]:
    return [f"nat {n.name} : {n.F} => {n.G}"] + [f"  at {x} : {_word(w)}" for x, w in n.components]


def category_to_presentation(c: FinCategory, name: str, rename: bool = False) -> Presentation:
    """Table presentation of ``c``.  Names that are not valid identifiers are
    rejected, or replaced by ``o<i>``/``m<i>`` when ``rename`` is set."""
    objs = list(c.objects)
    labels = [a.label for a in c.arrows]
    if rename:
        if not all(is_name(o) for o in objs) or len(set(objs)) != len(objs):
            objs = [f"o{i}" for i in range(c.n_objects)]
        if (not all(is_name(l) for l in labels) or len(set(labels)) != len(labels)
                or set(labels) & set(objs)):
            labels = [f"m{i}" for i in range(c.n_arrows)]
    bad = [s for s in objs + labels if not is_name(s)]
    if bad:
        raise ValueError(f"cannot print names {bad[:3]}; pass rename=True")
    if len(set(objs)) != len(objs) or len(set(labels)) != len(labels) or set(objs) & set(labels):
        raise ValueError("object and arrow names must be distinct")
    if not is_name(name):
        raise ValueError(f"invalid category name {name!r}")
    arrows = tuple(ArrowDecl(labels[i], objs[a.src], objs[a.dst]) for i, a in enumerate(c.arrows))
    ids = tuple((objs[x], labels[i]) for x, i in enumerate(c.identities))
    comp = tuple((labels[g], labels[f], labels[h]) for (g, f), h in c.comp.items())
    equivs = []
    for i in range(c.n_arrows):
        r = c.rep(i)
        if r != i:
            equivs.append((labels[r], labels[i]))
    return Presentation(name, "table", tuple(objs), arrows, ids, comp, tuple(equivs))


def print_entity(entity, name: str = "C") -> str:
    """Canonical text for a syntax item, a list of items, or a ``FinCategory``."""
    if isinstance(entity, FinCategory):
        entity = category_to_presentation(entity, name)
    if isinstance(entity, Presentation):
        lines = _presentation(entity)
    elif isinstance(entity, FunctorDecl):
        lines = _functor(entity)
    elif isinstance(entity, NatDecl):
        lines = _nat(entity)
    elif isinstance(entity, Iterable) and not isinstance(entity, (str, bytes)):
        return "\n".join(print_entity(e) for e in entity)
    else:
        raise ValueError(f"cannot print {type(entity).__name__}")
    return "\n".join(lines) + "\n"
