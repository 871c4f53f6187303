"""From syntax trees to categories, functors and transformations."""
from __future__ import annotations

from dataclasses import dataclass, field

from scipy.cluster.hierarchy import DisjointSet

from ..category import (
    Arrow,
    CompositionError,
    FinCategory,
    LawReport,
    Violation,
    canonical_classes,
    check_category_laws,
    compose,
)
from ..transfor import FinFunctor, NatTrans
from .parser import parse
from .saturate import saturate_full
from .syntax import FunctorDecl, Item, NatDecl, Presentation, SaturationConfig, TypingError


class LawFailure(Exception):
    """Elaborated data is well formed but violates the category laws."""

    def __init__(self, report: LawReport, what: str = ""):
        self.report = report
        super().__init__(f"{what} fails its laws:\n{report.format()}" if what else report.format())


def elaborate_table(p: Presentation) -> FinCategory:
    if p.mode != "table":
        raise ValueError("elaborate_table needs a table presentation")
    obj = {o: i for i, o in enumerate(p.objects)}
    arr = {a.name: i for i, a in enumerate(p.arrows)}
    v = []
    ids = {}
    for o, a in p.identities:
        if o in ids and ids[o] != arr[a]:
            raise TypingError(f"two identities declared for {o!r}", p.pos.line, p.pos.col)
        ids[o] = arr[a]
    for o in p.objects:
        if o not in ids:
            v.append(Violation("totality", (o,), f"no identity declared for {o}"))
    comp = {}
    for g, f, h in p.compose:
        key = (arr[g], arr[f])
        if key in comp and comp[key] != arr[h]:
            raise TypingError(f"{g}.{f} is given two different composites", p.pos.line, p.pos.col)
        comp[key] = arr[h]
    for f in p.arrows:
        for g in p.arrows:
            if f.dst == g.src and (arr[g.name], arr[f.name]) not in comp:
                v.append(Violation("totality", (g.name, f.name), f"missing composite {g.name}.{f.name}"))
    if v:
        raise LawFailure(LawReport(tuple(v)), f"category {p.name}")
    ds = DisjointSet(range(len(p.arrows)))
    for a, b in p.equivs:
        ds.merge(arr[a], arr[b])
    c = FinCategory(
        tuple(p.objects),
        tuple(Arrow(obj[a.src], obj[a.dst], a.name) for a in p.arrows),
        canonical_classes(ds[i] for i in range(len(p.arrows))),
        comp,
        tuple(ids[o] for o in p.objects),
    )
    report = check_category_laws(c)
    if not report.passed:
        raise LawFailure(report, f"category {p.name}")
    return c


@dataclass
class Environment:
    """Everything declared in a document, by name."""

    categories: dict = field(default_factory=dict)     # name -> FinCategory
    arrow_names: dict = field(default_factory=dict)    # category -> {arrow or generator name: index}
    presentations: dict = field(default_factory=dict)
    functors: dict = field(default_factory=dict)       # includes diagrams
    diagrams: dict = field(default_factory=dict)
    nats: dict = field(default_factory=dict)
    order: list = field(default_factory=list)
    saturations: dict = field(default_factory=dict)    # presented category -> Saturation
    functor_decls: dict = field(default_factory=dict)


def eval_word(c: FinCategory, names: dict, word, obj: int, where=None) -> int:
    """Value of a word written right to left; a word of ``id`` alone is the identity at ``obj``."""
    cur = None
    for n in reversed(word):
        if n == "id":
            continue
        a = names[n]
        try:
            cur = a if cur is None else compose(c, a, cur)
        except CompositionError:
            line, col = (where.line, where.col) if where else (0, 0)
            raise TypingError(f"word {'.'.join(word)} is not composable", line, col) from None
    return c.identity(obj) if cur is None else cur


def _functor(env: Environment, d: FunctorDecl) -> FinFunctor:
    C, D = env.categories[d.source], env.categories[d.target]
    src_p = env.presentations[d.source]
    omap = dict(d.obj_map)
    missing = [o for o in C.objects if o not in omap]
    if missing:
        raise TypingError(f"{d.kind} {d.name} does not map object {missing[0]!r}", d.pos.line, d.pos.col)
    obj_map = [D.object_index(omap[o]) for o in C.objects]
    names = env.arrow_names[d.target]
    images = {}
    for f, w in d.arr_map:
        a = env.arrow_names[d.source][f]
        images[f] = eval_word(D, names, w, obj_map[C.src(a)], d.pos)
    arr_map = []
    if src_p.mode == "table":
        for i, a in enumerate(C.arrows):
            if a.label in images:
                arr_map.append(images[a.label])
            elif i in C.identities:
                arr_map.append(D.identity(obj_map[a.src]))
            else:
                raise TypingError(f"{d.kind} {d.name} does not map arrow {a.label!r}", d.pos.line, d.pos.col)
    else:
        gens = [g.name for g in src_p.arrows]
        for g in gens:
            if g not in images:
                raise TypingError(f"{d.kind} {d.name} does not map generator {g!r}", d.pos.line, d.pos.col)
        sat_words = env.saturations[d.source].words
        for i, w in enumerate(sat_words):
            cur = D.identity(obj_map[w[0]])
            for g in w[1]:
                name = src_p.arrows[g].name
                try:
                    cur = compose(D, images[name], cur)
                except CompositionError:
                    raise TypingError(f"images under {d.name} are not composable", d.pos.line, d.pos.col) from None
            arr_map.append(cur)
    return FinFunctor(C, D, obj_map, arr_map)


def _nat(env: Environment, n: NatDecl) -> NatTrans:
    F, G = env.functors[n.F], env.functors[n.G]
    C = F.source
    comps = dict(n.components)
    missing = [o for o in C.objects if o not in comps]
    if missing:
        raise TypingError(f"nat {n.name} has no component at {missing[0]!r}", n.pos.line, n.pos.col)
    names = env.arrow_names[env.functor_decls[n.F].target]
    return NatTrans(F, G, [eval_word(F.target, names, comps[o], F.obj_map[x], n.pos)
                           for x, o in enumerate(C.objects)])


def elaborate(items: list[Item], cfg: SaturationConfig = SaturationConfig()) -> Environment:
    env = Environment()
    for it in items:
        env.order.append(it.name)
        if isinstance(it, Presentation):
            env.presentations[it.name] = it
            if it.mode == "table":
                c = elaborate_table(it)
                env.arrow_names[it.name] = {a.label: i for i, a in enumerate(c.arrows)}
            else:
                sat = saturate_full(it, cfg)
                env.saturations[it.name] = sat
                c = sat.category
                env.arrow_names[it.name] = dict(sat.generators)
            env.categories[it.name] = c
        elif isinstance(it, FunctorDecl):
            env.functor_decls[it.name] = it
            F = _functor(env, it)
            env.functors[it.name] = F
            if it.kind == "diagram":
                env.diagrams[it.name] = F
        else:
            env.nats[it.name] = _nat(env, it)
    return env


def load(text: str, cfg: SaturationConfig = SaturationConfig()) -> Environment:
    return elaborate(parse(text), cfg)
