"""Bounded saturation of generators-and-relations presentations.

Words are stored in diagrammatic order (first applied first) together with
their source object, and ordered shortlex by ``(length, source, generators)``.
At level ``L`` all words of length at most ``L`` are quotiented by the
congruence generated by the relations (union-find plus closure under
pre- and post-composition).  Saturation stops once every word of length ``L``
is equivalent to a shorter one; the resulting table is then verified before
it is returned, so a bound that is too small can only cause a loud failure.
"""
from __future__ import annotations

from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from ..category import Arrow, FinCategory, check_category_laws
from .syntax import Presentation, SaturationConfig

# words enumerated per level may exceed the arrow bound by this factor
WORD_BUDGET_FACTOR = 16


class SaturationExceeded(RuntimeError):
    """The closure did not stabilize within the configured bounds."""


@dataclass(frozen=True)
class Saturation:
    category: FinCategory
    words: tuple[tuple[int, tuple[int, ...]], ...]   # representative word per arrow
    generators: dict                                  # generator name -> arrow index
    level: int


class _Words:
    def __init__(self, p: Presentation):
        self.objects = list(p.objects)
        self.obj = {o: i for i, o in enumerate(p.objects)}
        self.gens = [(a.name, self.obj[a.src], self.obj[a.dst]) for a in p.arrows]
        self.gen = {a.name: i for i, a in enumerate(p.arrows)}
        self.relations = [self.relation(l, r) for l, r in p.relations]

    def dst(self, w):
        return self.gens[w[1][-1]][2] if w[1] else w[0]

    def diag(self, written):
        return tuple(self.gen[n] for n in reversed(written) if n != "id")

    def relation(self, l, r):
        dl, dr = self.diag(l), self.diag(r)
        src = self.gens[(dl or dr)[0]][1]
        return (src, dl), (src, dr)

    def upto(self, L: int, budget: int):
        level = [(x, ()) for x in range(len(self.objects))]
        out = list(level)
        for _ in range(L):
            nxt = []
            for w in level:
                d = self.dst(w)
                for g, (_, s, _) in enumerate(self.gens):
                    if s == d:
                        nxt.append((w[0], w[1] + (g,)))
            out += nxt
            level = nxt
            if len(out) > budget:
                raise SaturationExceeded(f"more than {budget} words of length <= {L}")
        return out

    def label(self, w) -> str:
        if not w[1]:
            return f"id_{self.objects[w[0]]}"
        return ".".join(self.gens[g][0] for g in reversed(w[1]))


def _close(ws: _Words, words, L: int) -> DisjointSet:
    wset = set(words)
    ds = DisjointSet(words)
    for l, r in ws.relations:
        if len(l[1]) <= L and len(r[1]) <= L:
            ds.merge(l, r)
    changed = True
    while changed:
        changed = False
        for cls in ds.subsets():
            if len(cls) < 2:
                continue
            members = sorted(cls, key=lambda w: (len(w[1]), w))
            for g, (_, s, d) in enumerate(ws.gens):
                right = [(w[0], w[1] + (g,)) for w in members if ws.dst(w) == s]
                left = [(s, (g,) + w[1]) for w in members if w[0] == d]
                for ext in (right, left):
                    ext = [e for e in ext if e in wset]
                    for e in ext[1:]:
                        if not ds.connected(ext[0], e):
                            ds.merge(ext[0], e)
                            changed = True
    return ds


def _build(ws: _Words, ds: DisjointSet, words, L: int):
    short = [w for w in words if len(w[1]) < L]
    reps = {}
    for w in short:                   # words are already in shortlex order
        reps.setdefault(ds[w], w)
    arrows = sorted(set(reps.values()), key=lambda w: (len(w[1]), w[0], w[1]))
    index = {w: i for i, w in enumerate(arrows)}
    cls_of = {w: index[reps[ds[w]]] for w in short}

    def reduce(w):
        while len(w[1]) >= L:
            head = (w[0], w[1][:L])
            r = reps.get(ds[head])
            if r is None:
                return None
            w = (w[0], r[1] + w[1][L:])
        return cls_of[w]

    comp = {}
    for f, wf in enumerate(arrows):
        for g, wg in enumerate(arrows):
            if ws.dst(wf) == wg[0]:
                h = reduce((wf[0], wf[1] + wg[1]))
                if h is None:
                    return None
                comp[(g, f)] = h
    ids = [index[reps[ds[(x, ())]]] for x in range(len(ws.objects))]
    c = FinCategory(
        tuple(ws.objects),
        tuple(Arrow(w[0], ws.dst(w), ws.label(w)) for w in arrows),
        tuple(range(len(arrows))),
        comp,
        tuple(ids),
    )
    return c, arrows, reduce


def _verified(ws: _Words, c: FinCategory, arrows, reduce) -> bool:
    if not check_category_laws(c).passed:
        return False
    gen_arrow = [reduce((s, (g,))) for g, (_, s, _) in enumerate(ws.gens)]

    def fold(w):
        cur = c.identities[w[0]]
        for g in w[1]:
            cur = c.comp[(gen_arrow[g], cur)]
        return cur

    if any(fold(w) != i for i, w in enumerate(arrows)):
        return False
    return all(fold(l) == fold(r) for l, r in ws.relations)


def saturate_full(p: Presentation, cfg: SaturationConfig = SaturationConfig()) -> Saturation:
    if p.mode != "presented":
        raise ValueError("saturation needs a presented category")
    ws = _Words(p)
    longest = max([max(len(l[1]), len(r[1])) for l, r in ws.relations], default=0)
    budget = cfg.max_arrows * WORD_BUDGET_FACTOR
    for L in range(max(1, longest), cfg.max_word_length + 1):
        words = ws.upto(L, budget)
        ds = _close(ws, words, L)
        roots_short = {ds[w] for w in words if len(w[1]) < L}
        if len(roots_short) > cfg.max_arrows:
            raise SaturationExceeded(f"more than {cfg.max_arrows} arrows at word length {L}")
        if any(ds[w] not in roots_short for w in words if len(w[1]) == L):
            continue
        built = _build(ws, ds, words, L)
        if built is None:
            continue
        c, arrows, reduce = built
        if _verified(ws, c, arrows, reduce):
            gens = {name: reduce((s, (g,))) for g, (name, s, _) in enumerate(ws.gens)}
            return Saturation(c, tuple(arrows), gens, L)
    raise SaturationExceeded(
        f"saturation exceeded: closure of {p.name!r} did not stabilize with words of length <= {cfg.max_word_length}")


def saturate(p: Presentation, cfg: SaturationConfig = SaturationConfig()) -> FinCategory:
    return saturate_full(p, cfg).category
