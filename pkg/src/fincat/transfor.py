"""Functors, natural transformations and monads between finite categories."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .category import (
    Arrow,
    FinCategory,
    LawReport,
    StructuralError,
    Violation,
    canonical_classes,
    compose,
    equiv,
    op,
)


class TooLargeError(ValueError):
    """An enumeration would exceed its configured candidate cap."""


DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    arr_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", tuple(self.obj_map))
        object.__setattr__(self, "arr_map", tuple(self.arr_map))
        if len(self.obj_map) != self.source.n_objects:
            raise StructuralError("obj_map length does not match source objects")
        if len(self.arr_map) != self.source.n_arrows:
            raise StructuralError("arr_map length does not match source arrows")
        if any(not 0 <= x < self.target.n_objects for x in self.obj_map):
            raise StructuralError("obj_map entry out of range")
        if any(not 0 <= f < self.target.n_arrows for f in self.arr_map):
            raise StructuralError("arr_map entry out of range")

    def ob(self, x: int) -> int:
        return self.obj_map[x]

    def ar(self, f: int) -> int:
        return self.arr_map[f]


@dataclass(frozen=True)
class NatTrans:
    F: FinFunctor
    G: FinFunctor
    components: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not (same_category(self.F.source, self.G.source)
                and same_category(self.F.target, self.G.target)):
            raise StructuralError("natural transformation between functors with different endpoints")
        if len(self.components) != self.F.source.n_objects:
            raise StructuralError("one component per source object required")
        if any(not 0 <= a < self.F.target.n_arrows for a in self.components):
            raise StructuralError("component index out of range")

    def __getitem__(self, x: int) -> int:
        return self.components[x]


@dataclass(frozen=True)
class Monad:
    C: FinCategory
    T: FinFunctor
    eta: NatTrans
    mu: NatTrans


def same_category(a: FinCategory, b: FinCategory) -> bool:
    return a is b or a == b


# ---------------------------------------------------------------- functors

def id_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, range(c.n_objects), range(c.n_arrows))


def constant_functor(c: FinCategory, d: FinCategory, x: int) -> FinFunctor:
    return FinFunctor(c, d, [x] * c.n_objects, [d.identity(x)] * c.n_arrows)


def compose_functor(g: FinFunctor, f: FinFunctor) -> FinFunctor:
    if not same_category(f.target, g.source):
        raise ValueError("cannot compose functors: middle categories differ")
    return FinFunctor(f.source, g.target,
                      [g.obj_map[x] for x in f.obj_map],
                      [g.arr_map[a] for a in f.arr_map])


def op_functor(f: FinFunctor) -> FinFunctor:
    return FinFunctor(op(f.source), op(f.target), f.obj_map, f.arr_map)


def thin_functor(c: FinCategory, d: FinCategory, obj_map) -> FinFunctor:
    """Functor determined by its object map, for targets whose hom-sets hold at
    most one class: each arrow goes to the least arrow with the right ends."""
    obj_map = list(obj_map)
    arr_map = []
    for a in c.arrows:
        hom = d.hom(obj_map[a.src], obj_map[a.dst])
        if not hom:
            raise ValueError(f"no arrow {d.objects[obj_map[a.src]]} -> {d.objects[obj_map[a.dst]]}")
        arr_map.append(hom[0])
    return FinFunctor(c, d, obj_map, arr_map)


def product_functor(f: FinFunctor, g: FinFunctor) -> FinFunctor:
    """``f x g`` between product categories."""
    from .category import product_category
    src = product_category(f.source, g.source)
    dst = product_category(f.target, g.target)
    nd, md = g.target.n_objects, g.target.n_arrows
    return FinFunctor(
        src, dst,
        [f.obj_map[x] * nd + g.obj_map[y] for x in range(f.source.n_objects)
         for y in range(g.source.n_objects)],
        [f.arr_map[a] * md + g.arr_map[b] for a in range(f.source.n_arrows)
         for b in range(g.source.n_arrows)],
    )


def check_functor(F: FinFunctor) -> LawReport:
    c, d = F.source, F.target
    v: list[Violation] = []
    typed = [True] * c.n_arrows
    for f, a in enumerate(c.arrows):
        b = d.arrows[F.arr_map[f]]
        if (b.src, b.dst) != (F.obj_map[a.src], F.obj_map[a.dst]):
            typed[f] = False
            v.append(Violation("typing", (f,), f"F({a.label}) = {b.label} has wrong endpoints"))
    for x, i in enumerate(c.identities):
        if typed[i] and not equiv(d, F.arr_map[i], d.identity(F.obj_map[x])):
            v.append(Violation("identity", (x,), f"F(id_{c.objects[x]}) is not an identity"))
    for (g, f), h in c.comp.items():
        if typed[g] and typed[f] and typed[h] and c.dst(f) == c.src(g):
            if not equiv(d, F.arr_map[h], compose(d, F.arr_map[g], F.arr_map[f])):
                v.append(Violation("composition", (g, f),
                                   f"F({c.arrows[g].label}.{c.arrows[f].label}) != F({c.arrows[g].label}).F({c.arrows[f].label})"))
    for f in range(c.n_arrows):
        r = c.rep(f)
        if r != f and typed[f] and typed[r] and not equiv(d, F.arr_map[f], F.arr_map[r]):
            v.append(Violation("resp", (f, r),
                               f"{c.arrows[f].label} ~ {c.arrows[r].label} but images differ"))
    return LawReport(tuple(v))


def enumerate_functors(j: FinCategory, c: FinCategory, cap: int = DEFAULT_CAP) -> list[FinFunctor]:
    """Every law-passing functor ``j -> c``, lexicographic in (obj_map, arr_map)."""
    if c.n_objects ** j.n_objects > cap:
        raise TooLargeError(f"{c.n_objects}^{j.n_objects} object maps exceed the cap {cap}")
    budget = [cap]
    found = []
    id_of = {i: x for x, i in enumerate(j.identities)}
    # constraints checked as soon as all three arrows of a composite are assigned
    checks: dict[int, list[tuple[int, int, int]]] = {}
    for (g, f), h in j.comp.items():
        checks.setdefault(max(g, f, h), []).append((g, f, h))

    for obj_map in itertools.product(range(c.n_objects), repeat=j.n_objects):
        arr: list[int] = []

        def go(k):
            if k == j.n_arrows:
                found.append(FinFunctor(j, c, obj_map, arr))
                return
            a = j.arrows[k]
            for cand in c.hom(obj_map[a.src], obj_map[a.dst]):
                budget[0] -= 1
                if budget[0] < 0:
                    raise TooLargeError(f"functor search exceeded the cap {cap}")
                if k in id_of and not equiv(c, cand, c.identity(obj_map[a.src])):
                    continue
                r = j.rep(k)
                if r != k and not equiv(c, cand, arr[r]):
                    continue
                arr.append(cand)
                if all(equiv(c, arr[h], compose(c, arr[g], arr[f])) for g, f, h in checks.get(k, ())):
                    go(k + 1)
                arr.pop()

        go(0)
    return found


# ---------------------------------------------------------------- transformations

def id_nat(F: FinFunctor) -> NatTrans:
    return NatTrans(F, F, [F.target.identity(x) for x in F.obj_map])


def check_natural(t: NatTrans) -> LawReport:
    F, G, d = t.F, t.G, t.F.target
    for x, a in enumerate(t.components):
        if (d.src(a), d.dst(a)) != (F.obj_map[x], G.obj_map[x]):
            raise StructuralError(
                f"component at {F.source.objects[x]} is {d.arrows[a].label}, "
                f"expected an arrow {d.objects[F.obj_map[x]]} -> {d.objects[G.obj_map[x]]}"
            )
    v = []
    for f, a in enumerate(F.source.arrows):
        lhs = compose(d, G.arr_map[f], t.components[a.src])
        rhs = compose(d, t.components[a.dst], F.arr_map[f])
        if not equiv(d, lhs, rhs):
            v.append(Violation("naturality", (f,), f"square at {a.label} does not commute"))
    return LawReport(tuple(v))


def is_typed(t: NatTrans) -> bool:
    d = t.F.target
    return all((d.src(a), d.dst(a)) == (t.F.obj_map[x], t.G.obj_map[x])
               for x, a in enumerate(t.components))


def vcomp(s: NatTrans, t: NatTrans) -> NatTrans:
    """``s . t`` for ``t: F => G`` and ``s: G => H``."""
    if t.G != s.F:
        raise ValueError("vertical composite needs t.G == s.F")
    d = t.F.target
    return NatTrans(t.F, s.G, [compose(d, s[x], t[x]) for x in range(len(t.components))])


def hcomp(s: NatTrans, t: NatTrans) -> NatTrans:
    """Horizontal composite ``s * t`` for ``t: F => F'`` (C -> D) and
    ``s: G => G'`` (D -> E); component ``G'(t_X) . s_{F X}``."""
    if not same_category(t.F.target, s.F.source):
        raise ValueError("horizontal composite needs matching middle category")
    e = s.F.target
    comps = [compose(e, s.G.arr_map[t[x]], s[t.F.obj_map[x]]) for x in range(len(t.components))]
    return NatTrans(compose_functor(s.F, t.F), compose_functor(s.G, t.G), comps)


def whisker_left(H: FinFunctor, t: NatTrans) -> NatTrans:
    """``H t : H F => H G``."""
    return NatTrans(compose_functor(H, t.F), compose_functor(H, t.G),
                    [H.arr_map[a] for a in t.components])


def whisker_right(t: NatTrans, K: FinFunctor) -> NatTrans:
    """``t K : F K => G K``."""
    return NatTrans(compose_functor(t.F, K), compose_functor(t.G, K),
                    [t.components[K.obj_map[x]] for x in range(K.source.n_objects)])


def nat_equiv(s: NatTrans, t: NatTrans) -> bool:
    """Componentwise equivalence of two transformations with the same ends."""
    d = s.F.target
    return all(equiv(d, a, b) for a, b in zip(s.components, t.components))


def inverse_arrow(c: FinCategory, f: int) -> int | None:
    """Least arrow that is a two-sided inverse of ``f`` up to equivalence."""
    a = c.arrows[f]
    for g in c.hom(a.dst, a.src):
        if (equiv(c, compose(c, g, f), c.identity(a.src))
                and equiv(c, compose(c, f, g), c.identity(a.dst))):
            return g
    return None


def is_natural_iso(t: NatTrans) -> NatTrans | None:
    d = t.F.target
    inv = []
    for a in t.components:
        g = inverse_arrow(d, a)
        if g is None:
            return None
        inv.append(g)
    return NatTrans(t.G, t.F, inv)


def enumerate_nat_trans(F: FinFunctor, G: FinFunctor) -> list[NatTrans]:
    """All natural families ``F => G`` (every representative), lexicographic."""
    d = F.target
    n = F.source.n_objects
    found = []
    comps: list[int] = []
    squares: dict[int, list[int]] = {}
    for f, a in enumerate(F.source.arrows):
        squares.setdefault(max(a.src, a.dst), []).append(f)

    def go(x):
        if x == n:
            found.append(NatTrans(F, G, comps))
            return
        for cand in d.hom(F.obj_map[x], G.obj_map[x]):
            comps.append(cand)
            ok = True
            for f in squares.get(x, ()):
                a = F.source.arrows[f]
                if not equiv(d, compose(d, G.arr_map[f], comps[a.src]),
                             compose(d, comps[a.dst], F.arr_map[f])):
                    ok = False
                    break
            if ok:
                go(x + 1)
            comps.pop()

    go(0)
    return found


@dataclass(frozen=True)
class FunctorCategory:
    category: FinCategory
    functors: tuple[FinFunctor, ...]
    transformations: tuple[NatTrans, ...]


def functor_category_data(j: FinCategory, c: FinCategory, cap: int = DEFAULT_CAP) -> FunctorCategory:
    functors = enumerate_functors(j, c, cap)
    arrows, nats, keys = [], [], []
    index: dict[tuple[int, int, tuple[int, ...]], int] = {}
    for p, F in enumerate(functors):
        for q, G in enumerate(functors):
            for t in enumerate_nat_trans(F, G):
                index[(p, q, t.components)] = len(nats)
                arrows.append(Arrow(p, q, f"n{len(nats)}"))
                nats.append(t)
                keys.append((p, q, tuple(c.eq_class[a] for a in t.components)))
    by_source: dict[int, list[int]] = {}
    for k, a in enumerate(arrows):
        by_source.setdefault(a.src, []).append(k)
    comp = {}
    for f, a in enumerate(arrows):
        for g in by_source.get(a.dst, ()):
            h = vcomp(nats[g], nats[f])
            comp[(g, f)] = index[(a.src, arrows[g].dst, h.components)]
    ids = [index[(p, p, id_nat(F).components)] for p, F in enumerate(functors)]
    cat = FinCategory(tuple(f"F{p}" for p in range(len(functors))), arrows,
                      canonical_classes(keys), comp, ids)
    return FunctorCategory(cat, tuple(functors), tuple(nats))


def functor_category(j: FinCategory, c: FinCategory, cap: int = DEFAULT_CAP) -> FinCategory:
    return functor_category_data(j, c, cap).category


# ---------------------------------------------------------------- monads

def _require(cond: bool, msg: str):
    if not cond:
        raise StructuralError(msg)


def check_monad(M: Monad) -> LawReport:
    c, T = M.C, M.T
    _require(same_category(T.source, c) and same_category(T.target, c), "T must be an endofunctor on C")
    _require(M.eta.F == id_functor(c) and M.eta.G == T, "eta must go id => T")
    _require(M.mu.F == compose_functor(T, T) and M.mu.G == T, "mu must go T.T => T")
    report = check_functor(T).prefixed("T")
    report += check_natural(M.eta).prefixed("eta") + check_natural(M.mu).prefixed("mu")
    v = []
    for x in range(c.n_objects):
        mu, tx = M.mu[x], T.obj_map[x]
        lhs = compose(c, mu, T.arr_map[mu])
        rhs = compose(c, mu, M.mu[tx])
        if not equiv(c, lhs, rhs):
            v.append(Violation("associativity", (x,), f"mu.T(mu) != mu.mu_T at {c.objects[x]}"))
        if not equiv(c, compose(c, mu, T.arr_map[M.eta[x]]), c.identity(tx)):
            v.append(Violation("unit-left", (x,), f"mu.T(eta) != id at {c.objects[x]}"))
        if not equiv(c, compose(c, mu, M.eta[tx]), c.identity(tx)):
            v.append(Violation("unit-right", (x,), f"mu.eta_T != id at {c.objects[x]}"))
    return report + LawReport(tuple(v))


def identity_monad(c: FinCategory) -> Monad:
    I = id_functor(c)
    return Monad(c, I, id_nat(I), NatTrans(compose_functor(I, I), I, id_nat(I).components))


@dataclass(frozen=True)
class Kleisli:
    category: FinCategory
    underlying: tuple[int, ...]  # Kleisli arrow -> arrow a -> T b of the base


def kleisli_data(M: Monad) -> Kleisli:
    c, T = M.C, M.T
    entries = [(a, b, f) for a in range(c.n_objects) for b in range(c.n_objects)
               for f in c.hom(a, T.obj_map[b])]
    index = {e: k for k, e in enumerate(entries)}
    by_source: dict[int, list[int]] = {}
    for k, (a, _, _) in enumerate(entries):
        by_source.setdefault(a, []).append(k)
    comp = {}
    for p, (a, b, f) in enumerate(entries):
        for q in by_source.get(b, ()):
            _, z, g = entries[q]
            h = compose(c, M.mu[z], compose(c, T.arr_map[g], f))
            comp[(q, p)] = index[(a, z, h)]
    cat = FinCategory(
        objects=c.objects,
        arrows=tuple(Arrow(a, b, f"{c.arrows[f].label}>{c.objects[b]}") for a, b, f in entries),
        eq_class=canonical_classes((a, b, c.eq_class[f]) for a, b, f in entries),
        comp=comp,
        identities=tuple(index[(a, a, M.eta[a])] for a in range(c.n_objects)),
    )
    return Kleisli(cat, tuple(f for _, _, f in entries))


def kleisli_category(M: Monad) -> FinCategory:
    return kleisli_data(M).category
