"""Finite setoids: limits, exponentials, slice exponentials and Yoneda.

The category of finite setoids is infinite, so universal properties are
checked against a probe family: every setoid with carrier size at most ``k``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .category import (
    Arrow,
    FinCategory,
    LawReport,
    StructuralError,
    Violation,
    canonical_classes,
    compose,
)

DEFAULT_PROBE_SIZE = 3


@dataclass(frozen=True)
class FinSetoid:
    """Carrier ``0..n-1``; ``cls[x]`` is the class of ``x`` (numbered by first occurrence)."""

    cls: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cls", canonical_classes(self.cls))

    @property
    def n(self) -> int:
        return len(self.cls)

    @property
    def n_classes(self) -> int:
        return max(self.cls) + 1 if self.cls else 0

    def eq(self, x: int, y: int) -> bool:
        return self.cls[x] == self.cls[y]

    def rep(self, x: int) -> int:
        return self.cls.index(self.cls[x])

    def reps(self) -> tuple[int, ...]:
        return tuple(self.cls.index(k) for k in range(self.n_classes))


def discrete(n: int) -> FinSetoid:
    return FinSetoid(tuple(range(n)))


def indiscrete(n: int) -> FinSetoid:
    return FinSetoid((0,) * n)


def terminal_setoid() -> FinSetoid:
    return FinSetoid((0,))


def all_setoids(k: int) -> Iterator[FinSetoid]:
    """Every setoid of carrier size ``0..k`` up to relabeling of elements
    (restricted growth strings)."""
    for n in range(k + 1):
        def go(prefix, top):
            if len(prefix) == n:
                yield FinSetoid(tuple(prefix))
                return
            for c in range(top + 2):
                yield from go(prefix + [c], max(top, c))
        yield from go([], -1)


@dataclass(frozen=True)
class SetoidMap:
    source: FinSetoid
    target: FinSetoid
    fn: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "fn", tuple(self.fn))
        if len(self.fn) != self.source.n or any(not 0 <= y < self.target.n for y in self.fn):
            raise StructuralError("setoid map is not a function between the carriers")

    def __call__(self, x: int) -> int:
        return self.fn[x]

    def respects(self) -> bool:
        s, t = self.source, self.target
        return all(t.eq(self.fn[x], self.fn[y]) for x in range(s.n) for y in range(s.n) if s.eq(x, y))


def map_equiv(f: SetoidMap, g: SetoidMap) -> bool:
    return all(f.target.eq(a, b) for a, b in zip(f.fn, g.fn))


def compose_maps(g: SetoidMap, f: SetoidMap) -> SetoidMap:
    return SetoidMap(f.source, g.target, [g.fn[y] for y in f.fn])


def identity_map(x: FinSetoid) -> SetoidMap:
    return SetoidMap(x, x, range(x.n))


def respecting_functions(x: FinSetoid, y: FinSetoid) -> list[tuple[int, ...]]:
    """All partition-respecting functions, in lexicographic order."""
    return [fn for fn in itertools.product(range(y.n), repeat=x.n)
            if all(y.eq(fn[a], fn[b]) for a in range(x.n) for b in range(a) if x.eq(a, b))]


def map_classes(x: FinSetoid, y: FinSetoid, allowed=None) -> list[tuple[int, ...]]:
    """One respecting function per pointwise class: each class of ``x`` goes to
    the least element of a class of ``y``.  ``allowed(x_elem, y_elem)`` filters."""
    choices = []
    for r in x.reps():
        opts = [t for t in y.reps() if allowed is None or allowed(r, t)]
        choices.append(opts)
    out = []
    for pick in itertools.product(*choices):
        out.append(tuple(pick[x.cls[e]] for e in range(x.n)))
    return out


# ---------------------------------------------------------------- limits and exponentials

@dataclass(frozen=True)
class ProductSetoid:
    setoid: FinSetoid
    p1: SetoidMap
    p2: SetoidMap

    def pair(self, f: SetoidMap, g: SetoidMap) -> SetoidMap:
        ny = self.p2.target.n
        return SetoidMap(f.source, self.setoid, [a * ny + b for a, b in zip(f.fn, g.fn)])


def product_setoid(x: FinSetoid, y: FinSetoid) -> ProductSetoid:
    """Pairs ``(a, b)`` stored at ``a * |y| + b`` with componentwise equivalence."""
    P = FinSetoid(tuple(x.cls[a] * max(y.n_classes, 1) + y.cls[b] for a in range(x.n) for b in range(y.n)))
    return ProductSetoid(
        P,
        SetoidMap(P, x, [a for a in range(x.n) for _ in range(y.n)]),
        SetoidMap(P, y, [b for _ in range(x.n) for b in range(y.n)]),
    )


@dataclass(frozen=True)
class EqualizerSetoid:
    setoid: FinSetoid
    inclusion: SetoidMap


def equalizer_setoid(f: SetoidMap, g: SetoidMap) -> EqualizerSetoid:
    if f.source != g.source or f.target != g.target:
        raise ValueError("equalizer needs parallel setoid maps")
    X = f.source
    elems = [x for x in range(X.n) if f.target.eq(f.fn[x], g.fn[x])]
    E = FinSetoid(tuple(X.cls[x] for x in elems))
    return EqualizerSetoid(E, SetoidMap(E, X, elems))


@dataclass(frozen=True)
class ExponentialSetoid:
    setoid: FinSetoid
    functions: tuple[tuple[int, ...], ...]
    base: FinSetoid       # X in Y^X
    codomain: FinSetoid   # Y

    def index(self, fn: Sequence[int]) -> int:
        return self.functions.index(tuple(fn))

    def eval_map(self) -> SetoidMap:
        """``Y^X x X -> Y``."""
        P = product_setoid(self.setoid, self.base).setoid
        return SetoidMap(P, self.codomain, [fn[x] for fn in self.functions for x in range(self.base.n)])


def hom_setoid(x: FinSetoid, y: FinSetoid) -> ExponentialSetoid:
    fns = respecting_functions(x, y)
    keys = [tuple(y.cls[v] for v in fn) for fn in fns]
    return ExponentialSetoid(FinSetoid(canonical_classes(keys)), tuple(fns), x, y)


def exponential_setoid(x: FinSetoid, y: FinSetoid) -> ExponentialSetoid:
    """``y^x``: respecting functions, equal when pointwise equivalent."""
    return hom_setoid(x, y)


def _factor_count(z: FinSetoid, target: FinSetoid, ok) -> list[tuple[int, ...]]:
    """Class-level maps ``z -> target`` satisfying ``ok(fn)``."""
    return [fn for fn in map_classes(z, target) if ok(fn)]


def verify_product(x: FinSetoid, y: FinSetoid, k: int = DEFAULT_PROBE_SIZE) -> LawReport:
    prod = product_setoid(x, y)
    v = []
    for z in all_setoids(k):
        for z1 in map_classes(z, x):
            for z2 in map_classes(z, y):
                hs = _factor_count(z, prod.setoid, lambda fn: all(
                    x.eq(prod.p1(fn[e]), z1[e]) and y.eq(prod.p2(fn[e]), z2[e]) for e in range(z.n)))
                if len(hs) != 1:
                    v.append(Violation("product", (z.cls, z1, z2), f"{len(hs)} factorizations up to equivalence"))
    return LawReport(tuple(v))


def verify_equalizer(f: SetoidMap, g: SetoidMap, k: int = DEFAULT_PROBE_SIZE) -> LawReport:
    eq = equalizer_setoid(f, g)
    X, A = f.source, f.target
    v = []
    for z in all_setoids(k):
        for m in map_classes(z, X):
            if not all(A.eq(f(m[e]), g(m[e])) for e in range(z.n)):
                continue
            hs = _factor_count(z, eq.setoid, lambda fn: all(X.eq(eq.inclusion(fn[e]), m[e]) for e in range(z.n)))
            if len(hs) != 1:
                v.append(Violation("equalizer", (z.cls, m), f"{len(hs)} factorizations up to equivalence"))
    return LawReport(tuple(v))


def verify_exponential(x: FinSetoid, y: FinSetoid, k: int = DEFAULT_PROBE_SIZE) -> LawReport:
    """Currying ``Hom(Z x X, Y) -> Hom(Z, Y^X)`` is a class bijection commuting
    with evaluation, for every probe ``Z``."""
    E = exponential_setoid(x, y)
    ev = E.eval_map()
    v = []
    for z in all_setoids(k):
        zx = product_setoid(z, x)
        lhs = map_classes(zx.setoid, y)
        rhs = map_classes(z, E.setoid)
        curried = set()
        for u in lhs:
            cu = tuple(E.setoid.rep(E.index([u[a * x.n + b] for b in range(x.n)])) for a in range(z.n))
            if not SetoidMap(z, E.setoid, cu).respects():
                v.append(Violation("exponential", (z.cls, u), "curried map does not respect"))
                continue
            back = [ev(cu[a] * x.n + b) for a in range(z.n) for b in range(x.n)]
            if not all(y.eq(p, q) for p, q in zip(back, u)):
                v.append(Violation("exponential", (z.cls, u), "evaluation does not recover the map"))
            curried.add(cu)
        if len(curried) != len(lhs) or len(rhs) != len(lhs):
            v.append(Violation("exponential", (z.cls,),
                               f"|Hom(ZxX,Y)| = {len(lhs)}, |Hom(Z,Y^X)| = {len(rhs)}, image {len(curried)}"))
    return LawReport(tuple(v))


# ---------------------------------------------------------------- inverse images

@dataclass(frozen=True)
class InverseImage:
    a: int
    f: SetoidMap
    elements: tuple[int, ...]


def inverse_image(a: int, f: SetoidMap) -> InverseImage:
    A = f.target
    if not 0 <= a < A.n:
        raise StructuralError("base element out of range")
    return InverseImage(a, f, tuple(x for x in range(f.source.n) if A.eq(f(x), a)))


def inverse_image_transport(a2: int, v: InverseImage) -> InverseImage:
    if not v.f.target.eq(v.a, a2):
        raise ValueError("transport needs equivalent base elements")
    return InverseImage(a2, v.f, v.elements)


@dataclass(frozen=True)
class InverseImageMap:
    """``i: g^-1(a) -> h^-1(a)``; ``mapping[k]`` is the image of the k-th
    element of ``inverse_image(a, g)``."""

    a: int
    g: SetoidMap
    h: SetoidMap
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(self.mapping))

    def domain(self) -> tuple[int, ...]:
        return inverse_image(self.a, self.g).elements

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.domain(), self.mapping))


def check_inverse_image_map(m: InverseImageMap) -> LawReport:
    dom = m.domain()
    C, D, A = m.g.source, m.h.source, m.g.target
    v = []
    if len(dom) != len(m.mapping):
        return LawReport((Violation("domain", (m.a,), "mapping does not cover the fiber"),))
    for x, y in zip(dom, m.mapping):
        if not A.eq(m.h(y), m.a):
            v.append(Violation("membership", (x,), f"image {y} lies outside h^-1({m.a})"))
    for (x1, y1), (x2, y2) in itertools.combinations(zip(dom, m.mapping), 2):
        if C.eq(x1, x2) and not D.eq(y1, y2):
            v.append(Violation("coherence", (x1, x2), "equivalent elements mapped apart"))
    return LawReport(tuple(v))


def inverse_image_map_transport(a2: int, m: InverseImageMap) -> InverseImageMap:
    if not m.g.target.eq(m.a, a2):
        raise ValueError("transport needs equivalent base elements")
    out = InverseImageMap(a2, m.g, m.h, m.mapping)
    report = check_inverse_image_map(out)
    if not report.passed:
        raise ValueError("transported map is incoherent:\n" + report.format())
    return out


# ---------------------------------------------------------------- slice exponential

@dataclass(frozen=True)
class SliceExponential:
    """``X = sum over classes a of A of (g^-1(a) -> h^-1(a))`` with ``p: X -> A``."""

    A: FinSetoid
    g: SetoidMap
    h: SetoidMap
    entries: tuple[InverseImageMap, ...]
    setoid: FinSetoid
    p: SetoidMap

    def index(self, a: int, mapping: Sequence[int]) -> int:
        for k, e in enumerate(self.entries):
            if e.a == a and e.mapping == tuple(mapping):
                return k
        raise KeyError((a, tuple(mapping)))

    def rep_of(self, a: int) -> int:
        """The chosen base element in the class of ``a``."""
        for e in self.entries:
            if self.A.eq(e.a, a):
                return e.a
        return self._reps[self.A.cls[a]]

    _reps: tuple[int, ...] = field(default=(), compare=False)


def slice_exponential(A: FinSetoid, g: SetoidMap, h: SetoidMap, reps: Sequence[int] | None = None) -> SliceExponential:
    if g.target != A or h.target != A:
        raise StructuralError("g and h must land in A")
    reps = tuple(A.reps() if reps is None else reps)
    if len(reps) != A.n_classes or any(A.cls[r] != k for k, r in enumerate(reps)):
        raise ValueError("need one representative per class of A")
    C, D = g.source, h.source
    entries, keys = [], []
    for a in reps:
        dom = inverse_image(a, g).elements
        cod = inverse_image(a, h).elements
        sub = FinSetoid(tuple(C.cls[x] for x in dom))
        for pick in itertools.product(range(len(cod)), repeat=len(dom)):
            if all(D.eq(cod[pick[i]], cod[pick[j]]) for i in range(len(dom)) for j in range(i)
                   if sub.eq(i, j)):
                m = InverseImageMap(a, g, h, [cod[i] for i in pick])
                entries.append(m)
                keys.append((A.cls[a],) + tuple(D.cls[y] for y in m.mapping))
    X = FinSetoid(canonical_classes(keys))
    return SliceExponential(A, g, h, tuple(entries), X, SetoidMap(X, A, [e.a for e in entries]), reps)


def slice_probes(A: FinSetoid, k: int = DEFAULT_PROBE_SIZE) -> list[SetoidMap]:
    """Slice objects ``(B, f: B -> A)`` with ``|B| <= k``, one per class of ``f``."""
    return [SetoidMap(B, A, f) for B in all_setoids(k) for f in map_classes(B, A)]


def slice_morphisms(src: SetoidMap, dst: SetoidMap) -> list[SetoidMap]:
    """Class-level maps ``k`` with ``dst . k == src``."""
    A = src.target
    return [SetoidMap(src.source, dst.source, fn)
            for fn in map_classes(src.source, dst.source, lambda b, b2: A.eq(dst(b2), src(b)))]


def _pullback(f: SetoidMap, g: SetoidMap) -> tuple[FinSetoid, list[tuple[int, int]]]:
    """``B x_A C`` as the elements ``(b, c)`` with ``f b == g c``."""
    B, C, A = f.source, g.source, f.target
    pairs = [(b, c) for b in range(B.n) for c in range(C.n) if A.eq(f(b), g(c))]
    return FinSetoid(tuple((B.cls[b], C.cls[c]) for b, c in pairs)), pairs


@dataclass(frozen=True)
class Currying:
    """Currying for one probe: ``Hom(B x_A C, D) <-> Hom(B, X)`` over ``A``."""

    probe: SetoidMap
    pullback: FinSetoid
    pairs: tuple[tuple[int, int], ...]
    exp: SliceExponential

    def curry(self, alpha: Sequence[int]) -> tuple[int, ...]:
        B, X = self.probe.source, self.exp
        out = []
        for b in range(B.n):
            a = X.rep_of(self.probe(b))
            dom = inverse_image(a, X.g).elements
            out.append(X.index(a, [alpha[self.pairs.index((b, c))] for c in dom]))
        return tuple(out)

    def uncurry(self, beta: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.exp.entries[beta[b]].as_dict()[c] for b, c in self.pairs)


def verify_lcc(A: FinSetoid, g: SetoidMap, h: SetoidMap, probes: Sequence[SetoidMap] | None = None,
               morphisms: Sequence[tuple[int, int, SetoidMap]] | None = None,
               k: int = DEFAULT_PROBE_SIZE) -> LawReport:
    """Currying bijection for each probe and naturality along probe morphisms.

    ``morphisms`` holds ``(i, j, m)`` with ``m`` a slice map from probe ``i``
    to probe ``j``; by default all of them between probes of size at most 2.
    """
    X = slice_exponential(A, g, h)
    D = h.source
    if probes is None:
        probes = slice_probes(A, k)
    for f in probes:
        if f.target != A or not f.respects():
            raise StructuralError("probe must be a respecting map into A")
    v = []
    cur = []
    for i, f in enumerate(probes):
        P, pairs = _pullback(f, g)
        c = Currying(f, P, tuple(pairs), X)
        cur.append(c)
        fp = SetoidMap(P, A, [f(b) for b, _ in pairs])
        lhs = map_classes(P, D, lambda e, d: A.eq(h(d), fp(e)))
        rhs = map_classes(f.source, X.setoid, lambda b, x: A.eq(X.p(x), f(b)))
        if len(lhs) != len(rhs):
            v.append(Violation("cardinality", (i,), f"|Hom(B x_A C, D)| = {len(lhs)} but |Hom(B, X)| = {len(rhs)}"))
        images = set()
        for alpha in lhs:
            beta = c.curry(alpha)
            if not SetoidMap(f.source, X.setoid, beta).respects() or not all(
                    A.eq(X.p(beta[b]), f(b)) for b in range(f.source.n)):
                v.append(Violation("curry", (i, alpha), "curried map is not a slice morphism"))
                continue
            images.add(tuple(X.setoid.cls[x] for x in beta))
            back = c.uncurry(beta)
            if not all(D.eq(p, q) for p, q in zip(back, alpha)):
                v.append(Violation("inverse", (i, alpha), "uncurry . curry is not the identity"))
        if len(images) != len(lhs):
            v.append(Violation("injective", (i,), "currying identifies distinct classes"))
        for beta in rhs:
            alpha = c.uncurry(beta)
            if not SetoidMap(P, D, alpha).respects() or not all(
                    A.eq(h(alpha[e]), fp(e)) for e in range(P.n)):
                v.append(Violation("uncurry", (i, beta), "uncurried map is not a slice morphism"))
                continue
            again = c.curry(alpha)
            if not all(X.setoid.eq(p, q) for p, q in zip(again, beta)):
                v.append(Violation("inverse", (i, beta), "curry . uncurry is not the identity"))
    if morphisms is None:
        small = [i for i, f in enumerate(probes) if f.source.n <= 2]
        morphisms = [(i, j, m) for i in small for j in small for m in slice_morphisms(probes[i], probes[j])]
    # naturality: curry(alpha . (m x id)) == curry(alpha) . m
    for i, j, m in morphisms:
        ci, cj = cur[i], cur[j]
        fj = SetoidMap(cj.pullback, A, [probes[j](b) for b, _ in cj.pairs])
        for alpha in map_classes(cj.pullback, D, lambda e, d: A.eq(h(d), fj(e))):
            pulled = [alpha[cj.pairs.index((m(b), c))] for b, c in ci.pairs]
            lhs = ci.curry(pulled)
            rhs = [cj.curry(alpha)[m(b)] for b in range(probes[i].source.n)]
            if not all(X.setoid.eq(p, q) for p, q in zip(lhs, rhs)):
                v.append(Violation("natural", (i, j, m.fn, alpha), "currying square fails"))
    return LawReport(tuple(v))


# ---------------------------------------------------------------- setoid categories

def setoid_category(setoids: Sequence[FinSetoid], names: Sequence[str] | None = None) -> FinCategory:
    """Full subcategory of setoids on the given objects; every respecting
    function is an arrow, and arrows are equivalent when pointwise equal up to ≈."""
    names = list(names or [f"S{i}" for i in range(len(setoids))])
    arrows, keys, fns = [], [], []
    ids = []
    for i, x in enumerate(setoids):
        for j, y in enumerate(setoids):
            for fn in respecting_functions(x, y):
                if i == j and fn == tuple(range(x.n)):
                    ids.append(len(arrows))
                arrows.append(Arrow(i, j, f"{names[i]}>{names[j]}:" + "".join(map(str, fn))))
                keys.append((i, j) + tuple(y.cls[v] for v in fn))
                fns.append(fn)
    index = {(a.src, a.dst, fn): k for k, (a, fn) in enumerate(zip(arrows, fns))}
    comp = {}
    for f, (af, ff) in enumerate(zip(arrows, fns)):
        for g, (ag, fg) in enumerate(zip(arrows, fns)):
            if af.dst == ag.src:
                comp[(g, f)] = index[(af.src, ag.dst, tuple(fg[v] for v in ff))]
    return FinCategory(tuple(names), tuple(arrows), canonical_classes(keys), comp, tuple(ids))


# ---------------------------------------------------------------- presheaves and Yoneda

@dataclass(frozen=True)
class PresheafData:
    """``sets[x]`` per object; ``maps[f]`` sends ``sets[dst f]`` to ``sets[src f]``."""

    C: FinCategory
    sets: tuple[FinSetoid, ...]
    maps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        object.__setattr__(self, "maps", tuple(tuple(m) for m in self.maps))

    def act(self, f: int) -> SetoidMap:
        a = self.C.arrows[f]
        return SetoidMap(self.sets[a.dst], self.sets[a.src], self.maps[f])


def check_presheaf(P: PresheafData) -> LawReport:
    C = P.C
    if len(P.sets) != C.n_objects or len(P.maps) != C.n_arrows:
        raise StructuralError("presheaf needs one setoid per object and one map per arrow")
    v = []
    acts = []
    for f in range(C.n_arrows):
        try:
            m = P.act(f)
        except StructuralError as e:
            raise StructuralError(f"presheaf map at arrow {C.arrows[f].label}: {e}") from None
        acts.append(m)
        if not m.respects():
            v.append(Violation("respect", (f,), f"action of {C.arrows[f].label} does not respect"))
    for x, i in enumerate(C.identities):
        if not map_equiv(acts[i], identity_map(P.sets[x])):
            v.append(Violation("identity", (x,), f"identity at {C.objects[x]} acts nontrivially"))
    for (g, f), h in C.comp.items():
        # contravariant: P(g . f) == P(f) . P(g)
        if not map_equiv(acts[h], compose_maps(acts[f], acts[g])):
            v.append(Violation("composition", (g, f), "action does not reverse composition"))
    for f in range(C.n_arrows):
        for f2 in range(f):
            if C.eq_class[f] == C.eq_class[f2] and not map_equiv(acts[f], acts[f2]):
                v.append(Violation("resp", (f, f2), "equivalent arrows act differently"))
    return LawReport(tuple(v))


def representable(C: FinCategory, x: int) -> PresheafData:
    """``y(x) = Hom(-, x)``; element k of ``sets[y]`` is ``C.hom(y, x)[k]``."""
    homs = [C.hom(y, x) for y in range(C.n_objects)]
    sets = [FinSetoid(tuple(C.eq_class[f] for f in h)) for h in homs]
    maps = []
    for f, a in enumerate(C.arrows):
        target = homs[a.src]
        maps.append([target.index(compose(C, k, f)) for k in homs[a.dst]])
    return PresheafData(C, sets, maps)


def constant_presheaf(C: FinCategory, s: FinSetoid) -> PresheafData:
    return PresheafData(C, [s] * C.n_objects, [tuple(range(s.n))] * C.n_arrows)


def enumerate_nat_transfs(P: PresheafData, Q: PresheafData) -> list[tuple[tuple[int, ...], ...]]:
    """Natural families ``P => Q``, one per pointwise class (class-level choices)."""
    C = P.C
    order: dict[int, list[int]] = {}
    for f, a in enumerate(C.arrows):
        order.setdefault(max(a.src, a.dst), []).append(f)
    comps: list[tuple[int, ...]] = []
    out = []

    def natural_at(f):
        # tau_src . P(f) == Q(f) . tau_dst
        a = C.arrows[f]
        ts, td = comps[a.src], comps[a.dst]
        tgt = Q.sets[a.src]
        return all(tgt.eq(ts[P.maps[f][e]], Q.maps[f][td[e]]) for e in range(P.sets[a.dst].n))

    def go(x):
        if x == C.n_objects:
            out.append(tuple(comps))
            return
        for c in map_classes(P.sets[x], Q.sets[x]):
            comps.append(c)
            if all(natural_at(f) for f in order.get(x, ())):
                go(x + 1)
            comps.pop()

    go(0)
    return out


@dataclass(frozen=True)
class YonedaResult:
    x: int
    n_nat: int
    n_classes: int
    forward: tuple[int, ...]   # class of tau_x(id_x) for each enumerated family
    report: LawReport


def yoneda_check(C: FinCategory, F: PresheafData, x: int) -> YonedaResult:
    """``tau -> tau_x(id_x)`` and ``e -> (k -> F(k)(e))`` are inverse up to ≈,
    and natural in ``x``."""
    laws = check_presheaf(F)
    if not laws.passed:
        raise ValueError("presheaf fails its laws:\n" + laws.format())
    y = representable(C, x)
    nats = enumerate_nat_transfs(y, F)
    Fx = F.sets[x]
    id_pos = C.hom(x, x).index(C.identity(x))
    v = []
    forward = tuple(Fx.cls[t[x][id_pos]] for t in nats)
    if len(set(forward)) != len(nats):
        v.append(Violation("injective", (x,), "two families share a value at the identity"))
    if set(forward) != set(range(Fx.n_classes)):
        v.append(Violation("surjective", (x,), "some class of F x is not hit"))
    for e in Fx.reps():
        fam = tuple(tuple(F.maps[k][e] for k in C.hom(z, x)) for z in range(C.n_objects))
        match = [t for t in nats if all(F.sets[z].eq(p, q) for z in range(C.n_objects)
                                        for p, q in zip(t[z], fam[z]))]
        if len(match) != 1:
            v.append(Violation("backward", (x, e), f"family from element {e} matches {len(match)} enumerated families"))
        if not Fx.eq(fam[x][id_pos], e):
            v.append(Violation("round-trip", (x, e), "backward then forward moves the element"))
    # naturality in x: for f: x' -> x, tau(f) == F(f)(tau_x(id_x))
    for f in range(C.n_arrows):
        a = C.arrows[f]
        if a.dst != x:
            continue
        pos = C.hom(a.src, x).index(f)
        for t in nats:
            if not F.sets[a.src].eq(t[a.src][pos], F.maps[f][t[x][id_pos]]):
                v.append(Violation("natural-x", (f,), f"Yoneda square fails along {a.label}"))
    return YonedaResult(x, len(nats), Fx.n_classes, forward, LawReport(tuple(v)))


def standard_presheaves(C: FinCategory) -> list[PresheafData]:
    """All representables, plus constant presheaves at 1, discrete 2 and indiscrete 2."""
    return ([representable(C, x) for x in range(C.n_objects)]
            + [constant_presheaf(C, s) for s in (terminal_setoid(), discrete(2), indiscrete(2))])
