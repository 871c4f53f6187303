"""Universal constructions in finite categories.

Every search quantifies over all objects of the (finite) category, so
"unique up to equivalence" is decided exactly.  Ties go to the least index.
Colimits come from running the limit finders on ``op(C)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .adjoint import Adjunction, InternalConsistencyError, check_adjunction, is_adjoint_equivalence
from .category import (
    Arrow,
    FinCategory,
    LawReport,
    StructuralError,
    Violation,
    compose,
    equiv,
    op,
    slice_over,
)
from .transfor import FinFunctor, compose_functor, same_category


class RequiredStructureAbsent(ValueError):
    """A product, equalizer or terminal object needed by a construction is missing."""


# ---------------------------------------------------------------- initial / terminal

@dataclass(frozen=True)
class UniversalObject:
    category: FinCategory
    kind: str              # "terminal" or "initial"
    obj: int
    arrows: tuple[int, ...]  # terminal: x -> obj; initial: obj -> x


def find_terminal(c: FinCategory) -> UniversalObject | None:
    for t in range(c.n_objects):
        chosen = []
        for x in range(c.n_objects):
            if len(c.classes(x, t)) != 1:
                break
            chosen.append(c.hom(x, t)[0])
        else:
            return UniversalObject(c, "terminal", t, tuple(chosen))
    return None


def terminal_to_initial_op(t: UniversalObject) -> UniversalObject:
    if t.kind != "terminal":
        raise ValueError("expected a terminal object")
    return UniversalObject(op(t.category), "initial", t.obj, t.arrows)


def initial_to_terminal_op(i: UniversalObject) -> UniversalObject:
    if i.kind != "initial":
        raise ValueError("expected an initial object")
    return UniversalObject(op(i.category), "terminal", i.obj, i.arrows)


def find_initial(c: FinCategory) -> UniversalObject | None:
    t = find_terminal(op(c))
    return None if t is None else terminal_to_initial_op(t)


# ---------------------------------------------------------------- products

@dataclass(frozen=True)
class Product:
    category: FinCategory
    a: int
    b: int
    obj: int
    p1: int
    p2: int

    def pair(self, z1: int, z2: int) -> int:
        c = self.category
        for h in c.hom(c.src(z1), self.obj):
            if equiv(c, compose(c, self.p1, h), z1) and equiv(c, compose(c, self.p2, h), z2):
                return h
        raise ValueError("legs do not factor through the product")


def _product_failures(c: FinCategory, a: int, b: int, p: int, p1: int, p2: int) -> list[Violation]:
    v = []
    for z in range(c.n_objects):
        for z1 in c.classes(z, a):
            for z2 in c.classes(z, b):
                hs = [h for h in c.hom(z, p)
                      if equiv(c, compose(c, p1, h), z1) and equiv(c, compose(c, p2, h), z2)]
                if not hs:
                    v.append(Violation("existence", (z, z1, z2), f"no pairing out of {c.objects[z]}"))
                elif any(not equiv(c, h, hs[0]) for h in hs):
                    v.append(Violation("uniqueness", (z, z1, z2), f"pairing out of {c.objects[z]} not unique"))
    return v


def check_product(c: FinCategory, a: int, b: int, p1: int, p2: int) -> LawReport:
    """Is (p1, p2) a product cone?  The pairing is synthesized, not supplied."""
    if c.src(p1) != c.src(p2) or c.dst(p1) != a or c.dst(p2) != b:
        raise StructuralError("projections must share a source and land in a and b")
    return LawReport(tuple(_product_failures(c, a, b, c.src(p1), p1, p2)))


def find_product(c: FinCategory, a: int, b: int) -> Product | None:
    for p in range(c.n_objects):
        for p1 in c.classes(p, a):
            for p2 in c.classes(p, b):
                if not _product_failures(c, a, b, p, p1, p2):
                    return Product(c, a, b, p, p1, p2)
    return None


def find_coproduct(c: FinCategory, a: int, b: int) -> Product | None:
    """Coproduct of ``a`` and ``b``, returned as a product in ``op(c)``."""
    return find_product(op(c), a, b)


# ---------------------------------------------------------------- equalizers

@dataclass(frozen=True)
class Equalizer:
    category: FinCategory
    f: int
    g: int
    obj: int
    arrow: int

    def factor(self, z: int) -> int:
        c = self.category
        for h in c.hom(c.src(z), self.obj):
            if equiv(c, compose(c, self.arrow, h), z):
                return h
        raise ValueError("arrow does not factor through the equalizer")


def _parallel(c: FinCategory, f: int, g: int):
    if (c.src(f), c.dst(f)) != (c.src(g), c.dst(g)):
        raise ValueError("equalizer needs parallel arrows")


def find_equalizer(c: FinCategory, f: int, g: int) -> Equalizer | None:
    _parallel(c, f, g)
    x = c.src(f)
    forks = {z: [k for k in c.classes(z, x) if equiv(c, compose(c, f, k), compose(c, g, k))]
             for z in range(c.n_objects)}
    for e_obj in range(c.n_objects):
        for e in forks[e_obj]:
            ok = True
            for z in range(c.n_objects):
                for k in forks[z]:
                    hs = [h for h in c.hom(z, e_obj) if equiv(c, compose(c, e, h), k)]
                    if not hs or any(not equiv(c, h, hs[0]) for h in hs):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return Equalizer(c, f, g, e_obj, e)
    return None


def find_coequalizer(c: FinCategory, f: int, g: int) -> Equalizer | None:
    return find_equalizer(op(c), f, g)


# ---------------------------------------------------------------- pullbacks

@dataclass(frozen=True)
class Pullback:
    category: FinCategory
    f: int
    g: int
    obj: int
    p1: int
    p2: int


def pullback_direct(c: FinCategory, f: int, g: int) -> Pullback | None:
    """Pullback by scanning every commuting square."""
    if c.dst(f) != c.dst(g):
        raise ValueError("pullback needs a cospan")
    x, y = c.src(f), c.src(g)

    def squares(z):
        return [(k1, k2) for k1 in c.classes(z, x) for k2 in c.classes(z, y)
                if equiv(c, compose(c, f, k1), compose(c, g, k2))]

    sq = {z: squares(z) for z in range(c.n_objects)}
    for p in range(c.n_objects):
        for p1, p2 in sq[p]:
            ok = True
            for z in range(c.n_objects):
                for k1, k2 in sq[z]:
                    hs = [h for h in c.hom(z, p)
                          if equiv(c, compose(c, p1, h), k1) and equiv(c, compose(c, p2, h), k2)]
                    if not hs or any(not equiv(c, h, hs[0]) for h in hs):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return Pullback(c, f, g, p, p1, p2)
    return None


def _pullback_via_slice(c: FinCategory, f: int, g: int) -> Pullback | None:
    s = slice_over(c, c.dst(f))
    i = s.objects.index((c.src(f), c.rep(f)))
    j = s.objects.index((c.src(g), c.rep(g)))
    prod = find_product(s.category, i, j)
    if prod is None:
        return None
    return Pullback(c, f, g, s.objects[prod.obj][0], s.arrows[prod.p1][2], s.arrows[prod.p2][2])


def pullbacks_agree(c: FinCategory, a: Pullback | None, b: Pullback | None) -> bool:
    """Both absent, or connected by an isomorphism commuting with the legs."""
    if a is None or b is None:
        return a is None and b is None

    def mediate(into: Pullback, frm: Pullback):
        for h in c.hom(frm.obj, into.obj):
            if equiv(c, compose(c, into.p1, h), frm.p1) and equiv(c, compose(c, into.p2, h), frm.p2):
                return h
        return None

    h, k = mediate(b, a), mediate(a, b)
    return (h is not None and k is not None
            and equiv(c, compose(c, k, h), c.identity(a.obj))
            and equiv(c, compose(c, h, k), c.identity(b.obj)))


def find_pullback(c: FinCategory, f: int, g: int) -> Pullback | None:
    """Pullback computed as a product in the slice over the common target,
    cross-checked against a direct scan."""
    if c.dst(f) != c.dst(g):
        raise ValueError("pullback needs a cospan")
    via_slice = _pullback_via_slice(c, f, g)
    direct = pullback_direct(c, f, g)
    if not pullbacks_agree(c, via_slice, direct):
        raise InternalConsistencyError("slice-product pullback and direct scan disagree")
    return via_slice


# ---------------------------------------------------------------- general limits

@dataclass(frozen=True)
class Cone:
    diagram: FinFunctor
    apex: int
    legs: tuple[int, ...]

    def key(self) -> tuple:
        c = self.diagram.target
        return (self.apex, tuple(c.rep(a) for a in self.legs))


@dataclass(frozen=True)
class LimitData:
    cone: Cone
    mediator: Mapping[tuple, int]  # cone key -> factorizing arrow

    @property
    def apex(self) -> int:
        return self.cone.apex

    @property
    def legs(self) -> tuple[int, ...]:
        return self.cone.legs

    def mediate(self, cone: Cone) -> int:
        return self.mediator[cone.key()]


def cone_violations(cone: Cone) -> list[Violation]:
    D = cone.diagram
    J, c = D.source, D.target
    v = []
    for j, a in enumerate(cone.legs):
        if (c.src(a), c.dst(a)) != (cone.apex, D.obj_map[j]):
            v.append(Violation("leg-typing", (j,), f"leg at {J.objects[j]} has wrong endpoints"))
    if v:
        return v
    for f, a in enumerate(J.arrows):
        if not equiv(c, compose(c, D.arr_map[f], cone.legs[a.src]), cone.legs[a.dst]):
            v.append(Violation("cone", (f,), f"leg triangle fails along {a.label}"))
    return v


def enumerate_cones(D: FinFunctor, apex: int | None = None) -> list[Cone]:
    """Every cone over ``D`` with legs chosen among class representatives."""
    J, c = D.source, D.target
    triangles: dict[int, list[int]] = {}
    for f, a in enumerate(J.arrows):
        triangles.setdefault(max(a.src, a.dst), []).append(f)
    apexes = range(c.n_objects) if apex is None else [apex]
    out = []
    for x in apexes:
        legs: list[int] = []

        def go(j):
            if j == J.n_objects:
                out.append(Cone(D, x, tuple(legs)))
                return
            for leg in c.classes(x, D.obj_map[j]):
                legs.append(leg)
                if all(equiv(c, compose(c, D.arr_map[f], legs[J.src(f)]), legs[J.dst(f)])
                       for f in triangles.get(j, ())):
                    go(j + 1)
                legs.pop()

        go(0)
    return out


def verify_limit(cone: Cone, cones: list[Cone] | None = None) -> tuple[LawReport, dict]:
    """Full universality scan: every cone factors through ``cone``, uniquely up to equivalence."""
    v = cone_violations(cone)
    if v:
        return LawReport(tuple(v)), {}
    c = cone.diagram.target
    if cones is None:
        cones = enumerate_cones(cone.diagram)
    mediator = {}
    for k in cones:
        hs = [h for h in c.hom(k.apex, cone.apex)
              if all(equiv(c, compose(c, leg, h), kl) for leg, kl in zip(cone.legs, k.legs))]
        if not hs:
            v.append(Violation("existence", k.key(), f"cone at {c.objects[k.apex]} does not factor"))
        elif any(not equiv(c, h, hs[0]) for h in hs):
            v.append(Violation("uniqueness", k.key(), f"cone at {c.objects[k.apex]} factors twice"))
        else:
            mediator[k.key()] = hs[0]
    return LawReport(tuple(v)), mediator


def brute_force_limit(D: FinFunctor) -> LimitData | None:
    """Oracle: try every cone as a candidate limit, least apex first."""
    c = D.target
    cones = enumerate_cones(D)
    for cand in cones:
        mediator = {}
        for k in cones:
            factorizations = []
            for h in c.hom(k.apex, cand.apex):
                if all(equiv(c, compose(c, cand.legs[j], h), k.legs[j]) for j in range(len(k.legs))):
                    factorizations.append(h)
            if not factorizations or len({c.eq_class[h] for h in factorizations}) != 1:
                break
            mediator[k.key()] = factorizations[0]
        else:
            return LimitData(cand, mediator)
    return None


def compare_limits(a: LimitData, b: LimitData) -> LawReport:
    """Check the canonical comparison arrows are inverse isos commuting with legs."""
    c = a.cone.diagram.target
    v = []
    h = b.mediator.get(a.cone.key())
    k = a.mediator.get(b.cone.key())
    if h is None or k is None:
        return LawReport((Violation("comparison", (), "limits do not factor through each other"),))
    if not equiv(c, compose(c, k, h), c.identity(a.apex)):
        v.append(Violation("iso", (a.apex,), "k.h is not the identity"))
    if not equiv(c, compose(c, h, k), c.identity(b.apex)):
        v.append(Violation("iso", (b.apex,), "h.k is not the identity"))
    for j, (la, lb) in enumerate(zip(a.legs, b.legs)):
        if not equiv(c, compose(c, lb, h), la):
            v.append(Violation("legs", (j,), "comparison does not commute with leg"))
    return LawReport(tuple(v))


@dataclass(frozen=True)
class _IteratedProduct:
    apex: int
    projections: tuple[int, ...]
    steps: tuple[Product, ...]
    terminal: UniversalObject | None

    def pair(self, c: FinCategory, z: int, legs: list[int]) -> int:
        if not legs:
            return self.terminal.arrows[z]
        h = legs[0]
        for prod, leg in zip(self.steps, legs[1:]):
            h = prod.pair(h, leg)
        return h


def iterated_product(c: FinCategory, objs: list[int]) -> _IteratedProduct:
    """Left-nested binary products ``((o0 x o1) x o2) ...``; terminal when empty."""
    if not objs:
        t = find_terminal(c)
        if t is None:
            raise RequiredStructureAbsent("terminal object (empty product) is missing")
        return _IteratedProduct(t.obj, (), (), t)
    apex, projs, steps = objs[0], [c.identity(objs[0])], []
    for o in objs[1:]:
        p = find_product(c, apex, o)
        if p is None:
            raise RequiredStructureAbsent(
                f"product of {c.objects[apex]} and {c.objects[o]} is missing")
        projs = [compose(c, q, p.p1) for q in projs] + [p.p2]
        steps.append(p)
        apex = p.obj
    return _IteratedProduct(apex, tuple(projs), tuple(steps), None)


def limit_from_products_equalizers(D: FinFunctor) -> LimitData:
    """Limit as the equalizer of ``s, t: prod_j D(j) -> prod_{f: a->b} D(b)``,
    with ``s`` projecting to ``D(b)`` and ``t`` going through ``D(f)``."""
    J, c = D.source, D.target
    P = iterated_product(c, [D.obj_map[j] for j in range(J.n_objects)])
    nonid = [f for f, a in enumerate(J.arrows)
             if not (a.src == a.dst and equiv(J, f, J.identity(a.src)))]
    Q = iterated_product(c, [D.obj_map[J.dst(f)] for f in nonid])
    s = Q.pair(c, P.apex, [P.projections[J.dst(f)] for f in nonid])
    t = Q.pair(c, P.apex, [compose(c, D.arr_map[f], P.projections[J.src(f)]) for f in nonid])
    eq = find_equalizer(c, s, t)
    if eq is None:
        raise RequiredStructureAbsent("equalizer of the two comparison arrows is missing")
    cone = Cone(D, eq.obj, tuple(compose(c, P.projections[j], eq.arrow) for j in range(J.n_objects)))
    report, mediator = verify_limit(cone)
    if not report.passed:
        raise InternalConsistencyError("constructed cone is not universal:\n" + report.format())
    return LimitData(cone, mediator)


def transport_limit(E: Adjunction, L: FinFunctor, lim: LimitData) -> LimitData:
    """Limit of ``L . F`` from a limit of ``L``, where ``F`` is the functor of
    the adjoint equivalence ``E`` landing in the domain of ``L``."""
    if not is_adjoint_equivalence(E) or not check_adjunction(E).passed:
        raise ValueError("transport needs an adjoint equivalence")
    if same_category(E.F.target, L.source):
        K = E.F
    elif same_category(E.G.target, L.source):
        K = E.G
    else:
        raise ValueError("equivalence does not land in the diagram's shape")
    LK = compose_functor(L, K)
    cone = Cone(LK, lim.apex, tuple(lim.legs[K.obj_map[j]] for j in range(K.source.n_objects)))
    report, mediator = verify_limit(cone)
    if not report.passed:
        raise InternalConsistencyError("transported cone is not universal:\n" + report.format())
    return LimitData(cone, mediator)


# ---------------------------------------------------------------- finite shapes

@dataclass(frozen=True)
class FinDiagramShape:
    """Objects ``0..n-1`` and morphisms ``0..hom_size[a][b]-1``.

    ``comp[(a, b, c, g, f)]`` is the index in ``Hom(a, c)`` of ``g . f`` for
    ``f`` in ``Hom(a, b)`` and ``g`` in ``Hom(b, c)``.
    """

    n: int
    hom_size: tuple[tuple[int, ...], ...]
    comp: Mapping[tuple[int, int, int, int, int], int]
    identities: tuple[int, ...]

    def arrow_list(self) -> list[tuple[int, int, int]]:
        return [(a, b, k) for a in range(self.n) for b in range(self.n)
                for k in range(self.hom_size[a][b])]

    def to_category(self) -> FinCategory:
        if len(self.hom_size) != self.n or any(len(r) != self.n for r in self.hom_size):
            raise StructuralError("hom_size must be an n x n table")
        arrows = self.arrow_list()
        index = {a: i for i, a in enumerate(arrows)}
        comp = {}
        for (a, b, c, g, f), h in self.comp.items():
            try:
                comp[(index[(b, c, g)], index[(a, b, f)])] = index[(a, c, h)]
            except KeyError:
                raise StructuralError(f"composition entry {(a, b, c, g, f)} -> {h} out of range") from None
        try:
            ids = tuple(index[(a, a, self.identities[a])] for a in range(self.n))
        except (KeyError, IndexError):
            raise StructuralError("identity designation out of range") from None
        return FinCategory(
            objects=tuple(f"o{a}" for a in range(self.n)),
            arrows=tuple(Arrow(a, b, f"m{a}_{b}_{k}") for a, b, k in arrows),
            eq_class=tuple(range(len(arrows))),
            comp=comp,
            identities=ids,
        )


def shape_of(c: FinCategory) -> FinDiagramShape:
    """The finite-diagram presentation of a category whose classes are singletons."""
    if len(set(c.eq_class)) != c.n_arrows:
        raise ValueError("finite diagrams use index equality; classes must be singletons")
    pos = {}
    for a in range(c.n_objects):
        for b in range(c.n_objects):
            for k, f in enumerate(c.hom(a, b)):
                pos[f] = k
    comp = {(c.src(f), c.dst(f), c.dst(g), pos[g], pos[f]): pos[h] for (g, f), h in c.comp.items()}
    return FinDiagramShape(
        c.n_objects,
        tuple(tuple(len(c.hom(a, b)) for b in range(c.n_objects)) for a in range(c.n_objects)),
        comp,
        tuple(pos[i] for i in c.identities),
    )


def check_fin_diagram(s: FinDiagramShape) -> LawReport:
    # singleton classes make the law check use index equality
    from .category import check_category_laws
    return check_category_laws(s.to_category())


@dataclass(frozen=True)
class FiniteWitness:
    shape: FinDiagramShape
    adjequiv: Adjunction


def check_finite_witness(c: FinCategory, w: FiniteWitness) -> LawReport:
    report = check_fin_diagram(w.shape).prefixed("shape")
    s = w.shape.to_category()
    A = w.adjequiv
    if not ((same_category(A.F.source, c) and same_category(A.F.target, s))
            or (same_category(A.F.source, s) and same_category(A.F.target, c))):
        return report + LawReport((Violation("endpoints", (), "adjunction does not connect C and the shape"),))
    try:
        report += check_adjunction(A).prefixed("adjunction")
    except StructuralError as e:
        return report + LawReport((Violation("adjunction:typing", (), str(e)),))
    if not is_adjoint_equivalence(A):
        report += LawReport((Violation("adjoint-equivalence", (), "unit or counit is not a natural isomorphism"),))
    return report
