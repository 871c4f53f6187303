"""Adjunctions stored as unit/counit data, with the hom-set bijection derived.

Hom-set maps act on equivalence classes; a class is named by its least
arrow index (``FinCategory.rep``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .category import FinCategory, LawReport, StructuralError, Violation, compose, equiv
from .transfor import (
    FinFunctor,
    Monad,
    NatTrans,
    check_functor,
    check_natural,
    compose_functor,
    enumerate_nat_trans,
    id_functor,
    is_natural_iso,
    same_category,
    thin_functor,
)


class InternalConsistencyError(RuntimeError):
    """A derived structure failed a check that its inputs guarantee."""


class NotNaturalError(ValueError):
    """A hom-set family is not a natural bijection."""


@dataclass(frozen=True)
class Adjunction:
    F: FinFunctor   # C -> D, left adjoint
    G: FinFunctor   # D -> C
    unit: NatTrans  # id_C => G F
    counit: NatTrans  # F G => id_D

    @property
    def C(self) -> FinCategory:
        return self.F.source

    @property
    def D(self) -> FinCategory:
        return self.F.target


def make_adjunction(F: FinFunctor, G: FinFunctor, unit, counit) -> Adjunction:
    """Wrap raw component lists into the two transformations."""
    return Adjunction(
        F, G,
        NatTrans(id_functor(F.source), compose_functor(G, F), unit),
        NatTrans(compose_functor(F, G), id_functor(F.target), counit),
    )


def _check_endpoints(A: Adjunction):
    C, D = A.F.source, A.F.target
    if not (same_category(A.G.source, D) and same_category(A.G.target, C)):
        raise StructuralError("G must go D -> C when F goes C -> D")
    if A.unit.F != id_functor(C) or A.unit.G != compose_functor(A.G, A.F):
        raise StructuralError("unit must go id_C => G F")
    if A.counit.F != compose_functor(A.F, A.G) or A.counit.G != id_functor(D):
        raise StructuralError("counit must go F G => id_D")


def check_adjunction(A: Adjunction) -> LawReport:
    _check_endpoints(A)
    F, G, C, D = A.F, A.G, A.C, A.D
    report = (check_functor(F).prefixed("F") + check_functor(G).prefixed("G")
              + check_natural(A.unit).prefixed("unit") + check_natural(A.counit).prefixed("counit"))
    v = []
    for x in range(C.n_objects):
        fx = F.obj_map[x]
        lhs = compose(D, A.counit[fx], F.arr_map[A.unit[x]])
        if not equiv(D, lhs, D.identity(fx)):
            v.append(Violation("zig", (x,), f"counit_F . F(unit) != id at {C.objects[x]}"))
    for y in range(D.n_objects):
        gy = G.obj_map[y]
        lhs = compose(C, G.arr_map[A.counit[y]], A.unit[gy])
        if not equiv(C, lhs, C.identity(gy)):
            v.append(Violation("zag", (y,), f"G(counit) . unit_G != id at {D.objects[y]}"))
    return report + LawReport(tuple(v))


def thin_adjunction(F: FinFunctor, G: FinFunctor) -> Adjunction:
    """Unit and counit by least arrows; meant for categories whose hom-sets
    hold at most one class (posets and their thickenings)."""
    C, D = F.source, F.target

    def pick(cat, a, b):
        hom = cat.hom(a, b)
        if not hom:
            raise ValueError(f"no arrow {cat.objects[a]} -> {cat.objects[b]}")
        return hom[0]

    unit = [pick(C, x, G.obj_map[F.obj_map[x]]) for x in range(C.n_objects)]
    counit = [pick(D, F.obj_map[G.obj_map[y]], y) for y in range(D.n_objects)]
    return make_adjunction(F, G, unit, counit)


def galois_adjunction(C: FinCategory, D: FinCategory, left_obj_map, right_obj_map) -> Adjunction:
    return thin_adjunction(thin_functor(C, D, left_obj_map), thin_functor(D, C, right_obj_map))


def identity_adjunction(C: FinCategory) -> Adjunction:
    I = id_functor(C)
    ids = [C.identity(x) for x in range(C.n_objects)]
    return make_adjunction(I, I, ids, ids)


def find_adjunctions(F: FinFunctor, G: FinFunctor, limit: int | None = None) -> list[Adjunction]:
    """Search natural unit and counit families satisfying the triangle laws."""
    C, D = F.source, F.target
    GF, FG = compose_functor(G, F), compose_functor(F, G)
    units = enumerate_nat_trans(id_functor(C), GF)
    counits = enumerate_nat_trans(FG, id_functor(D))
    out = []
    for u, e in itertools.product(units, counits):
        A = Adjunction(F, G, u, e)
        if check_adjunction(A).passed:
            out.append(A)
            if limit is not None and len(out) >= limit:
                break
    return out


# ---------------------------------------------------------------- hom-set form

@dataclass(frozen=True)
class HomIsoFamily:
    """For each (X in C, Y in D): class bijection Hom(F X, Y) -> Hom(X, G Y)."""

    F: FinFunctor
    G: FinFunctor
    phi: dict   # (x, y) -> {class rep of Hom_D(F x, y): class rep of Hom_C(x, G y)}
    psi: dict   # inverse direction

    def forward(self, x: int, y: int, g: int) -> int:
        return self.phi[(x, y)][self.D.rep(g)]

    def backward(self, x: int, y: int, f: int) -> int:
        return self.psi[(x, y)][self.C.rep(f)]

    @property
    def C(self) -> FinCategory:
        return self.F.source

    @property
    def D(self) -> FinCategory:
        return self.F.target


def verify_hom_iso(fam: HomIsoFamily) -> LawReport:
    F, G, C, D = fam.F, fam.G, fam.C, fam.D
    v = []
    for x in range(C.n_objects):
        for y in range(D.n_objects):
            left = set(D.classes(F.obj_map[x], y))
            right = set(C.classes(x, G.obj_map[y]))
            phi, psi = fam.phi.get((x, y), {}), fam.psi.get((x, y), {})
            if set(phi) != left or set(psi) != right:
                v.append(Violation("domain", (x, y), "class map not total"))
                continue
            if any(phi[g] not in right for g in left) or any(psi[f] not in left for f in right):
                v.append(Violation("domain", (x, y), "class map leaves its codomain"))
                continue
            if any(psi[phi[g]] != g for g in left) or any(phi[psi[f]] != f for f in right):
                v.append(Violation("bijection", (x, y), "maps are not mutually inverse"))
    if v:
        return LawReport(tuple(v))
    # natural in X: phi(g . F h) = phi(g) . h for h: x' -> x
    for h, a in enumerate(C.arrows):
        x2, x = a.src, a.dst
        for y in range(D.n_objects):
            for g in D.classes(F.obj_map[x], y):
                lhs = fam.forward(x2, y, compose(D, g, F.arr_map[h]))
                rhs = compose(C, fam.forward(x, y, g), h)
                if not equiv(C, lhs, rhs):
                    v.append(Violation("natural-X", (h, y, g),
                                       f"square fails along {a.label} at {D.arrows[g].label}"))
    # natural in Y: phi(k . g) = G k . phi(g) for k: y -> y'
    for k, a in enumerate(D.arrows):
        y, y2 = a.src, a.dst
        for x in range(C.n_objects):
            for g in D.classes(F.obj_map[x], y):
                lhs = fam.forward(x, y2, compose(D, k, g))
                rhs = compose(C, G.arr_map[k], fam.forward(x, y, g))
                if not equiv(C, lhs, rhs):
                    v.append(Violation("natural-Y", (k, x, g),
                                       f"square fails along {a.label} at {D.arrows[g].label}"))
    return LawReport(tuple(v))


def hom_iso_of_adjunction(A: Adjunction) -> HomIsoFamily:
    F, G, C, D = A.F, A.G, A.C, A.D
    phi, psi = {}, {}
    for x in range(C.n_objects):
        for y in range(D.n_objects):
            fwd, bwd = {}, {}
            for g in D.hom(F.obj_map[x], y):
                img = C.rep(compose(C, G.arr_map[g], A.unit[x]))
                if fwd.setdefault(D.rep(g), img) != img:
                    raise InternalConsistencyError(f"phi not well defined on classes at {(x, y)}")
            for f in C.hom(x, G.obj_map[y]):
                img = D.rep(compose(D, A.counit[y], F.arr_map[f]))
                if bwd.setdefault(C.rep(f), img) != img:
                    raise InternalConsistencyError(f"psi not well defined on classes at {(x, y)}")
            phi[(x, y)], psi[(x, y)] = fwd, bwd
    fam = HomIsoFamily(F, G, phi, psi)
    report = verify_hom_iso(fam)
    if not report.passed:
        raise InternalConsistencyError("derived hom-set family fails:\n" + report.format())
    return fam


def adjunction_of_hom_iso(F: FinFunctor, G: FinFunctor, phi: HomIsoFamily) -> Adjunction:
    report = verify_hom_iso(phi)
    if not report.passed:
        first = report.violations[0]
        raise NotNaturalError(f"hom-set family rejected: [{first.law}] {first.message}")
    C, D = F.source, F.target
    unit = [phi.forward(x, F.obj_map[x], D.identity(F.obj_map[x])) for x in range(C.n_objects)]
    counit = [phi.backward(G.obj_map[y], y, C.identity(G.obj_map[y])) for y in range(D.n_objects)]
    A = make_adjunction(F, G, unit, counit)
    report = check_adjunction(A)
    if not report.passed:
        raise InternalConsistencyError("adjunction from natural bijection fails:\n" + report.format())
    return A


def hom_class_counts(A: Adjunction) -> dict[tuple[int, int], tuple[int, int]]:
    """(x, y) -> (#classes Hom(F x, y), #classes Hom(x, G y))."""
    return {
        (x, y): (len(A.D.classes(A.F.obj_map[x], y)), len(A.C.classes(x, A.G.obj_map[y])))
        for x in range(A.C.n_objects) for y in range(A.D.n_objects)
    }


# ---------------------------------------------------------------- mates

@dataclass(frozen=True)
class MateSetup:
    A: Adjunction       # F -| G
    A2: Adjunction      # F' -| G'
    alpha: NatTrans     # F => F'
    beta: NatTrans      # G' => G

    def __post_init__(self):
        A, A2 = self.A, self.A2
        if not (same_category(A.C, A2.C) and same_category(A.D, A2.D)):
            raise StructuralError("both adjunctions must share C and D")
        if self.alpha.F != A.F or self.alpha.G != A2.F:
            raise StructuralError("alpha must go F => F'")
        if self.beta.F != A2.G or self.beta.G != A.G:
            raise StructuralError("beta must go G' => G")


def _typed_or_raise(t: NatTrans, name: str):
    d = t.F.target
    for x, a in enumerate(t.components):
        if (d.src(a), d.dst(a)) != (t.F.obj_map[x], t.G.obj_map[x]):
            raise StructuralError(f"{name} component at object {x} has wrong endpoints")


def check_mate_unit_counit(m: MateSetup) -> LawReport:
    """G(alpha) . unit == beta_F' . unit'  and  counit' . alpha_G' == counit . F(beta)."""
    _typed_or_raise(m.alpha, "alpha")
    _typed_or_raise(m.beta, "beta")
    A, A2, C, D = m.A, m.A2, m.A.C, m.A.D
    v = []
    for x in range(C.n_objects):
        lhs = compose(C, A.G.arr_map[m.alpha[x]], A.unit[x])
        rhs = compose(C, m.beta[A2.F.obj_map[x]], A2.unit[x])
        if not equiv(C, lhs, rhs):
            v.append(Violation("unit-square", (x,), f"unit square fails at {C.objects[x]}"))
    for y in range(D.n_objects):
        lhs = compose(D, A2.counit[y], m.alpha[A2.G.obj_map[y]])
        rhs = compose(D, A.counit[y], A.F.arr_map[m.beta[y]])
        if not equiv(D, lhs, rhs):
            v.append(Violation("counit-square", (y,), f"counit square fails at {D.objects[y]}"))
    return LawReport(tuple(v))


def check_mate_hom_square(m: MateSetup) -> LawReport:
    """phi(g . alpha_X) == beta_Y . phi'(g) for every class g of Hom(F' X, Y)."""
    _typed_or_raise(m.alpha, "alpha")
    _typed_or_raise(m.beta, "beta")
    phi, phi2 = hom_iso_of_adjunction(m.A), hom_iso_of_adjunction(m.A2)
    C, D = m.A.C, m.A.D
    v = []
    for x in range(C.n_objects):
        for y in range(D.n_objects):
            for g in D.classes(m.A2.F.obj_map[x], y):
                lhs = phi.forward(x, y, compose(D, g, m.alpha[x]))
                rhs = compose(C, m.beta[y], phi2.forward(x, y, g))
                if not equiv(C, lhs, rhs):
                    v.append(Violation("hom-square", (x, y, g),
                                       f"hom square fails at ({C.objects[x]}, {D.objects[y]})"))
    return LawReport(tuple(v))


def is_adjoint_equivalence(A: Adjunction) -> bool:
    return is_natural_iso(A.unit) is not None and is_natural_iso(A.counit) is not None


def monad_of_adjunction(A: Adjunction) -> Monad:
    T = compose_functor(A.G, A.F)
    mu = [A.G.arr_map[A.counit[A.F.obj_map[x]]] for x in range(A.C.n_objects)]
    return Monad(A.C, T, A.unit, NatTrans(compose_functor(T, T), T, mu))
