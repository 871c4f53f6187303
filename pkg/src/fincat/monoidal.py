"""Monoidal and closed monoidal structure on finite categories.

The associator is kept componentwise, with naturality imposed by two squares:
one moving the left pair ``(f (x) g) (x) id`` and one moving the right
component ``id (x) (id (x) h)``.  By functoriality of the tensor the two
together give naturality in all three variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .adjoint import (
    Adjunction,
    InternalConsistencyError,
    MateSetup,
    check_adjunction,
    check_mate_unit_counit,
    hom_iso_of_adjunction,
    thin_adjunction,
    make_adjunction,
)
from .category import (
    FinCategory,
    LawReport,
    StructuralError,
    Violation,
    compose,
    compose_path,
    equiv,
    op,
    product_category,
    standard_category,
)
from .limits import Product, RequiredStructureAbsent, UniversalObject, find_product, find_terminal
from .transfor import (
    FinFunctor,
    NatTrans,
    check_functor,
    check_natural,
    compose_functor,
    id_functor,
    is_natural_iso,
    product_functor,
    same_category,
    thin_functor,
)


@dataclass(frozen=True)
class MonoidalStructure:
    C: FinCategory
    unit: int
    tensor: FinFunctor             # product_category(C, C) -> C
    lam: tuple[int, ...]           # u (x) X -> X
    lam_inv: tuple[int, ...]
    rho: tuple[int, ...]           # X (x) u -> X
    rho_inv: tuple[int, ...]
    alpha: Mapping[tuple[int, int, int], int]      # (X (x) Y) (x) Z -> X (x) (Y (x) Z)
    alpha_inv: Mapping[tuple[int, int, int], int]

    def __post_init__(self):
        for name in ("lam", "lam_inv", "rho", "rho_inv"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "alpha", dict(self.alpha))
        object.__setattr__(self, "alpha_inv", dict(self.alpha_inv))

    def __hash__(self):
        return hash((self.C, self.unit, self.tensor, self.lam, self.rho))

    def t(self, x: int, y: int) -> int:
        """Tensor of two objects."""
        return self.tensor.obj_map[x * self.C.n_objects + y]

    def ta(self, f: int, g: int) -> int:
        """Tensor of two arrows."""
        return self.tensor.arr_map[f * self.C.n_arrows + g]


def _expect(c, f, a, b):
    return c.src(f) == a and c.dst(f) == b


def _typing(M: MonoidalStructure) -> list[Violation]:
    C, u, n = M.C, M.unit, M.C.n_objects
    v = []
    if not 0 <= u < n:
        return [Violation("typing", (), "unit out of range")]
    for name, arr, ends in (
        ("lambda", M.lam, lambda x: (M.t(u, x), x)),
        ("lambda-inv", M.lam_inv, lambda x: (x, M.t(u, x))),
        ("rho", M.rho, lambda x: (M.t(x, u), x)),
        ("rho-inv", M.rho_inv, lambda x: (x, M.t(x, u))),
    ):
        if len(arr) != n:
            v.append(Violation("typing", (name,), f"{name} needs one component per object"))
            continue
        for x in range(n):
            if not 0 <= arr[x] < C.n_arrows or not _expect(C, arr[x], *ends(x)):
                v.append(Violation("typing", (name, x), f"{name} component at {C.objects[x]} mistyped"))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs, rhs = M.t(M.t(x, y), z), M.t(x, M.t(y, z))
                for name, table, ends in (("alpha", M.alpha, (lhs, rhs)), ("alpha-inv", M.alpha_inv, (rhs, lhs))):
                    f = table.get((x, y, z))
                    if f is None or not 0 <= f < C.n_arrows or not _expect(C, f, *ends):
                        v.append(Violation("typing", (name, x, y, z), f"{name} component mistyped or missing"))
    return v


def check_monoidal(M: MonoidalStructure) -> LawReport:
    C = M.C
    if not (same_category(M.tensor.source, product_category(C, C)) and same_category(M.tensor.target, C)):
        raise StructuralError("tensor must be a functor C x C -> C")
    report = check_functor(M.tensor).prefixed("tensor")
    typing = _typing(M)
    if typing:
        return report + LawReport(tuple(typing))
    n, u = C.n_objects, M.unit
    ident = C.identity
    v = []

    def iso(law, where, f, g, a, b):
        if not (equiv(C, compose(C, g, f), ident(a)) and equiv(C, compose(C, f, g), ident(b))):
            v.append(Violation(law, where, "component is not inverse to its partner"))

    for x in range(n):
        iso("iso-lambda", (x,), M.lam[x], M.lam_inv[x], M.t(u, x), x)
        iso("iso-rho", (x,), M.rho[x], M.rho_inv[x], M.t(x, u), x)
    for key, f in M.alpha.items():
        x, y, z = key
        iso("iso-alpha", key, f, M.alpha_inv[key], M.t(M.t(x, y), z), M.t(x, M.t(y, z)))

    for f, a in enumerate(C.arrows):
        if not equiv(C, compose(C, f, M.lam[a.src]), compose(C, M.lam[a.dst], M.ta(ident(u), f))):
            v.append(Violation("natural-lambda", (f,), f"lambda square fails along {a.label}"))
        if not equiv(C, compose(C, f, M.rho[a.src]), compose(C, M.rho[a.dst], M.ta(f, ident(u)))):
            v.append(Violation("natural-rho", (f,), f"rho square fails along {a.label}"))

    # left pair: alpha . ((f (x) g) (x) id_z) == (f (x) (g (x) id_z)) . alpha
    for f, a in enumerate(C.arrows):
        for g, b in enumerate(C.arrows):
            for z in range(n):
                iz = ident(z)
                lhs = compose(C, M.alpha[(a.dst, b.dst, z)], M.ta(M.ta(f, g), iz))
                rhs = compose(C, M.ta(f, M.ta(g, iz)), M.alpha[(a.src, b.src, z)])
                if not equiv(C, lhs, rhs):
                    v.append(Violation("natural-alpha-left", (f, g, z),
                                       f"associator square fails along ({a.label}, {b.label}) at {C.objects[z]}"))
    # right component: alpha . ((id (x) id) (x) h) == (id (x) (id (x) h)) . alpha
    for x in range(n):
        for y in range(n):
            ix, iy = ident(x), ident(y)
            for h, c in enumerate(C.arrows):
                lhs = compose(C, M.alpha[(x, y, c.dst)], M.ta(M.ta(ix, iy), h))
                rhs = compose(C, M.ta(ix, M.ta(iy, h)), M.alpha[(x, y, c.src)])
                if not equiv(C, lhs, rhs):
                    v.append(Violation("natural-alpha-right", (x, y, h),
                                       f"associator square fails along {c.label}"))

    # triangle: (id_x (x) lambda_y) . alpha_{x,u,y} == rho_x (x) id_y
    for x in range(n):
        for y in range(n):
            lhs = compose(C, M.ta(ident(x), M.lam[y]), M.alpha[(x, u, y)])
            if not equiv(C, lhs, M.ta(M.rho[x], ident(y))):
                v.append(Violation("triangle", (x, y), f"triangle fails at ({C.objects[x]}, {C.objects[y]})"))

    # pentagon
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(n):
                    lhs = compose(C, M.alpha[(x, y, M.t(z, w))], M.alpha[(M.t(x, y), z, w)])
                    rhs = compose_path(
                        C,
                        M.ta(ident(x), M.alpha[(y, z, w)]),
                        M.alpha[(x, M.t(y, z), w)],
                        M.ta(M.alpha[(x, y, z)], ident(w)),
                    )
                    if not equiv(C, lhs, rhs):
                        v.append(Violation("pentagon", (x, y, z, w), "pentagon fails at "
                                           + ", ".join(C.objects[i] for i in (x, y, z, w))))
    return report + LawReport(tuple(v))


def reassociator(C: FinCategory) -> FinFunctor:
    """The isomorphism ``C x (C x C) -> (C x C) x C`` of product categories."""
    n, m = C.n_objects, C.n_arrows
    CC = product_category(C, C)
    src = product_category(C, CC)
    dst = product_category(CC, C)
    return FinFunctor(
        src, dst,
        [(x * n + y) * n + z for x in range(n) for y in range(n) for z in range(n)],
        [(f * m + g) * m + h for f in range(m) for g in range(m) for h in range(m)],
    )


def derive_associator_naturality(M: MonoidalStructure) -> NatTrans:
    """The associator as a natural isomorphism ``(- (x) -) (x) - . r => - (x) (- (x) -)``,
    with ``r`` the reassociator of product categories."""
    C = M.C
    n = C.n_objects
    I = id_functor(C)
    left = compose_functor(M.tensor, product_functor(M.tensor, I))
    right = compose_functor(M.tensor, product_functor(I, M.tensor))
    r = reassociator(C)
    comps = [M.alpha[(x, y, z)] for x in range(n) for y in range(n) for z in range(n)]
    t = NatTrans(compose_functor(left, r), right, comps)
    report = check_natural(t)
    if not report.passed or is_natural_iso(t) is None:
        raise InternalConsistencyError("associator is not a natural isomorphism:\n" + report.format())
    return t


# ---------------------------------------------------------------- constructions

def monoidal_from_products(C: FinCategory, products: Mapping[tuple[int, int], Product] | None = None,
                           terminal: UniversalObject | None = None) -> MonoidalStructure:
    """Cartesian monoidal structure from chosen binary products and a terminal object."""
    n = C.n_objects
    if terminal is None:
        terminal = find_terminal(C)
    if terminal is None:
        raise RequiredStructureAbsent("terminal object is missing")
    prods = dict(products or {})
    for a in range(n):
        for b in range(n):
            if (a, b) not in prods:
                p = find_product(C, a, b)
                if p is None:
                    raise RequiredStructureAbsent(f"product of {C.objects[a]} and {C.objects[b]} is missing")
                prods[(a, b)] = p
    CC = product_category(C, C)
    obj_map = [prods[(a, b)].obj for a in range(n) for b in range(n)]
    arr_map = []
    for f, fa in enumerate(C.arrows):
        for g, ga in enumerate(C.arrows):
            src, dst = prods[(fa.src, ga.src)], prods[(fa.dst, ga.dst)]
            arr_map.append(dst.pair(compose(C, f, src.p1), compose(C, g, src.p2)))
    tensor = FinFunctor(CC, C, obj_map, arr_map)
    u, bang, ident = terminal.obj, terminal.arrows, C.identity

    lam = [prods[(u, x)].p2 for x in range(n)]
    lam_inv = [prods[(u, x)].pair(bang[x], ident(x)) for x in range(n)]
    rho = [prods[(x, u)].p1 for x in range(n)]
    rho_inv = [prods[(x, u)].pair(ident(x), bang[x]) for x in range(n)]
    alpha, alpha_inv = {}, {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                xy, yz = prods[(x, y)], prods[(y, z)]
                l, r = prods[(xy.obj, z)], prods[(x, yz.obj)]
                alpha[(x, y, z)] = r.pair(
                    compose(C, xy.p1, l.p1),
                    yz.pair(compose(C, xy.p2, l.p1), l.p2),
                )
                alpha_inv[(x, y, z)] = l.pair(
                    xy.pair(r.p1, compose(C, yz.p1, r.p2)),
                    compose(C, yz.p2, r.p2),
                )
    M = MonoidalStructure(C, u, tensor, lam, lam_inv, rho, rho_inv, alpha, alpha_inv)
    report = check_monoidal(M)
    if not report.passed:
        raise InternalConsistencyError("cartesian structure fails:\n" + report.format())
    return M


def thin_monoidal(C: FinCategory, unit: int, tensor_obj) -> MonoidalStructure:
    """Monoidal structure on a thin category from an object-level tensor; all
    structure maps are least arrows."""
    n = C.n_objects
    CC = product_category(C, C)
    tensor = thin_functor(CC, C, [tensor_obj(x, y) for x in range(n) for y in range(n)])

    def arrow(a, b):
        hom = C.hom(a, b)
        if not hom:
            raise ValueError(f"no arrow {C.objects[a]} -> {C.objects[b]}")
        return hom[0]

    t = lambda x, y: tensor.obj_map[x * n + y]
    trip = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]
    return MonoidalStructure(
        C, unit, tensor,
        [arrow(t(unit, x), x) for x in range(n)], [arrow(x, t(unit, x)) for x in range(n)],
        [arrow(t(x, unit), x) for x in range(n)], [arrow(x, t(x, unit)) for x in range(n)],
        {k: arrow(t(t(k[0], k[1]), k[2]), t(k[0], t(k[1], k[2]))) for k in trip},
        {k: arrow(t(k[0], t(k[1], k[2])), t(t(k[0], k[1]), k[2])) for k in trip},
    )


def chain_min_monoidal(n: int = 4) -> MonoidalStructure:
    """``chain(n)`` with meet as tensor and the top as unit."""
    return thin_monoidal(standard_category("chain", n), n - 1, min)


def strict_monoid_monoidal(C: FinCategory) -> MonoidalStructure:
    """A commutative one-object category as a strict monoidal category: the
    tensor of arrows is their composite."""
    if C.n_objects != 1:
        raise ValueError("expected a one-object category")
    CC = product_category(C, C)
    tensor = FinFunctor(CC, C, [0], [compose(C, f, g) for f in range(C.n_arrows) for g in range(C.n_arrows)])
    e = C.identity(0)
    return MonoidalStructure(C, 0, tensor, [e], [e], [e], [e], {(0, 0, 0): e}, {(0, 0, 0): e})


def strict_z2_monoidal() -> MonoidalStructure:
    return strict_monoid_monoidal(standard_category("z2"))


def perturb_alpha(M: MonoidalStructure, key: tuple[int, int, int], arrow: int) -> MonoidalStructure:
    alpha = dict(M.alpha)
    alpha[key] = arrow
    return MonoidalStructure(M.C, M.unit, M.tensor, M.lam, M.lam_inv, M.rho, M.rho_inv, alpha, M.alpha_inv)


# ---------------------------------------------------------------- closed structure

@dataclass(frozen=True)
class ClosedMonoidalStructure:
    M: MonoidalStructure
    hom: FinFunctor                  # product_category(op(C), C) -> C
    adj: tuple[Adjunction, ...]      # adj[x]: (- (x) x) -| [x, -]

    def __post_init__(self):
        object.__setattr__(self, "adj", tuple(self.adj))

    def h(self, x: int, y: int) -> int:
        return self.hom.obj_map[x * self.M.C.n_objects + y]

    def ha(self, f: int, g: int) -> int:
        """``[f, g]`` for ``f`` read as an arrow of ``op(C)``."""
        return self.hom.arr_map[f * self.M.C.n_arrows + g]


def tensor_right(M: MonoidalStructure, x: int) -> FinFunctor:
    """``- (x) x``."""
    C = M.C
    return FinFunctor(C, C, [M.t(y, x) for y in range(C.n_objects)],
                      [M.ta(f, C.identity(x)) for f in range(C.n_arrows)])


def hom_left(M: MonoidalStructure, hom: FinFunctor, x: int) -> FinFunctor:
    """``[x, -]``."""
    C = M.C
    n, m = C.n_objects, C.n_arrows
    return FinFunctor(C, C, [hom.obj_map[x * n + z] for z in range(n)],
                      [hom.arr_map[C.identity(x) * m + g] for g in range(m)])


def mate_setup(CM: ClosedMonoidalStructure, f: int) -> MateSetup:
    """For ``f: X -> Y``: ``(alpha_f)_Z = id_Z (x) f`` and ``(beta_f)_Z = [f, id_Z]``."""
    C = CM.M.C
    x, y = C.src(f), C.dst(f)
    A, A2 = CM.adj[x], CM.adj[y]
    alpha = NatTrans(A.F, A2.F, [CM.M.ta(C.identity(z), f) for z in range(C.n_objects)])
    beta = NatTrans(A2.G, A.G, [CM.ha(f, C.identity(z)) for z in range(C.n_objects)])
    return MateSetup(A, A2, alpha, beta)


def check_closed_monoidal(CM: ClosedMonoidalStructure) -> LawReport:
    M, C = CM.M, CM.M.C
    if not (same_category(CM.hom.source, product_category(op(C), C)) and same_category(CM.hom.target, C)):
        raise StructuralError("internal hom must be a functor op(C) x C -> C")
    if len(CM.adj) != C.n_objects:
        raise StructuralError("one adjunction per object required")
    report = check_monoidal(M).prefixed("monoidal") + check_functor(CM.hom).prefixed("hom")
    v = []
    adj_ok = []
    for x, A in enumerate(CM.adj):
        if A.F != tensor_right(M, x) or A.G != hom_left(M, CM.hom, x):
            v.append(Violation("adjunction-endpoints", (x,), f"adj at {C.objects[x]} is not (- (x) X) -| [X, -]"))
            adj_ok.append(False)
            continue
        try:
            sub = check_adjunction(A)
        except StructuralError as e:
            v.append(Violation("adjunction:typing", (x,), str(e)))
            adj_ok.append(False)
            continue
        report += LawReport(tuple(Violation("adjunction:" + w.law, (x,) + w.where, w.message)
                                  for w in sub.violations))
        adj_ok.append(True)
    for f, a in enumerate(C.arrows):
        if not (adj_ok[a.src] and adj_ok[a.dst]):
            continue
        try:
            sub = check_mate_unit_counit(mate_setup(CM, f))
        except StructuralError as e:
            v.append(Violation("mate:typing", (f,), str(e)))
            continue
        v.extend(Violation("mate:" + w.law, (f,) + w.where, f"along {a.label}: {w.message}")
                 for w in sub.violations)
    return report + LawReport(tuple(v))


@dataclass(frozen=True)
class TensorHomIso:
    """Class bijections ``Hom(Y (x) X, Z) -> Hom(Y, [X, Z])`` keyed by ``(x, y, z)``."""

    CM: ClosedMonoidalStructure
    phi: Mapping[tuple[int, int, int], Mapping[int, int]]
    report: LawReport

    def forward(self, x: int, y: int, z: int, g: int) -> int:
        return self.phi[(x, y, z)][self.CM.M.C.rep(g)]


def derive_tensor_hom_iso(CM: ClosedMonoidalStructure, strict: bool = True) -> TensorHomIso:
    """Bijections from each adjunction; squares in ``Y`` and ``Z`` come from the
    adjunction, squares in ``X`` from the mate condition.  All three families
    are checked exhaustively and reported under ``natural-X/Y/Z``."""
    M, C = CM.M, CM.M.C
    n = C.n_objects
    fams = [hom_iso_of_adjunction(A) for A in CM.adj]
    phi = {(x, y, z): dict(fams[x].phi[(y, z)]) for x in range(n) for y in range(n) for z in range(n)}
    v = []
    for (x, y, z), mp in phi.items():
        left, right = C.classes(M.t(y, x), z), C.classes(y, CM.h(x, z))
        if len(left) != len(right) or sorted(mp.values()) != sorted(right):
            v.append(Violation("cardinality", (x, y, z), "class counts differ"))

    def fwd(x, y, z, g):
        return phi[(x, y, z)][C.rep(g)]

    # Y: phi(g . (k (x) id_x)) == phi(g) . k  for k: y' -> y
    for k, a in enumerate(C.arrows):
        for x in range(n):
            for z in range(n):
                for g in C.classes(M.t(a.dst, x), z):
                    lhs = fwd(x, a.src, z, compose(C, g, M.ta(k, C.identity(x))))
                    rhs = compose(C, fwd(x, a.dst, z, g), k)
                    if not equiv(C, lhs, rhs):
                        v.append(Violation("natural-Y", (k, x, z, g), f"square fails along {a.label}"))
    # Z: phi(k . g) == [x, k] . phi(g)  for k: z -> z'
    for k, a in enumerate(C.arrows):
        for x in range(n):
            for y in range(n):
                for g in C.classes(M.t(y, x), a.src):
                    lhs = fwd(x, y, a.dst, compose(C, k, g))
                    rhs = compose(C, CM.ha(C.identity(x), k), fwd(x, y, a.src, g))
                    if not equiv(C, lhs, rhs):
                        v.append(Violation("natural-Z", (k, x, y, g), f"square fails along {a.label}"))
    # X: phi_x(g . (id_y (x) f)) == [f, z] . phi_x'(g)  for f: x -> x'
    for f, a in enumerate(C.arrows):
        for y in range(n):
            for z in range(n):
                for g in C.classes(M.t(y, a.dst), z):
                    lhs = fwd(a.src, y, z, compose(C, g, M.ta(C.identity(y), f)))
                    rhs = compose(C, CM.ha(f, C.identity(z)), fwd(a.dst, y, z, g))
                    if not equiv(C, lhs, rhs):
                        v.append(Violation("natural-X", (f, y, z, g), f"square fails along {a.label}"))
    report = LawReport(tuple(v))
    if strict and not report.passed:
        raise InternalConsistencyError("tensor-hom bijection fails:\n" + report.format())
    return TensorHomIso(CM, phi, report)


def thin_closed(M: MonoidalStructure, hom_obj) -> ClosedMonoidalStructure:
    """Closed structure on a thin monoidal category from an object-level internal hom."""
    C = M.C
    n = C.n_objects
    src = product_category(op(C), C)
    hom = thin_functor(src, C, [hom_obj(x, y) for x in range(n) for y in range(n)])
    adj = [thin_adjunction(tensor_right(M, x), hom_left(M, hom, x)) for x in range(n)]
    return ClosedMonoidalStructure(M, hom, adj)


def heyting_chain2() -> ClosedMonoidalStructure:
    """``chain(2)`` with meet and ``[x, y] = y if x > y else top``."""
    M = chain_min_monoidal(2)
    return thin_closed(M, lambda x, y: y if x > y else 1)


def monoid_closed(M: MonoidalStructure, hom_arr) -> ClosedMonoidalStructure:
    """Closed structure on a one-object strict monoidal category; the internal
    hom is given on arrows and every adjunction has identity unit and counit."""
    C = M.C
    m = C.n_arrows
    hom = FinFunctor(product_category(op(C), C), C, [0],
                     [hom_arr(f, g) for f in range(m) for g in range(m)])
    e = C.identity(0)
    adj = [make_adjunction(tensor_right(M, 0), hom_left(M, hom, 0), [e], [e])]
    return ClosedMonoidalStructure(M, hom, adj)


def z2_closed() -> ClosedMonoidalStructure:
    """Strict ``z2`` with ``[a, b] = a b``."""
    M = strict_z2_monoidal()
    return monoid_closed(M, lambda f, g: compose(M.C, f, g))


def z2_closed_mate_broken() -> ClosedMonoidalStructure:
    """Same adjunctions, but ``[a, b] = b`` ignores the contravariant slot, so
    the mate condition fails for the non-identity arrow."""
    return monoid_closed(strict_z2_monoidal(), lambda f, g: g)
