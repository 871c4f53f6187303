"""Named fixture corpora used by the tests and the experiment scripts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from math import gcd

from .adjoint import (
    Adjunction,
    MateSetup,
    check_adjunction,
    galois_adjunction,
    identity_adjunction,
    make_adjunction,
)
from .category import (
    Arrow,
    FinCategory,
    cyclic_table,
    graph_category,
    op,
    product_category,
    slice_category,
    standard_category,
)
from .transfor import (
    FinFunctor,
    Monad,
    NatTrans,
    compose_functor,
    constant_functor,
    functor_category,
    id_functor,
    identity_monad,
    inverse_arrow,
    kleisli_category,
    thin_functor,
)


def closure_monad(c: FinCategory, top: int) -> Monad:
    """Constant monad ``T = top`` on a thin category in which ``top`` is terminal."""
    T = constant_functor(c, c, top)
    eta = [c.hom(x, top)[0] for x in range(c.n_objects)]
    return Monad(c, T, NatTrans(id_functor(c), T, eta),
                 NatTrans(compose_functor(T, T), T, [c.identity(top)] * c.n_objects))


def klein() -> FinCategory:
    z2 = standard_category("z2")
    return product_category(z2, z2)


def law_fixtures() -> dict[str, FinCategory]:
    """Every fixture category the law suite runs over."""
    sc = standard_category
    d12 = sc("divisors", 12)
    out = {
        "empty": sc("discrete", 0),
        "one": sc("one"),
        "discrete3": sc("discrete", 3),
        "walking_arrow": sc("walking_arrow"),
        "parallel_pair": sc("parallel_pair"),
        "cospan": sc("cospan"),
        "span": sc("span"),
        "commutative_square": sc("commutative_square"),
        "iso_pair": sc("iso_pair"),
        "two_reps": sc("two_reps"),
        "z2": sc("z2"),
        "z3": sc("monoid", cyclic_table(3)),
        "klein": klein(),
        "divisors12": d12,
    }
    for n in range(1, 6):
        out[f"chain{n}"] = sc("chain", n)
    out["functor_cat_arrow_z2"] = functor_category(sc("walking_arrow"), sc("z2"))
    out["functor_cat_disc2_arrow"] = functor_category(sc("discrete", 2), sc("walking_arrow"))
    out["functor_cat_arrow_chain3"] = functor_category(sc("walking_arrow"), sc("chain", 3))
    out["kleisli_closure_d12"] = kleisli_category(closure_monad(d12, d12.n_objects - 1))
    out["kleisli_identity_two_reps"] = kleisli_category(identity_monad(sc("two_reps")))
    out["kleisli_identity_z2"] = kleisli_category(identity_monad(sc("z2")))
    out["op_square"] = op(sc("commutative_square"))
    out["arrow_squared"] = product_category(sc("walking_arrow"), sc("walking_arrow"))
    out["slice_two_reps_b"] = slice_category(sc("two_reps"), 1)
    return out


# ---------------------------------------------------------------- mutants

@dataclass(frozen=True)
class Mutant:
    name: str
    category: FinCategory
    law: str
    where: tuple          # expected location (compared as a set for "resp")


def _with(c: FinCategory, comp=None, drop=(), identities=None, eq_class=None) -> FinCategory:
    table = dict(c.comp)
    for k in drop:
        del table[k]
    table.update(comp or {})
    return replace(c, comp=table,
                   identities=c.identities if identities is None else identities,
                   eq_class=c.eq_class if eq_class is None else eq_class)


def _raw_monoid(table) -> FinCategory:
    n = len(table)
    return FinCategory(("*",), tuple(Arrow(0, 0, f"m{i}") for i in range(n)), tuple(range(n)),
                       {(g, f): table[g][f] for g in range(n) for f in range(n)}, (0,))


def mutants() -> list[Mutant]:
    """Hand-built perturbations with the violation each one must produce.

    Arrow indices: z2 (e=0, g=1); walking_arrow (id_a, id_b, u); iso_pair
    (id_a, id_b, i, j); parallel_pair (id_a, id_b, s, t); commutative_square
    (ids 0-3, f, g, h, k, diag); chain3 pairs (0,0) (0,1) (0,2) (1,1) (1,2) (2,2);
    span (ids 0-2, p, q); two_reps (id_a, id_b, f1, f2).
    """
    sc = standard_category
    z2, wa, iso = sc("z2"), sc("walking_arrow"), sc("iso_pair")
    pp, sq, ch3 = sc("parallel_pair"), sc("commutative_square"), sc("chain", 3)
    tr, sp, one, z3 = sc("two_reps"), sc("span"), sc("one"), sc("monoid", cyclic_table(3))
    kl = klein()
    resp_cat = graph_category(
        ["a", "b", "c"], [("f1", 0, 1), ("f2", 0, 1), ("h", 1, 2), ("k1", 0, 2), ("k2", 0, 2)],
        {("h", "f1"): "k1", ("h", "f2"): "k2"}, classes=[0, 1, 2, 3, 3, 4, 5, 6])
    z3_bad1 = [row[:] for row in cyclic_table(3)]
    z3_bad1[1][1] = 0
    z3_bad2 = [row[:] for row in cyclic_table(3)]
    z3_bad2[2][2] = 0
    left_proj = [[0, 1, 2], [1, 1, 1], [2, 2, 1]]   # b.(a.b) != (b.a).b
    return [
        Mutant("z2 g.e=e", _with(z2, {(1, 0): 0}), "identity-right", (1,)),
        Mutant("z2 e.g=e", _with(z2, {(0, 1): 0}), "identity-left", (1,)),
        Mutant("z2 e.e=g", _with(z2, {(0, 0): 1}), "identity-squared", (0,)),
        Mutant("arrow missing id_b.u", _with(wa, drop=[(1, 2)]), "typing", (1, 2)),
        Mutant("arrow u.u defined", _with(wa, {(2, 2): 2}), "typing", (2, 2)),
        Mutant("arrow u.id_a=id_a", _with(wa, {(2, 0): 0}), "typing", (2, 0)),
        Mutant("arrow u as identity of b", _with(wa, identities=(0, 2)), "typing", (1,)),
        Mutant("arrow ids equivalent", _with(wa, eq_class=(0, 0, 1)), "eq-typing", (0, 1)),
        Mutant("iso_pair missing j.i", _with(iso, drop=[(3, 2)]), "typing", (3, 2)),
        Mutant("iso_pair identities swapped", _with(iso, identities=(1, 0)), "typing", (0,)),
        Mutant("square missing k.g", _with(sq, drop=[(7, 5)]), "typing", (7, 5)),
        Mutant("square f~g", _with(sq, eq_class=(0, 1, 2, 3, 4, 4, 5, 6, 7)), "eq-typing", (4, 5)),
        Mutant("two_reps split f1.f2 and id_b.f1=f2", _with(tr, {(1, 2): 3}, eq_class=(0, 1, 2, 3)),
               "identity-left", (2,)),
        Mutant("two_reps f2~id_a", _with(tr, eq_class=(0, 1, 2, 0)), "eq-typing", (0, 3)),
        Mutant("parallel id_b.s=t", _with(pp, {(1, 2): 3}), "identity-left", (2,)),
        Mutant("parallel s.id_a=t", _with(pp, {(2, 0): 3}), "identity-right", (2,)),
        Mutant("z3 m1.m1=e", _raw_monoid(z3_bad1), "assoc", (1, 1, 2)),
        Mutant("z3 m2.m2=e", _raw_monoid(z3_bad2), "assoc", (2, 2, 1)),
        Mutant("non-associative table", _raw_monoid(left_proj), "assoc", (2, 1, 2)),
        Mutant("chain3 c1_c2.c0_c1 mistyped", _with(ch3, {(4, 1): 1}), "typing", (4, 1)),
        Mutant("chain3 missing id.id", _with(ch3, drop=[(5, 5)]), "typing", (5, 5)),
        Mutant("one without composition", _with(one, drop=[(0, 0)]), "typing", (0, 0)),
        Mutant("klein (e,g)^2=(e,g)", _with(kl, {(1, 1): 1}), "assoc", (1, 1, 2)),
        Mutant("span p.id_o=q", _with(sp, {(3, 0): 4}), "typing", (3, 0)),
        Mutant("composite ignores classes", resp_cat, "resp", (3, 4, 5)),
    ]


def z2_semilattice_table() -> FinCategory:
    """``{e, g}`` with ``g.g = g``: a valid category (the two-element semilattice)."""
    return _with(standard_category("z2"), {(1, 1): 1})


# ---------------------------------------------------------------- adjunctions

def doubling_floor() -> Adjunction:
    """``x -> 2x`` from chain(2) to chain(4), left adjoint to ``y -> y // 2``."""
    c2, c4 = standard_category("chain", 2), standard_category("chain", 4)
    return galois_adjunction(c2, c4, [0, 2], [0, 0, 1, 1])


def galois_fixtures() -> dict[str, Adjunction]:
    sc = standard_category
    c2, c3 = sc("chain", 2), sc("chain", 3)
    d6, d12 = sc("divisors", 6), sc("divisors", 12)
    divs6 = [1, 2, 3, 6]
    divs12 = [1, 2, 3, 4, 6, 12]
    c2sq = product_category(c2, c2)
    return {
        "doubling_floor": doubling_floor(),
        "identity_chain3": identity_adjunction(c3),
        "divisor_inclusion_gcd": galois_adjunction(
            d6, d12, [divs12.index(d) for d in divs6], [divs6.index(gcd(y, 6)) for y in divs12]),
        "terminal_chain3": galois_adjunction(c3, sc("one"), [0, 0, 0], [2]),
        "initial_chain3": galois_adjunction(sc("one"), c3, [0], [0, 0, 0]),
        "diagonal_meet": galois_adjunction(c2, c2sq, [0, 3], [min(p // 2, p % 2) for p in range(4)]),
    }


def all_galois_adjunctions(C: FinCategory, D: FinCategory) -> list[Adjunction]:
    """All Galois connections between two posets (thin, monotone maps)."""
    out = []
    for fo in itertools.product(range(D.n_objects), repeat=C.n_objects):
        try:
            thin_functor(C, D, fo)
        except ValueError:
            continue
        for go in itertools.product(range(C.n_objects), repeat=D.n_objects):
            try:
                A = galois_adjunction(C, D, fo, go)
            except ValueError:
                continue
            if check_adjunction(A).passed:
                out.append(A)
    return out


def twisted_identity_adjunction(M: FinCategory, c: int) -> Adjunction:
    """Identity adjunction on a commutative one-object category with unit ``c``
    and counit ``c^-1``."""
    inv = inverse_arrow(M, c)
    I = id_functor(M)
    return make_adjunction(I, I, [c], [inv])


def typed_families(F: FinFunctor, G: FinFunctor) -> list[NatTrans]:
    """Every component family ``F => G`` with the right endpoints (natural or not)."""
    D = F.target
    choices = [D.hom(F.obj_map[x], G.obj_map[x]) for x in range(F.source.n_objects)]
    return [NatTrans(F, G, comps) for comps in itertools.product(*choices)]


def mate_candidates(adjs: list[Adjunction]) -> list[MateSetup]:
    """All (A, A', alpha, beta) with typed component families."""
    out = []
    for A, A2 in itertools.product(adjs, repeat=2):
        for alpha in typed_families(A.F, A2.F):
            for beta in typed_families(A2.G, A.G):
                out.append(MateSetup(A, A2, alpha, beta))
    return out


def monoid_mate_candidates(M: FinCategory) -> list[MateSetup]:
    units = [u for u in range(M.n_arrows) if inverse_arrow(M, u) is not None]
    return mate_candidates([twisted_identity_adjunction(M, u) for u in units])


# ---------------------------------------------------------------- equivalences

def iso_pair_to_one() -> Adjunction:
    """``F: iso_pair -> one`` with ``G(*) = a``; unit ``(id_a, j)``, counit ``id``."""
    J2, J = standard_category("iso_pair"), standard_category("one")
    F = FinFunctor(J2, J, [0, 0], [0] * J2.n_arrows)
    G = FinFunctor(J, J2, [0], [0])
    return make_adjunction(F, G, [0, 3], [0])


def projection_equivalence(J: FinCategory) -> Adjunction:
    """``iso_pair x J -> J`` projecting away a contractible factor; ``G`` embeds at ``a``."""
    iso = standard_category("iso_pair")
    P = product_category(iso, J)
    n, m = J.n_objects, J.n_arrows
    F = FinFunctor(P, J, [x % n for x in range(P.n_objects)], [f % m for f in range(P.n_arrows)])
    G = FinFunctor(J, P, [x for x in range(n)], [f for f in range(m)])   # (a, x) and (id_a, f)
    # unit at (p, x): (p, x) -> (a, x) is (id_a, id_x) or (j, id_x)
    unit = [(0 if x // n == 0 else 3) * m + J.identity(x % n) for x in range(P.n_objects)]
    counit = [J.identity(y) for y in range(n)]
    return make_adjunction(F, G, unit, counit)


def equivalence_fixtures() -> dict[str, Adjunction]:
    sc = standard_category
    return {
        "identity_cospan": identity_adjunction(sc("cospan")),
        "iso_pair_one": iso_pair_to_one(),
        "iso_pair_x_cospan": projection_equivalence(sc("cospan")),
    }


def limit_categories() -> dict[str, FinCategory]:
    """Categories with all finite products and equalizers (necessarily thin up to ≈)."""
    sc = standard_category
    return {
        "chain4": sc("chain", 4),
        "divisors12": sc("divisors", 12),
        "chain3_x_two_reps": product_category(sc("chain", 3), sc("two_reps")),
    }


def limit_shapes() -> dict[str, FinCategory]:
    sc = standard_category
    return {
        "empty": sc("discrete", 0),
        "discrete2": sc("discrete", 2),
        "parallel_pair": sc("parallel_pair"),
        "cospan": sc("cospan"),
        "commutative_square": sc("commutative_square"),
    }
