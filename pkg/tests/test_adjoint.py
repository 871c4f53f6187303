import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fincat.adjoint import (
    HomIsoFamily,
    MateSetup,
    NotNaturalError,
    adjunction_of_hom_iso,
    check_adjunction,
    check_mate_hom_square,
    check_mate_unit_counit,
    find_adjunctions,
    galois_adjunction,
    hom_iso_of_adjunction,
    identity_adjunction,
    is_adjoint_equivalence,
    make_adjunction,
    monad_of_adjunction,
    thin_adjunction,
    verify_hom_iso,
)
from fincat.category import StructuralError, cyclic_table, standard_category
from fincat.fixtures import (
    all_galois_adjunctions,
    doubling_floor,
    galois_fixtures,
    twisted_identity_adjunction,
    typed_families,
)
from fincat.transfor import NatTrans, check_monad, id_functor, id_nat, thin_functor

sc = standard_category


def monotone_maps(n, m):
    return [f for f in itertools.product(range(m), repeat=n)
            if all(f[i] <= f[i + 1] for i in range(n - 1))]


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_chain_adjoints_match_order_theory(n, m, data):
    """A monotone F between chains has a right adjoint iff it preserves joins
    (here: the least element and binary max); G(y) = max{x : F x <= y}."""
    F = data.draw(st.sampled_from(monotone_maps(n, m)))
    C, D = sc("chain", n), sc("chain", m)
    G = [max((x for x in range(n) if F[x] <= y), default=None) for y in range(m)]
    has_right = None not in G
    for go in monotone_maps(m, n):
        A = galois_adjunction(C, D, F, go) if _adjoint(F, go) else None
        assert (A is not None) == (tuple(go) == tuple(G))
        if A is not None:
            assert check_adjunction(A).passed
    found = find_adjunctions(thin_functor(C, D, F), thin_functor(D, C, G)) if has_right else []
    assert bool(found) == has_right


def _adjoint(F, G):
    return all((F[x] <= y) == (x <= G[y]) for x in range(len(F)) for y in range(len(G)))


def test_galois_rejects_non_adjoint():
    with pytest.raises(ValueError):
        galois_adjunction(sc("chain", 2), sc("chain", 4), [0, 2], [0, 1, 1, 1])


def test_doubling_floor():
    A = doubling_floor()
    assert check_adjunction(A).passed
    assert A.F.obj_map == (0, 2) and A.G.obj_map == (0, 0, 1, 1)


def test_counit_swap_breaks_triangle():
    # identity adjunction on z2 with unit e and counit g
    z2 = sc("z2")
    I = id_functor(z2)
    A = make_adjunction(I, I, [0], [1])
    laws = check_adjunction(A).laws()
    assert laws and laws <= {"zig", "zag"}


def test_twisted_identity_passes():
    z3 = sc("monoid", cyclic_table(3))
    for c in range(3):
        assert check_adjunction(twisted_identity_adjunction(z3, c)).passed


def test_adjunction_endpoint_errors():
    z2 = sc("z2")
    I = id_functor(z2)
    with pytest.raises((StructuralError, ValueError)):
        make_adjunction(I, id_functor(sc("one")), [0], [0])


@pytest.mark.parametrize("name", sorted(galois_fixtures()))
def test_hom_iso_round_trip(name):
    A = galois_fixtures()[name]
    fam = hom_iso_of_adjunction(A)
    assert verify_hom_iso(fam).passed
    B = adjunction_of_hom_iso(A.F, A.G, fam)
    assert B.unit.components == A.unit.components
    assert B.counit.components == A.counit.components


def test_non_natural_family_rejected():
    z3 = sc("monoid", cyclic_table(3))
    A3 = identity_adjunction(z3)
    fam3 = hom_iso_of_adjunction(A3)
    # phi(g) = g^2 is a bijection on Hom(*, *) but not natural
    bad = HomIsoFamily(A3.F, A3.G, {(0, 0): {0: 0, 1: 2, 2: 1}}, {(0, 0): {0: 0, 1: 2, 2: 1}})
    assert verify_hom_iso(fam3).passed
    assert not verify_hom_iso(bad).passed
    with pytest.raises(NotNaturalError):
        adjunction_of_hom_iso(A3.F, A3.G, bad)


def test_monad_of_adjunction():
    for A in galois_fixtures().values():
        assert check_monad(monad_of_adjunction(A)).passed
    assert check_monad(monad_of_adjunction(twisted_identity_adjunction(sc("z2"), 1))).passed


def test_equivalence_detection():
    assert is_adjoint_equivalence(identity_adjunction(sc("cospan")))
    assert not is_adjoint_equivalence(doubling_floor())


def test_thin_adjunction_from_functors():
    A = doubling_floor()
    B = thin_adjunction(A.F, A.G)
    assert check_adjunction(B).passed


def test_mate_setup_typing():
    A = doubling_floor()
    with pytest.raises(StructuralError):
        MateSetup(A, A, id_nat(A.G), id_nat(A.G))


def test_mate_sweep_small():
    adjs = all_galois_adjunctions(sc("chain", 2), sc("chain", 2))
    pairs = [(F, G) for F in monotone_maps(2, 2) for G in monotone_maps(2, 2) if _adjoint(F, G)]
    assert len(adjs) == len(pairs) == 2
    for A, A2 in itertools.product(adjs, repeat=2):
        for alpha in typed_families(A.F, A2.F):
            for beta in typed_families(A2.G, A.G):
                m = MateSetup(A, A2, alpha, beta)
                assert check_mate_unit_counit(m).passed == check_mate_hom_square(m).passed


def test_mate_failure_on_group():
    z3 = sc("monoid", cyclic_table(3))
    A, A2 = twisted_identity_adjunction(z3, 1), twisted_identity_adjunction(z3, 2)
    I = id_functor(z3)
    verdicts = {}
    for a, b in itertools.product(range(3), repeat=2):
        m = MateSetup(A, A2, NatTrans(I, I, [a]), NatTrans(I, I, [b]))
        verdicts[(a, b)] = check_mate_unit_counit(m).passed
        assert verdicts[(a, b)] == check_mate_hom_square(m).passed
    # alpha . 1 == beta . 2 in Z/3, i.e. a == b + 1
    assert verdicts == {(a, b): (a - b) % 3 == 1 for a, b in verdicts}
