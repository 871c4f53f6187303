import itertools
from math import gcd

import pytest

import oracles
from fincat.adjoint import InternalConsistencyError
from fincat.category import StructuralError, cyclic_table, equiv, product_category, standard_category
from fincat.fixtures import klein
from fincat.limits import RequiredStructureAbsent
from fincat.monoidal import (
    MonoidalStructure,
    check_closed_monoidal,
    check_monoidal,
    chain_min_monoidal,
    derive_associator_naturality,
    derive_tensor_hom_iso,
    heyting_chain2,
    monoid_closed,
    monoidal_from_products,
    perturb_alpha,
    reassociator,
    strict_monoid_monoidal,
    strict_z2_monoidal,
    thin_closed,
    thin_monoidal,
    z2_closed,
    z2_closed_mate_broken,
)
from fincat.transfor import FinFunctor, check_functor, check_natural, is_natural_iso

sc = standard_category


def structures():
    return {
        "strict_z2": strict_z2_monoidal(),
        "strict_z3": strict_monoid_monoidal(sc("monoid", cyclic_table(3))),
        "strict_klein": strict_monoid_monoidal(klein()),
        "chain4_min": chain_min_monoidal(4),
        "chain3_max": thin_monoidal(sc("chain", 3), 0, max),
        "chain4_products": monoidal_from_products(sc("chain", 4)),
        "divisors12_gcd": monoidal_from_products(sc("divisors", 12)),
        "one": monoidal_from_products(sc("one")),
        "chain3_x_two_reps": monoidal_from_products(product_category(sc("chain", 3), sc("two_reps"))),
    }


@pytest.mark.parametrize("name", sorted(structures()))
def test_structures_pass(name):
    M = structures()[name]
    r = check_monoidal(M)
    assert r.passed, r.format()
    nat = derive_associator_naturality(M)
    assert check_natural(nat).passed
    assert is_natural_iso(nat) is not None


def test_reassociator_is_a_functor():
    for C in (sc("z2"), sc("chain", 2), sc("walking_arrow")):
        assert check_functor(reassociator(C)).passed


def test_chain_min_equals_products():
    M, P = chain_min_monoidal(4), monoidal_from_products(sc("chain", 4))
    assert M.tensor.obj_map == P.tensor.obj_map
    assert all(equiv(M.C, M.alpha[k], P.alpha[k]) for k in M.alpha)


def test_alpha_perturbation_on_z2():
    M = strict_z2_monoidal()
    bad = perturb_alpha(M, (0, 0, 0), 1)
    assert check_monoidal(bad).laws() == {"triangle", "iso-alpha", "pentagon"}


def test_mistyped_component_is_typing():
    M = chain_min_monoidal(4)
    key = (3, 2, 1)
    wrong = next(f for f in range(M.C.n_arrows) if f != M.alpha[key])
    r = check_monoidal(perturb_alpha(M, key, wrong))
    assert r.laws() == {"typing"}
    assert any(v.where == ("alpha", 3, 2, 1) for v in r.violations)


def test_non_natural_unitor_caught():
    # z3 with lambda = generator: components are isos and typed, but the
    # triangle fails; an identity tensor of arrows keeps naturality intact
    M = strict_monoid_monoidal(sc("monoid", cyclic_table(3)))
    bad = MonoidalStructure(M.C, M.unit, M.tensor, (1,), (2,), M.rho, M.rho_inv, M.alpha, M.alpha_inv)
    laws = check_monoidal(bad).laws()
    assert "triangle" in laws and "iso-lambda" not in laws


def test_wrong_tensor_endpoints():
    M = strict_z2_monoidal()
    T = FinFunctor(sc("z2"), sc("z2"), [0], [0, 1])
    with pytest.raises(StructuralError):
        check_monoidal(MonoidalStructure(M.C, 0, T, M.lam, M.lam_inv, M.rho, M.rho_inv, M.alpha, M.alpha_inv))


def test_products_absent():
    with pytest.raises(RequiredStructureAbsent):
        monoidal_from_products(sc("parallel_pair"))


def test_tensor_of_divisors_is_gcd():
    d = sc("divisors", 12)
    M = monoidal_from_products(d)
    val = [int(o[1:]) for o in d.objects]
    for x, y in itertools.product(range(d.n_objects), repeat=2):
        assert val[M.t(x, y)] == gcd(val[x], val[y])
    assert val[M.unit] == 12


def _closed():
    return {
        "heyting_chain2": heyting_chain2(),
        "heyting_chain3": thin_closed(chain_min_monoidal(3), lambda x, y: y if x > y else 2),
        "z2": z2_closed(),
        "z3": monoid_closed(strict_monoid_monoidal(sc("monoid", cyclic_table(3))),
                            lambda f, g: (f + g) % 3),
    }


@pytest.mark.parametrize("name", sorted(_closed()))
def test_closed_fixtures(name):
    CM = _closed()[name]
    r = check_closed_monoidal(CM)
    assert r.passed, r.format()
    iso = derive_tensor_hom_iso(CM)
    C, M = CM.M.C, CM.M
    for x, y, z in itertools.product(range(C.n_objects), repeat=3):
        assert oracles.n_classes(C, M.t(y, x), z) == oracles.n_classes(C, y, CM.h(x, z))
        assert len(iso.phi[(x, y, z)]) == oracles.n_classes(C, M.t(y, x), z)


def test_non_residuated_hom_fails():
    # [x, y] = y is not right adjoint to meet on chain(2)
    with pytest.raises(ValueError):
        thin_closed(chain_min_monoidal(2), lambda x, y: y)


def test_mate_broken():
    CM = z2_closed_mate_broken()
    r = check_closed_monoidal(CM)
    assert r.laws() == {"mate:unit-square", "mate:counit-square"}
    assert all(v.where[0] == 1 for v in r.violations)   # only along g
    with pytest.raises(InternalConsistencyError):
        derive_tensor_hom_iso(CM)
    assert derive_tensor_hom_iso(CM, strict=False).report.laws() == {"natural-X"}


def test_inverse_hom_on_z3_breaks_mates():
    # [f, g] = g - f is a functor op(C) x C -> C, yet the unit square needs [f, e] = f
    CM = monoid_closed(strict_monoid_monoidal(sc("monoid", cyclic_table(3))), lambda f, g: (g - f) % 3)
    assert check_functor(CM.hom).passed
    assert check_closed_monoidal(CM).laws() == {"mate:unit-square", "mate:counit-square"}
    assert derive_tensor_hom_iso(CM, strict=False).report.laws() == {"natural-X"}
