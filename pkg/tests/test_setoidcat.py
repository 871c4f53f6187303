import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fincat.category import StructuralError, check_category_laws, standard_category
from fincat.limits import find_product, find_pullback
from fincat.setoidcat import (
    FinSetoid,
    PresheafData,
    SetoidMap,
    all_setoids,
    check_inverse_image_map,
    check_presheaf,
    compose_maps,
    constant_presheaf,
    discrete,
    enumerate_nat_transfs,
    equalizer_setoid,
    exponential_setoid,
    identity_map,
    indiscrete,
    inverse_image,
    inverse_image_map_transport,
    map_classes,
    map_equiv,
    product_setoid,
    representable,
    respecting_functions,
    setoid_category,
    slice_exponential,
    terminal_setoid,
    verify_equalizer,
    verify_exponential,
    verify_lcc,
    verify_product,
    yoneda_check,
)

BELL = [1, 1, 2, 5, 15]

setoids = st.integers(0, 3).flatmap(
    lambda n: st.lists(st.integers(0, n), min_size=n, max_size=n).map(lambda c: FinSetoid(tuple(c))))
small_setoids = st.integers(0, 2).flatmap(
    lambda n: st.lists(st.integers(0, n), min_size=n, max_size=n).map(lambda c: FinSetoid(tuple(c))))


def naive_map_classes(x, y):
    fns = [fn for fn in itertools.product(range(y.n), repeat=x.n)
           if all(y.cls[fn[a]] == y.cls[fn[b]] for a in range(x.n) for b in range(x.n) if x.cls[a] == x.cls[b])]
    return {tuple(y.cls[v] for v in fn) for fn in fns}


def test_probe_family_sizes():
    for k in range(5):
        assert len(list(all_setoids(k))) == sum(BELL[: k + 1])
    assert len(set(all_setoids(3))) == 9


def test_canonical_classes():
    assert FinSetoid((5, 5, 2)) == FinSetoid((0, 0, 1))
    assert FinSetoid((1, 0, 1)).reps() == (0, 1)
    assert indiscrete(3).n_classes == 1 and discrete(3).n_classes == 3


@given(setoids, setoids)
def test_map_classes_vs_naive(x, y):
    got = map_classes(x, y)
    assert {tuple(y.cls[v] for v in fn) for fn in got} == naive_map_classes(x, y)
    assert len(got) == len(naive_map_classes(x, y))
    assert all(SetoidMap(x, y, fn).respects() for fn in got)
    assert len(respecting_functions(x, y)) >= len(got)


def test_non_respecting_map():
    m = SetoidMap(indiscrete(2), discrete(2), (0, 1))
    assert not m.respects()
    with pytest.raises(StructuralError):
        SetoidMap(discrete(2), discrete(2), (0, 2))


@given(setoids, setoids, setoids)
def test_composition_respects(x, y, z):
    fs, gs = map_classes(x, y), map_classes(y, z)
    if fs and gs:
        f, g = SetoidMap(x, y, fs[-1]), SetoidMap(y, z, gs[0])
        h = compose_maps(g, f)
        assert h.respects()
        assert map_equiv(compose_maps(identity_map(z), h), h)


@given(small_setoids, small_setoids)
def test_product_universal(x, y):
    P = product_setoid(x, y)
    assert P.setoid.n == x.n * y.n
    assert P.setoid.n_classes == x.n_classes * y.n_classes
    assert verify_product(x, y, k=2).passed


@given(small_setoids, small_setoids)
def test_exponential_universal(x, y):
    E = exponential_setoid(x, y)
    assert E.setoid.n_classes == y.n_classes ** x.n_classes
    assert verify_exponential(x, y, k=2).passed


@given(setoids, small_setoids, st.data())
def test_equalizer_universal(x, a, data):
    fs = map_classes(x, a)
    if not fs:
        return
    f = SetoidMap(x, a, data.draw(st.sampled_from(fs)))
    g = SetoidMap(x, a, data.draw(st.sampled_from(fs)))
    E = equalizer_setoid(f, g)
    assert E.setoid.n == sum(a.eq(f(e), g(e)) for e in range(x.n))
    assert verify_equalizer(f, g, k=2).passed


def test_equalizer_needs_parallel():
    f = SetoidMap(discrete(1), discrete(1), (0,))
    g = SetoidMap(discrete(1), discrete(2), (0,))
    with pytest.raises(ValueError):
        equalizer_setoid(f, g)


def test_fiber_example_and_entries():
    A = discrete(2)
    g = SetoidMap(discrete(2), A, (0, 1))
    h = SetoidMap(discrete(3), A, (0, 0, 1))
    X = slice_exponential(A, g, h)
    assert X.setoid.n == 3
    assert [e.mapping for e in X.entries] == [(0,), (1,), (2,)]
    for e in X.entries:
        assert check_inverse_image_map(e).passed


def test_inverse_image_up_to_equivalence():
    A = FinSetoid((0, 0, 1))
    f = SetoidMap(discrete(3), A, (0, 1, 2))
    assert inverse_image(0, f).elements == (0, 1)
    assert inverse_image(1, f).elements == (0, 1)
    with pytest.raises(ValueError):
        from fincat.setoidcat import inverse_image_transport
        inverse_image_transport(2, inverse_image(0, f))


def test_incoherent_fiber_map_rejected():
    A = indiscrete(2)
    g = SetoidMap(FinSetoid((0, 0)), A, (0, 1))
    h = SetoidMap(discrete(2), A, (0, 1))
    from fincat.setoidcat import InverseImageMap
    m = InverseImageMap(0, g, h, (0, 1))
    assert check_inverse_image_map(m).laws() == {"coherence"}
    with pytest.raises(ValueError):
        inverse_image_map_transport(1, m)


def test_representative_choice_does_not_matter():
    A = indiscrete(2)
    g = SetoidMap(discrete(2), A, (0, 1))
    h = SetoidMap(FinSetoid((0, 0, 1)), A, (0, 1, 0))
    assert slice_exponential(A, g, h).setoid.n_classes == slice_exponential(A, g, h, reps=[1]).setoid.n_classes
    with pytest.raises(ValueError):
        slice_exponential(A, g, h, reps=[0, 1])


@given(small_setoids.filter(lambda s: s.n > 0), small_setoids, small_setoids, st.data())
def test_random_lcc(A, C, D, data):
    gs, hs = map_classes(C, A), map_classes(D, A)
    g = SetoidMap(C, A, data.draw(st.sampled_from(gs)))
    h = SetoidMap(D, A, data.draw(st.sampled_from(hs)))
    r = verify_lcc(A, g, h, k=2)
    assert r.passed, r.format()


def test_setoid_category_and_pullback():
    S = setoid_category([terminal_setoid(), discrete(2), indiscrete(2)])
    assert check_category_laws(S).passed
    assert S.n_arrows == 21
    i = next(k for k, a in enumerate(S.arrows) if a.label == "S1>S1:01")
    sw = next(k for k, a in enumerate(S.arrows) if a.label == "S1>S1:10")
    assert find_pullback(S, i, sw).obj == 1
    # discrete(2) x indiscrete(2) has 2 classes; no object here has 2 elements
    # with those classes except discrete(2)
    assert find_product(S, 1, 2).obj == 1


def test_presheaf_checks():
    C = standard_category("walking_arrow")
    assert check_presheaf(representable(C, 1)).passed
    bad = PresheafData(C, [discrete(2), discrete(2)], [(0, 1), (1, 0), (0, 0)])
    assert "identity" in check_presheaf(bad).laws()   # a swapped identity also breaks composites through it
    with pytest.raises(ValueError):
        yoneda_check(C, bad, 0)


def test_representable_sizes():
    C = standard_category("two_reps")
    y = representable(C, 1)
    assert [s.n for s in y.sets] == [2, 1]
    assert [s.n_classes for s in y.sets] == [1, 1]


@pytest.mark.parametrize("kind", ["walking_arrow", "z2", "two_reps", "iso_pair", "span"])
def test_yoneda_counts(kind):
    C = standard_category(kind)
    for s in all_setoids(2):
        F = constant_presheaf(C, s)
        for x in range(C.n_objects):
            res = yoneda_check(C, F, x)
            assert res.report.passed
            assert res.n_nat == s.n_classes


def test_nat_transfs_between_representables():
    C = standard_category("chain", 3)
    for x, y in itertools.product(range(3), repeat=2):
        n = len(enumerate_nat_transfs(representable(C, x), representable(C, y)))
        assert n == len(C.classes(x, y))
