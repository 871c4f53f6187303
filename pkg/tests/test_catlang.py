import pytest

from fincat.category import check_category_laws, find_isomorphism, standard_category
from fincat.catlang import (
    FunctorDecl,
    LawFailure,
    LexError,
    NatDecl,
    ParseError,
    SaturationConfig,
    SaturationExceeded,
    TypingError,
    UnknownNameError,
    category_to_presentation,
    elaborate_table,
    load,
    parse,
    print_entity,
    saturate,
    saturate_full,
    tokenize,
)
from fincat.transfor import check_functor, check_natural

sc = standard_category
TINY = "category X table\n  objects: a\n  arrows: i : a -> a\n  id a: i\n  compose: i.i = {}\n"


def test_tokens_carry_positions():
    toks = tokenize("category X\n  objects: a")
    assert toks[0].line == 1 and toks[0].col == 1
    obj = next(t for t in toks if t.text == "a")
    assert (obj.line, obj.col) == (2, 12)


@pytest.mark.parametrize("text,exc,line,col", [
    ("category X @", LexError, 1, 12),
    ("category X table\n  objects a\n", ParseError, 2, 11),
    (TINY.format("j"), UnknownNameError, 5, 18),
    ("category X presented\n  objects: a\n  generators:\n    u : a -> b\n  relations:\n", UnknownNameError, 4, 14),
    ("functor F : A -> B\n", UnknownNameError, 1, 13),
])
def test_errors_are_located(text, exc, line, col):
    with pytest.raises(exc) as info:
        load(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert f"line {line}" in str(info.value)


def test_parse_error_lists_expected():
    with pytest.raises(ParseError) as info:
        parse("category X table\n  objects a\n")
    assert info.value.expected == (":",)


def test_relation_between_different_homs(fixture_dir):
    with pytest.raises(TypingError) as info:
        parse((fixture_dir / "bad_relation.cat").read_text())
    assert info.value.line == 7


def test_uncomposable_word():
    text = ("category P presented\n  objects: a b\n  generators:\n    f : a -> b\n"
            "  relations:\n    f.f = f\n")
    with pytest.raises(TypingError):
        load(text)


def test_tiny_table_elaborates():
    env = load(TINY.format("i"))
    c = env.categories["X"]
    assert c.n_arrows == 1 and check_category_laws(c).passed


def test_broken_table_reports_law(fixture_dir):
    with pytest.raises(LawFailure) as info:
        load((fixture_dir / "broken_table.cat").read_text())
    assert info.value.report.laws() == {"totality"}
    p = parse((fixture_dir / "broken_table.cat").read_text())[0]
    with pytest.raises(LawFailure):
        elaborate_table(p)


@pytest.mark.parametrize("fname,sizes", [
    ("square.cat", {"SquareP": 9, "SquareT": 9}),
    ("walking_arrow_presented.cat", {"Arrow": 3}),
    ("z2_presented.cat", {"Z2p": 2}),
    ("two_reps.cat", {"TwoReps": 4}),
    ("chain_pullback.cat", {"Chain4": 10, "Cospan": 5}),
])
def test_saturated_sizes(fname, sizes, fixture_dir):
    env = load((fixture_dir / fname).read_text())
    assert {n: c.n_arrows for n, c in env.categories.items()} == sizes
    assert all(check_category_laws(c).passed for c in env.categories.values())


def test_presented_square_matches_table(fixture_dir):
    env = load((fixture_dir / "square.cat").read_text())
    assert find_isomorphism(env.categories["SquareP"], env.categories["SquareT"]) is not None
    assert find_isomorphism(env.categories["SquareP"], sc("commutative_square")) is not None


def test_saturation_words_are_short():
    p = parse("category Z presented objects: * generators: g : * -> * relations: g.g = id")[0]
    s = saturate_full(p)
    assert s.generators == {"g": 1}
    assert sorted(len(w) for _, w in s.words) == [0, 1]


def test_free_loop_exceeds(fixture_dir):
    p = parse((fixture_dir / "free_loop.cat").read_text())[0]
    with pytest.raises(SaturationExceeded):
        saturate(p, SaturationConfig(max_arrows=20, max_word_length=6))


def test_chain_by_generators():
    text = "category C presented\n  objects: a b c\n  generators:\n    f : a -> b\n    g : b -> c\n  relations:\n"
    c = saturate(parse(text)[0])
    assert find_isomorphism(c, sc("chain", 3)) is not None


@pytest.mark.parametrize("bad", [(0, 8), (5, 0), (-1, 3)])
def test_saturation_config_validation(bad):
    with pytest.raises(ValueError):
        SaturationConfig(*bad)


def test_galois_environment(fixture_dir):
    env = load((fixture_dir / "galois.cat").read_text())
    assert env.order == ["Two", "V", "Dbl", "Half", "Unit"]
    assert env.categories["V"].n_arrows == 10
    assert all(check_functor(F).passed for F in env.functors.values())
    assert check_natural(env.nats["Unit"]).passed
    assert env.diagrams == {}


def test_diagram_declaration(fixture_dir):
    env = load((fixture_dir / "chain_pullback.cat").read_text())
    assert list(env.diagrams) == ["Pb"]
    assert env.diagrams["Pb"].obj_map == (1, 2, 3)


def test_functor_and_nat_printing(fixture_dir):
    items = parse((fixture_dir / "galois.cat").read_text())
    fs = [i for i in items if isinstance(i, FunctorDecl)]
    ns = [i for i in items if isinstance(i, NatDecl)]
    assert [f.name for f in fs] == ["Dbl", "Half"]
    for it in fs + ns:
        assert parse_with_context(items, print_entity(it)) == it
    assert "arr pq -> s1.s0" in print_entity(fs[0])


def parse_with_context(items, text):
    """Parse one printed functor or transformation after the categories it mentions."""
    cats = print_entity([i for i in items if not isinstance(i, (FunctorDecl, NatDecl))])
    functors = print_entity([i for i in items if isinstance(i, FunctorDecl)]) if text.startswith("nat") else ""
    return parse(cats + functors + text)[-1]


@pytest.mark.parametrize("kind", ["z2", "two_reps", "iso_pair", "commutative_square"])
def test_category_print_round_trip(kind):
    c = sc(kind)
    text = print_entity(category_to_presentation(c, "C", rename=True))
    back = load(text).categories["C"]
    assert find_isomorphism(back, c) is not None
    assert back.n_arrows == c.n_arrows


def test_printer_rejects_bad_names():
    with pytest.raises(ValueError):
        print_entity(sc("z2"), "not a name")
    with pytest.raises(ValueError):
        print_entity(object())
