import pytest
from hypothesis import given, strategies as st

from threefree.presentation import (
    INFINITY,
    Presentation,
    PresentationError,
    fixture,
    format_presentation,
    load_presentation,
    parse_presentation,
)

P1_TEXT = """
# fixture P1
generators a b c d
m a b 4
m b c 5
m a c 2
m a d 2
m b d 2
m c d 2
"""


def test_parse_p1():
    p = parse_presentation(P1_TEXT)
    assert p.generators == ("a", "b", "c", "d")
    assert p.exponent("a", "b") == 4
    assert p.exponent("b", "a") == 4
    assert p.exponent("b", "c") == 5
    assert p == fixture("p1")


def test_unlisted_pair_is_free():
    p = parse_presentation("generators a b\n")
    assert p.exponent("a", "b") == INFINITY
    assert not p.commutes("a", "b")
    assert p.finite_pairs() == []


def test_inf_keyword():
    p = parse_presentation("generators a b\nm a b inf\n")
    assert p.exponent("a", "b") == INFINITY


def test_braid_relation_rejected():
    with pytest.raises(PresentationError, match="not 3-free"):
        parse_presentation("generators a b\nm a b 3\n")
    with pytest.raises(PresentationError, match="not 3-free"):
        fixture("braid")


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("generators a b\nm a b 1\n", "< 2", 2),
        ("generators a b\nm a b 0\n", "< 2", 2),
        ("generators a a\n", "duplicate generator", 1),
        ("generators a b\nm a b 4\nm b a 4\n", "duplicate entry", 3),
        ("generators a b\nm a c 4\n", "unknown generator", 2),
        ("generators a b\nm a a 4\n", "itself", 2),
        ("generators a b\nm a b four\n", "bad exponent", 2),
        ("generators a b\nrel a b 4\n", "expected", 2),
        ("m a b 4\n", "expected 'generators", 1),
        ("generators 1a\n", "invalid generator name", 1),
        ("# only a comment\n", "missing", None),
    ],
)
def test_parse_errors(text, fragment, line):
    with pytest.raises(PresentationError, match=fragment) as info:
        parse_presentation(text)
    assert info.value.line == line


def test_exponent_queries():
    p = fixture("p1")
    assert p.commutes("a", "c")
    assert p.commutes("c", "a")
    assert not p.commutes("a", "b")
    assert p.commutes("a", "a")
    with pytest.raises(ValueError):
        p.exponent("a", "a")
    with pytest.raises(KeyError):
        p.exponent("a", "q")
    assert not p.is_right_angled()
    assert fixture("fpc").is_right_angled()


def test_constructor_validates():
    with pytest.raises(PresentationError):
        Presentation(("a", "b"), {("a", "b"): 3})
    with pytest.raises(PresentationError):
        Presentation(("a", "b"), {("a", "q"): 4})
    p = Presentation(("a", "b"), {("b", "a"): 6})
    assert p.exponent("a", "b") == 6
    assert hash(p) == hash(Presentation(("a", "b"), {("a", "b"): 6}))


def test_load_from_file(tmp_path):
    f = tmp_path / "g.pres"
    f.write_text(P1_TEXT, encoding="utf-8")
    assert load_presentation(f) == fixture("p1")


exponents = st.sampled_from([2, 4, 5, 6, 7, 10, INFINITY])


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 5))
    gens = tuple(f"g{i}" for i in range(n))
    cox = {(gens[i], gens[j]): draw(exponents) for i in range(n) for j in range(i + 1, n)}
    return Presentation(gens, cox)


@given(presentations())
def test_format_round_trip(p):
    assert parse_presentation(format_presentation(p)) == p


@given(presentations(), st.data())
def test_symmetry(p, data):
    if p.rank < 2:
        return
    g = data.draw(st.sampled_from(p.generators))
    h = data.draw(st.sampled_from([x for x in p.generators if x != g]))
    assert p.exponent(g, h) == p.exponent(h, g)
    assert p.commutes(g, h) == p.commutes(h, g) == (p.exponent(g, h) == 2)
