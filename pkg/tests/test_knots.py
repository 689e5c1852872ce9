"""Braid words, the two Alexander routes, and the bundled knot table."""
import pytest
from hypothesis import assume, given, settings, strategies as st

from knotcover.errors import CrossCheckMismatch
from knotcover.knots import (
    BraidSyntaxError,
    BraidWord,
    DuplicateName,
    IndexOutOfRange,
    KnotTable,
    NotAKnot,
    alexander_burau,
    alexander_checked,
    alexander_fox,
    braid_closure_wirtinger,
    parse_braid,
)
from knotcover.laurent_poly import LaurentPoly

# knot name -> (symmetrized Alexander polynomial, determinant |Delta(-1)|)
CORPUS_ORACLE = {
    "unknot": ("1", 1),
    "3_1": ("1*t^-1 - 1 + 1*t^1", 3),
    "4_1": ("-1*t^-1 + 3 - 1*t^1", 5),
    "5_1": ("1*t^-2 - 1*t^-1 + 1 - 1*t^1 + 1*t^2", 5),
    "5_2": ("2*t^-1 - 3 + 2*t^1", 7),
    "6_1": ("-2*t^-1 + 5 - 2*t^1", 9),
}


def braid_words(max_strands=4, max_letters=8):
    return st.integers(min_value=2, max_value=max_strands).flatmap(
        lambda n: st.lists(
            st.integers(min_value=-(n - 1), max_value=n - 1).filter(lambda v: v != 0),
            max_size=max_letters,
        ).map(lambda letters: (n, letters))
    )


def test_parse_braid_accepts_whitespace_and_prefix():
    b = parse_braid("strands=3;  1   2")
    assert b.strands == 3 and b.letters == (1, 2)
    c = parse_braid("1 2")
    assert c.strands == 3


def test_parse_braid_rejections():
    with pytest.raises(BraidSyntaxError):
        parse_braid("strands=3; x")
    with pytest.raises(BraidSyntaxError):
        parse_braid("strands=3; 0")
    with pytest.raises(IndexOutOfRange):
        parse_braid("strands=2; 2")
    with pytest.raises(IndexOutOfRange):
        parse_braid("strands=2; -2")
    with pytest.raises(NotAKnot):
        parse_braid("strands=3; 1 1")


def test_constructor_checks_closure():
    with pytest.raises(NotAKnot):
        BraidWord(2, ())
    # the empty 1-strand braid closes to the unknot
    assert BraidWord(1, ()).strands == 1


def test_permutation_and_writhe():
    b = parse_braid("strands=3; 1 -2")
    assert b.writhe() == 0
    assert b.permutation() == (2, 0, 1)
    assert parse_braid("strands=2; 1 1 1").writhe() == 3


def test_to_text_round_trip():
    for text in ("strands=2; 1 1 1", "strands=4; 1 -2 3", "strands=1;"):
        b = parse_braid(text)
        assert parse_braid(b.to_text()) == b


@pytest.mark.parametrize("name, expected", sorted(CORPUS_ORACLE.items()))
def test_corpus_alexander_polynomials(name, expected):
    text, determinant = expected
    braid = KnotTable.default().get(name)
    delta = alexander_checked(braid)
    assert delta.to_text() == text
    assert abs(delta.eval_rational(-1)) == determinant
    # defining normalizations: symmetric under t -> 1/t, value 1 at t = 1
    assert delta.involute() == delta
    assert delta.eval_rational(1) == 1


@pytest.mark.parametrize("name", sorted(CORPUS_ORACLE))
def test_two_routes_agree_on_corpus(name):
    braid = KnotTable.default().get(name)
    assert alexander_burau(braid) == alexander_fox(braid_closure_wirtinger(braid))


@pytest.mark.parametrize("sign", (1, -1))
@pytest.mark.parametrize("name", sorted(CORPUS_ORACLE))
def test_markov_stabilization_fixed_corpus(name, sign):
    braid = KnotTable.default().get(name)
    once = braid.stabilized(sign)
    twice = once.stabilized(-sign)
    assert alexander_burau(once) == alexander_burau(braid)
    assert alexander_burau(twice) == alexander_burau(braid)
    assert once.strands == braid.strands + 1


@given(braid_words())
@settings(max_examples=60, deadline=None)
def test_markov_stabilization_random(nl):
    n, letters = nl
    try:
        braid = BraidWord(n, letters)
    except NotAKnot:
        assume(False)
    delta = alexander_checked(braid)
    assert alexander_checked(braid.stabilized(1)) == delta
    assert alexander_checked(braid.stabilized(-1)) == delta


@given(braid_words())
@settings(max_examples=60, deadline=None)
def test_fox_route_always_matches_burau(nl):
    n, letters = nl
    try:
        braid = BraidWord(n, letters)
    except NotAKnot:
        assume(False)
    delta = alexander_checked(braid)
    assert delta.eval_rational(1) == 1
    assert delta.involute() == delta


def test_wirtinger_shapes():
    trefoil = KnotTable.default().get("3_1")
    pres = braid_closure_wirtinger(trefoil)
    assert pres.n_generators == 3
    assert len(pres.relations) == 3
    assert pres.longitude_degree() == 0
    unknot = parse_braid("strands=1;")
    pres1 = braid_closure_wirtinger(unknot)
    assert pres1.n_generators == 1
    assert pres1.relations == ()
    fig8 = KnotTable.default().get("4_1")
    pres8 = braid_closure_wirtinger(fig8)
    assert pres8.n_generators == 4
    assert len(pres8.relations) == 4
    assert pres8.longitude_degree() == 0


def test_wirtinger_relations_reference_valid_arcs():
    for name in sorted(CORPUS_ORACLE):
        pres = braid_closure_wirtinger(KnotTable.default().get(name))
        for k, i, j, s in pres.relations:
            assert 0 <= k < pres.n_generators
            assert 0 <= i < pres.n_generators
            assert 0 <= j < pres.n_generators
            assert s in (1, -1)
        assert 0 <= pres.base_meridian < pres.n_generators


def test_table_parsing_errors():
    with pytest.raises(DuplicateName):
        KnotTable.parse("a: strands=2; 1 1 1\na: strands=2; 1 1 1")
    with pytest.raises(BraidSyntaxError):
        KnotTable.parse("just a line without separator")
    with pytest.raises(BraidSyntaxError):
        KnotTable.parse(": strands=2; 1 1 1")


def test_table_comments_and_resolve():
    table = KnotTable.parse("# comment\ntref: strands=2; 1 1 1\n\n")
    assert table.names() == ("tref",)
    assert "tref" in table
    name, braid = table.resolve("tref")
    assert name == "tref" and braid.strands == 2
    literal_name, literal = table.resolve("strands=2; 1 1 1")
    assert literal_name is None and literal == braid
    with pytest.raises(KeyError):
        table.get("missing")


def test_default_table_contents():
    table = KnotTable.default()
    for name in CORPUS_ORACLE:
        assert name in table


def test_burau_rejects_nothing_on_corpus():
    # a 1-strand word has an empty Burau matrix; the quotient convention
    # still produces the unknot polynomial
    assert alexander_burau(parse_braid("strands=1;")) == LaurentPoly.one()
