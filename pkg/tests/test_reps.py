from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellipcp.lattice import FiniteSubgroup, subgroup_from_generators
from ellipcp.reps import (
    Character,
    CircleRep,
    ParseError,
    TorusRep,
    fixed_dim,
    format_circle_rep,
    parse_circle_rep,
    parse_torus_rep,
    tensor_with_w,
)

from oracles import closure, is_trivial_on

circle_reps = st.dictionaries(st.integers(-20, 20), st.integers(1, 9), max_size=6).map(CircleRep)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("eps + 4z", {0: 1, 1: 4}),
        ("3z^5", {5: 3}),
        ("z^2 + z^2 + eps", {0: 1, 2: 2}),
        ("z^0", {0: 1}),
        (" 2 z ^ -3 +z", {-3: 2, 1: 1}),
        ("z^(-2)+z^+2", {-2: 1, 2: 1}),
        ("0", {}),
    ],
)
def test_parse_circle_rep(text, expected):
    assert dict(parse_circle_rep(text)) == expected


@pytest.mark.parametrize(
    "text, pos",
    [
        ("0z", 0),
        ("eps + 0z^2", 6),
        ("eps +", 5),
        ("eps + w", 6),
        ("", 0),
        ("z^", 1),
    ],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_circle_rep(text)
    assert info.value.pos == pos


def test_printer_sorts_by_exponent():
    assert format_circle_rep(CircleRep({2: 3, 0: 1, 1: 1})) == "eps + z + 3z^2"
    assert format_circle_rep(CircleRep({-2: 1})) == "z^-2"
    assert str(CircleRep()) == "0"


@given(circle_reps)
def test_parse_print_round_trip(v):
    assert parse_circle_rep(str(v)) == v


def test_tensor_with_w_examples():
    assert tensor_with_w(CircleRep({0: 1, 1: 4})) == TorusRep({(0, 1): 1, (1, 1): 4})
    assert tensor_with_w(CircleRep()) == TorusRep()
    assert tensor_with_w(CircleRep({-2: 3})) == TorusRep({(-2, 1): 3})


@given(circle_reps)
def test_tensor_preserves_dimension(v):
    w = tensor_with_w(v)
    assert w.dim() == v.dim()
    assert all(c.mu == 1 for c in w)


def test_parse_torus_rep():
    assert parse_torus_rep("x^0y^1 + 4x^1y^1") == TorusRep({(0, 1): 1, (1, 1): 4})
    assert parse_torus_rep("2xy + y^-1 + x") == TorusRep({(1, 1): 2, (0, -1): 1, (1, 0): 1})
    assert parse_torus_rep("eps").has_trivial()
    with pytest.raises(ParseError):
        parse_torus_rep("3")


def test_fixed_dim_examples():
    half = subgroup_from_generators([(Fraction(1, 2), Fraction(1, 2))])
    assert fixed_dim(TorusRep({(1, 1): 1, (2, 0): 2}), half) == 3
    w = TorusRep({(1, 1): 1, (3, -2): 4, (0, 5): 2})
    assert fixed_dim(w, FiniteSubgroup.trivial()) == w.dim()
    third = subgroup_from_generators([(Fraction(1, 3), 0)])
    assert fixed_dim(TorusRep({(1, 1): 1}), third) == 0


characters = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
torus_reps = st.dictionaries(characters, st.integers(1, 4), max_size=5).map(TorusRep)
points = st.tuples(st.integers(0, 11), st.integers(0, 11), st.sampled_from([1, 2, 3, 4, 6, 12])).map(
    lambda t: (Fraction(t[0], t[2]), Fraction(t[1], t[2]))
)


@given(torus_reps, st.lists(points, max_size=2), points)
def test_fixed_dim_matches_enumeration_and_is_monotone(w, gens, extra):
    f = subgroup_from_generators(gens)
    bigger = subgroup_from_generators(gens + [extra])
    elems = closure(gens)
    assert fixed_dim(w, f) == sum(m for c, m in w.items() if is_trivial_on(c, elems))
    assert fixed_dim(w, bigger) <= fixed_dim(w, f)


def test_character_primitive():
    assert Character(-2, 4).primitive() == (Character(1, -2), 2)
    assert Character(0, -3).primitive() == (Character(0, 1), 3)
    assert Character(1, 1).is_primitive()
    assert not Character(-1, 1).is_primitive()
    with pytest.raises(ValueError):
        Character(0, 0).primitive()
