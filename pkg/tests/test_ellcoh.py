import pytest
from hypothesis import given
from hypothesis import strategies as st

from ellipcp.divisor import FixedPointError, coh_dims, divisor_of_rep, euler_char
from ellipcp.ellcoh import (
    GradedDims,
    closed_form,
    d_invariant,
    ec_cp,
    ec_t2_sphere,
    ec_t_point,
    les_table,
)
from ellipcp.reps import CircleRep, TorusRep, parse_circle_rep

P = parse_circle_rep


def brute_d(v):
    """Sum over ordered pairs, halved."""
    return sum(a * b * (i - j) ** 2 for i, a in v.items() for j, b in v.items()) // 2


def test_ec_t2_sphere_examples():
    assert ec_t2_sphere(TorusRep({(0, 1): 1, (1, 1): 4})) == (4, 0)
    assert ec_t2_sphere(TorusRep({(1, 1): 2})) == (2, 2)
    assert ec_t2_sphere(TorusRep({(1, 1): 1})) == (1, 1)
    with pytest.raises(FixedPointError):
        ec_t2_sphere(TorusRep({(0, 0): 1}))


def test_ec_t_point():
    assert ec_t_point() == GradedDims(1, 1)
    assert ec_t_point() == ec_t_point()


@pytest.mark.parametrize(
    "text, rank, kernel, cokernel",
    [
        ("eps + 4z", (0, 0, 1), (0, 0, 3), (1, 2, 0)),
        ("3z^5", (0, 1, 1), (0, 2, 2), (1, 1, 0)),
        ("z", (0, 1, 1), (0, 0, 0), (1, 1, 0)),
    ],
)
def test_les_table_examples(text, rank, kernel, cokernel):
    t = les_table(P(text))
    assert (t.rank, t.kernel, t.cokernel) == (rank, kernel, cokernel)
    assert t.target == (1, 2, 1)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("eps + 4z", (0, 4)),
        ("eps + z^2", (0, 4)),
        ("eps + 16z", (0, 16)),
        ("eps + z^4", (0, 16)),
        ("eps + z + 3z^2", (0, 16)),
        ("3z^5", (2, 2)),
        ("z", (0, 0)),
    ],
)
def test_ec_cp_examples(text, expected):
    assert ec_cp(P(text)) == expected
    assert ec_cp(P(text), reduced=False) == (expected[0] + 1, expected[1] + 1)


def test_zero_representation_rejected():
    with pytest.raises(ValueError):
        les_table(CircleRep())
    with pytest.raises(ValueError):
        ec_cp(CircleRep())


def test_d_invariant_examples():
    assert d_invariant(P("eps + 16z")) == 16
    assert d_invariant(P("eps + z^4")) == 16
    assert d_invariant(P("7z^-3")) == 0


reps = st.dictionaries(st.integers(-6, 6), st.integers(1, 5), min_size=1, max_size=6).map(CircleRep)


@given(reps)
def test_les_exactness_and_euler_characteristic(v):
    t = les_table(v)
    for k in range(3):
        assert t.kernel[k] + t.rank[k] == t.source[k]
        assert t.rank[k] + t.cokernel[k] == t.target[k]
    unreduced = ec_cp(v, reduced=False)
    if len(v) >= 2:
        assert unreduced.euler() == -d_invariant(v)
    else:
        assert unreduced.euler() == 0


@given(reps)
def test_pipeline_matches_closed_form(v):
    assert ec_cp(v) == closed_form(v)
    assert d_invariant(v) == brute_d(v)


@given(st.dictionaries(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda c: c != (0, 0)),
    st.integers(1, 4),
    max_size=5,
).map(TorusRep))
def test_sphere_euler_characteristic(w):
    d = divisor_of_rep(w)
    value = ec_t2_sphere(w)
    if d:
        assert value.euler() == euler_char(d)
    assert value == (coh_dims(d, "minus").h0 + coh_dims(d, "minus").h2, coh_dims(d, "minus").h1)
