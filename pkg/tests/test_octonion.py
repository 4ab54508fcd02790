import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckematch import octonion as O
from heckematch.fields import QQ, Field, rank

F7 = Field(7)
coords = st.lists(st.integers(-6, 6), min_size=8, max_size=8)


def oct_of(c, field=QQ):
    return O.Octonion([field(x) for x in c])


def test_unit_two_sided():
    one = O.Octonion.one()
    assert one == O.Octonion.basis("s4") + O.Octonion.basis("t4")
    for n in O.NAMES:
        e = O.Octonion.basis(n)
        assert one * e == e == e * one


def test_table_is_integral_and_read_row_by_column():
    assert O.STRUCTURE.dtype.kind == "i"
    s1, t1 = O.Octonion.basis("s1"), O.Octonion.basis("t1")
    # s_i t_i and t_i s_i land in the idempotents s4, t4 with opposite order
    assert s1 * t1 != t1 * s1
    assert O.trace(s1 * t1) == O.trace(t1 * s1)


def test_trace_and_norm_of_basis():
    assert O.trace(O.Octonion.one()) == 2
    assert O.norm(O.Octonion.one()) == 1
    for n in ("s1", "s2", "s3", "t1", "t2", "t3"):
        e = O.Octonion.basis(n)
        assert O.trace(e) == 0 and O.norm(e) == 0
        assert (e * e).is_zero()


@settings(max_examples=200, deadline=None)
@given(coords, coords)
def test_composition_q(a, b):
    x, y = oct_of(a), oct_of(b)
    assert O.norm(x * y) == O.norm(x) * O.norm(y)


@settings(max_examples=200, deadline=None)
@given(coords, coords, coords)
def test_trace_and_alternativity(a, b, c):
    x, y, z = oct_of(a), oct_of(b), oct_of(c)
    assert O.trace(x * y) == O.trace(y * x)
    assert O.trace(x * (y * z)) == O.trace((x * y) * z)
    assert x * (x * y) == (x * x) * y
    assert (y * x) * x == y * (x * x)


def test_composition_f7():
    rng = random.Random(7)
    for _ in range(300):
        x, y = O.Octonion.random(rng, F7), O.Octonion.random(rng, F7)
        assert O.norm(x * y) == O.norm(x) * O.norm(y)


def test_norm_is_x_times_conjugate():
    rng = random.Random(1)
    for _ in range(50):
        x = O.Octonion.random(rng)
        assert x * O.conj(x) == O.Octonion.one().scale(O.norm(x))
        assert O.conj(O.conj(x)) == x


@pytest.mark.parametrize("name", ["s1", "s2", "t3"])
def test_left_multiplication_by_null_element_squares_to_zero(name):
    x = O.Octonion.basis(name)
    L = np.array(O.left_mult_matrix(x), dtype=object)
    assert not (L.dot(L)).any()


def test_left_multiplication_random_null():
    # x = s1 + 2 t2 is null and trace-zero
    x = O.Octonion.basis("s1") + O.Octonion.basis("t2").scale(2)
    assert (x * x).is_zero()
    L = np.array(O.left_mult_matrix(x), dtype=object)
    assert not (L.dot(L)).any()


def test_traceless_coords_roundtrip():
    rng = random.Random(3)
    for _ in range(20):
        x = O.Octonion.random(rng, traceless=True)
        assert O.trace(x) == 0
        assert O.from_traceless_coords(O.to_traceless_coords(x)) == x


@pytest.mark.parametrize("i", [1, 2, 3])
def test_perp(i):
    assert O.perp_check(i)
    assert O.perp_check(i, F7)


def test_polar_complement_is_six_dimensional():
    s1 = O.Octonion.basis("s1")
    comp = O.polar_complement(s1)
    assert len(comp) == 6
    assert all(O.polar_form(s1, w) == 0 for w in comp)


def test_is_null_subspace():
    s1, t2, t3, s2 = (O.Octonion.basis(n) for n in ("s1", "t2", "t3", "s2"))
    assert O.is_null_subspace([s1, t2])
    assert O.is_null_subspace([s1, t2 + t3.scale(5)])
    assert not O.is_null_subspace([s1, s2])


def _brute_null_lines(p):
    # every nonzero v in O^0 over F_p with v*v = 0, counted projectively
    T = O._traceless_structure()
    count = 0
    for v in np.ndindex(*(p,) * 7):
        v = np.array(v)
        if v.any() and not (np.einsum("a,b,abk->k", v, v, T) % p).any():
            count += 1
    return count // (p - 1)


@pytest.mark.parametrize("p", [2, 3])
def test_null_line_count(p):
    # the null quadric of the split form in 7 variables has (p^6 - 1)/(p - 1) points
    lines = O.enumerate_null_subspaces(p, 1)
    assert len(lines) == _brute_null_lines(p) == (p**6 - 1) // (p - 1)


@pytest.mark.parametrize("p", [2, 3])
def test_no_null_three_spaces(p):
    planes = O.enumerate_null_subspaces(p, 2)
    assert planes
    assert O.enumerate_null_subspaces(p, 3) == []
    for plane in planes[:20]:
        basis = [O.from_traceless_coords(r, Field(p)) for r in plane]
        assert O.is_null_subspace(basis)
        assert rank([[Field(p)(x) for x in r] for r in plane]) == 2


def test_planes_through_s1_over_f3():
    assert O.null_planes_through([1, 0, 0, 0, 0, 0, 0], 3) == O.expected_planes_through_s(1, 3)
    assert len(O.expected_planes_through_s(1, 3)) == 4


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        O.enumerate_null_subspaces(5, 1)
    with pytest.raises(ValueError):
        O.enumerate_null_subspaces(2, 4)
