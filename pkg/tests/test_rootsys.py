import functools
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckematch.rootsys import (
    DEGREES,
    GeneralLinear,
    build_root_system,
    cartan_matrix,
    degrees_of,
    dominant_representative,
    poincare_polynomial,
    poincare_ratio,
    weyl_orbit,
)

# standard tables: number of positive roots and order of W
KNOWN = {
    "A1": (1, 2), "A2": (3, 6), "A3": (6, 24), "B3": (9, 48), "C3": (9, 48),
    "D4": (12, 192), "D5": (20, 1920), "G2": (6, 12), "F4": (24, 1152),
    "E6": (36, 51840), "E7": (63, 2903040), "E8": (120, 696729600),
}


@pytest.mark.parametrize("label", sorted(KNOWN))
def test_counts_and_weyl_order(label):
    rs = build_root_system(label)
    n_pos, order = KNOWN[label]
    assert len(rs.positive_roots) == n_pos
    assert len(rs.roots) == 2 * n_pos
    assert rs.weyl_group_order == order
    assert poincare_polynomial(rs).at_one() == order


@pytest.mark.parametrize("label", sorted(KNOWN))
def test_sum_of_positive_roots_is_two_rho(label):
    rs = build_root_system(label)
    total = tuple(sum(c) for c in zip(*rs.positive_roots))
    assert total == tuple(2 * x for x in rs.rho) == (2,) * rs.rank


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D5", "E6", "E7", "E8", "F4", "G2"])
def test_exponents_agree_with_degree_table(label):
    rs = build_root_system(label)
    letter, n = label[0], int(label[1:])
    assert rs.degrees == tuple(sorted(degrees_of(letter, n)))
    if label in DEGREES:
        assert rs.degrees == DEGREES[label]


def test_simple_roots_are_cartan_columns():
    rs = build_root_system("G2")
    C = cartan_matrix("G2")
    assert rs.simple_roots == tuple(tuple(C[i][j] for i in range(2)) for j in range(2))
    # alpha_1 short: <alpha_2^v, alpha_1> = -1, <alpha_1^v, alpha_2> = -3
    assert C[0][1] == -3 and C[1][0] == -1


def test_g2_positive_roots():
    rs = build_root_system("G2")
    assert sorted(rs.positive_roots_root_coords) == sorted([(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)])


def test_product_types():
    rs = build_root_system("A1xA1")
    assert rs.rank == 2 and len(rs.positive_roots) == 2
    assert build_root_system("A0").rank == 0


@pytest.mark.parametrize("bad", ["Z3", "B1", "E9", "", "D2"])
def test_bad_labels(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


small_types = st.sampled_from(["A2", "A3", "B3", "C3", "G2", "B2"])


@settings(max_examples=40, deadline=None)
@given(small_types, st.data())
def test_orbit_size_divides_weyl_order(label, data):
    rs = build_root_system(label)
    w = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    orbit = weyl_orbit(rs, w)
    assert rs.weyl_group_order % len(orbit) == 0
    dom = dominant_representative(rs, w)
    assert rs.is_dominant(dom) and dom in orbit
    assert all(dominant_representative(rs, u) == dom for u in orbit)


def test_orbit_of_regular_weight_is_free():
    rs = build_root_system("F4")
    assert len(weyl_orbit(rs, (1, 1, 1, 1))) == 1152


def test_orbit_of_e8_adjoint():
    # E8 Bourbaki: omega_8 is the highest root, orbit = all 240 roots
    rs = build_root_system("E8")
    assert len(weyl_orbit(rs, (0,) * 7 + (1,))) == 240


def test_general_linear_orbit():
    gl = GeneralLinear(4)
    assert len(weyl_orbit(gl, (1, 1, 0, 0))) == 6
    assert gl.determinant_cocharacter().pair((1, 1, 0, 0)) == 2


# -- F_q point counts of flag varieties ---------------------------------------

def _gf(q):
    """Addition and multiplication tables for q in {2, 3, 4}."""
    if q in (2, 3):
        return (lambda a, b: (a + b) % q), (lambda a, b: (a * b) % q)
    # GF(4) = F_2[x]/(x^2+x+1), elements as 2-bit polynomials
    def mul(a, b):
        r = 0
        for i in range(2):
            if b >> i & 1:
                r ^= a << i
        if r & 4:
            r ^= 0b111
        return r
    return (lambda a, b: a ^ b), mul


@functools.lru_cache(maxsize=None)
def _subspaces(n, q):
    add, mul = _gf(q)
    vecs = list(itertools.product(range(q), repeat=n))
    layers = [{frozenset([(0,) * n])}]
    for _ in range(n - 1):
        nxt = set()
        for U in layers[-1]:
            covered = set(U)
            for v in vecs:
                if v in covered:
                    continue
                W = frozenset(tuple(add(u[i], mul(c, v[i])) for i in range(n)) for u in U for c in range(q))
                covered |= W
                nxt.add(W)
        layers.append(nxt)
    return layers


def _count_flags(n, q, dims):
    layers = _subspaces(n, q)
    chains = [frozenset([(0,) * n])]
    for d in dims:
        chains = [V for U in chains for V in layers[d] if U <= V]
    return len(chains)


FLAG_CASES = [
    ("A2", [], [1, 2]),
    ("A2", [1], [1]),
    ("A2", [0], [2]),
    ("A3", [], [1, 2, 3]),
    ("A3", [0, 2], [2]),
    ("A3", [1, 2], [1]),
    ("A3", [0], [2, 3]),
]


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("label,levi,dims", FLAG_CASES)
def test_poincare_ratio_counts_flags(label, levi, dims, q):
    n = build_root_system(label).rank + 1
    ratio = poincare_ratio(build_root_system(label), levi)
    assert ratio.evaluate(q) == _count_flags(n, q, dims)
