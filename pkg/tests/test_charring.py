from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckematch.charring import (
    CharacterElt,
    IrrDecomp,
    central_scalar,
    decompose,
    dim,
    eval_at_torus,
    exterior_power,
    irr_character,
    principal_torus_cocharacter,
    tensor,
)
from heckematch.laurent import Laurent
from heckematch.rootsys import Cocharacter, GeneralLinear, build_root_system

# dimensions from standard tables (Bourbaki labels)
DIMS = [
    ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("G2", (2, 0), 27), ("G2", (1, 1), 64),
    ("B3", (1, 0, 0), 7), ("B3", (0, 1, 0), 21), ("B3", (0, 0, 1), 8), ("B3", (0, 0, 2), 35),
    ("F4", (0, 0, 0, 1), 26), ("F4", (1, 0, 0, 0), 52), ("F4", (0, 0, 1, 0), 273),
    ("D5", (1, 0, 0, 0, 0), 10), ("D5", (0, 0, 0, 0, 1), 16), ("D5", (0, 1, 0, 0, 0), 45),
    ("E6", (1, 0, 0, 0, 0, 0), 27), ("E6", (0, 1, 0, 0, 0, 0), 78),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56), ("E7", (1, 0, 0, 0, 0, 0, 0), 133),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248), ("E8", (1, 0, 0, 0, 0, 0, 0, 0), 3875),
]


@pytest.mark.parametrize("label,lam,n", DIMS)
def test_weyl_dimension(label, lam, n):
    assert dim(build_root_system(label), lam) == n


@pytest.mark.parametrize("label,lam,n", [d for d in DIMS if d[0] not in ("E7", "E8")] + [DIMS[-4]])
def test_character_dimension_matches_weyl_formula(label, lam, n):
    ch = irr_character(build_root_system(label), lam)
    assert ch.dim() == n
    assert ch.is_weyl_invariant()


def test_known_multiplicities():
    assert irr_character(build_root_system("A2"), (1, 1))[(0, 0)] == 2
    assert irr_character(build_root_system("G2"), (0, 1))[(0, 0)] == 2
    assert irr_character(build_root_system("G2"), (1, 0))[(0, 0)] == 1
    assert irr_character(build_root_system("F4"), (0, 0, 0, 1))[(0, 0, 0, 0)] == 2


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 3), (4, 1), (5, 5)])
def test_clebsch_gordan(a, b):
    got = tensor(build_root_system("A1"), (a,), (b,))
    want = {(a + b - 2 * k,): 1 for k in range(min(a, b) + 1)}
    assert got == want


def test_g2_tensor_squares():
    rs = build_root_system("G2")
    assert tensor(rs, (1, 0), (1, 0)) == {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}


def _brute_product(ch1, ch2):
    out = Counter()
    for w1, m1 in ch1.items():
        for w2, m2 in ch2.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += m1 * m2
    return {w: m for w, m in out.items() if m}


@pytest.mark.parametrize("label,l1,l2", [("A2", (1, 0), (0, 1)), ("G2", (1, 0), (0, 1)), ("B3", (0, 0, 1), (1, 0, 0))])
def test_convolution_matches_brute_force(label, l1, l2):
    rs = build_root_system(label)
    a, b = irr_character(rs, l1), irr_character(rs, l2)
    assert (a * b).mults == _brute_product(a, b)


RANK2 = st.sampled_from(["A1", "A2", "G2", "B2"])


def _dominant(rs, bound=2):
    return st.lists(st.integers(0, bound), min_size=rs.rank, max_size=rs.rank).map(tuple)


@settings(max_examples=30, deadline=None)
@given(RANK2, st.data())
def test_recomposition(label, data):
    rs = build_root_system(label)
    k = data.draw(st.integers(1, 3))
    terms = {}
    for _ in range(k):
        lam = data.draw(_dominant(rs))
        terms[lam] = terms.get(lam, 0) + data.draw(st.integers(-3, 3).filter(bool))
    ch = CharacterElt(rs)
    for lam, c in terms.items():
        ch = ch + irr_character(rs, lam).scale(c)
    dec = decompose(ch)
    assert dec == {w: c for w, c in terms.items() if c}
    assert dec.recompose() == ch


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["A1", "A2", "G2"]), st.data())
def test_eval_is_ring_homomorphism(label, data):
    rs = build_root_system(label)
    a = irr_character(rs, data.draw(_dominant(rs)))
    b = irr_character(rs, data.draw(_dominant(rs)))
    c = Cocharacter(data.draw(st.lists(st.integers(-3, 3), min_size=rs.rank, max_size=rs.rank)))
    m = data.draw(st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(3, 2)]))
    assert eval_at_torus(a * b, c, m) == eval_at_torus(a, c, m) * eval_at_torus(b, c, m)
    assert eval_at_torus(a + b, c, m) == eval_at_torus(a, c, m) + eval_at_torus(b, c, m)


@pytest.mark.parametrize("label,lam,_n", DIMS[:12])
def test_principal_trace_symmetric_and_dim(label, lam, _n):
    rs = build_root_system(label)
    ch = irr_character(rs, lam)
    t = eval_at_torus(ch, principal_torus_cocharacter(rs), Fraction(1, 2))
    assert t.is_symmetric()
    assert t.at_one() == ch.dim()
    assert eval_at_torus(ch, Cocharacter([5] * rs.rank), 0) == Laurent.one() * dim(rs, lam)


def test_principal_trace_is_q_dimension():
    # Tr(q^rho) on the 7-dim G2 module: v^{±6}, v^{±4}, v^{±2}, 1 in v = q^(1/2)
    rs = build_root_system("G2")
    t = eval_at_torus(irr_character(rs, (1, 0)), principal_torus_cocharacter(rs))
    assert t == Laurent({k: 1 for k in (-6, -4, -2, 0, 2, 4, 6)})


def test_gl_exterior_powers():
    for n in range(1, 6):
        for i in range(n + 1):
            ch = exterior_power(n, i)
            assert ch.dim() == len([s for s in range(2**n) if bin(s).count("1") == i])


def test_central_scalar():
    gl = GeneralLinear(3)
    det = gl.determinant_cocharacter()
    assert central_scalar(exterior_power(3, 2), det, 1) == 2
    assert central_scalar(exterior_power(3, 2), det, Fraction(1, 2)) == 1


def test_decompose_rejects_non_invariant():
    rs = build_root_system("A1")
    with pytest.raises(ValueError):
        decompose(CharacterElt(rs, {(1,): 1}))


def test_irrdecomp_dim():
    rs = build_root_system("G2")
    assert IrrDecomp(rs, {(1, 0): 2, (0, 0): -1}).dim() == 13
