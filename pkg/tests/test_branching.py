from collections import defaultdict
from fractions import Fraction

import pytest

from heckematch import branching as Br
from heckematch.charring import eval_at_torus, irr_character
from heckematch.laurent import Laurent
from heckematch.rootsys import build_root_system

MAPS = {
    "sl3_in_g2": (Br.sl3_in_g2_map, [(1, 0), (0, 1), (1, 1), (2, 0)]),
    "sl2l_sl2s_in_g2": (Br.sl2l_sl2s_in_g2_map, [(1, 0), (0, 1), (1, 1)]),
    "g2_in_spin7": (Br.g2_in_spin7_map, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1), (0, 0, 2)]),
    "f4_to_g2": (Br.f4_to_g2_map, [(0, 0, 0, 1), (1, 0, 0, 0)]),
}


@pytest.mark.parametrize("name", sorted(MAPS))
def test_dimension_preserved_and_invariant(name):
    make, weights = MAPS[name]
    f = make()
    for lam in weights:
        res = Br.restrict(irr_character(f.source, lam), f)
        assert res.dim() == irr_character(f.source, lam).dim()
        assert res.is_weyl_invariant()
        assert Br.restrict_irr(f, lam).dim() == res.dim()


def test_sl3_in_g2():
    f = Br.sl3_in_g2_map()
    assert Br.restrict_irr(f, (1, 0)) == {(1, 0): 1, (0, 1): 1, (0, 0): 1}
    assert Br.restrict_irr(f, (0, 1)) == {(1, 1): 1, (1, 0): 1, (0, 1): 1}


def test_sl2_pair_in_g2():
    # long x short: 7 = (1,1) + (0,2), 14 = (2,0) + (0,2) + (1,3)
    f = Br.sl2l_sl2s_in_g2_map()
    assert Br.restrict_irr(f, (1, 0)) == {(1, 1): 1, (0, 2): 1}
    assert Br.restrict_irr(f, (0, 1)) == {(2, 0): 1, (0, 2): 1, (1, 3): 1}


def test_g2_in_spin7_triple():
    f = Br.g2_in_spin7_map()
    assert Br.restrict_irr(f, (0, 0, 1)) == {(1, 0): 1, (0, 0): 1}
    assert Br.restrict_irr(f, (1, 0, 0)) == {(1, 0): 1}
    assert Br.restrict_irr(f, (0, 1, 0)) == {(0, 1): 1, (1, 0): 1}


def test_bad_embedding_rejected():
    b3, g2 = build_root_system("B3"), build_root_system("G2")
    with pytest.raises(Br.EmbeddingValidationError):
        Br._expect(Br.LatticeMap(b3, g2, ((1, 0, 0), (0, 1, 0)), "bogus"), (0, 0, 1), {(1, 0): 1, (0, 0): 1})


def test_spin_levi_branch():
    gd = Br.levi_branch(build_root_system("B3"), (0, 0, 1), (0, 1), 2)
    assert gd.denominator == 2
    assert gd.items() == [(((0, 0), 3), 1), (((0, 1), 1), 1), (((1, 0), -1), 1), (((0, 0), -3), 1)]
    assert gd.total_dim() == 8


def test_f4_levi():
    subset, node, istar = Br.f4_levi_b3()
    assert subset == (0, 1, 2) and node == 3
    assert istar.coords == (2, 4, 3, 2)
    gd = Br.levi_branch(build_root_system("F4"), (0, 0, 0, 1), subset, node)
    assert gd.total_dim() == 26
    # 26 = 1 + 8 + (7 + 1) + 8 + 1 with true grades 2, 1, 0, -1, -2
    assert {g: gd.layer(g).dim() for g in gd.grades()} == {4: 1, 2: 8, 0: 8, -2: 8, -4: 1}
    assert gd.layer(0) == {(1, 0, 0): 1, (0, 0, 0): 1}


def test_levi_branch_bad_node():
    with pytest.raises(ValueError):
        Br.levi_branch(build_root_system("B3"), (0, 0, 1), (0, 1), 1)


def test_rtilde_d5():
    dec = Br.transfer_rtilde("D5", (1, 0))
    assert dict(dec.items()) == {(0,): Laurent({2: 1, 0: 1, -2: 1}), (1,): Laurent({1: 1, -1: 1})}
    assert Br.transfer_rtilde("D5", (0, 0)) == {(0,): Laurent.one()}


def test_rtilde_e8_minuscule_grades():
    dec = Br.transfer_rtilde("E8", (0, 0, 0, 1))
    assert dec[(0, 0)] == Laurent({4: 1, 2: 1, 0: 1, -2: 1, -4: 1})
    assert dec[(1, 0)] == Laurent({2: 1, 0: 1, -2: 1})


def test_rtilde_e7_spin():
    assert Br.transfer_rtilde("E7", (0, 0, 1)) == {(1, 0): Laurent.one(), (0, 0): Laurent.one()}


@pytest.mark.parametrize("pair,lam", [("D5", (2, 1)), ("E6", (1, 1)), ("E7", (1, 0, 1)), ("E8", (0, 0, 0, 1)), ("E8", (1, 0, 0, 0))])
def test_rtilde_matches_weight_level_transfer(pair, lam):
    dec = Br.transfer_rtilde(pair, lam)
    acc = defaultdict(Laurent)
    for w, c in dec.items():
        for u, m in irr_character(dec.rs, w).items():
            acc[u] = acc[u] + c * m
    acc = {k: v for k, v in acc.items() if v}
    assert acc == Br.rtilde_weights(pair, irr_character(build_root_system(Br.AMBIENT[pair]), lam))


@pytest.mark.parametrize("pair,lams", [("D5", [(1, 0), (0, 1), (1, 1)]), ("E8", [(0, 0, 0, 1), (1, 0, 0, 0)])])
def test_rtilde_additive(pair, lams):
    rs = build_root_system(Br.AMBIENT[pair])
    coeffs = [1, 2, -1][: len(lams)]
    total = irr_character(rs, lams[0]).scale(0)
    want = defaultdict(Laurent)
    for k, lam in zip(coeffs, lams):
        total = total + irr_character(rs, lam).scale(k)
        dec = Br.transfer_rtilde(pair, lam)
        for w, c in dec.items():
            for u, m in irr_character(dec.rs, w).items():
                want[u] = want[u] + c * (m * k)
    got = Br.rtilde_weights(pair, total)
    assert got == {w: c for w, c in want.items() if c}


@pytest.mark.parametrize("pair,lam", [("D5", (1, 1)), ("E6", (0, 1)), ("E7", (0, 1, 0)), ("E8", (0, 0, 1, 0))])
def test_rtilde_at_one_is_restriction(pair, lam):
    assert Br.transfer_rtilde(pair, lam).at_one() == Br.plain_restriction(pair, lam)


def test_rtilde_wrong_rank():
    with pytest.raises(ValueError):
        Br.transfer_rtilde("D5", (1, 0, 0))
    with pytest.raises(ValueError):
        Br.transfer_rtilde("A7", (1,))


def test_subregular_parameter():
    s = Br.subregular_satake_param()
    assert s.coords == (2, 4)
    t = eval_at_torus(irr_character(build_root_system("G2"), (1, 0)), s, Fraction(1, 2))
    assert t == Laurent({2: 2, 0: 3, -2: 2})


@pytest.mark.parametrize("lam", [(0, 0, 0, 0), (0, 0, 0, 1), (1, 0, 0, 0)])
def test_e8_identity(lam):
    assert Br.e8_trace_identity_check(lam)
