import itertools
from fractions import Fraction

import pytest

from heckematch import satake
from heckematch.laurent import Laurent
from heckematch.rootsys import Cocharacter, build_root_system

TABLE3 = {"D5": (8, 1, 8), "E6": (16, 1, 8), "E7": (27, 2, 9), "E8": (56, 8, 29)}


def test_table3_rows():
    rows = {r["group"]: r for r in satake.table3()}
    assert set(rows) == set(TABLE3)
    for g, (d, du, dn) in TABLE3.items():
        assert (rows[g]["d"], rows[g]["delta_Ubar"], rows[g]["delta_Nbar"]) == (d, du, dn)
    assert [rows[g]["L"] for g in TABLE3] == ["GL1", "GL2", "GL3", "GSp6"]


@pytest.mark.parametrize("group,node,center", [("D5", 0, 0), ("E6", 0, 0), ("E7", 6, 0), ("E8", 7, 1)])
def test_ambient_parabolic_shape(group, node, center):
    pd = satake.ambient_parabolic(group)
    assert pd.node == node
    assert pd.heisenberg_center_dim == center
    assert pd.d == TABLE3[group][0]


def test_e6_parabolic_up_to_symmetry():
    # E6 nodes 0 and 5 are swapped by the diagram automorphism
    assert satake.nilradical(build_root_system("E6"), 5).d == 16


def test_nilradical_dimensions():
    # abelian radicals: D5/P1 is the 8-dim vector, E7/P7 the 27-dim Jordan algebra
    assert len(satake.nilradical(build_root_system("D5"), 0).nilradical_roots) == 8
    assert len(satake.nilradical(build_root_system("E7"), 6).nilradical_roots) == 27
    assert len(satake.nilradical(build_root_system("E8"), 7).nilradical_roots) == 57


def test_g2_exponents():
    assert satake.g2_delta(1) == 5
    assert satake.g2_delta(2) == 3
    with pytest.raises(ValueError):
        satake.g2_parabolic(3)


def test_delta_exponent_of_principal_coweight():
    # pairing rho^v (coroot coordinates (3, 5)) with the radical sums root heights
    rs = build_root_system("G2")
    pd = satake.nilradical(rs, 0)
    c = Cocharacter([3, 5])
    heights = sum(sum(r) for r in rs.positive_roots_root_coords if r[0] > 0)
    assert satake.delta_exponent(pd, c) == heights


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 7) for m in range(1, n + 1)])
def test_gl_family(n, m):
    # delta_{U_m} = |det g1|^{m-n} |det g2|^m
    assert satake.gl_levi_delta(n, m) == (m - n, m)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 7) for m in range(1, n + 1)])
def test_gsp_family(n, m):
    # delta_{U_m} = |det g1|^{-(2n-m+1)} |i(g2)|^{m(2n-m+1)/2}
    assert satake.gsp_levi_delta(n, m) == (-(2 * n - m + 1), Fraction(m * (2 * n - m + 1), 2))


def test_bad_levi_index():
    with pytest.raises(ValueError):
        satake.gl_levi_delta(3, 0)
    with pytest.raises(ValueError):
        satake.gsp_levi_delta(2, 3)


def _gauss(n, k):
    """[n choose k]_q by the q-Pascal rule, as a dict in q."""
    if k < 0 or k > n:
        return {}
    if k in (0, n):
        return {0: 1}
    out = dict(_gauss(n - 1, k - 1))
    for e, c in _gauss(n - 1, k).items():
        out[e + k] = out.get(e + k, 0) + c
    return out


def _wedge_trace(n, i):
    # diag(q^{(n-1)/2}, ..., q^{-(n-1)/2}) on Lambda^i, in v = q^(1/2)
    exps = [n - 1 - 2 * k for k in range(n)]
    out = {}
    for S in itertools.combinations(exps, i):
        out[sum(S)] = out.get(sum(S), 0) + 1
    return Laurent(out)


@pytest.mark.parametrize("n,i", [(n, i) for n in range(1, 9) for i in range(1, n + 1)])
def test_minuscule_identity(n, i):
    lhs, rhs = satake.minuscule_identity_sides(n, i)
    assert lhs == rhs == _wedge_trace(n, i)
    gauss = Laurent({2 * e: c for e, c in _gauss(n, i).items()})
    assert lhs == gauss.shift(-i * (n - i))
    assert satake.minuscule_satake(n, i) == Laurent.monomial(i * (n - i))


@pytest.mark.parametrize("case,pair", [("D5", ("1/2", "5/2")), ("E6", ("1/2", "3/2")), ("E7", ("0", "1")), ("E8", ("-1", "1"))])
def test_normalization(case, pair):
    rep = satake.normalization_check(case)
    assert rep.ok, rep.mismatches()
    assert rep.computed["V(M)+1"] == tuple(Fraction(x) for x in pair)


def test_normalization_e8_induced():
    rep = satake.normalization_check("E8")
    assert rep.computed["P2xQ2"] == (1, Fraction(-3, 2))


def test_normalization_unknown_case():
    with pytest.raises(ValueError):
        satake.normalization_check("G2")
