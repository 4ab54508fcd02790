"""Dual-side Satake bookkeeping.

Modular characters of parabolics come from sums of nilradical roots; the
minuscule Satake dictionary for GL_n is checked against Poincare polynomials;
and the twists appearing in the normalized Jacquet modules are recomputed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .charring import eval_at_torus, exterior_power, irr_character, principal_torus_cocharacter
from .laurent import Laurent
from .rootsys import Cocharacter, GeneralLinear, RootSystem, build_root_system, poincare_ratio


@dataclass(frozen=True)
class ParabolicData:
    rs: RootSystem
    node: int
    nilradical_roots: tuple[tuple[int, ...], ...]  # simple-root coordinates
    center_cochar: Cocharacter
    heisenberg_center_dim: int

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(r[self.node] for r in self.nilradical_roots)

    @property
    def d(self) -> int:
        return len(self.nilradical_roots) - self.heisenberg_center_dim

    @property
    def levi_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rs.rank) if i != self.node)

    def root_sum(self) -> tuple[int, ...]:
        """``2 rho_N`` in fundamental-weight coordinates."""
        tot = [0] * self.rs.rank
        for r in self.nilradical_roots:
            for i, x in enumerate(self.rs.root_to_weight(r)):
                tot[i] += x
        return tuple(tot)


@dataclass(frozen=True)
class DeltaExponent:
    """``|chi|^value`` restricted to ``subgroup``."""

    value: Fraction
    character: str
    subgroup: str

    def __str__(self) -> str:
        return f"|{self.character}|^{self.value} on {self.subgroup}"


def nilradical(rs: RootSystem, node: int) -> ParabolicData:
    if not 0 <= node < rs.rank:
        raise ValueError(f"node {node} out of range for {rs.cartan_type}")
    nil = tuple(r for r in rs.positive_roots_root_coords if r[node] > 0)
    levels = {r[node] for r in nil}
    top = max(levels)
    center = sum(1 for r in nil if r[node] == top) if top > 1 else 0
    return ParabolicData(rs, node, nil, rs.fundamental_coweight(node), center)


def delta_exponent(pd: ParabolicData, c: Cocharacter) -> Fraction:
    """``<c, sum of nilradical roots>``."""
    return c.pair(pd.root_sum())


def _signature(rs: RootSystem) -> tuple:
    long_len = max((rs.inner(a, a) for a in rs.positive_roots), default=0)
    n_long = sum(1 for a in rs.positive_roots if rs.inner(a, a) == long_len)
    return tuple(sorted(rs.degrees)), n_long


def levi_matches(pd: ParabolicData, label: str) -> bool:
    """Whether the Levi of ``pd`` has the type ``label`` (by degrees and long-root count)."""
    return _signature(pd.rs.subsystem(pd.levi_nodes)) == _signature(build_root_system(label))


# ---------------------------------------------------------------------------
# Group data of the four ambient groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AmbientCase:
    group: str
    levi: str  # type of M
    d: int
    heisenberg: bool
    h_type: str  # type of the Levi-containing group on the H side
    h_levi: str  # type of the derived group of L
    h_node: int  # dropped node of Q in h_type
    L: str
    chi: str
    n_ref: int  # chi(z * 1) = z^n_ref on the centre of L


CASES = {
    "D5": AmbientCase("D5", "D4", 8, False, "A1", "A0", 0, "GL1", "det", 1),
    "E6": AmbientCase("E6", "D5", 16, False, "A2", "A1", 1, "GL2", "det", 2),
    "E7": AmbientCase("E7", "E6", 27, False, "C3", "A2", 2, "GL3", "det", 3),
    "E8": AmbientCase("E8", "E7", 56, True, "F4", "C3", 0, "GSp6", "i", 2),
}


@lru_cache(maxsize=None)
def ambient_parabolic(group: str) -> ParabolicData:
    """The maximal parabolic of ``group`` singled out by ``d`` and the shape of its
    nilradical (abelian, or Heisenberg with one-dimensional centre)."""
    case = CASES[group]
    rs = build_root_system(group)
    for node in range(rs.rank):
        pd = nilradical(rs, node)
        if pd.d == case.d and (pd.heisenberg_center_dim == 1) == case.heisenberg and levi_matches(pd, case.levi):
            return pd
    raise LookupError(f"no parabolic with d={case.d} in {group}")


@lru_cache(maxsize=None)
def h_parabolic(group: str) -> ParabolicData:
    case = CASES[group]
    pd = nilradical(build_root_system(case.h_type), case.h_node)
    if not levi_matches(pd, case.h_levi):
        raise LookupError(f"node {case.h_node} of {case.h_type} does not give a {case.h_levi} Levi")
    return pd


def _per_unit(pd: ParabolicData, n_ref: int) -> Cocharacter:
    # lambda_*(z) is the scalar z^-1 of L and acts on N/Z by z; chi(lambda_*(z)) = z^-n_ref,
    # and delta_Nbar(lambda_*(z)) = z^-(root sum), so the exponent is root sum / n_ref.
    return pd.center_cochar * Fraction(1, n_ref)


def delta_ubar(group: str) -> DeltaExponent:
    case = CASES[group]
    pd = h_parabolic(group)
    return DeltaExponent(delta_exponent(pd, _per_unit(pd, case.n_ref)), case.chi, case.L)


def delta_nbar(group: str) -> DeltaExponent:
    case = CASES[group]
    pd = ambient_parabolic(group)
    return DeltaExponent(delta_exponent(pd, _per_unit(pd, case.n_ref)), case.chi, case.L)


def table3() -> list[dict]:
    """Rows ``group, M, d, L, delta_Ubar, delta_Nbar`` computed from root data."""
    rows = []
    for g, case in CASES.items():
        pd = ambient_parabolic(g)
        rows.append({
            "group": g,
            "M": case.levi,
            "d": pd.d,
            "L": case.L,
            "delta_Ubar": delta_ubar(g).value,
            "delta_Nbar": delta_nbar(g).value,
        })
    return rows


# ---------------------------------------------------------------------------
# G2 parabolics
# ---------------------------------------------------------------------------

def g2_parabolic(k: int) -> ParabolicData:
    """``P_1`` stabilises a null line (drop the short node), ``P_2`` a null plane."""
    if k not in (1, 2):
        raise ValueError("G2 has parabolics P_1 and P_2")
    return nilradical(build_root_system("G2"), k - 1)


def g2_det_pairing(k: int) -> Fraction:
    """``<lambda_*, det>`` for ``M_k = GL2``: det is read off the top graded piece of
    the 7-dimensional representation (``V_1`` for ``k = 1``, ``V_2`` for ``k = 2``)."""
    pd = g2_parabolic(k)
    wts = irr_character(pd.rs, (1, 0)).mults
    grades = {w: pd.center_cochar.pair(w) for w in wts}
    top = max(grades.values())
    return sum((grades[w] * m for w, m in wts.items() if grades[w] == top), Fraction(0))


def g2_delta(k: int) -> Fraction:
    pd = g2_parabolic(k)
    return delta_exponent(pd, pd.center_cochar * (1 / g2_det_pairing(k)))


# ---------------------------------------------------------------------------
# Parabolics of GL_n and GSp_2n
# ---------------------------------------------------------------------------

def _levi_delta(roots, c1, c2, ref1, ref2):
    """Sum the roots positive on ``c1`` and read off exponents of the two
    reference characters (``ref_i`` = their value on ``c_i``)."""
    pair = lambda c, r: sum(a * b for a, b in zip(c, r))
    unip = [r for r in roots if pair(c1, r) > 0]
    s1 = sum(pair(c1, r) for r in unip)
    s2 = sum(pair(c2, r) for r in unip)
    e1 = Fraction(s1, ref1) if ref1 else Fraction(0)
    e2 = Fraction(s2, ref2) if ref2 else None
    return e1, e2


def gl_levi_delta(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Exponents of ``|det g1|`` and ``|det g2|`` in ``delta_{U_m}`` for ``Q_m`` in GL_n,
    ``g1`` in GL_m and ``g2`` in GL_{n-m}.

    GL_n acts on row vectors by ``x g^-1``; the cocharacter with ``z`` on the first
    ``m`` coordinates is ``g1 = z^-1``.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    roots = []
    for a in range(n):
        for b in range(n):
            if a != b:
                r = [0] * n
                r[a], r[b] = 1, -1
                roots.append(r)
    c1 = [1] * m + [0] * (n - m)
    c2 = [0] * m + [1] * (n - m)
    e1, e2 = _levi_delta(roots, c1, c2, -m, -(n - m))
    # empty g2 block: the closed form still reads |det g2|^m
    return e1, (Fraction(m) if e2 is None else e2)


def gsp_levi_delta(n: int, m: int) -> tuple[Fraction, Fraction]:
    """Exponents of ``|det g1|`` and ``|i(g2)|`` in ``delta_{U_m}`` for ``Q_m`` in GSp_2n.

    Torus characters are ``(eps_0; eps_1..eps_n)``: ``e_i`` has weight ``eps_i`` and
    ``f_i`` has ``eps_0 - eps_i``; the roots are the weights of ``Sym^2`` of the
    standard representation twisted by ``-eps_0``.
    """
    if not 1 <= m <= n:
        raise ValueError("need 1 <= m <= n")
    vec = lambda e0, *pairs: tuple([e0] + [sum(c for j, c in pairs if j == i) for i in range(1, n + 1)])
    roots = set()
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            if a != b:
                roots.add(vec(0, (a, 1), (b, -1)))
            if a <= b:
                roots.add(vec(-1, (a, 1), (b, 1)))
                roots.add(vec(1, (a, -1), (b, -1)))
    # c1: z on e_1..e_m, so g1 = z^-1 and det g1 = z^-m
    c1 = (0,) + (1,) * m + (0,) * (n - m)
    # c2: scales f_1..f_m by z with g1 = 1, i.e. i(g2) = z^-1
    c2 = (1,) + (0,) * n
    return _levi_delta(sorted(roots), c1, c2, -m, -1)


def gl_closed_form(n: int, m: int) -> tuple[Fraction, Fraction]:
    return Fraction(m - n), Fraction(m)


def gsp_closed_form(n: int, m: int) -> tuple[Fraction, Fraction]:
    return Fraction(-(2 * n - m + 1)), Fraction(m * (2 * n - m + 1), 2)


# ---------------------------------------------------------------------------
# Minuscule Satake
# ---------------------------------------------------------------------------

def minuscule_satake(n: int, i: int) -> Laurent:
    """``S(T_{lambda_i}) = q^{i(n-i)/2} V_i``: the coefficient ``q^{i(n-i)/2}`` in ``v``."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    return Laurent.monomial(i * (n - i))


def minuscule_identity_sides(n: int, i: int) -> tuple[Laurent, Laurent]:
    """``(q^{i(i-n)/2} [n choose i]_q, Tr_{Lambda^i}(s))`` in ``v``; the Gaussian
    binomial comes from Poincare polynomials of A_{n-1}."""
    rs = build_root_system("A0" if n == 1 else f"A{n - 1}")
    ratio = poincare_ratio(rs, [k for k in range(n - 1) if k != i - 1])
    lhs = ratio.substitute_power(2, "v").shift(-i * (n - i))
    gl = GeneralLinear(n)
    rhs = eval_at_torus(exterior_power(n, i), principal_torus_cocharacter(gl), Fraction(1, 2))
    return lhs, rhs


def minuscule_identity(n: int, i: int) -> bool:
    lhs, rhs = minuscule_identity_sides(n, i)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Normalization of the Jacquet modules
# ---------------------------------------------------------------------------

F = Fraction

# Unnormalized data: exponents (b, c) of V(M) x |chi|^b + 1 x |chi|^c, and for each
# induced piece (G2 parabolic k, L-parabolic m or None, exponent of |chi|).
UNNORMALIZED = {
    "D5": ((1, 3), [(1, None, 3)]),
    "E6": ((1, 2), [(2, None, 2), (1, 1, 2)]),
    "E7": ((1, 2), [(2, 2, 2), (1, 1, 2)]),
    "E8": ((3, 5), [(2, 2, 5), (1, 1, 5)]),
}

# Normalized twists as stated for r_Ubar(V).
NORMALIZED = {
    "D5": {"V(M)+1": (F(1, 2), F(5, 2)), "P1": (F(0),)},
    "E6": {"V(M)+1": (F(1, 2), F(3, 2)), "P2": (F(0),), "P1xQ1": (F(-1, 2), F(1))},
    "E7": {"V(M)+1": (F(0), F(1)), "P2xQ2": (F(0), F(0)), "P1xQ1": (F(-1, 2), F(1, 2))},
    "E8": {"V(M)+1": (F(-1), F(1)), "P2xQ2": (F(1), F(-3, 2)), "P1xQ1": (F(1, 2), F(-1, 2))},
}


@dataclass
class NormalizationReport:
    case: str
    delta_ubar: Fraction
    computed: dict
    expected: dict

    @property
    def ok(self) -> bool:
        return self.computed == self.expected

    def mismatches(self) -> dict:
        return {k: (self.computed.get(k), v) for k, v in self.expected.items() if self.computed.get(k) != v}


def _induced_twist(case: AmbientCase, k: int, m: int | None, a: Fraction) -> tuple[Fraction, ...]:
    """Twist of ``C_c(GL_k)`` after writing ``Ind = i(delta^-1/2 x -)``.

    The G2-side ``|det|^s`` of ``M_k`` moves onto ``g1`` through
    ``C_c(GL_k) = C_c(GL_k) x |det|^s``.
    """
    g2_shift = -g2_delta(k) / 2
    if m is None:
        # L itself is GL_k: the whole twist sits on det
        return (a + g2_shift,)
    n = int(case.L[-1]) if case.chi == "det" else int(case.L[-1]) // 2
    if case.chi == "det":
        d1, d2 = gl_levi_delta(n, m)
        t1, t2 = a, a  # det of GL_n restricted to GL_m x GL_{n-m}
    else:
        d1, d2 = gsp_levi_delta(n, m)
        t1, t2 = F(0), a  # similitude of (g1, g2) is i(g2)
    return (t1 - d1 / 2 + g2_shift, t2 - d2 / 2)


def normalization_check(case: str) -> NormalizationReport:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}")
    data = CASES[case]
    du = delta_ubar(case).value
    (b, c), pieces = UNNORMALIZED[case]
    computed = {"V(M)+1": (F(b) - du / 2, F(c) - du / 2)}
    for k, m, a in pieces:
        label = f"P{k}" if m is None else f"P{k}xQ{m}"
        computed[label] = _induced_twist(data, k, m, F(a) - du / 2)
    return NormalizationReport(case, du, computed, NORMALIZED[case])
