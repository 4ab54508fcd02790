"""Embeddings of dual groups, restriction of characters along them, Levi
branching with a central grading, and the transfer map ``r~``.

All maps act on weights written in fundamental-weight coordinates.  A
:class:`LatticeMap` stores the integer matrix sending source weights to
target weights (the transpose of the torus embedding on cocharacters).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .charring import (
    CharacterElt,
    IrrDecomp,
    decompose,
    eval_at_torus,
    irr_character,
    principal_torus_cocharacter,
)
from .laurent import Laurent
from .rootsys import Cocharacter, RootSystem, Weight, build_root_system


class EmbeddingValidationError(ValueError):
    """A candidate embedding failed one of its branching checks."""


@dataclass(frozen=True)
class LatticeMap:
    source: RootSystem
    target: RootSystem
    matrix: tuple[tuple[int, ...], ...]
    name: str = ""
    grading_cochar: Cocharacter | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.matrix) != self.target.rank or any(len(r) != self.source.rank for r in self.matrix):
            raise ValueError(f"matrix shape does not match {self.source.cartan_type} -> {self.target.cartan_type}")

    def __call__(self, w: Sequence[int]) -> Weight:
        if len(w) != self.source.rank:
            raise ValueError("weight length does not match source rank")
        return tuple(sum(a * b for a, b in zip(row, w)) for row in self.matrix)

    def pullback(self, c: Cocharacter) -> Cocharacter:
        """Cocharacter of the source torus induced by one of the target torus."""
        return Cocharacter(
            sum((c.coords[i] * self.matrix[i][j] for i in range(self.target.rank)), Fraction(0))
            for j in range(self.source.rank)
        )

    def compose(self, other: LatticeMap) -> LatticeMap:
        """``self`` after ``other``."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        mat = tuple(
            tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(self.source.rank)) for j in range(other.source.rank))
            for i in range(self.target.rank)
        )
        return LatticeMap(other.source, self.target, mat, f"{self.name}.{other.name}")


def restrict(ch: CharacterElt, f: LatticeMap) -> CharacterElt:
    """Push the weight multiset of ``ch`` forward along ``f``."""
    if ch.rs != f.source:
        raise ValueError(f"character lives on {ch.rs.cartan_type}, map starts at {f.source.cartan_type}")
    acc: dict[Weight, int] = defaultdict(int)
    for w, m in ch.items():
        acc[f(w)] += m
    return CharacterElt(f.target, acc)


def restrict_irr(f: LatticeMap, lam: Sequence[int]) -> IrrDecomp:
    return decompose(restrict(irr_character(f.source, lam), f))


# ---------------------------------------------------------------------------
# Levi branching
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedDecomp:
    """``(levi highest weight, grade) -> multiplicity``; true grade is
    ``grade / denominator``."""

    levi: RootSystem
    terms: dict
    denominator: int = 2

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))

    def grades(self) -> list[int]:
        return sorted({g for _, g in self.terms}, reverse=True)

    def layer(self, grade: int) -> IrrDecomp:
        return IrrDecomp(self.levi, {w: m for (w, g), m in self.terms.items() if g == grade})

    def total_dim(self) -> int:
        from .charring import dim

        return sum(m * dim(self.levi, w) for (w, _), m in self.terms.items())

    def as_set(self) -> set:
        return {(w, g) for (w, g), m in self.terms.items() for _ in range(m)}


def levi_branch(rs: RootSystem, lam: Sequence[int], levi_subset: Sequence[int], node: int,
                levi_rs: RootSystem | None = None) -> GradedDecomp:
    """Branch ``V_lam`` to the Levi subgroup on ``levi_subset`` graded by the
    fundamental coweight of ``node`` (grades stored doubled)."""
    levi_subset = tuple(levi_subset)
    if not 0 <= node < rs.rank or node in levi_subset:
        raise ValueError(f"invalid grading node {node}")
    if any(not 0 <= i < rs.rank for i in levi_subset) or len(set(levi_subset)) != len(levi_subset):
        raise ValueError(f"invalid Levi subset {levi_subset}")
    sub = rs.subsystem(levi_subset)
    if levi_rs is not None:
        if levi_rs.cartan != sub.cartan:
            raise ValueError(f"{levi_rs.cartan_type} does not match the Levi sub-diagram")
        sub = levi_rs
    cw = rs.fundamental_coweight(node)
    layers: dict[int, dict[Weight, int]] = defaultdict(lambda: defaultdict(int))
    for w, m in irr_character(rs, lam).items():
        g = 2 * cw.pair(w)
        if g.denominator != 1:
            raise ArithmeticError("grade is not a half-integer")
        layers[int(g)][tuple(w[i] for i in levi_subset)] += m
    terms = {}
    for g, chars in layers.items():
        for w, c in decompose(CharacterElt(sub, chars)).items():
            terms[(w, g)] = c
    return GradedDecomp(sub, terms)


# ---------------------------------------------------------------------------
# The embeddings
# ---------------------------------------------------------------------------

def _expect(f: LatticeMap, lam, want: dict):
    try:
        got = restrict_irr(f, lam)
    except ValueError as e:
        raise EmbeddingValidationError(f"{f.name}: image of V{lam} is not Weyl-invariant") from e
    if got != want:
        raise EmbeddingValidationError(f"{f.name}: V{lam} restricts to {got.terms}, expected {want}")


@lru_cache(maxsize=None)
def sl3_in_g2_map() -> LatticeMap:
    """Long-root SL3 inside G2.

    Simple roots of A2 are ``alpha2`` and ``3 alpha1 + alpha2``, so the
    coroots are ``alpha2^v`` and ``alpha1^v + alpha2^v``.
    """
    g2, a2 = build_root_system("G2"), build_root_system("A2")
    f = LatticeMap(g2, a2, ((0, 1), (1, 1)), "sl3_in_g2")
    _expect(f, (1, 0), {(1, 0): 1, (0, 1): 1, (0, 0): 1})
    _expect(f, (0, 1), {(1, 1): 1, (1, 0): 1, (0, 1): 1})
    return f


@lru_cache(maxsize=None)
def sl2l_sl2s_in_g2_map() -> LatticeMap:
    """``SL2_long x SL2_short`` inside G2: the highest root and ``alpha1``
    are orthogonal, with coroots ``alpha1^v + 2 alpha2^v`` and ``alpha1^v``."""
    g2, a1a1 = build_root_system("G2"), build_root_system("A1xA1")
    f = LatticeMap(g2, a1a1, ((1, 2), (1, 0)), "sl2l_sl2s_in_g2")
    _expect(f, (1, 0), {(1, 1): 1, (0, 2): 1})
    _expect(f, (0, 1), {(2, 0): 1, (0, 2): 1, (1, 3): 1})
    return f


@lru_cache(maxsize=None)
def g2_in_spin7_map() -> LatticeMap:
    """G2 as the stabiliser of a spinor in Spin7.

    On ``e``-coordinates of B3 the torus restriction is ``e1 -> alpha1+alpha2``,
    ``e2 -> alpha1``, ``e3 -> -omega1``.  It extends the long-root SL3 through
    the GL3 Levi on nodes 1, 2.  Construction fails unless the spin, vector and
    adjoint representations branch as expected.
    """
    b3, g2 = build_root_system("B3"), build_root_system("G2")
    f = LatticeMap(b3, g2, ((-1, 1, 0), (1, 0, 0)), "g2_in_spin7")
    _expect(f, (0, 0, 1), {(1, 0): 1, (0, 0): 1})
    _expect(f, (1, 0, 0), {(1, 0): 1})
    _expect(f, (0, 1, 0), {(0, 1): 1, (1, 0): 1})
    # compatibility with SL3 = G2 n GL3: the B3 Levi weight (c1, c2) is an SL3 weight
    sl3 = sl3_in_g2_map()
    for w in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, -1, 3)]:
        if sl3(f(w)) != (w[0], w[1]):
            raise EmbeddingValidationError("g2_in_spin7 is incompatible with the long-root SL3")
    return f


@lru_cache(maxsize=None)
def f4_levi_b3() -> tuple[tuple[int, ...], int, Cocharacter]:
    """Levi of type B3 in F4: drop the last node; ``i*`` is its fundamental coweight."""
    f4, b3 = build_root_system("F4"), build_root_system("B3")
    for node in range(f4.rank):
        subset = tuple(i for i in range(f4.rank) if i != node)
        if f4.subsystem(subset).cartan == b3.cartan:
            return subset, node, f4.fundamental_coweight(node)
    raise EmbeddingValidationError("no B3 Levi in F4")


def f4_to_g2_map() -> LatticeMap:
    """Torus restriction F4 -> B3 Levi -> G2 (forgets the central grading)."""
    subset, _, _ = f4_levi_b3()
    f4, b3 = build_root_system("F4"), build_root_system("B3")
    proj = LatticeMap(f4, b3, tuple(tuple(int(j == i) for j in range(4)) for i in subset), "f4_to_b3")
    return g2_in_spin7_map().compose(proj)


# ---------------------------------------------------------------------------
# Transfer map
# ---------------------------------------------------------------------------

AMBIENT = {"D5": "G2", "E6": "G2", "E7": "B3", "E8": "F4"}
TARGET = {"D5": "A1", "E6": "A2", "E7": "G2", "E8": "G2"}


def _check_pair(pair: str, lam) -> RootSystem:
    if pair not in AMBIENT:
        raise ValueError(f"unknown dual pair {pair!r}; expected one of {sorted(AMBIENT)}")
    rs = build_root_system(AMBIENT[pair])
    if len(lam) != rs.rank:
        raise ValueError(f"{pair}: expected a weight of {rs.cartan_type} (rank {rs.rank})")
    return rs


def _a1_trace(b: int) -> Laurent:
    """Trace of ``diag(v, v^-1)`` on ``Sym^b``."""
    return Laurent({b - 2 * k: 1 for k in range(b + 1)})


def transfer_rtilde(pair: str, lam: Sequence[int]) -> IrrDecomp:
    """``r~(V_lam) = sum_{V'} Tr_{V''}(s) V'`` with Laurent coefficients in ``v``."""
    lam = tuple(lam)
    _check_pair(pair, lam)
    out: dict[Weight, Laurent] = defaultdict(Laurent)
    if pair == "D5":
        for (a, b), c in restrict_irr(sl2l_sl2s_in_g2_map(), lam).items():
            out[(a,)] = out[(a,)] + _a1_trace(b) * c
        return IrrDecomp(build_root_system("A1"), out)
    if pair in ("E6", "E7"):
        f = sl3_in_g2_map() if pair == "E6" else g2_in_spin7_map()
        return IrrDecomp(f.target, {w: Laurent.one() * c for w, c in restrict_irr(f, lam).items()})
    subset, node, _ = f4_levi_b3()
    f = g2_in_spin7_map()
    graded = levi_branch(build_root_system("F4"), lam, subset, node, levi_rs=f.source)
    for (w, g), m in graded.items():
        for w2, c in restrict_irr(f, w).items():
            out[w2] = out[w2] + Laurent.monomial(g, m * c)
    return IrrDecomp(f.target, out)


def rtilde_weights(pair: str, ch: CharacterElt) -> dict[Weight, Laurent]:
    """Weight-level transfer of a (virtual) character: each ambient weight goes to
    its ``G'`` weight with coefficient ``v`` to the power of its grade."""
    if pair not in AMBIENT:
        raise ValueError(f"unknown dual pair {pair!r}; expected one of {sorted(AMBIENT)}")
    if ch.rs.cartan_type != AMBIENT[pair]:
        raise ValueError(f"{pair} transfers characters of {AMBIENT[pair]}")
    if pair == "D5":
        f = sl2l_sl2s_in_g2_map()
        split = lambda w: ((f(w)[0],), f(w)[1])
    elif pair == "E8":
        f, (_, _, istar) = f4_to_g2_map(), f4_levi_b3()
        split = lambda w: (f(w), int(2 * istar.pair(w)))
    else:
        f = sl3_in_g2_map() if pair == "E6" else g2_in_spin7_map()
        split = lambda w: (f(w), 0)
    out: dict[Weight, Laurent] = defaultdict(Laurent)
    for w, m in ch.items():
        w2, g = split(w)
        out[w2] = out[w2] + Laurent.monomial(g, m)
    return {w: c for w, c in out.items() if c}


def plain_restriction(pair: str, lam: Sequence[int]) -> IrrDecomp:
    """Restriction of ``V_lam`` to the dual group ``G'`` alone (``s = 1``)."""
    lam = tuple(lam)
    rs = _check_pair(pair, lam)
    if pair == "D5":
        f = LatticeMap(rs, build_root_system("A1"), ((1, 2),), "sl2l_in_g2")
    elif pair == "E6":
        f = sl3_in_g2_map()
    elif pair == "E7":
        f = g2_in_spin7_map()
    else:
        f = f4_to_g2_map()
    return restrict_irr(f, lam)


def subregular_satake_param() -> Cocharacter:
    """``2 rho^v`` of the long-root SL3, as a G2 cocharacter; at ``m = 1/2`` it is
    ``diag(q, 1, q^-1)`` in SL3."""
    f = sl3_in_g2_map()
    return f.pullback(principal_torus_cocharacter(f.target))


def e8_trace_identity_lhs(lam: Sequence[int]) -> Laurent:
    """``sum_n q^n Tr_{V_n}(s_p)`` over the B3 layers of ``V_lam``."""
    subset, node, _ = f4_levi_b3()
    b3 = build_root_system("B3")
    graded = levi_branch(build_root_system("F4"), lam, subset, node, levi_rs=b3)
    sp = principal_torus_cocharacter(b3)
    total = Laurent()
    for (w, g), m in graded.items():
        total = total + eval_at_torus(irr_character(b3, w), sp, Fraction(1, 2)).shift(g) * m
    return total


def e8_trace_identity_rhs(lam: Sequence[int]) -> Laurent:
    """``sum_{V'} Tr_{V''}(s) Tr_{V'}(s_p)`` with ``s_p`` principal in G2."""
    g2 = build_root_system("G2")
    sp = principal_torus_cocharacter(g2)
    total = Laurent()
    for w, coeff in transfer_rtilde("E8", lam).items():
        total = total + coeff * eval_at_torus(irr_character(g2, w), sp, Fraction(1, 2))
    return total


def e8_trace_identity_check(lam: Sequence[int]) -> bool:
    return e8_trace_identity_lhs(lam) == e8_trace_identity_rhs(lam)
