"""Characters of complex reductive groups: weight multiplicities, tensor
products, decomposition into irreducibles and torus evaluations."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import Laurent
from .rootsys import (
    Cocharacter,
    GeneralLinear,
    RootSystem,
    Weight,
    dominant_representative,
    weyl_orbit,
)


class CharacterElt:
    """A virtual character: finite map ``weight -> integer multiplicity``."""

    __slots__ = ("rs", "_mults")

    def __init__(self, rs: RootSystem | GeneralLinear, mults: Mapping[Sequence[int], int] | Iterable = ()):
        self.rs = rs
        acc: dict[Weight, int] = defaultdict(int)
        items = mults.items() if isinstance(mults, Mapping) else mults
        for w, m in items:
            w = tuple(int(x) for x in w)
            if len(w) != rs.rank:
                raise ValueError(f"weight {w} has wrong length for {rs.cartan_type}")
            acc[w] += m
        self._mults = {w: m for w, m in acc.items() if m}

    @property
    def mults(self) -> dict[Weight, int]:
        return dict(self._mults)

    def __getitem__(self, w) -> int:
        return self._mults.get(tuple(w), 0)

    def items(self):
        return self._mults.items()

    def __len__(self) -> int:
        return len(self._mults)

    def __bool__(self) -> bool:
        return bool(self._mults)

    def dim(self) -> int:
        return sum(self._mults.values())

    def _check(self, other: CharacterElt):
        if other.rs != self.rs:
            raise ValueError("characters of different groups")

    def __add__(self, other: CharacterElt) -> CharacterElt:
        self._check(other)
        acc = dict(self._mults)
        for w, m in other.items():
            acc[w] = acc.get(w, 0) + m
        return CharacterElt(self.rs, acc)

    def __neg__(self) -> CharacterElt:
        return CharacterElt(self.rs, {w: -m for w, m in self.items()})

    def __sub__(self, other: CharacterElt) -> CharacterElt:
        return self + (-other)

    def scale(self, k: int) -> CharacterElt:
        return CharacterElt(self.rs, {w: k * m for w, m in self.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: dict[Weight, int] = defaultdict(int)
        for w1, m1 in self.items():
            for w2, m2 in other.items():
                acc[tuple(a + b for a, b in zip(w1, w2))] += m1 * m2
        return CharacterElt(self.rs, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterElt):
            return NotImplemented
        return self.rs == other.rs and self._mults == other._mults

    def __hash__(self):
        return hash((self.rs.cartan_type, frozenset(self._mults.items())))

    def is_weyl_invariant(self) -> bool:
        rs = self.rs
        return all(self[rs.reflect(i, w)] == m for w, m in self.items() for i in range(rs.n_reflections))

    def __repr__(self) -> str:
        return f"CharacterElt({self.rs.cartan_type}, {dict(sorted(self._mults.items()))})"


class IrrDecomp:
    """Finite map ``dominant weight -> coefficient``; coefficients are ints or
    :class:`Laurent` polynomials in ``v = q^(1/2)``."""

    __slots__ = ("rs", "_terms")

    def __init__(self, rs, terms: Mapping = ()):
        self.rs = rs
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = tuple(int(x) for x in w)
            if not rs.is_dominant(w):
                raise ValueError(f"{w} is not dominant")
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, w):
        return self._terms.get(tuple(w), 0)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other: IrrDecomp) -> IrrDecomp:
        acc = dict(self._terms)
        for w, c in other.items():
            acc[w] = acc.get(w, 0) + c
        return IrrDecomp(self.rs, acc)

    def __eq__(self, other) -> bool:
        if isinstance(other, IrrDecomp):
            return self.rs == other.rs and self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {tuple(k): v for k, v in other.items() if v != 0}
        return NotImplemented

    def at_one(self) -> IrrDecomp:
        """Specialize Laurent coefficients at ``v = 1``."""
        return IrrDecomp(self.rs, {w: (c.at_one() if isinstance(c, Laurent) else c) for w, c in self.items()})

    def dim(self):
        """Sum of ``coeff * dim`` (a Laurent polynomial if coefficients are)."""
        total = 0
        for w, c in self.items():
            total = total + c * dim(self.rs, w)
        return total

    def recompose(self) -> CharacterElt:
        """``sum coeff * irr_character``; integer coefficients only."""
        out = CharacterElt(self.rs)
        for w, c in self.items():
            if isinstance(c, Laurent):
                raise TypeError("recompose needs integer coefficients")
            out = out + irr_character(self.rs, w).scale(c)
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {c}" for w, c in sorted(self._terms.items()))
        return f"IrrDecomp({self.rs.cartan_type}, {{{body}}})"


# ---------------------------------------------------------------------------
# Freudenthal multiplicities
# ---------------------------------------------------------------------------

def _all_weights(rs: RootSystem, lam: Weight) -> dict[Weight, tuple[int, ...]]:
    """Weights of V_lam with their depth ``lam - mu`` in simple-root coordinates.

    Closure of ``{lam}`` under simple root strings; the result is saturated,
    hence equal to the weight set of V_lam.
    """
    n = rs.rank
    out = {lam: (0,) * n}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            depth = out[w]
            for i in range(n):
                k = w[i]
                if k <= 0:
                    continue
                a = rs.simple_roots[i]
                for j in range(1, k + 1):
                    u = tuple(x - j * y for x, y in zip(w, a))
                    if u not in out:
                        d = list(depth)
                        d[i] += j
                        out[u] = tuple(d)
                        nxt.append(u)
        frontier = nxt
    return out


@lru_cache(maxsize=512)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> tuple[dict[Weight, int], frozenset[Weight]]:
    weights = _all_weights(rs, lam)
    dominant = sorted((w for w in weights if rs.is_dominant(w)), key=lambda w: sum(weights[w]))
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = rs.inner(lr, lr)
    pos = rs.positive_roots
    pos_inner = [[rs.inner(a, rs.fundamental_weights[i]) for i in range(rs.rank)] for a in pos]
    mult: dict[Weight, int] = {lam: 1}
    weight_set = frozenset(weights)

    def m_of(w: Weight) -> int:
        return mult[dominant_representative(rs, w)]

    for mu in dominant[1:]:
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - rs.inner(mr, mr)
        acc = Fraction(0)
        for alpha, ai in zip(pos, pos_inner):
            k = 1
            nu = tuple(x + y for x, y in zip(mu, alpha))
            while nu in weight_set:
                acc += m_of(nu) * sum((nu[i] * ai[i] for i in range(rs.rank)), Fraction(0))
                k += 1
                nu = tuple(x + y for x, y in zip(nu, alpha))
        value = 2 * acc / denom
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = int(value)
    return mult, weight_set


def irr_character(rs: RootSystem, lam: Sequence[int]) -> CharacterElt:
    """Character of the irreducible representation with highest weight ``lam``."""
    lam = tuple(int(x) for x in lam)
    if len(lam) != rs.rank:
        raise ValueError("weight length does not match rank")
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if isinstance(rs, GeneralLinear):
        return _gl_irr_character(rs, lam)
    dom_mult, _ = _dominant_multiplicities(rs, lam)
    acc = {}
    for mu, m in dom_mult.items():
        if m:
            for w in weyl_orbit(rs, mu):
                acc[w] = m
    return CharacterElt(rs, acc)


def _gl_irr_character(gl: GeneralLinear, lam: Weight) -> CharacterElt:
    """Exterior powers (shifted by determinant powers) only: a minuscule
    highest weight ``(k+1,..,k+1,k,..,k)``."""
    if max(lam) - min(lam) > 1:
        raise NotImplementedError("only minuscule GL_n weights are supported")
    return CharacterElt(gl, {w: 1 for w in weyl_orbit(gl, lam)})


def exterior_power(n: int, i: int) -> CharacterElt:
    """Character of ``Lambda^i C^n`` as a GL_n character."""
    gl = GeneralLinear(n)
    return irr_character(gl, (1,) * i + (0,) * (n - i))


def dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Weyl dimension formula."""
    lam = tuple(lam)
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if isinstance(rs, GeneralLinear):
        return irr_character(rs, lam).dim()
    lr = tuple(a + b for a, b in zip(lam, rs.rho))
    num = Fraction(1)
    for alpha in rs.positive_roots:
        num *= rs.inner(lr, alpha) / rs.inner(rs.rho, alpha)
    if num.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    return int(num)


def _height_key(rs, w):
    if isinstance(rs, GeneralLinear):
        return (sum((rs.n - 1 - 2 * k) * x for k, x in enumerate(w)), w)
    return (rs.height(w), w)


def decompose(ch: CharacterElt) -> IrrDecomp:
    """Write a Weyl-invariant (virtual) character as a combination of irreducibles.

    Highest weights are peeled in decreasing height; ties by lexicographic
    order on coordinates.
    """
    if not ch.is_weyl_invariant():
        raise ValueError("character is not Weyl-invariant")
    rs = ch.rs
    rem = dict(ch.items())
    out: dict[Weight, int] = {}
    while rem:
        cands = [w for w in rem if rs.is_dominant(w)]
        if not cands:
            raise ValueError("character is not Weyl-invariant")
        top = max(cands, key=lambda w: _height_key(rs, w))
        c = rem[top]
        out[top] = c
        for w, m in irr_character(rs, top).items():
            v = rem.get(w, 0) - c * m
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return IrrDecomp(rs, out)


def tensor(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> IrrDecomp:
    """Decomposition of ``V_lam (x) V_mu``."""
    return decompose(irr_character(rs, lam) * irr_character(rs, mu))


def eval_at_torus(ch: CharacterElt, c: Cocharacter, m: Fraction | int = Fraction(1, 2)) -> Laurent:
    """Trace of the torus element ``c(q^m)``: ``sum mult(mu) v^(2 m <c, mu>)``."""
    m = Fraction(m)
    acc: dict[int, int] = defaultdict(int)
    for w, mult in ch.items():
        e = 2 * m * c.pair(w)
        if e.denominator != 1:
            raise ValueError(f"exponent {e} is not integral for weight {w}")
        acc[int(e)] += mult
    return Laurent(acc)


def principal_torus_cocharacter(rs: RootSystem | GeneralLinear) -> Cocharacter:
    """``2 rho^vee``; at scale 1/2 it gives the principal torus point
    ``s = f(diag(q^(1/2), q^(-1/2)))``."""
    if isinstance(rs, GeneralLinear):
        return rs.principal_cocharacter()
    total = Cocharacter((0,) * rs.rank)
    for cr in rs.positive_coroots:
        total = total + cr
    return total


def central_scalar(ch: CharacterElt | tuple, c: Cocharacter, m: Fraction | int) -> Fraction:
    """The half integer ``n`` with ``c(q^m)`` acting as ``q^n``.

    ``ch`` is a character or ``(rs, lam)``.  Raises if ``c`` does not act by a
    scalar, i.e. pairs differently with two weights.
    """
    if isinstance(ch, tuple):
        ch = irr_character(*ch)
    pairings = {c.pair(w) for w, mult in ch.items()}
    if len(pairings) != 1:
        raise ValueError("cocharacter is not central on this representation")
    return Fraction(m) * pairings.pop()
