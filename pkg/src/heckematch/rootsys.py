"""Root systems and Weyl group combinatorics in fundamental-weight coordinates.

Conventions
-----------
* ``cartan[i][j] = <alpha_i^vee, alpha_j>`` with Bourbaki node numbering
  (nodes are 0-indexed in code, 1-indexed in labels such as ``omega_1``).
* A weight is a tuple of integers ``(<alpha_1^vee, mu>, ..., <alpha_n^vee, mu>)``.
  The simple root ``alpha_j`` therefore has coordinates ``cartan[.][j]``.
* A :class:`Cocharacter` is stored in simple-coroot coordinates (rational
  entries allowed, so fundamental coweights are representable); its pairing
  with a weight is the plain dot product.
* Products of simple types are written ``"A1xA1"``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .fields import inverse
from .laurent import Laurent, q_integer

Weight = tuple[int, ...]
WeightVector = Weight

SUPPORTED = "A0, A<n>, B<n> (n>=2), C<n> (n>=2), D<n> (n>=3), E6, E7, E8, F4, G2 and products joined by 'x'"

# Degrees of basic invariants; used only to cross-check the height-based
# exponents computed from the positive roots.
DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def degrees_of(letter: str, n: int) -> tuple[int, ...]:
    if letter == "A":
        return tuple(range(2, n + 2))
    if letter in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if letter == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    return DEGREES[f"{letter}{n}"]


def _simple_cartan(letter: str, n: int) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        c[i][j] = a_ij
        c[j][i] = a_ji

    if letter == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif letter == "B":
        if n < 2:
            raise ValueError("B_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
        link(n - 2, n - 1, -1, -2)
    elif letter == "C":
        if n < 2:
            raise ValueError("C_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif letter == "D":
        if n < 3:
            raise ValueError("D_n needs n >= 3")
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        if n != 4:
            raise ValueError("only F4")
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        if n != 2:
            raise ValueError("only G2")
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
    else:
        raise ValueError(f"unknown Cartan type letter {letter!r}")
    return c


def _parse(label: str) -> list[tuple[str, int]]:
    parts = []
    for piece in label.replace(" ", "").split("x"):
        m = re.fullmatch(r"([A-G])(\d+)", piece)
        if not m:
            raise ValueError(f"unsupported Cartan type {label!r}; supported: {SUPPORTED}")
        letter, n = m.group(1), int(m.group(2))
        if n == 0 and letter != "A":
            raise ValueError(f"unsupported Cartan type {label!r}")
        parts.append((letter, n))
    return parts


def cartan_matrix(label: str) -> tuple[tuple[int, ...], ...]:
    blocks = [_simple_cartan(letter, n) for letter, n in _parse(label)]
    size = sum(len(b) for b in blocks)
    out = [[0] * size for _ in range(size)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class Cocharacter:
    """A (rational) cocharacter in simple-coroot coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in coords))

    def pair(self, weight: Sequence[int]) -> Fraction:
        if len(weight) != len(self.coords):
            raise ValueError("rank mismatch between cocharacter and weight")
        return sum((c * w for c, w in zip(self.coords, weight)), Fraction(0))

    def __add__(self, other: Cocharacter) -> Cocharacter:
        return Cocharacter(a + b for a, b in zip(self.coords, other.coords))

    def __mul__(self, k) -> Cocharacter:
        return Cocharacter(c * k for c in self.coords)

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)


@dataclass(frozen=True)
class RootSystem:
    """Cartan data and root combinatorics for a (possibly reducible) type."""

    cartan_type: str
    cartan: tuple[tuple[int, ...], ...]
    _positive_root_coords: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def n_reflections(self) -> int:
        return len(self.cartan)

    # -- basic data -------------------------------------------------------
    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(tuple(self.cartan[k][j] for k in range(n)) for j in range(n))

    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        n = self.rank
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    @property
    def positive_roots_root_coords(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots as nonnegative integer combinations of simple roots."""
        return self._positive_root_coords

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root_to_weight(c) for c in self._positive_root_coords)

    @cached_property
    def roots(self) -> tuple[Weight, ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """``d_i = (alpha_i, alpha_i)/2``, normalized per component so the
        shortest simple root has ``d = 1``."""
        n = self.rank
        d: list[Fraction | None] = [None] * n
        for start in range(n):
            if d[start] is not None:
                continue
            comp = [start]
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(n):
                    if j != i and self.cartan[i][j] != 0 and d[j] is None:
                        # d_i C_ij = d_j C_ji
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        comp.append(j)
                        stack.append(j)
            smallest = min(d[k] for k in comp)
            for k in comp:
                d[k] = d[k] / smallest
        return tuple(d)

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.rank == 0:
            return ()
        return tuple(tuple(r) for r in inverse(self.cartan))

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Inner products ``(omega_i, omega_j)`` of fundamental weights."""
        d = self.symmetrizer
        ci = self.cartan_inverse
        return tuple(tuple(d[i] * ci[i][j] for j in range(self.rank)) for i in range(self.rank))

    def inner(self, u: Sequence, w: Sequence) -> Fraction:
        g = self.gram
        return sum((u[i] * g[i][j] * w[j] for i in range(self.rank) for j in range(self.rank) if u[i] and w[j]), Fraction(0))

    # -- coordinate changes -----------------------------------------------
    def root_to_weight(self, c: Sequence) -> Weight:
        n = self.rank
        return tuple(sum(self.cartan[k][j] * c[j] for j in range(n)) for k in range(n))

    def weight_to_root_coords(self, w: Sequence) -> tuple[Fraction, ...]:
        ci = self.cartan_inverse
        return tuple(sum((ci[j][k] * w[k] for k in range(self.rank)), Fraction(0)) for j in range(self.rank))

    def height(self, w: Sequence) -> Fraction:
        """Sum of simple-root coordinates (rational for non-root-lattice weights)."""
        return sum(self.weight_to_root_coords(w), Fraction(0))

    def coroot(self, c: Sequence[int]) -> Cocharacter:
        """Coroot of the root with simple-root coordinates ``c``."""
        d = self.symmetrizer
        s = [[d[i] * self.cartan[i][j] for j in range(self.rank)] for i in range(self.rank)]
        norm2 = sum(c[i] * s[i][j] * c[j] for i in range(self.rank) for j in range(self.rank))
        d_beta = norm2 / 2
        return Cocharacter(c[j] * d[j] / d_beta for j in range(self.rank))

    @cached_property
    def simple_coroots(self) -> tuple[Cocharacter, ...]:
        return tuple(Cocharacter(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def positive_coroots(self) -> tuple[Cocharacter, ...]:
        return tuple(self.coroot(c) for c in self._positive_root_coords)

    def fundamental_coweight(self, i: int) -> Cocharacter:
        return Cocharacter(self.cartan_inverse[i])

    # -- Weyl group -------------------------------------------------------
    def reflect(self, i: int, w: Sequence[int]) -> Weight:
        """Simple reflection ``s_i``."""
        k = w[i]
        if k == 0:
            return tuple(w)
        a = self.simple_roots[i]
        return tuple(x - k * y for x, y in zip(w, a))

    def is_dominant(self, w: Sequence[int]) -> bool:
        return all(x >= 0 for x in w)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Node sets of the connected components of the Dynkin diagram."""
        seen: set[int] = set()
        out = []
        for s in range(self.rank):
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(self.rank):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    @cached_property
    def exponents(self) -> tuple[int, ...]:
        """Exponents from the height partition of the positive roots."""
        heights = [sum(c) for c in self._positive_root_coords]
        if not heights:
            return ()
        counts = [heights.count(k) for k in range(max(heights) + 2)]
        out = []
        for k in range(1, max(heights) + 1):
            out += [k] * (counts[k] - counts[k + 1])
        return tuple(sorted(out))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(e + 1 for e in self.exponents)

    @cached_property
    def weyl_group_order(self) -> int:
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def subsystem(self, nodes: Sequence[int]) -> RootSystem:
        """Root system on the sub-diagram spanned by ``nodes`` (in that order)."""
        sub = tuple(tuple(self.cartan[i][j] for j in nodes) for i in nodes)
        return from_cartan(sub, f"{self.cartan_type}[{','.join(str(i + 1) for i in nodes)}]")


def _positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Close the simple roots under simple reflections (simple-root coordinates)."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                k = sum(beta[j] * cartan[i][j] for j in range(n))
                if k == 0:
                    continue
                img = list(beta)
                img[i] -= k
                img = tuple(img)
                if img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    pos = [r for r in found if all(x >= 0 for x in r)]
    if len(pos) * 2 != len(found):
        raise ValueError("Cartan matrix is not of finite type")
    return tuple(sorted(pos, key=lambda r: (sum(r), tuple(-x for x in r))))


def from_cartan(cartan: Sequence[Sequence[int]], label: str = "custom") -> RootSystem:
    cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    n = len(cartan)
    for i in range(n):
        if cartan[i][i] != 2:
            raise ValueError("Cartan matrix diagonal must be 2")
        for j in range(n):
            if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                raise ValueError("invalid off-diagonal Cartan entries")
    return RootSystem(label, cartan, _positive_roots_from_cartan(cartan))


@lru_cache(maxsize=None)
def build_root_system(label: str) -> RootSystem:
    """Root system of the given Cartan type label, e.g. ``"G2"`` or ``"A1xA1"``."""
    parts = _parse(label)
    rs = from_cartan(cartan_matrix(label), label)
    for comp, (letter, n) in zip(rs.components if rs.rank else (), [p for p in parts if p[1] > 0]):
        sub = rs.subsystem(comp)
        if sorted(sub.degrees) != sorted(degrees_of(letter, n)):
            raise AssertionError(f"degree mismatch for {letter}{n}")
    return rs


def weyl_orbit(rs: RootSystem, w: Sequence[int]) -> frozenset[Weight]:
    """Orbit of ``w`` under the Weyl group, by closure under simple reflections."""
    start = tuple(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(rs.n_reflections):
                y = rs.reflect(i, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def dominant_representative(rs: RootSystem, w: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    x = tuple(w)
    while True:
        i = next((k for k, c in enumerate(x) if c < 0), None)
        if i is None:
            return x
        x = rs.reflect(i, x)


def poincare_polynomial(rs: RootSystem, nodes: Iterable[int] | None = None) -> Laurent:
    """``W(q) = sum_w q^l(w)`` for the parabolic subgroup on ``nodes``
    (whole group if ``None``), as a product of ``[e+1]_q`` over exponents."""
    sub = rs if nodes is None else rs.subsystem(sorted(nodes))
    out = Laurent.one("q")
    for e in sub.exponents:
        out = out * q_integer(e + 1)
    return out


def poincare_ratio(rs: RootSystem, levi_nodes: Iterable[int]) -> Laurent:
    """``W(q) / W_L(q)``: the number of F_q-points of ``G/P`` for the parabolic
    whose Levi has simple roots ``levi_nodes``."""
    levi_nodes = sorted(set(levi_nodes))
    if any(i < 0 or i >= rs.rank for i in levi_nodes):
        raise ValueError("levi node out of range")
    num = poincare_polynomial(rs)
    den = poincare_polynomial(rs, levi_nodes)
    return poly_exact_divide(num, den)


def poly_exact_divide(num: Laurent, den: Laurent) -> Laurent:
    """Exact division of integer polynomials (den monic in its lowest term)."""
    rem = dict(num.terms)
    quot: dict[int, int] = {}
    d_lo = den.min_exp()
    d_lead = den.coeff(d_lo)
    if abs(d_lead) != 1:
        raise ValueError("divisor must have unit lowest coefficient")
    while rem:
        lo = min(rem)
        c = rem[lo] * d_lead
        k = lo - d_lo
        quot[k] = c
        for e, dc in den:
            rem[e + k] = rem.get(e + k, 0) - c * dc
            if rem[e + k] == 0:
                del rem[e + k]
        if len(quot) > 10_000:
            raise ValueError("division is not exact")
    out = Laurent(quot, var=num.var)
    if out.min_exp() < 0 or out * den != num:
        raise ValueError("division is not exact")
    return out


@dataclass(frozen=True)
class GeneralLinear:
    """GL_n with weights written in the standard coordinates ``e_1..e_n``.

    Enough structure for characters of ``GL_n(C)``: simple reflections are
    adjacent transpositions and dominance means non-increasing coordinates.
    """

    n: int

    @property
    def rank(self) -> int:
        return self.n

    @property
    def cartan_type(self) -> str:
        return f"GL{self.n}"

    def reflect(self, i: int, w: Sequence[int]) -> Weight:
        w = list(w)
        w[i], w[i + 1] = w[i + 1], w[i]
        return tuple(w)

    @property
    def n_reflections(self) -> int:
        return self.n - 1

    def is_dominant(self, w: Sequence[int]) -> bool:
        return all(w[i] >= w[i + 1] for i in range(self.n - 1))

    def determinant_cocharacter(self) -> Cocharacter:
        return Cocharacter((1,) * self.n)

    def principal_cocharacter(self) -> Cocharacter:
        """``(n-1, n-3, ..., 1-n)``: at scale 1/2 this is
        ``diag(q^((n-1)/2), ..., q^((1-n)/2))``."""
        return Cocharacter(self.n - 1 - 2 * k for k in range(self.n))
