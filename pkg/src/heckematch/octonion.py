"""Split octonions in the basis ``s1, s2, s3, s4, t1, t2, t3, t4``.

Products follow the integer multiplication table below, read as
(row element) * (column element).  The unit is ``s4 + t4``; ``s4`` and ``t4``
have trace 1 and every other basis vector has trace 0.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .fields import QQ, Field, Fp, rref

NAMES = ("s1", "s2", "s3", "s4", "t1", "t2", "t3", "t4")
INDEX = {n: i for i, n in enumerate(NAMES)}

# row -> entries under columns s1 s2 s3 t1 t2 t3 s4 t4 ("0" for zero)
_TABLE_ROWS = {
    "s1": "0 -t3 t2 s4 0 0 0 s1",
    "s2": "t3 0 -t1 0 s4 0 0 s2",
    "s3": "-t2 t1 0 0 0 s4 0 s3",
    "t1": "t4 0 0 0 s3 -s2 t1 0",
    "t2": "0 t4 0 -s3 0 s1 t2 0",
    "t3": "0 0 t4 s2 -s1 0 t3 0",
    "s4": "s1 s2 s3 0 0 0 s4 0",
    "t4": "0 0 0 t1 t2 t3 0 t4",
}
_TABLE_COLS = ("s1", "s2", "s3", "t1", "t2", "t3", "s4", "t4")


def _structure_constants() -> np.ndarray:
    """``T[i, j, k]``: coefficient of basis k in ``e_i * e_j``."""
    t = np.zeros((8, 8, 8), dtype=np.int64)
    for row, entries in _TABLE_ROWS.items():
        for col, e in zip(_TABLE_COLS, entries.split()):
            if e == "0":
                continue
            sign = -1 if e.startswith("-") else 1
            t[INDEX[row], INDEX[col], INDEX[e.lstrip("-")]] = sign
    return t


STRUCTURE = _structure_constants()
_PRODUCTS = [
    [[(k, int(STRUCTURE[i, j, k])) for k in range(8) if STRUCTURE[i, j, k]] for j in range(8)] for i in range(8)
]
TRACE = (0, 0, 0, 1, 0, 0, 0, 1)


class Octonion:
    """Eight exact coordinates (``Fraction`` or :class:`Fp`)."""

    __slots__ = ("c",)

    def __init__(self, coords: Iterable):
        c = tuple(coords)
        if len(c) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.c = c

    @classmethod
    def zero(cls, field: Field = QQ) -> Octonion:
        return cls([field(0)] * 8)

    @classmethod
    def basis(cls, name: str, field: Field = QQ) -> Octonion:
        return cls([field(int(i == INDEX[name])) for i in range(8)])

    @classmethod
    def one(cls, field: Field = QQ) -> Octonion:
        return cls.basis("s4", field) + cls.basis("t4", field)

    @classmethod
    def from_dict(cls, d: dict, field: Field = QQ) -> Octonion:
        return cls([field(d.get(n, 0)) for n in NAMES])

    @classmethod
    def random(cls, rng: random.Random, field: Field = QQ, traceless: bool = False, height: int = 5) -> Octonion:
        c = [field.random(rng, height) for _ in range(8)]
        if traceless:
            c[7] = -c[3]
        return cls(c)

    def __add__(self, o: Octonion) -> Octonion:
        return Octonion(a + b for a, b in zip(self.c, o.c))

    def __sub__(self, o: Octonion) -> Octonion:
        return Octonion(a - b for a, b in zip(self.c, o.c))

    def __neg__(self) -> Octonion:
        return Octonion(-a for a in self.c)

    def scale(self, k) -> Octonion:
        return Octonion(k * a for a in self.c)

    def __mul__(self, o):
        if isinstance(o, Octonion):
            return mul(self, o)
        return self.scale(o)

    def __rmul__(self, k):
        return self.scale(k)

    def __eq__(self, o) -> bool:
        if not isinstance(o, Octonion):
            return NotImplemented
        return all(a == b for a, b in zip(self.c, o.c))

    def __hash__(self):
        return hash(tuple(int(x.v) if isinstance(x, Fp) else x for x in self.c))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def __getitem__(self, name: str):
        return self.c[INDEX[name]]

    def __repr__(self) -> str:
        terms = [f"{a}*{n}" for a, n in zip(self.c, NAMES) if a != 0]
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


def mul(a: Octonion, b: Octonion) -> Octonion:
    zero = a.c[0] * 0
    out = [zero] * 8
    for i, x in enumerate(a.c):
        if x == 0:
            continue
        row = _PRODUCTS[i]
        for j, y in enumerate(b.c):
            if y == 0:
                continue
            xy = x * y
            for k, s in row[j]:
                out[k] = out[k] + s * xy
    return Octonion(out)


def trace(a: Octonion):
    return a.c[3] + a.c[7]


def conj(a: Octonion) -> Octonion:
    t = trace(a)
    return Octonion(t * u - x for u, x in zip(TRACE, a.c))


def norm(a: Octonion):
    """``a * conj(a)``, which is a scalar multiple of the unit."""
    n = mul(a, conj(a))
    if n.c[3] != n.c[7] or any(n.c[i] != 0 for i in (0, 1, 2, 4, 5, 6)):
        raise ArithmeticError("a * conj(a) is not scalar")
    return n.c[3]


def polar_form(a: Octonion, b: Octonion):
    """``N(a+b) - N(a) - N(b) = Tr(a * conj(b))``."""
    return trace(mul(a, conj(b)))


# ---------------------------------------------------------------------------
# Trace-zero part and null subspaces
# ---------------------------------------------------------------------------

# basis of O^0 used for coordinates: s1 s2 s3 t1 t2 t3 (s4 - t4)
TRACELESS_NAMES = ("s1", "s2", "s3", "t1", "t2", "t3", "s4-t4")


def traceless_basis(field: Field = QQ) -> list[Octonion]:
    out = [Octonion.basis(n, field) for n in ("s1", "s2", "s3", "t1", "t2", "t3")]
    out.append(Octonion.basis("s4", field) - Octonion.basis("t4", field))
    return out


def to_traceless_coords(a: Octonion) -> tuple:
    if trace(a) != 0:
        raise ValueError("octonion is not trace-zero")
    c = a.c
    return (c[0], c[1], c[2], c[4], c[5], c[6], c[3])


def from_traceless_coords(v: Sequence, field: Field = QQ) -> Octonion:
    v = [field(x) if isinstance(x, int) else x for x in v]
    return Octonion((v[0], v[1], v[2], v[6], v[3], v[4], v[5], -v[6]))


def is_null_subspace(basis: Sequence[Octonion]) -> bool:
    """Linearly independent trace-zero elements with all products zero."""
    for x in basis:
        if trace(x) != 0:
            raise ValueError("null subspaces live in the trace-zero part")
    if not basis:
        return True
    rows = [list(to_traceless_coords(x)) for x in basis]
    if len(rref(rows, 7)[1]) != len(basis):
        return False
    return all(mul(x, y).is_zero() for x in basis for y in basis)


def annihilator(x: Octonion) -> list[Octonion]:
    """Basis of ``{w in O^0 : x w = w x = 0}``."""
    from .fields import nullspace

    one = x.c[0] * 0 + 1
    field = QQ if isinstance(one, Fraction) else Field(one.p)
    cols = traceless_basis(field)
    rows = []
    for side in (lambda w: mul(x, w), lambda w: mul(w, x)):
        images = [side(w).c for w in cols]
        rows += [[images[j][k] for j in range(7)] for k in range(8)]
    return [from_traceless_coords(v, field) for v in nullspace(rows, 7, one)]


def perp_check(i: int, field: Field = QQ) -> bool:
    """``s_i`` is annihilated on both sides exactly by ``<s_i, t_j, t_k>`` in O^0."""
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    j, k = [m for m in (1, 2, 3) if m != i]
    s = Octonion.basis(f"s{i}", field)
    stated = [s, Octonion.basis(f"t{j}", field), Octonion.basis(f"t{k}", field)]
    ann = annihilator(s)
    return _span(ann) == _span(stated)


def polar_complement(x: Octonion, field: Field = QQ) -> list[Octonion]:
    """Basis of ``{w in O^0 : (x, w) = 0}`` for the polar form of the norm."""
    from .fields import nullspace

    one = field(1)
    row = [polar_form(x, w) for w in traceless_basis(field)]
    return [from_traceless_coords(v, field) for v in nullspace([row], 7, one)]


def _span(vs: Sequence[Octonion]) -> tuple:
    red, _ = rref([list(to_traceless_coords(v)) for v in vs], 7)
    return tuple(tuple(r) for r in red)


# -- exhaustive enumeration over F_2, F_3 ------------------------------------

def _traceless_structure() -> np.ndarray:
    """Products of the O^0 basis, as a (7, 7, 8) integer array."""
    change = np.zeros((7, 8), dtype=np.int64)
    for a, n in enumerate(("s1", "s2", "s3", "t1", "t2", "t3")):
        change[a, INDEX[n]] = 1
    change[6, INDEX["s4"]], change[6, INDEX["t4"]] = 1, -1
    return np.einsum("ai,bj,ijk->abk", change, change, STRUCTURE)


def _rref_mod(rows: np.ndarray, p: int) -> tuple:
    m = [[int(x) % p for x in r] for r in rows]
    red, _ = rref([[Fp(x, p) for x in r] for r in m], len(m[0]))
    return tuple(tuple(int(x.v) for x in r) for r in red)


def enumerate_null_subspaces(p: int, dim: int) -> list[tuple[tuple[int, ...], ...]]:
    """All null subspaces of O^0 over F_p of the given dimension, each as its
    reduced row echelon basis in ``TRACELESS_NAMES`` coordinates (sorted)."""
    if p not in (2, 3):
        raise ValueError("exhaustive enumeration is limited to p in {2, 3}")
    if dim not in (1, 2, 3):
        raise ValueError("dim must be 1, 2 or 3")
    T = _traceless_structure()
    vecs = np.array(list(itertools.product(range(p), repeat=7))[1:], dtype=np.int64)
    sq = np.einsum("na,nb,abk->nk", vecs, vecs, T) % p
    null = vecs[~sq.any(axis=1)]
    lines = sorted({_rref_mod(v[None, :], p) for v in null})
    if dim == 1:
        return lines
    reps = np.array([l[0] for l in lines], dtype=np.int64)
    # kill[a, b]: reps a and b multiply to zero in both orders
    left = np.einsum("na,abk->nbk", reps, T)
    prod = np.einsum("nbk,mb->nmk", left, reps) % p
    kill = ~prod.any(axis=2)
    kill &= kill.T
    planes = set()
    n = len(reps)
    for a in range(n):
        for b in range(a + 1, n):
            if kill[a, b]:
                planes.add(_rref_mod(reps[[a, b]], p))
    planes = sorted(planes)
    if dim == 2:
        return planes
    line_index = {l[0]: i for i, l in enumerate(lines)}
    solids = set()
    for plane in planes:
        idx = [line_index[_rref_mod(np.array([r]), p)[0]] for r in plane]
        for c in range(n):
            if all(kill[c, i] for i in idx):
                cand = _rref_mod(np.array(list(plane) + [reps[c].tolist()]), p)
                if len(cand) == 3:
                    solids.add(cand)
    return sorted(solids)


def null_planes_through(vec: Sequence[int], p: int) -> list[tuple[tuple[int, ...], ...]]:
    """Null planes over F_p containing the given O^0 vector."""
    out = []
    for plane in enumerate_null_subspaces(p, 2):
        if len(_rref_mod(np.array(list(plane) + [list(vec)]), p)) == 2:
            out.append(plane)
    return out


def expected_planes_through_s(i: int, p: int) -> list[tuple[tuple[int, ...], ...]]:
    """The planes ``<s_i, a t_j + b t_k>`` with ``(a, b) != 0`` over F_p."""
    j, k = [m for m in (1, 2, 3) if m != i]
    out = set()
    for a in range(p):
        for b in range(p):
            if (a, b) == (0, 0):
                continue
            s = [0] * 7
            s[i - 1] = 1
            t = [0] * 7
            t[3 + j - 1], t[3 + k - 1] = a, b
            out.add(_rref_mod(np.array([s, t]), p))
    return sorted(out)


def left_mult_matrix(x: Octonion) -> list[list]:
    """Matrix of ``w -> x w`` on the 8-dimensional algebra (columns = images of basis)."""
    field_one = x.c[0] * 0 + 1
    cols = [mul(x, Octonion([field_one * int(i == j) for i in range(8)])).c for j in range(8)]
    return [[cols[j][i] for j in range(8)] for i in range(8)]
