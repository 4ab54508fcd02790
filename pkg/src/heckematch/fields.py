"""Exact scalar fields (rationals and small prime fields) and the row
reduction routines the octonion and Jordan code rely on."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Fp:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """A scalar field: ``p is None`` means the rationals."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p**0.5) + 1))):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, x) -> Fraction | Fp:
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise ValueError("mixing different prime fields")
            return x
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.p) / x.denominator
        return Fp(int(x), self.p)

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def random(self, rng: random.Random, height: int = 5):
        """Random element; over Q a small-height rational."""
        if self.p is None:
            num = rng.randint(-height, height)
            den = rng.randint(1, height)
            return Fraction(num, den)
        return Fp(rng.randrange(self.p), self.p)

    def random_nonzero(self, rng: random.Random, height: int = 5):
        while True:
            x = self.random(rng, height)
            if x != 0:
                return x

    def __str__(self):
        return "Q" if self.p is None else f"Fp:{self.p}"


QQ = Field(None)


def parse_field(text: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("Fp:"):
        return Field(int(text[3:]))
    raise ValueError(f"unknown field {text!r}; expected Q or Fp:<p>")


def is_zero(x) -> bool:
    return x == 0


def _inv(x):
    if isinstance(x, int):
        return Fraction(1, x)
    return (x * 0 + 1) / x


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over an exact field; returns (rows, pivots).

    Zero rows are dropped.  Entries must support ``+ - * /`` exactly.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if not is_zero(mat[i][c])), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = _inv(mat[r][c])
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, one) -> list[list]:
    """Basis of ``{x : rows @ x = 0}``; ``one`` fixes the scalar type."""
    zero = one - one
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, pc in zip(red, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, one) -> list | None:
    """One solution of ``rows @ x = rhs`` or ``None`` if inconsistent."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    zero = one - one
    x = [zero] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


def determinant(mat: Sequence[Sequence]):
    """Exact determinant by Gaussian elimination."""
    m = [list(r) for r in mat]
    n = len(m)
    det = m[0][0] * 0 + 1 if n else 1
    for c in range(n):
        piv = next((i for i in range(c, n) if not is_zero(m[i][c])), None)
        if piv is None:
            return det - det
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = _inv(m[c][c])
        for i in range(c + 1, n):
            if not is_zero(m[i][c]):
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def inverse(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Inverse of an integer/rational matrix over Q."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    red, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]
