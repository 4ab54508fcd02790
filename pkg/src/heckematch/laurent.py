"""Sparse Laurent polynomials with integer coefficients.

Torus traces are kept in the variable ``v = q^(1/2)`` so that half-integral
powers of ``q`` become integral powers of ``v``.  The same class doubles as an
ordinary polynomial in ``q`` (``var="q"``) for Poincare polynomials.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class Laurent:
    """Immutable finite map ``exponent -> nonzero integer coefficient``."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "v"):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if int(e) != e:
                raise ValueError(f"non-integral exponent {e}")
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self.var = var

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "v") -> Laurent:
        return cls({exp: coeff}, var=var)

    @classmethod
    def one(cls, var: str = "v") -> Laurent:
        return cls({0: 1}, var=var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def _coerce(self, other) -> Laurent:
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent({0: other}, var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other:
            acc[e] = acc.get(e, 0) + c
        return Laurent(acc, var=self.var)

    __radd__ = __add__

    def __neg__(self) -> Laurent:
        return Laurent({e: -c for e, c in self}, var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self:
            for e2, c2 in other:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Laurent(acc, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Laurent:
        if n < 0:
            raise ValueError("negative power")
        out = Laurent.one(self.var)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def shift(self, k: int) -> Laurent:
        """Multiply by ``var**k``."""
        return Laurent({e + k: c for e, c in self}, var=self.var)

    def substitute_power(self, k: int, var: str | None = None) -> Laurent:
        """Replace ``var`` by ``var**k`` (e.g. ``q -> v^2`` with ``k=2``)."""
        return Laurent({e * k: c for e, c in self}, var=var or self.var)

    def at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self), Fraction(0))

    def bar(self) -> Laurent:
        """The involution ``var -> var^-1``."""
        return Laurent({-e: c for e, c in self}, var=self.var)

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def __repr__(self) -> str:
        return f"Laurent({self._terms!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            if e == 0:
                mono = str(abs(c))
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                if abs(c) != 1:
                    mono = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out



# torus traces in v = q^(1/2)
HalfLaurent = Laurent

def q_integer(n: int, var: str = "q") -> Laurent:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return Laurent({k: 1 for k in range(n)}, var=var)


def gaussian_binomial(n: int, k: int, var: str = "q") -> Laurent:
    """Gaussian binomial coefficient via the q-Pascal recursion."""
    if k < 0 or k > n:
        return Laurent({}, var=var)
    row = [Laurent.one(var)]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j - 1] if j >= 1 else Laurent({}, var=var)
            right = row[j].shift(j) if j < m else Laurent({}, var=var)
            new.append(left + right)
        row = new
    return row[k]
