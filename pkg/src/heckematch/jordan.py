"""The exceptional Jordan algebra J27 over Q or F_p, its cross product and
cubic form, and the geometry of six-tuples of traceless octonions.

An element ``JordanElt(a, b, c, x, y, z)`` is the Hermitian matrix

    [[a,  z,      conj(y)],
     [conj(z), b, x      ],
     [y,  conj(x), c     ]]
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .fields import QQ, Field, Fp, determinant, nullspace, rref
from .octonion import (
    Octonion,
    conj,
    from_traceless_coords,
    is_null_subspace,
    mul,
    norm,
    polar_form,
    to_traceless_coords,
    trace,
)


def _field_of(x) -> Field:
    return Field(x.p) if isinstance(x, Fp) else QQ


def _half(x):
    f = _field_of(x)
    if f.characteristic == 2:
        raise ValueError("Jordan operations need characteristic != 2")
    return f(Fraction(1, 2))


@dataclass(frozen=True)
class JordanElt:
    a: object
    b: object
    c: object
    x: Octonion
    y: Octonion
    z: Octonion

    @classmethod
    def zero(cls, f: Field = QQ) -> JordanElt:
        o = Octonion.zero(f)
        return cls(f(0), f(0), f(0), o, o, o)

    @classmethod
    def identity(cls, f: Field = QQ) -> JordanElt:
        o = Octonion.zero(f)
        return cls(f(1), f(1), f(1), o, o, o)

    @classmethod
    def diag(cls, a, b, c, f: Field = QQ) -> JordanElt:
        o = Octonion.zero(f)
        return cls(f(a), f(b), f(c), o, o, o)

    @classmethod
    def traceless_offdiag(cls, x: Octonion, y: Octonion, z: Octonion) -> JordanElt:
        """``[[0, z, -y], [-z, 0, x], [y, -x, 0]]`` for ``x, y, z`` in O^0."""
        zero = x.c[0] * 0
        for o in (x, y, z):
            if trace(o) != 0:
                raise ValueError("entries must be trace-zero")
        return cls(zero, zero, zero, x, y, z)

    @classmethod
    def symmetric_scalar(cls, m: Sequence[Sequence], f: Field = QQ) -> JordanElt:
        """A symmetric 3x3 scalar matrix as an element of J27."""
        one = Octonion.one(f)
        return cls(f(m[0][0]), f(m[1][1]), f(m[2][2]), one.scale(f(m[1][2])), one.scale(f(m[2][0])), one.scale(f(m[0][1])))

    @classmethod
    def random(cls, rng: random.Random, f: Field = QQ, height: int = 5) -> JordanElt:
        return cls(f.random(rng, height), f.random(rng, height), f.random(rng, height),
                   Octonion.random(rng, f, height=height), Octonion.random(rng, f, height=height),
                   Octonion.random(rng, f, height=height))

    @property
    def field(self) -> Field:
        return _field_of(self.a)

    def matrix(self) -> list[list[Octonion]]:
        one = Octonion.one(self.field)
        return [
            [one.scale(self.a), self.z, conj(self.y)],
            [conj(self.z), one.scale(self.b), self.x],
            [self.y, conj(self.x), one.scale(self.c)],
        ]

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[Octonion]]) -> JordanElt:
        """Inverse of :meth:`matrix`; checks the Hermitian shape."""
        def scalar(o):
            if o.c[3] != o.c[7] or any(o.c[i] != 0 for i in (0, 1, 2, 4, 5, 6)):
                raise ValueError("diagonal entry is not scalar")
            return o.c[3]
        if m[1][0] != conj(m[0][1]) or m[0][2] != conj(m[2][0]) or m[2][1] != conj(m[1][2]):
            raise ValueError("matrix is not Hermitian")
        return cls(scalar(m[0][0]), scalar(m[1][1]), scalar(m[2][2]), m[1][2], m[2][0], m[0][1])

    def __add__(self, o: JordanElt) -> JordanElt:
        return JordanElt(self.a + o.a, self.b + o.b, self.c + o.c, self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: JordanElt) -> JordanElt:
        return self + o.scale(-1)

    def scale(self, k) -> JordanElt:
        return JordanElt(k * self.a, k * self.b, k * self.c, self.x.scale(k), self.y.scale(k), self.z.scale(k))

    def __eq__(self, o) -> bool:
        if not isinstance(o, JordanElt):
            return NotImplemented
        return (self.a == o.a and self.b == o.b and self.c == o.c
                and self.x == o.x and self.y == o.y and self.z == o.z)

    def is_zero(self) -> bool:
        return self == JordanElt.zero(self.field)

    def coords(self) -> list:
        """27 coordinates: a, b, c, then x, y, z in the octonion basis."""
        return [self.a, self.b, self.c, *self.x.c, *self.y.c, *self.z.c]

    @classmethod
    def from_coords(cls, v: Sequence) -> JordanElt:
        return cls(v[0], v[1], v[2], Octonion(v[3:11]), Octonion(v[11:19]), Octonion(v[19:27]))


def jordan_mul(A: JordanElt, B: JordanElt) -> JordanElt:
    """``A o B = (AB + BA) / 2``, written out entrywise."""
    h = _half(A.a)
    pf = polar_form
    a = A.a * B.a + h * (pf(A.z, B.z) + pf(A.y, B.y))
    b = A.b * B.b + h * (pf(A.z, B.z) + pf(A.x, B.x))
    c = A.c * B.c + h * (pf(A.y, B.y) + pf(A.x, B.x))
    x = (B.x.scale(A.b + A.c) + A.x.scale(B.b + B.c)
         + mul(conj(A.z), conj(B.y)) + mul(conj(B.z), conj(A.y))).scale(h)
    y = (B.y.scale(A.a + A.c) + A.y.scale(B.a + B.c)
         + mul(conj(A.x), conj(B.z)) + mul(conj(B.x), conj(A.z))).scale(h)
    z = (B.z.scale(A.a + A.b) + A.z.scale(B.a + B.b)
         + mul(conj(A.y), conj(B.x)) + mul(conj(B.y), conj(A.x))).scale(h)
    return JordanElt(a, b, c, x, y, z)


def matrix_product(P, Q) -> list[list[Octonion]]:
    """Plain 3x3 product of octonion matrices."""
    return [[P[i][0] * Q[0][j] + P[i][1] * Q[1][j] + P[i][2] * Q[2][j] for j in range(3)] for i in range(3)]


def jordan_mul_matrix(A: JordanElt, B: JordanElt) -> JordanElt:
    """``A o B`` through explicit octonion matrix products (used as a cross-check)."""
    h = _half(A.a)
    P, Q = A.matrix(), B.matrix()
    PQ, QP = matrix_product(P, Q), matrix_product(Q, P)
    return JordanElt.from_matrix([[(PQ[i][j] + QP[i][j]).scale(h) for j in range(3)] for i in range(3)])


def jtrace(A: JordanElt):
    return A.a + A.b + A.c


def jpair(A: JordanElt, B: JordanElt):
    return jtrace(jordan_mul(A, B))


def standard_basis(f: Field = QQ) -> list[JordanElt]:
    zero = [f(0)] * 27
    out = []
    for i in range(27):
        v = list(zero)
        v[i] = f(1)
        out.append(JordanElt.from_coords(v))
    return out


def gram_determinant(f: Field = QQ):
    basis = standard_basis(f)
    return determinant([[jpair(u, w) for w in basis] for u in basis])


def cross(A: JordanElt, B: JordanElt) -> JordanElt:
    """``A o B - A Tr(B)/2 - B Tr(A)/2 + (Tr A Tr B - Tr(A o B)) I / 2``."""
    h = _half(A.a)
    ta, tb = jtrace(A), jtrace(B)
    ab = jordan_mul(A, B)
    scalar = h * (ta * tb - jtrace(ab))
    return ab - A.scale(h * tb) - B.scale(h * ta) + JordanElt.identity(A.field).scale(scalar)


def det(A: JordanElt):
    """Cubic norm ``abc - a N(x) - b N(y) - c N(z) + Tr((xy)z)``."""
    return (A.a * A.b * A.c - A.a * norm(A.x) - A.b * norm(A.y) - A.c * norm(A.z)
            + trace(mul(mul(A.x, A.y), A.z)))


def rank_one_check(B: JordanElt) -> bool:
    """``B o B = Tr(B) B``."""
    return jordan_mul(B, B) == B.scale(jtrace(B))


# ---------------------------------------------------------------------------
# Six-tuples of traceless octonions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SixTuple:
    x: Octonion
    y: Octonion
    z: Octonion
    xp: Octonion
    yp: Octonion
    zp: Octonion

    def __post_init__(self):
        for o in self.entries():
            if trace(o) != 0:
                raise ValueError("six-tuple entries must be trace-zero")

    @classmethod
    def of(cls, u: Sequence[Octonion], up: Sequence[Octonion]) -> SixTuple:
        return cls(*u, *up)

    def entries(self) -> tuple[Octonion, ...]:
        return (self.x, self.y, self.z, self.xp, self.yp, self.zp)

    @property
    def u(self) -> tuple[Octonion, Octonion, Octonion]:
        return (self.x, self.y, self.z)

    @property
    def up(self) -> tuple[Octonion, Octonion, Octonion]:
        return (self.xp, self.yp, self.zp)

    @property
    def field(self) -> Field:
        return _field_of(self.x.c[0])

    def B(self) -> JordanElt:
        return JordanElt.traceless_offdiag(self.x, self.y, self.z)

    def Bp(self) -> JordanElt:
        return JordanElt.traceless_offdiag(self.xp, self.yp, self.zp)


def wedge(u: Octonion, w: Octonion) -> list:
    """``u ^ w`` in the lexicographic basis ``e_i ^ e_j`` (i < j) of the second
    exterior power of O^0."""
    a, b = to_traceless_coords(u), to_traceless_coords(w)
    return [a[i] * b[j] - a[j] * b[i] for i in range(7) for j in range(i + 1, 7)]


def wedge_sum(t: SixTuple) -> list:
    parts = [wedge(p, q) for p, q in zip(t.u, t.up)]
    return [p + q + r for p, q, r in zip(*parts)]


def wedge_condition(t: SixTuple) -> bool:
    return all(v == 0 for v in wedge_sum(t))


def span_basis(vs: Sequence[Octonion]) -> list[Octonion]:
    f = _field_of(vs[0].c[0])
    red, _ = rref([list(to_traceless_coords(v)) for v in vs], 7)
    return [from_traceless_coords(r, f) for r in red]


OMEGA1, OMEGA2, NOT_MEMBER = "Omega1", "Omega2", "none"


def omega0_membership(t: SixTuple) -> str:
    """``Omega1`` / ``Omega2`` by span dimension, or ``none``."""
    basis = span_basis(t.entries())
    if not basis or not is_null_subspace(basis) or not wedge_condition(t):
        return NOT_MEMBER
    return {1: OMEGA1, 2: OMEGA2}.get(len(basis), NOT_MEMBER)


def _det2(M):
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def act_sl2_triple(t: SixTuple, which: str, M: Sequence[Sequence]) -> SixTuple:
    """SL2 acting on the pair ``(x, x')`` (or ``y``, ``z``): ``(u, u') -> (u, u') M``."""
    if which not in ("x", "y", "z"):
        raise ValueError("which must be x, y or z")
    if _det2(M) != 1:
        raise ValueError("matrix is not in SL2")
    k = "xyz".index(which)
    u, up = list(t.u), list(t.up)
    p, q = u[k], up[k]
    u[k] = p.scale(M[0][0]) + q.scale(M[1][0])
    up[k] = p.scale(M[0][1]) + q.scale(M[1][1])
    return SixTuple.of(u, up)


def _inverse3(h):
    one = h[0][0] * 0 + 1
    aug = [list(r) + [one * int(i == j) for j in range(3)] for i, r in enumerate(h)]
    red, piv = rref(aug, 3)
    if piv != [0, 1, 2]:
        raise ValueError("matrix is singular")
    return [r[3:] for r in red]


def act_gl3(t: SixTuple, h: Sequence[Sequence]) -> SixTuple:
    """``(u, u') -> (u h^-1, u' h^T)``."""
    hinv = _inverse3(h)
    zero = Octonion.zero(t.field)

    def combo(vec, mat, j):
        out = zero
        for i in range(3):
            out = out + vec[i].scale(mat[i][j])
        return out

    ht = [[h[j][i] for j in range(3)] for i in range(3)]
    return SixTuple.of([combo(t.u, hinv, j) for j in range(3)], [combo(t.up, ht, j) for j in range(3)])


# -- reduction to normal form -------------------------------------------------

def coefficients(t: SixTuple) -> tuple[list[Octonion], list[list]]:
    """Basis ``n_k`` of the span and coefficient vectors ``P_k`` with
    ``t = sum_k n_k (x) P_k``."""
    f = t.field
    red, piv = rref([list(to_traceless_coords(v)) for v in t.entries()], 7)
    basis = [from_traceless_coords(r, f) for r in red]
    coeffs = [[to_traceless_coords(v)[pc] for v in t.entries()] for pc in piv]
    return basis, coeffs


def apply_moves(t: SixTuple, moves) -> SixTuple:
    for kind, arg, M in moves:
        t = act_sl2_triple(t, arg, M) if kind == "sl2" else act_gl3(t, M)
    return t


def _sl2_clear(p, q, one):
    """An SL2 element sending the coefficient pair ``(p, q)`` to ``(*, 0)``."""
    zero = one - one
    if q == 0:
        return None
    if p != 0:
        return [[one, -q / p], [zero, one]]
    return [[zero, -one], [one, zero]]


def _complete_rows(rows, one):
    """Fill ``None`` rows of a 3x3 matrix with unit vectors to make it invertible."""
    units = [[one * int(i == j) for j in range(3)] for i in range(3)]
    out = list(rows)
    for k in range(3):
        if out[k] is not None:
            continue
        for e in units:
            fixed = [r for r in out[:k] + [e] + out[k + 1:] if r is not None]
            if len(rref(fixed, 3)[1]) == len(fixed):
                out[k] = e
                break
    if determinant(out) == 0:
        raise ArithmeticError("could not complete to an invertible matrix")
    return out


def reduce_to_normal_form(t: SixTuple):
    """Moves (SL2 on pairs, then GL3) bringing a member of Omega_0 to
    ``((n1, 0, 0), (0, 0, 0))`` or ``((n1, 0, n2), (0, 0, 0))``.

    Returns ``(moves, result)``.
    """
    cls = omega0_membership(t)
    if cls == NOT_MEMBER:
        raise ValueError("not in Omega_0")
    f = t.field
    one = f(1)
    moves = []

    def coeff_vec(tt, k):
        basis, co = coefficients(tt)
        return co[k]

    # make P = (e1, 0)
    P = coeff_vec(t, 0)
    for k, w in enumerate("xyz"):
        M = _sl2_clear(P[k], P[k + 3], one)
        if M is not None:
            moves.append(("sl2", w, M))
    t = apply_moves(t, moves)
    P = coeff_vec(t, 0)
    h = _complete_rows([list(P[:3]), None, None], one)
    moves.append(("gl3", None, h))
    t = apply_moves(t, moves[-1:])
    if cls == OMEGA2:
        R = coeff_vec(t, 1)
        # the wedge condition forces R'_1 = 0; clear R'_2, R'_3
        step = []
        for k, w in ((1, "y"), (2, "z")):
            M = _sl2_clear(R[k], R[k + 3], one)
            if M is not None:
                step.append(("sl2", w, M))
        t = apply_moves(t, step)
        moves += step
        R = coeff_vec(t, 1)
        zero = one - one
        h = _complete_rows([[one, zero, zero], None, list(R[:3])], one)
        moves.append(("gl3", None, h))
        t = apply_moves(t, moves[-1:])
    return moves, t


def is_normal_form(t: SixTuple) -> bool:
    """``((n1, 0, 0), (0, 0, 0))`` for Omega1 or ``((n1, 0, n2), (0, 0, 0))`` for Omega2."""
    if any(not o.is_zero() for o in (t.y, t.xp, t.yp, t.zp)) or t.x.is_zero():
        return False
    return t.z.is_zero() == (omega0_membership(t) == OMEGA1)


# ---------------------------------------------------------------------------
# The cross-product lemma
# ---------------------------------------------------------------------------

@dataclass
class LemmaResult:
    hypothesis: bool
    in_span: bool = False
    symmetric: bool = False
    coefficients: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (not self.hypothesis) or (self.in_span and self.symmetric)


def lemma_A(x1, y1, z1, A0=None, f: Field = QQ) -> JordanElt:
    A = JordanElt.traceless_offdiag(x1, y1, z1)
    if A0 is not None:
        A = A + JordanElt.symmetric_scalar(A0, f)
    return A


def _solve_in_plane(w: Octonion, x: Octonion, z: Octonion):
    """``(alpha, beta)`` with ``w = alpha x + beta z`` or ``None``."""
    from .fields import solve

    rows = [[x.c[k], z.c[k]] for k in range(8)]
    one = x.c[0] * 0 + 1
    return solve(rows, list(w.c), one)


def lemma_crossprod_check(x: Octonion, z: Octonion, x1: Octonion, y1: Octonion, z1: Octonion,
                          A0: Sequence[Sequence] | None = None) -> LemmaResult:
    """If ``A x B`` has the traceless off-diagonal shape, check
    ``x' = b x + c z``, ``z' = a z + c x`` and ``y' in Fx + Fz``."""
    f = _field_of(x.c[0])
    if not is_null_subspace([x, z]) or len(span_basis([x, z])) != 2:
        raise ValueError("x, z must span a 2-dimensional null subspace")
    A = lemma_A(x1, y1, z1, A0, f)
    B = JordanElt.traceless_offdiag(x, Octonion.zero(f), z)
    C = cross(A, B)
    hyp = C.a == 0 and C.b == 0 and C.c == 0 and all(trace(o) == 0 for o in (C.x, C.y, C.z))
    res = LemmaResult(hyp)
    if not hyp:
        return res
    cx, cy, cz = (_solve_in_plane(o, x, z) for o in (C.x, C.y, C.z))
    res.in_span = None not in (cx, cy, cz)
    if res.in_span:
        # x' = b x + c z,  z' = a z + c' x
        res.coefficients = {"b": cx[0], "c": cx[1], "a": cz[1], "c'": cz[0], "y'": tuple(cy)}
        res.symmetric = cx[1] == cz[0]
    return res


def lemma_constraint_space(x: Octonion, z: Octonion, with_A0: bool = True) -> list[list]:
    """Basis of the parameters ``(A0, x1, y1, z1)`` for which ``A x B`` has zero
    diagonal and trace-zero off-diagonal entries.

    Parameters: the 6 entries of A0 (a, b, c, (1,2), (2,0), (0,1)) and the O^0
    coordinates of x1, y1, z1; 27 in all.
    """
    f = _field_of(x.c[0])
    one, zero = f(1), f(0)
    n = 27

    def build(v):
        A0 = [[v[0], v[5], v[4]], [v[5], v[1], v[3]], [v[4], v[3], v[2]]]
        x1 = from_traceless_coords(v[6:13], f)
        y1 = from_traceless_coords(v[13:20], f)
        z1 = from_traceless_coords(v[20:27], f)
        return cross(lemma_A(x1, y1, z1, A0, f), JordanElt.traceless_offdiag(x, Octonion.zero(f), z))

    cols = []
    for i in range(n):
        v = [zero] * n
        v[i] = one
        C = build(v)
        cols.append([C.a, C.b, C.c, trace(C.x), trace(C.y), trace(C.z)])
    rows = [[cols[j][k] for j in range(n)] for k in range(6)]
    if not with_A0:
        rows += [[one if j == i else zero for j in range(n)] for i in range(6)]
    return nullspace(rows, n, one)


def lemma_instance(rng: random.Random, x: Octonion, z: Octonion, with_A0: bool = True, basis=None):
    """Random parameters satisfying the lemma's hypothesis (uniform in the
    solution space for finite fields)."""
    f = _field_of(x.c[0])
    basis = basis if basis is not None else lemma_constraint_space(x, z, with_A0)
    v = [f(0)] * 27
    for b in basis:
        k = f.random(rng, 4)
        v = [vi + k * bi for vi, bi in zip(v, b)]
    A0 = [[v[0], v[5], v[4]], [v[5], v[1], v[3]], [v[4], v[3], v[2]]]
    return (A0 if with_A0 else None, from_traceless_coords(v[6:13], f),
            from_traceless_coords(v[13:20], f), from_traceless_coords(v[20:27], f))


def traceless_coeffs(w: Octonion) -> dict:
    """``a1 a2 a3 b1 b2 b3 c`` with ``w = sum a_i s_i + sum b_i t_i + c (s4 - t4)``."""
    v = to_traceless_coords(w)
    return dict(zip(("a1", "a2", "a3", "b1", "b2", "b3", "c"), v))


def displayed_cross_matrix(x, z, x1, y1, z1) -> list[list[Octonion]]:
    """Off-diagonal entries of ``2 A x B`` for ``A0 = 0`` as displayed in the
    lemma; diagonal entries ``Tr(x1 x)``, ``0``, ``Tr(z1 z)`` times the unit."""
    f = _field_of(x.c[0])
    one = Octonion.one(f)
    return [
        [one.scale(trace(mul(x1, x))), mul(y1, x), mul(z, x1) + mul(z1, x)],
        [mul(x, y1), Octonion.zero(f), mul(z, y1)],
        [mul(x, z1) + mul(x1, z), mul(y1, z), one.scale(trace(mul(z1, z)))],
    ]


def proof_formulas(x1, y1, z1, literal: bool = False) -> dict[str, Octonion]:
    """With ``x = s1``, ``z = t2`` the closed forms for ``2x', 2y', 2z'``.

    The ``s1`` coefficient of ``2y'`` is ``-(c^z + b3^x)``; ``literal=True`` uses
    ``b3^y`` there instead, which disagrees with direct expansion.
    """
    f = _field_of(x1.c[0])
    X, Y, Z = traceless_coeffs(x1), traceless_coeffs(y1), traceless_coeffs(z1)
    s1, t2 = Octonion.basis("s1", f), Octonion.basis("t2", f)
    return {
        "x'": s1.scale(Y["b3"]) + t2.scale(Y["c"]),
        "y'": t2.scale(Z["a3"] - X["c"]) - s1.scale(Z["c"] + (Y if literal else X)["b3"]),
        "z'": t2.scale(-Y["a3"]) + s1.scale(Y["c"]),
    }


def product_expansions(w: Octonion) -> dict[str, tuple[Octonion, Octonion]]:
    """``w t2`` and ``s1 w`` against their coordinate expansions."""
    f = _field_of(w.c[0])
    k = traceless_coeffs(w)
    B = lambda n: Octonion.basis(n, f)
    wz = B("s4").scale(k["a2"]) + B("s3").scale(k["b1"]) - B("s1").scale(k["b3"]) - B("t2").scale(k["c"])
    xw = B("t3").scale(-k["a2"]) + B("t2").scale(k["a3"]) + B("s4").scale(k["b1"]) - B("s1").scale(k["c"])
    return {"wz": (mul(w, B("t2")), wz), "xw": (mul(B("s1"), w), xw)}
