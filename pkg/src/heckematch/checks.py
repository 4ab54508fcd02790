"""Verification suites behind ``heckematch verify``.

Each suite yields :class:`Check` records; a suite passes when all its checks do.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .fields import QQ, Field


@dataclass(frozen=True)
class Check:
    key: str
    passed: bool
    lhs: str
    rhs: str


def _chk(key, lhs, rhs) -> Check:
    return Check(key, lhs == rhs, str(lhs), str(rhs))


# ---------------------------------------------------------------------------

ROOT_COUNTS = {"A1": 1, "A2": 3, "G2": 6, "B3": 9, "C3": 9, "D4": 12, "D5": 20,
               "E6": 36, "E7": 63, "E8": 120, "F4": 24}


def suite_rootsys(**_) -> Iterator[Check]:
    from .rootsys import build_root_system, poincare_ratio, weyl_orbit

    for label, n in ROOT_COUNTS.items():
        rs = build_root_system(label)
        yield _chk(f"{label}.positive_roots", len(rs.positive_roots), n)
        total = tuple(sum(col) for col in zip(*rs.positive_roots))
        yield _chk(f"{label}.sum_positive_roots", total, tuple(2 * r for r in rs.rho))
    yield _chk("G2.orbit(omega1)", len(weyl_orbit(build_root_system("G2"), (1, 0))), 6)
    yield _chk("A1.poincare_ratio", str(poincare_ratio(build_root_system("A1"), [])), "q + 1")


def suite_satake(**_) -> Iterator[Check]:
    from . import satake

    expected = {"D5": (8, 1, 8), "E6": (16, 1, 8), "E7": (27, 2, 9), "E8": (56, 8, 29)}
    for row in satake.table3():
        got = (row["d"], row["delta_Ubar"], row["delta_Nbar"])
        yield _chk(f"table3.{row['group']}", tuple(str(x) for x in got), tuple(str(x) for x in expected[row["group"]]))
    yield _chk("G2.delta_N1", satake.g2_delta(1), Fraction(5))
    yield _chk("G2.delta_N2", satake.g2_delta(2), Fraction(3))
    for n in range(1, 7):
        for m in range(1, n + 1):
            yield _chk(f"GL{n}.Q{m}", satake.gl_levi_delta(n, m), satake.gl_closed_form(n, m))
            yield _chk(f"GSp{2 * n}.Q{m}", satake.gsp_levi_delta(n, m), satake.gsp_closed_form(n, m))
    for n in range(1, 9):
        for i in range(1, n + 1):
            lhs, rhs = satake.minuscule_identity_sides(n, i)
            yield _chk(f"minuscule.n{n}.i{i}", lhs, rhs)
    for case in satake.CASES:
        rep = satake.normalization_check(case)
        yield Check(f"normalization.{case}", rep.ok, _fmt_twists(rep.computed), _fmt_twists(rep.expected))


def _fmt_twists(d: dict) -> str:
    return "; ".join(f"{k}=[{', '.join(str(x) for x in v)}]" for k, v in d.items())


def suite_octonion(seed: int = 0, trials: int = 200, field: Field = QQ, **_) -> Iterator[Check]:
    from . import octonion as O

    rng = random.Random(seed)
    one = O.Octonion.one(field)
    unit_ok = all(one * O.Octonion.basis(n, field) == O.Octonion.basis(n, field) == O.Octonion.basis(n, field) * one
                  for n in O.NAMES)
    yield Check("unit", unit_ok, str(unit_ok), "True")
    comp = tr = alt = 0
    for _ in range(trials):
        a, b, c = (O.Octonion.random(rng, field) for _ in range(3))
        comp += O.norm(a * b) == O.norm(a) * O.norm(b)
        tr += O.trace(a * (b * c)) == O.trace((a * b) * c) and O.trace(a * b) == O.trace(b * a)
        alt += a * (a * b) == (a * a) * b and (b * a) * a == b * (a * a)
    yield _chk("composition", comp, trials)
    yield _chk("trace_associativity", tr, trials)
    yield _chk("alternativity", alt, trials)
    for i in (1, 2, 3):
        yield _chk(f"perp.s{i}", O.perp_check(i, field if field.characteristic != 2 else QQ), True)
    for p in (2, 3):
        counts = tuple(len(O.enumerate_null_subspaces(p, d)) > 0 for d in (1, 2, 3))
        yield _chk(f"null_subspaces.F{p}", counts, (True, True, False))
    yield _chk("planes_through_s1.F3", O.null_planes_through([1, 0, 0, 0, 0, 0, 0], 3), O.expected_planes_through_s(1, 3))


def suite_jordan(seed: int = 0, trials: int = 200, field: Field = QQ, **_) -> Iterator[Check]:
    from . import jordan as J
    from .octonion import Octonion

    if field.characteristic == 2:
        raise ValueError("Jordan checks need characteristic != 2")
    rng = random.Random(seed)
    B = lambda n: Octonion.basis(n, field)
    pairs = [(B("s1"), B("t2")), (B("s1"), B("t3")), (B("s2"), B("t1") + B("t3").scale(field(2)))]
    spaces = {k: J.lemma_constraint_space(x, z) for k, (x, z) in enumerate(pairs)}
    good = 0
    for t in range(trials):
        k = t % len(pairs)
        x, z = pairs[k]
        A0, x1, y1, z1 = J.lemma_instance(rng, x, z, True, spaces[k])
        r = J.lemma_crossprod_check(x, z, x1, y1, z1, A0)
        good += r.hypothesis and r.ok
    yield _chk("lemma_crossprod", good, trials)
    zero = Octonion.zero(field)
    reps = {
        "Omega1": J.SixTuple(B("s1"), zero, zero, zero, zero, zero),
        "Omega2": J.SixTuple(B("s1"), zero, B("t2"), zero, zero, zero),
        "none": J.SixTuple(B("s1"), B("s2"), zero, zero, zero, zero),
    }
    for want, t in reps.items():
        yield _chk(f"membership.{want}", J.omega0_membership(t), want)
    inv = 0
    for _ in range(trials):
        t = rng.choice(list(reps.values()))
        before = J.omega0_membership(t)
        t2 = random_generator_action(rng, t, field)
        inv += J.omega0_membership(t2) == before
    yield _chk("membership_invariance", inv, trials)
    x, z = B("s1"), B("t2")
    fam = 0
    for _ in range(trials):
        a, b, c, d, e, f = (field.random(rng) for _ in range(6))
        if rng.random() < 0.5:
            d = c
        t = J.SixTuple(x, zero, z, x.scale(a) + z.scale(c), x.scale(e) + z.scale(f), z.scale(b) + x.scale(d))
        fam += (J.omega0_membership(t) == "Omega2") == (c == d)
    yield _chk("wedge_family", fam, trials)


def random_generator_action(rng: random.Random, t, field: Field):
    """Apply a random SL2 (on a random pair) or a random invertible GL3 element."""
    from . import jordan as J
    from .fields import determinant

    if rng.random() < 0.5:
        while True:
            a, b, c = (field.random(rng) for _ in range(3))
            if a != 0:
                break
        d = (1 + b * c) / a
        return J.act_sl2_triple(t, rng.choice("xyz"), [[a, b], [c, d]])
    while True:
        h = [[field.random(rng) for _ in range(3)] for _ in range(3)]
        if determinant(h) != 0:
            return J.act_gl3(t, h)


def suite_branching(**_) -> Iterator[Check]:
    from . import branching as Br
    from .rootsys import build_root_system

    f = Br.g2_in_spin7_map()  # raises unless the three validations pass
    for lam, want in (((0, 0, 1), {(1, 0): 1, (0, 0): 1}), ((1, 0, 0), {(1, 0): 1}),
                      ((0, 1, 0), {(0, 1): 1, (1, 0): 1})):
        yield _chk(f"g2_in_spin7.{lam}", Br.restrict_irr(f, lam).terms, want)
    spin = Br.levi_branch(build_root_system("B3"), (0, 0, 1), (0, 1), 2)
    yield _chk("spin_levi_branch", spin.items(), [(((0, 0), 3), 1), (((0, 1), 1), 1), (((1, 0), -1), 1), (((0, 0), -3), 1)])
    d5 = Br.transfer_rtilde("D5", (1, 0))
    yield _chk("rtilde.D5.omega1", {k: str(v) for k, v in d5.items()}, {(0,): "v^2 + 1 + v^-2", (1,): "v + v^-1"})
    for pair, weights in (("D5", [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]),
                          ("E8", [(0, 0, 0, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 2)])):
        for w in weights:
            yield _chk(f"rtilde_at_1.{pair}.{w}", Br.transfer_rtilde(pair, w).at_one(), Br.plain_restriction(pair, w))


DEFAULT_E8_WEIGHTS = [(0, 0, 0, 0), (0, 0, 0, 1), (1, 0, 0, 0)]


def suite_e8(weights: Sequence[Sequence[int]] | None = None, **_) -> Iterator[Check]:
    from . import branching as Br

    for w in weights or DEFAULT_E8_WEIGHTS:
        yield _chk(f"e8_identity.{tuple(w)}", Br.e8_trace_identity_lhs(w), Br.e8_trace_identity_rhs(w))


SUITES: dict[str, Callable[..., Iterator[Check]]] = {
    "rootsys": suite_rootsys,
    "satake": suite_satake,
    "octonion": suite_octonion,
    "jordan": suite_jordan,
    "branching": suite_branching,
    "e8-identity": suite_e8,
}
