"""Command-line front end.

Laurent polynomials are printed in ``v = q^(1/2)`` with terms in descending
exponent order, for example ``v^2 + 1 + v^-2``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import branching as Br
from . import satake
from .checks import SUITES
from .fields import parse_field
from .laurent import gaussian_binomial
from .rootsys import build_root_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    """Comma-separated fundamental-weight coordinates; a lone ``0`` is the zero weight."""
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}") from None
    if coords == (0,):
        coords = (0,) * rank
    if len(coords) != rank:
        raise UsageError(f"weight {text!r} has {len(coords)} coordinates, expected {rank}")
    if any(c < 0 for c in coords):
        raise UsageError(f"weight {text!r} is not dominant")
    return coords


def _fmt_weight(w) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


# -- commands -----------------------------------------------------------------

def cmd_verify(args) -> tuple[dict, list, bool]:
    field = parse_field(args.field)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    weights = None
    if args.weights:
        weights = [parse_weight(w, 4) for w in args.weights.split(";")]
    results, ok = [], True
    for name in names:
        try:
            checks = list(SUITES[name](seed=args.seed, trials=args.trials, field=field, weights=weights))
        except ValueError as e:
            raise UsageError(str(e)) from None
        for c in checks:
            ok &= c.passed
            status = "pass" if c.passed else "fail"
            results.append({"key": f"{name}.{c.key}", "value": f"{status} lhs={c.lhs} rhs={c.rhs}"})
    inputs = {"suite": args.suite, "seed": args.seed, "trials": args.trials, "field": args.field,
              "weights": args.weights}
    return inputs, results, ok


def cmd_rtilde(args):
    if args.pair not in Br.AMBIENT:
        raise UsageError(f"unknown pair {args.pair!r}; choose from {', '.join(Br.AMBIENT)}")
    rs = build_root_system(Br.AMBIENT[args.pair])
    lam = parse_weight(args.weight, rs.rank)
    dec = Br.transfer_rtilde(args.pair, lam)
    results = [{"key": _fmt_weight(w), "value": str(c)} for w, c in dec.items()]
    inputs = {"pair": args.pair, "ambient": Br.AMBIENT[args.pair], "target": Br.TARGET[args.pair],
              "weight": _fmt_weight(lam)}
    return inputs, results, True


MAPS = {
    "sl3_in_g2": Br.sl3_in_g2_map,
    "sl2l_sl2s_in_g2": Br.sl2l_sl2s_in_g2_map,
    "g2_in_spin7": Br.g2_in_spin7_map,
    "f4_to_g2": Br.f4_to_g2_map,
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text else ()
    except ValueError:
        raise UsageError(f"cannot parse node list {text!r}") from None


def cmd_branch(args):
    try:
        rs = build_root_system(args.source)
    except ValueError as e:
        raise UsageError(str(e)) from None
    lam = parse_weight(args.weight, rs.rank)
    inputs = {"from": args.source, "weight": _fmt_weight(lam)}
    if args.map:
        f = MAPS[args.map]()
        if f.source.cartan_type != rs.cartan_type:
            raise UsageError(f"map {args.map} starts from {f.source.cartan_type}, not {rs.cartan_type}")
        inputs.update(map=args.map, to=f.target.cartan_type)
        dec = Br.restrict_irr(f, lam)
        return inputs, [{"key": _fmt_weight(w), "value": str(m)} for w, m in dec.items()], True
    if args.node is None:
        raise UsageError("branch needs --map, or --levi with --node")
    levi = _int_list(args.levi)
    nodes = set(levi) | {args.node}
    if not nodes <= set(range(rs.rank)) or args.node in levi:
        raise UsageError("levi nodes and grading node must be distinct nodes of the diagram")
    gd = Br.levi_branch(rs, lam, levi, args.node)
    inputs.update(levi=_fmt_weight(levi), node=args.node)
    results = [{"key": f"{_fmt_weight(w)} grade={Fraction(g, gd.denominator)}", "value": str(m)}
               for (w, g), m in gd.items()]
    return inputs, results, True


def cmd_delta(args):
    amb = args.ambient
    inputs = {"ambient": amb, "node": args.node, "restrict_to": args.restrict_to}
    if amb in satake.CASES:
        case = satake.CASES[amb]
        pd = satake.ambient_parabolic(amb)
        if args.node is not None and args.node != pd.node:
            raise UsageError(f"the d-invariant parabolic of {amb} drops node {pd.node}")
        if args.restrict_to not in (None, case.L):
            raise UsageError(f"{amb} restricts to {case.L}")
        nb, ub = satake.delta_nbar(amb), satake.delta_ubar(amb)
        results = [
            {"key": "node", "value": str(pd.node)},
            {"key": "d", "value": str(pd.d)},
            {"key": "delta_Nbar", "value": str(nb)},
            {"key": "delta_Ubar", "value": str(ub)},
        ]
        return inputs, results, True
    if amb == "G2":
        if args.node not in (1, 2):
            raise UsageError("G2 needs --node 1 or 2")
        return inputs, [{"key": f"delta_N{args.node}", "value": f"|det|^{satake.g2_delta(args.node)}"}], True
    for prefix, fn in (("GSp", satake.gsp_levi_delta), ("GL", satake.gl_levi_delta)):
        if amb.startswith(prefix) and amb[len(prefix):].isdigit():
            n = int(amb[len(prefix):])
            if prefix == "GSp":
                if n % 2:
                    raise UsageError("GSp needs an even index")
                n //= 2
            if args.node is None or not 1 <= args.node <= n:
                raise UsageError(f"{amb} needs --node m with 1 <= m <= {n}")
            e1, e2 = fn(n, args.node)
            return inputs, [{"key": "g1", "value": f"|det|^{e1}"}, {"key": "g2", "value": f"|det|^{e2}"}], True
    raise UsageError(f"unknown ambient group {amb!r}")


def cmd_table(args):
    inputs = {"name": args.name}
    if args.name == "table3":
        results = []
        for row in satake.table3():
            g = row["group"]
            value = f"M={row['M']} d={row['d']} L={row['L']} delta_Ubar={row['delta_Ubar']} delta_Nbar={row['delta_Nbar']}"
            results.append({"key": g, "value": value})
        return inputs, results, True
    if args.name == "gaussian":
        n = args.n
        if n < 1:
            raise UsageError("--n must be positive")
        inputs["n"] = n
        results, ok = [], True
        for i in range(1, n + 1):
            lhs, rhs = satake.minuscule_identity_sides(n, i)
            ok &= lhs == rhs
            binom = gaussian_binomial(n, i)
            results.append({"key": f"n={n} i={i}", "value": f"binom={binom} lhs={lhs} rhs={rhs}"})
        return inputs, results, ok
    if args.name == "v8":
        gd = Br.levi_branch(build_root_system("B3"), (0, 0, 1), (0, 1), 2)
        results = [{"key": f"GL3{_fmt_weight(w)} grade={Fraction(g, gd.denominator)}",
                    "value": f"dim={m * _gl3_dim(w)}"} for (w, g), m in gd.items()]
        return inputs, results, True
    raise UsageError(f"unknown table {args.name!r}")


def _gl3_dim(w) -> int:
    from .charring import dim

    return dim(build_root_system("A2"), w)


COMMANDS = {"verify": cmd_verify, "rtilde": cmd_rtilde, "branch": cmd_branch, "delta": cmd_delta,
            "table": cmd_table}


# -- output -------------------------------------------------------------------

def render(command: str, inputs: dict, results: list, ok: bool, fmt: str) -> str:
    if fmt == "json":
        doc = {"command": command, "inputs": inputs, "results": results, "pass": ok}
        return json.dumps(doc, sort_keys=True, indent=2)
    lines = ["key\tvalue"]
    lines += [f"{r['key']}\t{r['value']}" for r in results]
    lines.append(f"pass\t{'true' if ok else 'false'}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="heckematch",
        description="Exact checks of the dual-group identities behind the Hecke algebra matching. "
                    "Laurent polynomials are printed in v = q^(1/2), highest power first.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="tsv")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--field", default="Q", help="Q or Fp:<p>")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", choices=("all", *SUITES), default="all")
    v.add_argument("--weights", help="F4 weights for e8-identity, separated by ';' (e.g. '0;0,0,0,1')")

    r = sub.add_parser("rtilde", parents=[common], help="graded transfer of an ambient irreducible")
    r.add_argument("--pair", required=True, help="D5, E6, E7 or E8")
    r.add_argument("--weight", required=True, help="fundamental-weight coordinates, comma separated")

    b = sub.add_parser("branch", parents=[common], help="restrict an irreducible along a map or to a Levi")
    b.add_argument("--from", dest="source", required=True)
    b.add_argument("--weight", required=True)
    b.add_argument("--map", choices=tuple(MAPS))
    b.add_argument("--levi", default="", help="Levi nodes (0-indexed, comma separated)")
    b.add_argument("--node", type=int, help="grading node for a Levi branch")

    d = sub.add_parser("delta", parents=[common], help="modular character exponents")
    d.add_argument("--ambient", required=True, help="D5, E6, E7, E8, G2, GL<n> or GSp<2n>")
    d.add_argument("--node", type=int)
    d.add_argument("--restrict-to", dest="restrict_to")

    t = sub.add_parser("table", parents=[common], help="print a reference table")
    t.add_argument("name", choices=("table3", "gaussian", "v8"))
    t.add_argument("--n", type=int, default=3)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        parse_field(args.field)
        if args.trials < 0:
            raise UsageError("--trials must be non-negative")
        inputs, results, ok = COMMANDS[args.command](args)
    except (UsageError, ValueError) as e:
        print(f"heckematch {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    print(render(args.command, inputs, results, ok, args.format))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
