"""Command-line interface.

Subcommands: analyze, family, check, search, product, compare.  Output is a
plain table by default or stable-schema JSON with --json (fixed keys,
floats at 12 significant digits, polynomial coefficients as exact decimal
integer strings).  Exit codes: 0 success, 1 check/computation failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import checks, constructions, coulson, spectra
from .charpoly import charpoly_exact
from .errors import (
    ConvergenceFailure,
    InvalidFamilySpec,
    NotInDelta1,
    OrderMismatch,
    ParseError,
    QuadratureFailure,
    SearchBudgetExceeded,
    SidispecError,
)
from .fileformat import (
    format_coefficients,
    format_float,
    json_float,
    parse_coefficients,
    parse_sidigraph,
    render_sidigraph,
)
from .graphs import Sidigraph, classify, is_bipartite, is_strongly_connected, is_symmetric

USAGE_EXIT = 2
FAIL_EXIT = 1


@dataclass
class AnalysisReport:
    input_name: str
    graph: Sidigraph
    charpoly: list[int]
    spectrum: list[complex]
    energy: float
    bipartite: bool
    strongly_connected: bool
    symmetric: bool
    cycle_balanced: bool
    in_delta1: bool
    in_delta2: bool
    integral: bool
    real: bool
    gaussian: bool

    def to_json_dict(self) -> dict:
        return {
            "input": self.input_name,
            "n": self.graph.n,
            "arc_count": self.graph.arc_count,
            "charpoly": [str(c) for c in self.charpoly],
            "spectrum": [
                {"re": json_float(z.real), "im": json_float(z.imag)}
                for z in self.spectrum
            ],
            "energy": json_float(self.energy),
            "flags": {
                "bipartite": self.bipartite,
                "strongly_connected": self.strongly_connected,
                "symmetric": self.symmetric,
                "cycle_balanced": self.cycle_balanced,
                "in_delta1": self.in_delta1,
                "in_delta2": self.in_delta2,
            },
            "spectrum_class": {
                "integral": self.integral,
                "real": self.real,
                "gaussian": self.gaussian,
            },
        }


def build_report(s: Sidigraph, name: str, tol_class: float) -> AnalysisReport:
    poly = charpoly_exact(s)
    sp = spectra.roots(poly)
    cls = spectra.classify_spectrum(sp, tol=tol_class)
    flags = classify(s)
    return AnalysisReport(
        input_name=name,
        graph=s,
        charpoly=list(poly.leading_first()),
        spectrum=list(sp.roots),
        energy=spectra.energy_from_spectrum(sp),
        bipartite=flags.is_bipartite,
        strongly_connected=is_strongly_connected(s),
        symmetric=is_symmetric(s),
        cycle_balanced=flags.is_cycle_balanced,
        in_delta1=flags.in_delta1,
        in_delta2=flags.in_delta2,
        integral=cls.integral,
        real=cls.real,
        gaussian=cls.gaussian,
    )


def _load_graph(path: str) -> tuple[Sidigraph, str]:
    if path == "-":
        return parse_sidigraph(sys.stdin.read()), "<stdin>"
    text = Path(path).read_text(encoding="utf-8")
    return parse_sidigraph(text), Path(path).name


def _fmt_complex(z: complex) -> str:
    return f"{format_float(z.real)}{'+' if z.imag >= 0 else '-'}{format_float(abs(z.imag))}i"


def _print_report(rep: AnalysisReport) -> None:
    print(f"input            {rep.input_name}")
    print(f"order / arcs     {rep.graph.n} / {rep.graph.arc_count}")
    print(f"charpoly         {format_coefficients(charpoly_exact(rep.graph))}")
    print(f"spectrum         {', '.join(_fmt_complex(z) for z in rep.spectrum)}")
    print(f"energy           {format_float(rep.energy)}")
    flag_bits = [
        ("bipartite", rep.bipartite),
        ("strongly_connected", rep.strongly_connected),
        ("symmetric", rep.symmetric),
        ("cycle_balanced", rep.cycle_balanced),
        ("in_delta1", rep.in_delta1),
        ("in_delta2", rep.in_delta2),
    ]
    print(f"flags            {', '.join(k for k, v in flag_bits if v) or '(none)'}")
    cls_bits = [("integral", rep.integral), ("real", rep.real), ("gaussian", rep.gaussian)]
    print(f"spectrum class   {', '.join(k for k, v in cls_bits if v) or '(none)'}")


def cmd_analyze(args: argparse.Namespace) -> int:
    s, name = _load_graph(args.path)
    rep = build_report(s, name, tol_class=args.tol_class)
    if args.json:
        print(json.dumps(rep.to_json_dict(), indent=2, sort_keys=False))
    else:
        _print_report(rep)
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    if args.kind == "power_family":
        fx = constructions.builtin_fixtures()
        s1, s2 = fx[f"{args.base}_s1"], fx[f"{args.base}_s2"]
        members = constructions.power_family(s1, s2, args.k)
        polys = {charpoly_exact(m).coeffs for m in members}
        names = []
        for i, member in enumerate(members, start=1):
            out = Path(args.outdir) / f"power_{args.base}_k{i}_of_{args.k}.sidigraph"
            out.write_text(render_sidigraph(member), encoding="utf-8")
            names.append(out.name)
        ok = len(polys) == 1
        print(f"members          {', '.join(names)}")
        print(f"order            {members[0].n}")
        print(f"pairwise cospectral  {'yes' if ok else 'NO'}")
        return 0 if ok else FAIL_EXIT

    spec = constructions.FamilySpec(args.kind, args.n, j=args.j)
    s1, s2 = constructions.family_theorem41(spec)
    p1, p2 = constructions.theorem41_polynomials(spec)
    exact = charpoly_exact(s1) == p1 and charpoly_exact(s2) == p2
    e1, e2 = spectra.graph_energy(s1), spectra.graph_energy(s2)
    balanced1 = classify(s1).is_cycle_balanced
    balanced2 = classify(s2).is_cycle_balanced
    conn = is_strongly_connected(s1) and is_strongly_connected(s2)
    names = []
    for tag, member in (("s1", s1), ("s2", s2)):
        out = Path(args.outdir) / f"{args.kind}_n{args.n}_j{args.j}_{tag}.sidigraph"
        out.write_text(render_sidigraph(member), encoding="utf-8")
        names.append(out.name)
    ok = exact and abs(e1 - e2) <= 1e-9 and not balanced1 and not balanced2 and conn
    print(f"members              {', '.join(names)}")
    print(f"charpolys            {format_coefficients(p1)}  |  {format_coefficients(p2)}")
    print(f"exact polynomials    {'yes' if exact else 'NO'}")
    print(f"energies             {format_float(e1)}  {format_float(e2)}  (|dE| = {abs(e1 - e2):.2e})")
    print(f"non cycle balanced   {'yes' if not (balanced1 or balanced2) else 'NO'}")
    print(f"strongly connected   {'yes' if conn else 'NO'}")
    return 0 if ok else FAIL_EXIT


def cmd_check(args: argparse.Namespace) -> int:
    rows = checks.run_suite(
        args.suite, seed=args.seed, tol_energy=args.tol_energy, tol_quad=args.tol_quad
    )
    if args.json:
        print(
            json.dumps(
                [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in rows
                ],
                indent=2,
            )
        )
    else:
        width = max(len(r.name) for r in rows)
        for r in rows:
            status = "ok " if r.passed else "FAIL"
            print(f"{status}  {r.name.ljust(width)}  {r.detail}")
        passed = sum(r.passed for r in rows)
        print(f"{passed}/{len(rows)} checks passed")
    return 0 if all(r.passed for r in rows) else FAIL_EXIT


def cmd_search(args: argparse.Namespace) -> int:
    target = parse_coefficients(args.target)
    found = constructions.search_by_charpoly(
        args.n,
        target,
        strongly_connected=True if args.strongly_connected else None,
        non_cycle_balanced=True if args.non_cycle_balanced else None,
        bipartite=True if args.bipartite else None,
        max_arcs=args.max_arcs,
        budget=args.budget,
    )
    if args.limit is not None:
        found = found[: args.limit]
    if args.json:
        print(
            json.dumps(
                [{"n": s.n, "arcs": [list(a) for a in s.arcs]} for s in found],
                indent=2,
            )
        )
    else:
        print(f"# {len(found)} match(es)")
        for s in found:
            print(render_sidigraph(s), end="")
    return 0


def cmd_product(args: argparse.Namespace) -> int:
    s1, _ = _load_graph(args.path1)
    s2, _ = _load_graph(args.path2)
    prod = constructions.cartesian_product(s1, s2)
    text = render_sidigraph(prod)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    s1, _ = _load_graph(args.path1)
    s2, _ = _load_graph(args.path2)
    result = coulson.quasi_order_compare(s1, s2)
    e1, e2 = spectra.graph_energy(s1), spectra.graph_energy(s2)
    rel = result.relation.value
    sym = {"precedes_strictly": "<", "succeeds_strictly": ">", "equal": "=", "incomparable": "?"}[rel]
    if args.json:
        print(
            json.dumps(
                {
                    "relation": rel,
                    "c1": [str(c) for c in result.c1],
                    "c2": [str(c) for c in result.c2],
                    "energy1": json_float(e1),
                    "energy2": json_float(e2),
                },
                indent=2,
            )
        )
    else:
        print(f"{rel}; E: {e1:.4f} {sym} {e2:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sidispec",
        description="Exact and numeric spectral analysis of signed digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tols(p):
        p.add_argument("--tol-class", type=float, default=1e-6, help="spectrum classification tolerance")
        p.add_argument("--tol-energy", type=float, default=1e-4, help="energy comparison tolerance")
        p.add_argument("--tol-quad", type=float, default=1e-6, help="quadrature absolute tolerance")

    p = sub.add_parser("analyze", help="full report for one sidigraph file ('-' for stdin)")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    add_tols(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("family", help="generate and verify a named construction family")
    p.add_argument("kind", choices=constructions.FAMILY_KINDS)
    p.add_argument("n", type=int, nargs="?", default=4)
    p.add_argument("-j", type=int, default=3, help="odd chord parameter")
    p.add_argument("-k", type=int, default=2, help="copy count (power_family)")
    p.add_argument("--base", default="thm211", choices=("thm211", "thm212", "thm213"),
                   help="fixture pair for power_family")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("check", help="run a named verification suite")
    p.add_argument("suite", choices=checks.SUITES)
    p.add_argument("--seed", type=int, default=20240801)
    p.add_argument("--json", action="store_true")
    add_tols(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="find sidigraphs with a target characteristic polynomial")
    p.add_argument("n", type=int)
    p.add_argument("--target", required=True, help="leading-first integer coefficients, e.g. '1 0 1'")
    p.add_argument("--strongly-connected", action="store_true")
    p.add_argument("--non-cycle-balanced", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--max-arcs", type=int, default=None)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("product", help="Cartesian product of two sidigraph files")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("compare", help="coefficient quasi-order of two alternating-class members")
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--json", action="store_true")
    add_tols(p)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidFamilySpec) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (
        ConvergenceFailure,
        QuadratureFailure,
        NotInDelta1,
        OrderMismatch,
        SearchBudgetExceeded,
        SidispecError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL_EXIT


if __name__ == "__main__":
    sys.exit(main())
