"""Command-line interface: ``nmi <command> <file> [flags]``.

Exit codes: 0 verdict produced, 2 parse error (or unreadable file),
3 budget exceeded, 4 unsupported input.
"""

import argparse
import os
import sys
from typing import List, Optional

from . import __version__
from .closure import (
    closure_generators,
    closure_membership,
    covering_vertices,
    irp_box_scan,
    irp_ge,
    irp_le,
    min_generator_test,
    root_power_certificate,
)
from .combinatorics import (
    Clutter,
    Graph,
    blocker,
    complement,
    connected_components,
    cover_ideal,
    duality_criterion,
    edge_ideal,
    graph,
    hochster_configurations,
    independence_number,
    m_monomial,
    m_monomial_in_rees,
)
from .cone import (
    IntegerCone,
    NormalityReport,
    closure_certificate,
    hilbert_basis,
    normality_via_bset,
    normality_via_rees,
    semigroup_decomposition,
)
from .errors import Budget, BudgetExceeded, NMIError, ParseError, UnsupportedInput
from .formats import (
    MatrixBlock,
    parse_graph,
    parse_ideal,
    parse_matrix_block,
    rees_block,
    serialize_matrix_block,
)
from .ideal import MonomialIdeal, incidence_matrix, make_ideal, monomial_str, parse_monomial, power, power_membership
from .polyhedral import cone_facets, independent_subset
from .report import Report

DEFAULT_BUDGET_SECONDS = 600.0
DEFAULT_BUDGET_POINTS = 10_000_000

TRIVIAL_NOTE = "theorem-backed, certificate = trivial ideal (zero and unit ideals are normal)"


# -- input ---------------------------------------------------------------------------------


def read_input(path: str):
    """``("ideal", I)``, ``("graph", G)`` or ``("block", B)`` according to the header."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    first = ""
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            first = body.split()[0]
            break
    if first == "vars":
        return "ideal", parse_ideal(text)
    if first == "vertices":
        return "graph", parse_graph(text)
    return "block", parse_matrix_block(text)


def _as_ideal(kind, obj) -> MonomialIdeal:
    if kind == "ideal":
        return obj
    if kind == "graph":
        return edge_ideal(obj)
    raise UnsupportedInput("this command expects an ideal file or a graph file, not a matrix block")


def _as_graph(kind, obj) -> Graph:
    if kind == "graph":
        if not isinstance(obj, Graph):
            raise UnsupportedInput("this command needs a graph; the file describes a clutter with larger edges")
        return obj
    if kind == "ideal":
        G = graph_of_ideal(obj)
        if G is None:
            raise UnsupportedInput("this command needs a graph or the edge ideal of a graph (squarefree, degree 2)")
        return G
    raise UnsupportedInput("this command expects a graph file, not a matrix block")


def graph_of_ideal(I: MonomialIdeal) -> Optional[Graph]:
    """The graph whose edge ideal is ``I``, or None when ``I`` is not a quadratic squarefree ideal."""
    if not I.is_proper or not I.is_squarefree or any(sum(g) != 2 for g in I.gens):
        return None
    edges = [tuple(i + 1 for i, x in enumerate(g) if x) for g in I.gens]
    return graph(I.num_vars, edges)


def _budget(args) -> Budget:
    return Budget(max_points=args.budget_points, max_seconds=args.budget_seconds)


# -- shared report pieces ----------------------------------------------------------------


def normality_items(rep: NormalityReport):
    """Report entries for a normality verdict and its certificate."""
    items = [("normal", rep.normal), ("route", rep.route)]
    if rep.normal:
        if rep.hb is not None:
            items.append(("certificate", "Hilbert basis of the cone equals its generator set"))
            items.append(("hilbert_basis.size", len(rep.hb.minimal_hb)))
        elif rep.note:
            items.append(("certificate", rep.note))
        return items
    items += [
        ("witness", monomial_str(rep.witness)),
        ("witness.exponent", rep.witness),
        ("witness.power", rep.power),
        ("witness.closure_lp_value", rep.lp_value),
        ("witness.closure_lambda", rep.lam),
        ("witness.in_power", False),
        ("witness.root_power", rep.root_power),
        ("witness.root_multiset", rep.root_multiset),
    ]
    if rep.cone_witness is not None:
        items.append(("witness.cone_point", rep.cone_witness))
    if rep.hb is not None:
        items.append(("hilbert_basis.complete", rep.hb.complete))
        if rep.hb.complete:
            items.append(("hilbert_basis.size", len(rep.hb.minimal_hb)))
    if rep.note:
        items.append(("note", rep.note))
    return items


def trivial_normality(I: MonomialIdeal) -> Optional[NormalityReport]:
    if I.is_proper:
        return None
    return NormalityReport(True, "trivial", note=TRIVIAL_NOTE)


def hochster_normality(G: Graph) -> NormalityReport:
    """Edge-ideal normality from the Hochster-configuration characterization."""
    I = edge_ideal(G)
    trivial = trivial_normality(I)
    if trivial is not None:
        return trivial
    configs = hochster_configurations(G, first_only=True)
    if not configs:
        return NormalityReport(
            True,
            "hochster",
            note="theorem-backed, certificate = exhaustive induced odd cycle search found no Hochster configuration",
        )
    cfg = configs[0]
    a, level = m_monomial(G, cfg.cycle1, cfg.cycle2)
    note = f"Hochster configuration {cfg.cycle1} / {cfg.cycle2}"
    return closure_certificate(I, a, level, "hochster", note=note)


def normality(I: MonomialIdeal, route: str, budget, first_witness: bool = False) -> NormalityReport:
    trivial = trivial_normality(I)
    if trivial is not None:
        return trivial
    if route == "auto":
        G = graph_of_ideal(I)
        if G is not None:
            return hochster_normality(G)
        route = "rees"
    if route == "rees":
        return normality_via_rees(I, budget, first_witness=first_witness)
    if route == "bset":
        return normality_via_bset(I, budget)
    raise UnsupportedInput(f"unknown route {route!r}")


# -- commands ------------------------------------------------------------------------------


def cmd_normal(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    I = _as_ideal(kind, obj)
    report.add("ideal.vars", I.num_vars).add("ideal.generators", I.num_gens)
    report.add("route.requested", args.route)
    rep = normality(I, args.route, _budget(args), args.first_witness)
    report.extend("", normality_items(rep))
    return 0


def cmd_membership(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    I = _as_ideal(kind, obj)
    if args.monomial is None:
        raise UnsupportedInput("membership needs --monomial")
    try:
        a = parse_monomial(args.monomial, I.num_vars)
    except ValueError as exc:
        raise ParseError(f"--monomial: {exc}") from None
    n = args.n
    report.add("monomial", monomial_str(a)).add("n", n)
    v = closure_membership(I, a, n)
    report.add("closure.member", v.member)
    if v.lp_value is not None:
        report.add("closure.lp_value", v.lp_value).add("closure.lambda", v.lam).add("closure.dual", v.dual)
    m = power_membership(I, a, n)
    report.add("power.member", m.member)
    if m.member:
        report.add("power.multiset", m.certificate)
    if v.member and v.lp_value is not None:
        p, counts = root_power_certificate(I, a, n, v.lam, v.lp_value)
        report.add("closure.root_power", p).add("closure.root_multiset", counts)
        report.add("closure.minimal_generator", min_generator_test(I, a, n))
    return 0


def cmd_closure(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    I = _as_ideal(kind, obj)
    if not I.is_proper:
        raise UnsupportedInput(f"closure generators need a proper ideal, got the {I.kind} ideal")
    n = args.n
    C = closure_generators(I, n, _budget(args))
    report.add("n", n).add("closure.generators", C.num_gens)
    for k, g in enumerate(C.gens, 1):
        report.add(f"closure.generator.{k}", monomial_str(g))
    P = power(I, n)
    extra = [g for g in C.gens if not P.contains(g)]
    report.add("closure.equals_power", not extra)
    report.add("closure.outside_power", len(extra))
    return 0


def _hb_items(rep, C: IntegerCone, list_elements: bool = True):
    items = [("cone.dim", C.dim), ("cone.generators", len(C.generators)), ("cone.grading", rep.grading)]
    items.append(("input_is_hilbert_basis", rep.input_is_hb))
    items.append(("verdict", "input is a Hilbert basis" if rep.input_is_hb else "input is NOT a Hilbert basis"))
    items.append(("complete", rep.complete))
    if rep.witness is not None:
        items.append(("witness", rep.witness))
    if rep.complete:
        items.append(("hilbert_basis.size", len(rep.minimal_hb)))
        if list_elements:
            items += [(f"hilbert_basis.{k}", v) for k, v in enumerate(rep.minimal_hb, 1)]
    items.append(("simplices", rep.num_simplices))
    return items


def _verify_cone_witness(C: IntegerCone, w) -> bool:
    """Independent re-check: ``w`` satisfies every facet inequality but is not a sum of generators."""
    if len(independent_subset(C.generators)) < C.dim:
        return True  # not full-dimensional; the engine already verified it in lattice coordinates
    facets = cone_facets(C.generators)
    inside = all(sum(f[i] * w[i] for i in range(C.dim)) >= 0 for f in facets)
    return inside and semigroup_decomposition(w, C.generators, facets, C.grading) is None


def cmd_hilbert(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    if kind == "block":
        block: MatrixBlock = obj
    else:
        I = _as_ideal(kind, obj)
        if args.cone == "bset":
            from .cone import b_set

            block = MatrixBlock("normalization", b_set(I).generators, I.num_vars + 1)
        else:
            block = rees_block(I)
    if args.emit_block:
        report.block_text = serialize_matrix_block(block)
        return 0
    budget = _budget(args)
    report.add("mode", block.mode)
    if block.mode == "normalization":
        if not block.rows:
            raise UnsupportedInput("a normalization block needs at least one row")
        C = IntegerCone(block.row_length, block.rows)
        rep = hilbert_basis(C, budget, first_witness=args.first_witness)
        report.extend("", _hb_items(rep, C, not args.quiet))
        if rep.witness is not None:
            report.add("witness.verified", _verify_cone_witness(C, rep.witness))
        return 0
    # rees_algebra: the rows are the exponent vectors of the ideal's generators
    s = block.row_length
    I = make_ideal(s, block.rows)
    report.add("ideal.vars", s).add("ideal.generators", I.num_gens)
    if I.num_gens != len(block.rows):
        report.add("note", "non-minimal rows were discarded before building the Rees cone")
    rep = normality(I, "rees", budget, args.first_witness)
    if rep.hb is not None:
        from .cone import rees_cone

        report.extend("rees", _hb_items(rep.hb, rees_cone(I), not args.quiet))
    report.extend("", normality_items(rep))
    return 0


def _cell(report: Report, name: str, fn, args) -> bool:
    """Run one report cell with its own budget; record failures without aborting."""
    try:
        report.extend(name, fn(_budget(args)))
        return True
    except BudgetExceeded as exc:
        report.add(f"{name}.status", "budget exceeded")
        report.add(f"{name}.message", str(exc))
        return False
    except UnsupportedInput as exc:
        report.add(f"{name}.status", "unsupported")
        report.add(f"{name}.message", str(exc))
        return True


def _config_items(configs):
    items = [("count", len(configs))]
    if configs:
        c = configs[0]
        items += [("first.cycle1", c.cycle1), ("first.cycle2", c.cycle2)]
        items += [("first.forward", c.forward), ("first.backward", c.backward)]
    return items


def cmd_graph_report(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    G = _as_graph(kind, obj)
    H = complement(G)
    report.add("graph.vertices", G.num_vertices).add("graph.edges", len(G.edges))
    report.add("graph.components", len(connected_components(G)))
    report.add("complement.edges", len(H.edges))
    ok = True
    state = {}

    def basics(budget):
        b = independence_number(G)
        state["beta0"] = b
        return [
            ("independence_number", b),
            ("complement_independence_number", independence_number(H)),
            ("blocker.size", len(blocker(G).edges)),
        ]

    ok &= _cell(report, "graph", basics, args)
    ok &= _cell(report, "hochster", lambda b: _config_items(hochster_configurations(G)), args)
    ok &= _cell(report, "complement.hochster", lambda b: _config_items(hochster_configurations(H)), args)

    def cover_cell(graph_):
        def run(budget):
            I = cover_ideal(graph_)
            items = [("generators", I.num_gens)]
            if I.is_proper:
                items.append(("degrees", tuple(sorted(set(I.degrees())))))
            rep = normality(I, "rees", budget)
            state[id(graph_)] = rep.normal
            return items + normality_items(rep)

        return run

    ok &= _cell(report, "edge_ideal", lambda b: normality_items(hochster_normality(G)), args)
    ok &= _cell(report, "cover_ideal", cover_cell(G), args)
    ok &= _cell(report, "complement.edge_ideal", lambda b: normality_items(hochster_normality(H)), args)
    ok &= _cell(report, "complement.cover_ideal", cover_cell(H), args)

    def duality(budget):
        b = state.get("beta0", None)
        if b is None:
            b = independence_number(G)
        if b > 2:
            return [("applicable", False), ("reason", f"independence number {b} > 2")]
        d = duality_criterion(G)
        items = [("applicable", True), ("cover_ideal_normal", d.normal)]
        rees = state.get(id(G))
        if rees is not None:
            if rees != d.normal:
                raise AssertionError("duality criterion disagrees with the Rees-cone verdict")
            items.append(("agrees_with_rees", True))
        return items

    ok &= _cell(report, "duality", duality, args)
    report.add("budget.status", "ok" if ok else "exceeded in at least one cell")
    return 0 if ok else 3


def cmd_irp(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    I = _as_ideal(kind, obj)
    budget = _budget(args)
    A = incidence_matrix(I)
    report.add("direction", args.direction)
    if args.falsify_box is not None:
        scan = irp_box_scan(A, args.direction, args.falsify_box, budget)
        report.add("scan.box", scan.box).add("scan.checked", scan.checked)
        report.add("scan.counterexample", scan.counterexample)
        if scan.counterexample is not None:
            report.add("scan.lp_value", scan.lp_value).add("scan.ip_value", scan.ip_value)
        report.add("scan.note", "a finite scan can refute the rounding property, never prove it")
        return 0
    if args.direction == "ge":
        rep = normality_via_rees(I, budget)
        if rep.normal != irp_ge(I, budget):
            raise AssertionError("irp_ge disagrees with the Rees-cone verdict")
        report.add("holds", rep.normal)
        report.extend("normality", normality_items(rep))
    else:
        rep = irp_le(A, budget)
        report.add("holds", rep.holds)
        for name, value in sorted(rep.routes.items()):
            report.add(f"route.{name}", value)
        if rep.note:
            report.add("note", rep.note)
    return 0


def cmd_covers(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    if kind == "graph":
        C: Clutter = obj
        I = edge_ideal(C)
    else:
        I = _as_ideal(kind, obj)
        C = None
        if I.is_proper and I.is_squarefree:
            C = Clutter(tuple(range(1, I.num_vars + 1)), [frozenset(i + 1 for i, x in enumerate(g) if x) for g in I.gens])
    P = covering_vertices(I, args.method, _budget(args))
    report.add("vertices", len(P.vertex_list))
    for k, u in enumerate(P.vertex_list, 1):
        report.add(f"vertex.{k}", u)
    ints = P.integral_vertices()
    report.add("integral_vertices", len(ints))
    if C is not None:
        B = blocker(C)
        covers = B.sorted_edges()
        report.add("minimal_covers", len(covers))
        for k, e in enumerate(covers, 1):
            report.add(f"minimal_cover.{k}", tuple(sorted(e)))
        expected = {tuple(1 if v in e else 0 for v in C.vertices) for e in covers}
        report.add("integral_vertices_are_minimal_covers", {tuple(int(x) for x in u) for u in ints} == expected)
    return 0


def cmd_hochster(args, report: Report) -> int:
    kind, obj = read_input(args.file)
    G = _as_graph(kind, obj)
    configs = hochster_configurations(G, args.max_len)
    report.add("configurations", len(configs))
    report.add("edge_ideal_normal", not configs)
    for k, c in enumerate(configs, 1):
        a, level = m_monomial(G, c.cycle1, c.cycle2)
        v = closure_membership(edge_ideal(G), a, level)
        report.add(f"config.{k}.cycle1", c.cycle1).add(f"config.{k}.cycle2", c.cycle2)
        report.add(f"config.{k}.forward", c.forward).add(f"config.{k}.backward", c.backward)
        report.add(f"config.{k}.monomial", monomial_str(a)).add(f"config.{k}.level", level)
        report.add(f"config.{k}.closure_lp_value", v.lp_value)
        report.add(f"config.{k}.in_rees_algebra", m_monomial_in_rees(G, c.cycle1, c.cycle2))
    return 0


# -- argument parsing -------------------------------------------------------------------------

COMMANDS = {
    "normal": cmd_normal,
    "membership": cmd_membership,
    "closure": cmd_closure,
    "hilbert": cmd_hilbert,
    "graph-report": cmd_graph_report,
    "irp": cmd_irp,
    "covers": cmd_covers,
    "hochster": cmd_hochster,
}


def _env_seconds():
    raw = os.environ.get("NMI_BUDGET_SECONDS")
    if raw is None or raw == "":
        return DEFAULT_BUDGET_SECONDS
    try:
        return float(raw)
    except ValueError:
        return DEFAULT_BUDGET_SECONDS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="ideal, graph or matrix-block file")
    common.add_argument("--format", choices=("text", "kv"), default="text", help="output format")
    common.add_argument("--budget-points", type=int, default=DEFAULT_BUDGET_POINTS, help="max lattice points per computation")
    common.add_argument(
        "--budget-seconds",
        type=float,
        default=None,
        help=f"wall-clock budget (default: $NMI_BUDGET_SECONDS or {DEFAULT_BUDGET_SECONDS:g})",
    )
    common.add_argument("--timing", action="store_true", help="append elapsed time (makes output non-reproducible)")

    parser = argparse.ArgumentParser(
        prog="nmi", description="Exact normality and integral-closure checks for monomial ideals."
    )
    parser.add_argument("--version", action="version", version=f"nmi {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal", parents=[common], help="decide normality of an ideal")
    p.add_argument("--route", choices=("rees", "bset", "auto"), default="auto")
    p.add_argument("--first-witness", action="store_true", help="stop at the first non-normality witness")

    p = sub.add_parser("membership", parents=[common], help="test t^a in closure(I^n) and in I^n")
    p.add_argument("--monomial", required=True, help='monomial such as "t1^2*t3"')
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("closure", parents=[common], help="minimal generators of closure(I^n)")
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert basis of a matrix block")
    p.add_argument("--cone", choices=("rees", "bset"), default="rees", help="cone to build from an ideal file")
    p.add_argument("--emit-block", action="store_true", help="print the matrix block instead of computing")
    p.add_argument("--first-witness", action="store_true")
    p.add_argument("--quiet", action="store_true", help="omit the list of Hilbert basis elements")

    sub.add_parser("graph-report", parents=[common], help="normality summary of a graph and its complement")

    p = sub.add_parser("irp", parents=[common], help="integer rounding property of the incidence matrix")
    p.add_argument("--direction", choices=("ge", "le"), default="ge")
    p.add_argument("--falsify-box", type=int, default=None, metavar="K", help="scan alpha in [0,K]^s instead")

    p = sub.add_parser("covers", parents=[common], help="vertices of the covering polyhedron")
    p.add_argument("--method", choices=("dd", "subsets"), default="dd")

    p = sub.add_parser("hochster", parents=[common], help="Hochster configurations of a graph")
    p.add_argument("--max-len", type=int, default=None, help="longest induced odd cycle to consider")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget_seconds is None:
        args.budget_seconds = _env_seconds()
    for name in ("n",):
        if getattr(args, name, 1) < 1:
            parser.error("--n must be at least 1")
    report = Report(args.command)
    report.block_text = None
    clock = Budget()
    try:
        code = COMMANDS[args.command](args, report)
    except NMIError as exc:
        print(f"nmi: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    if report.block_text is not None:
        sys.stdout.write(report.block_text)
        return code
    if args.timing:
        report.add("timing.seconds", round(clock.elapsed(), 3))
    sys.stdout.write(report.render(args.format))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
