"""Command-line front end.

Every command builds a plain dict (the report), which is printed either as
JSON with sorted keys or as indented ``key: value`` text.  Errors map to exit
codes: 2 parse, 3 precondition, 4 size guard, 5 internal consistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core
from .core import PrimeIdeal, format_ideal, format_monomial, format_prime, localize, power
from .decomp import canonical_decomposition, is_intersection_type, is_strong_intersection_type, remove_redundant
from .errors import ConsistencyError, MidealError, ParseError, PreconditionError
from .graphs import (
    Graph,
    ass_square_bound,
    central_cycle_criterion,
    edge_ideal,
    higher_powers_not_intersection_type,
    is_central,
    square_is_intersection_type,
    three_cycles,
)
from .newton import integral_closure_gaps, supporting_hyperplanes, symbolic_containment, symbolic_power
from .parsing import (
    parse_edges,
    parse_ideal_with_names,
    parse_int_list,
    parse_prime,
    parse_set_list,
    parse_vars,
    read_edge_list,
)
from .polymatroid import (
    borel_generator,
    borel_intersection_classifier,
    from_ideal,
    is_borel_type,
    mask_indices,
    principal_borel,
    tau_closed,
    tau_closed_sets,
    tau_decomposition,
    tau_separable,
    transversal_graph,
    transversal_ideal,
    veronese_ass,
    veronese_ideal,
)
from .resolution import betti, regularity
from .spectrum import associated_primes, minimal_primes


def field_name(characteristic: int) -> str:
    return "QQ (characteristic 0)" if characteristic == 0 else f"GF({characteristic})"


class Context:
    def __init__(self, args):
        self.args = args
        self.names = None
        self.vars = parse_vars(args.vars) if getattr(args, "vars", None) else None

    def ideal(self, text: str):
        parsed = parse_ideal_with_names(text, self.vars)
        self.names = parsed.names
        return parsed.ideal

    def show(self, I) -> str:
        return format_ideal(I, self.names)

    def prime(self, p: PrimeIdeal) -> str:
        return format_prime(p, self.names)

    def mono(self, m) -> str:
        return format_monomial(m, self.names)

    def set_of(self, F) -> str:
        return "{" + ",".join(self.names[i] for i in sorted(F)) + "}"

    def components(self, dec):
        return [{"prime": self.prime(p), "support": [i + 1 for i in p.indices], "exponent": d}
                for p, d in dec.components]

    def failures(self, res):
        return [{"prime": self.prime(f.prime), "min_degree": f.min_degree,
                 "socle_degree": f.socle_degree, "witness": self.mono(f.witness),
                 "witness_exponents": list(f.witness)} for f in res.failures]

    @property
    def jobs(self) -> int:
        return self.args.jobs or 1

    @property
    def force(self) -> bool:
        return bool(self.args.force_large)

    @property
    def characteristic(self) -> int:
        return self.args.characteristic or 0


def _header(ctx, I) -> dict:
    return {"ideal": ctx.show(I), "variables": list(ctx.names), "n": I.n, "num_generators": len(I.gens)}


# -------------------------------------------------------------- ideal commands


def cmd_analyze(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    res = is_intersection_type(I, jobs=ctx.jobs)
    out = _header(ctx, I)
    out["is_intersection_type"] = res.is_intersection_type
    out["associated_primes"] = [ctx.prime(p) for p in res.associated]
    out["coefficient_field"] = field_name(ctx.characteristic)
    out["diagnostics"] = ctx.failures(res)
    if res:
        dec = canonical_decomposition(I, jobs=ctx.jobs)
        out["canonical_decomposition"] = ctx.components(dec)
        strong = is_strong_intersection_type(I, force=ctx.force, characteristic=ctx.characteristic,
                                             jobs=ctx.jobs)
        out["is_strong"] = strong.is_strong
        out["strong_reason"] = strong.reason
    else:
        out["canonical_decomposition"] = None
        out["is_strong"] = False
        out["strong_reason"] = "not of intersection type"
    if a.local_reg:
        out["local_regularity"] = [
            {"prime": ctx.prime(p),
             "regularity": regularity(localize(I, p), force=ctx.force, characteristic=ctx.characteristic)}
            for p in res.associated]
    return out


def cmd_ass(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    ass = associated_primes(I, jobs=ctx.jobs)
    out = _header(ctx, I)
    out["associated_primes"] = [ctx.prime(p) for p in ass]
    out["heights"] = [p.height for p in ass]
    out["minimal_primes"] = [ctx.prime(p) for p in minimal_primes(I)]
    return out


def cmd_decompose(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    res = is_intersection_type(I, jobs=ctx.jobs)
    out = _header(ctx, I)
    out["is_intersection_type"] = res.is_intersection_type
    out["diagnostics"] = ctx.failures(res)
    dec = canonical_decomposition(I, jobs=ctx.jobs) if res else None
    out["components"] = ctx.components(dec) if dec else None
    out["irredundant"] = dec.irredundant if dec else None
    return out


def _betti_report(ctx, I, method) -> dict:
    B = betti(I, method=method, characteristic=ctx.characteristic, force=ctx.force)
    return {
        "coefficient_field": field_name(ctx.characteristic),
        "method": method,
        "betti": {f"{i},{j}": r for (i, j), r in sorted(B.entries.items())},
        "table": B.format(),
        "regularity": B.regularity(),
        "projective_dimension": B.projective_dimension(),
    }


def cmd_betti(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    out = _header(ctx, I)
    out.update(_betti_report(ctx, I, a.method))
    return out


def cmd_reg(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    out = _header(ctx, I)
    out["coefficient_field"] = field_name(ctx.characteristic)
    out["regularity"] = regularity(I, method=a.method, characteristic=ctx.characteristic, force=ctx.force)
    return out


def cmd_power(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    P = power(I, a.k)
    out = _header(ctx, I)
    out.update({"k": a.k, "power": ctx.show(P), "power_num_generators": len(P.gens)})
    return out


def cmd_localize(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    p = parse_prime(a.prime, ctx.names)
    L = localize(I, p)
    local_names = [ctx.names[i] for i in p.indices]
    out = _header(ctx, I)
    out.update({"prime": ctx.prime(p), "localization": format_ideal(L, local_names),
                "local_variables": local_names, "local_degrees": sorted(set(L.degrees()))})
    return out


# ---------------------------------------------------------- polymatroid group


def _polymatroid(ctx, text):
    I = ctx.ideal(text)
    P = from_ideal(I)
    if P is None:
        raise PreconditionError("ideal is not polymatroidal")
    return I, P


def _subsets(n):
    return sorted(range(1, 1 << n), key=lambda F: (bin(F).count("1"), mask_indices(F, n)))


def cmd_poly_rank(ctx, a) -> dict:
    I, P = _polymatroid(ctx, a.ideal)
    out = _header(ctx, I)
    out["rank"] = P.rank
    out["table"] = [{"set": ctx.set_of(mask_indices(F, I.n)), "rho": P.rank_table[F], "tau": P.tau_table[F]}
                    for F in _subsets(I.n)]
    return out


def cmd_poly_tau(ctx, a) -> dict:
    I, P = _polymatroid(ctx, a.ideal)
    out = _header(ctx, I)
    out["table"] = [{"set": ctx.set_of(mask_indices(F, I.n)), "tau": P.tau_table[F],
                     "tau_closed": tau_closed(P, F), "tau_separable": tau_separable(P, F)}
                    for F in _subsets(I.n)]
    out["tau_closed_sets"] = [ctx.set_of(mask_indices(F, I.n)) for F in tau_closed_sets(P)]
    return out


def cmd_poly_tau_decomp(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    dec = tau_decomposition(I)
    out = _header(ctx, I)
    out["components"] = ctx.components(dec)
    out["irredundant"] = dec.irredundant
    out["after_redundancy_elimination"] = ctx.components(remove_redundant(dec))
    return out


def cmd_poly_veronese(ctx, a) -> dict:
    caps = parse_int_list(a.caps)
    I = veronese_ideal(a.d, caps)
    ctx.names = ctx.vars or tuple(f"x{i + 1}" for i in range(I.n))
    out = _header(ctx, I)
    out["d"] = a.d
    out["caps"] = list(caps)
    out["associated_primes_closed_form"] = [ctx.prime(p) for p in veronese_ass(a.d, caps)]
    dec = canonical_decomposition(I, jobs=ctx.jobs)
    out["canonical_decomposition"] = ctx.components(dec) if dec else None
    return out


def cmd_poly_transversal(ctx, a) -> dict:
    sets = parse_set_list(a.sets)
    n = a.n if a.n else max(max(s) for s in sets) + 1
    I = transversal_ideal(sets, n)
    ctx.names = ctx.vars or tuple(f"x{i + 1}" for i in range(n))
    out = _header(ctx, I)
    out["sets"] = [ctx.set_of(s) for s in sets]
    out["intersection_graph"] = [[i + 1, j + 1] for i, j in sorted(transversal_graph(sets))]
    dec = canonical_decomposition(I, jobs=ctx.jobs)
    out["canonical_decomposition"] = ctx.components(dec) if dec else None
    return out


def cmd_poly_borel(ctx, a) -> dict:
    order = tuple(v - 1 for v in parse_int_list(a.order)) if a.order else None
    if a.principal:
        u = parse_int_list(a.principal)
        I = principal_borel(u, order)
        ctx.names = ctx.vars or tuple(f"x{i + 1}" for i in range(I.n))
        out = _header(ctx, I)
        out["generator"] = ctx.mono(u)
        return out
    if not a.ideal:
        raise PreconditionError("give an ideal or --principal")
    I = ctx.ideal(a.ideal)
    out = _header(ctx, I)
    borel = is_borel_type(I, order)
    out["is_borel_type"] = borel
    if borel:
        out["classification"] = borel_intersection_classifier(I, order, force=ctx.force).value
        out["lex_generator"] = ctx.mono(borel_generator(I, order))
    return out


# ---------------------------------------------------------------- graph group


def _graph(ctx, a) -> Graph:
    if a.edges and a.file:
        raise PreconditionError("give --edges or --file, not both")
    if a.edges:
        edges = parse_edges(a.edges)
    elif a.file:
        try:
            with open(a.file, encoding="utf-8") as fh:
                edges = read_edge_list(fh.read())
        except OSError as exc:
            raise ParseError(f"cannot read {a.file}: {exc.strerror}") from exc
    else:
        raise PreconditionError("give --edges or --file")
    G = Graph.from_edges(edges, a.vertices)
    ctx.names = ctx.vars or tuple(f"x{i + 1}" for i in range(G.n))
    if len(ctx.names) != G.n:
        raise PreconditionError(f"{len(ctx.names)} variable names for {G.n} vertices")
    return G


def _graph_header(ctx, G) -> dict:
    return {"vertices": G.n, "edges": [[i + 1, j + 1] for i, j in sorted(G.edges)]}


def cmd_graph_edge_ideal(ctx, a) -> dict:
    G = _graph(ctx, a)
    out = _graph_header(ctx, G)
    out["edge_ideal"] = ctx.show(edge_ideal(G))
    return out


def cmd_graph_central(ctx, a) -> dict:
    G = _graph(ctx, a)
    out = _graph_header(ctx, G)
    out["three_cycles"] = [{"cycle": ctx.set_of(C), "central": is_central(G, C)} for C in three_cycles(G)]
    out["all_central"] = central_cycle_criterion(G)
    return out


def cmd_graph_square(ctx, a) -> dict:
    G = _graph(ctx, a)
    out = _graph_header(ctx, G)
    verdict = square_is_intersection_type(G, check=True)
    bound = ass_square_bound(G)
    if bound.holds != verdict:
        raise ConsistencyError("Ass-bound criterion disagrees with the central-cycle criterion",
                               bound.holds, verdict)
    out["square_is_intersection_type"] = verdict
    out["ass_square"] = [ctx.prime(p) for p in bound.ass_square]
    out["extra_primes"] = [ctx.prime(p) for p in bound.extra]
    return out


def cmd_graph_powers(ctx, a) -> dict:
    G = _graph(ctx, a)
    out = _graph_header(ctx, G)
    out["powers"] = [{"k": e.k, "is_intersection_type": e.is_intersection_type, "prime": ctx.prime(e.prime),
                      "socle_witness": ctx.mono(e.witness), "witness_degree": e.witness_degree,
                      "local_min_degree": e.local_min_degree}
                     for e in higher_powers_not_intersection_type(G, a.k)]
    return out


# --------------------------------------------------------------- newton group


def cmd_newton_hyperplanes(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    hs = supporting_hyperplanes(I)
    out = _header(ctx, I)
    out["hyperplanes"] = [h.format(ctx.names) for h in hs]
    out["hyperplane_data"] = [h.to_json() for h in hs]
    return out


def cmd_newton_closed(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    gaps = integral_closure_gaps(I)
    out = _header(ctx, I)
    out["is_integrally_closed"] = not gaps
    out["gaps"] = [ctx.mono(g) for g in sorted(gaps, key=core.monomial_key)]
    out["integral_closure"] = ctx.show(core.MonomialIdeal.from_generators(list(I.gens) + gaps, I.n))
    return out


def cmd_newton_symbolic(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    S = symbolic_power(I, a.t)
    It = power(I, a.t)
    out = _header(ctx, I)
    out["t"] = a.t
    out["symbolic_power"] = ctx.show(S)
    out["ordinary_power"] = ctx.show(It)
    out["equal"] = S == It
    out["outside_ordinary_power"] = [ctx.mono(g) for g in S.gens if not core.contains(It, g)]
    return out


def cmd_newton_containment(ctx, a) -> dict:
    I = ctx.ideal(a.ideal)
    r = symbolic_containment(I, a.k, force=ctx.force)
    out = _header(ctx, I)
    out.update({
        "k": r.k,
        "coefficient_field": field_name(ctx.characteristic),
        "power_is_intersection_type": r.power_is_intersection_type,
        "regularity_of_power": r.regularity,
        "regularity_containment": r.regularity_containment,
        "polymatroid_degree": r.polymatroid_degree,
        "polymatroid_containment": r.polymatroid_containment,
        "general_multiplier": r.general_multiplier,
        "general_containment": r.general_containment,
    })
    return out


# ----------------------------------------------------------------- rendering


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _scalar(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(report, indent: int = 0) -> str:
    pad = " " * indent
    lines = []
    for key, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(v, indent + 2))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{key}:")
            for item in v:
                body = render_text(item, indent + 4).lstrip()
                lines.append(f"{pad}  - {body}")
        elif isinstance(v, list):
            lines.append(f"{pad}{key}: " + ("[" + ", ".join(_scalar(x) for x in v) + "]"))
        elif isinstance(v, str) and "\n" in v:
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {ln}" for ln in v.splitlines())
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
    return "\n".join(lines)


# -------------------------------------------------------------------- parser


def _global_options(parser, suppress: bool):
    d = {"default": argparse.SUPPRESS} if suppress else {}
    parser.add_argument("--vars", help="variable names (comma list) or a count N for x1..xN",
                        **({"default": None} if not suppress else d))
    parser.add_argument("--json", action="store_true", help="machine-readable output", **d)
    parser.add_argument("--max-n", type=int, help="dimension guard for subset enumeration",
                        **({"default": core.MAX_DIM} if not suppress else d))
    parser.add_argument("--force-large", action="store_true", help="bypass size guards", **d)
    parser.add_argument("--jobs", type=int, help="worker processes for associated primes",
                        **({"default": 1} if not suppress else d))
    parser.add_argument("--characteristic", type=int, help="field characteristic for Betti numbers (0 or a prime)",
                        **({"default": 0} if not suppress else d))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mideal", description="Exact analysis of monomial ideals.")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(subparsers, name, func, help_, ideal=True):
        p = subparsers.add_parser(name, parents=[common], help=help_)
        if ideal:
            p.add_argument("ideal", help='e.g. "x*y, x*z, y*z" or "x1^2*x2, x3"')
        p.set_defaults(func=func)
        return p

    p = add(sub, "analyze", cmd_analyze, "intersection type, decomposition, strong type, diagnostics")
    p.add_argument("--local-reg", action="store_true", help="regularity of every localization at Ass")
    add(sub, "ass", cmd_ass, "associated primes")
    add(sub, "decompose", cmd_decompose, "canonical decomposition into prime powers")
    p = add(sub, "betti", cmd_betti, "graded Betti numbers")
    p.add_argument("--method", choices=["koszul", "taylor"], default="koszul")
    p = add(sub, "reg", cmd_reg, "Castelnuovo-Mumford regularity")
    p.add_argument("--method", choices=["koszul", "taylor"], default="koszul")
    p = add(sub, "power", cmd_power, "ordinary power I^k")
    p.add_argument("-k", type=int, required=True)
    p = add(sub, "localize", cmd_localize, "monomial localization at a prime")
    p.add_argument("-p", "--prime", required=True, help='variables of the prime, e.g. "x,y,z" or "1,2,3"')

    poly = sub.add_parser("polymatroid", help="polymatroidal and Borel ideals").add_subparsers(
        dest="subcommand", required=True)
    add(poly, "rank", cmd_poly_rank, "rank function and complementary rank")
    add(poly, "tau", cmd_poly_tau, "tau table, tau-closed and tau-separable sets")
    add(poly, "tau-decomp", cmd_poly_tau_decomp, "intersection over tau-closed inseparable sets")
    p = add(poly, "veronese", cmd_poly_veronese, "ideal of Veronese type", ideal=False)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--caps", required=True, help="comma-separated bounds a_1..a_n")
    p = add(poly, "transversal", cmd_poly_transversal, "transversal polymatroidal ideal", ideal=False)
    p.add_argument("--sets", required=True, help='1-based sets, e.g. "1,2;2,3"')
    p.add_argument("--n", type=int, help="number of variables")
    p = add(poly, "borel", cmd_poly_borel, "Borel-type classification or principal Borel ideal", ideal=False)
    p.add_argument("ideal", nargs="?")
    p.add_argument("--principal", help="exponent vector u of the principal generator, e.g. 1,2")
    p.add_argument("--order", help="variable order as 1-based indices, e.g. 2,1,3")

    graph = sub.add_parser("graph", help="edge ideals of simple graphs").add_subparsers(
        dest="subcommand", required=True)
    for name, func, help_ in [
        ("edge-ideal", cmd_graph_edge_ideal, "edge ideal"),
        ("central-cycles", cmd_graph_central, "3-cycles and whether they are central"),
        ("square-type", cmd_graph_square, "is I(G)^2 of intersection type"),
        ("powers", cmd_graph_powers, "socle witnesses for I(G)^k, k = 2..K"),
    ]:
        p = add(graph, name, func, help_, ideal=False)
        p.add_argument("--edges", help='inline edges, e.g. "1-2,2-3,1-3"')
        p.add_argument("--file", help="edge-list file, one 1-indexed pair per line")
        p.add_argument("--vertices", type=int, help="number of vertices (default: largest index)")
        if name == "powers":
            p.add_argument("-k", type=int, default=3, help="largest power")

    newton = sub.add_parser("newton", help="Newton polyhedra and symbolic powers").add_subparsers(
        dest="subcommand", required=True)
    add(newton, "hyperplanes", cmd_newton_hyperplanes, "supporting hyperplanes of con(I)")
    add(newton, "closed", cmd_newton_closed, "integral closedness and integral closure")
    p = add(newton, "symbolic", cmd_newton_symbolic, "symbolic power I^(t)")
    p.add_argument("-t", type=int, required=True)
    p = add(newton, "containment", cmd_newton_containment, "symbolic-power containments for I^k")
    p.add_argument("-k", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    old_max = core.MAX_DIM
    try:
        core.MAX_DIM = args.max_n
        ctx = Context(args)
        report = args.func(ctx, args)
    except ConsistencyError as exc:
        print(f"error: internal consistency failure: {exc}", file=sys.stderr)
        print(f"  left:  {exc.left}", file=sys.stderr)
        print(f"  right: {exc.right}", file=sys.stderr)
        return exc.exit_code
    except MidealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    finally:
        core.MAX_DIM = old_max
    print(render_json(report) if args.json else render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
