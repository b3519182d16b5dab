"""Command-line front end.

Exit codes: 0 ok (decision true / value computed), 1 decision false or
certificate inapplicable, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import budget as _budget
from .applications import (
    fano_q,
    hypergraph_f_AT,
    min_edge_unique_certificate,
    parity_unique_certificate,
    parse_qspec,
    t_list_cycle_check,
    unique_coloring,
)
from .certifiers import (
    PreconditionError,
    coefficient_via_permanent,
    euler_diff,
    signed_coloring_sum,
    signed_sum_regular,
    weighted_subgraph_sum,
)
from .graphs import (
    GraphError,
    Hypergraph,
    MultiGraph,
    Orientation,
    parse_family,
    parse_hypergraph,
    parse_multigraph,
)
from .solver import ATCertificate, at_number, bounds_report, is_f_AT, monomial_coefficient

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


# -- report ---------------------------------------------------------------------

def _exact(x) -> str:
    """Exact decimal (or p/q) string; never rounded."""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _graph_summary(g: MultiGraph | Hypergraph, source: str) -> dict:
    return {"source": source, "n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]}


def _flatten(prefix: str, value, out: list[str]) -> None:
    if isinstance(value, dict):
        for k in value:
            _flatten(f"{prefix}.{k}" if prefix else k, value[k], out)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for k, v in enumerate(value):
            _flatten(f"{prefix}[{k}]", v, out)
    else:
        out.append(f"{prefix}: {json.dumps(value) if isinstance(value, list) else value}")


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines) + "\n"


# -- input helpers --------------------------------------------------------------

def _load_graph(args) -> tuple[MultiGraph, str]:
    if args.graph and args.family:
        raise InputError("give either --graph or --family, not both")
    if args.graph:
        return parse_multigraph(Path(args.graph).read_text(encoding="utf-8")), args.graph
    if args.family:
        g = parse_family(args.family)
        if not isinstance(g, MultiGraph):
            raise InputError(f"family {args.family!r} is a hypergraph")
        return g, f"family:{args.family}"
    raise InputError("an input graph is required (--graph FILE or --family NAME:PARAMS)")


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"{what} must be a comma-separated list of integers") from None


def _f_vector(args, g) -> tuple[int, ...]:
    if not args.f:
        raise InputError("--f is required")
    f = tuple(_int_list(args.f, "--f"))
    if len(f) != g.n:
        raise InputError(f"--f has {len(f)} entries, graph has {g.n} vertices")
    return f


def _orientation(args, g: MultiGraph) -> Orientation:
    flags = args.flip or "0" * g.m
    if len(flags) != g.m or set(flags) - {"0", "1"}:
        raise InputError(f"--flip must be a 0/1 string of length m = {g.m}")
    return Orientation.from_flags(g, [int(c) for c in flags])


def _weights(text: str | None, d: Orientation):
    if text is None:
        return None
    blocks = text.split(";")
    if len(blocks) != d.base.n:
        raise InputError(f"--weights needs {d.base.n} ';'-separated blocks")
    try:
        return [[Fraction(t) for t in b.split(",") if t.strip()] for b in blocks]
    except (ValueError, ZeroDivisionError):
        raise InputError("--weights entries must be integers or fractions p/q") from None


def _orientation_dict(d: Orientation) -> dict:
    return {
        "flags": "".join(map(str, d.flags)),
        "out_degrees": list(d.out_degrees),
        "decreasing_arcs": d.decreasing,
    }


# -- commands -----------------------------------------------------------------------
# each returns (status, outputs, certificate); status is "ok", "false" or "inapplicable"

def cmd_at(args, g):
    res = at_number(g, args.budget)
    return "ok", {"at": res.value}, res.certificate.as_dict()


def cmd_f_at(args, g):
    f = _f_vector(args, g)
    res = is_f_AT(g, f, args.budget)
    cert = res.certificate.as_dict() if res.certificate else None
    return ("ok" if res else "false"), {"f": list(f), "decision": bool(res)}, cert


def cmd_euler(args, g):
    d = _orientation(args, g)
    count = euler_diff(d, args.budget)
    outputs = {
        "orientation": _orientation_dict(d),
        "even": _exact(count.even),
        "odd": _exact(count.odd),
        "diff": _exact(count.diff),
        "decision": count.diff != 0,
    }
    cert = {
        "kind": "orientation",
        "bound": max(d.out_degrees, default=0) + 1,
        "flags": outputs["orientation"]["flags"],
        "euler_even": outputs["even"],
        "euler_odd": outputs["odd"],
    }
    return ("ok" if count.diff else "false"), outputs, cert


def cmd_weighted(args, g):
    d = _orientation(args, g)
    w = _weights(args.weights, d)
    value = weighted_subgraph_sum(d, w, args.budget)
    outputs = {
        "orientation": _orientation_dict(d),
        "weights": "j" if w is None else args.weights,
        "value": _exact(value),
        "decision": value != 0,
    }
    return ("ok" if value else "false"), outputs, None


def cmd_signed_sum(args, g):
    f = _f_vector(args, g)
    value = signed_coloring_sum(g, f, args.budget)
    return ("ok" if value else "false"), {"f": list(f), "value": _exact(value), "decision": value != 0}, None


def cmd_permanent_coeff(args, g):
    f = _f_vector(args, g)
    value = coefficient_via_permanent(g, f, args.budget)
    return (
        ("ok" if value else "false"),
        {"f": list(f), "coefficient": _exact(value), "decision": value != 0},
        None,
    )


def cmd_regular_sign_sum(args, g):
    pre = None
    if args.preimage:
        pre = parse_multigraph(Path(args.preimage).read_text(encoding="utf-8"))
    elif args.preimage_family:
        pre = parse_family(args.preimage_family)
    value = signed_sum_regular(g, args.d, pre, args.budget)
    outputs = {"d": args.d, "value": _exact(value), "decision": value != 0}
    if value:
        outputs["certified_bound"] = args.d
    return ("ok" if value else "false"), outputs, None


def cmd_unique(args, g):
    res = unique_coloring(g, args.k, args.budget)
    outputs: dict = {"k": args.k, "uniqueness": res.status}
    if res.status != "unique":
        return "inapplicable", outputs, None
    outputs["classes"] = [list(c) for c in res.partition.classes]
    concluded = None
    for name, fn in (("min_edge", min_edge_unique_certificate), ("parity", parity_unique_certificate)):
        rep = fn(g, args.k, args.budget)
        details = {
            k: (v.to_text().split("\n")[1:-1] if isinstance(v, MultiGraph) else v)
            for k, v in rep.details.items()
            if not isinstance(v, MultiGraph) or args.materialize
        }
        outputs[name] = {"applicable": rep.applicable, "at": rep.at, **_stringify(details)}
        if rep.applicable:
            concluded = rep.at
    if concluded is None:
        return "inapplicable", outputs, None
    outputs["at"] = concluded
    return "ok", outputs, None


def _stringify(d: dict) -> dict:
    return {k: (_exact(v) if isinstance(v, (int, Fraction)) and not isinstance(v, bool) else v) for k, v in d.items()}


def _load_hypergraph(args) -> tuple[Hypergraph, str]:
    if args.hypergraph:
        return parse_hypergraph(Path(args.hypergraph).read_text(encoding="utf-8")), args.hypergraph
    if args.family:
        h = parse_family(args.family)
        if not isinstance(h, Hypergraph):
            raise InputError(f"family {args.family!r} is not a hypergraph")
        return h, f"family:{args.family}"
    raise InputError("an input hypergraph is required (--hypergraph FILE or --family fano)")


def cmd_hyper(args, h):
    if args.cyclotomic and args.q:
        raise InputError("give either --q or --cyclotomic")
    if args.cyclotomic:
        q, qdesc = args.cyclotomic, f"cyclotomic:{args.cyclotomic}"
    elif args.q == "fano":
        q, qdesc = fano_q(), "bundled:fano"
    elif args.q:
        q, qdesc = parse_qspec(Path(args.q).read_text(encoding="utf-8")), args.q
    else:
        raise InputError("--q FILE|fano or --cyclotomic K is required")
    f = _f_vector(args, h)
    rep = hypergraph_f_AT(h, q, f, args.budget)
    outputs = {
        "polynomial": qdesc,
        "f": list(f),
        "nonzeros": [list(p) for p in rep.points],
        "values": [str(v) for v in rep.values],
        "sum": str(rep.total),
        "decision": rep.decision,
    }
    if rep.decision:
        outputs["certified_bound"] = max(f)
    return ("ok" if rep.decision else "false"), outputs, None


def cmd_tlist(args, _):
    T = _int_list(args.T, "--T")
    rep = t_list_cycle_check(args.length, T, args.budget)
    outputs = {
        "length": rep.length,
        "T": list(rep.forbidden),
        "list_size": rep.list_size,
        "sum": _exact(rep.total),
        "nonzeros": [list(p) for p in rep.nonzeros],
        "nonzeros_are_constant": rep.nonzeros_are_constant,
        "shifted_coefficient": _exact(rep.p_coefficient),
        "t_polynomial_coefficient": _exact(rep.q_coefficient),
        "decision": rep.choosable,
    }
    return ("ok" if rep.choosable else "false"), outputs, None


def cmd_bounds(args, g):
    rep = bounds_report(g, exact=not args.no_at, budget=args.budget)
    comps = [
        {
            "vertices": c.vertices,
            "m": c.m,
            "chromatic": c.chromatic,
            "max_density": _exact(c.density),
            "col": c.col,
            "lower": c.lower,
            "upper": c.upper,
            "at": c.at,
        }
        for c in rep.components
    ]
    return "ok", {"lower": rep.lower, "upper": rep.upper, "at": rep.at, "components": comps}, None


GRAPH_COMMANDS = {
    "at": cmd_at,
    "f-at": cmd_f_at,
    "euler": cmd_euler,
    "weighted": cmd_weighted,
    "signed-sum": cmd_signed_sum,
    "permanent-coeff": cmd_permanent_coeff,
    "regular-sign-sum": cmd_regular_sign_sum,
    "unique": cmd_unique,
    "bounds": cmd_bounds,
}


# -- verification ---------------------------------------------------------------

def verify_report(report: dict, budget: int | None = None) -> tuple[bool, str]:
    """Re-check a report's certificate without repeating its search."""
    cmd = report.get("command")
    out = report.get("outputs", {})
    inp = report.get("input", {})
    if cmd in ("tlist",):
        from .applications import shifted_cycle_product
        from .certifiers import nz_scan  # noqa: F401

        length, size = out["length"], out["list_size"]
        p = shifted_cycle_product(length, size - 1)
        total = 0
        for z in out["nonzeros"]:
            w = math.prod(math.comb(size - 1, x) for x in z)
            total += (-1) ** sum(z) * w * p(z)
        return total == int(out["sum"]), f"recomputed sum over listed non-zeros: {total}"
    if cmd == "hyper":
        h = Hypergraph(inp["n"], tuple(tuple(e) for e in inp["edges"]))
        desc = out["polynomial"]
        if desc.startswith("cyclotomic:"):
            from .applications import hypergraph_product

            q = hypergraph_product(h, int(desc.split(":")[1]))
        elif desc == "bundled:fano":
            q = fano_q()
        else:
            q = parse_qspec(Path(desc).read_text(encoding="utf-8"))
        f = out["f"]
        total = 0
        for z in out["nonzeros"]:
            if not h.is_proper(z):
                return False, f"listed non-zero {z} is not a proper colouring"
            w = math.prod(math.comb(fi - 1, x) for fi, x in zip(f, z))
            total = total + (-1) ** sum(z) * w * q(z)
        return str(total) == out["sum"], f"recomputed sum over listed non-zeros: {total}"

    if "edges" not in inp:
        return False, "report does not contain an input graph"
    g = MultiGraph(inp["n"], tuple(tuple(e) for e in inp["edges"]))
    cert = report.get("certificate")
    if cmd in ("at", "f-at", "euler"):
        if not cert:
            return False, "report carries no certificate"
        c = ATCertificate.from_dict(cert)
        f = out.get("f")
        ok = c.verify(g, f, budget)
        return ok, f"{c.kind} certificate for bound {c.bound} re-checked"
    if cmd in ("signed-sum", "permanent-coeff"):
        f = out["f"]
        coeff = coefficient_via_permanent(g, f, budget) if cmd == "signed-sum" else None
        if cmd == "signed-sum":
            scaled = (-1) ** g.m * coeff * math.prod(math.factorial(x - 1) for x in f)
            return scaled == int(out["value"]), f"(-1)^m * coefficient * prod (f-1)! = {scaled}"
        t = [x - 1 for x in f]
        value = monomial_coefficient(g, t, budget)
        return value == int(out["coefficient"]), f"row-product permanent gives {value}"
    if cmd == "weighted":
        d = Orientation.from_flags(g, [int(c) for c in out["orientation"]["flags"]])
        coeff = monomial_coefficient(g, d.out_degrees, budget)
        expected = (-1) ** (g.m + d.decreasing) * coeff * math.prod(math.factorial(x) for x in d.out_degrees)
        return Fraction(out["value"]) == expected, f"coefficient route gives {expected}"
    return False, f"no cheap certificate check for command {cmd!r}"


# -- entry point ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alontarsi", description=__doc__.splitlines()[0])
    parser.add_argument("--verify", metavar="REPORT", help="re-check the certificate in a JSON report")
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--budget", type=int, default=None, help="enumeration step budget")
    sub = parser.add_subparsers(dest="command")

    def add(name, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("--graph", help="graph file: 'n m' then m lines 'i j'")
            p.add_argument("--family", help="named family, e.g. complete:4 or cycle_power:6,2")
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        p.add_argument("--budget", type=int, default=argparse.SUPPRESS)
        p.add_argument("--timing", action="store_true", help="add wall-clock time (breaks byte-identity)")
        return p

    add("at", "Alon-Tarsi number with a witnessing monomial")
    add("f-at", "decide f-AT").add_argument("--f", help="comma-separated list sizes")
    p = add("euler", "eulerian subdigraph parity counts of an orientation")
    p.add_argument("--flip", help="0/1 per edge; 1 reverses the low-to-high direction")
    p = add("weighted", "weighted arc-subset sum of an orientation")
    p.add_argument("--flip")
    p.add_argument("--weights", help="per-vertex blocks 'u1,u2;u1;...' of rationals (default u_j = j)")
    add("signed-sum", "signed proper-colouring sum").add_argument("--f")
    add("permanent-coeff", "monomial coefficient through the permanent").add_argument("--f")
    p = add("regular-sign-sum", "signed d-colouring sum of a regular line graph")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--preimage", help="graph file whose line graph is the input")
    p.add_argument("--preimage-family")
    p = add("unique", "uniquely colourable certificates")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--materialize", action="store_true", help="include the augmented multigraphs")
    p = add("hyper", "hypergraph f-AT certificate", graph=False)
    p.add_argument("--hypergraph", help="file: 'n m' then m lines 'k v1 ... vk'")
    p.add_argument("--family", help="hypergraph family (fano)")
    p.add_argument("--q", help="QSpec file, or 'fano' for the bundled polynomial")
    p.add_argument("--cyclotomic", type=int, help="use the prime-k root-of-unity polynomial")
    p.add_argument("--f")
    p = add("tlist", "T-list choosability of an even cycle", graph=False)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--T", required=True, help="comma-separated forbidden differences, must contain 0")
    p = add("bounds", "cheap lower/upper bounds per component")
    p.add_argument("--no-at", action="store_true", help="skip the exact AT computation")
    p = add("selfcheck", "run the bundled acceptance corpus", graph=False)
    p.add_argument("--only", action="append", help="criterion number prefix, repeatable")
    return parser


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None:
        budget_source = "flag"
    elif os.environ.get(_budget.BUDGET_ENV):
        budget_source = "env"
    else:
        budget_source = "default"
    budget_value = _budget.resolve(args.budget)
    args.budget = budget_value

    if args.verify:
        try:
            report = json.loads(Path(args.verify).read_text(encoding="utf-8"))
            ok, detail = verify_report(report, budget_value)
        except (OSError, ValueError, KeyError) as exc:
            stdout.write(f"error: {exc}\n")
            return EXIT_INPUT
        except _budget.BudgetExceeded as exc:
            stdout.write(f"budget exceeded: {exc}\n")
            return EXIT_BUDGET
        out = {"verify": args.verify, "verified": ok, "detail": detail}
        stdout.write(render(out, args.json))
        return EXIT_OK if ok else EXIT_FALSE

    if args.command is None:
        parser.print_help(stdout)
        return EXIT_INPUT

    if args.command == "selfcheck":
        from .selfcheck import run_all

        results = run_all(args.only)
        if args.json:
            doc = {
                "command": "selfcheck",
                "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
                "status": "ok" if all(r.passed for r in results) else "false",
            }
            stdout.write(render(doc, True))
        else:
            for r in results:
                stdout.write(r.line() + "\n")
        return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE

    report: dict = {"command": args.command, "budget": budget_value, "budget_source": budget_source}
    start = time.perf_counter()
    try:
        if args.command == "hyper":
            h, src = _load_hypergraph(args)
            report["input"] = _graph_summary(h, src)
            status, outputs, cert = cmd_hyper(args, h)
        elif args.command == "tlist":
            report["input"] = {"length": args.length, "T": args.T}
            status, outputs, cert = cmd_tlist(args, None)
        else:
            g, src = _load_graph(args)
            report["input"] = _graph_summary(g, src)
            status, outputs, cert = GRAPH_COMMANDS[args.command](args, g)
    except (GraphError, PreconditionError, InputError, OSError) as exc:
        report["status"] = "error:input"
        report["error"] = str(exc)
        stdout.write(render(report, args.json))
        return EXIT_INPUT
    except _budget.BudgetExceeded as exc:
        report["status"] = "error:budget"
        report["error"] = str(exc)
        stdout.write(render(report, args.json))
        return EXIT_BUDGET

    report["outputs"] = outputs
    if cert is not None:
        report["certificate"] = cert
    report["status"] = status
    if getattr(args, "timing", False):
        report["seconds"] = round(time.perf_counter() - start, 6)
    stdout.write(render(report, args.json))
    return EXIT_OK if status == "ok" else EXIT_FALSE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
