"""Command-line front end: analyze, construct, census, verify, convert.

Reports are JSON on stdout and diagnostics go to stderr.  Exit codes are
0 success, 2 input error, 3 resource cap, 4 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .checks import (
    SUITES,
    applicable,
    check_achievable,
    check_construction,
    random_ball_graphs,
    replay,
    sweep,
)
from .constructions import (
    FAMILIES,
    ConstructionError,
    LabeledGraph,
    achievable_construction,
    cayley,
    detect_xor_cayley,
    gamma_construction,
    gcay,
    grr_z2k,
    local_graph,
    local_graph_of,
    m0_graph,
    m0_labels,
    m_graph,
    parse_int_set,
    skeleton_r,
    translation,
    translation_element,
)
from .double_cover import PreconditionError, aut, aut_pi, ne_refinement, stability_report
from .graph import Graph, GraphError, is_bipartite, is_connected, is_reduced
from .groups import (
    FiniteGroup,
    GroupAutomorphism,
    GroupError,
    SemidirectZ2,
    builtin_group,
    builtin_groups_up_to,
    count_tf_classes,
    involutory_automorphisms_sample,
    load_group_json,
    parity_holds,
    parse_sigma,
    sylow2_invariant_bound_check,
    tf_classes,
    two_part,
)
from .io import Graph6Error, adjlist_export, dot_export, graph6_encode, read_graph
from .oracle import corpus, random_reduced_graphs
from .perm import ResourceError
from .search import default_budget
from .tf_iso import census, census_report, translation_census, verify_identities

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_VERIFY = 0, 2, 3, 4

log = logging.getLogger("twofold")


class InputError(ValueError):
    """Bad command-line input; maps to exit code 2."""


class VerificationFailed(Exception):
    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


# -- input ---------------------------------------------------------------------


def named_graph(spec: str) -> Graph | None:
    """C:n, K:n, P:n, E:n (edgeless) and petersen; None if spec is not a name."""
    if spec == "petersen":
        return Graph.petersen()
    kind, sep, arg = spec.partition(":")
    if not sep or kind not in ("C", "K", "P", "E") or not arg.isdigit():
        return None
    n = int(arg)
    return {"C": Graph.cycle, "K": Graph.complete, "P": Graph.path, "E": Graph.empty}[kind](n)


def load_graph(source: str | None) -> Graph:
    """A built-in name, a file path, a literal graph6 string, or stdin when absent or '-'."""
    if source is None or source == "-":
        text = sys.stdin.read()
    else:
        g = named_graph(source)
        if g is not None:
            return g
        path = Path(source)
        text = path.read_text() if path.is_file() else source
    if not text.strip():
        raise InputError("no graph given")
    return read_graph(text)


def load_group(spec: str, sigma: str | None) -> tuple[FiniteGroup, GroupAutomorphism]:
    """A built-in group name or a JSON file with a Cayley table (and optional sigma)."""
    path = Path(spec)
    if path.is_file():
        h, file_sigma = load_group_json(path.read_text())
        return h, (file_sigma if sigma is None else parse_sigma(h, sigma))
    h = builtin_group(spec)
    return h, parse_sigma(h, sigma)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def emit(command: str, payload: dict, started: float, source: str = "") -> None:
    report = {
        "command": command,
        "input_digest": digest(source),
        "result": payload,
        "timing_s": round(time.perf_counter() - started, 4),
        "version": __version__,
    }
    json.dump(report, sys.stdout, sort_keys=True, default=str)
    sys.stdout.write("\n")


# -- analyze ---------------------------------------------------------------------


def cmd_analyze(args) -> int:
    t = time.perf_counter()
    g = load_graph(args.graph)
    rep = stability_report(g)
    emit("analyze", rep, t, graph6_encode(g))
    return EXIT_OK


# -- construct -------------------------------------------------------------------


def _int_param(args, name: str) -> int:
    try:
        return int(args.param)
    except (TypeError, ValueError) as exc:
        raise InputError(f"{args.family} needs an integer {name}") from exc


def _group_param(args) -> tuple[FiniteGroup, GroupAutomorphism]:
    if not args.param:
        raise InputError(f"{args.family} needs a group (e.g. Z:3, S:3, prod:Z:2,Z:2 or a JSON file)")
    return load_group(args.param, args.sigma)


def build_family(args) -> tuple[LabeledGraph, list[dict]]:
    """The requested graph and, when --verify is set, its invariant-suite failures."""
    fam = args.family
    failures: list[dict] = []
    if fam == "r-skeleton":
        lg = skeleton_r(_int_param(args, "n0"))
        if args.verify:
            part, _ = ne_refinement(lg.graph)
            if len(part.cells) != lg.n:
                failures.append({"check": "ne-discrete", "graph6": graph6_encode(lg.graph)})
    elif fam == "hsigma":
        h, s = _group_param(args)
        x = parse_int_set(args.x) or None
        lg = gamma_construction(h, s, x)
        if args.verify:
            failures = check_construction(h, s, lg)
    elif fam == "gcay":
        h, s = _group_param(args)
        lg = gcay(h, s, parse_int_set(args.set))
        if args.verify:
            tfs = aut_pi(lg.graph) if lg.graph.n and is_reduced(lg.graph) else None
            if tfs is not None:
                for a in h.elements():
                    t = translation(h, 1, a)
                    if t not in tfs.gamma or translation_element(h, tfs.gamma[t]) != s(a):
                        failures.append({"check": "gcay-translation", "graph6": graph6_encode(lg.graph), "permutation": list(t)})
    elif fam == "achieve":
        h, s = _group_param(args)
        c = parse_int_set(args.classes)
        if not c:
            sd = SemidirectZ2(h, s)
            c = sorted(next(cls for cls in tf_classes(h, s) if sd.x in cls))
        x = parse_int_set(args.x) or None
        lg = achievable_construction(h, s, c, x)
        if args.verify:
            failures = check_achievable(h, s, c, lg)
    elif fam == "m":
        k = _int_param(args, "k")
        g = m_graph(k)
        lg = LabeledGraph(g, tuple(str(i) for i in range(1, k + 1)), (("family", "m"), ("k", k)))
        if args.verify and (g.n != k or len(g.edges()) != k + 2):
            failures.append({"check": "m-size", "graph6": graph6_encode(g)})
    elif fam == "m0":
        k = _int_param(args, "k")
        g = m0_graph(k)
        lg = LabeledGraph(g, m0_labels(k), (("family", "m0"), ("k", k)))
        if args.verify:
            if g.n != 2 * k + 2 or aut(g).order() != 1:
                failures.append({"check": "m0-asymmetric", "graph6": graph6_encode(g)})
    elif fam == "grr-z2k":
        k = _int_param(args, "k")
        lg = grr_z2k(k)
        if args.verify:
            if local_graph(k) != m0_graph(k) or aut(local_graph(k)).order() != 1:
                failures.append({"check": "local-graph", "graph6": graph6_encode(local_graph(k))})
    elif fam == "cayley":
        h, _ = _group_param(args)
        lg = cayley(h, parse_int_set(args.set))
    else:
        raise InputError(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")
    return lg, failures


def cmd_construct(args) -> int:
    t = time.perf_counter()
    lg, failures = build_family(args)
    g6 = graph6_encode(lg.graph)
    if args.labels_out:
        Path(args.labels_out).write_text(lg.labels_json())
    if failures:
        raise VerificationFailed({"family": args.family, "failures": failures})
    if args.format == "graph6":
        sys.stdout.write(g6 + "\n")
    elif args.format == "dot":
        sys.stdout.write(dot_export(lg.graph, lg.labels))
    else:
        payload = {"graph6": g6, "n": lg.n, "edges": len(lg.graph.edges()), "labels": list(lg.labels), "info": lg.info()}
        if args.verify:
            payload["verified"] = True
        emit("construct " + args.family, payload, t, f"{args.family} {args.param}")
    return EXIT_OK


# -- census ----------------------------------------------------------------------


def _xor_cayley_census(g: Graph) -> dict | None:
    """Census of a piped Cay(Z2^k, S) certified by an asymmetric local graph.

    The GRR argument needs a connected nonbipartite Cayley graph on Z2^k whose
    local graph on S is asymmetric; then Aut^pi is the translation group and
    the census is read off the group directly.
    """
    found = detect_xor_cayley(g)
    if found is None:
        return None
    k, s = found
    if k < 13 or not is_connected(g) or is_bipartite(g):
        return None
    if aut(local_graph_of(s)).order() != 1:
        return None
    tc = translation_census(k, s)
    d = tc.as_dict()
    d["method"] = "translation census (asymmetric local graph certifies the translation group)"
    return d


def cmd_census(args) -> int:
    t = time.perf_counter()
    g = load_graph(args.graph)
    g6 = graph6_encode(g)
    if g.n >= 1 << 13:
        fast = _xor_cayley_census(g)
        if fast is not None:
            emit("census", fast, t, g6)
            return EXIT_OK if fast["identities"]["ok"] else EXIT_VERIFY
    tfs = aut_pi(g)
    cen = census(g, allow_loops=args.loops, keep_all=args.keep_all, tfs=tfs)
    ident = verify_identities(g, tfs, strict=False)
    rep = census_report(cen, ident)
    emit("census", rep, t, g6)
    return EXIT_OK if ident.ok else EXIT_VERIFY


# -- verify ----------------------------------------------------------------------

GRAPH_SUITES = ("gamma", "parity", "square", "balls", "identities", "oracle-sweep")
VERIFY_SUITES = GRAPH_SUITES + ("group-bounds",)


def _suite_graphs(args) -> list[Graph]:
    suite = args.suite
    if args.target:
        return [load_graph(args.target)]
    if suite == "balls":
        return [Graph.cycle(7), Graph.cycle(9)] + random_ball_graphs(args.count, args.seed)
    graphs = corpus(min(args.n_max, 7))
    if suite == "oracle-sweep" and args.count:
        graphs += random_reduced_graphs(args.count, (8, 9), args.seed)
    return graphs


def _group_bounds(args) -> dict:
    if args.target:
        groups = [load_group(args.target, None)[0]]
    else:
        groups = builtin_groups_up_to(args.order_max)
    rows = []
    failures = []
    for h in groups:
        for s in involutory_automorphisms_sample(h):
            count = count_tf_classes(h, s)
            bound = two_part(h.order)
            syl = sylow2_invariant_bound_check(h, s)
            par = parity_holds(h, s)
            row = {"group": h.name, "sigma": s.name, "count": count, "bound_2k": bound, "sylow": syl.as_dict(), "parity": par}
            rows.append(row)
            if not (count <= bound and syl.holds and par):
                failures.append({"check": "group-bounds", "group": h.name, "sigma": list(s.map)})
    return {"suite": "group-bounds", "checked": len(rows), "results": rows if args.target else None, "failures": failures}


def cmd_verify(args) -> int:
    t = time.perf_counter()
    if args.replay:
        entries = json.loads(Path(args.replay).read_text())
        if isinstance(entries, dict):
            entries = entries.get("failures", [entries])
        failures = []
        for e in entries:
            failures.extend(replay(e))
        payload = {"suite": "replay", "checked": len(entries), "failures": failures}
    elif args.suite == "group-bounds":
        payload = _group_bounds(args)
    elif args.suite in GRAPH_SUITES:
        graphs = [g for g in _suite_graphs(args) if applicable(args.suite, g)]
        if not graphs:
            raise InputError(f"no input meets the preconditions of the {args.suite} suite")
        checked, failures = sweep(SUITES[args.suite], graphs, stop_at_first=not args.all)
        for f in failures:
            f["suite"] = args.suite
        payload = {"suite": args.suite, "checked": checked, "failures": failures}
    else:
        raise InputError(f"unknown suite {args.suite!r}; choose from {', '.join(VERIFY_SUITES)}")
    payload["passed"] = not payload["failures"]
    if payload["failures"] and args.dump:
        Path(args.dump).write_text(json.dumps(payload["failures"], indent=1))
        log.error("counterexample written to %s", args.dump)
    emit("verify " + (args.suite or "replay"), payload, t, args.target or args.replay or "")
    return EXIT_OK if payload["passed"] else EXIT_VERIFY


# -- convert ---------------------------------------------------------------------


def cmd_convert(args) -> int:
    g = load_graph(args.graph)
    if args.to == "graph6":
        sys.stdout.write(graph6_encode(g) + "\n")
    elif args.to == "adjlist":
        sys.stdout.write(adjlist_export(g))
    elif args.to == "dot":
        sys.stdout.write(dot_export(g))
    else:
        json.dump({"n": g.n, "edges": [list(e) for e in g.edges()]}, sys.stdout)
        sys.stdout.write("\n")
    return EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twofold", description="Two-fold automorphisms, double covers and TF-isomorphism.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="accepted for compatibility; the search is sequential")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="stability report of a graph")
    a.add_argument("graph", nargs="?", help="graph6 string, file, built-in name (C:7, petersen) or '-' for stdin")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("construct", help="build a graph family")
    c.add_argument("family", choices=FAMILIES)
    c.add_argument("param", nargs="?", help="integer (r-skeleton, m, m0, grr-z2k) or group name / JSON file")
    c.add_argument("--sigma", help="id, inv, conj:<element> (default id or the JSON file's sigma)")
    c.add_argument("--set", help="comma-separated element indices (gcay, cayley)")
    c.add_argument("--x", help="comma-separated generating set X (hsigma, achieve)")
    c.add_argument("--classes", help="comma-separated H x| Z2 indices of the class union C (achieve)")
    c.add_argument("--verify", action="store_true", help="run the family's invariant suite first")
    c.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    c.add_argument("--labels-out", help="write the label table JSON to this file")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("census", help="all graphs TF-isomorphic to the input, with identity checks")
    s.add_argument("graph", nargs="?")
    s.add_argument("--loops", action="store_true", help="include witnesses with loops (Ant instead of Ant0)")
    s.add_argument("--keep-all", action="store_true", help="materialize every witness, not one per class")
    s.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("suite", nargs="?", choices=VERIFY_SUITES)
    v.add_argument("target", nargs="?", help="a single graph (or group for group-bounds) instead of the sweep")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--count", type=int, default=100, help="random instances (balls, oracle-sweep)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--order-max", type=int, default=48)
    v.add_argument("--all", action="store_true", help="collect every failure instead of stopping at the first")
    v.add_argument("--dump", help="write counterexamples to this file")
    v.add_argument("--replay", help="rerun the checks recorded in a counterexample file")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("convert", help="re-serialize a graph")
    k.add_argument("graph", nargs="?")
    k.add_argument("--to", choices=("graph6", "adjlist", "dot", "json"), default="graph6")
    k.set_defaults(func=cmd_convert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr, format="twofold: %(message)s")
    if args.command == "verify" and not args.suite and not args.replay:
        log.error("verify needs a suite or --replay")
        return EXIT_INPUT
    try:
        default_budget()
        return args.func(args)
    except VerificationFailed as exc:
        json.dump({"command": args.command, "result": exc.report, "version": __version__}, sys.stdout, sort_keys=True)
        sys.stdout.write("\n")
        log.error("verification failed")
        return EXIT_VERIFY
    except ResourceError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE
    except (InputError, Graph6Error, GraphError, GroupError, ConstructionError, PreconditionError, OSError, json.JSONDecodeError, KeyError) as exc:
        log.error("input error: %s", exc)
        return EXIT_INPUT
    except ValueError as exc:
        # includes a malformed budget variable
        log.error("input error: %s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
