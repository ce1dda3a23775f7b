"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 a verification was refuted on the
instance, 64 usage error.  ``--json`` emits exactly one JSON document.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import orientations as ori
from .formats import (
    FormatError,
    format_rational,
    parse_edge_list,
    parse_graph6,
    parse_matrix,
    parse_orientation,
    parse_weighted_edge_list,
    parse_weighted_orientation,
    write_graph6,
    write_orientation,
)
from .graph import (
    Graph,
    GraphError,
    OrientedGraph,
    bipartition,
    blocks,
    from_skew_matrix,
    generalized_skew_adjacency,
    has_even_cycle,
    is_forest,
    skew_adjacency,
)
from .permanent import (
    PermanentError,
    permanent_cycle_cover,
    permanent_naive,
    permanent_ryser,
    permanent_skew_even,
)
from .poly import Poly, char_poly, matching_polynomial
from .sachs import (
    perm_poly_adjacency_sachs,
    perm_poly_skew_sachs,
    perm_poly_weighted_skew_sachs,
    perm_poly_weighted_undirected_sachs,
)
from .spectra import RootFindingError, roots

EXIT_OK, EXIT_INPUT, EXIT_REFUTED, EXIT_USAGE = 0, 2, 3, 64

FORMATS = ("graph6", "edgelist", "orientation", "matrix")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    input: str
    fmt: str | None
    json: bool
    tol: float
    budget: int
    seed: int

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.budget < 1:
            raise UsageError(f"--budget must be at least 1, got {self.budget}")


def _add_common(s: argparse.ArgumentParser) -> argparse.ArgumentParser:
    s.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
    s.add_argument("--format", dest="fmt", choices=FORMATS)
    s.add_argument("--json", action="store_true", help="emit one JSON document")
    s.add_argument("--tol", type=float, default=1e-8)
    s.add_argument("--budget", type=int, default=ori.DEFAULT_BUDGET)
    s.add_argument("--seed", type=int, default=ori.DEFAULT_SEED)
    return s


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skewperm", description="Permanental polynomials of graphs and oriented graphs.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    s = sub.add_parser("permpoly", help="permanental polynomial")
    g = s.add_mutually_exclusive_group()
    for kind in ("adjacency", "skew", "weighted-skew", "weighted-undirected"):
        g.add_argument(f"--{kind}", dest="kind", action="store_const", const=kind)
    _add_common(s)

    _add_common(sub.add_parser("matchpoly", help="matching polynomial"))
    _add_common(sub.add_parser("charpoly", help="characteristic polynomial"))

    s = sub.add_parser("permanent", help="exact permanent")
    g = s.add_mutually_exclusive_group()
    for method in ("naive", "ryser", "skew-even", "cycle-cover"):
        g.add_argument(f"--{method}", dest="method", action="store_const", const=method)
    _add_common(s)

    s = sub.add_parser("spectrum", help="roots of a graph polynomial")
    g = s.add_mutually_exclusive_group()
    for kind in ("adjacency", "skew", "matching", "char"):
        g.add_argument(f"--{kind}", dest="kind", action="store_const", const=kind)
    _add_common(s)

    s = sub.add_parser("classify", help="structural predicates")
    s.add_argument("property", choices=("even-cycle", "bipartite", "forest", "blocks"))
    _add_common(s)

    s = sub.add_parser("verify", help="check a theorem on every orientation")
    s.add_argument("property", choices=("same-poly", "matching-eq", "bipartite-i", "forest"))
    _add_common(s)

    s = sub.add_parser("orient", help="orientation constructions")
    s.add_argument("action", choices=("toward-y", "all", "reverse"))
    s.add_argument("--edge", type=int, help="edge index for 'reverse'")
    _add_common(s)
    p.subcommands = dict(sub.choices)
    return p


def parse_args(argv) -> argparse.Namespace:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in parser.subcommands:
        return parser.parse_args(argv)
    # intermixed parsing lets options sit between positionals (orient reverse --edge 0 FILE)
    args = parser.subcommands[argv[0]].parse_intermixed_args(argv[1:])
    args.subcommand = argv[0]
    return args


# input ---------------------------------------------------------------------


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _graphs(text: str, fmt: str | None) -> list[Graph]:
    fmt = fmt or "graph6"
    if fmt == "graph6":
        gs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
        if not gs:
            raise InputError("no graph6 lines in input")
        return gs
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "orientation":
        return [parse_orientation(text).graph]
    raise InputError(f"format {fmt!r} does not describe a graph")


def _one_graph(text: str, fmt: str | None) -> Graph:
    gs = _graphs(text, fmt)
    if len(gs) != 1:
        raise InputError(f"expected one graph, got {len(gs)}")
    return gs[0]


def _oriented(text: str, fmt: str | None) -> OrientedGraph:
    if (fmt or "orientation") != "orientation":
        raise InputError("an orientation file is required")
    return parse_orientation(text)


def _matrix(text: str, fmt: str | None) -> list[list]:
    fmt = fmt or "matrix"
    if fmt == "matrix":
        return parse_matrix(text)
    if fmt == "orientation":
        return skew_adjacency(parse_orientation(text)).tolist()
    return _one_graph(text, fmt).adjacency_matrix()


# commands ------------------------------------------------------------------


def _poly_doc(p: Poly) -> dict:
    return {"degree": p.degree, "coefficients": p.to_json()}


def _poly_text(p: Poly) -> str:
    return f"{' '.join(p.to_json())}\n{p}"


def _cmd_permpoly(args, text):
    kind = args.kind or "adjacency"
    if kind == "adjacency":
        p = perm_poly_adjacency_sachs(_one_graph(text, args.fmt))
    elif kind == "skew":
        p = perm_poly_skew_sachs(_oriented(text, args.fmt))
    elif kind == "weighted-skew":
        if (args.fmt or "orientation") == "matrix":
            wog = from_skew_matrix(parse_matrix(text))
        elif (args.fmt or "orientation") == "orientation":
            wog = parse_weighted_orientation(text)
        else:
            raise InputError("weighted-skew needs a weighted orientation or a matrix")
        p = perm_poly_weighted_skew_sachs(wog)
    else:
        if (args.fmt or "edgelist") != "edgelist":
            raise InputError("weighted-undirected needs a weighted edge list")
        g, w = parse_weighted_edge_list(text)
        p = perm_poly_weighted_undirected_sachs(g, w)
    return {"kind": kind, **_poly_doc(p)}, _poly_text(p), EXIT_OK


def _cmd_matchpoly(args, text):
    p = matching_polynomial(_one_graph(text, args.fmt))
    return _poly_doc(p), _poly_text(p), EXIT_OK


def _cmd_charpoly(args, text):
    fmt = args.fmt or "graph6"
    p = char_poly(_matrix(text, fmt))
    return _poly_doc(p), _poly_text(p), EXIT_OK


_PERMANENTS = {
    "naive": permanent_naive,
    "ryser": permanent_ryser,
    "skew-even": permanent_skew_even,
    "cycle-cover": permanent_cycle_cover,
}


def _cmd_permanent(args, text):
    method = args.method or "ryser"
    a = _matrix(text, args.fmt)
    value = format_rational(_PERMANENTS[method](a))
    return {"method": method, "n": len(a), "permanent": value}, value, EXIT_OK


def _cmd_spectrum(args, text):
    kind = args.kind or "adjacency"
    if kind == "skew":
        p = perm_poly_skew_sachs(_oriented(text, args.fmt))
    else:
        g = _one_graph(text, args.fmt)
        p = {
            "adjacency": perm_poly_adjacency_sachs,
            "matching": matching_polynomial,
            "char": lambda g: char_poly(g.adjacency_matrix()),
        }[kind](g)
    rs = roots(p, tol=args.tol)
    doc = {"kind": kind, "polynomial": _poly_doc(p), "roots": rs.to_json()}
    lines = [f"{r['re']!r} {r['im']!r}" for r in doc["roots"]]
    return doc, "\n".join(lines), EXIT_OK


def _classify_one(prop: str, g: Graph) -> dict:
    doc = {"graph6": write_graph6(g)}
    if prop == "even-cycle":
        doc["even_cycle"] = has_even_cycle(g)
    elif prop == "forest":
        doc["forest"] = is_forest(g)
    elif prop == "bipartite":
        bip = bipartition(g)
        doc["bipartite"] = bip is not None
        doc["X"] = sorted(bip[0]) if bip else None
        doc["Y"] = sorted(bip[1]) if bip else None
    else:
        doc["blocks"] = [{"vertices": list(vs), "edges": [list(e) for e in es]} for vs, es in blocks(g)]
    return doc


def _classify_text(doc: dict) -> str:
    parts = [doc["graph6"]]
    for key, val in doc.items():
        if key == "graph6":
            continue
        if key == "blocks":
            val = " | ".join(" ".join(f"{u}-{v}" for u, v in b["edges"]) for b in val)
        elif isinstance(val, list):
            val = ",".join(map(str, val))
        parts.append(f"{key}={str(val).lower() if isinstance(val, bool) else val}")
    return " ".join(parts)


def _cmd_classify(args, text):
    docs = [_classify_one(args.property, g) for g in _graphs(text, args.fmt)]
    doc = docs[0] if len(docs) == 1 else docs
    return doc, "\n".join(_classify_text(d) for d in docs), EXIT_OK


_VERIFIERS = {
    "same-poly": ori.verify_all_orientations_same,
    "matching-eq": ori.verify_matching_equality,
    "bipartite-i": ori.verify_bipartite_i_relation,
    "forest": ori.verify_forest_relation,
}


def _cmd_verify(args, text):
    fn = _VERIFIERS[args.property]
    reports, code = [], EXIT_OK
    for g in _graphs(text, args.fmt):
        kwargs = {"budget": args.budget, "seed": args.seed}
        if args.property == "forest":
            kwargs["tol"] = args.tol
        try:
            rep = fn(g, **kwargs)
        except ori.ConsistencyError as exc:
            print(f"skewperm: consistency failure: {exc}", file=args.stderr)
            rep, code = exc.report, 1
        reports.append(rep)
        if rep.verdict == ori.REFUTED and code == EXIT_OK:
            code = EXIT_REFUTED
    docs = [r.to_json() for r in reports]
    lines = []
    for r in reports:
        line = f"{r.graph6} {r.property} {r.verdict} examined={r.examined}"
        if r.witness is not None:
            w = r.witness
            line += f" witness={w.bits_a},{w.bits_b} [{w.poly_a}] vs [{w.poly_b}]"
        if r.seed is not None:
            line += f" seed={r.seed}"
        lines.append(line)
    return docs[0] if len(docs) == 1 else docs, "\n".join(lines), code


def _orientation_doc(og: OrientedGraph) -> dict:
    return {"n": og.graph.n, "bits": og.bits, "arcs": [list(a) for a in og.arcs]}


def _cmd_orient(args, text):
    if args.action == "reverse":
        if args.edge is None:
            raise UsageError("orient reverse requires --edge")
        og = _oriented(text, args.fmt)
        try:
            out = ori.reverse_edge(og, args.edge)
        except IndexError as exc:
            raise InputError(str(exc)) from None
        return _orientation_doc(out), write_orientation(out).rstrip("\n"), EXIT_OK
    g = _one_graph(text, args.fmt)
    if args.action == "toward-y":
        bip = bipartition(g)
        if bip is None:
            raise InputError("graph is not bipartite")
        out = ori.toward_y_orientation(g, bip)
        return _orientation_doc(out), write_orientation(out).rstrip("\n"), EXIT_OK
    if 1 << g.m > args.budget:
        raise InputError(f"2^{g.m} orientations exceed --budget {args.budget}")
    all_ = list(ori.all_orientations(g))
    text_out = "\n".join(f"{og.bits} " + " ".join(f"{u}>{v}" for u, v in og.arcs) for og in all_)
    return [_orientation_doc(og) for og in all_], text_out, EXIT_OK


_COMMANDS = {
    "permpoly": _cmd_permpoly,
    "matchpoly": _cmd_matchpoly,
    "charpoly": _cmd_charpoly,
    "permanent": _cmd_permanent,
    "spectrum": _cmd_spectrum,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "orient": _cmd_orient,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = parse_args(argv)
        args.stderr = stderr
        CliConfig(args.subcommand, args.input, args.fmt, args.json, args.tol, args.budget, args.seed)
        text = _read(args.input, stdin)
        doc, text_out, code = _COMMANDS[args.subcommand](args, text)
    except UsageError as exc:
        print(str(exc).rstrip("\n"), file=stderr)
        return EXIT_USAGE
    except (InputError, FormatError, GraphError, PermanentError, RootFindingError, ValueError) as exc:
        print(f"skewperm: {exc}", file=stderr)
        return EXIT_INPUT
    if args.json:
        stdout.write(json.dumps(doc) + "\n")
    else:
        stdout.write(text_out + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
