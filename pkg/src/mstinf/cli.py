"""``mstinf`` command line: file-driven workflows with JSON output.

Exit codes: 0 success / positive verdict, 1 negative verdict, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import __version__
from .certify import Certificate, CertificateDisagreement, connectivity, gmin_graph, verify, verify_locally_minimal
from .derived_metrics import WeightedTree, rho_space
from .exactify import exactify, kruskal
from .fixtures import fixture, fixture_names
from .jsonio import (dumps, format_number, numeric_mode, parse_number, read_json, space_from_dict,
                     space_to_dict, tree_from_dict, tree_to_dict, write_json)
from .metric_core import MetricAxiomError, MetricFormatError, PreconditionError, check_metric_axioms, prefix
from .tree_core import TreeError, tree_length

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    numeric: str
    space: Optional[str] = None
    tree: Optional[str] = None
    method: Optional[str] = None
    seed: Optional[int] = None
    out: Optional[str] = None


def certificate_to_dict(cert: Certificate) -> dict:
    doc = {
        "verdict": cert.verdict.value,
        "method": cert.method,
        "per_edge": [
            {
                "edge": list(e),
                "exact": r.exact,
                "length": format_number(r.length),
                "cut_distance": format_number(r.cut_distance),
                "witness": list(r.witness),
            }
            for e, r in cert.per_edge.items()
        ],
        "swap": None,
        "violation": list(cert.violation) if cert.violation else None,
    }
    if cert.swap is not None:
        doc["swap"] = {
            "remove": list(cert.swap.remove),
            "insert": list(cert.swap.insert),
            "gain": format_number(cert.swap.gain),
        }
    return doc


def _space(cfg: RunConfig, validate=True):
    if cfg.space is None:
        raise UsageError("--space is required")
    return space_from_dict(read_json(cfg.space), cfg.numeric, validate)


def _tree(cfg: RunConfig):
    if cfg.tree is None:
        raise UsageError("--tree is required")
    return tree_from_dict(read_json(cfg.tree))


def cmd_check_metric(cfg, args):
    space = _space(cfg, validate=False)
    bad = check_metric_axioms(space.dist, space.tol)
    doc = {"valid": not bad, "n": space.n,
           "violations": [{"axiom": v.axiom, "indices": list(v.indices)} for v in bad]}
    return doc, EXIT_OK if not bad else EXIT_NEGATIVE


def cmd_mst(cfg, args):
    space = _space(cfg)
    T = kruskal(space)
    doc = tree_to_dict(T)
    doc["length"] = format_number(tree_length(T, space))
    return doc, EXIT_OK


def cmd_certify(cfg, args):
    space, T = _space(cfg), _tree(cfg)
    cert = verify_locally_minimal(space, T) if cfg.method == "local" else verify(space, T, cfg.method)
    doc = certificate_to_dict(cert)
    doc["length"] = format_number(tree_length(T, space))
    return doc, EXIT_OK if cert.positive else EXIT_NEGATIVE


def cmd_exactify(cfg, args):
    space, T0 = _space(cfg), _tree(cfg)
    T, trace = exactify(space, T0, args.order)
    doc = tree_to_dict(T)
    doc["length"] = format_number(tree_length(T, space))
    doc["initial_length"] = format_number(tree_length(T0, space))
    doc["swaps"] = sum(1 for s in trace.steps if s.action == "swapped")
    steps = [
        {
            "index": s.index,
            "action": s.action,
            "removed": list(s.removed),
            "inserted": list(s.inserted),
            "sizes": list(s.sizes),
            "length_before": format_number(s.length_before),
            "length_after": format_number(s.length_after),
        }
        for s in trace.steps
    ]
    if args.trace:
        write_json(args.trace, {"command": "exactify-trace", "numeric": cfg.numeric, "steps": steps})
    else:
        doc["trace"] = steps
    return doc, EXIT_OK


def cmd_rho(cfg, args):
    tdoc = read_json(cfg.tree) if cfg.tree else None
    if tdoc is None:
        raise UsageError("--tree is required")
    T = tree_from_dict(tdoc)
    if "weights" in tdoc:
        ws = tdoc["weights"]
        if len(ws) != len(tdoc["edges"]):
            raise UsageError("'weights' must align with 'edges'")
        wmap = {}
        for (u, v), x in zip(tdoc["edges"], ws):
            wmap[(int(u), int(v))] = parse_number(x, cfg.numeric)
        wt = WeightedTree(T, wmap)
    elif cfg.space:
        wt = WeightedTree.induced(T, _space(cfg))
    else:
        raise UsageError("rho needs 'weights' in the tree file or --space")
    return space_to_dict(rho_space(wt, args.kind)), EXIT_OK


def cmd_gmin(cfg, args):
    space = _space(cfg)
    g = gmin_graph(space, cfg.method or "auto")
    return {"n": g.n, "edges": [list(e) for e in sorted(g.edges)], "connected": connectivity(g)}, EXIT_OK


def cmd_fixtures(cfg, args):
    if args.action == "list":
        return {"fixtures": [fixture(name).meta.to_dict() for name in fixture_names()]}, EXIT_OK
    if args.name is None or args.n is None:
        raise UsageError("fixtures emit needs --name and --n")
    return _emit(args.name, args.n), EXIT_OK


def _emit(name, n):
    fx = fixture(name)
    doc = space_to_dict(prefix(fx, n))
    doc["fixture"] = fx.meta.to_dict()
    return doc


def cmd_truncate(cfg, args):
    if args.fixture:
        return _emit(args.fixture, args.n), EXIT_OK
    return space_to_dict(_space(cfg).restrict(args.n)), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mstinf", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--numeric", choices=("rational", "float"),
                   help="number mode (default: $MSTINF_NUMERIC or rational)")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, help, space=True, tree=False):
        sp = sub.add_parser(name, help=help)
        if space:
            sp.add_argument("--space", help="JSON space file")
        if tree:
            sp.add_argument("--tree", help="JSON tree file")
        sp.add_argument("--out", help="write the JSON document here instead of stdout")
        sp.set_defaults(fn=fn)
        return sp

    add("check-metric", cmd_check_metric, "validate metric axioms")
    add("mst", cmd_mst, "Kruskal minimum spanning tree")
    sp = add("certify", cmd_certify, "certify a tree as minimal", tree=True)
    sp.add_argument("--method", choices=("exact", "bottleneck", "both", "local"), default="exact")
    sp = add("exactify", cmd_exactify, "replace non-exact edges in one pass", tree=True)
    sp.add_argument("--order", default="asc", help="asc | given | random:SEED")
    sp.add_argument("--trace", help="write the step trace here")
    sp = add("rho", cmd_rho, "path-sum or path-max table of a weighted tree", tree=True)
    sp.add_argument("--kind", choices=("sum", "max"), default="sum")
    sp = add("gmin", cmd_gmin, "graph of partition-attaining pairs")
    sp.add_argument("--method", choices=("auto", "brute", "bottleneck"), default="auto")
    sp = add("fixtures", cmd_fixtures, "list or emit registered spaces", space=False)
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("--name")
    sp.add_argument("--n", type=int)
    sp = add("truncate", cmd_truncate, "first n points of a space file or fixture")
    sp.add_argument("--fixture")
    sp.add_argument("--n", type=int, required=True)
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            numeric=numeric_mode(args.numeric),
            space=getattr(args, "space", None),
            tree=getattr(args, "tree", None),
            method=getattr(args, "method", None),
            seed=None,
            out=args.out,
        )
        doc, code = args.fn(cfg, args)
    except MetricAxiomError as exc:
        print(dumps({"command": args.subcommand, "error": "metric-axioms",
                     "violations": [{"axiom": v.axiom, "indices": list(v.indices)} for v in exc.violations]}),
              end="", file=stdout)
        return EXIT_INPUT
    except (UsageError, MetricFormatError, TreeError, PreconditionError, KeyError, ValueError,
            OSError, json.JSONDecodeError) as exc:
        print(f"mstinf {args.subcommand}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CertificateDisagreement as exc:
        print(f"mstinf {args.subcommand}: internal disagreement: {exc}", file=sys.stderr)
        return 3
    doc = {"command": cfg.subcommand, "numeric": cfg.numeric, **doc}
    if cfg.out:
        write_json(cfg.out, doc)
    else:
        print(dumps(doc), end="", file=stdout)
    return code


def main():
    sys.exit(run())
