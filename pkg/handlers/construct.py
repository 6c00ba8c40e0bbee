import logging

from data.config import Config
from misc.constructions import chvatal_hanson_extremal_graph, extremal_g1, extremal_g2, turan_bipartite
from misc.errors import GraphInputError
from misc.graph import Graph
from misc.graph_io import format_edge_list, graph6_encode, to_dot
from misc.utils import emit, print_table

KINDS = ("turan", "g1", "g2", "chvatal-hanson")


def _require(args, *names):
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise GraphInputError(f"construct {args.kind} needs {', '.join(missing)}")


def build(args) -> Graph:
    if args.kind == "turan":
        _require(args, "n")
        return turan_bipartite(args.n)
    if args.kind == "g1":
        _require(args, "n", "k")
        return extremal_g1(args.n, args.k)
    if args.kind == "g2":
        _require(args, "n", "k")
        return extremal_g2(args.n, args.k)
    _require(args, "beta", "delta")
    return chvatal_hanson_extremal_graph(args.beta, args.delta)


async def cmd_construct(args, cfg: Config) -> int:
    g = build(args)
    logging.info(f"construct {args.kind}: {g.n} vertices, {g.edge_count} edges")
    if args.emit == "dot":
        print(to_dot(g, args.kind.replace("-", "_")), end="")
    elif args.emit == "edge-list":
        print(format_edge_list(g), end="")
    elif cfg.output_format == "graph6":
        print(graph6_encode(g))
    else:
        record = {"kind": args.kind, "n": g.n, "edges": g.edge_count, "graph6": graph6_encode(g)}
        if cfg.output_format == "json":
            emit(record)
        else:
            print_table([record], cfg.output_format)
    return 0


def register(subparsers, parents):
    parser = subparsers.add_parser("construct", parents=parents, help="build an extremal construction")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--beta", type=int)
    parser.add_argument("--delta", type=int)
    parser.add_argument("--emit", choices=("dot", "edge-list"), help="write DOT or an edge list instead")
    parser.set_defaults(handler=cmd_construct)
