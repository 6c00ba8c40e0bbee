from functools import partial

from data.config import Config
from misc.graph import Graph, vertex_set
from misc.spectral import charpoly, charpoly_root, coarsest_equitable_partition, quotient_matrix, spectral_radius
from misc.utils import parse_range, read_text, split_inputs, stream


def radius(tol: float, g: Graph) -> dict:
    result = spectral_radius(g, tol=tol)
    return {"n": g.n, "edges": g.edge_count, **result.as_dict()}


def parse_partition(text: str) -> list[int]:
    """``0,1,2|3..5`` as a list of VertexSets."""
    return [vertex_set(parse_range(part)) for part in text.split("|")]


def quotient(partition: str | None, g: Graph) -> dict:
    classes = coarsest_equitable_partition(g) if partition is None else parse_partition(partition)
    q = quotient_matrix(g, classes)
    return {"classes": list(q.classes), "matrix": [list(row) for row in q.b], "charpoly": charpoly(q),
            "root": charpoly_root(q)}


async def cmd_spectral(args, cfg: Config) -> int:
    items = split_inputs(read_text(args.input), args.edge_list)
    return await stream(items, partial(radius, cfg.tolerance), args.edge_list, cfg.workers, cfg.output_format)


async def cmd_quotient(args, cfg: Config) -> int:
    items = split_inputs(read_text(args.input), args.edge_list)
    return await stream(items, partial(quotient, args.partition), args.edge_list, cfg.workers, cfg.output_format)


def register(subparsers, parents):
    parser = subparsers.add_parser("spectral", parents=parents, help="spectral radius and Perron vector")
    parser.set_defaults(handler=cmd_spectral)

    parser = subparsers.add_parser(
        "quotient", parents=parents, help="quotient matrix of an equitable partition",
        description="Quotient matrix, characteristic polynomial and its largest root. The polynomial is "
                    "limited to charpoly_cap classes (6 by default); the coarsest partition of G2 for even "
                    "k >= 6 has k + 2 classes and is reported as a capability error.")
    parser.add_argument("--partition", help="classes as 0,1,2|3..5; coarsest equitable partition by default")
    parser.set_defaults(handler=cmd_quotient)
