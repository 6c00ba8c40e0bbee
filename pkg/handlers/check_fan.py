from functools import partial

from data.config import Config
from misc.errors import GraphInputError
from misc.fans import contains_fan
from misc.graph import Graph
from misc.utils import read_text, split_inputs, stream


def check(k: int, g: Graph) -> dict:
    found, witness = contains_fan(g, k)
    if not found:
        return {"contains": False, "center": None, "pairs": [], "k": k}
    return {"contains": True, **witness.as_dict(), "k": k}


async def cmd_check_fan(args, cfg: Config) -> int:
    if args.k < 1:
        raise GraphInputError(f"fan size k must be positive, got {args.k}")
    items = split_inputs(read_text(args.input), args.edge_list)
    return await stream(items, partial(check, args.k), args.edge_list, cfg.workers, cfg.output_format)


def register(subparsers, parents):
    parser = subparsers.add_parser("check-fan", parents=parents, help="decide F_k-freeness of input graphs")
    parser.add_argument("--k", type=int, required=True)
    parser.set_defaults(handler=cmd_check_fan)
