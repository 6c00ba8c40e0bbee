from functools import partial

from data.config import Config, exact_cut_cap
from misc.graph import Graph, members
from misc.search import max_cut
from misc.utils import read_text, split_inputs, stream


def cut(seed: int, g: Graph) -> dict:
    s, t, size = max_cut(g, seed=seed)
    return {"cut": size, "exact": g.n <= exact_cut_cap, "S": members(s), "T": members(t)}


async def cmd_maxcut(args, cfg: Config) -> int:
    items = split_inputs(read_text(args.input), args.edge_list)
    return await stream(items, partial(cut, cfg.seed), args.edge_list, cfg.workers, cfg.output_format)


def register(subparsers, parents):
    parser = subparsers.add_parser("maxcut", parents=parents, help="maximum cut of input graphs")
    parser.set_defaults(handler=cmd_maxcut)
