from functools import partial

from data.config import Config
from misc.graph import Graph
from misc.lemmas import LEMMA_IDS, ProofContext, check_constants, check_lemma, run_trace
from misc.utils import read_text, split_inputs, stream


def verify(k: int, lemma: str | None, delta: float | None, epsilon: float | None, g: Graph) -> dict:
    ctx = ProofContext(g, k, delta, epsilon)
    reports = run_trace(ctx) if lemma is None else [check_lemma(g, k, lemma, ctx)]
    return {"k": k, "delta": ctx.delta, "epsilon": ctx.epsilon, "passed": all(r.passed for r in reports),
            "reports": [r.as_dict() for r in reports]}


def table_rows(record: dict) -> list[dict]:
    return [{"line": record["line"], "lemma": r["lemma"], "hypotheses": r["hypotheses"],
             "conclusion": r["conclusion"],
             "quantities": ", ".join(f"{name}={value}" for name, value in r["quantities"].items())}
            for r in record["reports"]]


async def cmd_verify(args, cfg: Config) -> int:
    check_constants(args.k, args.delta, args.epsilon)
    items = split_inputs(read_text(args.input), args.edge_list)
    task = partial(verify, args.k, args.lemma, args.delta, args.epsilon)
    return await stream(items, task, args.edge_list, cfg.workers, cfg.output_format,
                        failed=lambda record: not record["passed"], rows=table_rows)


def register(subparsers, parents):
    parser = subparsers.add_parser("verify", parents=parents, help="evaluate the proof-step inequalities")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--lemma", choices=LEMMA_IDS, help="a single check instead of the full trace")
    parser.add_argument("--delta", type=float)
    parser.add_argument("--epsilon", type=float)
    parser.set_defaults(handler=cmd_verify)
