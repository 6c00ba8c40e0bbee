import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from data.config import Config, search_restarts, store_reports
from data.db_service import add_search_report, get_search_reports
from misc.search import OBJECTIVES, SearchReport, exhaustive_extremal, hill_climb_extremal, merge_reports
from misc.utils import emit, error_catch, print_table


def _shard_restarts(restarts: int, workers: int) -> list[int]:
    base, extra = divmod(restarts, workers)
    counts = [base + (1 if i < extra else 0) for i in range(workers)]
    return [count for count in counts if count]


async def run_search(args, cfg: Config) -> SearchReport:
    loop = asyncio.get_running_loop()
    if args.exhaustive:
        return await loop.run_in_executor(None, partial(exhaustive_extremal, args.n, args.k, args.objective,
                                                        cfg.workers))
    restarts = search_restarts if args.restarts is None else args.restarts
    if cfg.workers == 1:
        return await loop.run_in_executor(None, partial(hill_climb_extremal, args.n, args.k, args.objective,
                                                        restarts, cfg.seed, args.steps))
    # independent climbs per shard, seeds seed, seed + 1, ...
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        shards = [loop.run_in_executor(pool, partial(hill_climb_extremal, args.n, args.k, args.objective,
                                                     count, (cfg.seed + i) % 2 ** 64, args.steps))
                  for i, count in enumerate(_shard_restarts(restarts, cfg.workers))]
        return merge_reports(list(await asyncio.gather(*shards)))


def write_report(report: SearchReport, output_format: str):
    if output_format == "graph6":
        for witness in report.witnesses:
            print(witness)
    elif output_format == "json":
        emit(report.as_dict())
    else:
        row = report.as_dict()
        row["witnesses"] = " ".join(row["witnesses"])
        print_table([row], output_format)


async def cmd_search(args, cfg: Config) -> int:
    report = await run_search(args, cfg)
    write_report(report, cfg.output_format)
    if store_reports and not args.no_store:
        try:
            await add_search_report(report)
        except Exception as e:
            logging.error('Cant write into database')
            logging.error(error_catch(e))
    return 0


async def cmd_reports(args, cfg: Config) -> int:
    reports = await get_search_reports(args.n, args.k, args.objective)
    if not reports:
        logging.error(f"No stored reports for n={args.n} k={args.k} {args.objective}")
        return 1
    write_report(merge_reports(reports), cfg.output_format)
    return 0


def register(subparsers, parents):
    parser = subparsers.add_parser("search", parents=parents, help="search for extremal F_k-free graphs")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--objective", choices=OBJECTIVES, default="edges")
    parser.add_argument("--exhaustive", action="store_true", help="enumerate every isomorphism class")
    parser.add_argument("--restarts", type=int)
    parser.add_argument("--steps", type=int)
    parser.set_defaults(handler=cmd_search)

    parser = subparsers.add_parser("reports", parents=parents, help="merge the stored search reports")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--objective", choices=OBJECTIVES, default="edges")
    parser.set_defaults(handler=cmd_reports)
