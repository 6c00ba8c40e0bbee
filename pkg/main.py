import argparse
import asyncio
import logging
import sys

from data.config import OUTPUT_FORMATS, run_config
from data.db_service import add_cores, get_cores
from data.loader import setup_db
from handlers import check_fan, construct, maxcut, search, spectral, table, verify
from misc.constructions import mark_persisted, new_cores, preload_cores
from misc.errors import CapabilityError, ConfigError, FanFreeError, GraphInputError
from misc.graph_io import graph6_decode
from misc.utils import error_catch

HANDLERS = (construct, table, check_fan, spectral, search, maxcut, verify)
USAGE_ERRORS = (GraphInputError, CapabilityError, ConfigError)


def global_options() -> argparse.ArgumentParser:
    # accepted before or after the subcommand; absent flags fall back to config.ini
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="spectral tolerance")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    parser.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=argparse.SUPPRESS)
    parser.add_argument("--no-store", action="store_true", default=argparse.SUPPRESS,
                        help="do not read or write the database")
    parser.add_argument("--input", default=argparse.SUPPRESS, help="read graphs from a file instead of stdin")
    parser.add_argument("--edge-list", action="store_true", default=argparse.SUPPRESS,
                        help="inputs are blank-line separated edge lists instead of graph6 lines")
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = global_options()
    parser = argparse.ArgumentParser(prog="fanfree", parents=[common],
                                     description="Constructions, detection and spectral checks for k-fan-free graphs")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for handler in HANDLERS:
        handler.register(subparsers, [common])
    return parser


async def load_cores():
    try:
        await setup_db()
        preload_cores(await get_cores())
    except Exception as e:
        logging.warning(f"Core graph cache not loaded: {e}")


async def save_cores():
    cores = new_cores()
    if not cores:
        return
    try:
        await add_cores(cores, {k: graph6_decode(text).edge_count for k, text in cores.items()})
        mark_persisted(cores)
    except Exception as e:
        logging.error('Cant write into database')
        logging.error(error_catch(e))


async def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.format_given = hasattr(args, "format")
    args.no_store = getattr(args, "no_store", False)
    args.input = getattr(args, "input", None)
    args.edge_list = getattr(args, "edge_list", False)
    try:
        cfg = run_config(tolerance=getattr(args, "tol", None), seed=getattr(args, "seed", None),
                         workers=getattr(args, "workers", None), output_format=getattr(args, "format", None))
        if not args.no_store:
            await load_cores()
        code = await args.handler(args, cfg)
        if not args.no_store:
            await save_cores()
        return code
    except USAGE_ERRORS as e:
        print(f"fanfree {args.command}: {e}", file=sys.stderr)
        return 2
    except FanFreeError as e:
        logging.error(f"{args.command}: {e}")
        return 1
    except OSError as e:
        print(f"fanfree {args.command}: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logging.error(error_catch(e))
        return 1


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
