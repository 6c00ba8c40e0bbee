import asyncio
import logging
import re
import sys
from collections.abc import AsyncIterator, Callable
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from functools import partial
from json import dumps as json_dumps
from sys import exc_info
from time import time
from traceback import format_exception

import pandas as pd

from data.config import vertex_cap
from misc.errors import CapabilityError, ConstructionError, ConvergenceError, EquitabilityError, FanFreeError, \
    Graph6ParseError, GraphInputError
from misc.graph import Graph
from misc.graph_io import HEADER, graph6_decode, parse_edge_list

ERROR_KINDS = (
    (Graph6ParseError, "parse"),
    (EquitabilityError, "equitability"),
    (GraphInputError, "input"),
    (CapabilityError, "capability"),
    (ConvergenceError, "convergence"),
    (ConstructionError, "construction"),
    (FanFreeError, "error"),
)


def tCurrent():
    return int(time())


def error_catch(e):
    error_type, error_instance, tb = exc_info()
    tb_str = format_exception(error_type, error_instance, tb)
    error_message = "".join(tb_str)
    return error_message


def error_kind(e: Exception) -> str:
    for cls, kind in ERROR_KINDS:
        if isinstance(e, cls):
            return kind
    return "internal"


def error_record(line: int, e: Exception) -> dict:
    return {"line": line, "error": error_kind(e), "message": str(e)}


def read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def split_inputs(text: str, edge_list: bool) -> list[tuple[int, str]]:
    """(line number, payload) per graph: one graph6 string per line, or blank-line separated edge lists."""
    if not edge_list:
        items = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if line and line != HEADER:
                items.append((number, line))
        return items
    items, block, start = [], [], None
    for number, raw in enumerate(text.splitlines() + [""], start=1):
        if raw.strip():
            if start is None:
                start = number
            block.append(raw)
        elif block:
            items.append((start, "\n".join(block)))
            block, start = [], None
    return items


def parse_graph(payload: str, edge_list: bool) -> Graph:
    if edge_list:
        return parse_edge_list(payload, cap=vertex_cap)
    return graph6_decode(payload, cap=vertex_cap)


def parse_range(text: str) -> list[int]:
    """``7``, ``1..4`` or ``1,3,5..9`` as a sorted list of integers."""
    values = set()
    for part in text.split(","):
        match = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", part)
        if not match:
            raise GraphInputError(f"bad range {text!r}: expected a, a..b or a comma list of those")
        lo = int(match.group(1))
        hi = int(match.group(2)) if match.group(2) is not None else lo
        if hi < lo:
            raise GraphInputError(f"empty range {part.strip()!r}")
        values.update(range(lo, hi + 1))
    return sorted(values)


def emit(record: dict):
    print(json_dumps(record), flush=True)


def print_table(rows: list[dict], output_format: str):
    frame = pd.json_normalize(rows, sep=".") if rows else pd.DataFrame()
    if output_format == "csv":
        sys.stdout.write(frame.to_csv(index=False, lineterminator="\r\n"))
    else:
        print(frame.to_string(index=False))


def make_executor(workers: int) -> Executor:
    if workers > 1:
        return ProcessPoolExecutor(max_workers=workers)
    return ThreadPoolExecutor(max_workers=1)


def _guarded(task: Callable[[Graph], dict], number: int, payload: str, edge_list: bool) -> dict:
    try:
        g = parse_graph(payload, edge_list)
        return {"line": number, **task(g)}
    except FanFreeError as e:
        return error_record(number, e)
    except Exception as e:
        logging.error(error_catch(e))
        return error_record(number, e)


async def run_pipeline(items: list[tuple[int, str]], task: Callable[[Graph], dict], edge_list: bool,
                       workers: int) -> AsyncIterator[dict]:
    """Run task on every input graph and yield the records in input order.

    The task must be picklable when workers > 1 (a module-level function or a
    partial of one).
    """
    loop = asyncio.get_running_loop()
    with make_executor(workers) as pool:
        pending = [loop.run_in_executor(pool, partial(_guarded, task, number, payload, edge_list))
                   for number, payload in items]
        for future in pending:
            yield await future


async def stream(items: list[tuple[int, str]], task: Callable[[Graph], dict], edge_list: bool, workers: int,
                 output_format: str, failed: Callable[[dict], bool] = lambda record: False,
                 rows: Callable[[dict], list[dict]] = lambda record: [record]) -> int:
    """Write the pipeline's records (JSON-lines, or one table at the end); return the exit code."""
    tabular = output_format in ("table", "csv")
    failures = 0
    collected = []
    async for record in run_pipeline(items, task, edge_list, workers):
        if "error" in record or failed(record):
            failures += 1
        if tabular:
            collected.extend(rows(record) if "error" not in record else [record])
        else:
            emit(record)
    if tabular:
        print_table(collected, output_format)
    if failures:
        logging.info(f"{failures} of {len(items)} inputs failed")
    return 1 if failures else 0
