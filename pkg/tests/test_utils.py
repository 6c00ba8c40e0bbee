import asyncio

import pytest

from misc.errors import ConvergenceError, Graph6ParseError, GraphInputError
from misc.utils import error_record, parse_range, run_pipeline, split_inputs


@pytest.mark.parametrize("text, values", [
    ("7", [7]),
    ("1..4", [1, 2, 3, 4]),
    ("1,3,5..7", [1, 3, 5, 6, 7]),
    ("3, 1..2", [1, 2, 3]),
])
def test_parse_range(text, values):
    assert parse_range(text) == values


@pytest.mark.parametrize("text", ["", "a", "4..2", "1..", "1;2"])
def test_parse_range_rejects(text):
    with pytest.raises(GraphInputError):
        parse_range(text)


def test_split_graph6_lines_skips_blanks_and_header():
    assert split_inputs(">>graph6<<\nA_\n\n  Bw \n", False) == [(2, "A_"), (4, "Bw")]


def test_split_edge_lists_on_blank_lines():
    text = "3\n0 1\n\n\n2\n0 1\n"
    assert split_inputs(text, True) == [(1, "3\n0 1"), (5, "2\n0 1")]


def test_error_records():
    assert error_record(3, Graph6ParseError("empty graph6 string", 0))["error"] == "parse"
    assert error_record(1, GraphInputError("bad"))["error"] == "input"
    assert error_record(1, ConvergenceError("slow", None))["error"] == "convergence"
    assert error_record(1, ValueError("boom")) == {"line": 1, "error": "internal", "message": "boom"}


def edge_count(g) -> dict:
    return {"edges": g.edge_count}


def test_pipeline_keeps_input_order():
    items = [(1, "A_"), (2, "C~"), (3, "???"), (4, "@")]

    async def collect():
        return [record async for record in run_pipeline(items, edge_count, False, 1)]

    results = asyncio.run(collect())
    assert [r["line"] for r in results] == [1, 2, 3, 4]
    assert results[0]["edges"] == 1 and results[1]["edges"] == 6
    assert results[2]["error"] == "parse"
    assert results[3]["edges"] == 0
