import asyncio
import io
import sys

import pytest
from sqlalchemy.ext.asyncio import AsyncSession, create_async_engine
from sqlalchemy.orm import sessionmaker

import data.database
import misc.constructions
from data.database import Base
from data.db_service import add_cores, add_search_report, get_cores, get_search_reports
from main import main
from misc.search import SearchReport, merge_reports


@pytest.fixture
def database(tmp_path, monkeypatch):
    engine = create_async_engine(f"sqlite+aiosqlite:///{tmp_path / 'fanfree.db'}", echo=False)
    monkeypatch.setattr(data.database, "engine", engine)
    monkeypatch.setattr(data.database, "async_session",
                        sessionmaker(engine, class_=AsyncSession, expire_on_commit=False))

    async def create():
        async with engine.begin() as conn:
            await conn.run_sync(Base.metadata.create_all)

    asyncio.run(create())
    yield engine
    asyncio.run(engine.dispose())


def report(value: float, witness: str, seed: int | None) -> SearchReport:
    return SearchReport(n=6, k=1, objective="edges", best_value=value, witnesses=[witness], graphs_examined=10,
                        exhaustive=False, comparison="matches construction", seed=seed)


def test_search_reports_round_trip(database):
    async def scenario():
        await add_search_report(report(9, "EFz_", 2 ** 64 - 1))
        await add_search_report(report(8, "E?Bw", None))
        await add_search_report(SearchReport(n=7, k=1, objective="edges", best_value=12))
        return await get_search_reports(6, 1, "edges")

    stored = asyncio.run(scenario())
    assert [r.best_value for r in stored] == [9, 8]
    assert stored[0].seed == 2 ** 64 - 1 and stored[1].seed is None
    assert stored[0].witnesses == ["EFz_"]
    assert merge_reports(stored).best_value == 9


def test_cores_are_merged_by_k(database):
    async def scenario():
        await add_cores({2: "B?"}, {2: 0})
        await add_cores({2: "Bw", 4: "Fw"}, {2: 1, 4: 3})
        return await get_cores()

    assert asyncio.run(scenario()) == {2: "Bw", 4: "Fw"}


def test_cli_persists_new_core(database, monkeypatch):
    monkeypatch.setattr(misc.constructions, "_persisted", set())
    monkeypatch.setattr(sys, "stdin", io.StringIO(""))
    assert asyncio.run(main(["construct", "g2", "--n", "5", "--k", "2", "--format", "graph6"])) == 0
    cores = asyncio.run(get_cores())
    assert 2 in cores
    assert 2 not in misc.constructions.new_cores()


def test_reports_subcommand_without_rows(database):
    assert asyncio.run(main(["reports", "--n", "40", "--k", "3"])) == 1
