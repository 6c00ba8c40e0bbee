from typing import Dict, List

from sqlalchemy import select

from data.database import get_session
from data.models import CoreGraph, SearchRecord
from misc.search import SearchReport
from misc.utils import tCurrent


async def get_cores() -> Dict[int, str]:
    async with await get_session() as db:
        stmt = select(CoreGraph.k, CoreGraph.graph6)
        result = await db.execute(stmt)
        return {k: graph6 for k, graph6 in result.all()}


async def add_cores(cores: Dict[int, str], edges: Dict[int, int]) -> None:
    async with await get_session() as db:
        now = tCurrent()
        for k, graph6 in cores.items():
            await db.merge(CoreGraph(k=k, graph6=graph6, edges=edges[k], time=now))
        await db.commit()


async def add_search_report(report: SearchReport) -> None:
    async with await get_session() as db:
        record = SearchRecord(time=tCurrent(), n=report.n, k=report.k,
                              objective=report.objective, best_value=report.best_value,
                              witnesses="\n".join(report.witnesses), graphs_examined=report.graphs_examined,
                              exhaustive=1 if report.exhaustive else 0, comparison=report.comparison,
                              seed=None if report.seed is None else str(report.seed))
        db.add(record)
        await db.commit()


def _to_report(record: SearchRecord) -> SearchReport:
    return SearchReport(n=record.n, k=record.k, objective=record.objective, best_value=record.best_value,
                        witnesses=record.witnesses.split("\n") if record.witnesses else [],
                        graphs_examined=record.graphs_examined, exhaustive=bool(record.exhaustive),
                        comparison=record.comparison, seed=None if record.seed is None else int(record.seed))


async def get_search_reports(n: int, k: int, objective: str) -> List[SearchReport]:
    async with await get_session() as db:
        stmt = (
            select(SearchRecord)
            .where(SearchRecord.n == n, SearchRecord.k == k, SearchRecord.objective == objective)
            .order_by(SearchRecord.id)
        )
        result = await db.execute(stmt)
        return [_to_report(record) for record in result.scalars().all()]
