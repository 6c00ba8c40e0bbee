from data.models.core_graph import CoreGraph
from data.models.search_record import SearchRecord

__all__ = ["CoreGraph", "SearchRecord"]
