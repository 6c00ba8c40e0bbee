from sqlalchemy import Column, Float, Integer, String

from data.database import Base


class SearchRecord(Base):
    __tablename__ = "search_reports"

    id = Column(Integer, primary_key=True, autoincrement=True)
    time = Column(Integer)
    n = Column(Integer)
    k = Column(Integer)
    objective = Column(String)
    best_value = Column(Float)
    # newline separated graph6 strings
    witnesses = Column(String)
    graphs_examined = Column(Integer)
    exhaustive = Column(Integer, default=0)
    comparison = Column(String, nullable=True)
    # seeds span the unsigned 64-bit range
    seed = Column(String, nullable=True)
