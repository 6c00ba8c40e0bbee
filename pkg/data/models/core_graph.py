from sqlalchemy import Column, Integer, String

from data.database import Base


class CoreGraph(Base):
    __tablename__ = "core_graphs"

    k = Column(Integer, primary_key=True)
    graph6 = Column(String)
    edges = Column(Integer)
    time = Column(Integer)
