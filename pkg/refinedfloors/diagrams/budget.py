"""Node budget shared by the enumeration engines"""
import logging
from typing import Optional

from config import PROGRESS_LOG_INTERVAL, get_node_budget
from errors import SearchBudgetExceeded

logger = logging.getLogger(__name__)


class NodeBudget:
    """Counts visited search nodes and aborts once the limit is passed."""

    def __init__(self, limit: Optional[int] = None, engine: str = "enumeration"):
        self.limit = limit if limit is not None else get_node_budget()
        self.engine = engine
        self.visited = 0

    def tick(self, count: int = 1) -> None:
        self.visited += count
        if self.visited > self.limit:
            raise SearchBudgetExceeded(self.visited, self.limit, self.engine)
        if self.visited % PROGRESS_LOG_INTERVAL == 0:
            logger.info(f"[{self.engine}] visited {self.visited} nodes")
