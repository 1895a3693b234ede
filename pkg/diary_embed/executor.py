import logging
import multiprocessing
from typing import Any, Callable, List, Sequence, Tuple

from pydantic import BaseModel, conint

from diary_embed import defaults

logger = logging.getLogger(defaults.NAME)


def partition(items: Sequence, chunk_size: int) -> List[Sequence]:
    """
    Contiguous chunks of at most chunk_size items, in order.
    """
    return [items[start:start + chunk_size] for start in range(0, len(items), chunk_size)]


def _run_chunk(job: Tuple[Callable, Sequence]) -> List[Any]:
    func, chunk = job
    return [func(item) for item in chunk]


class BaseExecutor:
    """
    The skeleton of an executor: it maps a function over the items of a sweep.

    Whatever the partitioning, results come back in the order of the items, so a run is reproducible
    independently of the executor.
    """
    service_name = ''

    class Config(BaseModel):
        chunk_size: conint(ge=1) = 512  # type: ignore

    def __init__(self, config: dict = None, **kwargs):  # pylint: disable=unused-argument
        config = config or {}
        self.config = self.Config(**config)

    def map(self, func: Callable, items: Sequence) -> List[Any]:
        """
        Raises:
            NotImplementedError: Base class, hence not implemented.
        """
        raise NotImplementedError


class LocalExecutor(BaseExecutor):
    """
    Evaluates every item in this process.

    Example config:
    executor:
      type: local
    """
    service_name = 'local'

    def map(self, func: Callable, items: Sequence) -> List[Any]:
        logger.info(f'{self.service_name} Evaluating {len(items)} items')
        return [func(item) for item in items]


class LocalParallelExecutor(BaseExecutor):
    """
    Splits the items into contiguous chunks evaluated by a pool of processes, then concatenates the chunks
    in order. The function has to be picklable.

    Example config:
    executor:
      type: local-parallel
      config:
        processes: 4
    """
    service_name = 'local-parallel'

    class Config(BaseExecutor.Config):
        processes: conint(ge=1) = 2  # type: ignore

    def map(self, func: Callable, items: Sequence) -> List[Any]:
        chunks = partition(list(items), self.config.chunk_size)
        logger.info(f'{self.service_name} Evaluating {len(items)} items in {len(chunks)} chunks '
                    f'on {self.config.processes} processes')
        if not chunks:
            return []
        with multiprocessing.Pool(processes=self.config.processes) as pool:
            results = pool.map(_run_chunk, [(func, chunk) for chunk in chunks])
        return [value for chunk in results for value in chunk]
