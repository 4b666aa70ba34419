"""Process pool helper shared by the samplers and searches."""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(worker: Callable[[T], R], tasks: Sequence[T], workers: int) -> List[R]:
    """Map worker over tasks, in a process pool when workers > 1; order is preserved."""
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(worker, tasks))
    return [worker(task) for task in tasks]
