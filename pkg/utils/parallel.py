"""Order-preserving parallel map over independent tasks."""

from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, List, Optional, Sequence, TypeVar

from tqdm import tqdm

from utils.logger import get_logger

logger = get_logger(__name__)

T = TypeVar('T')
R = TypeVar('R')


def parallel_map(
    fn: Callable[[T], R],
    tasks: Sequence[T],
    jobs: int = 1,
    desc: Optional[str] = None,
    progress: bool = False,
) -> List[R]:
    """Apply ``fn`` to every task and return results in task order.

    With ``jobs > 1`` tasks run in a process pool, so ``fn`` and the tasks
    must be picklable (module-level functions, dataclasses). Aggregation is
    independent of completion order.

    Args:
        fn: Function applied to each task
        tasks: Task payloads
        jobs: Number of worker processes (1 runs in-process)
        desc: Progress bar label
        progress: Whether to show a tqdm progress bar

    Returns:
        List of results aligned with ``tasks``
    """
    if jobs <= 1 or len(tasks) <= 1:
        iterator = tqdm(tasks, desc=desc, disable=not progress, leave=False)
        return [fn(task) for task in iterator]

    results: List[Optional[R]] = [None] * len(tasks)
    logger.debug("Starting worker pool", jobs=jobs, tasks=len(tasks))

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        futures = {executor.submit(fn, task): index for index, task in enumerate(tasks)}
        with tqdm(total=len(tasks), desc=desc, disable=not progress, leave=False) as bar:
            for future in as_completed(futures):
                results[futures[future]] = future.result()
                bar.update(1)

    return results  # type: ignore[return-value]
