import asyncio
import contextlib
from concurrent.futures import (ALL_COMPLETED, FIRST_EXCEPTION,
                                ThreadPoolExecutor)

from click.types import ParamType

from apw.logger import logger


async def gather_or_raise_first(*aws):
    """
    Wait and return a list of results for awaitables if all succeed.
    If any of the tasks fails, cancel all remaining tasks and raise the first
    encountered exception and discard the rest.

    This is used when we only need to handle one exception from possibly
    multiple exceptions.
    """
    if not aws:
        return []

    tasks = [asyncio.ensure_future(aw) for aw in aws]

    # Wait until all tasks succeed or one of them fails
    await asyncio.wait(tasks, return_when=FIRST_EXCEPTION)

    failed_tasks = [
        task for task in tasks
        if task.done() and not task.cancelled()
        and task.exception() is not None
    ]

    if failed_tasks:
        # One of the tasks failed, cancel all tasks and raise the first
        # exception we find
        for task in tasks:
            if not task.done():
                task.cancel()

        # Ensure all tasks are completed including cancellations
        await asyncio.wait(tasks, return_when=ALL_COMPLETED)

        # Log all the exceptions
        excs = [task.exception() for task in failed_tasks]

        logger.warning(
            "'gather_or_raise_first' caught %d exceptions.", len(excs)
        )
        for exc in excs:
            logger.warning("Caught: %s", str(exc))

        raise failed_tasks[0].exception()

    # All succeeded, return the results
    return [task.result() for task in tasks]


def partition(items, parts: int) -> list:
    """
    Split items into at most `parts` contiguous, non-empty chunks of
    nearly equal size
    """
    items = list(items)
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)

    chunks = []
    start = 0
    for index in range(parts):
        end = start + size + (1 if index < extra else 0)
        if end > start:
            chunks.append(items[start:end])
        start = end

    return chunks


def run_partitioned(func, chunks, jobs: int = 1) -> list:
    """
    Apply `func` to every chunk using up to `jobs` worker threads.

    Results are returned in chunk order regardless of which worker finishes
    first.
    """
    chunks = list(chunks)

    if jobs <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]

    async def run():
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return await gather_or_raise_first(*[
                loop.run_in_executor(executor, func, chunk)
                for chunk in chunks
            ])

    logger.debug("Running %d chunks on %d workers", len(chunks), jobs)
    return asyncio.run(run())


@contextlib.contextmanager
def debugger_enabled(enable: bool = True):
    """
    Context manager to enable post-mortem debugger

    :param bool enable: Whether to enable debugger on exception
    """
    try:
        yield
    except Exception:
        if enable:
            import pdb
            import traceback
            traceback.print_exc()
            pdb.post_mortem()
        else:
            raise


class IntRangeType(ParamType):
    """
    Click parameter for half-open integer ranges written as 'START:STOP',
    or a single integer meaning a range with one value. Ranges must not be
    empty or start below `min`.
    """
    name = "range"

    def __init__(self, min: int = 0):
        self.min = min

    def convert(self, value, param, ctx):
        if not isinstance(value, range):
            try:
                if ":" in str(value):
                    start, stop = str(value).split(":", 1)
                    value = range(int(start), int(stop))
                else:
                    value = range(int(value), int(value) + 1)
            except ValueError:
                self.fail(
                    f"invalid range '{value}', expected START:STOP", param, ctx
                )

        if not value:
            self.fail(f"range {value.start}:{value.stop} is empty", param, ctx)
        if value.start < self.min:
            self.fail(
                f"range {value.start}:{value.stop} starts below {self.min}",
                param, ctx
            )

        return value
