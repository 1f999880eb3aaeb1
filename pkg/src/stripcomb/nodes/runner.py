"""Runs verification tasks in this process or in a process pool."""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime
from typing import Any, Callable, Dict, List, Tuple, Union

from loguru import logger

from stripcomb.models.report import ConjectureReport, Status, jsonable
from stripcomb.models.state import VerifyState

# (label, function, keyword arguments); the function must be importable for the process pool.
Task = Tuple[str, Callable[..., Any], Dict[str, Any]]


def _execute(fn: Callable[..., Any], kwargs: Dict[str, Any]) -> List[ConjectureReport]:
    result = fn(**kwargs)
    return list(result) if isinstance(result, list) else [result]


def _failed_task(label: str, kwargs: Dict[str, Any], error: BaseException) -> ConjectureReport:
    return ConjectureReport(
        id=label,
        grid=jsonable(kwargs),
        status=Status.COUNTEREXAMPLE,
        witness={"params": jsonable(kwargs), "error": f"{type(error).__name__}: {error}"},
    )


async def run_tasks(node: str, tasks: List[Task], state: VerifyState) -> List[ConjectureReport]:
    """Run ``tasks`` and return their reports ordered by id and grid.

    A task that raises is recorded in ``state["errors"]`` and turned into a
    failing report, so one broken check never hides the others.
    """
    jobs = state.get("jobs", 1) or 1
    results: List[Union[List[ConjectureReport], BaseException]] = []
    if jobs > 1 and len(tasks) > 1:
        logger.debug(f"{node}: running {len(tasks)} tasks on {jobs} workers")
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [loop.run_in_executor(pool, _execute, fn, kwargs) for _, fn, kwargs in tasks]
            results = await asyncio.gather(*futures, return_exceptions=True)
    else:
        for label, fn, kwargs in tasks:
            logger.debug(f"{node}: running {label}")
            try:
                results.append(_execute(fn, kwargs))
            except Exception as e:
                results.append(e)

    reports: List[ConjectureReport] = []
    for (label, _, kwargs), result in zip(tasks, results):
        if isinstance(result, BaseException):
            logger.error(f"{node}: task {label} raised {result}")
            state["errors"].append({"node": node, "task": label, "error": str(result), "timestamp": datetime.now()})
            reports.append(_failed_task(label, kwargs, result))
            continue
        for report in result:
            if report.passed:
                logger.debug(f"{report.id}: {report.status.value} up to {report.checked_upto}")
            else:
                logger.error(f"{report.id}: counterexample {jsonable(report.witness)}")
        reports.extend(result)
    return sorted(reports, key=lambda r: r.sort_key())
