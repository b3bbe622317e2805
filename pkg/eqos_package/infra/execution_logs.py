"""
Execution logging module

Tracks execution metrics (status, start/end time, latency) of the engine's
pipeline stages. Records live in process memory; commands turn them into the
timing section of their report.
"""

import time
import uuid
import logging
import functools
import threading
from dataclasses import dataclass, asdict
from typing import Any, Callable, Dict, List, Optional, TypeVar, cast

logger = logging.getLogger(__name__)

# Type variable for decorator
F = TypeVar('F', bound=Callable[..., Any])


@dataclass(frozen=True)
class ExecutionRecord:
    id: str
    task: str
    status: str          # success, error
    start_time: int      # Unix timestamp (ms)
    end_time: int        # Unix timestamp (ms)
    latency: float       # seconds
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


_records: List[ExecutionRecord] = []
_records_lock = threading.Lock()


def log_execution(
    task: str,
    status: str,
    start_time: int,
    end_time: int,
    latency: float,
    error: Optional[str] = None,
) -> str:
    """
    Record one execution.

    Args:
        task: Name of the task/function
        status: Status of execution (success, error)
        start_time: Start time as Unix timestamp (ms)
        end_time: End time as Unix timestamp (ms)
        latency: Execution time in seconds
        error: Error message if status is 'error'

    Returns:
        str: The ID of the created record
    """
    record = ExecutionRecord(
        id=str(uuid.uuid4()),
        task=task,
        status=status,
        start_time=start_time,
        end_time=end_time,
        latency=latency,
        error=error,
    )
    with _records_lock:
        _records.append(record)
    logger.debug(f"Execution of {task} recorded: {status} in {latency:.3f}s")
    return record.id


def track_execution(task_name: Optional[str] = None) -> Callable[[F], F]:
    """
    Decorator to track execution of a function and record its latency.

    Args:
        task_name: Optional custom name for the task. If not provided, the function name is used.

    Returns:
        Decorator function
    """
    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = int(time.time() * 1000)
            start = time.perf_counter()
            status = "success"
            error_msg = None
            try:
                return func(*args, **kwargs)
            except Exception as e:
                status = "error"
                error_msg = str(e)
                logger.debug(f"Error in tracked function {func.__name__}: {e}")
                raise
            finally:
                latency = time.perf_counter() - start
                log_execution(
                    task=task_name or func.__name__,
                    status=status,
                    start_time=start_time,
                    end_time=int(time.time() * 1000),
                    latency=latency,
                    error=error_msg,
                )

        return cast(F, wrapper)

    return decorator


def get_execution_logs(task: Optional[str] = None, status: Optional[str] = None) -> List[ExecutionRecord]:
    """
    Retrieve execution records in insertion order, optionally filtered.

    Args:
        task: Filter by task name
        status: Filter by status

    Returns:
        List[ExecutionRecord]: Matching records
    """
    with _records_lock:
        records = list(_records)
    if task:
        records = [r for r in records if r.task == task]
    if status:
        records = [r for r in records if r.status == status]
    return records


def get_execution_stats(task: Optional[str] = None) -> Dict[str, Any]:
    """
    Get statistics on execution records.

    Args:
        task: Filter by task name

    Returns:
        Dict[str, Any]: Counts and latency totals
    """
    records = get_execution_logs(task=task)
    latencies = [r.latency for r in records]
    return {
        "total_count": len(records),
        "success_count": sum(1 for r in records if r.status == "success"),
        "error_count": sum(1 for r in records if r.status == "error"),
        "total_latency": sum(latencies),
        "avg_latency": sum(latencies) / len(latencies) if latencies else 0.0,
    }


def clear_execution_logs() -> None:
    with _records_lock:
        _records.clear()
