from dataclasses import dataclass
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar
from sentry_sdk import capture_exception
from core import KGFactorError
from config import HarnessConfig, SentryConfig
from utils import ErrorCounter, log

T = TypeVar("T")
R = TypeVar("R")


@dataclass
class ScanWorkerConfig:
    max_workers: int
    sentry: SentryConfig
    error_counter: ErrorCounter

    @classmethod
    def create_from_harness(cls, harness: HarnessConfig,
                            error_counter: Optional[ErrorCounter] = None) -> 'ScanWorkerConfig':
        return cls(harness.n_threads, harness.sentry, error_counter or ErrorCounter())


class ScanWorker:
    """
    Runs independent scan points (or compare legs) on a bounded thread pool.
    Results come back in submission order; the first failure is re-raised.
    """
    def __init__(self, config: ScanWorkerConfig):
        self._config = config
        self._executor = None

    def process(self, fn: Callable[[T], R], items: Sequence[T], label: str = "scan point") -> List[R]:
        with ThreadPoolExecutor(max_workers=self._config.max_workers) as self._executor:
            futures = [self._executor.submit(self._run_guarded, fn, item, label) for item in items]
            log.info(f"Sent {len(futures)} {label}s for processing...")
            return [future.result() for future in futures]

    def _run_guarded(self, fn: Callable[[T], R], item: T, label: str) -> R:
        try:
            return fn(item)
        except KGFactorError:
            raise
        except Exception as e:
            self.__handle_unexpected_error(e, f"Error while processing {label} {item!r}")
            raise

    def __handle_unexpected_error(self, e: Exception, msg: str):
        self._config.error_counter.inc()
        if self._config.sentry.enabled:
            capture_exception(e)
        log.exception(f"Unexpected error: {msg}")

    def shutdown(self):
        if self._executor:
            # queued points are cancelled; process() still waits for the points already running
            self._executor.shutdown(wait=False, cancel_futures=True)
