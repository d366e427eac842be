from dataclasses import dataclass
from utils import get_env_as
from .sentry import SentryConfig

DEFAULT_THREADS = 4
MINIMUM_THREADS = 1


@dataclass
class HarnessConfig:
    n_threads: int
    sentry: SentryConfig

    @classmethod
    def create_from_env(cls) -> 'HarnessConfig':
        n_threads = max(MINIMUM_THREADS, get_env_as("KGFACTOR_THREADS", int, DEFAULT_THREADS))
        return cls(n_threads, SentryConfig.create_from_env())
