from dataclasses import dataclass
from utils import get_env

DEFAULT_SENTRY_ENVIRONMENT = "desk"


@dataclass
class SentryConfig:
    """Sentry reporting for unexpected failures; enabled only once a DSN initialises."""
    enabled: bool
    sentry_dsn: str
    environment: str = DEFAULT_SENTRY_ENVIRONMENT

    @classmethod
    def create_from_env(cls) -> 'SentryConfig':
        return cls(
            False,
            get_env("SENTRY_DSN", default=""),
            get_env("SENTRY_ENVIRONMENT", default=DEFAULT_SENTRY_ENVIRONMENT))
