import os
from typing import Callable, Optional, TypeVar

T = TypeVar("T")


def get_env(key: str, mandatory: bool = False, default: Optional[str] = None) -> Optional[str]:
    value = os.environ.get(key, default)
    if value is None or value.strip() == "":
        value = default
    if value:
        return value.strip()
    if mandatory:
        raise ValueError(f'Mandatory environment variable is missing: {key}')
    return value


def get_env_as(key: str, cast: Callable[[str], T], default: T) -> T:
    """Read an environment variable and convert it, falling back to default when unset."""
    raw = get_env(key)
    if raw is None:
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ValueError(f"Environment variable {key}={raw!r} is not a valid {getattr(cast, '__name__', cast)}") from e
