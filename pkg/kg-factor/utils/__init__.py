from .logger import log
from .counters import ErrorCounter
from .hash import get_dict_hash
from .env import get_env, get_env_as

__all__ = ["ErrorCounter", "log", "get_dict_hash", "get_env", "get_env_as"]
