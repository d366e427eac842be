import hashlib
import json
from typing import Any

import numpy as np


def _json_default(value: Any):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return str(value)


def get_dict_hash(d: dict) -> str:
    """SHA-256 of a config echo; numpy values hash by their plain-Python form."""
    hashed_str = json.dumps(d, default=_json_default, sort_keys=True).encode('utf-8')
    return hashlib.sha256(hashed_str).hexdigest()
