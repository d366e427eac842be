from typing import Any, Iterable
import copy
import json

import dpath.util
from dpath.exceptions import PathNotFound

from core import ConfigurationError

SEPARATOR = "."


def parse_override(override: str) -> tuple:
    """`key.path=value`; the value is JSON when it parses, otherwise the raw string."""
    path, sep, raw = override.partition("=")
    path = path.strip()
    if not sep or not path:
        raise ConfigurationError(f"Override {override!r} is not of the form key=value")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return path, value


def with_value(d: dict, path: str, value: Any) -> dict:
    """Copy of d with the dotted path set, creating intermediate objects as needed."""
    d = copy.deepcopy(d)
    parent, _, _ = path.rpartition(SEPARATOR)
    if parent:
        try:
            node = dpath.util.get(d, parent, separator=SEPARATOR)
        except (KeyError, PathNotFound):
            node = {}
        if node is not None and not isinstance(node, dict):
            raise ConfigurationError(f"Cannot set {path}: {parent} is not an object")
        if node is None:
            dpath.util.new(d, parent, {}, separator=SEPARATOR)
    dpath.util.new(d, path, value, separator=SEPARATOR)
    return d


def apply_overrides(d: dict, overrides: Iterable[str]) -> dict:
    for override in overrides or ():
        path, value = parse_override(override)
        d = with_value(d, path, value)
    return d
