from .sentry import SentryConfig
from .harness import HarnessConfig
from .overrides import apply_overrides, parse_override, with_value
from .simulation import (
    InitialState,
    SimConfig,
    Solver,
    grid_from_dict,
    grid_to_dict,
    load_config_dict,
    potential_from_dict,
)

__all__ = [
    "SentryConfig",
    "HarnessConfig",
    "apply_overrides",
    "parse_override",
    "with_value",
    "InitialState",
    "SimConfig",
    "Solver",
    "grid_from_dict",
    "grid_to_dict",
    "load_config_dict",
    "potential_from_dict",
]
