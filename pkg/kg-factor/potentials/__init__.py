from .static import StaticKind, StaticPotential, eval_static, eval_static_at, static_bound
from .dynamic import DynamicKind, DynamicPotential, eval_dynamic, merge_into_xi

__all__ = [
    "StaticKind",
    "StaticPotential",
    "eval_static",
    "eval_static_at",
    "static_bound",
    "DynamicKind",
    "DynamicPotential",
    "eval_dynamic",
    "merge_into_xi",
]
