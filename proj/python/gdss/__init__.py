"""Python bindings for the gdss group decision engine."""

from .errors import GdssError
from ._gdss import (
    ahp_evaluate,
    ahp_priorities,
    canonicalize_pairwise,
    case_study,
    consistency_ratio,
    import_legacy,
    negotiate,
    promethee_flows,
    promethee_pref,
    select_method,
)

__all__ = [
    "GdssError",
    "ahp_evaluate",
    "ahp_priorities",
    "canonicalize_pairwise",
    "case_study",
    "consistency_ratio",
    "import_legacy",
    "negotiate",
    "promethee_flows",
    "promethee_pref",
    "select_method",
]
