"""Census of candidate hyperbolic Mom-n manifolds (n <= 4)."""

from ._core import (
    MomValidationError,
    analyze,
    canonical_description,
    classify_handles,
    enumerate_descriptions,
    sets_for_mom,
    triangulation_text,
)

__all__ = [
    "MomValidationError",
    "analyze",
    "canonical_description",
    "classify_handles",
    "enumerate_descriptions",
    "sets_for_mom",
    "triangulation_text",
]

__version__ = "1.0.0"
