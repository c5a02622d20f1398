from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import ConfigDict

from .base import FrozenModel
from .chord import Chord


class ConstantKind(str, Enum):
    MED = "med"
    MV = "mv"


class MaximizerKind(str, Enum):
    INTERIOR_CHORD = "interior chord"
    LIMIT = "limit a->0"


class TraceConstantReport(FrozenModel):
    value: float
    kind: ConstantKind
    maximizer: MaximizerKind
    chord: Optional[Chord] = None
    a_star: Optional[float] = None
    limit_value: float
    interior_value: float
    lower_bound_check: float
    a_bracket_width: float
    grid_sizes: Tuple[int, int]

    @property
    def satisfies_lower_bound(self) -> bool:
        return self.value >= self.lower_bound_check - 1e-9

    def describe_maximizer(self) -> str:
        if self.maximizer is MaximizerKind.LIMIT:
            return "limit a->0 (vanishing corner or cap cuts)"
        return (f"chord s={self.chord.s:.12g}, a={self.a_star:.12g}, "
                f"length={self.chord.length:.12g}")


class TraceProfile(FrozenModel):
    """Sampled a-grid with min chord lengths and both ratio curves"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    perimeter: float
    a: np.ndarray
    min_length: np.ndarray
    argmin_s: np.ndarray
    corner_factor: float

    @property
    def med_ratio(self) -> np.ndarray:
        return self.a / self.min_length

    @property
    def mv_ratio(self) -> np.ndarray:
        L = self.perimeter
        return (2.0 / L) * self.a * (L - self.a) / self.min_length
