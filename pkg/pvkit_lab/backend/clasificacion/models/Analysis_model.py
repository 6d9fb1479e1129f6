from dataclasses import dataclass
from typing import Optional, Tuple

from clasificacion.models.RationalMatrix_model import Vector


@dataclass(frozen=True)
class GenericPoint:
    coordinates: Vector
    certified: bool
    attempts: int = 1
    source: str = "random"


@dataclass(frozen=True)
class InvariantCheck:
    """Resultado de verificar X·f = λ(X)·f para un invariante declarado."""

    name: str
    degree: int
    verified: bool
    character: Vector
    points_used: int
    vanishes_on_derived: bool
    vanishes_on_isotropy: bool
    note: str = ""


@dataclass(frozen=True)
class AnalysisReport:
    prehomogeneous: bool
    algebra_dim: int
    space_dim: int
    isotropy_dim: int
    character_dim: int
    invariant_checks: Tuple[InvariantCheck, ...]
    regular: Optional[bool]
    point: Optional[GenericPoint]
    declared_character_rank: int = 0
    fallback_used: bool = False
    notes: Tuple[str, ...] = ()

    @property
    def qd1(self) -> bool:
        return self.character_dim == 1
