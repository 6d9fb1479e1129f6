from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from clasificacion.models.Analysis_model import InvariantCheck
from clasificacion.models.InvariantPolynomial_model import InvariantPolynomial
from clasificacion.models.MatrixRep_model import MatrixRep

DiagramRef = Tuple[str, int, Tuple[int, ...]]
Params = Dict[str, int]


@dataclass(frozen=True)
class ExpectedFlags:
    qd1: bool
    character_dim: int
    regular: Optional[bool] = None
    parabolic: Optional[DiagramRef] = None
    commutative_parabolic: Optional[bool] = None
    # False: los invariantes declarados pueden no generar todos los caracteres
    complete_invariants: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    """
    Un caso de la clasificación: receta de construcción, invariantes declarados,
    punto genérico explícito (si lo hay) y banderas esperadas.
    """

    id: str
    group: str
    title: str
    case: str
    realization: str
    parameters: Tuple[str, ...]
    defaults: Tuple[Params, ...]
    build: Callable[..., MatrixRep] = field(compare=False)
    invariants: Callable[..., List[InvariantPolynomial]] = field(compare=False)
    expected: Callable[..., ExpectedFlags] = field(compare=False)
    admissible: Callable[..., Optional[str]] = field(compare=False)
    x_hint: Optional[Callable[..., Sequence]] = field(default=None, compare=False)
    mf_rank: Optional[str] = None
    requires: Optional[str] = None

    def __str__(self):
        return f"{self.id}: {self.title}"


@dataclass(frozen=True)
class VerificationReport:
    entry_id: str
    parameters: Params
    seed: int
    status: str
    realization: str = ""
    algebra_dim: Optional[int] = None
    space_dim: Optional[int] = None
    isotropy_dim: Optional[int] = None
    character_dim: Optional[int] = None
    qd1: Optional[bool] = None
    regular: Optional[bool] = None
    invariants: Tuple[InvariantCheck, ...] = ()
    parabolic: Optional[str] = None
    diff: Tuple[str, ...] = ()
    message: str = ""
    elapsed: float = 0.0

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    UNSUPPORTED = "unsupported"
    ERROR = "error"

    STATUSES = (PASS, FAIL, INCONCLUSIVE, UNSUPPORTED, ERROR)

    @property
    def passed(self) -> bool:
        return self.status == self.PASS


@dataclass(frozen=True)
class RunSummary:
    """Resultado de `run-all`: reportes en el orden del catálogo y conteos por estado."""

    filter: str
    seed: int
    reports: Tuple[VerificationReport, ...]

    @property
    def counts(self) -> Dict[str, int]:
        out = {status: 0 for status in VerificationReport.STATUSES}
        for report in self.reports:
            out[report.status] += 1
        return out

    @property
    def passed(self) -> bool:
        """Los casos sin soporte no cuentan como fallo: no se verificaron."""
        return all(r.status in (VerificationReport.PASS, VerificationReport.UNSUPPORTED) for r in self.reports)
