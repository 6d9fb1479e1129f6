from dataclasses import dataclass
from typing import Dict, Tuple

from clasificacion.models.RootSystem_model import Root, WeightedDiagram


@dataclass(frozen=True)
class LeviComponent:
    """Componente simple de l_θ'. `nodes` sigue la numeración estándar del tipo."""

    type: str
    rank: int
    nodes: Tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    def position(self, index: int) -> int:
        return self.nodes.index(index) + 1


@dataclass(frozen=True)
class ParabolicGrading:
    diagram: WeightedDiagram
    h_theta: Tuple[int, ...]
    pieces: Dict[int, Tuple[Root, ...]]
    levi_components: Tuple[LeviComponent, ...]
    center_dim: int

    def dimension(self, p: int) -> int:
        """dim d_p(θ); la subálgebra de Cartan completa cuenta en p = 0."""
        extra = self.diagram.root_system.rank if p == 0 else 0
        return len(self.pieces.get(p, ())) + extra

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted(self.pieces))

    @property
    def total_dimension(self) -> int:
        return sum(self.dimension(p) for p in self.pieces)

    @property
    def levi_type(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.levi_components)

    def levi_label(self) -> str:
        parts = list(self.levi_type)
        if self.center_dim:
            parts.append("C" if self.center_dim == 1 else f"C^{self.center_dim}")
        return " + ".join(parts)


@dataclass(frozen=True)
class IrreducibleComponent:
    """
    Sumando irreducible V_α de d₁(θ) asociado a la raíz circulada α.

    weights: pares (índice simple β_i de θ adyacente a α, coeficiente c_i).
    """

    circled_root: int
    weights: Tuple[Tuple[int, int], ...]
    dimension: int
    labels: Tuple[str, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return not self.weights
