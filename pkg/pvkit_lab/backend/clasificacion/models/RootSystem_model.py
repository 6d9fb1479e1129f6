from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Sequence, Tuple

from clasificacion.exceptions import InvalidDiagramError, InvalidRootSystemError

Root = Tuple[int, ...]


@dataclass(frozen=True)
class RootSystem:
    """
    Sistema de raíces de un álgebra simple, con las raíces expresadas como
    vectores de coeficientes enteros sobre las raíces simples.

    Convención: cartan[i][j] = α_j(H_i), de modo que cartan[i][i] = 2.
    Los índices de raíces simples en la API pública empiezan en 1.
    """

    type: str
    rank: int
    cartan: Tuple[Tuple[int, ...], ...]
    positive_roots: Tuple[Root, ...]
    highest_root: Root

    @property
    def name(self) -> str:
        return f"{self.type}{self.rank}"

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    def _check_index(self, index: int) -> int:
        if not 1 <= index <= self.rank:
            raise InvalidRootSystemError(f"{self.name} no tiene raíz simple α{index}")
        return index - 1

    def simple_root(self, index: int) -> Root:
        i = self._check_index(index)
        return tuple(1 if k == i else 0 for k in range(self.rank))

    def pairing(self, alpha: Sequence[int], beta_index: int) -> int:
        """α(H_β) para β simple."""
        b = self._check_index(beta_index)
        if len(alpha) != self.rank:
            raise InvalidRootSystemError(f"raíz de longitud {len(alpha)} en {self.name}")
        return sum(a * self.cartan[b][j] for j, a in enumerate(alpha))

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.positive_roots) | frozenset(tuple(-c for c in r) for r in self.positive_roots)

    def is_root(self, alpha: Sequence[int]) -> bool:
        return tuple(alpha) in self.root_set

    def neighbors(self, index: int) -> Tuple[int, ...]:
        i = self._check_index(index)
        return tuple(j + 1 for j in range(self.rank) if j != i and self.cartan[i][j])

    def bond(self, i: int, j: int) -> int:
        """Cantidad de aristas entre α_i y α_j en el diagrama de Dynkin."""
        a, b = self._check_index(i), self._check_index(j)
        if a == b:
            return 0
        return max(abs(self.cartan[a][b]), abs(self.cartan[b][a]))

    @cached_property
    def squared_lengths(self) -> Tuple[Fraction, ...]:
        """|α_i|², normalizado para que la raíz corta mida 1."""
        lengths: Dict[int, Fraction] = {0: Fraction(1)}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.rank):
                if j != i and self.cartan[i][j] and j not in lengths:
                    # |α_i|²·cartan[i][j] = |α_j|²·cartan[j][i]
                    lengths[j] = lengths[i] * Fraction(self.cartan[i][j], self.cartan[j][i])
                    stack.append(j)
        shortest = min(lengths.values())
        return tuple(lengths[i] / shortest for i in range(self.rank))

    def is_long(self, index: int) -> bool:
        i = self._check_index(index)
        return self.squared_lengths[i] == max(self.squared_lengths)

    def coefficient_in_highest_root(self, index: int) -> int:
        return self.highest_root[self._check_index(index)]


@dataclass(frozen=True)
class WeightedDiagram:
    """Diagrama de Dynkin con las raíces simples de Ψ∖θ marcadas (circuladas)."""

    root_system: RootSystem
    circled: Tuple[int, ...]

    def __post_init__(self):
        circled = tuple(sorted(set(self.circled)))
        if not circled:
            raise InvalidDiagramError("un parabólico propio necesita al menos una raíz circulada")
        for index in circled:
            if not 1 <= index <= self.root_system.rank:
                raise InvalidDiagramError(f"α{index} no es una raíz simple de {self.root_system.name}")
        object.__setattr__(self, "circled", circled)

    @property
    def theta(self) -> Tuple[int, ...]:
        return tuple(i for i in range(1, self.root_system.rank + 1) if i not in self.circled)

    def __str__(self):
        marks = ",".join(str(i) for i in self.circled)
        return f"{self.root_system.name}{{{marks}}}"
