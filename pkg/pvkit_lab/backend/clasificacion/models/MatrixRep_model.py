from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Tuple

from clasificacion.exceptions import DimensionMismatchError
from clasificacion.models.RationalMatrix_model import ZERO, RationalMatrix, Vector, as_vector


@dataclass(frozen=True)
class Factor:
    """Bloque contiguo [start, stop) de la base que forma un factor del álgebra."""

    label: str
    start: int
    stop: int
    abelian: bool = False

    @property
    def size(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class MatrixRep:
    """Álgebra de Lie dada por la acción de una base de matrices sobre V = ℚ^space_dim."""

    space_dim: int
    basis: Tuple[RationalMatrix, ...]
    factors: Tuple[Factor, ...]
    name: str = ""
    summands: Tuple[int, ...] = ()

    def __post_init__(self):
        for matrix in self.basis:
            if matrix.shape != (self.space_dim, self.space_dim):
                raise DimensionMismatchError(
                    f"matriz {matrix.shape} en una representación de dimensión {self.space_dim}"
                )
        if self.factors and self.factors[-1].stop != len(self.basis):
            raise DimensionMismatchError("los factores no cubren la base")

    @property
    def algebra_dim(self) -> int:
        return len(self.basis)

    @property
    def summand_dims(self) -> Tuple[int, ...]:
        """Dimensiones de los sumandos de V = V_1 ⊕ … ⊕ V_k."""
        return self.summands or (self.space_dim,)

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(f.label for f in self.factors)

    def factor(self, label: str) -> Optional[Factor]:
        return next((f for f in self.factors if f.label == label), None)

    def combination(self, coefficients: Sequence) -> RationalMatrix:
        if len(coefficients) != self.algebra_dim:
            raise DimensionMismatchError("coeficientes de longitud incorrecta")
        data = [ZERO] * (self.space_dim * self.space_dim)
        for c, matrix in zip(coefficients, self.basis):
            if not c:
                continue
            for i, row in enumerate(matrix.nonzero):
                base = i * self.space_dim
                for j, value in row:
                    data[base + j] += c * value
        return RationalMatrix(self.space_dim, self.space_dim, tuple(data))

    @cached_property
    def _coordinate_system(self):
        from clasificacion.services.linalg import CoordinateSystem

        return CoordinateSystem([m.entries for m in self.basis], self.space_dim * self.space_dim)

    def coordinates(self, matrix: RationalMatrix) -> Optional[Vector]:
        """Coordenadas de una matriz en la base, o None si no está en el span."""
        if matrix.shape != (self.space_dim, self.space_dim):
            raise DimensionMismatchError(f"matriz {matrix.shape} fuera de gl({self.space_dim})")
        coeffs = self._coordinate_system.coordinates(matrix.entries)
        if self.combination(coeffs) != matrix:
            return None
        return coeffs


@dataclass(frozen=True)
class Subalgebra:
    parent: MatrixRep
    coefficient_basis: Tuple[Vector, ...]

    def __post_init__(self):
        basis = tuple(as_vector(v) for v in self.coefficient_basis)
        for v in basis:
            if len(v) != self.parent.algebra_dim:
                raise DimensionMismatchError("vector de coeficientes de longitud incorrecta")
        object.__setattr__(self, "coefficient_basis", basis)

    @property
    def dim(self) -> int:
        return len(self.coefficient_basis)

    def matrices(self) -> Tuple[RationalMatrix, ...]:
        return tuple(self.parent.combination(v) for v in self.coefficient_basis)
