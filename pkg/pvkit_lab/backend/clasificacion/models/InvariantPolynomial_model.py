from dataclasses import dataclass, field
from typing import Callable, Sequence

from clasificacion.exceptions import DimensionMismatchError


@dataclass(frozen=True)
class InvariantPolynomial:
    """
    Polinomio evaluable en forma exacta, como función de caja negra.

    El evaluador acepta vectores de racionales o de Jet2 y solo usa suma,
    resta y producto, de modo que la evaluación con jets da las derivadas.
    """

    name: str
    arity: int
    degree: int
    evaluator: Callable[[Sequence], object] = field(compare=False)

    def __call__(self, x: Sequence):
        if len(x) != self.arity:
            raise DimensionMismatchError(
                f"{self.name} espera {self.arity} coordenadas, recibió {len(x)}"
            )
        return self.evaluator(x)
