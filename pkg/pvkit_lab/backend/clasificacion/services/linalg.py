"""
Núcleo de álgebra lineal exacta sobre ℚ.

Toda eliminación trabaja sobre filas enteras primitivas (libre de fracciones):
cada combinación r ← a·r − b·p se divide luego por el contenido de la fila, lo
que acota el crecimiento de los coeficientes. El determinante usa Bareiss.
"""
import logging
import math
from bisect import insort
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from clasificacion.exceptions import DimensionMismatchError
from clasificacion.models.Jet2_model import Jet2
from clasificacion.models.RationalMatrix_model import ONE, ZERO, RationalMatrix, Vector, as_rational

logger = logging.getLogger(__name__)


# ---------- filas enteras ----------

def _primitive(row: List[int]) -> List[int]:
    g = math.gcd(*row) if row else 0
    if g > 1:
        row = [x // g for x in row]
    for x in row:
        if x:
            if x < 0:
                row = [-y for y in row]
            break
    return row


def integer_row(values: Sequence) -> List[int]:
    """Múltiplo entero primitivo de un vector racional (misma recta)."""
    values = [as_rational(v) for v in values]
    den = math.lcm(*(v.denominator for v in values)) if values else 1
    return _primitive([v.numerator * (den // v.denominator) for v in values])


def _eliminate(row: List[int], pivot: List[int], col: int) -> List[int]:
    g = math.gcd(pivot[col], row[col])
    a, b = pivot[col] // g, row[col] // g
    return _primitive([a * x - b * y for x, y in zip(row, pivot)])


class IncrementalEchelon:
    """
    Base escalonada de un subespacio de ℚ^ncols que crece fila por fila.

    `limit` restringe la búsqueda de pivotes a las primeras columnas; las
    restantes se arrastran (sirve para llevar una transformación aumentada).
    """

    def __init__(self, ncols: int, limit: Optional[int] = None):
        self.ncols = ncols
        self.limit = ncols if limit is None else limit
        self.pivots = {}
        self._order = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: List[int]) -> List[int]:
        for col in self._order:
            if row[col]:
                row = _eliminate(row, self.pivots[col], col)
        return row

    def add(self, values: Sequence) -> bool:
        """Agrega una fila; devuelve True si era independiente de las anteriores."""
        if len(values) != self.ncols:
            raise DimensionMismatchError(f"fila de longitud {len(values)}, se esperaban {self.ncols}")
        row = self.reduce(integer_row(values))
        lead = next((j for j in range(self.limit) if row[j]), None)
        if lead is None:
            return False
        self.pivots[lead] = row
        insort(self._order, lead)
        return True

    def extend(self, rows: Iterable[Sequence]) -> "IncrementalEchelon":
        for row in rows:
            self.add(row)
        return self

    def contains(self, values: Sequence) -> bool:
        row = self.reduce(integer_row(values))
        return not any(row[:self.limit])

    def reduced(self) -> List[Tuple[int, List[int]]]:
        """Forma escalonada reducida (Gauss-Jordan) como pares (columna pivote, fila entera)."""
        rows = {c: list(r) for c, r in self.pivots.items()}
        for col in sorted(rows, reverse=True):
            pivot = rows[col]
            for other, row in rows.items():
                if other != col and row[col]:
                    rows[other] = _eliminate(row, pivot, col)
        return sorted(rows.items())

    def basis(self) -> List[Vector]:
        """Base del espacio fila en forma escalonada reducida, con pivotes iguales a 1."""
        out = []
        for col, row in self.reduced():
            lead = row[col]
            out.append(tuple(Fraction(x, lead) for x in row))
        return out


# ---------- operaciones públicas ----------

def rank(m: RationalMatrix, method: str = "fraction_free") -> int:
    if method == "naive":
        return naive_rank(m)
    return IncrementalEchelon(m.cols).extend(m.row(i) for i in range(m.rows)).rank


def rank_of_vectors(vectors: Iterable[Sequence], ncols: int) -> int:
    return IncrementalEchelon(ncols).extend(vectors).rank


def row_space_basis(vectors: Iterable[Sequence], ncols: int) -> List[Vector]:
    return IncrementalEchelon(ncols).extend(vectors).basis()


def naive_rank(m: RationalMatrix) -> int:
    """Eliminación gaussiana directa con fracciones; referencia para las pruebas."""
    rows = m.to_rows()
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] / rows[r][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def solve_homogeneous(rows: Iterable[Sequence], ncols: int) -> List[Vector]:
    """Base de {v : A·v = 0} para las filas dadas, normalizada en forma escalonada reducida."""
    echelon = IncrementalEchelon(ncols).extend(rows)
    reduced = echelon.reduced()
    pivot_cols = {c for c, _ in reduced}
    vectors = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for col, row in reduced:
            if row[free]:
                v[col] = Fraction(-row[free], row[col])
        vectors.append(v)
    return row_space_basis(vectors, ncols)


def nullspace(m: RationalMatrix) -> List[Vector]:
    return solve_homogeneous((m.row(i) for i in range(m.rows)), m.cols)


def solve(m: RationalMatrix, b: Sequence) -> Optional[Vector]:
    """Una solución de m·x = b (variables libres en 0), o None si el sistema es incompatible."""
    if len(b) != m.rows:
        raise DimensionMismatchError(f"lado derecho de longitud {len(b)} para {m.shape}")
    echelon = IncrementalEchelon(m.cols + 1)
    for i in range(m.rows):
        echelon.add(m.row(i) + (as_rational(b[i]),))
    x = [ZERO] * m.cols
    for col, row in echelon.reduced():
        if col == m.cols:
            return None
        x[col] = Fraction(row[m.cols], row[col])
    return tuple(x)


def determinant(m: RationalMatrix) -> Fraction:
    """Determinante por eliminación de Bareiss sobre filas enteras escaladas."""
    if not m.is_square():
        raise DimensionMismatchError(f"determinante de una matriz {m.shape}")
    n = m.rows
    if n == 0:
        return ONE
    rows, scale = [], 1
    for i in range(n):
        values = m.row(i)
        den = math.lcm(*(v.denominator for v in values))
        rows.append([v.numerator * (den // v.denominator) for v in values])
        scale *= den
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return ZERO
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            rows[i] = rows[i][:k + 1] + [
                (rows[i][j] * pivot - rik * rows[k][j]) // prev for j in range(k + 1, n)
            ]
        prev = pivot
    return Fraction(sign * rows[n - 1][n - 1], scale)


class CoordinateSystem:
    """Coordenadas respecto de una familia linealmente independiente de vectores."""

    def __init__(self, vectors: Sequence[Sequence], ncols: int):
        self.dim = len(vectors)
        self.ncols = ncols
        echelon = IncrementalEchelon(ncols + self.dim, limit=ncols)
        for k, v in enumerate(vectors):
            unit = [ZERO] * self.dim
            unit[k] = ONE
            if not echelon.add(list(v) + unit):
                raise DimensionMismatchError("la familia no es linealmente independiente")
        self._rows = echelon.reduced()

    def coordinates(self, vector: Sequence) -> Vector:
        """Coeficientes c con Σ c_k v_k = vector, suponiendo que el vector está en el span."""
        coeffs = [ZERO] * self.dim
        for col, row in self._rows:
            value = as_rational(vector[col])
            if not value:
                continue
            factor = value / row[col]
            for k in range(self.dim):
                t = row[self.ncols + k]
                if t:
                    coeffs[k] += factor * t
        return tuple(coeffs)


# ---------- jets ----------

def _as_jet(value) -> Jet2:
    return value if isinstance(value, Jet2) else Jet2(value)


def directional_jet(f: Callable[[Sequence], object], x: Sequence, u: Sequence) -> Jet2:
    """f(x + t·u) hasta orden 2 en t: (f(x), D_u f(x), D_u² f(x))."""
    if len(x) != len(u):
        raise DimensionMismatchError(f"punto de longitud {len(x)} y dirección de longitud {len(u)}")
    return _as_jet(f([Jet2.variable(a, b) for a, b in zip(x, u)]))


def jet_eval2(f: Callable[[Sequence], object], x: Sequence, u: Sequence, v: Sequence):
    """(f(x), D_u f, D_v f, D_u D_v f); la derivada mixta sale por polarización."""
    if not (len(x) == len(u) == len(v)):
        raise DimensionMismatchError("x, u y v deben tener la misma longitud")
    ju = directional_jet(f, x, u)
    jv = directional_jet(f, x, v)
    juv = directional_jet(f, x, [a + b for a, b in zip(u, v)])
    mixed = (juv.d2 - ju.d2 - jv.d2) / 2
    return ju.value, ju.d1, jv.d1, mixed
