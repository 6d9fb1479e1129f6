from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Tuple, Union

from clasificacion.exceptions import DimensionMismatchError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def as_vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class RationalMatrix:
    """Matriz densa sobre ℚ, almacenada por filas."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entradas para una matriz {self.rows}x{self.cols}"
            )

    # ---------- construcción ----------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int = None) -> "RationalMatrix":
        data = [list(r) for r in rows]
        width = len(data[0]) if data else (cols or 0)
        if any(len(r) != width for r in data):
            raise DimensionMismatchError("filas de longitud distinta")
        return cls(len(data), width, tuple(as_rational(v) for r in data for v in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int = None) -> "RationalMatrix":
        if not columns:
            return cls.zeros(rows or 0, 0)
        return cls.from_rows(columns).transpose()

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "RationalMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_mapping(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def scalar(cls, n: int, c: Scalar) -> "RationalMatrix":
        return cls.from_mapping(n, n, {(i, i): c for i in range(n)})

    @classmethod
    def elementary(cls, n: int, i: int, j: int, cols: int = None) -> "RationalMatrix":
        """E_ij."""
        return cls.from_mapping(n, n if cols is None else cols, {(i, j): ONE})

    @classmethod
    def from_mapping(cls, rows: int, cols: int, mapping: Mapping[Tuple[int, int], Scalar]) -> "RationalMatrix":
        data = [ZERO] * (rows * cols)
        for (i, j), value in mapping.items():
            data[i * cols + j] += as_rational(value)
        return cls(rows, cols, tuple(data))

    @classmethod
    def from_flat(cls, rows: int, cols: int, values: Iterable[Scalar]) -> "RationalMatrix":
        return cls(rows, cols, as_vector(values))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["RationalMatrix"]) -> "RationalMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        mapping = {}
        r0 = c0 = 0
        for block in blocks:
            for i, row in enumerate(block.nonzero):
                for j, value in row:
                    mapping[(r0 + i, c0 + j)] = value
            r0 += block.rows
            c0 += block.cols
        return cls.from_mapping(rows, cols, mapping)

    # ---------- acceso ----------
    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @cached_property
    def nonzero(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        """Por cada fila, los pares (columna, valor) no nulos."""
        out = []
        for i in range(self.rows):
            base = i * self.cols
            out.append(tuple(
                (j, self.entries[base + j]) for j in range(self.cols) if self.entries[base + j]
            ))
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # ---------- álgebra ----------
    def _check_same_shape(self, other: "RationalMatrix"):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"formas {self.shape} y {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Scalar) -> "RationalMatrix":
        c = as_rational(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(f"producto {self.shape} @ {other.shape}")
        data = [ZERO] * (self.rows * other.cols)
        right = other.nonzero
        for i, row in enumerate(self.nonzero):
            base = i * other.cols
            for k, a in row:
                for j, b in right[k]:
                    data[base + j] += a * b
        return RationalMatrix(self.rows, other.cols, tuple(data))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatchError(f"vector de longitud {len(vector)} para {self.shape}")
        return tuple(sum((a * vector[j] for j, a in row), ZERO) for row in self.nonzero)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def commutator(self, other: "RationalMatrix") -> "RationalMatrix":
        return self @ other - other @ self

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), ZERO)

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        mapping = {}
        right = other.nonzero
        for i, row in enumerate(self.nonzero):
            for j, a in row:
                for k, brow in enumerate(right):
                    for m, b in brow:
                        mapping[(i * other.rows + k, j * other.cols + m)] = a * b
        return RationalMatrix.from_mapping(self.rows * other.rows, self.cols * other.cols, mapping)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack con distinta cantidad de filas")
        return RationalMatrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)], cols=self.cols + other.cols)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack con distinta cantidad de columnas")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __str__(self):
        return "\n".join(" ".join(str(v) for v in self.row(i)) for i in range(self.rows))
