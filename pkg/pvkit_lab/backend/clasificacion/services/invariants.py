"""
Evaluadores exactos de los invariantes relativos.

Todos los evaluadores usan solo suma, resta y producto (sin divisiones), así que
aceptan coordenadas Fraction o Jet2. Convención del pfaffiano:
Pf(A) = Σ sgn(σ) Π a_{σ(2i−1)σ(2i)}, con Pf([[0, 1], [−1, 0]]) = 1.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence

from clasificacion.exceptions import ParameterOutOfRangeError
from clasificacion.models.InvariantPolynomial_model import InvariantPolynomial
from clasificacion.models.RationalMatrix_model import ZERO, RationalMatrix
from clasificacion.services import octonions

logger = logging.getLogger(__name__)


# ---------- núcleos ----------

def _sum(values, start=ZERO):
    total = start
    for v in values:
        total = total + v
    return total


def det_of_rows(rows: Sequence[Sequence]):
    """Desarrollo de Laplace por máscaras de columnas, O(n·2ⁿ) productos."""
    n = len(rows)
    if n == 0:
        return 1
    partial = {0: 1}
    for r in range(n):
        following = {}
        for mask, value in partial.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = rows[r][j]
                if not entry:
                    continue
                # inversiones: columnas ya usadas a la derecha de j
                above = bin(mask >> (j + 1)).count("1")
                term = entry * value
                if above % 2:
                    term = -term
                key = mask | bit
                following[key] = following[key] + term if key in following else term
        partial = following
        if not partial:
            return ZERO
    return partial.get((1 << n) - 1, ZERO)


def pfaffian_of_rows(rows: Sequence[Sequence]):
    """Desarrollo por la primera fila con memoización sobre subconjuntos de índices."""
    n = len(rows)
    if n % 2:
        return ZERO

    @lru_cache(maxsize=None)
    def pf(indices):
        if not indices:
            return 1
        first = indices[0]
        total = ZERO
        for k in range(1, len(indices)):
            entry = rows[first][indices[k]]
            if not entry:
                continue
            rest = indices[1:k] + indices[k + 1:]
            term = entry * pf(rest)
            total = total + term if k % 2 else total - term
        return total

    return pf(tuple(range(n)))


def upper_pairs(n: int, strict: bool) -> List[tuple]:
    if strict:
        return list(combinations(range(n), 2))
    return [(i, j) for i in range(n) for j in range(i, n)]


def symmetric_rows(n: int, x: Sequence):
    rows = [[ZERO] * n for _ in range(n)]
    for value, (i, j) in zip(x, upper_pairs(n, strict=False)):
        rows[i][j] = value
        rows[j][i] = value
    return rows


def antisymmetric_rows(n: int, x: Sequence):
    rows = [[ZERO] * n for _ in range(n)]
    for value, (i, j) in zip(x, upper_pairs(n, strict=True)):
        rows[i][j] = value
        rows[j][i] = -value
    return rows


# ---------- constructores ----------

def determinant(n: int, symmetric: bool = False) -> InvariantPolynomial:
    """det sobre M_n (por filas) o sobre Sym(n) (triángulo superior)."""
    if n < 1:
        raise ParameterOutOfRangeError("det requiere n ≥ 1")
    if symmetric:
        return InvariantPolynomial(
            f"det_sym({n})", n * (n + 1) // 2, n, lambda x: det_of_rows(symmetric_rows(n, x))
        )
    return InvariantPolynomial(
        f"det({n})", n * n, n, lambda x: det_of_rows([x[i * n:(i + 1) * n] for i in range(n)])
    )


def pfaffian(size: int) -> InvariantPolynomial:
    """Pf sobre AS(size) con coordenadas x_ij, i < j."""
    if size < 2 or size % 2:
        raise ParameterOutOfRangeError("el pfaffiano requiere tamaño par ≥ 2")
    return InvariantPolynomial(
        f"pf({size})", size * (size - 1) // 2, size // 2,
        lambda x: pfaffian_of_rows(antisymmetric_rows(size, x)),
    )


def quadratic_form(S: RationalMatrix, name: str = "") -> InvariantPolynomial:
    if S.transpose() != S:
        raise ParameterOutOfRangeError("la forma cuadrática requiere S simétrica")
    terms = [(i, j, v) for i, row in enumerate(S.nonzero) for j, v in row]

    def evaluate(x):
        return _sum(v * x[i] * x[j] for i, j, v in terms)

    return InvariantPolynomial(name or f"q({S.rows})", S.rows, 2, evaluate)


def sum_of_squares(n: int) -> InvariantPolynomial:
    return quadratic_form(RationalMatrix.identity(n), name=f"sum_sq({n})")


def pair_dot(n: int) -> InvariantPolynomial:
    """(u, v) ↦ u·v sobre M_{1,n} ⊕ M_{n,1}."""
    return InvariantPolynomial(f"uv({n})", 2 * n, 2, lambda x: _sum(x[i] * x[n + i] for i in range(n)))


def symplectic_pair(n: int) -> InvariantPolynomial:
    """(u, v) ↦ uᵀJv sobre ℚ²ⁿ ⊕ ℚ²ⁿ."""
    def evaluate(x):
        u, v = x[:2 * n], x[2 * n:]
        return _sum(u[i] * v[n + i] - u[n + i] * v[i] for i in range(n))

    return InvariantPolynomial(f"uJv({n})", 4 * n, 2, evaluate)


def pf_gram(n: int) -> InvariantPolynomial:
    """X ↦ Pf(XᵀJX) = c1ᵀJc2 sobre M_{2n,2} (por filas)."""
    def evaluate(x):
        c1 = [x[2 * r] for r in range(2 * n)]
        c2 = [x[2 * r + 1] for r in range(2 * n)]
        return _sum(c1[i] * c2[n + i] - c1[n + i] * c2[i] for i in range(n))

    return InvariantPolynomial(f"pf_gram({n})", 4 * n, 2, evaluate)


def bordered_pfaffian(n: int) -> InvariantPolynomial:
    """(v, x) ↦ Pf([[x, v], [−vᵀ, 0]]) sobre ℚⁿ ⊕ AS(n), n impar."""
    if n < 1 or n % 2 == 0:
        raise ParameterOutOfRangeError("el pfaffiano orlado requiere n impar")

    def evaluate(x):
        v, upper = x[:n], x[n:]
        rows = antisymmetric_rows(n + 1, list(_bordered_upper(n, v, upper)))
        return pfaffian_of_rows(rows)

    return InvariantPolynomial(f"pf_bordered({n})", n + n * (n - 1) // 2, (n + 1) // 2, evaluate)


def _bordered_upper(n: int, v: Sequence, upper: Sequence):
    """Triángulo superior de la matriz orlada en el orden de upper_pairs(n + 1)."""
    it = iter(upper)
    for i, j in upper_pairs(n + 1, strict=True):
        yield v[i] if j == n else next(it)


def det_augmented(n: int) -> InvariantPolynomial:
    """(v, x) ↦ det[v | x] sobre M_{n,1} ⊕ M_{n,n−1}."""
    if n < 2:
        raise ParameterOutOfRangeError("det_augmented requiere n ≥ 2")
    m = n - 1

    def evaluate(x):
        v, rest = x[:n], x[n:]
        return det_of_rows([[v[i]] + list(rest[i * m:(i + 1) * m]) for i in range(n)])

    return InvariantPolynomial(f"det_aug({n})", n + n * m, n, evaluate)


def freudenthal_cubic() -> InvariantPolynomial:
    """N = ξ1ξ2ξ3 − ξ1 n(c1) − ξ2 n(c2) − ξ3 n(c3) + 2 Re((c1c2)c3)."""
    def evaluate(x):
        xi1, xi2, xi3 = x[0], x[1], x[2]
        c1, c2, c3 = x[3:11], x[11:19], x[19:27]
        trace = octonions.real_part(octonions.octonion_mul(octonions.octonion_mul(c1, c2), c3))
        return (
            xi1 * xi2 * xi3
            - xi1 * octonions.octonion_norm(c1)
            - xi2 * octonions.octonion_norm(c2)
            - xi3 * octonions.octonion_norm(c3)
            + 2 * trace
        )

    return InvariantPolynomial("freudenthal", 27, 3, evaluate)


def embed(f: InvariantPolynomial, offset: int, total: int) -> InvariantPolynomial:
    """f sobre el sumando que empieza en `offset` de un espacio de dimensión `total`."""
    if offset < 0 or offset + f.arity > total:
        raise ParameterOutOfRangeError(f"{f.name} no cabe en posición {offset} de ℚ^{total}")
    return InvariantPolynomial(
        f"{f.name}@{offset}", total, f.degree, lambda x: f.evaluator(x[offset:offset + f.arity])
    )
