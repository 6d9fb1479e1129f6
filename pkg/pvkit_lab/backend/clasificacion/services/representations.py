"""
Realizaciones matriciales exactas de las álgebras y representaciones de la
clasificación, combinadores (dual, tensor, S², Λ², toros, sumas con factor
compartido) y utilidades de álgebra de Lie (derivada, centro, formas invariantes,
operadores de entrelazamiento).

Convenciones:
  - so(n) antisimétrica respecto de Σ x_i², base A_ij = E_ij − E_ji (i < j).
  - sp(n) respecto de J = [[0, I_n], [−I_n, 0]], matrices [[A, B], [C, −Aᵀ]].
  - Las bases clásicas se ordenan por la posición de su primera entrada no nula.
  - Sym(n) y AS(n) usan coordenadas del triángulo superior (x_ij = s_ij, i ≤ j).
"""
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from clasificacion.exceptions import (
    DimensionMismatchError,
    LabelMismatchError,
    ParameterOutOfRangeError,
    RepresentationConstructionError,
    UnsupportedRepresentationError,
)
from clasificacion.models.MatrixRep_model import Factor, MatrixRep, Subalgebra
from clasificacion.models.RationalMatrix_model import RationalMatrix
from clasificacion.services import octonions
from clasificacion.services.linalg import IncrementalEchelon, solve_homogeneous

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


# ---------- ayudas ----------

def _leading(matrix: RationalMatrix) -> int:
    return next(k for k, v in enumerate(matrix.entries) if v)


def _single(space_dim: int, matrices: Sequence[RationalMatrix], label: str,
            abelian: bool = False, sort: bool = True) -> MatrixRep:
    basis = sorted(matrices, key=_leading) if sort else list(matrices)
    return MatrixRep(
        space_dim=space_dim,
        basis=tuple(basis),
        factors=(Factor(label, 0, len(basis), abelian),),
        name=label,
        summands=(space_dim,),
    )


def _unique_label(label: str, used: set) -> str:
    if label not in used:
        return label
    k = 2
    while f"{label}[{k}]" in used:
        k += 1
    return f"{label}[{k}]"


def _check_n(name: str, n: int, minimum: int) -> None:
    if not isinstance(n, int) or n < minimum:
        raise ParameterOutOfRangeError(f"{name}({n}): se requiere n ≥ {minimum}")


# ---------- álgebras clásicas ----------

def gl(n: int, label: Optional[str] = None) -> MatrixRep:
    _check_n("gl", n, 1)
    matrices = [RationalMatrix.elementary(n, i, j) for i in range(n) for j in range(n)]
    return _single(n, matrices, label or f"gl({n})")


def sl(n: int, label: Optional[str] = None) -> MatrixRep:
    _check_n("sl", n, 1)
    matrices = [RationalMatrix.elementary(n, i, j) for i in range(n) for j in range(n) if i != j]
    matrices += [
        RationalMatrix.from_mapping(n, n, {(i, i): 1, (i + 1, i + 1): -1}) for i in range(n - 1)
    ]
    return _single(n, matrices, label or f"sl({n})")


def so(n: int, label: Optional[str] = None) -> MatrixRep:
    _check_n("so", n, 1)
    matrices = [
        RationalMatrix.from_mapping(n, n, {(i, j): 1, (j, i): -1}) for i, j in combinations(range(n), 2)
    ]
    return _single(n, matrices, label or f"so({n})")


def sp(n: int, label: Optional[str] = None) -> MatrixRep:
    _check_n("sp", n, 2)
    size = 2 * n
    matrices = []
    for i in range(n):
        for j in range(n):
            matrices.append(RationalMatrix.from_mapping(size, size, {(i, j): 1, (n + j, n + i): -1}))
    for i in range(n):
        for j in range(i, n):
            matrices.append(RationalMatrix.from_mapping(size, size, {(i, n + j): 1, (j, n + i): 1}))
            matrices.append(RationalMatrix.from_mapping(size, size, {(n + i, j): 1, (n + j, i): 1}))
    return _single(size, matrices, label or f"sp({n})")


def symplectic_form(n: int) -> RationalMatrix:
    """J = [[0, I_n], [−I_n, 0]]."""
    mapping = {}
    for i in range(n):
        mapping[(i, n + i)] = 1
        mapping[(n + i, i)] = -1
    return RationalMatrix.from_mapping(2 * n, 2 * n, mapping)


# ---------- combinadores ----------

def dual(r: MatrixRep) -> MatrixRep:
    return MatrixRep(
        space_dim=r.space_dim,
        basis=tuple(-X.transpose() for X in r.basis),
        factors=r.factors,
        name=f"({r.name})*",
        summands=r.summand_dims,
    )


def tensor(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """X⊗I + I⊗Y sobre V1⊗V2, con índice i·dim2 + j (M_{dim1,dim2} por filas)."""
    clash = set(r1.labels) & set(r2.labels)
    if clash:
        raise LabelMismatchError(f"etiquetas repetidas en el producto tensorial: {sorted(clash)}")
    id1 = RationalMatrix.identity(r1.space_dim)
    id2 = RationalMatrix.identity(r2.space_dim)
    basis = [X.kron(id2) for X in r1.basis] + [id1.kron(Y) for Y in r2.basis]
    shift = r1.algebra_dim
    factors = r1.factors + tuple(
        Factor(f.label, f.start + shift, f.stop + shift, f.abelian) for f in r2.factors
    )
    return MatrixRep(
        space_dim=r1.space_dim * r2.space_dim,
        basis=tuple(basis),
        factors=factors,
        name=f"{r1.name} ⊗ {r2.name}",
        summands=(r1.space_dim * r2.space_dim,),
    )


def _square_action(r: MatrixRep, symmetric: bool) -> MatrixRep:
    n = r.space_dim
    if symmetric:
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    sign = 1 if symmetric else -1
    elements = []
    for a, b in pairs:
        mapping = {(a, b): 1}
        if a != b:
            mapping[(b, a)] = sign
        elements.append(RationalMatrix.from_mapping(n, n, mapping))
    basis = []
    for X in r.basis:
        Xt = X.transpose()
        mapping = {}
        for k, S in enumerate(elements):
            image = X @ S + S @ Xt
            for i, row in enumerate(image.nonzero):
                for j, value in row:
                    if (i, j) in index:
                        mapping[(index[(i, j)], k)] = value
        basis.append(RationalMatrix.from_mapping(len(pairs), len(pairs), mapping))
    kind = "S2" if symmetric else "L2"
    return MatrixRep(
        space_dim=len(pairs),
        basis=tuple(basis),
        factors=r.factors,
        name=f"{kind}({r.name})",
        summands=(len(pairs),),
    )


def sym2(r: MatrixRep) -> MatrixRep:
    """Acción s ↦ Xs + sXᵀ sobre Sym(n)."""
    return _square_action(r, symmetric=True)


def alt2(r: MatrixRep) -> MatrixRep:
    """Acción s ↦ Xs + sXᵀ sobre AS(n)."""
    return _square_action(r, symmetric=False)


def add_torus(r: MatrixRep, k: int = 1) -> MatrixRep:
    """
    Agrega k generadores centrales que escalan por la identidad.

    Con k > 1 cada generador escala un sumando de V, así que k debe coincidir
    con la cantidad de sumandos.
    """
    if k < 1:
        raise ParameterOutOfRangeError("add_torus requiere k ≥ 1")
    blocks = (r.space_dim,) if k == 1 else r.summand_dims
    if len(blocks) != k:
        raise ParameterOutOfRangeError(f"(C*)^{k} sobre {len(blocks)} sumandos")
    generators = []
    offset = 0
    for size in blocks:
        generators.append(RationalMatrix.from_mapping(
            r.space_dim, r.space_dim, {(offset + i, offset + i): 1 for i in range(size)}
        ))
        offset += size
    label = _unique_label("C*" if k == 1 else f"(C*)^{k}", set(r.labels))
    d = r.algebra_dim
    return MatrixRep(
        space_dim=r.space_dim,
        basis=r.basis + tuple(generators),
        factors=r.factors + (Factor(label, d, d + k, abelian=True),),
        name=f"{r.name} × {label}",
        summands=r.summand_dims,
    )


def direct_sum_shared(summands: Sequence[MatrixRep], shared: Sequence[str] = ()) -> MatrixRep:
    """
    G_1 ⊕_H G_2: los factores con etiqueta en `shared` actúan diagonalmente;
    los demás actúan solo sobre su sumando.
    """
    summands = list(summands)
    if not summands:
        raise DimensionMismatchError("suma directa vacía")
    shared = tuple(shared)
    for label in shared:
        found = [s.factor(label) for s in summands]
        if any(f is None for f in found):
            raise LabelMismatchError(f"el factor compartido {label!r} no está en todos los sumandos")
        if len({f.size for f in found}) != 1:
            raise LabelMismatchError(f"el factor compartido {label!r} tiene tamaños distintos")

    zeros = [RationalMatrix.zeros(s.space_dim) for s in summands]
    basis: List[RationalMatrix] = []
    factors: List[Factor] = []
    used: set = set()
    emitted: set = set()
    for position, summand in enumerate(summands):
        for factor in summand.factors:
            start = len(basis)
            if factor.label in shared:
                if factor.label in emitted:
                    continue
                emitted.add(factor.label)
                for k in range(factor.size):
                    blocks = [s.basis[s.factor(factor.label).start + k] for s in summands]
                    basis.append(RationalMatrix.block_diagonal(blocks))
            else:
                for k in range(factor.start, factor.stop):
                    blocks = list(zeros)
                    blocks[position] = summand.basis[k]
                    basis.append(RationalMatrix.block_diagonal(blocks))
            label = _unique_label(factor.label, used)
            used.add(label)
            factors.append(Factor(label, start, len(basis), factor.abelian))
    dims = tuple(d for s in summands for d in s.summand_dims)
    suffix = f" (compartido: {', '.join(shared)})" if shared else ""
    return MatrixRep(
        space_dim=sum(s.space_dim for s in summands),
        basis=tuple(basis),
        factors=tuple(factors),
        name=" ⊕ ".join(s.name for s in summands) + suffix,
        summands=dims,
    )


def direct_sum(summands: Sequence[MatrixRep]) -> MatrixRep:
    return direct_sum_shared(summands, shared=())


# ---------- representaciones de espín ----------

@lru_cache(maxsize=None)
def gamma_matrices() -> Tuple[RationalMatrix, ...]:
    """γ_i = [[0, L_i], [L_iᵀ, 0]] (i = 0..7), enteras, γ_i² = I y anticonmutan."""
    gammas = []
    for i in range(8):
        L = octonions.left_multiplication(i)
        mapping = {}
        for r, row in enumerate(L.nonzero):
            for c, value in row:
                mapping[(r, 8 + c)] = value
                mapping[(8 + c, r)] = value
        gammas.append(RationalMatrix.from_mapping(16, 16, mapping))
    return tuple(gammas)


def _spin_small(m: int, chirality: int, label: str) -> MatrixRep:
    L = [octonions.left_multiplication(i) for i in range(m)]
    matrices = []
    for i, j in combinations(range(m), 2):
        product = L[i] @ L[j].transpose() if chirality == 1 else L[i].transpose() @ L[j]
        matrices.append(product.scale(HALF))
    return _single(8, matrices, label, sort=False)


def _spin9(label: str) -> MatrixRep:
    gammas = list(gamma_matrices())
    omega = RationalMatrix.identity(16)
    for g in gammas:
        omega = omega @ g
    gammas.append(omega)
    matrices = [(gammas[i] @ gammas[j]).scale(HALF) for i, j in combinations(range(9), 2)]
    return _single(16, matrices, label, sort=False)


def _fock_apply(ops: Sequence[Tuple[str, int]], subset: Tuple[int, ...]):
    """Aplica operadores de creación ('+') y aniquilación ('-') de derecha a izquierda."""
    sign = 1
    current = set(subset)
    for kind, i in reversed(ops):
        below = sum(1 for s in current if s < i)
        if kind == "+":
            if i in current:
                return None
            current.add(i)
        else:
            if i not in current:
                return None
            current.remove(i)
        if below % 2:
            sign = -sign
    return sign, tuple(sorted(current))


def _spin10(label: str) -> MatrixRep:
    """Semiespinorial de dimensión 16 sobre Λ^par(ℚ⁵), forma escindida."""
    states = [s for k in (0, 2, 4) for s in combinations(range(5), k)]
    index = {s: k for k, s in enumerate(states)}

    def operator(ops, shift=Fraction(0)) -> RationalMatrix:
        mapping = defaultdict(Fraction)
        for column, state in enumerate(states):
            if shift:
                mapping[(column, column)] += shift
            result = _fock_apply(ops, state)
            if result is not None:
                sign, target = result
                mapping[(index[target], column)] += sign
        return RationalMatrix.from_mapping(16, 16, mapping)

    matrices = []
    for i in range(5):
        for j in range(5):
            matrices.append(operator([("+", i), ("-", j)], -HALF if i == j else Fraction(0)))
    for i, j in combinations(range(5), 2):
        matrices.append(operator([("+", i), ("+", j)]))
    for i, j in combinations(range(5), 2):
        matrices.append(operator([("-", i), ("-", j)]))
    return _single(16, matrices, label, sort=False)


@lru_cache(maxsize=None)
def spin_rep(m: int, chirality: int = 1, label: Optional[str] = None) -> MatrixRep:
    """
    Representación de espín de so(m) para m ∈ {7, 8, 9, 10}.

    m = 7, 8 actúan sobre ℚ⁸ con ρ(A_ij) = ½ L_i L_jᵀ (o ½ L_iᵀ L_j para la otra
    quiralidad); m = 9 sobre ℚ¹⁶ con ρ(A_ij) = ½ γ_i γ_j; m = 10 es la
    semiespinorial de dimensión 16. Para m ≤ 9 la base sigue el orden de so(m).
    """
    if chirality not in (1, -1):
        raise ParameterOutOfRangeError("la quiralidad debe ser +1 o −1")
    label = label or f"spin({m})"
    if m in (7, 8):
        return _spin_small(m, chirality, label)
    if m == 9:
        return _spin9(label)
    if m == 10:
        return _spin10(label)
    raise UnsupportedRepresentationError(f"spin_rep({m}) no está disponible")


# ---------- excepcionales ----------

@lru_cache(maxsize=None)
def g2_rep() -> MatrixRep:
    """Derivaciones de los octoniones restringidas a la parte imaginaria (dim 14 sobre ℚ⁷)."""
    table = octonions.multiplication_table()
    rows = []
    for i in range(8):
        for j in range(8):
            s, p = table[i][j]
            equations = [[0] * 64 for _ in range(8)]
            for m in range(8):
                equations[m][m * 8 + p] += s
            for k in range(8):
                t, q = table[k][j]
                equations[q][k * 8 + i] -= t
            for k in range(8):
                t, q = table[i][k]
                equations[q][k * 8 + j] -= t
            rows.extend(equations)
    null = solve_homogeneous(rows, 64)
    restricted = range(1, 8)
    matrices = [
        RationalMatrix.from_flat(8, 8, v).submatrix(restricted, restricted) for v in null
    ]
    if len(matrices) != 14:
        raise RepresentationConstructionError(f"se obtuvieron {len(matrices)} derivaciones, se esperaban 14")
    return _single(7, matrices, "g2", sort=False)


# Coordenadas de Herm₃(O): (ξ1, ξ2, ξ3, c1[8], c2[8], c3[8]).
_XI = (0, 1, 2)
_OCT = (3, 11, 19)


@lru_cache(maxsize=None)
def cubic_monomials() -> Dict[Tuple[int, int, int], Fraction]:
    """N = ξ1ξ2ξ3 − Σ ξ_i n(c_i) + 2 Re((c1c2)c3) como diccionario de monomios."""
    monomials: Dict[Tuple[int, int, int], Fraction] = defaultdict(Fraction)
    monomials[_XI] += 1
    for xi, offset in zip(_XI, _OCT):
        for a in range(8):
            monomials[(xi, offset + a, offset + a)] -= 1
    table = octonions.multiplication_table()
    for a in range(8):
        for b in range(8):
            s, p = table[a][b]
            for c in range(8):
                t, q = table[p][c]
                if q == 0:
                    key = tuple(sorted((_OCT[0] + a, _OCT[1] + b, _OCT[2] + c)))
                    monomials[key] += 2 * s * t
    return {k: v for k, v in monomials.items() if v}


@lru_cache(maxsize=None)
def e6_rep() -> MatrixRep:
    """
    Álgebra de Lie de las A ∈ gl(27) con Σ_{m,l} A_ml x_l ∂_m N ≡ 0, donde N es la
    cúbica de Freudenthal. Se resuelve igualando a cero cada coeficiente cúbico.
    """
    logger.info("construyendo e6 como estabilizador de la cúbica (729 incógnitas)")
    gradient: Dict[int, Dict[Tuple[int, int], Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for monomial, coefficient in cubic_monomials().items():
        for position, m in enumerate(monomial):
            rest = monomial[:position] + monomial[position + 1:]
            gradient[m][rest] += coefficient
    equations: Dict[Tuple[int, ...], Dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for m, terms in gradient.items():
        for quadratic, coefficient in terms.items():
            for l in range(27):
                cubic = tuple(sorted(quadratic + (l,)))
                equations[cubic][m * 27 + l] += coefficient
    rows = []
    for cubic in sorted(equations):
        row = [Fraction(0)] * 729
        for unknown, value in equations[cubic].items():
            row[unknown] = value
        rows.append(row)
    null = solve_homogeneous(rows, 729)
    if len(null) != 78:
        raise RepresentationConstructionError(f"el estabilizador de la cúbica tiene dimensión {len(null)}")
    logger.info("e6: %s ecuaciones, estabilizador de dimensión %s", len(rows), len(null))
    matrices = [RationalMatrix.from_flat(27, 27, v) for v in null]
    return _single(27, matrices, "e6", sort=False)


# ---------- utilidades de álgebra de Lie ----------

class LieAlgebraService:

    @staticmethod
    def bracket_coordinates(rep: MatrixRep, i: int, j: int):
        bracket = rep.basis[i].commutator(rep.basis[j])
        coordinates = rep.coordinates(bracket)
        if coordinates is None:
            raise RepresentationConstructionError(
                f"{rep.name}: [X_{i}, X_{j}] no está en el span de la base"
            )
        return coordinates

    @staticmethod
    def derived_subalgebra(rep: MatrixRep) -> Subalgebra:
        """
        [g, g] como span de los corchetes. Los factores son ideales que conmutan
        entre sí, así que solo se calculan corchetes dentro de cada factor no
        abeliano y se corta cuando el bloque ya quedó generado.
        """
        echelon = IncrementalEchelon(rep.algebra_dim)
        for factor in rep.factors:
            if factor.abelian or factor.size < 2:
                continue
            generated = 0
            indices = range(factor.start, factor.stop)
            for i, j in combinations(indices, 2):
                if generated == factor.size:
                    break
                if echelon.add(LieAlgebraService.bracket_coordinates(rep, i, j)):
                    generated += 1
        return Subalgebra(rep, tuple(echelon.basis()))

    @staticmethod
    def center(rep: MatrixRep) -> Subalgebra:
        vectors = []
        dim = rep.algebra_dim
        for factor in rep.factors:
            if factor.abelian:
                for k in range(factor.start, factor.stop):
                    vectors.append(tuple(1 if t == k else 0 for t in range(dim)))
                continue
            size = factor.size
            echelon = IncrementalEchelon(size)
            for i in range(factor.start, factor.stop):
                if echelon.rank == size:
                    break
                images = [rep.basis[k].commutator(rep.basis[i]).entries for k in range(factor.start, factor.stop)]
                for p in range(rep.space_dim * rep.space_dim):
                    row = [image[p] for image in images]
                    if any(row):
                        echelon.add(row)
            if echelon.rank == size:
                continue
            rows = [row for _, row in echelon.reduced()]
            for local in solve_homogeneous(rows, size):
                full = [0] * dim
                full[factor.start:factor.stop] = local
                vectors.append(tuple(full))
        return Subalgebra(rep, tuple(vectors))

    @staticmethod
    def invariant_bilinear_forms(rep: MatrixRep, symmetric: bool = True) -> List[RationalMatrix]:
        """Formas S (simétricas o antisimétricas) con XᵀS + SX = 0 para toda X de la base."""
        n = rep.space_dim
        if symmetric:
            pairs = [(a, b) for a in range(n) for b in range(a, n)]
        else:
            pairs = list(combinations(range(n), 2))
        sign = 1 if symmetric else -1
        rows = []
        for X in rep.basis:
            equations = defaultdict(lambda: [0] * len(pairs))
            for u, (a, b) in enumerate(pairs):
                entries = [(a, b, 1)] if a == b else [(a, b, 1), (b, a, sign)]
                for r, c, s in entries:
                    # (Xᵀ E_rc)_{pq} = X_rp δ_cq ; (E_rc X)_{pq} = δ_pr X_cq
                    for p in range(n):
                        value = X[r, p]
                        if value:
                            equations[(p, c)][u] += s * value
                    for q in range(n):
                        value = X[c, q]
                        if value:
                            equations[(r, q)][u] += s * value
            rows.extend(equations.values())
        forms = []
        for v in solve_homogeneous(rows, len(pairs)):
            mapping = {}
            for u, (a, b) in enumerate(pairs):
                if v[u]:
                    mapping[(a, b)] = v[u]
                    if a != b:
                        mapping[(b, a)] = sign * v[u]
            forms.append(RationalMatrix.from_mapping(n, n, mapping))
        return forms

    @staticmethod
    def intertwiners(r1: MatrixRep, r2: MatrixRep) -> List[RationalMatrix]:
        """T : V1 → V2 con ρ2(X_k)·T = T·ρ1(X_k) para toda k."""
        if r1.algebra_dim != r2.algebra_dim:
            raise DimensionMismatchError("las representaciones deben compartir la base del álgebra")
        d1, d2 = r1.space_dim, r2.space_dim
        rows = []
        for A, B in zip(r1.basis, r2.basis):
            equations = defaultdict(lambda: [0] * (d1 * d2))
            # (B T)_{pq} = Σ_r B_pr T_rq ; (T A)_{pq} = Σ_r T_pr A_rq
            for p, row in enumerate(B.nonzero):
                for r, value in row:
                    for q in range(d1):
                        equations[(p, q)][r * d1 + q] += value
            for r, row in enumerate(A.nonzero):
                for q, value in row:
                    for p in range(d2):
                        equations[(p, q)][p * d1 + r] -= value
            rows.extend(equations.values())
        return [RationalMatrix.from_flat(d2, d1, v) for v in solve_homogeneous(rows, d1 * d2)]

    @staticmethod
    def bracket_closure_defects(rep: MatrixRep) -> List[Tuple[int, int]]:
        """Pares (i, j) cuyo corchete sale del span de la base."""
        defects = []
        for i, j in combinations(range(rep.algebra_dim), 2):
            if rep.coordinates(rep.basis[i].commutator(rep.basis[j])) is None:
                defects.append((i, j))
        return defects

    @staticmethod
    def is_subalgebra_closed(sub: Subalgebra) -> bool:
        matrices = sub.matrices()
        span = IncrementalEchelon(sub.parent.algebra_dim).extend(sub.coefficient_basis)
        for a, b in combinations(matrices, 2):
            coordinates = sub.parent.coordinates(a.commutator(b))
            if coordinates is None or not span.contains(coordinates):
                return False
        return True


def derived_subalgebra(rep: MatrixRep) -> Subalgebra:
    return LieAlgebraService.derived_subalgebra(rep)


def center(rep: MatrixRep) -> Subalgebra:
    return LieAlgebraService.center(rep)


def invariant_bilinear_forms(rep: MatrixRep, symmetric: bool = True) -> List[RationalMatrix]:
    return LieAlgebraService.invariant_bilinear_forms(rep, symmetric)


def intertwiners(r1: MatrixRep, r2: MatrixRep) -> List[RationalMatrix]:
    return LieAlgebraService.intertwiners(r1, r2)


def bracket_closure_defects(rep: MatrixRep) -> List[Tuple[int, int]]:
    return LieAlgebraService.bracket_closure_defects(rep)
