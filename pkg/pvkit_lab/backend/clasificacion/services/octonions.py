"""
Octoniones racionales por duplicación de Cayley–Dickson de los cuaterniones.

Un octonión es un vector de 8 coordenadas (a, b) con a, b cuaterniones:
(a, b)(c, d) = (ac − d̄b, da + bc̄). Base: e_m = (q_m, 0), e_{4+m} = (0, q_m) con
q = (1, i, j, k). Las funciones solo usan suma, resta y producto, de modo que
aceptan coordenadas Fraction o Jet2.
"""
from functools import lru_cache
from typing import Sequence, Tuple

from clasificacion.models.RationalMatrix_model import ONE, ZERO, RationalMatrix


def quaternion_mul(p: Sequence, q: Sequence) -> Tuple:
    a0, a1, a2, a3 = p
    b0, b1, b2, b3 = q
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quaternion_conj(p: Sequence) -> Tuple:
    return (p[0], -p[1], -p[2], -p[3])


def octonion_mul(x: Sequence, y: Sequence) -> Tuple:
    a, b = x[:4], x[4:]
    c, d = y[:4], y[4:]
    left = [u - v for u, v in zip(quaternion_mul(a, c), quaternion_mul(quaternion_conj(d), b))]
    right = [u + v for u, v in zip(quaternion_mul(d, a), quaternion_mul(b, quaternion_conj(c)))]
    return tuple(left + right)


def octonion_conj(x: Sequence) -> Tuple:
    return (x[0],) + tuple(-v for v in x[1:])


def octonion_norm(x: Sequence):
    """n(x) = x·x̄ = Σ x_i²."""
    total = x[0] * x[0]
    for v in x[1:]:
        total = total + v * v
    return total


def real_part(x: Sequence):
    return x[0]


def unit(index: int) -> Tuple:
    return tuple(ONE if k == index else ZERO for k in range(8))


@lru_cache(maxsize=None)
def multiplication_table() -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    """table[i][j] = (signo, k) con e_i e_j = signo·e_k."""
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            product = octonion_mul(unit(i), unit(j))
            k = next(m for m, v in enumerate(product) if v)
            row.append((int(product[k]), k))
        table.append(tuple(row))
    return tuple(table)


@lru_cache(maxsize=None)
def left_multiplication(index: int) -> RationalMatrix:
    """Matriz de x ↦ e_index·x en la base e_0..e_7 (L_0 = I)."""
    table = multiplication_table()
    mapping = {}
    for j in range(8):
        sign, k = table[index][j]
        mapping[(k, j)] = sign
    return RationalMatrix.from_mapping(8, 8, mapping)
