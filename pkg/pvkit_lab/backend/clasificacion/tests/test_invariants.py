from fractions import Fraction

import pytest

from clasificacion.exceptions import DimensionMismatchError, ParameterOutOfRangeError
from clasificacion.models.RationalMatrix_model import RationalMatrix
from clasificacion.services import invariants as inv
from clasificacion.services import linalg
from clasificacion.services.invariants import upper_pairs


def flatten(m: RationalMatrix):
    return list(m.entries)


def upper(m: RationalMatrix, strict: bool):
    return [m[i, j] for i, j in upper_pairs(m.rows, strict)]


def random_antisymmetric(rng, n, bound=3):
    mapping = {}
    for i, j in upper_pairs(n, strict=True):
        value = int(rng.integers(-bound, bound + 1))
        mapping[(i, j)] = value
        mapping[(j, i)] = -value
    return RationalMatrix.from_mapping(n, n, mapping)


def test_determinant_examples():
    assert inv.determinant(3)(flatten(RationalMatrix.identity(3))) == 1
    assert inv.determinant(2)([2, 0, 0, 3]) == 6
    assert inv.determinant(2, symmetric=True)([2, 1, 3]) == 5
    assert inv.determinant(3).degree == 3


def test_determinant_agrees_with_bareiss(random_matrix):
    f = inv.determinant(5)
    for _ in range(10):
        m = random_matrix(5)
        assert f(flatten(m)) == linalg.determinant(m)


def test_determinant_congruence(random_matrix):
    f = inv.determinant(3, symmetric=True)
    for _ in range(5):
        g = random_matrix(3)
        a = random_matrix(3)
        s = a + a.transpose()
        transformed = g @ s @ g.transpose()
        assert f(upper(transformed, strict=False)) == linalg.determinant(g) ** 2 * f(upper(s, strict=False))


def test_pfaffian_examples():
    assert inv.pfaffian(2)([1]) == 1
    assert inv.pfaffian(4)([1, 2, 3, 4, 5, 6]) == 8
    with pytest.raises(ParameterOutOfRangeError):
        inv.pfaffian(5)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_pfaffian_squared_is_determinant(rng, n):
    f = inv.pfaffian(n)
    for _ in range(25):
        a = random_antisymmetric(rng, n)
        assert f(upper(a, strict=True)) ** 2 == linalg.determinant(a)


def test_pfaffian_congruence(rng, random_matrix):
    f = inv.pfaffian(4)
    for _ in range(5):
        a = random_antisymmetric(rng, 4)
        g = random_matrix(4)
        transformed = g @ a @ g.transpose()
        assert f(upper(transformed, strict=True)) == linalg.determinant(g) * f(upper(a, strict=True))


def test_quadratic_form():
    f = inv.sum_of_squares(3)
    assert f([1, 0, 0]) == 1
    assert f([1, 2, 2]) == 9
    with pytest.raises(ParameterOutOfRangeError):
        inv.quadratic_form(RationalMatrix.from_rows([[1, 1], [0, 1]]))


def test_pair_dot():
    f = inv.pair_dot(2)
    assert f([1, 0, 1, 0]) == 1
    assert f([1, 2, 3, 4]) == 11


def test_pair_dot_invariance():
    g = RationalMatrix.from_rows([[2, 1], [1, 1]])
    g_inv = RationalMatrix.from_rows([[1, -1], [-1, 2]])
    u, v = (1, 2), (3, -4)
    u2 = RationalMatrix.from_rows([u]) @ g_inv
    v2 = g.apply(v)
    f = inv.pair_dot(2)
    assert f(list(u) + list(v)) == f(list(u2.entries) + list(v2))


def test_symplectic_pair():
    f = inv.symplectic_pair(2)
    assert f([1, 0, 0, 0, 0, 0, 1, 0]) == 1
    assert f([1, 2, 3, 4, 1, 2, 3, 4]) == 0


def test_pf_gram():
    f = inv.pf_gram(2)
    # columnas e1 y e3
    assert f([1, 0, 0, 0, 0, 1, 0, 0]) == 1
    assert f([1, 1, 2, 2, 3, 3, 4, 4]) == 0


def test_pf_gram_right_action():
    f = inv.pf_gram(2)
    x = [1, 2, 0, 1, 3, 0, 1, 1]
    h = RationalMatrix.from_rows([[2, 1], [1, 3]])
    rows = RationalMatrix.from_flat(4, 2, x) @ h.transpose()
    assert f(list(rows.entries)) == linalg.determinant(h) * f(x)


def test_bordered_pfaffian():
    f = inv.bordered_pfaffian(3)
    # x = [[0,1,0],[-1,0,0],[0,0,0]], v = e3
    assert f([0, 0, 1, 1, 0, 0]) == 1
    assert f([0, 0, 0, 1, 2, 3]) == 0
    assert f([0, 0, 5, 1, 0, 0]) == 5
    assert f.degree == 2
    with pytest.raises(ParameterOutOfRangeError):
        inv.bordered_pfaffian(4)


def test_det_augmented():
    f = inv.det_augmented(3)
    v = [1, 0, 0]
    x = [0, 0, 1, 0, 0, 1]
    assert f(v + x) == 1
    assert f([1, 1, 0] + [1, 0, 1, 0, 0, 1]) == 0


def test_det_augmented_multiplicative(random_matrix):
    f = inv.det_augmented(3)
    g = random_matrix(3)
    point = RationalMatrix.from_rows([[1, 0, 2], [0, 1, 1], [3, 1, 0]])
    moved = g @ point

    def as_coordinates(m):
        return [m[i, 0] for i in range(3)] + [m[i, j] for i in range(3) for j in (1, 2)]

    assert f(as_coordinates(moved)) == linalg.determinant(g) * f(as_coordinates(point))


def test_freudenthal_cubic():
    f = inv.freudenthal_cubic()
    diagonal = [1, 1, 1] + [0] * 24
    assert f(diagonal) == 1
    assert f([2, 3, 5] + [0] * 24) == 30
    point = [1, 2, 0] + [1, 0, 1] + [0] * 5 + [0, 1] + [0] * 6 + [2] + [0] * 7
    assert f([3 * v for v in point]) == 27 * f(point)


def test_embed():
    f = inv.embed(inv.pair_dot(1), 1, 4)
    assert f([9, 2, 3, 9]) == 6
    assert f.degree == 2
    with pytest.raises(ParameterOutOfRangeError):
        inv.embed(inv.pair_dot(2), 1, 4)


def test_arity_is_checked():
    with pytest.raises(DimensionMismatchError):
        inv.sum_of_squares(3)([1, 2])


@pytest.mark.parametrize(
    "f",
    [inv.determinant(3), inv.pfaffian(4), inv.pf_gram(2), inv.bordered_pfaffian(3), inv.det_augmented(3)],
    ids=lambda f: f.name,
)
def test_homogeneity_degree(rng, f):
    for _ in range(5):
        x = [Fraction(int(v)) for v in rng.integers(-3, 4, size=f.arity)]
        assert f([2 * v for v in x]) == 2 ** f.degree * f(x)


@pytest.mark.parametrize("f", [inv.determinant(3), inv.pfaffian(4), inv.freudenthal_cubic()], ids=lambda f: f.name)
def test_jet_derivative_matches_difference_quotient(rng, f):
    x = [Fraction(int(v)) for v in rng.integers(-2, 3, size=f.arity)]
    u = [int(v) for v in rng.integers(-2, 3, size=f.arity)]
    jet = linalg.directional_jet(f, x, u)

    def at(t):
        return f([a + t * b for a, b in zip(x, u)])

    # polinomio de grado ≤ 3 en t: diferencias centradas exactas
    first = (at(1) - at(-1)) / 2 - (at(2) - 2 * at(1) + 2 * at(-1) - at(-2)) / 12
    second = at(1) - 2 * at(0) + at(-1)
    assert jet.value == at(0)
    assert jet.d1 == first
    assert jet.d2 == second
