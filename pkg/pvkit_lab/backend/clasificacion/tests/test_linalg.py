from fractions import Fraction

import pytest

from clasificacion.exceptions import DimensionMismatchError
from clasificacion.models.Jet2_model import Jet2
from clasificacion.models.RationalMatrix_model import RationalMatrix
from clasificacion.services import linalg


def test_rank_basic_cases():
    assert linalg.rank(RationalMatrix.identity(3)) == 3
    assert linalg.rank(RationalMatrix.zeros(2, 5)) == 0
    assert linalg.rank(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 1


@pytest.mark.parametrize("shape", [(3, 3), (4, 6), (6, 4), (5, 5)])
def test_fraction_free_rank_matches_naive(random_matrix, shape):
    for _ in range(60):
        m = random_matrix(*shape, bound=2)
        assert linalg.rank(m) == linalg.rank(m, method="naive")


def test_low_rank_products_match_naive(random_matrix):
    for _ in range(40):
        m = random_matrix(5, 2) @ random_matrix(2, 6)
        assert linalg.rank(m) == linalg.rank(m, method="naive") <= 2


def test_rank_with_rationals():
    m = RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
    assert linalg.rank(m) == 1


def test_nullspace_cases():
    assert linalg.nullspace(RationalMatrix.identity(4)) == []
    assert len(linalg.nullspace(RationalMatrix.zeros(2, 3))) == 3
    assert linalg.nullspace(RationalMatrix.from_rows([[1, 1]])) == [(1, -1)]


def test_nullspace_vectors_are_solutions(random_matrix):
    for _ in range(10):
        m = random_matrix(3, 6)
        basis = linalg.nullspace(m)
        assert len(basis) == 6 - linalg.rank(m)
        for v in basis:
            assert not any(m.apply(v))


def test_solve_consistent_and_inconsistent():
    m = RationalMatrix.from_rows([[1, 1], [1, -1]])
    assert linalg.solve(m, [3, 1]) == (2, 1)
    singular = RationalMatrix.from_rows([[1, 1], [2, 2]])
    assert linalg.solve(singular, [1, 3]) is None
    with pytest.raises(DimensionMismatchError):
        linalg.solve(m, [1])


def test_determinant_examples():
    assert linalg.determinant(RationalMatrix.identity(3)) == 1
    assert linalg.determinant(RationalMatrix.from_rows([[2, 0], [0, 3]])) == 6
    assert linalg.determinant(RationalMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert linalg.determinant(RationalMatrix.from_rows([[Fraction(1, 2), 1], [1, 4]])) == 1
    with pytest.raises(DimensionMismatchError):
        linalg.determinant(RationalMatrix.zeros(2, 3))


def test_determinant_is_multiplicative(random_matrix):
    for _ in range(10):
        a, b = random_matrix(4), random_matrix(4)
        assert linalg.determinant(a @ b) == linalg.determinant(a) * linalg.determinant(b)


def test_coordinate_system_recovers_coefficients():
    vectors = [(1, 0, 1), (0, 1, 1)]
    cs = linalg.CoordinateSystem(vectors, 3)
    assert cs.coordinates((2, 3, 5)) == (2, 3)


def test_coordinate_system_rejects_dependent_family():
    with pytest.raises(DimensionMismatchError):
        linalg.CoordinateSystem([(1, 2), (2, 4)], 2)


def test_jet_arithmetic():
    x = Jet2.variable(3, 1)
    assert (x * x).as_tuple() == (9, 6, 2)
    assert (2 - x).as_tuple() == (-1, -1, 0)
    assert (x ** 3).as_tuple() == (27, 27, 18)


def test_jet_eval2_square():
    assert linalg.jet_eval2(lambda x: x[0] * x[0], [3], [1], [1]) == (9, 6, 6, 2)


def test_jet_eval2_det_at_identity():
    def det2(x):
        return x[0] * x[3] - x[1] * x[2]

    identity = [1, 0, 0, 1]
    e11 = [1, 0, 0, 0]
    e22 = [0, 0, 0, 1]
    assert linalg.jet_eval2(det2, identity, e11, e11) == (1, 1, 1, 0)
    assert linalg.jet_eval2(det2, identity, e11, e22) == (1, 1, 1, 1)


def test_jet_eval2_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        linalg.jet_eval2(lambda x: x[0], [1, 2], [1], [1, 0])


def test_rank_plus_nullity_is_column_count(rng, random_matrix):
    for _ in range(40):
        rows, cols = (int(v) for v in rng.integers(1, 8, size=2))
        m = random_matrix(rows, cols, bound=2)
        assert linalg.rank(m) + len(linalg.nullspace(m)) == cols


def polynomial_jet(coefficients, t):
    """(p(t), p'(t), p''(t)) exactos para p = Σ c_k t^k."""
    value = sum(c * t ** k for k, c in enumerate(coefficients))
    d1 = sum(k * c * t ** (k - 1) for k, c in enumerate(coefficients) if k >= 1)
    d2 = sum(k * (k - 1) * c * t ** (k - 2) for k, c in enumerate(coefficients) if k >= 2)
    return Jet2(value, d1, d2)


def polynomial_product(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def test_jet_product_follows_leibniz(rng):
    for _ in range(50):
        p = [int(v) for v in rng.integers(-4, 5, size=4)]
        q = [int(v) for v in rng.integers(-4, 5, size=3)]
        t = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
        assert polynomial_jet(p, t) * polynomial_jet(q, t) == polynomial_jet(polynomial_product(p, q), t)
        assert polynomial_jet(p, t) - polynomial_jet(q, t) == polynomial_jet(
            [a - b for a, b in zip(p, q + [0])], t
        )


def test_directional_jet_of_product_is_product_of_jets(rng):
    def f(x):
        return x[0] * x[1] - x[2] * x[2]

    def g(x):
        return x[0] + x[1] * x[2]

    for _ in range(20):
        x = [Fraction(int(v)) for v in rng.integers(-3, 4, size=3)]
        u = [int(v) for v in rng.integers(-3, 4, size=3)]
        product = linalg.directional_jet(lambda y: f(y) * g(y), x, u)
        assert product == linalg.directional_jet(f, x, u) * linalg.directional_jet(g, x, u)
