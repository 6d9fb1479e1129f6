from itertools import combinations

import pytest

from clasificacion.exceptions import LabelMismatchError, ParameterOutOfRangeError, UnsupportedRepresentationError
from clasificacion.models.RationalMatrix_model import RationalMatrix
from clasificacion.services import octonions
from clasificacion.services import representations as reps
from clasificacion.services.invariants import upper_pairs


@pytest.mark.parametrize(
    "rep, algebra_dim, space_dim",
    [
        (reps.sl(2), 3, 2),
        (reps.gl(3), 9, 3),
        (reps.so(4), 6, 4),
        (reps.sp(2), 10, 4),
        (reps.sp(3), 21, 6),
    ],
)
def test_classical_dimensions(rep, algebra_dim, space_dim):
    assert rep.algebra_dim == algebra_dim
    assert rep.space_dim == space_dim


def test_sp_preserves_symplectic_form():
    J = reps.symplectic_form(3)
    for X in reps.sp(3).basis:
        assert (X.transpose() @ J + J @ X).is_zero()


def test_sp_rejects_small_rank():
    with pytest.raises(ParameterOutOfRangeError):
        reps.sp(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_square_actions(n):
    assert reps.sym2(reps.sl(n)).space_dim == n * (n + 1) // 2
    assert reps.alt2(reps.sl(n)).space_dim == n * (n - 1) // 2


def test_tensor_product():
    rep = reps.tensor(reps.sl(2), reps.sl(3))
    assert (rep.algebra_dim, rep.space_dim) == (11, 6)
    assert rep.labels == ("sl(2)", "sl(3)")
    with pytest.raises(LabelMismatchError):
        reps.tensor(reps.sl(2), reps.sl(2))


def test_dual_is_involutive():
    rep = reps.sl(3)
    assert reps.dual(reps.dual(rep)).basis == rep.basis


def test_add_torus():
    rep = reps.add_torus(reps.so(3))
    assert rep.algebra_dim == 4
    assert rep.basis[-1] == RationalMatrix.identity(3)
    assert rep.factors[-1].abelian
    with pytest.raises(ParameterOutOfRangeError):
        reps.add_torus(reps.so(3), k=2)


@pytest.mark.parametrize("n", [2, 3])
def test_shared_symplectic_sum_with_two_tori(n):
    rep = reps.add_torus(
        reps.direct_sum_shared([reps.sp(n), reps.sp(n)], shared=[f"sp({n})"]), k=2
    )
    assert rep.algebra_dim == n * (2 * n + 1) + 2
    assert rep.space_dim == 4 * n
    assert rep.summand_dims == (2 * n, 2 * n)
    assert reps.derived_subalgebra(rep).dim == n * (2 * n + 1)


def test_direct_sum_without_sharing_keeps_factors_apart():
    rep = reps.direct_sum([reps.sl(2), reps.sl(2)])
    assert rep.algebra_dim == 6
    assert rep.labels == ("sl(2)", "sl(2)[2]")


def test_shared_label_must_exist_everywhere():
    with pytest.raises(LabelMismatchError):
        reps.direct_sum_shared([reps.sl(3), reps.sp(2)], shared=["sl(3)"])


def test_derived_and_center_of_gl():
    rep = reps.gl(3)
    assert reps.derived_subalgebra(rep).dim == 8
    assert reps.center(rep).dim == 1
    assert reps.center(reps.sl(3)).dim == 0


def test_derived_of_torus_is_zero():
    rep = reps.add_torus(reps.sl(1))
    assert rep.algebra_dim == 1
    assert reps.derived_subalgebra(rep).dim == 0
    assert reps.center(rep).dim == 1


def test_octonion_norm_is_multiplicative(rng):
    for _ in range(20):
        x = [int(v) for v in rng.integers(-3, 4, size=8)]
        y = [int(v) for v in rng.integers(-3, 4, size=8)]
        product = octonions.octonion_mul(x, y)
        assert octonions.octonion_norm(product) == octonions.octonion_norm(x) * octonions.octonion_norm(y)


def test_octonion_units():
    for i in range(1, 8):
        square = octonions.octonion_mul(octonions.unit(i), octonions.unit(i))
        assert square == tuple(-v for v in octonions.unit(0))
        L = octonions.left_multiplication(i)
        assert L @ L.transpose() == RationalMatrix.identity(8)
    assert octonions.left_multiplication(0) == RationalMatrix.identity(8)


@pytest.mark.parametrize("m, space_dim", [(7, 8), (8, 8), (9, 16)])
def test_spin_dimensions_and_closure(m, space_dim):
    rep = reps.spin_rep(m)
    assert rep.space_dim == space_dim
    assert rep.algebra_dim == m * (m - 1) // 2
    assert reps.bracket_closure_defects(rep) == []


@pytest.mark.parametrize("m", [7, 9])
def test_spin_has_one_invariant_quadratic_form(m):
    forms = reps.invariant_bilinear_forms(reps.spin_rep(m))
    assert len(forms) == 1


def test_spin8_is_not_the_vector_representation():
    assert reps.intertwiners(reps.so(8), reps.spin_rep(8)) == []
    assert len(reps.intertwiners(reps.so(8), reps.so(8))) == 1


def test_gamma_matrices_anticommute():
    gammas = reps.gamma_matrices()
    identity = RationalMatrix.identity(16)
    for g in gammas:
        assert g @ g == identity
    for a, b in combinations(gammas, 2):
        assert (a @ b + b @ a).is_zero()


def test_unknown_spin_representation():
    with pytest.raises(UnsupportedRepresentationError):
        reps.spin_rep(11)


def test_g2():
    rep = reps.g2_rep()
    assert (rep.algebra_dim, rep.space_dim) == (14, 7)
    assert reps.bracket_closure_defects(rep) == []
    assert len(reps.invariant_bilinear_forms(rep)) == 1


@pytest.mark.slow
def test_spin10_half_spin():
    rep = reps.spin_rep(10)
    assert (rep.algebra_dim, rep.space_dim) == (45, 16)
    assert reps.invariant_bilinear_forms(rep) == []
    assert reps.invariant_bilinear_forms(rep, symmetric=False) == []


@pytest.mark.slow
def test_e6_stabilizes_the_cubic():
    rep = reps.e6_rep()
    assert (rep.algebra_dim, rep.space_dim) == (78, 27)
    assert reps.derived_subalgebra(rep).dim == 78


def upper_coordinates(m: RationalMatrix, strict: bool):
    return tuple(m[i, j] for i, j in upper_pairs(m.rows, strict))


@pytest.mark.parametrize("symmetric", [True, False], ids=["sym2", "alt2"])
def test_square_actions_match_congruence(random_matrix, symmetric):
    rep = reps.gl(3)
    square = reps.sym2(rep) if symmetric else reps.alt2(rep)
    sign = 1 if symmetric else -1
    for _ in range(5):
        a = random_matrix(3)
        s = a + a.transpose().scale(sign)
        for X, Y in zip(rep.basis, square.basis):
            image = X @ s + s @ X.transpose()
            assert image.transpose() == image.scale(sign)
            assert tuple(Y.apply(upper_coordinates(s, not symmetric))) == upper_coordinates(image, not symmetric)


@pytest.mark.parametrize(
    "rep",
    [
        reps.gl(3),
        reps.sl(4),
        reps.so(5),
        reps.sp(2),
        reps.sp(3),
        reps.tensor(reps.sl(2), reps.sl(3)),
        reps.tensor(reps.sp(2), reps.sl(2)),
        reps.add_torus(reps.direct_sum_shared([reps.sp(2), reps.sp(2)], ["sp(2)"]), k=2),
        reps.add_torus(reps.direct_sum_shared([reps.sl(3), reps.alt2(reps.sl(3))], ["sl(3)"]), k=2),
        reps.sym2(reps.gl(3)),
        reps.alt2(reps.gl(4)),
        reps.dual(reps.sl(3)),
    ],
    ids=lambda rep: rep.name,
)
def test_bracket_closure(rep):
    assert reps.bracket_closure_defects(rep) == []


@pytest.mark.slow
@pytest.mark.parametrize("build", [reps.e6_rep, lambda: reps.spin_rep(10)], ids=["e6", "spin10"])
def test_bracket_closure_of_large_algebras(build):
    assert reps.bracket_closure_defects(build()) == []
