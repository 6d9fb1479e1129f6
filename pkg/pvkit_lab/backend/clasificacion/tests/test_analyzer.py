from fractions import Fraction

import pytest

from clasificacion.exceptions import DimensionMismatchError, NotPrehomogeneousError, ZeroAtTestPointError
from clasificacion.models.Analysis_model import GenericPoint
from clasificacion.models.InvariantPolynomial_model import InvariantPolynomial
from clasificacion.models.RationalMatrix_model import RationalMatrix
from clasificacion.services import analyzer as analyzer_module
from clasificacion.services import invariants as inv
from clasificacion.services import linalg
from clasificacion.services import representations as reps
from clasificacion.services.analyzer import PVAnalyzerService, make_rng, sample_point
from clasificacion.services.representations import LieAlgebraService

SYM3_IDENTITY = (1, 0, 0, 1, 0, 1)


def torus_line():
    return reps.add_torus(reps.sl(1))


def vector_plus_alt(n):
    """C^n ⊕ AS(n) bajo sl(n) compartida y un toro por sumando."""
    return reps.add_torus(reps.direct_sum_shared([reps.sl(n), reps.alt2(reps.sl(n))], [f"sl({n})"]), k=2)


def first_coordinate(arity):
    return InvariantPolynomial("x1", arity, 1, lambda x: x[0])


def test_action_matrix_of_scalar_torus():
    m = PVAnalyzerService.action_matrix(torus_line(), [1])
    assert m == RationalMatrix.from_rows([[1]])
    assert linalg.rank(m) == 1


def test_action_matrix_at_origin_is_zero():
    rep = reps.add_torus(reps.so(3))
    assert PVAnalyzerService.action_matrix(rep, [0, 0, 0]).is_zero()


def test_action_matrix_shape_and_mismatch():
    rep = reps.sym2(reps.gl(3))
    m = PVAnalyzerService.action_matrix(rep, SYM3_IDENTITY)
    assert m.shape == (6, 9)
    assert linalg.rank(m) == 6
    with pytest.raises(DimensionMismatchError):
        PVAnalyzerService.action_matrix(rep, [1, 0, 1])


def test_hint_is_used_when_generic():
    rep = reps.sym2(reps.gl(2))
    point = PVAnalyzerService.find_generic_point(rep, hint=[1, 0, 1])
    assert point.certified and point.source == "hint" and point.attempts == 1


def test_symplectic_pair_hint_is_generic():
    n = 3
    rep = reps.add_torus(reps.direct_sum_shared([reps.sp(n), reps.sp(n)], [f"sp({n})"]), k=2)
    hint = [1, 0, 0, 0, 0, 0] + [0, 0, 0, 1, 0, 0]
    point = PVAnalyzerService.find_generic_point(rep, hint=hint)
    assert point.source == "hint"
    isotropy = PVAnalyzerService.isotropy_algebra(rep, point)
    assert isotropy.dim == (n - 1) ** 2 + n * (n - 1) + 1


def test_non_generic_hint_falls_back_to_sampling():
    rep = reps.sym2(reps.gl(2))
    point = PVAnalyzerService.find_generic_point(rep, seed=3, hint=[1, 0, 0])
    assert point.source == "random"
    assert point.attempts >= 2
    assert PVAnalyzerService.is_generic(rep, point.coordinates)


def test_zero_representation_is_inconclusive():
    with pytest.raises(NotPrehomogeneousError) as excinfo:
        PVAnalyzerService.find_generic_point(reps.sl(1), max_retries=5)
    assert excinfo.value.attempts == 5


def test_generic_point_is_deterministic():
    rep = reps.add_torus(reps.so(4))
    first = PVAnalyzerService.find_generic_point(rep, seed=11, salt="so4")
    second = PVAnalyzerService.find_generic_point(rep, seed=11, salt="so4")
    assert first == second


def test_sampling_respects_bound():
    x = sample_point(make_rng(0, "cota"), 50, 2)
    assert all(-2 <= v <= 2 for v in x)
    assert all(isinstance(v, Fraction) for v in x)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_isotropy_of_vector_under_orthogonal_algebra(n):
    rep = reps.add_torus(reps.so(n))
    e1 = [1] + [0] * (n - 1)
    point = PVAnalyzerService.find_generic_point(rep, hint=e1)
    isotropy = PVAnalyzerService.isotropy_algebra(rep, point)
    assert isotropy.dim == (n - 1) * (n - 2) // 2
    assert LieAlgebraService.is_subalgebra_closed(isotropy)


def test_isotropy_of_vector_plus_alternating_forms():
    rep = vector_plus_alt(3)
    point = PVAnalyzerService.find_generic_point(rep, seed=0)
    isotropy = PVAnalyzerService.isotropy_algebra(rep, point)
    assert rep.algebra_dim == 10 and rep.space_dim == 6
    assert isotropy.dim == 4
    assert LieAlgebraService.is_subalgebra_closed(isotropy)


def test_symplectic_with_torus_has_no_character():
    rep = reps.add_torus(reps.sp(2))
    point = PVAnalyzerService.find_generic_point(rep, seed=0)
    assert PVAnalyzerService.character_space_dim(rep, point) == 0


@pytest.mark.parametrize("seed", range(5))
def test_character_dimension_does_not_depend_on_point(seed):
    rep = vector_plus_alt(3)
    point = PVAnalyzerService.find_generic_point(rep, seed=seed)
    assert PVAnalyzerService.character_space_dim(rep, point) == 1


def test_quadratic_form_character():
    n = 4
    rep = reps.add_torus(reps.so(n))
    points = [[1, 2, 0, 1], [3, -1, 1, 1], [0, 1, 1, 2]]
    check = PVAnalyzerService.verify_relative_invariant(rep, inv.sum_of_squares(n), points)
    assert check.verified
    assert check.character == (0,) * 6 + (2,)
    assert check.points_used == 3


def test_symmetric_determinant_character():
    rep = reps.add_torus(reps.sym2(reps.sl(3)))
    points = [SYM3_IDENTITY, (2, 1, 0, 1, 0, 3), (1, 1, 1, 2, 0, -1)]
    check = PVAnalyzerService.verify_relative_invariant(rep, inv.determinant(3, symmetric=True), points)
    assert check.verified
    assert check.character == (0,) * 8 + (3,)


def test_pfaffian_character_is_trace():
    rep = reps.alt2(reps.gl(4))
    points = [(1, 2, 3, 4, 5, 6), (0, 1, 0, 0, 1, 0), (2, 0, 1, 1, 0, 3)]
    check = PVAnalyzerService.verify_relative_invariant(rep, inv.pfaffian(4), points)
    assert check.verified
    assert check.character == tuple(1 if i == j else 0 for i in range(4) for j in range(4))


def test_non_invariant_is_rejected():
    rep = reps.add_torus(reps.so(2))
    check = PVAnalyzerService.verify_relative_invariant(rep, first_coordinate(2), [(1, 1), (1, 2)])
    assert not check.verified
    assert check.note


def test_zero_at_test_point():
    rep = reps.add_torus(reps.so(2))
    with pytest.raises(ZeroAtTestPointError):
        PVAnalyzerService.verify_relative_invariant(rep, first_coordinate(2), [(0, 1)])


def test_invariant_arity_must_match():
    with pytest.raises(DimensionMismatchError):
        PVAnalyzerService.verify_relative_invariant(reps.add_torus(reps.so(3)), inv.sum_of_squares(2), [(1, 1)])


def test_hessian_of_quadratic_form_is_twice_the_form():
    S = RationalMatrix.from_rows([[1, 2, 0], [2, 0, 1], [0, 1, 3]])
    f = inv.quadratic_form(S)
    for x in [(1, 0, 0), (2, -1, 3)]:
        assert PVAnalyzerService.hessian(f, x) == S.scale(2)


def test_regularity_examples():
    assert PVAnalyzerService.hessian_regularity(inv.sum_of_squares(3), reps.add_torus(reps.so(3)), [1, 2, 2])
    sym = reps.add_torus(reps.sym2(reps.sl(3)))
    assert PVAnalyzerService.hessian_regularity(inv.determinant(3, symmetric=True), sym, SYM3_IDENTITY)


def test_pfaffian_on_vector_plus_alternating_is_not_regular():
    rep = reps.add_torus(
        reps.direct_sum_shared([reps.sl(4), reps.alt2(reps.sl(4))], ["sl(4)"]), k=2
    )
    f = inv.embed(inv.pfaffian(4), 4, 10)
    x = [1, 0, 0, 0] + [1, 2, 3, 4, 5, 6]
    assert not PVAnalyzerService.hessian_regularity(f, rep, x)


def test_regularity_needs_nonzero_value():
    with pytest.raises(ZeroAtTestPointError):
        PVAnalyzerService.hessian_regularity(inv.sum_of_squares(2), reps.add_torus(reps.so(2)), [0, 0])


@pytest.mark.parametrize("seed", range(3))
def test_hessian_dichotomy(seed):
    rep = vector_plus_alt(3)
    f = inv.bordered_pfaffian(3)
    rng = make_rng(seed, "hessiano")
    values = set()
    for _ in range(10):
        x = sample_point(rng, rep.space_dim, 3)
        if f(x) and PVAnalyzerService.is_generic(rep, x):
            values.add(PVAnalyzerService.hessian_regularity(f, rep, x))
    assert values == {True}


def test_test_points_skip_zeros_of_invariants():
    rep = reps.add_torus(reps.sl(2))
    first = GenericPoint((Fraction(0), Fraction(1)), True)
    points, fallback = PVAnalyzerService.test_points(
        rep, [first_coordinate(2)], first, make_rng(0, "puntos"), count=3, bound=3, max_retries=64
    )
    assert fallback
    assert len(points) == 3
    assert all(p[0] != 0 for p in points)


def test_classify_vector_plus_alternating_forms():
    rep = vector_plus_alt(3)
    report = PVAnalyzerService.classify(rep, [inv.bordered_pfaffian(3)], seed=1, points=4)
    assert report.prehomogeneous
    assert report.algebra_dim - report.isotropy_dim == report.space_dim
    assert report.qd1 and report.character_dim == 1
    assert report.regular is True
    assert report.declared_character_rank == 1
    (check,) = report.invariant_checks
    assert check.verified and check.vanishes_on_derived and check.vanishes_on_isotropy


def test_classify_without_invariants():
    report = PVAnalyzerService.classify(reps.add_torus(reps.sp(2)), [], seed=0)
    assert report.character_dim == 0 and not report.qd1
    assert report.regular is None
    assert report.invariant_checks == ()
    assert report.notes


def test_classify_is_deterministic():
    rep = reps.add_torus(reps.sym2(reps.sl(2)))
    declared = [inv.determinant(2, symmetric=True)]
    first = PVAnalyzerService.classify(rep, declared, seed=5, salt="det", points=3)
    second = PVAnalyzerService.classify(rep, declared, seed=5, salt="det", points=3)
    assert first == second


def scripted_samples(*points):
    """Reemplazo de sample_point que recorre `points` y luego repite el último."""
    queue = [tuple(Fraction(v) for v in p) for p in points]

    def sample(rng, dim, bound):
        return queue.pop(0) if len(queue) > 1 else queue[0]

    return sample


def test_points_give_up_when_invariants_keep_vanishing(monkeypatch):
    monkeypatch.setattr(analyzer_module, "sample_point", scripted_samples((0, 1)))
    rep = reps.add_torus(reps.sl(2))
    first = GenericPoint((Fraction(1), Fraction(0)), True)
    with pytest.raises(NotPrehomogeneousError):
        PVAnalyzerService.test_points(rep, [first_coordinate(2)], first, make_rng(0), count=3, bound=3, max_retries=2)


def test_classify_records_fewer_test_points(monkeypatch):
    monkeypatch.setattr(analyzer_module, "sample_point", scripted_samples((2, 1), (0, 1)))
    rep = reps.add_torus(reps.sl(2))
    report = PVAnalyzerService.classify(rep, [first_coordinate(2)], x_hint=[1, 0], points=3, max_retries=2)
    (check,) = report.invariant_checks
    assert check.points_used == 2
    assert "λ comprobado en 2 de 3 puntos" in report.notes


def test_regularity_uses_two_test_points(monkeypatch):
    seen = []
    original = PVAnalyzerService.hessian_regularity

    def recording(f, rep, x):
        seen.append(tuple(x))
        return original(f, rep, x)

    monkeypatch.setattr(PVAnalyzerService, "hessian_regularity", staticmethod(recording))
    report = PVAnalyzerService.classify(vector_plus_alt(3), [inv.bordered_pfaffian(3)], seed=2, points=4)
    assert report.regular is True
    assert len(seen) == 2 and seen[0] != seen[1]
