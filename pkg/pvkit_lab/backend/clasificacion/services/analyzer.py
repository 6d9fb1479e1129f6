"""
Criterios de prehomogeneidad a nivel de álgebra de Lie.

Un punto x es genérico si la aplicación X ↦ X·x es suryectiva (certificado por
rango exacto). El espacio de caracteres tiene dimensión dim g − dim([g,g] + g_x).
Un invariante relativo f cumple (X·f)(x) = λ(X)·f(x) con λ independiente de x.
"""
import logging
import zlib
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from clasificacion.exceptions import DimensionMismatchError, NotPrehomogeneousError, ZeroAtTestPointError
from clasificacion.models.Analysis_model import AnalysisReport, GenericPoint, InvariantCheck
from clasificacion.models.InvariantPolynomial_model import InvariantPolynomial
from clasificacion.models.MatrixRep_model import MatrixRep, Subalgebra
from clasificacion.models.RationalMatrix_model import RationalMatrix, Vector, as_vector
from clasificacion.services.linalg import (
    determinant,
    directional_jet,
    nullspace,
    rank,
    rank_of_vectors,
)
from clasificacion.services.representations import derived_subalgebra

logger = logging.getLogger(__name__)


def _setting(name: str, default):
    return getattr(settings, name, default) if settings.configured else default


def make_rng(seed: int, salt: str = "") -> np.random.Generator:
    """Generador determinista a partir de (semilla, crc32 de la sal)."""
    return np.random.default_rng([int(seed), zlib.crc32(salt.encode("utf-8"))])


def sample_point(rng: np.random.Generator, dim: int, bound: int) -> Vector:
    return tuple(Fraction(int(v)) for v in rng.integers(-bound, bound + 1, size=dim))


class PVAnalyzerService:

    @staticmethod
    def action_matrix(rep: MatrixRep, x: Sequence) -> RationalMatrix:
        """Matriz space_dim × algebra_dim cuyas columnas son X_i·x."""
        if len(x) != rep.space_dim:
            raise DimensionMismatchError(f"punto de longitud {len(x)} para V de dimensión {rep.space_dim}")
        x = as_vector(x)
        columns = [X.apply(x) for X in rep.basis]
        if not columns:
            return RationalMatrix.zeros(rep.space_dim, 0)
        return RationalMatrix.from_columns(columns)

    @staticmethod
    def is_generic(rep: MatrixRep, x: Sequence) -> bool:
        return rank(PVAnalyzerService.action_matrix(rep, x)) == rep.space_dim

    @staticmethod
    def find_generic_point(rep: MatrixRep, seed: int = 0, max_retries: Optional[int] = None,
                           hint: Optional[Sequence] = None, salt: str = "",
                           bound: Optional[int] = None) -> GenericPoint:
        max_retries = _setting("PVKIT_MAX_RETRIES", 64) if max_retries is None else max_retries
        bound = _setting("PVKIT_SAMPLE_BOUND", 3) if bound is None else bound
        attempts = 0
        if hint is not None:
            attempts += 1
            hint = as_vector(hint)
            if PVAnalyzerService.is_generic(rep, hint):
                return GenericPoint(hint, True, attempts, "hint")
            logger.warning("%s: el punto explícito no es genérico; se prueba al azar", rep.name)
        rng = make_rng(seed, salt)
        for _ in range(max_retries):
            attempts += 1
            x = sample_point(rng, rep.space_dim, bound)
            if PVAnalyzerService.is_generic(rep, x):
                return GenericPoint(x, True, attempts, "random")
            logger.debug("%s: intento %s no genérico", rep.name, attempts)
        raise NotPrehomogeneousError(
            f"{rep.name}: no se encontró un punto genérico en {attempts} intentos", attempts=attempts
        )

    @staticmethod
    def isotropy_algebra(rep: MatrixRep, point: GenericPoint) -> Subalgebra:
        return Subalgebra(rep, tuple(nullspace(PVAnalyzerService.action_matrix(rep, point.coordinates))))

    @staticmethod
    def character_space_dim(rep: MatrixRep, point: GenericPoint,
                            derived: Optional[Subalgebra] = None,
                            isotropy: Optional[Subalgebra] = None) -> int:
        derived = derived or derived_subalgebra(rep)
        isotropy = isotropy or PVAnalyzerService.isotropy_algebra(rep, point)
        vectors = list(derived.coefficient_basis) + list(isotropy.coefficient_basis)
        return rep.algebra_dim - rank_of_vectors(vectors, rep.algebra_dim)

    @staticmethod
    def character_at(rep: MatrixRep, f: InvariantPolynomial, x: Sequence) -> Vector:
        """λ_j = D_{X_j·x} f(x) / f(x)."""
        x = as_vector(x)
        value = f(x)
        if not value:
            raise ZeroAtTestPointError(f"{f.name} se anula en el punto de prueba", point=x)
        return tuple(directional_jet(f, x, X.apply(x)).d1 / value for X in rep.basis)

    @staticmethod
    def verify_relative_invariant(rep: MatrixRep, f: InvariantPolynomial, points: Sequence[Sequence],
                                  derived: Optional[Subalgebra] = None,
                                  isotropy: Optional[Subalgebra] = None) -> InvariantCheck:
        if f.arity != rep.space_dim:
            raise DimensionMismatchError(f"{f.name} tiene {f.arity} variables y V dimensión {rep.space_dim}")
        if not points:
            raise ZeroAtTestPointError("no hay puntos de prueba")
        characters = [PVAnalyzerService.character_at(rep, f, x) for x in points]
        reference = characters[0]
        consistent = all(c == reference for c in characters[1:])
        derived = derived or derived_subalgebra(rep)
        if isotropy is None:
            point = GenericPoint(as_vector(points[0]), True)
            isotropy = PVAnalyzerService.isotropy_algebra(rep, point)

        def vanishes(sub: Subalgebra) -> bool:
            return all(sum((a * b for a, b in zip(reference, v)), Fraction(0)) == 0 for v in sub.coefficient_basis)

        on_derived = vanishes(derived)
        on_isotropy = vanishes(isotropy)
        note = "" if consistent else "λ depende del punto"
        return InvariantCheck(
            name=f.name,
            degree=f.degree,
            verified=consistent and on_derived and on_isotropy,
            character=reference,
            points_used=len(points),
            vanishes_on_derived=on_derived,
            vanishes_on_isotropy=on_isotropy,
            note=note,
        )

    @staticmethod
    def hessian(f: InvariantPolynomial, x: Sequence) -> RationalMatrix:
        """H_ij = ½(D²_{e_i+e_j} − D²_{e_i} − D²_{e_j}) f(x)."""
        n = f.arity
        x = as_vector(x)
        units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        pure = [directional_jet(f, x, u).d2 for u in units]
        mapping = {}
        for i in range(n):
            mapping[(i, i)] = pure[i]
            for j in range(i + 1, n):
                both = tuple(1 if k in (i, j) else 0 for k in range(n))
                value = (directional_jet(f, x, both).d2 - pure[i] - pure[j]) / 2
                if value:
                    mapping[(i, j)] = value
                    mapping[(j, i)] = value
        return RationalMatrix.from_mapping(n, n, mapping)

    @staticmethod
    def hessian_regularity(f: InvariantPolynomial, rep: MatrixRep, x: Sequence) -> bool:
        if f.arity != rep.space_dim:
            raise DimensionMismatchError(f"{f.name} tiene {f.arity} variables y V dimensión {rep.space_dim}")
        if not f(as_vector(x)):
            raise ZeroAtTestPointError(f"{f.name} se anula en el punto de prueba", point=tuple(x))
        return determinant(PVAnalyzerService.hessian(f, x)) != 0

    @staticmethod
    def test_points(rep: MatrixRep, invariants: Sequence[InvariantPolynomial], first: GenericPoint,
                    rng: np.random.Generator, count: int, bound: int,
                    max_retries: int) -> Tuple[List[Vector], bool]:
        """
        Puntos genéricos certificados donde ningún invariante declarado se anula.
        Devuelve también si hubo que descartar el punto inicial. Si el muestreo se
        agota antes de reunir min(count, 2) puntos lanza NotPrehomogeneousError;
        con menos de count puntos solo avisa.
        """
        points: List[Vector] = []
        fallback = False
        if all(f(first.coordinates) for f in invariants):
            points.append(first.coordinates)
        else:
            fallback = True
            logger.info("%s: un invariante se anula en el punto genérico; se usa otro", rep.name)
        misses = 0
        while len(points) < count:
            x = sample_point(rng, rep.space_dim, bound)
            if all(f(x) for f in invariants) and PVAnalyzerService.is_generic(rep, x):
                points.append(x)
                continue
            misses += 1
            if misses > max_retries * count:
                break
        if len(points) < min(count, 2):
            raise NotPrehomogeneousError(
                f"{rep.name}: {len(points)} puntos de prueba donde los invariantes no se anulan, se piden {count}",
                attempts=misses,
            )
        if len(points) < count:
            logger.warning("%s: solo %s de %s puntos de prueba", rep.name, len(points), count)
        return points, fallback

    @staticmethod
    def classify(rep: MatrixRep, declared_invariants: Iterable[InvariantPolynomial],
                 x_hint: Optional[Sequence] = None, seed: int = 0, salt: str = "",
                 max_retries: Optional[int] = None, points: Optional[int] = None,
                 bound: Optional[int] = None) -> AnalysisReport:
        invariants = list(declared_invariants)
        max_retries = _setting("PVKIT_MAX_RETRIES", 64) if max_retries is None else max_retries
        count = _setting("PVKIT_INVARIANT_POINTS", 10) if points is None else points
        bound = _setting("PVKIT_SAMPLE_BOUND", 3) if bound is None else bound

        point = PVAnalyzerService.find_generic_point(rep, seed, max_retries, x_hint, salt, bound)
        isotropy = PVAnalyzerService.isotropy_algebra(rep, point)
        derived = derived_subalgebra(rep)
        character_dim = PVAnalyzerService.character_space_dim(rep, point, derived, isotropy)
        notes = []
        if point.source == "random" and x_hint is not None:
            notes.append("el punto explícito no resultó genérico; se usó uno al azar")
        if character_dim == 0:
            notes.append("sin invariante relativo no trivial")

        checks: List[InvariantCheck] = []
        fallback = False
        regular = None
        if invariants:
            rng = make_rng(seed, salt + ":puntos")
            test, fallback = PVAnalyzerService.test_points(rep, invariants, point, rng, count, bound, max_retries)
            if len(test) < count:
                notes.append(f"λ comprobado en {len(test)} de {count} puntos")
            base = GenericPoint(test[0], True)
            base_isotropy = isotropy if test[0] == point.coordinates else PVAnalyzerService.isotropy_algebra(rep, base)
            for f in invariants:
                checks.append(PVAnalyzerService.verify_relative_invariant(rep, f, test, derived, base_isotropy))
            if character_dim == 1:
                # det Hess f o se anula idénticamente o no se anula en ningún punto genérico
                values = [PVAnalyzerService.hessian_regularity(invariants[0], rep, x) for x in test[:2]]
                regular = any(values)
                if len(set(values)) > 1:
                    notes.append("det Hess f se anula en un punto de prueba pero no en otro")
        verified = [c.character for c in checks if c.verified]
        declared_rank = rank_of_vectors(verified, rep.algebra_dim) if verified else 0
        logger.debug("%s: dim caracteres %s, rango declarado %s", rep.name, character_dim, declared_rank)
        return AnalysisReport(
            prehomogeneous=point.certified,
            algebra_dim=rep.algebra_dim,
            space_dim=rep.space_dim,
            isotropy_dim=isotropy.dim,
            character_dim=character_dim,
            invariant_checks=tuple(checks),
            regular=regular,
            point=point,
            declared_character_rank=declared_rank,
            fallback_used=fallback,
            notes=tuple(notes),
        )


def action_matrix(rep: MatrixRep, x: Sequence) -> RationalMatrix:
    return PVAnalyzerService.action_matrix(rep, x)


def find_generic_point(rep: MatrixRep, seed: int = 0, max_retries: Optional[int] = None,
                       hint: Optional[Sequence] = None, salt: str = "") -> GenericPoint:
    return PVAnalyzerService.find_generic_point(rep, seed, max_retries, hint, salt)


def isotropy_algebra(rep: MatrixRep, point: GenericPoint) -> Subalgebra:
    return PVAnalyzerService.isotropy_algebra(rep, point)


def character_space_dim(rep: MatrixRep, point: GenericPoint) -> int:
    return PVAnalyzerService.character_space_dim(rep, point)


def verify_relative_invariant(rep: MatrixRep, f: InvariantPolynomial, points: Sequence[Sequence]) -> InvariantCheck:
    return PVAnalyzerService.verify_relative_invariant(rep, f, points)


def hessian_regularity(f: InvariantPolynomial, rep: MatrixRep, x: Sequence) -> bool:
    return PVAnalyzerService.hessian_regularity(f, rep, x)


def classify(rep: MatrixRep, declared_invariants: Iterable[InvariantPolynomial],
             x_hint: Optional[Sequence] = None, seed: int = 0, salt: str = "") -> AnalysisReport:
    return PVAnalyzerService.classify(rep, declared_invariants, x_hint, seed, salt)
