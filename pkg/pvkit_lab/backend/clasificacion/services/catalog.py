"""
Catálogo de la clasificación: filas de la tabla de irreducibles (T2.*), de la
tabla de no irreducibles (T3.*) y los casos negativos (NEG-*).

Cada entrada se construye en la realización concreta que usa el análisis caso
por caso (equivalencia geométrica) y se verifica con el analizador. Los
parámetros por defecto son las dos instancias admisibles más chicas.
"""
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import django
from django.conf import settings

from clasificacion.exceptions import (
    NotPrehomogeneousError,
    ParameterOutOfRangeError,
    PVKitError,
    UnknownEntryError,
    UnsupportedRepresentationError,
)
from clasificacion.models.Analysis_model import AnalysisReport
from clasificacion.models.Catalog_model import CatalogEntry, ExpectedFlags, Params, RunSummary, VerificationReport
from clasificacion.models.MatrixRep_model import MatrixRep
from clasificacion.services import invariants as inv
from clasificacion.services import representations as reps
from clasificacion.services.analyzer import PVAnalyzerService
from clasificacion.services.grading import ParabolicGradingService
from clasificacion.services.root_systems import weighted_diagram

logger = logging.getLogger(__name__)

GROUPS = ("table2", "table3", "negatives")
FILTERS = GROUPS + ("all",)


# ---------- ayudas de construcción ----------

def _sl_pair(n: int, m: int) -> Tuple[MatrixRep, MatrixRep]:
    """sl(n) y sl(m) con etiquetas distintas aunque n = m."""
    second = reps.sl(m, label=f"sl({m})'" if m == n else None)
    return reps.sl(n), second


def _pair_with_torus(first: MatrixRep, second: MatrixRep, shared: str) -> MatrixRep:
    return reps.add_torus(reps.direct_sum_shared([first, second], [shared]), k=2)


def _unit(n: int, k: int) -> List[int]:
    return [1 if i == k else 0 for i in range(n)]


def _identity_block(rows: int, cols: int) -> List[int]:
    """Matriz rows×cols con unos en la diagonal, por filas."""
    return [1 if i == j else 0 for i in range(rows) for j in range(cols)]


def _j_block(n: int) -> List[int]:
    """Triángulo superior de [[J, 0], [0, 0]] ∈ AS(n), J de tamaño 2⌊n/2⌋."""
    p = n // 2
    return [1 if i < p and j == i + p else 0 for i, j in combinations(range(n), 2)]


def _fixed(flags: ExpectedFlags):
    return lambda **params: flags


def _always_admissible(**params) -> Optional[str]:
    return None


def _at_least(name: str, minimum: int):
    def check(**params) -> Optional[str]:
        if params[name] < minimum:
            return f"{name} debe ser ≥ {minimum}"
        return None

    return check


def _qd1(regular: bool, parabolic=None, commutative=None) -> ExpectedFlags:
    return ExpectedFlags(True, 1, regular, parabolic, commutative)


def _negative(character_dim: int = 0) -> ExpectedFlags:
    return ExpectedFlags(False, character_dim)


# ---------- irreducibles ----------

def _so_parabolic(n: int):
    if n == 4:
        return ("A", 3, (2,))
    if n % 2:
        return ("B", (n + 1) // 2, (1,))
    return ("D", (n + 2) // 2, (1,))


def _table2() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            id="T2.1", group="table2", title="SO(n) × C*", case="irreducible",
            realization="so(n) ⊕ C sobre C^n", parameters=("n",), defaults=({"n": 3}, {"n": 4}),
            build=lambda n: reps.add_torus(reps.so(n)),
            invariants=lambda n: [inv.sum_of_squares(n)],
            expected=lambda n: _qd1(True, _so_parabolic(n), True),
            admissible=_at_least("n", 3), mf_rank="2",
        ),
        CatalogEntry(
            id="T2.2", group="table2", title="S²(SL(n)) × C*", case="irreducible",
            realization="gl(n) sobre Sym(n), s ↦ Xs + sXᵀ", parameters=("n",), defaults=({"n": 2}, {"n": 3}),
            build=lambda n: reps.add_torus(reps.sym2(reps.sl(n))),
            invariants=lambda n: [inv.determinant(n, symmetric=True)],
            expected=lambda n: _qd1(True, ("C", n, (n,)), True),
            admissible=_at_least("n", 2), mf_rank="n",
        ),
        CatalogEntry(
            id="T2.3", group="table2", title="Λ²(SL(2p)) × C*", case="irreducible",
            realization="gl(2p) sobre AS(2p), x ↦ Xx + xXᵀ", parameters=("p",), defaults=({"p": 2}, {"p": 3}),
            build=lambda p: reps.add_torus(reps.alt2(reps.sl(2 * p))),
            invariants=lambda p: [inv.pfaffian(2 * p)],
            expected=lambda p: _qd1(True, ("D", 2 * p, (2 * p,)), True),
            admissible=_at_least("p", 2), mf_rank="p",
        ),
        CatalogEntry(
            id="T2.4", group="table2", title="SL(n)* ⊗ SL(n) × C*", case="irreducible",
            realization="sl(n) ⊕ sl(n) ⊕ C sobre M_n, x ↦ Ax + xBᵀ", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: reps.add_torus(reps.tensor(*_sl_pair(n, n))),
            invariants=lambda n: [inv.determinant(n)],
            expected=lambda n: _qd1(True, ("A", 2 * n - 1, (n,)), True),
            admissible=_at_least("n", 2), mf_rank="n",
        ),
        CatalogEntry(
            id="T2.5", group="table2", title="E6 × C* (dim 27)", case="irreducible",
            realization="estabilizador de la cúbica de Freudenthal ⊕ C sobre Herm₃(O)", parameters=(),
            defaults=({},),
            build=lambda: reps.add_torus(reps.e6_rep()),
            invariants=lambda: [inv.freudenthal_cubic()],
            expected=_fixed(_qd1(True, ("E", 7, (7,)), True)),
            admissible=_always_admissible, mf_rank="3",
        ),
        CatalogEntry(
            id="T2.6", group="table2", title="SL(2) ⊗ Sp(n) × C*", case="irreducible",
            realization="sp(n) ⊕ sl(2) ⊕ C sobre M_{2n,2}, X ↦ AX + XBᵀ", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: reps.add_torus(reps.tensor(reps.sp(n), reps.sl(2))),
            invariants=lambda n: [inv.pf_gram(n)],
            expected=lambda n: _qd1(True, ("C", n + 2, (2,)), False),
            admissible=_at_least("n", 2), mf_rank="3",
        ),
        CatalogEntry(
            id="T2.7", group="table2", title="SL(4) × Sp(2) × C*", case="irreducible",
            realization="sl(4) ⊕ sp(2) ⊕ C sobre M_4", parameters=(), defaults=({},),
            build=lambda: reps.add_torus(reps.tensor(reps.sl(4), reps.sp(2))),
            invariants=lambda: [inv.determinant(4)],
            expected=_fixed(_qd1(True, ("C", 6, (4,)), False)),
            admissible=_always_admissible, mf_rank="6",
        ),
        CatalogEntry(
            id="T2.8", group="table2", title="Spin(7) × C*", case="irreducible",
            realization="spin(7) ⊂ so(8) ⊕ C sobre C^8", parameters=(), defaults=({},),
            build=lambda: reps.add_torus(reps.spin_rep(7)),
            invariants=lambda: [inv.sum_of_squares(8)],
            expected=_fixed(_qd1(True, ("F", 4, (4,)), False)),
            admissible=_always_admissible, mf_rank="2",
        ),
        CatalogEntry(
            id="T2.9", group="table2", title="Spin(9) × C*", case="irreducible",
            realization="spin(9) ⊕ C sobre C^16", parameters=(), defaults=({},),
            build=lambda: reps.add_torus(reps.spin_rep(9)),
            invariants=lambda: [inv.sum_of_squares(16)],
            expected=_fixed(_qd1(True)),
            admissible=_always_admissible, mf_rank="3",
        ),
        CatalogEntry(
            id="T2.10", group="table2", title="G2 × C* (dim 7)", case="irreducible",
            realization="derivaciones de O ⊂ so(7) ⊕ C sobre Im O", parameters=(), defaults=({},),
            build=lambda: reps.add_torus(reps.g2_rep()),
            invariants=lambda: [inv.sum_of_squares(7)],
            expected=_fixed(_qd1(True)),
            admissible=_always_admissible, mf_rank="2",
        ),
    ]


# ---------- dos sumandos ----------

def _vector_plus_alt(n: int, dual: bool) -> MatrixRep:
    sl_n = reps.sl(n)
    first = reps.dual(sl_n) if dual else sl_n
    return _pair_with_torus(first, reps.alt2(sl_n), sl_n.name)


def _vector_plus_matrix(n: int, m: int, dual: bool) -> MatrixRep:
    sl_n, sl_m = _sl_pair(n, m)
    first = reps.dual(sl_n) if dual else sl_n
    return _pair_with_torus(first, reps.tensor(sl_n, sl_m), sl_n.name)


def _even(name: str, minimum: int):
    def check(**params) -> Optional[str]:
        value = params[name]
        if value < minimum or value % 2:
            return f"{name} debe ser par y ≥ {minimum}"
        return None

    return check


def _odd(name: str, minimum: int):
    def check(**params) -> Optional[str]:
        value = params[name]
        if value < minimum or value % 2 == 0:
            return f"{name} debe ser impar y ≥ {minimum}"
        return None

    return check


def _exceptional_alt(n: int):
    return {5: ("E", 6, (1, 2)), 6: ("E", 7, (1, 2)), 7: ("E", 8, (1, 2))}.get(n)


def _vector_matrix_parabolic(n: int, square: bool):
    if square:
        return {3: ("D", 6, (3, 5)), 4: ("E", 8, (2, 5))}.get(n)
    return {3: ("D", 5, (2, 4)), 4: ("E", 7, (2, 5))}.get(n)


def _sl2_chain(n: int) -> MatrixRep:
    """sl(n) ⊗ sl(2) sobre M_{n,2}; para n = 2 el primer factor se marca sl(2)'."""
    return reps.tensor(reps.sl(n, label="sl(2)'" if n == 2 else None), reps.sl(2))


def _table3() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            id="T3.1", group="table3", title="(SL(n)* ⊕_{SL(n)} SL(n)) × (C*)²", case="dos sumandos",
            realization="sl(n) ⊕ C² sobre M_{1,n} ⊕ M_{n,1}", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: _pair_with_torus(reps.dual(reps.sl(n)), reps.sl(n), f"sl({n})"),
            invariants=lambda n: [inv.pair_dot(n)],
            expected=lambda n: _qd1(True, ("A", n + 1, (1, n + 1))),
            admissible=_at_least("n", 2), mf_rank="3",
        ),
        CatalogEntry(
            id="T3.2a", group="table3", title="(SL(n) ⊕_{SL(n)} Λ²(SL(n))) × (C*)², n par",
            case="dos sumandos", realization="sl(n) ⊕ C² sobre C^n ⊕ AS(n)", parameters=("n",),
            defaults=({"n": 4}, {"n": 6}),
            build=lambda n: _vector_plus_alt(n, dual=False),
            invariants=lambda n: [inv.embed(inv.pfaffian(n), n, n + n * (n - 1) // 2)],
            expected=lambda n: _qd1(False, _exceptional_alt(n)),
            admissible=_even("n", 4), mf_rank="n",
        ),
        CatalogEntry(
            id="T3.2b", group="table3", title="(SL(n) ⊕_{SL(n)} Λ²(SL(n))) × (C*)², n impar",
            case="dos sumandos", realization="gl(n) ⊕ C sobre C^n ⊕ AS(n)", parameters=("n",),
            defaults=({"n": 5}, {"n": 7}),
            build=lambda n: _vector_plus_alt(n, dual=False),
            invariants=lambda n: [inv.bordered_pfaffian(n)],
            expected=lambda n: _qd1(True, _exceptional_alt(n)),
            admissible=_odd("n", 5),
            x_hint=lambda n: _unit(n, n - 1) + _j_block(n), mf_rank="n",
        ),
        CatalogEntry(
            id="T3.3", group="table3", title="(SL(n)* ⊕_{SL(n)} Λ²(SL(n))) × (C*)², n par",
            case="dos sumandos", realization="gl(n) ⊕ C sobre M_{1,n} ⊕ AS(n)", parameters=("n",),
            defaults=({"n": 4}, {"n": 6}),
            build=lambda n: _vector_plus_alt(n, dual=True),
            invariants=lambda n: [inv.embed(inv.pfaffian(n), n, n + n * (n - 1) // 2)],
            expected=lambda n: _qd1(False, ("D", n + 1, (1, n + 1))),
            admissible=_even("n", 4), mf_rank="n",
        ),
        CatalogEntry(
            id="T3.4a", group="table3", title="(SL(n) ⊕_{SL(n)} (SL(n) ⊗ SL(n))) × (C*)²",
            case="dos sumandos", realization="gl(n) × gl(n) sobre M_{n,1} ⊕ M_n", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: _vector_plus_matrix(n, n, dual=False),
            invariants=lambda n: [inv.embed(inv.determinant(n), n, n + n * n)],
            expected=lambda n: _qd1(False, _vector_matrix_parabolic(n, square=True)),
            admissible=_at_least("n", 2),
            x_hint=lambda n: _unit(n, 0) + _identity_block(n, n),
        ),
        CatalogEntry(
            id="T3.4b", group="table3", title="(SL(n) ⊕_{SL(n)} (SL(n) ⊗ SL(n−1))) × (C*)²",
            case="dos sumandos", realization="gl(n) × gl(n−1) sobre M_{n,1} ⊕ M_{n,n−1}", parameters=("n",),
            defaults=({"n": 3}, {"n": 4}),
            build=lambda n: _vector_plus_matrix(n, n - 1, dual=False),
            invariants=lambda n: [inv.det_augmented(n)],
            expected=lambda n: _qd1(True, _vector_matrix_parabolic(n, square=False)),
            admissible=_at_least("n", 3),
            x_hint=lambda n: _unit(n, n - 1) + _identity_block(n, n - 1),
        ),
        CatalogEntry(
            id="T3.5", group="table3", title="(SL(n)* ⊕_{SL(n)} (SL(n) ⊗ SL(n))) × (C*)²",
            case="dos sumandos", realization="gl(n) × gl(n) sobre M_{1,n} ⊕ M_n", parameters=("n",),
            defaults=({"n": 3}, {"n": 4}),
            build=lambda n: _vector_plus_matrix(n, n, dual=True),
            invariants=lambda n: [inv.embed(inv.determinant(n), n, n + n * n)],
            expected=lambda n: _qd1(False, ("A", 2 * n, (1, n + 1))),
            admissible=_at_least("n", 3), mf_rank="2n",
        ),
        CatalogEntry(
            id="T3.6", group="table3", title="(SL(2) ⊕_{SL(2)} (SL(2) ⊗ Sp(n))) × (C*)²",
            case="dos sumandos", realization="C × gl(2) × sp(n) sobre M_{1,2} ⊕ M_{2n,2}", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: _pair_with_torus(reps.sl(2), reps.tensor(reps.sp(n), reps.sl(2)), "sl(2)"),
            invariants=lambda n: [inv.embed(inv.pf_gram(n), 2, 2 + 4 * n)],
            expected=lambda n: _qd1(False, ("C", n + 3, (1, 3))),
            admissible=_at_least("n", 2),
            x_hint=lambda n: [1, 0] + [1 if k in (0, 2 * n + 1) else 0 for k in range(4 * n)],
            mf_rank="3",
        ),
        CatalogEntry(
            id="T3.7", group="table3", title="(SL(2) ⊗ SL(2)) ⊕_{SL(2)} (SL(2) ⊗ SL(m)) × (C*)², m > 2",
            case="dos sumandos", realization="gl(2) × sl(2) × gl(m) sobre M_2 ⊕ M_{2,m}", parameters=("m",),
            defaults=({"m": 3}, {"m": 4}),
            build=lambda m: _pair_with_torus(_sl2_chain(2), reps.tensor(reps.sl(2), reps.sl(m)), "sl(2)"),
            invariants=lambda m: [inv.embed(inv.determinant(2), 0, 4 + 2 * m)],
            expected=lambda m: _qd1(False, ("A", m + 3, (2, 4))),
            admissible=_at_least("m", 3), mf_rank="5",
        ),
        CatalogEntry(
            id="T3.8", group="table3", title="(SL(n) ⊗ SL(2)) ⊕_{SL(2)} (SL(2) ⊗ Sp(m)) × (C*)², n > 2",
            case="dos sumandos", realization="gl(n) × gl(2) × sp(m) sobre M_{n,2} ⊕ M_{2m,2}",
            parameters=("n", "m"), defaults=({"n": 3, "m": 2}, {"n": 3, "m": 3}),
            build=lambda n, m: _pair_with_torus(_sl2_chain(n), reps.tensor(reps.sp(m), reps.sl(2)), "sl(2)"),
            invariants=lambda n, m: [inv.embed(inv.pf_gram(m), 2 * n, 2 * n + 4 * m)],
            expected=lambda n, m: _qd1(False, ("C", n + m + 2, (n, n + 2))),
            admissible=lambda n, m: _at_least("n", 3)(n=n) or _at_least("m", 2)(m=m), mf_rank="6",
        ),
        CatalogEntry(
            id="T3.9", group="table3", title="(Sp(n) ⊕_{Sp(n)} Sp(n)) × (C*)²", case="dos sumandos",
            realization="sp(n) ⊕ C² sobre C^{2n} ⊕ C^{2n}", parameters=("n",),
            defaults=({"n": 2}, {"n": 3}),
            build=lambda n: _pair_with_torus(reps.sp(n), reps.sp(n), f"sp({n})"),
            invariants=lambda n: [inv.symplectic_pair(n)],
            expected=lambda n: _qd1(True),
            admissible=_at_least("n", 2),
            x_hint=lambda n: _unit(2 * n, 0) + _unit(2 * n, n), mf_rank="4",
        ),
    ]


# ---------- casos negativos ----------

def _differ(**params) -> Optional[str]:
    if params["n"] < 2 or params["m"] < 2:
        return "n y m deben ser ≥ 2"
    if params["n"] == params["m"]:
        return "se requiere n ≠ m"
    return None


def _outside_square(**params) -> Optional[str]:
    n, m = params["n"], params["m"]
    if n < 2 or m < 2:
        return "n y m deben ser ≥ 2"
    if m - 1 <= n - 1 <= m:
        return "se requiere n < m o n > m + 1"
    return None


def _vector_matrix_hint(n: int, m: int) -> List[int]:
    if n < m:
        return _unit(n, 0) + _identity_block(n, m)
    return _unit(n, n - 1) + _identity_block(n, m)


def _negatives() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            id="NEG-4.1.3", group="negatives", title="Sp(n) × C*", case="irreducible",
            realization="sp(n) ⊕ C sobre C^{2n}", parameters=("n",), defaults=({"n": 2}, {"n": 3}),
            build=lambda n: reps.add_torus(reps.sp(n)),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_at_least("n", 2),
        ),
        CatalogEntry(
            id="NEG-4.1.5", group="negatives", title="Λ²(SL(n)) × C*, n impar", case="irreducible",
            realization="gl(n) sobre AS(n)", parameters=("n",), defaults=({"n": 5}, {"n": 7}),
            build=lambda n: reps.add_torus(reps.alt2(reps.sl(n))),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_odd("n", 5),
        ),
        CatalogEntry(
            id="NEG-4.1.6", group="negatives", title="SL(n) ⊗ SL(m)* × C*, n ≠ m", case="irreducible",
            realization="sl(n) ⊕ sl(m) ⊕ C sobre M_{n,m}", parameters=("n", "m"),
            defaults=({"n": 2, "m": 3}, {"n": 3, "m": 2}),
            build=lambda n, m: reps.add_torus(reps.tensor(*_sl_pair(n, m))),
            invariants=lambda n, m: [],
            expected=lambda n, m: _negative(),
            admissible=_differ,
        ),
        CatalogEntry(
            id="NEG-4.1.8", group="negatives", title="SL(3) ⊗ Sp(n) × C*", case="irreducible",
            realization="sl(3) ⊕ sp(n) ⊕ C sobre M_{3,2n}", parameters=("n",), defaults=({"n": 2}, {"n": 3}),
            build=lambda n: reps.add_torus(reps.tensor(reps.sl(3), reps.sp(n))),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_at_least("n", 2),
        ),
        CatalogEntry(
            id="NEG-4.1.9", group="negatives", title="SL(n) ⊗ Sp(2) × C*, n > 4", case="irreducible",
            realization="sl(n) ⊕ sp(2) ⊕ C sobre M_{n,4}", parameters=("n",), defaults=({"n": 5}, {"n": 6}),
            build=lambda n: reps.add_torus(reps.tensor(reps.sl(n), reps.sp(2))),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_at_least("n", 5),
        ),
        CatalogEntry(
            id="NEG-4.1.12", group="negatives", title="Spin(10) × C* (semiespinorial, dim 16)",
            case="irreducible", realization="so(10) ⊕ C sobre Λ^par(C^5)", parameters=(), defaults=({},),
            build=lambda: reps.add_torus(reps.spin_rep(10)),
            invariants=lambda: [],
            expected=_fixed(_negative()),
            admissible=_always_admissible, requires="spin10",
        ),
        CatalogEntry(
            id="NEG-4.2.1", group="negatives", title="(SL(n) ⊕_{SL(n)} SL(n)) × (C*)², n > 2",
            case="dos sumandos", realization="sl(n) ⊕ C² sobre M_{n,2}", parameters=("n",),
            defaults=({"n": 3}, {"n": 4}),
            build=lambda n: _pair_with_torus(reps.sl(n), reps.sl(n), f"sl({n})"),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_at_least("n", 3),
            x_hint=lambda n: _unit(n, 0) + _unit(n, 1),
        ),
        CatalogEntry(
            id="NEG-4.2.4", group="negatives", title="(SL(n)* ⊕_{SL(n)} Λ²(SL(n))) × (C*)², n impar",
            case="dos sumandos", realization="gl(n) ⊕ C sobre M_{1,n} ⊕ AS(n)", parameters=("n",),
            defaults=({"n": 5}, {"n": 7}),
            build=lambda n: _vector_plus_alt(n, dual=True),
            invariants=lambda n: [],
            expected=lambda n: _negative(),
            admissible=_odd("n", 5),
            x_hint=lambda n: _unit(n, 0) + _j_block(n),
        ),
        CatalogEntry(
            id="NEG-4.2.5", group="negatives",
            title="(SL(n) ⊕_{SL(n)} (SL(n) ⊗ SL(m))) × (C*)², n < m o n > m + 1", case="dos sumandos",
            realization="gl(n) × gl(m) sobre M_{n,1} ⊕ M_{n,m}", parameters=("n", "m"),
            defaults=({"n": 2, "m": 3}, {"n": 4, "m": 2}),
            build=lambda n, m: _vector_plus_matrix(n, m, dual=False),
            invariants=lambda n, m: [],
            expected=lambda n, m: _negative(),
            admissible=_outside_square,
            x_hint=_vector_matrix_hint,
        ),
        CatalogEntry(
            id="NEG-4.2.8b", group="negatives", title="(SL(2) ⊗ SL(2)) ⊕_{SL(2)} (SL(2) ⊗ SL(2)) × (C*)²",
            case="dos sumandos", realization="gl(2) × sl(2) × gl(2) sobre M_2 ⊕ M_2", parameters=("n", "m"),
            defaults=({"n": 2, "m": 2},),
            build=lambda n, m: _pair_with_torus(
                _sl2_chain(2), reps.tensor(reps.sl(2), reps.sl(2, label="sl(2)''")), "sl(2)"
            ),
            invariants=lambda n, m: [inv.embed(inv.determinant(2), 0, 8), inv.embed(inv.determinant(2), 4, 8)],
            expected=lambda n, m: _negative(2),
            admissible=lambda n, m: None if n == m == 2 else "el caso solo existe para n = m = 2",
        ),
        CatalogEntry(
            id="NEG-4.2.9b", group="negatives",
            title="(SL(2) ⊗ SL(2)) ⊕_{SL(2)} (SL(2) ⊗ Sp(m)) × (C*)²", case="dos sumandos",
            realization="gl(2) × gl(2) × sp(m) sobre M_2 ⊕ M_{2m,2}", parameters=("m",),
            defaults=({"m": 2}, {"m": 3}),
            build=lambda m: _pair_with_torus(_sl2_chain(2), reps.tensor(reps.sp(m), reps.sl(2)), "sl(2)"),
            invariants=lambda m: [
                inv.embed(inv.determinant(2), 0, 4 + 4 * m),
                inv.embed(inv.pf_gram(m), 4, 4 + 4 * m),
            ],
            expected=lambda m: _negative(2),
            admissible=_at_least("m", 2),
        ),
        CatalogEntry(
            id="NEG-4.2.10", group="negatives",
            title="(Sp(n) ⊗ SL(2)) ⊕_{SL(2)} (SL(2) ⊗ Sp(m)) × (C*)²", case="dos sumandos",
            realization="sp(n) × gl(2) × sp(m) × C sobre M_{2n,2} ⊕ M_{2m,2}", parameters=("n", "m"),
            defaults=({"n": 2, "m": 2}, {"n": 2, "m": 3}),
            build=lambda n, m: _pair_with_torus(
                reps.tensor(reps.sp(n), reps.sl(2)),
                reps.tensor(reps.sp(m, label=f"sp({m})'"), reps.sl(2)),
                "sl(2)",
            ),
            invariants=lambda n, m: [
                inv.embed(inv.pf_gram(n), 0, 4 * n + 4 * m),
                inv.embed(inv.pf_gram(m), 4 * n, 4 * n + 4 * m),
            ],
            expected=lambda n, m: _negative(2),
            admissible=lambda n, m: _at_least("n", 2)(n=n) or _at_least("m", 2)(m=m),
        ),
        CatalogEntry(
            id="NEG-4.2.12", group="negatives", title="(Spin(8) ⊕_{Spin(8)} SO(8)) × (C*)²",
            case="dos sumandos", realization="so(8) ⊕ C² sobre C^8 ⊕ S^8 (natural y semiespinorial)",
            parameters=(), defaults=({},),
            build=lambda: _pair_with_torus(reps.so(8), reps.spin_rep(8, label="so(8)"), "so(8)"),
            invariants=lambda: [
                inv.embed(inv.sum_of_squares(8), 0, 16),
                inv.embed(inv.sum_of_squares(8), 8, 16),
            ],
            expected=_fixed(_negative(2)),
            admissible=_always_admissible,
        ),
    ]


# ---------- servicio ----------

class CatalogService:

    @staticmethod
    @lru_cache(maxsize=None)
    def catalog() -> Tuple[CatalogEntry, ...]:
        return tuple(_table2() + _table3() + _negatives())

    @staticmethod
    def get_entry(entry_id: str) -> CatalogEntry:
        for entry in CatalogService.catalog():
            if entry.id == entry_id:
                return entry
        raise UnknownEntryError(f"entrada desconocida: {entry_id!r}")

    @staticmethod
    def resolve_parameters(entry: CatalogEntry, parameters: Optional[Params]) -> Params:
        """Completa con la primera instancia por defecto y valida el rango."""
        given = dict(parameters or {})
        unknown = sorted(set(given) - set(entry.parameters))
        if unknown:
            raise ParameterOutOfRangeError(f"{entry.id} no tiene parámetros {unknown}")
        resolved = {**entry.defaults[0], **given}
        for name, value in resolved.items():
            if not isinstance(value, int) or isinstance(value, bool):
                raise ParameterOutOfRangeError(f"{entry.id}: {name} debe ser entero")
        message = entry.admissible(**resolved)
        if message:
            raise ParameterOutOfRangeError(f"{entry.id}: {message}")
        return resolved

    @staticmethod
    def resolve_seed(seed: Optional[int]) -> int:
        seed = getattr(settings, "PVKIT_SEED", 0) if seed is None else seed
        if seed < 0:
            raise ParameterOutOfRangeError("la semilla debe ser ≥ 0")
        return seed

    @staticmethod
    def salt(entry: CatalogEntry, parameters: Params) -> str:
        return entry.id + "|" + ",".join(f"{k}={v}" for k, v in sorted(parameters.items()))

    @staticmethod
    def run(entry_id: str, parameters: Optional[Params] = None, seed: Optional[int] = None) -> VerificationReport:
        entry = CatalogService.get_entry(entry_id)
        params = CatalogService.resolve_parameters(entry, parameters)
        seed = CatalogService.resolve_seed(seed)
        base = {"entry_id": entry.id, "parameters": params, "seed": seed, "realization": entry.realization}

        if entry.requires == "spin10" and not getattr(settings, "PVKIT_ENABLE_SPIN10", True):
            return VerificationReport(
                status=VerificationReport.UNSUPPORTED, message="spin(10) deshabilitado (PVKIT_ENABLE_SPIN10)", **base
            )

        start = time.perf_counter()
        try:
            rep = entry.build(**params)
            declared = entry.invariants(**params)
            hint = entry.x_hint(**params) if entry.x_hint else None
            analysis = PVAnalyzerService.classify(
                rep, declared, x_hint=hint, seed=seed, salt=CatalogService.salt(entry, params)
            )
        except NotPrehomogeneousError as exc:
            logger.info("%s %s: sin punto genérico tras %s intentos", entry.id, params, exc.attempts)
            return VerificationReport(
                status=VerificationReport.INCONCLUSIVE, message=str(exc),
                elapsed=time.perf_counter() - start, **base,
            )
        except UnsupportedRepresentationError as exc:
            return VerificationReport(
                status=VerificationReport.UNSUPPORTED, message=str(exc),
                elapsed=time.perf_counter() - start, **base,
            )
        except Exception as exc:
            logger.exception("%s %s: error inesperado", entry.id, params)
            kind = "" if isinstance(exc, PVKitError) else f"{type(exc).__name__}: "
            return VerificationReport(
                status=VerificationReport.ERROR, message=f"{kind}{exc}",
                elapsed=time.perf_counter() - start, **base,
            )

        expected = entry.expected(**params)
        diff, parabolic = CatalogService.compare(expected, rep, analysis)
        status = VerificationReport.PASS if not diff else VerificationReport.FAIL
        elapsed = time.perf_counter() - start
        logger.info("%s %s: %s (%.2fs)", entry.id, params, status, elapsed)
        return VerificationReport(
            status=status,
            algebra_dim=analysis.algebra_dim,
            space_dim=analysis.space_dim,
            isotropy_dim=analysis.isotropy_dim,
            character_dim=analysis.character_dim,
            qd1=analysis.qd1,
            regular=analysis.regular,
            invariants=analysis.invariant_checks,
            parabolic=parabolic,
            diff=tuple(diff),
            message="; ".join(analysis.notes),
            elapsed=elapsed,
            **base,
        )

    @staticmethod
    def compare(expected: ExpectedFlags, rep: MatrixRep, analysis: AnalysisReport) -> Tuple[List[str], Optional[str]]:
        """Diferencias esperado/observado; lista vacía si la entrada pasa."""
        diff = []
        if analysis.algebra_dim - analysis.isotropy_dim != analysis.space_dim:
            diff.append(
                f"dim g − dim g_x = {analysis.algebra_dim - analysis.isotropy_dim} ≠ dim V = {analysis.space_dim}"
            )
        if analysis.character_dim != expected.character_dim:
            diff.append(f"character_dim: esperado {expected.character_dim}, observado {analysis.character_dim}")
        if analysis.qd1 != expected.qd1:
            diff.append(f"qd1: esperado {expected.qd1}, observado {analysis.qd1}")
        if expected.regular is not None and analysis.regular != expected.regular:
            diff.append(f"regular: esperado {expected.regular}, observado {analysis.regular}")
        for check in analysis.invariant_checks:
            if not check.verified:
                diff.append(f"invariante {check.name} no verificado" + (f" ({check.note})" if check.note else ""))
        declared = analysis.declared_character_rank
        if declared > analysis.character_dim or (expected.complete_invariants and declared != analysis.character_dim):
            diff.append(
                f"invariantes declarados independientes: {declared}, "
                f"character_dim {analysis.character_dim}"
            )

        parabolic = None
        if expected.parabolic is not None:
            type_, rank, circled = expected.parabolic
            diagram = weighted_diagram(type_, rank, circled)
            parabolic = str(diagram)
            grading = ParabolicGradingService.compute_grading(diagram)
            components = ParabolicGradingService.irreducible_components(grading)
            dims = Counter(c.dimension for c in components)
            if dims != Counter(rep.summand_dims):
                diff.append(
                    f"{parabolic}: componentes {sorted(dims.elements())}, sumandos {sorted(rep.summand_dims)}"
                )
            if expected.commutative_parabolic is not None and len(circled) == 1:
                commutative = ParabolicGradingService.is_commutative_parabolic(grading)
                if commutative != expected.commutative_parabolic:
                    diff.append(f"{parabolic}: conmutativo {commutative}, esperado {expected.commutative_parabolic}")
        return diff, parabolic

    @staticmethod
    def select(filter: str = "all") -> Tuple[CatalogEntry, ...]:
        if filter not in FILTERS:
            raise ParameterOutOfRangeError(f"filtro desconocido: {filter!r} (opciones: {', '.join(FILTERS)})")
        return tuple(e for e in CatalogService.catalog() if filter == "all" or e.group == filter)

    @staticmethod
    def run_all(filter: str = "all", jobs: Optional[int] = None, seed: Optional[int] = None) -> RunSummary:
        entries = CatalogService.select(filter)
        seed = CatalogService.resolve_seed(seed)
        jobs = getattr(settings, "PVKIT_JOBS", 1) if jobs is None else jobs
        if jobs < 1:
            raise ParameterOutOfRangeError("jobs debe ser ≥ 1")
        tasks = [(e.id, dict(params), seed) for e in entries for params in e.defaults]
        logger.info("run-all %s: %s verificaciones con %s procesos", filter, len(tasks), jobs)
        if jobs == 1:
            reports = [_run_task(task) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=jobs, initializer=django.setup) as pool:
                reports = list(pool.map(_run_task, tasks))
        return RunSummary(filter=filter, seed=seed, reports=tuple(reports))

    @staticmethod
    def describe(entry: CatalogEntry) -> Dict[str, object]:
        return {
            "id": entry.id,
            "group": entry.group,
            "title": entry.title,
            "case": entry.case,
            "realization": entry.realization,
            "parameters": list(entry.parameters),
            "defaults": [dict(d) for d in entry.defaults],
            "mf_rank": entry.mf_rank,
            "requires": entry.requires,
        }


def _run_task(task: Tuple[str, Params, int]) -> VerificationReport:
    entry_id, params, seed = task
    return CatalogService.run(entry_id, params, seed)


def catalog() -> Tuple[CatalogEntry, ...]:
    return CatalogService.catalog()


def get_entry(entry_id: str) -> CatalogEntry:
    return CatalogService.get_entry(entry_id)


def run(entry_id: str, parameters: Optional[Params] = None, seed: Optional[int] = None) -> VerificationReport:
    return CatalogService.run(entry_id, parameters, seed)


def run_all(filter: str = "all", jobs: Optional[int] = None, seed: Optional[int] = None) -> RunSummary:
    return CatalogService.run_all(filter, jobs, seed)
