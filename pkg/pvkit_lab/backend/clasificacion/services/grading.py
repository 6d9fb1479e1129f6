"""
Graduación parabólica g = ⊕ d_p(θ) definida por un diagrama ponderado.

Una raíz γ cae en d_p con p = ½·γ(H_θ), que es la suma de sus coeficientes sobre
las raíces circuladas. El Levi l_θ se lee quitando los nodos circulados.
"""
import logging
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from clasificacion.exceptions import InvalidDiagramError
from clasificacion.models.ParabolicGrading_model import IrreducibleComponent, LeviComponent, ParabolicGrading
from clasificacion.models.RootSystem_model import RootSystem, WeightedDiagram
from clasificacion.services.root_systems import build_root_system, render_diagram

logger = logging.getLogger(__name__)


class ParabolicGradingService:

    @staticmethod
    def compute_grading(diagram: WeightedDiagram) -> ParabolicGrading:
        rs = diagram.root_system
        circled = [i - 1 for i in diagram.circled]
        pieces: Dict[int, List] = defaultdict(list)
        pieces[0] = []
        for root in rs.positive_roots:
            p = sum(root[i] for i in circled)
            pieces[p].append(root)
            pieces[-p].append(tuple(-c for c in root))
        levi = ParabolicGradingService.levi_components(rs, diagram.theta)
        return ParabolicGrading(
            diagram=diagram,
            h_theta=tuple(2 if i in diagram.circled else 0 for i in range(1, rs.rank + 1)),
            pieces={p: tuple(roots) for p, roots in sorted(pieces.items())},
            levi_components=levi,
            center_dim=len(diagram.circled),
        )

    @staticmethod
    def levi_components(rs: RootSystem, theta: Sequence[int]) -> Tuple[LeviComponent, ...]:
        """Componentes conexas de θ dentro del diagrama, tipadas."""
        remaining = set(theta)
        components = []
        while remaining:
            start = min(remaining)
            seen = {start}
            stack = [start]
            while stack:
                node = stack.pop()
                for other in rs.neighbors(node):
                    if other in remaining and other not in seen:
                        seen.add(other)
                        stack.append(other)
            remaining -= seen
            components.append(_classify_component(rs, seen))
        return tuple(sorted(components, key=lambda c: min(c.nodes)))

    @staticmethod
    def is_commutative_parabolic(grading: ParabolicGrading) -> bool:
        circled = grading.diagram.circled
        if len(circled) != 1:
            raise InvalidDiagramError("la conmutatividad se define para una sola raíz circulada")
        rs = grading.diagram.root_system
        return rs.coefficient_in_highest_root(circled[0]) == 1

    @staticmethod
    def irreducible_components(grading: ParabolicGrading) -> Tuple[IrreducibleComponent, ...]:
        rs = grading.diagram.root_system
        circled = grading.diagram.circled
        theta = set(grading.diagram.theta)
        components = []
        for alpha in circled:
            simple = rs.simple_root(alpha)
            weights = tuple(
                (beta, -rs.pairing(simple, beta))
                for beta in rs.neighbors(alpha)
                if beta in theta
            )
            dimension = sum(
                1 for root in rs.positive_roots
                if root[alpha - 1] == 1 and all(root[o - 1] == 0 for o in circled if o != alpha)
            )
            labels = tuple(_weight_label(grading, beta, c) for beta, c in weights)
            components.append(IrreducibleComponent(alpha, weights, dimension, labels))
        return tuple(components)

    @staticmethod
    def summary(diagram: WeightedDiagram) -> dict:
        """Resumen para `pvkit diagram`."""
        grading = ParabolicGradingService.compute_grading(diagram)
        commutative: Optional[bool] = None
        if len(diagram.circled) == 1:
            commutative = ParabolicGradingService.is_commutative_parabolic(grading)
        return {
            "diagram": str(diagram),
            "rendering": render_diagram(diagram),
            "levi": grading.levi_label(),
            "center_dim": grading.center_dim,
            "pieces": {str(p): grading.dimension(p) for p in grading.degrees},
            "commutative": commutative,
            "components": [
                {
                    "circled_root": c.circled_root,
                    "highest_weight": " + ".join(c.labels) if c.labels else "trivial",
                    "dimension": c.dimension,
                }
                for c in ParabolicGradingService.irreducible_components(grading)
            ],
        }


# ---------- tipado de componentes del Levi ----------

def _walk(rs: RootSystem, nodes: set, start: int, avoid: Optional[int] = None) -> List[int]:
    path = [start]
    previous, current = avoid, start
    while True:
        following = [n for n in rs.neighbors(current) if n in nodes and n != previous and n not in path]
        if not following:
            return path
        previous, current = current, following[0]
        path.append(current)


def _classify_component(rs: RootSystem, nodes: set) -> LeviComponent:
    k = len(nodes)
    if k == 1:
        return LeviComponent("A", 1, tuple(nodes))
    degree = {n: [m for m in rs.neighbors(n) if m in nodes] for n in nodes}
    branch = [n for n in nodes if len(degree[n]) == 3]
    if branch:
        center = branch[0]
        arms = sorted(
            (_walk(rs, nodes, start, avoid=center) for start in degree[center]),
            key=lambda arm: (len(arm), min(arm)),
        )
        lengths = tuple(len(arm) for arm in arms)
        if lengths[:2] == (1, 1):
            longest = arms[2]
            shorts = sorted(arms[0] + arms[1])
            order = list(reversed(longest)) + [center] + shorts
            return LeviComponent("D", k, tuple(order))
        if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
            short, a, b = arms
            if lengths[2] == 2 and min(b) < min(a):
                a, b = b, a
            order = [a[1], short[0], a[0], center] + b
            return LeviComponent("E", k, tuple(order))
        raise InvalidDiagramError(f"componente no reconocida en {rs.name}: {sorted(nodes)}")
    ends = sorted(n for n in nodes if len(degree[n]) <= 1)
    bonds = {(a, b): rs.bond(a, b) for a in nodes for b in degree[a] if a < b}
    top = max(bonds.values())
    if top == 3:
        short = next(n for n in nodes if not rs.is_long(n))
        return LeviComponent("G", 2, (short, next(n for n in nodes if n != short)))
    if top == 2:
        (a, b), = [edge for edge, bond in bonds.items() if bond == 2]
        if k == 4 and a not in ends and b not in ends:
            start = next(e for e in ends if rs.is_long(e))
            return LeviComponent("F", 4, tuple(_walk(rs, nodes, start)))
        if k == 2:
            order = sorted(nodes)
        else:
            start = next(e for e in ends if e not in (a, b))
            order = _walk(rs, nodes, start)
        type_ = "C" if rs.is_long(order[-1]) and not rs.is_long(order[-2]) else "B"
        return LeviComponent(type_, k, tuple(order))
    return LeviComponent("A", k, tuple(_walk(rs, nodes, ends[0])))


def _weight_label(grading: ParabolicGrading, beta: int, coefficient: int) -> str:
    component = next(c for c in grading.levi_components if beta in c.nodes)
    prefix = "" if coefficient == 1 else str(coefficient)
    return f"{prefix}ω{component.position(beta)} ({component.name})"


# ---------- PV regulares de tipo parabólico conmutativo ----------

def so_type(n: int) -> List[str]:
    """Tipo del álgebra so(n) como suma de componentes simples."""
    special = {3: ["A1"], 4: ["A1", "A1"], 5: ["B2"], 6: ["A3"]}
    if n in special:
        return special[n]
    if n % 2:
        return [f"B{(n - 1) // 2}"]
    return [f"D{n // 2}"]


def _table1_rows(n: int) -> List[dict]:
    """Filas de la tabla de PV regulares de tipo parabólico conmutativo para el parámetro n."""
    rows = []
    if n >= 1:
        rows.append({
            "row": "A_{2n+1}", "type": "A", "rank": 2 * n + 1, "circled": (n + 1,),
            "levi": [f"A{n}", f"A{n}"], "space": "M_{n+1}", "dim": (n + 1) ** 2, "entry": "T2.4",
            "note": "la tabla indica M_n; la graduación da dimensión (n+1)², se marca como errata",
        })
    if n >= 2:
        rows.append({
            "row": "B_n", "type": "B", "rank": n, "circled": (1,),
            "levi": so_type(2 * n - 1), "space": "C^{2n-1}", "dim": 2 * n - 1, "entry": "T2.1",
        })
        rows.append({
            "row": "C_n", "type": "C", "rank": n, "circled": (n,),
            "levi": [f"A{n - 1}"], "space": "Sym(n)", "dim": n * (n + 1) // 2, "entry": "T2.2",
        })
        rows.append({
            "row": "D^2_{2n}", "type": "D", "rank": 2 * n, "circled": (2 * n,),
            "levi": [f"A{2 * n - 1}"], "space": "AS(2n)", "dim": n * (2 * n - 1), "entry": "T2.3",
        })
    if n >= 4:
        rows.append({
            "row": "D^1_n", "type": "D", "rank": n, "circled": (1,),
            "levi": so_type(2 * n - 2), "space": "C^{2n-2}", "dim": 2 * n - 2, "entry": "T2.1",
        })
    return rows


def verify_table1(ranks: Sequence[int] = (1, 2, 3, 4, 5)) -> List[dict]:
    """Comprueba conmutatividad, tipo de Levi y dim d₁ de cada fila para varios n."""
    expected_rows = []
    for n in ranks:
        expected_rows.extend((n, row) for row in _table1_rows(n))
    expected_rows.append((None, {
        "row": "E_7", "type": "E", "rank": 7, "circled": (7,),
        "levi": ["E6"], "space": "C^27", "dim": 27, "entry": "T2.5",
    }))
    results = []
    for n, row in expected_rows:
        diagram = WeightedDiagram(build_root_system(row["type"], row["rank"]), row["circled"])
        grading = ParabolicGradingService.compute_grading(diagram)
        commutative = ParabolicGradingService.is_commutative_parabolic(grading)
        observed_levi = sorted(grading.levi_type)
        expected_levi = sorted(row["levi"])
        observed_dim = grading.dimension(1)
        passed = (
            commutative
            and observed_levi == expected_levi
            and grading.center_dim == 1
            and observed_dim == row["dim"]
        )
        if not passed:
            logger.warning("fila %s (n=%s) no coincide: %s", row["row"], n, grading.levi_label())
        results.append({
            "row": row["row"],
            "n": n,
            "diagram": str(diagram),
            "space": row["space"],
            "commutative": commutative,
            "levi_expected": " + ".join(expected_levi + ["C"]),
            "levi_observed": grading.levi_label(),
            "dim_expected": row["dim"],
            "dim_observed": observed_dim,
            "entry": row["entry"],
            "note": row.get("note", ""),
            "passed": passed,
        })
    return results


def compute_grading(diagram: WeightedDiagram) -> ParabolicGrading:
    return ParabolicGradingService.compute_grading(diagram)


def is_commutative_parabolic(grading: ParabolicGrading) -> bool:
    return ParabolicGradingService.is_commutative_parabolic(grading)


def irreducible_components(grading: ParabolicGrading) -> Tuple[IrreducibleComponent, ...]:
    return ParabolicGradingService.irreducible_components(grading)
