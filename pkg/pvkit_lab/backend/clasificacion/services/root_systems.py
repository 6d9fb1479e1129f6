"""
Sistemas de raíces de los tipos simples A–G.

Numeración de Bourbaki: en A–D se lee de izquierda a derecha con la flecha o la
bifurcación a la derecha; en E el nodo α2 cuelga de α4; en F4 las raíces α1, α2
son largas; en G2 la raíz α1 es corta.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from clasificacion.exceptions import InvalidRootSystemError
from clasificacion.models.RootSystem_model import Root, RootSystem, WeightedDiagram

logger = logging.getLogger(__name__)

_TYPES = ("A", "B", "C", "D", "E", "F", "G")

# Cantidad clásica de raíces positivas, para validar la generación.
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _validate(type_: str, rank: int) -> str:
    type_ = str(type_).upper()
    if type_ not in _TYPES:
        raise InvalidRootSystemError(f"tipo desconocido: {type_!r}")
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[type_]
    if not valid:
        raise InvalidRootSystemError(f"{type_}{rank} no es un tipo simple válido")
    return type_


def _edges(type_: str, rank: int) -> List[Tuple[int, int]]:
    """Aristas del diagrama (índices desde 0)."""
    if type_ in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(rank - 1)]
    if type_ == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    # E: 1-3-4-5-6-7-8 con 2 unido a 4
    chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
    return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]


def cartan_matrix(type_: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Matriz de Cartan con cartan[i][j] = α_j(H_i)."""
    type_ = _validate(type_, rank)
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges(type_, rank):
        cartan[i][j] = cartan[j][i] = -1
    n = rank - 1
    if type_ == "B":
        # α_n corta
        cartan[n][n - 1] = -2
    elif type_ == "C":
        # α_n larga
        cartan[n - 1][n] = -2
    elif type_ == "F":
        # α1, α2 largas; α3, α4 cortas
        cartan[2][1] = -2
    elif type_ == "G":
        # α1 corta
        cartan[0][1] = -3
    return tuple(tuple(row) for row in cartan)


def _positive_roots(cartan: Sequence[Sequence[int]]) -> Tuple[Root, ...]:
    """Cierre por α-cadenas: β + α_i es raíz si q = p − β(H_i) > 0."""
    rank = len(cartan)
    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        following = []
        for beta in layer:
            for i in range(rank):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in roots:
                        break
                    p += 1
                q = p - sum(beta[j] * cartan[i][j] for j in range(rank))
                if q > 0:
                    up = tuple(b + (1 if k == i else 0) for k, b in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        following.append(up)
                        ordered.append(up)
        layer = following
    return tuple(sorted(ordered, key=lambda r: (sum(r), tuple(-c for c in r))))


@lru_cache(maxsize=None)
def build_root_system(type_: str, rank: int) -> RootSystem:
    type_ = _validate(type_, rank)
    cartan = cartan_matrix(type_, rank)
    positive = _positive_roots(cartan)
    expected = _POSITIVE_COUNT[type_](rank)
    if len(positive) != expected:
        raise InvalidRootSystemError(
            f"{type_}{rank}: se generaron {len(positive)} raíces positivas, se esperaban {expected}"
        )
    highest = max(positive, key=sum)
    logger.debug("sistema de raíces %s%s: %s raíces positivas", type_, rank, len(positive))
    return RootSystem(type=type_, rank=rank, cartan=cartan, positive_roots=positive, highest_root=highest)


def pairing(rs: RootSystem, alpha: Sequence[int], beta_index: int) -> int:
    return rs.pairing(alpha, beta_index)


def parse_circles(text: str) -> Tuple[int, ...]:
    """'1,7' → (1, 7)."""
    try:
        return tuple(int(part) for part in str(text).replace(" ", "").split(",") if part)
    except ValueError as exc:
        raise InvalidRootSystemError(f"lista de raíces circuladas inválida: {text!r}") from exc


def weighted_diagram(type_: str, rank: int, circled: Sequence[int]) -> WeightedDiagram:
    return WeightedDiagram(build_root_system(type_, rank), tuple(circled))


# ---------- dibujo ----------

def _bond_token(rs: RootSystem, left: int, right: int) -> str:
    bond = rs.bond(left, right)
    if bond == 1:
        return "---"
    fill = "=" if bond == 2 else "#"
    # la flecha apunta hacia la raíz corta
    arrow = ">" if rs.is_long(left) and not rs.is_long(right) else "<"
    return f"{fill}{arrow}{fill}"


def _main_chain(rs: RootSystem) -> Tuple[List[int], Dict[int, int]]:
    """Nodos de la fila principal y, para D/E, el nodo colgante → nodo del que cuelga."""
    n = rs.rank
    if rs.type == "D":
        return list(range(1, n)), {n: n - 2}
    if rs.type == "E":
        return [1] + list(range(3, n + 1)), {2: 4}
    return list(range(1, n + 1)), {}


def render_diagram(diagram: WeightedDiagram) -> str:
    rs = diagram.root_system
    chain, pendants = _main_chain(rs)

    def token(index: int) -> str:
        return "(o)" if index in diagram.circled else "o"

    line = ""
    centers = {}
    for k, index in enumerate(chain):
        if k:
            line += _bond_token(rs, chain[k - 1], index)
        tok = token(index)
        centers[index] = len(line) + (1 if tok == "(o)" else 0)
        line += tok
    lines = [line]
    for pendant, anchor in pendants.items():
        center = centers[anchor]
        tok = token(pendant)
        lines.append(" " * center + "|")
        lines.append(" " * (center - (1 if tok == "(o)" else 0)) + tok)
    return "\n".join(lines)
