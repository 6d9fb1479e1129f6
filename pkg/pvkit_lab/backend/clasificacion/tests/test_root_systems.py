import pytest

from clasificacion.exceptions import InvalidDiagramError, InvalidRootSystemError
from clasificacion.services.root_systems import (
    build_root_system,
    cartan_matrix,
    parse_circles,
    render_diagram,
    weighted_diagram,
)


@pytest.mark.parametrize(
    "type_, rank, positive",
    [("A", 2, 3), ("C", 3, 9), ("G", 2, 6), ("B", 4, 16), ("D", 5, 20), ("E", 6, 36), ("E", 8, 120), ("F", 4, 24)],
)
def test_positive_root_counts(type_, rank, positive):
    rs = build_root_system(type_, rank)
    assert len(rs.positive_roots) == positive
    assert rs.dimension == 2 * positive + rank


@pytest.mark.parametrize("type_, rank", [("D", 3), ("E", 5), ("F", 3), ("G", 3), ("B", 1), ("X", 2)])
def test_invalid_type_rank(type_, rank):
    with pytest.raises(InvalidRootSystemError):
        build_root_system(type_, rank)


def test_highest_root_coefficients():
    assert build_root_system("E", 7).highest_root == (2, 2, 3, 4, 3, 2, 1)
    assert build_root_system("C", 3).highest_root == (2, 2, 1)
    assert build_root_system("B", 3).highest_root == (1, 2, 2)
    assert build_root_system("G", 2).highest_root == (3, 2)


def test_pairing_rules():
    a3 = build_root_system("A", 3)
    assert a3.pairing(a3.simple_root(2), 2) == 2
    assert a3.pairing(a3.simple_root(2), 1) == -1
    c3 = build_root_system("C", 3)
    # α3 larga contra la corotación de su vecina corta α2
    assert c3.pairing(c3.simple_root(3), 2) == -2
    assert c3.pairing(c3.simple_root(2), 3) == -1


def test_long_and_short_roots():
    f4 = build_root_system("F", 4)
    assert [f4.is_long(i) for i in range(1, 5)] == [True, True, False, False]
    g2 = build_root_system("G", 2)
    assert not g2.is_long(1) and g2.is_long(2)
    b3 = build_root_system("B", 3)
    assert not b3.is_long(3)


def test_cartan_diagonal():
    cartan = cartan_matrix("E", 6)
    assert all(cartan[i][i] == 2 for i in range(6))
    # α2 cuelga de α4
    assert cartan[1][3] == cartan[3][1] == -1


def test_every_root_is_closed_under_negation():
    rs = build_root_system("B", 3)
    for root in rs.positive_roots:
        assert rs.is_root(tuple(-c for c in root))


def test_parse_circles():
    assert parse_circles("1,7") == (1, 7)
    assert parse_circles(" 3 ") == (3,)
    with pytest.raises(InvalidRootSystemError):
        parse_circles("1,a")


def test_weighted_diagram_validation():
    with pytest.raises(InvalidDiagramError):
        weighted_diagram("A", 3, ())
    with pytest.raises(InvalidDiagramError):
        weighted_diagram("A", 3, (4,))
    diagram = weighted_diagram("C", 7, (7, 1, 1))
    assert diagram.circled == (1, 7)
    assert str(diagram) == "C7{1,7}"
    assert diagram.theta == (2, 3, 4, 5, 6)


@pytest.mark.parametrize(
    "type_, rank, circled, expected",
    [
        ("A", 3, (2,), "o---(o)---o"),
        ("C", 3, (3,), "o---o=<=(o)"),
        ("B", 3, (1,), "(o)---o=>=o"),
    ],
)
def test_render_chain_diagrams(type_, rank, circled, expected):
    assert render_diagram(weighted_diagram(type_, rank, circled)) == expected


def test_render_pendant_node():
    text = render_diagram(weighted_diagram("D", 4, (4,)))
    assert text.splitlines() == ["o---o---o", "    |", "   (o)"]


SIMPLE_TYPES_UP_TO_8 = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def root_string(rs, gamma, index):
    """(p, q): γ − pα y γ + qα son las puntas de la α-cadena por γ."""
    alpha = rs.simple_root(index)

    def reach(sign):
        k = 0
        while rs.is_root(tuple(g + sign * (k + 1) * a for g, a in zip(gamma, alpha))):
            k += 1
        return k

    return reach(-1), reach(1)


@pytest.mark.parametrize("type_, rank", SIMPLE_TYPES_UP_TO_8, ids=lambda v: str(v))
def test_pairing_matches_cartan_and_root_strings(type_, rank):
    rs = build_root_system(type_, rank)
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            assert rs.pairing(rs.simple_root(j), i) == rs.cartan[i - 1][j - 1]
    for gamma in rs.positive_roots:
        for i in range(1, rank + 1):
            if gamma == rs.simple_root(i):
                continue
            value = rs.pairing(gamma, i)
            p, q = root_string(rs, gamma, i)
            assert p - q == value
            reflected = tuple(g - value * a for g, a in zip(gamma, rs.simple_root(i)))
            assert rs.is_root(reflected)


@pytest.mark.parametrize("type_, rank", SIMPLE_TYPES_UP_TO_8, ids=lambda v: str(v))
def test_highest_root_is_dominant_and_maximal(type_, rank):
    rs = build_root_system(type_, rank)
    theta = rs.highest_root
    assert theta in rs.positive_roots
    assert all(rs.pairing(theta, i) >= 0 for i in range(1, rank + 1))
    assert not any(rs.is_root(tuple(t + a for t, a in zip(theta, rs.simple_root(i)))) for i in range(1, rank + 1))
    assert sum(theta) == max(sum(r) for r in rs.positive_roots)
