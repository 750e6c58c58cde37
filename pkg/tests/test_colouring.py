import itertools

import pytest

from tuttekit.colouring import (
    amplification_exponent,
    reduce_colouring,
    thickened_graph,
)
from tuttekit.errors import NonPlanarError, PreconditionError
from tuttekit.graph import WeightedMultigraph
from tuttekit.rational import Rat

from conftest import cycle, k4, path, triangle

POINT = (Rat(-5), Rat(1, 2))


def brute_three_colourable(g) -> bool:
    return any(
        all(sig[u] != sig[v] for u, v in g.ends)
        for sig in itertools.product(range(3), repeat=g.vertex_count)
    )


def wheel(rim: int):
    edges = [(i, (i + 1) % rim, 1) for i in range(rim)]
    edges += [(i, rim, 1) for i in range(rim)]
    return WeightedMultigraph.from_edges(rim + 1, edges)


def moser_spindle():
    edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
             (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)]
    return WeightedMultigraph.from_edges(7, [(u, v, 1) for u, v in edges])


def grid(rows: int, cols: int):
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1), 1))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c), 1))
    return WeightedMultigraph.from_edges(rows * cols, edges)


def test_triangle_frozen_certificate():
    cert = reduce_colouring(triangle(), *POINT)
    assert cert.k == 8
    assert cert.value == 6 + Rat(18, 2**8) + Rat(3, 2**24)
    assert cert.verdict == "3-colourable"
    assert cert.is_three_colourable()
    assert cert.colour_route == cert.value


def test_k4_frozen_certificate():
    cert = reduce_colouring(k4(), *POINT)
    assert cert.k == 10
    assert cert.threshold == Rat(81, 1024)
    assert cert.threshold <= Rat(1, 4)
    assert cert.value <= cert.threshold
    assert cert.verdict == "not-3-colourable"


def test_k4_value_matches_independent_enumeration():
    cert = reduce_colouring(k4(), *POINT)
    g = k4()
    total = Rat(0)
    for sig in itertools.product(range(3), repeat=4):
        mono = sum(1 for u, v in g.ends if sig[u] == sig[v])
        total += Rat(1, 2) ** (cert.k * mono)
    assert cert.value == total


def test_amplification_exponent_is_even_and_minimal():
    assert amplification_exponent(Rat(1, 2), 3) == 8
    assert amplification_exponent(Rat(1, 2), 4) == 10
    assert amplification_exponent(Rat(-1, 2), 4) == 10
    for n in range(1, 8):
        k = amplification_exponent(Rat(2, 3), n)
        assert k % 2 == 0
        assert Rat(3, 2) ** k >= 4 * Rat(3) ** n
        # one even step down must fail the bound
        assert Rat(3, 2) ** (k - 2) < 4 * Rat(3) ** n


def test_thickened_graph_shape():
    thick = thickened_graph(triangle(), 4, Rat(-1, 2))
    assert thick.vertex_count == 3
    assert thick.edge_count == 12
    assert all(w == Rat(-1, 2) for w in thick.weights)
    with pytest.raises(PreconditionError):
        thickened_graph(triangle(), 0, 1)


def test_verdict_matches_brute_force_on_small_planar_graphs():
    fixtures = [
        triangle(),
        k4(),
        path(5),
        cycle(5),
        cycle(6),
        wheel(5),  # odd wheel needs four colours
        moser_spindle(),  # 4-chromatic, planar, 7 vertices
        grid(3, 3),
        WeightedMultigraph.from_edges(1, []),
    ]
    for g in fixtures:
        cert = reduce_colouring(g, *POINT)
        assert cert.is_three_colourable() == brute_three_colourable(g)


def test_negative_y_branch_point():
    # (-1, -1/2) also sits on the hyperbola; even k keeps terms positive
    cert = reduce_colouring(triangle(), -1, Rat(-1, 2))
    assert cert.k % 2 == 0
    assert cert.verdict == "3-colourable"
    cert4 = reduce_colouring(k4(), -1, Rat(-1, 2))
    assert cert4.verdict == "not-3-colourable"


def test_rejects_bad_points():
    with pytest.raises(PreconditionError):
        reduce_colouring(triangle(), 2, 2)  # off the hyperbola
    with pytest.raises(PreconditionError):
        reduce_colouring(triangle(), -2, 0)  # y = 0
    with pytest.raises(PreconditionError):
        reduce_colouring(triangle(), 7, Rat(3, 2))  # |y| >= 1
    with pytest.raises(PreconditionError):
        amplification_exponent(Rat(3, 2), 3)


def test_rejects_nonplanar_input():
    k5 = WeightedMultigraph.from_edges(
        5, [(u, v, 1) for u in range(5) for v in range(u + 1, 5)]
    )
    with pytest.raises(NonPlanarError):
        reduce_colouring(k5, *POINT)
