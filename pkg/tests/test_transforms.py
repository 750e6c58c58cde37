import pytest

from tuttekit.errors import PreconditionError
from tuttekit.graph import WeightedMultigraph
from tuttekit.mis import mis_oracle
from tuttekit.planarity import planarity_embed
from tuttekit.transforms import MisInstance, cubicize, t_gadget, three_stretch

from conftest import k4, random_multigraph, triangle


def test_t_gadget_shape():
    g = t_gadget()
    assert g.vertex_count == 6
    assert sorted(g.degree(v) for v in range(6)) == [1, 3, 3, 3, 3, 3]
    assert mis_oracle(g)[0] == 3
    assert planarity_embed(g) is not None


def test_cubicize_k4_is_identity():
    g, offset = cubicize(k4())
    assert offset == 0
    assert g.vertex_count == 4


def test_cubicize_k2():
    # one vertex of degree 1 on each side: 2 deficiency units apiece
    k2 = WeightedMultigraph.from_edges(2, [(0, 1, 1)])
    g, offset = cubicize(k2)
    assert g.vertex_count == 22
    assert offset == 8
    assert all(g.degree(v) == 3 for v in range(g.vertex_count))
    assert mis_oracle(g)[0] == 1 + offset
    assert planarity_embed(g) is not None


def test_cubicize_isolated_vertex():
    g0 = WeightedMultigraph.from_edges(1, [])
    g, offset = cubicize(g0)
    assert g.vertex_count == 16
    assert offset == 6
    assert mis_oracle(g)[0] == 1 + offset


def test_cubicize_rejects_high_degree_and_loops():
    with pytest.raises(PreconditionError):
        cubicize(k4().disjoint_union(WeightedMultigraph.from_edges(1, [(0, 0, 1)])))
    star5 = WeightedMultigraph.from_edges(5, [(0, i, 1) for i in range(1, 5)])
    with pytest.raises(PreconditionError):
        cubicize(star5)


def test_cubicize_preserves_mis_offset(rng):
    done = 0
    while done < 8:
        g = random_multigraph(rng, max_n=4, max_m=6, allow_loops=False)
        if any(g.degree(v) > 3 for v in range(g.vertex_count)):
            continue
        cubic, offset = cubicize(g)
        if cubic.vertex_count > 28:
            continue
        assert all(cubic.degree(v) == 3 for v in range(cubic.vertex_count))
        assert mis_oracle(cubic, cap=28)[0] == mis_oracle(g)[0] + offset
        done += 1


def test_three_stretch_k4():
    cubic, _ = cubicize(k4())
    g = three_stretch(cubic)
    assert g.vertex_count == 16
    assert g.edge_count == 18
    assert mis_oracle(g)[0] == 7  # MIS(K4)=1 shifted by |E|=6
    assert planarity_embed(g) is not None


def test_three_stretch_requires_cubic():
    with pytest.raises(PreconditionError):
        three_stretch(triangle())


def test_mis_instance_bound():
    cubic, _ = cubicize(k4())
    g = three_stretch(cubic)
    MisInstance(g, 10)  # ceil(5*16/8) = 10
    with pytest.raises(PreconditionError):
        MisInstance(g, 11)
    with pytest.raises(PreconditionError):
        MisInstance(g, 0)
