import pytest

from tuttekit.errors import PreconditionError
from tuttekit.rational import Rat, rat
from tuttekit.tutte import z_delcon
from tuttekit.ygadget import y_closed_forms, y_enumerated, y_gadget_graph

from conftest import random_rat


def test_unit_weights_frozen():
    # q=2, a=1, b=1: values fixed by direct enumeration
    rep = y_closed_forms(2, 1, 1)
    assert rep.z_joined == 8
    assert rep.z_split_one == 28
    assert rep.z_split_all == 664
    assert rep.total() == 8 + 3 * 28 + 664 == 756
    assert rep.c == 6 and rep.d == 7 and rep.e == 2


def test_total_is_z():
    rep = y_closed_forms(2, 1, 1)
    g = y_gadget_graph(1, 1)
    assert rep.total() == z_delcon(g, Rat(2))


def test_matches_enumeration_frozen():
    joined, split_one, split_all = y_enumerated(2, 1, 1)
    assert (joined, split_one, split_all) == (8, 28, 664)


def test_zero_spoke_weight():
    # b = 0 disconnects the terminals from the ring
    rep = y_closed_forms(3, 2, 0)
    assert rep.z_joined == 0
    assert rep.z_split_one == 0
    joined, split_one, split_all = y_enumerated(3, 2, 0)
    assert joined == 0 and split_one == 0 and split_all == rep.z_split_all


def test_gadget_shape():
    g = y_gadget_graph(rat(1, 2), -3)
    assert g.vertex_count == 6 and g.edge_count == 6
    assert all(g.degree(v) == 1 for v in range(3))
    assert all(g.degree(v) == 3 for v in range(3, 6))
    assert g.weight(0) == -3 and g.weight(3) == rat(1, 2)


def test_q_zero_rejected():
    with pytest.raises(PreconditionError):
        y_closed_forms(0, 1, 1)


def test_closed_forms_match_enumeration_random(rng):
    for _ in range(50):
        q = random_rat(rng, nonzero=True)
        a = random_rat(rng)
        b = random_rat(rng)
        rep = y_closed_forms(q, a, b)
        joined, split_one, split_all = y_enumerated(q, a, b)
        assert rep.z_joined == joined
        assert rep.z_split_one == split_one
        assert rep.z_split_all == split_all
