import pytest

from tuttekit.errors import DegenerateGadgetError, NonPlanarError, PreconditionError
from tuttekit.ghat import assemble_ghat, psi_threshold
from tuttekit.graph import WeightedMultigraph
from tuttekit.params import param_set
from tuttekit.rational import Rat
from tuttekit.ygadget import y_closed_forms

EPS = Rat(1, 2**10)
DELTA = Rat(1, 2**30)


def theta():
    return WeightedMultigraph.from_edges(2, [(0, 1, 1), (0, 1, 1), (0, 1, 1)])


def k4():
    edges = [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    return WeightedMultigraph.from_edges(4, edges)


def prism():
    edges = [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1),
             (0, 3, 1), (1, 4, 1), (2, 5, 1)]
    return WeightedMultigraph.from_edges(6, edges)


def cube():
    edges = [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1),
             (4, 5, 1), (5, 6, 1), (6, 7, 1), (4, 7, 1),
             (0, 4, 1), (1, 5, 1), (2, 6, 1), (3, 7, 1)]
    return WeightedMultigraph.from_edges(8, edges)


def k33():
    edges = [(u, v, 1) for u in range(3) for v in range(3, 6)]
    return WeightedMultigraph.from_edges(6, edges)


def relaxed_params(q, n, m, K):
    return param_set(q, n, m, K, relaxed_eps=EPS, relaxed_delta=DELTA)


def assemble(h, K, q=6, a=1, b=1, beta=Rat(-1, 10)):
    n = h.vertex_count + 2 * h.edge_count
    m = 3 * h.edge_count
    return assemble_ghat(h, K, q, beta, a, b, relaxed_params(q, n, m, K))


def test_theta_assembly_frozen_sizes():
    ghat = assemble(theta(), 4)
    # stretched theta: n=8, m=9 -> 6n-m vertices, 6n+m edges
    assert ghat.graph.vertex_count == 39
    assert ghat.graph.edge_count == 57
    assert ghat.gadget_count == 8
    census = {r: ghat.roles.count(r) for r in ("a", "b", "beta")}
    assert census == {"a": 24, "b": 24, "beta": 9}
    assert len(ghat.port_vertices()) == 15  # 3n - m
    assert len(ghat.identifications) == 9  # three per source edge


def test_k4_assembly_frozen_sizes():
    ghat = assemble(k4(), 7)
    assert ghat.graph.vertex_count == 78
    assert ghat.graph.edge_count == 114
    assert ghat.gadget_count == 16
    census = {r: ghat.roles.count(r) for r in ("a", "b", "beta")}
    assert census == {"a": 48, "b": 48, "beta": 18}
    assert len(ghat.port_vertices()) == 30
    assert len(ghat.identifications) == 18


def test_assembly_weights_follow_roles():
    a, b, beta = Rat(3, 7), Rat(5, 2), Rat(-1, 10)
    ghat = assemble(theta(), 4, a=a, b=b, beta=beta)
    for e, role in enumerate(ghat.roles):
        expected = {"a": a, "b": b, "beta": beta}[role]
        assert ghat.graph.weights[e] == expected
    assert ghat.report == y_closed_forms(6, a, b)


def test_triples_are_distinct_and_shared_ports_counted():
    ghat = assemble(k4(), 7)
    seen: dict[int, int] = {}
    for tri in ghat.triples:
        assert len(set(tri)) == 3
        for v in tri:
            seen[v] = seen.get(v, 0) + 1
    # a port sits in one gadget or is shared by exactly two
    assert set(seen.values()) <= {1, 2}
    assert sum(1 for c in seen.values() if c == 2) == 18


def test_link_edges_join_ports_of_distinct_gadgets():
    ghat = assemble(theta(), 4)
    ports = set(ghat.port_vertices())
    owners: dict[int, set[int]] = {}
    for x, tri in enumerate(ghat.triples):
        for v in tri:
            owners.setdefault(v, set()).add(x)
    for e in ghat.link_edge_ids():
        u, v = ghat.graph.ends[e]
        assert u in ports and v in ports
        assert owners[u] != owners[v] or len(owners[u]) > 1


def test_output_carries_embedding_and_larger_inputs_stay_planar():
    for h, K in ((prism(), 4), (cube(), 5)):
        ghat = assemble(h, K)
        assert ghat.graph.rotation is not None
        ghat.graph.validate()


def test_nonplanar_cubic_input_rejected():
    with pytest.raises(NonPlanarError):
        assemble(k33(), 4)


def test_non_cubic_input_rejected():
    tri = WeightedMultigraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    with pytest.raises(PreconditionError):
        assemble(tri, 1)


def test_bound_outside_admissible_range_rejected():
    with pytest.raises(PreconditionError):
        assemble(theta(), 0)
    with pytest.raises(PreconditionError):
        # 8K > 5n for the stretched graph
        assemble(theta(), 6)


def test_mismatched_parameter_ledger_rejected():
    params = relaxed_params(6, 8, 9, 4)
    with pytest.raises(PreconditionError):
        assemble_ghat(theta(), 5, 6, Rat(-1, 10), 1, 1, params)
    with pytest.raises(PreconditionError):
        assemble_ghat(theta(), 4, 7, Rat(-1, 10), 1, 1, params)


def test_psi_exponent_collapse_at_unit_bound():
    # K=1, R=1, chi=1 leaves |Z_split_all|^n |q|^(-3n)
    rep = y_closed_forms(2, 1, 1)
    assert psi_threshold(rep, None, 1, 1, R=1, chi=1) == Rat(664, 8)
    assert psi_threshold(rep, None, 2, 1, R=1, chi=1) == Rat(664, 8) ** 2
    # each extra unit of K multiplies by the fugacity magnitude
    fug = Rat(4) * 8 / 664
    assert psi_threshold(rep, None, 1, 2, R=1, chi=1) == Rat(664, 8) * fug


def test_psi_uses_parameter_ledger_defaults():
    params = relaxed_params(6, 8, 9, 4)
    rep = y_closed_forms(6, 1, 1)
    got = psi_threshold(rep, params, 8, 4)
    fug = abs(Rat(36) * rep.z_joined / rep.z_split_all)
    want = fug**3 * params.R * abs(rep.z_split_all) ** 8 * Rat(6) ** -24
    assert got == want * params.chi**params.nu


def test_psi_degenerate_gadget_rejected():
    # a=0, b=-q collapses the all-split sum to zero
    rep = y_closed_forms(1, 0, -1)
    assert rep.z_split_all == 0
    with pytest.raises(DegenerateGadgetError):
        psi_threshold(rep, None, 1, 1, R=1, chi=1)
