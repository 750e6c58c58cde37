"""Assembly of the big decision graph from three-port gadget copies.

A cubic planar graph h is three-stretched into G; every G-vertex becomes a
six-vertex gadget copy (ports plus inner ring), neighbouring copies share a
merged port vertex, and three extra linking edges of weight beta are laid
along each h-edge.  The result is a planar weighted multigraph whose
partition function separates instances with an independent set of size K
from those without by a computable threshold Psi.

Port positions come from the rotation system of h: the three edges at an
h-vertex take port slots 0, 1, 2 in rotation order, and each linking edge
attaches at the slot one below its h-edge's slot (mod 3).  Planarity of the
output is re-verified by embedding rather than assumed.
"""

from dataclasses import dataclass
from typing import Optional

from .errors import DegenerateGadgetError, NonPlanarError, PreconditionError
from .graph import WeightedMultigraph
from .params import ParamSet
from .planarity import planarity_embed
from .rational import Rat
from .transforms import MisInstance, three_stretch
from .unionfind import UnionFind
from .ygadget import YGadgetReport, y_closed_forms

__all__ = ["GhatInstance", "assemble_ghat", "psi_threshold"]


@dataclass(frozen=True)
class GhatInstance:
    """The compiled decision graph plus everything needed to certify it.

    roles tags each edge "a" (inner ring), "b" (spoke) or "beta" (link).
    triples[x] lists gadget x's three port vertices in the final ids; ports
    shared between neighbouring gadgets appear in both triples.
    """

    graph: WeightedMultigraph
    roles: tuple
    q: object
    beta: object
    params: ParamSet
    psi: object
    report: YGadgetReport
    triples: tuple
    identifications: tuple
    source: MisInstance
    stretched: WeightedMultigraph

    @property
    def gadget_count(self) -> int:
        return len(self.triples)

    def link_edge_ids(self) -> list:
        return [e for e, r in enumerate(self.roles) if r == "beta"]

    def gadget_edge_ids(self) -> list:
        return [e for e, r in enumerate(self.roles) if r != "beta"]

    def port_vertices(self) -> list:
        seen: set[int] = set()
        for tri in self.triples:
            seen.update(tri)
        return sorted(seen)


def psi_threshold(
    report: YGadgetReport,
    params: Optional[ParamSet],
    n: int,
    K: int,
    *,
    R=None,
    chi=None,
    nu: Optional[int] = None,
):
    """Decision threshold Psi.

    Psi = |q^2 Z_012 / Z_0|1|2|^(K-1) * R * |Z_0|1|2|^n * |q|^(-3n) * chi^nu.
    All factors are exact rationals.  R, chi, nu default to the parameter
    set's values; nu may be omitted when chi == 1 (the factor collapses).
    """
    if report.z_split_all == 0:
        raise DegenerateGadgetError("all-split partition sum vanishes")
    if R is None:
        R = params.R
    if chi is None:
        chi = params.chi
    R, chi = Rat(R), Rat(chi)
    if nu is None:
        if params is not None:
            nu = params.nu
        elif chi == 1:
            nu = 0
        else:
            raise PreconditionError("nu required when chi != 1 and no params")
    q = Rat(report.q)
    fugacity = abs(q * q * report.z_joined / report.z_split_all)
    return (
        fugacity ** (K - 1)
        * R
        * abs(report.z_split_all) ** n
        * abs(q) ** (-3 * n)
        * chi**nu
    )


def _port_slots(h: WeightedMultigraph) -> dict:
    """(edge_id, side) -> rotation position 0/1/2 at that end's vertex."""
    slots: dict[tuple, int] = {}
    for v in range(h.vertex_count):
        for pos, end in enumerate(h.rotation[v]):
            slots[end] = pos
    return slots


def assemble_ghat(
    h: WeightedMultigraph, K: int, q, beta, a, b, params: ParamSet
) -> GhatInstance:
    q, beta, a, b = Rat(q), Rat(beta), Rat(a), Rat(b)
    for v in range(h.vertex_count):
        if h.degree(v) != 3:
            raise PreconditionError(f"vertex {v} has degree {h.degree(v)} != 3")
    if h.rotation is None:
        h = planarity_embed(h)
        if h is None:
            raise NonPlanarError("input graph has no planar embedding")
    stretched = three_stretch(h)
    n = stretched.vertex_count
    m = stretched.edge_count
    if not (1 <= K and 8 * K <= 5 * n):
        raise PreconditionError(f"K={K} outside 1..5n/8 for stretched n={n}")
    if params.q != q or params.n != n or params.m != m or params.K != K:
        raise PreconditionError("parameter set does not match this instance")

    # raw layout: gadget x owns 6x..6x+5 (ports 6x+p, ring 6x+3+p)
    nh = h.vertex_count
    slots = _port_slots(h)
    uf = UnionFind(6 * n)
    idents = []
    raw_links = []
    for eid, (u, v) in enumerate(h.ends):
        iu = slots[(eid, 0)]
        iv = slots[(eid, 1)]
        m1 = nh + 2 * eid
        m2 = m1 + 1
        for (gx, px), (gy, py) in (
            ((u, iu), (m1, 0)),
            ((m1, 2), (m2, 1)),
            ((m2, 0), (v, iv)),
        ):
            uf.union(6 * gx + px, 6 * gy + py)
            idents.append(((gx, px), (gy, py)))
        raw_links.append((6 * u + (iu - 1) % 3, 6 * m1 + 1))
        raw_links.append((6 * m1 + 1, 6 * m2 + 2))
        raw_links.append((6 * m2 + 1, 6 * v + (iv - 1) % 3))

    roots = sorted({uf.find(x) for x in range(6 * n)})
    final = {r: i for i, r in enumerate(roots)}

    def fid(raw: int) -> int:
        return final[uf.find(raw)]

    edges = []
    roles = []
    for x in range(n):
        for p in range(3):
            edges.append((fid(6 * x + p), fid(6 * x + 3 + p), b))
            roles.append("b")
        for p in range(3):
            edges.append((fid(6 * x + 3 + p), fid(6 * x + 3 + (p + 1) % 3), a))
            roles.append("a")
    for ru, rv in raw_links:
        edges.append((fid(ru), fid(rv), beta))
        roles.append("beta")

    graph = WeightedMultigraph.from_edges(len(roots), edges)
    if graph.vertex_count != 6 * n - m or graph.edge_count != 6 * n + m:
        raise PreconditionError("size invariants violated by identification")
    embedded = planarity_embed(graph)
    if embedded is None:
        raise NonPlanarError("assembled graph is not planar")

    triples = tuple(
        (fid(6 * x + 0), fid(6 * x + 1), fid(6 * x + 2)) for x in range(n)
    )
    ports: set[int] = set()
    for tri in triples:
        ports.update(tri)
    if len(ports) != 3 * n - m:
        raise PreconditionError("port count mismatch after identification")

    report = y_closed_forms(q, a, b)
    psi = psi_threshold(report, params, n, K)
    return GhatInstance(
        graph=embedded,
        roles=tuple(roles),
        q=q,
        beta=beta,
        params=params,
        psi=psi,
        report=report,
        triples=triples,
        identifications=tuple(idents),
        source=MisInstance(stretched, K),
        stretched=stretched,
    )
