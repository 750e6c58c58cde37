"""Degree-padding and edge-stretching transformations for MIS instances.

These operate on the graph as an unweighted structure (weights are carried
along unchanged, new edges get weight 1) and shift the maximum independent
set size by an exactly known offset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import WeightedMultigraph
from .rational import Rat

__all__ = [
    "MisInstance",
    "t_gadget",
    "cubicize",
    "three_stretch",
]

ONE = Rat(1)


@dataclass(frozen=True)
class MisInstance:
    """A graph together with the threshold K of the size-K independent-set
    question "does the graph contain an independent set of size at least K".
    """

    graph: WeightedMultigraph
    bound_K: int

    def __post_init__(self):
        n = self.graph.vertex_count
        if not (1 <= self.bound_K <= -(-5 * n // 8)):
            raise PreconditionError(
                f"bound_K={self.bound_K} outside 1..ceil(5n/8) for n={n}"
            )


def t_gadget() -> WeightedMultigraph:
    """The 6-vertex planar degree-padding tree-of-triangles gadget.

    Vertex 0 is the degree-1 attachment root; the rest have degree 3.
    Attaching a copy to a graph raises its maximum independent set size by
    exactly 2 (vertices 2 and 3 below are always available).
    """
    # 0=r 1=v 2=a 3=b 4=c 5=d
    return WeightedMultigraph.from_edges(
        6,
        [
            (0, 1, 1),
            (1, 2, 1),
            (1, 3, 1),
            (2, 4, 1),
            (2, 5, 1),
            (3, 4, 1),
            (3, 5, 1),
            (4, 5, 1),
        ],
    )


def cubicize(g: WeightedMultigraph) -> tuple[WeightedMultigraph, int]:
    """Pad every vertex of degree < 3 up to degree 3.

    One gadget copy is attached per unit of degree deficiency, by
    identifying the copy's root with the deficient vertex; each copy brings
    5 fresh vertices and raises the maximum independent set size by exactly
    2.  Returns (cubic graph, MIS offset).  Planarity is preserved: the
    gadget hangs off a cut vertex.
    """
    for eid in range(g.edge_count):
        if g.is_loop(eid):
            raise PreconditionError("loops cannot appear in a degree-3 graph")
    deficiency = []
    for v in range(g.vertex_count):
        d = g.degree(v)
        if d > 3:
            raise PreconditionError(f"vertex {v} has degree {d} > 3")
        deficiency.append(3 - d)
    n = g.vertex_count
    edges = [
        (u, v, g.weights[eid]) for eid, (u, v) in enumerate(g.ends)
    ]
    notes = [f"edge {eid} of source" for eid in range(g.edge_count)]
    copies = 0
    for v in range(n):
        for _ in range(deficiency[v]):
            base = n + 5 * copies  # fresh vertices: v', a, b, c, d
            vv, a, b, c, d = base, base + 1, base + 2, base + 3, base + 4
            for x, y in [(v, vv), (vv, a), (vv, b), (a, c), (a, d), (b, c), (b, d), (c, d)]:
                edges.append((x, y, ONE))
                notes.append(f"padding copy {copies} at vertex {v}")
            copies += 1
    out = WeightedMultigraph.from_edges(n + 5 * copies, edges).with_provenance(notes)
    return out, 2 * copies


def three_stretch(h: WeightedMultigraph) -> WeightedMultigraph:
    """Replace every edge by a three-edge path.

    Requires a 3-regular input.  Edge e of the input becomes edges
    3e, 3e+1, 3e+2 through fresh midpoint vertices n+2e, n+2e+1; the
    original weight is carried onto all three.  The maximum independent set
    grows by exactly the input's edge count.
    """
    n = h.vertex_count
    for v in range(n):
        if h.degree(v) != 3:
            raise PreconditionError(f"vertex {v} has degree {h.degree(v)} != 3")
    edges = []
    notes = []
    for eid, (u, v) in enumerate(h.ends):
        s1, s2 = n + 2 * eid, n + 2 * eid + 1
        w = h.weights[eid]
        edges.append((u, s1, w))
        edges.append((s1, s2, w))
        edges.append((s2, v, w))
        notes.extend([f"stretch of edge {eid}"] * 3)
    return WeightedMultigraph.from_edges(n + 2 * h.edge_count, edges).with_provenance(
        notes
    )
