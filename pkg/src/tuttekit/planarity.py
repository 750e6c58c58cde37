"""Planar embeddings as rotation systems, face tracing, and duals.

A rotation system lists the cyclic order of edge-ends around each vertex.
Faces are traced as orbits of the next-dart permutation; the embedding is
planar exactly when V - E + F = 2 holds on every connected component, and
that Euler check is what this module treats as the certificate (the search
for the rotation itself is delegated to networkx on the simplified graph,
after which loops and parallel bundles are spliced back in).
"""

from __future__ import annotations

from typing import Optional

import networkx as nx

from .errors import NonPlanarError
from .graph import WeightedMultigraph

__all__ = [
    "planarity_embed",
    "trace_faces",
    "euler_check",
    "planar_dual",
]

Dart = tuple[int, int]  # (edge_id, direction); direction 0 = ends[0] -> ends[1]


def _rotation_successor_index(
    cycle: tuple[tuple[int, int], ...], end: tuple[int, int]
) -> tuple[int, int]:
    i = cycle.index(end)
    return cycle[(i + 1) % len(cycle)]


def trace_faces(g: WeightedMultigraph) -> list[list[Dart]]:
    """Orbits of the face permutation; requires a rotation system."""
    if g.rotation is None:
        raise NonPlanarError("rotation system required to trace faces")
    faces: list[list[Dart]] = []
    seen: set[Dart] = set()
    for eid in range(g.edge_count):
        for direction in (0, 1):
            start = (eid, direction)
            if start in seen:
                continue
            face: list[Dart] = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                e, dr = d
                head_side = 1 if dr == 0 else 0
                v = g.ends[e][head_side]
                nxt_end = _rotation_successor_index(g.rotation[v], (e, head_side))
                ne, ns = nxt_end
                d = (ne, 0 if ns == 0 else 1)
            faces.append(face)
    return faces


def euler_check(g: WeightedMultigraph) -> bool:
    """V - E + F = 2 on every connected component (genus-0 certificate)."""
    if g.rotation is None:
        return False
    try:
        g.validate()
    except ValueError:
        return False
    faces = trace_faces(g)
    comps = g.components()
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    v_count = [len(c) for c in comps]
    e_count = [0] * len(comps)
    f_count = [0] * len(comps)
    for u, _v in g.ends:
        e_count[comp_of[u]] += 1
    for face in faces:
        eid, _ = face[0]
        f_count[comp_of[g.ends[eid][0]]] += 1
    for ci in range(len(comps)):
        if e_count[ci] == 0:
            f_count[ci] = 1  # an isolated vertex sees one face
        if v_count[ci] - e_count[ci] + f_count[ci] != 2:
            return False
    return True


def planarity_embed(g: WeightedMultigraph) -> Optional[WeightedMultigraph]:
    """Find a planar rotation system, or return None if the graph has none.

    Loops and parallel edges never affect planarity, so the search runs on
    the simplified graph and the multi-edges are re-inserted afterwards:
    a parallel bundle becomes a nest of arcs (ascending edge ids at the
    lower endpoint, descending at the other), a loop a consecutive end pair.
    """
    n = g.vertex_count
    simple = nx.Graph()
    simple.add_nodes_from(range(n))
    bundles: dict[tuple[int, int], list[int]] = {}
    loops: dict[int, list[int]] = {}
    for eid, (u, v) in enumerate(g.ends):
        if u == v:
            loops.setdefault(u, []).append(eid)
        else:
            key = (u, v) if u < v else (v, u)
            bundles.setdefault(key, []).append(eid)
            simple.add_edge(*key)
    ok, emb = nx.check_planarity(simple)
    if not ok:
        return None
    data = emb.get_data()  # vertex -> neighbors in cyclic order
    rotation: list[tuple] = []
    for v in range(n):
        cycle: list[tuple[int, int]] = []
        for nb in data.get(v, []):
            key = (v, nb) if v < nb else (nb, v)
            eids = sorted(bundles[key])
            if v > nb:
                eids = list(reversed(eids))
            for eid in eids:
                side = 0 if g.ends[eid][0] == v else 1
                cycle.append((eid, side))
        for eid in sorted(loops.get(v, [])):
            cycle.append((eid, 0))
            cycle.append((eid, 1))
        rotation.append(tuple(cycle))
    out = g.with_rotation(rotation)
    if not euler_check(out):  # pragma: no cover - guards the splice logic
        raise AssertionError("constructed rotation failed the Euler check")
    return out


def planar_dual(g: WeightedMultigraph) -> WeightedMultigraph:
    """Face-vertex exchange; edge ids and weights carry over.

    Requires a connected plane graph (rotation present and Euler-valid).
    """
    if not g.is_connected():
        raise NonPlanarError("dual requires a connected graph")
    if g.rotation is None or not euler_check(g):
        raise NonPlanarError("dual requires a planar rotation system")
    faces = trace_faces(g)
    face_of: dict[Dart, int] = {}
    for fi, face in enumerate(faces):
        for d in face:
            face_of[d] = fi
    ends = tuple(
        (face_of[(eid, 0)], face_of[(eid, 1)]) for eid in range(g.edge_count)
    )
    # rotation at a face-vertex follows the face orbit; dart (e, dir) stands
    # for the dual end (e, dir)
    rotation = tuple(tuple(face) for face in faces)
    dual = WeightedMultigraph(len(faces), ends, g.weights, rotation)
    dual.validate()
    return dual
