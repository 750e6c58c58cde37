"""Weighted multigraph value type and its line-oriented file codec.

Graphs are immutable values: loops and parallel edges are allowed, every edge
carries an exact rational weight, and edge ids are dense (0..m-1).  An edge
*end* is a pair (edge_id, side) with side 0 for the first endpoint and side 1
for the second; a loop contributes both ends to the same vertex.  An optional
rotation system (cyclic order of edge-ends per vertex) encodes an embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .errors import ParseError
from .rational import Rat, format_rational, parse_rational
from .unionfind import UnionFind

__all__ = [
    "WeightedMultigraph",
    "codec_parse",
    "codec_serialize",
]

EdgeEnd = tuple[int, int]  # (edge_id, side)


@dataclass(frozen=True)
class WeightedMultigraph:
    vertex_count: int
    ends: tuple[tuple[int, int], ...]  # edge_id -> (u, v)
    weights: tuple  # edge_id -> Rat, parallel to ends
    rotation: Optional[tuple[tuple[EdgeEnd, ...], ...]] = None  # per vertex
    provenance: tuple = field(default=(), compare=False)

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_edges(vertex_count: int, edges: Iterable[tuple]) -> "WeightedMultigraph":
        """Build from (u, v, weight) triples; ids are assigned in order."""
        ends = []
        weights = []
        for u, v, w in edges:
            ends.append((int(u), int(v)))
            weights.append(Rat(w))
        g = WeightedMultigraph(vertex_count, tuple(ends), tuple(weights))
        g.validate()
        return g

    # -- basic accessors --------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.ends)

    def endpoints(self, edge_id: int) -> tuple[int, int]:
        return self.ends[edge_id]

    def weight(self, edge_id: int):
        return self.weights[edge_id]

    def is_loop(self, edge_id: int) -> bool:
        u, v = self.ends[edge_id]
        return u == v

    def end_vertex(self, end: EdgeEnd) -> int:
        eid, side = end
        return self.ends[eid][side]

    def incident_ends(self, v: int) -> list[EdgeEnd]:
        """All edge-ends at v, in edge-id order (loops give two ends)."""
        out: list[EdgeEnd] = []
        for eid, (a, b) in enumerate(self.ends):
            if a == v:
                out.append((eid, 0))
            if b == v:
                out.append((eid, 1))
        return out

    def degree(self, v: int) -> int:
        return len(self.incident_ends(v))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """vertex -> list of (neighbour, edge_id); loops appear once."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.ends):
            adj[u].append((v, eid))
            if u != v:
                adj[v].append((u, eid))
        return adj

    # -- global structure -------------------------------------------------

    def component_count(self) -> int:
        uf = UnionFind(self.vertex_count)
        for u, v in self.ends:
            uf.union(u, v)
        return uf.count

    def components(self) -> list[list[int]]:
        uf = UnionFind(self.vertex_count)
        for u, v in self.ends:
            uf.union(u, v)
        return sorted(uf.groups().values(), key=lambda g: g[0])

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or self.component_count() == 1

    # -- derived values ---------------------------------------------------

    def with_rotation(self, rotation) -> "WeightedMultigraph":
        g = replace(self, rotation=tuple(tuple(cycle) for cycle in rotation))
        g.validate()
        return g

    def without_rotation(self) -> "WeightedMultigraph":
        return replace(self, rotation=None)

    def with_provenance(self, notes: Iterable[str]) -> "WeightedMultigraph":
        return replace(self, provenance=tuple(notes))

    def reweighted(self, new_weights) -> "WeightedMultigraph":
        """Same shape, different weight map (edge_id -> rational)."""
        ws = tuple(Rat(new_weights[eid]) for eid in range(self.edge_count))
        return replace(self, weights=ws)

    def disjoint_union(self, other: "WeightedMultigraph") -> "WeightedMultigraph":
        off_v = self.vertex_count
        off_e = self.edge_count
        ends = self.ends + tuple((u + off_v, v + off_v) for u, v in other.ends)
        weights = self.weights + other.weights
        rot = None
        if self.rotation is not None and other.rotation is not None:
            shifted = tuple(
                tuple((eid + off_e, side) for eid, side in cycle)
                for cycle in other.rotation
            )
            rot = self.rotation + shifted
        return WeightedMultigraph(
            self.vertex_count + other.vertex_count, ends, weights, rot
        )

    # -- validation -------------------------------------------------------

    def validate(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("negative vertex count")
        if len(self.weights) != len(self.ends):
            raise ValueError("weights not total over edge ids")
        for eid, (u, v) in enumerate(self.ends):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"dangling endpoint on edge {eid}")
        if self.rotation is not None:
            if len(self.rotation) != n:
                raise ValueError("rotation must cover every vertex")
            for v in range(n):
                expected = sorted(self.incident_ends(v))
                got = sorted(self.rotation[v])
                if expected != got:
                    raise ValueError(
                        f"rotation at vertex {v} does not list its edge-ends "
                        f"exactly once"
                    )


# -- file codec -----------------------------------------------------------
#
# Header `graph <vertex_count>`, then one `e <id> <u> <v> <p>/<q>` line per
# edge, then optional `rot <vertex> <id>.<side> ...` lines.  Blank lines and
# `#` comments are tolerated on input and never emitted.


def codec_parse(text) -> WeightedMultigraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: Optional[int] = None
    edges: dict[int, tuple[int, int]] = {}
    weights: dict[int, object] = {}
    rot_lines: dict[int, list[EdgeEnd]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "graph":
            if n is not None:
                raise ParseError("duplicate graph header", lineno)
            if len(fields) != 2:
                raise ParseError("header must be `graph <vertex_count>`", lineno)
            try:
                n = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif kind == "e":
            if n is None:
                raise ParseError("edge before graph header", lineno)
            if len(fields) != 5:
                raise ParseError("edge line must be `e <id> <u> <v> <p>/<q>`", lineno)
            try:
                eid, u, v = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError("non-integer edge id or endpoint", lineno) from None
            if eid in edges:
                raise ParseError(f"duplicate edge_id {eid}", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"dangling endpoint on edge {eid}", lineno)
            try:
                w = parse_rational(fields[4])
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            edges[eid] = (u, v)
            weights[eid] = w
        elif kind == "rot":
            if n is None:
                raise ParseError("rotation before graph header", lineno)
            if len(fields) < 2:
                raise ParseError("rotation line must name a vertex", lineno)
            try:
                v = int(fields[1])
            except ValueError:
                raise ParseError(f"bad vertex {fields[1]!r}", lineno) from None
            if not (0 <= v < n):
                raise ParseError(f"rotation names unknown vertex {v}", lineno)
            if v in rot_lines:
                raise ParseError(f"duplicate rotation for vertex {v}", lineno)
            cycle: list[EdgeEnd] = []
            for tok in fields[2:]:
                parts = tok.split(".")
                if len(parts) != 2:
                    raise ParseError(f"bad edge-end token {tok!r}", lineno)
                try:
                    eid, side = int(parts[0]), int(parts[1])
                except ValueError:
                    raise ParseError(f"bad edge-end token {tok!r}", lineno) from None
                if side not in (0, 1):
                    raise ParseError(f"edge-end side must be 0 or 1, got {side}", lineno)
                cycle.append((eid, side))
            rot_lines[v] = cycle
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno)
    if n is None:
        raise ParseError("missing graph header")
    m = len(edges)
    for eid in range(m):
        if eid not in edges:
            raise ParseError(f"edge ids not dense: missing id {eid}")
    ends = tuple(edges[eid] for eid in range(m))
    ws = tuple(weights[eid] for eid in range(m))
    rotation = None
    if rot_lines:
        g0 = WeightedMultigraph(n, ends, ws)
        cycles = []
        for v in range(n):
            if v in rot_lines:
                cycles.append(tuple(rot_lines[v]))
            else:
                # vertices with no incident edges may omit their (empty) line
                if g0.incident_ends(v):
                    raise ParseError(f"rotation missing for vertex {v}")
                cycles.append(())
        rotation = tuple(cycles)
    g = WeightedMultigraph(n, ends, ws, rotation)
    try:
        g.validate()
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return g


def codec_serialize(g: WeightedMultigraph) -> str:
    g.validate()
    lines = [f"graph {g.vertex_count}"]
    for eid, (u, v) in enumerate(g.ends):
        lines.append(f"e {eid} {u} {v} {format_rational(g.weights[eid])}")
    if g.rotation is not None:
        for v in range(g.vertex_count):
            cycle = g.rotation[v]
            toks = " ".join(f"{eid}.{side}" for eid, side in cycle)
            lines.append(f"rot {v}" + (f" {toks}" if toks else ""))
    return "\n".join(lines) + "\n"
