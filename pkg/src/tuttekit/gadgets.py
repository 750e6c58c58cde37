"""Two-terminal gadget calculus.

A two-terminal gadget is a weighted planar graph with distinguished
terminals s and t on a common face.  Its behaviour inside any host graph is
captured by the pair (Z_st, Z_s|t): the contributions to the partition
function from edge subsets that do and do not join the terminals.  The
effective weight w* = q Z_st / Z_s|t and the scale Z_s|t / q^2 turn edge
substitution into an exact identity.

Gadgets are represented as composition trees (single edges combined in
series and parallel, with power nodes for k-fold repetition) so that the
pair can be computed in time logarithmic in the repetition counts; the
synthesized gadgets can reach millions of edges and are only materialized
into explicit graphs on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import BudgetExceededError, DegenerateGadgetError
from .graph import WeightedMultigraph
from .rational import Rat
from .tutte import partition_key, z_terminal_partitions

__all__ = [
    "GadgetExpr",
    "edge_gadget",
    "series",
    "parallel",
    "stretch",
    "thicken",
    "TwoTerminalGadget",
    "materialize",
    "Implementation",
    "identity_implementation",
    "parallel_series_weight",
    "thicken_stretch_weight",
    "effective_weight",
    "zpair",
    "substitute_edge",
]

ZERO = Rat(0)
ONE = Rat(1)


# -- composition trees ----------------------------------------------------


@dataclass(frozen=True)
class GadgetExpr:
    """A node of the series/parallel composition tree.

    kind: "edge" (leaf, weight attached), "series", "parallel",
    "stretch" (k-fold series of one child), "thicken" (k-fold parallel).
    """

    kind: str
    weight: Optional[object] = None
    children: tuple = ()
    k: int = 1

    # sizes are purely arithmetic; no tree of that size is ever built

    def edge_count(self) -> int:
        if self.kind == "edge":
            return 1
        if self.kind in ("series", "parallel"):
            return sum(c.edge_count() for c in self.children)
        return self.k * self.children[0].edge_count()

    def vertex_count(self) -> int:
        if self.kind == "edge":
            return 2
        if self.kind == "series":
            return sum(c.vertex_count() for c in self.children) - (
                len(self.children) - 1
            )
        if self.kind == "parallel":
            return sum(c.vertex_count() - 2 for c in self.children) + 2
        child = self.children[0].vertex_count()
        if self.kind == "stretch":
            return self.k * (child - 1) + 1
        return self.k * (child - 2) + 2  # thicken


def edge_gadget(w) -> GadgetExpr:
    return GadgetExpr("edge", weight=Rat(w))


def series(*parts: GadgetExpr) -> GadgetExpr:
    if len(parts) == 1:
        return parts[0]
    return GadgetExpr("series", children=tuple(parts))


def parallel(*parts: GadgetExpr) -> GadgetExpr:
    if len(parts) == 1:
        return parts[0]
    return GadgetExpr("parallel", children=tuple(parts))


def stretch(part: GadgetExpr, k: int) -> GadgetExpr:
    if k < 1:
        raise ValueError("stretch needs k >= 1")
    if k == 1:
        return part
    return GadgetExpr("stretch", children=(part,), k=k)


def thicken(part: GadgetExpr, k: int) -> GadgetExpr:
    if k < 1:
        raise ValueError("thicken needs k >= 1")
    if k == 1:
        return part
    return GadgetExpr("thicken", children=(part,), k=k)


# -- the (Z_st, Z_s|t) algebra -------------------------------------------


def _pair_series(p1, p2, q):
    st1, sp1 = p1
    st2, sp2 = p2
    return (
        st1 * st2 / q,
        (st1 * sp2 + sp1 * st2 + sp1 * sp2) / q,
    )


def _pair_parallel(p1, p2, q):
    st1, sp1 = p1
    st2, sp2 = p2
    q2 = q * q
    return (
        (q * st1 * st2 + st1 * sp2 + sp1 * st2) / q2,
        sp1 * sp2 / q2,
    )


def _pair_power(p, k: int, q, combine):
    # exponentiation by squaring over the associative composition
    result = None
    base = p
    while k:
        if k & 1:
            result = base if result is None else combine(result, base, q)
        k >>= 1
        if k:
            base = combine(base, base, q)
    return result


def zpair(expr: GadgetExpr, q) -> tuple:
    """(Z_st, Z_s|t) of the gadget at parameter q (q must be nonzero)."""
    q = Rat(q)
    if q == ZERO:
        raise DegenerateGadgetError("zpair requires q != 0")
    if expr.kind == "edge":
        return (q * expr.weight, q * q)
    if expr.kind == "series":
        out = zpair(expr.children[0], q)
        for c in expr.children[1:]:
            out = _pair_series(out, zpair(c, q), q)
        return out
    if expr.kind == "parallel":
        out = zpair(expr.children[0], q)
        for c in expr.children[1:]:
            out = _pair_parallel(out, zpair(c, q), q)
        return out
    child = zpair(expr.children[0], q)
    if expr.kind == "stretch":
        return _pair_power(child, expr.k, q, _pair_series)
    if expr.kind == "thicken":
        return _pair_power(child, expr.k, q, _pair_parallel)
    raise ValueError(f"unknown gadget node kind {expr.kind!r}")


# -- materialization ------------------------------------------------------


@dataclass(frozen=True)
class TwoTerminalGadget:
    graph: WeightedMultigraph
    s: int
    t: int

    def __post_init__(self):
        if self.s == self.t:
            raise ValueError("terminals must be distinct")


def materialize(expr: GadgetExpr, max_edges: int = 200_000) -> TwoTerminalGadget:
    """Expand the composition tree into an explicit graph.

    Vertex 0 is s and vertex 1 is t; interior vertices follow.  Raises when
    the result would exceed `max_edges` (synthesized walk gadgets can be
    astronomically large; their pair values never need the expansion).
    """
    if expr.edge_count() > max_edges:
        raise BudgetExceededError(
            f"gadget materialization over budget: {expr.edge_count()} edges"
        )
    edges: list[tuple[int, int, object]] = []
    counter = [2]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def build(node: GadgetExpr, s: int, t: int) -> None:
        if node.kind == "edge":
            edges.append((s, t, node.weight))
            return
        if node.kind == "series":
            prev = s
            for i, c in enumerate(node.children):
                nxt = t if i == len(node.children) - 1 else fresh()
                build(c, prev, nxt)
                prev = nxt
            return
        if node.kind == "parallel":
            for c in node.children:
                build(c, s, t)
            return
        if node.kind == "stretch":
            prev = s
            for i in range(node.k):
                nxt = t if i == node.k - 1 else fresh()
                build(node.children[0], prev, nxt)
                prev = nxt
            return
        if node.kind == "thicken":
            for _ in range(node.k):
                build(node.children[0], s, t)
            return
        raise ValueError(f"unknown gadget node kind {node.kind!r}")

    build(expr, 0, 1)
    g = WeightedMultigraph.from_edges(counter[0], edges)
    return TwoTerminalGadget(g, 0, 1)


# -- effective weights ----------------------------------------------------


def parallel_series_weight(kind: str, w1, w2, q) -> tuple:
    """Effective weight and scale of the basic two-edge compositions."""
    w1, w2, q = Rat(w1), Rat(w2), Rat(q)
    if kind == "parallel":
        return ((ONE + w1) * (ONE + w2) - ONE, ONE)
    if kind == "series":
        denom = q + w1 + w2
        if denom == ZERO:
            raise DegenerateGadgetError(
                "series composition degenerate: q + w1 + w2 = 0"
            )
        return (w1 * w2 / denom, denom)
    raise ValueError(f"kind must be 'parallel' or 'series', got {kind!r}")


def thicken_stretch_weight(kind: str, alpha, q, k: int) -> tuple:
    """k-fold composition in closed form.

    Returns (alpha', (x', y')) where the shift-point coordinates satisfy
    y' = y^k for thickening and x' = x^k for stretching.
    """
    alpha, q = Rat(alpha), Rat(q)
    if k < 1:
        raise ValueError("k must be >= 1")
    if kind == "thicken":
        y = ONE + alpha
        yk = y ** k
        ap = yk - ONE
        if ap == ZERO:
            xp = None  # all of q/alpha' undefined; caller beware
        else:
            xp = q / ap + ONE
        return (ap, (xp, yk))
    if kind == "stretch":
        if alpha == ZERO:
            raise DegenerateGadgetError("stretch of a zero-weight edge")
        x = q / alpha + ONE
        xk = x ** k
        if xk == ONE:
            raise DegenerateGadgetError("stretch degenerate: x^k = 1")
        ap = q / (xk - ONE)
        return (ap, (xk, ONE + ap))
    raise ValueError(f"kind must be 'thicken' or 'stretch', got {kind!r}")


def effective_weight(gadget: Union[GadgetExpr, TwoTerminalGadget], q) -> tuple:
    """(w*, scale) with w* = q Z_st / Z_s|t and scale = Z_s|t / q^2.

    Accepts either a composition tree (pair computed algebraically) or an
    explicit gadget (pair computed by terminal-partition enumeration).
    """
    q = Rat(q)
    if q == ZERO:
        raise DegenerateGadgetError("effective weight requires q != 0")
    if isinstance(gadget, GadgetExpr):
        zst, zsep = zpair(gadget, q)
    else:
        parts = z_terminal_partitions(
            gadget.graph, q, [gadget.s, gadget.t]
        )
        joined = partition_key([[gadget.s, gadget.t]])
        split = partition_key([[gadget.s], [gadget.t]])
        zst = parts.get(joined, ZERO)
        zsep = parts.get(split, ZERO)
    if zsep == ZERO:
        raise DegenerateGadgetError(
            "non-implementing gadget: Z_s|t vanishes, no effective weight"
        )
    return (q * zst / zsep, zsep / (q * q))


@dataclass(frozen=True)
class Implementation:
    """A gadget certified to implement a target weight at parameter q."""

    gadget: GadgetExpr
    q: object
    effective_weight: object
    scale: object
    target: object
    error_interval: tuple  # closed interval containing effective - target
    relaxed: bool = False

    def __post_init__(self):
        lo, hi = self.error_interval
        err = self.effective_weight - self.target
        if not (lo <= err <= hi):
            raise ValueError("error interval does not contain the actual error")

    @staticmethod
    def exact(expr: GadgetExpr, q) -> "Implementation":
        w, scale = effective_weight(expr, q)
        return Implementation(expr, Rat(q), w, scale, w, (ZERO, ZERO))

    def materialized(self, max_edges: int = 200_000) -> TwoTerminalGadget:
        return materialize(self.gadget, max_edges)


def identity_implementation(w, q) -> Implementation:
    """The single-edge gadget: implements its own weight with scale 1."""
    return Implementation.exact(edge_gadget(w), q)


# -- substitution ---------------------------------------------------------


def substitute_edge(
    g: WeightedMultigraph, f: int, impl: Implementation, max_edges: int = 200_000
) -> tuple[WeightedMultigraph, object]:
    """Replace edge f by the implementing gadget.

    Returns (g', scale) with Z(g') = scale * Z(g with w(f) := w*), where w*
    is the implementation's effective weight.  The gadget's s maps onto the
    first endpoint of f and t onto the second; the identity holds in either
    orientation, and also when f is a loop (both terminals land on the same
    vertex).
    """
    if not (0 <= f < g.edge_count):
        raise ValueError(f"edge id {f} missing")
    tt = impl.materialized(max_edges)
    u, v = g.ends[f]
    n = g.vertex_count
    inner = tt.graph.vertex_count - 2  # gadget interior vertices

    def vmap(x: int) -> int:
        if x == tt.s:
            return u
        if x == tt.t:
            return v
        return n + x - 2  # interior labels 2.. shift up

    edges = []
    notes = []
    for eid, (a, b) in enumerate(g.ends):
        if eid == f:
            continue
        edges.append((a, b, g.weights[eid]))
        notes.append(f"edge {eid} of host")
    for eid, (a, b) in enumerate(tt.graph.ends):
        edges.append((vmap(a), vmap(b), tt.graph.weights[eid]))
        notes.append(f"gadget edge {eid} replacing host edge {f}")
    out = WeightedMultigraph.from_edges(n + inner, edges).with_provenance(notes)
    return out, impl.scale
