"""Exact evaluation of the multivariate partition function Z(G;q,w),
the two-variable polynomial T(G;x,y), terminal-partition refinements,
and the classical specializations.

Two independent evaluation routes are provided: a direct sum over all edge
subsets (the oracle, exponential but unarguable) and a deletion-contraction
recursion with loop/parallel/pendant/series reductions and memoization.
They must agree exactly; the test suite enforces that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError
from .graph import WeightedMultigraph
from .rational import Rat
from .unionfind import UnionFind

__all__ = [
    "EvalReport",
    "z_bruteforce",
    "z_delcon",
    "z_terminal_partitions",
    "partition_key",
    "tutte_eval",
    "chromatic_flow_eval",
    "colour_sum",
    "canonical_encoding",
]

ZERO = Rat(0)
ONE = Rat(1)


def _weights_list(g: WeightedMultigraph, w) -> list:
    """Normalize the weight argument to a per-edge list (graph order)."""
    m = g.edge_count
    if w is None:
        return list(g.weights)
    if isinstance(w, dict):
        return [Rat(w.get(eid, g.weights[eid])) for eid in range(m)]
    if isinstance(w, (list, tuple)):
        if len(w) != m:
            raise ValueError("weight sequence length must equal edge count")
        return [Rat(x) for x in w]
    return [Rat(w)] * m  # constant weight


@dataclass(frozen=True)
class EvalReport:
    value: object  # Rat
    method: str
    work: int  # subsets enumerated or branch nodes expanded


# -- brute force ----------------------------------------------------------


def z_bruteforce(g: WeightedMultigraph, q, w=None, cap: int = 24):
    """Z(G;q,w) = sum over all subsets A of E of w(A) q^{kappa(V,A)}."""
    return z_bruteforce_report(g, q, w, cap).value


def z_bruteforce_report(g: WeightedMultigraph, q, w=None, cap: int = 24) -> EvalReport:
    m = g.edge_count
    if m > cap:
        raise BudgetExceededError(
            f"brute force cap exceeded: {m} edges > cap {cap}"
        )
    q = Rat(q)
    ws = _weights_list(g, w)
    n = g.vertex_count
    ends = g.ends
    qpow = [q ** k for k in range(n + 1)]
    total = ZERO
    for mask in range(1 << m):
        weight = ONE
        parent = list(range(n))
        comps = n
        mm = mask
        eid = 0
        while mm:
            if mm & 1:
                weight *= ws[eid]
                u, v = ends[eid]
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[rv] = ru
                    comps -= 1
            mm >>= 1
            eid += 1
        total += weight * qpow[comps]
    return EvalReport(total, "bruteforce", 1 << m)


# -- terminal partitions --------------------------------------------------


def partition_key(blocks) -> tuple:
    """Canonical form of a set partition: blocks sorted by least element."""
    norm = sorted(tuple(sorted(b)) for b in blocks)
    return tuple(norm)


def _induced_partition(parent_root, terminals) -> tuple:
    groups: dict[int, list] = {}
    for t in terminals:
        groups.setdefault(parent_root(t), []).append(t)
    return partition_key(groups.values())


def z_terminal_partitions(
    g: WeightedMultigraph, q, terminals, w=None, cap: int = 24
) -> dict:
    """Split Z(g;q,w) by the partition each subset induces on `terminals`.

    Returns a map from canonical partition (tuple of sorted blocks of
    terminal vertices) to its exact contribution; values sum to Z.
    """
    terminals = list(terminals)
    if len(set(terminals)) != len(terminals):
        raise ValueError("terminals must be distinct")
    m = g.edge_count
    if m > cap:
        raise BudgetExceededError(
            f"brute force cap exceeded: {m} edges > cap {cap}"
        )
    q = Rat(q)
    ws = _weights_list(g, w)
    n = g.vertex_count
    ends = g.ends
    qpow = [q ** k for k in range(n + 1)]
    out: dict[tuple, object] = {}
    for mask in range(1 << m):
        weight = ONE
        parent = list(range(n))
        comps = n
        mm = mask
        eid = 0
        while mm:
            if mm & 1:
                weight *= ws[eid]
                u, v = ends[eid]
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[rv] = ru
                    comps -= 1
            mm >>= 1
            eid += 1

        def root(x: int) -> int:
            while parent[x] != x:
                x = parent[x]
            return x

        key = _induced_partition(root, terminals)
        out[key] = out.get(key, ZERO) + weight * qpow[comps]
    return out


# -- deletion-contraction -------------------------------------------------
#
# Internal graph form: (n, edges) with edges a list of (u, v, w) and labels
# in range(n); unused labels count as isolated vertices (factor q each).


def canonical_encoding(n: int, edges) -> tuple:
    """Deterministic relabeled encoding used as a memo key.

    Equal keys imply identical labeled graphs after the relabeling, so memo
    hits can never produce a wrong value; isomorphic graphs may or may not
    collide (that only affects the hit rate).
    """
    if not edges:
        return (n,)
    # one-round signature refinement
    sig: list = [[] for _ in range(n)]
    for u, v, w in edges:
        t = (w.numerator, w.denominator)
        if u == v:
            sig[u].append(("loop", t))
        else:
            sig[u].append(("e", t))
            sig[v].append(("e", t))
    sigs = [tuple(sorted(s)) for s in sig]
    min_sig = min(sigs[v] for v in range(n))
    starts = [v for v in range(n) if sigs[v] == min_sig]
    if n > 12:
        starts = starts[:1]
    adj: list[list[tuple[int, tuple]]] = [[] for _ in range(n)]
    for u, v, w in edges:
        t = (w.numerator, w.denominator)
        adj[u].append((v, t))
        if u != v:
            adj[v].append((u, t))
    best = None
    for s in starts:
        order = {s: 0}
        queue = [s]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            fresh = sorted(
                (x for x in adj[u] if x[0] not in order),
                key=lambda x: (sigs[x[0]], x[1], x[0]),
            )
            for v, _t in fresh:
                if v not in order:
                    order[v] = len(order)
                    queue.append(v)
        for v in range(n):  # disconnected pieces appended in label order
            if v not in order:
                order[v] = len(order)
        enc = tuple(
            sorted(
                (
                    min(order[u], order[v]),
                    max(order[u], order[v]),
                    w.numerator,
                    w.denominator,
                )
                for u, v, w in edges
            )
        )
        key = (n, enc)
        if best is None or key < best:
            best = key
    return best


class _DelconState:
    __slots__ = ("q", "memo", "budget", "work")

    def __init__(self, q, memo: Optional[dict], budget: int):
        self.q = q
        self.memo = memo if memo is not None else {}
        self.budget = budget
        self.work = 0


def _reduce_and_split(n: int, edges: list, st: _DelconState):
    """Apply the closed-form reductions, then split into components.

    Returns (factor, components) with each component a compactly relabeled
    (cn, cedges) pair containing at least one edge.
    """
    q = st.q
    factor = ONE
    isolated_extra = 0  # vertices removed by pendant steps, already weighted
    while True:
        changed = False
        # loops: factor (1 + w) each
        kept = []
        for u, v, w in edges:
            if u == v:
                factor *= ONE + w
                changed = True
            else:
                kept.append((u, v, w))
        edges = kept
        if factor == ZERO:
            return ZERO, []
        # parallel classes: single edge of weight prod(1+w_i) - 1
        groups: dict[tuple[int, int], object] = {}
        order: list[tuple[int, int]] = []
        multi = False
        for u, v, w in edges:
            key = (u, v) if u < v else (v, u)
            if key in groups:
                groups[key] = (ONE + groups[key]) * (ONE + w) - ONE
                multi = True
            else:
                groups[key] = w
                order.append(key)
        if multi:
            changed = True
        edges = []
        for key in order:
            w = groups[key]
            if w != ZERO:
                edges.append((key[0], key[1], w))
            else:
                changed = True  # zero-weight edge contributes nothing
        # degree map (loops already gone)
        deg: dict[int, int] = {}
        for u, v, w in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        # pendant vertices: factor (q + w)
        pend = [x for x, d in deg.items() if d == 1]
        if pend:
            pendset = set(pend)
            kept = []
            for u, v, w in edges:
                if u in pendset or v in pendset:
                    factor *= q + w
                    # exactly one endpoint is consumed by the factor; if both
                    # are pendant the survivor still earns its q below
                    isolated_extra += 1
                    changed = True
                else:
                    kept.append((u, v, w))
            edges = kept
            continue  # recompute degrees from scratch
        # series vertices: degree 2, both edges simple, denominator nonzero
        did_series = False
        if edges:
            incid: dict[int, list[int]] = {}
            for i, (u, v, w) in enumerate(edges):
                incid.setdefault(u, []).append(i)
                incid.setdefault(v, []).append(i)
            for x, lst in incid.items():
                if len(lst) != 2:
                    continue
                i1, i2 = lst
                u1, v1, w1 = edges[i1]
                u2, v2, w2 = edges[i2]
                a = u1 if v1 == x else v1
                b = u2 if v2 == x else v2
                denom = q + w1 + w2
                if denom == ZERO:
                    continue
                factor *= denom
                isolated_extra += 1  # x disappears, already weighted
                new = [e for j, e in enumerate(edges) if j not in (i1, i2)]
                new.append((a, b, w1 * w2 / denom))
                edges = new
                did_series = True
                changed = True
                break  # indices stale; restart scan
        if did_series:
            continue
        if not changed:
            break
    # component split over the full label range; isolated vertices give q,
    # except the ones a pendant/series step already removed
    uf = UnionFind(n)
    for u, v, _w in edges:
        uf.union(u, v)
    comp_edges: dict[int, list] = {}
    for u, v, w in edges:
        comp_edges.setdefault(uf.find(u), []).append((u, v, w))
    isolated = 0
    for v in range(n):
        r = uf.find(v)
        if r == v and r not in comp_edges and uf.rank[v] == 0:
            isolated += 1
    isolated -= isolated_extra
    factor *= q ** isolated
    comps = []
    for lst in comp_edges.values():
        labels = sorted({x for u, v, _ in lst for x in (u, v)})
        relab = {x: i for i, x in enumerate(labels)}
        comps.append((len(labels), [(relab[u], relab[v], w) for u, v, w in lst]))
    return factor, comps


def _solve(n: int, edges: list, st: _DelconState):
    factor, comps = _reduce_and_split(n, edges, st)
    if factor == ZERO:
        return ZERO
    total = factor
    for cn, cedges in comps:
        key = None
        if cn <= 40:
            # q in the key lets one memo table serve several q values
            key = (st.q.numerator, st.q.denominator, canonical_encoding(cn, cedges))
            hit = st.memo.get(key)
            if hit is not None:
                total *= hit
                continue
        st.work += 1
        if st.work > st.budget:
            raise BudgetExceededError(
                f"deletion-contraction budget exceeded ({st.budget} branch nodes)"
            )
        # branch on an edge at a highest-degree vertex: contraction then
        # shrinks the graph fastest
        deg: dict[int, int] = {}
        for u, v, _w in cedges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        pick, pickscore = None, -1
        for i, (u, v, _w) in enumerate(cedges):
            s = max(deg[u], deg[v])
            if s > pickscore:
                pick, pickscore = i, s
        u0, v0, w0 = cedges[pick]
        rest = [e for i, e in enumerate(cedges) if i != pick]
        z_del = _solve(cn, rest, st)
        contracted = [
            (
                u if u != v0 else u0,
                v if v != v0 else u0,
                w,
            )
            for u, v, w in rest
        ]
        z_con = _solve(cn, contracted, st)  # v0 now isolated: solver adds q
        # contraction must not count the merged-away vertex, so divide one q
        val = z_del + w0 * z_con / st.q
        if key is not None:
            st.memo[key] = val
        total *= val
    return total


def z_delcon(
    g: WeightedMultigraph,
    q,
    w=None,
    budget: int = 2_000_000,
    memo: Optional[dict] = None,
):
    """Z(G;q,w) by deletion-contraction with exact closed-form reductions.

    `memo` may be shared across calls with the same q to reuse component
    values (keys embed the weights, so differing weight maps are safe; the
    caller must not share one table across different q values).
    """
    return z_delcon_report(g, q, w, budget, memo).value


def z_delcon_report(
    g: WeightedMultigraph,
    q,
    w=None,
    budget: int = 2_000_000,
    memo: Optional[dict] = None,
) -> EvalReport:
    q = Rat(q)
    if q == ZERO:
        # every term carries q^{kappa >= 1} unless there are no vertices
        val = ONE if g.vertex_count == 0 else ZERO
        return EvalReport(val, "delcon", 0)
    ws = _weights_list(g, w)
    edges = [(u, v, ws[i]) for i, (u, v) in enumerate(g.ends)]
    st = _DelconState(q, memo, budget)
    val = _solve(g.vertex_count, edges, st)
    return EvalReport(val, "delcon", st.work)


# -- Tutte polynomial and specializations ---------------------------------


def tutte_eval(g: WeightedMultigraph, x, y, cap: int = 24, budget: int = 2_000_000):
    """T(G;x,y) exactly.

    Away from the x=1 and y=1 lines this converts to the partition function
    with q=(x-1)(y-1) and constant weight y-1; on those lines it falls back
    to the direct subset sum (whose exponents are then still non-negative).
    """
    x = Rat(x)
    y = Rat(y)
    n = g.vertex_count
    kap = g.component_count()
    if x != ONE and y != ONE:
        q = (x - ONE) * (y - ONE)
        z = z_delcon(g, q, y - ONE, budget=budget)
        return z / ((y - ONE) ** n * (x - ONE) ** kap)
    m = g.edge_count
    if m > cap:
        raise BudgetExceededError(
            f"brute force cap exceeded on the x=1/y=1 line: {m} edges"
        )
    ends = g.ends
    total = ZERO
    for mask in range(1 << m):
        parent = list(range(n))
        comps = n
        size = 0
        mm = mask
        eid = 0
        while mm:
            if mm & 1:
                size += 1
                u, v = ends[eid]
                ru = u
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv:
                    parent[rv] = ru
                    comps -= 1
            mm >>= 1
            eid += 1
        e1 = comps - kap  # r(E) - r(A) >= 0
        e2 = size - n + comps  # nullity >= 0
        term = ONE
        if e1:
            term *= (x - ONE) ** e1
        if e2:
            term *= (y - ONE) ** e2
        total += term
    return total


def chromatic_flow_eval(g: WeightedMultigraph, lam, which: str):
    """Chromatic polynomial P(g;lam) or flow polynomial F(g;lam)."""
    lam = Rat(lam)
    n = g.vertex_count
    m = g.edge_count
    kap = g.component_count()
    if which == "chromatic":
        # P(G;lam) = Z(G;q=lam, w=-1)
        return z_delcon(g, lam, -ONE)
    if which == "flow":
        sign = -ONE if (m - n + kap) % 2 else ONE
        return sign * tutte_eval(g, ZERO, ONE - lam)
    raise ValueError(f"which must be 'chromatic' or 'flow', got {which!r}")


def colour_sum(g: WeightedMultigraph, q: int, y, budget: int = 5_000_000):
    """Sum over all q-colourings of y^(number of monochromatic edges)."""
    if not isinstance(q, int) or q < 1:
        raise ValueError("q must be a positive integer")
    y = Rat(y)
    n = g.vertex_count
    if q ** n > budget:
        raise BudgetExceededError(f"colour enumeration budget exceeded: {q}^{n}")
    ends = g.ends
    ypow: dict[int, object] = {0: ONE}
    total = ZERO
    for sigma in itertools.product(range(q), repeat=n):
        mono = 0
        for u, v in ends:
            if sigma[u] == sigma[v]:
                mono += 1
        p = ypow.get(mono)
        if p is None:
            p = y ** mono
            ypow[mono] = p
        total += p
    return total
