"""Certified partition-function evaluation for assembled decision graphs.

Subsets of gadget edges are classified by the partition they induce on each
gadget's three ports (joined / two components / fully split).  Classes in
which every gadget is joined or fully split, with the joined gadgets
pairwise non-adjacent, factor exactly: a fugacity power per joined gadget
times the partition function of the residual port graph on the link edges.
Those classes are summed exactly; every other class is covered by a
rigorous remainder bound.  The result is an interval certain to contain
Z of the assembled graph, a ledger of all bounds, and a YES / NO /
INDETERMINATE verdict against the threshold Psi.

The port-graph checks lean on two external positivity theorems: for q > 5
and small negative edge weights the partition function of a loopless planar
graph is bounded below by (q - 5|w|)^|V|, and for q < 0 with weights in
[-2, 0] its coefficients as a polynomial in q alternate in sign.  Both are
re-verified numerically on every graph they are applied to.
"""

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import (
    BudgetExceededError,
    PreconditionError,
    TutteKitError,
)
from .graph import WeightedMultigraph
from .rational import Rat
from .tutte import canonical_encoding
from .unionfind import UnionFind
from .ygadget import y_closed_forms

__all__ = [
    "SdtPartition",
    "GammaReport",
    "ToyAssembly",
    "make_toy_assembly",
    "all_sdt_partitions",
    "z_sdt_table",
    "z_sdt_exact",
    "build_gamma",
    "gamma_quotient",
    "strip_loops",
    "gamma_check",
    "eq10_value",
    "z_assembly_interval",
    "z_ghat_certified",
    "decide_mis",
]

ZERO = Rat(0)
ONE = Rat(1)


# -- gadget-class partitions ----------------------------------------------


@dataclass(frozen=True)
class SdtPartition:
    """Assignment of every gadget to joined / paired / split.

    joined: the gadget's three ports fall in one component; paired: two
    components; split: three.  The three sets must partition the index set.
    """

    gadget_count: int
    joined: frozenset
    paired: frozenset
    split: frozenset

    def __post_init__(self):
        allv = set(range(self.gadget_count))
        j, p, s = set(self.joined), set(self.paired), set(self.split)
        if j | p | s != allv or len(j) + len(p) + len(s) != self.gadget_count:
            raise PreconditionError("classes must partition the gadget set")

    @staticmethod
    def from_counts(counts) -> "SdtPartition":
        counts = tuple(counts)
        return SdtPartition(
            gadget_count=len(counts),
            joined=frozenset(i for i, c in enumerate(counts) if c == 1),
            paired=frozenset(i for i, c in enumerate(counts) if c == 2),
            split=frozenset(i for i, c in enumerate(counts) if c == 3),
        )

    def counts(self) -> tuple:
        out = []
        for i in range(self.gadget_count):
            out.append(1 if i in self.joined else 2 if i in self.paired else 3)
        return tuple(out)


def all_sdt_partitions(gadget_count: int):
    for counts in product((1, 2, 3), repeat=gadget_count):
        yield SdtPartition.from_counts(counts)


# -- toy assemblies --------------------------------------------------------


@dataclass(frozen=True)
class ToyAssembly:
    """A hand-built cluster of gadget copies for brute-force cross-checks."""

    graph: WeightedMultigraph
    roles: tuple
    q: object
    beta: object
    report: object
    triples: tuple

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


def make_toy_assembly(
    q, a, b, beta, gadget_count: int, identifications=(), links=()
) -> ToyAssembly:
    """Glue `gadget_count` copies at the given ((g,p),(g,p)) port pairs and
    lay weight-beta link edges between the given port pairs."""
    q, a, b, beta = Rat(q), Rat(a), Rat(b), Rat(beta)
    if gadget_count < 1:
        raise PreconditionError("need at least one gadget")

    def raw(gp) -> int:
        g, p = gp
        if not (0 <= g < gadget_count and 0 <= p < 3):
            raise PreconditionError(f"bad port reference {gp}")
        return 6 * g + p

    uf = UnionFind(6 * gadget_count)
    for left, right in identifications:
        uf.union(raw(left), raw(right))
    roots = sorted({uf.find(x) for x in range(6 * gadget_count)})
    final = {r: i for i, r in enumerate(roots)}

    def fid(x: int) -> int:
        return final[uf.find(x)]

    edges = []
    roles = []
    for g in range(gadget_count):
        for p in range(3):
            edges.append((fid(6 * g + p), fid(6 * g + 3 + p), b))
            roles.append("b")
        for p in range(3):
            edges.append((fid(6 * g + 3 + p), fid(6 * g + 3 + (p + 1) % 3), a))
            roles.append("a")
    for left, right in links:
        edges.append((fid(raw(left)), fid(raw(right)), beta))
        roles.append("beta")
    graph = WeightedMultigraph.from_edges(len(roots), edges)
    triples = tuple(
        (fid(6 * g + 0), fid(6 * g + 1), fid(6 * g + 2))
        for g in range(gadget_count)
    )
    return ToyAssembly(
        graph=graph,
        roles=tuple(roles),
        q=q,
        beta=beta,
        report=y_closed_forms(q, a, b),
        triples=triples,
    )


# -- exact class sums by enumeration ---------------------------------------


def z_sdt_table(assembly, cap: int = 18) -> dict:
    """Class-pattern -> exact contribution, by enumerating gadget subsets.

    Keys are per-gadget component-count tuples (1 joined, 2 paired,
    3 split); values sum over those subsets and over all link subsets to
    the full w(A)w(B)q^kappa contribution.  Values over all keys sum to Z.
    """
    g = assembly.graph
    q = Rat(assembly.q)
    gadget_eids = assembly.gadget_edge_ids()
    link_eids = assembly.link_edge_ids()
    if len(gadget_eids) > cap:
        raise BudgetExceededError(
            f"{len(gadget_eids)} gadget edges exceed cap {cap}"
        )
    if len(link_eids) > 12:
        raise BudgetExceededError(f"{len(link_eids)} link edges exceed cap 12")
    nv = g.vertex_count
    ge_ends = [g.ends[e] for e in gadget_eids]
    ge_w = [g.weights[e] for e in gadget_eids]
    link_ends = [g.ends[e] for e in link_eids]
    link_w = [g.weights[e] for e in link_eids]
    triples = assembly.triples
    qpow = [q**k for k in range(nv + 1)]

    # weight of every gadget-edge subset, built bottom-up
    mg = len(gadget_eids)
    wa = [ONE] * (1 << mg)
    for mask in range(1, 1 << mg):
        low = mask & (-mask)
        wa[mask] = wa[mask ^ low] * ge_w[low.bit_length() - 1]

    inner_cache: dict[tuple, object] = {}
    table: dict[tuple, object] = {}
    for mask in range(1 << mg):
        parent = list(range(nv))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = nv
        mm = mask
        while mm:
            low = mm & (-mm)
            mm ^= low
            u, v = ge_ends[low.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        key = tuple(
            len({find(t) for t in tri}) for tri in triples
        )
        # the link sum only sees the component labels of the link endpoints
        labels: dict[int, int] = {}
        sig = []
        for u, v in link_ends:
            for x in (u, v):
                r = find(x)
                if r not in labels:
                    labels[r] = len(labels)
                sig.append(labels[r])
        sigt = tuple(sig)
        inner = inner_cache.get(sigt)
        if inner is None:
            t = len(labels)
            inner = ZERO
            for bmask in range(1 << len(link_ends)):
                lp = list(range(t))

                def lfind(x: int) -> int:
                    while lp[x] != x:
                        lp[x] = lp[lp[x]]
                        x = lp[x]
                    return x

                bw = ONE
                merged = 0
                bm = bmask
                while bm:
                    low = bm & (-bm)
                    bm ^= low
                    i = low.bit_length() - 1
                    bw *= link_w[i]
                    ru, rv = lfind(sig[2 * i]), lfind(sig[2 * i + 1])
                    if ru != rv:
                        lp[ru] = rv
                        merged += 1
                inner += bw * qpow[t - merged]
            inner_cache[sigt] = inner
        val = wa[mask] * qpow[comps - len(labels)] * inner
        table[key] = table.get(key, ZERO) + val
    return table


def z_sdt_exact(assembly, sdt: SdtPartition, table: Optional[dict] = None):
    """Exact contribution of one class; `table` may be precomputed."""
    if sdt.gadget_count != len(assembly.triples):
        raise PreconditionError("partition does not match the assembly")
    if table is None:
        table = z_sdt_table(assembly)
    return table.get(sdt.counts(), ZERO)


# -- port graphs -----------------------------------------------------------


def build_gamma(assembly) -> tuple[WeightedMultigraph, dict]:
    """(port graph on the link edges, instance-vertex -> port-vertex map)."""
    ports = assembly.port_vertices()
    remap = {v: i for i, v in enumerate(ports)}
    g = assembly.graph
    edges = [
        (remap[g.ends[e][0]], remap[g.ends[e][1]], g.weights[e])
        for e in assembly.link_edge_ids()
    ]
    return WeightedMultigraph.from_edges(len(ports), edges), remap


def gamma_quotient(assembly, chosen) -> WeightedMultigraph:
    """Port graph with each chosen gadget's three ports merged.

    Loops produced by the merging are kept; strip_loops removes them when a
    loopless graph is required.
    """
    gamma, remap = build_gamma(assembly)
    uf = UnionFind(gamma.vertex_count)
    for x in chosen:
        p0, p1, p2 = assembly.triples[x]
        uf.union(remap[p0], remap[p1])
        uf.union(remap[p0], remap[p2])
    roots = sorted({uf.find(v) for v in range(gamma.vertex_count)})
    final = {r: i for i, r in enumerate(roots)}
    edges = [
        (final[uf.find(u)], final[uf.find(v)], gamma.weights[e])
        for e, (u, v) in enumerate(gamma.ends)
    ]
    return WeightedMultigraph.from_edges(len(roots), edges)


def strip_loops(g: WeightedMultigraph) -> tuple[WeightedMultigraph, int]:
    """Remove loop edges; returns (loopless graph, number removed)."""
    keep = [
        (u, v, g.weights[e]) for e, (u, v) in enumerate(g.ends) if u != v
    ]
    return (
        WeightedMultigraph.from_edges(g.vertex_count, keep),
        g.edge_count - len(keep),
    )


# -- port-graph partition function as a polynomial in q --------------------


def _coeffs_by_enumeration(nv: int, edges, beta, cap: int = 20) -> list:
    """Coefficient vector C[0..nv] of sum_B beta^|B| q^kappa(B)."""
    m = len(edges)
    if m > cap:
        raise BudgetExceededError(f"component with {m} edges exceeds cap {cap}")
    bpow = [beta**k for k in range(m + 1)]
    coeffs = [ZERO] * (nv + 1)
    for mask in range(1 << m):
        parent = list(range(nv))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = nv
        size = 0
        mm = mask
        while mm:
            low = mm & (-mm)
            mm ^= low
            size += 1
            u, v = edges[low.bit_length() - 1]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        coeffs[comps] += bpow[size]
    return coeffs


def _convolve(p, r) -> list:
    out = [ZERO] * (len(p) + len(r) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, rj in enumerate(r):
            if rj == 0:
                continue
            out[i + j] += pi * rj
    return out


def gamma_coefficients(
    g: WeightedMultigraph, beta, memo: Optional[dict] = None
) -> list:
    """C[0..|V|] with Z(g;q,beta) = sum_j C[j] q^j, by components.

    Loops are not allowed here; the caller strips them first and carries
    the (1+beta)-per-loop factor separately.
    """
    beta = Rat(beta)
    for e in range(g.edge_count):
        if g.is_loop(e):
            raise PreconditionError("loopless graph required")
    if memo is None:
        memo = {}
    bkey = (beta.numerator, beta.denominator)
    poly = [ONE]
    for comp in g.components():
        pos = {v: i for i, v in enumerate(comp)}
        comp_set = set(comp)
        edges = [
            (pos[u], pos[v], g.weights[e])
            for e, (u, v) in enumerate(g.ends)
            if u in comp_set
        ]
        key = (canonical_encoding(len(comp), edges), bkey)
        cvec = memo.get(key)
        if cvec is None:
            cvec = tuple(
                _coeffs_by_enumeration(
                    len(comp), [(u, v) for u, v, _ in edges], beta
                )
            )
            memo[key] = cvec
        poly = _convolve(poly, cvec)
    return list(poly)


@dataclass(frozen=True)
class GammaReport:
    """Exact coefficient data and certified lower bound for a port graph."""

    graph: WeightedMultigraph
    nu: int
    case: int
    coefficients: tuple  # C_1 .. C_nu
    signs: tuple  # -1 / 0 / +1 per coefficient
    value: object
    lower_bound: object


def _sign(x) -> int:
    return 0 if x == 0 else (1 if x > 0 else -1)


def gamma_check(
    gamma: WeightedMultigraph, q, beta, memo: Optional[dict] = None
) -> GammaReport:
    """Evaluate a port graph and certify the positivity facts used on it.

    q > 5: checks 0 < (q-5|beta|)^|V| <= Z (planar, small-weight regime).
    q < 0 with beta in [-2,0]: checks the q-polynomial's coefficient signs
    alternate, the top coefficient is 1, and |Z| >= |q|^|V|.
    A failed check raises with the offending graph encoded in the message;
    it would mean a bug on our side, not a false theorem.
    """
    q, beta = Rat(q), Rat(beta)
    nu = gamma.vertex_count
    if nu < 1:
        raise PreconditionError("port graph needs at least one vertex")
    for e in range(gamma.edge_count):
        if gamma.weights[e] != beta:
            raise PreconditionError("port graph edges must all carry beta")
    coeffs = gamma_coefficients(gamma, beta, memo)
    value = ZERO
    qp = ONE
    for j in range(1, nu + 1):
        qp *= q
        value += coeffs[j] * qp
    signs = tuple(_sign(coeffs[j]) for j in range(1, nu + 1))

    def blame(msg: str) -> TutteKitError:
        enc = canonical_encoding(
            nu, [(u, v, gamma.weights[e]) for e, (u, v) in enumerate(gamma.ends)]
        )
        return TutteKitError(f"{msg}; q={q}, beta={beta}, graph={enc}")

    if q > 5:
        chi = min(ONE, (q - 5) / 6)
        if not q > 5 * abs(beta) + chi:
            raise PreconditionError(
                f"need q > 5|beta| + chi, got q={q}, beta={beta}"
            )
        bound = (q - 5 * abs(beta)) ** nu
        if not value > 0:
            raise blame("positive partition function expected")
        if not value >= bound:
            raise blame("vertex-peeling lower bound violated")
        if not bound >= chi**nu:
            raise blame("chi^nu does not undercut the peeling bound")
        return GammaReport(gamma, nu, 1, tuple(coeffs[1:]), signs, value, bound)
    if q < 0:
        if not (-2 <= beta <= 0):
            raise PreconditionError(f"need beta in [-2,0], got {beta}")
        if coeffs[nu] != 1:
            raise blame("leading coefficient must be 1")
        for j in range(1, nu + 1):
            s = signs[j - 1]
            if s != 0 and s != (1 if (nu - j) % 2 == 0 else -1):
                raise blame(f"coefficient sign pattern broken at degree {j}")
        if not (value > 0 if nu % 2 == 0 else value < 0):
            raise blame("value sign must follow the parity of |V|")
        bound = abs(q) ** nu
        if not abs(value) >= bound:
            raise blame("surviving-term lower bound violated")
        return GammaReport(gamma, nu, 2, tuple(coeffs[1:]), signs, value, bound)
    raise PreconditionError(f"q={q} outside both certified regimes")


# -- closed-form class values ---------------------------------------------


def _adjacent(assembly, x: int, y: int) -> bool:
    return bool(set(assembly.triples[x]) & set(assembly.triples[y]))


def eq10_value(assembly, chosen, memo: Optional[dict] = None):
    """Exact value of the class where exactly `chosen` gadgets are joined,
    the rest fully split, for pairwise non-adjacent `chosen`.

    fugacity^|chosen| * Z_split_all^n * q^(-3n) * Z(port quotient; q, beta).
    """
    chosen = sorted(set(chosen))
    for i, x in enumerate(chosen):
        for y in chosen[i + 1 :]:
            if _adjacent(assembly, x, y):
                raise PreconditionError(
                    f"gadgets {x} and {y} share a port; class has no closed form"
                )
    q = Rat(assembly.q)
    rep = assembly.report
    n = assembly.gadget_count
    gamma_s = gamma_quotient(assembly, chosen)
    grep = gamma_check(gamma_s, q, assembly.beta, memo)
    fugacity = q * q * rep.z_joined / rep.z_split_all
    return (
        fugacity ** len(chosen)
        * rep.z_split_all**n
        * q ** (-3 * n)
        * grep.value
    )


# -- certified evaluation --------------------------------------------------


def _independent_masks(assembly) -> list:
    n = assembly.gadget_count
    nbr = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if _adjacent(assembly, x, y):
                nbr[x] |= 1 << y
                nbr[y] |= 1 << x
    masks = [0]
    for v in range(n):
        bit = 1 << v
        masks.extend([m | bit for m in masks if not (nbr[v] & m)])
    return masks


def _require(cond: bool, label: str) -> None:
    if not cond:
        raise TutteKitError(f"certificate prerequisite failed: {label}")


def _exact_class_sum(assembly, q, beta) -> tuple:
    """Per-size counts and Z(Gamma_S) sums over every independent joined set."""
    n = assembly.gadget_count
    memo: dict = {}
    count_by_size = [0] * (n + 1)
    gamma_sum_by_size = [ZERO] * (n + 1)
    for mask in _independent_masks(assembly):
        chosen = [x for x in range(n) if mask >> x & 1]
        grep = gamma_check(gamma_quotient(assembly, chosen), q, beta, memo)
        count_by_size[len(chosen)] += 1
        gamma_sum_by_size[len(chosen)] += grep.value
    return count_by_size, gamma_sum_by_size, memo


def _tight_bounds(report, q, beta, n, links, ports, delta_cap, count_by_size):
    """Remainder bounds recomputed from this instance's exact gadget sums.

    mixed: classes where some gadget is paired; nonindep: joined-or-split
    classes whose joined set is not independent (each has a link edge
    looping inside a merged adjacent pair, worth a factor |1+beta| <=
    delta_cap).  Shared ports inside a joined cluster shave exact q-powers
    off the closed form; max(1, 1/|q|)^(3n) absorbs them when |q| < 1.
    """
    absq = abs(q)
    Q = max(ONE, absq)
    zs = report.z_joined / q
    zd = report.z_split_one / (q * q)
    zt = report.z_split_all / q**3
    azs, azd, azt = abs(zs), abs(zd), abs(zt)
    qinv = max(ONE, ONE / absq) ** (3 * n)
    link_factor = (1 + abs(beta)) ** links * Q**ports * qinv
    mixed = ((azs + 3 * azd + azt) ** n - (azs + azt) ** n) * link_factor
    indep_weight = ZERO
    for k in range(n + 1):
        if count_by_size[k]:
            indep_weight += count_by_size[k] * azs**k * azt ** (n - k)
    gap = (azs + azt) ** n - indep_weight
    if gap == 0:
        nonindep = ZERO
    else:
        nonindep = (
            delta_cap
            * gap
            * (1 + abs(beta)) ** (links - 1)
            * Q**ports
            * qinv
        )
    return mixed, nonindep


def z_assembly_interval(assembly) -> tuple:
    """Certified interval for a toy cluster, cross-checkable by brute force.

    Same closed-form route as the full certification: exact class values
    for every independent joined set, tight profile bounds for the rest.
    The non-independent bound leans on a link edge looping inside every
    merged adjacent pair, so such a link must exist; clusters shaped like
    the real assembly always have one.
    """
    q, beta = Rat(assembly.q), Rat(assembly.beta)
    n = assembly.gadget_count
    g = assembly.graph
    links = assembly.link_edge_ids()
    for x in range(n):
        for y in range(x + 1, n):
            if not _adjacent(assembly, x, y):
                continue
            pool = set(assembly.triples[x]) | set(assembly.triples[y])
            if not any(
                g.ends[e][0] in pool and g.ends[e][1] in pool for e in links
            ):
                raise PreconditionError(
                    f"adjacent gadgets {x},{y} carry no link edge to loop"
                )
    count_by_size, gamma_sum_by_size, _ = _exact_class_sum(assembly, q, beta)
    rep = assembly.report
    zs = rep.z_joined / q
    zt = rep.z_split_all / q**3
    exact_sum = ZERO
    for k in range(n + 1):
        if count_by_size[k]:
            exact_sum += zs**k * zt ** (n - k) * gamma_sum_by_size[k]
    mixed, nonindep = _tight_bounds(
        rep,
        q,
        beta,
        n,
        len(links),
        len(assembly.port_vertices()),
        abs(ONE + beta),
        count_by_size,
    )
    slack = mixed + nonindep
    ledger = {
        "exact_sum": exact_sum,
        "slack": slack,
        "bound_paired": mixed,
        "bound_nonindependent": nonindep,
        "count_by_size": tuple(count_by_size),
    }
    return (exact_sum - slack, exact_sum + slack), ledger


def z_ghat_certified(ghat) -> tuple:
    """Rigorous interval for Z of the assembled graph, plus bound ledger.

    The exact part sums the closed-form classes over every pairwise
    non-adjacent joined set (any size).  Two remainder bounds cover the
    rest: classes where some gadget is paired, and joined-or-split classes
    whose joined set is not independent.  Both are computed from the
    instance's exact gadget sums (tight form) and also in the coarser
    constants-only displayed form; the tight form is checked to undercut
    the displayed one and the displayed sum is used as the interval slack.
    """
    params = ghat.params
    params.validate()
    q, beta = Rat(ghat.q), Rat(ghat.beta)
    rep = ghat.report
    n = ghat.gadget_count
    m = len(ghat.link_edge_ids())
    K = params.K
    psi = ghat.psi
    absq = abs(q)
    Q = max(ONE, absq)
    delta, eps = params.delta, params.eps
    a, b = Rat(rep.a), Rat(rep.b)

    # re-derive every inequality the class bounds stand on
    _require(params.q == q and params.n == n and params.m == m, "shape match")
    _require(abs(rep.d) <= delta, "|b + a^2 + 3a + q| <= delta")
    _require(eps < rep.e <= 2 * eps, "a-window eps < a^3+3a^2-q <= 2 eps")
    _require(abs(1 + beta) < delta, "|1 + beta| < delta")
    _require(
        params.a_minus.lo <= abs(a) <= params.a_plus.hi, "a in [A-, A+]"
    )
    _require(
        params.b_minus <= abs(b) <= params.b_plus, "b in [B-, B+]"
    )
    ring = absq**3 * abs(a * a * (a + 3))
    _require(params.L.lo <= ring * eps / 2, "separation floor L")
    _require(
        ring * eps / 2 <= abs(rep.z_split_all) <= 3 * eps * ring,
        "split-all sum within its separation band",
    )
    _require(
        abs(rep.z_joined) >= absq * abs(a * a * (a + 3)) * params.b_minus**3,
        "joined sum above its floor",
    )
    _require(abs(rep.z_joined) <= params.tau.hi, "joined sum under tau")
    _require(
        abs(rep.z_split_one) <= delta * params.mu.hi, "one-split sum under delta mu"
    )
    fugacity = q * q * rep.z_joined / rep.z_split_all
    _require(abs(fugacity) >= params.R, "fugacity magnitude above R")
    if q > 0:
        _require(fugacity > 0, "fugacity positive in the q > 5 case")

    zs = rep.z_joined / q
    zt = rep.z_split_all / q**3

    # exact part: all closed-form classes
    count_by_size, gamma_sum_by_size, _memo = _exact_class_sum(ghat, q, beta)
    exact_sum = ZERO
    for k in range(n + 1):
        if count_by_size[k] == 0:
            continue
        exact_sum += zs**k * zt ** (n - k) * gamma_sum_by_size[k]

    # remainder bounds in the tight profile form; bound 1 covers classes
    # with a paired gadget, bound 2 joined sets that are not independent
    mixed_tight, nonindep_tight = _tight_bounds(
        rep, q, beta, n, m, 3 * n - m, delta, count_by_size
    )
    # the constants-only displayed forms of the same two bounds
    qcorr = Q ** (6 * n) / absq ** (6 * n)
    mixed_displayed = (
        Rat(3) ** n
        * Rat(2) ** (6 * n)
        * delta
        * params.mu.hi
        * params.tau.hi ** (n - 1)
        * qcorr
        * Rat(2) ** (2 * m)
    )
    nonindep_displayed = (
        Rat(2) ** n
        * delta
        * Rat(2) ** (6 * n)
        * params.tau.hi**n
        * qcorr
        * Rat(2) ** (2 * m)
    )
    _require(mixed_tight <= mixed_displayed, "tight paired-class bound undercuts displayed")
    _require(
        nonindep_tight <= nonindep_displayed,
        "tight non-independent bound undercuts displayed",
    )
    slack = mixed_displayed + nonindep_displayed
    interval = (exact_sum - slack, exact_sum + slack)
    verdict = decide_mis(interval, psi)
    ledger = {
        "exact_sum": exact_sum,
        "slack": slack,
        "bound_paired_tight": mixed_tight,
        "bound_paired_displayed": mixed_displayed,
        "bound_nonindependent_tight": nonindep_tight,
        "bound_nonindependent_displayed": nonindep_displayed,
        "psi": psi,
        "fugacity": fugacity,
        "count_by_size": tuple(count_by_size),
        "gamma_sum_by_size": tuple(gamma_sum_by_size),
        "verdict": verdict,
    }
    if verdict == "INDETERMINATE":
        ledger["advice"] = "tighten delta/eps"
    return interval, ledger


def decide_mis(z_interval, psi) -> str:
    """YES when |Z| is certainly >= 3 Psi/4, NO when certainly <= Psi/4."""
    lo, hi = Rat(z_interval[0]), Rat(z_interval[1])
    psi = Rat(psi)
    if psi <= 0:
        raise PreconditionError("threshold must be positive")
    if lo > hi:
        raise PreconditionError("empty interval")
    min_abs = ZERO if lo <= 0 <= hi else min(abs(lo), abs(hi))
    max_abs = max(abs(lo), abs(hi))
    if min_abs >= 3 * psi / 4:
        return "YES"
    if max_abs <= psi / 4:
        return "NO"
    return "INDETERMINATE"
