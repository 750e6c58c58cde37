"""Replayable invariant suites.

Each suite re-runs a family of exact identities on freshly generated
inputs (fixed seed, deterministic) and raises TutteKitError on the
first violation.  The suites are intentionally quick; the heavyweight
end-to-end certifications live in the acceptance tests.  Returns the
number of checks performed so callers can report progress.
"""

from __future__ import annotations

import random

from .certify import (
    SdtPartition,
    all_sdt_partitions,
    decide_mis,
    eq10_value,
    gamma_coefficients,
    make_toy_assembly,
    z_assembly_interval,
    z_sdt_exact,
    z_sdt_table,
)
from .classify import classify_point, map_region, records_to_tsv
from .colouring import reduce_colouring
from .errors import TutteKitError, WalkError
from .gadgets import (
    edge_gadget,
    effective_weight,
    materialize,
    parallel,
    parallel_series_weight,
    series,
    stretch,
    substitute_edge,
    thicken,
    thicken_stretch_weight,
    Implementation,
)
from .ghat import assemble_ghat, psi_threshold
from .graph import WeightedMultigraph
from .params import param_set
from .rational import Rat
from .tutte import (
    colour_sum,
    tutte_eval,
    z_bruteforce,
    z_delcon,
)
from .shifts import certified_region, shift_certificate
from .walks import hyperbola_walk
from .ygadget import y_closed_forms, y_enumerated

__all__ = ["SUITES", "run_suite", "run_all"]

ZERO = Rat(0)
ONE = Rat(1)
_SEED = 20260823


def _fail(label: str):
    raise TutteKitError(f"invariant violated: {label}")


def _check(cond: bool, label: str) -> int:
    if not cond:
        _fail(label)
    return 1


def _rng() -> random.Random:
    return random.Random(_SEED)


def _rand_rat(rng, span=5, nonzero=False):
    while True:
        r = Rat(rng.randint(-span, span), rng.randint(1, span))
        if not nonzero or r != 0:
            return r


def _rand_graph(rng, max_n=5, max_m=8):
    n = rng.randint(1, max_n)
    edges = [
        (rng.randrange(n), rng.randrange(n), _rand_rat(rng))
        for _ in range(rng.randint(0, max_m))
    ]
    return WeightedMultigraph.from_edges(n, edges)


def suite_tutte() -> int:
    rng = _rng()
    checks = 0
    for _ in range(40):
        g = _rand_graph(rng)
        q = _rand_rat(rng, nonzero=True)
        checks += _check(z_delcon(g, q) == z_bruteforce(g, q), "delcon vs brute")
    for _ in range(5):
        g1, g2 = _rand_graph(rng, 4, 5), _rand_graph(rng, 4, 5)
        q = _rand_rat(rng, nonzero=True)
        checks += _check(
            z_delcon(g1.disjoint_union(g2), q) == z_delcon(g1, q) * z_delcon(g2, q),
            "disjoint union multiplicativity",
        )
    k4 = WeightedMultigraph.from_edges(
        4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    )
    checks += _check(tutte_eval(k4, 1, 1) == 16, "K4 spanning trees")
    tri = WeightedMultigraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    checks += _check(colour_sum(tri, 3, ZERO) == 6, "triangle proper colourings")
    return checks


def suite_gadgets() -> int:
    rng = _rng()
    checks = 0

    def rand_expr(depth):
        if depth == 0 or rng.random() < 0.3:
            return edge_gadget(_rand_rat(rng, nonzero=True))
        kind = rng.choice(["series", "parallel", "stretch", "thicken"])
        if kind == "series":
            return series(rand_expr(depth - 1), rand_expr(depth - 1))
        if kind == "parallel":
            return parallel(rand_expr(depth - 1), rand_expr(depth - 1))
        k = rng.randint(2, 3)
        child = rand_expr(depth - 1)
        return stretch(child, k) if kind == "stretch" else thicken(child, k)

    done = 0
    while done < 25:
        expr = rand_expr(2)
        q = _rand_rat(rng, nonzero=True)
        try:
            w_alg, s_alg = effective_weight(expr, q)
            w_exp, s_exp = effective_weight(materialize(expr), q)
        except TutteKitError:
            continue  # degenerate draw (vanishing splits); redraw
        checks += _check(
            (w_alg, s_alg) == (w_exp, s_exp), "composition tree vs enumeration"
        )
        done += 1
    for _ in range(20):
        q = _rand_rat(rng, nonzero=True)
        w1 = _rand_rat(rng, nonzero=True)
        w2 = _rand_rat(rng, nonzero=True)
        if q + w1 + w2 == 0 or w1 * w2 == 0:
            continue
        ws, _ = parallel_series_weight("series", w1, w2, q)
        if ws == 0:
            continue
        checks += _check(
            (ONE + q / ws) == (ONE + q / w1) * (ONE + q / w2), "series identity"
        )
    for _ in range(20):
        alpha = _rand_rat(rng, nonzero=True)
        q = _rand_rat(rng, nonzero=True)
        k = rng.randint(2, 6)
        wt, _pt = thicken_stretch_weight("thicken", alpha, q, k)
        acc = alpha
        for _ in range(k - 1):
            acc, _ = parallel_series_weight("parallel", acc, alpha, q)
        checks += _check(wt == acc, "thicken closed form vs fold")
    for _ in range(10):
        host = _rand_graph(rng, 4, 5)
        if host.edge_count == 0:
            continue
        q = _rand_rat(rng, nonzero=True)
        try:
            impl = Implementation.exact(
                parallel(edge_gadget(_rand_rat(rng, nonzero=True)), edge_gadget(1)), q
            )
        except TutteKitError:
            continue
        f = rng.randrange(host.edge_count)
        new_w = list(host.weights)
        new_w[f] = impl.effective_weight
        sub, scale = substitute_edge(host, f, impl)
        checks += _check(
            z_bruteforce(sub, q) == scale * z_bruteforce(host.reweighted(new_w), q),
            "substitution identity",
        )
    return checks


def suite_walks() -> int:
    checks = 0
    case1 = {"y1": 2, "y3": -2}
    case2 = {"y1": Rat(6, 5), "y2": Rat(-1, 2), "y3": -2}
    pi = Rat(1, 10**6)
    for q, base in ((Rat(6), case1), (Rat(-1), case2)):
        for t in (Rat(5), Rat(-5)):
            plan, impl = hyperbola_walk(q, base, t, pi)
            plan.validate()
            y_eff = ONE + impl.effective_weight
            if t > 0:
                checks += _check(t - pi <= y_eff <= t, "walk interval [T-pi, T]")
            else:
                checks += _check(t <= y_eff <= t + pi, "walk interval [T, T+pi]")
            # quadratic cap: sum of j * d_j over at most m steps, small base
            cap = 8 * plan.m * plan.m * max(plan.digits + [1]) + 8
            checks += _check(plan.gadget.edge_count() <= cap, "walk size cap")
    try:
        hyperbola_walk(Rat(6), case1, Rat(-3, 2), Rat(1, 100))
        _fail("unreachable negative target accepted")
    except WalkError:
        checks += 1
    return checks


def suite_ygadget() -> int:
    rng = _rng()
    checks = 0
    rep = y_closed_forms(2, 1, 1)
    checks += _check(
        (rep.z_joined, rep.z_split_one, rep.z_split_all) == (8, 28, 664),
        "frozen q=2 a=1 b=1 values",
    )
    checks += _check(rep.total() == 756, "frozen total")
    for _ in range(12):
        q = _rand_rat(rng, nonzero=True)
        a = _rand_rat(rng, nonzero=True)
        b = _rand_rat(rng, nonzero=True)
        rep = y_closed_forms(q, a, b)
        checks += _check(
            (rep.z_joined, rep.z_split_one, rep.z_split_all) == y_enumerated(q, a, b),
            "closed forms vs enumeration",
        )
    return checks


def suite_assembly() -> int:
    checks = 0
    theta = WeightedMultigraph.from_edges(2, [(0, 1, 1)] * 3)
    k4 = WeightedMultigraph.from_edges(
        4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    )
    for h, n, m, K in ((theta, 8, 9, 4), (k4, 16, 18, 7)):
        params = param_set(
            Rat(6), n, m, K, relaxed_eps=Rat(1, 2**10), relaxed_delta=Rat(1, 2**30)
        )
        ghat = assemble_ghat(h, K, Rat(6), Rat(-1, 10), Rat(1), Rat(1), params)
        checks += _check(
            ghat.graph.vertex_count == 6 * n - m, "assembled vertex count"
        )
        checks += _check(ghat.graph.edge_count == 6 * n + m, "assembled edge count")
        checks += _check(
            len(ghat.port_vertices()) == 3 * n - m, "port vertex count"
        )
        checks += _check(len(ghat.identifications) == m, "identification count")
        roles = list(ghat.roles)
        checks += _check(
            (roles.count("a"), roles.count("b"), roles.count("beta"))
            == (3 * n, 3 * n, m),
            "edge role census",
        )
    rep = y_closed_forms(2, 1, 1)
    psi = psi_threshold(rep, None, 1, 1, R=ONE, chi=ONE, nu=0)
    checks += _check(psi == Rat(664, 8), "psi closed form at the frozen gadget")
    return checks


def suite_certify() -> int:
    checks = 0
    idents = (((0, 1), (1, 0)),)
    links = (((0, 0), (1, 2)), ((0, 2), (1, 1)))
    toy = make_toy_assembly(2, 1, 1, Rat(-1, 10), 2, idents, links)
    table = z_sdt_table(toy)
    total = sum(
        z_sdt_exact(toy, sdt, table) for sdt in all_sdt_partitions(2)
    )
    checks += _check(
        total == z_delcon(toy.graph, Rat(2)), "partition sum vs direct Z"
    )
    link_only = make_toy_assembly(6, 1, 1, Rat(-1, 10), 2, (), links)
    link_table = z_sdt_table(link_only)
    for chosen in ((0,), (1,), (0, 1), ()):
        counts = tuple(1 if i in chosen else 3 for i in range(2))
        checks += _check(
            eq10_value(link_only, chosen)
            == z_sdt_exact(link_only, SdtPartition.from_counts(counts), link_table),
            "closed form vs exact class value",
        )
    for q, beta in ((Rat(6), Rat(-1, 10)), (Rat(-1), Rat(-1, 2))):
        t = make_toy_assembly(q, 1, 1, beta, 2, (), links)
        (lo, hi), _ledger = z_assembly_interval(t)
        z = z_delcon(t.graph, q)
        checks += _check(lo <= z <= hi, "certified interval contains Z")
    rng = _rng()
    for _ in range(10):
        n = rng.randint(2, 5)
        edges = []
        for _ in range(rng.randint(0, 7)):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:  # the coefficient route is for loopless graphs
                edges.append((u, v, 1))
        g = WeightedMultigraph.from_edges(n, edges)
        beta = _rand_rat(rng, nonzero=True)
        coeffs = gamma_coefficients(g, beta)
        q = _rand_rat(rng, nonzero=True)
        val = sum(c * q**j for j, c in enumerate(coeffs))
        checks += _check(
            val == z_delcon(g.reweighted([beta] * g.edge_count), q),
            "component-count polynomial vs direct Z",
        )
    checks += _check(decide_mis((10, 12), 8) == "YES", "decision YES branch")
    checks += _check(decide_mis((0, 1), 8) == "NO", "decision NO branch")
    checks += _check(
        decide_mis((1, 10), 8) == "INDETERMINATE", "decision gap branch"
    )
    return checks


def suite_colouring() -> int:
    checks = 0
    tri = WeightedMultigraph.from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    k4 = WeightedMultigraph.from_edges(
        4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)]
    )
    x, y = Rat(-5), Rat(1, 2)
    cert = reduce_colouring(tri, x, y)
    checks += _check(cert.k == 8, "triangle amplification exponent")
    checks += _check(cert.verdict == "3-colourable", "triangle verdict")
    conv = cert.tutte_route * (y - ONE) ** cert.n * (x - ONE)
    checks += _check(cert.colour_route == conv, "route agreement")
    cert = reduce_colouring(k4, x, y)
    checks += _check(cert.k == 10, "K4 amplification exponent")
    checks += _check(cert.verdict == "not-3-colourable", "K4 verdict")
    checks += _check(cert.threshold == Rat(81, 1024), "K4 threshold")
    c5 = WeightedMultigraph.from_edges(5, [(i, (i + 1) % 5, 1) for i in range(5)])
    checks += _check(
        reduce_colouring(c5, x, y).verdict == "3-colourable", "C5 verdict"
    )
    return checks


def suite_shifts() -> int:
    rng = _rng()
    checks = 0
    cert = shift_certificate(-2, -2)
    checks += _check(
        [p.y for p in cert.points] == [-2, 0, -2], "frozen (-2,-2) shifts"
    )
    cert = shift_certificate(3, -2)
    checks += _check(cert.points[1].y == Rat(1, 4), "frozen (3,-2) middle shift")
    cert = shift_certificate(-2, 3)
    checks += _check(cert.dual, "duality marker")
    done = 0
    while done < 40:
        x = Rat(rng.randint(-40, 40), rng.randint(1, 6))
        y = Rat(rng.randint(-40, 40), rng.randint(1, 6))
        if y == ONE or certified_region(x, y) is None:
            continue
        shift_certificate(x, y).validate()
        checks += 1
        done += 1
    return checks


def suite_classify() -> int:
    checks = 0
    expected = {
        (Rat(2), Rat(2)): ("FP-easy", "exact-easy"),
        (Rat(0), Rat(-1)): ("FP-easy", "exact-easy"),
        (Rat(-2), Rat(-2)): ("#P-hard", "no-FPRAS(negQ-q>5)"),
        (Rat(-5), Rat(1, 2)): ("#P-hard", "no-FPRAS(q=3-branch)"),
        (Rat(-3), Rat(0)): ("#P-hard", "open"),
    }
    for (x, y), (ex, ap) in expected.items():
        pc = classify_point(x, y)
        checks += _check(
            (pc.exact_status, pc.approx_status) == (ex, ap), f"fixture ({x},{y})"
        )
    grid = map_region((-5, 5), (-5, 5), ONE)
    checks += _check(len(grid) == 121, "coarse grid count")
    by_xy = {(r.x, r.y): r.point_class.approx_status for r in grid}
    swap = {
        "no-FPRAS(x>1&y<-1)": "no-FPRAS(y>1&x<-1)",
        "no-FPRAS(y>1&x<-1)": "no-FPRAS(x>1&y<-1)",
    }
    for r in grid:
        a = r.point_class.approx_status
        checks += _check(
            swap.get(a, a) == by_xy[(r.y, r.x)], "coordinate swap symmetry"
        )
        if a.startswith("no-FPRAS") and not (ZERO <= r.q <= Rat(5)):
            r.point_class.certificate.validate()
            checks += 1
    checks += _check(
        records_to_tsv(grid) == records_to_tsv(map_region((-5, 5), (-5, 5), ONE)),
        "byte-identical records",
    )
    return checks


SUITES = {
    "tutte": suite_tutte,
    "gadgets": suite_gadgets,
    "walks": suite_walks,
    "ygadget": suite_ygadget,
    "assembly": suite_assembly,
    "certify": suite_certify,
    "colouring": suite_colouring,
    "shifts": suite_shifts,
    "classify": suite_classify,
}


def run_suite(name: str) -> int:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    return SUITES[name]()


def run_all() -> dict:
    return {name: fn() for name, fn in SUITES.items()}
