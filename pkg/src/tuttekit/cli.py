"""Command line surface.

Subcommands: eval (exact Z or Tutte values), gadget (weight synthesis
by hyperbola walk), reduce mis / reduce colouring (compile certified
decision instances), classify (point status), map (grid scan to TSV),
verify (replay invariant suites).  All rationals are read and printed
as exact p/q strings.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .classify import classify_point, map_region, records_to_tsv
from .colouring import reduce_colouring, thickened_graph
from .errors import TutteKitError
from .gadgets import materialize
from .ghat import assemble_ghat
from .graph import codec_parse, codec_serialize
from .params import implement_a, implement_b, implement_beta, param_set
from .rational import Rat, format_rational, parse_rational
from .certify import z_ghat_certified
from .transforms import cubicize
from .tutte import tutte_eval, z_delcon
from .verify import SUITES, run_suite
from .walks import hyperbola_walk

ONE = Rat(1)

CASE1_BASE = {"y1": Rat(2), "y3": Rat(-2)}
CASE2_BASE = {"y1": Rat(6, 5), "y2": Rat(-1, 2), "y3": Rat(-2)}

# lets "-3/2" pass as an option value instead of being read as a flag
_NEGATIVE_VALUE = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def _rat(text: str):
    return parse_rational(text, lenient=True)


def _load_graph(path: str):
    return codec_parse(Path(path).read_text(encoding="utf-8"))


def _fmt(r) -> str:
    return format_rational(Rat(r))


def _allow_negative_rationals(parser: argparse.ArgumentParser) -> None:
    parser._negative_number_matcher = _NEGATIVE_VALUE
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                _allow_negative_rationals(child)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tuttekit",
        description="exact Tutte/partition-function workbench",
    )
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a graph file exactly")
    ev.add_argument("graph")
    ev.add_argument("--q", type=_rat, help="multivariate parameter")
    ev.add_argument(
        "--weights",
        nargs="+",
        type=_rat,
        help="override edge weights: one value for all edges or one per edge",
    )
    ev.add_argument("--x", type=_rat, help="Tutte point, with --y")
    ev.add_argument("--y", type=_rat)

    gd = sub.add_parser("gadget", help="synthesize a weight by hyperbola walk")
    gd.add_argument("--q", type=_rat, required=True)
    gd.add_argument("--target", type=_rat, required=True, help="target y value")
    gd.add_argument("--tol", type=_rat, required=True)
    gd.add_argument(
        "--base",
        action="append",
        default=[],
        metavar="KEY=P/Q",
        help="base point, e.g. --base y1=2 --base y3=-2 (repeatable)",
    )

    rd = sub.add_parser("reduce", help="compile a decision instance")
    rdsub = rd.add_subparsers(dest="reduction", required=True)

    rm = rdsub.add_parser("mis", help="independent-set threshold instance")
    rm.add_argument("graph")
    rm.add_argument("--K", type=int, required=True, help="MIS threshold on the input graph")
    rm.add_argument("--q", type=_rat, default=Rat(6))
    rm.add_argument("--relaxed-eps", type=_rat, default=None)
    rm.add_argument("--relaxed-delta", type=_rat, default=None)
    rm.add_argument(
        "--max-gadgets",
        type=int,
        default=24,
        help="refuse instances whose certified evaluation would enumerate "
        "more gadget sites than this",
    )
    rm.add_argument("--out", default=None, help="output prefix")

    rc = rdsub.add_parser("colouring", help="3-colourability instance")
    rc.add_argument("graph")
    rc.add_argument("--x", type=_rat, required=True)
    rc.add_argument("--y", type=_rat, required=True)
    rc.add_argument("--out", default=None, help="output prefix")

    cl = sub.add_parser("classify", help="complexity status of a point")
    cl.add_argument("--x", type=_rat, required=True)
    cl.add_argument("--y", type=_rat, required=True)
    cl.add_argument(
        "--certificate", action="store_true", help="print the shift certificate"
    )

    mp = sub.add_parser("map", help="grid scan to a TSV record file")
    mp.add_argument("--xmin", type=_rat, required=True)
    mp.add_argument("--xmax", type=_rat, required=True)
    mp.add_argument("--ymin", type=_rat, required=True)
    mp.add_argument("--ymax", type=_rat, required=True)
    mp.add_argument("--step", type=_rat, required=True)
    mp.add_argument("--out", required=True)

    vf = sub.add_parser("verify", help="replay invariant suites")
    vf.add_argument("suite", nargs="?", default=None, choices=sorted(SUITES))

    _allow_negative_rationals(p)
    return p


def _cmd_eval(args) -> int:
    g = _load_graph(args.graph)
    point_mode = args.x is not None or args.y is not None
    if point_mode:
        if args.x is None or args.y is None or args.q is not None:
            raise TutteKitError("point mode needs --x and --y and no --q")
        print(_fmt(tutte_eval(g, args.x, args.y)))
        return 0
    if args.q is None:
        raise TutteKitError("need either --q or --x/--y")
    if args.weights:
        if len(args.weights) == 1:
            g = g.reweighted([args.weights[0]] * g.edge_count)
        elif len(args.weights) == g.edge_count:
            g = g.reweighted(list(args.weights))
        else:
            raise TutteKitError(
                f"--weights takes 1 or {g.edge_count} values, got {len(args.weights)}"
            )
    print(_fmt(z_delcon(g, args.q)))
    return 0


def _cmd_gadget(args) -> int:
    base = {}
    for item in args.base:
        if "=" not in item:
            raise TutteKitError(f"--base wants KEY=P/Q, got {item!r}")
        key, _, val = item.partition("=")
        if key not in ("y1", "y2", "y3"):
            raise TutteKitError(f"base key must be y1, y2 or y3, got {key!r}")
        base[key] = _rat(val)
    plan, impl = hyperbola_walk(args.q, base, args.target, args.tol)
    tt = materialize(impl.gadget)
    sys.stdout.write(codec_serialize(tt.graph))
    print(f"terminals {tt.s} {tt.t}")
    print(f"target-y {_fmt(args.target)}")
    print(f"target-weight {_fmt(impl.target)}")
    print(f"effective-weight {_fmt(impl.effective_weight)}")
    print(f"effective-y {_fmt(ONE + impl.effective_weight)}")
    print(f"scale {_fmt(impl.scale)}")
    lo, hi = impl.error_interval
    print(f"error-interval {_fmt(lo)} {_fmt(hi)}")
    print(f"edges {tt.graph.edge_count}")
    print(f"walk-steps {len(plan.steps)}")
    return 0


def _write(path: Path, text: str) -> None:
    path.write_text(text, encoding="utf-8")
    print(f"wrote {path}")


def _cmd_reduce_mis(args) -> int:
    g = _load_graph(args.graph)
    q = args.q
    relaxed = args.relaxed_eps is not None or args.relaxed_delta is not None
    cubic = all(g.degree(v) == 3 for v in range(g.vertex_count))
    if cubic:
        h, offset = g, 0
    else:
        h, offset = cubicize(g)
    n = h.vertex_count + 2 * h.edge_count  # after 3-stretching
    m = 3 * h.edge_count
    if n > args.max_gadgets:
        raise TutteKitError(
            f"instance has {n} gadget sites after cubicizing and "
            f"stretching; certified evaluation enumerates their joined "
            f"subsets, so this refuses to run past --max-gadgets "
            f"{args.max_gadgets}"
        )
    shift = offset + h.edge_count
    k_threshold = args.K + shift
    params = param_set(
        q,
        n,
        m,
        k_threshold,
        relaxed_eps=args.relaxed_eps,
        relaxed_delta=args.relaxed_delta,
    )
    base = CASE1_BASE if q > 5 else CASE2_BASE
    ia = implement_a(q, params, base)
    ib = implement_b(
        q, ia.effective_weight, params.delta, base, relaxed=relaxed
    )
    ibeta = implement_beta(Rat(-1, 2), params.delta, q=q, relaxed=relaxed)
    ghat = assemble_ghat(
        h,
        k_threshold,
        q,
        ibeta.effective_weight,
        ia.effective_weight,
        ib.effective_weight,
        params,
    )
    interval, ledger = z_ghat_certified(ghat)
    verdict = ledger["verdict"]

    prefix = args.out or f"{Path(args.graph).stem}.misK{args.K}"
    _write(Path(prefix + ".graph"), codec_serialize(ghat.graph))
    lines = [
        f"q {_fmt(q)}",
        f"beta {_fmt(ghat.beta)}",
        f"a {_fmt(ghat.report.a)}",
        f"b {_fmt(ghat.report.b)}",
        f"psi {_fmt(ghat.psi)}",
        f"K-input {args.K}",
        f"K-stretched {k_threshold}",
        f"stretch-shift {shift}",
        f"relaxed {'true' if relaxed else 'false'}",
        f"exact-sum {_fmt(ledger['exact_sum'])}",
        f"slack {_fmt(ledger['slack'])}",
        f"bound-paired-tight {_fmt(ledger['bound_paired_tight'])}",
        f"bound-paired-displayed {_fmt(ledger['bound_paired_displayed'])}",
        "bound-nonindependent-tight "
        + _fmt(ledger["bound_nonindependent_tight"]),
        "bound-nonindependent-displayed "
        + _fmt(ledger["bound_nonindependent_displayed"]),
        f"interval-lo {_fmt(interval[0])}",
        f"interval-hi {_fmt(interval[1])}",
        f"verdict {verdict}",
    ]
    _write(Path(prefix + ".cert"), "\n".join(lines) + "\n")
    print(f"MIS >= {args.K}: {verdict}")
    return 0 if verdict in ("YES", "NO") else 1


def _cmd_reduce_colouring(args) -> int:
    g = _load_graph(args.graph)
    cert = reduce_colouring(g, args.x, args.y)
    thick = thickened_graph(g, cert.k, args.y - ONE)
    prefix = args.out or f"{Path(args.graph).stem}.colouring"
    _write(Path(prefix + ".graph"), codec_serialize(thick))
    lines = [
        f"x {_fmt(cert.x)}",
        f"y {_fmt(cert.y)}",
        f"n {cert.n}",
        f"k {cert.k}",
        f"threshold {_fmt(cert.threshold)}",
        f"colour-route {_fmt(cert.colour_route)}",
        f"tutte-route {_fmt(cert.tutte_route)}",
        f"verdict {cert.verdict}",
    ]
    _write(Path(prefix + ".cert"), "\n".join(lines) + "\n")
    print(cert.verdict)
    return 0


def _cmd_classify(args) -> int:
    pc = classify_point(args.x, args.y)
    q = (args.x - ONE) * (args.y - ONE)
    print(
        "\t".join(
            (
                _fmt(args.x),
                _fmt(args.y),
                _fmt(q),
                pc.exact_status,
                pc.approx_status,
                pc.citation,
            )
        )
    )
    if args.certificate:
        cert = pc.certificate
        if cert is None:
            print("no shift certificate")
        else:
            print(f"certificate region {cert.region}")
            print(f"certificate dual {'true' if cert.dual else 'false'}")
            print(
                f"certificate base {_fmt(cert.base.x)} {_fmt(cert.base.y)}"
            )
            for i, (pt, impl) in enumerate(
                zip(cert.points, cert.implementations), start=1
            ):
                print(
                    f"shift {i}: y {_fmt(pt.y)} weight "
                    f"{_fmt(impl.effective_weight)} edges "
                    f"{impl.gadget.edge_count()}"
                )
    return 0


def _cmd_map(args) -> int:
    records = map_region(
        (args.xmin, args.xmax), (args.ymin, args.ymax), args.step
    )
    _write(Path(args.out), records_to_tsv(records))
    print(f"{len(records)} records")
    return 0


def _cmd_verify(args) -> int:
    names = [args.suite] if args.suite else sorted(SUITES)
    for name in names:
        count = run_suite(name)
        print(f"{name}: ok ({count} checks)")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "gadget":
            return _cmd_gadget(args)
        if args.command == "reduce":
            if args.reduction == "mis":
                return _cmd_reduce_mis(args)
            return _cmd_reduce_colouring(args)
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "map":
            return _cmd_map(args)
        if args.command == "verify":
            return _cmd_verify(args)
    except TutteKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unhandled command")
