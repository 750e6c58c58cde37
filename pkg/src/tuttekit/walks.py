"""Synthesis of edge weights by walking along a fixed-q hyperbola.

Series composition multiplies effective x-coordinates and parallel
composition multiplies effective y-coordinates, where x = 1 + q/w and
y = 1 + w for an effective weight w.  Starting from one or two available
base weights this module builds a gadget whose effective y-coordinate lands
inside an exact rational interval [T - pi, T] around any target T > 1
(or [T, T + pi] for T < -1, via one extra parallel factor with a negative
base weight).  All digit choices are made by exact rational comparisons;
no floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import WalkError
from .gadgets import (
    GadgetExpr,
    Implementation,
    edge_gadget,
    effective_weight,
    parallel,
    stretch,
    thicken,
)
from .rational import Rat, max_power_at_most, min_power_at_least

__all__ = ["ShiftPoint", "WalkPlan", "hyperbola_walk"]

ZERO = Rat(0)
ONE = Rat(1)
TWO = Rat(2)


@dataclass(frozen=True)
class ShiftPoint:
    """A point (x, y) on the hyperbola (x-1)(y-1) = q, with alpha = y - 1."""

    x: object
    y: object
    q: object
    alpha: object

    @staticmethod
    def from_qy(q, y) -> "ShiftPoint":
        q, y = Rat(q), Rat(y)
        if y == ONE:
            raise WalkError("shift point with y = 1 has no x-coordinate")
        return ShiftPoint(q / (y - ONE) + ONE, y, q, y - ONE)

    def __post_init__(self):
        if (self.x - ONE) * (self.y - ONE) != self.q:
            raise ValueError("shift point off its hyperbola")
        if self.alpha != self.y - ONE:
            raise ValueError("alpha inconsistent with y")


@dataclass
class WalkPlan:
    """Record of one hyperbola walk, with enough data to re-verify it."""

    case: str  # "q>5" or "q<0"
    q: object
    target: object  # T (the positive inner target)
    tolerance: object  # pi
    base_points: dict
    x1: object
    y1: object
    m: int
    steps: list[int] = field(default_factory=list)  # the j values used
    y_values: list = field(default_factory=list)  # y_j per step
    digits: list[int] = field(default_factory=list)  # d_j per step
    y_final: object = None  # product of y_j^{d_j}
    y_m: object = None
    gadget: Optional[GadgetExpr] = None
    bootstrap: Optional[dict] = None
    negative_wrap: Optional[dict] = None

    def validate(self) -> None:
        """Exact re-check of every walk guarantee."""
        T, pi = self.target, self.tolerance
        prod = ONE
        rem = T
        for j, yj, dj in zip(self.steps, self.y_values, self.digits):
            if dj < 0:
                raise WalkError("negative digit")
            if yj <= ONE:
                raise WalkError("walk step with y_j <= 1")
            p = yj ** dj
            if p > rem:
                raise WalkError("digit overshoots the remaining target")
            if yj * p <= rem:
                raise WalkError("digit not maximal")
            prod *= p
            rem /= p
        if prod != self.y_final:
            raise WalkError("recorded product mismatch")
        # interval guarantees
        if not (T / self.y_m <= self.y_final <= T):
            raise WalkError("final value outside [T/y_m, T]")
        if not (T - pi <= self.y_final <= T):
            raise WalkError("final value outside [T - pi, T]")


def _case1_base(q, base) -> tuple:
    y1p = base.get("y1")
    if y1p is None or abs(Rat(y1p)) <= ONE:
        raise WalkError("q > 5 walk needs a base weight with |y| > 1")
    y1p = Rat(y1p)
    y1 = y1p * y1p
    x1 = q / (y1 - ONE) + ONE
    gadget = thicken(edge_gadget(y1p - ONE), 2)
    return x1, y1, gadget, None


def _case2_base(q, base) -> tuple:
    """Reach a point with x1 < -1, bootstrapping through y'_2 if needed."""
    y1p = base.get("y1")
    if y1p is None or abs(Rat(y1p)) <= ONE:
        raise WalkError("q < 0 walk needs a base weight with |y| > 1")
    y1p = Rat(y1p)
    aq = abs(q)
    y1sq = y1p * y1p
    half = ONE + aq / TWO
    if y1sq < half:
        y1 = y1sq
        x1 = q / (y1 - ONE) + ONE
        return x1, y1, thicken(edge_gadget(y1p - ONE), 2), None
    y2p = base.get("y2")
    if y2p is None or not (-ONE < Rat(y2p) < ONE):
        raise WalkError(
            "q < 0 walk bootstrap needs a base weight with y in (-1, 1)"
        )
    y2p = Rat(y2p)
    xi = (aq / TWO) / half
    x2p = q / (y2p - ONE) + ONE  # > 1 + |q|/2 > 1
    # smallest j with x2p^j - 1 > |q|/xi (strict)
    jhat = min_power_at_least(x2p, aq / xi + ONE)
    if x2p ** jhat == aq / xi + ONE:
        jhat += 1
    yhat = q / (x2p ** jhat - ONE) + ONE  # in (1 - xi, 1)
    # smallest k >= 1 with yhat^k <= half / y1sq; bump on exact top equality
    ratio = half / y1sq  # <= 1
    k = 1
    p = yhat
    while p > ratio:
        k += 1
        p *= yhat
    if p * y1sq == half:
        k += 1
        p *= yhat
    y1 = p * y1sq
    if not (ONE < y1 < half):
        raise WalkError("bootstrap failed to certify 1 < y1 < 1 + |q|/2")
    x1 = q / (y1 - ONE) + ONE
    if not (x1 < -ONE):
        raise WalkError("bootstrap failed to certify x1 < -1")
    gadget = parallel(
        thicken(stretch(edge_gadget(y2p - ONE), jhat), k),
        thicken(edge_gadget(y1p - ONE), 2),
    )
    boot = {"xi": xi, "jhat": jhat, "yhat": yhat, "k": k, "x2p": x2p}
    return x1, y1, gadget, boot


def _walk_positive(q, base, T, pi) -> WalkPlan:
    if q > Rat(5):
        case = "q>5"
        x1, y1, base_gadget, boot = _case1_base(q, base)
        m = max(1, min_power_at_least(x1, q * T / pi + ONE))
        steps = list(range(1, m + 1))
    elif q < ZERO:
        case = "q<0"
        x1, y1, base_gadget, boot = _case2_base(q, base)
        m = max(1, min_power_at_least(abs(x1), abs(q) * T / pi))
        if m % 2 == 0:
            m += 1
        steps = list(range(1, m + 1, 2))
    else:
        raise WalkError(f"no walk available for q = {q} in [0, 5]")
    plan = WalkPlan(
        case=case,
        q=q,
        target=T,
        tolerance=pi,
        base_points={
            k: ShiftPoint.from_qy(q, v) for k, v in base.items() if v is not None
        },
        x1=x1,
        y1=y1,
        m=m,
        bootstrap=boot,
    )
    stride = 2 if case == "q<0" else 1  # only odd powers keep x1^j < -1
    rem = T
    prod = ONE
    parts = []
    xpow = None
    y_m = None
    for j in steps:
        xpow = x1 if xpow is None else xpow * x1 ** stride
        yj = q / (xpow - ONE) + ONE
        y_m = yj
        dj = max_power_at_most(yj, rem)
        plan.steps.append(j)
        plan.y_values.append(yj)
        plan.digits.append(dj)
        if dj > 0:
            p = yj ** dj
            prod *= p
            rem /= p
            parts.append(thicken(stretch(base_gadget, j), dj))
    plan.y_m = y_m
    plan.y_final = prod
    plan.gadget = parallel(*parts) if parts else edge_gadget(ZERO)
    plan.validate()
    return plan


def hyperbola_walk(q, base: dict, T, pi) -> tuple[WalkPlan, Implementation]:
    """Build a gadget whose effective y-coordinate approximates T.

    base maps "y1"/"y2"/"y3" to the y-coordinates of the available base
    weights.  For T > 1 the result satisfies T - pi <= y <= T; for T < -1
    it satisfies T <= y <= T + pi (the extra parallel step with the
    negative base point y3 reverses the interval).  Membership is verified
    by exact comparison on the emitted gadget.
    """
    q, T, pi = Rat(q), Rat(T), Rat(pi)
    if not (ZERO < pi <= ONE):
        raise WalkError("tolerance must satisfy 0 < pi <= 1")
    if T > ONE:
        plan = _walk_positive(q, base, T, pi)
        expr = plan.gadget
        lo_w, hi_w = T - pi - ONE, T - ONE
    elif T < -ONE:
        y3p = base.get("y3")
        if y3p is None or Rat(y3p) >= ZERO:
            raise WalkError("negative target needs a base weight with y < 0")
        y3p = Rat(y3p)
        inner_T = abs(T) / abs(y3p)
        if inner_T <= ONE:
            raise WalkError(
                f"negative target {T} unreachable: |T|/|y3| = {inner_T} <= 1 "
                "leaves no room for the positive-side walk"
            )
        inner_pi = pi / abs(y3p)
        if inner_pi > ONE:
            inner_pi = ONE
        plan = _walk_positive(q, base, inner_T, inner_pi)
        expr = parallel(plan.gadget, edge_gadget(y3p - ONE))
        plan.negative_wrap = {"y3": y3p, "inner_T": inner_T, "inner_pi": inner_pi}
        plan.gadget = expr
        lo_w, hi_w = T - ONE, T + pi - ONE
    else:
        raise WalkError(f"target {T} must satisfy |T| > 1")
    w_eff, _scale = effective_weight(expr, q)
    y_eff = ONE + w_eff
    if T > ONE:
        if not (T - pi <= y_eff <= T):
            raise WalkError("emitted gadget missed [T - pi, T]")
        target_w = T - ONE
    else:
        if not (T <= y_eff <= T + pi):
            raise WalkError("emitted gadget missed [T, T + pi]")
        target_w = T - ONE
    impl = Implementation(
        gadget=expr,
        q=q,
        effective_weight=w_eff,
        scale=_scale,
        target=target_w,
        error_interval=(lo_w - target_w, hi_w - target_w),
    )
    return plan, impl
