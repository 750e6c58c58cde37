"""Weight-shift certificates built from a single point's edge weight.

The reduction machinery needs three auxiliary weights on the hyperbola
(x-1)(y-1) = q through a given rational point: one with |y1| > 1, one
with y2 in (-1, 1) and one with y3 < 0.  For points inside the certified
approximation-hardness regions with q outside [0, 5] all three can be
realized by small series/parallel gadgets over the point's own weight
y - 1.  This module decides region membership exactly, builds the
gadgets, and recomputes every effective weight from the emitted gadget
before certifying the range conditions.

Points in the region y > 1, x < -1 are handled through plane duality:
the certificate describes the coordinate-swapped point (y, x) and is
flagged `dual`; consumers apply it to a plane dual of their instance.
The corner of the negative quadrant with x < -1 and y in [-1, 0) uses
the same dual route, since only the swapped point has a base weight of
magnitude above one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import PreconditionError, TutteKitError
from .gadgets import (
    GadgetExpr,
    Implementation,
    edge_gadget,
    effective_weight,
    series,
    stretch,
    thicken,
)
from .rational import Rat, min_power_at_least
from .walks import ShiftPoint

__all__ = [
    "REGION_NEGATIVE_QUADRANT",
    "REGION_RIGHT_STRIP",
    "REGION_TOP_STRIP",
    "ShiftCertificate",
    "certified_region",
    "shift_certificate",
]

ZERO = Rat(0)
ONE = Rat(1)
TWO = Rat(2)
FIVE = Rat(5)

REGION_NEGATIVE_QUADRANT = "negQ-q>5"
REGION_RIGHT_STRIP = "x>1&y<-1"
REGION_TOP_STRIP = "y>1&x<-1"


def certified_region(x, y) -> str | None:
    """Region id for (x, y), or None when no shift recipe applies."""
    x, y = Rat(x), Rat(y)
    q = (x - ONE) * (y - ONE)
    if x < ZERO and y < ZERO and q > FIVE:
        return REGION_NEGATIVE_QUADRANT
    if x > ONE and y < -ONE:
        return REGION_RIGHT_STRIP
    if y > ONE and x < -ONE:
        return REGION_TOP_STRIP
    return None


@dataclass(frozen=True)
class ShiftCertificate:
    """Three single-weight gadget implementations at one hyperbola point.

    `base` is the point whose weight the gadget edges carry; it equals
    (x, y) for direct certificates and (y, x) for dual ones.  `points`
    and `implementations` are aligned: the first entry realizes y1, the
    second y2, the third y3.
    """

    x: object
    y: object
    q: object
    region: str
    dual: bool
    base: ShiftPoint
    points: tuple
    implementations: tuple

    def validate(self) -> None:
        """Re-derive every certified fact from the gadgets themselves."""
        x, y, q = Rat(self.x), Rat(self.y), Rat(self.q)
        if (x - ONE) * (y - ONE) != q:
            raise TutteKitError("certificate point off its hyperbola")
        if certified_region(x, y) != self.region:
            raise TutteKitError("certificate region tag mismatch")
        base_y = x if self.dual else y
        if self.base.q != q or self.base.y != base_y:
            raise TutteKitError("certificate base point mismatch")
        if len(self.points) != 3 or len(self.implementations) != 3:
            raise TutteKitError("certificate must carry exactly three shifts")
        for pt, impl in zip(self.points, self.implementations):
            if impl.q != q:
                raise TutteKitError("implementation at a foreign q")
            if impl.error_interval != (ZERO, ZERO):
                raise TutteKitError("shift implementations must be exact")
            w, _scale = effective_weight(impl.gadget, q)
            if w != impl.effective_weight or pt.y != ONE + w or pt.q != q:
                raise TutteKitError("recomputed effective weight disagrees")
            for leaf in _leaf_weights(impl.gadget):
                if leaf != self.base.alpha:
                    raise TutteKitError("gadget edge with a foreign weight")
        y1, y2, y3 = (pt.y for pt in self.points)
        if abs(y1) <= ONE:
            raise TutteKitError(f"y1 = {y1} not outside [-1, 1]")
        if not (-ONE < y2 < ONE):
            raise TutteKitError(f"y2 = {y2} not inside (-1, 1)")
        if y3 >= ZERO:
            raise TutteKitError(f"y3 = {y3} not negative")


def _leaf_weights(expr: GadgetExpr) -> Iterator:
    if expr.kind == "edge":
        yield expr.weight
        return
    for child in expr.children:
        yield from _leaf_weights(child)


def _strict_exponent(base, bound) -> int:
    # smallest k with base**k > bound, strictly; base > 1, bound > 1
    k = min_power_at_least(base, bound)
    if base ** k == bound:
        k += 1
    return k


def _build_negative_quadrant(x, y, q) -> tuple:
    alpha = y - ONE
    ident = Implementation.exact(edge_gadget(alpha), q)
    if x < -ONE and y < -ONE:
        # odd k-stretch: x^k drops below 1 - q/2, so the stretched
        # y-coordinate 1 + q/(x^k - 1) lands inside (-1, 1)
        k = _strict_exponent(abs(x), q / TWO - ONE)
        if k % 2 == 0:
            k += 1
        mid = Implementation.exact(stretch(edge_gadget(alpha), k), q)
        return ident, mid, ident
    # -1 <= x < 0 forces y <= 1 - q/2, so |y| itself already exceeds the
    # q/2 - 1 threshold and no odd stretch of the bare edge can reach the
    # band (1 - q/2, -1).  Instead compose in series with copies of the
    # 2-thickened edge (x-coordinate x1 > 1): the product x * x1^k crosses
    # 1 - q/2 and the resulting y-coordinate lies inside (-1, 1) directly.
    doubled = thicken(edge_gadget(alpha), 2)
    x1 = q / (y * y - ONE) + ONE
    k = _strict_exponent(x1, (q / TWO - ONE) / abs(x))
    mid = Implementation.exact(series(edge_gadget(alpha), stretch(doubled, k)), q)
    return ident, mid, ident


def _build_right_strip(x, y, q) -> tuple:
    alpha = y - ONE
    ident = Implementation.exact(edge_gadget(alpha), q)
    # q < 0 here; once x^j - 1 exceeds |q|/2 the stretched y-coordinate
    # 1 + q/(x^j - 1) sits inside (-1, 1).  j = 1 can never satisfy the
    # bound (|q| >= 2(x-1) in this strip), so the edge case of an identity
    # "stretch" does not arise.
    j = _strict_exponent(x, ONE + abs(q) / TWO)
    mid = Implementation.exact(stretch(edge_gadget(alpha), j), q)
    return ident, mid, ident


def shift_certificate(x, y) -> ShiftCertificate:
    """Certify the three auxiliary weights for a hardness region point.

    Raises PreconditionError with a "no certificate" message for points
    outside the three certified regions (including the whole q in [0, 5]
    band, where the colouring route needs no weight synthesis).
    """
    x, y = Rat(x), Rat(y)
    q = (x - ONE) * (y - ONE)
    if ZERO <= q <= FIVE:
        raise PreconditionError(
            f"no certificate at ({x}, {y}): q = {q} lies in [0, 5] "
            "(open or exact-easy point)"
        )
    region = certified_region(x, y)
    if region is None:
        raise PreconditionError(
            f"no certificate at ({x}, {y}): outside the certified regions "
            "(open or exact-easy point)"
        )
    dual = region == REGION_TOP_STRIP or (
        region == REGION_NEGATIVE_QUADRANT and y >= -ONE
    )
    bx, by = (y, x) if dual else (x, y)
    if bx > ONE and by < -ONE:
        impls = _build_right_strip(bx, by, q)
    else:
        impls = _build_negative_quadrant(bx, by, q)
    points = tuple(
        ShiftPoint.from_qy(q, ONE + impl.effective_weight) for impl in impls
    )
    cert = ShiftCertificate(
        x=x,
        y=y,
        q=q,
        region=region,
        dual=dual,
        base=ShiftPoint.from_qy(q, by),
        points=points,
        implementations=impls,
    )
    cert.validate()
    return cert
