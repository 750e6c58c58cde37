"""Exact complexity classification of rational points of the Tutte plane.

Every comparison is exact rational arithmetic, so hyperbola and region
boundaries are decided without rounding.  Statuses cover planar inputs:
exact evaluation is polynomial-time on the q = 1 and q = 2 hyperbolas
(H1 and H2) and at the special points (1, 1) and (-1, -1), and sharp-P
hard elsewhere; approximation carries a no-FPRAS tag on the certified
hardness regions and on the lower q = 3 branch, and is otherwise
recorded as open.  Points whose hardness rests on weight shifts carry
the emitted shift certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionError
from .rational import Rat, format_rational
from .shifts import (
    REGION_RIGHT_STRIP,
    REGION_TOP_STRIP,
    ShiftCertificate,
    certified_region,
    shift_certificate,
)

__all__ = [
    "REGION_COLOURING_BRANCH",
    "PointClass",
    "MapRecord",
    "classify_point",
    "map_region",
    "records_to_tsv",
]

ZERO = Rat(0)
ONE = Rat(1)
THREE = Rat(3)

REGION_COLOURING_BRANCH = "q=3-branch"

_REGION_IDS = (
    "negQ-q>5",
    REGION_RIGHT_STRIP,
    REGION_TOP_STRIP,
    REGION_COLOURING_BRANCH,
)


@dataclass(frozen=True)
class PointClass:
    exact_status: str  # "FP-easy" or "#P-hard"
    approx_status: str  # "exact-easy", "no-FPRAS(<region>)" or "open"
    citation: str
    certificate: Optional[ShiftCertificate] = None

    def __post_init__(self):
        if self.exact_status not in ("FP-easy", "#P-hard"):
            raise ValueError(f"bad exact status {self.exact_status!r}")
        if self.approx_status == "exact-easy":
            if self.exact_status != "FP-easy":
                raise ValueError("exact-easy approximation needs FP-easy")
        elif self.approx_status != "open":
            if self.region not in _REGION_IDS:
                raise ValueError(f"bad approx status {self.approx_status!r}")

    @property
    def region(self) -> Optional[str]:
        s = self.approx_status
        if s.startswith("no-FPRAS(") and s.endswith(")"):
            return s[len("no-FPRAS(") : -1]
        return None


@dataclass(frozen=True)
class MapRecord:
    x: object
    y: object
    q: object
    point_class: PointClass

    def __post_init__(self):
        if (Rat(self.x) - ONE) * (Rat(self.y) - ONE) != Rat(self.q):
            raise ValueError("map record q off its point")


def _easy_citation(x, y, q) -> Optional[str]:
    if q == ONE:
        return "H1 hyperbola (q=1): exact evaluation in polynomial time"
    if q == Rat(2):
        return "H2 hyperbola (q=2): exact evaluation in polynomial time"
    if (x, y) == (ONE, ONE) or (x, y) == (-ONE, -ONE):
        return (
            f"special point ({format_rational(x)}, {format_rational(y)}): "
            "exact evaluation in polynomial time"
        )
    return None


_REGION_CITATIONS = {
    "negQ-q>5": (
        "no FPRAS: independent-set gap reduction with shifted weights; "
        "region negQ-q>5"
    ),
    REGION_RIGHT_STRIP: (
        "no FPRAS: independent-set gap reduction with shifted weights; "
        "region x>1&y<-1"
    ),
    REGION_TOP_STRIP: (
        "no FPRAS: plane duality from region x>1&y<-1; region y>1&x<-1"
    ),
    REGION_COLOURING_BRANCH: (
        "no FPRAS: 3-colouring thickening reduction on the lower q=3 branch"
    ),
}


def classify_point(x, y) -> PointClass:
    """Exact statuses, citation, and shift certificate for one point."""
    x, y = Rat(x), Rat(y)
    q = (x - ONE) * (y - ONE)
    easy = _easy_citation(x, y, q)
    if easy is not None:
        return PointClass("FP-easy", "exact-easy", easy)
    region = certified_region(x, y)
    if region is None and q == THREE and x < ONE and y < ONE:
        region = REGION_COLOURING_BRANCH
    if region is None:
        return PointClass(
            "#P-hard",
            "open",
            "exact evaluation #P-hard off q=1, q=2, (1,1) and (-1,-1); "
            "approximation status open",
        )
    cert = None
    try:
        cert = shift_certificate(x, y)
    except PreconditionError:
        cert = None  # q=3 branch: the colouring route needs no weights
    return PointClass(
        "#P-hard", f"no-FPRAS({region})", _REGION_CITATIONS[region], cert
    )


def _lattice(lo, hi, step) -> list:
    vals = []
    v = lo
    while v <= hi:
        vals.append(v)
        v = v + step
    return vals


def map_region(x_range, y_range, step) -> list[MapRecord]:
    """Row-major lattice scan of classify_point over a rational grid."""
    step = Rat(step)
    if step <= ZERO:
        raise PreconditionError("step must be positive")
    x_lo, x_hi = (Rat(v) for v in x_range)
    y_lo, y_hi = (Rat(v) for v in y_range)
    if x_hi < x_lo or y_hi < y_lo:
        raise PreconditionError("ranges must be non-empty")
    records = []
    for x in _lattice(x_lo, x_hi, step):
        for y in _lattice(y_lo, y_hi, step):
            records.append(
                MapRecord(x, y, (x - ONE) * (y - ONE), classify_point(x, y))
            )
    return records


def records_to_tsv(records) -> str:
    """One line per record: x, y, q, statuses, citation; tab separated."""
    lines = []
    for rec in records:
        pc = rec.point_class
        lines.append(
            "\t".join(
                (
                    format_rational(rec.x),
                    format_rational(rec.y),
                    format_rational(rec.q),
                    pc.exact_status,
                    pc.approx_status,
                    pc.citation,
                )
            )
        )
    return "\n".join(lines) + ("\n" if lines else "")
