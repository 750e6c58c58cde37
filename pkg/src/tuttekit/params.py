"""Constant ledger and weight synthesis for the hardness pipeline.

The reduction needs three edge weights at a fixed q: a weight ``a`` with
f(a) = a^3 + 3a^2 pinned just above q, a weight ``b`` close to
-(a^2 + 3a + q), and a weight ``beta`` close to -1.  The tolerances that
make the downstream certification sound are governed by a ledger of
derived constants (chi, eta, A-, A+, B-, B+, A*, Q, mu, tau, M, nu,
epsilon, L, R, delta).  ``param_set`` computes that ledger exactly;
``implement_a`` / ``implement_b`` / ``implement_beta`` synthesize the
weights as two-terminal gadgets with exact acceptance checks.

Two of the constants (eta and y*) are algebraic in the q < 0 case: they
are the roots of g(y) = -y(3+y)^2 = q/2 and g(y*) = q.  They are kept as
directed rational enclosures [lo, hi]; every downstream inequality uses
the end that cannot overstate the claim (eta rounded down, y* rounded
up, hence A+ / A* rounded up and delta's budget rounded down).
"""

from dataclasses import dataclass, replace
from typing import Optional

from .errors import PreconditionError, WalkError
from .gadgets import Implementation, edge_gadget, effective_weight, thicken
from .rational import Rat, min_power_at_least
from .walks import hyperbola_walk

__all__ = [
    "RatRange",
    "ParamSet",
    "param_set",
    "implement_a",
    "implement_b",
    "implement_beta",
]

ZERO = Rat(0)
ONE = Rat(1)
ENCLOSURE_WIDTH = Rat(1, 2**24)


def _pow(base, k: int):
    """base**k for possibly negative integer k."""
    b = Rat(base)
    if k >= 0:
        return b**k
    return ONE / b ** (-k)


def _f(a):
    # the cubic whose window q + eps < f(a) <= q + 2*eps defines acceptable a
    return a * a * a + 3 * a * a


def _g(y):
    # _f(-3 - y); strictly decreasing for y > 0
    return -y * (3 + y) ** 2


@dataclass(frozen=True)
class RatRange:
    """Closed rational interval; exact constants are stored as points."""

    lo: object
    hi: object

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty range")

    @staticmethod
    def point(v) -> "RatRange":
        v = Rat(v)
        return RatRange(v, v)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo


def _bisect_root_decreasing(func, target, lo, hi, max_width):
    """Enclose the root of func(y) = target for strictly decreasing func.

    Requires func(lo) >= target >= func(hi).  Returns a point range if an
    endpoint or midpoint hits the target exactly.
    """
    flo, fhi = func(lo), func(hi)
    if flo == target:
        return RatRange.point(lo)
    if fhi == target:
        return RatRange.point(hi)
    if not (flo > target > fhi):
        raise PreconditionError("bisection bracket does not straddle the target")
    while hi - lo > max_width:
        mid = (lo + hi) / 2
        fm = func(mid)
        if fm == target:
            return RatRange.point(mid)
        if fm > target:
            lo = mid
        else:
            hi = mid
    return RatRange(lo, hi)


def _enclose_g_root(q_half_or_q):
    """Directed enclosure of the positive root of _g(y) = target."""
    target = Rat(q_half_or_q)
    if target >= ZERO:
        raise PreconditionError("root enclosure needs a negative target")
    hi = ONE
    while _g(hi) >= target:
        hi *= 2
    lo = ZERO if hi == ONE else hi / 2
    return _bisect_root_decreasing(_g, target, lo, hi, ENCLOSURE_WIDTH)


@dataclass(frozen=True)
class ParamSet:
    """Ledger of the pipeline constants for one instance shape (q, n, m, K).

    Scalars are exact rationals; eta, ystar and everything derived from
    them are RatRange enclosures (points in the q > 5 case).  ``relaxed``
    marks caller-supplied eps/delta instead of the instance-size grade.
    """

    case: str  # "q>5" or "q<0"
    q: object
    n: int
    m: int
    K: int
    nu: int
    chi: object
    eta: RatRange
    ystar: Optional[RatRange]
    a_minus: RatRange
    a_plus: RatRange
    b_minus: object
    b_plus: object
    a_star: RatRange
    Q: object
    mu: RatRange
    tau: RatRange
    M: RatRange
    eps: object
    L: RatRange
    R: object
    delta: object
    relaxed: bool = False

    def validate(self) -> None:
        """Exact re-check of every ledger invariant."""
        q = self.q
        if self.case not in ("q>5", "q<0"):
            raise PreconditionError(f"unknown case tag {self.case!r}")
        if (self.case == "q>5") != (q > 5):
            raise PreconditionError("case tag inconsistent with q")
        if 8 * self.m != 9 * self.n:
            raise PreconditionError("instance shape requires m = (9/8) n")
        if 8 * self.K > 5 * self.n:
            raise PreconditionError("bound K exceeds (5/8) n")
        if self.nu != 3 * self.n - self.m - 2 * self.K:
            raise PreconditionError("nu is not 3n - m - 2K")
        if self.nu < 1:
            raise PreconditionError("nu must be at least 1")
        if not (ZERO < self.delta < self.eps < self.chi <= ONE):
            raise PreconditionError("need 0 < delta < eps < chi <= 1")
        # budget constraint, taken at the conservative enclosure ends
        if self.delta * 6 * self.a_star.hi > self.eps * self.eta.lo:
            raise PreconditionError("delta exceeds eps*eta/(6 A*)")
        if not self.relaxed:
            if self.L.hi > ONE:
                raise PreconditionError("L exceeds 1 at this instance size")
            if self.R < ONE:
                raise PreconditionError("R below 1 at this instance size")
        if not (self.a_minus.lo <= self.a_plus.hi):
            raise PreconditionError("a-range is empty")
        if not (ZERO < self.b_minus <= self.b_plus):
            raise PreconditionError("b-range is empty or nonpositive")


def param_set(q, n: int, m: int, K: int, relaxed_eps=None, relaxed_delta=None) -> ParamSet:
    """Compute the constant ledger for the instance shape (q, n, m, K).

    n, m are the vertex and edge counts of the 3-stretched cubic graph
    (so m = (9/8) n) and K the independence bound.  With no overrides the
    tolerances eps and delta come out instance-size graded and
    astronomically small; pass relaxed_eps and relaxed_delta together for
    desk-scale experiments (the result is tagged relaxed and the
    delta <= eps*eta/(6 A*) budget is still enforced).
    """
    q = Rat(q)
    if ZERO <= q <= Rat(5):
        raise PreconditionError(f"no parameter ledger for q = {q} in [0, 5]")
    if (relaxed_eps is None) != (relaxed_delta is None):
        raise PreconditionError("relaxed mode needs both eps and delta")
    n, m, K = int(n), int(m), int(K)
    if 8 * m != 9 * n:
        raise PreconditionError("instance shape requires m = (9/8) n")
    if not (1 <= K and 8 * K <= 5 * n):
        raise PreconditionError("need 1 <= K <= (5/8) n")
    nu = 3 * n - m - 2 * K

    aq = abs(q)
    if q > Rat(5):
        case = "q>5"
        chi = min(ONE, (q - 5) / 6)
        eta = RatRange.point(Rat(3, 4))
        ystar = None
        a_minus = RatRange.point(Rat(1, 2))
        a_plus = RatRange.point(q)
        b_minus = q
        b_plus = 10 * q**3
    else:
        case = "q<0"
        chi = min(ONE, aq)
        eta = _enclose_g_root(q / 2)
        ystar = _enclose_g_root(q)
        a_minus = RatRange(3 + eta.lo, 3 + eta.hi)
        a_plus = RatRange(3 + ystar.lo, 3 + ystar.hi)
        b_minus = aq / 3
        b_plus = 4 * aq / 3 + 2

    def star(ap):
        return 1 + 3 * ap**4 + 9 * ap**3 + 3 * ap**2 + 3 * ap * (1 + aq)

    a_star = RatRange(star(a_plus.lo), star(a_plus.hi))
    Q = max(ONE, aq)

    def mu_of(ap):
        return q * q * ap * b_plus**2

    def tau_of(ap):
        return aq * ap**2 * (ap + 3) * b_plus**3

    mu = RatRange(mu_of(a_plus.lo), mu_of(a_plus.hi))
    tau = RatRange(tau_of(a_plus.lo), tau_of(a_plus.hi))
    M = RatRange(max(ONE, mu.lo, tau.lo), max(ONE, mu.hi, tau.hi))

    if relaxed_eps is None:
        eps = (b_minus**3 / 3) * chi**nu * Rat(1, 2 ** (n + 2 * m + 4)) * _pow(Q, m - 3 * n)
        relaxed = False
    else:
        eps = Rat(relaxed_eps)
        relaxed = True

    L = RatRange(aq**3 * eta.lo * eps / 2, aq**3 * eta.hi * eps / 2)
    R = b_minus**3 / (3 * eps)

    if relaxed_delta is None:
        # underestimate: L at its low end, A* and M at their high ends
        delta = (
            L.lo**n
            * _pow(Q, -3 * n)
            * chi**nu
            / (16 * a_star.hi * 3**n * 2 ** (6 * n) * M.hi**n * 2 ** (2 * m))
            * (aq ** (6 * n) / Q ** (6 * n))
        )
    else:
        delta = Rat(relaxed_delta)

    ps = ParamSet(
        case=case,
        q=q,
        n=n,
        m=m,
        K=K,
        nu=nu,
        chi=chi,
        eta=eta,
        ystar=ystar,
        a_minus=a_minus,
        a_plus=a_plus,
        b_minus=b_minus,
        b_plus=b_plus,
        a_star=a_star,
        Q=Q,
        mu=mu,
        tau=tau,
        M=M,
        eps=eps,
        L=L,
        R=R,
        delta=delta,
        relaxed=relaxed,
    )
    ps.validate()
    return ps


def implement_a(q, params: ParamSet, base: dict) -> Implementation:
    """Synthesize a gadget whose effective weight a has f(a) in (q+eps, q+2*eps].

    base maps "y1"/"y2"/"y3" to available base weights as in
    hyperbola_walk.  The target is found by rational bisection of
    f(T) = q + 2*eps to width below eps^2/4, then walked to with a
    tolerance small enough that the window membership survives; the
    window and the range certificates |a| in [A-, A+] and
    |a^2(a+3)| >= eta are checked exactly on the emitted gadget.
    """
    q = Rat(q)
    if params.q != q:
        raise PreconditionError("parameter ledger computed for a different q")
    eps = params.eps
    t_hi = q + 2 * eps

    if params.case == "q>5":
        lo, hi = ZERO, ONE
        while _f(hi) < t_hi:
            hi *= 2
    else:
        # the window only forces y >= eta when q + 2*eps <= q/2
        if 4 * eps > abs(q):
            raise PreconditionError("eps too large for the q < 0 window")
        hi = Rat(-3)
        off = ONE
        while _f(-3 - off) >= t_hi:
            off *= 2
        lo = -3 - off

    # bisect to the prescribed width, then keep going until the lower
    # margin is strictly positive (relevant only for very coarse eps)
    width_cap = eps * eps / 4
    while hi - lo >= width_cap or _f(lo) <= q + eps:
        mid = (lo + hi) / 2
        if _f(mid) >= t_hi:
            hi = mid
        else:
            lo = mid
    T = lo  # f(T) strictly inside (q + eps, q + 2*eps)

    gap_hi = t_hi - _f(T)
    gap_lo = _f(T) - (q + eps)
    bound = abs(T) + 1
    lip = 3 * bound * bound + 6 * bound  # |f'| cap on the walk interval
    margin = gap_hi if params.case == "q<0" else gap_lo
    pi = min(eps * eps, margin / (2 * lip), ONE)

    _plan, impl = hyperbola_walk(q, base, ONE + T, pi)
    a = impl.effective_weight
    fa = _f(a)
    if not (q + eps < fa <= t_hi):
        raise WalkError("synthesized weight missed the f-window")
    if not (params.a_minus.lo <= abs(a) <= params.a_plus.hi):
        raise WalkError("synthesized weight escapes the certified range")
    if not (abs(a * a * (a + 3)) >= params.eta.lo):
        raise WalkError("synthesized weight fails the eta lower bound")
    return replace(impl, relaxed=params.relaxed)


def implement_b(q, a, delta, base: dict, relaxed: bool = False) -> Implementation:
    """Synthesize a gadget with effective weight within delta of -(a^2+3a+q).

    a should come from implement_a; delta from the parameter ledger.  The
    interval membership and the range B- <= |b| <= B+ are checked
    exactly on the emitted gadget.
    """
    q, a, delta = Rat(q), Rat(a), Rat(delta)
    if not (ZERO < delta <= ONE):
        raise PreconditionError("need 0 < delta <= 1")
    c = a * a + 3 * a + q
    if q > Rat(5):
        if c < q + 1:
            raise PreconditionError("c = a^2+3a+q below q+1; a is out of range")
        b_lo, b_hi = q, 10 * q**3
    elif q < ZERO:
        aq = abs(q)
        if not (-(4 * aq / 3 + 1) <= c <= -(2 * aq / 3)):
            raise PreconditionError("c = a^2+3a+q outside its certified range")
        b_lo, b_hi = aq / 3, 4 * aq / 3 + 2
    else:
        raise PreconditionError(f"no synthesis for q = {q} in [0, 5]")

    _plan, impl = hyperbola_walk(q, base, ONE - c, delta)
    b = impl.effective_weight
    if not (-c - delta <= b <= -c + delta):
        raise WalkError("synthesized weight missed [-c-delta, -c+delta]")
    if not (b_lo <= abs(b) <= b_hi):
        raise WalkError("synthesized weight escapes the B-range")
    return replace(impl, target=-c, error_interval=(-delta, delta), relaxed=relaxed)


def implement_beta(alpha2, delta, q=None, relaxed: bool = False) -> Implementation:
    """Thicken a base weight alpha2 in (-2, 0) until it lands within delta of -1.

    Uses the minimal k with |1+alpha2|^k < delta; alpha2 = -1 returns the
    bare edge (k = 1, beta = -1).  q fixes the evaluation parameter of
    the certificate (needed for the substitution scale); it defaults to
    alpha2's hyperbola partner being unknown, so pass it explicitly.
    """
    a2, d = Rat(alpha2), Rat(delta)
    if not (Rat(-2) < a2 < ZERO):
        raise PreconditionError("base weight must lie in (-2, 0)")
    if d <= ZERO:
        raise PreconditionError("delta must be positive")
    if q is None:
        raise PreconditionError("q is required to certify the thickening")
    q = Rat(q)
    if q == ZERO:
        raise PreconditionError("q must be nonzero")

    r = abs(ONE + a2)
    if r == ZERO or r < d:
        k = 1
    else:
        k = max(1, min_power_at_least(ONE / r, ONE / d))
        if (ONE / r) ** k == ONE / d:
            k += 1  # strict inequality required
    beta = (ONE + a2) ** k - ONE
    if not abs(ONE + beta) < d:
        raise WalkError("thickening failed to reach the delta ball")

    expr = thicken(edge_gadget(a2), k)
    w, scale = effective_weight(expr, q)
    if w != beta:
        raise WalkError("thickening closed form disagrees with the gadget")
    return Implementation(
        gadget=expr,
        q=q,
        effective_weight=w,
        scale=scale,
        target=-ONE,
        error_interval=(-d, d),
        relaxed=relaxed,
    )
