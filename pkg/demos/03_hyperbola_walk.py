"""Walking along a hyperbola to hit a target weight.

On the curve (x-1)(y-1) = q a stretch maps y to q/(x^k - 1) + 1 and a
thickening multiplies x-coordinates.  Starting from a couple of base
points the walk below composes those moves into a gadget whose
effective y-coordinate lands inside a prescribed window around any
admissible target, with an exact error interval.
"""

from tuttekit.rational import Rat, format_rational
from tuttekit.walks import WalkError, hyperbola_walk

q = Rat(6)
base = {"y1": Rat(2), "y3": Rat(-2)}

for target, tol in [
    (Rat(5), Rat(1, 100)),
    (Rat(100), Rat(1, 10**6)),
    (Rat(-5), Rat(1, 100)),
]:
    plan, impl = hyperbola_walk(q, base, target, tol)
    y = Rat(1) + impl.effective_weight
    lo, hi = impl.error_interval
    print(f"target {format_rational(target)} tolerance {format_rational(tol)}")
    print(f"  reached y = {format_rational(y)}")
    print(
        f"  error interval [{format_rational(lo)}, {format_rational(hi)}], "
        f"{len(plan.steps)} steps, {impl.gadget.edge_count()} edges"
    )

# targets inside (-infinity, -1] need |target| > |y3|; closer to zero the
# wrap has no room and the walk refuses
try:
    hyperbola_walk(q, base, Rat(-3, 2), Rat(1, 100))
except WalkError as exc:
    print("refused:", exc)
