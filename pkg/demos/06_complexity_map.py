"""The complexity map of the rational Tutte plane.

classify_point decides exact and approximate status with exact
arithmetic; points in the certified hardness regions carry a weight
shift certificate naming three implementable points on their
hyperbola.  map_region scans a grid into deterministic TSV records.
"""

from tuttekit.classify import classify_point, map_region
from tuttekit.rational import Rat, format_rational

for x, y in [(2, 2), (0, -1), (-2, -2), (3, -2), (-5, Rat(1, 2)), (-3, 0)]:
    x, y = Rat(x), Rat(y)
    pc = classify_point(x, y)
    print(
        f"({format_rational(x)}, {format_rational(y)}): "
        f"{pc.exact_status}, {pc.approx_status}"
    )
    if pc.certificate is not None:
        cert = pc.certificate
        ys = ", ".join(format_rational(pt.y) for pt in cert.points)
        via = " via duality" if cert.dual else ""
        print(f"    shift points y = {ys}{via}")

records = map_region((Rat(-5), Rat(5)), (Rat(-5), Rat(5)), Rat(1, 2))
census: dict[str, int] = {}
for rec in records:
    status = rec.point_class.approx_status
    census[status] = census.get(status, 0) + 1
print(f"\n{len(records)} grid points in [-5,5]^2 at step 1/2:")
for status in sorted(census, key=census.get, reverse=True):
    print(f"  {census[status]:>4}  {status}")
