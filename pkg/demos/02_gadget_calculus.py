"""Two-terminal gadget calculus.

Series and parallel composition, stretching and thickening act on the
effective weight a gadget presents between its terminals.  Substituting
a gadget for an edge multiplies the partition function by a known exact
scale, which is what makes weight shifting work.
"""

from tuttekit.gadgets import (
    Implementation,
    edge_gadget,
    materialize,
    parallel,
    series,
    stretch,
    substitute_edge,
    thicken,
)
from tuttekit.graph import WeightedMultigraph
from tuttekit.rational import Rat, format_rational
from tuttekit.tutte import z_delcon

q = Rat(2)
w = Rat(2)

base = edge_gadget(w)
for label, expr in [
    ("edge(2)", base),
    ("series(edge, edge)", series(base, base)),
    ("parallel(edge, edge)", parallel(base, base)),
    ("2-stretch", stretch(base, 2)),
    ("3-thickening", thicken(base, 3)),
]:
    impl = Implementation.exact(expr, q)
    print(
        f"{label:<22} effective weight "
        f"{format_rational(impl.effective_weight)}  scale "
        f"{format_rational(impl.scale)}  edges {expr.edge_count()}"
    )

# substitution identity on a concrete host: replace edge 0 of a
# triangle by the series pair and compare partition functions
host = WeightedMultigraph(3, [(0, 1), (1, 2), (2, 0)], [Rat(1)] * 3)
impl = Implementation.exact(series(base, base), q)
patched, scale = substitute_edge(host, 0, impl)

lhs = z_delcon(host.reweighted([impl.effective_weight, Rat(1), Rat(1)]), q)
rhs = z_delcon(patched, q)
print("host with effective weight:", format_rational(lhs))
print("patched host / scale:      ", format_rational(rhs / scale))
assert lhs == rhs / scale

tt = materialize(impl.gadget)
print(
    f"materialized gadget: {tt.graph.vertex_count} vertices, "
    f"{tt.graph.edge_count} edges, terminals {tt.s} and {tt.t}"
)
