"""Exact evaluation on small graphs.

Z(G; q, w) sums q^components over edge subsets weighted by their edge
weights; the Tutte polynomial is the same sum after a change of frame.
Everything below is exact rational arithmetic.
"""

from tuttekit.graph import WeightedMultigraph
from tuttekit.rational import Rat, format_rational
from tuttekit.tutte import chromatic_flow_eval, tutte_eval, z_delcon

ONE = Rat(1)


def show(label, value):
    print(f"{label:<46} {format_rational(Rat(value))}")


triangle = WeightedMultigraph(3, [(0, 1), (1, 2), (2, 0)], [ONE] * 3)
k4 = WeightedMultigraph(
    4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], [ONE] * 6
)

show("Z(triangle; q=2, w=1)", z_delcon(triangle, Rat(2)))
show("T(triangle; x=2, y=2)", tutte_eval(triangle, Rat(2), Rat(2)))

# T(G; 1, 1) counts spanning trees; K4 has 16
show("spanning trees of K4", tutte_eval(k4, ONE, ONE))

# chromatic and flow specialisations come from the same engine
show("proper 3-colourings of the triangle", chromatic_flow_eval(triangle, 3, "chromatic"))
show("nowhere-zero 5-flows of K4", chromatic_flow_eval(k4, 5, "flow"))

# negative weights are first class: w = -1 with q colours counts
# proper colourings directly
show("Z(K4; q=4, w=-1) = proper 4-colourings", z_delcon(k4.reweighted([-ONE] * 6), Rat(4)))
