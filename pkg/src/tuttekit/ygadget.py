"""The three-terminal gadget that drives the independent-set compilation.

Six vertices: outer terminals 0, 1, 2 and inner ring vertices 3, 4, 5
(think of 3, 4, 5 as the "barred" partners of 0, 1, 2).  Spoke edges
(i, i+3) carry weight b; the inner triangle carries weight a.  The three
terminal-partition sums Z_012 (terminals joined), Z_0|12 (one split off)
and Z_0|1|2 (all split) have closed forms in q, a, b which the
certification layer consumes; this module computes them and can
cross-check against direct enumeration of the explicit gadget.
"""

from dataclasses import dataclass

from .errors import PreconditionError
from .graph import WeightedMultigraph
from .rational import Rat
from .tutte import partition_key, z_terminal_partitions

__all__ = ["YGadgetReport", "y_closed_forms", "y_gadget_graph", "y_enumerated"]


@dataclass(frozen=True)
class YGadgetReport:
    """Closed-form terminal-partition values of the three-port gadget.

    c, d, e are the derived combinations the tolerance analysis tracks:
    c = a^2+3a+q, d = c+b (small when b is near -c), e = a^3+3a^2-q
    (inside (eps, 2*eps] for accepted a).
    """

    q: object
    a: object
    b: object
    c: object
    d: object
    e: object
    z_joined: object  # Z_012
    z_split_one: object  # Z_0|12 (= Z_1|02 = Z_2|01 by symmetry)
    z_split_all: object  # Z_0|1|2

    def total(self):
        """Z of the whole gadget: joined + 3 x one-split + all-split."""
        return self.z_joined + 3 * self.z_split_one + self.z_split_all


def y_closed_forms(q, a, b) -> YGadgetReport:
    q, a, b = Rat(q), Rat(a), Rat(b)
    if q == 0:
        raise PreconditionError("terminal-partition forms need q != 0")
    c = a * a + 3 * a + q
    z_joined = q * a * a * (a + 3) * b**3
    z_split_one = q * q * a * b * b * (c + b)
    z_split_all = q**3 * (
        b**3
        + 3 * b * b * (2 * a + q)
        + (3 * b + q) * (a**3 + 3 * a * a + 3 * a * q + q * q)
    )
    return YGadgetReport(
        q=q,
        a=a,
        b=b,
        c=c,
        d=c + b,
        e=a**3 + 3 * a * a - q,
        z_joined=z_joined,
        z_split_one=z_split_one,
        z_split_all=z_split_all,
    )


def y_gadget_graph(a, b) -> WeightedMultigraph:
    """The explicit 6-vertex gadget; terminals are vertices 0, 1, 2."""
    a, b = Rat(a), Rat(b)
    edges = [
        (0, 3, b),
        (1, 4, b),
        (2, 5, b),
        (3, 4, a),
        (4, 5, a),
        (5, 3, a),
    ]
    return WeightedMultigraph.from_edges(6, edges)


def y_enumerated(q, a, b) -> tuple:
    """(Z_012, Z_0|12, Z_0|1|2) by direct 2^6 subset enumeration."""
    g = y_gadget_graph(a, b)
    parts = z_terminal_partitions(g, Rat(q), (0, 1, 2))
    joined = parts.get(partition_key([[0, 1, 2]]), Rat(0))
    split_one = parts.get(partition_key([[0], [1, 2]]), Rat(0))
    split_all = parts.get(partition_key([[0], [1], [2]]), Rat(0))
    return joined, split_one, split_all
