"""Collapse a three-weight instance onto a single edge weight.

A hardness instance leaves the reduction with up to three distinct edge
weights.  Given implementations realizing those weights at a common q,
every edge is replaced by its implementing gadget; the substitution
identity turns the mixed-weight partition function into the gadget-edge
one up to an exact rational scale.  With a shift certificate the gadget
edges all carry one weight alpha = y - 1, so the result evaluates the
Tutte polynomial at the single point (x, y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import PreconditionError, TutteKitError
from .gadgets import Implementation, substitute_edge
from .graph import WeightedMultigraph
from .planarity import planarity_embed
from .rational import Rat
from .shifts import ShiftCertificate

__all__ = ["ShiftedInstance", "shift_pipeline"]

ZERO = Rat(0)
ONE = Rat(1)


@dataclass(frozen=True)
class ShiftedInstance:
    """A substituted instance equivalent to a mixed-weight original.

    Z(original) = aggregate_scale * Z(graph; q).  When the substituted
    graph carries a single weight (always true for certificates built by
    shift_certificate) `alpha` holds it and `tutte_factor` records the
    (y-1)^n (x-1)^kappa conversion factor, so Z(graph; q) equals
    tutte_factor times the Tutte polynomial of `graph` at (x, y); for
    mixed results those fields are None.  `edge_scales` lists each
    replaced edge's substitution factor Z_s|t / q^2 in original edge
    order (Z picks up that factor per replacement).
    """

    graph: WeightedMultigraph
    q: object
    alpha: Optional[object]
    x: Optional[object]
    y: Optional[object]
    tutte_factor: Optional[object]
    edge_scales: tuple


def _normalize(certificate) -> tuple:
    if isinstance(certificate, ShiftCertificate):
        return tuple(certificate.implementations), Rat(certificate.q)
    impls = tuple(certificate)
    if not impls or len(impls) > 3:
        raise PreconditionError("certificate must carry one to three gadgets")
    if not all(isinstance(i, Implementation) for i in impls):
        raise PreconditionError("certificate entries must be Implementations")
    q = Rat(impls[0].q)
    if any(Rat(i.q) != q for i in impls):
        raise PreconditionError("certificate gadgets disagree on q")
    return impls, q


def shift_pipeline(
    instance: WeightedMultigraph,
    certificate: Union[ShiftCertificate, Sequence[Implementation]],
) -> tuple[ShiftedInstance, object]:
    """Replace every weighted edge by its implementing gadget.

    The instance's edge weights must each equal one of the certificate's
    effective weights exactly.  Returns (shifted, aggregate_scale) with
    Z(instance) = aggregate_scale * Z(shifted.graph) at the same q.
    """
    impls, q = _normalize(certificate)
    impl_by_weight: dict = {}
    for impl in impls:
        impl_by_weight.setdefault(Rat(impl.effective_weight), impl)
    chosen: list[Implementation] = []
    for eid in range(instance.edge_count):
        w = Rat(instance.weight(eid))
        impl = impl_by_weight.get(w)
        if impl is None:
            raise PreconditionError(
                f"edge {eid} weight {w} matches no certificate weight "
                f"(have {sorted(impl_by_weight)})"
            )
        chosen.append(impl)
    plane_input = planarity_embed(instance) is not None

    g = instance
    edge_scales = [None] * instance.edge_count
    aggregate = ONE
    # descending edge ids: substitution renumbers later edges only, so the
    # pending lower ids stay valid
    for eid in range(instance.edge_count - 1, -1, -1):
        g, scale = substitute_edge(g, eid, chosen[eid])
        edge_scales[eid] = scale
        # Z(substituted) = scale * Z(host); invert to express Z(original)
        aggregate /= scale

    if plane_input and planarity_embed(g) is None:
        raise TutteKitError("substitution broke planarity")

    weights = {Rat(g.weight(eid)) for eid in range(g.edge_count)}
    if isinstance(certificate, ShiftCertificate):
        if weights - {certificate.base.alpha}:
            raise TutteKitError("substituted graph carries a foreign weight")
    alpha = x = y = tutte_factor = None
    if len(weights) == 1:
        alpha = weights.pop()
        y = ONE + alpha
        if alpha != ZERO:
            x = q / alpha + ONE
            n = g.vertex_count
            kappa = g.component_count()
            tutte_factor = (y - ONE) ** n * (x - ONE) ** kappa
    shifted = ShiftedInstance(
        graph=g,
        q=q,
        alpha=alpha,
        x=x,
        y=y,
        tutte_factor=tutte_factor,
        edge_scales=tuple(edge_scales),
    )
    return shifted, aggregate
