"""Exact multivariate Tutte polynomial workbench.

Evaluates partition functions of weighted multigraphs with exact rational
arithmetic, composes two-terminal gadgets, synthesizes edge weights along
hyperbolas, compiles decision-carrying hardness instances, and classifies
planar Tutte points by approximation complexity.
"""

from .graph import WeightedMultigraph, codec_parse, codec_serialize
from .rational import Rat, rat, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "WeightedMultigraph",
    "codec_parse",
    "codec_serialize",
    "Rat",
    "rat",
    "format_rational",
    "parse_rational",
    "__version__",
]
