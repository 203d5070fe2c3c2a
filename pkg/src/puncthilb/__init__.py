"""Cell decompositions of punctual Hilbert schemes of plane branches ``C[[t^p, t^q + ...]]``."""

from .cells import TopologyReport, cell_dimension, cell_dimension_stable, topology_report
from .semigroup import NumericalSemigroup, SemigroupError, make_semigroup, plane_branch
from .semimodule import (
    EmbeddedSemimodule,
    NormalizedSemimodule,
    delta_normalize,
    enumerate_mod_r,
    generated,
    minimal_generators,
    oracle_enumerate_mod_r,
)
from .series import TruncatedSeries, format_series, parse_series

__version__ = "0.1.0"

__all__ = [
    "EmbeddedSemimodule",
    "NormalizedSemimodule",
    "NumericalSemigroup",
    "SemigroupError",
    "TopologyReport",
    "TruncatedSeries",
    "cell_dimension",
    "cell_dimension_stable",
    "delta_normalize",
    "enumerate_mod_r",
    "format_series",
    "generated",
    "make_semigroup",
    "minimal_generators",
    "oracle_enumerate_mod_r",
    "parse_series",
    "plane_branch",
    "topology_report",
]
