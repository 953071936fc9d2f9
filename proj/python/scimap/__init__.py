"""Journal citation-pattern analysis: density, correlation, factors, bi-components, MDS."""

from ._scimap import (
    CitationMatrix,
    CorrelationMatrix,
    FactorModel,
    ScimapError,
    components,
    correlate,
    density,
    factors,
    local_environment,
    local_factors,
    mds,
    planted_blocks,
    sweep,
    sym_eig,
)

__version__ = "0.1.0"

__all__ = [
    "CitationMatrix",
    "CorrelationMatrix",
    "FactorModel",
    "ScimapError",
    "components",
    "correlate",
    "density",
    "factors",
    "local_environment",
    "local_factors",
    "mds",
    "planted_blocks",
    "sweep",
    "sym_eig",
]
