"""Solution sets of majority relations computed with Boolean matrix algebra."""

from .boolmat import BoolMatrix, BoolVec, DimensionError
from .closure import diameter_mu, diameter_nu, m_ladder, u_ladder
from .gen import GenSpec, generate, worked_example
from .majority import (
    MajorityStructure,
    PreferenceProfile,
    StructureError,
    TournamentRequiredError,
    from_edges,
    from_matrices,
    from_profile,
)
from .solvers import ConceptId, SolutionReport, solve, solve_all

__all__ = [
    "BoolMatrix",
    "BoolVec",
    "ConceptId",
    "DimensionError",
    "GenSpec",
    "MajorityStructure",
    "PreferenceProfile",
    "SolutionReport",
    "StructureError",
    "TournamentRequiredError",
    "diameter_mu",
    "diameter_nu",
    "from_edges",
    "from_matrices",
    "from_profile",
    "generate",
    "m_ladder",
    "worked_example",
    "solve",
    "solve_all",
    "u_ladder",
]

__version__ = "0.1.0"
