"""Pure monomial-ideal and Stanley-depth package for stanleyDepth.

This package contains deterministic, exact computations on monomial ideals,
Stanley decompositions and their transfer along monomial maps. It must not
import Django or read settings; limits arrive as frozen dataclasses.
"""

from .monomials import Monomial, MonomialIdeal, Ring, minimalize
from .solver import SolverLimits, SolverRefusal, sdepth_exact
from .stanley import QuotientPair, StanleyDecomposition, StanleySpace, verify_decomposition
from .transfer import TransferLimits, run_transfer, transfer

__version__ = "0.1.0"

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "QuotientPair",
    "Ring",
    "SolverLimits",
    "SolverRefusal",
    "StanleyDecomposition",
    "StanleySpace",
    "TransferLimits",
    "minimalize",
    "run_transfer",
    "sdepth_exact",
    "transfer",
    "verify_decomposition",
]
