"""Fast O(alpha n^2) factorization and inversion of polynomial-Vandermonde-like
matrices for quasiseparable, semiseparable and well-free polynomial systems."""

from .basis import BasisMatrix, back_substitute, spq
from .displacement import (DisplacementInstance, canonical_vq_generators,
                           displacement_residual, materialize, wq_dense)
from .errors import (InstanceFormatError, InvalidNodesError, InvalidSystemError,
                     SingularBasisError, SingularMatrixError)
from .gepp import PluFactorization, gepp, solve, solve_transposed
from .horner import HornerSystem, horner_system
from .inversion import InverseResult, fast_sum_product, invert
from .poly_systems import (PolyFamily, PolySystem, build_vandermonde, evaluate_system,
                           make_system, preset)

__all__ = [
    "BasisMatrix", "DisplacementInstance", "HornerSystem", "InstanceFormatError",
    "InvalidNodesError", "InvalidSystemError", "InverseResult", "PluFactorization",
    "PolyFamily", "PolySystem", "SingularBasisError", "SingularMatrixError",
    "back_substitute", "build_vandermonde", "canonical_vq_generators",
    "displacement_residual", "evaluate_system", "fast_sum_product", "gepp",
    "horner_system", "invert", "make_system", "materialize", "preset", "solve",
    "solve_transposed", "spq", "wq_dense",
]
