"""Exact computations for the Hecke algebra of type B_n and the zonal
spherical functions of its induced module, identified with q-Krawtchouk
polynomials.
"""

from .errors import (CapExceeded, DenominatorVanishes, DomainError, HeckeError, IdentityFailure,
                     NotDiagonal, RankMismatch)
from .scalars import ONE, P, P_HALF, Q, Q_HALF, ZERO, Scalar
from .coxeter import SignVector, SignedPerm
from .hecke import HeckeElt
from .vmodule import VElt
from .characters import DualElt
from .qgroup import UqElt, UqGen
from .qseries import QKrawParams, q_krawtchouk
from .spherical import (InvariantBasis, LieType, SphericalTable, build_invariant_basis,
                        lie_type_preset, phi_eval, phi_via_recurrence)
from .report import Check, Report

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "DenominatorVanishes", "DomainError", "HeckeError", "IdentityFailure",
    "NotDiagonal", "RankMismatch",
    "ONE", "P", "P_HALF", "Q", "Q_HALF", "ZERO", "Scalar",
    "SignVector", "SignedPerm", "HeckeElt", "VElt", "DualElt", "UqElt", "UqGen",
    "QKrawParams", "q_krawtchouk",
    "InvariantBasis", "LieType", "SphericalTable", "build_invariant_basis", "lie_type_preset",
    "phi_eval", "phi_via_recurrence",
    "Check", "Report",
]
