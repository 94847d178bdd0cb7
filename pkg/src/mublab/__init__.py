"""Computational lab for finite-field quantum structures.

Builds dimension-N arithmetic (Galois fields GF(p^m) or the mod-N ring),
the generalized Pauli (displacement) operators with their square-root
phase system, the N+1 mutually unbiased bases, generalized Bell states,
the Mean King measurement basis with its inference rule, and the discrete
Weyl/Wigner quasi-distributions.  Every algebraic identity the
construction relies on is exposed as a checkable property; see
``mublab.verify`` and the ``mublab`` command line tool.
"""

__version__ = "0.1.0"

from .arithmetic import (
    ArithmeticContext,
    ExtensionContext,
    build_context,
    build_extension,
    character,
    ext_character,
    half,
)
from .pauli import PhaseSystem, build_phase_system, displacement_u, displacement_v
from .mub import MubFamily, mub_family, unbiasedness_report, verify_eigenbasis
from .bell import bell_state, bell_transform, pauli_conjugation_check
from .meanking import (
    MeanKingBasis,
    ProtocolReport,
    infer_closed_form,
    mean_king_basis,
    run_protocol,
    symplectic_relabel,
)
from .wigner import (
    WignerOperatorSet,
    marginal,
    parity_operators,
    weyl_function,
    wigner_function,
    wigner_operator_set,
)

GALOIS_DIMS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
MODULAR_DIMS = (3, 5, 7, 9, 11, 13, 15, 17, 19, 21)

__all__ = [
    "ArithmeticContext",
    "ExtensionContext",
    "build_context",
    "build_extension",
    "character",
    "ext_character",
    "half",
    "PhaseSystem",
    "build_phase_system",
    "displacement_v",
    "displacement_u",
    "MubFamily",
    "mub_family",
    "unbiasedness_report",
    "verify_eigenbasis",
    "bell_state",
    "bell_transform",
    "pauli_conjugation_check",
    "MeanKingBasis",
    "ProtocolReport",
    "mean_king_basis",
    "infer_closed_form",
    "symplectic_relabel",
    "run_protocol",
    "WignerOperatorSet",
    "wigner_operator_set",
    "wigner_function",
    "weyl_function",
    "parity_operators",
    "marginal",
    "GALOIS_DIMS",
    "MODULAR_DIMS",
]
