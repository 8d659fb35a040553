"""Calabi-Yau threefolds fibred by M_n-polarized K3 surfaces.

Modules: ``lattice`` (lattices and the map to SO(1,2)), ``modular``
(invariants of X_0(n) and X_0(n)^+), ``tables`` (embedded family data),
``monodromy`` (rank-3 local systems), ``covers`` (branch data and their
realizability), ``hodge`` (Hodge numbers and fibre reports), ``cli``.
"""
from .errors import (ConstraintViolation, InternalInconsistency, InvalidInput,
                     K3FibError)

__version__ = "0.1.0"

__all__ = ["K3FibError", "InvalidInput", "ConstraintViolation",
           "InternalInconsistency", "__version__"]
