"""Quantum MDS codes from Hermitian dual-containing constacyclic codes over GF(q^2)."""

from qmds.constacyclic import ConstacyclicCode, build_code, code_checks
from qmds.cosets import CosetSpec, coset_of, defining_set, dual_containing
from qmds.field import build_field, field_tower
from qmds.quantum import (
    FamilySpec,
    QuantumCodeParams,
    classify_q,
    enumerate_family,
    hermitian_construct,
    max_delta_search,
)

__version__ = "0.1.0"

__all__ = [
    "ConstacyclicCode",
    "CosetSpec",
    "FamilySpec",
    "QuantumCodeParams",
    "build_code",
    "build_field",
    "classify_q",
    "code_checks",
    "coset_of",
    "defining_set",
    "dual_containing",
    "enumerate_family",
    "field_tower",
    "hermitian_construct",
    "max_delta_search",
]
