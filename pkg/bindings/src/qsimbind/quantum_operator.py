"""Loading operators from external serialization formats."""

from __future__ import annotations

import qsimcore as _core

from . import GeneralQuantumOperator

__all__ = ["create_quantum_operator_from_openfermion_text"]


def create_quantum_operator_from_openfermion_text(text: str) -> GeneralQuantumOperator:
    out = GeneralQuantumOperator.__new__(GeneralQuantumOperator)
    out._core = _core.parse_openfermion_text(text)
    return out
