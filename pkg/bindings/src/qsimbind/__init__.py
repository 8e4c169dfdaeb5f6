"""Thin scripting layer over the qsimcore simulator.

Exposes the core API with the naming conventions common in quantum-computing
research scripts: ``StateVector``/``QuantumCircuit`` classes here, gate
constructors in :mod:`qsimbind.gate`, state utilities in
:mod:`qsimbind.state`, circuit optimization in :mod:`qsimbind.circuit`, and
operator loading in :mod:`qsimbind.quantum_operator`.  All semantics live in
the core; this layer only renames and forwards.
"""

from __future__ import annotations

import qsimcore as _core

from ._handles import QuantumGateBase, StateVector, unwrap

__all__ = [
    "StateVector", "QuantumCircuit", "ParametricQuantumCircuit",
    "Observable", "PauliOperator", "GeneralQuantumOperator",
    "QuantumGateBase",
]


class PauliOperator:
    """A weighted Pauli product, e.g. PauliOperator("X 0 Y 2", 0.5)."""

    __slots__ = ("_core",)

    def __init__(self, pauli_string: str = "", coef=1.0):
        self._core = _core.parse_pauli_string(pauli_string, coef)

    def get_coef(self):
        return self._core.coefficient

    def get_index_list(self) -> list[int]:
        return list(self._core.qubits)

    def get_pauli_id_list(self) -> list[int]:
        return list(self._core.pauli_ids)

    def get_pauli_string(self) -> str:
        return " ".join(f"{'IXYZ'[a]} {q}" for q, a in self._core.ops)


def _wrap_pauli(core_term) -> PauliOperator:
    out = PauliOperator.__new__(PauliOperator)
    out._core = core_term
    return out


class GeneralQuantumOperator:
    """Linear combination of Pauli products with complex coefficients."""

    __slots__ = ("_core",)
    _core_cls = _core.GeneralOperator

    def __init__(self, qubit_count: int):
        self._core = self._core_cls(qubit_count)

    def add_operator(self, *args) -> None:
        """add_operator(pauli_operator) or add_operator(coef, pauli_string)."""
        if len(args) == 1:
            self._core.add_operator(unwrap(args[0]))
        else:
            coef, pauli_string = args
            self._core.add_operator(coef, pauli_string)

    def get_qubit_count(self) -> int:
        return self._core.num_qubits

    def get_term_count(self) -> int:
        return self._core.get_term_count()

    def get_term(self, index: int) -> PauliOperator:
        return _wrap_pauli(self._core.get_term(index))

    def get_expectation_value(self, state):
        return self._core.get_expectation_value(unwrap(state))

    def get_transition_amplitude(self, state_bra, state_ket):
        return self._core.get_transition_amplitude(unwrap(state_bra),
                                                   unwrap(state_ket))


class Observable(GeneralQuantumOperator):
    """Self-adjoint Pauli sum; coefficients real, expectations real."""

    _core_cls = _core.Observable


class QuantumCircuit:
    """Ordered list of gates executed with ``update_quantum_state``."""

    __slots__ = ("_core",)
    _core_cls = _core.Circuit

    def __init__(self, qubit_count: int):
        self._core = self._core_cls(qubit_count)

    def get_qubit_count(self) -> int:
        return self._core.num_qubits

    def add_gate(self, gate, position=None) -> None:
        self._core.add_gate(unwrap(gate), position)

    def remove_gate(self, position: int) -> None:
        self._core.remove_gate(position)

    def get_gate(self, position: int) -> QuantumGateBase:
        return QuantumGateBase(self._core.get_gate(position))

    def get_gate_count(self) -> int:
        return self._core.get_gate_count()

    def calculate_depth(self) -> int:
        return self._core.calculate_depth()

    def update_quantum_state(self, state, seed=None) -> None:
        self._core.update_state(unwrap(state), rng=seed)

    def add_observable_rotation_gate(self, observable, angle, num_slices) -> None:
        _core.add_observable_rotation(self._core, unwrap(observable),
                                      angle, num_slices)

    def copy(self) -> "QuantumCircuit":
        out = type(self).__new__(type(self))
        out._core = self._core.copy()
        return out


class ParametricQuantumCircuit(QuantumCircuit):
    """Circuit variant with a mutable rotation-angle table."""

    _core_cls = _core.ParametricCircuit

    def add_parametric_gate(self, gate, position=None) -> None:
        self._core.add_parametric_gate(unwrap(gate), position)

    def get_parameter_count(self) -> int:
        return self._core.get_parameter_count()

    def get_parameter(self, index: int) -> float:
        return self._core.get_parameter(index)

    def set_parameter(self, index: int, angle: float) -> None:
        self._core.set_parameter(index, angle)

    def get_parametric_gate_position(self, index: int) -> int:
        return self._core.get_parametric_gate_position(index)
