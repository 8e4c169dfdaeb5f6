"""Handle types shared by the scripting-layer modules.

Every handle owns exactly one core object and forwards calls to it without
adding any semantics; releases happen deterministically with the handle.
Mutating calls on the same handle must not run concurrently; the layer does
not lock on the caller's behalf.
"""

from __future__ import annotations

import qsimcore as _core


def unwrap(obj):
    """Return the core object behind a handle; pass raw values through."""
    return getattr(obj, "_core", obj)


class QuantumGateBase:
    """Handle for any gate or quantum map."""

    __slots__ = ("_core",)

    def __init__(self, core_gate):
        self._core = core_gate

    def update_quantum_state(self, state) -> None:
        self._core.apply(unwrap(state))

    def add_control_qubit(self, index: int, control_value: int) -> None:
        self._core = self._core.with_control(index, control_value)

    def get_matrix(self):
        return self._core.gate_matrix()

    def get_target_index_list(self) -> list[int]:
        return list(self._core.targets)

    def get_control_index_list(self) -> list[int]:
        return [q for q, _ in self._core.controls]

    def get_name(self) -> str:
        return self._core.name or type(self._core).__name__

    def set_parameter(self, angle: float) -> None:
        self._core.angle = float(angle)

    def get_parameter(self) -> float:
        return self._core.angle

    def copy(self) -> "QuantumGateBase":
        return QuantumGateBase(self._core.copy())


class StateVector:
    """Handle for a pure-state vector with listing-style method names."""

    __slots__ = ("_core",)

    def __init__(self, qubit_count: int):
        self._core = _core.StateVector(qubit_count)

    def get_qubit_count(self) -> int:
        return self._core.num_qubits

    def set_zero_state(self) -> None:
        self._core.set_zero_state()

    def set_computational_basis(self, index: int) -> None:
        self._core.set_computational_basis(index)

    def set_Haar_random_state(self, seed=None) -> None:
        self._core.set_haar_random(seed)

    def copy(self) -> "StateVector":
        out = StateVector.__new__(StateVector)
        out._core = self._core.copy()
        return out

    def load(self, state) -> None:
        self._core.load(unwrap(state))

    def get_vector(self):
        # a copy: mutating the returned array must not touch core memory
        return self._core.get_vector().copy()

    def get_squared_norm(self) -> float:
        return self._core.get_squared_norm()

    def normalize(self, squared_norm: float) -> None:
        self._core.normalize(squared_norm)

    def get_marginal_probability(self, measured_value) -> float:
        return self._core.get_marginal_probability(measured_value)

    def sampling(self, count: int, seed=None) -> list[int]:
        return self._core.sampling(count, seed=seed)

    def multiply_coef(self, coef) -> None:
        self._core.multiply_coef(coef)

    def multiply_elementwise_function(self, func) -> None:
        self._core.multiply_elementwise_function(func)

    def add_state(self, state) -> None:
        self._core.add_state(unwrap(state))

    def get_classical_value(self, index: int) -> int:
        return self._core.get_classical_value(index)

    def set_classical_value(self, index: int, value: int) -> None:
        self._core.set_classical_value(index, value)


def wrap_state(core_state) -> StateVector:
    out = StateVector.__new__(StateVector)
    out._core = core_state
    return out
