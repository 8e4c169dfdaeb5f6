"""Ordered gate containers: plain circuits and parametric circuits."""

from __future__ import annotations

import numpy as np

from .gates import QuantumGate
from .state import StateVector


class Circuit:
    """A simple ordered list of gates over a fixed qubit count."""

    def __init__(self, num_qubits: int):
        if num_qubits < 1:
            raise ValueError("qubit count must be positive")
        self.num_qubits = int(num_qubits)
        self.gates: list[QuantumGate] = []

    def _check_gate(self, gate: QuantumGate) -> None:
        top = max(gate.touched_qubits(), default=-1)
        if top >= self.num_qubits:
            raise ValueError(f"gate touches qubit {top} but the circuit has "
                             f"{self.num_qubits} qubits")

    def add_gate(self, gate: QuantumGate, position: int | None = None) -> None:
        self._check_gate(gate)
        if position is None:
            self.gates.append(gate)
            return
        if not 0 <= position <= len(self.gates):
            raise ValueError(f"insert position {position} out of range")
        self.gates.insert(position, gate)

    def remove_gate(self, position: int) -> None:
        if not 0 <= position < len(self.gates):
            raise ValueError(f"position {position} out of range")
        del self.gates[position]

    def get_gate(self, position: int) -> QuantumGate:
        if not 0 <= position < len(self.gates):
            raise ValueError(f"position {position} out of range")
        return self.gates[position].copy()

    def get_gate_count(self) -> int:
        return len(self.gates)

    def update_state(self, state: StateVector,
                     rng: np.random.Generator | int | None = None) -> None:
        if state.num_qubits != self.num_qubits:
            raise ValueError("state and circuit qubit counts differ")
        if not isinstance(rng, np.random.Generator):
            rng = np.random.default_rng(rng)
        for gate in self.gates:
            gate.apply(state, rng)

    def calculate_depth(self) -> int:
        """ASAP layering; a gate occupies one layer on all touched qubits."""
        level = [0] * self.num_qubits
        depth = 0
        for gate in self.gates:
            qubits = gate.touched_qubits()
            layer = max((level[q] for q in qubits), default=0)
            for q in qubits:
                level[q] = layer + 1
            depth = max(depth, layer + 1)
        return depth

    def copy(self) -> "Circuit":
        out = Circuit(self.num_qubits)
        out.gates = [g.copy() for g in self.gates]
        return out


class ParametricCircuit(Circuit):
    """Circuit with a table of mutable rotation angles.

    Parametric gates (ParametricRX/RY/RZ/ParametricPauliRotation) are tracked
    by identity, so their list positions stay consistent under arbitrary
    insertions and removals of other gates.
    """

    def __init__(self, num_qubits: int):
        super().__init__(num_qubits)
        self._parametric: list[QuantumGate] = []

    def add_parametric_gate(self, gate: QuantumGate, position: int | None = None) -> None:
        if not gate.is_parametric:
            raise ValueError("gate is not parametric")
        super().add_gate(gate, position)
        self._parametric.append(gate)

    def remove_gate(self, position: int) -> None:
        if 0 <= position < len(self.gates):
            gate = self.gates[position]
            self._parametric = [g for g in self._parametric if g is not gate]
        super().remove_gate(position)

    def get_parameter_count(self) -> int:
        return len(self._parametric)

    def _param_gate(self, index: int) -> QuantumGate:
        if not 0 <= index < len(self._parametric):
            raise ValueError(f"parameter index {index} out of range")
        return self._parametric[index]

    def get_parameter(self, index: int) -> float:
        return self._param_gate(index).angle

    def set_parameter(self, index: int, angle: float) -> None:
        self._param_gate(index).angle = float(angle)

    def get_parametric_gate_position(self, index: int) -> int:
        gate = self._param_gate(index)
        for pos, g in enumerate(self.gates):
            if g is gate:
                return pos
        raise RuntimeError("parametric gate missing from the gate list")

    def copy(self) -> "ParametricCircuit":
        out = ParametricCircuit(self.num_qubits)
        out.gates = [g.copy() for g in self.gates]
        clones = {id(g): ng for g, ng in zip(self.gates, out.gates)}
        out._parametric = [clones[id(g)] for g in self._parametric]
        return out
