import json

import numpy as np
import pytest

import qsimcore as q

from oracles import full_matrix


def bell_circuit():
    circuit = q.Circuit(2)
    circuit.add_gate(q.H(0))
    circuit.add_gate(q.CNOT(0, 1))
    return circuit


class TestCircuitEditing:
    def test_add_remove_get(self):
        circuit = q.Circuit(3)
        circuit.add_gate(q.X(0))
        circuit.add_gate(q.Y(1))
        circuit.add_gate(q.Z(2), position=1)
        assert circuit.get_gate_count() == 3
        assert circuit.get_gate(1).name == "Z"
        circuit.remove_gate(1)
        assert [g.name for g in circuit.gates] == ["X", "Y"]

    def test_get_gate_returns_copy(self):
        circuit = q.Circuit(1)
        circuit.add_gate(q.RX(0, 0.5))
        fetched = circuit.get_gate(0)
        fetched.angle = 9.0
        assert circuit.gates[0].angle == 0.5

    def test_bounds_errors(self):
        circuit = q.Circuit(2)
        with pytest.raises(ValueError):
            circuit.add_gate(q.X(5))
        with pytest.raises(ValueError):
            circuit.add_gate(q.X(0), position=1)
        with pytest.raises(ValueError):
            circuit.remove_gate(0)
        with pytest.raises(ValueError):
            circuit.get_gate(0)

    def test_copy_is_deep(self):
        circuit = bell_circuit()
        dup = circuit.copy()
        dup.remove_gate(0)
        assert circuit.get_gate_count() == 2


class TestExecution:
    def test_bell_state(self):
        state = q.StateVector(2)
        bell_circuit().update_state(state)
        expected = np.array([1, 0, 0, 1]) / np.sqrt(2)
        np.testing.assert_allclose(state.get_vector(), expected, atol=1e-15)

    def test_qubit_count_mismatch(self):
        with pytest.raises(ValueError):
            bell_circuit().update_state(q.StateVector(3))

    def test_stochastic_execution_seeded(self):
        circuit = q.Circuit(1)
        circuit.add_gate(q.H(0))
        circuit.add_gate(q.Measurement(0, 0))
        outcomes = set()
        for seed in range(20):
            state = q.StateVector(1)
            circuit.update_state(state, rng=seed)
            outcomes.add(state.get_classical_value(0))
        assert outcomes == {0, 1}
        # same seed twice gives identical results
        a, b = q.StateVector(1), q.StateVector(1)
        circuit.update_state(a, rng=5)
        circuit.update_state(b, rng=5)
        assert np.array_equal(a.get_vector(), b.get_vector())

    def test_matches_full_matrix_product(self):
        rng = np.random.default_rng(0)
        circuit = q.Circuit(3)
        circuit.add_gate(q.H(1))
        circuit.add_gate(q.CNOT(1, 2))
        circuit.add_gate(q.RZ(0, 0.4))
        circuit.add_gate(q.SWAP(0, 2))
        total = np.eye(8, dtype=complex)
        for gate in circuit.gates:
            total = full_matrix(3, gate.targets, gate.gate_matrix(),
                                gate.controls) @ total
        state = q.StateVector(3)
        state.set_haar_random(1)
        expected = total @ state.get_vector()
        circuit.update_state(state)
        np.testing.assert_allclose(state.get_vector(), expected, atol=1e-12)


class TestDepth:
    def test_empty(self):
        assert q.Circuit(2).calculate_depth() == 0

    def test_parallel_singles(self):
        circuit = q.Circuit(3)
        for i in range(3):
            circuit.add_gate(q.X(i))
        assert circuit.calculate_depth() == 1

    def test_entangler_serializes(self):
        circuit = bell_circuit()
        circuit.add_gate(q.X(1))
        assert circuit.calculate_depth() == 3

    def test_controls_occupy_layers(self):
        circuit = q.Circuit(3)
        circuit.add_gate(q.X(0).with_control(2, 1))
        circuit.add_gate(q.X(2))
        assert circuit.calculate_depth() == 2


class TestParametricCircuit:
    def build(self):
        circuit = q.ParametricCircuit(2)
        circuit.add_parametric_gate(q.ParametricRX(0, 0.1))
        circuit.add_gate(q.CNOT(0, 1))
        circuit.add_parametric_gate(q.ParametricRZ(1, 0.2))
        return circuit

    def test_parameter_table(self):
        circuit = self.build()
        assert circuit.get_parameter_count() == 2
        assert circuit.get_parameter(0) == pytest.approx(0.1)
        circuit.set_parameter(1, 0.9)
        assert circuit.get_parameter(1) == pytest.approx(0.9)
        assert circuit.get_parametric_gate_position(1) == 2

    def test_non_parametric_rejected(self):
        with pytest.raises(ValueError):
            q.ParametricCircuit(1).add_parametric_gate(q.X(0))

    def test_indices_survive_edits(self):
        circuit = self.build()
        circuit.add_gate(q.H(0), position=0)
        circuit.remove_gate(2)  # the CNOT
        assert circuit.get_parameter_count() == 2
        assert circuit.get_parametric_gate_position(0) == 1
        assert circuit.get_parametric_gate_position(1) == 2

    def test_removing_parametric_gate_shrinks_table(self):
        circuit = self.build()
        circuit.remove_gate(0)
        assert circuit.get_parameter_count() == 1
        assert circuit.get_parameter(0) == pytest.approx(0.2)

    def test_copy_keeps_parameter_order(self):
        circuit = self.build()
        dup = circuit.copy()
        dup.set_parameter(0, 3.0)
        assert circuit.get_parameter(0) == pytest.approx(0.1)
        assert dup.get_parameter(0) == pytest.approx(3.0)
        assert dup.get_parametric_gate_position(1) == 2

    def test_parameter_updates_change_execution(self):
        circuit = q.ParametricCircuit(1)
        circuit.add_parametric_gate(q.ParametricRY(0, 0.0))
        circuit.set_parameter(0, np.pi)
        state = q.StateVector(1)
        circuit.update_state(state)
        assert abs(state.get_vector()[1]) == pytest.approx(1.0, abs=1e-12)


class TestSerialization:
    def full_zoo(self):
        circuit = q.Circuit(4)
        circuit.add_gate(q.H(0))
        circuit.add_gate(q.RX(1, 0.3))
        circuit.add_gate(q.U3(2, 0.1, 0.2, 0.3))
        circuit.add_gate(q.CNOT(0, 3))
        circuit.add_gate(q.DenseGate([1, 2], np.kron(q.H(0).gate_matrix(),
                                                     q.S(0).gate_matrix()),
                                     controls=[(0, 1)]))
        circuit.add_gate(q.SparseGate([3], [(0, 1, 1.0), (1, 0, 1.0)]))
        circuit.add_gate(q.DiagonalGate([0, 2], [1, 1j, -1, -1j]))
        circuit.add_gate(q.PermutationGate([1, 3], [0, 2, 1, 3]))
        circuit.add_gate(q.PauliGate([0, 1], [1, 3]))
        circuit.add_gate(q.PauliRotationGate([2, 3], [2, 2], 0.7))
        circuit.add_gate(q.BitFlipNoise(2, 0.05))
        circuit.add_gate(q.AmplitudeDampingNoise(1, 0.1))
        circuit.add_gate(q.Measurement(0, 0))
        return circuit

    def test_roundtrip_preserves_behavior(self, tmp_path):
        circuit = self.full_zoo()
        path = tmp_path / "circuit.json"
        q.dump_circuit(circuit, path)
        loaded = q.load_circuit(path)
        assert loaded.get_gate_count() == circuit.get_gate_count()
        a, b = q.StateVector(4), q.StateVector(4)
        a.set_haar_random(3)
        b.load(a)
        circuit.update_state(a, rng=11)
        loaded.update_state(b, rng=11)
        np.testing.assert_allclose(a.get_vector(), b.get_vector(), atol=1e-12)
        assert a.classical_registers == b.classical_registers

    def test_roundtrip_is_stable(self, tmp_path):
        circuit = self.full_zoo()
        first = q.circuit_to_dict(circuit)
        second = q.circuit_to_dict(q.circuit_from_dict(first))
        assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)

    def test_named_gates_stay_named(self):
        doc = q.circuit_to_dict(bell_circuit())
        assert [g["kind"] for g in doc["gates"]] == ["named", "named"]
        assert doc["gates"][1]["name"] == "CNOT"

    def test_malformed_documents_raise_with_position(self):
        with pytest.raises(q.CircuitFormatError):
            q.circuit_from_dict({"gates": []})
        with pytest.raises(q.CircuitFormatError) as err:
            q.circuit_from_dict({"num_qubits": 2, "gates": [
                {"kind": "named", "name": "H", "qubits": [0]},
                {"kind": "mystery"},
            ]})
        assert "gate 1" in str(err.value)
        with pytest.raises(q.CircuitFormatError):
            q.circuit_from_dict({"num_qubits": 1, "gates": [
                {"kind": "dense", "targets": [0], "matrix": [["a", 0], [0, 1]]},
            ]})
