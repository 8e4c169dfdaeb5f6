"""Gate constructors with research-script naming conventions.

Each function builds the corresponding core gate and returns it behind a
``QuantumGateBase`` handle; no simulation logic lives here.
"""

from __future__ import annotations

import numpy as np
import qsimcore as _core

from ._handles import QuantumGateBase, unwrap

__all__ = [
    "QuantumGateBase", "DenseMatrix", "SparseMatrix", "DiagonalMatrix",
    "ReversibleBoolean", "Pauli", "PauliRotation", "RandomUnitary",
    "Identity", "X", "Y", "Z", "H", "S", "Sdag", "T", "Tdag",
    "sqrtX", "sqrtXdag", "sqrtY", "sqrtYdag",
    "RX", "RY", "RZ", "U1", "U2", "U3",
    "CNOT", "CZ", "SWAP", "TOFFOLI", "FREDKIN", "P0", "P1",
    "ParametricRX", "ParametricRY", "ParametricRZ", "ParametricPauliRotation",
    "CPTP", "Instrument", "Probabilistic", "Adaptive",
    "Measurement", "BitFlipNoise", "DephasingNoise", "DepolarizingNoise",
    "TwoQubitDepolarizingNoise", "AmplitudeDampingNoise",
    "merge",
]


def _wrap(core_gate) -> QuantumGateBase:
    return QuantumGateBase(core_gate)


def DenseMatrix(target_list, matrix) -> QuantumGateBase:
    return _wrap(_core.DenseGate(target_list, matrix))


def SparseMatrix(target_list, sparse_matrix) -> QuantumGateBase:
    """Accepts a scipy sparse matrix or an iterable of (row, col, value)."""
    if hasattr(sparse_matrix, "tocoo"):
        coo = sparse_matrix.tocoo()
        entries = [(int(r), int(c), complex(v))
                   for r, c, v in zip(coo.row, coo.col, coo.data)]
    else:
        entries = sparse_matrix
    return _wrap(_core.SparseGate(target_list, entries))


def DiagonalMatrix(target_list, diagonal_element) -> QuantumGateBase:
    return _wrap(_core.DiagonalGate(target_list, diagonal_element))


def ReversibleBoolean(target_list, function_ptr) -> QuantumGateBase:
    return _wrap(_core.PermutationGate(target_list, function_ptr))


def Pauli(target_list, pauli_ids) -> QuantumGateBase:
    return _wrap(_core.PauliGate(target_list, pauli_ids))


def PauliRotation(target_list, pauli_ids, angle) -> QuantumGateBase:
    return _wrap(_core.PauliRotationGate(target_list, pauli_ids, angle))


def RandomUnitary(target_list, seed=None) -> QuantumGateBase:
    return _wrap(_core.RandomUnitary(target_list, seed))


def merge(gate_first, gate_second) -> QuantumGateBase:
    return _wrap(_core.merge(unwrap(gate_first), unwrap(gate_second)))


def CPTP(kraus_list) -> QuantumGateBase:
    return _wrap(_core.CptpMap([unwrap(g) for g in kraus_list]))


def Instrument(kraus_list, register_address) -> QuantumGateBase:
    return _wrap(_core.Instrument([unwrap(g) for g in kraus_list],
                                  register_address))


def Probabilistic(prob_list, gate_list) -> QuantumGateBase:
    return _wrap(_core.ProbabilisticMap(prob_list,
                                        [unwrap(g) for g in gate_list]))


def Adaptive(gate, condition) -> QuantumGateBase:
    return _wrap(_core.AdaptiveGate(unwrap(gate), condition))


def _single(name):
    factory = getattr(_core, name)

    def build(index):
        return _wrap(factory(index))

    build.__name__ = name
    build.__qualname__ = name
    build.__doc__ = f"{name} gate on the given qubit."
    return build


Identity = _single("Identity")
X = _single("X")
Y = _single("Y")
Z = _single("Z")
H = _single("H")
S = _single("S")
Sdag = _single("Sdag")
T = _single("T")
Tdag = _single("Tdag")
sqrtX = _single("sqrtX")
sqrtXdag = _single("sqrtXdag")
sqrtY = _single("sqrtY")
sqrtYdag = _single("sqrtYdag")
P0 = _single("P0")
P1 = _single("P1")


def RX(index, angle) -> QuantumGateBase:
    return _wrap(_core.RX(index, angle))


def RY(index, angle) -> QuantumGateBase:
    return _wrap(_core.RY(index, angle))


def RZ(index, angle) -> QuantumGateBase:
    return _wrap(_core.RZ(index, angle))


def U1(index, lam) -> QuantumGateBase:
    return _wrap(_core.U1(index, lam))


def U2(index, phi, lam) -> QuantumGateBase:
    return _wrap(_core.U2(index, phi, lam))


def U3(index, theta, phi, lam) -> QuantumGateBase:
    return _wrap(_core.U3(index, theta, phi, lam))


def CNOT(control, target) -> QuantumGateBase:
    return _wrap(_core.CNOT(control, target))


def CZ(control, target) -> QuantumGateBase:
    return _wrap(_core.CZ(control, target))


def SWAP(qubit1, qubit2) -> QuantumGateBase:
    return _wrap(_core.SWAP(qubit1, qubit2))


def TOFFOLI(control1, control2, target) -> QuantumGateBase:
    return _wrap(_core.TOFFOLI(control1, control2, target))


def FREDKIN(control, target1, target2) -> QuantumGateBase:
    return _wrap(_core.FREDKIN(control, target1, target2))


def ParametricRX(index, angle) -> QuantumGateBase:
    return _wrap(_core.ParametricRX(index, angle))


def ParametricRY(index, angle) -> QuantumGateBase:
    return _wrap(_core.ParametricRY(index, angle))


def ParametricRZ(index, angle) -> QuantumGateBase:
    return _wrap(_core.ParametricRZ(index, angle))


def ParametricPauliRotation(target_list, pauli_ids, angle) -> QuantumGateBase:
    return _wrap(_core.ParametricPauliRotation(target_list, pauli_ids, angle))


def Measurement(index, register_address) -> QuantumGateBase:
    return _wrap(_core.Measurement(index, register_address))


def BitFlipNoise(index, prob) -> QuantumGateBase:
    return _wrap(_core.BitFlipNoise(index, prob))


def DephasingNoise(index, prob) -> QuantumGateBase:
    return _wrap(_core.DephasingNoise(index, prob))


def DepolarizingNoise(index, prob) -> QuantumGateBase:
    return _wrap(_core.DepolarizingNoise(index, prob))


def TwoQubitDepolarizingNoise(index1, index2, prob) -> QuantumGateBase:
    return _wrap(_core.TwoQubitDepolarizingNoise(index1, index2, prob))


def AmplitudeDampingNoise(index, prob) -> QuantumGateBase:
    return _wrap(_core.AmplitudeDampingNoise(index, prob))
