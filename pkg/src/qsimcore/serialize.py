"""Lossless JSON encoding for circuits.

Schema: ``{"num_qubits": n, "gates": [...]}`` where each gate record carries
``kind``, ``targets``, ``controls`` (list of ``{"qubit", "value"}``), and a
kind-specific payload.  Complex numbers are encoded as ``[re, im]`` pairs and
angles are radians.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import gates as G
from . import maps as M
from .circuit import Circuit


class CircuitFormatError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"gate {position}: {message}"
        super().__init__(message)
        self.position = position


_NAMED_CONSTRUCTORS = {
    "Identity": G.Identity, "X": G.X, "Y": G.Y, "Z": G.Z, "H": G.H,
    "S": G.S, "Sdag": G.Sdag, "T": G.T, "Tdag": G.Tdag,
    "sqrtX": G.sqrtX, "sqrtXdag": G.sqrtXdag, "sqrtY": G.sqrtY, "sqrtYdag": G.sqrtYdag,
    "RX": G.RX, "RY": G.RY, "RZ": G.RZ, "U1": G.U1, "U2": G.U2, "U3": G.U3,
    "CNOT": G.CNOT, "CZ": G.CZ, "SWAP": G.SWAP,
    "TOFFOLI": G.TOFFOLI, "FREDKIN": G.FREDKIN, "P0": G.P0, "P1": G.P1,
    "BitFlipNoise": M.BitFlipNoise, "DephasingNoise": M.DephasingNoise,
    "DepolarizingNoise": M.DepolarizingNoise,
    "TwoQubitDepolarizingNoise": M.TwoQubitDepolarizingNoise,
    "AmplitudeDampingNoise": M.AmplitudeDampingNoise,
    "Measurement": M.Measurement,
}


def _c(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _controls(gate) -> list[dict]:
    return [{"qubit": q, "value": v} for q, v in gate.controls]


def gate_to_dict(gate) -> dict[str, Any]:
    if gate.name in _NAMED_CONSTRUCTORS and gate.named_args is not None:
        qubits, params = gate.named_args
        return {"kind": "named", "name": gate.name,
                "qubits": list(qubits), "params": [float(p) for p in params]}
    if isinstance(gate, G.DenseGate):
        return {"kind": "dense", "targets": list(gate.targets),
                "controls": _controls(gate),
                "matrix": [[_c(v) for v in row] for row in gate.matrix]}
    if isinstance(gate, G.SparseGate):
        return {"kind": "sparse", "targets": list(gate.targets),
                "controls": _controls(gate),
                "entries": [[int(r), int(c), _c(v)] for r, c, v in gate.entries]}
    if isinstance(gate, G.DiagonalGate):
        return {"kind": "diagonal", "targets": list(gate.targets),
                "controls": _controls(gate), "diag": [_c(v) for v in gate.diag]}
    if isinstance(gate, G.PermutationGate):
        return {"kind": "permutation", "targets": list(gate.targets),
                "controls": _controls(gate), "table": [int(v) for v in gate.table]}
    if isinstance(gate, G.PauliRotationGate):
        return {"kind": "pauli_rotation", "targets": list(gate.targets),
                "controls": _controls(gate), "pauli_ids": list(gate.pauli_ids),
                "angle": gate.angle}
    if isinstance(gate, G.PauliGate):
        return {"kind": "pauli", "targets": list(gate.targets),
                "controls": _controls(gate), "pauli_ids": list(gate.pauli_ids)}
    if isinstance(gate, M.Instrument):
        return {"kind": "instrument", "register": gate.register_address,
                "kraus": [gate_to_dict(k) for k in gate.kraus_ops]}
    if isinstance(gate, M.CptpMap):
        return {"kind": "cptp", "kraus": [gate_to_dict(k) for k in gate.kraus_ops]}
    if isinstance(gate, M.ProbabilisticMap):
        return {"kind": "probabilistic", "probs": list(gate.probs),
                "gates": [gate_to_dict(g) for g in gate.gates]}
    raise CircuitFormatError(f"gate of type {type(gate).__name__} is not serializable")


def _parse_complex(value) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(v, (int, float)) for v in value)):
        raise CircuitFormatError(f"complex numbers must be [re, im] pairs, got {value!r}")
    return complex(value[0], value[1])


def gate_from_dict(record: dict, position: int | None = None):
    try:
        kind = record["kind"]
        controls = [(c["qubit"], c["value"]) for c in record.get("controls", [])]
        if kind == "named":
            name = record["name"]
            if name not in _NAMED_CONSTRUCTORS:
                raise CircuitFormatError(f"unknown named gate {name!r}", position)
            return _NAMED_CONSTRUCTORS[name](*record["qubits"], *record.get("params", []))
        if kind == "dense":
            matrix = [[_parse_complex(v) for v in row] for row in record["matrix"]]
            return G.DenseGate(record["targets"], matrix, controls)
        if kind == "sparse":
            entries = [(r, c, _parse_complex(v)) for r, c, v in record["entries"]]
            return G.SparseGate(record["targets"], entries, controls)
        if kind == "diagonal":
            diag = [_parse_complex(v) for v in record["diag"]]
            return G.DiagonalGate(record["targets"], diag, controls)
        if kind == "permutation":
            return G.PermutationGate(record["targets"], record["table"], controls)
        if kind == "pauli":
            return G.PauliGate(record["targets"], record["pauli_ids"], controls)
        if kind == "pauli_rotation":
            return G.PauliRotationGate(record["targets"], record["pauli_ids"],
                                       record["angle"], controls)
        if kind == "cptp":
            return M.CptpMap([gate_from_dict(k) for k in record["kraus"]])
        if kind == "instrument":
            return M.Instrument([gate_from_dict(k) for k in record["kraus"]],
                                record["register"])
        if kind == "probabilistic":
            return M.ProbabilisticMap(record["probs"],
                                      [gate_from_dict(g) for g in record["gates"]])
    except CircuitFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CircuitFormatError(str(exc), position) from exc
    raise CircuitFormatError(f"unknown gate kind {kind!r}", position)


def circuit_to_dict(circuit: Circuit) -> dict[str, Any]:
    return {"num_qubits": circuit.num_qubits,
            "gates": [gate_to_dict(g) for g in circuit.gates]}


def circuit_from_dict(document: dict) -> Circuit:
    try:
        circuit = Circuit(int(document["num_qubits"]))
        records = document["gates"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CircuitFormatError(f"malformed circuit document: {exc}") from exc
    for position, record in enumerate(records):
        circuit.add_gate(gate_from_dict(record, position))
    return circuit


def dump_circuit(circuit: Circuit, path) -> None:
    with open(path, "w") as fh:
        json.dump(circuit_to_dict(circuit), fh, indent=1)


def load_circuit(path) -> Circuit:
    with open(path) as fh:
        return circuit_from_dict(json.load(fh))
