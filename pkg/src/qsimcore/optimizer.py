"""Circuit optimization by gate fusion.

Two passes are provided: ``optimize_light`` merges adjacent gate pairs where
one gate's qubit set is a subset of the other's, and ``optimize_heavy``
additionally moves gates past provably commuting neighbors, bounded by a
block size on the merged qubit set.  Quantum maps, adaptive gates, and
parametric gates are never merged and act as fences.
"""

from __future__ import annotations

from .circuit import Circuit
from .gates import BasicGate, DenseGate, QuantumGate, merge


def merge_all(circuit: Circuit) -> DenseGate:
    """Fold the whole circuit into one dense gate.

    An empty circuit yields an identity gate with no targets, whose
    application is a no-op.
    """
    merged: DenseGate | None = None
    for position, gate in enumerate(circuit.gates):
        if not gate.mergeable:
            raise ValueError(f"gate at position {position} cannot be merged")
        merged = gate if merged is None else merge(merged, gate)
    if merged is None:
        return DenseGate([], [[1.0]])
    if merged is circuit.gates[0]:
        # single-gate circuit: densify without aliasing the original
        merged = merge(DenseGate([], [[1.0]]), merged)
    return merged


def commutation_check(first: QuantumGate, second: QuantumGate) -> bool:
    """True only if the gates provably commute via their per-qubit bases.

    Conservative: shared qubits must carry the same axis (or ``any`` on
    either side); ``none`` on a shared qubit fails the check.
    """
    shared = set(first.touched_qubits()) & set(second.touched_qubits())
    for qubit in shared:
        a = first.commutation_basis(qubit)
        b = second.commutation_basis(qubit)
        if a == "any" or b == "any":
            continue
        if a == "none" or b == "none" or a != b:
            return False
    return True


def _qubit_set(gate: QuantumGate) -> frozenset[int]:
    return frozenset(gate.touched_qubits())


def optimize_light(circuit: Circuit) -> None:
    """Greedy left-to-right merge of adjacent subset pairs, to fixpoint."""
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(circuit.gates):
            g1, g2 = circuit.gates[i], circuit.gates[i + 1]
            if g1.mergeable and g2.mergeable:
                q1, q2 = _qubit_set(g1), _qubit_set(g2)
                if q1 <= q2 or q2 <= q1:
                    circuit.gates[i:i + 2] = [merge(g1, g2)]
                    changed = True
                    continue
            i += 1


def optimize_heavy(circuit: Circuit, block_size: int) -> None:
    """Commutation-aware greedy fusion bounded by ``block_size`` qubits.

    A later gate is merged into an earlier one when every gate between them
    commutes with the earlier gate (so it can be slid right to adjacency)
    and the merged qubit set does not exceed the block size.
    """
    if block_size < 1:
        raise ValueError("block size must be >= 1")
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(circuit.gates):
            g1 = circuit.gates[i]
            if not g1.mergeable or len(_qubit_set(g1)) > block_size:
                i += 1
                continue
            merged_here = False
            j = i + 1
            while j < len(circuit.gates):
                g2 = circuit.gates[j]
                if g2.mergeable and len(_qubit_set(g1) | _qubit_set(g2)) <= block_size:
                    fused = merge(g1, g2)
                    del circuit.gates[j]
                    del circuit.gates[i]
                    circuit.gates.insert(j - 1, fused)
                    changed = True
                    merged_here = True
                    break
                if not commutation_check(g1, g2):
                    break
                j += 1
            if not merged_here:
                i += 1
