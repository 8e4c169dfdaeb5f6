"""Circuit optimization entry points."""

from __future__ import annotations

import qsimcore as _core

from ._handles import QuantumGateBase, unwrap

__all__ = ["QuantumCircuitOptimizer"]


class QuantumCircuitOptimizer:
    """Gate-fusion passes applied in place to a circuit handle."""

    def merge_all(self, circuit) -> QuantumGateBase:
        return QuantumGateBase(_core.merge_all(unwrap(circuit)))

    def optimize_light(self, circuit) -> None:
        _core.optimize_light(unwrap(circuit))

    def optimize(self, circuit, block_size: int) -> None:
        _core.optimize_heavy(unwrap(circuit), block_size)
