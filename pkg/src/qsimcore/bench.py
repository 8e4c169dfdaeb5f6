"""Benchmark circuit generators and the timing harness.

Two circuit families are provided: a CZ-ladder of random rotation layers
(plus a commuting single-RZ variant) and a CNOT-ring used for cross-library
style benchmarks.  Timing wraps only the state-update call with a monotonic
clock; circuit construction is excluded and optimization is timed separately.
"""

from __future__ import annotations

import platform
import statistics
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import config
from .circuit import Circuit
from .gates import CNOT, CZ, RX, RZ, DenseGate
from .optimizer import optimize_heavy, optimize_light
from .state import StateVector

FAMILIES = ("cz-ladder", "cz-ladder-commuting", "cnot-ring")


def generate_cz_ladder(num_qubits: int, depth: int, seed: int | None = None,
                       commuting: bool = False) -> Circuit:
    """depth+1 random rotation layers with CZ ladders between them.

    Each rotation layer applies (RZ, RX, RZ) with uniform angles in [0, 2pi)
    to every qubit; the commuting variant uses a single RZ instead.  The CZ
    layer between rotation layers pairs neighbors starting at the parity of
    the layer index.
    """
    if num_qubits < 2:
        raise ValueError("the CZ ladder needs at least 2 qubits")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    rng = np.random.default_rng(seed)
    circuit = Circuit(num_qubits)
    for layer in range(depth + 1):
        for q in range(num_qubits):
            if commuting:
                circuit.add_gate(RZ(q, rng.random() * 2 * np.pi))
            else:
                circuit.add_gate(RZ(q, rng.random() * 2 * np.pi))
                circuit.add_gate(RX(q, rng.random() * 2 * np.pi))
                circuit.add_gate(RZ(q, rng.random() * 2 * np.pi))
        if layer == depth:
            break
        for q in range(layer % 2, num_qubits - 1, 2):
            circuit.add_gate(CZ(q, q + 1))
    return circuit


def generate_cnot_ring(num_qubits: int, seed: int | None = None) -> Circuit:
    """Ten alternations of rotation and CNOT-ring layers plus a final
    rotation layer.

    Rotation layers apply (RZ, RX, RZ) per qubit, except that the first RZ of
    the first layer and the last RZ of the last layer are dropped.  CNOT
    layers use target i with control (i+1) mod n for every i.
    """
    if num_qubits < 2:
        raise ValueError("the CNOT ring needs at least 2 qubits")
    rng = np.random.default_rng(seed)
    circuit = Circuit(num_qubits)
    layers = 11
    for layer in range(layers):
        for q in range(num_qubits):
            if layer != 0:
                circuit.add_gate(RZ(q, rng.random() * 2 * np.pi))
            circuit.add_gate(RX(q, rng.random() * 2 * np.pi))
            if layer != layers - 1:
                circuit.add_gate(RZ(q, rng.random() * 2 * np.pi))
        if layer != layers - 1:
            for q in range(num_qubits):
                circuit.add_gate(CNOT((q + 1) % num_qubits, q))
    return circuit


def generate_circuit(family: str, num_qubits: int, depth: int,
                     seed: int | None = None) -> Circuit:
    if family == "cz-ladder":
        return generate_cz_ladder(num_qubits, depth, seed)
    if family == "cz-ladder-commuting":
        return generate_cz_ladder(num_qubits, depth, seed, commuting=True)
    if family == "cnot-ring":
        return generate_cnot_ring(num_qubits, seed)
    raise ValueError(f"unknown circuit family {family!r}; choose from {FAMILIES}")


@dataclass
class BenchConfig:
    family: str = "cz-ladder"
    nqubits: tuple[int, ...] = (4, 6, 8)
    depth: int = 5
    repeats: int = 3
    optimization: str = "none"  # none | light | heavy
    block_size: int = 2
    seed: int | None = 1
    include_opt_time: bool = True

    def __post_init__(self):
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if any(n < 1 for n in self.nqubits):
            raise ValueError("qubit counts must be >= 1")
        if self.family not in FAMILIES:
            raise ValueError(f"unknown circuit family {self.family!r}")
        if self.optimization not in ("none", "light", "heavy"):
            raise ValueError("optimization must be none, light, or heavy")


@dataclass
class BenchPoint:
    family: str
    num_qubits: int
    strategy: str
    repeats: int
    times: list[float]
    opt_time: float
    gates_before: int
    gates_after: int
    error: str | None = None

    @property
    def min_time(self) -> float:
        return min(self.times) if self.times else float("nan")

    @property
    def median_time(self) -> float:
        return statistics.median(self.times) if self.times else float("nan")

    @property
    def mean_time(self) -> float:
        return statistics.fmean(self.times) if self.times else float("nan")

    def to_dict(self) -> dict:
        return {
            "family": self.family, "num_qubits": self.num_qubits,
            "strategy": self.strategy, "repeats": self.repeats,
            "times": self.times, "min": self.min_time, "median": self.median_time,
            "mean": self.mean_time, "opt_time": self.opt_time,
            "gates_before": self.gates_before, "gates_after": self.gates_after,
            "error": self.error,
        }


@dataclass
class TimingReport:
    config: dict
    environment: dict
    results: list[BenchPoint] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"config": self.config, "environment": self.environment,
                "results": [p.to_dict() for p in self.results]}


def environment_stamp() -> dict:
    return {
        "python": sys.version.split()[0],
        "numpy": np.__version__,
        "platform": platform.platform(),
        "machine": platform.machine(),
        "threads": config.get_num_threads(),
    }


def _strategy_label(cfg: BenchConfig) -> str:
    if cfg.optimization == "heavy":
        return f"heavy({cfg.block_size})"
    return cfg.optimization


def time_circuit(circuit: Circuit, repeats: int) -> list[float]:
    """Wall times of ``repeats`` executions, each on a fresh zero state."""
    times = []
    for _ in range(repeats):
        state = StateVector(circuit.num_qubits)
        start = time.perf_counter()
        circuit.update_state(state, rng=np.random.default_rng(0))
        times.append(time.perf_counter() - start)
    return times


def run_benchmark(cfg: BenchConfig) -> TimingReport:
    report = TimingReport(config=vars(cfg).copy(), environment=environment_stamp())
    for n in cfg.nqubits:
        try:
            circuit = generate_circuit(cfg.family, n, cfg.depth, cfg.seed)
            gates_before = circuit.get_gate_count()
            opt_time = 0.0
            if cfg.optimization != "none":
                start = time.perf_counter()
                if cfg.optimization == "light":
                    optimize_light(circuit)
                else:
                    optimize_heavy(circuit, cfg.block_size)
                opt_time = time.perf_counter() - start
            times = time_circuit(circuit, cfg.repeats)
            report.results.append(BenchPoint(
                family=cfg.family, num_qubits=n, strategy=_strategy_label(cfg),
                repeats=cfg.repeats, times=times, opt_time=opt_time,
                gates_before=gates_before, gates_after=circuit.get_gate_count()))
        except MemoryError as exc:
            report.results.append(BenchPoint(
                family=cfg.family, num_qubits=n, strategy=_strategy_label(cfg),
                repeats=0, times=[], opt_time=0.0, gates_before=0, gates_after=0,
                error=f"allocation failure: {exc}"))
    return report


def single_gate_times(nqubits: tuple[int, ...], repeats: int = 3,
                      seed: int = 0) -> dict[int, float]:
    """Minimum time to apply one single-qubit dense gate per qubit count."""
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(raw)
    gate = DenseGate([0], q * (np.diag(r) / np.abs(np.diag(r))))
    out = {}
    for n in nqubits:
        state = StateVector(n)
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            gate.apply(state)
            best = min(best, time.perf_counter() - start)
        out[n] = best
        del state
    return out
