"""Quantum state containers: state vector, density matrix, classical registers.

Basis index convention: bit i of a basis index (least-significant bit = bit 0)
is the value of qubit i, so index 2 of a two-qubit register is |10> with
qubit 1 set and qubit 0 clear.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

WILDCARD = 2


def _check_num_qubits(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"qubit count must be a positive integer, got {n!r}")


class StateVector:
    """2^n complex amplitudes plus an auto-growing classical register array."""

    def __init__(self, num_qubits: int):
        _check_num_qubits(num_qubits)
        self.num_qubits = int(num_qubits)
        self.amplitudes = np.zeros(1 << self.num_qubits, dtype=np.complex128)
        self.amplitudes[0] = 1.0
        self.classical_registers: list[int] = []

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def set_zero_state(self) -> None:
        self.amplitudes[:] = 0
        self.amplitudes[0] = 1.0

    def set_computational_basis(self, index: int) -> None:
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} out of range for {self.num_qubits} qubits")
        self.amplitudes[:] = 0
        self.amplitudes[index] = 1.0

    def set_haar_random(self, seed: int | None = None) -> None:
        """Draw a Haar-random pure state.

        Complex-Gaussian entries followed by normalization; reproducible for
        a fixed seed (PCG64 via numpy default_rng).
        """
        rng = np.random.default_rng(seed)
        raw = rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)
        self.amplitudes = raw / np.linalg.norm(raw)

    def copy(self) -> "StateVector":
        out = StateVector.__new__(StateVector)
        out.num_qubits = self.num_qubits
        out.amplitudes = self.amplitudes.copy()
        out.classical_registers = list(self.classical_registers)
        return out

    def load(self, source) -> None:
        if isinstance(source, StateVector):
            data = source.amplitudes
        else:
            data = np.asarray(source, dtype=np.complex128)
        if data.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} amplitudes, got shape {data.shape}")
        self.amplitudes = data.copy()

    def get_vector(self) -> np.ndarray:
        return self.amplitudes.copy()

    def get_squared_norm(self) -> float:
        return float(np.real(np.vdot(self.amplitudes, self.amplitudes)))

    def normalize(self, squared_norm: float) -> None:
        if squared_norm <= 0:
            raise ValueError("squared norm must be positive")
        self.amplitudes /= np.sqrt(squared_norm)

    def get_marginal_probability(self, pattern: Sequence[int]) -> float:
        if len(pattern) != self.num_qubits:
            raise ValueError("pattern length must equal the qubit count")
        probs = np.abs(self.amplitudes) ** 2
        idx = np.arange(self.dim)
        mask = np.ones(self.dim, dtype=bool)
        for qubit, want in enumerate(pattern):
            if want == WILDCARD:
                continue
            if want not in (0, 1):
                raise ValueError(f"pattern entry must be 0, 1 or WILDCARD, got {want!r}")
            mask &= ((idx >> qubit) & 1) == want
        return float(probs[mask].sum())

    def sampling(self, count: int, seed: int | None = None) -> list[int]:
        """Z-basis samples via a cumulative distribution and binary search."""
        if count == 0:
            return []
        if count < 0:
            raise ValueError("sample count must be non-negative")
        cumulative = np.cumsum(np.abs(self.amplitudes) ** 2)
        rng = np.random.default_rng(seed)
        draws = rng.random(count) * cumulative[-1]
        return np.searchsorted(cumulative, draws, side="right").tolist()

    def multiply_coef(self, coef: complex) -> None:
        self.amplitudes *= coef

    def add_state(self, other: "StateVector") -> None:
        if other.num_qubits != self.num_qubits:
            raise ValueError("qubit counts differ")
        self.amplitudes += other.amplitudes

    def multiply_elementwise_function(self, func: Callable[[int], complex]) -> None:
        coefs = np.fromiter((func(i) for i in range(self.dim)),
                            dtype=np.complex128, count=self.dim)
        self.amplitudes *= coefs

    def get_classical_value(self, address: int) -> int:
        if address < 0:
            raise ValueError("register address must be non-negative")
        if address >= len(self.classical_registers):
            return 0
        return self.classical_registers[address]

    def set_classical_value(self, address: int, value: int) -> None:
        if address < 0:
            raise ValueError("register address must be non-negative")
        if address >= len(self.classical_registers):
            self.classical_registers.extend([0] * (address + 1 - len(self.classical_registers)))
        self.classical_registers[address] = int(value)


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    if bra.num_qubits != ket.num_qubits:
        raise ValueError("qubit counts differ")
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def tensor_product(first: StateVector, second: StateVector) -> StateVector:
    """Concatenate registers; ``first`` occupies the lower qubit indices."""
    out = StateVector(first.num_qubits + second.num_qubits)
    out.amplitudes = np.kron(second.amplitudes, first.amplitudes)
    return out


def permutate_qubit(state: StateVector, order: Sequence[int]) -> StateVector:
    """Reorder qubits: new qubit i carries the role of old qubit order[i]."""
    n = state.num_qubits
    if sorted(order) != list(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")
    src = np.arange(state.dim)
    dst = np.zeros(state.dim, dtype=np.intp)
    for new_q, old_q in enumerate(order):
        dst |= ((src >> old_q) & 1) << new_q
    out = StateVector(n)
    out.amplitudes = np.zeros(state.dim, dtype=np.complex128)
    out.amplitudes[dst] = state.amplitudes[src]
    return out


def drop_qubit(state: StateVector, targets: Sequence[int],
               values: Sequence[int]) -> StateVector:
    """Project target qubits onto given values and remove them.

    The result is intentionally not renormalized: its squared norm equals the
    marginal probability of the projected pattern.
    """
    n = state.num_qubits
    if len(targets) != len(values):
        raise ValueError("targets and projection values must pair up")
    if len(set(targets)) != len(targets):
        raise ValueError("target qubits must be distinct")
    if len(targets) >= n:
        raise ValueError("cannot drop every qubit")
    for t, v in zip(targets, values):
        if not 0 <= t < n:
            raise ValueError(f"target {t} out of range")
        if v not in (0, 1):
            raise ValueError("projection values must be 0 or 1")
    keep = [q for q in range(n) if q not in set(targets)]
    src = np.arange(1 << len(keep), dtype=np.intp)
    full = np.zeros(1 << len(keep), dtype=np.intp)
    for j, q in enumerate(keep):
        full |= ((src >> j) & 1) << q
    for t, v in zip(targets, values):
        full |= v << t
    out = StateVector(len(keep))
    out.amplitudes = state.amplitudes[full].copy()
    return out


class DensityMatrix:
    """2^n x 2^n complex matrix for mixed-state simulation."""

    def __init__(self, num_qubits: int):
        _check_num_qubits(num_qubits)
        self.num_qubits = int(num_qubits)
        dim = 1 << self.num_qubits
        self.elements = np.zeros((dim, dim), dtype=np.complex128)
        self.elements[0, 0] = 1.0

    @property
    def dim(self) -> int:
        return self.elements.shape[0]

    def copy(self) -> "DensityMatrix":
        out = DensityMatrix.__new__(DensityMatrix)
        out.num_qubits = self.num_qubits
        out.elements = self.elements.copy()
        return out

    def get_trace(self) -> complex:
        return complex(np.trace(self.elements))


def density_from_pure(state: StateVector) -> DensityMatrix:
    out = DensityMatrix(state.num_qubits)
    out.elements = np.outer(state.amplitudes, state.amplitudes.conj())
    return out
