"""General quantum maps: CPTP channels, instruments, probabilistic and
adaptive gates, plus the named noise constructors.

On state vectors a CPTP map samples one Kraus branch with probability
p_i = |K_i |psi>|^2; on density matrices the full operator sum is applied.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

from .gates import BasicGate, DenseGate, PauliGate, QuantumGate, X, Y, Z, expanded_matrix
from .state import DensityMatrix, StateVector

_COMPLETENESS_TOL = 1e-8


def _ensure_rng(rng) -> np.random.Generator:
    return rng if rng is not None else np.random.default_rng()


def _check_completeness(kraus_ops: Sequence[BasicGate]) -> None:
    qubits = sorted({q for g in kraus_ops for q in g.touched_qubits()})
    dim = 1 << len(qubits)
    acc = np.zeros((dim, dim), dtype=np.complex128)
    for g in kraus_ops:
        mat = expanded_matrix(g, qubits)
        acc += mat.conj().T @ mat
    if np.max(np.abs(acc - np.eye(dim))) > _COMPLETENESS_TOL:
        raise ValueError("Kraus operators do not satisfy sum K^dag K = I")


class CptpMap(QuantumGate):
    """Operator-sum channel given as a list of basic gates."""

    def __init__(self, kraus_ops: Sequence[BasicGate], name: str | None = None):
        kraus_ops = [g for g in kraus_ops]
        if not kraus_ops:
            raise ValueError("at least one Kraus operator is required")
        for g in kraus_ops:
            if not isinstance(g, BasicGate):
                raise ValueError("Kraus operators must be basic gates")
        _check_completeness(kraus_ops)
        targets = sorted({q for g in kraus_ops for q in g.touched_qubits()})
        super().__init__(targets, name=name)
        self.kraus_ops = kraus_ops
        self.commutation = {q: "none" for q in targets}

    def apply(self, state: StateVector, rng=None) -> int:
        """Sample a branch, normalize into it, and return the branch index.

        Branch norms are computed sequentially and the scan stops as soon as
        the drawn threshold is crossed; the last branch absorbs rounding.
        """
        self._check_state(state.num_qubits)
        rng = _ensure_rng(rng)
        draw = rng.random()
        cumulative = 0.0
        chosen = None
        branch = None
        for i, gate in enumerate(self.kraus_ops):
            candidate = state.copy()
            gate.apply(candidate)
            prob = candidate.get_squared_norm()
            cumulative += prob
            if cumulative >= draw or i == len(self.kraus_ops) - 1:
                if prob <= 0:
                    continue
                chosen, branch = i, candidate
                break
        if chosen is None:
            raise ValueError("all Kraus branches have zero probability")
        branch.normalize(branch.get_squared_norm())
        state.amplitudes = branch.amplitudes
        return chosen

    def apply_density(self, rho: DensityMatrix) -> None:
        self._check_state(rho.num_qubits)
        acc = np.zeros_like(rho.elements)
        for gate in self.kraus_ops:
            term = rho.copy()
            gate.apply_density(term)
            acc += term.elements
        rho.elements = acc

    def copy(self) -> "CptpMap":
        out = CptpMap([g.copy() for g in self.kraus_ops])
        self._copy_meta(out)
        return out


class Instrument(CptpMap):
    """CPTP map that records the chosen branch in a classical register."""

    def __init__(self, kraus_ops, register_address: int, name=None):
        if register_address < 0:
            raise ValueError("register address must be non-negative")
        super().__init__(kraus_ops, name=name)
        self.register_address = int(register_address)

    def apply(self, state: StateVector, rng=None) -> int:
        chosen = super().apply(state, rng)
        state.set_classical_value(self.register_address, chosen)
        return chosen

    def copy(self) -> "Instrument":
        out = Instrument([g.copy() for g in self.kraus_ops], self.register_address)
        self._copy_meta(out)
        return out


class ProbabilisticMap(QuantumGate):
    """Apply gate i with fixed probability p_i; the residual 1 - sum(p) is identity.

    The distribution is input-state independent, so no branch norms are
    computed and unitary branches are never renormalized.
    """

    def __init__(self, probs: Sequence[float], gates: Sequence[BasicGate], name=None):
        probs = [float(p) for p in probs]
        if len(probs) != len(gates):
            raise ValueError("one probability per gate is required")
        if any(p < 0 for p in probs):
            raise ValueError("probabilities must be non-negative")
        if sum(probs) > 1 + 1e-12:
            raise ValueError("probabilities must sum to at most 1")
        for g in gates:
            if not isinstance(g, BasicGate):
                raise ValueError("branches must be basic gates")
        targets = sorted({q for g in gates for q in g.touched_qubits()})
        super().__init__(targets, name=name)
        self.probs = tuple(probs)
        self.gates = list(gates)
        self.commutation = {q: "none" for q in targets}

    def apply(self, state: StateVector, rng=None) -> None:
        self._check_state(state.num_qubits)
        draw = _ensure_rng(rng).random()
        cumulative = 0.0
        for prob, gate in zip(self.probs, self.gates):
            cumulative += prob
            if draw < cumulative:
                gate.apply(state)
                return
        # residual: identity

    def apply_density(self, rho: DensityMatrix) -> None:
        self._check_state(rho.num_qubits)
        acc = (1.0 - sum(self.probs)) * rho.elements
        for prob, gate in zip(self.probs, self.gates):
            if prob == 0:
                continue
            term = rho.copy()
            gate.apply_density(term)
            acc += prob * term.elements
        rho.elements = acc

    def copy(self) -> "ProbabilisticMap":
        out = ProbabilisticMap(self.probs, [g.copy() for g in self.gates])
        self._copy_meta(out)
        return out


class AdaptiveGate(QuantumGate):
    """Apply the inner gate only when a classical-register predicate holds."""

    def __init__(self, gate: QuantumGate, condition: Callable[[list[int]], bool],
                 name=None):
        super().__init__(gate.targets, gate.controls, name=name)
        self.gate = gate
        self.condition = condition
        self.commutation = {q: "none" for q in self.touched_qubits()}

    def apply(self, state: StateVector, rng=None) -> None:
        if self.condition(list(state.classical_registers)):
            self.gate.apply(state, _ensure_rng(rng))

    def apply_density(self, rho: DensityMatrix) -> None:
        raise TypeError("adaptive gates require classical registers; "
                        "density matrices do not carry them")

    def copy(self) -> "AdaptiveGate":
        out = AdaptiveGate(self.gate.copy(), self.condition)
        self._copy_meta(out)
        return out


def _check_prob(p: float) -> float:
    p = float(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    return p


def BitFlipNoise(qubit: int, prob: float) -> ProbabilisticMap:
    gate = ProbabilisticMap([_check_prob(prob)], [X(qubit)], name="BitFlipNoise")
    gate.named_args = ((qubit,), (prob,))
    return gate


def DephasingNoise(qubit: int, prob: float) -> ProbabilisticMap:
    gate = ProbabilisticMap([_check_prob(prob)], [Z(qubit)], name="DephasingNoise")
    gate.named_args = ((qubit,), (prob,))
    return gate


def DepolarizingNoise(qubit: int, prob: float) -> ProbabilisticMap:
    p = _check_prob(prob)
    gate = ProbabilisticMap([p / 3] * 3, [X(qubit), Y(qubit), Z(qubit)],
                            name="DepolarizingNoise")
    gate.named_args = ((qubit,), (prob,))
    return gate


def TwoQubitDepolarizingNoise(qubit1: int, qubit2: int, prob: float) -> ProbabilisticMap:
    p = _check_prob(prob)
    branches = [PauliGate([qubit1, qubit2], [a, b])
                for a in range(4) for b in range(4) if (a, b) != (0, 0)]
    gate = ProbabilisticMap([p / 15] * 15, branches, name="TwoQubitDepolarizingNoise")
    gate.named_args = ((qubit1, qubit2), (prob,))
    return gate


def AmplitudeDampingNoise(qubit: int, gamma: float) -> CptpMap:
    g = _check_prob(gamma)
    k0 = DenseGate([qubit], [[1, 0], [0, np.sqrt(1 - g)]])
    k1 = DenseGate([qubit], [[0, np.sqrt(g)], [0, 0]])
    gate = CptpMap([k0, k1], name="AmplitudeDampingNoise")
    gate.named_args = ((qubit,), (gamma,))
    return gate


def Measurement(qubit: int, register_address: int) -> Instrument:
    from .gates import P0, P1
    gate = Instrument([P0(qubit), P1(qubit)], register_address, name="Measurement")
    gate.named_args = ((qubit,), (register_address,))
    return gate
