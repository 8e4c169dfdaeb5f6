"""Gate objects: specialized kernels per gate-matrix structure plus named gates.

A basic gate acts as |psi> -> K|psi> for an arbitrary (not necessarily
unitary) matrix K restricted to its target qubits.  Each gate also carries a
per-qubit commutation basis used by the circuit optimizer: an axis label
means the gate preserves the eigenspaces of that Pauli on the qubit, ``any``
means the gate acts trivially there, ``none`` means no commutation is known.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Sequence

import numpy as np
import scipy.sparse as sp

from . import kernels
from .state import DensityMatrix, StateVector

_AXES = ("X", "Y", "Z", "any", "none")
_PAULI_AXIS = {0: "any", 1: "X", 2: "Y", 3: "Z"}


def _validate_targets(targets) -> tuple[int, ...]:
    targets = tuple(int(t) for t in targets)
    if len(set(targets)) != len(targets):
        raise ValueError("target qubits must be distinct")
    if any(t < 0 for t in targets):
        raise ValueError("target qubits must be non-negative")
    return targets


class QuantumGate:
    """Common interface for basic gates and general quantum maps."""

    is_basic = False
    is_parametric = False

    def __init__(self, targets, controls=(), name: str | None = None):
        self.targets = _validate_targets(targets)
        self.controls = tuple((int(q), int(v)) for q, v in controls)
        for q, v in self.controls:
            if v not in (0, 1):
                raise ValueError("control values must be 0 or 1")
            if q in self.targets:
                raise ValueError(f"control qubit {q} overlaps a target")
        if len({q for q, _ in self.controls}) != len(self.controls):
            raise ValueError("control qubits must be distinct")
        self.name = name
        self.named_args: tuple | None = None
        self.commutation: dict[int, str] = {}

    @property
    def mergeable(self) -> bool:
        return self.is_basic and not self.is_parametric

    def touched_qubits(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.targets) | {q for q, _ in self.controls}))

    def commutation_basis(self, qubit: int) -> str:
        return self.commutation.get(qubit, "none")

    def apply(self, state: StateVector, rng: np.random.Generator | None = None) -> None:
        raise NotImplementedError

    def apply_density(self, rho: DensityMatrix) -> None:
        raise NotImplementedError

    def copy(self) -> "QuantumGate":
        raise NotImplementedError

    def _check_state(self, num_qubits: int) -> None:
        top = max(self.touched_qubits(), default=-1)
        if top >= num_qubits:
            raise ValueError(f"gate touches qubit {top} but the state has {num_qubits} qubits")

    def _copy_meta(self, other: "QuantumGate") -> None:
        other.name = self.name
        other.named_args = self.named_args
        other.commutation = dict(self.commutation)


class BasicGate(QuantumGate):
    """Gate whose action is a matrix on the target subspace, maybe controlled."""

    is_basic = True

    def gate_matrix(self) -> np.ndarray:
        """The 2^m x 2^m matrix on the target qubits (controls excluded)."""
        raise NotImplementedError

    def apply(self, state: StateVector, rng=None) -> None:
        self._check_state(state.num_qubits)
        self._apply_kernel(state.amplitudes, state.num_qubits)

    def _apply_kernel(self, amps: np.ndarray, num_qubits: int) -> None:
        kernels.apply_dense(amps, num_qubits, self.targets, self.gate_matrix(),
                            self.controls)

    def apply_density(self, rho: DensityMatrix) -> None:
        self._check_state(rho.num_qubits)
        full = kernels.full_space_matrix(rho.num_qubits, self.targets,
                                         self.gate_matrix(), self.controls)
        rho.elements = np.asarray(full @ rho.elements @ full.conj().T.tocsr())

    def with_control(self, qubit: int, value: int) -> "BasicGate":
        """Return a copy with one more control qubit.

        The copy loses its named identity (the control changes the action)
        but control qubits always gain a Z commutation basis.
        """
        out = self.copy()
        out.name = None
        out.named_args = None
        if qubit in out.targets or qubit in {q for q, _ in out.controls}:
            raise ValueError(f"qubit {qubit} is already used by this gate")
        if value not in (0, 1):
            raise ValueError("control value must be 0 or 1")
        out.controls = out.controls + ((int(qubit), int(value)),)
        out.commutation[qubit] = "Z"
        return out


class DenseGate(BasicGate):
    def __init__(self, targets, matrix, controls=(), name=None):
        super().__init__(targets, controls, name)
        mat = np.array(matrix, dtype=np.complex128)
        dim = 1 << len(self.targets)
        if mat.shape != (dim, dim):
            raise ValueError(f"matrix shape {mat.shape} does not match {len(self.targets)} targets")
        self.matrix = mat
        self.commutation = {q: "none" for q in self.targets}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        return self.matrix.copy()

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_dense(amps, num_qubits, self.targets, self.matrix, self.controls)

    def copy(self) -> "DenseGate":
        out = DenseGate(self.targets, self.matrix, self.controls)
        self._copy_meta(out)
        return out


class SparseGate(BasicGate):
    def __init__(self, targets, entries, controls=(), name=None):
        """entries: iterable of (row, col, value) over the 2^m target space."""
        super().__init__(targets, controls, name)
        dim = 1 << len(self.targets)
        seen = set()
        rows, cols, vals = [], [], []
        for r, c, v in entries:
            if not (0 <= r < dim and 0 <= c < dim):
                raise ValueError(f"entry ({r}, {c}) outside a {dim}x{dim} matrix")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            seen.add((r, c))
            rows.append(r)
            cols.append(c)
            vals.append(complex(v))
        self.entries = tuple(zip(rows, cols, vals))
        self.sparse = sp.csr_matrix((vals, (rows, cols)), shape=(dim, dim),
                                    dtype=np.complex128)
        self.commutation = {q: "none" for q in self.targets}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        return self.sparse.toarray()

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_sparse(amps, num_qubits, self.targets, self.sparse, self.controls)

    def copy(self) -> "SparseGate":
        out = SparseGate(self.targets, self.entries, self.controls)
        self._copy_meta(out)
        return out


class DiagonalGate(BasicGate):
    def __init__(self, targets, diag, controls=(), name=None):
        super().__init__(targets, controls, name)
        d = np.array(diag, dtype=np.complex128)
        if d.shape != (1 << len(self.targets),):
            raise ValueError("diagonal length does not match target count")
        self.diag = d
        self.commutation = {q: "Z" for q in self.targets}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        return np.diag(self.diag)

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_diagonal(amps, num_qubits, self.targets, self.diag, self.controls)

    def copy(self) -> "DiagonalGate":
        out = DiagonalGate(self.targets, self.diag, self.controls)
        self._copy_meta(out)
        return out


class PermutationGate(BasicGate):
    def __init__(self, targets, func_or_table, controls=(), name=None):
        """Reversible map over the 2^m sub-indices; validated to be bijective."""
        super().__init__(targets, controls, name)
        dim = 1 << len(self.targets)
        if callable(func_or_table):
            table = [int(func_or_table(z, dim)) % dim for z in range(dim)]
        else:
            table = [int(z) for z in func_or_table]
        if sorted(table) != list(range(dim)):
            raise ValueError("permutation function is not bijective on the target space")
        self.table = np.array(table, dtype=np.intp)
        self.commutation = {q: "none" for q in self.targets}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        dim = len(self.table)
        mat = np.zeros((dim, dim), dtype=np.complex128)
        mat[self.table, np.arange(dim)] = 1.0
        return mat

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_permutation(amps, num_qubits, self.targets, self.table, self.controls)

    def copy(self) -> "PermutationGate":
        out = PermutationGate(self.targets, self.table, self.controls)
        self._copy_meta(out)
        return out


def _check_pauli_ids(targets, pauli_ids) -> tuple[int, ...]:
    ids = tuple(int(p) for p in pauli_ids)
    if len(ids) != len(targets):
        raise ValueError("one Pauli id per target qubit is required")
    if any(p not in (0, 1, 2, 3) for p in ids):
        raise ValueError("Pauli ids must be in {0, 1, 2, 3}")
    return ids


class PauliGate(BasicGate):
    def __init__(self, targets, pauli_ids, controls=(), name=None):
        super().__init__(targets, controls, name)
        self.pauli_ids = _check_pauli_ids(self.targets, pauli_ids)
        self.commutation = {q: _PAULI_AXIS[p] for q, p in zip(self.targets, self.pauli_ids)}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        return kernels.pauli_matrix(self.pauli_ids)

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_pauli(amps, num_qubits, self.targets, self.pauli_ids, self.controls)

    def copy(self) -> "PauliGate":
        out = PauliGate(self.targets, self.pauli_ids, self.controls)
        self._copy_meta(out)
        return out


class PauliRotationGate(BasicGate):
    """exp(i*angle*P/2); RX/RY/RZ are the single-qubit special cases.

    Sign convention: positive angle multiplies P by +i/2 in the exponent,
    which is the opposite sign of some other simulators.
    """

    def __init__(self, targets, pauli_ids, angle, controls=(), name=None,
                 parametric: bool = False):
        super().__init__(targets, controls, name)
        self.pauli_ids = _check_pauli_ids(self.targets, pauli_ids)
        angle = float(angle)
        if not math.isfinite(angle):
            raise ValueError("rotation angle must be finite")
        self.angle = angle
        self.is_parametric = parametric
        self.commutation = {q: _PAULI_AXIS[p] for q, p in zip(self.targets, self.pauli_ids)}
        self.commutation.update({q: "Z" for q, _ in self.controls})

    def gate_matrix(self) -> np.ndarray:
        dim = 1 << len(self.targets)
        return (np.cos(self.angle / 2) * np.eye(dim, dtype=np.complex128)
                + 1j * np.sin(self.angle / 2) * kernels.pauli_matrix(self.pauli_ids))

    def _apply_kernel(self, amps, num_qubits) -> None:
        kernels.apply_pauli_rotation(amps, num_qubits, self.targets, self.pauli_ids,
                                     self.angle, self.controls)

    def copy(self) -> "PauliRotationGate":
        out = PauliRotationGate(self.targets, self.pauli_ids, self.angle,
                                self.controls, parametric=self.is_parametric)
        self._copy_meta(out)
        return out


def index_decomposition(num_qubits: int, targets: Sequence[int]):
    """Expose the B0 enumeration and B1 list used by every kernel."""
    targets = _validate_targets(targets)
    return kernels.b0_indices(num_qubits, targets), kernels.b1_indices(targets)


# ---------------------------------------------------------------------------
# Named gates


def Identity(qubit: int) -> DiagonalGate:
    gate = DiagonalGate([qubit], [1, 1], name="Identity")
    gate.commutation = {qubit: "any"}
    gate.named_args = ((qubit,), ())
    return gate


def X(qubit: int) -> PauliGate:
    return _named(PauliGate([qubit], [1], name="X"), (qubit,))


def Y(qubit: int) -> PauliGate:
    return _named(PauliGate([qubit], [2], name="Y"), (qubit,))


def Z(qubit: int) -> PauliGate:
    return _named(PauliGate([qubit], [3], name="Z"), (qubit,))


def H(qubit: int) -> DenseGate:
    mat = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
    return _named(DenseGate([qubit], mat, name="H"), (qubit,))


def S(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, 1j], name="S"), (qubit,))


def Sdag(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, -1j], name="Sdag"), (qubit,))


def T(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, cmath.exp(1j * math.pi / 4)], name="T"), (qubit,))


def Tdag(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, cmath.exp(-1j * math.pi / 4)], name="Tdag"), (qubit,))


_SQRT_X = np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=np.complex128) / 2
_SQRT_Y = np.array([[1 + 1j, -1 - 1j], [1 + 1j, 1 + 1j]], dtype=np.complex128) / 2


def sqrtX(qubit: int) -> DenseGate:
    gate = _named(DenseGate([qubit], _SQRT_X, name="sqrtX"), (qubit,))
    gate.commutation = {qubit: "X"}
    return gate


def sqrtXdag(qubit: int) -> DenseGate:
    gate = _named(DenseGate([qubit], _SQRT_X.conj().T, name="sqrtXdag"), (qubit,))
    gate.commutation = {qubit: "X"}
    return gate


def sqrtY(qubit: int) -> DenseGate:
    gate = _named(DenseGate([qubit], _SQRT_Y, name="sqrtY"), (qubit,))
    gate.commutation = {qubit: "Y"}
    return gate


def sqrtYdag(qubit: int) -> DenseGate:
    gate = _named(DenseGate([qubit], _SQRT_Y.conj().T, name="sqrtYdag"), (qubit,))
    gate.commutation = {qubit: "Y"}
    return gate


def RX(qubit: int, angle: float) -> PauliRotationGate:
    return _named(PauliRotationGate([qubit], [1], angle, name="RX"), (qubit,), (angle,))


def RY(qubit: int, angle: float) -> PauliRotationGate:
    return _named(PauliRotationGate([qubit], [2], angle, name="RY"), (qubit,), (angle,))


def RZ(qubit: int, angle: float) -> PauliRotationGate:
    return _named(PauliRotationGate([qubit], [3], angle, name="RZ"), (qubit,), (angle,))


def U1(qubit: int, lam: float) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, cmath.exp(1j * lam)], name="U1"),
                  (qubit,), (lam,))


def U2(qubit: int, phi: float, lam: float) -> DenseGate:
    mat = np.array([
        [1, -cmath.exp(1j * lam)],
        [cmath.exp(1j * phi), cmath.exp(1j * (phi + lam))],
    ], dtype=np.complex128) / np.sqrt(2)
    return _named(DenseGate([qubit], mat, name="U2"), (qubit,), (phi, lam))


def U3(qubit: int, theta: float, phi: float, lam: float) -> DenseGate:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    mat = np.array([
        [c, -cmath.exp(1j * lam) * s],
        [cmath.exp(1j * phi) * s, cmath.exp(1j * (phi + lam)) * c],
    ], dtype=np.complex128)
    return _named(DenseGate([qubit], mat, name="U3"), (qubit,), (theta, phi, lam))


def CNOT(control: int, target: int) -> PauliGate:
    gate = PauliGate([target], [1], controls=[(control, 1)], name="CNOT")
    gate.commutation = {control: "Z", target: "X"}
    gate.named_args = ((control, target), ())
    return gate


def CZ(control: int, target: int) -> DiagonalGate:
    gate = DiagonalGate([target], [1, -1], controls=[(control, 1)], name="CZ")
    gate.commutation = {control: "Z", target: "Z"}
    gate.named_args = ((control, target), ())
    return gate


def SWAP(qubit1: int, qubit2: int) -> PermutationGate:
    gate = PermutationGate([qubit1, qubit2], [0, 2, 1, 3], name="SWAP")
    gate.named_args = ((qubit1, qubit2), ())
    return gate


def TOFFOLI(control1: int, control2: int, target: int) -> PauliGate:
    gate = PauliGate([target], [1], controls=[(control1, 1), (control2, 1)], name="TOFFOLI")
    gate.commutation = {control1: "Z", control2: "Z", target: "X"}
    gate.named_args = ((control1, control2, target), ())
    return gate


def FREDKIN(control: int, target1: int, target2: int) -> PermutationGate:
    gate = PermutationGate([target1, target2], [0, 2, 1, 3],
                           controls=[(control, 1)], name="FREDKIN")
    gate.named_args = ((control, target1, target2), ())
    return gate


def P0(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [1, 0], name="P0"), (qubit,))


def P1(qubit: int) -> DiagonalGate:
    return _named(DiagonalGate([qubit], [0, 1], name="P1"), (qubit,))


def ParametricRX(qubit: int, angle: float) -> PauliRotationGate:
    return PauliRotationGate([qubit], [1], angle, name="ParametricRX", parametric=True)


def ParametricRY(qubit: int, angle: float) -> PauliRotationGate:
    return PauliRotationGate([qubit], [2], angle, name="ParametricRY", parametric=True)


def ParametricRZ(qubit: int, angle: float) -> PauliRotationGate:
    return PauliRotationGate([qubit], [3], angle, name="ParametricRZ", parametric=True)


def ParametricPauliRotation(targets, pauli_ids, angle: float) -> PauliRotationGate:
    return PauliRotationGate(targets, pauli_ids, angle,
                             name="ParametricPauliRotation", parametric=True)


def RandomUnitary(targets, seed: int | None = None) -> DenseGate:
    """Haar-random unitary on the targets, via QR of a complex Ginibre matrix."""
    rng = np.random.default_rng(seed)
    dim = 1 << len(targets)
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(raw)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return DenseGate(targets, q, name=None)


def _named(gate: BasicGate, qubits: tuple, params: tuple = ()) -> BasicGate:
    gate.named_args = (qubits, params)
    return gate


def merge(first: BasicGate, second: BasicGate) -> DenseGate:
    """Fuse two basic gates: applying the result equals first then second.

    Controls of both gates are absorbed into the dense matrix on the union
    of all touched qubits.
    """
    for g in (first, second):
        if not isinstance(g, BasicGate) or not g.mergeable:
            raise ValueError("only non-parametric basic gates can be merged")
    union = tuple(sorted(set(first.touched_qubits()) | set(second.touched_qubits())))
    mat = expanded_matrix(second, union) @ expanded_matrix(first, union)
    return DenseGate(union, mat)


def expanded_matrix(gate: BasicGate, qubit_list: Sequence[int]) -> np.ndarray:
    """Matrix of a gate (controls included) on an ordered superset of qubits."""
    qubit_list = list(qubit_list)
    pos = {q: i for i, q in enumerate(qubit_list)}
    missing = [q for q in gate.touched_qubits() if q not in pos]
    if missing:
        raise ValueError(f"qubits {missing} are not in the expansion list")
    dim = 1 << len(qubit_list)
    tpos = [pos[t] for t in gate.targets]
    idx = np.arange(dim)
    sub = np.zeros(dim, dtype=np.intp)
    for j, p in enumerate(tpos):
        sub |= ((idx >> p) & 1) << j
    active = np.ones(dim, dtype=bool)
    for q, v in gate.controls:
        active &= ((idx >> pos[q]) & 1) == v
    tmask = sum(1 << p for p in tpos)
    base = idx & ~tmask
    kmat = gate.gate_matrix()
    out = np.zeros((dim, dim), dtype=np.complex128)
    out[idx[~active], idx[~active]] = 1.0
    cols = idx[active]
    for z in range(kmat.shape[0]):
        rows = base[active]
        for j, p in enumerate(tpos):
            rows = rows | (((z >> j) & 1) << p)
        out[rows, cols] += kmat[z, sub[active]]
    return out
