"""Low-level state-vector update kernels.

Every kernel splits the 2^n basis indices into an outer set B0 (bits at
target/control positions forced to zero) and an inner set B1 (only target
bits vary).  B0 indices are never materialized as a precomputed list per
iteration; they are derived from a dense counter by inserting zero bits at
the fixed positions, which keeps the outer loop evenly chunkable across
worker threads.  B1 is small (2^m entries) and precomputed once.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import scipy.sparse as sp

from . import config

_PAULI_1Q = (
    np.eye(2, dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def b0_indices(num_qubits: int, fixed_bits) -> np.ndarray:
    """All basis indices with zeros at ``fixed_bits``, in counter order.

    The i-th element is obtained from the counter i by inserting a zero bit
    at each fixed position (ascending), so the result is sorted.
    """
    free = num_qubits - len(fixed_bits)
    idx = np.arange(1 << free, dtype=np.intp)
    for bit in sorted(fixed_bits):
        low = idx & ((1 << bit) - 1)
        idx = ((idx >> bit) << (bit + 1)) | low
    return idx


def b1_indices(targets) -> np.ndarray:
    """The 2^m inner offsets, ordered so element i equals s(bin(i)).

    Bit j of the counter maps to qubit ``targets[j]``.
    """
    m = len(targets)
    counter = np.arange(1 << m, dtype=np.intp)
    out = np.zeros(1 << m, dtype=np.intp)
    for j, t in enumerate(targets):
        out |= ((counter >> j) & 1) << t
    return out


def control_offset(controls) -> int:
    return sum(1 << q for q, v in controls if v)


def _chunks(length: int, workers: int):
    step = -(-length // workers)
    return [(lo, min(lo + step, length)) for lo in range(0, length, step)]


def _run_chunked(work, length: int, num_qubits: int) -> None:
    if not config.parallel_enabled(num_qubits) or length < 2:
        work(0, length)
        return
    workers = min(config.get_num_threads(), length)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(lambda c: work(*c), _chunks(length, workers)))


def _coset_indices(num_qubits: int, targets, controls):
    fixed = list(targets) + [q for q, _ in controls]
    base = b0_indices(num_qubits, fixed) + control_offset(controls)
    return base, b1_indices(targets)


def apply_dense(amps: np.ndarray, num_qubits: int, targets, matrix: np.ndarray,
                controls=()) -> None:
    """Apply a 2^m x 2^m gate matrix to the target qubits in place."""
    m = len(targets)
    if matrix.shape != (1 << m, 1 << m):
        raise ValueError(
            f"gate matrix shape {matrix.shape} does not match {m} target qubits")
    if m == 0:
        if controls:
            base, _ = _coset_indices(num_qubits, targets, controls)
            amps[base] *= matrix[0, 0]
        else:
            amps *= matrix[0, 0]
        return
    if m == 1 and not controls:
        _apply_dense_1q(amps, num_qubits, targets[0], matrix)
        return
    base, offs = _coset_indices(num_qubits, targets, controls)
    if m <= 2:
        _apply_dense_small(amps, num_qubits, base, offs, matrix)
        return
    mat_t = np.ascontiguousarray(matrix.T)

    def work(lo, hi):
        rows = base[lo:hi, None] + offs[None, :]
        amps[rows] = amps[rows] @ mat_t

    _run_chunked(work, len(base), num_qubits)


def _apply_dense_1q(amps, num_qubits, target, matrix) -> None:
    # Contiguous reshape path: axis 1 is the target bit.
    low = 1 << target
    view = amps.reshape(-1, 2, low)
    k00, k01 = matrix[0, 0], matrix[0, 1]
    k10, k11 = matrix[1, 0], matrix[1, 1]

    def work(lo, hi):
        a = view[lo:hi, 0, :]
        b = view[lo:hi, 1, :]
        new_a = k00 * a + k01 * b
        view[lo:hi, 1, :] = k10 * a + k11 * b
        view[lo:hi, 0, :] = new_a

    _run_chunked(work, view.shape[0], num_qubits)


def _apply_dense_small(amps, num_qubits, base, offs, matrix) -> None:
    # Unrolled gather for m <= 2 (with or without controls).
    dim = len(offs)

    def work(lo, hi):
        cols = [amps[base[lo:hi] + off] for off in offs]
        for z in range(dim):
            acc = matrix[z, 0] * cols[0]
            for w in range(1, dim):
                acc += matrix[z, w] * cols[w]
            amps[base[lo:hi] + offs[z]] = acc

    _run_chunked(work, len(base), num_qubits)


def apply_sparse(amps, num_qubits, targets, matrix: sp.spmatrix, controls=()) -> None:
    m = len(targets)
    if matrix.shape != (1 << m, 1 << m):
        raise ValueError("sparse matrix shape does not match target count")
    base, offs = _coset_indices(num_qubits, targets, controls)
    mat_t = sp.csr_matrix(matrix.T)

    def work(lo, hi):
        rows = base[lo:hi, None] + offs[None, :]
        amps[rows] = amps[rows] @ mat_t

    _run_chunked(work, len(base), num_qubits)


def apply_diagonal(amps, num_qubits, targets, diag: np.ndarray, controls=()) -> None:
    m = len(targets)
    if diag.shape != (1 << m,):
        raise ValueError("diagonal length does not match target count")
    if not controls:
        # O(2^n) independent of m: factor per target bit.
        idx = np.arange(amps.size, dtype=np.intp)
        sub = np.zeros(amps.size, dtype=np.intp)
        for j, t in enumerate(targets):
            sub |= ((idx >> t) & 1) << j

        def work(lo, hi):
            amps[lo:hi] *= diag[sub[lo:hi]]

        _run_chunked(work, amps.size, num_qubits)
        return
    base, offs = _coset_indices(num_qubits, targets, controls)
    for z in range(1 << m):
        amps[base + offs[z]] *= diag[z]


def apply_permutation(amps, num_qubits, targets, table: np.ndarray, controls=()) -> None:
    base, offs = _coset_indices(num_qubits, targets, controls)
    src = offs
    dst = offs[table]

    def work(lo, hi):
        gathered = amps[base[lo:hi, None] + src[None, :]]
        amps[base[lo:hi, None] + dst[None, :]] = gathered

    _run_chunked(work, len(base), num_qubits)


def _pauli_masks(targets, pauli_ids):
    x_mask = 0
    zy_mask = 0
    n_y = 0
    for t, pid in zip(targets, pauli_ids):
        if pid in (1, 2):
            x_mask |= 1 << t
        if pid in (2, 3):
            zy_mask |= 1 << t
        if pid == 2:
            n_y += 1
    return x_mask, zy_mask, n_y


def pauli_action(amps, num_qubits, targets, pauli_ids) -> np.ndarray:
    """Return P|psi> as a new array; O(2^n) regardless of m."""
    x_mask, zy_mask, n_y = _pauli_masks(targets, pauli_ids)
    idx = np.arange(amps.size, dtype=np.intp)
    src = idx ^ x_mask
    out = amps[src].copy() if x_mask else amps.copy()
    if zy_mask:
        parity = np.bitwise_count(src & zy_mask) & 1
        out[parity == 1] *= -1
    if n_y % 4:
        out *= 1j ** (n_y % 4)
    return out


def apply_pauli(amps, num_qubits, targets, pauli_ids, controls=()) -> None:
    if controls:
        apply_dense(amps, num_qubits, targets, pauli_matrix(pauli_ids), controls)
        return
    amps[:] = pauli_action(amps, num_qubits, targets, pauli_ids)


def apply_pauli_rotation(amps, num_qubits, targets, pauli_ids, angle: float,
                         controls=()) -> None:
    """Apply exp(i*angle*P/2) = cos(angle/2) I + i sin(angle/2) P."""
    c = np.cos(angle / 2)
    s = np.sin(angle / 2)
    if controls:
        mat = c * np.eye(1 << len(targets), dtype=np.complex128) \
            + 1j * s * pauli_matrix(pauli_ids)
        apply_dense(amps, num_qubits, targets, mat, controls)
        return
    rotated = pauli_action(amps, num_qubits, targets, pauli_ids)
    amps *= c
    amps += 1j * s * rotated


def pauli_matrix(pauli_ids) -> np.ndarray:
    """Dense matrix of a Pauli product; bit j of the index is factor j."""
    mat = np.ones((1, 1), dtype=np.complex128)
    for pid in pauli_ids:
        mat = np.kron(_PAULI_1Q[pid], mat)
    return mat


def full_space_matrix(num_qubits: int, targets, matrix: np.ndarray,
                      controls=()) -> sp.csr_matrix:
    """Embed a gate matrix (plus controls) into the full 2^n space."""
    dim = 1 << num_qubits
    base, offs = _coset_indices(num_qubits, targets, controls)
    m = len(targets)
    rows, cols, vals = [], [], []
    for z in range(1 << m):
        for w in range(1 << m):
            if matrix[z, w] != 0:
                rows.append(base + offs[z])
                cols.append(base + offs[w])
                vals.append(np.full(len(base), matrix[z, w]))
    touched = np.zeros(dim, dtype=bool)
    touched[(base[:, None] + offs[None, :]).ravel()] = True
    untouched = np.nonzero(~touched)[0]
    if len(untouched):
        rows.append(untouched)
        cols.append(untouched)
        vals.append(np.ones(len(untouched), dtype=np.complex128))
    full = sp.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(dim, dim), dtype=np.complex128)
    return full.tocsr()
