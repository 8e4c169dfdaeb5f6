"""Independent reference implementations used to check the kernels.

These deliberately avoid the library's B0/B1 coset machinery: gates are
embedded into the full 2^n space by tensoring with identities and conjugating
with an explicit qubit-reordering permutation matrix.
"""

import numpy as np

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def qubit_reorder_matrix(n, order):
    """Permutation matrix mapping |x> to the index whose bit j is x[order[j]]."""
    dim = 1 << n
    mat = np.zeros((dim, dim), dtype=complex)
    for x in range(dim):
        packed = 0
        for j, q in enumerate(order):
            packed |= ((x >> q) & 1) << j
        mat[packed, x] = 1.0
    return mat


def controlled_matrix(kmat, num_targets, controls_values):
    """Expand a target-space matrix with controls appended as high bits."""
    m = num_targets
    mc = len(controls_values)
    dim = 1 << (m + mc)
    out = np.eye(dim, dtype=complex)
    want = sum(v << j for j, v in enumerate(controls_values))
    for z in range(1 << m):
        for w in range(1 << m):
            row = z | (want << m)
            col = w | (want << m)
            out[row, col] = kmat[z, w]
    return out


def full_matrix(n, targets, kmat, controls=()):
    """Full-space 2^n x 2^n matrix of a (possibly controlled) gate."""
    targets = list(targets)
    control_qubits = [q for q, _ in controls]
    control_values = [v for _, v in controls]
    kmat = controlled_matrix(np.asarray(kmat, dtype=complex), len(targets),
                             control_values)
    acting = targets + control_qubits
    rest = [q for q in range(n) if q not in acting]
    order = acting + rest
    perm = qubit_reorder_matrix(n, order)
    embedded = np.kron(np.eye(1 << len(rest), dtype=complex), kmat)
    return perm.T @ embedded @ perm


def apply_full(n, targets, kmat, amps, controls=()):
    return full_matrix(n, targets, kmat, controls) @ amps


def pauli_product_matrix(n, ops):
    """Full-space matrix of a Pauli product given (qubit, axis id) pairs."""
    mat = np.eye(1, dtype=complex)
    table = {q: a for q, a in ops}
    for q in range(n):
        mat = np.kron(PAULI[table.get(q, 0)], mat)
    return mat


def observable_matrix(n, terms):
    """Dense matrix of a Pauli sum; terms are (coefficient, ops) pairs."""
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for coef, ops in terms:
        out += coef * pauli_product_matrix(n, ops)
    return out


def random_state(n, rng):
    raw = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return raw / np.linalg.norm(raw)


def random_unitary(dim, rng):
    raw = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(raw)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_kraus_set(dim, count, rng):
    """Kraus operators from a Haar-random isometry: complete by construction."""
    iso = random_unitary(dim * count, rng)[:, :dim]
    return [iso[i * dim:(i + 1) * dim, :] for i in range(count)]


def superoperator(kraus_list):
    """Row-major vectorized channel matrix: vec(K rho K^dag) terms summed."""
    dim = kraus_list[0].shape[0]
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    for k in kraus_list:
        out += np.kron(k, k.conj())
    return out


def apply_channel_vec(kraus_list, rho):
    dim = rho.shape[0]
    return (superoperator(kraus_list) @ rho.reshape(-1)).reshape(dim, dim)
