"""Runtime knobs for kernel parallelism.

The basis-index loop of every kernel is data parallel (iterations touch
disjoint amplitudes), so it can be chunked across worker threads.  Threading
only pays off for large states, so dispatch stays serial below a qubit-count
threshold.
"""

from __future__ import annotations

import os

# Parallel dispatch is disabled below this qubit count; empirically chosen.
DEFAULT_PARALLEL_THRESHOLD = 13

_num_threads = int(os.environ.get("QSIM_NUM_THREADS", "1"))
_parallel_threshold = DEFAULT_PARALLEL_THRESHOLD


def get_num_threads() -> int:
    return _num_threads


def set_num_threads(count: int) -> None:
    global _num_threads
    if count < 1:
        raise ValueError("thread count must be >= 1")
    _num_threads = count


def get_parallel_threshold() -> int:
    return _parallel_threshold


def set_parallel_threshold(num_qubits: int) -> None:
    global _parallel_threshold
    if num_qubits < 1:
        raise ValueError("threshold must be >= 1")
    _parallel_threshold = num_qubits


def parallel_enabled(num_qubits: int) -> bool:
    return _num_threads > 1 and num_qubits >= _parallel_threshold
