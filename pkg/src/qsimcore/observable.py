"""Pauli-sum operators: parsing, expectation values, Trotterized evolution.

An observable is O = sum_P alpha_P P with real coefficients; the general
operator variant allows complex coefficients.  Expectation values are
evaluated term by term in O(2^n) per term without materializing any dense
operator.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

import numpy as np

from . import kernels
from .circuit import Circuit
from .gates import PauliRotationGate
from .state import StateVector

_AXIS_IDS = {"X": 1, "Y": 2, "Z": 3}
_OPENFERMION_TERM = re.compile(r"\(([^()]+)\)\s*\[([^\[\]]*)\]")


class PauliProduct:
    """A weighted product of single-qubit Paulis on distinct qubits."""

    def __init__(self, ops: Sequence[tuple[int, int]], coefficient: complex = 1.0):
        ops = tuple((int(q), int(a)) for q, a in ops)
        qubits = [q for q, _ in ops]
        if len(set(qubits)) != len(qubits):
            raise ValueError("qubit indices in a Pauli product must be distinct")
        for q, a in ops:
            if q < 0:
                raise ValueError("qubit indices must be non-negative")
            if a not in (1, 2, 3):
                raise ValueError("axis must be 1 (X), 2 (Y) or 3 (Z)")
        self.ops = ops
        self.coefficient = complex(coefficient)

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(q for q, _ in self.ops)

    @property
    def pauli_ids(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.ops)

    def __repr__(self) -> str:
        body = " ".join(f"{'IXYZ'[a]}{q}" for q, a in self.ops) or "I"
        return f"PauliProduct({self.coefficient}, {body})"


def parse_pauli_string(text: str, coefficient: complex = 1.0) -> PauliProduct:
    """Parse "X 0 X 1 Y 2 Z 4"-style text; empty text is the identity term."""
    tokens = text.split()
    if len(tokens) % 2 != 0:
        raise ValueError(f"malformed Pauli string {text!r}")
    ops = []
    for axis, index in zip(tokens[::2], tokens[1::2]):
        if axis.upper() not in _AXIS_IDS:
            raise ValueError(f"unknown Pauli axis {axis!r}")
        if not index.isdigit():
            raise ValueError(f"malformed qubit index {index!r}")
        ops.append((int(index), _AXIS_IDS[axis.upper()]))
    return PauliProduct(ops, coefficient)


class GeneralOperator:
    """Linear combination of Pauli products with complex coefficients."""

    coefficient_dtype = complex

    def __init__(self, num_qubits: int):
        if num_qubits < 1:
            raise ValueError("qubit count must be positive")
        self.num_qubits = int(num_qubits)
        self.terms: list[PauliProduct] = []

    def add_operator(self, term_or_coef, pauli_string: str | None = None) -> None:
        if pauli_string is not None:
            term = parse_pauli_string(pauli_string, term_or_coef)
        else:
            term = term_or_coef
        self._check_term(term)
        self.terms.append(term)

    def _check_term(self, term: PauliProduct) -> None:
        if term.qubits and max(term.qubits) >= self.num_qubits:
            raise ValueError(f"term touches qubit {max(term.qubits)} but the operator "
                             f"has {self.num_qubits} qubits")

    def get_term_count(self) -> int:
        return len(self.terms)

    def get_term(self, index: int) -> PauliProduct:
        return PauliProduct(self.terms[index].ops, self.terms[index].coefficient)

    def _accumulate(self, bra: np.ndarray, ket: np.ndarray, num_qubits: int) -> complex:
        total = 0.0 + 0.0j
        for term in self.terms:
            acted = kernels.pauli_action(ket, num_qubits, term.qubits, term.pauli_ids)
            total += term.coefficient * np.vdot(bra, acted)
        return total

    def get_expectation_value(self, state: StateVector) -> complex:
        if state.num_qubits != self.num_qubits:
            raise ValueError("state and operator qubit counts differ")
        return complex(self._accumulate(state.amplitudes, state.amplitudes,
                                        state.num_qubits))

    def get_transition_amplitude(self, bra: StateVector, ket: StateVector) -> complex:
        if bra.num_qubits != self.num_qubits or ket.num_qubits != self.num_qubits:
            raise ValueError("state and operator qubit counts differ")
        return complex(self._accumulate(bra.amplitudes, ket.amplitudes,
                                        self.num_qubits))


class Observable(GeneralOperator):
    """Self-adjoint Pauli sum: coefficients are real, expectations are real."""

    def _check_term(self, term: PauliProduct) -> None:
        super()._check_term(term)
        if abs(term.coefficient.imag) > 1e-12:
            raise ValueError("observable coefficients must be real")

    def get_expectation_value(self, state: StateVector) -> float:
        value = super().get_expectation_value(state)
        return float(value.real)


def add_observable_rotation(circuit: Circuit, observable: GeneralOperator,
                            angle: float, slices: int) -> None:
    """Append a first-order Trotterization of exp(i*angle*O) to the circuit.

    Each slice appends, for each term (alpha, P) in listed order, the
    rotation exp(i*(alpha*angle/slices)*P); with the exp(i*theta*P/2)
    rotation convention that means theta = 2*alpha*angle/slices.
    """
    if slices < 1:
        raise ValueError("slice count must be >= 1")
    for _ in range(slices):
        for term in observable.terms:
            theta = 2.0 * term.coefficient.real * angle / slices
            circuit.add_gate(PauliRotationGate(term.qubits, term.pauli_ids, theta))


def parse_openfermion_text(text: str) -> GeneralOperator:
    """Load '+'-separated "(coef) [X0 Z1 ...]" entries; "[]" is identity.

    The qubit count is inferred as 1 + the largest index seen (minimum 1).
    """
    matches = list(_OPENFERMION_TERM.finditer(text))
    leftover = _OPENFERMION_TERM.sub("\x00", text).split("\x00")
    separators = leftover[1:-1]
    if leftover[0].strip() or leftover[-1].strip() or not all(
            sep.strip() == "+" for sep in separators):
        raise ValueError("malformed OpenFermion text between terms")
    parsed = []
    max_index = 0
    for match in matches:
        coef_text, body = match.groups()
        try:
            coef = complex(coef_text.replace(" ", ""))
        except ValueError as exc:
            raise ValueError(f"malformed coefficient {coef_text!r}") from exc
        ops = []
        for token in body.split():
            factor = re.fullmatch(r"([XYZxyz])(\d+)", token)
            if not factor:
                raise ValueError(f"malformed Pauli factor {token!r}")
            axis, index = factor.groups()
            ops.append((int(index), _AXIS_IDS[axis.upper()]))
            max_index = max(max_index, int(index))
        parsed.append(PauliProduct(ops, coef))
    if not parsed:
        raise ValueError("no terms found in OpenFermion text")
    operator = GeneralOperator(max_index + 1)
    for term in parsed:
        operator.add_operator(term)
    return operator
