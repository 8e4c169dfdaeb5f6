"""State-level utilities: inner products and qubit-list reshaping."""

from __future__ import annotations

import qsimcore as _core

from ._handles import unwrap, wrap_state

__all__ = ["inner_product", "tensor_product", "permutate_qubit", "drop_qubit"]


def inner_product(state_bra, state_ket) -> complex:
    return _core.inner_product(unwrap(state_bra), unwrap(state_ket))


def tensor_product(state_first, state_second):
    return wrap_state(_core.tensor_product(unwrap(state_first),
                                           unwrap(state_second)))


def permutate_qubit(state, qubit_order):
    return wrap_state(_core.permutate_qubit(unwrap(state), qubit_order))


def drop_qubit(state, target_list, projection_values):
    return wrap_state(_core.drop_qubit(unwrap(state), target_list,
                                       projection_values))
