import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import qsimcore as q

from oracles import random_state


class TestInitialization:
    def test_zero_state(self):
        assert np.array_equal(q.StateVector(1).get_vector(), [1, 0])
        assert np.array_equal(q.StateVector(2).get_vector(), [1, 0, 0, 0])

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValueError):
            q.StateVector(0)

    def test_set_computational_basis(self):
        state = q.StateVector(2)
        state.set_computational_basis(2)
        assert np.array_equal(state.get_vector(), [0, 0, 1, 0])
        state3 = q.StateVector(3)
        state3.set_computational_basis(5)
        state3.set_computational_basis(0)
        assert state3.get_vector()[0] == 1

    def test_basis_index_out_of_range(self):
        with pytest.raises(ValueError):
            q.StateVector(2).set_computational_basis(4)

    def test_haar_random_normalized_and_deterministic(self):
        a = q.StateVector(4)
        a.set_haar_random(7)
        assert a.get_squared_norm() == pytest.approx(1.0, abs=1e-12)
        b = q.StateVector(4)
        b.set_haar_random(7)
        assert np.array_equal(a.get_vector(), b.get_vector())

    def test_haar_random_states_nearly_orthogonal(self):
        a = q.StateVector(10)
        a.set_haar_random(1)
        b = q.StateVector(10)
        b.set_haar_random(2)
        assert abs(q.inner_product(a, b)) ** 2 < 0.5


class TestCopyLoad:
    def test_copy_is_deep(self):
        state = q.StateVector(2)
        state.set_computational_basis(3)
        dup = state.copy()
        dup.multiply_coef(0.0)
        assert state.get_vector()[3] == 1

    def test_load_list_roundtrip(self):
        state = q.StateVector(2)
        state.load([0.5, 0.5, 0.5, -0.5])
        assert np.array_equal(state.get_vector(), [0.5, 0.5, 0.5, -0.5])

    def test_load_state_object(self):
        src = q.StateVector(2)
        src.set_computational_basis(1)
        dst = q.StateVector(2)
        dst.load(src)
        src.multiply_coef(2.0)
        assert dst.get_vector()[1] == 1

    def test_load_wrong_length(self):
        with pytest.raises(ValueError):
            q.StateVector(2).load([1, 0, 0])


class TestAnalysis:
    def test_inner_product_self(self):
        state = q.StateVector(3)
        state.set_haar_random(0)
        assert q.inner_product(state, state) == pytest.approx(1.0, abs=1e-12)

    def test_inner_product_orthogonal_basis(self):
        a = q.StateVector(2)
        b = q.StateVector(2)
        b.set_computational_basis(1)
        assert q.inner_product(a, b) == 0

    def test_inner_product_matches_summation(self):
        rng = np.random.default_rng(11)
        bra_amps = random_state(4, rng)
        ket_amps = random_state(4, rng)
        bra, ket = q.StateVector(4), q.StateVector(4)
        bra.load(bra_amps)
        ket.load(ket_amps)
        expected = sum(bra_amps[i].conjugate() * ket_amps[i] for i in range(16))
        assert q.inner_product(bra, ket) == pytest.approx(expected, abs=1e-12)

    def test_inner_product_size_mismatch(self):
        with pytest.raises(ValueError):
            q.inner_product(q.StateVector(2), q.StateVector(3))

    def test_squared_norm_scaling(self):
        state = q.StateVector(2)
        state.multiply_coef(2.0)
        assert state.get_squared_norm() == pytest.approx(4.0)
        state.normalize(state.get_squared_norm())
        assert state.get_squared_norm() == pytest.approx(1.0, abs=1e-12)

    def test_normalize_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            q.StateVector(1).normalize(0.0)

    def test_marginal_probability_basics(self):
        state = q.StateVector(2)
        assert state.get_marginal_probability([0, 0]) == 1.0
        state.set_haar_random(3)
        total = state.get_marginal_probability([q.WILDCARD, q.WILDCARD])
        assert total == pytest.approx(state.get_squared_norm(), abs=1e-12)

    def test_marginal_probability_brute_force(self):
        state = q.StateVector(3)
        state.set_haar_random(5)
        amps = state.get_vector()
        expected = sum(abs(amps[(x1 << 1) | 1]) ** 2 for x1 in (0, 1))
        assert state.get_marginal_probability([1, q.WILDCARD, 0]) == \
            pytest.approx(expected, abs=1e-12)

    def test_marginal_probability_errors(self):
        state = q.StateVector(2)
        with pytest.raises(ValueError):
            state.get_marginal_probability([0])
        with pytest.raises(ValueError):
            state.get_marginal_probability([0, 3])


class TestSampling:
    def test_deterministic_distribution(self):
        state = q.StateVector(2)
        state.set_computational_basis(2)
        assert state.sampling(100, seed=0) == [2] * 100

    def test_uniform_frequencies(self):
        state = q.StateVector(1)
        q.H(0).apply(state)
        samples = state.sampling(10_000, seed=42)
        freq = samples.count(0) / len(samples)
        assert 0.485 <= freq <= 0.515

    def test_seed_reproducibility_and_empty(self):
        state = q.StateVector(3)
        state.set_haar_random(1)
        assert state.sampling(50, seed=9) == state.sampling(50, seed=9)
        assert state.sampling(0) == []


class TestNonPhysicalUpdates:
    def test_multiply_coef_identity(self):
        state = q.StateVector(2)
        state.set_haar_random(0)
        before = state.get_vector()
        state.multiply_coef(1.0)
        assert np.array_equal(state.get_vector(), before)

    def test_add_state(self):
        a = q.StateVector(2)
        b = q.StateVector(2)
        b.set_computational_basis(1)
        a.add_state(b)
        assert np.array_equal(a.get_vector(), [1, 1, 0, 0])
        with pytest.raises(ValueError):
            a.add_state(q.StateVector(3))

    def test_multiply_elementwise_function(self):
        state = q.StateVector(1)
        q.H(0).apply(state)
        state.multiply_elementwise_function(lambda x: (-1) ** x)
        expected = np.array([1, -1]) / np.sqrt(2)
        np.testing.assert_allclose(state.get_vector(), expected, atol=1e-12)


class TestReshaping:
    def test_tensor_product_low_placement(self):
        one = q.StateVector(1)
        one.set_computational_basis(1)
        zero = q.StateVector(1)
        combined = q.tensor_product(one, zero)
        assert combined.num_qubits == 2
        assert combined.get_vector()[1] == 1

    def test_permutate_qubit(self):
        state = q.StateVector(2)
        state.set_computational_basis(1)  # |01>
        swapped = q.permutate_qubit(state, [1, 0])
        assert swapped.get_vector()[2] == 1  # |10>
        with pytest.raises(ValueError):
            q.permutate_qubit(state, [0, 0])

    def test_drop_qubit_norm_equals_marginal(self):
        state = q.StateVector(3)
        state.set_haar_random(8)
        reduced = q.drop_qubit(state, [1, 2], [0, 0])
        assert reduced.num_qubits == 1
        marginal = state.get_marginal_probability([q.WILDCARD, 0, 0])
        assert reduced.get_squared_norm() == pytest.approx(marginal, abs=1e-12)

    def test_drop_qubit_errors(self):
        state = q.StateVector(2)
        with pytest.raises(ValueError):
            q.drop_qubit(state, [0, 0], [0, 0])
        with pytest.raises(ValueError):
            q.drop_qubit(state, [0], [2])


class TestClassicalRegisters:
    def test_default_zero(self):
        assert q.StateVector(1).get_classical_value(5) == 0

    def test_set_get(self):
        state = q.StateVector(1)
        state.set_classical_value(0, 7)
        assert state.get_classical_value(0) == 7

    def test_toggle_roundtrip(self):
        state = q.StateVector(1)
        state.set_classical_value(0, 1)
        value = state.get_classical_value(0)
        state.set_classical_value(0, 1 - value)
        assert state.get_classical_value(0) == 0

    def test_negative_address(self):
        with pytest.raises(ValueError):
            q.StateVector(1).get_classical_value(-1)


class TestDensityMatrix:
    def test_from_pure_zero(self):
        rho = q.density_from_pure(q.StateVector(1))
        assert np.array_equal(rho.elements, [[1, 0], [0, 0]])

    def test_trace_one(self):
        state = q.StateVector(3)
        state.set_haar_random(2)
        rho = q.density_from_pure(state)
        assert rho.get_trace() == pytest.approx(1.0, abs=1e-12)

    def test_plus_state(self):
        state = q.StateVector(1)
        q.H(0).apply(state)
        rho = q.density_from_pure(state)
        np.testing.assert_allclose(rho.elements, np.full((2, 2), 0.5), atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(1, 5), seed=st.integers(0, 1000))
def test_all_wildcard_marginal_equals_norm(n, seed):
    state = q.StateVector(n)
    state.set_haar_random(seed)
    state.multiply_coef(1.7)
    marginal = state.get_marginal_probability([q.WILDCARD] * n)
    assert marginal == pytest.approx(state.get_squared_norm(), abs=1e-12)
