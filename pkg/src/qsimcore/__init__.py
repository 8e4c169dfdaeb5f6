"""qsimcore: state-vector and density-matrix quantum circuit simulator.

Fast Schrodinger-method simulation with specialized gate kernels, general
quantum maps, Pauli-sum observables, gate-fusion circuit optimization, and a
benchmark CLI.
"""

from .circuit import Circuit, ParametricCircuit
from .gates import (
    CNOT, CZ, FREDKIN, H, P0, P1, RX, RY, RZ, S, SWAP, Sdag, T, TOFFOLI, Tdag,
    U1, U2, U3, X, Y, Z,
    BasicGate, DenseGate, DiagonalGate, Identity, ParametricPauliRotation,
    ParametricRX, ParametricRY, ParametricRZ, PauliGate, PauliRotationGate,
    PermutationGate, QuantumGate, RandomUnitary, SparseGate,
    index_decomposition, merge, sqrtX, sqrtXdag, sqrtY, sqrtYdag,
)
from .maps import (
    AdaptiveGate, AmplitudeDampingNoise, BitFlipNoise, CptpMap, DephasingNoise,
    DepolarizingNoise, Instrument, Measurement, ProbabilisticMap,
    TwoQubitDepolarizingNoise,
)
from .observable import (
    GeneralOperator, Observable, PauliProduct, add_observable_rotation,
    parse_openfermion_text, parse_pauli_string,
)
from .optimizer import commutation_check, merge_all, optimize_heavy, optimize_light
from .serialize import (
    CircuitFormatError, circuit_from_dict, circuit_to_dict, dump_circuit,
    gate_from_dict, gate_to_dict, load_circuit,
)
from .state import (
    WILDCARD, DensityMatrix, StateVector, density_from_pure, drop_qubit,
    inner_product, permutate_qubit, tensor_product,
)

__version__ = "0.1.0"
