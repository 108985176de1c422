"""Numerical laboratory for mixing, quantum Zeno and strong-damping limits
of truncated bosonic systems, built on dense superoperator arithmetic."""

from .linalg import (
    SpectralData,
    adjoint,
    devectorize,
    herm_eig,
    kron,
    matmul,
    matrix_exp,
    singular_values,
    trace_norm,
    vectorize,
)
from .fock import (
    CoherentVector,
    annihilation,
    check_density_matrix,
    coherent_vector,
    number_operator,
    particle_number,
    trace_distance,
    vacuum_state,
)
from .channels import (
    Dephasing,
    ExplicitSuperoperator,
    HamiltonianCommutator,
    KrausChannel,
    Superoperator,
    apply,
    attenuator_generator,
    attenuator_kraus,
    attenuator_mixing_bound,
    cesaro_mean,
    choi_matrix,
    identity_superoperator,
    is_completely_positive,
    mixing_speed_empirical,
    positive_part_decomposition,
    to_superoperator,
    transpose_superoperator,
    vacuum_projection_superop,
)
from .binomial import (
    MatrixPolynomial,
    binomial_product,
    expansion_term_enumerated,
    expansion_terms,
    expansion_terms_applied,
    poly_mul_truncated,
    restricted_count,
    restricted_count_enumerated,
    restricted_difference_bound_check,
    simplex_count,
    simplex_count_enumerated,
    simplex_ratio_bound_check,
    workhorse_limit_check,
)
from .zeno import (
    ConvergenceRecord,
    DampingConfig,
    FitResult,
    ZenoConfig,
    attenuator_speed_bound,
    chain_states,
    constant_big_n,
    damped_evolution,
    damping_error,
    effective_dynamics,
    fit_log_envelope,
    fit_rate,
    one_one_norm_probe,
    theoretical_zeno_bound_ssup,
    zeno_error,
    zeno_product,
    zeno_product_iterated,
)

__version__ = "0.1.0"
