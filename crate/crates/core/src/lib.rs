//! Pairwise quantum correlations of balanced superpositions of multipartite
//! coherent states.
//!
//! The superposition `N(|z⟩^⊗n + e^{imπ}|−z⟩^⊗n)` depends on the coherent
//! family only through the overlap `p = ⟨z|−z⟩`. This crate builds that
//! overlap for Glauber, SU(2) and SU(1,1) coherent states ([`coherent`]),
//! maps the superposition onto two logical qubits in two ways ([`states`]),
//! evaluates mutual information, concurrence, entanglement of formation and
//! quantum discord in closed form and by brute-force measurement
//! optimization ([`correlations`]), and evolves the two-mode reduction
//! through a local dephasing channel ([`dynamics`]).

pub mod coherent;
pub mod correlations;
pub mod dynamics;
pub mod error;
pub mod linalg;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod states;

pub use coherent::{AlgebraKind, AlgebraSpec, CoherentFamily, FamilyRegistry, OverlapP};
pub use correlations::{
    binary_entropy, concurrence_pure, concurrence_x, conditional_entropy, discord_brute_force,
    discord_mixed_closed, discord_pure, koashi_winter_min, mutual_information,
    von_neumann_entropy, werner_discord, wootters_concurrence, BruteForceOptions,
    CorrelationReport, MeasurementBasis,
};
pub use dynamics::{
    apply_dephasing, concurrence_t, discord_t, sudden_death_time, DephasingChannel,
};
pub use error::{Error, Result};
pub use states::{
    bloch_matrix, normalization, pure_bipartition, pure_bipartition_werner_limit, reduced_rho12,
    werner_limit_state, BlochMatrix, Parity, PureBipartition, SuperpositionSpec, TwoQubitState,
};
