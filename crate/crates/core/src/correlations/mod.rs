//! Entropic and entanglement measures for the two qubit mappings.
//!
//! All entropies are in bits. Discord is always measured on the first qubit:
//! `D = S(ρ₁) + S̃_min − S(ρ₁₂)`, where `S̃` is the measurement-averaged
//! entropy of the second qubit after a projective measurement of the first.

mod concurrence;
mod conditional;
mod discord;
mod entropy;

pub use concurrence::{concurrence_pure, concurrence_pure_closed, concurrence_x, eof_from_concurrence, wootters_concurrence};
pub use conditional::{
    conditional_entropy, conditional_entropy_bloch, minimize_conditional_entropy, BruteForceOptions,
    MeasurementBasis,
};
pub use discord::{
    concurrence_rho12_closed, discord_brute_force, discord_mixed_closed, discord_pure, discord_pure_closed,
    koashi_winter_min, marginal_eigenvalue, mutual_information, rho12_eigenvalues, rho23_concurrence_sq,
    werner_discord, CorrelationReport,
};
pub use entropy::{binary_entropy, entropy_of_spectrum, qubit_entropy, von_neumann_entropy};
