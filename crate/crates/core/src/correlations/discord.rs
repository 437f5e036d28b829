use std::f64::consts::FRAC_PI_2;

use super::concurrence::{concurrence_pure, concurrence_x, eof_from_concurrence};
use super::conditional::{minimize_conditional_entropy, BruteForceOptions, MeasurementBasis};
use super::entropy::{h2, qubit_entropy, von_neumann_entropy};
use crate::error::{domain, Result};
use crate::states::{PureBipartition, SuperpositionSpec, TwoQubitState};

/// Correlations of one bipartite state. Entropic entries are in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub eof: f64,
    /// Minimal conditional entropy of the second subsystem.
    pub s_cond_min: f64,
    pub argmin: MeasurementBasis,
}

/// Nonzero eigenvalues `(λ₊, λ₋)` of `ρ₁₂`,
/// `λ± = ½ (1 ± p²)(1 ± q cos mπ) / (1 + pⁿ cos mπ)`.
pub fn rho12_eigenvalues(spec: &SuperpositionSpec) -> (f64, f64) {
    let p2 = spec.p() * spec.p();
    let qc = spec.q() * spec.cos_mpi();
    let d = spec.denominator();
    (0.5 * (1.0 + p2) * (1.0 + qc) / d, 0.5 * (1.0 - p2) * (1.0 - qc) / d)
}

/// Larger eigenvalue of either single-mode marginal,
/// `½ (1 + p)(1 + p^{n−1} cos mπ) / (1 + pⁿ cos mπ)`.
pub fn marginal_eigenvalue(spec: &SuperpositionSpec) -> f64 {
    let c = spec.cos_mpi();
    0.5 * (1.0 + spec.p()) * (1.0 + spec.p_pow(spec.n() - 1) * c) / spec.denominator()
}

/// `I(ρ₁₂) = 2 S(ρ₁) − S(ρ₁₂)` in closed form.
pub fn mutual_information(spec: &SuperpositionSpec) -> f64 {
    2.0 * h2(marginal_eigenvalue(spec)) - h2(rho12_eigenvalues(spec).0)
}

/// Squared concurrence of the complementary pair `ρ₂₃` in the purification
/// of `ρ₁₂`: `p²(1 − p²)(1 − p^{2n−4}) / (1 + pⁿ cos mπ)²`.
pub fn rho23_concurrence_sq(spec: &SuperpositionSpec) -> f64 {
    let p2 = spec.p() * spec.p();
    p2 * (1.0 - p2) * (1.0 - spec.p_pow(2 * spec.n() - 4)) / spec.denominator().powi(2)
}

/// Minimal conditional entropy of `ρ₁₂`, equal to the entanglement of
/// formation of `ρ₂₃` (Koashi-Winter).
pub fn koashi_winter_min(spec: &SuperpositionSpec) -> f64 {
    h2(0.5 + 0.5 * (1.0 - rho23_concurrence_sq(spec)).max(0.0).sqrt())
}

/// Concurrence of `ρ₁₂`, `(p^{n−2} − pⁿ) / (1 + pⁿ cos mπ)`.
pub fn concurrence_rho12_closed(spec: &SuperpositionSpec) -> f64 {
    (spec.q() - spec.p_pow(spec.n())) / spec.denominator()
}

/// Closed-form pairwise correlations of `ρ₁₂`. The optimal measurement is
/// along `θ = π/2, φ = 0`.
pub fn discord_mixed_closed(spec: &SuperpositionSpec) -> CorrelationReport {
    let s1 = h2(marginal_eigenvalue(spec));
    let s12 = h2(rho12_eigenvalues(spec).0);
    let s_cond_min = koashi_winter_min(spec);
    let mutual_info = 2.0 * s1 - s12;
    let discord = s1 - s12 + s_cond_min;
    let concurrence = concurrence_rho12_closed(spec);
    CorrelationReport {
        mutual_info,
        classical_corr: mutual_info - discord,
        discord,
        concurrence,
        eof: eof_from_concurrence(concurrence),
        s_cond_min,
        argmin: MeasurementBasis { theta: FRAC_PI_2, phi: 0.0 },
    }
}

/// Correlations of the pure `k | n−k` split. Discord and entanglement of
/// formation coincide with the entropy of either block.
pub fn discord_pure(bp: &PureBipartition) -> CorrelationReport {
    let concurrence = concurrence_pure(bp);
    let entropy = eof_from_concurrence(concurrence);
    CorrelationReport {
        mutual_info: 2.0 * entropy,
        classical_corr: entropy,
        discord: entropy,
        concurrence,
        eof: entropy,
        s_cond_min: 0.0,
        argmin: MeasurementBasis { theta: 0.0, phi: 0.0 },
    }
}

/// `H(½ + ½ (p^k + p^{n−k} cos mπ) / (1 + pⁿ cos mπ))`.
pub fn discord_pure_closed(spec: &SuperpositionSpec, k: u32) -> Result<f64> {
    let n = spec.n();
    if k < 1 || k >= n {
        return domain(format!("bipartition size k must lie in [1, {}], got {k}", n - 1));
    }
    let x = 0.5 + 0.5 * (spec.p_pow(k) + spec.p_pow(n - k) * spec.cos_mpi()) / spec.denominator();
    Ok(h2(x))
}

/// Correlations of an arbitrary two-qubit state with the conditional
/// entropy minimized numerically over projective measurements of the first
/// qubit.
///
/// For rank-two states projective measurements are optimal. For higher rank
/// the discord returned is an upper bound.
pub fn discord_brute_force(state: &TwoQubitState, opts: &BruteForceOptions) -> Result<CorrelationReport> {
    let (s_cond_min, argmin) = minimize_conditional_entropy(state, opts)?;
    let s1 = qubit_entropy(&state.marginal_first())?;
    let s2 = qubit_entropy(&state.marginal_second())?;
    let s12 = von_neumann_entropy(state)?;
    let concurrence = concurrence_x(state);
    Ok(CorrelationReport {
        mutual_info: s1 + s2 - s12,
        classical_corr: s2 - s_cond_min,
        discord: s1 + s_cond_min - s12,
        concurrence,
        eof: eof_from_concurrence(concurrence),
        s_cond_min,
        argmin,
    })
}

/// Pairwise discord of the `n`-mode W state,
/// `H(1 − 1/n) + H(½ + ½√(n² − 4n + 8)/n) − H(1 − 2/n)`.
pub fn werner_discord(n: u32) -> Result<f64> {
    if n < 2 {
        return domain(format!("need at least two modes, got n = {n}"));
    }
    let nf = n as f64;
    Ok(h2(1.0 - 1.0 / nf) + h2(0.5 + 0.5 * (nf * nf - 4.0 * nf + 8.0).sqrt() / nf) - h2(1.0 - 2.0 / nf))
}
