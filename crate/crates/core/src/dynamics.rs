//! Local dephasing of the two-mode reduction and the resulting entanglement
//! sudden death.

use crate::correlations::{discord_brute_force, BruteForceOptions};
use crate::error::{domain, Result};
use crate::linalg::{self, Mat2, Mat4, C64};
use crate::states::{reduced_rho12, SuperpositionSpec, TwoQubitState};

/// A dephasing channel with decay rate `Γ` applied for time `t` on each qubit
/// independently. `γ = 1 − e^{−Γt}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DephasingChannel {
    gamma_rate: f64,
    t: f64,
    gamma: f64,
}

impl DephasingChannel {
    pub fn new(gamma_rate: f64, t: f64) -> Result<Self> {
        if !(gamma_rate >= 0.0) || !gamma_rate.is_finite() {
            return domain(format!("decay rate must be finite and non-negative, got {gamma_rate}"));
        }
        if !(t >= 0.0) {
            return domain(format!("time must be non-negative, got {t}"));
        }
        Ok(Self { gamma_rate, t, gamma: -(-gamma_rate * t).exp_m1() })
    }

    /// Channel with a given dephasing strength, bypassing `(Γ, t)`.
    pub fn with_strength(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return domain(format!("dephasing strength must lie in [0, 1], got {gamma}"));
        }
        let t = if gamma < 1.0 { -(-gamma).ln_1p() } else { f64::INFINITY };
        Ok(Self { gamma_rate: 1.0, t, gamma })
    }

    pub fn gamma_rate(&self) -> f64 {
        self.gamma_rate
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Single-qubit Kraus operators `E₀ = diag(1, √(1−γ))`, `E₁ = diag(0, √γ)`.
    pub fn kraus(&self) -> [Mat2; 2] {
        let re = |x: f64| C64::new(x, 0.0);
        let z = re(0.0);
        [
            Mat2::new(re(1.0), z, z, re((1.0 - self.gamma).sqrt())),
            Mat2::new(z, z, z, re(self.gamma.sqrt())),
        ]
    }

    /// Two-qubit Kraus operators `E_μ ⊗ E_ν`.
    pub fn kraus_pairs(&self) -> Vec<Mat4> {
        let single = self.kraus();
        let mut out = Vec::with_capacity(4);
        for a in &single {
            for b in &single {
                out.push(linalg::kron(a, b));
            }
        }
        out
    }
}

/// `ρ(t) = Σ_{μν} E_{μν} ρ E_{μν}†`.
pub fn apply_dephasing(state: &TwoQubitState, ch: &DephasingChannel) -> TwoQubitState {
    let ops = ch.kraus_pairs();
    debug_assert!({
        let completeness: Mat4 = ops.iter().map(|e| e.adjoint() * e).sum();
        linalg::max_abs_diff4(&completeness, &Mat4::identity()) < 1e-12
    });
    let evolved: Mat4 = ops.iter().map(|e| e * state.matrix() * e.adjoint()).sum();
    TwoQubitState::from_trusted(evolved)
}

/// `C(t) = ½ (1−p²)/(1+pⁿ cos mπ) · [e^{−Γt}(1+p^{n−2}) − (1−p^{n−2})]`,
/// clipped at zero.
pub fn concurrence_t(spec: &SuperpositionSpec, ch: &DephasingChannel) -> f64 {
    let q = spec.q();
    let p2 = spec.p() * spec.p();
    let bracket = (1.0 - ch.gamma()) * (1.0 + q) - (1.0 - q);
    (0.5 * (1.0 - p2) / spec.denominator() * bracket).max(0.0)
}

/// Time at which the concurrence reaches zero,
/// `t₀ = ln[(1 + p^{n−2}) / (1 − p^{n−2})] / Γ`; infinite when `p^{n−2} = 1`.
pub fn sudden_death_time(spec: &SuperpositionSpec, gamma_rate: f64) -> Result<f64> {
    if !(gamma_rate > 0.0) {
        return domain(format!("decay rate must be positive, got {gamma_rate}"));
    }
    let q = spec.q();
    if q >= 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok((q.ln_1p() - (-q).ln_1p()) / gamma_rate)
}

/// Discord of the dephased state by brute-force measurement search.
///
/// The evolved state has rank 4, where projective measurements need not be
/// optimal, so this is an upper bound on the true discord.
pub fn discord_t(spec: &SuperpositionSpec, ch: &DephasingChannel, opts: &BruteForceOptions) -> Result<f64> {
    let evolved = apply_dephasing(&reduced_rho12(spec), ch);
    Ok(discord_brute_force(&evolved, opts)?.discord)
}

/// Uniform sample times: `[0, 3t₀]`, or `[0, 5/Γ]` when `t₀` is zero or
/// infinite.
pub fn time_grid(spec: &SuperpositionSpec, gamma_rate: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return domain(format!("need at least two time steps, got {steps}"));
    }
    let t0 = sudden_death_time(spec, gamma_rate)?;
    let t_max = if t0.is_finite() && t0 > 0.0 { 3.0 * t0 } else { 5.0 / gamma_rate };
    Ok((0..steps).map(|i| t_max * i as f64 / (steps - 1) as f64).collect())
}
