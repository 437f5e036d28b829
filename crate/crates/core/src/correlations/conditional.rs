use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use super::entropy::h2;
use crate::error::{domain, Result};
use crate::states::{bloch_matrix, BlochMatrix, TwoQubitState};

/// Direction `n = (sin θ cos φ, sin θ sin φ, cos θ)` of a projective
/// measurement `{(1 ± n·σ)/2}` on the first qubit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    /// `θ` must lie in `[0, π]`; `φ` is wrapped into `[0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return domain(format!("polar angle must lie in [0, π], got {theta}"));
        }
        if !phi.is_finite() {
            return domain("azimuthal angle must be finite");
        }
        Ok(Self { theta, phi: wrap_phi(phi) })
    }

    pub fn direction(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    /// `⟨σᵢ⟩ₖ = (−1)ᵏ nᵢ` for outcome `k ∈ {0, 1}`.
    pub fn expectations(&self, outcome: usize) -> [f64; 3] {
        let s = if outcome == 0 { 1.0 } else { -1.0 };
        self.direction().map(|x| s * x)
    }
}

fn wrap_phi(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    if w >= TAU {
        0.0
    } else {
        w
    }
}

/// Measurement-averaged entropy of the second qubit after measuring the
/// first along `basis`, from the Pauli correlation matrix.
pub fn conditional_entropy_bloch(r: &BlochMatrix, basis: &MeasurementBasis) -> f64 {
    let local = r.first_local();
    let mut total = 0.0;
    for outcome in 0..2 {
        let e = basis.expectations(outcome);
        let weight_times_two = 1.0 + e[0] * local[0] + e[1] * local[1] + e[2] * local[2];
        let prob = 0.5 * weight_times_two;
        if prob <= 0.0 {
            continue;
        }
        // conditional Bloch vector of qubit 2
        let mut norm_sq = 0.0;
        for beta in 1..4 {
            let b = (r.get(0, beta) + e[0] * r.get(1, beta) + e[1] * r.get(2, beta) + e[2] * r.get(3, beta))
                / weight_times_two;
            norm_sq += b * b;
        }
        let det = (0.25 * (1.0 - norm_sq)).clamp(0.0, 0.25);
        total += prob * h2(0.5 + 0.5 * (1.0 - 4.0 * det).sqrt());
    }
    total
}

pub fn conditional_entropy(state: &TwoQubitState, basis: &MeasurementBasis) -> f64 {
    conditional_entropy_bloch(&bloch_matrix(state), basis)
}

/// Settings for the exhaustive measurement search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BruteForceOptions {
    /// Polar samples on `[0, π]`, endpoints included.
    pub n_theta: usize,
    /// Azimuthal samples on `[0, 2π]`; the duplicate `2π` endpoint is dropped.
    pub n_phi: usize,
    /// Step size at which coordinate-descent refinement stops.
    pub refine_tol: f64,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        Self { n_theta: 181, n_phi: 361, refine_tol: 1e-10 }
    }
}

impl BruteForceOptions {
    pub const MIN_THETA: usize = 64;
    pub const MIN_PHI: usize = 128;

    pub fn validate(&self) -> Result<()> {
        if self.n_theta < Self::MIN_THETA || self.n_phi < Self::MIN_PHI {
            return domain(format!(
                "measurement grid {}x{} is below the {}x{} minimum",
                self.n_theta,
                self.n_phi,
                Self::MIN_THETA,
                Self::MIN_PHI
            ));
        }
        if !(self.refine_tol > 0.0) {
            return domain("refinement tolerance must be positive");
        }
        Ok(())
    }

    pub fn theta_step(&self) -> f64 {
        PI / (self.n_theta - 1) as f64
    }

    pub fn phi_step(&self) -> f64 {
        TAU / (self.n_phi - 1) as f64
    }
}

const MAX_SWEEPS: usize = 200;
const INV_PHI: f64 = 0.618_033_988_749_894_9;
const FLAT_TOL: f64 = 1e-14;

fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Minimize the conditional entropy over projective measurements of the
/// first qubit: exhaustive grid, then coordinate descent with golden-section
/// line searches.
///
/// Grid cells are scanned in parallel; ties resolve to the smallest `(θ, φ)`
/// so the result does not depend on scheduling. A flat azimuth is reported
/// as `φ = 0`.
pub fn minimize_conditional_entropy(state: &TwoQubitState, opts: &BruteForceOptions) -> Result<(f64, MeasurementBasis)> {
    opts.validate()?;
    let r = bloch_matrix(state);
    let f = |theta: f64, phi: f64| conditional_entropy_bloch(&r, &MeasurementBasis { theta, phi });
    let (dt, dp) = (opts.theta_step(), opts.phi_step());

    let (grid_min, i_best, j_best) = (0..opts.n_theta)
        .into_par_iter()
        .map(|i| {
            let theta = i as f64 * dt;
            let mut best = (f64::INFINITY, i, 0usize);
            for j in 0..opts.n_phi - 1 {
                let v = f(theta, j as f64 * dp);
                if v < best.0 {
                    best = (v, i, j);
                }
            }
            best
        })
        .reduce(
            || (f64::INFINITY, usize::MAX, usize::MAX),
            |a, b| {
                let ord = a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2));
                if ord.is_le() {
                    a
                } else {
                    b
                }
            },
        );

    let (mut theta, mut phi, mut best) = (i_best as f64 * dt, j_best as f64 * dp, grid_min);
    for _ in 0..MAX_SWEEPS {
        let (t, vt) = golden_section(|t| f(t, phi), (theta - dt).max(0.0), (theta + dt).min(PI), opts.refine_tol);
        let mut moved_t = 0.0;
        if vt < best {
            moved_t = (t - theta).abs();
            theta = t;
            best = vt;
        }
        let (ph, vp) = golden_section(|ph| f(theta, ph), phi - dp, phi + dp, opts.refine_tol);
        let mut moved_p = 0.0;
        if vp < best {
            moved_p = (ph - phi).abs();
            phi = ph;
            best = vp;
        }
        if moved_t < opts.refine_tol && moved_p < opts.refine_tol {
            break;
        }
    }

    phi = wrap_phi(phi);
    if theta.sin().abs() < 1e-12 || (f(theta, 0.0) - best).abs() <= FLAT_TOL {
        best = best.min(f(theta, 0.0));
        phi = 0.0;
    }
    Ok((best, MeasurementBasis { theta, phi }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;
    use crate::states::{reduced_rho12, Parity, SuperpositionSpec};

    #[test]
    fn basis_expectations_are_unit_vectors() {
        for (t, p) in [(0.0, 0.0), (0.3, 5.0), (PI, 1.0), (1.2, -0.4)] {
            let b = MeasurementBasis::new(t, p).unwrap();
            for k in 0..2 {
                let e = b.expectations(k);
                assert!((e.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-15);
            }
            assert!((0.0..TAU).contains(&b.phi));
        }
        assert!(MeasurementBasis::new(4.0, 0.0).is_err());
    }

    #[test]
    fn product_pure_state_has_zero_conditional_entropy() {
        let v = [C64::new(0.6, 0.0), C64::new(0.0, 0.8), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        let s = TwoQubitState::pure(v).unwrap();
        for (t, p) in [(0.0, 0.0), (1.0, 2.0), (PI / 2.0, 0.3)] {
            assert!(conditional_entropy(&s, &MeasurementBasis::new(t, p).unwrap()) < 1e-9);
        }
    }

    #[test]
    fn equatorial_measurement_beats_the_pole() {
        let rho = reduced_rho12(&SuperpositionSpec::new(0.5, Parity::Even, 4).unwrap());
        let eq = conditional_entropy(&rho, &MeasurementBasis::new(PI / 2.0, 0.0).unwrap());
        let pole = conditional_entropy(&rho, &MeasurementBasis::new(0.0, 0.0).unwrap());
        assert!((eq - 0.244915735937300693514933096541).abs() < 1e-12);
        assert!(pole > eq + 1e-3);
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let (x, v) = golden_section(|x| (x - 0.3) * (x - 0.3) + 1.0, 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn grid_minimum_is_refined() {
        let rho = reduced_rho12(&SuperpositionSpec::new(0.7, Parity::Odd, 5).unwrap());
        let opts = BruteForceOptions { n_theta: 64, n_phi: 128, refine_tol: 1e-11 };
        let (v, arg) = minimize_conditional_entropy(&rho, &opts).unwrap();
        assert!((arg.theta - PI / 2.0).abs() < 1e-5);
        assert_eq!(arg.phi, 0.0);
        let exact = conditional_entropy(&rho, &MeasurementBasis::new(PI / 2.0, 0.0).unwrap());
        assert!((v - exact).abs() < 1e-12);
    }

    #[test]
    fn small_grid_is_rejected() {
        let rho = TwoQubitState::maximally_mixed();
        let opts = BruteForceOptions { n_theta: 10, n_phi: 128, refine_tol: 1e-10 };
        assert!(minimize_conditional_entropy(&rho, &opts).is_err());
    }
}
