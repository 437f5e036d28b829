use crate::error::{domain, Result};
use crate::linalg::{self, Mat2};
use crate::states::{TwoQubitState, PSD_TOL};

const RANGE_SLACK: f64 = 1e-12;

/// `−x log₂ x`, zero at the origin.
pub(crate) fn h(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// Binary entropy with the argument clamped into `[0, 1]`.
pub(crate) fn h2(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    h(x) + h(1.0 - x)
}

/// `H(x) = −x log₂ x − (1−x) log₂(1−x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-RANGE_SLACK..=1.0 + RANGE_SLACK).contains(&x) {
        return domain(format!("binary entropy argument must lie in [0, 1], got {x}"));
    }
    Ok(h2(x))
}

/// `−Σ λ log₂ λ`, treating eigenvalues within `PSD_TOL` of zero as zero.
pub fn entropy_of_spectrum(eigenvalues: &[f64]) -> Result<f64> {
    if let Some(bad) = eigenvalues.iter().find(|&&w| w < -PSD_TOL) {
        return domain(format!("density has negative eigenvalue {bad:e}"));
    }
    Ok(eigenvalues.iter().map(|&w| h(w)).sum())
}

/// Von Neumann entropy of a two-qubit state.
///
/// X states are split into their `{|00⟩,|11⟩}` and `{|01⟩,|10⟩}` blocks and
/// diagonalized in closed form; anything else goes through the general
/// Hermitian eigensolver.
pub fn von_neumann_entropy(state: &TwoQubitState) -> Result<f64> {
    if state.is_x_state(0.0) {
        let m = state.matrix();
        let outer = Mat2::new(m[(0, 0)], m[(0, 3)], m[(3, 0)], m[(3, 3)]);
        let inner = Mat2::new(m[(1, 1)], m[(1, 2)], m[(2, 1)], m[(2, 2)]);
        let [a, b] = linalg::hermitian_eigenvalues2(&outer);
        let [c, d] = linalg::hermitian_eigenvalues2(&inner);
        entropy_of_spectrum(&[a, b, c, d])
    } else {
        entropy_of_spectrum(&state.eigenvalues())
    }
}

pub fn qubit_entropy(rho: &Mat2) -> Result<f64> {
    entropy_of_spectrum(&linalg::hermitian_eigenvalues2(rho))
}
