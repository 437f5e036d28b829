use super::entropy::h2;
use crate::linalg::{self, Mat4, C64};
use crate::states::{PureBipartition, SuperpositionSpec, TwoQubitState};

/// `2|C₀₀C₁₁ − C₁₀C₀₁|` for a pure two-qubit state.
pub fn concurrence_pure(bp: &PureBipartition) -> f64 {
    2.0 * (bp.c00 * bp.c11 - bp.c10 * bp.c01).abs()
}

/// `√(1−p^{2k}) √(1−p^{2(n−k)}) / (1 + pⁿ cos mπ)`.
pub fn concurrence_pure_closed(spec: &SuperpositionSpec, k: u32) -> f64 {
    let n = spec.n();
    (1.0 - spec.p_pow(2 * k)).sqrt() * (1.0 - spec.p_pow(2 * (n - k))).sqrt() / spec.denominator()
}

/// Concurrence of a two-qubit state.
///
/// For X states this is `2 max{0, |ρ₁₄| − √(ρ₂₂ρ₃₃), |ρ₂₃| − √(ρ₁₁ρ₄₄)}`;
/// other states fall back to [`wootters_concurrence`].
pub fn concurrence_x(state: &TwoQubitState) -> f64 {
    if !state.is_x_state(1e-14) {
        return wootters_concurrence(state);
    }
    let d = |i: usize| state.entry(i, i).re.max(0.0);
    let outer = state.entry(0, 3).norm() - (d(1) * d(2)).sqrt();
    let inner = state.entry(1, 2).norm() - (d(0) * d(3)).sqrt();
    2.0 * outer.max(inner).max(0.0)
}

/// Wootters concurrence from the spectrum of `√ρ ρ̃ √ρ`, with
/// `ρ̃ = (σ²⊗σ²) ρ* (σ²⊗σ²)`.
///
/// The square roots of near-zero eigenvalues limit the absolute accuracy to
/// roughly `1e-8` on rank-deficient inputs.
pub fn wootters_concurrence(state: &TwoQubitState) -> f64 {
    let rho = state.matrix();
    let eig = rho.symmetric_eigen();
    let sqrt_w = eig.eigenvalues.map(|w| C64::new(w.max(0.0).sqrt(), 0.0));
    let v = &eig.eigenvectors;
    let sqrt_rho: Mat4 = v * Mat4::from_diagonal(&sqrt_w) * v.adjoint();
    let yy = linalg::kron(&linalg::pauli(2), &linalg::pauli(2));
    let tilde = yy * rho.map(|z| z.conj()) * yy;
    let m = sqrt_rho * tilde * sqrt_rho;
    let mut lam = linalg::hermitian_eigenvalues4(&(m + m.adjoint()).map(|z| z * 0.5)).map(|w| w.max(0.0).sqrt());
    lam.sort_by(|a, b| b.total_cmp(a));
    (lam[0] - lam[1] - lam[2] - lam[3]).max(0.0)
}

/// `E = H(½ + ½√(1 − C²))`.
pub fn eof_from_concurrence(c: f64) -> f64 {
    h2(0.5 + 0.5 * (1.0 - c * c).max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{pure_bipartition, pure_bipartition_werner_limit, Parity};

    fn bell() -> TwoQubitState {
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        TwoQubitState::pure([h, C64::new(0.0, 0.0), C64::new(0.0, 0.0), h]).unwrap()
    }

    #[test]
    fn extremes() {
        assert!((concurrence_x(&bell()) - 1.0).abs() < 1e-14);
        assert!((wootters_concurrence(&bell()) - 1.0).abs() < 1e-7);
        assert_eq!(concurrence_x(&TwoQubitState::maximally_mixed()), 0.0);
        assert!(wootters_concurrence(&TwoQubitState::maximally_mixed()) < 1e-7);
        assert!((eof_from_concurrence(1.0) - 1.0).abs() < 1e-15);
        assert_eq!(eof_from_concurrence(0.0), 0.0);
    }

    #[test]
    fn pure_concurrence_routes() {
        let spec = SuperpositionSpec::new(0.5, Parity::Even, 3).unwrap();
        let bp = pure_bipartition(&spec, 1).unwrap();
        let expect = 0.745355992499929898803057889577;
        assert!((concurrence_pure(&bp) - expect).abs() < 1e-14);
        assert!((concurrence_pure_closed(&spec, 1) - expect).abs() < 1e-14);

        let ghz = pure_bipartition(&SuperpositionSpec::new(0.0, Parity::Odd, 6).unwrap(), 2).unwrap();
        assert!((concurrence_pure(&ghz) - 1.0).abs() < 1e-15);

        // W limit at k = n/2 is maximally entangled
        let w = pure_bipartition_werner_limit(4, 2).unwrap();
        assert!((concurrence_pure(&w) - 1.0).abs() < 1e-15);
        let w = pure_bipartition_werner_limit(5, 1).unwrap();
        assert!((concurrence_pure(&w) - 2.0 * 4f64.sqrt() / 5.0).abs() < 1e-15);
    }

    #[test]
    fn general_path_agrees_with_x_formula_on_a_product_rotation() {
        // a non-X pure product state has zero concurrence
        let v = [C64::new(0.6, 0.0), C64::new(0.0, 0.8), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        let s = TwoQubitState::pure(v).unwrap();
        assert!(concurrence_x(&s) < 1e-7);
        // partially entangled non-X pure state: C = 2|ad − bc|
        let amps = [0.5, 0.5, 0.1, 0.7];
        let norm = amps.iter().map(|a: &f64| a * a).sum::<f64>().sqrt();
        let v = amps.map(|a| C64::new(a / norm, 0.0));
        let s = TwoQubitState::pure(v).unwrap();
        let expect = 2.0 * (v[0] * v[3] - v[1] * v[2]).norm();
        assert!((concurrence_x(&s) - expect).abs() < 1e-7);
    }
}
