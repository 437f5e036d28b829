//! Small dense helpers for one- and two-qubit operators.

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// `σ⁰ = 1, σ¹ = X, σ² = Y, σ³ = Z`.
pub fn pauli(index: usize) -> Mat2 {
    match index {
        0 => Mat2::new(ONE, ZERO, ZERO, ONE),
        1 => Mat2::new(ZERO, ONE, ONE, ZERO),
        2 => Mat2::new(ZERO, -I, I, ZERO),
        3 => Mat2::new(ONE, ZERO, ZERO, -ONE),
        _ => panic!("pauli index {index} out of range"),
    }
}

/// Kronecker product of two 2×2 matrices, first factor on the high bit.
pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}

/// Trace over the second qubit.
pub fn trace_second(m: &Mat4) -> Mat2 {
    Mat2::from_fn(|r, c| m[(2 * r, 2 * c)] + m[(2 * r + 1, 2 * c + 1)])
}

/// Trace over the first qubit.
pub fn trace_first(m: &Mat4) -> Mat2 {
    Mat2::from_fn(|r, c| m[(r, c)] + m[(r + 2, c + 2)])
}

/// Ascending eigenvalues of a Hermitian 4×4 matrix.
pub fn hermitian_eigenvalues4(m: &Mat4) -> [f64; 4] {
    let eig = m.symmetric_eigen();
    let mut w = [eig.eigenvalues[0], eig.eigenvalues[1], eig.eigenvalues[2], eig.eigenvalues[3]];
    w.sort_by(f64::total_cmp);
    w
}

/// Eigenvalues of a Hermitian 2×2 matrix, ascending, in closed form.
pub fn hermitian_eigenvalues2(m: &Mat2) -> [f64; 2] {
    let mean = 0.5 * (m[(0, 0)].re + m[(1, 1)].re);
    let half_gap = 0.5 * (m[(0, 0)].re - m[(1, 1)].re);
    let radius = half_gap.hypot(m[(0, 1)].norm());
    [mean - radius, mean + radius]
}

/// Largest entrywise deviation from Hermiticity.
pub fn hermiticity_defect(m: &Mat4) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff4(a: &Mat4, b: &Mat4) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff2(a: &Mat2, b: &Mat2) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let x = pauli(1);
        let y = pauli(2);
        let z = pauli(3);
        assert!(max_abs_diff2(&(x * y), &(z * I)) < 1e-15);
        for k in 0..4 {
            assert!(max_abs_diff2(&(pauli(k) * pauli(k)), &pauli(0)) < 1e-15);
        }
    }

    #[test]
    fn partial_traces_of_product() {
        let a = Mat2::new(C64::new(0.7, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.3, 0.0));
        let b = Mat2::new(C64::new(0.4, 0.0), C64::new(0.0, -0.3), C64::new(0.0, 0.3), C64::new(0.6, 0.0));
        let ab = kron(&a, &b);
        assert!(max_abs_diff2(&trace_second(&ab), &a) < 1e-15);
        assert!(max_abs_diff2(&trace_first(&ab), &b) < 1e-15);
    }

    #[test]
    fn eigenvalue_routes_agree_on_a_block() {
        let a = Mat2::new(C64::new(0.7, 0.0), C64::new(0.1, 0.2), C64::new(0.1, -0.2), C64::new(0.3, 0.0));
        let w2 = hermitian_eigenvalues2(&a);
        let w4 = hermitian_eigenvalues4(&kron(&pauli(0), &a));
        for (k, w) in w4.iter().enumerate() {
            assert!((w - w2[k / 2]).abs() < 1e-14);
        }
    }
}
