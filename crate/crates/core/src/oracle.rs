//! Independent reference computations used by the test suites.
//!
//! Nothing here calls into the closed forms it is meant to check: states are
//! expanded explicitly in the `2ⁿ` logical basis and measurements are applied
//! as projector matrices.

use nalgebra::DMatrix;

use crate::linalg::{self, Mat2, Mat4, C64};
use crate::states::{Parity, TwoQubitState};

/// `|z,m,n⟩` on `n` logical qubits via `|±z⟩ = a|0⟩ ± b|1⟩`, normalized by
/// its own norm. Qubit 1 is the most significant bit.
pub fn logical_expansion(p: f64, parity: Parity, n: u32) -> Vec<f64> {
    let a = ((1.0 + p) / 2.0).sqrt();
    let b = ((1.0 - p) / 2.0).sqrt();
    let sign = match parity {
        Parity::Even => 1.0,
        Parity::Odd => -1.0,
    };
    let dim = 1usize << n;
    let mut psi: Vec<f64> = (0..dim)
        .map(|idx| {
            let ones = idx.count_ones() as i32;
            let zeros = n as i32 - ones;
            let plus = a.powi(zeros) * b.powi(ones);
            let minus = plus * if ones % 2 == 0 { 1.0 } else { -1.0 };
            plus + sign * minus
        })
        .collect();
    let norm = psi.iter().map(|x| x * x).sum::<f64>().sqrt();
    psi.iter_mut().for_each(|x| *x /= norm);
    psi
}

/// Reduced density of the two most significant qubits of a real pure state.
pub fn reduce_to_first_two(psi: &[f64], n: u32) -> Mat4 {
    let rest = 1usize << (n - 2);
    let block = DMatrix::from_row_slice(4, rest, psi);
    let rho = &block * block.transpose();
    Mat4::from_fn(|r, c| C64::new(rho[(r, c)], 0.0))
}

/// `Tr_{3..n} |z,m,n⟩⟨z,m,n|` by explicit expansion.
pub fn rho12_by_partial_trace(p: f64, parity: Parity, n: u32) -> Mat4 {
    reduce_to_first_two(&logical_expansion(p, parity, n), n)
}

fn projector(direction: [f64; 3], sign: f64) -> Mat2 {
    let mut m = linalg::pauli(0);
    for (i, d) in direction.iter().enumerate() {
        m += linalg::pauli(i + 1) * C64::new(sign * d, 0.0);
    }
    m * C64::new(0.5, 0.0)
}

/// Conditional entropy of qubit 2 after projecting qubit 1 on
/// `(1 ± n·σ)/2`, with the post-measurement states built as matrices.
pub fn conditional_entropy_by_projectors(state: &TwoQubitState, theta: f64, phi: f64) -> f64 {
    let dir = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let m = linalg::kron(&projector(dir, sign), &linalg::pauli(0));
        let post = m * state.matrix() * m;
        let cond = linalg::trace_first(&post);
        let prob = cond.trace().re;
        if prob <= 1e-300 {
            continue;
        }
        let w = linalg::hermitian_eigenvalues2(&(cond / C64::new(prob, 0.0)));
        total += prob * w.iter().map(|&x| if x > 0.0 { -x * x.log2() } else { 0.0 }).sum::<f64>();
    }
    total
}

/// Brute-force minimum of [`conditional_entropy_by_projectors`] on a uniform
/// `n_theta × n_phi` grid, returning `(value, θ, φ)`.
pub fn grid_min_by_projectors(state: &TwoQubitState, n_theta: usize, n_phi: usize) -> (f64, f64, f64) {
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..n_theta {
        let theta = std::f64::consts::PI * i as f64 / (n_theta - 1) as f64;
        for j in 0..n_phi {
            let phi = std::f64::consts::TAU * j as f64 / n_phi as f64;
            let v = conditional_entropy_by_projectors(state, theta, phi);
            if v < best.0 {
                best = (v, theta, phi);
            }
        }
    }
    best
}
