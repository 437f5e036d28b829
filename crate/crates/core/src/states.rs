//! The balanced superposition `|z, m, n⟩ = N(|z⟩^⊗n + e^{imπ}|−z⟩^⊗n)` and its
//! two qubit mappings.
//!
//! Everything here depends on the coherent family only through the overlap
//! `p`, the parity of `m` and the number of modes `n`.

use std::fmt;

use num_complex::Complex64;

use crate::coherent::{AlgebraSpec, OverlapP};
use crate::error::{domain, Error, Result};
use crate::linalg::{self, Mat2, Mat4, C64};

/// Tolerances for [`TwoQubitState::new`].
pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

/// Parity of the relative phase index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `cos mπ`.
    pub fn cos_mpi(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "even" | "symmetric" => Ok(Parity::Even),
            "odd" | "antisymmetric" => Ok(Parity::Odd),
            other => domain(format!("parity must be `even` or `odd`, got `{other}`")),
        }
    }
}

/// The triple `(p, parity, n)` fixing `|z, m, n⟩`, optionally tagged with the
/// coherent family and label `z` that produced `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuperpositionSpec {
    p: f64,
    parity: Parity,
    n: u32,
    provenance: Option<(AlgebraSpec, Complex64)>,
}

impl SuperpositionSpec {
    /// Fails with [`Error::LimitRequired`] for the antisymmetric state at
    /// `p = 1`, whose normalization diverges.
    pub fn new(p: f64, parity: Parity, n: u32) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return domain(format!("overlap p must lie in [0, 1], got {p}"));
        }
        if n < 2 {
            return domain(format!("need at least two modes, got n = {n}"));
        }
        if p == 1.0 && parity == Parity::Odd {
            return Err(Error::LimitRequired);
        }
        Ok(Self { p, parity, n, provenance: None })
    }

    pub fn from_overlap(overlap: OverlapP, parity: Parity, n: u32) -> Result<Self> {
        let mut spec = Self::new(overlap.value, parity, n)?;
        spec.provenance = overlap.source;
        Ok(spec)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn provenance(&self) -> Option<(AlgebraSpec, Complex64)> {
        self.provenance
    }

    pub fn cos_mpi(&self) -> f64 {
        self.parity.cos_mpi()
    }

    /// `pˡ`.
    pub fn p_pow(&self, l: u32) -> f64 {
        self.p.powi(l as i32)
    }

    /// Overlap of the traced-out modes, `q = p^{n−2}`.
    pub fn q(&self) -> f64 {
        self.p_pow(self.n - 2)
    }

    /// `1 + pⁿ cos mπ`, the common denominator of every closed form.
    pub fn denominator(&self) -> f64 {
        1.0 + self.p_pow(self.n) * self.cos_mpi()
    }
}

/// `N = [2 + 2pⁿ cos mπ]^{-1/2}`.
pub fn normalization(spec: &SuperpositionSpec) -> f64 {
    (2.0 * spec.denominator()).sqrt().recip()
}

/// `|z, m, n⟩` written on two logical qubits: `k` modes against `n − k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureBipartition {
    pub n: u32,
    pub k: u32,
    pub c00: f64,
    pub c01: f64,
    pub c10: f64,
    pub c11: f64,
    /// `(a_k, b_k)` with `a_l = √((1+pˡ)/2)`, `b_l = √((1−pˡ)/2)`.
    pub ab_k: (f64, f64),
    pub ab_rest: (f64, f64),
}

impl PureBipartition {
    pub fn norm_sqr(&self) -> f64 {
        self.c00 * self.c00 + self.c01 * self.c01 + self.c10 * self.c10 + self.c11 * self.c11
    }

    /// Amplitudes in the basis `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn amplitudes(&self) -> [f64; 4] {
        [self.c00, self.c01, self.c10, self.c11]
    }

    pub fn density(&self) -> Mat4 {
        let v = self.amplitudes();
        Mat4::from_fn(|r, c| C64::new(v[r] * v[c], 0.0))
    }

    /// Reduced state of the `k`-mode block.
    pub fn reduced_first(&self) -> Mat2 {
        linalg::trace_second(&self.density())
    }
}

fn half_overlap_amplitudes(p_l: f64) -> (f64, f64) {
    (((1.0 + p_l) / 2.0).sqrt(), ((1.0 - p_l) / 2.0).sqrt())
}

/// Split `|z, m, n⟩` into `k` and `n − k` modes and express it on the even/odd
/// logical basis of each block.
pub fn pure_bipartition(spec: &SuperpositionSpec, k: u32) -> Result<PureBipartition> {
    let n = spec.n();
    if k < 1 || k >= n {
        return domain(format!("bipartition size k must lie in [1, {}], got {k}", n - 1));
    }
    let norm = normalization(spec);
    let (a_k, b_k) = half_overlap_amplitudes(spec.p_pow(k));
    let (a_r, b_r) = half_overlap_amplitudes(spec.p_pow(n - k));
    let plus = norm * (1.0 + spec.cos_mpi());
    let minus = norm * (1.0 - spec.cos_mpi());
    Ok(PureBipartition {
        n,
        k,
        c00: plus * a_k * a_r,
        c01: minus * a_k * b_r,
        c10: minus * a_r * b_k,
        c11: plus * b_k * b_r,
        ab_k: (a_k, b_k),
        ab_rest: (a_r, b_r),
    })
}

/// The `p → 1` antisymmetric bipartition: the W state split as `k | n−k`,
/// `√((n−k)/n) |01⟩ + √(k/n) |10⟩`.
pub fn pure_bipartition_werner_limit(n: u32, k: u32) -> Result<PureBipartition> {
    if n < 2 || k < 1 || k >= n {
        return domain(format!("need n >= 2 and 1 <= k < n, got n = {n}, k = {k}"));
    }
    let nf = n as f64;
    Ok(PureBipartition {
        n,
        k,
        c00: 0.0,
        c01: ((n - k) as f64 / nf).sqrt(),
        c10: (k as f64 / nf).sqrt(),
        c11: 0.0,
        ab_k: (1.0, 0.0),
        ab_rest: (1.0, 0.0),
    })
}

/// A two-qubit density matrix in the basis `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitState {
    matrix: Mat4,
}

impl TwoQubitState {
    /// Validate Hermiticity, unit trace and positivity.
    pub fn new(matrix: Mat4) -> Result<Self> {
        let herm = linalg::hermiticity_defect(&matrix);
        if herm > HERMITIAN_TOL {
            return domain(format!("matrix is not Hermitian (defect {herm:e})"));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return domain(format!("density matrix trace is {tr}, expected 1"));
        }
        let min_eig = linalg::hermitian_eigenvalues4(&matrix)[0];
        if min_eig < -PSD_TOL {
            return domain(format!("density matrix has negative eigenvalue {min_eig:e}"));
        }
        Ok(Self { matrix })
    }

    /// Wrap a matrix already known to be a density matrix.
    pub(crate) fn from_trusted(matrix: Mat4) -> Self {
        debug_assert!(linalg::hermiticity_defect(&matrix) < 1e-10);
        Self { matrix }
    }

    pub fn maximally_mixed() -> Self {
        Self { matrix: Mat4::identity() * C64::new(0.25, 0.0) }
    }

    /// Projector onto a normalized pure state.
    pub fn pure(amplitudes: [C64; 4]) -> Result<Self> {
        let v = nalgebra::Vector4::from(amplitudes);
        Self::new(v * v.adjoint())
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    /// True when every entry off the main and anti-diagonal is below `tol`.
    pub fn is_x_state(&self, tol: f64) -> bool {
        (0..4).all(|r| (0..4).all(|c| r == c || r + c == 3 || self.matrix[(r, c)].norm() <= tol))
    }

    /// `ρ₁ = Tr₂ ρ`.
    pub fn marginal_first(&self) -> Mat2 {
        linalg::trace_second(&self.matrix)
    }

    /// `ρ₂ = Tr₁ ρ`.
    pub fn marginal_second(&self) -> Mat2 {
        linalg::trace_first(&self.matrix)
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        linalg::hermitian_eigenvalues4(&self.matrix)
    }
}

/// `ρ₁₂ = Tr_{3..n} |z,m,n⟩⟨z,m,n|` on the even/odd coherent-state qubit of
/// each mode. The result is an X state.
pub fn reduced_rho12(spec: &SuperpositionSpec) -> TwoQubitState {
    let n2 = normalization(spec).powi(2);
    let p = spec.p();
    let (a2, b2) = ((1.0 + p) / 2.0, (1.0 - p) / 2.0);
    let qc = spec.q() * spec.cos_mpi();
    let re = |x: f64| C64::new(x, 0.0);
    let corner = re(2.0 * n2 * a2 * b2 * (1.0 + qc));
    let middle = re(2.0 * n2 * a2 * b2 * (1.0 - qc));
    let mut m = Mat4::zeros();
    m[(0, 0)] = re(2.0 * n2 * a2 * a2 * (1.0 + qc));
    m[(3, 3)] = re(2.0 * n2 * b2 * b2 * (1.0 + qc));
    m[(0, 3)] = corner;
    m[(3, 0)] = corner;
    for (r, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        m[(r, c)] = middle;
    }
    TwoQubitState::from_trusted(m)
}

/// Two-site reduction of the `n`-mode W state, the `p → 1` limit of the
/// antisymmetric superposition.
pub fn werner_limit_state(n: u32) -> Result<TwoQubitState> {
    if n < 2 {
        return domain(format!("need at least two modes, got n = {n}"));
    }
    let inv = 1.0 / n as f64;
    let mut m = Mat4::zeros();
    m[(0, 0)] = C64::new((n - 2) as f64 * inv, 0.0);
    for (r, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        m[(r, c)] = C64::new(inv, 0.0);
    }
    Ok(TwoQubitState::from_trusted(m))
}

/// Pauli correlation matrix `R_{αβ} = Tr[ρ σ^α ⊗ σ^β]`, so that
/// `ρ = ¼ Σ R_{αβ} σ^α ⊗ σ^β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochMatrix {
    pub r: [[f64; 4]; 4],
}

impl BlochMatrix {
    pub fn get(&self, alpha: usize, beta: usize) -> f64 {
        self.r[alpha][beta]
    }

    /// Local Bloch vector of the first qubit, `(R₁₀, R₂₀, R₃₀)`.
    pub fn first_local(&self) -> [f64; 3] {
        [self.r[1][0], self.r[2][0], self.r[3][0]]
    }

    /// Local Bloch vector of the second qubit, `(R₀₁, R₀₂, R₀₃)`.
    pub fn second_local(&self) -> [f64; 3] {
        [self.r[0][1], self.r[0][2], self.r[0][3]]
    }

    pub fn reconstruct(&self) -> Mat4 {
        let mut m = Mat4::zeros();
        for a in 0..4 {
            for b in 0..4 {
                if self.r[a][b] != 0.0 {
                    m += linalg::kron(&linalg::pauli(a), &linalg::pauli(b)) * C64::new(0.25 * self.r[a][b], 0.0);
                }
            }
        }
        m
    }
}

pub fn bloch_matrix(state: &TwoQubitState) -> BlochMatrix {
    let mut r = [[0.0; 4]; 4];
    for (a, row) in r.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let op = linalg::kron(&linalg::pauli(a), &linalg::pauli(b));
            *slot = (state.matrix() * op).trace().re;
        }
    }
    BlochMatrix { r }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: f64, parity: Parity, n: u32) -> SuperpositionSpec {
        SuperpositionSpec::new(p, parity, n).unwrap()
    }

    #[test]
    fn normalization_examples() {
        for n in [2, 3, 7] {
            for parity in [Parity::Even, Parity::Odd] {
                assert!((normalization(&spec(0.0, parity, n)) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
            }
            assert!((normalization(&spec(1.0, Parity::Even, n)) - 0.5).abs() < 1e-15);
        }
        let v = normalization(&spec(0.5, Parity::Odd, 4));
        assert!((v - 0.730296743340221484609293043734).abs() < 1e-14);
    }

    #[test]
    fn degenerate_spec_is_rejected() {
        assert_eq!(SuperpositionSpec::new(1.0, Parity::Odd, 4), Err(Error::LimitRequired));
        assert!(SuperpositionSpec::new(1.0, Parity::Even, 4).is_ok());
        assert!(SuperpositionSpec::new(0.5, Parity::Even, 1).is_err());
        assert!(SuperpositionSpec::new(1.5, Parity::Even, 3).is_err());
    }

    #[test]
    fn ghz_bipartition() {
        let bp = pure_bipartition(&spec(0.0, Parity::Even, 3), 1).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((bp.c00 - h).abs() < 1e-15 && (bp.c11 - h).abs() < 1e-15);
        assert_eq!((bp.c01, bp.c10), (0.0, 0.0));
    }

    #[test]
    fn odd_bipartition_lives_on_the_odd_sector() {
        let bp = pure_bipartition(&spec(0.5, Parity::Odd, 4), 2).unwrap();
        assert_eq!((bp.c00, bp.c11), (0.0, 0.0));
        assert!((bp.norm_sqr() - 1.0).abs() < 1e-14);
        let (a2, b2) = bp.ab_k;
        assert!((bp.c01 - 2.0 * normalization(&spec(0.5, Parity::Odd, 4)) * a2 * b2).abs() < 1e-15);
        assert!((a2 * a2 + b2 * b2 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ground_state_limit() {
        let bp = pure_bipartition(&spec(1.0, Parity::Even, 5), 2).unwrap();
        assert!((bp.c00 - 1.0).abs() < 1e-15);
        assert_eq!([bp.c01, bp.c10, bp.c11], [0.0; 3]);
        // just below the limit the state approaches it
        let bp = pure_bipartition(&spec(1.0 - 1e-9, Parity::Even, 5), 2).unwrap();
        assert!((bp.c00 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bipartition_range() {
        let s = spec(0.3, Parity::Even, 4);
        assert!(pure_bipartition(&s, 0).is_err());
        assert!(pure_bipartition(&s, 4).is_err());
        assert!(pure_bipartition_werner_limit(4, 4).is_err());
    }

    #[test]
    fn werner_limit_bipartition_is_the_limit() {
        let lim = pure_bipartition_werner_limit(5, 2).unwrap();
        let near = pure_bipartition(&spec(1.0 - 1e-7, Parity::Odd, 5), 2).unwrap();
        for (a, b) in lim.amplitudes().iter().zip(near.amplitudes()) {
            assert!((a - b).abs() < 1e-6);
        }
    }

    #[test]
    fn rho12_is_a_unit_trace_x_state() {
        let rho = reduced_rho12(&spec(0.6, Parity::Odd, 5));
        assert!((rho.matrix().trace().re - 1.0).abs() < 1e-14);
        assert!(rho.is_x_state(0.0));
        TwoQubitState::new(*rho.matrix()).unwrap();
    }

    #[test]
    fn rho12_at_zero_overlap() {
        // a = b = 1/√2, q = 0: every nonzero entry equals 2N²/4 = 1/4
        let rho = reduced_rho12(&spec(0.0, Parity::Even, 3));
        for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3), (1, 1), (1, 2), (2, 1), (2, 2)] {
            assert!((rho.entry(r, c).re - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn bloch_entries_match_closed_form() {
        let s = spec(0.5, Parity::Even, 4);
        let n2 = 1.0 / (2.0 + 2.0 * 0.0625);
        let (p, qc) = (0.5, 0.25);
        let r = bloch_matrix(&reduced_rho12(&s));
        let expect = [
            [1.0, 0.0, 0.0, 2.0 * n2 * p * (1.0 + qc)],
            [0.0, 2.0 * n2 * 0.75, 0.0, 0.0],
            [0.0, 0.0, -2.0 * n2 * 0.75 * qc, 0.0],
            [2.0 * n2 * p * (1.0 + qc), 0.0, 0.0, 2.0 * n2 * (p * p + qc)],
        ];
        for (a, row) in expect.iter().enumerate() {
            for (b, want) in row.iter().enumerate() {
                assert!((r.get(a, b) - want).abs() < 1e-14, "R[{a}][{b}]");
            }
        }
    }

    #[test]
    fn maximally_mixed_bloch() {
        let r = bloch_matrix(&TwoQubitState::maximally_mixed());
        for a in 0..4 {
            for b in 0..4 {
                let e = if a == 0 && b == 0 { 1.0 } else { 0.0 };
                assert!((r.get(a, b) - e).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn werner_limit_states() {
        let bell = werner_limit_state(2).unwrap();
        let h = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let psi_plus = TwoQubitState::pure([C64::new(0.0, 0.0), h, h, C64::new(0.0, 0.0)]).unwrap();
        assert!(linalg::max_abs_diff4(bell.matrix(), psi_plus.matrix()) < 1e-15);

        let w3 = werner_limit_state(3).unwrap();
        for (r, c) in [(0, 0), (1, 1), (2, 2), (1, 2)] {
            assert!((w3.entry(r, c).re - 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(w3.entry(3, 3).re, 0.0);
        for n in 2..20 {
            TwoQubitState::new(*werner_limit_state(n).unwrap().matrix()).unwrap();
        }
        assert!(werner_limit_state(1).is_err());
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        let mut m = Mat4::identity() * C64::new(0.25, 0.0);
        m[(0, 1)] = C64::new(0.1, 0.0);
        assert!(TwoQubitState::new(m).is_err());
        let m = Mat4::identity() * C64::new(0.3, 0.0);
        assert!(TwoQubitState::new(m).is_err());
        let m = Mat4::from_diagonal(&nalgebra::Vector4::new(1.2, -0.2, 0.0, 0.0).map(|x| C64::new(x, 0.0)));
        assert!(TwoQubitState::new(m).is_err());
    }

    #[test]
    fn parity_parsing() {
        assert_eq!("Even".parse::<Parity>().unwrap(), Parity::Even);
        assert_eq!("antisymmetric".parse::<Parity>().unwrap(), Parity::Odd);
        assert!("both".parse::<Parity>().is_err());
    }
}
