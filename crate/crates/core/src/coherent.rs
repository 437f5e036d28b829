//! Coherent-state families of the generalized Weyl-Heisenberg algebra.
//!
//! Each family is a [`CoherentFamily`] trait object selected by name through a
//! [`FamilyRegistry`]. A family is fixed by its structure function `F(n)`,
//! which in turn fixes the series `|z⟩ = N(|z|) Σ √(F(n)!)/n! zⁿ |n⟩`. The
//! only quantity the rest of the crate needs is the overlap
//! `p = ⟨z|−z⟩`, available both from the closed kernel and from direct
//! summation of that series.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

/// Relative truncation threshold for [`overlap_series`].
pub const DEFAULT_SERIES_TOL: f64 = 1e-14;
/// Hard cap on the number of series terms.
pub const SERIES_TERM_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Harmonic,
    Su2,
    Su11,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Harmonic => "glauber",
            AlgebraKind::Su2 => "su2",
            AlgebraKind::Su11 => "su11",
        }
    }
}

/// Which structure function governs the coherent states, together with the
/// representation label (spin `j` for SU(2), Bargmann index `k` for SU(1,1)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraSpec {
    kind: AlgebraKind,
    rep_param: f64,
}

fn is_positive_half_integer(x: f64) -> bool {
    let twice = 2.0 * x;
    x > 0.0 && x.is_finite() && (twice - twice.round()).abs() < 1e-12
}

impl AlgebraSpec {
    pub fn harmonic() -> Self {
        Self { kind: AlgebraKind::Harmonic, rep_param: 1.0 }
    }

    pub fn su2(j: f64) -> Result<Self> {
        if !is_positive_half_integer(j) {
            return domain(format!("SU(2) spin must be a positive half-integer, got {j}"));
        }
        Ok(Self { kind: AlgebraKind::Su2, rep_param: (2.0 * j).round() / 2.0 })
    }

    pub fn su11(k: f64) -> Result<Self> {
        if !is_positive_half_integer(k) {
            return domain(format!("SU(1,1) Bargmann index must be a positive half-integer, got {k}"));
        }
        Ok(Self { kind: AlgebraKind::Su11, rep_param: (2.0 * k).round() / 2.0 })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    /// Spin `j` or Bargmann index `k`; meaningless for the harmonic family.
    pub fn rep_param(&self) -> f64 {
        self.rep_param
    }

    /// `2j` or `2k` as an integer exponent.
    fn twice_rep(&self) -> i32 {
        (2.0 * self.rep_param).round() as i32
    }

    /// Materialize the family behind this description.
    pub fn family(&self) -> Box<dyn CoherentFamily> {
        match self.kind {
            AlgebraKind::Harmonic => Box::new(Glauber),
            AlgebraKind::Su2 => Box::new(SpinCoherent { spec: *self }),
            AlgebraKind::Su11 => Box::new(DiscreteSeriesCoherent { spec: *self }),
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AlgebraKind::Harmonic => write!(f, "glauber"),
            AlgebraKind::Su2 => write!(f, "su2(j={})", self.rep_param),
            AlgebraKind::Su11 => write!(f, "su11(k={})", self.rep_param),
        }
    }
}

/// A family of Perelomov coherent states built from a structure function.
pub trait CoherentFamily: Send + Sync {
    fn spec(&self) -> AlgebraSpec;

    /// `F(n)`, the eigenvalue of `a⁺a⁻` on the number state `|n⟩`.
    fn structure_function(&self, n: u64) -> Result<f64>;

    /// Highest number state in the representation, `None` if unbounded.
    fn top_level(&self) -> Option<u64>;

    /// Whether `z` is a label for which the overlap `⟨z|−z⟩` lies in `[0, 1]`.
    fn admits(&self, z: Complex64) -> bool;

    /// The coherent-state kernel `⟨z₁|z₂⟩`.
    fn kernel(&self, z1: Complex64, z2: Complex64) -> Complex64;

    fn name(&self) -> &'static str {
        self.spec().kind().name()
    }
}

/// Harmonic-oscillator (Glauber) coherent states, `F(n) = n`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Glauber;

impl CoherentFamily for Glauber {
    fn spec(&self) -> AlgebraSpec {
        AlgebraSpec::harmonic()
    }

    fn structure_function(&self, n: u64) -> Result<f64> {
        Ok(n as f64)
    }

    fn top_level(&self) -> Option<u64> {
        None
    }

    fn admits(&self, z: Complex64) -> bool {
        z.re.is_finite() && z.im.is_finite()
    }

    fn kernel(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        (-(0.5) * (z1.norm_sqr() + z2.norm_sqr() - 2.0 * z1.conj() * z2)).exp()
    }
}

/// Spin coherent states of the `2j+1` dimensional SU(2) representation,
/// `F(n) = n(2j + 1 − n)`.
#[derive(Debug, Clone, Copy)]
pub struct SpinCoherent {
    spec: AlgebraSpec,
}

impl CoherentFamily for SpinCoherent {
    fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    fn structure_function(&self, n: u64) -> Result<f64> {
        let two_j = self.spec.twice_rep() as u64;
        if n > two_j + 1 {
            return domain(format!("SU(2) structure function needs n <= 2j+1 = {}, got {n}", two_j + 1));
        }
        let n = n as f64;
        Ok(n * (two_j as f64 + 1.0 - n))
    }

    fn top_level(&self) -> Option<u64> {
        Some(self.spec.twice_rep() as u64)
    }

    // Beyond the unit circle ((1−|z|²)/(1+|z|²))^{2j} turns negative for odd 2j.
    fn admits(&self, z: Complex64) -> bool {
        z.norm_sqr() <= 1.0
    }

    fn kernel(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let two_j = self.spec.twice_rep();
        let j = self.spec.rep_param;
        let pref = (1.0 + z1.norm_sqr()).powf(-j) * (1.0 + z2.norm_sqr()).powf(-j);
        (Complex64::new(1.0, 0.0) + z1.conj() * z2).powi(two_j) * pref
    }
}

/// Discrete-series SU(1,1) coherent states on the unit disc,
/// `F(n) = n(2k − 1 + n)`.
#[derive(Debug, Clone, Copy)]
pub struct DiscreteSeriesCoherent {
    spec: AlgebraSpec,
}

impl CoherentFamily for DiscreteSeriesCoherent {
    fn spec(&self) -> AlgebraSpec {
        self.spec
    }

    fn structure_function(&self, n: u64) -> Result<f64> {
        let n = n as f64;
        Ok(n * (2.0 * self.spec.rep_param - 1.0 + n))
    }

    fn top_level(&self) -> Option<u64> {
        None
    }

    fn admits(&self, z: Complex64) -> bool {
        z.norm_sqr() < 1.0
    }

    fn kernel(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let k = self.spec.rep_param;
        let pref = (1.0 - z1.norm_sqr()).powf(k) * (1.0 - z2.norm_sqr()).powf(k);
        (Complex64::new(1.0, 0.0) - z1.conj() * z2).powi(-self.spec.twice_rep()) * pref
    }
}

type FamilyCtor = fn(f64) -> Result<Box<dyn CoherentFamily>>;

/// Name-indexed constructors for coherent-state families.
pub struct FamilyRegistry {
    ctors: BTreeMap<String, FamilyCtor>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        Self { ctors: BTreeMap::new() }
    }

    /// Registry with `glauber` (alias `harmonic`), `su2` and `su11`.
    pub fn with_builtins() -> Self {
        let mut reg = Self::empty();
        reg.register("glauber", |_| Ok(AlgebraSpec::harmonic().family()));
        reg.register("harmonic", |_| Ok(AlgebraSpec::harmonic().family()));
        reg.register("su2", |j| Ok(AlgebraSpec::su2(j)?.family()));
        reg.register("su11", |k| Ok(AlgebraSpec::su11(k)?.family()));
        reg
    }

    /// Register a constructor; a later registration under the same name wins.
    pub fn register(&mut self, name: &str, ctor: FamilyCtor) {
        self.ctors.insert(name.to_ascii_lowercase(), ctor);
    }

    pub fn build(&self, name: &str, rep_param: f64) -> Result<Box<dyn CoherentFamily>> {
        let ctor = self
            .ctors
            .get(&name.to_ascii_lowercase())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
        ctor(rep_param)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.ctors.keys().map(String::as_str)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

/// The overlap `p = ⟨z|−z⟩`, with the family and label it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OverlapP {
    pub value: f64,
    pub source: Option<(AlgebraSpec, Complex64)>,
}

impl OverlapP {
    /// A bare overlap with no coherent-state provenance.
    pub fn bare(value: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&value) {
            return domain(format!("overlap p must lie in [0, 1], got {value}"));
        }
        Ok(Self { value, source: None })
    }
}

/// `F(n)` for the given algebra.
pub fn structure_function(alg: &AlgebraSpec, n: u64) -> Result<f64> {
    alg.family().structure_function(n)
}

fn check_admissible(family: &dyn CoherentFamily, z: Complex64) -> Result<()> {
    if family.admits(z) {
        Ok(())
    } else {
        domain(format!("z = {z} is outside the admissible domain of {}", family.spec()))
    }
}

/// `⟨z|−z⟩` from the closed-form kernel of the family.
pub fn overlap_closed(family: &dyn CoherentFamily, z: Complex64) -> Result<OverlapP> {
    check_admissible(family, z)?;
    let value = family.kernel(z, -z).re;
    Ok(OverlapP { value, source: Some((family.spec(), z)) })
}

/// `⟨z|−z⟩` by summing the number-state series term by term.
///
/// The generalized factorials are accumulated in log space. Summation stops
/// once terms are decreasing and smaller than `tol` times the normalization
/// sum, or when the ladder terminates.
pub fn overlap_series(family: &dyn CoherentFamily, z: Complex64, tol: f64) -> Result<OverlapP> {
    check_admissible(family, z)?;
    if !(tol > 0.0) {
        return domain(format!("series tolerance must be positive, got {tol}"));
    }
    let r2 = z.norm_sqr();
    let source = Some((family.spec(), z));
    if r2 == 0.0 {
        return Ok(OverlapP { value: 1.0, source });
    }
    let ln_r2 = r2.ln();
    // n = 0 term of both sums
    let mut norm_sum = 1.0;
    let mut alt_sum = 1.0;
    let mut log_term = 0.0;
    let mut prev_term = 1.0;
    let mut converged = false;
    for n in 1..=SERIES_TERM_CAP {
        if family.top_level().is_some_and(|top| n > top) {
            converged = true;
            break;
        }
        let f = family.structure_function(n)?;
        let nf = n as f64;
        log_term += f.ln() - 2.0 * nf.ln() + ln_r2;
        let term = log_term.exp();
        norm_sum += term;
        if n % 2 == 0 {
            alt_sum += term;
        } else {
            alt_sum -= term;
        }
        if term <= prev_term && term < tol * norm_sum {
            converged = true;
            break;
        }
        prev_term = term;
    }
    if !converged {
        return Err(Error::Numeric(format!(
            "overlap series for {} at |z| = {} did not converge within {SERIES_TERM_CAP} terms",
            family.spec(),
            r2.sqrt()
        )));
    }
    Ok(OverlapP { value: alt_sum / norm_sum, source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn structure_function_presets() {
        assert_eq!(structure_function(&AlgebraSpec::harmonic(), 3).unwrap(), 3.0);
        assert_eq!(structure_function(&AlgebraSpec::su2(0.5).unwrap(), 1).unwrap(), 1.0);
        assert_eq!(structure_function(&AlgebraSpec::su11(1.0).unwrap(), 2).unwrap(), 6.0);
        // ladder terminates at 2j + 1
        assert_eq!(structure_function(&AlgebraSpec::su2(1.5).unwrap(), 4).unwrap(), 0.0);
        assert!(structure_function(&AlgebraSpec::su2(1.5).unwrap(), 5).is_err());
    }

    #[test]
    fn rejects_non_half_integer_labels() {
        assert!(AlgebraSpec::su2(0.3).is_err());
        assert!(AlgebraSpec::su11(0.0).is_err());
        assert!(AlgebraSpec::su11(-1.5).is_err());
        assert_eq!(AlgebraSpec::su2(2.5).unwrap().rep_param(), 2.5);
    }

    #[test]
    fn closed_overlap_examples() {
        let g = AlgebraSpec::harmonic().family();
        assert_eq!(overlap_closed(g.as_ref(), c(0.0)).unwrap().value, 1.0);
        let p = overlap_closed(g.as_ref(), c(1.0)).unwrap().value;
        assert!((p - 0.135335283236612691893999494972).abs() < 1e-15);

        let s = AlgebraSpec::su2(0.5).unwrap().family();
        assert!(overlap_closed(s.as_ref(), Complex64::from_polar(1.0, 0.7)).unwrap().value.abs() < 1e-15);

        let d = AlgebraSpec::su11(1.0).unwrap().family();
        assert!(matches!(overlap_closed(d.as_ref(), c(1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn series_matches_closed_examples() {
        let s = AlgebraSpec::su2(1.0).unwrap().family();
        let a = overlap_series(s.as_ref(), c(0.5), DEFAULT_SERIES_TOL).unwrap().value;
        let b = overlap_closed(s.as_ref(), c(0.5)).unwrap().value;
        assert!((a - b).abs() < 1e-10);

        let d = AlgebraSpec::su11(0.5).unwrap().family();
        let a = overlap_series(d.as_ref(), c(0.3), DEFAULT_SERIES_TOL).unwrap().value;
        assert!((a - 0.83486238532110091743119266055).abs() < 1e-12);

        let g = AlgebraSpec::harmonic().family();
        assert_eq!(overlap_series(g.as_ref(), c(0.0), DEFAULT_SERIES_TOL).unwrap().value, 1.0);
    }

    #[test]
    fn overlap_depends_only_on_modulus() {
        let reg = FamilyRegistry::with_builtins();
        for (name, rep) in [("glauber", 1.0), ("su2", 1.5), ("su11", 2.0)] {
            let fam = reg.build(name, rep).unwrap();
            let base = overlap_closed(fam.as_ref(), c(0.6)).unwrap().value;
            for phase in [0.3, 1.7, 3.0, -2.2] {
                let z = Complex64::from_polar(0.6, phase);
                let v = overlap_closed(fam.as_ref(), z).unwrap().value;
                assert!((v - base).abs() < 1e-14, "{name}: {v} vs {base}");
                assert!(fam.kernel(z, -z).im.abs() < 1e-14);
            }
        }
    }

    #[test]
    fn registry_resolves_names() {
        let reg = FamilyRegistry::default();
        assert_eq!(reg.build("Glauber", 0.0).unwrap().spec().kind(), AlgebraKind::Harmonic);
        assert_eq!(reg.build("su2", 1.0).unwrap().name(), "su2");
        assert!(matches!(reg.build("heisenberg", 1.0), Err(Error::UnknownFamily(_))));
        assert!(reg.build("su11", 0.7).is_err());
        assert_eq!(reg.names().collect::<Vec<_>>(), ["glauber", "harmonic", "su11", "su2"]);
    }

    #[test]
    fn bare_overlap_range() {
        assert!(OverlapP::bare(1.2).is_err());
        assert!(OverlapP::bare(-0.1).is_err());
        assert!(OverlapP::bare(0.4).unwrap().source.is_none());
    }
}
