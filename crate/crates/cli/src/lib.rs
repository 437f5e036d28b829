//! Sweeps and reports behind the `cdiscord` command-line tool.
//!
//! Every runner returns plain rows so the data can be inspected in tests;
//! the `render_*` functions turn them into CSV with a `#` metadata line, a
//! header line and values printed to 12 significant digits.

pub mod format;

use std::fmt::Write as _;

use coherent_discord::coherent::{overlap_closed, overlap_series, DEFAULT_SERIES_TOL};
use coherent_discord::correlations::{concurrence_pure_closed, koashi_winter_min};
use coherent_discord::dynamics::time_grid;
use coherent_discord::{
    apply_dephasing, concurrence_t, concurrence_x, discord_brute_force, discord_mixed_closed, discord_pure,
    pure_bipartition, reduced_rho12, sudden_death_time, werner_discord, werner_limit_state, AlgebraSpec,
    BruteForceOptions, DephasingChannel, FamilyRegistry, OverlapP, Parity, SuperpositionSpec,
};
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::format::sig12;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_P_MAX: f64 = 0.999;
pub const DEFAULT_P_STEPS: usize = 500;
pub const DEFAULT_T_STEPS: usize = 200;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Numeric(#[from] coherent_discord::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// Two modes, both parities.
    TwoModes,
    /// Symmetric superpositions.
    Symmetric,
    /// Antisymmetric superpositions.
    Antisymmetric,
}

impl Figure {
    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Figure::TwoModes),
            2 => Ok(Figure::Symmetric),
            3 => Ok(Figure::Antisymmetric),
            _ => usage(format!("figure must be 1, 2 or 3, got {n}")),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Figure::TwoModes => 1,
            Figure::Symmetric => 2,
            Figure::Antisymmetric => 3,
        }
    }

    pub fn default_modes(self) -> Vec<u32> {
        match self {
            Figure::TwoModes => vec![2],
            Figure::Symmetric | Figure::Antisymmetric => vec![4, 5, 25],
        }
    }

}

/// Uniform overlap grid `[min, max]` with `steps` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PGrid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl PGrid {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        if !(0.0 <= min && min <= max && max < 1.0) {
            return usage(format!("p grid [{min}, {max}] must lie within [0, 1)"));
        }
        if steps < 2 {
            return usage(format!("p grid needs at least 2 steps, got {steps}"));
        }
        Ok(Self { min, max, steps })
    }

    pub fn with_steps(steps: usize) -> Result<Self> {
        Self::new(0.0, DEFAULT_P_MAX, steps)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(move |i| self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64)
    }
}

/// Which sector(s) a sweep covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParitySelection {
    Even,
    Odd,
    Both,
}

impl ParitySelection {
    pub fn parities(self) -> Vec<Parity> {
        match self {
            ParitySelection::Even => vec![Parity::Even],
            ParitySelection::Odd => vec![Parity::Odd],
            ParitySelection::Both => vec![Parity::Even, Parity::Odd],
        }
    }
}

impl std::str::FromStr for ParitySelection {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "even" => Ok(ParitySelection::Even),
            "odd" => Ok(ParitySelection::Odd),
            "both" => Ok(ParitySelection::Both),
            other => Err(format!("expected even, odd or both, got `{other}`")),
        }
    }
}

/// Grid and mode selection shared by the CSV sweeps.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub p_grid: PGrid,
    pub n_list: Vec<u32>,
    pub parity: ParitySelection,
    /// Size of the first block for pure-split sweeps.
    pub k: Option<u32>,
}

impl SweepConfig {
    pub fn new(p_grid: PGrid, n_list: Vec<u32>, parity: ParitySelection, k: Option<u32>) -> Result<Self> {
        if n_list.is_empty() {
            return usage("mode list is empty");
        }
        if let Some(&n) = n_list.iter().find(|&&n| n < 2) {
            return usage(format!("every n must be at least 2, got {n}"));
        }
        Ok(Self { p_grid, n_list, parity, k })
    }

    /// The default sweep behind a figure: 500 points on `[0, 0.999]`.
    pub fn for_figure(fig: Figure) -> Self {
        let parity = match fig {
            Figure::TwoModes => ParitySelection::Both,
            Figure::Symmetric => ParitySelection::Even,
            Figure::Antisymmetric => ParitySelection::Odd,
        };
        Self {
            p_grid: PGrid::with_steps(DEFAULT_P_STEPS).expect("default grid is valid"),
            n_list: fig.default_modes(),
            parity,
            k: None,
        }
    }
}

/// How the overlap of a single state is specified on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum OverlapSource {
    Direct(f64),
    Coherent { algebra: String, rep_param: Option<f64>, z: f64 },
}

impl OverlapSource {
    pub fn from_flags(p: Option<f64>, algebra: Option<String>, rep_param: Option<f64>, z: Option<f64>) -> Result<Self> {
        match (p, algebra, z) {
            (Some(p), None, None) => Ok(OverlapSource::Direct(p)),
            (None, Some(algebra), Some(z)) => Ok(OverlapSource::Coherent { algebra, rep_param, z }),
            (None, None, None) => usage("give either --p or --algebra with --z"),
            (Some(_), _, _) => usage("--p cannot be combined with --algebra/--z"),
            (None, Some(_), None) => usage("--algebra needs --z"),
            (None, None, Some(_)) => usage("--z needs --algebra"),
        }
    }

    pub fn resolve(&self) -> Result<OverlapP> {
        match self {
            OverlapSource::Direct(p) => Ok(OverlapP::bare(*p)?),
            OverlapSource::Coherent { algebra, rep_param, z } => {
                let family = build_family(algebra, *rep_param)?;
                Ok(overlap_closed(family.as_ref(), Complex64::new(*z, 0.0))?)
            }
        }
    }
}

fn build_family(algebra: &str, rep_param: Option<f64>) -> Result<Box<dyn coherent_discord::CoherentFamily>> {
    let registry = FamilyRegistry::with_builtins();
    let needs_label = !matches!(algebra.to_ascii_lowercase().as_str(), "glauber" | "harmonic");
    let label = match rep_param {
        Some(x) => x,
        None if needs_label => return usage(format!("--algebra {algebra} needs --rep-param")),
        None => 0.0,
    };
    registry.build(algebra, label).map_err(|e| match e {
        coherent_discord::Error::UnknownFamily(_) => {
            CliError::Usage(format!("{e}; known: {}", registry.names().collect::<Vec<_>>().join(", ")))
        }
        other => other.into(),
    })
}

pub fn parse_grid(s: &str) -> Result<BruteForceOptions> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| CliError::Usage(format!("grid must look like NTHETAxNPHI, got `{s}`")))?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad grid size `{v}`")));
    let opts = BruteForceOptions { n_theta: parse(a)?, n_phi: parse(b)?, ..BruteForceOptions::default() };
    opts.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(opts)
}

fn algebra_label(alg: &AlgebraSpec) -> String {
    alg.to_string()
}

// ---------------------------------------------------------------------------
// figures

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureRow {
    pub p: f64,
    pub n: u32,
    pub parity: Parity,
    pub discord: f64,
}

/// Closed-form discord of `ρ₁₂` against `p`, ordered by `n`, then parity,
/// then ascending `p`.
pub fn run_figure(cfg: &SweepConfig) -> Result<Vec<FigureRow>> {
    let mut jobs = Vec::new();
    for &n in &cfg.n_list {
        for parity in cfg.parity.parities() {
            for p in cfg.p_grid.points() {
                jobs.push((p, n, parity));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(p, n, parity)| {
            let spec = SuperpositionSpec::new(p, parity, n)?;
            Ok(FigureRow { p, n, parity, discord: discord_mixed_closed(&spec).discord })
        })
        .collect()
}

pub fn render_figure(fig: Figure, cfg: &SweepConfig, rows: &[FigureRow]) -> String {
    let mut out = String::new();
    let grid = &cfg.p_grid;
    let modes = cfg.n_list.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
    writeln!(
        out,
        "# cdiscord figure {} version={VERSION} n={modes} p_min={} p_max={} p_steps={}",
        fig.number(),
        sig12(grid.min),
        sig12(grid.max),
        grid.steps
    )
    .unwrap();
    out.push_str("p,n,parity,discord\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", sig12(r.p), r.n, r.parity, sig12(r.discord)).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// pure bipartition sweep

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureRow {
    pub p: f64,
    pub n: u32,
    pub k: u32,
    pub parity: Parity,
    pub concurrence: f64,
    pub discord: f64,
}

/// Pure `k|(n-k)` split against `p`, ordered by `n`, then parity, then `p`.
pub fn run_pure_sweep(cfg: &SweepConfig) -> Result<Vec<PureRow>> {
    let Some(k) = cfg.k else {
        return usage("the pure sweep needs --k");
    };
    let mut jobs = Vec::new();
    for &n in &cfg.n_list {
        for parity in cfg.parity.parities() {
            for p in cfg.p_grid.points() {
                jobs.push((p, n, parity));
            }
        }
    }
    jobs.into_par_iter()
        .map(|(p, n, parity)| {
            let spec = SuperpositionSpec::new(p, parity, n)?;
            let report = discord_pure(&pure_bipartition(&spec, k)?);
            Ok(PureRow { p, n, k, parity, concurrence: report.concurrence, discord: report.discord })
        })
        .collect()
}

pub fn render_pure_sweep(cfg: &SweepConfig, rows: &[PureRow]) -> String {
    let mut out = String::new();
    let grid = &cfg.p_grid;
    let modes = cfg.n_list.iter().map(u32::to_string).collect::<Vec<_>>().join(";");
    writeln!(
        out,
        "# cdiscord sweep-pure version={VERSION} n={modes} k={} p_min={} p_max={} p_steps={}",
        cfg.k.unwrap_or(0),
        sig12(grid.min),
        sig12(grid.max),
        grid.steps
    )
    .unwrap();
    out.push_str("p,n,k,parity,concurrence,discord\n");
    for r in rows {
        writeln!(out, "{},{},{},{},{},{}", sig12(r.p), r.n, r.k, r.parity, sig12(r.concurrence), sig12(r.discord))
            .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// dynamics

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicsRow {
    pub t: f64,
    pub gamma: f64,
    pub concurrence_closed: f64,
    pub concurrence_wootters: f64,
    pub discord_brute: f64,
    pub past_t0: bool,
}

#[derive(Debug, Clone)]
pub struct DynamicsRun {
    pub spec: SuperpositionSpec,
    pub gamma_rate: f64,
    pub t0: f64,
    pub rows: Vec<DynamicsRow>,
}

pub fn run_dynamics(
    spec: &SuperpositionSpec,
    gamma_rate: f64,
    t_steps: usize,
    opts: &BruteForceOptions,
) -> Result<DynamicsRun> {
    if !(gamma_rate > 0.0) {
        return usage(format!("--gamma-rate must be positive, got {gamma_rate}"));
    }
    let t0 = sudden_death_time(spec, gamma_rate)?;
    let times = time_grid(spec, gamma_rate, t_steps).map_err(|e| CliError::Usage(e.to_string()))?;
    let rho = reduced_rho12(spec);
    let rows = times
        .into_par_iter()
        .map(|t| {
            let ch = DephasingChannel::new(gamma_rate, t)?;
            let evolved = apply_dephasing(&rho, &ch);
            Ok(DynamicsRow {
                t,
                gamma: ch.gamma(),
                concurrence_closed: concurrence_t(spec, &ch),
                concurrence_wootters: concurrence_x(&evolved),
                discord_brute: discord_brute_force(&evolved, opts)?.discord,
                past_t0: t >= t0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DynamicsRun { spec: *spec, gamma_rate, t0, rows })
}

pub fn render_dynamics(run: &DynamicsRun) -> String {
    let mut out = String::new();
    let s = &run.spec;
    let origin = s.provenance().map(|(a, z)| format!(" algebra={} z={}", algebra_label(&a), sig12(z.norm()))).unwrap_or_default();
    writeln!(
        out,
        "# cdiscord dynamics version={VERSION} p={} n={} parity={} gamma_rate={} t0={}{origin}",
        sig12(s.p()),
        s.n(),
        s.parity(),
        sig12(run.gamma_rate),
        sig12(run.t0)
    )
    .unwrap();
    out.push_str("t,gamma,concurrence_closed,concurrence_wootters,discord_brute,is_past_t0\n");
    for r in &run.rows {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            sig12(r.t),
            sig12(r.gamma),
            sig12(r.concurrence_closed),
            sig12(r.concurrence_wootters),
            sig12(r.discord_brute),
            r.past_t0
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// overlaps

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapRow {
    pub algebra: String,
    pub z: f64,
    pub closed: f64,
    pub series: f64,
}

pub fn run_overlap(algebra: &str, rep_param: Option<f64>, zs: &[f64]) -> Result<Vec<OverlapRow>> {
    if zs.is_empty() {
        return usage("--z needs at least one value");
    }
    let family = build_family(algebra, rep_param)?;
    zs.iter()
        .map(|&z| {
            let zc = Complex64::new(z, 0.0);
            Ok(OverlapRow {
                algebra: algebra_label(&family.spec()),
                z,
                closed: overlap_closed(family.as_ref(), zc)?.value,
                series: overlap_series(family.as_ref(), zc, DEFAULT_SERIES_TOL)?.value,
            })
        })
        .collect()
}

pub fn render_overlap(rows: &[OverlapRow]) -> String {
    let mut out = format!("# cdiscord overlap version={VERSION} series_tol={}\n", sig12(DEFAULT_SERIES_TOL));
    out.push_str("algebra,z,p_closed,p_series,abs_diff\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.algebra,
            sig12(r.z),
            sig12(r.closed),
            sig12(r.series),
            sig12((r.closed - r.series).abs())
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// single-point report

#[derive(Debug, Clone, PartialEq)]
pub enum PointTarget {
    Superposition { source: OverlapSource, n: u32, parity: Parity, k: Option<u32> },
    WernerLimit { n: u32, k: Option<u32> },
}

fn report_block(out: &mut String, title: &str, r: &coherent_discord::CorrelationReport) {
    writeln!(out, "{title}").unwrap();
    writeln!(out, "  mutual_information      {}", sig12(r.mutual_info)).unwrap();
    writeln!(out, "  classical_correlation   {}", sig12(r.classical_corr)).unwrap();
    writeln!(out, "  discord                 {}", sig12(r.discord)).unwrap();
    writeln!(out, "  concurrence             {}", sig12(r.concurrence)).unwrap();
    writeln!(out, "  entanglement_formation  {}", sig12(r.eof)).unwrap();
    writeln!(
        out,
        "  min_conditional_entropy {}  (theta={}, phi={})",
        sig12(r.s_cond_min),
        sig12(r.argmin.theta),
        sig12(r.argmin.phi)
    )
    .unwrap();
}

pub fn run_point(target: &PointTarget, opts: &BruteForceOptions) -> Result<String> {
    let mut out = String::new();
    match target {
        PointTarget::Superposition { source, n, parity, k } => {
            let overlap = source.resolve()?;
            let spec = SuperpositionSpec::from_overlap(overlap, *parity, *n).map_err(|e| match e {
                coherent_discord::Error::LimitRequired => CliError::Numeric(e),
                other => other.into(),
            })?;
            write!(out, "state: p={} n={} parity={}", sig12(spec.p()), n, parity).unwrap();
            if let Some((alg, z)) = spec.provenance() {
                write!(out, " algebra={} z={}", algebra_label(&alg), sig12(z.re)).unwrap();
            }
            out.push('\n');
            let closed = discord_mixed_closed(&spec);
            report_block(&mut out, "pair (1,2), closed form:", &closed);
            let brute = discord_brute_force(&reduced_rho12(&spec), opts)?;
            report_block(&mut out, &format!("pair (1,2), brute force {}x{}:", opts.n_theta, opts.n_phi), &brute);
            writeln!(out, "residual |closed - brute| discord {}", sig12((closed.discord - brute.discord).abs())).unwrap();
            writeln!(
                out,
                "residual |closed - brute| min_conditional_entropy {}",
                sig12((koashi_winter_min(&spec) - brute.s_cond_min).abs())
            )
            .unwrap();
            if let Some(k) = k {
                let pure = discord_pure(&pure_bipartition(&spec, *k)?);
                report_block(&mut out, &format!("pure split {k}|{}:", n - k), &pure);
                writeln!(
                    out,
                    "residual |closed - coefficients| concurrence {}",
                    sig12((concurrence_pure_closed(&spec, *k) - pure.concurrence).abs())
                )
                .unwrap();
            }
        }
        PointTarget::WernerLimit { n, k } => {
            let state = werner_limit_state(*n)?;
            writeln!(out, "state: W limit (p -> 1, odd) n={n}").unwrap();
            let formula = werner_discord(*n)?;
            writeln!(out, "pair (1,2), closed form:").unwrap();
            writeln!(out, "  discord                 {}", sig12(formula)).unwrap();
            writeln!(out, "  concurrence             {}", sig12(2.0 / *n as f64)).unwrap();
            let brute = discord_brute_force(&state, opts)?;
            report_block(&mut out, &format!("pair (1,2), brute force {}x{}:", opts.n_theta, opts.n_phi), &brute);
            writeln!(out, "residual |closed - brute| discord {}", sig12((formula - brute.discord).abs())).unwrap();
            if let Some(k) = k {
                let bp = coherent_discord::pure_bipartition_werner_limit(*n, *k)?;
                report_block(&mut out, &format!("pure split {k}|{}:", n - k), &discord_pure(&bp));
            }
        }
    }
    Ok(out)
}
