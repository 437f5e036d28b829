use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coherent_discord::{BruteForceOptions, Parity, SuperpositionSpec};
use coherent_discord_cli::*;

#[derive(Parser)]
#[command(name = "cdiscord", version, about = "Quantum discord of multipartite coherent-state superpositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discord against overlap for figure 1 (n=2), 2 (symmetric) or 3 (antisymmetric).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
        /// Override the mode counts, comma separated.
        #[arg(long, value_delimiter = ',')]
        n: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_P_STEPS)]
        p_steps: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Full correlation report for one state.
    Point {
        #[command(flatten)]
        state: StateArgs,
        /// Also report the pure k|(n-k) split.
        #[arg(long)]
        k: Option<u32>,
        /// Use the W-state limit (p -> 1, odd parity).
        #[arg(long)]
        werner_limit: bool,
        #[arg(long, default_value = "181x361")]
        grid: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Concurrence and discord of the pure k|(n-k) split against overlap.
    SweepPure {
        /// Mode counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "both")]
        parity: ParitySelection,
        #[arg(long, default_value_t = DEFAULT_P_STEPS)]
        p_steps: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Concurrence and discord of the pair under local dephasing.
    Dynamics {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long)]
        gamma_rate: f64,
        #[arg(long, default_value_t = DEFAULT_T_STEPS)]
        t_steps: usize,
        #[arg(long, default_value = "181x361")]
        grid: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Overlap <z|-z> from the closed kernel and from the number-state series.
    Overlap {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        rep_param: Option<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        z: Vec<f64>,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct StateArgs {
    #[arg(long)]
    p: Option<f64>,
    /// Coherent family: glauber, su2 or su11.
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    z: Option<f64>,
    /// Spin j (su2) or Bargmann index k (su11).
    #[arg(long)]
    rep_param: Option<f64>,
    #[arg(long)]
    n: u32,
    #[arg(long, value_parser = parse_parity)]
    parity: Option<Parity>,
}

#[derive(Args)]
struct OutArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_parity(s: &str) -> std::result::Result<Parity, String> {
    s.parse::<Parity>().map_err(|e| e.to_string())
}

impl StateArgs {
    fn source(&self) -> Result<OverlapSource> {
        OverlapSource::from_flags(self.p, self.algebra.clone(), self.rep_param, self.z)
    }

    fn parity(&self) -> Result<Parity> {
        self.parity.ok_or_else(|| CliError::Usage("--parity is required".into()))
    }

    fn spec(&self) -> Result<SuperpositionSpec> {
        let overlap = self.source()?.resolve()?;
        Ok(SuperpositionSpec::from_overlap(overlap, self.parity()?, self.n)?)
    }
}

fn emit(out: &OutArgs, text: &str) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Figure { which, n, p_steps, out } => {
            let fig = Figure::from_number(which)?;
            let defaults = SweepConfig::for_figure(fig);
            let modes = if n.is_empty() { defaults.n_list } else { n };
            let cfg = SweepConfig::new(PGrid::with_steps(p_steps)?, modes, defaults.parity, None)?;
            let rows = run_figure(&cfg)?;
            emit(&out, &render_figure(fig, &cfg, &rows))
        }
        Command::Point { state, k, werner_limit, grid, out } => {
            let opts: BruteForceOptions = parse_grid(&grid)?;
            let target = if werner_limit {
                if state.p.is_some() || state.algebra.is_some() || state.z.is_some() {
                    return Err(CliError::Usage("--werner-limit fixes p; drop --p/--algebra/--z".into()));
                }
                PointTarget::WernerLimit { n: state.n, k }
            } else {
                PointTarget::Superposition { source: state.source()?, n: state.n, parity: state.parity()?, k }
            };
            let report = run_point(&target, &opts).map_err(|e| match e {
                CliError::Numeric(coherent_discord::Error::LimitRequired) => CliError::Numeric(
                    coherent_discord::Error::Domain("p = 1 with odd parity is the W-state limit; rerun with --werner-limit".into()),
                ),
                other => other,
            })?;
            emit(&out, &report)
        }
        Command::SweepPure { n, k, parity, p_steps, out } => {
            let cfg = SweepConfig::new(PGrid::with_steps(p_steps)?, n, parity, Some(k))?;
            let rows = run_pure_sweep(&cfg)?;
            emit(&out, &render_pure_sweep(&cfg, &rows))
        }
        Command::Dynamics { state, gamma_rate, t_steps, grid, out } => {
            let opts = parse_grid(&grid)?;
            let run = run_dynamics(&state.spec()?, gamma_rate, t_steps, &opts)?;
            emit(&out, &render_dynamics(&run))
        }
        Command::Overlap { algebra, rep_param, z, out } => {
            let rows = run_overlap(&algebra, rep_param, &z)?;
            emit(&out, &render_overlap(&rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cdiscord: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
