//! The `qcorr` command line.
//!
//! Exit codes: 0 success, 1 validation failure, 2 unparseable arguments,
//! 3 invalid density matrix, 4 unwritable output.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::channels::{apply_local, compose, dephasing, depolarizing, gad, QubitChannel};
use crate::correlations::correlation_report;
use crate::csv::{g12, write_records, write_rows, Schema};
use crate::markov::{alpha_grid, evolve_markov, figure_data, uniform_grid, MarkovFigure, NoiseKind, RateSchedule};
use crate::nonmarkov::{evolve_nonmarkov, family_sweep_nonmarkov, LorentzianSpectrum, NonMarkovFigure, NonMarkovKind};
use crate::qmat::{CMatrix4, C64};
use crate::states::{as_x_state, bell, make_family, BellState, StateFamily, StateFamilyParam, TwoQubitState};
use crate::validate::{run_validation, DEFAULT_SEED, DEFAULT_STATES};
use crate::Error;

pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVALID_STATE: i32 = 3;
pub const EXIT_OUTPUT: i32 = 4;

/// Environment variable capping the worker pool (0 = one per core).
pub const THREADS_VAR: &str = "QCORR_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "qcorr",
    version,
    about = "Two-qubit MIN and geometric discord under local noise"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print MIN and GD of a state, optionally after one channel use.
    Compute(ComputeArgs),
    /// Evolve a state under a scheduled channel and write CSV.
    Evolve(EvolveArgs),
    /// Write the (alpha, t) grid of a Markovian figure (F1..F8).
    Sweep(SweepArgs),
    /// Non-Markovian amplitude or dephasing noise (F9, F10 or custom).
    Nonmarkov(NonMarkovArgs),
    /// Run the law table and invariant suites.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// pure:A | werner:A | vp:A | bell:phi+|phi-|psi+|psi- | 16 entries `re` or `re/im`
    #[arg(long, allow_hyphen_values = true)]
    pub state: String,
    /// depol:G | deph:G | gad:G:P | deph+gad:G:G:P, applied to both qubits
    #[arg(long)]
    pub channel: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub state: String,
    /// depol:sched | deph:sched | gad:sched:P | deph+gad:sched:sched:P
    #[arg(long)]
    pub channel: String,
    /// Rate in `gamma(t) = 1 - exp(-rate t)`.
    #[arg(long, default_value_t = 1.0)]
    pub rate: f64,
    /// End time; defaults to 8 / rate.
    #[arg(long)]
    pub tmax: Option<f64>,
    /// Number of time points.
    #[arg(long, default_value_t = 400)]
    pub steps: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub figure: String,
    /// Number of time points on [0, tmax].
    #[arg(long, default_value_t = 400)]
    pub steps: usize,
    /// End time in units of 1 / rate.
    #[arg(long, default_value_t = 8.0)]
    pub tmax: f64,
    /// Number of alpha values on [0, 1].
    #[arg(long, default_value_t = 101)]
    pub alphas: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NonMarkovArgs {
    /// F9 (amplitude) or F10 (dephasing).
    #[arg(long)]
    pub figure: Option<String>,
    /// amplitude | dephasing; required without --figure.
    #[arg(long)]
    pub noise: Option<String>,
    #[arg(long)]
    pub gamma0: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega0: Option<f64>,
    /// A single X state instead of the pure-family alpha sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub state: Option<String>,
    /// End time; defaults to 30 / gamma0.
    #[arg(long)]
    pub tmax: Option<f64>,
    /// Number of time intervals (points minus one).
    #[arg(long, default_value_t = 3000)]
    pub steps: usize,
    #[arg(long, default_value_t = 101)]
    pub alphas: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Number of random states.
    #[arg(long, default_value_t = DEFAULT_STATES)]
    pub n: usize,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonFinite
            | Error::NotHermitian(_)
            | Error::InvalidTrace(_)
            | Error::NotPositive(_)
            | Error::NotXState(_)
            | Error::InvalidXState(_) => EXIT_INVALID_STATE,
            _ => EXIT_PARSE,
        };
        let message = match e {
            Error::NotPositive(ev) => format!("invalid density matrix: eigenvalue {ev:e} is negative"),
            Error::NonFinite | Error::NotHermitian(_) | Error::InvalidTrace(_) => {
                format!("invalid density matrix: {e}")
            }
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// A parsed `--state` value.
#[derive(Clone, Debug)]
pub struct StateSpec {
    pub state: TwoQubitState,
    pub family: Option<StateFamilyParam>,
}

fn parse_f64(s: &str, what: &str) -> CliResult<f64> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::parse(format!("cannot read {what} from `{s}`")))
}

fn parse_entry(s: &str) -> CliResult<C64> {
    match s.split_once('/') {
        Some((re, im)) => Ok(C64::new(parse_f64(re, "an entry")?, parse_f64(im, "an entry")?)),
        None => Ok(C64::new(parse_f64(s, "an entry")?, 0.0)),
    }
}

pub fn parse_state(spec: &str) -> CliResult<StateSpec> {
    let spec = spec.trim();
    if let Some((name, arg)) = spec.split_once(':') {
        let family = match name.to_ascii_lowercase().as_str() {
            "pure" => StateFamily::Pure,
            "werner" => StateFamily::Werner,
            "vp" => StateFamily::VedralPlenio,
            "bell" => {
                let b = match arg.to_ascii_lowercase().as_str() {
                    "phi+" => BellState::PhiPlus,
                    "phi-" => BellState::PhiMinus,
                    "psi+" => BellState::PsiPlus,
                    "psi-" => BellState::PsiMinus,
                    _ => return Err(CliError::parse(format!("unknown Bell state `{arg}`"))),
                };
                return Ok(StateSpec {
                    state: bell(b),
                    family: None,
                });
            }
            _ => return Err(CliError::parse(format!("unknown state family `{name}`"))),
        };
        let param = StateFamilyParam::new(family, parse_f64(arg, "alpha")?)?;
        return Ok(StateSpec {
            state: make_family(param)?,
            family: Some(param),
        });
    }
    let entries: Vec<&str> = spec
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if entries.len() != 16 {
        return Err(CliError::parse(format!(
            "a literal state needs 16 entries, got {}",
            entries.len()
        )));
    }
    let mut m = CMatrix4::zeros();
    for (k, e) in entries.iter().enumerate() {
        m.0[k / 4][k % 4] = parse_entry(e)?;
    }
    Ok(StateSpec {
        state: TwoQubitState::new(m)?,
        family: None,
    })
}

/// A channel strength: a number or `sched`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Strength {
    Fixed(f64),
    Scheduled,
}

fn parse_strength(s: &str) -> CliResult<Strength> {
    if s.eq_ignore_ascii_case("sched") {
        Ok(Strength::Scheduled)
    } else {
        Ok(Strength::Fixed(parse_f64(s, "a channel strength")?))
    }
}

/// A parsed `--channel` value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChannelSpec {
    Depolarizing(Strength),
    Dephasing(Strength),
    Damping(Strength, f64),
    /// Dephasing strength, damping strength, mixing.
    Combined(Strength, Strength, f64),
}

pub fn parse_channel(spec: &str) -> CliResult<ChannelSpec> {
    let parts: Vec<&str> = spec.trim().split(':').collect();
    let bad = || CliError::parse(format!("cannot read channel `{spec}`"));
    match parts.as_slice() {
        [name, g] if name.eq_ignore_ascii_case("depol") => Ok(ChannelSpec::Depolarizing(parse_strength(g)?)),
        [name, g] if name.eq_ignore_ascii_case("deph") => Ok(ChannelSpec::Dephasing(parse_strength(g)?)),
        [name, g, p] if name.eq_ignore_ascii_case("gad") => {
            Ok(ChannelSpec::Damping(parse_strength(g)?, parse_f64(p, "p")?))
        }
        [name, gd, ga, p] if name.eq_ignore_ascii_case("deph+gad") => Ok(ChannelSpec::Combined(
            parse_strength(gd)?,
            parse_strength(ga)?,
            parse_f64(p, "p")?,
        )),
        _ => Err(bad()),
    }
}

impl ChannelSpec {
    /// The fixed-strength channel.
    pub fn fixed(&self) -> CliResult<QubitChannel> {
        use Strength::Fixed;
        let need = || CliError::parse("compute needs numeric channel strengths, not `sched`");
        Ok(match *self {
            ChannelSpec::Depolarizing(Fixed(g)) => depolarizing(g)?,
            ChannelSpec::Dephasing(Fixed(g)) => dephasing(g)?,
            ChannelSpec::Damping(Fixed(g), p) => gad(g, p)?,
            ChannelSpec::Combined(Fixed(gd), Fixed(ga), p) => compose(&gad(ga, p)?, &dephasing(gd)?)?,
            _ => return Err(need()),
        })
    }

    /// The schedule kind; every strength must be `sched`.
    pub fn scheduled(&self) -> CliResult<NoiseKind> {
        use Strength::Scheduled;
        let need = || CliError::parse("evolve needs `sched` in place of every channel strength");
        Ok(match *self {
            ChannelSpec::Depolarizing(Scheduled) => NoiseKind::Depolarizing,
            ChannelSpec::Dephasing(Scheduled) => NoiseKind::Dephasing,
            ChannelSpec::Damping(Scheduled, p) => NoiseKind::Damping { p },
            ChannelSpec::Combined(Scheduled, Scheduled, p) => NoiseKind::Combined { p },
            _ => return Err(need()),
        })
    }
}

fn open_output(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    match path {
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
        Some(p) => File::create(p)
            .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
            .map_err(|e| CliError {
                code: EXIT_OUTPUT,
                message: format!("cannot write {}: {e}", p.display()),
            }),
    }
}

fn output_error(e: io::Error) -> CliError {
    CliError {
        code: EXIT_OUTPUT,
        message: format!("write failed: {e}"),
    }
}

fn cmd_compute(args: &ComputeArgs, out: &mut dyn Write) -> CliResult<()> {
    let spec = parse_state(&args.state)?;
    let state = match &args.channel {
        Some(c) => {
            let ch = parse_channel(c)?.fixed()?;
            apply_local(&ch, &ch, &spec.state)?
        }
        None => spec.state,
    };
    let r = correlation_report(&state);
    let lines = [
        format!("min         {}", g12(r.min_value)),
        format!("gd          {}", g12(r.gd_value)),
        format!("min_oracle  {}", g12(r.min_oracle)),
        format!("gd_oracle   {}", g12(r.gd_oracle)),
        format!("branch      {}", r.branch.label()),
        "min,gd,min_oracle,gd_oracle,branch".to_string(),
        format!(
            "{},{},{},{},{}",
            g12(r.min_value),
            g12(r.gd_value),
            g12(r.min_oracle),
            g12(r.gd_oracle),
            r.branch.label()
        ),
    ];
    for l in lines {
        writeln!(out, "{l}").map_err(output_error)?;
    }
    Ok(())
}

fn check_positive(name: &str, v: f64) -> CliResult<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(CliError::parse(format!("--{name} must be positive, got {v}")))
    }
}

fn cmd_evolve(args: &EvolveArgs) -> CliResult<()> {
    let spec = parse_state(&args.state)?;
    let kind = parse_channel(&args.channel)?.scheduled()?;
    let rate = check_positive("rate", args.rate)?;
    let sched = RateSchedule::new(kind, rate)?;
    let tmax = check_positive("tmax", args.tmax.unwrap_or(8.0 / rate))?;
    let grid = uniform_grid(tmax, args.steps);
    let records = evolve_markov(&spec.state, &sched, &grid, spec.family)?;
    let out = open_output(&args.out)?;
    write_records(out, Schema::Markov, spec.family.map(|f| f.alpha), &records).map_err(output_error)
}

fn cmd_sweep(args: &SweepArgs) -> CliResult<()> {
    let fig: MarkovFigure = args.figure.parse().map_err(CliError::parse)?;
    let tmax = check_positive("tmax", args.tmax)?;
    let rows = figure_data(fig, &uniform_grid(tmax, args.steps), &alpha_grid(args.alphas))?;
    let out = open_output(&args.out)?;
    write_rows(out, Schema::Sweep, &rows).map_err(output_error)
}

fn cmd_nonmarkov(args: &NonMarkovArgs) -> CliResult<()> {
    let fig = args
        .figure
        .as_deref()
        .map(|f| f.parse::<NonMarkovFigure>().map_err(CliError::parse))
        .transpose()?;
    let noise = args
        .noise
        .as_deref()
        .map(|n| n.parse::<NonMarkovKind>().map_err(CliError::parse))
        .transpose()?;
    let kind = match (fig, noise) {
        (Some(f), None) => f.kind(),
        (Some(f), Some(n)) if n == f.kind() => n,
        (Some(f), Some(_)) => {
            return Err(CliError::parse(format!(
                "{} is fixed to {} noise",
                f.id(),
                f.kind().label()
            )))
        }
        (None, Some(n)) => n,
        (None, None) => return Err(CliError::parse("nonmarkov needs --figure or --noise")),
    };
    let base = fig.unwrap_or(NonMarkovFigure::F9).spectrum();
    let spec = LorentzianSpectrum::new(
        args.gamma0.unwrap_or(base.gamma0),
        args.lambda.unwrap_or(base.lambda),
        args.delta.unwrap_or(base.delta),
        args.omega0.unwrap_or(base.omega0),
    )?;
    let tmax = check_positive("tmax", args.tmax.unwrap_or(30.0 / spec.gamma0))?;
    let grid = if args.steps == 0 {
        Vec::new()
    } else {
        uniform_grid(tmax, args.steps + 1)
    };
    match &args.state {
        Some(s) => {
            let parsed = parse_state(s)?;
            let x = as_x_state(&parsed.state)?;
            let p = kind.decoherence(&spec, &grid)?;
            let records = evolve_nonmarkov(&x, kind, &p, parsed.family)?;
            let out = open_output(&args.out)?;
            write_records(out, Schema::NonMarkov, parsed.family.map(|f| f.alpha), &records).map_err(output_error)
        }
        None => {
            let rows = family_sweep_nonmarkov(kind, &spec, StateFamily::Pure, &alpha_grid(args.alphas), &grid)?;
            let out = open_output(&args.out)?;
            write_rows(out, Schema::NonMarkov, &rows).map_err(output_error)
        }
    }
}

fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write) -> CliResult<bool> {
    if args.n == 0 {
        return Err(CliError::parse("--n must be at least 1"));
    }
    let report = run_validation(args.seed, args.n)?;
    out.write_all(report.render().as_bytes()).map_err(output_error)?;
    Ok(report.passed())
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| CliError::parse(format!("{THREADS_VAR} must be a non-negative integer, got `{v}`")))?;
    if n > 0 {
        // a pool that already exists keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { 0 };
        }
    };
    let result = configure_threads().and_then(|_| {
        let stdout = io::stdout();
        let mut lock = stdout.lock();
        match &cli.command {
            Command::Compute(a) => cmd_compute(a, &mut lock).map(|_| true),
            Command::Evolve(a) => cmd_evolve(a).map(|_| true),
            Command::Sweep(a) => cmd_sweep(a).map(|_| true),
            Command::Nonmarkov(a) => cmd_nonmarkov(a).map(|_| true),
            Command::Validate(a) => cmd_validate(a, &mut lock),
        }
    });
    match result {
        Ok(true) => 0,
        Ok(false) => EXIT_VALIDATION,
        Err(e) => {
            eprintln!("qcorr: {}", e.message);
            e.code
        }
    }
}
