//! `lctconv`: transforms, canonical convolutions, convolution-equation
//! solving, and identity verification over signal files.
//!
//! Exit codes: 0 success, 1 domain error (or a failed verification), 2 usage
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lctconv::gen::{generate, GeneratorKind, GeneratorSpec};
use lctconv::io::{read_signal, write_plot_data, write_signal, SignalFormat};
use lctconv::report::{DiagnosticsJson, ReportJson, VerifySummary};
use lctconv::CliError;
use lctconv_core::conv::{
    convolve_deng, convolve_new, convolve_new_dual, convolve_shi, convolve_spectral, Realization,
};
use lctconv_core::lct::{induced_grid, lct_forward, lct_inverse};
use lctconv_core::solver::{solve, EquationProblem};
use lctconv_core::theorems::{
    verify_associativity, verify_commutativity, verify_convolution_theorem, verify_deng_identity,
    verify_distributivity, verify_l1_bound, verify_realization_equivalence, verify_shi_ratio,
    verify_spectral_identity, verify_young, OperatorKind, YoungExponents,
};
use lctconv_core::{Complex64, LctParams, SampleGrid, SampledSignal, Spectrum};

#[derive(Parser)]
#[command(
    name = "lctconv",
    version,
    about = "Linear canonical transform toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    New,
    Dual,
    Deng,
    Shi,
    Spectral,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizationArg {
    Direct,
    Chirp1,
    Chirp2,
}

impl From<RealizationArg> for Realization {
    fn from(r: RealizationArg) -> Self {
        match r {
            RealizationArg::Direct => Realization::DirectQuadrature,
            RealizationArg::Chirp1 => Realization::ChirpPathOne,
            RealizationArg::Chirp2 => Realization::ChirpPathTwo,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Gaussian,
    Chirp,
    Rect,
    Noise,
}

#[derive(Subcommand)]
enum Command {
    /// Apply the transform (or its inverse) to a signal file.
    Transform {
        /// Transform parameters a,b,c,d with ad - bc = 1, b != 0.
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: MatrixArg,
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
        /// Treat the input as a spectrum under --matrix and invert it.
        #[arg(long)]
        inverse: bool,
        /// Output grid start,step,count (inverse only; defaults to the
        /// grid induced by the spectrum).
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        target: Option<SampleGrid>,
        /// json or csv; inferred from the output extension by default.
        #[arg(long)]
        format: Option<SignalFormat>,
        /// Also write axis,magnitude,phase CSV here.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Convolve two signal files with one of the canonical operators.
    Convolve {
        /// Transform parameters a,b,c,d with ad - bc = 1, b != 0.
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: MatrixArg,
        #[arg(long, value_enum)]
        op: OpArg,
        /// Realization of the new operator (only with --op new).
        #[arg(long, value_enum)]
        realization: Option<RealizationArg>,
        /// Input files; exactly two.
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
        /// json or csv; inferred from the output extension by default.
        #[arg(long)]
        format: Option<SignalFormat>,
        /// Also write axis,magnitude,phase CSV here.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Solve lambda*phi + g (x)_A phi = f for phi.
    Solve {
        /// Transform parameters a,b,c,d with ad - bc = 1, b != 0.
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: MatrixArg,
        /// Complex lambda as re,im (or just re).
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        lambda: Complex64,
        /// Input files: f then g.
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
        /// Write solver diagnostics JSON here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// json or csv; inferred from the output extension by default.
        #[arg(long)]
        format: Option<SignalFormat>,
        /// Also write axis,magnitude,phase CSV here.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Check one identity (or all of them) and emit a JSON report.
    Verify {
        /// conv-theorem | realizations | commutativity | associativity |
        /// distributivity | dual-commutativity | dual-associativity |
        /// dual-distributivity | l1-bound | young | deng | shi | pei | all
        #[arg(long, default_value = "all")]
        identity: String,
        /// Transform parameters a,b,c,d with ad - bc = 1, b != 0.
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: MatrixArg,
        /// Built-in signal pair by name, e.g. gaussian,chirped
        /// (gaussian | gaussian2 | chirped | chirped2 | rect | noise).
        #[arg(long)]
        signals: Option<String>,
        /// Signal files to use instead of --signals; up to two.
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        /// Grid for built-in signals as start,step,count.
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: Option<SampleGrid>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Tolerance for the conv-theorem check.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Generate a test signal.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        center: f64,
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        rate: f64,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        left: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        right: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Grid as start,step,count.
        #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
        grid: SampleGrid,
        /// Output file path.
        #[arg(long)]
        out: PathBuf,
        /// json or csv; inferred from the output extension by default.
        #[arg(long)]
        format: Option<SignalFormat>,
    },
}

/// Raw a,b,c,d values; validated against the unimodularity and b != 0
/// invariants at run time so violations surface as domain errors (exit 1),
/// not flag-parse errors.
#[derive(Clone, Copy)]
struct MatrixArg([f64; 4]);

impl MatrixArg {
    fn validate(self) -> Result<LctParams, CliError> {
        let [a, b, c, d] = self.0;
        Ok(LctParams::new(a, b, c, d)?)
    }
}

fn parse_matrix(s: &str) -> Result<MatrixArg, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected a,b,c,d, got '{s}'"));
    }
    let mut vals = [0.0f64; 4];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse::<f64>().map_err(|e| format!("'{p}': {e}"))?;
    }
    Ok(MatrixArg(vals))
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [re] => Ok(Complex64::new(
            re.trim().parse().map_err(|e| format!("{e}"))?,
            0.0,
        )),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(|e| format!("{e}"))?,
            im.trim().parse().map_err(|e| format!("{e}"))?,
        )),
        _ => Err(format!("expected re or re,im, got '{s}'")),
    }
}

fn parse_grid(s: &str) -> Result<SampleGrid, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected start,step,count, got '{s}'"));
    }
    let start: f64 = parts[0].trim().parse().map_err(|e| format!("start: {e}"))?;
    let step: f64 = parts[1].trim().parse().map_err(|e| format!("step: {e}"))?;
    let count: usize = parts[2].trim().parse().map_err(|e| format!("count: {e}"))?;
    SampleGrid::new(start, step, count).map_err(|e| e.to_string())
}

fn resolve_format(flag: Option<SignalFormat>, path: &Path) -> SignalFormat {
    flag.unwrap_or_else(|| SignalFormat::from_path(path))
}

fn two_inputs(inputs: &[PathBuf]) -> Result<(&PathBuf, &PathBuf), CliError> {
    match inputs {
        [a, b] => Ok((a, b)),
        _ => Err(CliError::Usage(format!(
            "expected exactly two --in files, got {}",
            inputs.len()
        ))),
    }
}

fn named_signal(name: &str, grid: SampleGrid) -> Result<SampledSignal, CliError> {
    let cis = |theta: f64| Complex64::new(theta.cos(), theta.sin());
    match name {
        "gaussian" => generate(&GeneratorSpec {
            kind: GeneratorKind::Gaussian {
                center: 0.0,
                width: 1.0,
            },
            grid,
        }),
        "gaussian2" => generate(&GeneratorSpec {
            kind: GeneratorKind::Gaussian {
                center: 0.5,
                width: 0.8,
            },
            grid,
        }),
        "chirped" => Ok(SampledSignal::from_fn(grid, |t| {
            (-0.5 * t * t).exp() * cis(0.4 * t * t)
        })?),
        "chirped2" => Ok(SampledSignal::from_fn(grid, |t| {
            let z = (t + 0.5) / 0.9;
            (-0.5 * z * z).exp() * cis(-0.3 * t * t + 0.8 * t)
        })?),
        "rect" => generate(&GeneratorSpec {
            kind: GeneratorKind::Rect {
                left: -1.0,
                right: 1.0,
            },
            grid,
        }),
        "noise" => generate(&GeneratorSpec {
            kind: GeneratorKind::WhiteNoise { seed: 7 },
            grid,
        }),
        other => Err(CliError::Usage(format!(
            "unknown signal '{other}'; use gaussian, gaussian2, chirped, chirped2, rect, or noise"
        ))),
    }
}

fn verify_pair(
    signals: &Option<String>,
    inputs: &[PathBuf],
    grid: Option<SampleGrid>,
) -> Result<(SampledSignal, SampledSignal), CliError> {
    if !inputs.is_empty() {
        let (fa, fb) = two_inputs(inputs)?;
        return Ok((read_signal(fa)?, read_signal(fb)?));
    }
    let grid = match grid {
        Some(g) => g,
        None => SampleGrid::symmetric(10.0, 512).map_err(CliError::Domain)?,
    };
    let names = signals.as_deref().unwrap_or("gaussian,gaussian2");
    let mut parts = names.split(',');
    let first = parts.next().unwrap_or_default().trim();
    let second = parts.next().unwrap_or(first).trim();
    if parts.next().is_some() {
        return Err(CliError::Usage(format!(
            "--signals takes at most two names, got '{names}'"
        )));
    }
    Ok((named_signal(first, grid)?, named_signal(second, grid)?))
}

fn run_verify(
    identity: &str,
    params: &LctParams,
    f: &SampledSignal,
    g: &SampledSignal,
    tol: f64,
) -> Result<Vec<ReportJson>, CliError> {
    // third signal for the ternary properties
    let h = SampledSignal::from_fn(*f.grid(), |t| {
        let z = (t - 0.2) / 0.6;
        Complex64::new((-0.5 * z * z).exp(), 0.0)
    })?;

    let mut reports = Vec::new();
    let mut push = |r: lctconv_core::theorems::VerifierReport| reports.push(ReportJson::new(&r));
    match identity {
        "conv-theorem" => push(verify_convolution_theorem(f, g, params, tol)?),
        "realizations" => push(verify_realization_equivalence(f, g, params)?),
        "commutativity" => push(verify_commutativity(f, g, params, OperatorKind::New)?),
        "associativity" => push(verify_associativity(f, g, &h, params, OperatorKind::New)?),
        "distributivity" => push(verify_distributivity(f, g, &h, params, OperatorKind::New)?),
        "dual-commutativity" => push(verify_commutativity(f, g, params, OperatorKind::Dual)?),
        "dual-associativity" => push(verify_associativity(f, g, &h, params, OperatorKind::Dual)?),
        "dual-distributivity" => push(verify_distributivity(f, g, &h, params, OperatorKind::Dual)?),
        "l1-bound" => push(verify_l1_bound(f, g, params)?),
        "young" => {
            for (p, q, r) in [
                (1.0, 1.0, 1.0),
                (1.0, 2.0, 2.0),
                (2.0, 1.0, 2.0),
                (2.0, 2.0, f64::INFINITY),
                (4.0 / 3.0, 4.0 / 3.0, 2.0),
            ] {
                let x = YoungExponents::new(p, q, r).map_err(CliError::Domain)?;
                push(verify_young(f, g, &x, params)?);
            }
        }
        "deng" => push(verify_deng_identity(f, g, params)?),
        "shi" => {
            let (report, magnitude) = verify_shi_ratio(f, g, params)?;
            reports.push(ReportJson::with_constant(&report, magnitude));
        }
        "pei" => push(verify_spectral_identity(f, g, params)?),
        "all" => {
            for name in [
                "conv-theorem",
                "realizations",
                "commutativity",
                "associativity",
                "distributivity",
                "dual-commutativity",
                "dual-associativity",
                "dual-distributivity",
                "l1-bound",
                "young",
                "deng",
                "shi",
                "pei",
            ] {
                reports.extend(run_verify(name, params, f, g, tol)?);
            }
        }
        other => {
            return Err(CliError::Usage(format!("unknown identity '{other}'")));
        }
    }
    Ok(reports)
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Transform {
            matrix,
            input,
            out,
            inverse,
            target,
            format,
            plot,
        } => {
            let matrix = matrix.validate()?;
            let signal = read_signal(&input)?;
            let result = if inverse {
                let spectrum = Spectrum::new(*signal.grid(), signal.values().to_vec(), matrix)?;
                let target = match target {
                    Some(g) => g,
                    None => induced_grid(spectrum.grid(), &matrix.inverse()),
                };
                lct_inverse(&spectrum, &target)?
            } else {
                let spectrum = lct_forward(&signal, &matrix)?;
                SampledSignal::new(*spectrum.grid(), spectrum.values().to_vec())?
            };
            write_signal(&result, &out, resolve_format(format, &out))?;
            if let Some(plot) = plot {
                write_plot_data(&result, &plot)?;
            }
            Ok(0)
        }
        Command::Convolve {
            matrix,
            op,
            realization,
            inputs,
            out,
            format,
            plot,
        } => {
            let matrix = matrix.validate()?;
            let (fa, fb) = two_inputs(&inputs)?;
            let f = read_signal(fa)?;
            let g = read_signal(fb)?;
            if realization.is_some() && !matches!(op, OpArg::New) {
                return Err(CliError::Usage(String::from(
                    "--realization only applies to --op new",
                )));
            }
            let result = match op {
                OpArg::New => {
                    let how = realization.map_or(Realization::ChirpPathOne, Realization::from);
                    convolve_new(&f, &g, &matrix, how)?
                }
                OpArg::Dual => convolve_new_dual(&f, &g, &matrix)?,
                OpArg::Deng => convolve_deng(&f, &g, &matrix)?,
                OpArg::Shi => convolve_shi(&f, &g, &matrix)?,
                OpArg::Spectral => convolve_spectral(&f, &g, &matrix)?,
            };
            write_signal(&result, &out, resolve_format(format, &out))?;
            if let Some(plot) = plot {
                write_plot_data(&result, &plot)?;
            }
            Ok(0)
        }
        Command::Solve {
            matrix,
            lambda,
            inputs,
            out,
            report,
            tol,
            format,
            plot,
        } => {
            let matrix = matrix.validate()?;
            let (fa, fb) = two_inputs(&inputs)?;
            let f = read_signal(fa)?;
            let g = read_signal(fb)?;
            let problem = EquationProblem::new(lambda, f, g, matrix)?;
            let (phi, diagnostics) = solve(&problem, tol)?;
            write_signal(&phi, &out, resolve_format(format, &out))?;
            if let Some(report_path) = report {
                let json = serde_json::to_string_pretty(&DiagnosticsJson::from(&diagnostics))
                    .expect("serializable");
                std::fs::write(&report_path, json).map_err(|source| CliError::Io {
                    path: report_path.display().to_string(),
                    source,
                })?;
            }
            if let Some(plot) = plot {
                write_plot_data(&phi, &plot)?;
            }
            println!(
                "solved: min |Lambda| = {:.6e}, residual = {:.6e}",
                diagnostics.min_abs_symbol, diagnostics.residual_rel_l2
            );
            Ok(0)
        }
        Command::Verify {
            identity,
            matrix,
            signals,
            inputs,
            grid,
            report,
            tol,
        } => {
            let matrix = matrix.validate()?;
            let (f, g) = verify_pair(&signals, &inputs, grid)?;
            let reports = run_verify(&identity, &matrix, &f, &g, tol)?;
            for r in &reports {
                println!(
                    "{}: {} (max rel err {:.3e}, tolerance {:.3e})",
                    r.identity,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.max_rel_error,
                    r.tolerance
                );
            }
            let summary = VerifySummary::new(reports);
            if let Some(report_path) = report {
                let json = serde_json::to_string_pretty(&summary).expect("serializable");
                std::fs::write(&report_path, json).map_err(|source| CliError::Io {
                    path: report_path.display().to_string(),
                    source,
                })?;
            }
            Ok(if summary.all_passed { 0 } else { 1 })
        }
        Command::Generate {
            kind,
            center,
            width,
            rate,
            left,
            right,
            seed,
            grid,
            out,
            format,
        } => {
            let kind = match kind {
                KindArg::Gaussian => GeneratorKind::Gaussian { center, width },
                KindArg::Chirp => GeneratorKind::Chirp { rate },
                KindArg::Rect => GeneratorKind::Rect { left, right },
                KindArg::Noise => GeneratorKind::WhiteNoise { seed },
            };
            let signal = generate(&GeneratorSpec { kind, grid })?;
            write_signal(&signal, &out, resolve_format(format, &out))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
