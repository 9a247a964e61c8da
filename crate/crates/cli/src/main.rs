mod compute;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pdedekind::catalog::{self, Mode, RunConfig};
use pdedekind::exact::{format_literal, set_max_order};
use pdedekind::sequences::{dirichlet_characters, make_sequence, PeriodicSequence};
use serde_json::json;
use thiserror::Error;

use crate::compute::ComputeArgs;
use crate::config::{check_jobs, check_max_order, check_max_terms, check_tolerance, CliConfig, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] pdedekind::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "pdedekind", version, about = "Periodic Dedekind sums and their reciprocity identities")]
struct Cli {
    /// config file; defaults to $PDEDEKIND_CONFIG
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// cap on cyclotomic orders
    #[arg(long, global = true)]
    max_order: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a sum, Bernoulli function, Gauss sum or L-value
    Compute(ComputeArgs),
    /// Run registered identities and report residuals
    Verify {
        /// glob over identity ids
        #[arg(long, default_value = "*")]
        filter: String,
        #[arg(long)]
        mode: Option<Mode>,
        /// tolerance override, `ID=VALUE`; repeatable
        #[arg(long = "tol", value_name = "ID=VALUE")]
        tol: Vec<String>,
        #[arg(long)]
        max_terms: Option<usize>,
        /// worker threads
        #[arg(long)]
        jobs: Option<usize>,
        /// report elapsed_ms as 0 so that output is reproducible byte for byte
        #[arg(long)]
        no_timing: bool,
    },
    /// Tabulate a sequence, its finite Fourier transform and its flags
    Sequence { spec: String },
    /// List registered identities
    ListIdentities,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let cfg = match &cli.config {
        Some(p) => CliConfig::load(p)?,
        None => CliConfig::from_env()?,
    };
    if let Some(m) = cli.max_order.or(cfg.max_order) {
        set_max_order(check_max_order(m)?)?;
    }
    let format = cli.format.or(cfg.format).unwrap_or_default();
    let mut out = std::io::stdout().lock();
    match cli.command {
        Command::Compute(args) => {
            let v = compute::evaluate(&args)?;
            writeln!(out, "{}", compute::render(&v, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { filter, mode, tol, max_terms, jobs, no_timing } => {
            let mut run_cfg = RunConfig { tolerances: cfg.tolerances.clone(), ..RunConfig::default() };
            for t in &tol {
                let (id, v) = t
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("--tol expects ID=VALUE, got `{t}`")))?;
                let v: f64 = v.parse().map_err(|_| CliError::Usage(format!("--tol value `{v}` is not a number")))?;
                run_cfg.tolerances.insert(id.to_string(), check_tolerance(id, v)?);
            }
            if let Some(n) = max_terms.or(cfg.max_terms) {
                run_cfg.max_terms = check_max_terms(n)?;
            }
            let reports = match jobs.or(cfg.jobs) {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(check_jobs(j)?)
                    .build()
                    .map_err(|e| CliError::Usage(format!("cannot start {j} workers: {e}")))?
                    .install(|| catalog::run_suite_with(&filter, mode, &run_cfg))?,
                None => catalog::run_suite_with(&filter, mode, &run_cfg)?,
            };
            let passed = reports.iter().filter(|r| r.pass).count();
            for r in &reports {
                let mut v = r.to_json();
                if no_timing {
                    v["elapsed_ms"] = json!(0.0);
                }
                match format {
                    Format::Json => writeln!(out, "{v}")?,
                    Format::Text => writeln!(
                        out,
                        "{} {} {} residual={} tail={:e}{}",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.id,
                        r.params,
                        v["residual"],
                        r.tail,
                        r.error.as_ref().map(|e| format!(" error={e}")).unwrap_or_default(),
                    )?,
                }
            }
            writeln!(out, "{passed}/{}", reports.len())?;
            Ok(if passed == reports.len() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Sequence { spec } => {
            let seq = make_sequence(&spec)?;
            let hat = seq.fourier_hat()?;
            let flags = sequence_flags(&seq)?;
            match format {
                Format::Json => {
                    let rows: Vec<_> = (0..seq.period() as i64)
                        .map(|n| json!({"n": n, "value": format_literal(seq.at(n)), "hat": format_literal(hat.at(n))}))
                        .collect();
                    writeln!(out, "{}", json!({"period": seq.period(), "rows": rows, "parity": flags.0, "character": flags.1}))?;
                }
                Format::Text => {
                    writeln!(out, "n\tvalue\that")?;
                    for n in 0..seq.period() as i64 {
                        writeln!(out, "{n}\t{}\t{}", format_literal(seq.at(n)), format_literal(hat.at(n)))?;
                    }
                    writeln!(out, "parity: {}", flags.0)?;
                    writeln!(out, "character: {}", flags.1)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ListIdentities => {
            for c in catalog::registry() {
                let n = c.domain().len();
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({"id": c.id, "mode": c.mode, "tolerance": c.tolerance, "instances": n,
                               "primitive_only": c.primitive_only, "title": c.title})
                    )?,
                    Format::Text => {
                        let tol = c.tolerance.map(|t| format!("{t:e}")).unwrap_or_else(|| "exact".into());
                        writeln!(out, "{:<13} {:<7} {:>6} {:>6}  {}", c.id, tol, n, if c.primitive_only { "prim" } else { "" }, c.title)?
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Parity (even, odd or neither) and, when the sequence is a Dirichlet character
/// mod its period, whether that character is primitive.
fn sequence_flags(seq: &PeriodicSequence) -> Result<(&'static str, &'static str), CliError> {
    let k = seq.period() as i64;
    let reflected: Vec<_> = (0..k).map(|n| seq.at(-n).clone()).collect();
    let parity = if reflected == seq.values() {
        "even"
    } else if reflected.iter().zip(seq.values()).all(|(r, v)| *r == -v.clone()) {
        "odd"
    } else {
        "neither"
    };
    let character = match dirichlet_characters(seq.period())?.into_iter().find(|c| c.sequence().values() == seq.values()) {
        Some(c) if c.is_primitive() => "primitive",
        Some(_) => "imprimitive",
        None => "none",
    };
    Ok((parity, character))
}
