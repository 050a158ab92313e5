//! Command-line front end: analyze hypergraph files, generate families,
//! and batch-verify the bound suite.
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when any
//! applicable bound is violated.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use hyperspectra::bounds::{full_report, verify_instance, BoundId, BoundReport, Violation};
use hyperspectra::generators::{self, GeneratorSpec};
use hyperspectra::report::{AnalysisReport, InputSource};
use hyperspectra::spectral::{principal_eigenpair, SpectralOptions, SpectralResult};
use hyperspectra::Hypergraph;

#[derive(Parser)]
#[command(
    name = "hyperspectra",
    version,
    about = "Spectral radius, principal eigenvector and bound verification \
             for k-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one hypergraph file: eigenpair, principal ratio, all bounds.
    Analyze {
        /// Hypergraph file (header "k n m", then m edges of k labels each).
        file: PathBuf,
        /// Target width of the certified spectral-radius bracket.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Iteration budget for the power method.
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        /// Emit the full JSON report instead of the human-readable table.
        #[arg(long)]
        json: bool,
        /// Include the principal eigenvector in the output.
        #[arg(long)]
        eigenvector: bool,
    },
    /// Generate a hypergraph family instance and write it to a file.
    Generate {
        /// Family to generate.
        family: Family,
        /// Edge cardinality.
        #[arg(long)]
        k: Option<usize>,
        /// Vertex count (complete, random_connected).
        #[arg(long)]
        n: Option<usize>,
        /// Edge count through the center (hyperstar).
        #[arg(long)]
        t: Option<usize>,
        /// Edge count along the path (loose_path).
        #[arg(long)]
        l: Option<usize>,
        /// Total edge count (random_connected).
        #[arg(long)]
        m: Option<usize>,
        /// PRNG seed (random_connected).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path.
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Verify the bound suite over a directory of files or a seeded ensemble.
    Verify {
        /// Directory of hypergraph files (alternative to --ensemble).
        dir: Option<PathBuf>,
        /// Verify a seeded random ensemble instead of a directory.
        #[arg(long)]
        ensemble: bool,
        /// Ensemble size.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Ensemble master seed.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Edge cardinalities to cycle through, e.g. "2,3,4".
        #[arg(long, default_value = "2,3,4", value_parser = parse_kset)]
        kset: std::vec::Vec<usize>,
        /// Largest vertex count in the ensemble.
        #[arg(long, default_value_t = 12)]
        nmax: usize,
        /// Write per-instance, per-bound results as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Bracket tolerance, as in analyze.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Family {
    SingleEdge,
    Complete,
    LoosePath,
    Hyperstar,
    RandomConnected,
}

fn parse_kset(s: &str) -> Result<Vec<usize>, String> {
    let values: Result<Vec<usize>, _> = s.split(',').map(|t| t.trim().parse()).collect();
    match values {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(format!("expected comma-separated integers, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze {
            file,
            tol,
            max_iter,
            json,
            eigenvector,
        } => cmd_analyze(&file, tol, max_iter, json, eigenvector),
        Command::Generate {
            family,
            k,
            n,
            t,
            l,
            m,
            seed,
            out,
        } => cmd_generate(family, k, n, t, l, m, seed, &out),
        Command::Verify {
            dir,
            ensemble,
            count,
            seed,
            kset,
            nmax,
            csv,
            tol,
            max_iter,
        } => cmd_verify(
            dir.as_deref(),
            ensemble,
            count,
            seed,
            &kset,
            nmax,
            csv.as_deref(),
            tol,
            max_iter,
        ),
    }
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(
    file: &Path,
    tol: f64,
    max_iter: usize,
    json: bool,
    eigenvector: bool,
) -> Result<u8> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let h = Hypergraph::parse(&text).map_err(|e| anyhow!("{}: {e}", file.display()))?;
    let opts = SpectralOptions {
        tolerance: tol,
        max_iterations: max_iter,
    };
    let s = principal_eigenpair(&h, &opts).map_err(|e| anyhow!("{}: {e}", file.display()))?;
    let bounds = full_report(&h, &s);
    let violated = bounds
        .iter()
        .filter(|r| r.applicable && r.satisfied != Some(true))
        .count();
    let report = AnalysisReport::build(
        InputSource::File {
            path: file.display().to_string(),
        },
        &h,
        &s,
        bounds,
        &opts,
        eigenvector,
    );
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_human(&report));
    }
    Ok(if violated > 0 { 2 } else { 0 })
}

fn render_human(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let h = &report.hypergraph;
    let s = &report.spectral;
    match &report.input {
        InputSource::File { path } => writeln!(out, "input: {path}").unwrap(),
        InputSource::Generator { spec } => writeln!(out, "input: {}", spec.describe()).unwrap(),
    }
    writeln!(
        out,
        "hypergraph: k={} n={} m={} max_degree={} min_degree={} diameter={} regular={}",
        h.k, h.n, h.m, h.max_degree, h.min_degree, h.diameter, h.regular
    )
    .unwrap();
    writeln!(
        out,
        "rho: {}  bracket: [{}, {}]  width: {:e}",
        s.rho,
        s.rho_lower,
        s.rho_upper,
        s.rho_upper - s.rho_lower
    )
    .unwrap();
    writeln!(
        out,
        "gamma: {}  iterations: {}  residual: {:e}",
        s.gamma, s.iterations, s.residual
    )
    .unwrap();
    if let Some(x) = &s.eigenvector {
        writeln!(out, "eigenvector:").unwrap();
        for (i, v) in x.iter().enumerate() {
            writeln!(out, "  x[{}] = {v}", i + 1).unwrap();
        }
    }
    let applicable = report.bounds.iter().filter(|r| r.applicable).count();
    let satisfied = report
        .bounds
        .iter()
        .filter(|r| r.satisfied == Some(true))
        .count();
    writeln!(
        out,
        "bounds: {} total, {} applicable, {} satisfied, {} violated",
        report.bounds.len(),
        applicable,
        satisfied,
        applicable - satisfied
    )
    .unwrap();
    writeln!(
        out,
        "  {:<26}{:<8}{:<4}{:<24}{:<24}{:<11}equality",
        "bound", "target", "rel", "computed", "bound_value", "satisfied"
    )
    .unwrap();
    for r in &report.bounds {
        let fmt_opt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v}"));
        let fmt_flag = |v: Option<bool>| match v {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        writeln!(
            out,
            "  {:<26}{:<8}{:<4}{:<24}{:<24}{:<11}{}",
            r.bound_id.to_string(),
            r.quantity.as_str(),
            r.relation.as_str(),
            fmt_opt(r.target),
            fmt_opt(r.value),
            fmt_flag(r.satisfied),
            fmt_flag(r.equality),
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    family: Family,
    k: Option<usize>,
    n: Option<usize>,
    t: Option<usize>,
    l: Option<usize>,
    m: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<u8> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| anyhow!("{flag} is required for this family"))
    };
    let spec = match family {
        Family::SingleEdge => GeneratorSpec::SingleEdge { k: need(k, "--k")? },
        Family::Complete => GeneratorSpec::Complete {
            n: need(n, "--n")?,
            k: need(k, "--k")?,
        },
        Family::LoosePath => GeneratorSpec::LoosePath {
            k: need(k, "--k")?,
            edges: need(l, "--l")?,
        },
        Family::Hyperstar => GeneratorSpec::Hyperstar {
            k: need(k, "--k")?,
            t: need(t, "--t")?,
        },
        Family::RandomConnected => GeneratorSpec::RandomConnected {
            n: need(n, "--n")?,
            k: need(k, "--k")?,
            m: need(m, "--m")?,
            seed,
        },
    };
    let h = spec.build()?;
    fs::write(out, h.to_file_string()).with_context(|| format!("writing {}", out.display()))?;
    println!(
        "wrote {} (k={} n={} m={}) to {}",
        spec.describe(),
        h.k(),
        h.n(),
        h.m(),
        out.display()
    );
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifiedInstance {
    label: String,
    seed: Option<u64>,
    h: Hypergraph,
    s: SpectralResult,
    reports: Vec<BoundReport>,
    violations: Vec<Violation>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    dir: Option<&Path>,
    ensemble: bool,
    count: usize,
    seed: u64,
    kset: &[usize],
    nmax: usize,
    csv: Option<&Path>,
    tol: f64,
    max_iter: usize,
) -> Result<u8> {
    let inputs: Vec<(String, Option<u64>, Hypergraph)> = match (dir, ensemble) {
        (Some(_), true) | (None, false) => {
            bail!("pass either a directory or --ensemble (not both)")
        }
        (Some(dir), false) => load_directory(dir)?,
        (None, true) => generators::ensemble(count, seed, kset, nmax)?
            .into_iter()
            .map(|(spec, h)| (spec.describe(), spec.seed(), h))
            .collect(),
    };
    if inputs.is_empty() {
        bail!("no instances to verify");
    }

    let opts = SpectralOptions {
        tolerance: tol,
        max_iterations: max_iter,
    };
    let mut instances = Vec::with_capacity(inputs.len());
    for (label, inst_seed, h) in inputs {
        let s = principal_eigenpair(&h, &opts).map_err(|e| anyhow!("{label}: {e}"))?;
        let reports = full_report(&h, &s);
        let violations = verify_instance(&h, &s, &reports);
        instances.push(VerifiedInstance {
            label,
            seed: inst_seed,
            h,
            s,
            reports,
            violations,
        });
    }

    for (index, inst) in instances.iter().enumerate() {
        let applicable = inst.reports.iter().filter(|r| r.applicable).count();
        let status = if inst.violations.is_empty() {
            "ok".to_string()
        } else {
            format!("FAIL ({})", inst.violations.len())
        };
        println!(
            "#{index:04} {} k={} n={} m={} regular={}: {status} \
             ({applicable} applicable, {} inapplicable)",
            inst.label,
            inst.h.k(),
            inst.h.n(),
            inst.h.m(),
            inst.h.is_regular(),
            inst.reports.len() - applicable,
        );
    }

    println!();
    println!(
        "{:<26}{:>12}{:>12}{:>12}{:>14}",
        "bound", "applicable", "satisfied", "equality", "inapplicable"
    );
    for id in BoundId::ALL {
        let mut applicable = 0;
        let mut satisfied = 0;
        let mut equality = 0;
        let mut inapplicable = 0;
        for inst in &instances {
            let r = inst
                .reports
                .iter()
                .find(|r| r.bound_id == id)
                .expect("all bounds reported");
            if r.applicable {
                applicable += 1;
                if r.satisfied == Some(true) {
                    satisfied += 1;
                }
                if r.equality == Some(true) {
                    equality += 1;
                }
            } else {
                inapplicable += 1;
            }
        }
        println!(
            "{:<26}{:>12}{:>12}{:>12}{:>14}",
            id.to_string(),
            applicable,
            satisfied,
            equality,
            inapplicable
        );
    }

    if let Some(path) = csv {
        write_csv(path, &instances).with_context(|| format!("writing {}", path.display()))?;
        println!();
        println!("csv written to {}", path.display());
    }

    let total_violations: usize = instances.iter().map(|i| i.violations.len()).sum();
    println!();
    println!(
        "instances: {}, violations: {total_violations}",
        instances.len()
    );
    if total_violations > 0 {
        for (index, inst) in instances.iter().enumerate() {
            for violation in &inst.violations {
                let seed = inst.seed.map_or("-".to_string(), |s| s.to_string());
                println!(
                    "violation: instance #{index:04} ({}, seed {seed}): {}: {}",
                    inst.label, violation.check, violation.detail
                );
            }
        }
        return Ok(2);
    }
    Ok(0)
}

fn load_directory(dir: &Path) -> Result<Vec<(String, Option<u64>, Hypergraph)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading directory {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("directory {} contains no files", dir.display());
    }
    let mut out = Vec::with_capacity(paths.len());
    for path in paths {
        let text =
            fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let h = Hypergraph::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
        out.push((path.display().to_string(), None, h));
    }
    Ok(out)
}

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn write_csv(path: &Path, instances: &[VerifiedInstance]) -> Result<()> {
    let mut out = String::new();
    out.push_str(
        "instance,input,seed,k,n,m,regular,rho,gamma,bound_id,applicable,\
         satisfied,equality,value,target,slack\n",
    );
    for (index, inst) in instances.iter().enumerate() {
        for r in &inst.reports {
            let fmt_opt = |v: Option<f64>| v.map_or(String::new(), |v| format!("{v:.16e}"));
            let fmt_flag = |v: Option<bool>| match v {
                Some(true) => "true",
                Some(false) => "false",
                None => "",
            };
            writeln!(
                out,
                "{index},{},{},{},{},{},{},{:.16e},{:.16e},{},{},{},{},{},{},{}",
                csv_quote(&inst.label),
                inst.seed.map_or(String::new(), |s| s.to_string()),
                inst.h.k(),
                inst.h.n(),
                inst.h.m(),
                inst.h.is_regular(),
                inst.s.rho,
                inst.s.gamma,
                r.bound_id,
                r.applicable,
                fmt_flag(r.satisfied),
                fmt_flag(r.equality),
                fmt_opt(r.value),
                fmt_opt(r.target),
                fmt_opt(r.slack),
            )
            .unwrap();
        }
    }
    fs::write(path, out)?;
    Ok(())
}
