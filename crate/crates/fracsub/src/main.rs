use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fracsub_core::convergence::ConvergenceReport;
use fracsub_core::spatial::Projection;
use fracsub_core::{
    cq_weights, fode_study, pde_study, Compare, CqScheme, Dimension, FractionalOrder, MassTreatment, MeshSpec,
    PdeStudy, TimeScheme,
};
use fracsub::config::{parse_mass, RunConfig};
use fracsub::report::{format_error, format_rate, write_records};
use fracsub::tables::{self, TableOptions, ToleranceProfile};
use fracsub::{checks, HarnessError, Result};

#[derive(Parser)]
#[command(name = "fracsub", version, about = "Time stepping for sub-diffusion equations with singular sources")]
struct Cli {
    /// TOML run configuration; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Convolution-quadrature weights as CSV (`j,weight`).
    Weights {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Mittag-Leffler function E_{α,β}(x).
    Ml {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Scalar test problem with solution t^ν.
    Fode {
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long = "T")]
        t: Option<f64>,
        /// Step count or comma-separated list.
        #[arg(long = "N", value_delimiter = ',')]
        n: Vec<usize>,
    },
    /// Fully discrete PDE run against the exact semidiscrete solution.
    Pde {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
        #[arg(long = "M")]
        m: Option<usize>,
        #[arg(long = "N", value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long = "T")]
        t: Option<f64>,
        /// `a`: singular source, zero initial data; `b`: indicator initial data.
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        mass: Option<String>,
    },
    /// Reproduce a published table and compare with the embedded values.
    Table {
        #[arg(long)]
        id: u8,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "strict")]
        tolerance_profile: String,
        /// Mesh comparison for the spatial tables: prolong|restrict.
        #[arg(long, default_value = "prolong")]
        compare: String,
    },
    /// Run the invariant suite.
    Check,
}

fn config_err(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

fn required<T>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| config_err(format!("missing --{name}")))
}

fn parse_scheme(s: &str) -> Result<TimeScheme> {
    TimeScheme::from_name(s).ok_or_else(|| config_err(format!("unknown scheme `{s}` (glbe|fbdf22|cbe|usbd)")))
}

fn step_list(cli: Vec<usize>, cfg: &RunConfig) -> Result<Vec<usize>> {
    let ns = if cli.is_empty() { cfg.n.as_ref().map(|n| n.to_vec()).unwrap_or_default() } else { cli };
    if ns.is_empty() {
        return Err(config_err("missing --N"));
    }
    Ok(ns)
}

fn print_report(r: &ConvergenceReport, label: &str) {
    for row in &r.rows {
        let rate = row.rate.map(format_rate).unwrap_or_else(|| "-".into());
        println!("{label}={:<6} error={} rate={rate}", row.param, format_error(row.error));
    }
    if let Some(a) = r.average_rate {
        println!("average rate {}", format_rate(a));
    }
}

fn checked(r: ConvergenceReport) -> Result<ConvergenceReport> {
    if r.valid {
        Ok(r)
    } else {
        print_report(&r, "N");
        Err(HarnessError::Numerical(fracsub_core::Error::AccuracyNotAchieved {
            routine: "time stepping",
            detail: "run aborted; partial report above",
        }))
    }
}

fn run(cli: Cli) -> Result<()> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    match cli.cmd {
        Cmd::Weights { scheme, alpha, n, csv } => {
            let s = match scheme.as_str() {
                "gl" => CqScheme::Gl,
                "fbdf2" => CqScheme::Fbdf2,
                _ => return Err(config_err(format!("unknown weight scheme `{scheme}` (gl|fbdf2)"))),
            };
            let k = cq_weights::weights(s, FractionalOrder::new(alpha)?, n);
            let sink: Box<dyn Write> = match csv {
                Some(p) => Box::new(File::create(p)?),
                None => Box::new(io::stdout().lock()),
            };
            let mut w = BufWriter::new(sink);
            writeln!(w, "j,weight")?;
            for (j, x) in k.weights().iter().enumerate().take(n + 1) {
                writeln!(w, "{j},{x:.16e}")?;
            }
            w.flush()?;
        }
        Cmd::Ml { alpha, beta, x } => {
            println!("{:.14e}", fracsub_core::mittag_leffler::ml(alpha, beta, x)?);
        }
        Cmd::Fode { scheme, alpha, nu, lambda, t, n } => {
            let scheme = parse_scheme(&required(scheme.or(cfg.scheme.clone()), "scheme")?)?;
            let alpha = required(alpha.or(cfg.alpha), "alpha")?;
            let nu = required(nu.or(cfg.nu), "nu")?;
            let lambda = lambda.or(cfg.lambda).unwrap_or(-1.0);
            let t = t.or(cfg.t).unwrap_or(1.0);
            let ns = step_list(n, &cfg)?;
            let r = checked(fode_study(scheme, alpha, nu, lambda, t, &ns)?)?;
            print_report(&r, "N");
        }
        Cmd::Pde { dim, scheme, alpha, mu, m, n, t, case, mass } => {
            let mesh_cfg = cfg.mesh.clone().unwrap_or_default();
            let dim = Dimension::from_usize(dim.or(mesh_cfg.dim).unwrap_or(1))?;
            let scheme = parse_scheme(&required(scheme.or(cfg.scheme.clone()), "scheme")?)?;
            let alpha = required(alpha.or(cfg.alpha), "alpha")?;
            let m = m.or(mesh_cfg.m).unwrap_or(tables::PDE_SUBDIVISIONS);
            let mass = match mass {
                Some(s) => parse_mass(&s)?,
                None => cfg.mass()?.unwrap_or(MassTreatment::Lumped),
            };
            let ns = step_list(n, &cfg)?;
            let case = case.or(cfg.case.clone()).unwrap_or_else(|| "a".into());
            let case_b = match case.as_str() {
                "a" => false,
                "b" => true,
                _ => return Err(config_err(format!("unknown case `{case}` (a|b)"))),
            };
            let mu = mu.or(cfg.mu);
            if !case_b && mu.is_none() && cfg.source.is_none() {
                return Err(config_err("case a needs --mu"));
            }
            let (mut source, mut u0) = tables::pde_case(dim, case_b, mu.unwrap_or(0.0))?;
            if let Some(s) = cfg.source_spec()? {
                source = s;
            }
            if let Some(i) = cfg.initial_data()? {
                u0 = i;
            }
            let study = PdeStudy {
                mesh: MeshSpec::new(dim, m)?,
                mass,
                scheme,
                alpha,
                t: t.or(cfg.t).unwrap_or(1.0),
                source,
                u0,
                projection: Projection::L2,
            };
            let r = checked(pde_study(&study, &ns)?)?;
            print_report(&r, "N");
        }
        Cmd::Table { id, out, tolerance_profile, compare } => {
            let profile = ToleranceProfile::from_name(&tolerance_profile)
                .ok_or_else(|| config_err(format!("unknown tolerance profile `{tolerance_profile}` (strict|paper)")))?;
            let compare = Compare::from_name(&compare)
                .ok_or_else(|| config_err(format!("unknown comparison `{compare}` (prolong|restrict)")))?;
            let pool = tables::thread_pool()?;
            let res = pool.install(|| tables::run_table(id, TableOptions { compare }))?;
            std::fs::create_dir_all(&out)?;
            let path = out.join(format!("table{id}.csv"));
            write_records(File::create(&path)?, &res.records())?;
            println!("wrote {}", path.display());
            let mut failed = 0;
            for c in tables::check_table(&res, profile) {
                println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.label, c.detail);
                failed += usize::from(!c.pass);
            }
            if failed > 0 {
                return Err(HarnessError::GoldenMismatch(failed));
            }
        }
        Cmd::Check => {
            let mut failed = 0;
            for c in checks::run_all() {
                println!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
                failed += usize::from(!c.pass);
            }
            if failed > 0 {
                return Err(HarnessError::CheckFailed(failed));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
