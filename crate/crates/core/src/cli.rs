//! Command-line front end.
//!
//! Exit codes: 0 success, 1 violations or equality-locus failure, 2 usage or
//! configuration error. Settings resolve as flags, then `--config` file, then
//! defaults.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::catalog::{self, parse_id_list, InequalityId, WeightVector};
use crate::geom::{self, BarycentricPoint, Point2, PointQuantities, Triangle};
use crate::report::{self, Report, ResolvedConfig};
use crate::tighten::{self, SearchOptions};
use crate::verify::{self, SamplerConfig, ShapeMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "emlab",
    version,
    about = "Weighted Erdős–Mordell inequality laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Randomized nonnegativity check of catalog entries.
    Verify(RunArgs),
    /// Minimize slack and probe equality loci.
    Tighten(RunArgs),
    /// Dual-path and algebraic identity checks.
    Identities(RunArgs),
    /// List catalog entries.
    Catalog(RunArgs),
    /// Print reference quantity tables.
    Fixture,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum ShapeArg {
    Uniform,
    NearDegenerate,
    NearEquilateral,
    All,
}

impl ShapeArg {
    fn modes(self) -> Vec<ShapeMode> {
        match self {
            ShapeArg::Uniform => vec![ShapeMode::UniformAngles],
            ShapeArg::NearDegenerate => vec![ShapeMode::NearDegenerate],
            ShapeArg::NearEquilateral => vec![ShapeMode::NearEquilateral],
            ShapeArg::All => ShapeMode::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Both,
}

#[derive(Debug, Args, Default)]
struct RunArgs {
    /// JSON file with any of the flag names as keys.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma-separated ids, or ALL.
    #[arg(long)]
    ids: Option<String>,
    #[arg(long, value_enum)]
    shape: Option<ShapeArg>,
    #[arg(long = "weight-std")]
    weight_std: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    starts: Option<usize>,
    #[arg(long)]
    iters: Option<usize>,
    /// Equality-locus probes per id (tighten).
    #[arg(long)]
    probes: Option<usize>,
    /// Equality-locus probe radius (tighten).
    #[arg(long)]
    radius: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker cap; 0 picks one per core.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    samples: Option<usize>,
    seed: Option<u64>,
    ids: Option<IdsValue>,
    shape: Option<ShapeArg>,
    weight_std: Option<f64>,
    tol: Option<f64>,
    starts: Option<usize>,
    iters: Option<usize>,
    probes: Option<usize>,
    radius: Option<f64>,
    out: Option<PathBuf>,
    format: Option<Format>,
    threads: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum IdsValue {
    Text(String),
    List(Vec<String>),
}

impl IdsValue {
    fn joined(&self) -> String {
        match self {
            IdsValue::Text(s) => s.clone(),
            IdsValue::List(v) => v.join(","),
        }
    }
}

struct Resolved {
    config: ResolvedConfig,
    out: Option<PathBuf>,
    format: Format,
    threads: usize,
}

fn resolve(command: &str, args: &RunArgs) -> anyhow::Result<Resolved> {
    let file = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str::<FileConfig>(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => FileConfig::default(),
    };

    let ids_text = args
        .ids
        .clone()
        .or_else(|| file.ids.as_ref().map(IdsValue::joined));
    let ids = match ids_text {
        Some(text) => parse_id_list(&text)?,
        None => InequalityId::ALL.to_vec(),
    };

    let defaults = SamplerConfig::default();
    let shape = args.shape.or(file.shape).unwrap_or(ShapeArg::Uniform);
    let modes = shape.modes();
    let sampler = SamplerConfig {
        seed: args.seed.or(file.seed).unwrap_or(defaults.seed),
        n_samples: args.samples.or(file.samples).unwrap_or(defaults.n_samples),
        weight_log_std: args
            .weight_std
            .or(file.weight_std)
            .unwrap_or(defaults.weight_log_std),
        shape_mode: modes[0],
        tolerance_rel: args.tol.or(file.tol).unwrap_or(defaults.tolerance_rel),
        ..defaults
    };
    sampler.validate()?;

    let search = SearchOptions::default();
    let radius = args.radius.or(file.radius).unwrap_or(1e-2);
    if !(radius > 0.0 && radius.is_finite()) {
        bail!("radius must be positive, got {radius}");
    }
    Ok(Resolved {
        config: ResolvedConfig {
            command: command.to_string(),
            ids,
            sampler,
            shape_modes: modes,
            starts: args.starts.or(file.starts).unwrap_or(search.n_starts),
            iters: args.iters.or(file.iters).unwrap_or(search.max_iter),
            probes: args.probes.or(file.probes).unwrap_or(1000),
            radius,
        },
        out: args.out.clone().or(file.out),
        format: args.format.or(file.format).unwrap_or(Format::Json),
        threads: args.threads.or(file.threads).unwrap_or(0),
    })
}

fn csv_path(out: &Path) -> PathBuf {
    out.with_extension("csv")
}

fn emit(
    report: &Report,
    csv: Option<String>,
    out: Option<&Path>,
    format: Format,
) -> anyhow::Result<()> {
    let json = report::to_json(report)?;
    match (out, format) {
        (None, Format::Csv) => print!("{}", csv.unwrap_or_default()),
        (None, _) => print!("{json}"),
        (Some(path), Format::Json) => {
            fs::write(path, json).with_context(|| format!("writing {}", path.display()))?
        }
        (Some(path), Format::Csv) => fs::write(path, csv.unwrap_or_default())
            .with_context(|| format!("writing {}", path.display()))?,
        (Some(path), Format::Both) => {
            fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
            let csv_out = csv_path(path);
            let csv_out = if csv_out == path {
                path.with_extension("report.csv")
            } else {
                csv_out
            };
            fs::write(&csv_out, csv.unwrap_or_default())
                .with_context(|| format!("writing {}", csv_out.display()))?;
        }
    }
    Ok(())
}

fn run_verify(r: &Resolved) -> anyhow::Result<i32> {
    let mut suites = Vec::new();
    for &mode in &r.config.shape_modes {
        let cfg = SamplerConfig {
            shape_mode: mode,
            ..r.config.sampler
        };
        suites.push(verify::run_suite_with_threads(
            &cfg,
            &r.config.ids,
            r.threads,
        )?);
    }
    let passed = suites.iter().all(|s| s.passed());
    for s in &suites {
        for rec in s.records.iter().filter(|rec| rec.violations > 0) {
            eprintln!(
                "violation: {} ({:?}) {} samples below tolerance, worst rel_slack {:e}",
                rec.id,
                s.config.shape_mode,
                rec.violations,
                rec.worst_violation.map_or(f64::NAN, |v| v.rel_slack)
            );
        }
    }
    let csv = report::suites_to_csv(&suites)?;
    let mut report = Report::new(r.config.clone());
    report.suites = Some(suites);
    report.passed = passed;
    emit(&report, Some(csv), r.out.as_deref(), r.format)?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn run_tighten(r: &Resolved) -> anyhow::Result<i32> {
    let opts = SearchOptions {
        n_starts: r.config.starts,
        max_iter: r.config.iters,
        seed: r.config.sampler.seed,
        ..SearchOptions::default()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(r.threads)
        .build()?;
    let (results, equality) = pool.install(|| -> anyhow::Result<_> {
        let mut results = Vec::new();
        let mut equality = Vec::new();
        for &id in &r.config.ids {
            results.push(tighten::minimize_slack_with(id, &opts)?);
            equality.push(tighten::verify_equality_locus(
                id,
                r.config.radius,
                r.config.probes,
                r.config.sampler.seed,
            )?);
        }
        Ok((results, equality))
    })?;
    let tol = r.config.sampler.tolerance_rel;
    let passed =
        results.iter().all(|t| t.min_rel_slack >= -tol) && equality.iter().all(|e| e.passed);
    for e in equality.iter().filter(|e| !e.passed) {
        eprintln!(
            "equality locus failed: {} (canonical slack {:e}, {} probe failures)",
            e.id, e.canonical_slack, e.failures
        );
    }
    let csv = report::tightness_to_csv(&results, &equality)?;
    let mut report = Report::new(r.config.clone());
    report.tightness = Some(results);
    report.equality = Some(equality);
    report.passed = passed;
    emit(&report, Some(csv), r.out.as_deref(), r.format)?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}

fn run_identities(r: &Resolved) -> anyhow::Result<i32> {
    let result = verify::check_identities_with_threads(&r.config.sampler, r.threads)?;
    let csv = report::identities_to_csv(&result)?;
    let mut report = Report::new(r.config.clone());
    report.passed = result.passed;
    report.identities = Some(result);
    emit(&report, Some(csv), r.out.as_deref(), r.format)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}

fn run_catalog(r: &Resolved) -> anyhow::Result<i32> {
    let entries: Vec<_> = r.config.ids.iter().map(|id| id.entry()).collect();
    let csv = report::catalog_to_csv(&entries)?;
    let mut report = Report::new(r.config.clone());
    report.catalog = Some(entries);
    emit(&report, Some(csv), r.out.as_deref(), r.format)?;
    Ok(EXIT_OK)
}

fn quantity_table(title: &str, tri: &Triangle, p: Point2) -> anyhow::Result<String> {
    let q: PointQuantities = geom::quantities_at(tri, p)?;
    let (a, b, c) = tri.side_lengths();
    let (la, lb, lc) = geom::bisector_lengths_oracle(tri, p)?;
    let (ra, rb, rc) = geom::tangent_distance_identity(a, b, c, q.d_a, q.d_b, q.d_c);
    let [va, vb, vc] = tri.vertices();
    let mut s = String::new();
    writeln!(s, "# {title}")?;
    writeln!(
        s,
        "A = ({}, {})  B = ({}, {})  C = ({}, {})  P = ({}, {})",
        va.x, va.y, vb.x, vb.y, vc.x, vc.y, p.x, p.y
    )?;
    let rows = [
        ("a, b, c", [a, b, c]),
        ("PA, PB, PC", q.vertex_distances()),
        ("d_a, d_b, d_c", q.pedal()),
        ("l_a, l_b, l_c", q.bisectors()),
        ("l (ray oracle)", [la, lb, lc]),
        ("R_A, R_B, R_C", q.tangents()),
        ("R (side identity)", [ra, rb, rc]),
        ("alpha, beta, gamma", q.apex_angles()),
    ];
    for (name, v) in rows {
        writeln!(
            s,
            "{name:<20} {:>22.16} {:>22.16} {:>22.16}",
            v[0], v[1], v[2]
        )?;
    }
    writeln!(
        s,
        "{:<16} {:>22} {:>22} {:>22}",
        "id", "lhs", "rhs", "slack"
    )?;
    for &id in InequalityId::ALL {
        let r = catalog::evaluate(id, &q, &WeightVector::unit(), (a, b, c))?;
        writeln!(
            s,
            "{:<16} {:>22.16} {:>22.16} {:>22.16e}",
            id.as_str(),
            r.lhs,
            r.rhs,
            r.slack
        )?;
    }
    Ok(s)
}

fn run_fixture() -> anyhow::Result<i32> {
    let right = Triangle::new(
        Point2::new(0.0, 0.0),
        Point2::new(4.0, 0.0),
        Point2::new(0.0, 3.0),
    )?;
    let eq = Triangle::unit_equilateral();
    let center = BarycentricPoint::centroid().to_cartesian(&eq);
    print!(
        "{}\n{}",
        quantity_table(
            "right triangle, P = (1, 1), unit weights",
            &right,
            Point2::new(1.0, 1.0)
        )?,
        quantity_table(
            "unit equilateral triangle, P = center, unit weights",
            &eq,
            center
        )?
    );
    Ok(EXIT_OK)
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (name, args) = match &cli.command {
        Command::Verify(a) => ("verify", a),
        Command::Tighten(a) => ("tighten", a),
        Command::Identities(a) => ("identities", a),
        Command::Catalog(a) => ("catalog", a),
        Command::Fixture => {
            return match run_fixture() {
                Ok(code) => code,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    EXIT_FAILED
                }
            }
        }
    };
    let resolved = match resolve(name, args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            eprintln!("usage: emlab {name} [--ids ID,...] [--samples N] [--seed S] [--shape MODE] [--out PATH] [--format json|csv|both]");
            return EXIT_USAGE;
        }
    };
    let outcome = match &cli.command {
        Command::Verify(_) => run_verify(&resolved),
        Command::Tighten(_) => run_tighten(&resolved),
        Command::Identities(_) => run_identities(&resolved),
        Command::Catalog(_) => run_catalog(&resolved),
        Command::Fixture => unreachable!(),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}
