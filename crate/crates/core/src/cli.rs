//! The `spectral-fence` command line.
//!
//! Exit codes: 0 success, 1 valid run without a verified result, 2 input or
//! usage error, 3 eigensolver did not converge, 4 an inclusion invariant
//! was violated.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::certificate::{certify_any_partition, corollary_certificate};
use crate::eigen::{eigenvalues, Spectrum, SWEEPS_PER_DIM};
use crate::error::{Error, Result};
use crate::io::{membership_json, parse_matrix, parse_partition, Areas, FormatHint, Report};
use crate::matrix::{enumerate_partitions, ComplexMatrix, IndexPartition};
use crate::raster::{
    area, bounding_box, emit, is_subset, rasterize, write_svg, GridSpec, ImageFormat, Overlay, SvgLayer,
};
use crate::regions::{RegionKind, Regions};
use crate::sample::{box_point, unit_disk_matrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNVERIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

/// Largest dimension for which every partition is enumerated.
pub const MAX_PARTITION_DIM: usize = 16;
/// Random points per partition in `check`.
pub const CHECK_SAMPLES: usize = 2000;
/// Loosening passed to [`Regions::in_e_loose`] for eigenvalues that miss `E` exactly.
pub const BOUNDARY_ETA: f64 = 1e-9;
/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "SPECTRAL_FENCE_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "spectral-fence",
    version,
    about = "Eigenvalue inclusion regions with exclusion sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the spectrum and print it as a JSON report.
    Eigs(CommandConfig),
    /// Verify that every eigenvalue lies in E and that E is inside G.
    Check(CommandConfig),
    /// Rasterize G and E and write PGM/SVG/CSV files.
    Raster(CommandConfig),
    /// Search for a nonsingularity certificate.
    Nonsingular(CommandConfig),
    /// Compare the area of E over every partition.
    Partitions(CommandConfig),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pgm,
    Csv,
    Svg,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct CommandConfig {
    /// Matrix file (dense text or Matrix Market).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Alpha index set, 1-based and comma separated, e.g. "1,3".
    #[arg(long)]
    pub alpha: Option<String>,
    /// Use every partition.
    #[arg(long)]
    pub all_partitions: bool,
    #[arg(long, default_value_t = crate::raster::DEFAULT_RESOLUTION)]
    pub resolution: usize,
    #[arg(long, default_value_t = crate::raster::DEFAULT_PAD)]
    pub pad: f64,
    #[arg(long, default_value_t = crate::eigen::DEFAULT_TOL)]
    pub tol: f64,
    /// Directory for reports and images.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Build the regions from the transpose (column sums) while keeping the spectrum of A.
    #[arg(long)]
    pub transpose: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = OutputFormat::All)]
    pub format: OutputFormat,
    /// Print the JSON report on standard output instead of the summary.
    #[arg(long)]
    pub json: bool,
    /// `check` only: test this many random matrices instead of a file.
    #[arg(long)]
    pub random_batch: Option<usize>,
    /// Dimension of the random matrices.
    #[arg(long, default_value_t = 6)]
    pub dim: usize,
}

impl CommandConfig {
    fn validate(&self) -> Result<()> {
        if self.resolution < 2 {
            return Err(Error::InvalidArgument("--resolution must be at least 2".into()));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidArgument("--tol must be positive".into()));
        }
        if !self.pad.is_finite() || self.pad < 0.0 {
            return Err(Error::InvalidArgument("--pad must be a nonnegative number".into()));
        }
        if self.alpha.is_some() && self.all_partitions {
            return Err(Error::InvalidArgument(
                "--alpha and --all-partitions exclude each other".into(),
            ));
        }
        Ok(())
    }
}

/// A loaded matrix together with the matrix the regions are built from.
struct Problem {
    name: String,
    matrix: ComplexMatrix,
    region_matrix: ComplexMatrix,
}

impl Problem {
    fn load(cfg: &CommandConfig) -> Result<Self> {
        let path = cfg
            .matrix
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("--matrix is required".into()))?;
        let bytes = fs::read(path)?;
        let doc = parse_matrix(&bytes, FormatHint::Auto)?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "matrix".into());
        Ok(Self::new(name, doc.matrix, cfg.transpose))
    }

    fn new(name: String, matrix: ComplexMatrix, transpose: bool) -> Self {
        let region_matrix = if transpose { matrix.transpose() } else { matrix.clone() };
        Self {
            name,
            matrix,
            region_matrix,
        }
    }

    fn n(&self) -> usize {
        self.matrix.dim()
    }
}

/// Result of one command: exit code, terminal summary and JSON report.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub summary: String,
    pub report: Report,
    /// File name of the report inside `--out`.
    pub report_file: &'static str,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    run_command(&cli.command, stdout, stderr)
}

fn configure_threads() {
    if let Some(k) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        if k > 0 {
            // Already initialised pools keep their size.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
}

pub fn run_command(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let (cfg, outcome) = match command {
        Command::Eigs(c) => (c, cmd_eigs(c)),
        Command::Check(c) => (c, cmd_check(c)),
        Command::Raster(c) => (c, cmd_raster(c)),
        Command::Nonsingular(c) => (c, cmd_nonsingular(c)),
        Command::Partitions(c) => (c, cmd_partitions(c)),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let json = outcome.report.to_json();
    if let Err(e) = write_report(&cfg.out, outcome.report_file, &json) {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    let printed = if cfg.json || matches!(command, Command::Eigs(_)) {
        stdout.write_all(&json).and_then(|_| stdout.write_all(b"\n"))
    } else {
        stdout.write_all(outcome.summary.as_bytes())
    };
    if let Err(e) = printed {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}

fn write_report(dir: &Path, file: &str, json: &[u8]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut f = fs::File::create(dir.join(file))?;
    f.write_all(json)?;
    f.write_all(b"\n")?;
    Ok(())
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn complex_text(z: Complex64) -> String {
    crate::io::format_complex(Complex64::new(round_for_display(z.re), round_for_display(z.im)))
}

fn round_for_display(x: f64) -> f64 {
    (x * 1e6).round() / 1e6 + 0.0
}

fn solve(problem: &Problem, cfg: &CommandConfig) -> Result<Spectrum> {
    eigenvalues(&problem.matrix, cfg.tol, SWEEPS_PER_DIM * problem.n())
}

fn partitions_for(cfg: &CommandConfig, n: usize) -> Result<Vec<IndexPartition>> {
    match &cfg.alpha {
        Some(text) => Ok(vec![parse_partition(text, n)?]),
        None if n <= MAX_PARTITION_DIM => Ok(enumerate_partitions(n)?.collect()),
        None => Err(Error::InvalidArgument(format!(
            "n = {n} is too large to try every partition; pass --alpha"
        ))),
    }
}

fn spectrum_extra(s: &Spectrum, a: &ComplexMatrix) -> Value {
    let trace = a.trace();
    let det = crate::eigen::determinant(a);
    json!({
        "converged": s.converged,
        "iterations": s.iterations,
        "trace": { "re": crate::io::report_number(trace.re), "im": crate::io::report_number(trace.im) },
        "determinant": { "re": crate::io::report_number(det.re), "im": crate::io::report_number(det.im) },
    })
}

pub fn cmd_eigs(cfg: &CommandConfig) -> Result<Outcome> {
    cfg.validate()?;
    let problem = Problem::load(cfg)?;
    let t0 = Instant::now();
    let spectrum = solve(&problem, cfg)?;
    let solve_ms = ms(t0);
    let mut summary = format!("{} ({}x{})\n", problem.name, problem.n(), problem.n());
    for (l, r) in spectrum.eigenvalues.iter().zip(&spectrum.residuals) {
        summary.push_str(&format!("  {:>24}  residual {:.2e}\n", complex_text(*l), r));
    }
    let code = if spectrum.converged {
        EXIT_OK
    } else {
        EXIT_NO_CONVERGENCE
    };
    Ok(Outcome {
        code,
        summary,
        report: Report {
            matrix_name: Some(problem.name.clone()),
            n: Some(problem.n()),
            extra: Some(spectrum_extra(&spectrum, &problem.matrix)),
            spectrum: Some(spectrum),
            timings_ms: Some(vec![("eigenvalues".into(), solve_ms)]),
            ..Default::default()
        },
        report_file: "eigs.json",
    })
}

/// Result of checking one matrix over a set of partitions.
struct CheckResult {
    membership: Vec<Value>,
    violations: Vec<Value>,
    checks: usize,
    /// Eigenvalues outside `E` by rounding only.
    boundary: usize,
    samples: usize,
}

fn check_problem(
    problem: &Problem,
    spectrum: &Spectrum,
    partitions: &[IndexPartition],
    cfg: &CommandConfig,
    keep_membership: bool,
) -> Result<CheckResult> {
    let bbox = bounding_box(&problem.region_matrix, cfg.pad)?;
    let per_partition: Vec<Result<CheckResult>> = partitions
        .par_iter()
        .enumerate()
        .map(|(k, part)| {
            let regions = Regions::new(&problem.region_matrix, part)?;
            let mut out = CheckResult {
                membership: Vec::new(),
                violations: Vec::new(),
                checks: 0,
                boundary: 0,
                samples: 0,
            };
            for (idx, &lambda) in spectrum.eigenvalues.iter().enumerate() {
                let rep = regions.membership_report(lambda);
                out.checks += 1;
                if !rep.in_e && regions.in_e_loose(lambda, BOUNDARY_ETA) {
                    out.boundary += 1;
                } else if !rep.in_e {
                    let excluded: Vec<Value> = rep
                        .pairs
                        .iter()
                        .filter(|p| p.in_g_ij && p.in_e_tilde && p.in_e_hat)
                        .map(|p| json!([p.i + 1, p.j + 1]))
                        .collect();
                    out.violations.push(json!({
                        "kind": "eigenvalue_outside_E",
                        "eigenvalue": idx + 1,
                        "point": { "re": crate::io::report_number(lambda.re), "im": crate::io::report_number(lambda.im) },
                        "partition": { "alpha": part.alpha_one_based(), "beta": part.beta_one_based() },
                        "excluded_pairs": excluded,
                    }));
                }
                if keep_membership {
                    let mut v = membership_json(&rep, part);
                    v.as_object_mut()
                        .expect("object")
                        .insert("eigenvalue".into(), Value::from(idx + 1));
                    out.membership.push(v);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            for _ in 0..CHECK_SAMPLES {
                let z = box_point(&mut rng, &bbox);
                out.samples += 1;
                if regions.in_e(z) && !regions.in_g(z) {
                    out.violations.push(json!({
                        "kind": "E_not_subset_of_G",
                        "point": { "re": crate::io::report_number(z.re), "im": crate::io::report_number(z.im) },
                        "partition": { "alpha": part.alpha_one_based(), "beta": part.beta_one_based() },
                    }));
                }
            }
            Ok(out)
        })
        .collect();
    let mut total = CheckResult {
        membership: Vec::new(),
        violations: Vec::new(),
        checks: 0,
        boundary: 0,
        samples: 0,
    };
    for r in per_partition {
        let r = r?;
        total.membership.extend(r.membership);
        total.violations.extend(r.violations);
        total.checks += r.checks;
        total.boundary += r.boundary;
        total.samples += r.samples;
    }
    Ok(total)
}

pub fn cmd_check(cfg: &CommandConfig) -> Result<Outcome> {
    cfg.validate()?;
    if let Some(count) = cfg.random_batch {
        return check_random_batch(cfg, count);
    }
    let problem = Problem::load(cfg)?;
    let partitions = partitions_for(cfg, problem.n())?;
    let t0 = Instant::now();
    let spectrum = solve(&problem, cfg)?;
    let solve_ms = ms(t0);
    let t1 = Instant::now();
    let result = check_problem(&problem, &spectrum, &partitions, cfg, true)?;
    let check_ms = ms(t1);

    let mut summary = format!(
        "{}: {} eigenvalue-partition checks over {} partition(s) ({} on a boundary up to rounding), {} sampled points{}\n",
        problem.name,
        result.checks,
        partitions.len(),
        result.boundary,
        result.samples,
        if cfg.transpose { " (regions of the transpose)" } else { "" }
    );
    if partitions.len() == 1 {
        for (l, m) in spectrum.eigenvalues.iter().zip(&result.membership) {
            summary.push_str(&format!(
                "  {:>24}  in_E={} in_G={}\n",
                complex_text(*l),
                m["in_E"],
                m["in_G"]
            ));
        }
    }
    let code = if !spectrum.converged {
        summary.push_str("eigensolver did not converge\n");
        EXIT_NO_CONVERGENCE
    } else if !result.violations.is_empty() {
        summary.push_str(&format!("{} violation(s):\n", result.violations.len()));
        for v in result.violations.iter().take(20) {
            summary.push_str(&format!("  {v}\n"));
        }
        EXIT_VIOLATION
    } else {
        summary.push_str("all eigenvalues lie in E and E is inside G at every sampled point\n");
        EXIT_OK
    };
    Ok(Outcome {
        code,
        summary,
        report: Report {
            matrix_name: Some(problem.name.clone()),
            n: Some(problem.n()),
            partition: (partitions.len() == 1).then(|| partitions[0].clone()),
            spectrum: Some(spectrum.clone()),
            membership: Some(result.membership),
            timings_ms: Some(vec![("eigenvalues".into(), solve_ms), ("check".into(), check_ms)]),
            extra: Some(json!({
                "transpose": cfg.transpose,
                "partitions": partitions.len(),
                "checks": result.checks,
                "boundary_eigenvalues": result.boundary,
                "boundary_eta": BOUNDARY_ETA,
                "sampled_points": result.samples,
                "violations": result.violations,
                "solver": spectrum_extra(&spectrum, &problem.matrix),
            })),
            ..Default::default()
        },
        report_file: "check.json",
    })
}

fn check_random_batch(cfg: &CommandConfig, count: usize) -> Result<Outcome> {
    if cfg.dim < 2 || cfg.dim > MAX_PARTITION_DIM {
        return Err(Error::InvalidArgument(format!(
            "--dim must be between 2 and {MAX_PARTITION_DIM}"
        )));
    }
    let t0 = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = 0;
    let mut boundary = 0;
    let mut samples = 0;
    let mut violations = Vec::new();
    let mut unconverged = 0;
    for m in 0..count {
        let matrix = unit_disk_matrix(&mut rng, cfg.dim);
        let problem = Problem::new(format!("random-{m}"), matrix, cfg.transpose);
        let spectrum = solve(&problem, cfg)?;
        if !spectrum.converged {
            unconverged += 1;
            continue;
        }
        let partitions: Vec<_> = enumerate_partitions(cfg.dim)?.collect();
        let mut sub = cfg.clone();
        sub.seed = cfg.seed.wrapping_add(m as u64 + 1);
        let r = check_problem(&problem, &spectrum, &partitions, &sub, false)?;
        checks += r.checks;
        boundary += r.boundary;
        samples += r.samples;
        for mut v in r.violations {
            v.as_object_mut()
                .expect("object")
                .insert("matrix".into(), Value::from(m));
            violations.push(v);
        }
    }
    let code = if unconverged > 0 {
        EXIT_NO_CONVERGENCE
    } else if !violations.is_empty() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    let summary = format!(
        "{count} random {d}x{d} matrices (seed {}): {checks} eigenvalue-partition checks ({boundary} on a boundary up to rounding), {samples} sampled points, {} violation(s), {unconverged} unconverged\n",
        cfg.seed,
        violations.len(),
        d = cfg.dim
    );
    Ok(Outcome {
        code,
        summary,
        report: Report {
            matrix_name: Some(format!("random batch seed {}", cfg.seed)),
            n: Some(cfg.dim),
            timings_ms: Some(vec![("total".into(), ms(t0))]),
            extra: Some(json!({
                "matrices": count,
                "checks": checks,
                "boundary_eigenvalues": boundary,
                "boundary_eta": BOUNDARY_ETA,
                "sampled_points": samples,
                "unconverged": unconverged,
                "violations": violations,
            })),
            ..Default::default()
        },
        report_file: "check.json",
    })
}

pub fn cmd_raster(cfg: &CommandConfig) -> Result<Outcome> {
    cfg.validate()?;
    let problem = Problem::load(cfg)?;
    let text = cfg
        .alpha
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("raster needs --alpha".into()))?;
    let part = parse_partition(text, problem.n())?;
    let spectrum = solve(&problem, cfg)?;
    let regions = Regions::new(&problem.region_matrix, &part)?;
    let bbox = bounding_box(&problem.region_matrix, cfg.pad)?;
    let spec = GridSpec::square(bbox, cfg.resolution)?;

    let t0 = Instant::now();
    let g = rasterize(|z| regions.in_g(z), &spec);
    let e = rasterize(|z| regions.in_e(z), &spec);
    let gersh = rasterize(|z| regions.in_gershgorin(z), &spec);
    let raster_ms = ms(t0);
    let subset = is_subset(&e, &g)?;
    let identical = e == g;
    let areas = Areas {
        g: area(&g).value,
        e: area(&e).value,
        gershgorin: area(&gersh).value,
    };

    fs::create_dir_all(&cfg.out)?;
    let mut written = Vec::new();
    let wants = |f: OutputFormat| cfg.format == f || cfg.format == OutputFormat::All;
    let overlay = Overlay {
        disks: regions
            .alpha_disks()
            .iter()
            .chain(regions.beta_disks())
            .copied()
            .collect(),
        markers: spectrum.eigenvalues.clone(),
    };
    let mut save = |name: &str, body: &dyn Fn(&mut fs::File) -> Result<usize>| -> Result<()> {
        let path = cfg.out.join(name);
        let mut f = fs::File::create(&path)?;
        body(&mut f)?;
        written.push(name.to_string());
        Ok(())
    };
    if wants(OutputFormat::Pgm) {
        save("G.pgm", &|f| emit(&g, ImageFormat::Pgm, &Overlay::default(), f))?;
        save("E.pgm", &|f| emit(&e, ImageFormat::Pgm, &Overlay::default(), f))?;
    }
    if wants(OutputFormat::Svg) {
        save("overlay.svg", &|f| {
            write_svg(
                &[
                    SvgLayer {
                        grid: &g,
                        fill: "#aab7c4",
                        label: "G",
                    },
                    SvgLayer {
                        grid: &e,
                        fill: "#1f4e79",
                        label: "E",
                    },
                ],
                &overlay,
                f,
            )
        })?;
    }
    if wants(OutputFormat::Csv) {
        save("grid.csv", &|f| emit(&e, ImageFormat::Csv, &Overlay::default(), f))?;
    }

    let disks: Vec<Value> = overlay
        .disks
        .iter()
        .map(|d| {
            let holds: Vec<usize> = spectrum
                .eigenvalues
                .iter()
                .enumerate()
                .filter(|(_, l)| d.contains(**l))
                .map(|(k, _)| k + 1)
                .collect();
            json!({
                "side": d.side.name(),
                "index": d.owner + 1,
                "center": { "re": crate::io::report_number(d.center.re), "im": crate::io::report_number(d.center.im) },
                "radius": crate::io::report_number(d.radius),
                "eigenvalues_inside": holds,
            })
        })
        .collect();

    let mut summary = format!(
        "{} {} at {}x{} on [{}, {}] x [{}, {}]\n",
        problem.name,
        part,
        cfg.resolution,
        cfg.resolution,
        round_for_display(bbox.re_min),
        round_for_display(bbox.re_max),
        round_for_display(bbox.im_min),
        round_for_display(bbox.im_max)
    );
    summary.push_str(&format!(
        "  area G = {:.6}  area E = {:.6}  difference = {:.6}  gershgorin = {:.6}\n",
        areas.g,
        areas.e,
        areas.g - areas.e,
        areas.gershgorin
    ));
    summary.push_str(&format!(
        "  E inside G: {}  E identical to G: {}\n",
        subset.holds, identical
    ));
    for d in &disks {
        summary.push_str(&format!(
            "  {} disk {}: |z - {}| <= {}  eigenvalues inside: {}\n",
            d["side"].as_str().unwrap_or(""),
            d["index"],
            complex_text(Complex64::new(
                d["center"]["re"].as_f64().unwrap_or(0.0),
                d["center"]["im"].as_f64().unwrap_or(0.0)
            )),
            round_for_display(d["radius"].as_f64().unwrap_or(0.0)),
            d["eigenvalues_inside"]
        ));
    }
    summary.push_str(&format!("  wrote {}\n", written.join(", ")));

    let code = if subset.holds { EXIT_OK } else { EXIT_VIOLATION };
    Ok(Outcome {
        code,
        summary,
        report: Report {
            matrix_name: Some(problem.name.clone()),
            n: Some(problem.n()),
            partition: Some(part),
            spectrum: Some(spectrum),
            areas: Some(areas),
            timings_ms: Some(vec![("raster".into(), raster_ms)]),
            extra: Some(json!({
                "transpose": cfg.transpose,
                "resolution": cfg.resolution,
                "bbox": [crate::io::report_number(bbox.re_min), crate::io::report_number(bbox.re_max), crate::io::report_number(bbox.im_min), crate::io::report_number(bbox.im_max)],
                "cells": { "G": g.count(), "E": e.count(), "gershgorin": gersh.count() },
                "E_subset_of_G": subset.holds,
                "subset_violations": subset.violation_count,
                "E_equals_G": identical,
                "disks": disks,
                "files": written,
            })),
            ..Default::default()
        },
        report_file: "areas.json",
    })
}

pub fn cmd_nonsingular(cfg: &CommandConfig) -> Result<Outcome> {
    cfg.validate()?;
    let problem = Problem::load(cfg)?;
    let a = &problem.region_matrix;
    let (certificate, tried, exhaustive, explanations) = match &cfg.alpha {
        Some(text) => {
            let part = parse_partition(text, problem.n())?;
            let c = corollary_certificate(a, &part)?;
            let why = c
                .first_failure()
                .map(|w| vec![(part.to_string(), w)])
                .unwrap_or_default();
            (c.nonsingular.then_some(c), 1, false, why)
        }
        None => {
            let search = certify_any_partition(a);
            let mut why = Vec::new();
            if search.certificate.is_none() {
                for part in crate::certificate::search_order(a, crate::certificate::DEFAULT_EXHAUSTIVE_LIMIT) {
                    let c = corollary_certificate(a, &part)?;
                    if let Some(w) = c.first_failure() {
                        why.push((part.to_string(), w));
                    }
                }
            }
            (search.certificate, search.candidates, search.exhaustive, why)
        }
    };

    let mut summary = String::new();
    let code = match &certificate {
        Some(c) => {
            summary.push_str(&format!(
                "{}: certified nonsingular with {}\n",
                problem.name, c.partition
            ));
            for p in &c.pairs {
                summary.push_str(&format!(
                    "  pair ({},{}): (III) by {}, (IV) by {}\n",
                    p.i + 1,
                    p.j + 1,
                    p.iii_by().map_or("-", |d| d.name()),
                    p.iv_by().map_or("-", |d| d.name())
                ));
            }
            EXIT_OK
        }
        None => {
            summary.push_str(&format!(
                "{}: no certificate found among {tried} partition(s). This does not mean the matrix is singular.\n",
                problem.name
            ));
            for (part, why) in &explanations {
                summary.push_str(&format!("  {part}: {why}\n"));
            }
            EXIT_UNVERIFIED
        }
    };
    Ok(Outcome {
        code,
        summary,
        report: Report {
            matrix_name: Some(problem.name.clone()),
            n: Some(problem.n()),
            partition: certificate.as_ref().map(|c| c.partition.clone()),
            certificate: certificate.as_ref().map(crate::io::certificate_json),
            extra: Some(json!({
                "certified": certificate.is_some(),
                "transpose": cfg.transpose,
                "partitions_tried": tried,
                "exhaustive": exhaustive,
                "failures": explanations
                    .iter()
                    .map(|(p, w)| json!({ "partition": p, "reason": w }))
                    .collect::<Vec<_>>(),
            })),
            ..Default::default()
        },
        report_file: "nonsingular.json",
    })
}

/// One row of the `partitions` table.
#[derive(Clone, Debug)]
struct AreaRow {
    index: usize,
    partition: IndexPartition,
    cells_e: usize,
    cells_g: usize,
    area_e: f64,
    area_g: f64,
    subset: bool,
}

pub fn cmd_partitions(cfg: &CommandConfig) -> Result<Outcome> {
    cfg.validate()?;
    let problem = Problem::load(cfg)?;
    let n = problem.n();
    if n > MAX_PARTITION_DIM {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds {MAX_PARTITION_DIM}; rasterize one partition with `raster --alpha`"
        )));
    }
    let bbox = bounding_box(&problem.region_matrix, cfg.pad)?;
    let spec = GridSpec::square(bbox, cfg.resolution)?;
    let t0 = Instant::now();
    let parts: Vec<IndexPartition> = enumerate_partitions(n)?.collect();
    let rows: Vec<Result<AreaRow>> = parts
        .into_par_iter()
        .enumerate()
        .map(|(index, partition)| {
            let regions = Regions::new(&problem.region_matrix, &partition)?;
            let e = rasterize(|z| regions.contains(RegionKind::E, z), &spec);
            let g = rasterize(|z| regions.contains(RegionKind::G, z), &spec);
            let (ae, ag) = (area(&e), area(&g));
            Ok(AreaRow {
                index,
                partition,
                cells_e: ae.cell_count,
                cells_g: ag.cell_count,
                area_e: ae.value,
                area_g: ag.value,
                subset: is_subset(&e, &g)?.holds,
            })
        })
        .collect();
    let mut rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    rows.sort_by(|x, y| x.cells_e.cmp(&y.cells_e).then(x.index.cmp(&y.index)));
    let elapsed = ms(t0);

    let mut summary = format!(
        "{}: area of E for {} partitions at {}x{}\n  {:<24} {:>14} {:>14}\n",
        problem.name,
        rows.len(),
        cfg.resolution,
        cfg.resolution,
        "partition",
        "area E",
        "area G"
    );
    for r in &rows {
        summary.push_str(&format!(
            "  {:<24} {:>14.6} {:>14.6}{}\n",
            r.partition.to_string(),
            r.area_e,
            r.area_g,
            if r.subset { "" } else { "  E NOT INSIDE G" }
        ));
    }
    let best = &rows[0];
    summary.push_str(&format!("smallest E: {} (area {:.6})\n", best.partition, best.area_e));

    let all_subset = rows.iter().all(|r| r.subset);
    let table: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "alpha": r.partition.alpha_one_based(),
                "beta": r.partition.beta_one_based(),
                "area_E": crate::io::report_number(r.area_e),
                "area_G": crate::io::report_number(r.area_g),
                "cells_E": r.cells_e,
                "cells_G": r.cells_g,
                "E_subset_of_G": r.subset,
            })
        })
        .collect();
    Ok(Outcome {
        code: if all_subset { EXIT_OK } else { EXIT_VIOLATION },
        summary,
        report: Report {
            matrix_name: Some(problem.name.clone()),
            n: Some(n),
            partition: Some(best.partition.clone()),
            areas: Some(Areas {
                g: best.area_g,
                e: best.area_e,
                gershgorin: area(&rasterize(
                    |z| crate::regions::in_gershgorin(&problem.region_matrix, z),
                    &spec,
                ))
                .value,
            }),
            timings_ms: Some(vec![("rasters".into(), elapsed)]),
            extra: Some(json!({ "resolution": cfg.resolution, "table": table })),
            ..Default::default()
        },
        report_file: "partitions.json",
    })
}
