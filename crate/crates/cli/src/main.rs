//! `hsdim` -- dimension invariants of graded algebras from the command line.
//!
//! Subcommands: `hilbert` (monoid Hilbert function), `dim` (full dimension
//! report), `sagbi` (truncated initial algebra), `fit` (rational fit of a
//! series), `classify` (Hilbert-Serre classification), `gallery` (named
//! example reproductions), `partition` (partition numbers), and `check`
//! (seeded randomized cross-checks).
//!
//! Exit codes: 0 on success or pass, 1 when a case or check fails, 2 on
//! usage and input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::Rng;

use hsdim_core::gallery::{run_all, run_case, CaseId, GalleryParams, RunReport};
use hsdim_core::monoid::{dimension_report, DimensionReportParams, DEFAULT_MAX_ELEMENTS};
use hsdim_core::random::{random_exponent_vector, random_monoid, random_order, rng_from_seed};
use hsdim_core::sagbi::{initial_algebra_truncation, DEFAULT_MAX_PRODUCTS};
use hsdim_core::series::{
    classify_hilbert_serre, default_denominator_candidates, default_guard, fit_rational,
    partition_series, pole_order_at_one, FitOutcome,
};
use hsdim_core::text::{
    format_monomial, parse_monoid_file, parse_series_file, parse_subalgebra_file, VarTable,
};
use hsdim_core::Error;

#[derive(Parser)]
#[command(name = "hsdim", version, about = "Exact dimension invariants of graded algebras")]
struct Cli {
    /// Report format: aligned tables or stable key=value lines.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hilbert function of a monoid presentation, one
    /// coefficient per line (valid series-file input for fit/classify).
    Hilbert {
        monoid_file: PathBuf,
        /// Truncation degree N.
        #[arg(short = 'N', long, default_value_t = 60)]
        truncation: usize,
    },
    /// Krull dimension, transcendence degree, pole order and growth slope
    /// of a monomial algebra, cross-checked.
    Dim {
        monoid_file: PathBuf,
        /// Truncation for the exact rational fit.
        #[arg(short = 'N', long, default_value_t = 60)]
        truncation: usize,
        /// Truncation for the growth slope.
        #[arg(long, default_value_t = 200)]
        growth: usize,
        /// Extra denominator multiset to try first, e.g. `2,2`.
        #[arg(long)]
        denom: Option<String>,
    },
    /// Truncated initial algebra of a homogeneous subalgebra.
    Sagbi {
        subalgebra_file: PathBuf,
        /// Degree bound D.
        #[arg(short = 'D', long, default_value_t = 10)]
        degree_bound: u64,
    },
    /// Fit a coefficient series against a denominator prod (1 - t^a).
    Fit {
        series_file: PathBuf,
        /// Denominator exponent multiset, e.g. `1,1` for (1 - t)^2.
        #[arg(long)]
        denom: String,
    },
    /// Classify a coefficient series as Hilbert-Serre / not / unknown.
    Classify {
        series_file: PathBuf,
        /// Largest pole order probed by the growth test.
        #[arg(long, default_value_t = 10)]
        d_max: usize,
    },
    /// Reproduce one named example (or `all`).
    Gallery {
        /// Case id such as ex-3.2-2, or `all`.
        #[arg(default_value = "all")]
        id: String,
        /// Series truncation override.
        #[arg(short = 'N', long)]
        truncation: Option<usize>,
        /// Growth-truncation override.
        #[arg(long)]
        growth: Option<usize>,
        /// Degree-bound override for the initial-algebra cases.
        #[arg(short = 'D', long)]
        degree_bound: Option<u64>,
        /// Exponent override for the power-sum case.
        #[arg(short = 'd', long)]
        exponent: Option<u32>,
        /// Coefficient sequence override for the idealization case,
        /// comma-separated.
        #[arg(long)]
        seq: Option<String>,
    },
    /// Print the partition numbers p(0..N).
    Partition {
        #[arg(short = 'N', long, default_value_t = 60)]
        truncation: usize,
    },
    /// Seeded randomized cross-checks (pole order vs lattice rank, order
    /// laws, fit round trips).
    Check {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Number of random monomial algebras.
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let usage = err.downcast_ref::<UsageError>().is_some()
                || matches!(
                    err.downcast_ref::<Error>(),
                    Some(Error::Parse { .. } | Error::UnknownCase { .. })
                );
            if usage {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn max_elements_from_env() -> usize {
    std::env::var("HSDIM_MAX_ELEMENTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

fn max_products_from_env() -> usize {
    std::env::var("HSDIM_MAX_PRODUCTS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_PRODUCTS)
}

fn emit(format: Format, fields: &[(String, String)]) {
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (k, v) in fields {
        match format {
            Format::Human => println!("{k:width$}  {v}"),
            Format::Machine => println!("{k}={v}"),
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let max_elements = max_elements_from_env();
    match cli.command {
        Command::Hilbert {
            monoid_file,
            truncation,
        } => {
            let text = fs::read_to_string(&monoid_file)?;
            let (monoid, _) = parse_monoid_file(&text)?;
            let h = monoid.hilbert_function(truncation, max_elements)?;
            if cli.format == Format::Human {
                println!("# h_0..h_{truncation}");
            }
            for c in h.coeffs() {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dim {
            monoid_file,
            truncation,
            growth,
            denom,
        } => {
            let text = fs::read_to_string(&monoid_file)?;
            let (monoid, _) = parse_monoid_file(&text)?;
            let mut params = DimensionReportParams {
                fit_truncation: truncation,
                growth_truncation: growth,
                max_elements,
                ..Default::default()
            };
            if let Some(spec) = denom {
                params.extra_denominators.push(parse_denominator(&spec)?);
            }
            let report = dimension_report(&monoid, &params)?;
            let mut fields = vec![
                ("krull_dim".to_string(), report.krull_dim.to_string()),
                ("trdeg".to_string(), report.trdeg.to_string()),
                (
                    "pole_order".to_string(),
                    report
                        .pole_order
                        .map_or("unknown".into(), |p| p.to_string()),
                ),
                (
                    "gk_slope".to_string(),
                    format!("{:.3}", report.gk_estimate),
                ),
                ("all_equal".to_string(), report.all_equal.to_string()),
            ];
            if let Some(fit) = &report.fit {
                fields.insert(3, ("fit".to_string(), fit.to_string()));
            }
            emit(cli.format, &fields);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sagbi {
            subalgebra_file,
            degree_bound,
        } => {
            let text = fs::read_to_string(&subalgebra_file)?;
            let (subalgebra, vars) = parse_subalgebra_file(&text)?;
            let truncation =
                initial_algebra_truncation(&subalgebra, degree_bound, max_products_from_env())?;
            let fields = sagbi_fields(&truncation, &vars);
            emit(cli.format, &fields);
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit { series_file, denom } => {
            let text = fs::read_to_string(&series_file)?;
            let h = parse_series_file(&text)?;
            let denom = parse_denominator(&denom)?;
            let outcome = fit_rational(&h, &denom, default_guard(&denom))?;
            let fields = match outcome {
                FitOutcome::Fit(rs) => vec![
                    ("fit".to_string(), "exact".to_string()),
                    ("numerator".to_string(), rs.numerator_string()),
                    ("denominator".to_string(), rs.denominator_string()),
                    (
                        "pole_order".to_string(),
                        pole_order_at_one(&rs)?.to_string(),
                    ),
                ],
                FitOutcome::NoFit => vec![("fit".to_string(), "nofit".to_string())],
            };
            emit(cli.format, &fields);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { series_file, d_max } => {
            let text = fs::read_to_string(&series_file)?;
            let h = parse_series_file(&text)?;
            let cls = classify_hilbert_serre(&h, &default_denominator_candidates(None, 12), d_max);
            let mut fields = vec![("verdict".to_string(), cls.verdict.to_string())];
            fields.push((
                "pole_order".to_string(),
                cls.pole_order.map_or("unknown".into(), |p| p.to_string()),
            ));
            match &cls.fit {
                Some(rs) => {
                    fields.push(("numerator".to_string(), rs.numerator_string()));
                    fields.push(("denominator".to_string(), rs.denominator_string()));
                }
                None => {
                    fields.push(("numerator".to_string(), "none".to_string()));
                    fields.push(("denominator".to_string(), "none".to_string()));
                }
            }
            fields.push((
                "radius_estimate".to_string(),
                cls.radius
                    .map_or("not-computed".to_string(), |r| r.to_string()),
            ));
            fields.push(("evidence".to_string(), cls.evidence.clone()));
            emit(cli.format, &fields);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gallery {
            id,
            truncation,
            growth,
            degree_bound,
            exponent,
            seq,
        } => {
            let params = GalleryParams {
                series_truncation: truncation,
                growth_truncation: growth,
                degree_bound,
                exponent,
                sequence: seq.map(|s| parse_sequence(&s)).transpose()?,
                max_elements: Some(max_elements),
            };
            let reports = if id == "all" {
                run_all(&params)?
            } else {
                vec![run_case(id.parse::<CaseId>()?, &params)?]
            };
            let mut all_passed = true;
            for report in &reports {
                all_passed &= report.passed;
                print_run_report(cli.format, report);
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            match cli.format {
                Format::Human => println!("{passed}/{} cases passed", reports.len()),
                Format::Machine => println!("summary={passed}/{}", reports.len()),
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Partition { truncation } => {
            let p = partition_series(truncation);
            println!("{}", p.head_string(truncation + 1));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { seed, cases } => {
            let failures = run_checks(seed, cases, max_elements, cli.format);
            if failures == 0 {
                println!("check: all suites passed (seed {seed})");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("check: {failures} failures (seed {seed})");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn sagbi_fields(
    truncation: &hsdim_core::InitialAlgebraTruncation,
    vars: &VarTable,
) -> Vec<(String, String)> {
    let mut fields = Vec::new();
    fields.push((
        "dims".to_string(),
        truncation
            .dims
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    ));
    let gens: Vec<String> = truncation
        .new_generators
        .iter()
        .map(|g| format!("{}@{}", format_monomial(&g.monomial, vars), g.degree))
        .collect();
    fields.push(("new_generators".to_string(), gens.join(", ")));
    fields.push((
        "stabilized".to_string(),
        match truncation.stabilized_at {
            Some(s) => format!("at degree {s}"),
            None => format!("not stabilized by degree {}", truncation.degree_bound),
        },
    ));
    fields
}

fn print_run_report(format: Format, report: &RunReport) {
    match format {
        Format::Human => {
            println!(
                "case {}: {}",
                report.id,
                if report.passed { "PASS" } else { "FAIL" }
            );
            let width = report
                .fields
                .iter()
                .map(|(k, _)| k.len())
                .max()
                .unwrap_or(0);
            for (k, v) in &report.fields {
                println!("  {k:width$}  {v}");
            }
            for note in &report.notes {
                println!("  note: {note}");
            }
            for failure in &report.failures {
                println!("  mismatch: {failure}");
            }
        }
        Format::Machine => {
            println!("[{}]", report.id);
            println!("pass={}", report.passed);
            for (k, v) in &report.fields {
                println!("{k}={v}");
            }
            for note in &report.notes {
                println!("note={note}");
            }
            for failure in &report.failures {
                println!("mismatch={failure}");
            }
        }
    }
}

/// A malformed inline argument; reported with exit code 2 like any other
/// usage error.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn parse_denominator(spec: &str) -> Result<Vec<u32>, UsageError> {
    spec.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| UsageError(format!("bad denominator exponent `{t}`")))
        })
        .collect()
}

fn parse_sequence(spec: &str) -> Result<Vec<BigInt>, UsageError> {
    spec.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<BigInt>()
                .map_err(|_| UsageError(format!("bad sequence entry `{t}`")))
        })
        .collect()
}

/// The randomized cross-check suites behind `hsdim check`.
fn run_checks(seed: u64, cases: usize, max_elements: usize, format: Format) -> usize {
    let mut failures = 0usize;
    let mut rng = rng_from_seed(seed);

    // pole order must equal lattice rank on every random monomial algebra
    let mut slope_hits = 0usize;
    for i in 0..cases {
        let monoid = random_monoid(&mut rng, 4, 6, 2, 4);
        let params = DimensionReportParams {
            max_elements,
            ..Default::default()
        };
        match dimension_report(&monoid, &params) {
            Ok(report) => {
                if report.pole_order != Some(report.krull_dim) {
                    failures += 1;
                    println!(
                        "FAIL monoid case {i}: pole order {:?} vs rank {}",
                        report.pole_order, report.krull_dim
                    );
                }
                if (report.gk_estimate - report.krull_dim as f64).abs() <= 0.2 {
                    slope_hits += 1;
                }
            }
            Err(e) => {
                failures += 1;
                println!("FAIL monoid case {i}: {e}");
            }
        }
    }

    // order laws on random triples
    let mut law_violations = 0usize;
    for _ in 0..1000 {
        let vars = rng.random_range(1..=4usize);
        let ord = random_order(&mut rng, vars);
        let a = random_exponent_vector(&mut rng, vars, 6);
        let b = random_exponent_vector(&mut rng, vars, 6);
        let c = random_exponent_vector(&mut rng, vars, 6);
        let ab = ord.compare(&a, &b).expect("same dims");
        if (ab == std::cmp::Ordering::Equal) != (a == b) {
            law_violations += 1;
            continue;
        }
        let shifted = ord
            .compare(&a.add(&c).expect("dims"), &b.add(&c).expect("dims"))
            .expect("same dims");
        if ab != shifted {
            law_violations += 1;
        }
    }
    if law_violations > 0 {
        failures += 1;
        println!("FAIL order laws: {law_violations} violations");
    }

    // fits must re-expand to the series they were fitted from
    let mut fit_violations = 0usize;
    for _ in 0..200 {
        let monoid = random_monoid(&mut rng, 3, 4, 1, 3);
        let Ok(h) = monoid.hilbert_function(40, max_elements) else {
            fit_violations += 1;
            continue;
        };
        let denom: Vec<u32> = monoid.generator_degrees().iter().map(|&d| d as u32).collect();
        let guard = default_guard(&denom);
        match fit_rational(&h, &denom, guard) {
            Ok(FitOutcome::Fit(rs)) => {
                let back = rs.expand(h.truncation() - guard);
                if back[..] != h.coeffs()[..=h.truncation() - guard] {
                    fit_violations += 1;
                }
            }
            Ok(FitOutcome::NoFit) => fit_violations += 1,
            Err(_) => fit_violations += 1,
        }
    }
    if fit_violations > 0 {
        failures += 1;
        println!("FAIL fit round trips: {fit_violations} violations");
    }

    let summary = [
        ("monoid_cases".to_string(), cases.to_string()),
        ("slope_within_tolerance".to_string(), slope_hits.to_string()),
        ("order_law_samples".to_string(), "1000".to_string()),
        ("fit_samples".to_string(), "200".to_string()),
    ];
    emit(format, &summary);
    failures
}
