use std::fs;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::config::{Command, GraphArgs, OutputFormat, RunConfig};
use super::fixtures::{emit_fixture, fixture};
use super::report::{Cell, ReportDocument, Section};
use crate::cycles::{distances_to_set, level_sets, mst_gauge, omega};
use crate::defaults::{self, geometric_grid, grid_points};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, parse_potential_override, validate, PeriodicGraphSpec};
use crate::spectrum::{band_structure_with, band_width_bounds, gauge_equivalence_check, KGrid};
use crate::sweep::{eigenvector_decay_check, lower_bound_total_bandwidth, sweep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Result of [`run`]: the exit status, the structured report, and its
/// rendering in the requested format.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: ReportDocument,
    pub rendered: String,
    /// Message for stderr when the command failed.
    pub error: Option<String>,
}

/// Reads a graph from a JSON file, or from `fixture:<name>`, and applies an
/// optional potential override file.
pub fn load_graph(args: &GraphArgs) -> Result<PeriodicGraphSpec> {
    let spec = match args.graph.strip_prefix("fixture:") {
        Some(name) => fixture(name)?,
        None => parse_graph(&fs::read_to_string(&args.graph)?)?,
    };
    match &args.potential {
        Some(path) => parse_potential_override(&spec, &fs::read_to_string(path)?),
        None => Ok(spec),
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Csv(_) => EXIT_IO,
        Error::Malformed(_)
        | Error::DuplicateVertex(_)
        | Error::UnknownVertex { .. }
        | Error::IndexLength { .. }
        | Error::UnmatchedEndpoint(_)
        | Error::AmbiguousRepresentative(..)
        | Error::Disconnected => EXIT_VALIDATION,
        Error::InvalidArgument(_)
        | Error::UnknownFixture(_)
        | Error::NotAPotentialValue(_)
        | Error::MomentumDimension { .. }
        | Error::GridTooSmall(_)
        | Error::BandOutOfRange { .. }
        | Error::EmptySourceSet
        | Error::NotAdjacent(..) => EXIT_USAGE,
        Error::NoNontrivialCycle
        | Error::NotHermitian(_)
        | Error::BudgetExceeded { .. }
        | Error::ClusterOverlap { .. }
        | Error::NonPositiveWidth { .. }
        | Error::TooFewPoints { .. } => EXIT_NUMERIC,
    }
}

/// Executes one command. Never panics on bad input; failures are reported
/// through the exit code and `error`.
pub fn run(config: &RunConfig) -> RunOutcome {
    let mut report = ReportDocument::default();
    let (exit_code, error) = match dispatch(config, &mut report) {
        Ok(code) => (code, None),
        Err(e) => (exit_code(&e), Some(e.to_string())),
    };
    let rendered = match (&config.command, config.format) {
        (Command::Fixture { name }, _) if exit_code == EXIT_OK => emit_fixture(name).unwrap_or_default(),
        (_, OutputFormat::Text) => report.to_string(),
        (_, OutputFormat::Csv) => match report.to_csv() {
            Ok(s) => s,
            Err(e) => {
                return RunOutcome {
                    exit_code: EXIT_IO,
                    report,
                    rendered: String::new(),
                    error: Some(e.to_string()),
                }
            }
        },
    };
    RunOutcome {
        exit_code,
        report,
        rendered,
        error,
    }
}

fn check_config(config: &RunConfig) -> Result<()> {
    if config.budget.is_nan() || config.budget <= 0.0 {
        return Err(Error::InvalidArgument(format!("budget {} must be positive", config.budget)));
    }
    let positive = |name: &str, x: f64| {
        if x > 0.0 && x.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{name} {x} must be positive")))
        }
    };
    match &config.command {
        Command::Bands { mu, .. } | Command::Bound { mu, .. } => positive("--mu", *mu)?,
        Command::Sweep {
            mu_min, mu_max, points, ..
        } => {
            positive("--mu-min", *mu_min)?;
            positive("--mu-max", *mu_max)?;
            if mu_max <= mu_min {
                return Err(Error::InvalidArgument("--mu-max must exceed --mu-min".into()));
            }
            if *points < 4 {
                return Err(Error::InvalidArgument("--points must be at least 4".into()));
            }
        }
        Command::Decay { mus: Some(mus), .. } => {
            for &mu in mus {
                positive("--mus entry", mu)?;
            }
        }
        _ => {}
    }
    Ok(())
}

fn grid_for(spec: &PeriodicGraphSpec, grid: Option<usize>, budget: f64) -> Result<usize> {
    let n = grid.unwrap_or_else(|| grid_points(spec.dimension()));
    let cost = KGrid::new(n, spec.dimension())?.cost(spec.vertex_count());
    if cost > budget {
        return Err(Error::BudgetExceeded { cost, budget });
    }
    Ok(n)
}

fn dispatch(config: &RunConfig, report: &mut ReportDocument) -> Result<i32> {
    check_config(config)?;
    let mut echo = vec![("command", Cell::from(config.command.name()))];

    let graph_args = match &config.command {
        Command::Fixture { name } => {
            fixture(name)?;
            return Ok(EXIT_OK);
        }
        Command::Validate(g) | Command::Omega(g) => g,
        Command::Bands { graph, .. }
        | Command::Sweep { graph, .. }
        | Command::Decay { graph, .. }
        | Command::Bound { graph, .. } => graph,
    };
    echo.push(("graph", graph_args.graph.as_str().into()));
    if let Some(p) = &graph_args.potential {
        echo.push(("potential_override", p.display().to_string().into()));
    }
    let spec = load_graph(graph_args)?;
    echo.push(("dimension", spec.dimension().into()));
    echo.push(("vertices", spec.vertex_count().into()));
    echo.push(("edges", spec.edges().len().into()));
    echo.push(("potential", join(spec.potential()).into()));

    let validation = validate(&spec);
    let code = if validation.ok() {
        if matches!(config.command, Command::Validate(_)) {
            let mut s = Section::new("validation", &["status", "violation"]);
            s.push(vec!["ok".into(), "".into()]);
            report.push(s);
            EXIT_OK
        } else {
            command(config, &spec, report, &mut echo)?
        }
    } else {
        let mut s = Section::new("validation", &["status", "violation"]);
        for v in &validation.violations {
            s.push(vec!["fail".into(), v.to_string().into()]);
        }
        report.push(s);
        EXIT_VALIDATION
    };

    echo.push(("budget", config.budget.into()));
    echo.push(("merge_tolerance", defaults::MERGE_TOLERANCE.into()));
    echo.push(("hermitian_tolerance", defaults::HERMITIAN_TOLERANCE.into()));
    echo.push(("flat_width", defaults::FLAT_WIDTH.into()));
    let mut s = Section::new("config", &["key", "value"]);
    for (k, v) in echo {
        s.push(vec![k.into(), v]);
    }
    report.push(s);
    Ok(code)
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn vertex_list(vs: &[usize]) -> String {
    vs.iter().map(|v| format!("v{}", v + 1)).collect::<Vec<_>>().join(" ")
}

fn command(
    config: &RunConfig,
    spec: &PeriodicGraphSpec,
    report: &mut ReportDocument,
    echo: &mut Vec<(&'static str, Cell)>,
) -> Result<i32> {
    match &config.command {
        Command::Validate(_) | Command::Fixture { .. } => unreachable!(),
        Command::Omega(_) => {
            let r = omega(spec)?;
            let mut table = Section::new("omega", &["a", "vertices", "omega_a"]);
            for v in &r.per_value {
                table.push(vec![v.value.into(), vertex_list(&v.vertices).into(), v.omega.into()]);
            }
            report.push(table);

            let mut summary = Section::new(
                "summary",
                &["omega", "gamma", "n_gamma_plus", "n_gamma_plus_oriented"],
            );
            summary.push(vec![
                r.omega.into(),
                r.gamma.into(),
                r.n_gamma_plus.into(),
                r.n_gamma_plus_oriented().into(),
            ]);
            report.push(summary);

            let mut dist = Section::new("distances", &["a", "vertex", "distance"]);
            for level in level_sets(spec) {
                for (v, d) in distances_to_set(spec, &level.vertices)?.into_iter().enumerate() {
                    dist.push(vec![level.value.into(), format!("v{}", v + 1).into(), d.into()]);
                }
            }
            report.push(dist);
            Ok(EXIT_OK)
        }
        Command::Bands {
            mu,
            grid,
            gauge,
            dump_dispersion,
            ..
        } => {
            let n = grid_for(spec, *grid, config.budget)?;
            echo.push(("mu", (*mu).into()));
            echo.push(("grid", n.into()));
            let form = match gauge {
                Some(a) => {
                    echo.push(("gauge", (*a).into()));
                    mst_gauge(spec, *a)?.form
                }
                None => spec.one_form(),
            };
            let bs = band_structure_with(spec, &form, *mu, n, config.budget)?;
            let bounds = band_width_bounds(spec, *mu, n)?;
            let mut table = Section::new("bands", &["j", "lower", "upper", "width", "width_bound"]);
            for (j, (b, bound)) in bs.bands.iter().zip(&bounds).enumerate() {
                table.push(vec![
                    (j + 1).into(),
                    b.lower.into(),
                    b.upper.into(),
                    b.width().into(),
                    (*bound).into(),
                ]);
            }
            report.push(table);

            let m = bs.measure();
            let mut union = Section::new("spectrum", &["lower", "upper"]);
            for iv in m.union.intervals() {
                union.push(vec![iv.lo.into(), iv.hi.into()]);
            }
            report.push(union);
            let mut totals = Section::new("measure", &["measure", "total_bandwidth"]);
            totals.push(vec![m.measure.into(), m.total_bandwidth.into()]);
            report.push(totals);

            if gauge.is_some() {
                let mut g = Section::new("gauge", &["max_eigenvalue_discrepancy"]);
                g.push(vec![gauge_equivalence_check(spec, &form, *mu, n)?.into()]);
                report.push(g);
            }
            if *dump_dispersion {
                let d = spec.dimension();
                let mut columns: Vec<String> = (1..=d).map(|i| format!("k{i}")).collect();
                columns.extend((1..=spec.vertex_count()).map(|j| format!("lambda{j}")));
                let mut s = Section {
                    name: "dispersion".into(),
                    columns,
                    rows: Vec::new(),
                };
                for (k, values) in bs.grid.points().zip(&bs.eigenvalues) {
                    s.push(k.iter().chain(values).map(|&x| x.into()).collect());
                }
                report.push(s);
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            mu_min,
            mu_max,
            points,
            grid,
            ..
        } => {
            let n = grid_for(spec, *grid, config.budget)?;
            let mus = geometric_grid(*mu_min, *mu_max, *points);
            echo.push(("mus", join(&mus).into()));
            echo.push(("grid", n.into()));
            let r = sweep(spec, &mus, n)?;
            let values = spec.distinct_values();

            let mut columns = vec!["mu".to_string(), "total_measure".into(), "total_bandwidth".into()];
            columns.extend(values.iter().map(|a| format!("width_a={a}")));
            let mut table = Section {
                name: "sweep".into(),
                columns,
                rows: Vec::new(),
            };
            for row in &r.rows {
                let mut cells: Vec<Cell> = vec![row.mu.into(), row.measure.into(), row.total_bandwidth.into()];
                cells.extend(row.clusters.iter().map(|c| Cell::from(c.width)));
                table.push(cells);
            }
            report.push(table);

            let mut slopes = Section::new("slopes", &["quantity", "slope", "stderr", "predicted"]);
            let predicted = |x: Option<usize>| -> Cell {
                x.map(|w| Cell::from(-(w as f64))).unwrap_or_else(|| "".into())
            };
            let (slope, stderr) = fit_cells(r.measure_fit.as_ref());
            slopes.push(vec![
                "total_measure".into(),
                slope,
                stderr,
                predicted(r.predicted.as_ref().map(|p| p.omega)),
            ]);
            for fit in &r.cluster_fits {
                let (slope, stderr) = if fit.flat {
                    ("flat".into(), "".into())
                } else {
                    fit_cells(fit.fit.as_ref())
                };
                slopes.push(vec![
                    format!("cluster a={}", fit.value).into(),
                    slope,
                    stderr,
                    predicted(r.predicted.as_ref().and_then(|p| p.omega_of(fit.value))),
                ]);
            }
            report.push(slopes);
            Ok(EXIT_OK)
        }
        Command::Decay {
            value,
            mus,
            k,
            random_k,
            seed,
            ..
        } => {
            let d = spec.dimension();
            let k = match (k, random_k) {
                (Some(k), _) => k.clone(),
                (None, true) => {
                    let mut rng = StdRng::seed_from_u64(*seed);
                    (0..d).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect()
                }
                (None, false) => defaults::generic_k(d),
            };
            let mus = mus.clone().unwrap_or_else(|| defaults::DECAY_MUS.to_vec());
            echo.push(("value", (*value).into()));
            echo.push(("k", join(&k).into()));
            echo.push(("mus", join(&mus).into()));
            if *random_k {
                echo.push(("seed", (*seed as i64).into()));
            }
            let r = eigenvector_decay_check(spec, *value, &k, &mus)?;
            let mut columns = vec!["vertex".to_string(), "target".into(), "exponent".into()];
            columns.extend(mus.iter().map(|mu| format!("amplitude_mu={mu}")));
            let mut table = Section {
                name: "decay".into(),
                columns,
                rows: Vec::new(),
            };
            for v in &r.vertices {
                let mut cells: Vec<Cell> = vec![
                    format!("v{}", v.vertex + 1).into(),
                    v.target.into(),
                    if v.exponent.is_finite() {
                        v.exponent.into()
                    } else {
                        "inf".into()
                    },
                ];
                cells.extend(v.amplitudes.iter().map(|&x| Cell::from(x)));
                table.push(cells);
            }
            report.push(table);
            Ok(EXIT_OK)
        }
        Command::Bound { mu, grid, .. } => {
            let n = grid_for(spec, *grid, config.budget)?;
            echo.push(("mu", (*mu).into()));
            echo.push(("grid", n.into()));
            let r = lower_bound_total_bandwidth(spec, *mu, n)?;
            let mut table = Section::new(
                "bound",
                &[
                    "mu",
                    "q",
                    "kappa",
                    "gamma",
                    "n_gamma_plus",
                    "bound",
                    "measured_total_bandwidth",
                    "pass",
                    "n_gamma_plus_oriented",
                    "bound_oriented",
                    "pass_oriented",
                ],
            );
            table.push(vec![
                r.mu.into(),
                r.q.into(),
                r.kappa.into(),
                r.gamma.into(),
                r.n_gamma_plus.into(),
                r.bound.into(),
                r.measured_total_bandwidth.into(),
                r.pass.into(),
                (2 * r.n_gamma_plus).into(),
                r.bound_oriented.into(),
                r.pass_oriented.into(),
            ]);
            report.push(table);
            Ok(if r.pass { EXIT_OK } else { EXIT_NUMERIC })
        }
    }
}

fn fit_cells(fit: Option<&crate::sweep::DecayFit>) -> (Cell, Cell) {
    match fit {
        Some(f) => (f.slope.into(), f.stderr.into()),
        None => ("".into(), "".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> RunOutcome {
        let mut argv = vec!["perispec"];
        argv.extend_from_slice(args);
        run(&RunConfig::try_parse_from(argv).unwrap())
    }

    #[test]
    fn omega_on_bundled_fixture() {
        let out = run_args(&["omega", "fixture:fig1"]);
        assert_eq!(out.exit_code, EXIT_OK);
        let s = out.report.section("summary").unwrap();
        assert_eq!(s.rows[0][0], Cell::Int(2));
        assert_eq!(s.rows[0][1], Cell::Int(3));
        assert_eq!(out.report.sections.last().unwrap().name, "config");
    }

    #[test]
    fn validation_failure_exits_two() {
        let out = run_args(&["omega", "fixture:fig1-no-v4v2"]);
        assert_eq!(out.exit_code, EXIT_VALIDATION);
        assert!(out.rendered.contains("rank 1"));
    }

    #[test]
    fn missing_file_exits_four() {
        let out = run_args(&["validate", "/nonexistent/graph.json"]);
        assert_eq!(out.exit_code, EXIT_IO);
    }

    #[test]
    fn nonpositive_mu_is_usage_error() {
        let out = run_args(&["bands", "fixture:fig1", "--mu", "0"]);
        assert_eq!(out.exit_code, EXIT_USAGE);
    }

    #[test]
    fn budget_flag_caps_work() {
        let out = run_args(&["bands", "fixture:fig1", "--mu", "1", "--budget", "100"]);
        assert_eq!(out.exit_code, EXIT_NUMERIC);
    }

    #[test]
    fn fixture_command_emits_json() {
        let out = run_args(&["fixture", "zline3"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert!(parse_graph(&out.rendered).is_ok());
        assert_eq!(run_args(&["fixture", "nope"]).exit_code, EXIT_USAGE);
    }
}
