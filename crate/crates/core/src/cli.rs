//! The `conegauge` command line tool.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 invalid input, 3 failed
//! diagnostic (classification disagreement or gauge axiom violation),
//! 4 descent run that did not converge.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::cone::{ConeClassification, ConeRep, DEFAULT_TOL};
use crate::descent::{solve, Termination};
use crate::gauge::{verify_gauge_axioms, AnyGauge, Gauge, GaugeReport, DEFAULT_SEED};
use crate::schema::{self, ConeSpec, SchemaError};

#[derive(Debug, Parser)]
#[command(
    name = "conegauge",
    version,
    about = "Gauge functionals and K-descent for convex cones"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a cone file and report pointedness, interior and dual generators.
    ConeCheck {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Evaluate a gauge at a point.
    GaugeEval {
        #[arg(long)]
        gauge: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Classify a point relative to -K, optionally cross-checking a gauge's sign.
    Classify {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        gauge: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Oriented distance from a point to the boundary of -K.
    Distance {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Sample a planar gauge on a grid as CSV.
    Levelset {
        #[arg(long)]
        gauge: PathBuf,
        /// "xmin,xmax,ymin,ymax,steps"
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run K-steepest descent on a built-in problem.
    Descend {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check sublinearity and sign behaviour of a gauge on random samples.
    Verify {
        #[arg(long)]
        gauge: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command prints and the exit code it ends with.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        use crate::Error::*;
        let code = match e {
            Convergence { .. } | Lp(_) | NoSample => 1,
            _ => 2,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

impl From<SchemaError> for CliError {
    fn from(e: SchemaError) -> Self {
        match e {
            SchemaError::Cone(inner) => inner.into(),
            other => Self::input(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::ConeCheck { cone, tol } => cone_check(cone, *tol),
        Command::GaugeEval { gauge, point } => gauge_eval(gauge, point),
        Command::Classify {
            cone,
            point,
            gauge,
            tol,
        } => classify(cone, point, gauge.as_deref(), *tol),
        Command::Distance { cone, point } => distance(cone, point),
        Command::Levelset { gauge, grid, out } => levelset(gauge, grid, out.as_deref()),
        Command::Descend { problem, out } => descend(problem, out.as_deref()),
        Command::Verify {
            gauge,
            samples,
            seed,
            tol,
            out,
        } => verify(gauge, *samples, *seed, *tol, out.as_deref()),
    }
}

pub fn parse_point(text: &str) -> CliResult<Vec<f64>> {
    let values: std::result::Result<Vec<f64>, _> =
        text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    match values {
        Ok(v) if !v.is_empty() && v.iter().all(|x| x.is_finite()) => Ok(v),
        _ => Err(CliError::input(format!("invalid point {text:?}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
    pub steps: usize,
}

impl Grid {
    pub fn parse(text: &str) -> CliResult<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        let bad = || {
            CliError::input(format!(
                "invalid grid {text:?}, expected xmin,xmax,ymin,ymax,steps"
            ))
        };
        if parts.len() != 5 {
            return Err(bad());
        }
        let f = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(bad)
        };
        let steps: usize = parts[4].parse().map_err(|_| bad())?;
        if steps < 2 {
            return Err(CliError::input("grid needs steps >= 2"));
        }
        Ok(Self {
            xmin: f(parts[0])?,
            xmax: f(parts[1])?,
            ymin: f(parts[2])?,
            ymax: f(parts[3])?,
            steps,
        })
    }

    fn coord(lo: f64, hi: f64, i: usize, steps: usize) -> f64 {
        if i == steps {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / (steps as f64)
        }
    }

    /// Grid nodes in row-major order: `y` outer, `x` inner.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        (0..=self.steps).flat_map(move |j| {
            let y = Self::coord(self.ymin, self.ymax, j, self.steps);
            (0..=self.steps).map(move |i| (Self::coord(self.xmin, self.xmax, i, self.steps), y))
        })
    }
}

/// Round-trip formatting with 17 significant digits.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> CliResult<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io_err =
        |e: std::io::Error| CliError::input(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn check_point_dim(cone: &ConeRep, point: &[f64]) -> CliResult<()> {
    if point.len() != cone.dim() {
        return Err(CliError::input(format!(
            "point has {} entries, cone has dim {}",
            point.len(),
            cone.dim()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct ConeCheckOutput {
    cone: ConeSpec,
    pointed: bool,
    nonempty_interior: bool,
}

fn cone_check(path: &Path, tol: f64) -> CliResult<Outcome> {
    let cone = match schema::load_cone(path) {
        Err(SchemaError::Cone(e @ (crate::Error::NotPointed | crate::Error::EmptyInterior))) => {
            return Err(CliError {
                message: e.to_string(),
                code: 3,
            })
        }
        other => other?,
    };
    let (pointed, interior) = match &cone {
        ConeRep::Polyhedral(p) => (p.is_pointed(tol)?, p.has_nonempty_interior(tol)?),
        _ => (true, true),
    };
    let out = ConeCheckOutput {
        cone: ConeSpec::from_cone(&cone),
        pointed,
        nonempty_interior: interior,
    };
    let code = if pointed && interior { 0 } else { 3 };
    Ok(Outcome {
        stdout: to_json(&out),
        code,
    })
}

#[derive(Serialize)]
struct GaugeEvalOutput {
    point: Vec<f64>,
    phi_value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    argmax_index: Option<usize>,
    label: ConeClassification,
}

fn gauge_eval(path: &Path, point: &str) -> CliResult<Outcome> {
    let gauge = schema::load_gauge(path)?;
    let point = parse_point(point)?;
    check_point_dim(gauge.cone(), &point)?;
    let (phi_value, argmax_index) = match &gauge {
        AnyGauge::Finite(g) => {
            let e = g.evaluate(&point)?;
            (e.value, Some(e.index))
        }
        AnyGauge::Oriented(g) => (g.value(&point)?, None),
    };
    let out = GaugeEvalOutput {
        label: ConeClassification::from_score(phi_value, DEFAULT_TOL),
        point,
        phi_value,
        argmax_index,
    };
    Ok(Outcome::ok(to_json(&out)))
}

#[derive(Serialize)]
struct ClassifyOutput {
    point: Vec<f64>,
    label: ConeClassification,
    dual_score: f64,
    tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gauge_label: Option<ConeClassification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn classify(
    cone_path: &Path,
    point: &str,
    gauge_path: Option<&Path>,
    tol: f64,
) -> CliResult<Outcome> {
    let cone = schema::load_cone(cone_path)?;
    let point = parse_point(point)?;
    check_point_dim(&cone, &point)?;
    let label = cone.classify_dual(&point, tol)?;
    let mut out = ClassifyOutput {
        dual_score: cone.dual_score(&point)?,
        point,
        label,
        tol,
        phi_value: None,
        gauge_label: None,
        agree: None,
    };
    if let Some(gp) = gauge_path {
        let gauge = schema::load_gauge(gp)?;
        check_point_dim(gauge.cone(), &out.point)?;
        let phi = gauge.value(&out.point)?;
        let glabel = ConeClassification::from_score(phi, tol);
        out.phi_value = Some(phi);
        out.gauge_label = Some(glabel);
        out.agree = Some(glabel == label);
    }
    let code = if out.agree == Some(false) { 3 } else { 0 };
    Ok(Outcome {
        stdout: to_json(&out),
        code,
    })
}

#[derive(Serialize)]
struct DistanceOutput {
    point: Vec<f64>,
    oriented_distance: f64,
    label: ConeClassification,
}

fn distance(cone_path: &Path, point: &str) -> CliResult<Outcome> {
    let cone = schema::load_cone(cone_path)?;
    let point = parse_point(point)?;
    check_point_dim(&cone, &point)?;
    let label = cone.classify_dual(&point, DEFAULT_TOL)?;
    let d = crate::gauge::OrientedDistanceGauge::new(cone).oriented_distance(&point)?;
    Ok(Outcome::ok(to_json(&DistanceOutput {
        point,
        oriented_distance: d,
        label,
    })))
}

/// CSV with header `x,y,phi` and `(steps + 1)^2` data rows.
pub fn levelset_csv<G: Gauge + ?Sized>(gauge: &G, grid: &Grid) -> CliResult<String> {
    let mut csv = String::from("x,y,phi\n");
    for (x, y) in grid.points() {
        let phi = gauge.value(&[x, y])?;
        csv.push_str(&format!("{},{},{}\n", fmt17(x), fmt17(y), fmt17(phi)));
    }
    Ok(csv)
}

fn levelset(gauge_path: &Path, grid: &str, out: Option<&Path>) -> CliResult<Outcome> {
    let gauge = schema::load_gauge(gauge_path)?;
    if gauge.cone().dim() != 2 {
        return Err(CliError::input(format!(
            "levelset needs a planar cone, got dim {}",
            gauge.cone().dim()
        )));
    }
    let grid = Grid::parse(grid)?;
    let csv = levelset_csv(&gauge, &grid)?;
    match out {
        Some(p) => {
            write_atomic(p, &csv)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(csv)),
    }
}

fn descend(problem_path: &Path, out: Option<&Path>) -> CliResult<Outcome> {
    let problem = schema::load_problem(problem_path)?;
    let trace = solve(
        &problem.objective,
        &problem.gauge,
        &problem.x0,
        &problem.config,
    )?;
    let json = to_json(&trace);
    let summary = format!(
        "iters={} theta={} term={}\n",
        trace.iterations(),
        fmt17(trace.final_theta()),
        trace.termination.as_str()
    );
    let stdout = match out {
        Some(p) => {
            write_atomic(p, &json)?;
            summary
        }
        None => json + &summary,
    };
    let code = if trace.termination == Termination::Converged {
        0
    } else {
        4
    };
    Ok(Outcome { stdout, code })
}

fn verify(
    gauge_path: &Path,
    samples: usize,
    seed: u64,
    tol: f64,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    if samples == 0 {
        return Err(CliError::input("--samples must be at least 1"));
    }
    let gauge = schema::load_gauge(gauge_path)?;
    let report: GaugeReport = verify_gauge_axioms(&gauge, samples, seed, tol)?;
    let json = to_json(&report);
    let code = if report.passed() { 0 } else { 3 };
    let stdout = match out {
        Some(p) => {
            write_atomic(p, &json)?;
            String::new()
        }
        None => json,
    };
    Ok(Outcome { stdout, code })
}

/// Parses `args`, runs the command and returns the process exit code,
/// writing results to stdout and errors to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_points_and_grids() {
        assert_eq!(parse_point("-1, 2.5").unwrap(), vec![-1.0, 2.5]);
        assert!(parse_point("1,,2").is_err());
        assert!(parse_point("nan").is_err());
        let g = Grid::parse("-1,1,-1,1,2").unwrap();
        let pts: Vec<_> = g.points().collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], (-1.0, -1.0));
        assert_eq!(pts[1], (0.0, -1.0));
        assert_eq!(pts[4], (0.0, 0.0));
        assert_eq!(pts[8], (1.0, 1.0));
        assert!(Grid::parse("-1,1,-1,1,1").is_err());
        assert!(Grid::parse("-1,1,-1,1").is_err());
    }

    #[test]
    fn formats_seventeen_digits() {
        assert_eq!(fmt17(-1.0), "-1.0000000000000000e0");
        assert_eq!(fmt17(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn levelset_orthant_values() {
        let g = crate::gauge::FiniteGauge::orthant(2).unwrap();
        let csv = levelset_csv(&g, &Grid::parse("-1,1,-1,1,2").unwrap()).unwrap();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 9);
        let phi = |row: &str| row.rsplit(',').next().unwrap().parse::<f64>().unwrap();
        assert_eq!(phi(rows[0]), -1.0);
        assert_eq!(phi(rows[4]), 0.0);
        assert_eq!(phi(rows[8]), 1.0);
    }
}
