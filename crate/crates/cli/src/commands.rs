use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;

use flatdisk::closedform::{eval_f, eval_f_prime, eval_g, eval_h, Colatitude};
use flatdisk::geo_render::{load_geojson, render_map, render_profile_plot};
use flatdisk::projection::{forward, inverse, DiskPoint, GeoCoord, ProjectionMode, Side};
use flatdisk::stress::{rho, sigma, total_stress, RadialFunction, StressReport, MIN_GRID};
use flatdisk::variational::{solve_discrete, RadialProfile, MIN_SOLVE_INTERVALS};

use crate::args::{Cli, Command, RenderCommand, StressArgs};
use crate::format::sig12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags or arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Bad input data or I/O failure; exit code 1.
    #[error("{0}")]
    Runtime(String),
}

impl From<flatdisk::Error> for CliError {
    fn from(e: flatdisk::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> CliResult {
    let mode: ProjectionMode = cli
        .mode
        .map(Into::into)
        .unwrap_or(ProjectionMode::StressMinimal);
    match &cli.command {
        Command::Eval { theta_deg } => eval(*theta_deg, cli.out.as_deref()),
        Command::Solve { n } => solve(*n, cli.out.as_deref()),
        Command::Stress(args) => stress(args, mode, cli.grid, cli.out.as_deref()),
        Command::Project { inverse } => project(*inverse, mode, cli.out.as_deref()),
        Command::Render(RenderCommand::Map {
            geojson,
            graticule,
            size,
        }) => render_map_cmd(geojson, mode, *graticule, *size, cli.out.as_deref()),
        Command::Render(RenderCommand::Profile { size }) => {
            check_size(*size)?;
            emit(cli.out.as_deref(), &render_profile_plot(*size)?.to_svg())
        }
    }
}

/// Writes to `out`, or to stdout when no path was given.
fn emit(out: Option<&Path>, text: &str) -> CliResult {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write to stdout: {e}"))),
    }
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn eval(theta_deg: f64, out: Option<&Path>) -> CliResult {
    if !(0.0..=90.0).contains(&theta_deg) {
        return Err(CliError::Usage(format!(
            "colatitude must be between 0 and 90 degrees, got {theta_deg}"
        )));
    }
    let theta = Colatitude::from_degrees(theta_deg)?;
    let star = RadialFunction::closed_form();
    let rows = [
        ("theta_deg", sig12(theta_deg)),
        ("theta_rad", sig12(theta.radians())),
        ("f", sig12(eval_f(theta))),
        ("f_prime", sig12(eval_f_prime(theta))),
        ("g", sig12(eval_g(theta))),
        ("h", sig12(eval_h(theta))),
        ("sigma", sig12(sigma(&star, theta))),
        ("rho", sig12(rho(&star, theta))),
    ];
    emit(out, &table(&rows))
}

fn solve(n: usize, out: Option<&Path>) -> CliResult {
    if n < MIN_SOLVE_INTERVALS {
        return Err(CliError::Usage(format!(
            "n must be at least {MIN_SOLVE_INTERVALS}, got {n}"
        )));
    }
    let profile = solve_discrete(n)?;
    let deviation = profile.max_abs_deviation(|t| eval_f(Colatitude::new(t).expect("grid node")));
    let summary = table(&[
        ("intervals", n.to_string()),
        ("max_deviation", sig12(deviation)),
        ("endpoint_slope", sig12(profile.endpoint_slope())),
        ("rim_value", sig12(profile.values()[n])),
    ]);
    // The summary goes to stdout unless the profile itself does.
    match out {
        Some(_) => {
            emit(out, &profile.to_text())?;
            emit(None, &summary)
        }
        None => {
            emit(None, &profile.to_text())?;
            eprint!("{summary}");
            Ok(())
        }
    }
}

fn radial_for(mode: ProjectionMode) -> RadialFunction {
    match mode {
        ProjectionMode::Ggv => RadialFunction::identity(),
        ProjectionMode::StressMinimal => RadialFunction::closed_form(),
    }
}

fn report_rows(r: &StressReport) -> [(&'static str, String); 3] {
    [
        ("total", sig12(r.total)),
        ("tangential_part", sig12(r.tangential_part)),
        ("hoop_part", sig12(r.hoop_part)),
    ]
}

fn stress(args: &StressArgs, mode: ProjectionMode, grid: usize, out: Option<&Path>) -> CliResult {
    if grid < MIN_GRID || !grid.is_multiple_of(2) {
        return Err(CliError::Usage(format!(
            "--grid must be even and at least {MIN_GRID}, got {grid}"
        )));
    }
    let mut rows: Vec<(&str, String)> = Vec::new();
    if args.compare {
        let minimal = total_stress(&radial_for(ProjectionMode::StressMinimal), grid)?;
        let ggv = total_stress(&radial_for(ProjectionMode::Ggv), grid)?;
        rows.push(("S_stress_minimal", sig12(minimal.total)));
        rows.push(("S_ggv", sig12(ggv.total)));
        rows.push(("difference", sig12(ggv.total - minimal.total)));
    } else if let Some(path) = &args.profile {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
        let profile = RadialProfile::from_text(&text)
            .and_then(|p| p.check_increasing().map(|()| p))
            .map_err(|e| CliError::Runtime(format!("{}: {e}", path.display())))?;
        let report = total_stress(&RadialFunction::from_profile(&profile), grid)?;
        rows.push(("source", path.display().to_string()));
        rows.extend(report_rows(&report));
    } else {
        let report = total_stress(&radial_for(mode), grid)?;
        rows.push(("mode", mode.to_string()));
        rows.extend(report_rows(&report));
    }
    rows.push(("grid", grid.to_string()));
    emit(out, &table(&rows))
}

fn parse_field(s: &str, what: &str, line: u64) -> CliResult<f64> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Runtime(format!("stdin line {line}: {what} {s:?} is not a number")))
}

fn project(inverse_dir: bool, mode: ProjectionMode, out: Option<&Path>) -> CliResult {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(io::stdin().lock());

    let mut text = String::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::Runtime(format!("stdin: {e}")))?;
        let line = record.position().map_or(0, |p| p.line());
        let expected = if inverse_dir { 3 } else { 2 };
        if record.len() != expected {
            return Err(CliError::Runtime(format!(
                "stdin line {line}: expected {expected} fields, got {}",
                record.len()
            )));
        }
        let at_line = |e: flatdisk::Error| CliError::Runtime(format!("stdin line {line}: {e}"));
        if inverse_dir {
            let r = parse_field(&record[0], "r", line)?;
            let phi = parse_field(&record[1], "phi", line)?;
            let side: Side = record[2].parse().map_err(|_| {
                CliError::Runtime(format!("stdin line {line}: side must be N or S"))
            })?;
            let p = inverse(
                DiskPoint::new(r, phi.to_radians(), side).map_err(at_line)?,
                mode,
            )
            .map_err(at_line)?;
            let _ = writeln!(text, "{},{}", sig12(p.lat()), sig12(p.lon()));
        } else {
            let lat = parse_field(&record[0], "lat", line)?;
            let lon = parse_field(&record[1], "lon", line)?;
            let d = forward(GeoCoord::new(lat, lon).map_err(at_line)?, mode);
            let _ = writeln!(
                text,
                "{},{},{}",
                sig12(d.r),
                sig12(d.phi.to_degrees()),
                d.side
            );
        }
    }
    emit(out, &text)
}

fn check_size(size: u32) -> CliResult {
    if size < 100 {
        return Err(CliError::Usage(format!(
            "--size must be at least 100, got {size}"
        )));
    }
    Ok(())
}

fn render_map_cmd(
    geojson: &Path,
    mode: ProjectionMode,
    graticule: u32,
    size: u32,
    out: Option<&Path>,
) -> CliResult {
    if graticule == 0 || 90 % graticule != 0 {
        return Err(CliError::Usage(format!(
            "--graticule must divide 90, got {graticule}"
        )));
    }
    check_size(size)?;
    let loaded = load_geojson(geojson).map_err(|e| match e {
        flatdisk::Error::Io { .. } => CliError::from(e),
        e => CliError::Runtime(format!("{}: {e}", geojson.display())),
    })?;
    if loaded.skipped > 0 {
        eprintln!(
            "flatdisk: warning: skipped {} feature(s) without line or polygon geometry",
            loaded.skipped
        );
    }
    // Only the file name goes into the SVG, so output doesn't depend on where it was run.
    let label = geojson
        .file_name()
        .map(|n| n.to_string_lossy().into_owned());
    let doc = render_map(&loaded.polylines, mode, graticule, size, label.as_deref())?;
    emit(out, &doc.to_svg())
}
