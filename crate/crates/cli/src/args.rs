use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flatdisk::projection::ProjectionMode;

#[derive(Debug, Parser)]
#[command(
    name = "flatdisk",
    version,
    about = "Two-sided flat disk map projection"
)]
pub struct Cli {
    /// Radial profile used by `stress`, `project` and `render map`.
    #[arg(long, global = true, value_enum)]
    pub mode: Option<Mode>,

    /// Quadrature grid size for `stress` (even, at least 16).
    #[arg(long, global = true, default_value_t = 1024)]
    pub grid: usize,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Ggv,
    StressMinimal,
}

impl From<Mode> for ProjectionMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Ggv => ProjectionMode::Ggv,
            Mode::StressMinimal => ProjectionMode::StressMinimal,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed form and stresses at one colatitude, in degrees.
    Eval {
        #[arg(allow_negative_numbers = true)]
        theta_deg: f64,
    },
    /// Minimize the discretized stress on n intervals and write the profile.
    Solve { n: usize },
    /// Total stress of a mode or of a profile file.
    Stress(StressArgs),
    /// Project lat,lon lines from stdin to r,phi,side (or back with --inverse).
    Project {
        #[arg(long)]
        inverse: bool,
    },
    /// Draw SVG figures.
    #[command(subcommand)]
    Render(RenderCommand),
}

#[derive(Debug, Args)]
pub struct StressArgs {
    /// Profile file written by `solve`.
    #[arg(long, conflicts_with = "mode")]
    pub profile: Option<PathBuf>,

    /// Print the stress of both modes and their difference.
    #[arg(long, conflicts_with = "profile")]
    pub compare: bool,
}

#[derive(Debug, Subcommand)]
pub enum RenderCommand {
    /// Both faces of the disk with graticule and coastlines.
    Map {
        #[arg(long)]
        geojson: PathBuf,
        #[arg(long, default_value_t = 15)]
        graticule: u32,
        #[arg(long, default_value_t = 800)]
        size: u32,
    },
    /// The radial profile against its chord.
    Profile {
        #[arg(long, default_value_t = 600)]
        size: u32,
    },
}
