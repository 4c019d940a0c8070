//! Geographic coordinates to the two-sided disk and back.
//!
//! Each hemisphere goes onto its own face of a unit disk with the pole at the
//! center and the equator on the shared rim. The radius is a function of
//! colatitude only: linear for the equidistant (GGV) map, the stress-minimal
//! `f(θ)` otherwise, both normalized so the rim sits at `r = 1`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::closedform::{self, Colatitude, RIM_RADIUS};
use crate::error::{Error, Result};
use crate::roots::bisect;

/// Radius tolerance beyond the rim accepted by [`DiskPoint::new`] and [`inverse`].
pub const RIM_TOLERANCE: f64 = 1e-12;

/// Bracket width at which the inverse bisection stops.
pub const INVERSE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeoCoord {
    lat_deg: f64,
    lon_deg: f64,
}

/// Maps a longitude into `(−180, 180]`.
pub fn normalize_lon(lon_deg: f64) -> f64 {
    let mut l = lon_deg % 360.0;
    if l <= -180.0 {
        l += 360.0;
    } else if l > 180.0 {
        l -= 360.0;
    }
    l
}

impl GeoCoord {
    /// Latitude must be in `[−90, 90]`; longitude is normalized into `(−180, 180]`.
    pub fn new(lat_deg: f64, lon_deg: f64) -> Result<Self> {
        if !(-90.0..=90.0).contains(&lat_deg) {
            return Err(Error::Domain {
                what: "latitude",
                value: lat_deg,
                domain: "[-90, 90]",
            });
        }
        if !lon_deg.is_finite() {
            return Err(Error::Domain {
                what: "longitude",
                value: lon_deg,
                domain: "finite degrees",
            });
        }
        Ok(GeoCoord {
            lat_deg: lat_deg + 0.0,
            lon_deg: normalize_lon(lon_deg) + 0.0,
        })
    }

    pub fn lat(self) -> f64 {
        self.lat_deg
    }

    pub fn lon(self) -> f64 {
        self.lon_deg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    North,
    South,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::North => "N",
            Side::South => "S",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "n" | "north" => Ok(Side::North),
            "s" | "south" => Ok(Side::South),
            other => Err(Error::InvalidArgument(format!("unknown side {other:?}"))),
        }
    }
}

/// Polar position on one face of the disk (rim at `r = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    pub r: f64,
    pub phi: f64,
    pub side: Side,
}

impl DiskPoint {
    pub fn new(r: f64, phi: f64, side: Side) -> Result<Self> {
        if !(0.0..=1.0 + RIM_TOLERANCE).contains(&r) {
            return Err(Error::Domain {
                what: "r",
                value: r,
                domain: "[0, 1]",
            });
        }
        if !phi.is_finite() {
            return Err(Error::Domain {
                what: "phi",
                value: phi,
                domain: "finite radians",
            });
        }
        Ok(DiskPoint { r, phi, side })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionMode {
    /// `r ∝ θ`: azimuthal equidistant on each face.
    Ggv,
    /// `r ∝ f(θ)`: the stress-minimizing flattening.
    StressMinimal,
}

impl ProjectionMode {
    pub fn name(self) -> &'static str {
        match self {
            ProjectionMode::Ggv => "ggv",
            ProjectionMode::StressMinimal => "stress-minimal",
        }
    }

    /// Unnormalized rim radius: `π/2` or `2 ln 2`.
    pub fn rim_radius(self) -> f64 {
        match self {
            ProjectionMode::Ggv => FRAC_PI_2,
            ProjectionMode::StressMinimal => RIM_RADIUS,
        }
    }

    /// Unnormalized radial function.
    pub fn radius(self, theta: Colatitude) -> f64 {
        match self {
            ProjectionMode::Ggv => theta.radians(),
            ProjectionMode::StressMinimal => closedform::eval_f(theta),
        }
    }

    /// Disk radius in `[0, 1]` for a colatitude.
    pub fn normalized_radius(self, theta: Colatitude) -> f64 {
        (self.radius(theta) / self.rim_radius()).min(1.0)
    }

    fn radius_slope(self, theta: Colatitude) -> f64 {
        match self {
            ProjectionMode::Ggv => 1.0,
            ProjectionMode::StressMinimal => closedform::eval_f_prime(theta),
        }
    }
}

impl fmt::Display for ProjectionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProjectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ggv" => Ok(ProjectionMode::Ggv),
            "stress-minimal" | "stress_minimal" | "stressminimal" => {
                Ok(ProjectionMode::StressMinimal)
            }
            other => Err(Error::InvalidArgument(format!(
                "unknown projection mode {other:?} (expected ggv or stress-minimal)"
            ))),
        }
    }
}

/// Geographic point to disk point. The equator belongs to the North face; the
/// poles get `φ = 0`.
pub fn forward(p: GeoCoord, mode: ProjectionMode) -> DiskPoint {
    let side = if p.lat() >= 0.0 {
        Side::North
    } else {
        Side::South
    };
    let theta = Colatitude::from_latitude_deg(p.lat()).unwrap_or(Colatitude::POLE);
    let r = mode.normalized_radius(theta);
    let phi = if r == 0.0 { 0.0 } else { p.lon().to_radians() };
    DiskPoint { r, phi, side }
}

/// Disk point to geographic point; the stress-minimal radius is inverted by bisection.
pub fn inverse(d: DiskPoint, mode: ProjectionMode) -> Result<GeoCoord> {
    if !(d.r >= 0.0 && d.r <= 1.0 + RIM_TOLERANCE) {
        return Err(Error::Domain {
            what: "r",
            value: d.r,
            domain: "[0, 1]",
        });
    }
    let r = d.r.min(1.0);
    let theta = match mode {
        ProjectionMode::Ggv => r * FRAC_PI_2,
        ProjectionMode::StressMinimal => {
            let target = r * RIM_RADIUS;
            if target >= closedform::eval_f(Colatitude::EQUATOR) {
                return GeoCoord::new(0.0, normalize_lon(d.phi.to_degrees()));
            }
            bisect(
                |t| closedform::eval_f(Colatitude::new(t).unwrap_or(Colatitude::EQUATOR)) - target,
                0.0,
                FRAC_PI_2,
                INVERSE_TOLERANCE,
            )?
        }
    };
    let colat = 90.0 - theta.to_degrees();
    let lat = match d.side {
        Side::North => colat,
        Side::South => -colat,
    };
    let lon = normalize_lon(d.phi.to_degrees());
    GeoCoord::new(lat.clamp(-90.0, 90.0), lon)
}

/// Local scale factors in unnormalized disk units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFactors {
    /// Stretch along meridians, `f'(θ)`.
    pub meridian: f64,
    /// Stretch along parallels, `f(θ)/sin θ`.
    pub parallel: f64,
    pub area: f64,
}

/// Meridian, parallel and area scale at `p`; at the poles both factors take the limit `f'(0)`.
pub fn scale_factors(p: GeoCoord, mode: ProjectionMode) -> ScaleFactors {
    let theta = Colatitude::from_latitude_deg(p.lat()).unwrap_or(Colatitude::POLE);
    let meridian = mode.radius_slope(theta);
    let t = theta.radians();
    let parallel = if t == 0.0 {
        meridian
    } else {
        mode.radius(theta) / t.sin()
    };
    ScaleFactors {
        meridian,
        parallel,
        area: meridian * parallel,
    }
}

/// Wraps an angle into `(−π, π]`.
pub fn wrap_angle(a: f64) -> f64 {
    let mut x = a % (2.0 * PI);
    if x <= -PI {
        x += 2.0 * PI;
    } else if x > PI {
        x -= 2.0 * PI;
    }
    x
}
