//! Stress-minimizing flattening of a sphere onto a two-sided disk.
//!
//! * [`closedform`] evaluates the minimizing radial function `f(θ)` and the
//!   functions its derivation passes through.
//! * [`stress`] scores any radial function by its total stretching stress.
//! * [`variational`] re-derives `f` numerically, without using the closed form.
//! * [`projection`] maps latitude/longitude onto the disk faces and back.
//! * [`geo_render`] draws maps and the profile plot as SVG.
//!
//! ```
//! use flatdisk::closedform::{eval_f, Colatitude};
//! use flatdisk::projection::{forward, inverse, GeoCoord, ProjectionMode};
//!
//! // The equator lands on a rim of radius 2 ln 2.
//! let rim = eval_f(Colatitude::EQUATOR);
//! assert!((rim - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
//!
//! let paris = GeoCoord::new(48.86, 2.35)?;
//! let d = forward(paris, ProjectionMode::StressMinimal);
//! let back = inverse(d, ProjectionMode::StressMinimal)?;
//! assert!((back.lat() - 48.86).abs() < 1e-9);
//! # Ok::<(), flatdisk::Error>(())
//! ```

pub mod closedform;
pub mod error;
pub mod geo_render;
pub mod projection;
pub mod quadrature;
mod radial;
pub mod roots;
pub mod stress;
pub mod variational;

pub use error::{Error, Result};
