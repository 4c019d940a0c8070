//! Two-sided disk maps and the radial-profile plot, emitted as SVG.
//!
//! The North face is drawn on the left and the South face on the right. The
//! South face is mirrored left-to-right so that, folding the page along the
//! gutter, rim points with the same longitude land on top of each other.

mod geojson;
mod plot;
mod split;
mod svg;

pub use geojson::{load_geojson, parse_geojson, LoadedGeometry};
pub use plot::{chord_gap, chord_slope, max_chord_gap, render_profile_plot, ProfilePlot};
pub use split::{equator_crossing, split_at_equator};

use crate::error::{Error, Result};
use crate::projection::{forward, normalize_lon, DiskPoint, GeoCoord, ProjectionMode, Side};

/// Projected chord length (px) above which a segment is subdivided.
pub const DENSIFY_PX: f64 = 2.0;
/// Maximum subdivision depth per original segment.
pub const DENSIFY_MAX_DEPTH: u32 = 12;
/// Horizontal gap between the two disks.
pub const GUTTER_PX: f64 = 20.0;
/// Page margin around each disk.
pub const MARGIN_PX: f64 = 10.0;
/// Largest stroke width used; paths may extend this far past a rim.
pub const STROKE_MARGIN_PX: f64 = 1.5;

/// Ordered geographic vertices, optionally closed back to the first one.
#[derive(Debug, Clone, PartialEq)]
pub struct GeoPolyline {
    points: Vec<GeoCoord>,
    closed: bool,
}

impl GeoPolyline {
    /// Removes consecutive duplicates (and a repeated closing vertex when `closed`);
    /// at least two distinct points must remain.
    pub fn new(mut points: Vec<GeoCoord>, closed: bool) -> Result<Self> {
        points.dedup();
        if closed && points.len() > 1 && points.first() == points.last() {
            points.pop();
        }
        if points.len() < 2 {
            return Err(Error::InvalidArgument(
                "a polyline needs at least two distinct points".into(),
            ));
        }
        Ok(GeoPolyline { points, closed })
    }

    pub fn points(&self) -> &[GeoCoord] {
        &self.points
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Vertices in drawing order, with the first repeated at the end when closed.
    pub fn path_points(&self) -> Vec<GeoCoord> {
        let mut pts = self.points.clone();
        if self.closed {
            pts.push(self.points[0]);
        }
        pts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Parallel,
    Meridian,
    Coastline,
}

impl PathKind {
    pub fn class(self) -> &'static str {
        match self {
            PathKind::Parallel => "parallel",
            PathKind::Meridian => "meridian",
            PathKind::Coastline => "coast",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Circle { cx: f64, cy: f64, r: f64 },
    Polyline { points: Vec<[f64; 2]>, closed: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct StyledPath {
    pub kind: PathKind,
    /// Latitude for parallels, longitude for meridians.
    pub degrees: Option<f64>,
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Panel {
    pub side: Side,
    pub center: [f64; 2],
    pub radius: f64,
    pub paths: Vec<StyledPath>,
}

impl Panel {
    /// Page position of a disk point drawn on this panel.
    pub fn to_page(&self, d: DiskPoint) -> [f64; 2] {
        let mirror = match self.side {
            Side::North => 1.0,
            Side::South => -1.0,
        };
        let rr = self.radius * d.r;
        [
            self.center[0] + mirror * rr * d.phi.sin(),
            self.center[1] + rr * d.phi.cos(),
        ]
    }

    /// Disk point under a page position, or `None` outside the rim.
    pub fn from_page(&self, [x, y]: [f64; 2]) -> Option<DiskPoint> {
        let mirror = match self.side {
            Side::North => 1.0,
            Side::South => -1.0,
        };
        let dx = mirror * (x - self.center[0]) / self.radius;
        let dy = (y - self.center[1]) / self.radius;
        let r = dx.hypot(dy);
        if r > 1.0 {
            return None;
        }
        let phi = if r == 0.0 { 0.0 } else { dx.atan2(dy) };
        DiskPoint::new(r, phi, self.side).ok()
    }

    pub fn count(&self, kind: PathKind) -> usize {
        self.paths.iter().filter(|p| p.kind == kind).count()
    }

    /// Largest distance (px) by which any path point lies outside the rim.
    pub fn max_overshoot(&self) -> f64 {
        let [cx, cy] = self.center;
        let dist = |x: f64, y: f64| ((x - cx).powi(2) + (y - cy).powi(2)).sqrt() - self.radius;
        self.paths
            .iter()
            .map(|p| match &p.shape {
                Shape::Circle { cx: x, cy: y, r } => dist(*x, *y) + r,
                Shape::Polyline { points, .. } => points
                    .iter()
                    .map(|&[x, y]| dist(x, y))
                    .fold(f64::NEG_INFINITY, f64::max),
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MapMeta {
    pub mode: ProjectionMode,
    pub source: Option<String>,
    pub graticule_deg: u32,
    pub size_px: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MapDocument {
    pub width: f64,
    pub height: f64,
    /// North then South.
    pub panels: [Panel; 2],
    pub meta: MapMeta,
}

impl MapDocument {
    pub fn panel(&self, side: Side) -> &Panel {
        match side {
            Side::North => &self.panels[0],
            Side::South => &self.panels[1],
        }
    }

    /// Disk point under a page position on either panel.
    pub fn locate(&self, page: [f64; 2]) -> Option<DiskPoint> {
        self.panels.iter().find_map(|p| p.from_page(page))
    }

    pub fn to_svg(&self) -> String {
        svg::map_to_svg(self)
    }
}

fn midpoint(a: GeoCoord, b: GeoCoord) -> GeoCoord {
    let lon = a.lon() + 0.5 * normalize_lon(b.lon() - a.lon());
    GeoCoord::new(0.5 * (a.lat() + b.lat()), lon).expect("midpoint stays in range")
}

fn chord_px(a: DiskPoint, b: DiskPoint, radius_px: f64) -> f64 {
    let (ax, ay) = (a.r * a.phi.sin(), a.r * a.phi.cos());
    let (bx, by) = (b.r * b.phi.sin(), b.r * b.phi.cos());
    radius_px * ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt()
}

/// A vertex with its projection, so each point is projected once.
type Vertex = (GeoCoord, DiskPoint);

fn densify_segment(
    a: Vertex,
    b: Vertex,
    mode: ProjectionMode,
    radius_px: f64,
    depth: u32,
    out: &mut Vec<DiskPoint>,
) {
    if depth < DENSIFY_MAX_DEPTH && chord_px(a.1, b.1, radius_px) > DENSIFY_PX {
        let m = midpoint(a.0, b.0);
        let mid = (m, forward(m, mode));
        densify_segment(a, mid, mode, radius_px, depth + 1, out);
        densify_segment(mid, b, mode, radius_px, depth + 1, out);
    } else {
        out.push(b.1);
    }
}

/// Projects a polyline onto the unit disk, subdividing segments whose image is
/// longer than [`DENSIFY_PX`] at the given panel radius.
pub fn densify(line: &GeoPolyline, mode: ProjectionMode, radius_px: f64) -> Vec<DiskPoint> {
    let path: Vec<Vertex> = line
        .path_points()
        .into_iter()
        .map(|p| (p, forward(p, mode)))
        .collect();
    let mut out = Vec::with_capacity(path.len());
    out.push(path[0].1);
    for w in path.windows(2) {
        densify_segment(w[0], w[1], mode, radius_px, 0, &mut out);
    }
    if line.is_closed() {
        out.pop();
    }
    out
}

fn graticule(panel: &mut Panel, mode: ProjectionMode, step_deg: u32) {
    let step = step_deg as f64;
    let rings = 90 / step_deg;
    for k in 0..rings {
        let lat = k as f64 * step;
        let r = forward(GeoCoord::new(lat, 0.0).expect("graticule latitude"), mode).r;
        panel.paths.push(StyledPath {
            kind: PathKind::Parallel,
            degrees: Some(lat),
            shape: Shape::Circle {
                cx: panel.center[0],
                cy: panel.center[1],
                r: r * panel.radius,
            },
        });
    }
    for k in 0..(360 / step_deg) {
        let lon = normalize_lon(-180.0 + (k + 1) as f64 * step);
        let rim = panel.to_page(DiskPoint {
            r: 1.0,
            phi: lon.to_radians(),
            side: panel.side,
        });
        panel.paths.push(StyledPath {
            kind: PathKind::Meridian,
            degrees: Some(lon),
            shape: Shape::Polyline {
                points: vec![panel.center, rim],
                closed: false,
            },
        });
    }
}

/// Renders both faces: graticule every `graticule_deg` degrees plus the given lines.
///
/// `size_px` is the page height; each disk's diameter is `size_px − 2·MARGIN_PX`.
pub fn render_map(
    lines: &[GeoPolyline],
    mode: ProjectionMode,
    graticule_deg: u32,
    size_px: u32,
    source: Option<&str>,
) -> Result<MapDocument> {
    if graticule_deg == 0 || 90 % graticule_deg != 0 {
        return Err(Error::InvalidArgument(format!(
            "graticule spacing must divide 90, got {graticule_deg}"
        )));
    }
    if size_px < 100 {
        return Err(Error::InvalidArgument(format!(
            "size must be at least 100 px, got {size_px}"
        )));
    }
    let height = size_px as f64;
    let radius = 0.5 * height - MARGIN_PX;
    let width = 4.0 * radius + GUTTER_PX + 2.0 * MARGIN_PX;
    let cy = MARGIN_PX + radius;
    let mut panels = [
        Panel {
            side: Side::North,
            center: [MARGIN_PX + radius, cy],
            radius,
            paths: Vec::new(),
        },
        Panel {
            side: Side::South,
            center: [MARGIN_PX + 3.0 * radius + GUTTER_PX, cy],
            radius,
            paths: Vec::new(),
        },
    ];
    for panel in panels.iter_mut() {
        graticule(panel, mode, graticule_deg);
    }

    for line in lines {
        for (piece, side) in split_at_equator(line) {
            let panel = match side {
                Side::North => &mut panels[0],
                Side::South => &mut panels[1],
            };
            let points = densify(&piece, mode, radius)
                .into_iter()
                .map(|d| panel.to_page(d))
                .collect();
            panel.paths.push(StyledPath {
                kind: PathKind::Coastline,
                degrees: None,
                shape: Shape::Polyline {
                    points,
                    closed: piece.is_closed(),
                },
            });
        }
    }

    Ok(MapDocument {
        width,
        height,
        panels,
        meta: MapMeta {
            mode,
            source: source.map(str::to_owned),
            graticule_deg,
            size_px,
        },
    })
}
