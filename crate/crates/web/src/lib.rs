//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Three operations are exposed: drawing the two-sided map, probing a point
//! of that map, and drawing the radial profile against its chord.

use wasm_bindgen::prelude::*;

use flatdisk::geo_render::{parse_geojson, render_map, render_profile_plot, MapDocument};
use flatdisk::projection::{inverse, scale_factors, ProjectionMode};

fn parse_mode(mode: &str) -> Result<ProjectionMode, String> {
    mode.parse().map_err(|_| format!("unknown mode {mode:?}"))
}

/// A rendered map that remembers its layout so clicks can be mapped back to the globe.
#[wasm_bindgen]
pub struct MapView {
    doc: MapDocument,
    skipped: usize,
}

impl MapView {
    pub fn build(
        mode: &str,
        graticule: u32,
        size: u32,
        geojson: Option<&str>,
    ) -> Result<MapView, String> {
        let mode = parse_mode(mode)?;
        let (lines, skipped) = match geojson {
            Some(text) => {
                let loaded = parse_geojson(text).map_err(|e| e.to_string())?;
                (loaded.polylines, loaded.skipped)
            }
            None => (Vec::new(), 0),
        };
        let doc = render_map(&lines, mode, graticule, size, Some("browser"))
            .map_err(|e| e.to_string())?;
        Ok(MapView { doc, skipped })
    }
}

#[wasm_bindgen]
impl MapView {
    #[wasm_bindgen(constructor)]
    pub fn new(
        mode: &str,
        graticule: u32,
        size: u32,
        geojson: Option<String>,
    ) -> Result<MapView, JsError> {
        Self::build(mode, graticule, size, geojson.as_deref()).map_err(|e| JsError::new(&e))
    }

    pub fn svg(&self) -> String {
        self.doc.to_svg()
    }

    /// Features without line or polygon geometry.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn width(&self) -> f64 {
        self.doc.width
    }

    pub fn height(&self) -> f64 {
        self.doc.height
    }

    /// Geographic position and local scale under page position `(x, y)`.
    pub fn probe(&self, x: f64, y: f64) -> Option<Probe> {
        let d = self.doc.locate([x, y])?;
        let mode = self.doc.meta.mode;
        let p = inverse(d, mode).ok()?;
        let s = scale_factors(p, mode);
        Some(Probe {
            lat: p.lat(),
            lon: p.lon(),
            side: d.side.to_string(),
            r: d.r,
            meridian_scale: s.meridian,
            parallel_scale: s.parallel,
            area_scale: s.area,
        })
    }
}

#[wasm_bindgen(getter_with_clone)]
#[derive(Debug, Clone, PartialEq)]
pub struct Probe {
    pub lat: f64,
    pub lon: f64,
    /// `"N"` or `"S"`.
    pub side: String,
    /// Normalized disk radius.
    pub r: f64,
    pub meridian_scale: f64,
    pub parallel_scale: f64,
    pub area_scale: f64,
}

pub fn profile_svg(size: u32) -> Result<String, String> {
    render_profile_plot(size)
        .map(|p| p.to_svg())
        .map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn render_profile_svg(size: u32) -> Result<String, JsError> {
    profile_svg(size).map_err(|e| JsError::new(&e))
}
