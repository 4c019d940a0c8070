#![allow(dead_code)]

use std::path::PathBuf;

use flatdisk::geo_render::{load_geojson, render_map};
use flatdisk::projection::ProjectionMode;

pub const GOLDEN_GRATICULE: u32 = 15;
pub const GOLDEN_SIZE: u32 = 400;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn golden_path() -> PathBuf {
    fixture("coastline_ggv_15.svg")
}

/// The fixture coastline drawn the way the golden file was produced.
pub fn render_fixture() -> String {
    let geometry = load_geojson(fixture("coastline.geojson")).expect("fixture loads");
    render_map(
        &geometry.polylines,
        ProjectionMode::Ggv,
        GOLDEN_GRATICULE,
        GOLDEN_SIZE,
        Some("coastline.geojson"),
    )
    .expect("fixture renders")
    .to_svg()
}

/// Writes the golden file when `UPDATE_GOLDEN` is set, otherwise reads it.
pub fn golden() -> String {
    let path = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, render_fixture()).expect("golden file is writable");
    }
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; rerun with UPDATE_GOLDEN=1", path.display()))
}
