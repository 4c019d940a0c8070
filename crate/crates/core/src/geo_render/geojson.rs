use std::path::Path;

use serde_json::Value;

use super::GeoPolyline;
use crate::error::{Error, Result};
use crate::projection::GeoCoord;

/// Polylines read from a GeoJSON document plus the number of features that were skipped.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LoadedGeometry {
    pub polylines: Vec<GeoPolyline>,
    /// Features with unsupported or degenerate geometry.
    pub skipped: usize,
}

pub fn load_geojson(path: impl AsRef<Path>) -> Result<LoadedGeometry> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_geojson(&text)
}

/// Flattens a FeatureCollection's LineString, MultiLineString, Polygon and
/// MultiPolygon geometries into polylines (one per line or ring).
pub fn parse_geojson(text: &str) -> Result<LoadedGeometry> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::GeoJsonParse(e.to_string()))?;
    if root.get("type").and_then(Value::as_str) != Some("FeatureCollection") {
        return Err(Error::GeoJsonParse(
            "top-level object must be a FeatureCollection".into(),
        ));
    }
    let features = root
        .get("features")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::GeoJsonParse("FeatureCollection has no features array".into()))?;

    let mut out = LoadedGeometry::default();
    for (index, feature) in features.iter().enumerate() {
        let Some(geometry) = feature.get("geometry").filter(|g| !g.is_null()) else {
            out.skipped += 1;
            continue;
        };
        let kind = geometry.get("type").and_then(Value::as_str).unwrap_or("");
        let coords = geometry.get("coordinates");
        let lines: Vec<(Vec<GeoCoord>, bool)> = match (kind, coords) {
            ("LineString", Some(c)) => vec![(positions(c, index)?, false)],
            ("MultiLineString", Some(c)) => list(c, index)?
                .iter()
                .map(|l| Ok((positions(l, index)?, false)))
                .collect::<Result<_>>()?,
            ("Polygon", Some(c)) => rings(c, index)?,
            ("MultiPolygon", Some(c)) => {
                let mut all = Vec::new();
                for poly in list(c, index)? {
                    all.extend(rings(poly, index)?);
                }
                all
            }
            _ => {
                out.skipped += 1;
                continue;
            }
        };
        let before = out.polylines.len();
        out.polylines.extend(
            lines
                .into_iter()
                .filter_map(|(pts, closed)| GeoPolyline::new(pts, closed).ok()),
        );
        if out.polylines.len() == before {
            out.skipped += 1;
        }
    }
    Ok(out)
}

fn list(value: &Value, feature: usize) -> Result<&Vec<Value>> {
    value.as_array().ok_or_else(|| {
        Error::GeoJsonParse(format!("feature {feature}: coordinates must be arrays"))
    })
}

fn rings(value: &Value, feature: usize) -> Result<Vec<(Vec<GeoCoord>, bool)>> {
    list(value, feature)?
        .iter()
        .map(|ring| Ok((positions(ring, feature)?, true)))
        .collect()
}

fn positions(value: &Value, feature: usize) -> Result<Vec<GeoCoord>> {
    list(value, feature)?
        .iter()
        .map(|pos| {
            let pair = pos
                .as_array()
                .filter(|p| p.len() >= 2)
                .and_then(|p| Some((p[0].as_f64()?, p[1].as_f64()?)))
                .ok_or_else(|| {
                    Error::GeoJsonParse(format!("feature {feature}: malformed position {pos}"))
                })?;
            let (lon, lat) = pair;
            if !(-90.0..=90.0).contains(&lat) || !(-180.0..=180.0).contains(&lon) {
                return Err(Error::CoordinateRange { feature, lon, lat });
            }
            GeoCoord::new(lat, lon)
        })
        .collect()
}
