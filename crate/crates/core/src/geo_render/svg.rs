use std::fmt::Write as _;

use super::{MapDocument, Panel, PathKind, Shape};
use crate::projection::Side;

pub(crate) const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Three decimals, with negative zero printed as zero.
pub(crate) fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// Keeps user-supplied text safe inside XML comments and attributes.
pub(crate) fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace("--", "- -")
}

pub(crate) fn header(out: &mut String, comment: &str, width: f64, height: f64) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(out, "<!-- flatdisk {VERSION} {comment} -->");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = num(width),
        h = num(height)
    );
    out.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");
}

pub(crate) fn polyline_d(points: &[[f64; 2]], closed: bool) -> String {
    let mut d = String::with_capacity(points.len() * 16);
    for (i, [x, y]) in points.iter().enumerate() {
        if i > 0 {
            d.push(' ');
        }
        d.push(if i == 0 { 'M' } else { 'L' });
        d.push_str(&num(*x));
        d.push(' ');
        d.push_str(&num(*y));
    }
    if closed {
        d.push_str(" Z");
    }
    d
}

fn style(kind: PathKind, degrees: Option<f64>) -> &'static str {
    match kind {
        PathKind::Parallel if degrees == Some(0.0) => {
            "fill=\"none\" stroke=\"#202020\" stroke-width=\"1.5\""
        }
        PathKind::Parallel | PathKind::Meridian => {
            "fill=\"none\" stroke=\"#8c8c8c\" stroke-width=\"0.5\""
        }
        PathKind::Coastline => {
            "fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1\" stroke-linejoin=\"round\""
        }
    }
}

fn panel(out: &mut String, p: &Panel) {
    let id = match p.side {
        Side::North => "north",
        Side::South => "south",
    };
    let _ = writeln!(out, "<g id=\"{id}\">");
    let _ = writeln!(
        out,
        "<circle class=\"disk\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#dcecf7\" stroke=\"none\"/>",
        num(p.center[0]),
        num(p.center[1]),
        num(p.radius)
    );
    for path in &p.paths {
        let class = path.kind.class();
        let data = match (path.kind, path.degrees) {
            (PathKind::Parallel, Some(d)) => format!(" data-lat=\"{d}\""),
            (PathKind::Meridian, Some(d)) => format!(" data-lon=\"{d}\""),
            _ => String::new(),
        };
        let style = style(path.kind, path.degrees);
        match &path.shape {
            Shape::Circle { cx, cy, r } => {
                let _ = writeln!(
                    out,
                    "<circle class=\"{class}\"{data} cx=\"{}\" cy=\"{}\" r=\"{}\" {style}/>",
                    num(*cx),
                    num(*cy),
                    num(*r)
                );
            }
            Shape::Polyline { points, closed } => {
                let _ = writeln!(
                    out,
                    "<path class=\"{class}\"{data} d=\"{}\" {style}/>",
                    polyline_d(points, *closed)
                );
            }
        }
    }
    out.push_str("</g>\n");
}

pub(crate) fn map_to_svg(doc: &MapDocument) -> String {
    let meta = &doc.meta;
    let source = meta
        .source
        .as_deref()
        .map(escape)
        .unwrap_or_else(|| "none".into());
    let comment = format!(
        "map mode={} graticule={} size={} source={}",
        meta.mode, meta.graticule_deg, meta.size_px, source
    );
    let mut out = String::new();
    header(&mut out, &comment, doc.width, doc.height);
    for p in &doc.panels {
        panel(&mut out, p);
    }
    out.push_str("</svg>\n");
    out
}
