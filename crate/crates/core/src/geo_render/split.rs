use super::GeoPolyline;
use crate::projection::{normalize_lon, GeoCoord, Side};

fn side_of(p: GeoCoord) -> Option<Side> {
    if p.lat() > 0.0 {
        Some(Side::North)
    } else if p.lat() < 0.0 {
        Some(Side::South)
    } else {
        None
    }
}

/// Point where the segment `a → b` meets the equator, by linear interpolation
/// in latitude and (shortest-way) longitude.
pub fn equator_crossing(a: GeoCoord, b: GeoCoord) -> GeoCoord {
    let t = a.lat() / (a.lat() - b.lat());
    let dlon = normalize_lon(b.lon() - a.lon());
    GeoCoord::new(0.0, a.lon() + t * dlon).expect("interpolated coordinate is in range")
}

/// Cuts a polyline into pieces that each stay in one hemisphere.
///
/// Every crossing gets an inserted point at latitude 0 shared by the pieces on
/// either side. Pieces lying entirely on the equator are assigned to the north.
pub fn split_at_equator(line: &GeoPolyline) -> Vec<(GeoPolyline, Side)> {
    let path = line.path_points();
    let mut pieces: Vec<(Vec<GeoCoord>, Option<Side>)> = Vec::new();
    let mut current: Vec<GeoCoord> = vec![path[0]];
    let mut current_side = side_of(path[0]);

    for &q in &path[1..] {
        let p = *current.last().expect("pieces are never empty");
        let q_side = side_of(q);
        match (current_side, q_side) {
            (Some(a), Some(b)) if a != b => {
                let prev_side = side_of(p);
                if prev_side.is_some() {
                    let c = equator_crossing(p, q);
                    current.push(c);
                    pieces.push((std::mem::replace(&mut current, vec![c]), current_side));
                } else {
                    // Previous point already sits on the equator.
                    pieces.push((std::mem::replace(&mut current, vec![p]), current_side));
                }
                current.push(q);
                current_side = q_side;
            }
            _ => {
                current.push(q);
                if current_side.is_none() {
                    current_side = q_side;
                }
            }
        }
    }
    pieces.push((current, current_side));

    let was_split = pieces.len() > 1;
    if line.is_closed() && was_split && pieces[0].1 == pieces[pieces.len() - 1].1 {
        // The ring's start point is interior to one piece; rejoin the two ends.
        let (first, _) = pieces.remove(0);
        let last = pieces.last_mut().expect("at least one piece remains");
        last.0.extend_from_slice(&first[1..]);
    }

    pieces
        .into_iter()
        .filter_map(|(mut pts, side)| {
            let closed = line.is_closed() && !was_split;
            if closed {
                pts.pop();
            }
            GeoPolyline::new(pts, closed)
                .ok()
                .map(|l| (l, side.unwrap_or(Side::North)))
        })
        .collect()
}
