use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use super::svg::{header, num, polyline_d};
use crate::closedform::{eval_f, eval_f_prime, Colatitude, RIM_RADIUS};
use crate::error::{Error, Result};
use crate::roots::bisect;

const PLOT_SAMPLES: usize = 256;
const Y_MAX: f64 = 1.4;

/// Slope of the chord from `(0, 0)` to `(π/2, 2 ln 2)`.
pub fn chord_slope() -> f64 {
    RIM_RADIUS / FRAC_PI_2
}

/// Height of the chord above `f` at `theta`.
pub fn chord_gap(theta: Colatitude) -> f64 {
    chord_slope() * theta.radians() - eval_f(theta)
}

/// Location and size of the largest chord gap.
///
/// `f` is convex, so the gap peaks where `f'` equals the chord slope.
pub fn max_chord_gap() -> (f64, f64) {
    let slope = chord_slope();
    let theta = bisect(
        |t| eval_f_prime(Colatitude::new(t).unwrap_or(Colatitude::EQUATOR)) - slope,
        0.0,
        FRAC_PI_2,
        1e-14,
    )
    .expect("f' crosses the chord slope inside (0, π/2)");
    let c = Colatitude::new(theta).expect("bisection stays in range");
    (theta, chord_gap(c))
}

/// `f(θ)` against its chord, with the largest gap marked.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfilePlot {
    pub width: f64,
    pub height: f64,
    /// `(θ, f(θ))` samples of the curve.
    pub curve: Vec<[f64; 2]>,
    /// `(θ, chord(θ))` at both ends.
    pub chord: [[f64; 2]; 2],
    pub max_gap_theta: f64,
    pub max_gap: f64,
    origin: [f64; 2],
    plot_size: [f64; 2],
}

pub fn render_profile_plot(size_px: u32) -> Result<ProfilePlot> {
    if size_px < 100 {
        return Err(Error::InvalidArgument(format!(
            "size must be at least 100 px, got {size_px}"
        )));
    }
    let side = size_px as f64;
    let margin = (0.12 * side).round();
    let curve = (0..=PLOT_SAMPLES)
        .map(|i| {
            let t = if i == PLOT_SAMPLES {
                FRAC_PI_2
            } else {
                FRAC_PI_2 * i as f64 / PLOT_SAMPLES as f64
            };
            [t, eval_f(Colatitude::new(t).expect("sample in range"))]
        })
        .collect();
    let (max_gap_theta, max_gap) = max_chord_gap();
    Ok(ProfilePlot {
        width: side,
        height: side,
        curve,
        chord: [[0.0, 0.0], [FRAC_PI_2, RIM_RADIUS]],
        max_gap_theta,
        max_gap,
        origin: [margin, side - margin],
        plot_size: [side - 1.5 * margin, side - 1.5 * margin],
    })
}

impl ProfilePlot {
    /// Page coordinates of a `(θ, value)` pair.
    pub fn to_page(&self, [t, v]: [f64; 2]) -> [f64; 2] {
        [
            self.origin[0] + t / FRAC_PI_2 * self.plot_size[0],
            self.origin[1] - v / Y_MAX * self.plot_size[1],
        ]
    }

    pub fn to_svg(&self) -> String {
        let mut out = String::new();
        header(&mut out, "profile", self.width, self.height);
        let font = (self.width / 40.0).max(8.0);

        let [x0, y0] = self.origin;
        let [x1, y1] = [x0 + self.plot_size[0], y0 - self.plot_size[1]];
        out.push_str("<g id=\"axes\" stroke=\"#404040\" stroke-width=\"1\" fill=\"none\">\n");
        let _ = writeln!(
            out,
            "<path d=\"M{} {} L{} {} L{} {}\"/>",
            num(x0),
            num(y1),
            num(x0),
            num(y0),
            num(x1),
            num(y0)
        );
        out.push_str("</g>\n");

        let _ = writeln!(
            out,
            "<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"{}\" fill=\"#404040\">",
            num(font)
        );
        for k in 0..=6 {
            let t = 0.25 * k as f64;
            let [x, y] = self.to_page([t, 0.0]);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{t:.2}</text>",
                num(x),
                num(y + 1.4 * font)
            );
        }
        for k in 0..=7 {
            let v = 0.2 * k as f64;
            let [x, y] = self.to_page([0.0, v]);
            let _ = writeln!(
                out,
                "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{v:.1}</text>",
                num(x - 0.4 * font),
                num(y + 0.35 * font)
            );
        }
        let [lx, ly] = self.to_page([FRAC_PI_2 / 2.0, 0.0]);
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">θ (radians)</text>",
            num(lx),
            num(ly + 2.8 * font)
        );
        out.push_str("</g>\n");

        let chord: Vec<[f64; 2]> = self.chord.iter().map(|&p| self.to_page(p)).collect();
        let _ = writeln!(
            out,
            "<path id=\"chord\" d=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>",
            polyline_d(&chord, false)
        );
        let curve: Vec<[f64; 2]> = self.curve.iter().map(|&p| self.to_page(p)).collect();
        let _ = writeln!(
            out,
            "<path id=\"f\" d=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>",
            polyline_d(&curve, false)
        );

        let t = self.max_gap_theta;
        let chord_v = chord_slope() * t;
        let top = self.to_page([t, chord_v]);
        let bottom = self.to_page([t, chord_v - self.max_gap]);
        let _ = writeln!(
            out,
            "<path id=\"max-gap\" d=\"{}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\"/>",
            polyline_d(&[top, bottom], false)
        );
        let _ = writeln!(
            out,
            "<text id=\"max-gap-label\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" fill=\"#1f77b4\">max gap {:.5} at θ = {:.4}</text>",
            num(bottom[0] + 0.6 * font),
            num(bottom[1] + 1.2 * font),
            num(font),
            self.max_gap,
            t
        );
        out.push_str("</svg>\n");
        out
    }
}
