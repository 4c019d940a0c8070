use std::f64::consts::FRAC_PI_2;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Smallest number of intervals a profile may have.
pub const MIN_INTERVALS: usize = 4;

/// Radial function sampled on the uniform grid `θᵢ = i·(π/2)/n`, `i = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    values: Vec<f64>,
}

impl RadialProfile {
    /// Wraps node values; the first must be exactly zero.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < MIN_INTERVALS + 1 {
            return Err(Error::InvalidProfile(format!(
                "need at least {} nodes, got {}",
                MIN_INTERVALS + 1,
                values.len()
            )));
        }
        if values[0] != 0.0 {
            return Err(Error::InvalidProfile(format!(
                "value at theta = 0 must be exactly 0, got {}",
                values[0]
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidProfile(format!(
                "non-finite value at node {i}"
            )));
        }
        Ok(RadialProfile { values })
    }

    /// Number of intervals `n`.
    pub fn intervals(&self) -> usize {
        self.values.len() - 1
    }

    pub fn step(&self) -> f64 {
        FRAC_PI_2 / self.intervals() as f64
    }

    pub fn theta(&self, i: usize) -> f64 {
        if i == self.intervals() {
            FRAC_PI_2
        } else {
            i as f64 * self.step()
        }
    }

    pub fn thetas(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(move |i| self.theta(i))
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn check_increasing(&self) -> Result<()> {
        match self.values.windows(2).position(|w| w[1] <= w[0]) {
            Some(i) => Err(Error::InvalidProfile(format!(
                "values are not strictly increasing at node {}",
                i + 1
            ))),
            None => Ok(()),
        }
    }

    /// Largest `|fᵢ − reference(θᵢ)|` over all nodes.
    pub fn max_abs_deviation(&self, reference: impl Fn(f64) -> f64) -> f64 {
        self.thetas()
            .zip(&self.values)
            .map(|(t, v)| (v - reference(t)).abs())
            .fold(0.0, f64::max)
    }

    /// Three-point one-sided slope at `θ = π/2`.
    pub fn endpoint_slope(&self) -> f64 {
        let n = self.intervals();
        let y = &self.values;
        (3.0 * y[n] - 4.0 * y[n - 1] + y[n - 2]) / (2.0 * self.step())
    }

    /// Two-column text form: `#` header lines, then `theta f` per node at 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# flatdisk radial profile\n");
        let _ = writeln!(out, "# intervals: {}", self.intervals());
        out.push_str("# columns: theta_rad f\n");
        for (t, v) in self.thetas().zip(&self.values) {
            let _ = writeln!(out, "{t:.16e} {v:.16e}");
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Blank lines and `#` lines are ignored;
    /// abscissae must lie on the uniform grid.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut thetas = Vec::new();
        let mut values = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut cols = line.split_whitespace();
            let parse = |tok: Option<&str>, name: &str| -> Result<f64> {
                let tok = tok.ok_or_else(|| Error::ProfileFormat {
                    line: line_no,
                    message: format!("missing {name} column"),
                })?;
                tok.parse::<f64>().map_err(|e| Error::ProfileFormat {
                    line: line_no,
                    message: format!("bad {name} value {tok:?}: {e}"),
                })
            };
            let t = parse(cols.next(), "theta")?;
            let v = parse(cols.next(), "f")?;
            if cols.next().is_some() {
                return Err(Error::ProfileFormat {
                    line: line_no,
                    message: "expected exactly two columns".into(),
                });
            }
            thetas.push(t);
            values.push(v);
            lines.push(line_no);
        }
        if values.len() < MIN_INTERVALS + 1 {
            return Err(Error::ProfileFormat {
                line: lines.last().copied().unwrap_or(0),
                message: format!("need at least {} data rows", MIN_INTERVALS + 1),
            });
        }
        let n = values.len() - 1;
        let h = FRAC_PI_2 / n as f64;
        for (i, (t, line)) in thetas.iter().zip(&lines).enumerate() {
            if (t - i as f64 * h).abs() > 1e-12 {
                return Err(Error::ProfileFormat {
                    line: *line,
                    message: format!(
                        "theta {t} is not on the uniform grid (expected {})",
                        i as f64 * h
                    ),
                });
            }
        }
        RadialProfile::new(values).map_err(|e| Error::ProfileFormat {
            line: lines[0],
            message: e.to_string(),
        })
    }
}
