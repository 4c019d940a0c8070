//! Composite Simpson rule on a uniform grid.

use crate::error::{Error, Result};

/// Integrates `f` over `[a, b]` with `intervals` (even) subintervals.
///
/// Every sample is checked; a non-finite value aborts with the offending abscissa.
pub fn simpson<F>(f: F, a: f64, b: f64, intervals: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if intervals < 2 || !intervals.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Simpson rule needs an even number of intervals, got {intervals}"
        )));
    }
    let h = (b - a) / intervals as f64;
    let sample = |i: usize| -> Result<f64> {
        let x = if i == intervals { b } else { a + i as f64 * h };
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFiniteIntegrand { theta: x })
        }
    };

    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..intervals {
        if i % 2 == 1 {
            odd += sample(i)?;
        } else {
            even += sample(i)?;
        }
    }
    Ok(h / 3.0 * (sample(0)? + 4.0 * odd + 2.0 * even + sample(intervals)?))
}
