//! Independent numerical check of the closed form.
//!
//! Two routes are provided: the residual of the Euler–Lagrange equation
//!
//! ```text
//! sin²θ·f'' + sinθ cosθ·f' − f = sinθ cosθ − sinθ,   f(0) = 0,  f'(π/2) = 1
//! ```
//!
//! evaluated for any radial function with a second derivative, and a direct
//! minimization of the discretized stress integral. The discrete solver only
//! imposes `f(0) = 0`; the slope condition at the rim has to come out of the
//! optimization on its own. Nothing in this module evaluates the closed form.

mod profile;
pub mod tridiag;

use std::f64::consts::{FRAC_PI_2, PI};

pub use profile::{RadialProfile, MIN_INTERVALS};

use crate::closedform::Colatitude;
use crate::error::{Error, Result};
use crate::radial::RadialFunction;

/// Smallest interval count accepted by [`solve_discrete`].
pub const MIN_SOLVE_INTERVALS: usize = 16;

/// Lower end of the sampling range used by [`residual_sweep`].
pub const SWEEP_START: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct OdeResidualReport {
    pub grid: Vec<f64>,
    pub residuals: Vec<f64>,
    pub max_abs: f64,
}

/// `sin²θ·f'' + sinθ cosθ·f' − f − (sinθ cosθ − sinθ)` at `theta`.
pub fn ode_residual(rf: &RadialFunction, theta: Colatitude) -> Result<f64> {
    let t = theta.radians();
    if t <= 0.0 {
        return Err(Error::Domain {
            what: "theta",
            value: t,
            domain: "(0, π/2]",
        });
    }
    let f2 = rf.second_derivative(t).ok_or_else(|| {
        Error::InvalidArgument(format!("{} has no second derivative", rf.label()))
    })?;
    let (s, c) = t.sin_cos();
    let lhs = s * s * f2 + s * c * rf.derivative(t) - rf.value(t);
    Ok(lhs - (s * c - s))
}

/// Residuals at `n_samples` uniform points of `[1e-3, π/2]`.
pub fn residual_sweep(rf: &RadialFunction, n_samples: usize) -> Result<OdeResidualReport> {
    if n_samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "n_samples must be at least 2, got {n_samples}"
        )));
    }
    let span = FRAC_PI_2 - SWEEP_START;
    let grid: Vec<f64> = (0..n_samples)
        .map(|k| {
            if k + 1 == n_samples {
                FRAC_PI_2
            } else {
                SWEEP_START + span * k as f64 / (n_samples - 1) as f64
            }
        })
        .collect();
    let residuals = grid
        .iter()
        .map(|&t| ode_residual(rf, Colatitude::new(t)?))
        .collect::<Result<Vec<_>>>()?;
    let max_abs = residuals.iter().map(|r| r.abs()).fold(0.0, f64::max);
    Ok(OdeResidualReport {
        grid,
        residuals,
        max_abs,
    })
}

/// Per-interval weight `h·sin θ_mid` and midpoint sine.
fn interval_geometry(n: usize) -> impl Iterator<Item = (f64, f64)> {
    let h = FRAC_PI_2 / n as f64;
    (0..n).map(move |k| {
        let s = ((k as f64 + 0.5) * h).sin();
        (h * s, s)
    })
}

/// Midpoint-rule discretization of `S`, scaled by `2π` to be comparable with
/// [`total_stress`](crate::stress::total_stress).
///
/// On each interval, `f'` is the difference quotient and `f` the average of the end values.
pub fn discrete_objective(values: &[f64]) -> f64 {
    let n = values.len() - 1;
    let h = FRAC_PI_2 / n as f64;
    let sum: f64 = interval_geometry(n)
        .enumerate()
        .map(|(k, (w, s))| {
            let slope = (values[k + 1] - values[k]) / h - 1.0;
            let hoop = 0.5 * (values[k] + values[k + 1]) / s - 1.0;
            w * (slope * slope + hoop * hoop)
        })
        .sum();
    2.0 * PI * sum
}

/// Minimizes [`discrete_objective`] over `f₁…fₙ` with `f₀ = 0`.
///
/// The objective is a positive-definite quadratic form, so the minimizer is the
/// solution of its tridiagonal normal equations.
pub fn solve_discrete(n: usize) -> Result<RadialProfile> {
    if n < MIN_SOLVE_INTERVALS {
        return Err(Error::InvalidArgument(format!(
            "n must be at least {MIN_SOLVE_INTERVALS}, got {n}"
        )));
    }
    let h = FRAC_PI_2 / n as f64;
    let inv_h2 = 1.0 / (h * h);

    // Unknown j holds node j + 1.
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n - 1];
    let mut rhs = vec![0.0; n];
    for (k, (w, s)) in interval_geometry(n).enumerate() {
        let hoop = 0.25 / (s * s);
        let d = w * (inv_h2 + hoop);
        let o = w * (hoop - inv_h2);
        let r_left = w * (0.5 / s - 1.0 / h);
        let r_right = w * (0.5 / s + 1.0 / h);
        // Left node k is fixed at zero when k = 0.
        if k > 0 {
            diag[k - 1] += d;
            off[k - 1] += o;
            rhs[k - 1] += r_left;
        }
        diag[k] += d;
        rhs[k] += r_right;
    }

    let interior = tridiag::solve_symmetric(&diag, &off, &rhs)?;
    let mut values = Vec::with_capacity(n + 1);
    values.push(0.0);
    values.extend(interior);
    let profile = RadialProfile::new(values)?;
    profile.check_increasing()?;
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, LN_2};

    fn col(t: f64) -> Colatitude {
        Colatitude::new(t).unwrap()
    }

    #[test]
    fn residual_examples() {
        let star = RadialFunction::closed_form();
        assert!(ode_residual(&star, col(FRAC_PI_4)).unwrap().abs() < 1e-10);
        let line = ode_residual(&RadialFunction::identity(), col(FRAC_PI_4)).unwrap();
        assert_abs_diff_eq!(line, -0.078_291_382_210_900_79, epsilon = 1e-15);
        // For f = sin: −sin³θ + sinθ cos²θ − sinθ − (sinθ cosθ − sinθ) = sinθ·(cos 2θ − cos θ).
        for t in [0.2, 0.7, FRAC_PI_3, 1.3] {
            let r = ode_residual(&RadialFunction::sine(), col(t)).unwrap();
            let by_hand = t.sin() * ((2.0 * t).cos() - t.cos());
            assert_abs_diff_eq!(r, by_hand, epsilon = 1e-15);
        }
        let at_pi_3 = ode_residual(&RadialFunction::sine(), col(FRAC_PI_3)).unwrap();
        assert_abs_diff_eq!(at_pi_3, -(3f64.sqrt()) / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn residual_errors() {
        assert!(ode_residual(&RadialFunction::identity(), Colatitude::POLE).is_err());
        let no_second = RadialFunction::analytic("x", |t| t, |_| 1.0);
        assert!(ode_residual(&no_second, col(0.5)).is_err());
        assert!(residual_sweep(&RadialFunction::identity(), 1).is_err());
    }

    #[test]
    fn sweep_examples() {
        let r = residual_sweep(&RadialFunction::closed_form(), 1000).unwrap();
        assert_eq!(r.grid.len(), 1000);
        assert!(r.max_abs < 1e-9, "{}", r.max_abs);
        let line = residual_sweep(&RadialFunction::identity(), 1000).unwrap();
        assert_abs_diff_eq!(line.max_abs, FRAC_PI_2 - 1.0, epsilon = 1e-14);
        let two = residual_sweep(&RadialFunction::identity(), 2).unwrap();
        assert_eq!(two.residuals.len(), 2);
        assert_eq!(two.grid, vec![SWEEP_START, FRAC_PI_2]);
    }

    #[test]
    fn residual_is_affine() {
        let f1 = RadialFunction::sine();
        let f2 = RadialFunction::scaled_identity(0.7);
        let sum = f1.plus_scaled(&f2, 1.0);
        let zero = RadialFunction::zero();
        for i in 1..=50 {
            let t = col(i as f64 / 50.0 * FRAC_PI_2);
            let lhs = ode_residual(&sum, t).unwrap() + ode_residual(&zero, t).unwrap();
            let rhs = ode_residual(&f1, t).unwrap() + ode_residual(&f2, t).unwrap();
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn solve_rejects_small_n() {
        assert!(solve_discrete(8).is_err());
        assert!(solve_discrete(16).is_ok());
    }

    #[test]
    fn discrete_rim_value_approaches_two_ln_two() {
        let p = solve_discrete(1024).unwrap();
        assert_eq!(p.values()[0], 0.0);
        assert!((p.values()[1024] - 2.0 * LN_2).abs() < 1e-4);
    }

    #[test]
    fn discrete_minimizer_is_optimal_among_nearby_vectors() {
        let p = solve_discrete(64).unwrap();
        let best = discrete_objective(p.values());
        for j in 1..=64 {
            for eps in [1e-3, -1e-3] {
                let mut v = p.values().to_vec();
                v[j] += eps;
                assert!(discrete_objective(&v) > best);
            }
        }
    }

    fn node_error(n: usize) -> f64 {
        let p = solve_discrete(n).unwrap();
        p.max_abs_deviation(|t| crate::closedform::eval_f(col(t)))
    }

    #[test]
    fn discrete_solution_converges_quadratically() {
        let fine = node_error(1024);
        assert!(fine < 1e-4, "{fine}");
        for (coarse, fine) in [(16, 32), (512, 1024)] {
            let ratio = node_error(coarse) / node_error(fine);
            assert!((ratio - 4.0).abs() <= 1.2, "{coarse}/{fine}: {ratio}");
        }
    }

    #[test]
    fn rim_slope_emerges_without_being_imposed() {
        let p = solve_discrete(4096).unwrap();
        assert!((p.endpoint_slope() - 1.0).abs() < 5e-3);
    }

    #[test]
    fn discrete_solution_beats_sampled_closed_form() {
        for n in [16, 64, 256] {
            let p = solve_discrete(n).unwrap();
            let sampled: Vec<f64> = p
                .thetas()
                .map(|t| crate::closedform::eval_f(col(t)))
                .collect();
            assert!(discrete_objective(p.values()) <= discrete_objective(&sampled));
        }
    }

    #[test]
    fn sampled_profile_has_small_residual() {
        let p = solve_discrete(2048).unwrap();
        let rf = RadialFunction::from_profile(&p);
        let r = residual_sweep(&rf, 200).unwrap();
        assert!(r.max_abs < 1e-3, "{}", r.max_abs);
    }
}
