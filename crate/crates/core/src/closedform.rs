//! Closed-form solution of the flattening problem and the pieces it is built from.
//!
//! The radial function `f` maps colatitude on the unit sphere to radius on the
//! flattened disk. It is assembled as `f = γ·g` where `γ(θ) = 1/sin θ` is the
//! singular homogeneous solution and `g` solves a first-order equation in `h = g'`.

use std::f64::consts::{FRAC_PI_2, LN_2};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Below this colatitude `eval_f` and its derivatives use the Taylor expansion.
pub const SMALL_ANGLE: f64 = 1e-4;

/// Tolerance absorbed (then clamped) when constructing a [`Colatitude`].
pub const CLAMP_TOLERANCE: f64 = 1e-12;

/// Rim radius of the flattened unit sphere, `f(π/2) = 2 ln 2`.
pub const RIM_RADIUS: f64 = 2.0 * LN_2;

/// Slope of `f` at the pole, `(1 + ln 2) / 2`.
pub const POLE_SLOPE: f64 = (1.0 + LN_2) / 2.0;

// Taylor coefficients of f about θ = 0 (odd powers only).
const TAYLOR_C1: f64 = POLE_SLOPE;
const TAYLOR_C3: f64 = (2.0 * LN_2 - 1.0) / 48.0;
const TAYLOR_C5: f64 = (4.0 * LN_2 - 1.0) / 960.0;

/// Angle from the north pole in radians, restricted to `[0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Colatitude(f64);

impl Colatitude {
    pub const POLE: Colatitude = Colatitude(0.0);
    pub const EQUATOR: Colatitude = Colatitude(FRAC_PI_2);

    pub fn new(theta: f64) -> Result<Self> {
        if !theta.is_finite() || !(-CLAMP_TOLERANCE..=FRAC_PI_2 + CLAMP_TOLERANCE).contains(&theta)
        {
            return Err(Error::Domain {
                what: "colatitude",
                value: theta,
                domain: "[0, π/2]",
            });
        }
        Ok(Colatitude(theta.clamp(0.0, FRAC_PI_2)))
    }

    /// Colatitude of a latitude given in degrees; only `|lat|` matters.
    pub fn from_latitude_deg(lat_deg: f64) -> Result<Self> {
        Self::new(FRAC_PI_2 - lat_deg.abs().to_radians())
    }

    pub fn from_degrees(theta_deg: f64) -> Result<Self> {
        Self::new(theta_deg.to_radians())
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }
}

/// The stress-minimizing radial function `f(θ) = (2 ln 2 − (cos θ + 1) ln(cos θ + 1)) / sin θ`.
pub fn eval_f(theta: Colatitude) -> f64 {
    let t = theta.radians();
    if t < SMALL_ANGLE {
        let t2 = t * t;
        return t * (TAYLOR_C1 + t2 * (TAYLOR_C3 + t2 * TAYLOR_C5));
    }
    eval_g(theta) / t.sin()
}

/// First derivative of `f`, from `s·f' = h − f·cos θ`.
pub fn eval_f_prime(theta: Colatitude) -> f64 {
    let t = theta.radians();
    if t < SMALL_ANGLE {
        let t2 = t * t;
        return TAYLOR_C1 + t2 * (3.0 * TAYLOR_C3 + t2 * 5.0 * TAYLOR_C5);
    }
    (eval_h(theta) - eval_f(theta) * t.cos()) / t.sin()
}

/// Second derivative of `f`, obtained by differentiating `s·f' = h − f·cos θ` once more.
pub fn eval_f_second(theta: Colatitude) -> f64 {
    let t = theta.radians();
    if t < SMALL_ANGLE {
        let t2 = t * t;
        return t * (6.0 * TAYLOR_C3 + t2 * 20.0 * TAYLOR_C5);
    }
    let (s, c) = t.sin_cos();
    (eval_h_prime(theta) + eval_f(theta) * s - 2.0 * eval_f_prime(theta) * c) / s
}

/// `f(θ) = ln 2·tan(θ/2) − 2 cot(θ/2)·ln cos(θ/2)`, the half-angle form of `f`.
pub fn eval_f_mathematica_form(theta: Colatitude) -> Result<f64> {
    let t = theta.radians();
    if t == 0.0 {
        return Err(Error::Domain {
            what: "theta",
            value: t,
            domain: "(0, π/2] (cot(θ/2) is singular at 0)",
        });
    }
    let half = 0.5 * t;
    let (s, c) = half.sin_cos();
    // ln cos(θ/2) = ½ ln(1 − sin²(θ/2))
    let ln_cos = 0.5 * (-s * s).ln_1p();
    Ok(LN_2 * (s / c) - 2.0 * (c / s) * ln_cos)
}

/// `g(θ) = 2 ln 2 − (cos θ + 1) ln(cos θ + 1)`.
///
/// Below one radian it is evaluated through the versine `d = 1 − cos θ`, which
/// keeps full relative precision near the pole: `g = d ln 2 − (2 − d)·ln(1 − d/2)`.
pub fn eval_g(theta: Colatitude) -> f64 {
    let t = theta.radians();
    if t < 1.0 {
        let d = versine(t);
        d * LN_2 - (2.0 - d) * (-0.5 * d).ln_1p()
    } else {
        let u = 1.0 + t.cos();
        2.0 * LN_2 - u * u.ln()
    }
}

/// `1 − cos θ` without cancellation at small angles.
fn versine(t: f64) -> f64 {
    if t < 1.0 {
        let sh = (0.5 * t).sin();
        2.0 * sh * sh
    } else {
        1.0 - t.cos()
    }
}

/// `h(θ) = sin θ + ln(cos θ + 1)·sin θ`, the derivative of `g`.
pub fn eval_h(theta: Colatitude) -> f64 {
    let (s, c) = theta.radians().sin_cos();
    s * (1.0 + (1.0 + c).ln())
}

/// `h'(θ) = cos θ·(1 + ln(1 + cos θ)) − (1 − cos θ)`.
pub fn eval_h_prime(theta: Colatitude) -> f64 {
    let c = theta.radians().cos();
    c * (1.0 + (1.0 + c).ln()) - versine(theta.radians())
}

/// `γ(θ) = 1/sin θ`.
pub fn eval_gamma(theta: Colatitude) -> Result<f64> {
    let t = theta.radians();
    if t == 0.0 {
        return Err(Error::Domain {
            what: "theta",
            value: t,
            domain: "(0, π/2]",
        });
    }
    Ok(1.0 / t.sin())
}

/// Regular solution of `x²(1−x²)β'' + x(1−2x²)β' − β = 0`: `β(x) = 2x / (1 + √(1−x²))`.
pub fn eval_beta_regular(x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "[-1, 1]",
        });
    }
    Ok(2.0 * x / (1.0 + (1.0 - x * x).sqrt()))
}

/// Singular solution of the same equation: `β(x) = 1/x`.
pub fn eval_beta_singular(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "x ≠ 0",
        });
    }
    Ok(1.0 / x)
}

/// Odd power-series coefficients `a₁, a₃, …` of the regular β solution, kept exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    coeffs: Vec<BigRational>,
}

impl SeriesCoefficients {
    /// Largest stored index `j` (always odd).
    pub fn max_index(&self) -> usize {
        2 * self.coeffs.len() - 1
    }

    /// Coefficient `a_j`; even indices are zero.
    pub fn get(&self, j: usize) -> Option<BigRational> {
        if j > self.max_index() {
            None
        } else if j.is_multiple_of(2) {
            Some(BigRational::zero())
        } else {
            Some(self.coeffs[j / 2].clone())
        }
    }

    /// Stored odd coefficients in index order.
    pub fn odd(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|a| a.to_f64().unwrap_or(f64::NAN))
            .collect()
    }
}

/// Coefficients through `a_max_index` from `a₁ = 1`, `a_j = (j−2)/(j+1)·a_{j−2}`.
pub fn series_coefficients(max_index: i64) -> Result<SeriesCoefficients> {
    if max_index < 1 || max_index % 2 == 0 {
        return Err(Error::InvalidArgument(format!(
            "max_index must be a positive odd integer, got {max_index}"
        )));
    }
    let mut coeffs = Vec::with_capacity((max_index as usize).div_ceil(2));
    let mut a = BigRational::one();
    coeffs.push(a.clone());
    for j in (3..=max_index).step_by(2) {
        a *= BigRational::new(BigInt::from(j - 2), BigInt::from(j + 1));
        coeffs.push(a.clone());
    }
    Ok(SeriesCoefficients { coeffs })
}

/// Partial sum of the β power series over the first `n_terms` odd powers (`j ≤ 2·n_terms − 1`).
pub fn eval_beta_series(x: f64, n_terms: usize) -> Result<f64> {
    if x.is_nan() || x.abs() >= 1.0 {
        return Err(Error::Domain {
            what: "x",
            value: x,
            domain: "(-1, 1)",
        });
    }
    if n_terms == 0 {
        return Err(Error::InvalidArgument("n_terms must be at least 1".into()));
    }
    let coeffs = series_coefficients(2 * n_terms as i64 - 1)?.to_f64();
    let x2 = x * x;
    // Horner in x² over the odd powers.
    let acc = coeffs.iter().rev().fold(0.0, |acc, a| acc * x2 + a);
    Ok(acc * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6, PI};

    fn col(t: f64) -> Colatitude {
        Colatitude::new(t).unwrap()
    }

    // Reference values from an independent 40-digit evaluation.
    const F_PI_4: f64 = 0.669_394_881_651_336_6;
    const G_PI_4: f64 = 0.473_333_660_107_226_5;
    const H_PI_4: f64 = 1.085_267_485_459_641_2;

    #[test]
    fn colatitude_clamps_and_rejects() {
        assert_eq!(Colatitude::new(-1e-13).unwrap().radians(), 0.0);
        assert_eq!(
            Colatitude::new(FRAC_PI_2 + 5e-13).unwrap().radians(),
            FRAC_PI_2
        );
        assert!(Colatitude::new(-1e-9).is_err());
        assert!(Colatitude::new(FRAC_PI_2 + 1e-9).is_err());
        assert!(Colatitude::new(f64::NAN).is_err());
        assert_eq!(
            Colatitude::from_latitude_deg(0.0).unwrap().radians(),
            FRAC_PI_2
        );
    }

    #[test]
    fn f_examples() {
        assert_eq!(eval_f(Colatitude::EQUATOR), RIM_RADIUS);
        assert_eq!(eval_f(Colatitude::POLE), 0.0);
        assert_abs_diff_eq!(eval_f(col(FRAC_PI_4)), F_PI_4, epsilon = 1e-15);
        let tiny = eval_f(col(1e-9));
        assert_abs_diff_eq!(tiny / 1e-9, POLE_SLOPE, epsilon = 1e-12);
    }

    #[test]
    fn taylor_branch_is_continuous_at_threshold() {
        let below = eval_f(col(SMALL_ANGLE * (1.0 - 1e-12)));
        let above = eval_f(col(SMALL_ANGLE));
        assert!((below - above).abs() < 1e-16);
        let dp = eval_f_prime(col(SMALL_ANGLE * (1.0 - 1e-12))) - eval_f_prime(col(SMALL_ANGLE));
        assert!(dp.abs() < 1e-11, "{dp}");
        let d2 = eval_f_second(col(SMALL_ANGLE * (1.0 - 1e-12))) - eval_f_second(col(SMALL_ANGLE));
        assert!(d2.abs() < 1e-9, "{d2}");
    }

    #[test]
    fn mathematica_form_examples() {
        assert_abs_diff_eq!(
            eval_f_mathematica_form(Colatitude::EQUATOR).unwrap(),
            RIM_RADIUS,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            eval_f_mathematica_form(col(FRAC_PI_4)).unwrap(),
            eval_f(col(FRAC_PI_4)),
            epsilon = 1e-12
        );
        assert!(eval_f_mathematica_form(Colatitude::POLE).is_err());
    }

    #[test]
    fn g_h_examples() {
        assert_eq!(eval_g(Colatitude::POLE), 0.0);
        assert_abs_diff_eq!(eval_g(Colatitude::EQUATOR), RIM_RADIUS, epsilon = 1e-15);
        assert_abs_diff_eq!(eval_g(col(FRAC_PI_4)), G_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(eval_h(Colatitude::EQUATOR), 1.0, epsilon = 1e-15);
        assert_eq!(eval_h(Colatitude::POLE), 0.0);
        assert_abs_diff_eq!(eval_h(col(FRAC_PI_4)), H_PI_4, epsilon = 1e-15);
    }

    #[test]
    fn gamma_examples() {
        assert_abs_diff_eq!(eval_gamma(Colatitude::EQUATOR).unwrap(), 1.0);
        assert_abs_diff_eq!(eval_gamma(col(FRAC_PI_6)).unwrap(), 2.0, epsilon = 1e-15);
        assert!(eval_gamma(Colatitude::POLE).is_err());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(eval_beta_regular(0.0).unwrap(), 0.0);
        assert_eq!(eval_beta_regular(1.0).unwrap(), 2.0);
        assert_abs_diff_eq!(
            eval_beta_regular(0.5).unwrap(),
            0.535_898_384_862_245_4,
            epsilon = 1e-15
        );
        assert!(eval_beta_regular(1.0 + 1e-9).is_err());
        assert_eq!(eval_beta_singular(1.0).unwrap(), 1.0);
        assert_eq!(eval_beta_singular(0.5).unwrap(), 2.0);
        assert!(eval_beta_singular(0.0).is_err());
    }

    #[test]
    fn beta_regular_is_odd() {
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            assert_eq!(
                eval_beta_regular(-x).unwrap(),
                -eval_beta_regular(x).unwrap()
            );
        }
    }

    #[test]
    fn series_coefficient_examples() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(series_coefficients(1).unwrap().odd(), &[r(1, 1)]);
        let c = series_coefficients(5).unwrap();
        assert_eq!(c.get(3).unwrap(), r(1, 4));
        assert_eq!(c.get(5).unwrap(), r(1, 8));
        assert_eq!(c.get(4).unwrap(), r(0, 1));
        assert_eq!(c.max_index(), 5);
        assert!(c.get(7).is_none());
        assert!(series_coefficients(4).is_err());
        assert!(series_coefficients(0).is_err());
        assert!(series_coefficients(-3).is_err());
    }

    #[test]
    fn series_recurrence_is_exact() {
        let c = series_coefficients(201).unwrap();
        for j in (3..=201usize).step_by(2) {
            let lhs = BigRational::from_integer((j as i64 + 1).into()) * c.get(j).unwrap();
            let rhs = BigRational::from_integer((j as i64 - 2).into()) * c.get(j - 2).unwrap();
            assert_eq!(lhs, rhs, "j = {j}");
        }
    }

    #[test]
    fn beta_series_converges() {
        assert_eq!(eval_beta_series(0.0, 7).unwrap(), 0.0);
        let reg = eval_beta_regular(0.5).unwrap();
        assert!((eval_beta_series(0.5, 5).unwrap() - reg).abs() < 1e-4);
        let reg = eval_beta_regular(0.9).unwrap();
        assert!((eval_beta_series(0.9, 101).unwrap() - reg).abs() < 1e-6);
        assert!(eval_beta_series(1.0, 3).is_err());
        assert!(eval_beta_series(0.3, 0).is_err());
    }

    #[test]
    fn f_equals_gamma_times_g() {
        for i in 1..=2000 {
            let t = col(i as f64 / 2000.0 * FRAC_PI_2);
            let prod = eval_gamma(t).unwrap() * eval_g(t);
            assert!((eval_f(t) - prod).abs() < 1e-13);
        }
    }

    #[test]
    fn h_is_derivative_of_g() {
        let step = 1e-5;
        for i in 1..200 {
            let t = i as f64 / 200.0 * FRAC_PI_2;
            let fd = (eval_g(col(t + step)) - eval_g(col(t - step))) / (2.0 * step);
            assert!((fd - eval_h(col(t))).abs() < 1e-8, "t = {t}");
        }
    }

    #[test]
    fn analytic_derivatives_match_finite_differences() {
        let step = 1e-5;
        for i in 1..200 {
            let t = i as f64 / 200.0 * FRAC_PI_2;
            let fd1 = (eval_f(col(t + step)) - eval_f(col(t - step))) / (2.0 * step);
            assert!((fd1 - eval_f_prime(col(t))).abs() < 1e-8, "f' at {t}");
            let fd2 = (eval_f_prime(col(t + step)) - eval_f_prime(col(t - step))) / (2.0 * step);
            assert!((fd2 - eval_f_second(col(t))).abs() < 1e-7, "f'' at {t}");
            let fdh = (eval_h(col(t + step)) - eval_h(col(t - step))) / (2.0 * step);
            assert!((fdh - eval_h_prime(col(t))).abs() < 1e-8, "h' at {t}");
        }
    }

    #[test]
    fn forms_agree_on_grid() {
        for i in 0..1000 {
            let t = 1e-3 + (FRAC_PI_2 - 1e-3) * (i as f64 + 1.0) / 1000.0;
            let t = col(t);
            let d = (eval_f(t) - eval_f_mathematica_form(t).unwrap()).abs();
            assert!(d < 1e-12, "{d}");
        }
    }

    #[test]
    fn f_is_strictly_increasing() {
        let mut prev = eval_f(Colatitude::POLE);
        for i in 1..=10_000 {
            let v = eval_f(col(i as f64 / 10_000.0 * FRAC_PI_2));
            assert!(v > prev);
            assert!(v.is_finite() && v >= 0.0);
            prev = v;
        }
    }

    #[test]
    fn endpoint_slopes() {
        let step = 1e-6;
        let back = (3.0 * eval_f(Colatitude::EQUATOR) - 4.0 * eval_f(col(FRAC_PI_2 - step))
            + eval_f(col(FRAC_PI_2 - 2.0 * step)))
            / (2.0 * step);
        assert!((back - 1.0).abs() < 1e-6);
        let fwd = (-3.0 * eval_f(Colatitude::POLE) + 4.0 * eval_f(col(step))
            - eval_f(col(2.0 * step)))
            / (2.0 * step);
        assert!((fwd - POLE_SLOPE).abs() < 1e-6);
        assert_abs_diff_eq!(eval_f_prime(Colatitude::EQUATOR), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn beta_solutions_satisfy_homogeneous_ode() {
        // Five-point stencils with a step proportional to the distance from the
        // singular points x = 0 and x = 1.
        let residual = |beta: &dyn Fn(f64) -> f64, x: f64| {
            let e = 2e-3 * x.min(1.0 - x);
            let (m2, m1, b0, p1, p2) = (
                beta(x - 2.0 * e),
                beta(x - e),
                beta(x),
                beta(x + e),
                beta(x + 2.0 * e),
            );
            let bp = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * e);
            let bpp = (-m2 + 16.0 * m1 - 30.0 * b0 + 16.0 * p1 - p2) / (12.0 * e * e);
            x * x * (1.0 - x * x) * bpp + x * (1.0 - 2.0 * x * x) * bp - b0
        };
        let reg = |x: f64| eval_beta_regular(x).unwrap();
        let sing = |x: f64| eval_beta_singular(x).unwrap();
        for i in 0..=90 {
            let x = 0.05 + 0.9 * i as f64 / 90.0;
            assert!(residual(&reg, x).abs() < 1e-6, "regular at {x}");
            assert!(residual(&sing, x).abs() < 1e-6, "singular at {x}");
        }
        // β(sin θ) with the singular branch is the γ used above.
        assert_abs_diff_eq!(
            eval_beta_singular((PI / 5.0).sin()).unwrap(),
            eval_gamma(col(PI / 5.0)).unwrap(),
            epsilon = 1e-15
        );
    }
}
