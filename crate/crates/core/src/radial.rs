use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::sync::Arc;

use crate::closedform::{self, Colatitude};
use crate::error::{Error, Result};
use crate::variational::RadialProfile;

type Curve = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Where a [`RadialFunction`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Sampled,
    Analytic,
}

/// A radial map `θ ↦ f(θ)` on `[0, π/2]` together with its derivative and,
/// when known, its second derivative.
#[derive(Clone)]
pub struct RadialFunction {
    value: Curve,
    derivative: Curve,
    second: Option<Curve>,
    provenance: Provenance,
    label: String,
}

impl fmt::Debug for RadialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialFunction")
            .field("label", &self.label)
            .field("provenance", &self.provenance)
            .field("has_second", &self.second.is_some())
            .finish()
    }
}

fn closed(g: fn(Colatitude) -> f64) -> Curve {
    Arc::new(move |t| g(Colatitude::new(t).unwrap_or(Colatitude::EQUATOR)))
}

impl RadialFunction {
    /// Builds an analytic radial function from explicit value and derivative closures.
    pub fn analytic<V, D>(label: impl Into<String>, value: V, derivative: D) -> Self
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        RadialFunction {
            value: Arc::new(value),
            derivative: Arc::new(derivative),
            second: None,
            provenance: Provenance::Analytic,
            label: label.into(),
        }
    }

    pub fn with_second_derivative<S>(mut self, second: S) -> Self
    where
        S: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.second = Some(Arc::new(second));
        self
    }

    /// The stress-minimizing closed form.
    pub fn closed_form() -> Self {
        RadialFunction {
            value: closed(closedform::eval_f),
            derivative: closed(closedform::eval_f_prime),
            second: Some(closed(closedform::eval_f_second)),
            provenance: Provenance::ClosedForm,
            label: "stress-minimal".into(),
        }
    }

    /// `f(θ) = θ`, the straight line of the equidistant two-sided map.
    pub fn identity() -> Self {
        Self::scaled_identity(1.0)
    }

    pub fn scaled_identity(c: f64) -> Self {
        let label = if c == 1.0 {
            "identity".to_string()
        } else {
            format!("{c}*identity")
        };
        Self::analytic(label, move |t| c * t, move |_| c).with_second_derivative(|_| 0.0)
    }

    pub fn sine() -> Self {
        Self::analytic("sine", f64::sin, f64::cos).with_second_derivative(|t| -t.sin())
    }

    pub fn zero() -> Self {
        Self::scaled_identity(0.0)
    }

    /// Piecewise cubic Hermite interpolant of a sampled profile.
    ///
    /// Node slopes use second-order finite differences; the second derivative is
    /// a linear interpolation of node-wise finite-difference curvatures.
    pub fn from_profile(profile: &RadialProfile) -> Self {
        let interp = Arc::new(HermiteProfile::new(profile));
        let (a, b, c) = (interp.clone(), interp.clone(), interp);
        RadialFunction {
            value: Arc::new(move |t| a.value(t)),
            derivative: Arc::new(move |t| b.derivative(t)),
            second: Some(Arc::new(move |t| c.second(t))),
            provenance: Provenance::Sampled,
            label: "sampled profile".into(),
        }
    }

    /// `self + eps·other`; the second derivative survives only if both have one.
    pub fn plus_scaled(&self, other: &RadialFunction, eps: f64) -> Self {
        let (v0, v1) = (self.value.clone(), other.value.clone());
        let (d0, d1) = (self.derivative.clone(), other.derivative.clone());
        let second: Option<Curve> = match (&self.second, &other.second) {
            (Some(s0), Some(s1)) => {
                let (s0, s1) = (s0.clone(), s1.clone());
                Some(Arc::new(move |t| s0(t) + eps * s1(t)))
            }
            _ => None,
        };
        RadialFunction {
            value: Arc::new(move |t| v0(t) + eps * v1(t)),
            derivative: Arc::new(move |t| d0(t) + eps * d1(t)),
            second,
            provenance: Provenance::Analytic,
            label: format!("{} + {eps}*({})", self.label, other.label),
        }
    }

    #[inline]
    pub fn value(&self, theta: f64) -> f64 {
        (self.value)(theta)
    }

    #[inline]
    pub fn derivative(&self, theta: f64) -> f64 {
        (self.derivative)(theta)
    }

    pub fn second_derivative(&self, theta: f64) -> Option<f64> {
        self.second.as_ref().map(|s| s(theta))
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Checks `f(0) = 0` and derivative/value consistency on a spot grid.
    pub fn validate(&self) -> Result<()> {
        let v0 = self.value(0.0);
        if v0.is_nan() || v0.abs() > 1e-10 {
            return Err(Error::InvalidRadialFunction(format!(
                "{}: value at theta = 0 is {v0}, expected 0",
                self.label
            )));
        }
        let step = 1e-6;
        for i in 0..=32 {
            let t = 1e-3 + (FRAC_PI_2 - 2e-3) * i as f64 / 32.0;
            let fd = (self.value(t + step) - self.value(t - step)) / (2.0 * step);
            let d = self.derivative(t);
            if (fd - d).is_nan() || (fd - d).abs() > 1e-6 {
                return Err(Error::InvalidRadialFunction(format!(
                    "{}: derivative {d} disagrees with finite difference {fd} at theta = {t}",
                    self.label
                )));
            }
        }
        Ok(())
    }
}

struct HermiteProfile {
    h: f64,
    values: Vec<f64>,
    slopes: Vec<f64>,
    curvatures: Vec<f64>,
}

impl HermiteProfile {
    fn new(profile: &RadialProfile) -> Self {
        let y = profile.values();
        let n = y.len() - 1;
        let h = profile.step();

        let mut slopes = vec![0.0; n + 1];
        slopes[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
        slopes[n] = (3.0 * y[n] - 4.0 * y[n - 1] + y[n - 2]) / (2.0 * h);
        for i in 1..n {
            slopes[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
        }

        let h2 = h * h;
        let mut curvatures = vec![0.0; n + 1];
        let one_sided = |a: f64, b: f64, c: f64, d: f64, e: f64| {
            (35.0 / 12.0 * a - 26.0 / 3.0 * b + 19.0 / 2.0 * c - 14.0 / 3.0 * d + 11.0 / 12.0 * e)
                / h2
        };
        curvatures[0] = one_sided(y[0], y[1], y[2], y[3], y[4]);
        curvatures[n] = one_sided(y[n], y[n - 1], y[n - 2], y[n - 3], y[n - 4]);
        for i in 1..n {
            curvatures[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / h2;
        }

        HermiteProfile {
            h,
            values: y.to_vec(),
            slopes,
            curvatures,
        }
    }

    fn locate(&self, theta: f64) -> (usize, f64) {
        let n = self.values.len() - 1;
        let x = (theta / self.h).clamp(0.0, n as f64);
        let i = (x.floor() as usize).min(n - 1);
        (i, x - i as f64)
    }

    fn value(&self, theta: f64) -> f64 {
        let (i, t) = self.locate(theta);
        let (t2, t3) = (t * t, t * t * t);
        let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        h00 * self.values[i]
            + h10 * self.h * self.slopes[i]
            + h01 * self.values[i + 1]
            + h11 * self.h * self.slopes[i + 1]
    }

    fn derivative(&self, theta: f64) -> f64 {
        let (i, t) = self.locate(theta);
        let t2 = t * t;
        let d00 = 6.0 * t2 - 6.0 * t;
        let d10 = 3.0 * t2 - 4.0 * t + 1.0;
        let d11 = 3.0 * t2 - 2.0 * t;
        d00 * (self.values[i] - self.values[i + 1]) / self.h
            + d10 * self.slopes[i]
            + d11 * self.slopes[i + 1]
    }

    fn second(&self, theta: f64) -> f64 {
        let (i, t) = self.locate(theta);
        (1.0 - t) * self.curvatures[i] + t * self.curvatures[i + 1]
    }
}
