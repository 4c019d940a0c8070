//! Stress of a flattened hemisphere.
//!
//! With the vertical coordinate flattened to zero, a radial map `f` stretches
//! meridians by `f'` and parallels by `f / sin θ`. The two stress components
//! are those ratios minus one, and the total stress integrates their squares
//! against the sphere's area element `2π sin θ dθ`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::closedform::Colatitude;
use crate::error::{Error, Result};
use crate::quadrature::simpson;

pub use crate::radial::{Provenance, RadialFunction};

/// Smallest grid accepted by [`total_stress`] and [`second_variation`].
pub const MIN_GRID: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressReport {
    pub total: f64,
    /// Meridional contribution, `2π∫σ² sin θ dθ`.
    pub tangential_part: f64,
    /// Parallel (hoop) contribution, `2π∫ρ² sin θ dθ`.
    pub hoop_part: f64,
    pub grid_size: usize,
}

/// Meridional stress `σ = f' − 1`.
pub fn sigma(rf: &RadialFunction, theta: Colatitude) -> f64 {
    rf.derivative(theta.radians()) - 1.0
}

/// Hoop stress `ρ = f / sin θ − 1`, with the pole limit `f'(0) − 1`.
pub fn rho(rf: &RadialFunction, theta: Colatitude) -> f64 {
    hoop_ratio(rf, theta.radians()) - 1.0
}

fn hoop_ratio(rf: &RadialFunction, t: f64) -> f64 {
    if t == 0.0 {
        rf.derivative(0.0)
    } else {
        rf.value(t) / t.sin()
    }
}

fn check_grid(grid_size: usize) -> Result<()> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid_size must be at least {MIN_GRID}, got {grid_size}"
        )));
    }
    if !grid_size.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "grid_size must be even for Simpson quadrature, got {grid_size}"
        )));
    }
    Ok(())
}

/// Total stress `S(f) = ∫₀^{π/2} ((f'−1)² + (f/sin θ − 1)²)·2π sin θ dθ`.
pub fn total_stress(rf: &RadialFunction, grid_size: usize) -> Result<StressReport> {
    check_grid(grid_size)?;
    let tangential = simpson(
        |t| {
            let s = rf.derivative(t) - 1.0;
            s * s * t.sin()
        },
        0.0,
        FRAC_PI_2,
        grid_size,
    )?;
    let hoop = simpson(
        |t| {
            let r = hoop_ratio(rf, t) - 1.0;
            r * r * t.sin()
        },
        0.0,
        FRAC_PI_2,
        grid_size,
    )?;
    let tangential_part = 2.0 * PI * tangential;
    let hoop_part = 2.0 * PI * hoop;
    Ok(StressReport {
        total: tangential_part + hoop_part,
        tangential_part,
        hoop_part,
        grid_size,
    })
}

/// Second variation `4π∫(δ'² + δ²/sin²θ) sin θ dθ` of `S` at `rf` in direction `perturbation`.
///
/// `S` is quadratic, so the result does not depend on `rf`; it is accepted to
/// keep the call shaped like the variation it computes.
pub fn second_variation(
    _rf: &RadialFunction,
    perturbation: &RadialFunction,
    grid_size: usize,
) -> Result<f64> {
    check_grid(grid_size)?;
    let at_pole = perturbation.value(0.0);
    if at_pole.is_nan() || at_pole.abs() > 1e-10 {
        return Err(Error::PerturbationBoundary { value: at_pole });
    }
    let integral = simpson(
        |t| {
            let d = perturbation.derivative(t);
            let q = hoop_ratio(perturbation, t);
            (d * d + q * q) * t.sin()
        },
        0.0,
        FRAC_PI_2,
        grid_size,
    )?;
    Ok(4.0 * PI * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::POLE_SLOPE;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::FRAC_PI_4;

    fn col(t: f64) -> Colatitude {
        Colatitude::new(t).unwrap()
    }

    /// Smooth perturbation `Σ aₖ sin(kθ) + b·θ²`, zero at the pole.
    fn perturbation(a: [f64; 4], b: f64) -> RadialFunction {
        RadialFunction::analytic(
            "perturbation",
            move |t| {
                a.iter()
                    .enumerate()
                    .map(|(k, ak)| ak * ((k + 1) as f64 * t).sin())
                    .sum::<f64>()
                    + b * t * t
            },
            move |t| {
                a.iter()
                    .enumerate()
                    .map(|(k, ak)| ak * (k + 1) as f64 * ((k + 1) as f64 * t).cos())
                    .sum::<f64>()
                    + 2.0 * b * t
            },
        )
    }

    #[test]
    fn sigma_examples() {
        let star = RadialFunction::closed_form();
        assert_abs_diff_eq!(sigma(&star, Colatitude::EQUATOR), 0.0, epsilon = 1e-14);
        assert_eq!(sigma(&RadialFunction::identity(), col(0.3)), 0.0);
        assert_abs_diff_eq!(
            sigma(&star, Colatitude::POLE),
            -0.153_426_409_720_027_3,
            epsilon = 1e-15
        );
    }

    #[test]
    fn rho_examples() {
        assert_abs_diff_eq!(
            rho(&RadialFunction::identity(), col(FRAC_PI_4)),
            0.110_720_734_539_591_6,
            epsilon = 1e-15
        );
        for i in 1..=10 {
            assert_abs_diff_eq!(
                rho(&RadialFunction::sine(), col(i as f64 * 0.15)),
                0.0,
                epsilon = 1e-15
            );
        }
        let star = RadialFunction::closed_form();
        assert_abs_diff_eq!(
            rho(&star, Colatitude::POLE),
            POLE_SLOPE - 1.0,
            epsilon = 1e-15
        );
        assert_eq!(rho(&star, Colatitude::POLE), sigma(&star, Colatitude::POLE));
    }

    #[test]
    fn total_stress_examples() {
        let s = total_stress(&RadialFunction::sine(), 1024).unwrap();
        assert_abs_diff_eq!(s.total, 2.0 * PI / 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(s.hoop_part, 0.0, epsilon = 1e-15);

        let z = total_stress(&RadialFunction::zero(), 1024).unwrap();
        assert_abs_diff_eq!(z.total, 4.0 * PI, epsilon = 1e-10);
        assert_abs_diff_eq!(z.tangential_part, 2.0 * PI, epsilon = 1e-10);

        // Quadrature values checked against a 40-digit adaptive quadrature.
        let star = total_stress(&RadialFunction::closed_form(), 1024).unwrap();
        assert_abs_diff_eq!(star.total, 0.245_634_671_497_601_4, epsilon = 1e-10);
        let line = total_stress(&RadialFunction::identity(), 1024).unwrap();
        assert_abs_diff_eq!(line.total, 0.506_307_252_039_764_6, epsilon = 1e-10);
        assert!(star.total > 0.0 && star.total < line.total);
        assert_eq!(star.grid_size, 1024);
        assert_abs_diff_eq!(star.total, star.tangential_part + star.hoop_part);
    }

    #[test]
    fn grid_checks_and_nonfinite_integrand() {
        let rf = RadialFunction::identity();
        assert!(total_stress(&rf, 8).is_err());
        assert!(total_stress(&rf, 17).is_err());
        let poison =
            RadialFunction::analytic("poison", |t| t, |t| if t > 1.0 { f64::NAN } else { 1.0 });
        match total_stress(&poison, 16) {
            Err(Error::NonFiniteIntegrand { theta }) => assert!(theta > 1.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn second_variation_examples() {
        let star = RadialFunction::closed_form();
        assert_eq!(
            second_variation(&star, &RadialFunction::zero(), 64).unwrap(),
            0.0
        );
        let v = second_variation(&star, &RadialFunction::sine(), 1024).unwrap();
        assert_abs_diff_eq!(v, 16.0 * PI / 3.0, epsilon = 1e-9);
        let shifted = RadialFunction::analytic("shifted", |t| t + 1.0, |_| 1.0);
        assert!(matches!(
            second_variation(&star, &shifted, 64),
            Err(Error::PerturbationBoundary { .. })
        ));
    }

    #[test]
    fn quadrature_converges() {
        for rf in [RadialFunction::closed_form(), RadialFunction::identity()] {
            let a = total_stress(&rf, 512).unwrap().total;
            let b = total_stress(&rf, 1024).unwrap().total;
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn minimizer_beats_scaled_lines() {
        let star = total_stress(&RadialFunction::closed_form(), 1024)
            .unwrap()
            .total;
        for c in [0.8, 0.9, 1.0, 1.1] {
            let line = total_stress(&RadialFunction::scaled_identity(c), 1024)
                .unwrap()
                .total;
            assert!(star < line, "c = {c}: {star} vs {line}");
        }
    }

    #[test]
    fn stationarity_and_convexity_for_random_perturbations() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let star = RadialFunction::closed_form();
        let s0 = total_stress(&star, 1024).unwrap().total;
        let eps = 1e-3;
        for _ in 0..100 {
            let a = [(); 4].map(|_| rng.gen_range(-1.0..1.0));
            let delta = perturbation(a, rng.gen_range(-1.0..1.0));
            let plus = total_stress(&star.plus_scaled(&delta, eps), 1024)
                .unwrap()
                .total;
            let minus = total_stress(&star.plus_scaled(&delta, -eps), 1024)
                .unwrap()
                .total;
            assert!(plus + minus - 2.0 * s0 >= -1e-9);
            let first = (plus - minus).abs() / (2.0 * eps);
            assert!(first < 1e-6, "first variation {first}");
            let second = second_variation(&star, &delta, 1024).unwrap();
            let fd = (plus - 2.0 * s0 + minus) / (eps * eps);
            assert!(
                (fd - second).abs() < 1e-5 * second.max(1.0),
                "{fd} vs {second}"
            );
        }
    }

    #[test]
    fn quadratic_identity_is_independent_of_eps() {
        let star = RadialFunction::closed_form();
        let delta = perturbation([0.3, -0.2, 0.1, 0.05], 0.2);
        let s0 = total_stress(&star, 1024).unwrap().total;
        let exact = second_variation(&star, &delta, 1024).unwrap();
        for eps in [1e-1, 1e-2, 0.5] {
            let plus = total_stress(&star.plus_scaled(&delta, eps), 1024)
                .unwrap()
                .total;
            let minus = total_stress(&star.plus_scaled(&delta, -eps), 1024)
                .unwrap()
                .total;
            let fd = (plus - 2.0 * s0 + minus) / (eps * eps);
            assert!(
                (fd - exact).abs() < 1e-8 * exact,
                "eps {eps}: {fd} vs {exact}"
            );
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn second_variation_is_nonnegative(
            a0 in -5.0f64..5.0, a1 in -5.0f64..5.0, a2 in -5.0f64..5.0, a3 in -5.0f64..5.0,
            b in -5.0f64..5.0,
        ) {
            let v = second_variation(
                &RadialFunction::closed_form(),
                &perturbation([a0, a1, a2, a3], b),
                128,
            ).unwrap();
            prop_assert!(v >= 0.0);
        }
    }
}
