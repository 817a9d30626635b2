//! Reference values from the arithmetic–geometric mean.
//!
//! `sn`, `cn`, `dn` follow the descending Landen scheme: run the AGM of
//! `(1, κ')` down to level `N`, set `φ_N = 2^N a_N u`, then walk back with
//! `φ_{n−1} = (φ_n + asin(c_n / a_n · sin φ_n)) / 2`. Nothing here calls into
//! the ODE or quadrature code; this module is the yardstick for both.

use crate::error::{Error, Result};

/// Hard cap on AGM levels. Quadratic convergence needs about six for any
/// modulus below 0.999.
pub const MAX_LEVELS: usize = 40;

const REL_TOL: f64 = 1e-15;

/// One level of the AGM iteration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AgmState {
    pub a: f64,
    pub b: f64,
    /// `(a_prev − b_prev) / 2`; at level 0 it is whatever the caller seeds.
    pub c: f64,
    pub level: usize,
}

/// Full AGM sequence starting at `(a, b)` with `c₀ = c0`.
pub fn agm_trace(a: f64, b: f64, c0: f64) -> Result<Vec<AgmState>> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("agm needs positive inputs, got ({a}, {b})")));
    }
    let mut states = vec![AgmState { a, b, c: c0, level: 0 }];
    let (mut a, mut b) = (a, b);
    for level in 1..=MAX_LEVELS {
        if (a - b).abs() <= REL_TOL * a.max(b) {
            return Ok(states);
        }
        let c = 0.5 * (a - b);
        let next_a = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next_a;
        states.push(AgmState { a, b, c, level });
    }
    Err(Error::NoConvergence {
        what: "arithmetic-geometric mean",
        iterations: MAX_LEVELS,
    })
}

/// Arithmetic–geometric mean of two positive numbers.
pub fn agm(a: f64, b: f64) -> Result<f64> {
    let trace = agm_trace(a, b, 0.0)?;
    let last = trace.last().expect("trace has at least the seed");
    Ok(0.5 * (last.a + last.b))
}

fn check_modulus(kappa: f64) -> Result<()> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::ModulusOutOfRange { kappa });
    }
    Ok(())
}

fn complementary(kappa: f64) -> f64 {
    ((1.0 - kappa) * (1.0 + kappa)).sqrt()
}

/// Quarter period `K(κ) = π / (2·agm(1, κ'))`.
pub fn complete_k_agm(kappa: f64) -> Result<f64> {
    check_modulus(kappa)?;
    Ok(std::f64::consts::FRAC_PI_2 / agm(1.0, complementary(kappa))?)
}

/// `(sn, cn, dn)` at `(u, κ)` by the descending Landen recursion.
pub fn jacobi_agm(u: f64, kappa: f64) -> Result<(f64, f64, f64)> {
    check_modulus(kappa)?;
    if !u.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {u}")));
    }
    if kappa == 0.0 {
        return Ok((u.sin(), u.cos(), 1.0));
    }
    let trace = agm_trace(1.0, complementary(kappa), kappa)?;
    let n = trace.len() - 1;
    let mut phi = 2f64.powi(n as i32) * trace[n].a * u;
    for state in trace[1..].iter().rev() {
        phi = 0.5 * (phi + (state.c / state.a * phi.sin()).asin());
    }
    let sn = phi.sin();
    Ok((sn, phi.cos(), (1.0 - kappa * kappa * sn * sn).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn agm_fixed_point_and_symmetry() {
        assert_eq!(agm(1.0, 1.0).unwrap(), 1.0);
        let x = agm(1.0, 0.5).unwrap();
        let y = agm(0.5, 1.0).unwrap();
        assert!((x - y).abs() < 1e-15);
        // Gauss's constant scaled: agm(1, 0.5) = 0.72839551552345343...
        assert!((x - 0.728_395_515_523_453_4).abs() < 1e-15);
    }

    #[test]
    fn agm_converges_quickly() {
        let trace = agm_trace(1.0, 0.5, 0.0).unwrap();
        assert!(trace.len() - 1 <= 8, "levels = {}", trace.len() - 1);
        for s in &trace[1..] {
            assert!(s.a >= s.b);
        }
    }

    #[test]
    fn agm_rejects_bad_input() {
        assert!(agm(0.0, 1.0).is_err());
        assert!(agm(1.0, -2.0).is_err());
        assert!(agm(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn quarter_period_limit() {
        assert_eq!(FRAC_PI_2 / agm(1.0, 1.0).unwrap(), FRAC_PI_2);
        assert_eq!(complete_k_agm(0.0).unwrap(), FRAC_PI_2);
        assert!(complete_k_agm(1.0).is_err());
    }

    #[test]
    fn trigonometric_limit_is_exact() {
        for u in [0.0, 0.3, 1.0, 2.5, -4.0, 17.0] {
            assert_eq!(jacobi_agm(u, 0.0).unwrap(), (u.sin(), u.cos(), 1.0));
        }
    }

    #[test]
    fn origin() {
        for k in [0.0, 0.2, 0.7, 0.99] {
            assert_eq!(jacobi_agm(0.0, k).unwrap(), (0.0, 1.0, 1.0));
        }
    }

    #[test]
    fn pythagorean_identities() {
        let k = 0.8;
        let (sn, cn, dn) = jacobi_agm(1.3, k).unwrap();
        assert!((sn * sn + cn * cn - 1.0).abs() < 1e-12);
        assert!((dn * dn + k * k * sn * sn - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quarter_period_values() {
        for k in [0.1, 0.5, 0.9] {
            let kk = complete_k_agm(k).unwrap();
            let (sn, cn, dn) = jacobi_agm(kk, k).unwrap();
            assert!((sn - 1.0).abs() < 1e-12);
            assert!(cn.abs() < 1e-8);
            assert!((dn - (1.0 - k * k).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_modulus() {
        assert!(matches!(jacobi_agm(1.0, 1.0), Err(Error::ModulusOutOfRange { .. })));
        assert!(matches!(jacobi_agm(1.0, -0.1), Err(Error::ModulusOutOfRange { .. })));
    }
}
