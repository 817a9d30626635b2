//! Vector-field realization `T_l = f_l(u) d/du` and the coupled ODE triplet
//! it induces.
//!
//! Matching the vector-field brackets to the deformed structure constants
//! gives
//!
//! ```text
//! f_l' / K_l² + f_j f_k = 0,   (j, k, l) cyclic,   K₁² = κ², K₂² = −1, K₃² = 1
//! ```
//!
//! i.e. `f₁' = −κ² f₂ f₃`, `f₂' = f₁ f₃`, `f₃' = −f₁ f₂`. Started from
//! `(f₁, f₂, f₃)(0) = (−1, 0, −1)` the solution is `(−dn, sn, −cn)`, with the
//! two quadratic invariants `f₂² + f₃² = 1` and `f₁² + κ² f₂² = 1`.

use serde::{Deserialize, Serialize};

use crate::ellint;
use crate::error::{Error, Result};

/// State of the triplet at argument `u`. Signs are the internal
/// `(−dn, sn, −cn)` convention.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiTriple {
    pub u: f64,
    pub kappa: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
}

impl JacobiTriple {
    /// Initial point `(−1, 0, −1)` at `u = 0`.
    pub fn initial(kappa: f64) -> Self {
        Self {
            u: 0.0,
            kappa,
            f1: -1.0,
            f2: 0.0,
            f3: -1.0,
        }
    }

    pub fn sn(&self) -> f64 {
        self.f2
    }

    pub fn cn(&self) -> f64 {
        -self.f3
    }

    pub fn dn(&self) -> f64 {
        -self.f1
    }

    /// `|f₂² + f₃² − 1|`.
    pub fn circle_defect(&self) -> f64 {
        (self.f2 * self.f2 + self.f3 * self.f3 - 1.0).abs()
    }

    /// `|f₁² + κ² f₂² − 1|`.
    pub fn modulus_defect(&self) -> f64 {
        (self.f1 * self.f1 + self.kappa * self.kappa * self.f2 * self.f2 - 1.0).abs()
    }

    fn values(&self) -> [f64; 3] {
        [self.f1, self.f2, self.f3]
    }

    fn with_values(&self, u: f64, f: [f64; 3]) -> Self {
        Self {
            u,
            kappa: self.kappa,
            f1: f[0],
            f2: f[1],
            f3: f[2],
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FixedRk4,
    #[default]
    AdaptiveRk45,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegratorConfig {
    /// Initial step for the adaptive method, fixed step for RK4.
    pub step: f64,
    /// Local error tolerance per step (max norm).
    pub tol: f64,
    pub method: Method,
    /// Project back onto both invariant surfaces after every step.
    pub renormalize: bool,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self {
            step: 0.01,
            tol: 1e-11,
            method: Method::AdaptiveRk45,
            renormalize: false,
        }
    }
}

impl IntegratorConfig {
    pub fn fixed_rk4(step: f64) -> Self {
        Self {
            step,
            method: Method::FixedRk4,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step.is_finite() && self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "step and tol must be positive (step = {}, tol = {})",
                self.step, self.tol
            )));
        }
        if self.tol < MIN_TOL {
            return Err(Error::InvalidConfig(format!(
                "tol = {:e} is below the rounding floor {MIN_TOL:e}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// Smallest local tolerance the error estimate can resolve for O(1) states.
pub const MIN_TOL: f64 = 1e-15;

fn check_modulus(kappa: f64) -> Result<()> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::ModulusOutOfRange { kappa });
    }
    Ok(())
}

fn field(kappa: f64, f: [f64; 3]) -> [f64; 3] {
    let [f1, f2, f3] = f;
    [-kappa * kappa * f2 * f3, f1 * f3, -f1 * f2]
}

/// Derivatives `(f₁', f₂', f₃') = (−κ² f₂ f₃, f₁ f₃, −f₁ f₂)`.
pub fn vector_field(state: &JacobiTriple) -> [f64; 3] {
    field(state.kappa, state.values())
}

fn axpy(y: [f64; 3], h: f64, terms: &[(f64, [f64; 3])]) -> [f64; 3] {
    let mut out = y;
    for (c, k) in terms {
        for i in 0..3 {
            out[i] += h * c * k[i];
        }
    }
    out
}

fn rk4_step(kappa: f64, y: [f64; 3], h: f64) -> [f64; 3] {
    let k1 = field(kappa, y);
    let k2 = field(kappa, axpy(y, 0.5 * h, &[(1.0, k1)]));
    let k3 = field(kappa, axpy(y, 0.5 * h, &[(1.0, k2)]));
    let k4 = field(kappa, axpy(y, h, &[(1.0, k3)]));
    axpy(y, h / 6.0, &[(1.0, k1), (2.0, k2), (2.0, k3), (1.0, k4)])
}

// Dormand–Prince 5(4) tableau. The field is autonomous, so the stage
// abscissae are not needed.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// fifth-order weights minus embedded fourth-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// One Dormand–Prince step; returns the fifth-order solution and the
/// max-norm error estimate.
fn dopri_step(kappa: f64, y: [f64; 3], h: f64) -> ([f64; 3], f64) {
    let k1 = field(kappa, y);
    let k2 = field(kappa, axpy(y, h, &[(A21, k1)]));
    let k3 = field(kappa, axpy(y, h, &[(A31, k1), (A32, k2)]));
    let k4 = field(kappa, axpy(y, h, &[(A41, k1), (A42, k2), (A43, k3)]));
    let k5 = field(kappa, axpy(y, h, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]));
    let k6 = field(
        kappa,
        axpy(y, h, &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)]),
    );
    let next = axpy(y, h, &[(B1, k1), (B3, k3), (B4, k4), (B5, k5), (B6, k6)]);
    let k7 = field(kappa, next);
    let err = axpy(
        [0.0; 3],
        h,
        &[(E1, k1), (E3, k3), (E4, k4), (E5, k5), (E6, k6), (E7, k7)],
    );
    let err_norm = err.iter().fold(0.0_f64, |m, e| m.max(e.abs()));
    (next, err_norm)
}

fn project(kappa: f64, f: [f64; 3]) -> [f64; 3] {
    let r = f[1].hypot(f[2]);
    let f2 = f[1] / r;
    let f3 = f[2] / r;
    let f1 = (1.0 - kappa * kappa * f2 * f2).sqrt().copysign(f[0]);
    [f1, f2, f3]
}

/// Integrates from `start` to argument `u_end` (either direction) and calls
/// `visit` on every accepted state, including the final one.
fn drive(
    start: JacobiTriple,
    u_end: f64,
    cfg: &IntegratorConfig,
    mut visit: impl FnMut(&JacobiTriple),
) -> Result<JacobiTriple> {
    cfg.validate()?;
    let kappa = start.kappa;
    let span = u_end - start.u;
    if span == 0.0 {
        visit(&start);
        return Ok(start);
    }
    let dir = span.signum();
    let mut u = start.u;
    let mut y = start.values();
    match cfg.method {
        Method::FixedRk4 => {
            let n = (span.abs() / cfg.step).ceil().max(1.0) as usize;
            let h = span / n as f64;
            for i in 1..=n {
                y = rk4_step(kappa, y, h);
                if cfg.renormalize {
                    y = project(kappa, y);
                }
                u = if i == n { u_end } else { start.u + h * i as f64 };
                visit(&start.with_values(u, y));
            }
        }
        Method::AdaptiveRk45 => {
            let mut h = cfg.step.min(span.abs());
            let h_min = 1e-14 * u_end.abs().max(1.0);
            loop {
                let remaining = (u_end - u).abs();
                if remaining <= 0.0 {
                    break;
                }
                let last = h >= remaining;
                if !last && h < h_min {
                    return Err(Error::StepFailure { u, step: h });
                }
                let step = if last { remaining } else { h };
                let (next, err) = dopri_step(kappa, y, dir * step);
                if !err.is_finite() {
                    return Err(Error::StepFailure { u, step });
                }
                if err <= cfg.tol {
                    y = if cfg.renormalize { project(kappa, next) } else { next };
                    u = if last { u_end } else { u + dir * step };
                    visit(&start.with_values(u, y));
                }
                let factor = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * (cfg.tol / err).powf(0.2)).clamp(0.2, 5.0)
                };
                h = step * factor;
            }
        }
    }
    Ok(start.with_values(u, y))
}

/// Accepted states from `u = 0` to `u_end`, no periodic reduction.
pub fn trajectory(u_end: f64, kappa: f64, cfg: &IntegratorConfig) -> Result<Vec<JacobiTriple>> {
    check_modulus(kappa)?;
    check_argument(u_end)?;
    let start = JacobiTriple::initial(kappa);
    let mut states = vec![start];
    drive(start, u_end, cfg, |s| states.push(*s))?;
    Ok(states)
}

fn check_argument(u: f64) -> Result<()> {
    if !u.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {u}")));
    }
    Ok(())
}

/// Reduces `u` into `[−2K, 2K]` using the `4K` period.
pub fn reduce_argument(u: f64, kappa: f64) -> Result<f64> {
    let period = 4.0 * ellint::complete_k(kappa)?;
    Ok(u - period * (u / period).round())
}

/// State at `u` with the default configuration.
pub fn integrate(u: f64, kappa: f64) -> Result<JacobiTriple> {
    integrate_with(u, kappa, &IntegratorConfig::default())
}

/// State at `u`. The argument is first reduced modulo `4K`; negative
/// arguments run the field backwards.
pub fn integrate_with(u: f64, kappa: f64, cfg: &IntegratorConfig) -> Result<JacobiTriple> {
    check_modulus(kappa)?;
    check_argument(u)?;
    let r = reduce_argument(u, kappa)?;
    let end = drive(JacobiTriple::initial(kappa), r, cfg, |_| {})?;
    Ok(JacobiTriple { u, ..end })
}

/// `(sn, cn, dn)` with standard signs.
pub fn jacobi(u: f64, kappa: f64) -> Result<(f64, f64, f64)> {
    let s = integrate(u, kappa)?;
    Ok((s.sn(), s.cn(), s.dn()))
}

pub fn sn(u: f64, kappa: f64) -> Result<f64> {
    Ok(integrate(u, kappa)?.sn())
}

pub fn cn(u: f64, kappa: f64) -> Result<f64> {
    Ok(integrate(u, kappa)?.cn())
}

pub fn dn(u: f64, kappa: f64) -> Result<f64> {
    Ok(integrate(u, kappa)?.dn())
}

/// `(tanh u, sech u, sech u)`: the `κ → 1` limit, which the main API
/// rejects.
pub fn limit_kappa1(u: f64) -> (f64, f64, f64) {
    let sech = u.cosh().recip();
    (u.tanh(), sech, sech)
}

/// Coefficients of `d²/du²` and `d/du` in the differential Casimir
/// `T₁² − T₂² − (1−κ²) T₃²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CasimirCoefficients {
    /// From the generator expansion `(f d/du)² = f² d²/du² + f f' d/du`.
    pub expansion: (f64, f64),
    /// `(κ²(cn² − sn²), −2κ² sn cn dn)`.
    pub closed_form: (f64, f64),
}

impl CasimirCoefficients {
    pub fn residual(&self) -> f64 {
        (self.expansion.0 - self.closed_form.0)
            .abs()
            .max((self.expansion.1 - self.closed_form.1).abs())
    }
}

pub const CASIMIR_TOL: f64 = 1e-9;

/// Both routes to the Casimir coefficients at a given state.
pub fn casimir_coefficients_at(state: &JacobiTriple) -> CasimirCoefficients {
    let k2 = state.kappa * state.kappa;
    let [f1, f2, f3] = state.values();
    let [d1, d2, d3] = vector_field(state);
    let expansion = (
        f1 * f1 - f2 * f2 - (1.0 - k2) * f3 * f3,
        f1 * d1 - f2 * d2 - (1.0 - k2) * f3 * d3,
    );
    let (sn, cn, dn) = (state.sn(), state.cn(), state.dn());
    let closed_form = (k2 * (cn * cn - sn * sn), -2.0 * k2 * sn * cn * dn);
    CasimirCoefficients {
        expansion,
        closed_form,
    }
}

/// Returns `(c2, c1)` in closed form after checking that the generator
/// expansion agrees within [`CASIMIR_TOL`].
pub fn differential_casimir_coefficients(u: f64, kappa: f64) -> Result<(f64, f64)> {
    let coeffs = casimir_coefficients_at(&integrate(u, kappa)?);
    let residual = coeffs.residual();
    if residual > CASIMIR_TOL {
        return Err(Error::RouteDisagreement {
            what: "differential Casimir coefficients",
            residual,
            tol: CASIMIR_TOL,
        });
    }
    Ok(coeffs.closed_form)
}
