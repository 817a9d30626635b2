//! Inverse Jacobi functions as first-kind elliptic integrals, and their
//! inversion back to `sn`, `cn`, `dn`.
//!
//! The integrands `[(1−t²)(…)]^{−1/2}` have inverse-square-root endpoints.
//! Each one is mapped onto the amplitude form
//!
//! ```text
//! F(φ, κ) = ∫₀^φ (1 − κ² sin²θ)^{−1/2} dθ
//! ```
//!
//! by an analytic substitution (`t = sin θ` for `sn⁻¹`, `t = cos θ` for
//! `cn⁻¹`, `t² = 1 − κ² sin²θ` for `dn⁻¹`), leaving a smooth integrand for
//! the adaptive Gauss–Kronrod rule.

use crate::error::{Error, Result};

use std::f64::consts::{FRAC_PI_2, PI};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-13,
            max_depth: 30,
        }
    }
}

impl QuadratureConfig {
    fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) || self.max_depth < 1 {
            return Err(Error::InvalidConfig(format!("{self:?}")));
        }
        Ok(())
    }
}

/// Integral value with its accumulated error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

// 7-point Gauss / 15-point Kronrod nodes on [−1, 1] (non-negative half).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = half * XGK[i];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive bisection on top of the G7–K15 pair.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    cfg.validate()?;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        });
    }
    let mut out = QuadResult {
        value: 0.0,
        error: 0.0,
        evaluations: 0,
    };
    refine(&f, a, b, cfg.abs_tol, cfg, 0, &mut out)?;
    Ok(out)
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    cfg: &QuadratureConfig,
    depth: u32,
    out: &mut QuadResult,
) -> Result<()> {
    let (value, error) = gauss_kronrod(f, a, b);
    out.evaluations += 15;
    if !value.is_finite() {
        return Err(Error::Domain(format!("non-finite integrand on [{a}, {b}]")));
    }
    if error <= abs_tol.max(cfg.rel_tol * value.abs()) || depth >= cfg.max_depth {
        if error > abs_tol.max(cfg.rel_tol * value.abs()) {
            return Err(Error::NoConvergence {
                what: "adaptive quadrature",
                iterations: depth as usize,
            });
        }
        out.value += value;
        out.error += error;
        return Ok(());
    }
    let mid = 0.5 * (a + b);
    refine(f, a, mid, 0.5 * abs_tol, cfg, depth + 1, out)?;
    refine(f, mid, b, 0.5 * abs_tol, cfg, depth + 1, out)
}

fn check_modulus(kappa: f64) -> Result<()> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(Error::ModulusOutOfRange { kappa });
    }
    Ok(())
}

fn check_unit(x: f64, what: &str) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("{what} argument {x} outside [-1, 1]")));
    }
    Ok(())
}

/// Incomplete integral `F(φ, κ)` with error estimate.
pub fn incomplete_f_with(phi: f64, kappa: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_modulus(kappa)?;
    let k2 = kappa * kappa;
    integrate(|t| (1.0 - k2 * t.sin().powi(2)).sqrt().recip(), 0.0, phi, cfg)
}

pub fn incomplete_f(phi: f64, kappa: f64) -> Result<f64> {
    Ok(incomplete_f_with(phi, kappa, &QuadratureConfig::default())?.value)
}

/// `sn⁻¹(x, κ) = ∫₀^x [(1−t²)(1−κ²t²)]^{−1/2} dt`.
pub fn asn_with(x: f64, kappa: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_unit(x, "sn^-1")?;
    incomplete_f_with(x.asin(), kappa, cfg)
}

pub fn asn(x: f64, kappa: f64) -> Result<f64> {
    Ok(asn_with(x, kappa, &QuadratureConfig::default())?.value)
}

/// `cn⁻¹(x, κ) = ∫_x^1 [(1−t²)(1−κ²+κ²t²)]^{−1/2} dt`, the principal branch
/// with values in `[0, 2K]`.
pub fn acn_with(x: f64, kappa: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_unit(x, "cn^-1")?;
    incomplete_f_with(x.acos(), kappa, cfg)
}

pub fn acn(x: f64, kappa: f64) -> Result<f64> {
    Ok(acn_with(x, kappa, &QuadratureConfig::default())?.value)
}

/// Integrand used for `dn⁻¹`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DnIntegrand {
    /// `[(1−t²)(t² − (1−κ²))]^{−1/2}`, the inverse of `dn` on `[0, K]`.
    #[default]
    Standard,
    /// `[(1−t²)(1+κ²t²)]^{−1/2}` taken literally. It is not the inverse of
    /// `dn`; it is kept so the mismatch can be measured.
    PlusKappaSquared,
}

/// `dn⁻¹(x, κ) = ∫_x^1 [(1−t²)(t²−κ'²)]^{−1/2} dt` on `κ' ≤ x ≤ 1`.
pub fn adn_with(x: f64, kappa: f64, form: DnIntegrand, cfg: &QuadratureConfig) -> Result<QuadResult> {
    check_modulus(kappa)?;
    match form {
        DnIntegrand::Standard => {
            if kappa == 0.0 {
                return Err(Error::Domain("dn^-1 is undefined at modulus 0 (dn = 1)".into()));
            }
            let lower = ((1.0 - kappa) * (1.0 + kappa)).sqrt();
            if !(x <= 1.0 && x >= lower) {
                return Err(Error::Domain(format!(
                    "dn^-1 argument {x} outside [{lower}, 1]"
                )));
            }
            // t² = 1 − κ² sin²θ
            let s = (((1.0 - x) * (1.0 + x)).sqrt() / kappa).min(1.0);
            incomplete_f_with(s.asin(), kappa, cfg)
        }
        DnIntegrand::PlusKappaSquared => {
            check_unit(x, "dn^-1")?;
            let k2 = kappa * kappa;
            // t = cos θ
            integrate(
                |t| (1.0 + k2 * t.cos().powi(2)).sqrt().recip(),
                0.0,
                x.acos(),
                cfg,
            )
        }
    }
}

pub fn adn(x: f64, kappa: f64) -> Result<f64> {
    Ok(adn_with(x, kappa, DnIntegrand::Standard, &QuadratureConfig::default())?.value)
}

/// Quarter period `K(κ) = sn⁻¹(1, κ)`.
pub fn complete_k(kappa: f64) -> Result<f64> {
    incomplete_f(FRAC_PI_2, kappa)
}

const ROOT_XTOL: f64 = 1e-15;
const ROOT_FTOL: f64 = 1e-15;
const ROOT_MAX_ITER: usize = 200;

/// Safeguarded secant on a sign-changing bracket `[lo, hi]`.
///
/// The first two points are bisections; after that a secant step is taken
/// unless it leaves the bracket or the previous step failed to halve the
/// bracket, in which case the midpoint is used. Stops when the bracket is
/// narrower than `xtol` or `|f| <= ftol`.
pub fn bracketed_secant<F: FnMut(f64) -> Result<f64>>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    ftol: f64,
    max_iter: usize,
) -> Result<f64> {
    let mut f_lo = f(lo)?;
    let mut f_hi = f(hi)?;
    if f_lo.abs() <= ftol {
        return Ok(lo);
    }
    if f_hi.abs() <= ftol {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Domain(format!("root not bracketed by [{lo}, {hi}]")));
    }
    let mut prev_width = f64::INFINITY;
    for iter in 0..max_iter {
        let width = hi - lo;
        let secant = hi - f_hi * width / (f_hi - f_lo);
        let x = if iter < 2 || !(secant > lo && secant < hi) || width > 0.5 * prev_width {
            0.5 * (lo + hi)
        } else {
            secant
        };
        prev_width = width;
        let fx = f(x)?;
        if fx.abs() <= ftol {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        if hi - lo <= xtol {
            return Ok(if f_lo.abs() < f_hi.abs() { lo } else { hi });
        }
    }
    Err(Error::NoConvergence {
        what: "bracketed secant",
        iterations: max_iter,
    })
}

/// Amplitude `φ ∈ [0, π/2]` with `F(φ, κ) = u`, for `0 ≤ u ≤ K(κ)`.
pub fn invert_amplitude(u: f64, kappa: f64) -> Result<f64> {
    check_modulus(kappa)?;
    let k = complete_k(kappa)?;
    // one ulp of slack so that u = K computed elsewhere is accepted
    let slack = 4.0 * f64::EPSILON * k;
    if !(u >= -slack && u <= k + slack) {
        return Err(Error::Domain(format!("u = {u} outside [0, K = {k}]")));
    }
    if u <= 0.0 {
        return Ok(0.0);
    }
    if u >= k {
        return Ok(FRAC_PI_2);
    }
    bracketed_secant(
        |phi| Ok(incomplete_f(phi, kappa)? - u),
        0.0,
        FRAC_PI_2,
        ROOT_XTOL,
        ROOT_FTOL,
        ROOT_MAX_ITER,
    )
}

/// `sn(u, κ)` on `[0, K]` by root-finding on the integral.
pub fn invert_asn(u: f64, kappa: f64) -> Result<f64> {
    Ok(invert_amplitude(u, kappa)?.sin())
}

/// Jacobi amplitude `am(u, κ)` for any real `u`, using
/// `am(u + 2nK) = am(u) + nπ` and oddness to reach `[0, K]`.
pub fn amplitude(u: f64, kappa: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {u}")));
    }
    check_modulus(kappa)?;
    let k = complete_k(kappa)?;
    let n = (u / (2.0 * k)).round();
    let r = u - 2.0 * k * n;
    let base = invert_amplitude(r.abs().min(k), kappa)?;
    Ok(base.copysign(r) + n * PI)
}

/// `(sn, cn, dn)` by integral inversion.
pub fn jacobi_by_inversion(u: f64, kappa: f64) -> Result<(f64, f64, f64)> {
    let phi = amplitude(u, kappa)?;
    let sn = phi.sin();
    Ok((sn, phi.cos(), (1.0 - kappa * kappa * sn * sn).sqrt()))
}
