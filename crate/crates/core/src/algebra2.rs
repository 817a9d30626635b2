//! Complex 2×2 linear algebra.
//!
//! Everything here is closed-form: products, commutators, the adjugate
//! inverse. Approximate equality is measured with [`Mat2C::max_abs`], the
//! largest absolute entry, which is adequate because every matrix built in
//! this crate has entries of order one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance used for approximate matrix comparisons unless a caller
/// supplies its own.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Double precision complex number.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ComplexScalar {
    pub re: f64,
    pub im: f64,
}

impl ComplexScalar {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };
    pub const I: Self = Self { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub const fn imag(im: f64) -> Self {
        Self { re: 0.0, im }
    }

    /// `e^{iθ}`.
    pub fn cis(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self { re: c, im: s }
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn scale(self, s: f64) -> Self {
        Self {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Division; returns a non-finite value when `rhs` is zero.
    pub fn div(self, rhs: Self) -> Self {
        let d = rhs.norm_sqr();
        let n = self * rhs.conj();
        Self {
            re: n.re / d,
            im: n.im / d,
        }
    }
}

impl Add for ComplexScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Neg for ComplexScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl From<f64> for ComplexScalar {
    fn from(re: f64) -> Self {
        Self::real(re)
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Column vector in C².
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Vec2C {
    pub c1: ComplexScalar,
    pub c2: ComplexScalar,
}

impl Vec2C {
    pub const fn new(c1: ComplexScalar, c2: ComplexScalar) -> Self {
        Self { c1, c2 }
    }

    pub fn scale(self, s: ComplexScalar) -> Self {
        Self::new(self.c1 * s, self.c2 * s)
    }

    pub fn max_abs(self) -> f64 {
        self.c1.abs().max(self.c2.abs())
    }

    pub fn is_finite(self) -> bool {
        self.c1.is_finite() && self.c2.is_finite()
    }
}

impl Sub for Vec2C {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.c1 - rhs.c1, self.c2 - rhs.c2)
    }
}

/// `⟨u|v⟩ = u₁* v₁ + u₂* v₂`, conjugate-linear in the first slot.
pub fn inner(u: Vec2C, v: Vec2C) -> ComplexScalar {
    u.c1.conj() * v.c1 + u.c2.conj() * v.c2
}

/// Outer product `|u⟩⟨v|`.
pub fn outer(u: Vec2C, v: Vec2C) -> Mat2C {
    Mat2C::new(
        u.c1 * v.c1.conj(),
        u.c1 * v.c2.conj(),
        u.c2 * v.c1.conj(),
        u.c2 * v.c2.conj(),
    )
}

/// Complex 2×2 matrix stored row-major.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Mat2C {
    pub a11: ComplexScalar,
    pub a12: ComplexScalar,
    pub a21: ComplexScalar,
    pub a22: ComplexScalar,
}

impl Mat2C {
    pub const ZERO: Self = Self {
        a11: ComplexScalar::ZERO,
        a12: ComplexScalar::ZERO,
        a21: ComplexScalar::ZERO,
        a22: ComplexScalar::ZERO,
    };

    pub const IDENTITY: Self = Self {
        a11: ComplexScalar::ONE,
        a12: ComplexScalar::ZERO,
        a21: ComplexScalar::ZERO,
        a22: ComplexScalar::ONE,
    };

    pub const fn new(
        a11: ComplexScalar,
        a12: ComplexScalar,
        a21: ComplexScalar,
        a22: ComplexScalar,
    ) -> Self {
        Self { a11, a12, a21, a22 }
    }

    /// Half Pauli matrix `σ₁ = ½[[0, 1], [1, 0]]`.
    pub const fn sigma1() -> Self {
        Self::new(
            ComplexScalar::ZERO,
            ComplexScalar::real(0.5),
            ComplexScalar::real(0.5),
            ComplexScalar::ZERO,
        )
    }

    /// Half Pauli matrix `σ₂ = ½[[0, −i], [i, 0]]`.
    pub const fn sigma2() -> Self {
        Self::new(
            ComplexScalar::ZERO,
            ComplexScalar::imag(-0.5),
            ComplexScalar::imag(0.5),
            ComplexScalar::ZERO,
        )
    }

    pub fn scalar(s: ComplexScalar) -> Self {
        Self::new(s, ComplexScalar::ZERO, ComplexScalar::ZERO, s)
    }

    pub fn entries(&self) -> [ComplexScalar; 4] {
        [self.a11, self.a12, self.a21, self.a22]
    }

    fn map(self, f: impl Fn(ComplexScalar) -> ComplexScalar) -> Self {
        Self::new(f(self.a11), f(self.a12), f(self.a21), f(self.a22))
    }

    pub fn scale(self, s: ComplexScalar) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(self, s: f64) -> Self {
        self.map(|z| z.scale(s))
    }

    pub fn trace(&self) -> ComplexScalar {
        self.a11 + self.a22
    }

    pub fn det(&self) -> ComplexScalar {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::new(
            self.a11.conj(),
            self.a21.conj(),
            self.a12.conj(),
            self.a22.conj(),
        )
    }

    /// Adjugate inverse. Fails with [`Error::SingularMatrix`] when
    /// `|det| <= tol`.
    pub fn inverse(&self, tol: f64) -> Result<Self> {
        let det = self.det();
        if det.abs() <= tol || !det.is_finite() {
            return Err(Error::SingularMatrix { det: det.abs(), tol });
        }
        let adj = Self::new(self.a22, -self.a12, -self.a21, self.a11);
        let inv_det = ComplexScalar::ONE.div(det);
        Ok(adj.scale(inv_det))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().map(|z| z.abs()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (*self - *other).max_abs() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.dagger(), tol)
    }

    pub fn is_invertible(&self, tol: f64) -> bool {
        self.det().abs() > tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.is_finite())
    }

    pub fn apply(&self, v: Vec2C) -> Vec2C {
        Vec2C::new(
            self.a11 * v.c1 + self.a12 * v.c2,
            self.a21 * v.c1 + self.a22 * v.c2,
        )
    }
}

impl Add for Mat2C {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.a11 + rhs.a11,
            self.a12 + rhs.a12,
            self.a21 + rhs.a21,
            self.a22 + rhs.a22,
        )
    }
}

impl Sub for Mat2C {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }
}

impl Neg for Mat2C {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for Mat2C {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        matmul(self, rhs)
    }
}

pub fn matmul(a: Mat2C, b: Mat2C) -> Mat2C {
    Mat2C::new(
        a.a11 * b.a11 + a.a12 * b.a21,
        a.a11 * b.a12 + a.a12 * b.a22,
        a.a21 * b.a11 + a.a22 * b.a21,
        a.a21 * b.a12 + a.a22 * b.a22,
    )
}

/// Lie bracket `[a, b] = ab − ba`.
pub fn commutator(a: Mat2C, b: Mat2C) -> Mat2C {
    matmul(a, b) - matmul(b, a)
}

pub fn dagger(a: Mat2C) -> Mat2C {
    a.dagger()
}

pub fn inverse(a: Mat2C, tol: f64) -> Result<Mat2C> {
    a.inverse(tol)
}

pub fn mat_norm(a: Mat2C) -> f64 {
    a.max_abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn base(j: usize) -> Vec2C {
        let sign = if j == 1 { 1.0 } else { -1.0 };
        Vec2C::new(c(FRAC_1_SQRT_2, 0.0), c(sign * FRAC_1_SQRT_2, 0.0))
    }

    // Eq. (3) of the construction, written out independently of `biortho`.
    fn t_of(theta: f64, phi: f64) -> Mat2C {
        Mat2C::IDENTITY.scale_re((theta / 2.0).cos())
            + Mat2C::sigma1().scale_re(2.0 * (phi / 2.0).cos() * (theta / 2.0).sin())
            - Mat2C::sigma2().scale_re(2.0 * (phi / 2.0).sin() * (theta / 2.0).sin())
    }

    #[test]
    fn inner_products() {
        let e1 = Vec2C::new(ComplexScalar::ONE, ComplexScalar::ZERO);
        assert_eq!(inner(e1, e1), ComplexScalar::ONE);
        assert!(inner(base(1), base(2)).abs() < 1e-15);
        assert!((inner(base(1), base(1)).re - 1.0).abs() < 1e-15);
        let ie1 = Vec2C::new(ComplexScalar::I, ComplexScalar::ZERO);
        assert_eq!(inner(ie1, e1), c(0.0, -1.0));
    }

    #[test]
    fn matmul_identity_and_pauli() {
        let a = Mat2C::new(c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0), c(4.0, -1.0));
        assert_eq!(matmul(Mat2C::IDENTITY, a), a);
        let p = matmul(Mat2C::sigma1(), Mat2C::sigma2());
        let expected = Mat2C::new(c(0.25 * 0.0, 0.25), ComplexScalar::ZERO, ComplexScalar::ZERO, c(0.0, -0.25));
        assert!(p.approx_eq(&expected, 1e-15));
    }

    #[test]
    fn inverse_round_trip_and_singularity() {
        let t = t_of(PI / 3.0, -PI);
        assert!((t.det().re - 0.5).abs() < 1e-12);
        assert!(t.det().im.abs() < 1e-12);
        let inv = t.inverse(DEFAULT_TOL).unwrap();
        assert!(matmul(t, inv).approx_eq(&Mat2C::IDENTITY, 1e-12));
        assert!(matmul(inv, t).approx_eq(&Mat2C::IDENTITY, 1e-12));

        let singular = t_of(PI / 2.0, -PI);
        match singular.inverse(1e-9) {
            Err(Error::SingularMatrix { .. }) => {}
            other => panic!("expected SingularMatrix, got {other:?}"),
        }
        assert!(!singular.is_invertible(1e-9));
    }

    #[test]
    fn commutator_basics() {
        let a = Mat2C::new(c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0), c(4.0, -1.0));
        assert_eq!(commutator(a, a), Mat2C::ZERO);
        assert!(commutator(Mat2C::IDENTITY, a).max_abs() < 1e-15);
    }

    #[test]
    fn commutator_of_deformed_pair() {
        // Eq. (5) generators at γ = 0.5 typed in by hand.
        let g = 0.5;
        let t1 = Mat2C::new(c(0.0, -0.5), c(g / 2.0, 0.0), c(g / 2.0, 0.0), c(0.0, 0.5));
        let t2 = Mat2C::new(c(0.0, -g / 2.0), c(0.5, 0.0), c(0.5, 0.0), c(0.0, g / 2.0));
        let t3 = Mat2C::new(ComplexScalar::ZERO, c(0.0, -0.5), c(0.0, 0.5), ComplexScalar::ZERO);
        let lhs = commutator(t1, t2);
        assert!(lhs.approx_eq(&t3.scale_re(1.0 - g * g), 1e-15));
    }

    #[test]
    fn dagger_and_hermiticity() {
        let a = Mat2C::new(c(1.0, 2.0), c(-0.5, 0.7), c(0.0, 3.0), c(4.0, -1.0));
        assert_eq!(dagger(dagger(a)), a);
        assert!(!a.is_hermitian(1e-12));
        assert!(t_of(1.1, 0.4).is_hermitian(1e-15));
        assert!(Mat2C::sigma2().is_hermitian(0.0));
    }

    #[test]
    fn mat_norm_is_max_entry() {
        let a = Mat2C::new(c(3.0, 4.0), c(-1.0, 0.0), ComplexScalar::ZERO, c(0.0, -2.0));
        assert_eq!(mat_norm(a), 5.0);
        assert_eq!(mat_norm(Mat2C::ZERO), 0.0);
    }
}
