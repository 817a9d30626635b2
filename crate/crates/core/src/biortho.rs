//! Bi-orthogonal frames in C² and the deformed `so(2,1)` generators built
//! from them.
//!
//! Starting from the orthonormal pair `v_j = 2^{-1/2}(1, (−1)^{j−1})` and the
//! Hermitian map
//!
//! ```text
//! T(θ, φ) = cos(θ/2)·1 + 2cos(φ/2)sin(θ/2)·σ₁ − 2sin(φ/2)sin(θ/2)·σ₂
//! ```
//!
//! we take `φ_j = T v_j` and `χ_j = adj(T)† v_j = cos θ · (T⁻¹)† v_j`, so that
//! `⟨φ_j|χ_k⟩ = cos θ · δ_jk`. The generators are then assembled as
//!
//! ```text
//! T_m = ½ Σ_{j,k} α^{(m)}_{jk} / ω^{δ_{m3}} · |φ_j⟩⟨χ_k|,   ω = cos θ
//! ```
//!
//! and must coincide with the closed-form matrices of [`explicit_generators`]
//! at `γ = sin θ`. The two constructions share nothing but the 2×2 algebra.

use serde::{Deserialize, Serialize};

use crate::algebra2::{commutator, inner, matmul, outer, ComplexScalar, Mat2C, Vec2C};
use crate::error::{Error, Result};

/// `|cos θ|` at or below this is treated as the degenerate `|γ| = 1` point.
pub const TOL_DEGENERATE: f64 = 1e-9;

/// Free angle of `T` that reproduces the closed-form bi-orthogonal vectors.
pub const DEFAULT_PHI_ANGLE: f64 = -std::f64::consts::PI;

/// Hermitian transformation `T(θ, φ)`; `det T = cos θ`.
pub fn transform_matrix(theta: f64, phi_angle: f64) -> Mat2C {
    let half_theta = 0.5 * theta;
    let half_phi = 0.5 * phi_angle;
    Mat2C::IDENTITY.scale_re(half_theta.cos())
        + Mat2C::sigma1().scale_re(2.0 * half_phi.cos() * half_theta.sin())
        - Mat2C::sigma2().scale_re(2.0 * half_phi.sin() * half_theta.sin())
}

/// Orthonormal base vector `v_j`, `j ∈ {1, 2}`.
pub fn base_vector(j: usize) -> Vec2C {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let sign = parity(j);
    Vec2C::new(ComplexScalar::real(s), ComplexScalar::real(sign * s))
}

/// `(−1)^{j−1}`.
fn parity(j: usize) -> f64 {
    if j % 2 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn delta(j: usize, k: usize) -> f64 {
    if j == k {
        1.0
    } else {
        0.0
    }
}

/// Levi-Civita symbol on indices `1..=3`.
pub fn levi_civita(j: usize, k: usize, l: usize) -> f64 {
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// Coefficient of `T_l` in `[T_j, T_k]`:
/// `(−1)^{δ_{l1}} (1 − γ² δ_{l3}) ε_{jkl}`.
pub fn structure_constant(j: usize, k: usize, l: usize, gamma: f64) -> f64 {
    let sign = if l == 1 { -1.0 } else { 1.0 };
    sign * (1.0 - gamma * gamma * delta(l, 3)) * levi_civita(j, k, l)
}

/// The α coefficient tables, indexed `[m−1][j−1][k−1]`.
pub struct AlphaCoefficients;

impl AlphaCoefficients {
    pub fn get(m: usize, j: usize, k: usize) -> ComplexScalar {
        let off = 1.0 - delta(j, k);
        match m {
            1 => ComplexScalar::imag(-off),
            2 => ComplexScalar::real(parity(j) * delta(j, k)),
            3 => ComplexScalar::imag(parity(j) * off),
            _ => panic!("generator index {m} outside 1..=3"),
        }
    }

    pub fn table() -> [[[ComplexScalar; 2]; 2]; 3] {
        let mut t = [[[ComplexScalar::ZERO; 2]; 2]; 3];
        for (m, tm) in t.iter_mut().enumerate() {
            for (j, row) in tm.iter_mut().enumerate() {
                for (k, entry) in row.iter_mut().enumerate() {
                    *entry = Self::get(m + 1, j + 1, k + 1);
                }
            }
        }
        t
    }
}

/// Bi-orthogonal system generated from angle `θ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiorthoSystem {
    pub theta: f64,
    pub phi_angle: f64,
    /// `cos θ`, the overlap `⟨φ_j|χ_j⟩`.
    pub omega: f64,
    /// `sin θ`, the deformation parameter.
    pub gamma: f64,
    pub v: [Vec2C; 2],
    pub phi: [Vec2C; 2],
    pub chi: [Vec2C; 2],
}

impl BiorthoSystem {
    pub fn transform(&self) -> Mat2C {
        transform_matrix(self.theta, self.phi_angle)
    }

    /// Strictly dual frame `(T⁻¹)† v_j`, for which `⟨φ_j|χ_k⟩ = δ_jk`.
    pub fn dual_chi(&self) -> Result<[Vec2C; 2]> {
        let inv_dag = self
            .transform()
            .inverse(TOL_DEGENERATE)
            .map_err(|_| Error::DegenerateSystem {
                omega: self.omega.abs(),
                tol: TOL_DEGENERATE,
            })?
            .dagger();
        Ok([inv_dag.apply(self.v[0]), inv_dag.apply(self.v[1])])
    }

    /// Gram matrix `G_jk = ⟨φ_j|χ_k⟩`.
    pub fn gram(&self) -> [[ComplexScalar; 2]; 2] {
        let mut g = [[ComplexScalar::ZERO; 2]; 2];
        for (j, row) in g.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = inner(self.phi[j], self.chi[k]);
            }
        }
        g
    }

    /// Largest deviation of the Gram matrix from `ω·δ_jk`.
    pub fn biorthogonality_residual(&self) -> f64 {
        let g = self.gram();
        let mut worst = 0.0_f64;
        for (j, row) in g.iter().enumerate() {
            for (k, entry) in row.iter().enumerate() {
                let expected = ComplexScalar::real(self.omega * delta(j, k));
                worst = worst.max((*entry - expected).abs());
            }
        }
        worst
    }
}

/// Closed form of `φ_j` at `φ = −π`:
/// `2^{-1/2}(e^{−i(3/2−j)θ}, (−1)^{j−1} e^{i(3/2−j)θ})`.
pub fn closed_form_phi(theta: f64, j: usize) -> Vec2C {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let a = (1.5 - j as f64) * theta;
    Vec2C::new(
        ComplexScalar::cis(-a).scale(s),
        ComplexScalar::cis(a).scale(parity(j) * s),
    )
}

/// Closed form of `χ_j` at `φ = −π`:
/// `2^{-1/2}(e^{i(3/2−j)θ}, (−1)^{j−1} e^{−i(3/2−j)θ})`.
pub fn closed_form_chi(theta: f64, j: usize) -> Vec2C {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let a = (1.5 - j as f64) * theta;
    Vec2C::new(
        ComplexScalar::cis(a).scale(s),
        ComplexScalar::cis(-a).scale(parity(j) * s),
    )
}

pub fn build_biortho(theta: f64) -> Result<BiorthoSystem> {
    build_biortho_with(theta, DEFAULT_PHI_ANGLE, TOL_DEGENERATE)
}

/// Builds the system for an arbitrary free angle and degeneracy tolerance.
pub fn build_biortho_with(theta: f64, phi_angle: f64, tol: f64) -> Result<BiorthoSystem> {
    if !theta.is_finite() || !phi_angle.is_finite() {
        return Err(Error::Domain(format!(
            "angles must be finite (theta = {theta}, phi = {phi_angle})"
        )));
    }
    let omega = theta.cos();
    if omega.abs() <= tol {
        return Err(Error::DegenerateSystem {
            omega: omega.abs(),
            tol,
        });
    }
    let t = transform_matrix(theta, phi_angle);
    // adj(T) = det(T)·T⁻¹, so adj(T)† v_j = ω (T⁻¹)† v_j with no division.
    let adj = Mat2C::new(t.a22, -t.a12, -t.a21, t.a11);
    let adj_dag = adj.dagger();
    let v = [base_vector(1), base_vector(2)];
    Ok(BiorthoSystem {
        theta,
        phi_angle,
        omega,
        gamma: theta.sin(),
        v,
        phi: [t.apply(v[0]), t.apply(v[1])],
        chi: [adj_dag.apply(v[0]), adj_dag.apply(v[1])],
    })
}

/// The three generators together with their deformation parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorTriple {
    pub t1: Mat2C,
    pub t2: Mat2C,
    pub t3: Mat2C,
    pub gamma: f64,
}

impl GeneratorTriple {
    pub fn as_array(&self) -> [Mat2C; 3] {
        [self.t1, self.t2, self.t3]
    }

    /// Generator `T_m`, `m ∈ {1, 2, 3}`.
    pub fn get(&self, m: usize) -> Mat2C {
        self.as_array()[m - 1]
    }

    /// Largest entrywise difference over the three generators.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .map(|(a, b)| (*a - *b).max_abs())
            .fold(0.0, f64::max)
    }
}

/// Assembles the generators from the bi-orthogonal frame via the α tables.
pub fn build_generators(sys: &BiorthoSystem) -> Result<GeneratorTriple> {
    if sys.omega.abs() <= TOL_DEGENERATE {
        return Err(Error::DegenerateSystem {
            omega: sys.omega.abs(),
            tol: TOL_DEGENERATE,
        });
    }
    let mut gens = [Mat2C::ZERO; 3];
    for (idx, gen) in gens.iter_mut().enumerate() {
        let m = idx + 1;
        let divisor = if m == 3 { sys.omega } else { 1.0 };
        let mut acc = Mat2C::ZERO;
        for j in 1..=2 {
            for k in 1..=2 {
                let alpha = AlphaCoefficients::get(m, j, k);
                if alpha == ComplexScalar::ZERO {
                    continue;
                }
                acc = acc + outer(sys.phi[j - 1], sys.chi[k - 1]).scale(alpha);
            }
        }
        *gen = acc.scale_re(0.5 / divisor);
    }
    Ok(GeneratorTriple {
        t1: gens[0],
        t2: gens[1],
        t3: gens[2],
        gamma: sys.gamma,
    })
}

/// Closed-form generators
/// `T₁ = ½[[−i, γ], [γ, i]]`, `T₂ = ½[[−iγ, 1], [1, iγ]]`, `T₃ = ½[[0, −i], [i, 0]]`.
pub fn explicit_generators(gamma: f64) -> Result<GeneratorTriple> {
    if !gamma.is_finite() || gamma.abs() > 1.0 {
        return Err(Error::OutOfRange { gamma });
    }
    let h = 0.5;
    let g = 0.5 * gamma;
    Ok(GeneratorTriple {
        t1: Mat2C::new(
            ComplexScalar::imag(-h),
            ComplexScalar::real(g),
            ComplexScalar::real(g),
            ComplexScalar::imag(h),
        ),
        t2: Mat2C::new(
            ComplexScalar::imag(-g),
            ComplexScalar::real(h),
            ComplexScalar::real(h),
            ComplexScalar::imag(g),
        ),
        t3: Mat2C::new(
            ComplexScalar::ZERO,
            ComplexScalar::imag(-h),
            ComplexScalar::imag(h),
            ComplexScalar::ZERO,
        ),
        gamma,
    })
}

/// One bracket `[T_j, T_k]` compared against its predicted expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairResidual {
    pub j: usize,
    pub k: usize,
    /// Predicted coefficients of `T₁, T₂, T₃` in `[T_j, T_k]`.
    pub predicted_coeffs: [f64; 3],
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureReport {
    pub gamma: f64,
    pub pairs: Vec<PairResidual>,
    pub max_residual: f64,
    pub pass: bool,
}

impl StructureReport {
    pub fn pair(&self, j: usize, k: usize) -> Option<&PairResidual> {
        self.pairs.iter().find(|p| p.j == j && p.k == k)
    }
}

/// Checks every bracket `[T_j, T_k]`, including `j = k`, against the
/// deformed structure constants.
pub fn verify_structure_constants(g: &GeneratorTriple, tol: f64) -> StructureReport {
    let gens = g.as_array();
    let mut pairs = Vec::with_capacity(9);
    for j in 1..=3 {
        for k in 1..=3 {
            let coeffs = [1, 2, 3].map(|l| structure_constant(j, k, l, g.gamma));
            let predicted = gens
                .iter()
                .zip(coeffs.iter())
                .fold(Mat2C::ZERO, |acc, (t, c)| acc + t.scale_re(*c));
            let residual = (commutator(gens[j - 1], gens[k - 1]) - predicted).max_abs();
            pairs.push(PairResidual {
                j,
                k,
                predicted_coeffs: coeffs,
                residual,
            });
        }
    }
    let max_residual = pairs.iter().map(|p| p.residual).fold(0.0, f64::max);
    StructureReport {
        gamma: g.gamma,
        pairs,
        max_residual,
        pass: max_residual < tol,
    }
}

/// `C = T₁² − T₂² − (1 − γ²) T₃²`.
pub fn matrix_casimir(g: &GeneratorTriple) -> Mat2C {
    matmul(g.t1, g.t1)
        - matmul(g.t2, g.t2)
        - matmul(g.t3, g.t3).scale_re(1.0 - g.gamma * g.gamma)
}

/// Largest commutator norm of the Casimir with any generator.
pub fn casimir_centrality_residual(g: &GeneratorTriple) -> f64 {
    let c = matrix_casimir(g);
    g.as_array()
        .iter()
        .map(|t| commutator(c, *t).max_abs())
        .fold(0.0, f64::max)
}
