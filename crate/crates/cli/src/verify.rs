//! Algebra verification suite behind `jacobi-lie verify`.

use serde::Serialize;

use jacobi_lie::algebra2::{commutator, Mat2C};
use jacobi_lie::biortho::{
    build_biortho, build_generators, explicit_generators, matrix_casimir, verify_structure_constants,
    StructureReport,
};
use jacobi_lie::Error;

use crate::format::round_sig;

pub const DEFAULT_GAMMA_GRID: [f64; 11] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99];
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Serialize)]
pub struct CasimirCheck {
    /// `−(3/4)(1 − γ²)`, the expected multiple of the identity.
    pub expected_scalar: f64,
    pub residual: f64,
    pub centrality_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum GeneratorCheck {
    Checked {
        theta: f64,
        max_diff: f64,
        biorthogonality_residual: f64,
        pass: bool,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Serialize)]
pub struct GammaReport {
    pub gamma: f64,
    pub degenerate: bool,
    pub structure: StructureReport,
    pub casimir: CasimirCheck,
    pub generators: GeneratorCheck,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub tol: f64,
    pub entries: Vec<GammaReport>,
    pub pass: bool,
}

/// Grid values must lie in `[0, 1]`; `1` is accepted and reported as the
/// degenerate point.
pub fn validate_grid(grid: &[f64]) -> Result<(), String> {
    if grid.is_empty() {
        return Err("gamma grid is empty".into());
    }
    for &g in grid {
        if !(0.0..=1.0).contains(&g) {
            return Err(format!("gamma value {g} outside [0, 1]"));
        }
    }
    Ok(())
}

pub fn verify_gamma(gamma: f64, tol: f64) -> Result<GammaReport, Error> {
    let explicit = explicit_generators(gamma)?;
    let structure = verify_structure_constants(&explicit, tol);

    let cas = matrix_casimir(&explicit);
    let expected_scalar = -0.75 * (1.0 - gamma * gamma);
    let residual = (cas - Mat2C::IDENTITY.scale_re(expected_scalar)).max_abs();
    let centrality_residual = explicit
        .as_array()
        .iter()
        .map(|t| commutator(cas, *t).max_abs())
        .fold(0.0, f64::max);
    let casimir = CasimirCheck {
        expected_scalar,
        residual,
        centrality_residual,
        pass: residual < tol && centrality_residual < tol,
    };

    let theta = gamma.asin();
    let (generators, degenerate) = match build_biortho(theta) {
        Ok(sys) => {
            let from_frame = build_generators(&sys)?;
            let max_diff = from_frame.max_diff(&explicit);
            let biorthogonality_residual = sys.biorthogonality_residual();
            let check = GeneratorCheck::Checked {
                theta,
                max_diff,
                biorthogonality_residual,
                pass: max_diff < tol && biorthogonality_residual < tol,
            };
            (check, false)
        }
        Err(e @ Error::DegenerateSystem { .. }) => (
            GeneratorCheck::Skipped {
                reason: format!("bi-orthogonality fails at |gamma| = 1 ({e})"),
            },
            true,
        ),
        Err(e) => return Err(e),
    };
    let generators_pass = match &generators {
        GeneratorCheck::Checked { pass, .. } => *pass,
        GeneratorCheck::Skipped { .. } => true,
    };
    let pass = structure.pass && casimir.pass && generators_pass;
    Ok(GammaReport {
        gamma,
        degenerate,
        structure,
        casimir,
        generators,
        pass,
    })
}

pub fn run(grid: &[f64], tol: f64) -> Result<VerifyReport, Error> {
    let entries = grid
        .iter()
        .map(|&g| verify_gamma(g, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = entries.iter().all(|e| e.pass);
    Ok(VerifyReport { tol, entries, pass })
}

impl VerifyReport {
    /// JSON with all numbers at 15 significant digits.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_json(&mut value);
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

pub fn round_json(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(x) = n.as_f64().filter(|_| n.is_f64()) {
                if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                    *n = r;
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(round_json),
        serde_json::Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}
