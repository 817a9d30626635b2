//! Library side of the `jacobi-lie` command-line tool.

pub mod format;
pub mod record;
pub mod verify;

use record::{OutputRecord, Route, CSV_HEADER};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
}

/// Environment variable overriding the default verification tolerance.
pub const TOL_ENV: &str = "JACOBI_LIE_TOL";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Tolerance from `--tol`, then `JACOBI_LIE_TOL`, then the default.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64, String> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("{TOL_ENV}={s:?}: {e}"))?,
        (None, None) => verify::DEFAULT_TOL,
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(format!("tolerance must be positive, got {tol}"));
    }
    Ok(tol)
}

/// Argument values `start, start + step, …` up to and including `end`.
pub fn u_grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>, String> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(format!("step must be positive, got {step}"));
    }
    if !(start.is_finite() && end.is_finite()) || end < start {
        return Err(format!("empty range [{start}, {end}]"));
    }
    let n = ((end - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..n).map(|i| start + step * i as f64).collect())
}

/// Rows in κ-major, then ascending-u order.
pub fn table(us: &[f64], kappas: &[f64]) -> jacobi_lie::Result<Vec<OutputRecord>> {
    let mut rows = Vec::with_capacity(us.len() * kappas.len());
    for &k in kappas {
        for &u in us {
            rows.push(OutputRecord::evaluate(u, k, Route::All)?);
        }
    }
    Ok(rows)
}

pub fn render_csv(rows: &[OutputRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

pub fn render_record_json(row: &OutputRecord) -> String {
    let mut s = serde_json::to_string_pretty(&row.rounded()).expect("record serializes");
    s.push('\n');
    s
}

pub fn render_json(rows: &[OutputRecord]) -> String {
    let rounded: Vec<OutputRecord> = rows.iter().map(OutputRecord::rounded).collect();
    let mut s = serde_json::to_string_pretty(&rounded).expect("records serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tolerance_resolution_order() {
        assert_eq!(resolve_tol(Some(1e-8), Some("1e-3")).unwrap(), 1e-8);
        assert_eq!(resolve_tol(None, Some("1e-3")).unwrap(), 1e-3);
        assert_eq!(resolve_tol(None, None).unwrap(), verify::DEFAULT_TOL);
        assert!(resolve_tol(None, Some("abc")).is_err());
        assert!(resolve_tol(Some(-1.0), None).is_err());
    }

    #[test]
    fn grid_construction() {
        assert_eq!(u_grid(0.0, 0.0, 0.1).unwrap(), vec![0.0]);
        assert_eq!(u_grid(0.0, 0.9, 0.1).unwrap().len(), 10);
        assert_eq!(u_grid(1.0, 2.0, 0.5).unwrap(), vec![1.0, 1.5, 2.0]);
        assert!(u_grid(1.0, 0.0, 0.1).is_err());
        assert!(u_grid(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn trigonometric_table() {
        let us = u_grid(0.0, 6.0, 0.25).unwrap();
        for r in table(&us, &[0.0]).unwrap() {
            let t = r.primary();
            assert!((t.sn - r.u.sin()).abs() < 1e-9);
            assert!((t.cn - r.u.cos()).abs() < 1e-9);
            assert!((t.dn - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn row_order_is_kappa_major() {
        let rows = table(&[0.0, 0.5], &[0.2, 0.1]).unwrap();
        let keys: Vec<(f64, f64)> = rows.iter().map(|r| (r.kappa, r.u)).collect();
        assert_eq!(keys, vec![(0.2, 0.0), (0.2, 0.5), (0.1, 0.0), (0.1, 0.5)]);
    }
}
