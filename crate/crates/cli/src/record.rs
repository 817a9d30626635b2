//! Per-point evaluation records for `eval` and `table`.

use serde::Serialize;

use jacobi_lie::{ellint, jacobiode, oracle, Result};

use crate::format::{fmt_num, round_sig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    Ode,
    Integral,
    Oracle,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Triple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

impl Triple {
    fn from_tuple((sn, cn, dn): (f64, f64, f64)) -> Self {
        Self { sn, cn, dn }
    }

    fn max_diff(&self, other: &Self) -> f64 {
        (self.sn - other.sn)
            .abs()
            .max((self.cn - other.cn).abs())
            .max((self.dn - other.dn).abs())
    }

    fn rounded(self) -> Self {
        Self {
            sn: round_sig(self.sn),
            cn: round_sig(self.cn),
            dn: round_sig(self.dn),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputRecord {
    pub u: f64,
    pub kappa: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ode: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<Triple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Triple>,
    /// Largest pairwise difference over every populated route; zero when
    /// only one route ran.
    pub max_route_disagreement: f64,
}

pub const CSV_HEADER: &str = "u,kappa,sn,cn,dn,disagreement";

impl OutputRecord {
    pub fn evaluate(u: f64, kappa: f64, route: Route) -> Result<Self> {
        let want = |r: Route| route == r || route == Route::All;
        let ode = if want(Route::Ode) {
            Some(Triple::from_tuple(jacobiode::jacobi(u, kappa)?))
        } else {
            None
        };
        let integral = if want(Route::Integral) {
            Some(Triple::from_tuple(ellint::jacobi_by_inversion(u, kappa)?))
        } else {
            None
        };
        let oracle = if want(Route::Oracle) {
            Some(Triple::from_tuple(oracle::jacobi_agm(u, kappa)?))
        } else {
            None
        };
        let routes: Vec<Triple> = [ode, integral, oracle].into_iter().flatten().collect();
        let mut disagreement = 0.0_f64;
        for (i, a) in routes.iter().enumerate() {
            for b in &routes[i + 1..] {
                disagreement = disagreement.max(a.max_diff(b));
            }
        }
        Ok(Self {
            u,
            kappa,
            ode,
            integral,
            oracle,
            max_route_disagreement: disagreement,
        })
    }

    /// The values shown in flat output: the ODE route when present, else
    /// whichever single route ran.
    pub fn primary(&self) -> Triple {
        self.ode
            .or(self.integral)
            .or(self.oracle)
            .expect("at least one route evaluated")
    }

    pub fn csv_row(&self) -> String {
        let t = self.primary();
        [self.u, self.kappa, t.sn, t.cn, t.dn, self.max_route_disagreement]
            .map(fmt_num)
            .join(",")
    }

    /// Copy with every number rounded to 15 significant digits.
    pub fn rounded(&self) -> Self {
        Self {
            u: round_sig(self.u),
            kappa: round_sig(self.kappa),
            ode: self.ode.map(Triple::rounded),
            integral: self.integral.map(Triple::rounded),
            oracle: self.oracle.map(Triple::rounded),
            max_route_disagreement: round_sig(self.max_route_disagreement),
        }
    }
}
