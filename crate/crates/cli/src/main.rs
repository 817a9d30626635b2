use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jacobi_lie::ellint;
use jacobi_lie_cli::format::fmt_num;
use jacobi_lie_cli::record::{OutputRecord, Route};
use jacobi_lie_cli::{exit, render_csv, render_json, render_record_json, resolve_tol, table, u_grid, verify, OutputFormat, TOL_ENV};

/// Jacobi elliptic functions from a deformed so(2,1) algebra.
#[derive(Parser)]
#[command(name = "jacobi-lie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Sn,
    Cn,
    Dn,
}

#[derive(Subcommand)]
enum Command {
    /// Check generators, structure constants and Casimir over a grid of γ.
    Verify {
        /// Comma-separated deformation values in [0, 1].
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma: Option<Vec<f64>>,
        /// Pass/fail tolerance (default: $JACOBI_LIE_TOL or 1e-12).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate sn, cn, dn at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
        #[arg(long, value_enum, default_value_t = Route::All)]
        route: Route,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Tabulate over a u range for several moduli (κ-major, u ascending).
    Table {
        #[arg(long, allow_hyphen_values = true)]
        u_start: f64,
        #[arg(long, allow_hyphen_values = true)]
        u_end: f64,
        #[arg(long)]
        step: f64,
        /// Comma-separated moduli in [0, 1).
        #[arg(long, value_delimiter = ',', default_value = "0")]
        kappa: Vec<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Evaluate an inverse function by quadrature.
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
        #[arg(long, value_enum, default_value_t = Which::Sn)]
        which: Which,
    },
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(exit::USAGE as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { gamma, tol } => {
            let env = std::env::var(TOL_ENV).ok();
            let tol = match resolve_tol(tol, env.as_deref()) {
                Ok(t) => t,
                Err(e) => return usage(e),
            };
            let grid = gamma.unwrap_or_else(|| verify::DEFAULT_GAMMA_GRID.to_vec());
            if let Err(e) = verify::validate_grid(&grid) {
                return usage(e);
            }
            let report = match verify::run(&grid, tol) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            emit(&format!("{}\n", report.to_json()));
            if report.pass {
                ExitCode::from(exit::OK as u8)
            } else {
                ExitCode::from(exit::CHECK_FAILED as u8)
            }
        }
        Command::Eval {
            u,
            kappa,
            route,
            format,
        } => match OutputRecord::evaluate(u, kappa, route) {
            Ok(rec) => {
                match format {
                    OutputFormat::Csv => emit(&render_csv(std::slice::from_ref(&rec))),
                    OutputFormat::Json => emit(&render_record_json(&rec)),
                }
                ExitCode::from(exit::OK as u8)
            }
            Err(e) => usage(e),
        },
        Command::Table {
            u_start,
            u_end,
            step,
            kappa,
            format,
        } => {
            let us = match u_grid(u_start, u_end, step) {
                Ok(us) => us,
                Err(e) => return usage(e),
            };
            if kappa.is_empty() {
                return usage("empty modulus list");
            }
            match table(&us, &kappa) {
                Ok(rows) => {
                    match format {
                        OutputFormat::Csv => emit(&render_csv(&rows)),
                        OutputFormat::Json => emit(&render_json(&rows)),
                    }
                    ExitCode::from(exit::OK as u8)
                }
                Err(e) => usage(e),
            }
        }
        Command::Invert { x, kappa, which } => {
            let result = match which {
                Which::Sn => ellint::asn(x, kappa),
                Which::Cn => ellint::acn(x, kappa),
                Which::Dn => ellint::adn(x, kappa),
            };
            match result {
                Ok(u) => {
                    emit(&format!("{}\n", fmt_num(u)));
                    ExitCode::from(exit::OK as u8)
                }
                Err(e) => usage(e),
            }
        }
    }
}
