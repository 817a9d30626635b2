//! Jacobi elliptic functions reconstructed from a deformed `so(2,1)` algebra.
//!
//! The crate builds the algebra from a bi-orthogonal pair of frames in C²
//! ([`biortho`]), realizes the generators as vector fields whose
//! coefficient functions obey a coupled nonlinear ODE triplet
//! ([`jacobiode`]), and checks the resulting `sn`, `cn`, `dn` against two
//! unrelated routes: inversion of the first-kind elliptic integral
//! ([`ellint`]) and the arithmetic–geometric mean ([`oracle`]).

pub mod algebra2;
pub mod biortho;
pub mod ellint;
pub mod error;
pub mod jacobiode;
pub mod oracle;

pub use algebra2::{ComplexScalar, Mat2C, Vec2C};
pub use biortho::{BiorthoSystem, GeneratorTriple, StructureReport};
pub use error::{Error, Result};
pub use jacobiode::{IntegratorConfig, JacobiTriple, Method};
