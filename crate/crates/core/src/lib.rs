//! Exact computation of projective automorphism groups of quartic surfaces
//! over cyclotomic fields.

pub mod atlas;
pub mod eigenmod;
pub mod error;
pub mod field;
pub mod forms;
pub mod projgroup;
pub mod singular;
pub mod text;

pub use error::{Error, Result};
pub use field::{BigRational, Cyc, CycContext, Field};
pub use forms::{Form, Monomial, SquareMatrix};

/// Forms with cyclotomic coefficients.
pub type CycForm = Form<Cyc>;
/// Matrices with cyclotomic entries.
pub type CycMatrix = SquareMatrix<Cyc>;
/// Forms with rational coefficients.
pub type RatForm = Form<BigRational>;
