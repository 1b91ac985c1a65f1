//! Named objects from the classification and a registry of machine checks
//! of its statements.

pub mod catalog;
pub mod registry;
pub mod relations;

mod checks;

pub use catalog::{form_catalog, form_ids, matrix_catalog, matrix_ids, CatalogId};
pub use registry::{run_all, theorem_check, theorem_ids, Status, VerificationReport};
pub use relations::{make_z, verify_psl27, verify_s5_coxeter};

#[cfg(test)]
mod tests;
