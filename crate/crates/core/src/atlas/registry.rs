//! Registry of exact checks, one entry per verified statement.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::forms::Form;

use super::checks;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    VerifiedWithNote,
    Failed,
    Skipped,
}

impl Status {
    pub fn passed(self) -> bool {
        matches!(self, Status::Verified | Status::VerifiedWithNote)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub checks: Vec<Check>,
    pub values: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    pub witness: Witness,
    pub ms: u64,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> Vec<&str> {
        self.witness
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

/// Collects named sub-assertions for one report.
#[derive(Debug, Default)]
pub struct Checker {
    witness: Witness,
}

impl Checker {
    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.witness.checks.push(Check {
            name: name.into(),
            passed,
        });
        passed
    }

    /// A check whose evaluation may itself fail; errors count as failures
    /// and are kept as notes.
    pub fn check_result(&mut self, name: impl Into<String>, r: Result<bool>) -> bool {
        let name = name.into();
        match r {
            Ok(b) => self.check(name, b),
            Err(e) => {
                self.note(format!("{name}: {e}"));
                self.check(name, false)
            }
        }
    }

    pub fn value(&mut self, name: impl Into<String>, v: impl ToString) {
        self.witness.values.insert(name.into(), v.to_string());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.witness.notes.push(text.into());
    }

    /// Asserts `lhs = c * rhs` for some nonzero `c` and records `c`. A
    /// constant different from `printed` is reported as a note, not a
    /// failure.
    pub fn proportional<K: Field>(
        &mut self,
        name: &str,
        lhs: &Form<K>,
        rhs: &Form<K>,
        printed: Option<&K>,
    ) -> Option<K> {
        let c = match lhs.proportionality(rhs) {
            Ok(c) => c,
            Err(e) => {
                self.note(format!("{name}: {e}"));
                None
            }
        };
        self.check(format!("{name} proportional"), c.is_some());
        if let Some(c) = &c {
            self.value(format!("{name} constant"), c);
            if let Some(p) = printed {
                if p != c {
                    self.note(format!("{name}: computed constant {c}, printed {p}"));
                }
            }
        }
        c
    }

    fn finish(self, id: &str, ms: u64) -> VerificationReport {
        let status = if self.witness.checks.is_empty() {
            Status::Skipped
        } else if self.witness.checks.iter().any(|c| !c.passed) {
            Status::Failed
        } else if self.witness.notes.is_empty() {
            Status::Verified
        } else {
            Status::VerifiedWithNote
        };
        VerificationReport {
            id: id.to_string(),
            status,
            witness: self.witness,
            ms,
        }
    }
}

type CheckFn = fn(&mut Checker) -> Result<()>;

const REGISTRY: &[(&str, CheckFn)] = &[
    ("a6_eigenspace", checks::a6_eigenspace),
    ("dft_inverse", checks::dft_inverse),
    ("diagonal_eigenspaces", checks::diagonal_eigenspaces),
    ("dwork_pencil_hessian", checks::dwork_pencil_hessian),
    ("dwork_pencil_singularity", checks::dwork_pencil_singularity),
    ("g1920_structure", checks::g1920_structure),
    ("g80_automorphisms", checks::g80_automorphisms),
    ("index_tables", checks::index_tables),
    ("klein_plus_t4_hessian", checks::klein_plus_t4_hessian),
    ("klein_plus_t4_invariance", checks::klein_plus_t4_invariance),
    ("klein_quartic_hessians", checks::klein_quartic_hessians),
    ("m12_normal_form", checks::m12_normal_form),
    ("order63_sextic_hessian", checks::order63_sextic_hessian),
    ("prime_power_screen", checks::prime_power_screen),
    ("prime_screens", checks::prime_screens),
    ("psl27_conjugations", checks::psl27_conjugations),
    ("psl27_sqrt2_eigenform", checks::psl27_sqrt2_eigenform),
    ("psl27_triples", checks::psl27_triples),
    ("q5_screen", checks::q5_screen),
    ("q7_screen", checks::q7_screen),
    ("quintic_discriminant", checks::quintic_discriminant),
    ("r2_diagonalization", checks::r2_diagonalization),
    ("r2_normal_forms", checks::r2_normal_forms),
    ("s5_r1_eigenspace", checks::s5_r1_eigenspace),
    ("s5_r2_eigenspaces", checks::s5_r2_eigenspaces),
    ("s5_tau_invariants", checks::s5_tau_invariants),
    ("stretched_normal_forms", checks::stretched_normal_forms),
];

/// Registered ids in sorted order.
pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|(id, _)| *id).collect()
}

/// Runs every check registered under `id`.
pub fn theorem_check(id: &str) -> Result<VerificationReport> {
    let (_, f) = REGISTRY
        .iter()
        .find(|(k, _)| *k == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let start = Instant::now();
    let mut c = Checker::default();
    if let Err(e) = f(&mut c) {
        c.note(format!("aborted: {e}"));
        c.check("completed without error", false);
    }
    Ok(c.finish(id, start.elapsed().as_millis() as u64))
}

/// Runs the whole registry in parallel; reports come back sorted by id.
pub fn run_all() -> Vec<VerificationReport> {
    let mut out: Vec<VerificationReport> = REGISTRY
        .par_iter()
        .map(|(id, _)| theorem_check(id).expect("registered id"))
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}
