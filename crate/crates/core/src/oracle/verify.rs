use serde::{Deserialize, Serialize};

use crate::classifier::classify;
use crate::error::Result;
use crate::groups::build_group;
use crate::params::TwistoidParams;

use super::complex::{build_complex, DEFAULT_FLAG_BOUND};
use super::detect::detect_predicates;
use super::symmetries::{enumerate_symmetry_motions, orbit_count_motions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateCheck {
    pub name: String,
    pub formula: bool,
    pub oracle: bool,
}

/// Closed-form counts and predicates next to their brute-force counterparts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: TwistoidParams,
    pub formula_flags: u64,
    pub oracle_flags: u64,
    pub formula_orbits: u64,
    pub oracle_orbits: u64,
    pub symmetry_count: usize,
    pub predicates: Vec<PredicateCheck>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn mismatches(&self) -> Vec<String> {
        let mut out = vec![];
        if self.formula_flags != self.oracle_flags {
            out.push(format!("flags {} vs {}", self.formula_flags, self.oracle_flags));
        }
        if self.formula_orbits != self.oracle_orbits {
            out.push(format!("orbits {} vs {}", self.formula_orbits, self.oracle_orbits));
        }
        for p in &self.predicates {
            if p.formula != p.oracle {
                out.push(format!("{}: formula {} oracle {}", p.name, p.formula, p.oracle));
            }
        }
        out
    }
}

pub fn verify(params: &TwistoidParams) -> Result<VerificationReport> {
    verify_with_bound(params, DEFAULT_FLAG_BOUND)
}

pub fn verify_with_bound(params: &TwistoidParams, bound: usize) -> Result<VerificationReport> {
    let report = classify(params)?;
    let g = build_group(&report.params)?;
    let complex = build_complex(&g, bound)?;
    let syms = enumerate_symmetry_motions(&g);
    let partition = orbit_count_motions(&complex, &syms);
    let detected = detect_predicates(&g, &syms)?;
    let predicates: Vec<PredicateCheck> = report
        .profile
        .predicates()
        .into_iter()
        .zip(detected)
        .map(|((name, formula), (dname, oracle))| {
            debug_assert_eq!(name, dname);
            PredicateCheck {
                name: name.to_string(),
                formula,
                oracle,
            }
        })
        .collect();
    let mut out = VerificationReport {
        params: report.params,
        formula_flags: report.flag_count,
        oracle_flags: complex.len() as u64,
        formula_orbits: report.flag_orbit_count,
        oracle_orbits: partition.orbit_count as u64,
        symmetry_count: syms.len(),
        predicates,
        pass: false,
    };
    out.pass = out.mismatches().is_empty();
    Ok(out)
}
