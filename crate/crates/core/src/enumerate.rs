//! Enumeration of normalized parameter sets within bounds.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::classifier::{classify, Family};
use crate::groups::ManifoldKind;
use crate::params::{
    check_raw, validate, DicosmAxialParams, DicosmDiagonalParams, TetracosmParams,
    TricosmParams, TwistoidParams,
};

/// Inclusive upper bounds for the raw parameter grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_c: i64,
    pub max_n: i64,
    pub max_m: i64,
    pub max_p2: i64,
    pub max_q3: i64,
    pub max_ab: i64,
    pub max_pq: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_c: 1,
            max_n: 2,
            max_m: 3,
            max_p2: 12,
            max_q3: 4,
            max_ab: 3,
            max_pq: 4,
        }
    }
}

fn normalize_all(raw: Vec<TwistoidParams>) -> Vec<TwistoidParams> {
    let set: BTreeSet<TwistoidParams> = raw
        .into_par_iter()
        .filter(|p| check_raw(p).is_ok())
        .filter_map(|p| validate(&p).ok())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    set.into_iter().collect()
}

fn raw_grid(kind: ManifoldKind, b: &Bounds) -> Vec<TwistoidParams> {
    let mut out = vec![];
    match kind {
        ManifoldKind::DicosmAxial => {
            for c in 1..=b.max_c {
                for p1 in 0..=1 {
                    for p2 in p1 + 1..=b.max_p2 {
                        for q3 in 1..=b.max_q3 {
                            for p3 in 0..p2 {
                                out.push(DicosmAxialParams::new(c, p1, p2, p3, q3).into());
                            }
                        }
                    }
                }
            }
        }
        ManifoldKind::DicosmDiagonal => {
            for n in 1..=b.max_n {
                let p1 = if n % 2 == 0 { 0 } else { 1 };
                for p2 in (p1 + 2..=b.max_p2).step_by(2) {
                    for q3 in 1..=b.max_q3 {
                        for p3 in (p1..p2).step_by(2) {
                            out.push(DicosmDiagonalParams::new(n, p1, p2, p3, q3).into());
                        }
                    }
                }
            }
        }
        ManifoldKind::Tricosm => {
            for m in 1..=b.max_m {
                for a in 0..=b.max_ab {
                    for bb in 0..=b.max_ab {
                        out.push(TricosmParams::new(m, a, bb).into());
                    }
                }
            }
        }
        ManifoldKind::Tetracosm => {
            for c in 1..=b.max_c {
                for p in 0..=b.max_pq {
                    for q in 0..=p {
                        out.push(TetracosmParams::new(c, p, q).into());
                    }
                }
            }
        }
        ManifoldKind::Hexacosm => {}
    }
    out
}

/// All normalized parameter sets reachable from the raw grid, sorted and deduplicated.
pub fn enumerate(kind: ManifoldKind, bounds: &Bounds) -> Vec<TwistoidParams> {
    normalize_all(raw_grid(kind, bounds))
}

/// Every normalized parameter set of the four cases with at most `max_flags` flags.
pub fn grid_by_flags(max_flags: u64) -> Vec<TwistoidParams> {
    let f = max_flags as i64;
    let mut raw: Vec<TwistoidParams> = vec![];
    for c in 1..=f / 48 {
        for p1 in 0..=1 {
            for d in 1..=f / (48 * c) {
                for q3 in 1..=f / (48 * c * d) {
                    for p3 in p1..p1 + d {
                        raw.push(DicosmAxialParams::new(c, p1, p1 + d, p3, q3).into());
                    }
                }
            }
        }
    }
    for n in 1..=f / 48 {
        let p1 = if n % 2 == 0 { 0 } else { 1 };
        for h in 1..=f / (48 * n) {
            for q3 in 1..=f / (48 * n * h) {
                for k in 0..h {
                    raw.push(DicosmDiagonalParams::new(n, p1, p1 + 2 * h, p1 + 2 * k, q3).into());
                }
            }
        }
    }
    for m in 1..=f / 48 {
        for a in 0..=f {
            if 48 * m * a * a > f {
                break;
            }
            for b in 0..=f {
                if 48 * m * (a * a + b * b + a * b) > f {
                    break;
                }
                raw.push(TricosmParams::new(m, a, b).into());
            }
        }
    }
    for c in 1..=f / 48 {
        for p in 0..=f {
            if 48 * c * p * p > f {
                break;
            }
            for q in 0..=p {
                if 48 * c * (p * p + q * q) > f {
                    break;
                }
                raw.push(TetracosmParams::new(c, p, q).into());
            }
        }
    }
    normalize_all(raw)
}

/// The first witness (in sorted order) of each realized family.
pub fn realized_families(params: &[TwistoidParams]) -> BTreeMap<Family, TwistoidParams> {
    let mut out = BTreeMap::new();
    for p in params {
        if let Ok(r) = classify(p) {
            out.entry(r.family).or_insert(r.params);
        }
    }
    out
}
