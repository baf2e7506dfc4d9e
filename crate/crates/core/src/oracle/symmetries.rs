use crate::geometry::{Isometry, Motion, SignedPerm};
use crate::groups::GroupSpec;
use crate::union_find::UnionFind;

use super::complex::FlagComplex;

/// Every (M, w) with M among the 48 signed permutations and w a coset representative
/// of the translation lattice that normalizes the group.
pub fn enumerate_symmetry_motions(g: &GroupSpec) -> Vec<Motion> {
    let reps = g.lattice().coset_reps();
    let mut out = vec![];
    for m in SignedPerm::all() {
        // Conjugation must carry the rotation parts into the cyclic group they generate.
        if !g.linear_part_compatible(m) {
            continue;
        }
        for w in &reps {
            let x = Motion::new(*m, *w);
            if g.normalizes_motion(&x) {
                out.push(x);
            }
        }
    }
    out
}

pub fn enumerate_symmetries(g: &GroupSpec) -> Vec<Isometry> {
    enumerate_symmetry_motions(g).into_iter().map(Isometry::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Orbit label of each quotient flag, numbered by first appearance.
    pub labels: Vec<u32>,
    pub orbit_count: usize,
    /// Number of symmetries modulo the translation lattice that were applied.
    pub symmetry_coset_count: usize,
}

pub fn orbit_count(c: &FlagComplex, syms: &[Isometry]) -> OrbitPartition {
    let motions: Vec<Motion> = syms
        .iter()
        .map(|s| s.to_motion().expect("symmetries of the tessellation are integral"))
        .collect();
    orbit_count_motions(c, &motions)
}

/// Merges every quotient flag with its image under every symmetry.
pub fn orbit_count_motions(c: &FlagComplex, syms: &[Motion]) -> OrbitPartition {
    let mut uf = UnionFind::new(c.len());
    let g = c.group();
    for x in syms {
        // Elements of the group fix every quotient flag.
        if g.contains_motion(x) {
            continue;
        }
        for (i, f) in c.flags().iter().enumerate() {
            uf.union(i as u32, c.quotient_index(&f.act(x)) as u32);
        }
    }
    OrbitPartition {
        orbit_count: uf.class_count(),
        labels: uf.labels(),
        symmetry_coset_count: syms.len(),
    }
}
