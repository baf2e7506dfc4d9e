//! Minimal toroidal covers: the tessellated 3-torus ℝ³/L for the translation lattice L.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classifier::{classify, DeformableClass, SymmetryProfile};
use crate::error::Result;
use crate::geometry::SignedPerm;
use crate::groups::build_group;
use crate::lattice::{IVec3, TranslationLattice};
use crate::params::TwistoidParams;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverLattice {
    pub t1: IVec3,
    pub t2: IVec3,
    pub t3: IVec3,
    pub index: u64,
}

impl CoverLattice {
    pub fn lattice(&self) -> TranslationLattice {
        TranslationLattice::new([self.t1, self.t2, self.t3]).expect("cover basis has rank 3")
    }
}

/// Symmetry-type labels of cubic tessellations of the 3-torus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ToroidClass {
    C1,
    C3,
    C4,
    C6A,
    C6B,
    C6C,
    C8,
    C12A,
    C12B,
}

impl ToroidClass {
    /// Flag orbits of a torus in this class.
    pub fn orbits(&self) -> u64 {
        match self {
            ToroidClass::C1 => 1,
            ToroidClass::C3 => 3,
            ToroidClass::C4 => 4,
            ToroidClass::C6A | ToroidClass::C6B | ToroidClass::C6C => 6,
            ToroidClass::C8 => 8,
            ToroidClass::C12A | ToroidClass::C12B => 12,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            ToroidClass::C1 => "1",
            ToroidClass::C3 => "3",
            ToroidClass::C4 => "4",
            ToroidClass::C6A => "6A",
            ToroidClass::C6B => "6B",
            ToroidClass::C6C => "6C",
            ToroidClass::C8 => "8",
            ToroidClass::C12A => "12A",
            ToroidClass::C12B => "12B",
        }
    }
}

impl fmt::Display for ToroidClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn cover_lattice(params: &TwistoidParams) -> Result<CoverLattice> {
    let report = classify(params)?;
    let g = build_group(&report.params)?;
    let [t1, t2, t3] = *g.lattice().basis();
    Ok(CoverLattice {
        t1,
        t2,
        t3,
        index: g.lattice().index(),
    })
}

pub fn cover_flag_count(lat: &CoverLattice) -> u64 {
    48 * lat.index
}

/// The class label assigned case by case from the family of the twistoid.
pub fn cover_class(params: &TwistoidParams) -> Result<ToroidClass> {
    let report = classify(params)?;
    Ok(match (report.params, report.profile) {
        (TwistoidParams::DicosmAxial(p), SymmetryProfile::DicosmAxial { class, .. }) => {
            match class {
                DeformableClass::One => {
                    if p.p3 == p.p1 && p.p2 - p.p1 == 2 * p.c && p.q3 == 2 * p.c {
                        ToroidClass::C1
                    } else {
                        ToroidClass::C3
                    }
                }
                DeformableClass::Two => ToroidClass::C6C,
                DeformableClass::TwoZeroTwo => ToroidClass::C6A,
                DeformableClass::TwoOne => ToroidClass::C6B,
                DeformableClass::Four => ToroidClass::C12A,
            }
        }
        (TwistoidParams::DicosmDiagonal(p), SymmetryProfile::DicosmDiagonal { chi, .. }) => {
            if chi && p.p3 == p.p1 {
                match lattice_toroid_class(&cover_lattice(params)?) {
                    Ok(ToroidClass::C3) => ToroidClass::C3,
                    _ => ToroidClass::C6B,
                }
            } else if chi {
                ToroidClass::C6B
            } else {
                ToroidClass::C12B
            }
        }
        (TwistoidParams::Tricosm(p), _) => {
            if p.a * p.b == 0 || p.a == p.b {
                ToroidClass::C4
            } else {
                ToroidClass::C8
            }
        }
        (TwistoidParams::Tetracosm(p), _) => {
            if p.p * p.q * (p.p - p.q) == 0 {
                ToroidClass::C3
            } else {
                ToroidClass::C6C
            }
        }
        _ => unreachable!("classify rejects the hexacosm"),
    })
}

fn axis_of_half_turn(m: &SignedPerm) -> IVec3 {
    let r = m.rows();
    // Columns of I + M span the fixed line of a half-turn.
    (0..3)
        .map(|j| [0, 1, 2].map(|i| r[i][j] + if i == j { 1 } else { 0 }))
        .find(|c| c.iter().any(|x| *x != 0))
        .expect("a half-turn fixes a line")
}

/// The class read off the point-group stabilizer of the lattice.
///
/// Returns `Err(orbits)` when the stabilizer has no class label (48/|Stab| flag
/// orbits with no named class, such as 2 or 24).
pub fn lattice_toroid_class(lat: &CoverLattice) -> std::result::Result<ToroidClass, u64> {
    let l = lat.lattice();
    let stab: Vec<SignedPerm> = SignedPerm::all()
        .iter()
        .copied()
        .filter(|m| l.is_invariant_under(m))
        .collect();
    let rotations: Vec<&SignedPerm> = stab.iter().filter(|m| m.det() == 1).collect();
    let half_turn_axes: Vec<IVec3> = rotations
        .iter()
        .filter(|m| m.order() == 2)
        .map(|m| axis_of_half_turn(m))
        .collect();
    let coordinate = |a: &IVec3| a.iter().filter(|x| **x != 0).count() == 1;
    let orbits = 48 / stab.len() as u64;
    match stab.len() {
        48 => Ok(ToroidClass::C1),
        16 => Ok(ToroidClass::C3),
        12 => Ok(ToroidClass::C4),
        6 => Ok(ToroidClass::C8),
        8 if rotations.iter().any(|m| m.order() == 4) => Ok(ToroidClass::C6C),
        8 if half_turn_axes.iter().all(coordinate) => Ok(ToroidClass::C6A),
        8 => Ok(ToroidClass::C6B),
        4 if half_turn_axes.iter().all(coordinate) => Ok(ToroidClass::C12A),
        4 => Ok(ToroidClass::C12B),
        _ => Err(orbits),
    }
}
