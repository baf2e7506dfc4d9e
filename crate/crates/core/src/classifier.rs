//! Closed-form classification of twistoids into symmetry families.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::groups::ManifoldKind;
use crate::params::{
    validate, DicosmAxialParams, DicosmDiagonalParams, TetracosmParams, TricosmParams,
    TwistoidParams,
};

pub use crate::params::dual_params;

/// Which of the translations α, β, αβ permuting the generator axes are symmetries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct RigidPart {
    pub alpha: bool,
    pub beta: bool,
    pub alphabeta: bool,
}

impl RigidPart {
    pub fn len(&self) -> usize {
        [self.alpha, self.beta, self.alphabeta].iter().filter(|x| **x).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Reduction factor r of the flag-orbit count: the order of the rigid translations.
    pub fn order(&self) -> u64 {
        match self.len() {
            0 => 1,
            1 => 2,
            _ => 4,
        }
    }

    pub fn row(&self) -> Result<RigidRow> {
        Ok(match (self.alpha, self.beta, self.alphabeta) {
            (false, false, false) => RigidRow::Rho,
            (true, false, false) => RigidRow::RhoAlpha,
            (false, true, false) => RigidRow::RhoBeta,
            (false, false, true) => RigidRow::RhoAlphaBeta,
            (true, true, true) => RigidRow::RhoAlphaAndBeta,
            _ => return Err(Error::internal("two rigid translations without the third")),
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut out = vec![];
        if self.alpha {
            out.push("alpha");
        }
        if self.beta {
            out.push("beta");
        }
        if self.alphabeta {
            out.push("alphabeta");
        }
        out
    }
}

/// The rigidly isometric subgroup; ρ is always present.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum RigidRow {
    Rho,
    RhoAlpha,
    RhoBeta,
    RhoAlphaBeta,
    RhoAlphaAndBeta,
}

impl RigidRow {
    pub const ALL: [RigidRow; 5] = [
        RigidRow::Rho,
        RigidRow::RhoAlpha,
        RigidRow::RhoBeta,
        RigidRow::RhoAlphaBeta,
        RigidRow::RhoAlphaAndBeta,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            RigidRow::Rho => "rho",
            RigidRow::RhoAlpha => "rho+alpha",
            RigidRow::RhoBeta => "rho+beta",
            RigidRow::RhoAlphaBeta => "rho+alphabeta",
            RigidRow::RhoAlphaAndBeta => "rho+alpha+beta",
        }
    }

    /// Group notation as printed in the family table.
    pub fn label(&self) -> &'static str {
        match self {
            RigidRow::Rho => "<rho'>",
            RigidRow::RhoAlpha => "<rho',alpha'>",
            RigidRow::RhoBeta => "<rho',beta'>",
            RigidRow::RhoAlphaBeta => "<rho',alpha'beta'>",
            RigidRow::RhoAlphaAndBeta => "<rho',alpha',beta'>",
        }
    }
}

/// Toroid-style label of the deformable subgroup for axial dicosm twistoids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum DeformableClass {
    One,
    Two,
    TwoZeroTwo,
    TwoOne,
    Four,
}

impl DeformableClass {
    pub const ALL: [DeformableClass; 5] = [
        DeformableClass::One,
        DeformableClass::Two,
        DeformableClass::TwoZeroTwo,
        DeformableClass::TwoOne,
        DeformableClass::Four,
    ];

    /// Order n of the deformable subgroup.
    pub fn order(&self) -> u64 {
        match self {
            DeformableClass::One => 4,
            DeformableClass::Four => 1,
            _ => 2,
        }
    }

    pub fn id(&self) -> &'static str {
        match self {
            DeformableClass::One => "1",
            DeformableClass::Two => "2",
            DeformableClass::TwoZeroTwo => "2_02",
            DeformableClass::TwoOne => "2_1",
            DeformableClass::Four => "4",
        }
    }

    pub fn from_predicates(gamma1: bool, gamma2: bool, eta: bool) -> Result<Self> {
        Ok(match (gamma1, gamma2, eta) {
            (true, true, true) => DeformableClass::One,
            (false, false, true) => DeformableClass::Two,
            (true, false, false) => DeformableClass::TwoZeroTwo,
            (false, true, false) => DeformableClass::TwoOne,
            (false, false, false) => DeformableClass::Four,
            other => {
                return Err(Error::internal(format!(
                    "unreachable deformable combination (gamma1, gamma2, eta) = {other:?}"
                )))
            }
        })
    }
}

impl fmt::Display for DeformableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The symmetry predicates of a twistoid, by case.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SymmetryProfile {
    DicosmAxial {
        rigid: RigidPart,
        gamma1: bool,
        gamma2: bool,
        eta: bool,
        class: DeformableClass,
    },
    DicosmDiagonal {
        beta: bool,
        chi: bool,
    },
    Tricosm {
        chi: bool,
        zeta: bool,
    },
    Tetracosm {
        alpha: bool,
        chi: bool,
    },
}

impl SymmetryProfile {
    /// Named predicates in a fixed order, for comparison against detected symmetries.
    pub fn predicates(&self) -> Vec<(&'static str, bool)> {
        match *self {
            SymmetryProfile::DicosmAxial {
                rigid,
                gamma1,
                gamma2,
                eta,
                ..
            } => vec![
                ("alpha", rigid.alpha),
                ("beta", rigid.beta),
                ("alphabeta", rigid.alphabeta),
                ("gamma1", gamma1),
                ("gamma2", gamma2),
                ("eta", eta),
            ],
            SymmetryProfile::DicosmDiagonal { beta, chi } => {
                vec![("alpha", true), ("beta", beta), ("chi", chi)]
            }
            SymmetryProfile::Tricosm { chi, zeta } => vec![("chi", chi), ("zeta", zeta)],
            SymmetryProfile::Tetracosm { alpha, chi } => {
                vec![("alpha", alpha), ("chi", chi), ("alphachi", alpha && chi)]
            }
        }
    }

    pub fn family(&self) -> Family {
        match *self {
            SymmetryProfile::DicosmAxial { rigid, class, .. } => {
                Family::DicosmAxial(rigid.row().expect("profile built from a valid rigid part"), class)
            }
            SymmetryProfile::DicosmDiagonal { beta, chi } => Family::DicosmDiagonal { beta, chi },
            SymmetryProfile::Tricosm { chi, zeta } => Family::Tricosm { chi, zeta },
            SymmetryProfile::Tetracosm { alpha, chi } => Family::Tetracosm { alpha, chi },
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    DicosmAxial(RigidRow, DeformableClass),
    DicosmDiagonal { beta: bool, chi: bool },
    Tricosm { chi: bool, zeta: bool },
    Tetracosm { alpha: bool, chi: bool },
}

impl Family {
    pub fn kind(&self) -> ManifoldKind {
        match self {
            Family::DicosmAxial(..) => ManifoldKind::DicosmAxial,
            Family::DicosmDiagonal { .. } => ManifoldKind::DicosmDiagonal,
            Family::Tricosm { .. } => ManifoldKind::Tricosm,
            Family::Tetracosm { .. } => ManifoldKind::Tetracosm,
        }
    }

    /// Stable identifier such as `dicosm-axial:rho+alpha/2_02` or `tricosm:zeta`.
    pub fn id(&self) -> String {
        let tail = match *self {
            Family::DicosmAxial(row, class) => format!("{}/{}", row.id(), class.id()),
            Family::DicosmDiagonal { beta, chi } => match (beta, chi) {
                (true, true) => "beta+chi".into(),
                (false, true) => "chi".into(),
                (true, false) => "beta".into(),
                (false, false) => "none".into(),
            },
            Family::Tricosm { chi, zeta } => match (chi, zeta) {
                (true, _) => "chi".into(),
                (false, true) => "zeta".into(),
                (false, false) => "none".into(),
            },
            Family::Tetracosm { alpha, chi } => match (alpha, chi) {
                (true, true) => "alpha+chi".into(),
                (true, false) => "alpha".into(),
                (false, true) => "chi".into(),
                (false, false) => "none".into(),
            },
        };
        format!("{}:{tail}", self.kind())
    }

    /// Defining conditions in geometric units.
    pub fn conditions(&self) -> String {
        let yes_no = |b: bool, yes: &str, no: &str| if b { yes.to_string() } else { no.to_string() };
        match *self {
            Family::DicosmAxial(row, class) => {
                let rigid = match row {
                    RigidRow::Rho => "p2-p1 not in Z; no rigid translation",
                    RigidRow::RhoAlpha => "p2-p1 in Z; p3-p1 or q3 not in Z",
                    RigidRow::RhoBeta => "p3-p1 and q3 in Z; p2-p1 not in Z",
                    RigidRow::RhoAlphaBeta => "p3-p2 and q3 in Z; p2-p1 not in Z",
                    RigidRow::RhoAlphaAndBeta => "p2-p1, p3-p1 and q3 in Z",
                };
                let deformable = match class {
                    DeformableClass::One => "gamma1, gamma2 and eta",
                    DeformableClass::Two => "eta only",
                    DeformableClass::TwoZeroTwo => "gamma1 only",
                    DeformableClass::TwoOne => "gamma2 only",
                    DeformableClass::Four => "no deformable symmetry",
                };
                format!("{rigid}; {deformable}")
            }
            Family::DicosmDiagonal { beta, chi } => format!(
                "{}; {}",
                yes_no(chi, "p3=p1 or p3=(p1+p2)/2", "p3 not in {p1, (p1+p2)/2}"),
                yes_no(beta, "q3 in Z", "q3 not in Z"),
            ),
            Family::Tricosm { chi, zeta } => match (chi, zeta) {
                (true, _) => "a=b".into(),
                (false, true) => "a=0 or b=0".into(),
                (false, false) => "ab(a-b)!=0".into(),
            },
            Family::Tetracosm { alpha, chi } => format!(
                "{}; {}",
                yes_no(alpha, "p-q in Z", "p-q not in Z"),
                yes_no(chi, "pq(p-q)=0", "pq(p-q)!=0"),
            ),
        }
    }

    /// Flag-orbit count as a formula in geometric units.
    pub fn orbit_formula(&self) -> String {
        match *self {
            Family::DicosmAxial(row, class) => {
                let r = RigidPart::from_row(row).order();
                format!("{}q3(p2-p1)", 48 / (r * class.order()))
            }
            Family::DicosmDiagonal { beta, chi } => {
                format!("{}q3(p2-p1)", 12 * diagonal_factor(beta, chi))
            }
            Family::Tricosm { chi, zeta } => {
                format!("{}(a^2+b^2+ab)", if chi || zeta { 8 } else { 16 })
            }
            Family::Tetracosm { alpha, chi } => {
                format!("{}(p^2+q^2)", 12 * tetracosm_factor(alpha, chi))
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl RigidPart {
    fn from_row(row: RigidRow) -> RigidPart {
        let (alpha, beta, alphabeta) = match row {
            RigidRow::Rho => (false, false, false),
            RigidRow::RhoAlpha => (true, false, false),
            RigidRow::RhoBeta => (false, true, false),
            RigidRow::RhoAlphaBeta => (false, false, true),
            RigidRow::RhoAlphaAndBeta => (true, true, true),
        };
        RigidPart {
            alpha,
            beta,
            alphabeta,
        }
    }
}

fn diagonal_factor(beta: bool, chi: bool) -> u64 {
    match (beta, chi) {
        (true, true) => 1,
        (false, false) => 4,
        _ => 2,
    }
}

fn tetracosm_factor(alpha: bool, chi: bool) -> u64 {
    match (alpha, chi) {
        (true, true) => 1,
        (false, false) => 4,
        _ => 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub params: TwistoidParams,
    pub family: Family,
    pub profile: SymmetryProfile,
    pub flag_count: u64,
    pub cube_count: Rational,
    pub flag_orbit_count: u64,
    pub identity_component_order: u64,
}

impl ClassificationReport {
    pub fn family_id(&self) -> String {
        self.family.id()
    }
}

/// Number of flags of the twistoid.
pub fn flag_count(params: &TwistoidParams) -> u64 {
    let v = match *params {
        TwistoidParams::DicosmAxial(p) => 48 * p.c * p.q3 * (p.p2 - p.p1),
        TwistoidParams::DicosmDiagonal(p) => 24 * p.n * p.q3 * (p.p2 - p.p1),
        TwistoidParams::Tricosm(p) => 48 * p.m * (p.a * p.a + p.b * p.b + p.a * p.b),
        TwistoidParams::Tetracosm(p) => 48 * p.c * (p.p * p.p + p.q * p.q),
        TwistoidParams::Hexacosm => 0,
    };
    v as u64
}

pub fn rigid_part_dicosm_axial(p: &DicosmAxialParams) -> RigidPart {
    RigidPart {
        alpha: (p.p2 - p.p1).is_even(),
        beta: (p.p3 - p.p1).is_even() && p.q3.is_even(),
        alphabeta: (p.p3 - p.p2).is_even() && p.q3.is_even(),
    }
}

fn divides(num: i64, den: i64) -> bool {
    den != 0 && num % den == 0
}

/// (γ₁, γ₂, η) for an axial dicosm twistoid.
///
/// γ₂ and η both exchange the two horizontal edge directions. When p₁ = ½ and q₃ ∈ ℤ
/// every axis meets the same edge-midpoint class, so neither can exist there.
pub fn deformable_predicates_dicosm_axial(p: &DicosmAxialParams) -> (bool, bool, bool) {
    let (d2, d3, q) = (p.p2 - p.p1, p.p3 - p.p1, p.q3);
    // p3 is only defined modulo p2 - p1, so compare residues.
    let gamma1 = (2 * d3).rem_euclid(d2) == 0;
    let base = divides(d3, q) && divides(d2, q);
    let one_edge_class = p.p1 == 1 && q.is_even();
    let gamma2 = base && divides(q * q - d3 * d3, q * d2) && !one_edge_class;
    let eta = base && divides(q * q + d3 * d3, q * d2) && !one_edge_class;
    (gamma1, gamma2, eta)
}

pub fn deformable_class_dicosm_axial(p: &DicosmAxialParams) -> Result<DeformableClass> {
    let (g1, g2, eta) = deformable_predicates_dicosm_axial(p);
    DeformableClass::from_predicates(g1, g2, eta)
}

pub fn profile(params: &TwistoidParams) -> Result<SymmetryProfile> {
    Ok(match *params {
        TwistoidParams::Hexacosm => return Err(Error::HexacosmImpossible),
        TwistoidParams::DicosmAxial(p) => {
            let rigid = rigid_part_dicosm_axial(&p);
            rigid.row()?;
            let (gamma1, gamma2, eta) = deformable_predicates_dicosm_axial(&p);
            SymmetryProfile::DicosmAxial {
                rigid,
                gamma1,
                gamma2,
                eta,
                class: DeformableClass::from_predicates(gamma1, gamma2, eta)?,
            }
        }
        TwistoidParams::DicosmDiagonal(p) => SymmetryProfile::DicosmDiagonal {
            beta: p.q3.is_even(),
            chi: (2 * (p.p3 - p.p1)).rem_euclid(p.p2 - p.p1) == 0,
        },
        TwistoidParams::Tricosm(p) => SymmetryProfile::Tricosm {
            chi: p.a == p.b,
            zeta: p.a * p.b == 0,
        },
        TwistoidParams::Tetracosm(p) => SymmetryProfile::Tetracosm {
            alpha: (p.p - p.q).is_even(),
            chi: p.p * p.q * (p.p - p.q) == 0,
        },
    })
}

fn orbit_count_formula(params: &TwistoidParams, profile: &SymmetryProfile) -> Result<u64> {
    let v = match (*params, *profile) {
        (TwistoidParams::DicosmAxial(p), SymmetryProfile::DicosmAxial { rigid, class, .. }) => {
            let num = 12 * (p.q3 * (p.p2 - p.p1)) as u64;
            let den = rigid.order() * class.order();
            if !num.is_multiple_of(den) {
                return Err(Error::internal(format!("orbit count {num}/{den} is not integral")));
            }
            num / den
        }
        (TwistoidParams::DicosmDiagonal(p), SymmetryProfile::DicosmDiagonal { beta, chi }) => {
            let d = p.p2 - p.p1;
            if d.is_odd() {
                return Err(Error::internal("P2-P1 is odd in the diagonal case"));
            }
            3 * (p.q3 * d / 2) as u64 * diagonal_factor(beta, chi)
        }
        (TwistoidParams::Tricosm(p), SymmetryProfile::Tricosm { chi, zeta }) => {
            let s = (p.a * p.a + p.b * p.b + p.a * p.b) as u64;
            if chi || zeta {
                8 * s
            } else {
                16 * s
            }
        }
        (TwistoidParams::Tetracosm(p), SymmetryProfile::Tetracosm { alpha, chi }) => {
            3 * (p.p * p.p + p.q * p.q) as u64 * tetracosm_factor(alpha, chi)
        }
        _ => return Err(Error::internal("profile does not match the parameter kind")),
    };
    Ok(v)
}

/// Order of the group of translations along the twist axes modulo the group.
pub fn identity_component_order(params: &TwistoidParams) -> u64 {
    (match *params {
        TwistoidParams::DicosmAxial(p) => 2 * p.c,
        TwistoidParams::DicosmDiagonal(p) => p.n,
        TwistoidParams::Tricosm(p) => p.m,
        TwistoidParams::Tetracosm(p) => 4 * p.c,
        TwistoidParams::Hexacosm => 0,
    }) as u64
}

/// Validates, normalizes and classifies.
pub fn classify(params: &TwistoidParams) -> Result<ClassificationReport> {
    let params = validate(params)?;
    let profile = profile(&params)?;
    let flags = flag_count(&params);
    let orbits = orbit_count_formula(&params, &profile)?;
    if orbits == 0 || !flags.is_multiple_of(orbits) {
        return Err(Error::internal(format!("{orbits} orbits do not divide {flags} flags")));
    }
    Ok(ClassificationReport {
        params,
        family: profile.family(),
        profile,
        flag_count: flags,
        cube_count: Rational::new(flags as i64, 48),
        flag_orbit_count: orbits,
        identity_component_order: identity_component_order(&params),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Table2Witness {
    pub params: DicosmAxialParams,
    pub row: RigidRow,
    pub column: DeformableClass,
}

/// The eighteen printed parameter sets of the axial dicosm family table, with c = 1.
pub fn table2_witnesses() -> Vec<Table2Witness> {
    use DeformableClass::*;
    use RigidRow::*;
    let w = |row, column, p2, p3, q3| Table2Witness {
        params: DicosmAxialParams::new(1, 0, p2, p3, q3),
        row,
        column,
    };
    vec![
        w(Rho, One, 5, 0, 5),
        w(Rho, Two, 5, 2, 1),
        w(Rho, TwoZeroTwo, 5, 0, 3),
        w(Rho, TwoOne, 3, 2, 1),
        w(Rho, Four, 21, 4, 1),
        w(RhoAlpha, One, 6, 3, 3),
        w(RhoAlpha, Two, 26, 5, 1),
        w(RhoAlpha, TwoZeroTwo, 10, 5, 2),
        w(RhoAlpha, TwoOne, 8, 3, 1),
        w(RhoAlpha, Four, 20, 2, 1),
        w(RhoBeta, TwoZeroTwo, 3, 0, 4),
        w(RhoBeta, Four, 11, 2, 4),
        w(RhoAlphaBeta, Four, 5, 1, 2),
        w(RhoAlphaAndBeta, One, 4, 0, 4),
        w(RhoAlphaAndBeta, Two, 10, 4, 2),
        w(RhoAlphaAndBeta, TwoZeroTwo, 12, 6, 2),
        w(RhoAlphaAndBeta, TwoOne, 6, 4, 2),
        w(RhoAlphaAndBeta, Four, 40, 4, 2),
    ]
}

/// One realizable family together with a small witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyEntry {
    pub family: Family,
    pub witness: TwistoidParams,
    pub witness_orbits: u64,
}

/// All 29 realizable families: 18 + 4 axial/diagonal dicosm, 3 tricosm, 4 tetracosm.
pub fn families() -> Vec<FamilyEntry> {
    let mut witnesses: Vec<TwistoidParams> = table2_witnesses()
        .into_iter()
        .map(|w| w.params.into())
        .collect();
    witnesses.extend([
        TwistoidParams::from(DicosmDiagonalParams::new(2, 0, 4, 0, 2)),
        DicosmDiagonalParams::new(2, 0, 4, 0, 1).into(),
        DicosmDiagonalParams::new(2, 0, 6, 2, 2).into(),
        DicosmDiagonalParams::new(2, 0, 6, 2, 1).into(),
        TricosmParams::new(1, 1, 1).into(),
        TricosmParams::new(1, 1, 0).into(),
        TricosmParams::new(1, 2, 1).into(),
        TetracosmParams::new(1, 1, 1).into(),
        TetracosmParams::new(1, 3, 1).into(),
        TetracosmParams::new(1, 1, 0).into(),
        TetracosmParams::new(1, 2, 1).into(),
    ]);
    witnesses
        .into_iter()
        .map(|w| {
            let r = classify(&w).expect("family witnesses are valid");
            FamilyEntry {
                family: r.family,
                witness: r.params,
                witness_orbits: r.flag_orbit_count,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_has_twelve_orbits() {
        let r = classify(&DicosmAxialParams::new(28, 0, 4, 0, 4).into()).unwrap();
        assert_eq!(r.flag_orbit_count, 12);
        assert_eq!(r.family.id(), "dicosm-axial:rho+alpha+beta/1");
    }

    #[test]
    fn families_are_distinct() {
        let f = families();
        assert_eq!(f.len(), 29);
        let ids: std::collections::BTreeSet<_> = f.iter().map(|e| e.family.id()).collect();
        assert_eq!(ids.len(), 29);
    }
}
