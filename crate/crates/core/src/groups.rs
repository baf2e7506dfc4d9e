//! The twist groups as concrete subgroups of the symmetry group of the tessellation.
//!
//! Every group here is cyclic-by-lattice: G = ⋃ₖ σ₁ᵏ·L for the translation lattice L
//! and 0 ≤ k < m. That makes membership a closed-form test.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{half_shift, Isometry, Motion, Rational, SignedPerm, Vec3};
use crate::lattice::{add, dot, IVec3, TranslationLattice};
use crate::params::TwistoidParams;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ManifoldKind {
    /// Dicosm with twist axes parallel to (0,0,1).
    DicosmAxial,
    /// Dicosm with twist axes parallel to (1,−1,0).
    DicosmDiagonal,
    Tricosm,
    Tetracosm,
    Hexacosm,
}

impl ManifoldKind {
    pub const ALL: [ManifoldKind; 5] = [
        ManifoldKind::DicosmAxial,
        ManifoldKind::DicosmDiagonal,
        ManifoldKind::Tricosm,
        ManifoldKind::Tetracosm,
        ManifoldKind::Hexacosm,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ManifoldKind::DicosmAxial => "dicosm-axial",
            ManifoldKind::DicosmDiagonal => "dicosm-diagonal",
            ManifoldKind::Tricosm => "tricosm",
            ManifoldKind::Tetracosm => "tetracosm",
            ManifoldKind::Hexacosm => "hexacosm",
        }
    }

    pub fn rotation_order(&self) -> u8 {
        match self {
            ManifoldKind::DicosmAxial | ManifoldKind::DicosmDiagonal => 2,
            ManifoldKind::Tricosm => 3,
            ManifoldKind::Tetracosm => 4,
            ManifoldKind::Hexacosm => 6,
        }
    }
}

impl fmt::Display for ManifoldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ManifoldKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ManifoldKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown manifold '{s}'"))
    }
}

/// Decomposition x = t ∘ σ₁ᵏ with t reduced modulo the translation lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalElement {
    pub power: usize,
    pub coset_vector: IVec3,
}

#[derive(Clone, Debug)]
pub struct GroupSpec {
    kind: ManifoldKind,
    generators: Vec<Isometry>,
    rotation_order: u8,
    lattice: TranslationLattice,
    motions: Vec<Motion>,
    powers: Vec<Motion>,
    inverse_powers: Vec<Motion>,
}

impl GroupSpec {
    /// Assembles a group from generators; σ₁ (the first) must have maximal rotation order.
    /// The translation lattice is derived from the generators.
    pub fn from_generators(kind: ManifoldKind, generators: Vec<Isometry>) -> Result<Self> {
        let motions = generators
            .iter()
            .enumerate()
            .map(|(i, g)| g.to_motion().ok_or(Error::NonIntegralGenerator { index: i }))
            .collect::<Result<Vec<_>>>()?;
        let base = motions[0];
        let m = base.linear.order();
        let powers: Vec<Motion> = (0..m as u32).map(|k| base.pow(k)).collect();
        let inverse_powers = powers.iter().map(|p| p.inverse()).collect();
        let generator_powers = motions
            .iter()
            .map(|g| {
                powers.iter().position(|p| p.linear == g.linear).ok_or_else(|| {
                    Error::internal("generator rotation is not a power of the base twist")
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let lattice = derive_lattice(&motions, &powers, &generator_powers)?;
        Ok(GroupSpec {
            kind,
            generators,
            rotation_order: m,
            lattice,
            motions,
            powers,
            inverse_powers,
        })
    }

    /// Like [`GroupSpec::from_generators`], but records `basis` as the lattice basis
    /// after checking it spans the derived lattice.
    pub fn with_basis(
        kind: ManifoldKind,
        generators: Vec<Isometry>,
        basis: [IVec3; 3],
    ) -> Result<Self> {
        let mut g = GroupSpec::from_generators(kind, generators)?;
        let stated = TranslationLattice::new(basis)?;
        if !stated.same_lattice(&g.lattice) {
            return Err(Error::internal(format!(
                "stated translation basis {basis:?} differs from the derived lattice"
            )));
        }
        g.lattice = stated;
        Ok(g)
    }

    pub fn kind(&self) -> ManifoldKind {
        self.kind
    }

    pub fn generators(&self) -> &[Isometry] {
        &self.generators
    }

    pub fn rotation_order(&self) -> u8 {
        self.rotation_order
    }

    pub fn base_twist(&self) -> &Isometry {
        &self.generators[0]
    }

    pub fn lattice(&self) -> &TranslationLattice {
        &self.lattice
    }

    pub fn motions(&self) -> &[Motion] {
        &self.motions
    }

    /// σ₁ᵏ for 0 ≤ k < m.
    pub fn powers(&self) -> &[Motion] {
        &self.powers
    }

    pub fn power_of(&self, linear: &SignedPerm) -> Option<usize> {
        self.powers.iter().position(|p| p.linear == *linear)
    }

    pub fn canonical_motion(&self, x: &Motion) -> Option<CanonicalElement> {
        let k = self.power_of(&x.linear)?;
        let t = x.compose(&self.inverse_powers[k]);
        Some(CanonicalElement {
            power: k,
            coset_vector: self.lattice.reduce(&t.shift),
        })
    }

    pub fn canonical_element(&self, x: &Isometry) -> Option<CanonicalElement> {
        self.canonical_motion(&x.to_motion()?)
    }

    #[inline]
    pub fn contains_motion(&self, x: &Motion) -> bool {
        match self.power_of(&x.linear) {
            Some(k) => {
                let t = x.compose(&self.inverse_powers[k]);
                self.lattice.contains(&t.shift)
            }
            None => false,
        }
    }

    pub fn contains(&self, x: &Isometry) -> bool {
        x.to_motion().is_some_and(|m| self.contains_motion(&m))
    }

    /// Whether conjugation by `linear` maps every generator rotation into ⟨σ₁⟩.
    pub fn linear_part_compatible(&self, linear: &SignedPerm) -> bool {
        let inv = linear.inverse();
        self.motions.iter().all(|g| {
            let c = linear.mul(&g.linear).mul(&inv);
            self.power_of(&c).is_some()
        })
    }

    pub fn normalizes_motion(&self, x: &Motion) -> bool {
        let xi = x.inverse();
        self.motions.iter().all(|g| {
            self.contains_motion(&x.compose(g).compose(&xi))
                && self.contains_motion(&xi.compose(g).compose(x))
        })
    }

    pub fn normalizes(&self, x: &Isometry) -> bool {
        x.to_motion().is_some_and(|m| self.normalizes_motion(&m))
    }

    /// Exact check that no element t∘σ₁ᵏ (t ∈ L, 0 < k < m) has a fixed point.
    ///
    /// Such an element fixes a point iff its axial translation vanishes, i.e. iff
    /// −(σ₁ᵏ translation)·d lies in the value group {t·d : t ∈ L} = gℤ. The explicit
    /// scan over lattice vectors with Hermite coefficients in [−bound, bound] is a
    /// second, independent witness search.
    pub fn is_fixed_point_free_witness(&self, word_length_bound: u32) -> bool {
        let Some(d) = rotation_axis(&self.powers[1.min(self.powers.len() - 1)].linear) else {
            return false;
        };
        let h = self.lattice.hermite_form();
        let g = h.iter().fold(0i64, |acc, v| acc.gcd(&dot(v, &d)));
        let closed = (1..self.powers.len()).all(|k| {
            let s = dot(&self.powers[k].shift, &d);
            if g == 0 {
                s != 0
            } else {
                s.rem_euclid(g) != 0
            }
        });
        let b = word_length_bound as i64;
        let mut scanned = true;
        'outer: for k in 1..self.powers.len() {
            for c0 in -b..=b {
                for c1 in -b..=b {
                    for c2 in -b..=b {
                        let t = [0, 1, 2].map(|i| c0 * h[0][i] + c1 * h[1][i] + c2 * h[2][i]);
                        if dot(&add(&self.powers[k].shift, &t), &d) == 0 {
                            scanned = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        closed && scanned
    }
}

/// Primitive direction fixed by a rotation, if any.
fn rotation_axis(m: &SignedPerm) -> Option<IVec3> {
    if m.det() != 1 || *m == SignedPerm::IDENTITY {
        return None;
    }
    let k = m.order();
    let mut sum = [[0i64; 3]; 3];
    let mut p = SignedPerm::IDENTITY;
    for _ in 0..k {
        let r = p.rows();
        for i in 0..3 {
            for j in 0..3 {
                sum[i][j] += r[i][j];
            }
        }
        p = p.mul(m);
    }
    (0..3)
        .map(|j| [sum[0][j], sum[1][j], sum[2][j]])
        .find(|c| c.iter().any(|x| *x != 0))
}

/// Normal closure of {σ₁ᵐ, σᵢσ₁^(−kᵢ)} under σ₁: all pure translations of the group.
fn derive_lattice(
    motions: &[Motion],
    powers: &[Motion],
    generator_powers: &[usize],
) -> Result<TranslationLattice> {
    let base = motions[0];
    let m = powers.len() as u32;
    let mut vectors = vec![base.pow(m).shift];
    for (g, &k) in motions.iter().zip(generator_powers) {
        let t = g.compose(&powers[k].inverse()).shift;
        let mut r = t;
        for _ in 0..m {
            vectors.push(r);
            r = base.linear.apply_int(&r);
        }
    }
    vectors.retain(|v| *v != [0, 0, 0]);
    TranslationLattice::generated_by(&vectors)
}

fn perm(rows: [[i64; 3]; 3]) -> SignedPerm {
    SignedPerm::from_rows(rows).expect("signed permutation")
}

pub(crate) fn half_turn_z() -> SignedPerm {
    perm([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])
}

pub(crate) fn half_turn_diagonal() -> SignedPerm {
    perm([[0, -1, 0], [-1, 0, 0], [0, 0, -1]])
}

pub(crate) fn quarter_turn_z() -> SignedPerm {
    perm([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
}

/// (x,y,z) ↦ (z,x,y).
pub(crate) fn cyclic() -> SignedPerm {
    perm([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
}

/// Offset of the σ₁ axis for a tricosm with m = √3·c.
pub(crate) fn tricosm_base_point(m: i64) -> Vec3 {
    if m % 3 == 0 {
        Vec3::zero()
    } else {
        Vec3::from_fracs([(1, 3), (-1, 3), (0, 1)])
    }
}

/// The 3-fold rotations (cyclic first, then anticyclic) giving an integral σ₁.
pub fn tricosm_integral_senses(m: i64) -> Vec<(SignedPerm, IVec3)> {
    let a1 = tricosm_base_point(m);
    let third = Rational::new(m, 3);
    [cyclic(), cyclic().inverse()]
        .into_iter()
        .filter_map(|r| {
            let t = a1 - r.apply(&a1) + Vec3::new(third, third, third);
            t.to_int().map(|t| (r, t))
        })
        .collect()
}

fn build_tricosm(m: i64, a: i64, b: i64) -> Result<GroupSpec> {
    let senses = tricosm_integral_senses(m);
    let expected = if m % 3 == 0 { 2 } else { 1 };
    if senses.len() != expected {
        return Err(Error::internal(format!(
            "tricosm m={m}: {} integral rotation senses, expected {expected}",
            senses.len()
        )));
    }
    let (r, t1) = senses[0];
    let v1 = Vec3::from_fracs([(2, 3), (-1, 3), (-1, 3)]);
    let v2 = Vec3::from_fracs([(1, 3), (1, 3), (-2, 3)]);
    let offset = v1 * Rational::from_integer(a) + v2 * Rational::from_integer(b);
    let shift = (offset - r.apply(&offset))
        .to_int()
        .ok_or(Error::NonIntegralGenerator { index: 1 })?;
    let s1 = Motion::new(r, t1);
    let s2 = Motion::new(r, add(&t1, &shift));
    // σ₃ is the square root of σ₁σ₂ with rotation r: (I + r)s = w, solved with
    // (I + r)⁻¹ = (I − r + r²)/2 since r³ = I.
    let w = s1.compose(&s2).shift;
    let r2 = r.mul(&r);
    let num = [0, 1, 2].map(|i| w[i] - r.apply_int(&w)[i] + r2.apply_int(&w)[i]);
    if num.iter().any(|c| c % 2 != 0) {
        return Err(Error::NonIntegralGenerator { index: 2 });
    }
    let s3 = Motion::new(r, num.map(|c| c / 2));
    GroupSpec::with_basis(
        ManifoldKind::Tricosm,
        vec![s1.into(), s2.into(), s3.into()],
        [[m, m, m], [a, b, -a - b], [-b, a + b, -a]],
    )
}

/// Builds the twist group of a parameter set. Parameters need only satisfy the raw
/// invariants; no normalization is assumed.
pub fn build_group(params: &TwistoidParams) -> Result<GroupSpec> {
    let iso = |m: SignedPerm, t: IVec3| Isometry::from_int(m, t);
    match *params {
        TwistoidParams::Hexacosm => Err(Error::HexacosmImpossible),
        TwistoidParams::DicosmAxial(p) => {
            let h = half_turn_z();
            GroupSpec::with_basis(
                ManifoldKind::DicosmAxial,
                vec![
                    iso(h, [p.p1, 0, p.c]),
                    iso(h, [p.p2, 0, p.c]),
                    iso(h, [p.p3, p.q3, p.c]),
                ],
                [[0, 0, 2 * p.c], [p.p2 - p.p1, 0, 0], [p.p3 - p.p1, p.q3, 0]],
            )
        }
        TwistoidParams::DicosmDiagonal(p) => {
            let h = half_turn_diagonal();
            let n = p.n;
            let twist = |index: usize, pp: i64, qq: i64| {
                if (pp + n) % 2 != 0 {
                    return Err(Error::NonIntegralGenerator { index });
                }
                Ok(iso(h, [(pp + n) / 2, (pp - n) / 2, qq]))
            };
            let gens = vec![twist(0, p.p1, 0)?, twist(1, p.p2, 0)?, twist(2, p.p3, p.q3)?];
            let (d2, d3) = (p.p2 - p.p1, p.p3 - p.p1);
            if d2 % 2 != 0 || d3 % 2 != 0 {
                return Err(Error::invalid("P2 and P3 must have the parity of P1"));
            }
            GroupSpec::with_basis(
                ManifoldKind::DicosmDiagonal,
                gens,
                [[n, -n, 0], [d2 / 2, d2 / 2, 0], [d3 / 2, d3 / 2, p.q3]],
            )
        }
        TwistoidParams::Tricosm(p) => build_tricosm(p.m, p.a, p.b),
        TwistoidParams::Tetracosm(p) => GroupSpec::with_basis(
            ManifoldKind::Tetracosm,
            vec![
                iso(quarter_turn_z(), [0, 0, p.c]),
                iso(half_turn_z(), [p.p, p.q, 2 * p.c]),
            ],
            [[0, 0, 4 * p.c], [p.p, p.q, 0], [p.q, -p.p, 0]],
        ),
    }
}

pub fn translation_lattice(g: &GroupSpec) -> &TranslationLattice {
    g.lattice()
}

pub fn contains(g: &GroupSpec, x: &Isometry) -> bool {
    g.contains(x)
}

pub fn normalizes(g: &GroupSpec, x: &Isometry) -> bool {
    g.normalizes(x)
}

pub fn is_fixed_point_free_witness(g: &GroupSpec, word_length_bound: u32) -> bool {
    g.is_fixed_point_free_witness(word_length_bound)
}

/// Conjugates every generator by the translation (1/2, 1/2, 1/2).
pub fn dual_group(g: &GroupSpec) -> GroupSpec {
    let tau = half_shift();
    let gens = g.generators.iter().map(|s| s.conjugated_by(&tau)).collect();
    GroupSpec::with_basis(g.kind, gens, *g.lattice.basis())
        .expect("conjugation by the half shift keeps generators integral and fixes the lattice")
}
