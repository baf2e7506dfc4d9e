//! Integer-encoded twistoid parameters, raw validation, and normalization.
//!
//! Normalization does not rewrite the raw numbers directly. It builds the group and
//! reads canonical parameters back off it: the translation lattice, plus which class
//! of points the twist axes pass through. Equal groups therefore always normalize to
//! equal parameters, and so do dual groups.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{analyze_twist, QuadMagnitude, Rational};
use crate::groups::{
    build_group, dual_group, half_turn_diagonal, half_turn_z, quarter_turn_z, GroupSpec,
    ManifoldKind,
};
use crate::lattice::echelon_2d;

/// Dicosm with axes along (0,0,1): c = C, pᵢ = Pᵢ/2, q₃ = Q3/2 (q₁ = q₂ = 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DicosmAxialParams {
    pub c: i64,
    pub p1: i64,
    pub p2: i64,
    pub p3: i64,
    pub q3: i64,
}

/// Dicosm with axes along (1,−1,0): c = N·√2/2, pᵢ = Pᵢ/4, q₃ = Q3/2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DicosmDiagonalParams {
    pub n: i64,
    pub p1: i64,
    pub p2: i64,
    pub p3: i64,
    pub q3: i64,
}

/// c = M/√3; the second axis sits at a·v₁ + b·v₂ with v₁ = ⅓(2,−1,−1), v₂ = ⅓(1,1,−2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TricosmParams {
    pub m: i64,
    pub a: i64,
    pub b: i64,
}

/// c = C, p = P/2, q = Q/2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TetracosmParams {
    pub c: i64,
    pub p: i64,
    pub q: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TwistoidParams {
    DicosmAxial(DicosmAxialParams),
    DicosmDiagonal(DicosmDiagonalParams),
    Tricosm(TricosmParams),
    Tetracosm(TetracosmParams),
    Hexacosm,
}

impl DicosmAxialParams {
    pub fn new(c: i64, p1: i64, p2: i64, p3: i64, q3: i64) -> Self {
        DicosmAxialParams { c, p1, p2, p3, q3 }
    }
}

impl DicosmDiagonalParams {
    pub fn new(n: i64, p1: i64, p2: i64, p3: i64, q3: i64) -> Self {
        DicosmDiagonalParams { n, p1, p2, p3, q3 }
    }
}

impl TricosmParams {
    pub fn new(m: i64, a: i64, b: i64) -> Self {
        TricosmParams { m, a, b }
    }
}

impl TetracosmParams {
    pub fn new(c: i64, p: i64, q: i64) -> Self {
        TetracosmParams { c, p, q }
    }
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

impl TwistoidParams {
    pub fn kind(&self) -> ManifoldKind {
        match self {
            TwistoidParams::DicosmAxial(_) => ManifoldKind::DicosmAxial,
            TwistoidParams::DicosmDiagonal(_) => ManifoldKind::DicosmDiagonal,
            TwistoidParams::Tricosm(_) => ManifoldKind::Tricosm,
            TwistoidParams::Tetracosm(_) => ManifoldKind::Tetracosm,
            TwistoidParams::Hexacosm => ManifoldKind::Hexacosm,
        }
    }

    pub fn rotation_order(&self) -> u8 {
        self.kind().rotation_order()
    }

    /// The integer encoding, keyed by the encoded parameter names.
    pub fn encoded(&self) -> Vec<(&'static str, i64)> {
        match *self {
            TwistoidParams::DicosmAxial(p) => {
                vec![("C", p.c), ("P1", p.p1), ("P2", p.p2), ("P3", p.p3), ("Q3", p.q3)]
            }
            TwistoidParams::DicosmDiagonal(p) => {
                vec![("N", p.n), ("P1", p.p1), ("P2", p.p2), ("P3", p.p3), ("Q3", p.q3)]
            }
            TwistoidParams::Tricosm(p) => vec![("M", p.m), ("a", p.a), ("b", p.b)],
            TwistoidParams::Tetracosm(p) => vec![("C", p.c), ("P", p.p), ("Q", p.q)],
            TwistoidParams::Hexacosm => vec![],
        }
    }

    /// Inverse of [`TwistoidParams::encoded`].
    pub fn from_encoded(kind: ManifoldKind, values: &BTreeMap<String, i64>) -> Result<Self> {
        let get = |k: &str| {
            values
                .get(k)
                .copied()
                .ok_or_else(|| Error::invalid(format!("missing parameter {k}")))
        };
        Ok(match kind {
            ManifoldKind::DicosmAxial => TwistoidParams::DicosmAxial(DicosmAxialParams::new(
                get("C")?,
                get("P1")?,
                get("P2")?,
                get("P3")?,
                get("Q3")?,
            )),
            ManifoldKind::DicosmDiagonal => {
                TwistoidParams::DicosmDiagonal(DicosmDiagonalParams::new(
                    get("N")?,
                    get("P1")?,
                    get("P2")?,
                    get("P3")?,
                    get("Q3")?,
                ))
            }
            ManifoldKind::Tricosm => {
                TwistoidParams::Tricosm(TricosmParams::new(get("M")?, get("a")?, get("b")?))
            }
            ManifoldKind::Tetracosm => {
                TwistoidParams::Tetracosm(TetracosmParams::new(get("C")?, get("P")?, get("Q")?))
            }
            ManifoldKind::Hexacosm => TwistoidParams::Hexacosm,
        })
    }

    /// Parameters in geometric units: rationals, and c as a multiple of √2 or √3 where needed.
    pub fn display(&self) -> Vec<(&'static str, String)> {
        let quad = |n: i64, d: i64, r: u8| {
            QuadMagnitude::new(Rational::new(n, d), r)
                .map(|q| q.to_string())
                .unwrap_or_else(|| format!("-{}", QuadMagnitude::new(Rational::new(-n, d), r).unwrap()))
        };
        match *self {
            TwistoidParams::DicosmAxial(p) => vec![
                ("c", p.c.to_string()),
                ("p1", half(p.p1).to_string()),
                ("p2", half(p.p2).to_string()),
                ("p3", half(p.p3).to_string()),
                ("q3", half(p.q3).to_string()),
            ],
            TwistoidParams::DicosmDiagonal(p) => vec![
                ("c", quad(p.n, 2, 2)),
                ("p1", Rational::new(p.p1, 4).to_string()),
                ("p2", Rational::new(p.p2, 4).to_string()),
                ("p3", Rational::new(p.p3, 4).to_string()),
                ("q3", half(p.q3).to_string()),
            ],
            TwistoidParams::Tricosm(p) => vec![
                ("c", quad(p.m, 3, 3)),
                ("a", p.a.to_string()),
                ("b", p.b.to_string()),
            ],
            TwistoidParams::Tetracosm(p) => vec![
                ("c", p.c.to_string()),
                ("p", half(p.p).to_string()),
                ("q", half(p.q).to_string()),
            ],
            TwistoidParams::Hexacosm => vec![],
        }
    }
}

impl fmt::Display for TwistoidParams {
    /// `[kind | c,p1,...]` in geometric units.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let values: Vec<String> = self.display().into_iter().map(|(_, v)| v).collect();
        write!(f, "[{} | {}]", self.kind(), values.join(","))
    }
}

impl From<DicosmAxialParams> for TwistoidParams {
    fn from(p: DicosmAxialParams) -> Self {
        TwistoidParams::DicosmAxial(p)
    }
}

impl From<DicosmDiagonalParams> for TwistoidParams {
    fn from(p: DicosmDiagonalParams) -> Self {
        TwistoidParams::DicosmDiagonal(p)
    }
}

impl From<TricosmParams> for TwistoidParams {
    fn from(p: TricosmParams) -> Self {
        TwistoidParams::Tricosm(p)
    }
}

impl From<TetracosmParams> for TwistoidParams {
    fn from(p: TetracosmParams) -> Self {
        TwistoidParams::Tetracosm(p)
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(msg))
    }
}

/// Checks the invariants of the raw integer encoding, without normalizing.
pub fn check_raw(params: &TwistoidParams) -> Result<()> {
    match *params {
        TwistoidParams::Hexacosm => Err(Error::HexacosmImpossible),
        TwistoidParams::DicosmAxial(p) => {
            require(p.c >= 1, "C must be positive")?;
            require(p.p1 == 0 || p.p1 == 1, "P1 must be 0 or 1")?;
            require(p.p2 > p.p1, "P2 must exceed P1")?;
            require(p.p3 >= 0, "P3 must be non-negative")?;
            require(p.q3 >= 1, "Q3 must be positive")?;
            require(p.p1 == 0 || p.p2.is_odd(), "P2 must be odd when P1=1")?;
            require(
                p.p1 == 0 || p.q3.is_odd() || p.p3.is_odd(),
                "P3 must be odd when P1=1 and Q3 is even",
            )
        }
        TwistoidParams::DicosmDiagonal(p) => {
            require(p.n >= 1, "N must be positive")?;
            require(p.p1 == 0 || p.p1 == 1, "P1 must be 0 or 1")?;
            require(p.n.is_even() == (p.p1 == 0), "N must be even exactly when P1=0")?;
            require(
                (p.p2 - p.p1).is_even() && (p.p3 - p.p1).is_even(),
                "P2 and P3 must have the parity of P1",
            )?;
            require(p.p2 > p.p1, "P2 must exceed P1")?;
            require(p.p3 >= 0, "P3 must be non-negative")?;
            require(p.q3 >= 1, "Q3 must be positive")
        }
        TwistoidParams::Tricosm(p) => {
            require(p.m >= 1, "M must be positive")?;
            require(p.a >= 0 && p.b >= 0, "a and b must be non-negative")?;
            require((p.a, p.b) != (0, 0), "a and b must not both be zero")
        }
        TwistoidParams::Tetracosm(p) => {
            require(p.c >= 1, "C must be positive")?;
            require((p.p, p.q) != (0, 0), "P and Q must not both be zero")
        }
    }
}

/// Checks the raw invariants, then returns the canonical parameters of the same group.
pub fn validate(params: &TwistoidParams) -> Result<TwistoidParams> {
    check_raw(params)?;
    let g = build_group(params)?;
    let canonical = canonical_params(&g)?;
    check_raw(&canonical).map_err(|e| {
        Error::internal(format!("normalized parameters {canonical:?} fail validation: {e}"))
    })?;
    Ok(canonical)
}

/// Reads canonical parameters off a group of one of the supported kinds.
pub fn canonical_params(g: &GroupSpec) -> Result<TwistoidParams> {
    match g.kind() {
        ManifoldKind::DicosmAxial => canonical_axial(g).map(Into::into),
        ManifoldKind::DicosmDiagonal => canonical_diagonal(g).map(Into::into),
        ManifoldKind::Tricosm => canonical_tricosm(g).map(Into::into),
        ManifoldKind::Tetracosm => canonical_tetracosm(g).map(Into::into),
        ManifoldKind::Hexacosm => Err(Error::HexacosmImpossible),
    }
}

fn frac_half(x: Rational) -> bool {
    !x.is_integer()
}

fn canonical_axial(g: &GroupSpec) -> Result<DicosmAxialParams> {
    let s1 = g.motions()[0];
    if s1.linear != half_turn_z() {
        return Err(Error::internal("axial dicosm base twist is not a half-turn about z"));
    }
    let c = s1.shift[2].abs();
    let lat = g.lattice();
    let [u, v] = lat.plane_sublattice(&[0, 0, 1]);
    let (d, e, q) = echelon_2d([u[0], u[1]], [v[0], v[1]]);
    if lat.index() != (2 * c * d * q) as u64 {
        return Err(Error::internal("axial dicosm lattice is not (0,0,2C) ⊕ horizontal"));
    }
    // Axis positions are half the horizontal shifts; residues mod ℤ² lie in {0,½}².
    let a1 = [half(s1.shift[0]), half(s1.shift[1])];
    let residues: Vec<(bool, bool)> = [(0, 0), (1, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(i, j)| {
            (
                frac_half(a1[0] + half(i * d + j * e)),
                frac_half(a1[1] + half(j * q)),
            )
        })
        .collect();
    let has = |r: (bool, bool)| residues.contains(&r);
    // Conjugating by the half shift adds (½,½) to every residue.
    let p1 = if has((false, false)) || has((true, true)) {
        0
    } else if has((true, false)) || has((false, true)) {
        1
    } else {
        unreachable!("residues are always in {{0,1/2}}^2")
    };
    Ok(DicosmAxialParams::new(c, p1, p1 + d, (p1 + e).rem_euclid(d), q))
}

fn canonical_diagonal(g: &GroupSpec) -> Result<DicosmDiagonalParams> {
    let s1 = g.motions()[0];
    if s1.linear != half_turn_diagonal() {
        return Err(Error::internal("diagonal dicosm base twist has the wrong rotation"));
    }
    let t = s1.shift;
    let n = (t[0] - t[1]).abs();
    let lat = g.lattice();
    let [u, v] = lat.plane_sublattice(&[1, -1, 0]);
    // Vectors (x,x,z) in coordinates (x,z).
    let (d, e, q) = echelon_2d([u[0], u[2]], [v[0], v[2]]);
    if lat.index() != (2 * n * d * q) as u64 {
        return Err(Error::internal("diagonal dicosm lattice does not split along the axis"));
    }
    // Axis position in the plane x = y: w = (t₀+t₁)/4 along (1,1,0), z = t₂/2.
    // Integral conjugation changes w by ½ℤ and z by ℤ; the half shift adds ½ to both.
    // w mod ½ is fixed by the parity of N, so the only choice is the z residue,
    // which the half shift can always bring to 0.
    let p1 = if n.is_even() { 0 } else { 1 };
    Ok(DicosmDiagonalParams::new(n, p1, p1 + 2 * d, (p1 + 2 * e).rem_euclid(2 * d), q))
}

fn canonical_tricosm(g: &GroupSpec) -> Result<TricosmParams> {
    let t1 = analyze_twist(&g.generators()[0])?;
    let t2 = analyze_twist(&g.generators()[1])?;
    let m = t1.norm.coefficient() * Rational::from_integer(3);
    if t1.norm.radicand() != 3 || !m.is_integer() {
        return Err(Error::internal("tricosm base twist has a non-√3/3 translation"));
    }
    let w = t2.axis_point - t1.axis_point;
    let a = w.x() - w.y();
    let b = w.x() + w.y() * Rational::from_integer(2);
    if !a.is_integer() || !b.is_integer() {
        return Err(Error::internal("tricosm axis offset is not on the v1,v2 lattice"));
    }
    let (a, b) = (a.to_integer(), b.to_integer());
    let (a, b) = if a == 0 { (b, 0) } else { (a, b) };
    if a < 0 || b < 0 {
        return Err(Error::invalid("a and b must be non-negative"));
    }
    Ok(TricosmParams::new(m.to_integer(), a, b))
}

fn canonical_tetracosm(g: &GroupSpec) -> Result<TetracosmParams> {
    let s1 = g.motions()[0];
    if s1.linear != quarter_turn_z() && s1.linear != quarter_turn_z().inverse() {
        return Err(Error::internal("tetracosm base twist is not a quarter-turn about z"));
    }
    let c = s1.shift[2].abs();
    let [u, v] = g.lattice().plane_sublattice(&[0, 0, 1]);
    let det = (u[0] * v[1] - u[1] * v[0]).abs();
    let r = det.sqrt();
    let lat = g.lattice();
    for x in 0..=r {
        for y in 0..=x {
            if x * x + y * y == det && lat.contains(&[x, y, 0]) && lat.contains(&[-y, x, 0]) {
                return Ok(TetracosmParams::new(c, x, y));
            }
        }
    }
    Err(Error::internal("tetracosm horizontal lattice is not square"))
}

/// Parameters of the dual twistoid, renormalized.
pub fn dual_params(params: &TwistoidParams) -> Result<TwistoidParams> {
    let g = build_group(&validate(params)?)?;
    canonical_params(&dual_group(&g))
}
