use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Isometry, QuadMagnitude, Rational, SignedPerm, Vec3};
use crate::error::{Error, Result};
use crate::lattice::IVec3;

/// Screw-motion decomposition of a twist.
///
/// `axis_point` is the foot of the perpendicular from the origin to the axis, and
/// `axis_direction` is the lexicographically larger of the two primitive integer
/// directions. Both are canonical, so axis equality is structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct TwistData {
    pub axis_point: Vec3,
    pub axis_direction: IVec3,
    pub rotation_order: u8,
    pub translational_component: Vec3,
    pub norm: QuadMagnitude,
    /// The rotation part itself; order and axis alone do not fix its sense.
    pub linear: SignedPerm,
}

impl TwistData {
    /// Rotates about the axis, then translates along it.
    pub fn to_isometry(&self) -> Isometry {
        let m = self.linear;
        let offset = self.axis_point - m.apply(&self.axis_point);
        Isometry::new(m, self.translational_component + offset)
    }

    pub fn direction_class(&self) -> DirectionClass {
        match self.axis_direction.iter().filter(|c| **c != 0).count() {
            1 => DirectionClass::Axis,
            2 => DirectionClass::FaceDiagonal,
            _ => DirectionClass::BodyDiagonal,
        }
    }

    pub fn norm_class(&self) -> Option<NormClass> {
        let c = self.norm.coefficient();
        match self.norm.radicand() {
            1 if c.is_integer() => Some(NormClass::Integer),
            2 if c.is_integer() => Some(NormClass::Sqrt2),
            2 if (c * Rational::from_integer(2)).is_integer() => Some(NormClass::HalfSqrt2),
            3 if c.is_integer() => Some(NormClass::Sqrt3),
            3 if (c * Rational::from_integer(3)).is_integer() => Some(NormClass::ThirdSqrt3),
            _ => None,
        }
    }

    /// Which of vertex, edge-midpoint, square-center and cube-center classes the axis meets.
    pub fn centroid_incidence(&self) -> Incidence {
        // Every rotation axis of the point group has a direction entry ±1, so fixing
        // that coordinate at 0 leaves one point q0; the half-integral points on the
        // axis are then q0 + (n/2)·d when q0 itself is half-integral, and none otherwise.
        let d = self.axis_direction;
        let j = (0..3).find(|&j| d[j].abs() == 1).expect("unit entry");
        let p = self.axis_point;
        let s = -p.0[j] / Rational::from_integer(d[j]);
        let dir = Vec3::from_int(d);
        let q0 = p + dir * s;
        let mut inc = Incidence::default();
        let two = Rational::from_integer(2);
        if !(q0 * two).is_integral() {
            return inc;
        }
        for n in 0..2 {
            let q = q0 + dir * Rational::new(n, 2);
            let halves = q.0.iter().filter(|c| !c.is_integer()).count();
            inc.set(halves);
        }
        inc
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: bool,
    pub edge: bool,
    pub square: bool,
    pub cube: bool,
}

impl Incidence {
    fn set(&mut self, half_integral_coords: usize) {
        match half_integral_coords {
            0 => self.vertex = true,
            1 => self.edge = true,
            2 => self.square = true,
            _ => self.cube = true,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum DirectionClass {
    Axis,
    FaceDiagonal,
    BodyDiagonal,
}

impl fmt::Display for DirectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DirectionClass::Axis => "e1",
            DirectionClass::FaceDiagonal => "e1+e2",
            DirectionClass::BodyDiagonal => "e1+e2+e3",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum NormClass {
    Integer,
    Sqrt2,
    /// Odd multiples of √2/2.
    HalfSqrt2,
    Sqrt3,
    /// Multiples of √3/3 that are not multiples of √3.
    ThirdSqrt3,
}

impl fmt::Display for NormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormClass::Integer => "Z",
            NormClass::Sqrt2 => "√2Z",
            NormClass::HalfSqrt2 => "(√2/2)Z∖√2Z",
            NormClass::Sqrt3 => "√3Z",
            NormClass::ThirdSqrt3 => "(√3/3)Z∖√3Z",
        })
    }
}

fn solve3(a: [[Rational; 3]; 3], b: [Rational; 3]) -> Option<[Rational; 3]> {
    let mut m: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            let mut row = a[i].to_vec();
            row.push(b[i]);
            row
        })
        .collect();
    for col in 0..3 {
        let piv = (col..3).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for k in col..4 {
            m[col][k] *= inv;
        }
        for r in 0..3 {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in col..4 {
                    let v = m[col][k];
                    m[r][k] -= f * v;
                }
            }
        }
    }
    Some([m[0][3], m[1][3], m[2][3]])
}

fn primitive(v: IVec3) -> IVec3 {
    let g = v.iter().fold(0i64, |acc, c| acc.gcd(c));
    let p = v.map(|c| c / g);
    let neg = p.map(|c| -c);
    if p > neg {
        p
    } else {
        neg
    }
}

/// Decomposes a twist into axis, rotation order and translational component.
pub fn analyze_twist(g: &Isometry) -> Result<TwistData> {
    let m = g.linear;
    if m.det() != 1 {
        return Err(Error::NotATwist("linear part is not a rotation"));
    }
    let k = m.order();
    if k == 1 {
        return Err(Error::NotATwist("identity or pure translation"));
    }
    // The averaging projector Σ M^j / k maps onto the rotation axis.
    let mut sum = [[0i64; 3]; 3];
    let mut power = SignedPerm::IDENTITY;
    for _ in 0..k {
        let r = power.rows();
        for i in 0..3 {
            for j in 0..3 {
                sum[i][j] += r[i][j];
            }
        }
        power = power.mul(&m);
    }
    let column = (0..3)
        .map(|j| [sum[0][j], sum[1][j], sum[2][j]])
        .find(|c| c.iter().any(|x| *x != 0))
        .expect("a rotation has an axis");
    let d = primitive(column);
    let dir = Vec3::from_int(d);
    let dd = dir.dot(&dir);
    let t = g.translation;
    let t_par = dir * (t.dot(&dir) / dd);
    if t_par.is_zero() {
        return Err(Error::NotATwist("rotation without axial translation"));
    }
    let t_perp = t - t_par;
    let rows = m.rows();
    let mut a = [[Rational::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let id = if i == j { Rational::one() } else { Rational::zero() };
            a[i][j] = id - Rational::from_integer(rows[i][j])
                + Rational::from_integer(d[i] * d[j]) / dd;
        }
    }
    let p = solve3(a, t_perp.0).expect("nonsingular on the axis complement");
    let lambda = t.dot(&dir) / dd;
    let radicand = dd.to_integer() as u8;
    let norm = QuadMagnitude::new(lambda.abs(), radicand).ok_or(Error::Unclassifiable)?;
    Ok(TwistData {
        axis_point: Vec3(p),
        axis_direction: d,
        rotation_order: k,
        translational_component: t_par,
        norm,
        linear: m,
    })
}

/// The eleven conjugacy classes of twists in the symmetry group of the tessellation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum TwistType {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl fmt::Display for TwistType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One row of the conjugacy-class table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwistClassRow {
    pub ty: TwistType,
    pub period: u8,
    pub incidence: Incidence,
    pub direction: DirectionClass,
    pub norm: NormClass,
}

const fn row(
    ty: TwistType,
    period: u8,
    [vertex, edge, square, cube]: [bool; 4],
    direction: DirectionClass,
    norm: NormClass,
) -> TwistClassRow {
    TwistClassRow {
        ty,
        period,
        incidence: Incidence {
            vertex,
            edge,
            square,
            cube,
        },
        direction,
        norm,
    }
}

use DirectionClass::{Axis, BodyDiagonal, FaceDiagonal};
use NormClass::{HalfSqrt2, Sqrt2, Sqrt3, ThirdSqrt3};
const INTEGER: NormClass = NormClass::Integer;

pub const TWIST_CLASSES: [TwistClassRow; 11] = [
    row(TwistType::I, 2, [true, true, false, false], Axis, INTEGER),
    row(TwistType::II, 2, [false, true, true, false], Axis, INTEGER),
    row(TwistType::III, 2, [false, false, true, true], Axis, INTEGER),
    row(TwistType::IV, 2, [true, false, true, false], FaceDiagonal, Sqrt2),
    row(TwistType::V, 2, [false, true, false, false], FaceDiagonal, HalfSqrt2),
    row(TwistType::VI, 2, [false, true, false, true], FaceDiagonal, Sqrt2),
    row(TwistType::VII, 2, [false, false, true, false], FaceDiagonal, HalfSqrt2),
    row(TwistType::VIII, 3, [true, false, false, true], BodyDiagonal, Sqrt3),
    row(TwistType::IX, 3, [false, false, false, false], BodyDiagonal, ThirdSqrt3),
    row(TwistType::X, 4, [true, true, false, false], Axis, INTEGER),
    row(TwistType::XI, 4, [false, false, true, true], Axis, INTEGER),
];

/// The conjugacy-class row of a twist of the tessellation.
pub fn classify_twist_type(t: &TwistData) -> Result<TwistType> {
    let norm = t.norm_class().ok_or(Error::Unclassifiable)?;
    let incidence = t.centroid_incidence();
    let direction = t.direction_class();
    TWIST_CLASSES
        .iter()
        .find(|r| {
            r.period == t.rotation_order
                && r.direction == direction
                && r.norm == norm
                && r.incidence == incidence
        })
        .map(|r| r.ty)
        .ok_or(Error::Unclassifiable)
}

/// A concrete twist of each class, with the simplest axis and shortest translation.
pub fn canonical_representatives() -> [(TwistType, Isometry); 11] {
    let p = |rows| SignedPerm::from_rows(rows).unwrap();
    let half_z = p([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]);
    let half_diag = p([[0, 1, 0], [1, 0, 0], [0, 0, -1]]);
    let cyc = p([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
    let anticyc = cyc.inverse();
    let quarter = p([[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
    let iso = |m, t| Isometry::from_int(m, t);
    [
        (TwistType::I, iso(half_z, [0, 0, 1])),
        (TwistType::II, iso(half_z, [1, 0, 1])),
        (TwistType::III, iso(half_z, [1, 1, 1])),
        (TwistType::IV, iso(half_diag, [1, 1, 0])),
        (TwistType::V, iso(half_diag, [1, 0, 0])),
        (TwistType::VI, iso(half_diag, [1, 1, 1])),
        (TwistType::VII, iso(half_diag, [1, 0, 1])),
        (TwistType::VIII, iso(cyc, [1, 1, 1])),
        (TwistType::IX, iso(anticyc, [1, 0, 0])),
        (TwistType::X, iso(quarter, [0, 0, 1])),
        (TwistType::XI, iso(quarter, [1, 0, 1])),
    ]
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PetrieHandedness {
    VertexAxis,
    RightPetrie,
    LeftPetrie,
}

impl fmt::Display for PetrieHandedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PetrieHandedness::VertexAxis => "vertex-axis",
            PetrieHandedness::RightPetrie => "right",
            PetrieHandedness::LeftPetrie => "left",
        })
    }
}

/// The integer m = √3·c for a 3-fold twist with translational norm c ∈ (√3/3)ℤ.
pub fn petrie_m(t: &TwistData) -> Result<i64> {
    if t.rotation_order != 3 {
        return Err(Error::NotThreeFold(t.rotation_order));
    }
    let m = t.norm.coefficient() * Rational::from_integer(3);
    if !m.is_integer() || t.norm.radicand() != 3 {
        return Err(Error::Unclassifiable);
    }
    Ok(m.to_integer())
}

/// Handedness by the residue of m = √3·c modulo 3.
pub fn petrie_handedness(t: &TwistData) -> Result<PetrieHandedness> {
    Ok(match petrie_m(t)?.rem_euclid(3) {
        0 => PetrieHandedness::VertexAxis,
        1 => PetrieHandedness::RightPetrie,
        _ => PetrieHandedness::LeftPetrie,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Handedness {
    Right,
    Left,
}

/// Geometric sense of a screw of order ≥ 3, named after the Petrie paths.
///
/// The path through (0,0,0), (0,1,0), (1,1,0), (1,1,1), … is advanced by the screw
/// (x,y,z) ↦ (y, z+1, x); screws turning the same way about their translation are
/// `Right`. Half-turns have no sense and give `None`.
pub fn screw_handedness(t: &TwistData) -> Option<Handedness> {
    let m = t.linear.rows();
    let axial = [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]];
    let s = Vec3::from_int(axial).dot(&t.translational_component);
    if s.is_zero() {
        None
    } else if s.is_negative() {
        Some(Handedness::Right)
    } else {
        Some(Handedness::Left)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_representatives_classify_to_their_row() {
        for (ty, g) in canonical_representatives() {
            assert!(g.preserves_tessellation());
            let t = analyze_twist(&g).unwrap();
            assert_eq!(classify_twist_type(&t).unwrap(), ty, "{g}");
            assert_eq!(t.to_isometry(), g);
        }
    }

    #[test]
    fn primitive_direction_is_lexicographically_largest() {
        assert_eq!(primitive([0, 0, -3]), [0, 0, 1]);
        assert_eq!(primitive([-2, 2, 0]), [1, -1, 0]);
    }

    #[test]
    fn petrie_reference_screw_is_right() {
        let g = Isometry::from_int(
            SignedPerm::from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap(),
            [0, 1, 0],
        );
        let t = analyze_twist(&g).unwrap();
        assert_eq!(screw_handedness(&t), Some(Handedness::Right));
        assert_eq!(classify_twist_type(&t).unwrap(), TwistType::IX);
    }
}
