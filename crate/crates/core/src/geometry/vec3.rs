use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;
use crate::lattice::IVec3;

/// A point or vector with exact rational coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Vec3(pub [Rational; 3]);

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vec3([x, y, z])
    }

    pub fn zero() -> Self {
        Vec3([Rational::zero(); 3])
    }

    pub fn from_int(v: IVec3) -> Self {
        Vec3(v.map(Rational::from_integer))
    }

    pub fn from_fracs(v: [(i64, i64); 3]) -> Self {
        Vec3(v.map(|(n, d)| Rational::new(n, d)))
    }

    pub fn x(&self) -> Rational {
        self.0[0]
    }

    pub fn y(&self) -> Rational {
        self.0[1]
    }

    pub fn z(&self) -> Rational {
        self.0[2]
    }

    pub fn dot(&self, o: &Vec3) -> Rational {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// The integer vector, when every coordinate is an integer.
    pub fn to_int(&self) -> Option<IVec3> {
        if self.is_integral() {
            Some(self.0.map(|c| c.to_integer()))
        } else {
            None
        }
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> i64 {
        self.0
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, *c.denom()))
    }

    pub fn abs_max(&self) -> Rational {
        self.0.iter().map(|c| c.abs()).max().unwrap()
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3(self.0.map(|c| -c))
    }
}

impl Mul<Rational> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: Rational) -> Vec3 {
        Vec3(self.0.map(|c| c * s))
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}
