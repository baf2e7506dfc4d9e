use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Rational, SignedPerm, Vec3};
use crate::lattice::{add, IVec3};

/// x ↦ linear·x + translation, with a rational translation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Isometry {
    pub linear: SignedPerm,
    pub translation: Vec3,
}

impl Isometry {
    pub fn new(linear: SignedPerm, translation: Vec3) -> Self {
        Isometry { linear, translation }
    }

    pub fn identity() -> Self {
        Isometry::new(SignedPerm::IDENTITY, Vec3::zero())
    }

    pub fn translation(v: Vec3) -> Self {
        Isometry::new(SignedPerm::IDENTITY, v)
    }

    pub fn from_int(linear: SignedPerm, t: IVec3) -> Self {
        Isometry::new(linear, Vec3::from_int(t))
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        self.linear.apply(p) + self.translation
    }

    /// `self ∘ h`: applies `h` first.
    pub fn compose(&self, h: &Isometry) -> Isometry {
        Isometry::new(
            self.linear.mul(&h.linear),
            self.linear.apply(&h.translation) + self.translation,
        )
    }

    pub fn inverse(&self) -> Isometry {
        let inv = self.linear.inverse();
        Isometry::new(inv, -inv.apply(&self.translation))
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugated_by(&self, h: &Isometry) -> Isometry {
        h.compose(self).compose(&h.inverse())
    }

    pub fn pow(&self, k: u32) -> Isometry {
        (0..k).fold(Isometry::identity(), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.linear == SignedPerm::IDENTITY && self.translation.is_zero()
    }

    /// Membership in the symmetry group of the tessellation by unit cubes.
    pub fn preserves_tessellation(&self) -> bool {
        self.translation.is_integral()
    }

    /// The integral form, when this isometry preserves the tessellation.
    pub fn to_motion(&self) -> Option<Motion> {
        self.translation.to_int().map(|t| Motion::new(self.linear, t))
    }
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.linear, self.translation)
    }
}

pub fn compose(g: &Isometry, h: &Isometry) -> Isometry {
    g.compose(h)
}

pub fn inverse(g: &Isometry) -> Isometry {
    g.inverse()
}

pub fn preserves_tessellation(g: &Isometry) -> bool {
    g.preserves_tessellation()
}

/// An isometry with integral translation; the fast path for group and oracle work.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Motion {
    pub linear: SignedPerm,
    pub shift: IVec3,
}

impl Motion {
    pub fn new(linear: SignedPerm, shift: IVec3) -> Self {
        Motion { linear, shift }
    }

    pub fn identity() -> Self {
        Motion::new(SignedPerm::IDENTITY, [0; 3])
    }

    pub fn translation(v: IVec3) -> Self {
        Motion::new(SignedPerm::IDENTITY, v)
    }

    #[inline]
    pub fn apply(&self, v: &IVec3) -> IVec3 {
        add(&self.linear.apply_int(v), &self.shift)
    }

    pub fn apply_rational(&self, p: &Vec3) -> Vec3 {
        self.linear.apply(p) + Vec3::from_int(self.shift)
    }

    #[inline]
    pub fn compose(&self, h: &Motion) -> Motion {
        Motion::new(self.linear.mul(&h.linear), self.apply(&h.shift))
    }

    pub fn inverse(&self) -> Motion {
        let inv = self.linear.inverse();
        Motion::new(inv, inv.apply_int(&self.shift).map(|c| -c))
    }

    pub fn pow(&self, k: u32) -> Motion {
        (0..k).fold(Motion::identity(), |acc, _| acc.compose(self))
    }

    pub fn to_isometry(&self) -> Isometry {
        Isometry::from_int(self.linear, self.shift)
    }
}

impl From<Motion> for Isometry {
    fn from(m: Motion) -> Isometry {
        m.to_isometry()
    }
}

/// Translation by (1/2, 1/2, 1/2), which carries the tessellation to its dual.
pub fn half_shift() -> Isometry {
    let h = Rational::new(1, 2);
    Isometry::translation(Vec3::new(h, h, h))
}
